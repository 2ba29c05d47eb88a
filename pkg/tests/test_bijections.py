import pytest

from meshperm import bijections as bj, catalog, mesh, perms


def test_apply_symmetry_map():
    assert bj.apply_symmetry_map((2, 1), "complement") == (1, 2)
    assert bj.apply_symmetry_map((1, 3, 2), "reverse") == (2, 3, 1)
    with pytest.raises(ValueError):
        bj.apply_symmetry_map((1,), "rotate")


def test_map_s9_rules():
    assert bj.map_s9(perms.parse_perm("12345")) == perms.parse_perm("32145")
    assert bj.map_s9(perms.parse_perm("32145")) == perms.parse_perm("12345")
    assert bj.map_s9(perms.parse_perm("21345")) == perms.parse_perm("21345")
    assert bj.map_s9((2, 1)) == (2, 1)


def test_map_s11_rules():
    assert bj.map_s11(perms.parse_perm("1234")) == perms.parse_perm("4231")
    assert bj.map_s11(perms.parse_perm("4231")) == perms.parse_perm("1234")
    assert bj.map_s11(perms.parse_perm("2134")) == perms.parse_perm("2134")


def test_map_s13_rules():
    assert bj.map_s13(perms.parse_perm("1324")) == perms.parse_perm("4321")
    assert bj.map_s13(perms.parse_perm("4321")) == perms.parse_perm("1324")
    assert bj.map_s13(perms.parse_perm("2134")) == perms.parse_perm("2134")


@pytest.mark.parametrize("map_id", ["S9", "S11", "S13", "S15", "S17"])
def test_swap_maps_pass_harness(map_id):
    for n in range(1, 6):
        report = bj.verify_swap_bijection(map_id, n)
        assert report.passed, (map_id, n, report.counterexample)


def test_s17_common_third_position_structure():
    pair = catalog.get_pair("S17")
    for n in range(3, 6):
        for pi in perms.enumerate_sn(n):
            for pat in (pair.q1, pair.q2):
                occ = list(mesh.occurrences(pi, pat))
                if occ:
                    assert {o[0] for o in occ} == {1}
                    assert len({o[2] for o in occ}) == 1


def test_s17_identity_on_double_avoiders():
    pair = catalog.get_pair("S17")
    for pi in perms.enumerate_sn(4):
        if mesh.count_occurrences(pi, pair.q1) == 0 and mesh.count_occurrences(pi, pair.q2) == 0:
            assert bj.map_s17(pi, pair.q1, pair.q2) == pi


def test_global_symmetry_maps_pass_harness():
    assert bj.verify_swap_bijection("complement", 5, catalog.get_pair("S1")).passed
    assert bj.verify_swap_bijection("complement", 4, catalog.get_pair("S4")).passed
    assert bj.verify_swap_bijection("reverse", 5, catalog.get_pair("A3")).passed
    assert bj.verify_swap_bijection("A1", 5).passed


def test_map_s21_examples():
    pair = catalog.get_pair("S21")
    assert bj.map_s21((3, 2, 1), pair.q1, pair.q2) == (1, 2, 3)
    # fixed on permutations avoiding both patterns
    for pi in perms.enumerate_sn(4):
        q1_free = mesh.count_occurrences(pi, pair.q1) == 0
        q2_free = mesh.count_occurrences(pi, pair.q2) == 0
        if q1_free and q2_free:
            assert bj.map_s21(pi, pair.q1, pair.q2) == pi


def test_map_s21_domain_error():
    pair = catalog.get_pair("S21")
    with pytest.raises(bj.DomainError):
        bj.map_s21((1, 2, 3), pair.q1, pair.q2)


def test_map_s21_image_avoids_q2_and_terminates():
    pair = catalog.get_pair("S21")
    from math import comb

    for n in range(1, 6):
        for pi in perms.enumerate_sn(n):
            if mesh.count_occurrences(pi, pair.q1):
                continue
            sigma, steps = bj.iterated_swap(pi, pair.q1, pair.q2)
            assert steps <= comb(n, 3)
            assert mesh.count_occurrences(sigma, pair.q2) == 0


def test_s21_harness_reports_noninjectivity_honestly():
    # the literal iterated swap is not injective: 3241 and 4213 collide on
    # 1243, so the harness must fail with that diagnosis while still seeing
    # equal avoider counts on both sides.
    pair = catalog.get_pair("S21")
    a = bj.map_s21(perms.parse_perm("3241"), pair.q1, pair.q2)
    b = bj.map_s21(perms.parse_perm("4213"), pair.q1, pair.q2)
    assert a == b == perms.parse_perm("1243")
    report = bj.verify_swap_bijection("S21", 4)
    assert not report.passed
    assert report.counterexample == "map is not injective"
    assert report.stats["domain_size"] == report.stats["q2_avoiders"] == 19
    assert report.stats["image_size"] == 18


def test_wilf_equivalence_by_direct_count():
    from meshperm import dist

    s21, s22 = catalog.get_pair("S21"), catalog.get_pair("S22")
    for n in range(1, 7):
        counts = {
            dist.avoider_count(n, q)
            for q in (s21.q1, s21.q2, s22.q1, s22.q2)
        }
        assert len(counts) == 1


def test_report_json_shape():
    report = bj.verify_swap_bijection("S9", 4)
    import json

    obj = json.loads(report.to_json())
    assert obj["map"] == "S9" and obj["pair"] == "S9" and obj["n"] == 4
    assert obj["pass"] is True and obj["counterexample"] is None
    assert "stats" in obj


def test_resolve_map_errors():
    with pytest.raises(KeyError):
        bj.resolve_map("S10")
    with pytest.raises(ValueError):
        bj.resolve_map("complement")
