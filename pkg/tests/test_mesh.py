import itertools
import random

import pytest

from meshperm import catalog, mesh, perms
from meshperm.mesh import (
    DominanceTable,
    MeshPattern,
    classify_shading,
    complement_pattern,
    count_occurrences,
    format_pattern,
    inverse_pattern,
    is_occurrence,
    joint_counts,
    parse_pattern,
    reverse_pattern,
)

WORKED = parse_pattern("123|0,0;1,2;2,1;3,1")


def test_worked_example_occurrences():
    pi = perms.parse_perm("23154")
    assert is_occurrence(pi, (1, 2, 4), WORKED)
    assert is_occurrence(pi, (1, 2, 5), WORKED)
    assert count_occurrences(pi, WORKED) == 2


def test_worked_example_avoider():
    pi = perms.parse_perm("14325")
    assert not is_occurrence(pi, (1, 2, 5), WORKED)
    assert count_occurrences(pi, WORKED) == 0
    assert count_occurrences(pi, parse_pattern("123|")) == 3


def test_circled_triples_standardize_but_fail_shading():
    pi = perms.parse_perm("14325")
    classical = parse_pattern("123|")
    for pos in ((1, 2, 5), (1, 3, 5), (1, 4, 5)):
        assert is_occurrence(pi, pos, classical)
        assert not is_occurrence(pi, pos, WORKED)


def test_empty_shading_reduces_to_classical():
    pi = perms.parse_perm("25314")
    classical = parse_pattern("123|")
    triples = [
        pos
        for pos in itertools.combinations(range(1, 6), 3)
        if perms.standardize(tuple(pi[p - 1] for p in pos)) == (1, 2, 3)
    ]
    assert count_occurrences(pi, classical) == len(triples)


def test_positions_validation():
    pi = perms.parse_perm("23154")
    with pytest.raises(ValueError):
        is_occurrence(pi, (2, 1, 4), WORKED)
    with pytest.raises(ValueError):
        is_occurrence(pi, (1, 2, 6), WORKED)
    with pytest.raises(ValueError):
        is_occurrence(pi, (1, 2), WORKED)


def test_count_shorter_than_pattern_is_zero():
    assert count_occurrences(perms.parse_perm("12"), WORKED) == 0


def test_joint_counts_examples():
    s19 = catalog.get_pair("S19")
    assert joint_counts(perms.parse_perm("321"), s19.q1, s19.q2) == (0, 1)
    assert joint_counts(perms.parse_perm("123"), s19.q1, s19.q2) == (1, 0)
    assert joint_counts(perms.parse_perm("12"), s19.q1, s19.q2) == (0, 0)


def test_pattern_text_round_trip():
    for text in ("123|0,0;1,2;2,1;3,1", "123|", "12|0,0;1,0;2,0;2,1", "1|0,0;1,1"):
        assert format_pattern(parse_pattern(text)) == text
    # unsorted and duplicated boxes normalize
    assert format_pattern(parse_pattern("123|3,1;0,0;1,2;2,1;3,1")) == (
        "123|0,0;1,2;2,1;3,1"
    )


def test_pattern_validation():
    with pytest.raises(ValueError):
        parse_pattern("123;0,0")
    with pytest.raises(ValueError):
        parse_pattern("123|4,0")
    with pytest.raises(ValueError):
        MeshPattern((), frozenset())


def test_symmetry_op_worked_chain():
    p0 = WORKED
    p1 = complement_pattern(p0)
    assert p1 == parse_pattern("321|0,3;1,1;2,2;3,2")
    p2 = reverse_pattern(p1)
    assert p2 == parse_pattern("123|0,2;1,2;2,1;3,3")
    p3 = inverse_pattern(p2)
    assert p3 == parse_pattern("123|2,0;2,1;1,2;3,3")


@pytest.mark.parametrize("op", [complement_pattern, reverse_pattern, inverse_pattern])
def test_pattern_ops_are_involutions(op):
    for pair in catalog.builtin_catalog()[::5]:
        for pat in (pair.q1, pair.q2):
            assert op(op(pat)) == pat


def test_classify_shading():
    s19 = catalog.get_pair("S19")
    assert classify_shading(s19.q1).symmetric
    a17 = catalog.get_pair("A17")
    cls = classify_shading(a17.q1)
    assert cls.minus_antipodal
    empty = classify_shading(parse_pattern("123|"))
    assert empty.symmetric and not empty.minus_antipodal


def test_dominance_table_counts():
    pi = perms.parse_perm("23154")
    table = DominanceTable(pi)
    # whole square
    assert table.count(0, 6, 0, 6) == 5
    # strictly inside: positions 2..4, values 2..4 -> only the entry 3
    assert table.count(1, 5, 1, 5) == 1
    assert table.count(2, 3, 0, 6) == 0


def test_naive_and_table_paths_agree():
    rng = random.Random(2318)
    cat = catalog.builtin_catalog()
    for _ in range(300):
        n = rng.randint(1, 6)
        pi = tuple(rng.sample(range(1, n + 1), n))
        pat = rng.choice(cat).q1 if rng.random() < 0.5 else rng.choice(cat).q2
        table = DominanceTable(pi)
        for pos in itertools.combinations(range(1, n + 1), min(3, n)):
            if len(pos) != pat.length:
                continue
            assert is_occurrence(pi, pos, pat) == is_occurrence(pi, pos, pat, table)


def test_shading_monotonicity():
    rng = random.Random(97)
    for _ in range(200):
        n = rng.randint(3, 6)
        pi = tuple(rng.sample(range(1, n + 1), n))
        boxes = {
            (rng.randint(0, 3), rng.randint(0, 3)) for _ in range(rng.randint(0, 6))
        }
        base = MeshPattern((1, 2, 3), frozenset(boxes))
        extra = (rng.randint(0, 3), rng.randint(0, 3))
        bigger = MeshPattern((1, 2, 3), frozenset(boxes | {extra}))
        assert count_occurrences(pi, bigger) <= count_occurrences(pi, base)


def test_equivariance_sample():
    rng = random.Random(5)
    cat = catalog.builtin_catalog()
    for _ in range(300):
        n = rng.randint(1, 6)
        pi = tuple(rng.sample(range(1, n + 1), n))
        q = rng.choice(cat).q1
        base = count_occurrences(pi, q)
        assert count_occurrences(perms.complement(pi), complement_pattern(q)) == base
        assert count_occurrences(perms.reverse(pi), reverse_pattern(q)) == base
        assert count_occurrences(perms.inverse(pi), inverse_pattern(q)) == base


def test_length_one_and_two_patterns():
    # single point with boxes below-left and above-right: nothing smaller
    # before it, nothing larger after it
    lone = parse_pattern("1|0,0;1,1")
    assert count_occurrences((1, 2), lone) == 0
    assert count_occurrences((2, 1), lone) == 2
    rise = parse_pattern("12|0,0;1,0;2,0;2,1")
    assert count_occurrences((1, 2), rise) == 1
    assert count_occurrences((2, 1), rise) == 0
    with pytest.raises(ValueError):
        count_occurrences((2, 3), lone)
