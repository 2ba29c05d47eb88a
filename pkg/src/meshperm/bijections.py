"""
Explicit maps witnessing the catalog's equidistributions, plus a harness
that checks them exhaustively over S_n.

Two kinds of map live here:

* occurrence swappers: involutions f of S_n with
  (occurrences of q1, occurrences of q2) composed with f equal to the
  swapped pair.  These are the global symmetries (complement / reverse)
  and the entry-swapping maps attached to pairs S9, S11, S13, S15, S17.
* the iterated swap attached to pair S21: a bijection from the avoiders of
  q1 onto the avoiders of q2, which proves the two patterns are
  Wilf-equivalent.

Every map is checked by :func:`verify_swap_bijection`; failures are
returned as report data, never hidden.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable

from . import catalog, mesh, perms
from .catalog import PatternPair
from .mesh import MeshPattern
from .perms import Perm


class DomainError(ValueError):
    """An input outside a map's domain."""


class StructureError(AssertionError):
    """A structural claim the map relies on failed; signals a misreading."""


def apply_symmetry_map(pi: Perm, kind: str) -> Perm:
    """The global maps usable when a pair is closed under c or r.

    >>> apply_symmetry_map((2, 1), "complement")
    (1, 2)
    """
    if kind == "complement":
        return perms.complement(pi)
    if kind == "reverse":
        return perms.reverse(pi)
    raise ValueError(f"unknown symmetry kind {kind!r}")


def map_s9(pi: Perm) -> Perm:
    """Exchange the value prefixes 1,2,3 and 3,2,1; identity otherwise.

    >>> map_s9((1, 2, 3, 4, 5))
    (3, 2, 1, 4, 5)
    >>> map_s9((2, 1, 3, 4, 5))
    (2, 1, 3, 4, 5)
    """
    if len(pi) < 3:
        return pi
    if pi[:3] == (1, 2, 3):
        return (3, 2, 1) + pi[3:]
    if pi[:3] == (3, 2, 1):
        return (1, 2, 3) + pi[3:]
    return pi


def map_s11(pi: Perm) -> Perm:
    """Swap the end entries of 1,2,...,n and n,2,...,1; identity otherwise.

    >>> map_s11((1, 2, 3, 4))
    (4, 2, 3, 1)
    """
    n = len(pi)
    if n < 3:
        return pi
    if (pi[0], pi[1], pi[-1]) in ((1, 2, n), (n, 2, 1)):
        return (pi[-1],) + pi[1:-1] + (pi[0],)
    return pi


def map_s13(pi: Perm) -> Perm:
    """Swap the end entries when they are {1, n} in either order.

    Serves both pairs S13 and S15, whose occurrences force the first entry
    to be 1 or n and the last to be the other.

    >>> map_s13((1, 3, 2, 4))
    (4, 3, 2, 1)
    >>> map_s13((2, 1, 3, 4))
    (2, 1, 3, 4)
    """
    n = len(pi)
    if n < 2:
        return pi
    if (pi[0], pi[-1]) in ((1, n), (n, 1)):
        return (pi[-1],) + pi[1:-1] + (pi[0],)
    return pi


def map_s17(pi: Perm, q1: MeshPattern, q2: MeshPattern) -> Perm:
    """Swap position 1 with the common third position of all occurrences.

    Every occurrence of either S17 pattern starts at position 1, and all
    occurrences inside one permutation share a single third position t; the
    map swaps the entries at positions 1 and t.  If the occurrences do not
    share a third position the structural claim is wrong and a
    :class:`StructureError` is raised rather than guessing.
    """
    for pat in (q1, q2):
        occ = list(mesh.occurrences(pi, pat))
        if not occ:
            continue
        firsts = {o[0] for o in occ}
        thirds = {o[2] for o in occ}
        if firsts != {1} or len(thirds) != 1:
            raise StructureError(
                f"occurrences of {mesh.format_pattern(pat)} in "
                f"{perms.format_perm(pi)} do not share first position 1 and a "
                f"common third position: {occ}"
            )
        t = thirds.pop()
        out = list(pi)
        out[0], out[t - 1] = out[t - 1], out[0]
        return tuple(out)
    return pi


def iterated_swap(
    pi: Perm, q1: MeshPattern, q2: MeshPattern
) -> tuple[Perm, int]:
    """Repeatedly swap the ends of the lexicographically first occurrence
    of q2 until none remains; returns (result, number of swaps).

    Defined on avoiders of q1.  "Lexicographically first" means least
    position triple (i1, i2, i3).  A guard of C(n, 3) + 1 steps converts
    any non-termination into a loud failure instead of a hang.
    """
    if next(mesh.occurrences(pi, q1), None) is not None:
        raise DomainError(
            f"{perms.format_perm(pi)} contains {mesh.format_pattern(q1)}; "
            "the iterated swap is defined on its avoiders"
        )
    limit = comb(len(pi), 3) + 1
    cur = list(pi)
    steps = 0
    while True:
        occ = next(mesh.occurrences(tuple(cur), q2), None)
        if occ is None:
            return tuple(cur), steps
        steps += 1
        if steps > limit:
            raise RuntimeError(
                f"iterated swap exceeded {limit} steps on {perms.format_perm(pi)}"
            )
        i1, _, i3 = occ
        cur[i1 - 1], cur[i3 - 1] = cur[i3 - 1], cur[i1 - 1]


def map_s21(pi: Perm, q1: MeshPattern, q2: MeshPattern) -> Perm:
    """The Wilf bijection for pair S21: avoiders of q1 onto avoiders of q2.

    >>> pair = catalog.get_pair("S21")
    >>> map_s21((3, 2, 1), pair.q1, pair.q2)
    (1, 2, 3)
    """
    return iterated_swap(pi, q1, q2)[0]


@dataclass(frozen=True)
class BijectionSpec:
    """A named map, its mechanism, and the catalog pair it serves."""

    id: str
    kind: str
    pair_id: str


# Maps with a dedicated pair.  S10/S12/S14/S16/S18 have no direct map: they
# are handled through the derivation chains and table equality instead.
DIRECT_MAPS: dict[str, BijectionSpec] = {
    "S9": BijectionSpec("S9", "swap_prefix", "S9"),
    "S11": BijectionSpec("S11", "swap_ends", "S11"),
    "S13": BijectionSpec("S13", "swap_ends", "S13"),
    "S15": BijectionSpec("S15", "swap_ends", "S15"),
    "S17": BijectionSpec("S17", "swap_first_with_t", "S17"),
    "S21": BijectionSpec("S21", "iterated_swap", "S21"),
}

# Pairs proved by a single global symmetry of the square.
for _pid, _op in catalog.INTERNAL_SYMMETRY.items():
    DIRECT_MAPS[_pid] = BijectionSpec(
        _pid, "complement" if _op == "c" else "reverse", _pid
    )


def resolve_map(
    map_id: str, pair: PatternPair | None = None
) -> tuple[BijectionSpec, Callable[[Perm], Perm], PatternPair]:
    """Look up a map by id ('S9', ..., 'complement', 'reverse')."""
    map_id = map_id.upper() if map_id.upper() in DIRECT_MAPS else map_id.lower()
    if map_id in ("complement", "reverse"):
        if pair is None:
            raise ValueError(f"map {map_id!r} needs an explicit pair")
        spec = BijectionSpec(map_id, map_id, pair.id)
        return spec, lambda pi: apply_symmetry_map(pi, map_id), pair
    if map_id not in DIRECT_MAPS:
        raise KeyError(f"unknown map {map_id!r}")
    spec = DIRECT_MAPS[map_id]
    if pair is None:
        pair = catalog.get_pair(spec.pair_id)
    q1, q2 = pair.q1, pair.q2
    fn: Callable[[Perm], Perm]
    if spec.kind == "swap_prefix":
        fn = map_s9
    elif spec.kind == "swap_ends":
        fn = map_s11 if spec.id == "S11" else map_s13
    elif spec.kind == "swap_first_with_t":
        fn = lambda pi: map_s17(pi, q1, q2)
    elif spec.kind == "iterated_swap":
        fn = lambda pi: map_s21(pi, q1, q2)
    else:
        fn = lambda pi: apply_symmetry_map(pi, spec.kind)
    return spec, fn, pair


@dataclass(frozen=True)
class BijectionReport:
    map: str
    pair: str
    n: int
    passed: bool
    counterexample: str | None
    stats: dict

    def to_json(self) -> str:
        obj = {
            "map": self.map,
            "pair": self.pair,
            "n": self.n,
            "pass": self.passed,
            "counterexample": self.counterexample,
            "stats": self.stats,
        }
        return json.dumps(obj, sort_keys=True)


def _verify_swapper(
    fn: Callable[[Perm], Perm], n: int, q1: MeshPattern, q2: MeshPattern
) -> tuple[bool, str | None, dict]:
    fixed = 0
    for pi in perms.enumerate_sn(n):
        sigma = fn(pi)
        if fn(sigma) != pi:
            return False, f"not an involution at {perms.format_perm(pi)}", {}
        k, l = mesh.joint_counts(pi, q1, q2)
        k2, l2 = mesh.joint_counts(sigma, q1, q2)
        if (k2, l2) != (l, k):
            return (
                False,
                f"{perms.format_perm(pi)} has counts ({k},{l}) but its image "
                f"{perms.format_perm(sigma)} has ({k2},{l2})",
                {},
            )
        if sigma == pi:
            fixed += 1
    size = factorial(n)
    return True, None, {"fixed_points": fixed, "moved": size - fixed, "size": size}


def _verify_wilf(
    n: int, q1: MeshPattern, q2: MeshPattern
) -> tuple[bool, str | None, dict]:
    domain = []
    images = []
    max_steps = 0
    for pi in perms.enumerate_sn(n):
        if next(mesh.occurrences(pi, q1), None) is not None:
            continue
        domain.append(pi)
        sigma, steps = iterated_swap(pi, q1, q2)
        max_steps = max(max_steps, steps)
        if steps > comb(n, 3):
            return False, f"{perms.format_perm(pi)} needed {steps} swaps", {}
        if next(mesh.occurrences(sigma, q2), None) is not None:
            return (
                False,
                f"image {perms.format_perm(sigma)} of {perms.format_perm(pi)} "
                "still contains the second pattern",
                {},
            )
        images.append(sigma)
    q2_avoiders = sum(
        1
        for pi in perms.enumerate_sn(n)
        if next(mesh.occurrences(pi, q2), None) is None
    )
    stats = {
        "domain_size": len(domain),
        "image_size": len(set(images)),
        "q2_avoiders": q2_avoiders,
        "max_swaps": max_steps,
    }
    if len(set(images)) != len(domain):
        return False, "map is not injective", stats
    if q2_avoiders != len(domain):
        return False, "avoider counts differ", stats
    return True, None, stats


def verify_swap_bijection(
    map_id: str, n: int, pair: PatternPair | None = None
) -> BijectionReport:
    """Exhaustively check a map over S_n; failures become report data.

    For occurrence swappers: the map must be an involution and must swap
    the joint counts of the pair.  For the iterated swap: it must biject
    the avoiders of q1 onto the avoiders of q2 within C(n, 3) swaps.
    """
    perms.check_capacity(n)
    spec, fn, pair = resolve_map(map_id, pair)
    if spec.kind == "iterated_swap":
        ok, bad, stats = _verify_wilf(n, pair.q1, pair.q2)
    else:
        ok, bad, stats = _verify_swapper(fn, n, pair.q1, pair.q2)
    return BijectionReport(
        map=spec.id, pair=pair.id, n=n, passed=ok, counterexample=bad, stats=stats
    )
