"""
Mesh patterns and their occurrence semantics.

A mesh pattern of length m is a classical pattern tau (a permutation of
1..m) together with a set of shaded boxes in the (m+1) x (m+1) grid drawn
around tau's plot; box (i, j) has its lower-left corner at grid point
(i, j), so 0 <= i, j <= m.

A subsequence of a permutation at positions p_1 < ... < p_m is an
occurrence of (tau, R) when it is order-isomorphic to tau and, for every
shaded box (a, b), no other entry of the permutation lies strictly between
the chosen positions p_a, p_{a+1} and strictly between the chosen values
q_b, q_{b+1} (values sorted ascending, with sentinels p_0 = q_0 = 0 and
p_{m+1} = q_{m+1} = n+1).  The chosen entries themselves never block a box:
every open position interval between consecutive chosen positions is free
of chosen entries by construction.

Pattern text form (used by the catalog file and the CLI):
``<tau>|<i1,j1;i2,j2;...>`` with boxes semicolon-separated, e.g.
``123|0,0;1,2;2,1;3,1``; an empty shading is written ``123|``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import perms
from .perms import Perm

Box = tuple[int, int]


@dataclass(frozen=True)
class MeshPattern:
    """A classical pattern plus a shading; immutable and hashable."""

    tau: Perm
    shading: frozenset[Box]

    def __post_init__(self) -> None:
        perms.as_perm(self.tau)
        m = len(self.tau)
        if m < 1:
            raise ValueError("patterns must have length at least 1")
        for i, j in self.shading:
            if not (0 <= i <= m and 0 <= j <= m):
                raise ValueError(f"box {(i, j)} outside the grid of side {m}")

    @property
    def length(self) -> int:
        return len(self.tau)

    def __str__(self) -> str:
        return format_pattern(self)


def pattern(tau: Sequence[int], boxes: Sequence[Box] | frozenset[Box]) -> MeshPattern:
    """Convenience constructor; deduplicates boxes.

    >>> str(pattern((1, 2, 3), [(0, 0), (1, 2), (2, 1), (3, 1)]))
    '123|0,0;1,2;2,1;3,1'
    """
    return MeshPattern(tuple(tau), frozenset(boxes))


def format_pattern(pat: MeshPattern) -> str:
    """Canonical text form; boxes sorted lexicographically."""
    boxes = ";".join(f"{i},{j}" for i, j in sorted(pat.shading))
    return f"{perms.format_perm(pat.tau)}|{boxes}"


def parse_pattern(text: str) -> MeshPattern:
    """Parse the ``<tau>|<boxes>`` form. Duplicate boxes are deduplicated.

    >>> parse_pattern("123|0,0;1,2;2,1;3,1").shading == frozenset(
    ...     {(0, 0), (1, 2), (2, 1), (3, 1)})
    True
    >>> parse_pattern("123|").shading
    frozenset()
    """
    text = text.strip()
    if "|" not in text:
        raise ValueError(f"pattern text needs a '|' separator: {text!r}")
    tau_part, _, box_part = text.partition("|")
    tau = perms.parse_perm(tau_part)
    boxes = set()
    if box_part:
        for tok in box_part.split(";"):
            tok = tok.strip()
            if not tok:
                continue
            try:
                i_str, j_str = tok.split(",")
                boxes.add((int(i_str), int(j_str)))
            except ValueError as exc:
                raise ValueError(f"bad box {tok!r} in pattern {text!r}") from exc
    return MeshPattern(tau, frozenset(boxes))


class DominanceTable:
    """Prefix counts of a permutation, for O(1) rectangle-emptiness tests.

    ``count(p_lo, p_hi, v_lo, v_hi)`` is the number of entries with position
    strictly between p_lo and p_hi and value strictly between v_lo and v_hi.
    This is the optional fast path; the naive per-box scan in
    :func:`is_occurrence` is the reference, and the two are tested to agree.
    """

    __slots__ = ("n", "_prefix")

    def __init__(self, perm: Perm):
        n = len(perm)
        self.n = n
        # _prefix[p][v] = #{positions <= p with value <= v}, 0-padded borders.
        rows = [[0] * (n + 1)]
        for pos in range(1, n + 1):
            prev = rows[pos - 1]
            row = list(prev)
            for v in range(perm[pos - 1], n + 1):
                row[v] += 1
            rows.append(row)
        self._prefix = rows

    def count(self, p_lo: int, p_hi: int, v_lo: int, v_hi: int) -> int:
        if p_hi - p_lo < 2 or v_hi - v_lo < 2:
            return 0
        pre = self._prefix
        return (
            pre[p_hi - 1][v_hi - 1]
            - pre[p_lo][v_hi - 1]
            - pre[p_hi - 1][v_lo]
            + pre[p_lo][v_lo]
        )


def _check_positions(n: int, positions: Sequence[int], m: int) -> tuple[int, ...]:
    pos = tuple(positions)
    if len(pos) != m:
        raise ValueError(f"expected {m} positions, got {len(pos)}")
    if any(not 1 <= p <= n for p in pos):
        raise ValueError(f"positions out of range 1..{n}: {pos}")
    if any(a >= b for a, b in zip(pos, pos[1:])):
        raise ValueError(f"positions must be strictly increasing: {pos}")
    return pos


def is_occurrence(
    pi: Perm,
    positions: Sequence[int],
    pat: MeshPattern,
    table: DominanceTable | None = None,
) -> bool:
    """Whether the subsequence of ``pi`` at ``positions`` realizes ``pat``.

    With ``table=None`` every shaded box is checked by a direct scan over
    the permutation (the reference semantics); passing a
    :class:`DominanceTable` built from ``pi`` switches to O(1) box tests.

    >>> p = parse_pattern("123|0,0;1,2;2,1;3,1")
    >>> is_occurrence(perms.parse_perm("23154"), (1, 2, 4), p)
    True
    >>> is_occurrence(perms.parse_perm("14325"), (1, 2, 5), p)
    False
    """
    n = len(pi)
    m = pat.length
    pos = _check_positions(n, positions, m)
    chosen = [pi[p - 1] for p in pos]
    if perms.standardize(chosen) != pat.tau:
        return False
    if not pat.shading:
        return True
    pgrid = (0, *pos, n + 1)
    vgrid = (0, *sorted(chosen), n + 1)
    if table is not None:
        return all(
            table.count(pgrid[a], pgrid[a + 1], vgrid[b], vgrid[b + 1]) == 0
            for a, b in pat.shading
        )
    chosen_set = set(pos)
    for a, b in pat.shading:
        p_lo, p_hi = pgrid[a], pgrid[a + 1]
        v_lo, v_hi = vgrid[b], vgrid[b + 1]
        for p in range(p_lo + 1, p_hi):
            if p not in chosen_set and v_lo < pi[p - 1] < v_hi:
                return False
    return True


def occurrences(
    pi: Perm, pat: MeshPattern, table: DominanceTable | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield the position tuples of all occurrences, in lexicographic order."""
    perms.as_perm(pi)
    n = len(pi)
    m = pat.length
    if m > n:
        return
    if table is None:
        table = DominanceTable(pi)
    for pos in itertools.combinations(range(1, n + 1), m):
        if is_occurrence(pi, pos, pat, table):
            yield pos


def count_occurrences(
    pi: Perm, pat: MeshPattern, table: DominanceTable | None = None
) -> int:
    """Exact number of occurrences of ``pat`` in ``pi``.

    >>> p = parse_pattern("123|0,0;1,2;2,1;3,1")
    >>> count_occurrences(perms.parse_perm("23154"), p)
    2
    >>> count_occurrences(perms.parse_perm("14325"), p)
    0
    >>> count_occurrences(perms.parse_perm("14325"), parse_pattern("123|"))
    3
    """
    return sum(1 for _ in occurrences(pi, pat, table))


def joint_counts(
    pi: Perm, q1: MeshPattern, q2: MeshPattern, table: DominanceTable | None = None
) -> tuple[int, int]:
    """Occurrence counts of both patterns of a pair, sharing one table."""
    if table is None:
        table = DominanceTable(pi)
    return count_occurrences(pi, q1, table), count_occurrences(pi, q2, table)


def complement_pattern(pat: MeshPattern) -> MeshPattern:
    """Complement tau and flip the shading vertically: (x, y) -> (x, m-y).

    >>> str(complement_pattern(parse_pattern("123|0,0;1,2;2,1;3,1")))
    '321|0,3;1,1;2,2;3,2'
    """
    m = pat.length
    return MeshPattern(
        perms.complement(pat.tau), frozenset((x, m - y) for x, y in pat.shading)
    )


def reverse_pattern(pat: MeshPattern) -> MeshPattern:
    """Reverse tau and flip the shading horizontally: (x, y) -> (m-x, y).

    >>> str(reverse_pattern(parse_pattern("321|0,3;1,1;2,2;3,2")))
    '123|0,2;1,2;2,1;3,3'
    """
    m = pat.length
    return MeshPattern(
        perms.reverse(pat.tau), frozenset((m - x, y) for x, y in pat.shading)
    )


def inverse_pattern(pat: MeshPattern) -> MeshPattern:
    """Invert tau and transpose the shading: (x, y) -> (y, x).

    >>> str(inverse_pattern(parse_pattern("123|0,2;1,2;2,1;3,3")))
    '123|1,2;2,0;2,1;3,3'
    """
    return MeshPattern(
        perms.inverse(pat.tau), frozenset((y, x) for x, y in pat.shading)
    )


PATTERN_OPS = {
    "c": complement_pattern,
    "r": reverse_pattern,
    "i": inverse_pattern,
}


def apply_pattern_ops(pat: MeshPattern, ops: str) -> MeshPattern:
    """Apply a word in the operators c, r, i left to right, e.g. ``"cr"``."""
    for op in ops:
        pat = PATTERN_OPS[op](pat)
    return pat


@dataclass(frozen=True)
class ShadingClass:
    symmetric: bool
    minus_antipodal: bool


def classify_shading(pat: MeshPattern) -> ShadingClass:
    """Classify the shading geometry.

    symmetric: closed under the transposition (i, j) -> (j, i).
    minus_antipodal: for every off-diagonal pair {(i, j), (j, i)} exactly one
    box is shaded; diagonal boxes are unconstrained.

    >>> classify_shading(parse_pattern("123|"))
    ShadingClass(symmetric=True, minus_antipodal=False)
    """
    m = pat.length
    shading = pat.shading
    symmetric = all((j, i) in shading for i, j in shading)
    minus_antipodal = all(
        ((i, j) in shading) != ((j, i) in shading)
        for i in range(m + 1)
        for j in range(i + 1, m + 1)
    )
    return ShadingClass(symmetric=symmetric, minus_antipodal=minus_antipodal)
