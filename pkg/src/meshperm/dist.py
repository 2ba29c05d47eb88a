"""
Joint occurrence-count distributions over S_n.

The central object is the :class:`JointTable`: an exact-integer matrix
whose (k, l) entry counts the n-permutations with exactly k occurrences of
a first pattern and l occurrences of a second.  Every table over S_n sums
to n!.  Tables convert to bivariate polynomials (:class:`BivarPoly`) whose
coefficient of x^k y^l is the (k, l) entry.

Enumeration can be partitioned by the first entry of the permutation and
the partial tables combined with :func:`merge`, which is a commutative
monoid, so results are deterministic regardless of schedule.
"""

from __future__ import annotations

import csv
import functools
import io
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from . import mesh, perms
from .mesh import DominanceTable, MeshPattern
from .perms import Perm

Pair = tuple[MeshPattern, MeshPattern]


def _trimmed(counts: dict[tuple[int, int], int]) -> tuple[tuple[int, ...], ...]:
    """Dense row-major matrix from a sparse (k, l) -> count dict."""
    if not counts:
        return ((0,),)
    kmax = max(k for k, _ in counts)
    lmax = max(l for _, l in counts)
    return tuple(
        tuple(counts.get((k, l), 0) for l in range(lmax + 1)) for k in range(kmax + 1)
    )


@dataclass(frozen=True)
class JointTable:
    """Counts of S_n by the occurrence pair (k, l); exact integers.

    The matrix is trimmed: its dimensions are (K+1) x (L+1) for the largest
    observed counts K and L (at least 1 x 1).
    """

    n: int
    counts: tuple[tuple[int, ...], ...]

    @classmethod
    def from_dict(cls, n: int, counts: dict[tuple[int, int], int]) -> "JointTable":
        return cls(n, _trimmed(counts))

    def entry(self, k: int, l: int) -> int:
        if 0 <= k < len(self.counts) and 0 <= l < len(self.counts[k]):
            return self.counts[k][l]
        return 0

    def total(self) -> int:
        return sum(map(sum, self.counts))

    def cells(self) -> Iterable[tuple[int, int, int]]:
        """Yield (k, l, count) for nonzero entries, sorted by (k, l)."""
        for k, row in enumerate(self.counts):
            for l, c in enumerate(row):
                if c:
                    yield k, l, c


def merge(t1: JointTable, t2: JointTable) -> JointTable:
    """Elementwise sum of two partial tables over the same n.

    >>> a = JointTable.from_dict(3, {(0, 0): 2, (1, 0): 1})
    >>> merge(a, JointTable.from_dict(3, {(0, 1): 3})).counts
    ((2, 3), (1, 0))
    """
    if t1.n != t2.n:
        raise ValueError(f"cannot merge tables for n={t1.n} and n={t2.n}")
    acc: dict[tuple[int, int], int] = {}
    for t in (t1, t2):
        for k, l, c in t.cells():
            acc[(k, l)] = acc.get((k, l), 0) + c
    return JointTable.from_dict(t1.n, acc)


def is_jointly_symmetric(t: JointTable) -> bool:
    """True when the table equals its transpose (missing entries read 0)."""
    dim = max(len(t.counts), max(len(row) for row in t.counts))
    return all(
        t.entry(k, l) == t.entry(l, k) for k in range(dim) for l in range(dim)
    )


def marginal(t: JointTable, axis: str = "first") -> list[int]:
    """Row sums (axis="first", over l) or column sums (axis="second")."""
    if axis == "first":
        return [sum(row) for row in t.counts]
    if axis == "second":
        width = max(len(row) for row in t.counts)
        return [sum(row[l] if l < len(row) else 0 for row in t.counts) for l in range(width)]
    raise ValueError(f"axis must be 'first' or 'second', got {axis!r}")


@dataclass(frozen=True)
class BivarPoly:
    """Bivariate polynomial with exact integer coefficients.

    ``coeffs[k][l]`` is the coefficient of x^k y^l; trailing all-zero rows
    and columns are trimmed so equal polynomials compare equal.
    """

    coeffs: tuple[tuple[int, ...], ...]

    @classmethod
    def from_dict(cls, coeffs: dict[tuple[int, int], int]) -> "BivarPoly":
        live = {kl: c for kl, c in coeffs.items() if c}
        return cls(_trimmed(live))

    def to_dict(self) -> dict[tuple[int, int], int]:
        return {
            (k, l): c
            for k, row in enumerate(self.coeffs)
            for l, c in enumerate(row)
            if c
        }

    def coefficient(self, k: int, l: int) -> int:
        if 0 <= k < len(self.coeffs) and 0 <= l < len(self.coeffs[k]):
            return self.coeffs[k][l]
        return 0

    def render(self) -> str:
        """Readable text, descending total degree, x-powers before y-powers.

        >>> BivarPoly.from_dict({(0, 0): 4, (1, 0): 1, (0, 1): 1}).render()
        'x + y + 4'
        """
        terms = sorted(
            self.to_dict().items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])
        )
        if not terms:
            return "0"
        parts = []
        for (k, l), c in terms:
            xpart = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            ypart = "" if l == 0 else ("y" if l == 1 else f"y^{l}")
            body = xpart + ypart
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}{body}")
        return " + ".join(parts)


def to_polynomial(t: JointTable) -> BivarPoly:
    """Generating polynomial of a table: coefficient (k, l) = counts[k][l]."""
    return BivarPoly.from_dict({(k, l): c for k, l, c in t.cells()})


# ---------------------------------------------------------------------------
# Brute-force enumeration engines
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _triples(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(itertools.combinations(range(1, n + 1), 3))


def _fast_pair_eligible(pairs: Sequence[Pair]) -> bool:
    taus = {(1, 2, 3), (3, 2, 1)}
    return all(
        q1.tau in taus and q2.tau in taus and q1.length == q2.length == 3
        for q1, q2 in pairs
    )


def _shading_mask(pat: MeshPattern) -> int:
    mask = 0
    for i, j in pat.shading:
        mask |= 1 << (4 * i + j)
    return mask


def _triple_masks(pi: Perm) -> tuple[list[int], list[int]]:
    """Empty-box bitmasks for each increasing / decreasing triple of pi.

    Bit 4*i+j is set when box (i, j) of the triple's 4x4 grid is empty, so a
    length-3 pattern with shading mask S occurs at the triple exactly when
    S & ~mask == 0.
    """
    n = len(pi)
    pre = DominanceTable(pi)._prefix
    incr: list[int] = []
    decr: list[int] = []
    top = n + 1
    for a, b, c in _triples(n):
        va, vb, vc = pi[a - 1], pi[b - 1], pi[c - 1]
        if va < vb < vc:
            bucket = incr
            vgrid = (0, va, vb, vc, top)
        elif va > vb > vc:
            bucket = decr
            vgrid = (0, vc, vb, va, top)
        else:
            continue
        pgrid = (0, a, b, c, top)
        mask = 0
        bit = 1
        for i in range(4):
            p_lo, p_hi = pgrid[i], pgrid[i + 1]
            if p_hi - p_lo < 2:
                mask |= 15 << (4 * i)
                bit <<= 4
                continue
            row_hi = pre[p_hi - 1]
            row_lo = pre[p_lo]
            for j in range(4):
                v_lo, v_hi = vgrid[j], vgrid[j + 1]
                if (
                    v_hi - v_lo < 2
                    or row_hi[v_hi - 1] - row_lo[v_hi - 1] - row_hi[v_lo] + row_lo[v_lo]
                    == 0
                ):
                    mask |= bit
                bit <<= 1
        bucket.append(mask)
    return incr, decr


def _perms_with_first(n: int, firsts: Sequence[int]) -> Iterable[Perm]:
    for first in firsts:
        rest = [v for v in range(1, n + 1) if v != first]
        for tail in itertools.permutations(rest):
            yield (first, *tail)


def _tally_fast(n: int, pairs: Sequence[Pair], firsts: Sequence[int]) -> list[dict]:
    masks = [(_shading_mask(q1), _shading_mask(q2)) for q1, q2 in pairs]
    tallies: list[dict[tuple[int, int], int]] = [{} for _ in pairs]
    for pi in _perms_with_first(n, firsts):
        incr, decr = _triple_masks(pi)
        for idx, (m1, m2) in enumerate(masks):
            k = sum(1 for mask in incr if m1 & ~mask == 0)
            l = sum(1 for mask in decr if m2 & ~mask == 0)
            tally = tallies[idx]
            tally[(k, l)] = tally.get((k, l), 0) + 1
    return tallies


def _tally_generic(n: int, pairs: Sequence[Pair], firsts: Sequence[int]) -> list[dict]:
    tallies: list[dict[tuple[int, int], int]] = [{} for _ in pairs]
    for pi in _perms_with_first(n, firsts):
        table = DominanceTable(pi)
        for idx, (q1, q2) in enumerate(pairs):
            kl = mesh.joint_counts(pi, q1, q2, table)
            tally = tallies[idx]
            tally[kl] = tally.get(kl, 0) + 1
    return tallies


def _tally_worker(args) -> list[dict]:
    n, pair_texts, firsts, fast = args
    pairs = [
        (mesh.parse_pattern(t1), mesh.parse_pattern(t2)) for t1, t2 in pair_texts
    ]
    if fast:
        return _tally_fast(n, pairs, firsts)
    return _tally_generic(n, pairs, firsts)


def joint_tables(
    n: int, pairs: Sequence[Pair], workers: int = 1
) -> list[JointTable]:
    """Brute-force joint tables over S_n for many pattern pairs in one sweep.

    All pairs share the per-permutation bookkeeping, so verifying the whole
    catalog at one n costs little more than verifying a single pair.
    """
    perms.check_capacity(n)
    if n == 0:
        return [JointTable.from_dict(0, {(0, 0): 1}) for _ in pairs]
    fast = _fast_pair_eligible(pairs)
    tally = _tally_fast if fast else _tally_generic
    if workers <= 1 or n < 2:
        results = tally(n, pairs, range(1, n + 1))
        return [JointTable.from_dict(n, t) for t in results]
    pair_texts = [
        (mesh.format_pattern(q1), mesh.format_pattern(q2)) for q1, q2 in pairs
    ]
    jobs = [(n, pair_texts, [first], fast) for first in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=min(workers, n)) as pool:
        parts = list(pool.map(_tally_worker, jobs))
    tables = [JointTable.from_dict(n, t) for t in parts[0]]
    for part in parts[1:]:
        tables = [
            merge(acc, JointTable.from_dict(n, t)) for acc, t in zip(tables, part)
        ]
    return tables


def joint_distribution(
    n: int, q1: MeshPattern, q2: MeshPattern, workers: int = 1
) -> JointTable:
    """Exact joint table of one pattern pair over S_n.

    >>> from .mesh import parse_pattern
    >>> s19 = parse_pattern("123|0,0;0,1;0,2;1,0;1,1;1,2;2,0;2,1;2,2")
    >>> s19c = parse_pattern("321|0,0;0,1;0,2;1,0;1,1;1,2;2,0;2,1;2,2")
    >>> joint_distribution(2, s19, s19c).counts
    ((2,),)
    """
    return joint_tables(n, [(q1, q2)], workers=workers)[0]


def split_distribution(
    n: int,
    q1: MeshPattern,
    q2: MeshPattern,
    classify: Callable[[Perm], Hashable],
) -> dict[Hashable, JointTable]:
    """Joint tables of S_n partitioned by an arbitrary classifier.

    Used to check structural splits (e.g. by sign of the initial step, or by
    the position of the largest entry) against recurrence-built tables.
    """
    perms.check_capacity(n)
    tallies: dict[Hashable, dict[tuple[int, int], int]] = {}
    for pi in perms.enumerate_sn(n):
        table = DominanceTable(pi)
        kl = mesh.joint_counts(pi, q1, q2, table)
        bucket = tallies.setdefault(classify(pi), {})
        bucket[kl] = bucket.get(kl, 0) + 1
    return {key: JointTable.from_dict(n, t) for key, t in sorted(tallies.items(), key=lambda kv: str(kv[0]))}


def avoider_count(n: int, q: MeshPattern) -> int:
    """Number of n-permutations with zero occurrences of ``q``.

    >>> from .mesh import parse_pattern
    >>> avoider_count(2, parse_pattern("123|"))
    2
    """
    perms.check_capacity(n)
    count = 0
    for pi in perms.enumerate_sn(n):
        if next(mesh.occurrences(pi, q), None) is None:
            count += 1
    return count


def distribution(n: int, q: MeshPattern) -> list[int]:
    """Single-pattern occurrence distribution: entry k counts permutations
    with exactly k occurrences of ``q``."""
    perms.check_capacity(n)
    tally: dict[int, int] = {}
    for pi in perms.enumerate_sn(n):
        k = mesh.count_occurrences(pi, q)
        tally[k] = tally.get(k, 0) + 1
    return [tally.get(k, 0) for k in range(max(tally, default=0) + 1)]


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------


def table_to_json(
    t: JointTable,
    q1: MeshPattern | None = None,
    q2: MeshPattern | None = None,
    source: str = "brute_force",
) -> str:
    """Byte-stable JSON export of a table."""
    obj = {
        "n": t.n,
        "q1": mesh.format_pattern(q1) if q1 is not None else None,
        "q2": mesh.format_pattern(q2) if q2 is not None else None,
        "counts": [list(row) for row in t.counts],
        "source": source,
    }
    return json.dumps(obj, sort_keys=True)


def table_to_csv(t: JointTable) -> str:
    """CSV export: header ``k,l,count``, nonzero entries sorted by (k, l)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "l", "count"])
    for k, l, c in t.cells():
        writer.writerow([k, l, c])
    return buf.getvalue()
