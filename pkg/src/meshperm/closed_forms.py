"""
Closed forms and recurrences for the catalog's anchor pairs.

Everything here is built from exact integer recurrences, independently of
the brute-force enumeration engine, so the two sides can cross-check each
other.  The single deliberate exception is the length-3 seed of the
A25 split (:func:`a25_split_tables`), which is read off the 6 permutations
of S_3 by direct counting, because the published initial conditions do not
pin down the full three-way split.

Anchor pairs and what is computed for them:

* S19 -- two-part split tables by the sign of the first step, built by a
  coupled pair of insertion recurrences.
* A17 -- closed form in binomials times unsigned Stirling numbers of the
  first kind, plus an equivalent binomial convolution.
* A25 -- three-part split tables by the position of the largest entry.
* A33 -- bivariate polynomial recurrence and the matching five-term
  coefficient recurrence.
* A25..A36 share one single-pattern distribution; its marginal recurrence
  is :func:`a25_family_marginal`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb, factorial

from . import catalog, dist, mesh
from .dist import BivarPoly, JointTable

# Length-2 auxiliary patterns whose occurrence distribution over S_n is the
# shifted Stirling column c(n, k+1).
STIRLING_PAIR_12 = mesh.parse_pattern("12|0,0;1,0;2,0;2,1")
STIRLING_PAIR_12_FLIP = mesh.parse_pattern("12|0,1;1,1;2,0;2,1")
STIRLING_PAIR_21 = mesh.parse_pattern("21|0,1;1,1;2,1;2,2")


@functools.lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind c(n, k).

    c(0, 0) = 1; c(n, k) = 0 for k = 0 < n or k > n; otherwise
    c(n, k) = (n-1) c(n-1, k) + c(n-1, k-1).

    >>> [stirling1(4, k) for k in range(5)]
    [0, 6, 11, 6, 1]
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0 and k == 0:
        return 1
    if k == 0 or k > n:
        return 0
    return (n - 1) * stirling1(n - 1, k) + stirling1(n - 1, k - 1)


@dataclass(frozen=True)
class StirlingTable:
    """Triangular table of c(n, k) for 0 <= k <= n <= nmax."""

    nmax: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, nmax: int) -> "StirlingTable":
        rows = tuple(
            tuple(stirling1(n, k) for k in range(n + 1)) for n in range(nmax + 1)
        )
        return cls(nmax, rows)

    def value(self, n: int, k: int) -> int:
        if k > n:
            return 0
        return self.rows[n][k]


def stirling_pair_count(n: int, k: int) -> int:
    """Number of n-permutations with k occurrences of STIRLING_PAIR_12.

    Equals c(n, k+1); the same distribution is shared by
    STIRLING_PAIR_12_FLIP and STIRLING_PAIR_21.

    >>> stirling_pair_count(1, 0)
    1
    >>> stirling_pair_count(3, 0)
    2
    """
    if n < 1:
        raise ValueError("defined for n >= 1")
    return stirling1(n, k + 1)


def harmonic_factorial(n: int) -> int:
    """The exact integer n! * (1 + sum_{i=1..n} 1/i).

    Each summand n!/i is integral, so no rational arithmetic is needed.

    >>> [harmonic_factorial(n) for n in range(5)]
    [1, 2, 5, 17, 74]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    f = factorial(n)
    return f + sum(f // i for i in range(1, n + 1))


def stirling_convolution_identity(n: int, m: int, r: int) -> bool:
    """Check the Vandermonde-style Stirling convolution numerically:

        sum_i  C(n, i) c(i, m-r) c(n-i, r)  ==  C(m, r) c(n, m).

    >>> stirling_convolution_identity(4, 2, 1)
    True
    """
    if not 0 <= r <= m <= n:
        raise ValueError("need 0 <= r <= m <= n")
    lhs = sum(
        comb(n, i) * stirling1(i, m - r) * stirling1(n - i, r) for i in range(n + 1)
    )
    return lhs == comb(m, r) * stirling1(n, m)


# ---------------------------------------------------------------------------
# Split tables
# ---------------------------------------------------------------------------

Entry = dict[tuple[int, int], int]


@dataclass(frozen=True)
class SplitTables:
    """A joint table split into three parts (the third may be all zero)."""

    n: int
    part1: JointTable
    part2: JointTable
    part3: JointTable

    def total(self) -> JointTable:
        return dist.merge(dist.merge(self.part1, self.part2), self.part3)

    @property
    def parts(self) -> tuple[JointTable, JointTable, JointTable]:
        return (self.part1, self.part2, self.part3)


def _get(d: Entry, k: int, l: int) -> int:
    if k < 0 or l < 0:
        return 0
    return d.get((k, l), 0)


def _zero_table(n: int) -> JointTable:
    return JointTable.from_dict(n, {})


def s19_split_tables(n: int) -> SplitTables:
    """Joint tables of pair S19 split by the sign of the first step.

    part1 counts permutations with pi_1 > pi_2, part2 those with
    pi_1 < pi_2 (part3 is identically zero).  Built by the coupled
    insertion recurrences

        part1(n,k,l) = (n-2) part1(n-1,k,l) + part1(n-1,k,l-1) + part2(n-1,k,l)
        part2(n,k,l) = part1(n-1,k,l) + (n-2) part2(n-1,k,l) + part2(n-1,k-1,l)

    from part1 = part2 = {(0,0): 1} at n = 2.

    >>> s19_split_tables(2).part1.counts
    ((1,),)
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    t1: Entry = {(0, 0): 1}
    t2: Entry = {(0, 0): 1}
    for m in range(3, n + 1):
        keys = {
            (k, l)
            for k in range(m - 1)
            for l in range(m - 1)
        }
        new1: Entry = {}
        new2: Entry = {}
        for k, l in keys:
            v1 = (m - 2) * _get(t1, k, l) + _get(t1, k, l - 1) + _get(t2, k, l)
            v2 = _get(t1, k, l) + (m - 2) * _get(t2, k, l) + _get(t2, k - 1, l)
            if v1:
                new1[(k, l)] = v1
            if v2:
                new2[(k, l)] = v2
        t1, t2 = new1, new2
    return SplitTables(
        n,
        JointTable.from_dict(n, t1),
        JointTable.from_dict(n, t2),
        _zero_table(n),
    )


def s19_table(n: int) -> JointTable:
    """Recurrence-built joint table of pair S19 (sum of the two parts)."""
    return s19_split_tables(n).total()


def position_of_max_class(pi) -> str:
    """'first', 'last' or 'interior', by where the largest entry sits."""
    pos = pi.index(len(pi)) + 1
    if pos == 1:
        return "first"
    if pos == len(pi):
        return "last"
    return "interior"


@functools.lru_cache(maxsize=None)
def _a25_seed(n: int) -> tuple[tuple[tuple[tuple[int, int], int], ...], ...]:
    """Exact split of S_n for pair A25 by position of the largest entry,
    read off the permutations directly (used only for n <= 3)."""
    pair = catalog.get_pair("A25")
    split = dist.split_distribution(n, pair.q1, pair.q2, position_of_max_class)
    out = []
    for key in ("first", "last", "interior"):
        table = split.get(key)
        out.append(tuple(((k, l), c) for k, l, c in (table.cells() if table else ())))
    return tuple(out)


def a25_split_tables(n: int) -> SplitTables:
    """Joint tables of pair A25 split by the position of the largest entry.

    part1: largest entry first; part2: largest entry last; part3: interior.
    Iterates, from the length-3 split counted directly,

        part1(n,k,l) = part1(n-1,k,l-1) + part2(n-1,k,l) + part3(n-1,k,l-1)
        part2(n,k,l) = part1(n-1,k,l) + part2(n-1,k-1,l) + part3(n-1,k-1,l)
        part3(n,k,l) = (n-2) * total(n-1,k,l)
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    seed_n = min(n, 3)
    seed = _a25_seed(seed_n)
    t1: Entry = dict(seed[0])
    t2: Entry = dict(seed[1])
    t3: Entry = dict(seed[2])
    for m in range(seed_n + 1, n + 1):
        keys = {(k, l) for k in range(m - 1) for l in range(m - 1)}
        new1: Entry = {}
        new2: Entry = {}
        new3: Entry = {}
        for k, l in keys:
            v1 = _get(t1, k, l - 1) + _get(t2, k, l) + _get(t3, k, l - 1)
            v2 = _get(t1, k, l) + _get(t2, k - 1, l) + _get(t3, k - 1, l)
            v3 = (m - 2) * (_get(t1, k, l) + _get(t2, k, l) + _get(t3, k, l))
            if v1:
                new1[(k, l)] = v1
            if v2:
                new2[(k, l)] = v2
            if v3:
                new3[(k, l)] = v3
        t1, t2, t3 = new1, new2, new3
    return SplitTables(
        n,
        JointTable.from_dict(n, t1),
        JointTable.from_dict(n, t2),
        JointTable.from_dict(n, t3),
    )


def a25_table(n: int) -> JointTable:
    """Recurrence-built joint table of pair A25."""
    return a25_split_tables(n).total()


# ---------------------------------------------------------------------------
# A17: closed form and convolution
# ---------------------------------------------------------------------------


def a17_entry(n: int, k: int, l: int) -> int:
    """Closed form for the (k, l) entry of pair A17's joint table.

    Piecewise in binomials and unsigned Stirling numbers; the doubly-avoiding
    corner k = l = 0 equals 2 (n-2)! (1 + sum_{i<n-1} 1/i), computed in
    integer form as 2 (c(n-1, 2) + c(n-1, 1)).
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    if k < 0 or l < 0:
        return 0
    if k >= 1 and l >= 1:
        return comb(k + l + 2, k + 1) * stirling1(n - 1, k + l + 2)
    if k >= 1:
        return (k + 2) * stirling1(n - 1, k + 2) + stirling1(n - 1, k + 1)
    if l >= 1:
        return (l + 2) * stirling1(n - 1, l + 2) + stirling1(n - 1, l + 1)
    return 2 * (stirling1(n - 1, 2) + stirling1(n - 1, 1))


def a17_table(n: int) -> JointTable:
    """Joint table of pair A17 from the closed form.

    >>> from .dist import to_polynomial
    >>> to_polynomial(a17_table(4)).render()
    'x^2 + y^2 + 6x + 6y + 10'
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    entries = {
        (k, l): a17_entry(n, k, l)
        for k in range(n - 1)
        for l in range(n - 1)
        if a17_entry(n, k, l)
    }
    return JointTable.from_dict(n, entries)


def _tilde(i: int, k: int) -> int:
    # stirling_pair_count extended by the empty permutation.
    if i == 0:
        return 1 if k == 0 else 0
    return stirling1(i, k + 1)


def a17_entry_by_convolution(n: int, k: int, l: int) -> int:
    """The same entry as :func:`a17_entry`, via the binomial convolution

        sum_{i=0}^{n-1} C(n-1, i) tilde(i, k) tilde(n-1-i, l)

    where tilde(i, k) = c(i, k+1) counts the auxiliary length-2 pattern.

    >>> a17_entry_by_convolution(4, 0, 0)
    10
    >>> a17_entry_by_convolution(4, 1, 1)
    0
    """
    if n < 1:
        raise ValueError("defined for n >= 1")
    if k < 0 or l < 0:
        return 0
    return sum(
        comb(n - 1, i) * _tilde(i, k) * _tilde(n - 1 - i, l) for i in range(n)
    )


def a17_double_avoiders(n: int) -> int:
    """Permutations avoiding both A17 patterns: 2 * harmonic_factorial(n-2).

    >>> a17_double_avoiders(5)
    34
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    return 2 * harmonic_factorial(n - 2)


# ---------------------------------------------------------------------------
# A33: polynomial recurrence and coefficient recurrence
# ---------------------------------------------------------------------------


def a33_polynomial(n: int) -> BivarPoly:
    """Joint generating polynomial of pair A33 by the two-term recurrence

        T_n = (n + x + y - 2) T_{n-1} + (1 - xy) T_{n-2}

    from T_2 = 2 and T_3 = x + y + 4.

    >>> a33_polynomial(4).render()
    'x^2 + y^2 + 6x + 6y + 10'
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    prev: Entry = {(0, 0): 2}
    if n == 2:
        return BivarPoly.from_dict(prev)
    cur: Entry = {(0, 0): 4, (1, 0): 1, (0, 1): 1}
    for m in range(4, n + 1):
        nxt: Entry = {}

        def add(k: int, l: int, c: int) -> None:
            if c:
                nxt[(k, l)] = nxt.get((k, l), 0) + c

        for (k, l), c in cur.items():
            add(k, l, (m - 2) * c)
            add(k + 1, l, c)
            add(k, l + 1, c)
        for (k, l), c in prev.items():
            add(k, l, c)
            add(k + 1, l + 1, -c)
        prev, cur = cur, {kl: c for kl, c in nxt.items() if c}
    return BivarPoly.from_dict(cur)


@functools.lru_cache(maxsize=None)
def _a33_entry(n: int, k: int, l: int) -> int:
    if k < 0 or l < 0:
        return 0
    if n == 2:
        return 2 if (k, l) == (0, 0) else 0
    if n == 3:
        return {(0, 0): 4, (1, 0): 1, (0, 1): 1}.get((k, l), 0)
    return (
        (n - 2) * _a33_entry(n - 1, k, l)
        + _a33_entry(n - 1, k - 1, l)
        + _a33_entry(n - 1, k, l - 1)
        + _a33_entry(n - 2, k, l)
        - _a33_entry(n - 2, k - 1, l - 1)
    )


def a33_entry_by_recurrence(n: int, k: int, l: int) -> int:
    """The (k, l) entry of pair A33's table by the five-term recurrence

        T(n,k,l) = (n-2) T(n-1,k,l) + T(n-1,k-1,l) + T(n-1,k,l-1)
                   + T(n-2,k,l) - T(n-2,k-1,l-1)

    >>> a33_entry_by_recurrence(4, 0, 0)
    10
    >>> a33_entry_by_recurrence(4, 1, 1)
    0
    """
    if n < 4:
        raise ValueError("the recurrence applies for n >= 4")
    return _a33_entry(n, k, l)


# ---------------------------------------------------------------------------
# Shared marginal of pairs A25..A36
# ---------------------------------------------------------------------------


def a25_family_marginal(n: int) -> list[int]:
    """Single-pattern occurrence distribution shared by pairs A25..A36.

    Entry k counts n-permutations with k occurrences of the pair's first
    pattern.  Iterates

        T(n,k) = (n-1) T(n-1,k) + T(n-1,k-1) + T(n-2,k) - T(n-2,k-1)

    from [2] at n = 2 and [5, 1] at n = 3.

    >>> a25_family_marginal(4)
    [17, 6, 1]
    >>> a25_family_marginal(5)
    [73, 37, 9, 1]
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    prev = [2]
    if n == 2:
        return prev
    cur = [5, 1]
    for m in range(4, n + 1):
        def at(seq: list[int], k: int) -> int:
            return seq[k] if 0 <= k < len(seq) else 0

        nxt = [
            (m - 1) * at(cur, k) + at(cur, k - 1) + at(prev, k) - at(prev, k - 1)
            for k in range(m - 1)
        ]
        prev, cur = cur, nxt
    return cur
