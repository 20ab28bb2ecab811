"""Proper alternating permutations (PAPs) and their boustrophedon counts.

A PAP of order n is the rank permutation of the critical values of a
monic Morse polynomial of degree n+1 along its critical points.  The
monic normalization forces the zigzag orientation: for even n the first
step descends (a1 > a2), for odd n it ascends.  Order 1 is the special
base case (1).
"""

from __future__ import annotations

from typing import Sequence


def is_alternating(seq: Sequence[int]) -> bool:
    """No window of three consecutive entries is monotone."""
    for i in range(len(seq) - 2):
        a, b, c = seq[i], seq[i + 1], seq[i + 2]
        if (a < b < c) or (a > b > c):
            return False
    return True


def is_pap(seq: Sequence[int]) -> bool:
    """Permutation of 1..n, alternating, with the proper orientation.

    Properness: for even n the level a1 exceeds 1 (first extremum is a
    maximum), for odd n the level is below n.  Together with alternation
    this pins the zigzag direction of the first step.
    """
    n = len(seq)
    if n == 0 or sorted(seq) != list(range(1, n + 1)):
        return False
    if n == 1:
        return True
    if not is_alternating(seq):
        return False
    if n % 2 == 0:
        return seq[0] > seq[1]
    return seq[0] < seq[1]


def level(p: Sequence[int]) -> int:
    """Rank of the leftmost critical value."""
    return p[0]


def extend(p: Sequence[int], k: int) -> tuple[int, ...]:
    """Prepend k, bumping entries >= k up by one.

    Admissible k: 1 <= k <= level for even order, level < k <= order+1
    for odd order; anything else raises ValueError.
    """
    p = tuple(p)
    if not is_pap(p):
        raise ValueError("not a proper alternating permutation: %r" % (p,))
    n, m = len(p), p[0]
    if n % 2 == 0:
        lo, hi = 1, m
    else:
        lo, hi = m + 1, n + 1
    if not lo <= k <= hi:
        raise ValueError("k=%d outside admissible range [%d, %d]" % (k, lo, hi))
    return (k,) + tuple(a + 1 if a >= k else a for a in p)


def delete_first(p: Sequence[int]) -> tuple[int, ...]:
    """Drop the first entry, pulling entries above it down by one."""
    p = tuple(p)
    if len(p) < 2:
        raise ValueError("cannot delete from an order-1 permutation")
    m = p[0]
    return tuple(a - 1 if a > m else a for a in p[1:])


def enumerate_paps(n: int) -> list[tuple[int, ...]]:
    """All PAPs of order n, lexicographically sorted."""
    if n < 1:
        raise ValueError("order must be positive")
    current = [(1,)]
    for order in range(1, n):
        nxt = []
        for p in current:
            m = p[0]
            ks = range(1, m + 1) if order % 2 == 0 else range(m + 1, order + 2)
            for k in ks:
                nxt.append((k,) + tuple(a + 1 if a >= k else a for a in p))
        current = nxt
    return sorted(current)


def count(n: int, m: int) -> int:
    """s(n, m): number of PAPs of order n and level m."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    return triangle_rows(n)[n - 1][m - 1]


def triangle_rows(n: int) -> list[list[int]]:
    """First n rows of the boustrophedon count triangle.

    Row 1 is [1].  An entry of an even row sums the entries of the
    previous row at its level and rightward; an entry of an odd row sums
    the previous row strictly left of its level.
    """
    if n < 1:
        raise ValueError("need at least one row")
    rows = [[1]]
    for order in range(2, n + 1):
        prev = rows[-1]
        if order % 2 == 0:
            # previous order is odd: s(order, m) = sum_{j < m} s(order-1, j)
            acc = 0
            row = []
            for m in range(1, order + 1):
                row.append(acc)
                if m <= len(prev):
                    acc += prev[m - 1]
        else:
            # previous order is even: s(order, m) = sum_{j >= m} s(order-1, j)
            row = []
            for m in range(1, order + 1):
                row.append(sum(prev[m - 1:]))
        rows.append(row)
    return rows


def pap_index(p: Sequence[int]) -> int:
    """1-based position of p in the lexicographic enumeration of its order."""
    p = tuple(p)
    return enumerate_paps(len(p)).index(p) + 1
