"""From polynomials to passports and back.

The passport of a Morse polynomial ranks its critical values along the
critical points.  This module extracts passports with certified interval
arithmetic, reports degenerate rank patterns when critical values tie,
and constructs a polynomial realizing any prescribed proper alternating
permutation by steering the gaps between consecutive critical points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .paps import is_pap
from .polynomial import (
    IsolatedRoot,
    Poly,
    RationalLike,
    isolate_real_roots,
    refine_root,
    sign,
    to_fraction,
    value_enclosure,
)

DEFAULT_TOL = Fraction(1, 10**12)


@dataclass(frozen=True)
class Snake:
    passport: tuple[int, ...]


@dataclass(frozen=True)
class Degenerate:
    """Dense rank pattern; tied critical values share a rank."""
    pattern: tuple[int, ...]


@dataclass(frozen=True)
class NonMorse:
    reason: str


PassportOutcome = Snake | Degenerate | NonMorse


@dataclass(frozen=True)
class CriticalData:
    points: tuple[IsolatedRoot, ...]
    values: tuple[tuple[Fraction, Fraction], ...]
    verdict: str  # "MorseSnake" | "DegenerateValues" | "NonrealCritical"


@dataclass(frozen=True)
class CriticalPointSpec:
    """Strictly increasing critical points starting at 0."""
    xs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.xs or self.xs[0] != 0:
            raise ValueError("first critical point must be 0")
        if any(a >= b for a, b in zip(self.xs, self.xs[1:])):
            raise ValueError("critical points must be strictly increasing")

    @staticmethod
    def of(points: Sequence[RationalLike]) -> "CriticalPointSpec":
        return CriticalPointSpec(tuple(to_fraction(x) for x in points))


def from_critical_points(spec: CriticalPointSpec) -> Poly:
    """Monic polynomial vanishing at 0 whose critical points are spec.xs."""
    dp = Poly.from_roots(spec.xs)
    p = dp.integral()
    return p * (dp.degree + 1)


def _overlap(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def passport(p: Poly, tol: RationalLike = DEFAULT_TOL,
             assume_distinct: bool = False) -> PassportOutcome:
    """Rank the critical values of p left to right.

    Critical-point enclosures are refined until the value enclosures are
    pairwise disjoint (-> Snake) or every unresolved pair is narrower
    than tol (-> Degenerate with tied ranks).  With assume_distinct the
    caller certifies no ties exist and refinement runs to separation.
    """
    tol = to_fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p.degree < 2:
        raise ValueError("degree must be at least 2")
    data = critical_data(p, tol, assume_distinct)
    if data.verdict == "NonrealCritical":
        return NonMorse("fewer than deg-1 distinct real critical points")
    if data.verdict == "DegenerateValues":
        return Degenerate(_dense_ranks(data.values, tol))
    order = sorted(range(len(data.values)), key=lambda i: data.values[i][0])
    ranks = [0] * len(data.values)
    for r, i in enumerate(order):
        ranks[i] = r + 1
    return Snake(tuple(ranks))


def critical_data(p: Poly, tol: RationalLike = DEFAULT_TOL,
                  assume_distinct: bool = False) -> CriticalData:
    tol = to_fraction(tol)
    dp = p.derivative()
    roots = isolate_real_roots(dp)
    if len(roots) < p.degree - 1:
        return CriticalData(tuple(roots), (), "NonrealCritical")
    vals = [value_enclosure(p, r) for r in roots]
    while True:
        stuck = True
        live = set()
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                if _overlap(vals[i], vals[j]):
                    live.update((i, j))
        if not live:
            return CriticalData(tuple(roots), tuple(vals), "MorseSnake")
        for i in live:
            r = roots[i]
            if r.is_point():
                continue
            w = vals[i][1] - vals[i][0]
            if assume_distinct or w >= tol or w == 0:
                roots[i] = refine_root(dp, r, r.width() / 4)
                vals[i] = value_enclosure(p, roots[i])
                stuck = False
        if stuck:
            return CriticalData(tuple(roots), tuple(vals), "DegenerateValues")


def _dense_ranks(vals: Sequence[tuple[Fraction, Fraction]],
                 tol: Fraction) -> tuple[int, ...]:
    n = len(vals)
    # cluster transitively by enclosure overlap
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if _overlap(vals[i], vals[j]):
                parent[find(i)] = find(j)
    reps = sorted(set(find(i) for i in range(n)),
                  key=lambda i: vals[i][0])
    rank_of = {r: k + 1 for k, r in enumerate(reps)}
    return tuple(rank_of[find(i)] for i in range(n))


def degenerate_pattern(values: Sequence, tol: RationalLike = DEFAULT_TOL) -> tuple[int, ...]:
    """Dense ranks of value enclosures; tied values share a rank.

    Accepts exact rationals or (lo, hi) enclosures.  Raises if no tie is
    present (the caller should have produced a Snake).
    """
    tol = to_fraction(tol)
    encl = []
    for v in values:
        if isinstance(v, tuple):
            encl.append((to_fraction(v[0]), to_fraction(v[1])))
        else:
            v = to_fraction(v)
            encl.append((v, v))
    ranks = _dense_ranks(encl, tol)
    if len(set(ranks)) == len(ranks):
        raise ValueError("no tie among the values")
    return ranks


# --- construction -----------------------------------------------------------

def _values_for_gaps(gaps: Sequence[float]) -> list[float]:
    """Critical values of int_0^x prod(t - x_i) dt for x_i = prefix sums."""
    xs = [0.0]
    for g in gaps:
        xs.append(xs[-1] + g)
    coeffs = [1.0]
    for r in xs:
        nxt = [0.0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= c * r
        coeffs = nxt
    integ = [0.0] + [c / (i + 1) for i, c in enumerate(coeffs)]
    out = []
    for x in xs:
        acc = 0.0
        for c in reversed(integ):
            acc = acc * x + c
        out.append(acc)
    return out


def _ranking(vals: Sequence[float]) -> tuple[int, ...]:
    order = sorted(range(len(vals)), key=lambda i: vals[i])
    ranks = [0] * len(vals)
    for r, i in enumerate(order):
        ranks[i] = r + 1
    return tuple(ranks)


@dataclass
class ConstructStats:
    rank_evals: int = 0
    restarts: int = 0


def construct(target: Sequence[int], seed: int = 0,
              max_rank_evals: int = 10000,
              stats: Optional[ConstructStats] = None) -> CriticalPointSpec:
    """Critical points whose polynomial realizes the target passport.

    Gauss-Seidel on the gaps: each sweep re-solves every gap by bisection
    so that the jump between consecutive critical values matches the
    target rank difference; shrinking a gap shrinks the jump across it,
    so each one-dimensional solve brackets monotonely.  Verified against
    the exact passport before returning; raises RuntimeError when the
    evaluation budget is exhausted.
    """
    target = tuple(int(a) for a in target)
    if not is_pap(target):
        raise ValueError("target is not a proper alternating permutation: %r"
                         % (target,))
    if stats is None:
        stats = ConstructStats()
    n = len(target)
    if n == 1:
        return CriticalPointSpec.of([0])

    want = [target[i + 1] - target[i] for i in range(n - 1)]

    def values_at(gaps):
        stats.rank_evals += 1
        if stats.rank_evals > max_rank_evals:
            raise RuntimeError("construction budget exhausted for %r" % (target,))
        return _values_for_gaps(gaps)

    gaps = [1.0] * (n - 1)
    rng = random.Random(seed)
    while True:
        matched = False
        for _ in range(40):  # sweeps
            if _ranking(values_at(gaps)) == target:
                matched = True
                break
            for i in range(n - 1):
                goal = abs(want[i])
                lo, hi = 1e-9, gaps[i]
                # grow until the jump across gap i reaches the goal
                for _ in range(60):
                    vals = values_at(_with(gaps, i, hi))
                    if abs(vals[i + 1] - vals[i]) >= goal:
                        break
                    lo, hi = hi, hi * 2
                while hi - lo > 1e-3 * hi:
                    mid = (lo + hi) / 2
                    vals = values_at(_with(gaps, i, mid))
                    if abs(vals[i + 1] - vals[i]) >= goal:
                        hi = mid
                    else:
                        lo = mid
                gaps[i] = hi
            if _ranking(values_at(gaps)) == target:
                matched = True
                break
        if matched:
            spec = _snap(gaps, target)
            if spec is not None:
                return spec
        stats.restarts += 1
        gaps = [rng.uniform(1e-3, 2.0) for _ in range(n - 1)]


def _with(gaps, i, v):
    out = list(gaps)
    out[i] = v
    return out


def _snap(gaps: Sequence[float], target: tuple[int, ...]) -> Optional[CriticalPointSpec]:
    """Round the float solution to rationals and verify exactly."""
    for denom in (10**4, 10**6, 10**9, 10**12):
        qs = [Fraction(g).limit_denominator(denom) for g in gaps]
        if any(q <= 0 for q in qs):
            continue
        xs = [Fraction(0)]
        for q in qs:
            xs.append(xs[-1] + q)
        spec = CriticalPointSpec(tuple(xs))
        p = from_critical_points(spec)
        # critical points are exactly xs, so the values are exact rationals
        vals = [p(x) for x in xs]
        if len(set(vals)) == len(vals) and _ranking(vals) == target:
            return spec
    return None
