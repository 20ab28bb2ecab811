"""Exact univariate polynomial arithmetic over the rationals.

Dense coefficient representation (index = power), Sturm-chain real root
isolation with multiplicities, interval refinement, and resultants /
discriminants via the Euclidean remainder recursion.  Everything here is
pure and exact; floats only appear when the caller converts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_fraction(x: RationalLike) -> Fraction:
    """Parse ints, Fractions, 'p/q' and decimal strings exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("refusing float %r: pass a string or Fraction" % x)
    return Fraction(str(x).strip())


def sign(x) -> int:
    return (x > 0) - (x < 0)


class Poly:
    """Immutable dense polynomial with Fraction coefficients.

    coeffs[i] is the coefficient of x**i; the leading coefficient is
    nonzero unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def from_roots(roots: Sequence[RationalLike]) -> "Poly":
        p = Poly([1])
        for r in roots:
            p = p * Poly([-to_fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            return _ZERO
        return self.coeffs[-1]

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_fraction(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            k = to_fraction(other)
            return Poly([c * k for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        lead = other.coeffs[-1]
        quo = [_ZERO] * max(0, dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            q = rem[k + dd] / lead
            quo[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return Poly(quo), Poly(rem[:dd])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def integral(self) -> "Poly":
        """Antiderivative with zero constant term, so integral(0) = 0."""
        return Poly([_ZERO] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly([c / lead for c in self.coeffs])

    def compose_affine(self, alpha: RationalLike, beta: RationalLike) -> "Poly":
        """p(alpha*x + beta) via Horner."""
        alpha, beta = to_fraction(alpha), to_fraction(beta)
        lin = Poly([beta, alpha])
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * lin + Poly([c])
        return acc

    def shifted(self, beta: RationalLike) -> "Poly":
        return self.compose_affine(1, beta)

    def eval_interval(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """Enclosure of the range over [lo, hi] by interval Horner."""
        vlo, vhi = _ZERO, _ZERO
        for c in reversed(self.coeffs):
            cands = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
            vlo, vhi = min(cands) + c, max(cands) + c
        return vlo, vhi

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "x^%d" % i if i > 1 else ("x" if i == 1 else "")
            parts.append(("%s%s" % (c, "*" + term if term and c != 1 else term or str(c)))
                         if not (c == 1 and term) else term)
        return "Poly(%s)" % " + ".join(parts)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic polynomial gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = lc * prod a_i^i with a_i squarefree, coprime.

    Returns [(a_i, i)] for the nonconstant a_i only.
    """
    if p.degree < 1:
        return []
    p = p.monic()
    d = p.derivative()
    a = gcd(p, d)
    if a.degree == 0:
        return [(p, 1)]
    b = p.divmod(a)[0]
    c = d.divmod(a)[0]
    out = []
    i = 1
    while b.degree > 0:
        z = c - b.derivative()
        g = gcd(b, z)
        if g.degree > 0:
            out.append((g, i))
        b = b.divmod(g)[0]
        c = z.divmod(g)[0]
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    g = gcd(p, p.derivative())
    if g.degree < 1:
        return p.monic()
    return p.divmod(g)[0].monic()


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        rem = chain[-2] % chain[-1]
        if rem.is_zero():
            break
        chain.append(-rem)
    return [q for q in chain if not q.is_zero()]


def _variations(values: Sequence[Fraction]) -> int:
    signs = [sign(v) for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(chain: Sequence[Poly], x: Fraction) -> int:
    return _variations([q(x) for q in chain])


def _variations_at_inf(chain: Sequence[Poly], positive: bool) -> int:
    vals = []
    for q in chain:
        lead = q.leading()
        if not positive and q.degree % 2 == 1:
            lead = -lead
        vals.append(lead)
    return _variations(vals)


def count_real_roots(p: Poly, lo: Fraction = None, hi: Fraction = None) -> int:
    """Number of distinct real roots of p in (lo, hi]; whole line if None."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return 0
    chain = sturm_chain(p)
    if chain[-1].degree > 0:
        # nontrivial gcd of p and p': redo on the squarefree part
        chain = sturm_chain(p.divmod(chain[-1])[0])
    va = _variations_at_inf(chain, False) if lo is None else _variations_at(chain, to_fraction(lo))
    vb = _variations_at_inf(chain, True) if hi is None else _variations_at(chain, to_fraction(hi))
    return va - vb


def cauchy_bound(p: Poly) -> Fraction:
    """1 + max|a_i|/|a_n| bounds the absolute value of every root."""
    if p.degree < 1:
        return _ONE
    lead = abs(p.leading())
    m = max((abs(c) for c in p.coeffs[:-1]), default=_ZERO)
    return 1 + m / lead


def simplest_in(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator strictly inside (lo, hi)."""
    if not lo < hi:
        raise ValueError("empty interval")
    fl = lo.__floor__()
    if lo < fl + 1 < hi:
        return Fraction(fl + 1)
    if lo == fl:
        q = (1 / (hi - fl)).__floor__() + 1
        return fl + Fraction(1, q)
    return fl + 1 / simplest_in(1 / (hi - fl), 1 / (lo - fl))


def _split_point(lo: Fraction, hi: Fraction) -> Fraction:
    """Low-complexity interior point; stays in the middle half so bisection
    still contracts geometrically while denominators track the width."""
    w = hi - lo
    return simplest_in(lo + w / 4, hi - w / 4)


@dataclass(frozen=True)
class IsolatedRoot:
    """Isolating interval [lower, upper] for one distinct real root."""
    lower: Fraction
    upper: Fraction
    multiplicity: int = 1

    def width(self) -> Fraction:
        return self.upper - self.lower

    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def is_point(self) -> bool:
        return self.lower == self.upper


def _isolate_squarefree(f: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for a squarefree polynomial.

    Each returned [lo, hi] either is a point (exact rational root) or has
    f(lo), f(hi) nonzero of opposite signs with exactly one root inside.
    """
    if f.degree < 1:
        return []
    chain = sturm_chain(f)
    bound = cauchy_bound(f)
    out = []

    def var(x):
        return _variations_at(chain, x)

    def rec(lo, hi, vlo, vhi):
        n = vlo - vhi
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi, vlo, vhi))
            return
        mid = _split_point(lo, hi)
        vmid = var(mid)
        rec(lo, mid, vlo, vmid)
        rec(mid, hi, vmid, vhi)

    rec(-bound, bound, var(-bound), var(bound))
    intervals = []
    for lo, hi, vlo, vhi in out:
        # one root in the half-open (lo, hi]; close it up
        while True:
            if f(hi) == 0:
                intervals.append((hi, hi))
                break
            if f(lo) != 0 and sign(f(lo)) != sign(f(hi)):
                intervals.append((lo, hi))
                break
            mid = _split_point(lo, hi)
            if f(mid) == 0:
                intervals.append((mid, mid))
                break
            vmid = var(mid)
            if vmid - vhi == 1:
                lo, vlo = mid, vmid
            else:
                hi, vhi = mid, vmid
    intervals.sort()
    return intervals


def isolate_real_roots(p: Poly) -> list[IsolatedRoot]:
    """Isolating intervals for every distinct real root, sorted, with
    multiplicities recovered from the squarefree decomposition."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return []
    roots: list[IsolatedRoot] = []
    for factor, mult in squarefree_decomposition(p):
        for lo, hi in _isolate_squarefree(factor):
            roots.append(IsolatedRoot(lo, hi, mult))
    roots.sort(key=lambda r: (r.lower, r.upper))
    # factors of a squarefree decomposition are coprime, so intervals of
    # different factors can overlap only spuriously; shrink until disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(roots) - 1):
            a, b = roots[i], roots[i + 1]
            if a.upper > b.lower or (a.is_point() and a.lower == b.lower):
                pa = _factor_of(p, a)
                pb = _factor_of(p, b)
                roots[i] = _halve(pa, a)
                roots[i + 1] = _halve(pb, b)
                changed = True
        roots.sort(key=lambda r: (r.lower, r.upper))
    return roots


def _factor_of(p: Poly, r: IsolatedRoot) -> Poly:
    for factor, mult in squarefree_decomposition(p):
        if mult == r.multiplicity and _contains_root(factor, r):
            return factor
    raise AssertionError("no factor for root %r" % (r,))


def _contains_root(f: Poly, r: IsolatedRoot) -> bool:
    if r.is_point():
        return f(r.lower) == 0
    return count_real_roots(f, r.lower, r.upper) >= 1


def _halve(f: Poly, r: IsolatedRoot) -> IsolatedRoot:
    # r brackets a sign change of f by construction
    if r.is_point():
        return r
    mid = _split_point(r.lower, r.upper)
    if f(mid) == 0:
        return IsolatedRoot(mid, mid, r.multiplicity)
    if sign(f(r.lower)) != sign(f(mid)):
        return IsolatedRoot(r.lower, mid, r.multiplicity)
    return IsolatedRoot(mid, r.upper, r.multiplicity)


def refine_root(p: Poly, r: IsolatedRoot, width: RationalLike) -> IsolatedRoot:
    """Bisect the isolating interval until its width is <= width."""
    width = to_fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if r.is_point():
        return r
    lo, hi = r.lower, r.upper
    slo, shi = sign(p(lo)), sign(p(hi))
    if slo != 0 and shi != 0 and slo != shi:
        f = p   # already a sign-changing bracket for p itself
    else:
        f = squarefree_part(p)
        if sign(f(lo)) == sign(f(hi)) or f(lo) == 0 or f(hi) == 0:
            # normalize to a sign-changing bracket first
            sub = [x for x in _isolate_squarefree(f) if lo <= x[0] and x[1] <= hi]
            if len(sub) != 1:
                raise ValueError("interval does not isolate a single root")
            lo, hi = sub[0]
            if lo == hi:
                return IsolatedRoot(lo, hi, r.multiplicity)
    slo = sign(f(lo))
    while hi - lo > width:
        mid = _split_point(lo, hi)
        v = f(mid)
        if v == 0:
            return IsolatedRoot(mid, mid, r.multiplicity)
        if slo != sign(v):
            hi = mid
        else:
            lo = mid
    return IsolatedRoot(lo, hi, r.multiplicity)


def resultant(p: Poly, q: Poly) -> Fraction:
    """Resultant with the Sylvester determinant sign convention."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    res = _ONE
    a, b = p, q
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return res * b.coeffs[0] ** m
        r = a % b
        if r.is_zero():
            return _ZERO
        k = r.degree
        res *= (-1) ** (m * n) * b.leading() ** (m - k)
        a, b = b, r


def discriminant(p: Poly) -> Fraction:
    """(-1)^(n(n-1)/2) * res(p, p') / lc(p)."""
    n = p.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * resultant(p, p.derivative()) / p.leading()


def value_enclosure(p: Poly, r: IsolatedRoot) -> tuple[Fraction, Fraction]:
    """Enclosure of p(root) over the isolating interval."""
    if r.is_point():
        v = p(r.lower)
        return v, v
    return p.eval_interval(r.lower, r.upper)


def sign_at_root(p: Poly, host: Poly, r: IsolatedRoot, max_steps: int = 2000) -> int:
    """Exact sign of p at the root of `host` isolated by r.

    Terminates when p does not vanish at that root; if p and host share
    the root, this loops forever, so callers certify p != 0 there (or use
    gcd to strip common roots first).
    """
    if r.is_point():
        return sign(p(r.lower))
    cur = r
    for _ in range(max_steps):
        lo, hi = value_enclosure(p, cur)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        cur = refine_root(host, cur, cur.width() / 2)
        if cur.is_point():
            return sign(p(cur.lower))
    raise ArithmeticError("sign undecided after %d refinements" % max_steps)
