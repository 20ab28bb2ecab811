"""Stratification of the degree-5 parameter rectangle.

The quintic normal form integrates x * q with q = x^3 + 3x^2 + bx + c over
0 < b <= 3, 0 < c <= 1.  Inside the curvilinear triangle where q has three
distinct negative roots, two curves cut the rectangle into five domains of
constant passport: one where two critical values collide and one where a
critical value hits the value at the origin.  Classification is pure sign
logic; the five domain labels and the degenerate patterns on the arcs are
pinned by the landmark points O, A, B, D, E and the curve crossing F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import morse
from .contours import marching_squares
from .polynomial import (
    Poly,
    RationalLike,
    count_real_roots,
    gcd as poly_gcd,
    isolate_real_roots,
    sign,
    sign_at_root,
    to_fraction,
)

# bivariate terms (coefficient, exp_b, exp_c)
DISC_TERMS = ((54, 1, 1), (-108, 0, 1), (-4, 3, 0), (9, 2, 0), (-27, 0, 2))
SEPARATION_TERMS = ((128, 3, 0), (-1998, 2, 0), (-216, 0, 2), (1512, 1, 1),
                    (3645, 1, 0), (-729, 0, 1))
ZERO_VALUE_TERMS = ((640, 3, 0), (-1350, 2, 0), (5832, 0, 2), (-9720, 1, 1),
                    (18225, 0, 1))


def _eval_bc(terms, b: Fraction, c: Fraction) -> Fraction:
    return sum((Fraction(co) * b**eb * c**ec for co, eb, ec in terms), Fraction(0))


def disc_cubic(b: RationalLike, c: RationalLike) -> Fraction:
    """Discriminant of x^3 + 3x^2 + bx + c."""
    return _eval_bc(DISC_TERMS, to_fraction(b), to_fraction(c))


def separation(b: RationalLike, c: RationalLike) -> Fraction:
    """Vanishes iff two critical values at roots of q coincide."""
    return _eval_bc(SEPARATION_TERMS, to_fraction(b), to_fraction(c))


def zero_value(b: RationalLike, c: RationalLike) -> Fraction:
    """Vanishes iff a critical value at a root of q equals p(0) = 0."""
    return _eval_bc(ZERO_VALUE_TERMS, to_fraction(b), to_fraction(c))


def invariants(b: RationalLike, c: RationalLike) -> tuple[int, int, int]:
    """Exact signs (disc, separation, zero_value)."""
    return (sign(disc_cubic(b, c)), sign(separation(b, c)),
            sign(zero_value(b, c)))


def cubic(b: RationalLike, c: RationalLike) -> Poly:
    return Poly([to_fraction(c), to_fraction(b), 3, 1])


def quintic_poly(b: RationalLike, c: RationalLike) -> Poly:
    """Monic degree-5 polynomial 5 * integral of x*q, vanishing at 0."""
    return (Poly([0, 1]) * cubic(b, c)).integral() * 5


REGION_PASSPORTS = {
    "OAF": (4, 2, 3, 1),
    "AEF": (3, 2, 4, 1),
    "ODF": (4, 1, 3, 2),
    "DEF": (3, 1, 4, 2),
    "BDE": (2, 1, 4, 3),
}

# arc name -> (index of the degenerate plot, tied rank pattern)
ARC_PATTERNS = {
    "AF": (2, (3, 2, 3, 1)),
    "OF": (3, (3, 1, 2, 1)),
    "DF": (1, (3, 1, 3, 2)),
    "EF": (4, (2, 1, 3, 1)),
    "DE": (5, (2, 1, 3, 2)),
}


@dataclass(frozen=True)
class Stratum5:
    kind: str                                  # "region" | "arc" | "junction" | "outside"
    name: str = ""
    passport: Optional[tuple[int, ...]] = None
    degenerate_index: Optional[int] = None
    pattern: Optional[tuple[int, ...]] = None


OUTSIDE = Stratum5("outside", "outside")


def _value_sign_quadratic(b: Fraction, c: Fraction) -> Poly:
    """Quadratic with the sign of the critical value at each root of q.

    The integrated polynomial is x^2 * W(x) with W cubic; W reduced mod q
    leaves 9x^2 + 8bx + 18c over a factor 12, and x^2 > 0 at the negative
    roots, so this quadratic carries the value signs.
    """
    return Poly([18 * c, 8 * b, 9])


def _negative_value_count(b: Fraction, c: Fraction) -> int:
    """How many critical values at roots of q lie strictly below 0.

    Requires zero_value(b, c) != 0 so every sign is decidable.
    """
    q = cubic(b, c)
    u = _value_sign_quadratic(b, c)
    return sum(1 for r in isolate_real_roots(q) if sign_at_root(u, q, r) < 0)


def _value_sign_at(p: Poly, host: Poly, r) -> int:
    if r.is_point():
        return sign(p(r.lower))
    return sign_at_root(p, host, r)


def _arc_zero_value(b: Fraction, c: Fraction, sep_sign: int) -> str:
    """Which zero-value arc: OF, EF or DE."""
    if sep_sign > 0:
        return "OF"
    # strip the root with the zero value, then count negatives at the rest
    q = cubic(b, c)
    u = _value_sign_quadratic(b, c)
    g = poly_gcd(q, u)
    rest = q.divmod(g)[0]
    neg = sum(1 for r in isolate_real_roots(rest) if _value_sign_at(u, rest, r) < 0)
    return "EF" if neg == 0 else "DE"


def classify(b: RationalLike, c: RationalLike) -> Stratum5:
    """Stratum of (b, c): one of the five constant-passport domains, one of
    the five boundary arcs, the arc junction, or outside."""
    b, c = to_fraction(b), to_fraction(c)
    if b <= 0 or c <= 0:
        return OUTSIDE
    if disc_cubic(b, c) <= 0:
        return OUTSIDE      # a repeated or complex pair of roots
    if count_real_roots(cubic(b, c)) != 3:
        return OUTSIDE
    gs = sign(separation(b, c))
    hs = sign(zero_value(b, c))
    if gs == 0 and hs == 0:
        return Stratum5("junction", "F")
    if gs == 0:
        name = "AF" if _above_f_in_c(c) else "DF"
        idx, pattern = ARC_PATTERNS[name]
        return Stratum5("arc", name, degenerate_index=idx, pattern=pattern)
    if hs == 0:
        name = _arc_zero_value(b, c, gs)
        idx, pattern = ARC_PATTERNS[name]
        return Stratum5("arc", name, degenerate_index=idx, pattern=pattern)
    if gs > 0:
        name = "OAF" if hs > 0 else "ODF"
    elif hs < 0:
        name = "DEF"
    else:
        name = "AEF" if _negative_value_count(b, c) == 0 else "BDE"
    return Stratum5("region", name, passport=REGION_PASSPORTS[name])


# --- landmarks ---------------------------------------------------------------

LANDMARKS = {
    "O": (Fraction(0), Fraction(0)),
    "A": (Fraction(3), Fraction(1)),
    "B": (Fraction(9, 4), Fraction(0)),
    "D": (Fraction(135, 64), Fraction(0)),
    "E": (Fraction(45, 16), Fraction(25, 32)),
}

_SEP_DB = ((384, 2, 0), (-3996, 1, 0), (1512, 0, 1), (3645, 0, 0))
_SEP_DC = ((-432, 0, 1), (1512, 1, 0), (-729, 0, 0))
_ZV_DB = ((1920, 2, 0), (-2700, 1, 0), (-9720, 0, 1))
_ZV_DC = ((11664, 0, 1), (-9720, 1, 0), (18225, 0, 0))

_f_box_cache: dict[Fraction, tuple] = {}


def crossing_enclosure(width: RationalLike = Fraction(1, 10**8)) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Certified box around F, the crossing of the two stratifying curves.

    Rational Newton iteration from the seed (2.73, 0.72), then a Miranda
    certificate on the preconditioned pair over the returned box: each of
    the two combined polynomials has constant opposite signs on opposite
    box edges, so a common zero lies inside.
    """
    width = to_fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if width in _f_box_cache:
        return _f_box_cache[width]
    b, c = Fraction(273, 100), Fraction(18, 25)
    for _ in range(12):
        gv, hv = separation(b, c), zero_value(b, c)
        j11 = _eval_bc(_SEP_DB, b, c)
        j12 = _eval_bc(_SEP_DC, b, c)
        j21 = _eval_bc(_ZV_DB, b, c)
        j22 = _eval_bc(_ZV_DC, b, c)
        det = j11 * j22 - j12 * j21
        b -= (j22 * gv - j12 * hv) / det
        c -= (-j21 * gv + j11 * hv) / det
        b = b.limit_denominator(10**50)
        c = c.limit_denominator(10**50)
        if abs(gv) < Fraction(1, 10**40) and abs(hv) < Fraction(1, 10**40):
            break
    half = width / 2
    box = ((b - half, b + half), (c - half, c + half))
    if not _miranda_certify(box):
        raise ArithmeticError("crossing point certification failed")
    _f_box_cache[width] = box
    return box


def _restrict(terms, fixed_b: Optional[Fraction] = None,
              fixed_c: Optional[Fraction] = None) -> Poly:
    """Univariate restriction of a bivariate term list."""
    coeffs: dict[int, Fraction] = {}
    for co, eb, ec in terms:
        if fixed_b is not None:
            k, v = ec, Fraction(co) * fixed_b**eb
        else:
            k, v = eb, Fraction(co) * fixed_c**ec
        coeffs[k] = coeffs.get(k, Fraction(0)) + v
    return Poly([coeffs.get(i, Fraction(0)) for i in range(max(coeffs) + 1)])


def _edge_sign(m: tuple[Fraction, Fraction], axis: str, fixed: Fraction,
               lo: Fraction, hi: Fraction) -> int:
    """Constant sign of m[0]*sep + m[1]*zero_value on a box edge; 0 if it
    changes sign or vanishes there."""
    if axis == "b":
        pu = _restrict(SEPARATION_TERMS, fixed_b=fixed)
        pv = _restrict(ZERO_VALUE_TERMS, fixed_b=fixed)
    else:
        pu = _restrict(SEPARATION_TERMS, fixed_c=fixed)
        pv = _restrict(ZERO_VALUE_TERMS, fixed_c=fixed)
    p = pu * m[0] + pv * m[1]
    if p(lo) == 0 or p(hi) == 0 or sign(p(lo)) != sign(p(hi)):
        return 0
    if count_real_roots(p, lo, hi) != 0:
        return 0
    return sign(p(lo))


def _miranda_certify(box) -> bool:
    (blo, bhi), (clo, chi) = box
    bm, cm = (blo + bhi) / 2, (clo + chi) / 2
    j11 = _eval_bc(_SEP_DB, bm, cm)
    j12 = _eval_bc(_SEP_DC, bm, cm)
    j21 = _eval_bc(_ZV_DB, bm, cm)
    j22 = _eval_bc(_ZV_DC, bm, cm)
    det = j11 * j22 - j12 * j21
    if det == 0:
        return False
    # preconditioned pair (u, v) ~ (b - b_F, c - c_F) near the crossing
    mu = (j22 / det, -j12 / det)
    mv = (-j21 / det, j11 / det)
    left = _edge_sign(mu, "b", blo, clo, chi)
    right = _edge_sign(mu, "b", bhi, clo, chi)
    bottom = _edge_sign(mv, "c", clo, blo, bhi)
    top = _edge_sign(mv, "c", chi, blo, bhi)
    return (left != 0 and right == -left) and (bottom != 0 and top == -bottom)


def _above_f_in_c(c: Fraction) -> bool:
    """Exact comparison of c against the c-coordinate of F."""
    width = Fraction(1, 10**8)
    for _ in range(12):
        (_, _), (clo, chi) = crossing_enclosure(width)
        if c > chi:
            return True
        if c < clo:
            return False
        width /= 2**8
    raise ArithmeticError("point is indistinguishable from the crossing F")


def landmarks() -> dict[str, tuple[Fraction, Fraction]]:
    """O, A, B, D, E exactly; F as the center of a certified 1e-8 box."""
    out = dict(LANDMARKS)
    (blo, bhi), (clo, chi) = crossing_enclosure()
    out["F"] = ((blo + bhi) / 2, (clo + chi) / 2)
    return out


def trace_curves(resolution: int = 256) -> dict[str, list[list[tuple[float, float]]]]:
    """Marching-squares polylines of the three curves on [0,3] x [0,1].

    Node signs are evaluated exactly; the crossings are then interpolated
    in floats for plotting.
    """
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    bs = [Fraction(3) * i / resolution for i in range(resolution + 1)]
    cs = [Fraction(1) * j / resolution for j in range(resolution + 1)]
    bf = [float(x) for x in bs]
    cf = [float(x) for x in cs]
    out = {}
    for name, fn in (("disc", disc_cubic), ("ties", separation),
                     ("zeros", zero_value)):
        vals = [[float(fn(b, c)) for c in cs] for b in bs]
        out[name] = marching_squares(vals, bf, cf)
    return out
