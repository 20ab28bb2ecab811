"""Stratification of the degree-6 coefficient box.

The sextic normal form integrates x * q with q = x^4 + 4x^3 + ax^2 + bx + c
over the box (0,6] x (0,4] x (0,1].  Three integer polynomials stratify it:
the discriminant of q (four distinct real roots inside the "main triangle"
of each c-section), a separation polynomial vanishing when two critical
values collide, and a zero-value polynomial vanishing when a critical value
hits the one at the origin.  Sections at fixed c decompose into domains of
constant passport; this module scans them and sweeps c for the bifurcation
thresholds where the partition changes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from . import morse
from .polynomial import Poly, RationalLike, count_real_roots, sign, to_fraction
from .rootgrid import Component, SectionGrid, Window, locate_window

# term lists: (coefficient, exp_a, exp_b, exp_c)
DISC_TERMS = (
    (16, 4, 0, 1), (-4, 3, 2, 0), (-64, 3, 0, 1), (16, 2, 2, 0),
    (-320, 2, 1, 1), (-128, 2, 0, 2), (72, 1, 3, 0), (144, 1, 2, 1),
    (1152, 1, 1, 1), (2304, 1, 0, 2), (-27, 0, 4, 0), (-256, 0, 3, 0),
    (-96, 0, 2, 1), (-768, 0, 1, 2), (256, 0, 0, 3), (-6912, 0, 0, 2),
)

SEPARATION_TERMS = (
    (37500, 7, 1, 0), (-15625, 6, 2, 0), (-688000, 6, 1, 0), (-90000, 6, 0, 1),
    (-480000, 5, 2, 0), (-450000, 5, 1, 1), (3624960, 5, 1, 0), (1651200, 5, 0, 1),
    (600000, 4, 3, 0), (187500, 4, 2, 1), (13363200, 4, 2, 0), (13824000, 4, 1, 1),
    (-5898240, 4, 1, 0), (1080000, 4, 0, 2), (-8699904, 4, 0, 1),
    (-125000, 3, 4, 0), (-9344000, 3, 3, 0), (-8160000, 3, 2, 1),
    (-73662464, 3, 2, 0), (1800000, 3, 1, 2), (-163184640, 3, 1, 1),
    (-28416000, 3, 0, 2), (14155776, 3, 0, 1), (1440000, 2, 4, 0),
    (1200000, 2, 3, 1), (3932160, 2, 3, 0), (-750000, 2, 2, 2),
    (126259200, 2, 2, 1), (116391936, 2, 2, 0), (-24576000, 2, 1, 2),
    (723517440, 2, 1, 1), (-4320000, 2, 0, 3), (299630592, 2, 0, 2),
    (19046400, 1, 4, 0), (-46080000, 1, 3, 1), (154140672, 1, 3, 0),
    (23040000, 1, 2, 2), (-438829056, 1, 2, 1), (-2400000, 1, 1, 3),
    (-47185920, 1, 1, 2), (-1056964608, 1, 1, 1), (70656000, 1, 0, 3),
    (-1264582656, 1, 0, 2), (-4096000, 0, 5, 0), (7680000, 0, 4, 1),
    (-66322432, 0, 4, 0), (-4800000, 0, 3, 2), (96337920, 0, 3, 1),
    (1000000, 0, 2, 3), (-8601600, 0, 2, 2), (276824064, 0, 2, 1),
    (-23552000, 0, 1, 3), (421527552, 0, 1, 2), (-203423744, 0, 0, 3),
    (-268435456, 0, 3, 0), (1811939328, 0, 0, 2), (5760000, 0, 0, 4),
)

ZERO_VALUE_TERMS = (
    (5625, 4, 0, 1), (-1250, 3, 2, 0), (-21600, 3, 0, 1), (4800, 2, 2, 0),
    (-120000, 2, 1, 1), (-60000, 2, 0, 2), (24000, 1, 3, 0), (60000, 1, 2, 1),
    (414720, 1, 1, 1), (1036800, 1, 0, 2), (-10000, 0, 4, 0), (-81920, 0, 3, 0),
    (-38400, 0, 2, 1), (-384000, 0, 1, 2), (160000, 0, 0, 3), (-2985984, 0, 0, 2),
)


def _eval_terms(terms, a: Fraction, b: Fraction, c: Fraction) -> Fraction:
    pa = [Fraction(1)]
    for _ in range(7):
        pa.append(pa[-1] * a)
    pb = [Fraction(1)]
    for _ in range(5):
        pb.append(pb[-1] * b)
    pc = [Fraction(1)]
    for _ in range(4):
        pc.append(pc[-1] * c)
    return sum((Fraction(co) * pa[ea] * pb[eb] * pc[ec]
                for co, ea, eb, ec in terms), Fraction(0))


def disc_quartic(a: RationalLike, b: RationalLike, c: RationalLike) -> Fraction:
    """Discriminant of x^4 + 4x^3 + ax^2 + bx + c."""
    return _eval_terms(DISC_TERMS, to_fraction(a), to_fraction(b), to_fraction(c))


def separation(a: RationalLike, b: RationalLike, c: RationalLike) -> Fraction:
    """Vanishes iff two critical values at roots of q coincide."""
    return _eval_terms(SEPARATION_TERMS, to_fraction(a), to_fraction(b),
                       to_fraction(c))


def zero_value(a: RationalLike, b: RationalLike, c: RationalLike) -> Fraction:
    """Vanishes iff some critical value at a root of q equals p(0) = 0."""
    return _eval_terms(ZERO_VALUE_TERMS, to_fraction(a), to_fraction(b),
                       to_fraction(c))


def invariants(a: RationalLike, b: RationalLike, c: RationalLike) -> tuple[int, int, int]:
    """Exact signs (disc, separation, zero_value)."""
    return (sign(disc_quartic(a, b, c)), sign(separation(a, b, c)),
            sign(zero_value(a, b, c)))


def quartic(a: RationalLike, b: RationalLike, c: RationalLike) -> Poly:
    return Poly([to_fraction(c), to_fraction(b), to_fraction(a), 4, 1])


def sextic_poly(a: RationalLike, b: RationalLike, c: RationalLike) -> Poly:
    """Monic degree-6 polynomial 6 * integral of x*q, vanishing at 0."""
    q = quartic(a, b, c)
    return (Poly([0, 1]) * q).integral() * 6


def in_main_triangle(a: RationalLike, b: RationalLike, c: RationalLike) -> bool:
    """Exact Sturm test: q has four distinct real roots."""
    return count_real_roots(quartic(a, b, c)) == 4


def quartic_nature(a: RationalLike, b: RationalLike, c: RationalLike) -> int:
    """Distinct real roots of q by discriminant sign analysis; equals the
    Sturm count for a monic quartic (cross-checked in the tests).

    Returns 4, 2, or 0; -1 when a subsidiary sign vanishes (boundary, the
    caller should fall back to the exact count).
    """
    a, b, c = to_fraction(a), to_fraction(b), to_fraction(c)
    d = disc_quartic(a, b, c)
    P = a - 6                      # 8*(a-6) up to scale
    D = 4 * c - a * a + 16 * a - 4 * b - 48
    if d < 0:
        return 2
    if d > 0:
        if P < 0 and D < 0:
            return 4
        if P > 0 or D > 0:
            return 0
        return -1
    return -1


@dataclass(frozen=True)
class SectionComponent:
    id: int
    passport: tuple[int, ...]
    rep: tuple[Fraction, Fraction, Fraction]   # (a, b, c)
    rep_roots: tuple[Fraction, Fraction]       # (y1, y2) root coordinates
    cells: int                                 # finest-lattice cell count
    signs: tuple[int, int, int]                # (disc, separation, zero_value)


@dataclass(frozen=True)
class SectionScan:
    gamma: Fraction
    resolution: int
    depth: int
    window: Window
    components: tuple[SectionComponent, ...]
    grid: Optional[object] = None   # SectionGrid when keep_grid was requested

    def passports(self) -> set[tuple[int, ...]]:
        return {c.passport for c in self.components}

    def signature(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        return (len(self.components),
                tuple(sorted(c.passport for c in self.components)))


def scan_section(gamma: RationalLike, resolution: int = 256, depth: int = 6,
                 merge_radius: int = 16, window: Optional[Window] = None,
                 verify_reps: bool = True, keep_grid: bool = False) -> SectionScan:
    """Decompose the c = gamma section of the main triangle into domains
    of constant passport.

    The scan runs in root coordinates (see rootgrid); each component
    reports a rational representative mapped back to coefficients, with
    its exact invariant signs.  With verify_reps each representative's
    passport is recomputed independently through the generic critical-value
    machinery and must agree with the scan.
    """
    gamma = to_fraction(gamma)
    if not 0 < gamma <= 1:
        raise ValueError("need 0 < gamma <= 1")
    grid = SectionGrid(gamma, resolution=resolution, depth=depth, window=window)
    comps = grid.merge_fragments(grid.components(), radius_cells=merge_radius)
    out = []
    for idx, comp in enumerate(comps, start=1):
        y1, y2 = comp.rep
        S = 4 - y1 - y2
        Q = gamma / (y1 * y2)
        a = y1 * y2 + (y1 + y2) * S + Q
        b = y1 * y2 * S + Q * (y1 + y2)
        signs = invariants(a, b, gamma)
        if verify_reps:
            outcome = morse.passport(sextic_poly(a, b, gamma), assume_distinct=True)
            if not isinstance(outcome, morse.Snake) or outcome.passport != comp.passport:
                raise AssertionError(
                    "scan passport %r disagrees with direct computation %r at %s"
                    % (comp.passport, outcome, (a, b, gamma)))
        out.append(SectionComponent(idx, comp.passport, (a, b, gamma),
                                    (y1, y2), comp.cells, signs))
    return SectionScan(gamma, resolution, depth, grid.window, tuple(out),
                       grid if keep_grid else None)


def roots_to_coeffs(y1: Fraction, y2: Fraction, gamma: Fraction) -> tuple[Fraction, Fraction]:
    """Map root coordinates (two smallest root magnitudes) to (a, b)."""
    S = 4 - y1 - y2
    Q = gamma / (y1 * y2)
    return (y1 * y2 + (y1 + y2) * S + Q,
            y1 * y2 * S + Q * (y1 + y2))


def tie_point(s: RationalLike, m: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    """Exact rational point on the separation surface.

    Two roots of the quartic come from t^2 - s*t + m; requiring their
    critical values to agree is linear in the product of the remaining
    two roots, so the whole coefficient triple is rational in (s, m).
    """
    s, m = to_fraction(s), to_fraction(m)
    W = -4 - s
    den = 5 * s * (4 * m - s * s)
    if den == 0:
        raise ValueError("degenerate parameters")
    num = (W * (20 * m * m - 50 * m * s * s + 15 * s**4)
           + 48 * m * m - 25 * m * s**3 - 144 * m * s * s
           + 10 * s**5 + 48 * s**4)
    V = -num / den
    return m + s * W + V, -(m * W + V * s), m * V


def shared_root_point(a: RationalLike, r: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    """Exact rational point on the zero-value surface: the quartic and the
    integrated polynomial share the root r, solved linearly for (b, c)."""
    a, r = to_fraction(a), to_fraction(r)
    if r == 0:
        raise ValueError("the shared root must be nonzero")
    rhs1 = -(10 * r**4 + 48 * r**3 + 15 * a * r * r)
    rhs2 = -(r**4 + 4 * r**3 + a * r * r)
    det = 20 * r - 30 * r
    b = (rhs1 - 30 * rhs2) / det
    c = (20 * r * rhs2 - r * rhs1) / det
    return a, b, c


def section_boundaries(grid, in_roots: bool = False
                       ) -> dict[str, list[tuple[tuple[float, float], tuple[float, float]]]]:
    """Boundary segments between leaf cells of a section grid, classified.

    "triangle": domain against the outside (the fold curve of the quartic
    discriminant); "zeros": the two passports differ in the rank of the
    origin critical value; "ties": any other passport change.  Segments
    come back in coefficient coordinates unless in_roots.
    """
    from .rootgrid import decode_key
    depth = grid.depth
    fine = grid.resolution << depth
    lo1 = float(grid.window.y1_lo)
    lo2 = float(grid.window.y2_lo)
    s1 = float(grid.window.y1_hi - grid.window.y1_lo) / fine
    s2 = float(grid.window.y2_hi - grid.window.y2_lo) / fine
    gamma_f = float(grid.gamma)

    def classify_pair(ka: int, kb: int) -> Optional[str]:
        if ka <= 0 and kb <= 0:
            return None
        if ka <= 0 or kb <= 0:
            return "triangle"
        if ka == kb:
            return None
        ra, rb = decode_key(ka), decode_key(kb)
        return "zeros" if ra[4] != rb[4] else "ties"

    def to_out(fi: float, fj: float) -> tuple[float, float]:
        y1 = lo1 + fi * s1
        y2 = lo2 + fj * s2
        if in_roots:
            return (y1, y2)
        S = 4.0 - y1 - y2
        Q = gamma_f / (y1 * y2)
        return (y1 * y2 + (y1 + y2) * S + Q, y1 * y2 * S + Q * (y1 + y2))

    # vertical and horizontal faces on the finest lattice
    cols: dict[int, list] = {}
    rows: dict[int, list] = {}
    for (d, i, j), k in grid.leaves.items():
        w = 1 << (depth - d)
        x0, y0 = i * w, j * w
        cols.setdefault(x0, []).append((y0, y0 + w, k, 0))
        cols.setdefault(x0 + w, []).append((y0, y0 + w, k, 1))
        rows.setdefault(y0, []).append((x0, x0 + w, k, 0))
        rows.setdefault(y0 + w, []).append((x0, x0 + w, k, 1))
    out: dict[str, list] = {"triangle": [], "ties": [], "zeros": []}
    for table, vertical in ((cols, True), (rows, False)):
        for coord, faces in table.items():
            highs = sorted(f for f in faces if f[3] == 1)
            lows = sorted(f for f in faces if f[3] == 0)
            li = 0
            for h0, h1, hk, _ in highs:
                while li < len(lows) and lows[li][1] <= h0:
                    li += 1
                m = li
                while m < len(lows) and lows[m][0] < h1:
                    cls = classify_pair(hk, lows[m][2])
                    if cls is not None:
                        a0, a1 = max(h0, lows[m][0]), min(h1, lows[m][1])
                        if vertical:
                            seg = (to_out(coord, a0), to_out(coord, a1))
                        else:
                            seg = (to_out(a0, coord), to_out(a1, coord))
                        out[cls].append(seg)
                    m += 1
    return out


def passports_present(gamma: RationalLike, resolution: int = 256,
                      depth: int = 6) -> set[tuple[int, ...]]:
    return scan_section(gamma, resolution=resolution, depth=depth).passports()


@dataclass(frozen=True)
class Threshold:
    lo: Fraction
    hi: Fraction
    below: tuple[int, tuple]     # signature for c slightly below
    above: tuple[int, tuple]     # signature for c slightly above
    description: str


@dataclass(frozen=True)
class BifurcationReport:
    lo: Fraction
    hi: Fraction
    tol: Fraction
    thresholds: tuple[Threshold, ...]
    warnings: tuple[str, ...] = ()
    samples: tuple[tuple[float, int], ...] = ()   # (gamma, component count)


def _describe(below, above) -> str:
    nb, pb = below
    na, pa = above
    from collections import Counter
    cb, ca = Counter(pb), Counter(pa)
    gained = sorted((cb - ca).elements())   # present below, absent above
    lost = sorted((ca - cb).elements())
    bits = ["components %d -> %d (descending c)" % (na, nb)]
    if lost:
        bits.append("lost %s" % ",".join("".join(map(str, p)) for p in lost))
    if gained:
        bits.append("gained %s" % ",".join("".join(map(str, p)) for p in gained))
    return "; ".join(bits)


def detect_bifurcations(lo: RationalLike, hi: RationalLike,
                        tol: RationalLike = Fraction(1, 10**4),
                        resolution: int = 128, depth: int = 6,
                        fine_resolution: int = 192, fine_depth: int = 7,
                        merge_radius: int = 16) -> BifurcationReport:
    """Locate every c where the section signature changes, to width tol.

    Recursive bisection over the signature (component count, passport
    multiset).  Brackets narrower than 32*tol are re-bisected at the fine
    scan parameters so newborn domains near a threshold are still seen.
    """
    lo, hi, tol = to_fraction(lo), to_fraction(hi), to_fraction(tol)
    if not (0 < lo < hi <= 1):
        raise ValueError("need 0 < lo < hi <= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if hi == 1:
        # at c = 1 the section is the single quadruple-root point and
        # carries no partition; sweep the open side of that fibre
        hi = 1 - tol / 4

    cache: dict[tuple[Fraction, int, int], tuple] = {}

    def sig(gamma: Fraction, res: int, dep: int):
        k = (gamma, res, dep)
        if k not in cache:
            cache[k] = scan_section(gamma, resolution=res, depth=dep,
                                    merge_radius=merge_radius,
                                    verify_reps=False).signature()
        return cache[k]

    coarse_floor = 32 * tol
    events: list[tuple[Fraction, Fraction, tuple, tuple]] = []

    def bisect(a: Fraction, b: Fraction, sa, sb, res: int, dep: int, floor: Fraction):
        if sa == sb:
            return
        if b - a <= floor:
            events.append((a, b, sa, sb))
            return
        mid = (a + b) / 2
        sm = sig(mid, res, dep)
        bisect(a, mid, sa, sm, res, dep, floor)
        bisect(mid, b, sm, sb, res, dep, floor)

    bisect(lo, hi, sig(lo, resolution, depth), sig(hi, resolution, depth),
           resolution, depth, coarse_floor)

    refined: list[Threshold] = []
    for a, b, _, _ in sorted(events):
        pad = min(coarse_floor, (b - a))
        fa = max(lo, a - pad)
        fb = min(hi, b + pad)
        sa = sig(fa, fine_resolution, fine_depth)
        sb = sig(fb, fine_resolution, fine_depth)
        if sa == sb:
            continue  # coarse phantom
        sub: list[tuple[Fraction, Fraction, tuple, tuple]] = []

        def bisect_fine(x: Fraction, y: Fraction, sx, sy):
            if sx == sy:
                return
            if y - x <= tol:
                sub.append((x, y, sx, sy))
                return
            m = (x + y) / 2
            sm = sig(m, fine_resolution, fine_depth)
            bisect_fine(x, m, sx, sm)
            bisect_fine(m, y, sm, sy)

        bisect_fine(fa, fb, sa, sb)
        for x, y, sx, sy in sub:
            refined.append(Threshold(x, y, sx, sy, _describe(sx, sy)))
    refined.sort(key=lambda t: t.lo)
    # collapse duplicates from overlapping padded brackets, then cluster
    # sub-events closer than 4*tol: a single geometric event can surface
    # as staggered signature changes when newborn domains cross the grid's
    # visibility threshold at slightly different c
    dedup: list[Threshold] = []
    for t in refined:
        if dedup and t.lo <= dedup[-1].hi:
            continue
        dedup.append(t)
    clustered: list[Threshold] = []
    for t in dedup:
        if clustered and t.lo - clustered[-1].hi < 4 * tol:
            prev = clustered[-1]
            clustered[-1] = Threshold(prev.lo, t.hi, prev.below, t.above,
                                      _describe(prev.below, t.above))
        else:
            clustered.append(t)
    warnings = []
    for u, v in zip(clustered, clustered[1:]):
        if v.lo - u.hi < 8 * tol:
            warnings.append(
                "thresholds near %.6f and %.6f are separated by less than "
                "8*tol; raise the resolution to keep them apart reliably"
                % (float(u.hi), float(v.lo)))
    samples = tuple(sorted((float(g), s[0]) for (g, _, _), s in cache.items()))
    return BifurcationReport(lo, hi, tol, tuple(clustered), tuple(warnings),
                             samples)
