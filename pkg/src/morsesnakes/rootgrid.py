"""Quadtree scan of the degree-6 section in root coordinates.

At a fixed constant coefficient gamma, quartics with four distinct real
negative roots form a needle-thin pocket in the (a, b) coefficient plane
(everything degenerates toward the quadruple-root corner), far too thin
to rasterize directly.  Parametrizing by the two smallest root
magnitudes (y1, y2) unfolds the pocket into a fat curvilinear triangle:
with the root sum and product pinned, the remaining two magnitudes solve
a quadratic, so (a, b) are rational in (y1, y2) and every critical value
of the integrated polynomial lives in Q(sqrt(E)).  Cell passports are
therefore decided exactly; floats only prefilter.

Cells are refined where neighbors disagree, components are flood-filled
over the leaf quadtree, and same-passport fragments separated by
sub-cell pinches are joined by a probed bridge test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_REL = 1e-12  # float sign-trust threshold, ~100x above the error bound

# ranks of 5 values pack into base-8 codes; 0 = tie on a curve, -1 = outside
_PERM_BASE = (1, 8, 64, 512, 4096)


def encode_ranks(ranks) -> int:
    return int(sum(r * b for r, b in zip(ranks, _PERM_BASE)))


def decode_key(key: int) -> tuple[int, ...]:
    out = []
    for _ in range(5):
        out.append(key % 8)
        key //= 8
    return tuple(out)


def batch_keys(y1: np.ndarray, y2: np.ndarray, gamma_f: float) -> np.ndarray:
    """Vectorized cell keys: -1 outside, 0 unsure/tie, else passport code."""
    with np.errstate(all="ignore"):
        S = 4.0 - y1 - y2
        Q = gamma_f / (y1 * y2)
        E = S * S - 4.0 * Q
        ok = (y1 > 0) & (y2 > y1) & (S > 0) & (E > 0)
        sq = np.sqrt(np.where(ok, E, 1.0))
        y3 = (S - sq) / 2.0
        ok &= y2 < y3
        # margin band around the validity boundary goes to the exact path
        margin = _REL * (S * S + 4.0 * np.abs(Q))
        unsure = ok & ((E < margin) | ((y3 - y2) < _REL * (np.abs(y3) + y2)))
        ok &= ~unsure
        a = y1 * y2 + (y1 + y2) * S + Q
        b = y1 * y2 * S + Q * (y1 + y2)

        def pv(x):
            return x * x * ((((10.0 * x + 48.0) * x + 15.0 * a) * x + 20.0 * b) * x
                            + 30.0 * gamma_f)

        y4 = (S + sq) / 2.0
        vals = np.stack([pv(-y4), pv(-y3), pv(-y2), pv(-y1),
                         np.zeros_like(y1)], axis=-1)
        scale = np.abs(vals).max(axis=-1) + 1e-300
        order = np.argsort(vals, axis=-1, kind="stable")
        svals = np.take_along_axis(vals, order, axis=-1)
        gapmin = np.diff(svals, axis=-1).min(axis=-1)
        unsure |= ok & (gapmin < _REL * scale)
        ranks = np.empty_like(order)
        np.put_along_axis(ranks, order,
                          np.broadcast_to(np.arange(1, 6), order.shape), axis=-1)
        key = (ranks * np.array(_PERM_BASE)).sum(axis=-1).astype(np.int32)
    key = np.where(ok & ~unsure, key, np.where(unsure, 0, -1))
    return key


def point_key_float(y1: float, y2: float, gamma_f: float) -> int:
    """Scalar float twin of batch_keys: -1 outside, 0 unsure, else code."""
    if y1 <= 0 or y2 <= y1:
        return -1
    S = 4.0 - y1 - y2
    if S <= 0:
        return -1
    Q = gamma_f / (y1 * y2)
    E = S * S - 4.0 * Q
    margin = _REL * (S * S + 4.0 * abs(Q))
    if E <= margin:
        return -1 if E <= 0 else 0
    sq = E ** 0.5
    y3 = (S - sq) / 2.0
    if y2 >= y3:
        return -1
    if (y3 - y2) < _REL * (abs(y3) + y2):
        return 0
    a = y1 * y2 + (y1 + y2) * S + Q
    b = y1 * y2 * S + Q * (y1 + y2)

    def pv(x):
        return x * x * ((((10.0 * x + 48.0) * x + 15.0 * a) * x + 20.0 * b) * x
                        + 30.0 * gamma_f)

    y4 = (S + sq) / 2.0
    vals = (pv(-y4), pv(-y3), pv(-y2), pv(-y1), 0.0)
    scale = max(abs(v) for v in vals) + 1e-300
    ranks = [1, 1, 1, 1, 1]
    for i in range(5):
        for j in range(i + 1, 5):
            d = vals[i] - vals[j]
            if abs(d) < _REL * scale:
                return 0
            if d > 0:
                ranks[i] += 1
            else:
                ranks[j] += 1
    return encode_ranks(ranks)


_LD = np.longdouble
_LD_OK = np.finfo(_LD).eps < 1e-18   # true 80-bit extended precision
_REL_LD = 1e-16


def point_key_longdouble(y1: float, y2: float, gamma_f: float) -> int:
    """Extended-precision middle tier between float64 and exact."""
    y1, y2, g = _LD(y1), _LD(y2), _LD(gamma_f)
    if y1 <= 0 or y2 <= y1:
        return -1
    S = 4 - y1 - y2
    if S <= 0:
        return -1
    Q = g / (y1 * y2)
    E = S * S - 4 * Q
    margin = _REL_LD * float(S * S + 4 * abs(Q))
    if E <= margin:
        return -1 if E <= 0 else 0
    sq = np.sqrt(E)
    y3 = (S - sq) / 2
    if y2 >= y3:
        return -1
    if (y3 - y2) < _REL_LD * (abs(y3) + y2):
        return 0
    a = y1 * y2 + (y1 + y2) * S + Q
    b = y1 * y2 * S + Q * (y1 + y2)

    def pv(x):
        return x * x * ((((10 * x + 48) * x + 15 * a) * x + 20 * b) * x + 30 * g)

    y4 = (S + sq) / 2
    vals = (pv(-y4), pv(-y3), pv(-y2), pv(-y1), _LD(0))
    scale = max(abs(v) for v in vals) + _LD(1e-300)
    ranks = [1, 1, 1, 1, 1]
    for i in range(5):
        for j in range(i + 1, 5):
            d = vals[i] - vals[j]
            if abs(d) < _REL_LD * scale:
                return 0
            if d > 0:
                ranks[i] += 1
            else:
                ranks[j] += 1
    return encode_ranks(ranks)


def exact_key(y1: Fraction, y2: Fraction, gamma: Fraction) -> int:
    """Exact cell key at a rational point: -1 outside, 0 on a curve, else code."""
    q1, q2, g = _Q(y1.numerator, y1.denominator), _Q(y2.numerator, y2.denominator), \
        _Q(gamma.numerator, gamma.denominator)
    if q1 <= 0 or q2 <= q1:
        return -1
    S = 4 - q1 - q2
    if S <= 0:
        return -1
    Q = g / (q1 * q2)
    E = S * S - 4 * Q
    if E <= 0:
        return -1
    t = S - 2 * q2
    if t <= 0 or t * t <= E:
        return -1
    a = q1 * q2 + (q1 + q2) * S + Q
    b = q1 * q2 * S + Q * (q1 + q2)

    def pv(x):
        # 60 * p(x) at rational x
        return x * x * ((((10 * x + 48) * x + 15 * a) * x + 20 * b) * x + 30 * g)

    v2, v1 = pv(-q2), pv(-q1)
    # values at -(S +- sqrt(E))/2 as u + w*sqrt(E)
    half = _Q(1, 2)

    def pq(e):
        xu, xv = -S * half, e * half
        u, v = _Q(10), _Q(0)
        for const in (48, 15 * a, 20 * b, 30 * g):
            u, v = u * xu + v * xv * E, u * xv + v * xu
            u += const
        xxu, xxv = xu * xu + xv * xv * E, 2 * xu * xv
        return u * xxu + v * xxv * E, u * xxv + v * xxu

    v3u, v3v = pq(1)    # at -y3, y3 = (S - sqrt(E))/2
    v4u, v4v = pq(-1)   # at -y4
    vals = [(v4u, v4v), (v3u, v3v), (v2, _Q(0)), (v1, _Q(0)), (_Q(0), _Q(0))]
    ranks = [1] * 5
    for i in range(5):
        ui, vi = vals[i]
        for j in range(i + 1, 5):
            s = _quad_sign(ui - vals[j][0], vi - vals[j][1], E)
            if s == 0:
                return 0
            if s > 0:
                ranks[i] += 1
            else:
                ranks[j] += 1
    return encode_ranks(ranks)


def adjacent_swap(ka: int, kb: int) -> bool:
    """True when two passport codes differ by one swap of adjacent ranks.

    Exactly such pairs can share a boundary arc: crossing a single curve
    exchanges two critical values that agree on it, hence neighboring
    ranks.  Any other pair needs at least one domain in between, because
    one transposition is never the product of two distinct ones.
    """
    if ka <= 0 or kb <= 0 or ka == kb:
        return False
    ra, rb = decode_key(ka), decode_key(kb)
    diff = [i for i in range(5) if ra[i] != rb[i]]
    if len(diff) != 2:
        return False
    i, j = diff
    return ra[i] == rb[j] and ra[j] == rb[i] and abs(ra[i] - ra[j]) == 1


def _quad_sign(u, v, E) -> int:
    """Sign of u + v*sqrt(E) for rational u, v and E > 0."""
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return (v > 0) - (v < 0)
    su = 1 if u > 0 else -1
    sv = 1 if v > 0 else -1
    if su == sv:
        return su
    l, r = u * u, v * v * E
    if l == r:
        return 0
    return su if l > r else sv


def roots_and_coeffs(y1: Fraction, y2: Fraction, gamma: Fraction
                     ) -> Optional[tuple[Fraction, Fraction]]:
    """(a, b) of the quartic with smallest root magnitudes y1, y2; None if
    the point is not a valid interior configuration."""
    if exact_key(y1, y2, gamma) <= 0:
        return None
    S = 4 - y1 - y2
    Q = gamma / (y1 * y2)
    a = y1 * y2 + (y1 + y2) * S + Q
    b = y1 * y2 * S + Q * (y1 + y2)
    return a, b


@dataclass(frozen=True)
class Window:
    y1_lo: Fraction
    y1_hi: Fraction
    y2_lo: Fraction
    y2_hi: Fraction

    def span(self) -> tuple[Fraction, Fraction]:
        return self.y1_hi - self.y1_lo, self.y2_hi - self.y2_lo


def locate_window(gamma_f: float, probe: int = 96) -> Window:
    """Bounding box of the valid root-space region, padded."""
    lam = np.linspace(1e-6, max(1e-5, (1 - np.sqrt(gamma_f)) * (1 - 1e-6)), 24)
    s = np.sqrt(lam)
    t = np.sqrt(np.maximum(1 - gamma_f / (1 - lam), 0.0))
    seeds1, seeds2 = 1 - t, 1 - s
    lo1, hi1 = seeds1.min(), seeds1.max()
    lo2, hi2 = seeds2.min(), seeds2.max()
    pad1 = max(0.05, (hi1 - lo1) * 0.5)
    pad2 = max(0.05, (hi2 - lo2) * 0.5)
    lo1, hi1 = max(lo1 - pad1, 1e-9), hi1 + pad1
    lo2, hi2 = max(lo2 - pad2, 1e-9), hi2 + pad2
    for _ in range(24):
        g1 = np.linspace(lo1, hi1, probe)
        g2 = np.linspace(lo2, hi2, probe)
        Y1, Y2 = np.meshgrid(g1, g2, indexing="ij")
        keys = batch_keys(Y1.ravel(), Y2.ravel(), gamma_f).reshape(probe, probe)
        hit = keys >= 0
        if not hit.any():
            lo1, hi1 = lo1 - (hi1 - lo1) * 0.5, hi1 + (hi1 - lo1) * 0.5
            lo2, hi2 = lo2 - (hi2 - lo2) * 0.5, hi2 + (hi2 - lo2) * 0.5
            lo1, lo2 = max(lo1, 1e-9), max(lo2, 1e-9)
            continue
        i_hit = np.where(hit.any(axis=1))[0]
        j_hit = np.where(hit.any(axis=0))[0]
        st1 = (hi1 - lo1) / (probe - 1)
        st2 = (hi2 - lo2) / (probe - 1)
        grow = False
        if i_hit[0] == 0:
            lo1 = max(lo1 - probe * st1 * 0.25, 1e-9); grow = True
        if i_hit[-1] == probe - 1:
            hi1 += probe * st1 * 0.25; grow = True
        if j_hit[0] == 0:
            lo2 = max(lo2 - probe * st2 * 0.25, 1e-9); grow = True
        if j_hit[-1] == probe - 1:
            hi2 += probe * st2 * 0.25; grow = True
        if grow:
            continue
        nlo1 = lo1 + (i_hit[0] - 2) * st1
        nhi1 = lo1 + (i_hit[-1] + 3) * st1
        nlo2 = lo2 + (j_hit[0] - 2) * st2
        nhi2 = lo2 + (j_hit[-1] + 3) * st2
        tight = (nhi1 - nlo1) > 0.8 * (hi1 - lo1) and (nhi2 - nlo2) > 0.8 * (hi2 - lo2)
        lo1, hi1 = max(nlo1, 1e-9), nhi1
        lo2, hi2 = max(nlo2, 1e-9), nhi2
        if tight:
            break
    f = lambda x: Fraction(float(x)).limit_denominator(1 << 24)
    return Window(f(lo1), f(hi1), f(lo2), f(hi2))


@dataclass
class Component:
    key: int
    passport: tuple[int, ...]
    cells: int                      # area in finest-lattice cell units
    leaves: list                    # [(depth, i, j)]
    first_fine: tuple[int, int]     # scanline-ordering anchor
    rep: tuple[Fraction, Fraction]  # center of the largest leaf (y1, y2)


class SectionGrid:
    """Quadtree of cell keys over a window at one gamma."""

    def __init__(self, gamma: Fraction, resolution: int = 256, depth: int = 6,
                 window: Optional[Window] = None):
        if resolution < 16:
            raise ValueError("resolution too small")
        self.gamma = Fraction(gamma)
        self.gamma_f = float(self.gamma)
        self.resolution = resolution
        self.depth = depth
        self.window = window or locate_window(self.gamma_f)
        self._keys: dict[tuple[int, int, int], int] = {}
        self.leaves: dict[tuple[int, int, int], int] = {}
        self.exact_evals = 0
        self._wf = (float(self.window.y1_lo),
                    float(self.window.y1_hi - self.window.y1_lo),
                    float(self.window.y2_lo),
                    float(self.window.y2_hi - self.window.y2_lo))
        self._build()

    # -- coordinates ----------------------------------------------------

    def center(self, d: int, i: int, j: int) -> tuple[Fraction, Fraction]:
        n = self.resolution << d
        w1, w2 = self.window.span()
        return (self.window.y1_lo + w1 * Fraction(2 * i + 1, 2 * n),
                self.window.y2_lo + w2 * Fraction(2 * j + 1, 2 * n))

    def center_float(self, d: int, i: int, j: int) -> tuple[float, float]:
        n = 2 * (self.resolution << d)
        lo1, w1, lo2, w2 = self._wf
        return (lo1 + w1 * (2 * i + 1) / n, lo2 + w2 * (2 * j + 1) / n)

    def key_of_point(self, y1: float, y2: float) -> int:
        """Key at an arbitrary float point; tiered fallback when unsure."""
        k = point_key_float(y1, y2, self.gamma_f)
        if k != 0:
            return k
        if _LD_OK:
            k = point_key_longdouble(y1, y2, self.gamma_f)
            if k != 0:
                return k
        self.exact_evals += 1
        return exact_key(Fraction(y1), Fraction(y2), self.gamma)

    # -- construction ---------------------------------------------------

    def _eval_batch(self, cells: list[tuple[int, int, int]]) -> None:
        todo = [c for c in cells if c not in self._keys]
        if not todo:
            return
        y1 = np.array([self.center_float(*c)[0] for c in todo])
        y2 = np.array([self.center_float(*c)[1] for c in todo])
        keys = batch_keys(y1, y2, self.gamma_f)
        # cells the float pass cannot decide sit within ~1e-12 of a curve;
        # they are boundary skin for the component decomposition, and the
        # probing paths re-resolve points exactly wherever it matters
        keys = np.where(keys == 0, -2, keys)
        store = self._keys
        for c, k in zip(todo, keys.tolist()):
            store[c] = k

    def _key(self, c: tuple[int, int, int]) -> int:
        if c not in self._keys:
            self._eval_batch([c])
        return self._keys[c]

    def _build(self) -> None:
        n = self.resolution
        base = [(0, i, j) for i in range(n) for j in range(n)]
        self._eval_batch(base)
        self.leaves = {c: self._keys[c] for c in base}
        for d in range(self.depth):
            side = n << d
            level = [(c, k) for c, k in self.leaves.items() if c[0] == d]
            wanted = []
            for (dd, i, j), k in level:
                for ni, nj in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                    if 0 <= ni < side and 0 <= nj < side:
                        wanted.append((d, ni, nj))
            self._eval_batch(wanted)
            children = []
            swap_cache: dict[tuple[int, int], bool] = {}
            for (dd, i, j), k in level:
                if k == -2:
                    split = True        # sits on a curve
                    interesting = True
                else:
                    others = set()
                    for ni, nj in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                        if 0 <= ni < side and 0 <= nj < side:
                            nk = self._keys[(d, ni, nj)]
                            if nk != k:
                                others.add(nk)
                    if not others:
                        continue
                    interesting = k > 0 or any(nk > 0 for nk in others)
                    split = True
                    if k > 0 and len(others) == 1:
                        nk = next(iter(others))
                        pair = (min(k, nk), max(k, nk))
                        ok = swap_cache.get(pair)
                        if ok is None:
                            ok = adjacent_swap(k, nk)
                            swap_cache[pair] = ok
                        if ok:
                            # a plain two-domain arc: nothing can hide here
                            split = False
                if split and interesting:
                    del self.leaves[(dd, i, j)]
                    for ci in (2 * i, 2 * i + 1):
                        for cj in (2 * j, 2 * j + 1):
                            children.append((dd + 1, ci, cj))
            self._eval_batch(children)
            for c in children:
                self.leaves[c] = self._keys[c]

    # -- components -----------------------------------------------------

    def components(self) -> list[Component]:
        live = {pos: k for pos, k in self.leaves.items() if k > 0}
        parent = {pos: pos for pos in live}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        depth = self.depth
        # interval adjacency on the finest lattice, per shared column / row
        by_col: dict[int, list] = {}
        by_row: dict[int, list] = {}
        for (d, i, j) in live:
            w = 1 << (depth - d)
            x0, y0 = i * w, j * w
            by_col.setdefault(x0, []).append((y0, y0 + w, (d, i, j), 0))       # left face
            by_col.setdefault(x0 + w, []).append((y0, y0 + w, (d, i, j), 1))   # right face
            by_row.setdefault(y0, []).append((x0, x0 + w, (d, i, j), 0))
            by_row.setdefault(y0 + w, []).append((x0, x0 + w, (d, i, j), 1))
        for table in (by_col, by_row):
            for edges in table.values():
                rights = sorted(e for e in edges if e[3] == 1)
                lefts = sorted(e for e in edges if e[3] == 0)
                li = 0
                for r0, r1, rc, _ in rights:
                    while li < len(lefts) and lefts[li][1] <= r0:
                        li += 1
                    m = li
                    while m < len(lefts) and lefts[m][0] < r1:
                        if live[lefts[m][2]] == live[rc]:
                            union(lefts[m][2], rc)
                        m += 1
        groups: dict[tuple, list] = {}
        for pos in live:
            groups.setdefault(find(pos), []).append(pos)
        comps = []
        for members in groups.values():
            key = live[members[0]]
            area = 0
            first = None
            best = None  # (leaf width, -fi, -fj)
            for (d, i, j) in members:
                w = 1 << (depth - d)
                area += w * w
                anchor = (i * w, j * w)
                if first is None or anchor < first:
                    first = anchor
                cand = (w, -i * w, -j * w)
                if best is None or cand > best[0]:
                    best = (cand, (d, i, j))
            rep = self.center(*best[1])
            comps.append(Component(key, decode_key(key), area, members,
                                   first, rep))
        comps.sort(key=lambda c: c.first_fine)
        return comps

    # -- fragment bridging ------------------------------------------------

    def _fine_to_y(self, fx: float, fy: float) -> tuple[float, float]:
        fine = self.resolution << self.depth
        sx = float(self.window.y1_hi - self.window.y1_lo) / fine
        sy = float(self.window.y2_hi - self.window.y2_lo) / fine
        return (float(self.window.y1_lo) + fx * sx,
                float(self.window.y2_lo) + fy * sy)

    def key_at_fine(self, fx: float, fy: float) -> int:
        return self.key_of_point(*self._fine_to_y(fx, fy))

    def bridge(self, pa: tuple[float, float], pb: tuple[float, float],
               key: int) -> bool:
        """Certify a same-passport chain near the chord pa -> pb (fine coords).

        Walks chord samples a quarter cell apart.  At each sample the
        target passport is sought on the perpendicular transversal: first
        at quick offsets around the previous hit, then by bisecting
        between flanking cells of different passports, which finds strips
        far thinner than a cell.  Consecutive hits must stay within one
        cell of each other, so the chain cannot silently hop a gap.
        """
        ax, ay = pa
        bx, by = pb
        dist = max(abs(bx - ax), abs(by - ay), 1e-9)
        steps = max(4, int(dist * 4) + 1)
        px, py = -(by - ay) / dist, (bx - ax) / dist

        def key_at(cx, cy, off):
            return self.key_at_fine(cx + px * off, cy + py * off)

        def hunt(cx, cy, lo, klo, hi, khi, depth=16):
            # target strip strictly between two off-passport flanks
            if depth == 0:
                return None
            mid = (lo + hi) / 2
            km = key_at(cx, cy, mid)
            if km == key:
                return mid
            found = None
            if km != klo:
                found = hunt(cx, cy, lo, klo, mid, km, depth - 1)
            if found is None and km != khi:
                found = hunt(cx, cy, mid, km, hi, khi, depth - 1)
            return found

        def find_off(cx, cy, prev):
            for doff in (0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0):
                off = prev + doff
                if key_at(cx, cy, off) == key:
                    return off
            # flank scan outward, then bisect every passport change
            offs = [prev + s * d for d in (1.5, 2.0, 3.0, 4.0, 6.0)
                    for s in (1, -1)]
            offs = sorted(set(offs + [prev + d for d in
                                      (0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0)]))
            keys = [key_at(cx, cy, o) for o in offs]
            for i in range(len(offs) - 1):
                if keys[i] == key:
                    return offs[i]
                if keys[i] != keys[i + 1]:
                    got = hunt(cx, cy, offs[i], keys[i], offs[i + 1], keys[i + 1])
                    if got is not None:
                        return got
            if keys and keys[-1] == key:
                return offs[-1]
            return None

        prev_off = 0.0
        have_prev = False
        for t in range(steps + 1):
            cx = ax + (bx - ax) * t / steps
            cy = ay + (by - ay) * t / steps
            off = find_off(cx, cy, prev_off)
            if off is None:
                return False
            if have_prev and abs(off - prev_off) > 1.0:
                return False
            prev_off, have_prev = off, True
        return True

    def merge_fragments(self, comps: list[Component],
                        radius_cells: int = 6) -> list[Component]:
        """Join same-passport components separated by sub-cell pinches.

        radius_cells is in base-resolution cells.  Candidate pairs come
        from refined leaves within the radius; a pair merges only when
        bridge() certifies an on-passport chain between them.
        """
        if len(comps) < 2:
            return comps
        depth = self.depth
        radius = radius_cells << depth

        def rect_of(leaf):
            d, i, j = leaf
            w = 1 << (depth - d)
            return (i * w, j * w, (i + 1) * w, (j + 1) * w)

        rects = []
        boxes = []
        for comp in comps:
            rs = [rect_of(l) for l in comp.leaves]
            rects.append(rs)
            boxes.append((min(r[0] for r in rs), min(r[1] for r in rs),
                          max(r[2] for r in rs), max(r[3] for r in rs)))

        def box_gap(ba, bb):
            dx = max(bb[0] - ba[2], ba[0] - bb[2], 0)
            dy = max(bb[1] - ba[3], ba[1] - bb[3], 0)
            return max(dx, dy)

        candidates = []
        for ca in range(len(comps)):
            for cb in range(ca + 1, len(comps)):
                if comps[ca].key != comps[cb].key:
                    continue
                g = box_gap(boxes[ca], boxes[cb])
                if g <= radius:
                    candidates.append((g, ca, cb))
        candidates.sort()

        def near(rs, box, pad):
            out = [r for r in rs
                   if r[2] >= box[0] - pad and r[0] <= box[2] + pad
                   and r[3] >= box[1] - pad and r[1] <= box[3] + pad]
            return out or rs

        def precise_gap(ca, cb):
            ra_all = near(rects[ca], boxes[cb], radius)
            rb_all = near(rects[cb], boxes[ca], radius)
            if len(ra_all) * len(rb_all) > 250_000:
                big = 1 << max(depth - 2, 0)
                ra_all = [r for r in ra_all if r[2] - r[0] >= big] or ra_all[:500]
                rb_all = [r for r in rb_all if r[2] - r[0] >= big] or rb_all[:500]
            best = None
            for ra in ra_all:
                for rb in rb_all:
                    dx = max(rb[0] - ra[2], ra[0] - rb[2], 0)
                    dy = max(rb[1] - ra[3], ra[1] - rb[3], 0)
                    g = max(dx, dy)
                    if best is not None and g >= best[0]:
                        continue
                    pa = (min(max((rb[0] + rb[2]) / 2, ra[0]), ra[2]),
                          min(max((rb[1] + rb[3]) / 2, ra[1]), ra[3]))
                    pb = (min(max((ra[0] + ra[2]) / 2, rb[0]), rb[2]),
                          min(max((ra[1] + ra[3]) / 2, rb[1]), rb[3]))
                    best = (g, pa, pb)
            return best

        parent = list(range(len(comps)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        # nearest pairs first; union early so chained fragments skip the
        # expensive precise-gap and bridge work
        for g0, ca, cb in candidates:
            if find(ca) == find(cb):
                continue
            best = precise_gap(ca, cb)
            if best is None or best[0] > radius:
                continue
            _, pa, pb = best
            if self.bridge(pa, pb, comps[ca].key):
                parent[find(ca)] = find(cb)
        groups: dict[int, list[Component]] = {}
        for ci, comp in enumerate(comps):
            groups.setdefault(find(ci), []).append(comp)
        out = []
        for members in groups.values():
            head = members[0]
            for other in members[1:]:
                head.leaves.extend(other.leaves)
                head.cells += other.cells
                head.first_fine = min(head.first_fine, other.first_fine)
            if len(members) > 1:
                best = max(head.leaves, key=lambda l: (-l[0], -l[1], -l[2]))
                head.rep = self.center(*best)
            out.append(head)
        out.sort(key=lambda c: c.first_fine)
        return out
