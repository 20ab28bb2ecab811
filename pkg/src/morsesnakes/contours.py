"""Marching squares over a sign grid, producing joined polylines."""

from __future__ import annotations

from typing import Callable, Sequence


def _interp(x0: float, x1: float, v0: float, v1: float) -> float:
    if v0 == v1:
        return 0.5 * (x0 + x1)
    t = v0 / (v0 - v1)
    t = min(max(t, 0.0), 1.0)
    return x0 + (x1 - x0) * t


def marching_squares(values: Sequence[Sequence[float]],
                     xs: Sequence[float], ys: Sequence[float]) -> list[list[tuple[float, float]]]:
    """Zero-level polylines of a node-value grid values[i][j] at (xs[i], ys[j]).

    Nodes with value >= 0 count as positive.  Segments are linearly
    interpolated per cell and chained into polylines.
    """
    nx, ny = len(xs), len(ys)
    segments = []
    for i in range(nx - 1):
        for j in range(ny - 1):
            v = (values[i][j], values[i + 1][j], values[i + 1][j + 1], values[i][j + 1])
            corner = [(xs[i], ys[j]), (xs[i + 1], ys[j]),
                      (xs[i + 1], ys[j + 1]), (xs[i], ys[j + 1])]
            case = sum(1 << k for k in range(4) if v[k] >= 0)
            if case in (0, 15):
                continue
            edges = {
                0: _edge_point(corner[0], corner[1], v[0], v[1]),
                1: _edge_point(corner[1], corner[2], v[1], v[2]),
                2: _edge_point(corner[3], corner[2], v[3], v[2]),
                3: _edge_point(corner[0], corner[3], v[0], v[3]),
            }
            for e1, e2 in _CASES[case]:
                segments.append((edges[e1], edges[e2]))
    return _chain(segments)


def _edge_point(p0, p1, v0, v1):
    return (_interp(p0[0], p1[0], v0, v1), _interp(p0[1], p1[1], v0, v1))


# segment table by corner-sign case; ambiguous saddles split arbitrarily
_CASES = {
    1: [(3, 0)], 2: [(0, 1)], 3: [(3, 1)], 4: [(1, 2)],
    5: [(3, 2), (0, 1)], 6: [(0, 2)], 7: [(3, 2)],
    8: [(2, 3)], 9: [(0, 2)], 10: [(0, 3), (1, 2)],
    11: [(1, 2)], 12: [(1, 3)], 13: [(0, 1)], 14: [(0, 3)],
}


def _chain(segments) -> list[list[tuple[float, float]]]:
    def key(p):
        return (round(p[0], 9), round(p[1], 9))

    by_end: dict = {}
    for si, (a, b) in enumerate(segments):
        by_end.setdefault(key(a), []).append(si)
        by_end.setdefault(key(b), []).append(si)
    used = [False] * len(segments)
    lines = []
    for start in range(len(segments)):
        if used[start]:
            continue
        used[start] = True
        a, b = segments[start]
        line = [a, b]
        for head in (1, 0):
            while True:
                tip = key(line[-1] if head else line[0])
                nxt = None
                for si in by_end.get(tip, ()):
                    if not used[si]:
                        nxt = si
                        break
                if nxt is None:
                    break
                used[nxt] = True
                p, q = segments[nxt]
                tail = q if key(p) == tip else p
                if head:
                    line.append(tail)
                else:
                    line.insert(0, tail)
        lines.append(line)
    return lines


def sign_grid_contours(f: Callable[[float, float], float],
                       x0: float, x1: float, y0: float, y1: float,
                       resolution: int) -> list[list[tuple[float, float]]]:
    xs = [x0 + (x1 - x0) * i / resolution for i in range(resolution + 1)]
    ys = [y0 + (y1 - y0) * j / resolution for j in range(resolution + 1)]
    vals = [[f(x, y) for y in ys] for x in xs]
    return marching_squares(vals, xs, ys)
