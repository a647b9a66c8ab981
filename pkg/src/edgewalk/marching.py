"""Level-set contour extraction on a regular grid.

Classic marching squares with linear interpolation: the scalar field is
sampled at the nodes of a grid covering the domain, each crossing grid
edge gets one interpolated crossing point, and cell-local segments are
chained into polylines through shared grid edges.  Crossings are computed
once per grid edge, so chained polylines join exactly with no duplicate
or mismatched vertices.  Saddle cells are disambiguated by the mean of
the four corner values.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InputError
from .geometry import Domain, Point2

# segment end points per cell case, named by cell edge; saddle cases 5 and
# 10 are handled separately
_CASE_SEGMENTS: dict[int, list[tuple[str, str]]] = {
    1: [("left", "bottom")],
    2: [("bottom", "right")],
    3: [("left", "right")],
    4: [("right", "top")],
    6: [("bottom", "top")],
    7: [("left", "top")],
    8: [("top", "left")],
    9: [("bottom", "top")],
    11: [("right", "top")],
    12: [("left", "right")],
    13: [("bottom", "right")],
    14: [("left", "bottom")],
}


def node_axes(domain: Domain, cell: float) -> tuple[np.ndarray, np.ndarray]:
    """Grid node coordinates covering the domain at spacing at most cell."""
    if not (cell > 0.0 and math.isfinite(cell)):
        raise InputError(f"cell must be positive and finite, got {cell}")
    nx = max(1, math.ceil(domain.width / cell - 1e-9))
    ny = max(1, math.ceil(domain.height / cell - 1e-9))
    xs = np.linspace(domain.x_min, domain.x_max, nx + 1)
    ys = np.linspace(domain.y_min, domain.y_max, ny + 1)
    return xs, ys


def _edge_key(side: str, i: int, j: int) -> tuple[str, int, int]:
    if side == "bottom":
        return ("H", i, j)
    if side == "top":
        return ("H", i, j + 1)
    if side == "left":
        return ("V", i, j)
    return ("V", i + 1, j)


def marching_squares(fn, threshold: float, domain: Domain, cell: float) -> list[np.ndarray]:
    """Polylines of the level set fn == threshold inside the domain.

    fn must broadcast over numpy arrays.  Returns each connected contour
    piece as an (n, 2) float array; closed loops repeat their first vertex
    at the end, open pieces start and end on the domain border.
    """
    xs, ys = node_axes(domain, cell)
    values = np.asarray(fn(xs[None, :], ys[:, None]), dtype=float)
    if values.shape != (ys.size, xs.size):
        raise InputError("field function did not broadcast to the grid shape")
    inside = values < threshold

    crossings: dict[tuple[str, int, int], Point2] = {}
    hj, hi = np.nonzero(inside[:, :-1] != inside[:, 1:])
    for j, i in zip(hj.tolist(), hi.tolist()):
        v0 = values[j, i]
        v1 = values[j, i + 1]
        t = (threshold - v0) / (v1 - v0)
        crossings[("H", i, j)] = Point2(xs[i] + t * (xs[i + 1] - xs[i]), ys[j])
    vj, vi = np.nonzero(inside[:-1, :] != inside[1:, :])
    for j, i in zip(vj.tolist(), vi.tolist()):
        v0 = values[j, i]
        v1 = values[j + 1, i]
        t = (threshold - v0) / (v1 - v0)
        crossings[("V", i, j)] = Point2(xs[i], ys[j] + t * (ys[j + 1] - ys[j]))

    b = inside.astype(np.int8)
    case = (
        b[:-1, :-1]
        | (b[:-1, 1:] << 1)
        | (b[1:, 1:] << 2)
        | (b[1:, :-1] << 3)
    )
    adjacency: dict[tuple[str, int, int], list[tuple[str, int, int]]] = {}
    cj, ci = np.nonzero((case != 0) & (case != 15))
    for j, i in zip(cj.tolist(), ci.tolist()):
        k = int(case[j, i])
        if k == 5 or k == 10:
            center_inside = (
                values[j, i]
                + values[j, i + 1]
                + values[j + 1, i]
                + values[j + 1, i + 1]
            ) / 4.0 < threshold
            # connect so the two corners matching the center stay joined
            if (k == 5) == center_inside:
                segs = [("bottom", "right"), ("top", "left")]
            else:
                segs = [("left", "bottom"), ("right", "top")]
        else:
            segs = _CASE_SEGMENTS[k]
        for a, bside in segs:
            ka = _edge_key(a, i, j)
            kb = _edge_key(bside, i, j)
            adjacency.setdefault(ka, []).append(kb)
            adjacency.setdefault(kb, []).append(ka)

    polylines: list[np.ndarray] = []
    consumed: set[frozenset] = set()

    def walk_chain(start: tuple[str, int, int]) -> list[tuple[str, int, int]]:
        chain = [start]
        cur = start
        while True:
            nxt = None
            for nb in adjacency[cur]:
                link = frozenset((cur, nb))
                if link not in consumed:
                    nxt = nb
                    consumed.add(link)
                    break
            if nxt is None:
                return chain
            chain.append(nxt)
            cur = nxt

    ordered_keys = sorted(adjacency)
    # open chains first, from their degree-one ends
    for key in ordered_keys:
        if len(adjacency[key]) == 1:
            link = frozenset((key, adjacency[key][0]))
            if link not in consumed:
                chain = walk_chain(key)
                polylines.append(
                    np.array([crossings[e] for e in chain], dtype=float)
                )
    # remaining segments belong to closed loops; the walk returns to its
    # start, repeating it as the final vertex
    for key in ordered_keys:
        for nb in adjacency[key]:
            if frozenset((key, nb)) not in consumed:
                chain = walk_chain(key)
                polylines.append(
                    np.array([crossings[e] for e in chain], dtype=float)
                )
                break
    return polylines


def polyline_length(poly: np.ndarray) -> float:
    p = np.asarray(poly, dtype=float)
    if len(p) < 2:
        return 0.0
    return float(np.sqrt(((p[1:] - p[:-1]) ** 2).sum(axis=1)).sum())
