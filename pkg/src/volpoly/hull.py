"""Exact convex hull volume and vertex reduction for integer point sets.

Backend selection happens at import: the compiled ``_hullc`` kernel is used
when it was built and the coordinates are small enough for int64
arithmetic, otherwise the pure-Python kernel runs on unbounded ints.  Set
``VOLPOLY_BACKEND=python`` to force the fallback.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import factorial
from typing import Sequence

from . import _hull_py

try:
    import numpy as np

    from . import _hullc
except ImportError:  # extension not built
    _hullc = None

_forced = os.environ.get("VOLPOLY_BACKEND", "auto").lower()
HAVE_COMPILED = _hullc is not None
BACKEND = "python" if _forced == "python" or not HAVE_COMPILED else "compiled"

_INT64_HEADROOM = 2**62


def fits_int64(d: int, coord_range: int) -> bool:
    """Whether the compiled kernel is overflow-safe.

    Facet normals are ``(d-1)!``-term sums of products of coordinate
    differences; the orientation test multiplies them by a sum of ``d + 1``
    points.  ``2 (d+1)! R^d`` bounds every intermediate.
    """
    return 2 * factorial(d + 1) * max(coord_range, 1) ** d < _INT64_HEADROOM


def affine_basis(pts: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    """Indices of a maximal affinely independent subset and the pivot coordinates.

    The first index is always 0.  Exact elimination over the rationals.
    """
    d = len(pts[0])
    p0 = pts[0]
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    chosen = [0]
    for idx in range(1, len(pts)):
        v = [Fraction(pts[idx][k] - p0[k]) for k in range(d)]
        for row, col in zip(basis, pivots):
            if v[col]:
                f = v[col]
                v = [a - f * b for a, b in zip(v, row)]
        col = next((k for k in range(d) if v[k]), None)
        if col is None:
            continue
        lead = v[col]
        v = [a / lead for a in v]
        # keep rows fully reduced so later eliminations stay consistent
        for r, row in enumerate(basis):
            if row[col]:
                f = row[col]
                basis[r] = [a - f * b for a, b in zip(row, v)]
        basis.append(v)
        pivots.append(col)
        chosen.append(idx)
        if len(chosen) == d + 1:
            break
    return chosen, pivots


def _insertion_order(pts, skip) -> list[int]:
    # far points first: interior points are then rejected by a near-final hull
    n = len(pts)
    d = len(pts[0])
    centre = [sum(p[k] for p in pts) for k in range(d)]

    def spread(i):
        return sum((n * pts[i][k] - centre[k]) ** 2 for k in range(d))

    return sorted((i for i in range(n) if i not in skip), key=lambda i: (-spread(i), i))


def _run(pts: list[tuple[int, ...]], initial: list[int], backend: str | None = None):
    d = len(pts[0])
    order = _insertion_order(pts, set(initial))
    lo = [min(p[k] for p in pts) for k in range(d)]
    shifted = [tuple(p[k] - lo[k] for k in range(d)) for p in pts]
    rng = max(max(p) for p in shifted)
    use = backend or BACKEND
    if use == "compiled" and HAVE_COMPILED and d <= 8 and fits_int64(d, rng):
        arr = np.ascontiguousarray(shifted, dtype=np.int64)
        return _hullc.incremental_hull(arr, list(initial), order)
    return _hull_py.incremental_hull(shifted, list(initial), order)


def _dedupe(points) -> list[tuple[int, ...]]:
    return sorted({tuple(int(x) for x in p) for p in points})


def hull_volume_int(points: Sequence[Sequence[int]], backend: str | None = None) -> int:
    """``d! * vol(conv(points))`` for integer points; 0 when not full-dimensional."""
    pts = _dedupe(points)
    d = len(pts[0])
    if d == 0:
        return 0
    initial, _ = affine_basis(pts)
    if len(initial) < d + 1:
        return 0
    volume, _ = _run(pts, initial, backend)
    return volume


def hull_points_int(points: Sequence[Sequence[int]], backend: str | None = None) -> list[tuple[int, ...]]:
    """A subset of the points with the same convex hull; every vertex survives.

    Lower-dimensional sets are reduced inside their affine hull through a
    coordinate projection that is injective on it.
    """
    pts = _dedupe(points)
    d = len(pts[0])
    initial, pivots = affine_basis(pts)
    r = len(initial) - 1
    if r == 0:
        return pts[:1]
    if r == d:
        _, boundary = _run(pts, initial, backend)
        return [pts[i] for i in boundary]
    sub = [tuple(p[c] for c in pivots) for p in pts]
    sub_initial, _ = affine_basis(sub)
    _, boundary = _run(sub, sub_initial, backend)
    return [pts[i] for i in boundary]
