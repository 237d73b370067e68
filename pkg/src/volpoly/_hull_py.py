"""Pure-Python beneath-beyond hull over integer points.

Reference implementation of the compiled kernel in ``_hullc.pyx``; both take
the same inputs and must return identical results.
"""

from __future__ import annotations

from operator import mul


def det_int(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    M = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def facet_plane(pts, verts, d) -> tuple[list[int], int]:
    """Normal and offset with ``normal . x - offset = det(x - v0, v1 - v0, ...)``."""
    v0 = pts[verts[0]]
    rows = [[pts[v][k] - v0[k] for k in range(d)] for v in verts[1:]]
    normal = []
    sign = 1
    for c in range(d):
        normal.append(sign * det_int([r[:c] + r[c + 1:] for r in rows]))
        sign = -sign
    return normal, sum(map(mul, normal, v0))


def incremental_hull(pts: list[tuple[int, ...]], initial: list[int], order: list[int]):
    """Volume and boundary vertices of ``conv(pts)``.

    ``initial`` holds ``d + 1`` affinely independent indices; ``order`` is the
    insertion order for the remaining points.  Returns ``(d! * volume,
    sorted boundary vertex indices)``.  The boundary is kept as a simplicial
    complex with outward normals; a point strictly beyond a set of facets
    adds the cones over them, and the horizon ridges get new facets.
    """
    d = len(pts[0])
    S = [sum(pts[i][k] for i in initial) for k in range(d)]
    K = d + 1

    normals: list[list[int]] = []
    offsets: list[int] = []
    fverts: list[tuple[int, ...]] = []

    def add_facet(verts):
        nrm, off = facet_plane(pts, verts, d)
        if sum(map(mul, nrm, S)) - K * off > 0:
            nrm = [-x for x in nrm]
            off = -off
        normals.append(nrm)
        offsets.append(off)
        fverts.append(verts)

    for omit in range(K):
        add_facet(tuple(initial[:omit] + initial[omit + 1:]))
    apex = pts[initial[0]]
    volume = -(sum(map(mul, normals[0], apex)) - offsets[0])

    for idx in order:
        p = pts[idx]
        visible = []
        for fi in range(len(normals)):
            s = sum(map(mul, normals[fi], p)) - offsets[fi]
            if s > 0:
                visible.append(fi)
                volume += s
        if not visible:
            continue
        ridges: dict[tuple[int, ...], int] = {}
        for fi in visible:
            vs = fverts[fi]
            for k in range(d):
                r = tuple(sorted(vs[:k] + vs[k + 1:]))
                ridges[r] = ridges.get(r, 0) + 1
        gone = set(visible)
        keep = [fi for fi in range(len(normals)) if fi not in gone]
        normals[:] = [normals[fi] for fi in keep]
        offsets[:] = [offsets[fi] for fi in keep]
        fverts[:] = [fverts[fi] for fi in keep]
        for r, count in ridges.items():
            if count == 1:
                add_facet(r + (idx,))

    boundary = sorted({v for vs in fverts for v in vs})
    return volume, boundary
