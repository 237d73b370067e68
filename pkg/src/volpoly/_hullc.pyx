# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled beneath-beyond hull kernel on int64 coordinates.

Same contract as ``volpoly._hull_py.incremental_hull``.  The caller must
guarantee that no intermediate value overflows int64 (see
``volpoly.hull.fits_int64``); facet normals are computed by Laplace expansion
so every partial sum stays below the final determinant bound.
"""

from libc.stdlib cimport malloc, realloc, free

ctypedef long long i64

cdef enum:
    MAXD = 8


cdef i64 _det(i64* m, int stride, int row, int* cols, int ncols) nogil:
    cdef int sub[MAXD]
    cdef int c, k, t
    cdef i64 total = 0, a
    cdef int sign = 1
    if ncols == 0:
        return 1
    if ncols == 1:
        return m[row * stride + cols[0]]
    if ncols == 2:
        return (m[row * stride + cols[0]] * m[(row + 1) * stride + cols[1]]
                - m[row * stride + cols[1]] * m[(row + 1) * stride + cols[0]])
    for c in range(ncols):
        a = m[row * stride + cols[c]]
        if a != 0:
            t = 0
            for k in range(ncols):
                if k != c:
                    sub[t] = cols[k]
                    t += 1
            total += sign * a * _det(m, stride, row + 1, sub, ncols - 1)
        sign = -sign
    return total


cdef void _plane(const i64[:, ::1] pts, int* verts, int d, i64* S, int K,
                 i64* normal, i64* offset) nogil:
    cdef i64 rows[MAXD * MAXD]
    cdef int cols[MAXD]
    cdef int i, k, c, t
    cdef int sign = 1
    cdef i64 off = 0, side = 0
    for i in range(1, d):
        for k in range(d):
            rows[(i - 1) * d + k] = pts[verts[i], k] - pts[verts[0], k]
    for c in range(d):
        t = 0
        for k in range(d):
            if k != c:
                cols[t] = k
                t += 1
        normal[c] = sign * _det(rows, d, 0, cols, d - 1)
        sign = -sign
    for k in range(d):
        off += normal[k] * pts[verts[0], k]
        side += normal[k] * S[k]
    if side - K * off > 0:
        for k in range(d):
            normal[k] = -normal[k]
        off = -off
    offset[0] = off


def incremental_hull(const i64[:, ::1] pts, list initial, list order):
    cdef int d = pts.shape[1]
    cdef int K = d + 1
    cdef int cap = 64, nf = 0, i, k, t, fi, w, idx, nvis
    cdef i64 s, volume
    cdef i64 S[MAXD]
    if d > MAXD:
        raise ValueError("dimension too large for the compiled kernel")
    cdef i64* normals = <i64*> malloc(cap * d * sizeof(i64))
    cdef i64* offsets = <i64*> malloc(cap * sizeof(i64))
    cdef int* fverts = <int*> malloc(cap * d * sizeof(int))
    cdef char* vis = <char*> malloc(cap * sizeof(char))
    if not normals or not offsets or not fverts or not vis:
        raise MemoryError()
    try:
        for k in range(d):
            S[k] = 0
            for i in initial:
                S[k] += pts[i, k]
        for i in range(K):
            t = 0
            for k in range(K):
                if k != i:
                    fverts[nf * d + t] = initial[k]
                    t += 1
            _plane(pts, &fverts[nf * d], d, S, K, &normals[nf * d], &offsets[nf])
            nf += 1
        s = -offsets[0]
        for k in range(d):
            s += normals[k] * pts[initial[0], k]
        volume = -s

        for idx in order:
            nvis = 0
            for fi in range(nf):
                s = -offsets[fi]
                for k in range(d):
                    s += normals[fi * d + k] * pts[idx, k]
                if s > 0:
                    vis[fi] = 1
                    volume += s
                    nvis += 1
                else:
                    vis[fi] = 0
            if nvis == 0:
                continue
            ridges = {}
            for fi in range(nf):
                if vis[fi]:
                    for k in range(d):
                        r = tuple(sorted([fverts[fi * d + t] for t in range(d) if t != k]))
                        ridges[r] = ridges.get(r, 0) + 1
            w = 0
            for fi in range(nf):
                if not vis[fi]:
                    if w != fi:
                        for k in range(d):
                            normals[w * d + k] = normals[fi * d + k]
                            fverts[w * d + k] = fverts[fi * d + k]
                        offsets[w] = offsets[fi]
                    w += 1
            nf = w
            for r, count in ridges.items():
                if count != 1:
                    continue
                if nf == cap:
                    cap *= 2
                    normals = <i64*> realloc(normals, cap * d * sizeof(i64))
                    offsets = <i64*> realloc(offsets, cap * sizeof(i64))
                    fverts = <int*> realloc(fverts, cap * d * sizeof(int))
                    vis = <char*> realloc(vis, cap * sizeof(char))
                    if not normals or not offsets or not fverts or not vis:
                        raise MemoryError()
                for k in range(d - 1):
                    fverts[nf * d + k] = r[k]
                fverts[nf * d + d - 1] = idx
                _plane(pts, &fverts[nf * d], d, S, K, &normals[nf * d], &offsets[nf])
                nf += 1

        boundary = sorted({fverts[fi * d + k] for fi in range(nf) for k in range(d)})
        return volume, boundary
    finally:
        free(normals)
        free(offsets)
        free(fverts)
        free(vis)
