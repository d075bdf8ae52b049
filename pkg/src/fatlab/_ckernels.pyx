# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled strong-regularity scan."""

ctypedef long long idx_t


cdef inline idx_t _first_common(const idx_t[:] vidx, idx_t a0, idx_t a1,
                                idx_t b0, idx_t b1) noexcept nogil:
    cdef idx_t x, y
    while a0 < a1 and b0 < b1:
        x = vidx[a0]
        y = vidx[b0]
        if x == y:
            return x
        if x < y:
            a0 += 1
        else:
            b0 += 1
    return -1


cdef void _scan(const idx_t[:] indptr, const idx_t[:] indices, const idx_t[:] dims,
                const idx_t[:] sptr, const idx_t[:] sidx, const idx_t[:] vptr,
                const idx_t[:] vidx, idx_t lo, idx_t hi, idx_t* out) noexcept nogil:
    cdef idx_t v, i, j, a, b, p, pe, q, qe, x, y, size, best, bestdim, s0, s1
    for v in range(lo, hi):
        s0 = sptr[v]
        s1 = sptr[v + 1]
        for i in range(s0, s1):
            a = sidx[i]
            for j in range(i + 1, s1):
                b = sidx[j]
                if _first_common(vidx, vptr[a], vptr[a + 1], vptr[b], vptr[b + 1]) != v:
                    continue
                p = indptr[a]
                pe = indptr[a + 1]
                q = indptr[b]
                qe = indptr[b + 1]
                size = 0
                best = -1
                bestdim = -1
                while p < pe and q < qe:
                    x = indices[p]
                    y = indices[q]
                    if x == y:
                        size += 1
                        if dims[x] > bestdim:
                            bestdim = dims[x]
                            best = x
                        p += 1
                        q += 1
                    elif x < y:
                        p += 1
                    else:
                        q += 1
                if size != indptr[best + 1] - indptr[best]:
                    out[0] = a
                    out[1] = b
                    return
    out[0] = -1
    out[1] = -1


def scan_range(const idx_t[:] indptr, const idx_t[:] indices, const idx_t[:] dims,
               const idx_t[:] sptr, const idx_t[:] sidx, const idx_t[:] vptr,
               const idx_t[:] vidx, idx_t lo, idx_t hi):
    """First violating pair (a, b) among stars of vertices lo..hi-1, else (-1, -1)."""
    cdef idx_t out[2]
    with nogil:
        _scan(indptr, indices, dims, sptr, sidx, vptr, vidx, lo, hi, out)
    return out[0], out[1]
