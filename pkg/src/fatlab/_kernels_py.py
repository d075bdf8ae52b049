"""Pure-Python strong-regularity scan; same contract as the compiled module."""


def _first_common(vidx, a0, a1, b0, b1):
    while a0 < a1 and b0 < b1:
        x, y = vidx[a0], vidx[b0]
        if x == y:
            return x
        if x < y:
            a0 += 1
        else:
            b0 += 1
    return -1


def scan_range(indptr, indices, dims, sptr, sidx, vptr, vidx, lo, hi):
    """First violating pair (a, b) among stars of vertices lo..hi-1, else (-1, -1)."""
    indptr = indptr.tolist()
    indices = indices.tolist()
    dims = dims.tolist()
    sptr = sptr.tolist()
    sidx = sidx.tolist()
    vptr = vptr.tolist()
    vidx = vidx.tolist()
    for v in range(lo, hi):
        cells = sidx[sptr[v]:sptr[v + 1]]
        n = len(cells)
        for i in range(n):
            a = cells[i]
            for j in range(i + 1, n):
                b = cells[j]
                # each pair is handled once, at its least shared vertex
                if _first_common(vidx, vptr[a], vptr[a + 1], vptr[b], vptr[b + 1]) != v:
                    continue
                p, pe = indptr[a], indptr[a + 1]
                q, qe = indptr[b], indptr[b + 1]
                size = 0
                best = -1
                bestdim = -1
                while p < pe and q < qe:
                    x, y = indices[p], indices[q]
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
                    return a, b
    return -1, -1
