"""Finite regular cell complexes given by their face posets.

A :class:`CellComplex` is a graded list of cells with dense integer ids and
boundary sets.  :class:`SurfaceComplex` adds what the poset cannot express for
2-complexes: edge endpoints (loops allowed) and the oriented boundary walk of
every 2-cell.  Walk entries are signed edge ids, ``-k`` meaning edge ``k``
traversed backwards.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

import networkx as nx
import numpy as np

from . import kernels


class FVector(tuple):
    """Cell counts by dimension; compares equal to plain tuples."""

    def __new__(cls, counts):
        counts = tuple(int(c) for c in counts)
        if any(c < 0 for c in counts):
            raise ValueError("f-vector entries must be nonnegative")
        return super().__new__(cls, counts)

    def reversed(self) -> FVector:
        return FVector(self[::-1])

    def __add__(self, other):
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return FVector(a + b for a, b in zip(self, other))

    def scale(self, k: int) -> FVector:
        return FVector(k * c for c in self)

    def __repr__(self):
        return f"FVector{tuple(self)}"


@dataclass(frozen=True)
class Cell:
    id: int
    dim: int
    boundary: frozenset
    walk: tuple | None = None
    ends: tuple | None = None


class CellComplex:
    """Graded face poset.  Cell ids must be exactly ``0..len(cells)-1``."""

    def __init__(self, cells, dim: int | None = None, validate: bool = True):
        cells = sorted(cells, key=lambda c: c.id)
        self.cells: list[Cell] = cells
        self.dim = max((c.dim for c in cells), default=-1) if dim is None else dim
        if validate:
            self._validate()

    def _validate(self):
        for i, c in enumerate(self.cells):
            if c.id != i:
                raise ValueError(f"cell ids must be dense, got {c.id} at position {i}")
        for c in self.cells:
            if c.dim < 0 or c.dim > self.dim:
                raise ValueError(f"cell {c.id} has dimension {c.dim} outside 0..{self.dim}")
            for b in c.boundary:
                if not 0 <= b < len(self.cells) or self.cells[b].dim != c.dim - 1:
                    raise ValueError(f"cell {c.id}: boundary entry {b} is not a {c.dim - 1}-cell")
            if c.dim > 0 and not c.boundary:
                raise ValueError(f"cell {c.id} of dimension {c.dim} has empty boundary")

    def __len__(self):
        return len(self.cells)

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, f={tuple(self.f_vector())})"

    @cached_property
    def by_dim(self) -> list[list[int]]:
        out = [[] for _ in range(self.dim + 1)]
        for c in self.cells:
            out[c.dim].append(c.id)
        return out

    @cached_property
    def cofaces(self) -> list[list[int]]:
        out = [[] for _ in self.cells]
        for c in self.cells:
            for b in c.boundary:
                out[b].append(c.id)
        return out

    @cached_property
    def closures(self) -> list[frozenset]:
        clos: list[frozenset | None] = [None] * len(self.cells)
        for d in range(self.dim + 1):
            for cid in self.by_dim[d]:
                acc = {cid}
                for b in self.cells[cid].boundary:
                    acc |= clos[b]
                clos[cid] = frozenset(acc)
        return clos

    @cached_property
    def vertex_sets(self) -> list[frozenset]:
        dims = [c.dim for c in self.cells]
        return [frozenset(x for x in cl if dims[x] == 0) for cl in self.closures]

    def closure(self, cid: int) -> frozenset:
        return self.closures[cid]

    def faces_of_dim(self, cid: int, d: int) -> list[int]:
        return [x for x in self.closures[cid] if self.cells[x].dim == d]

    def f_vector(self) -> FVector:
        return FVector(len(ids) for ids in self.by_dim)


class SurfaceComplex(CellComplex):
    """2-dimensional complex with explicit edge ends and face walks."""

    def __init__(self, cells, validate: bool = True):
        super().__init__(cells, dim=2, validate=validate)
        if validate:
            self._validate_surface()

    def _validate_surface(self):
        for c in self.cells:
            if c.dim == 1:
                if c.ends is None:
                    raise ValueError(f"edge {c.id} has no endpoints")
                if frozenset(c.ends) != c.boundary:
                    raise ValueError(f"edge {c.id}: ends disagree with boundary")
            elif c.dim == 2:
                if not c.walk:
                    raise ValueError(f"face {c.id} has no boundary walk")
                steps = [self.oriented_ends(s) for s in c.walk]
                for (_, head), (tail, _) in zip(steps, steps[1:] + steps[:1]):
                    if head != tail:
                        raise ValueError(f"face {c.id}: walk is not closed")
                if frozenset(abs(s) for s in c.walk) != c.boundary:
                    raise ValueError(f"face {c.id}: walk disagrees with boundary")

    def oriented_ends(self, signed_edge: int) -> tuple[int, int]:
        e = self.cells[abs(signed_edge)]
        if e.dim != 1:
            raise ValueError(f"walk entry {signed_edge} is not an edge")
        u, v = e.ends
        return (u, v) if signed_edge > 0 else (v, u)

    def walk_vertices(self, fid: int) -> list[int]:
        return [self.oriented_ends(s)[0] for s in self.cells[fid].walk]


# --------------------------------------------------------------------------
# counting
# --------------------------------------------------------------------------


def f_vector(X: CellComplex) -> FVector:
    return X.f_vector()


def flag_vector(X: CellComplex, dims) -> int:
    """Number of chains c_0 < c_1 < ... with dim c_i == dims[i]."""
    dims = tuple(dims) if not isinstance(dims, int) else (dims,)
    if not dims or any(b <= a for a, b in zip(dims, dims[1:])):
        raise ValueError(f"dims must be strictly increasing, got {dims}")
    if dims[0] < 0 or dims[-1] > X.dim:
        raise ValueError(f"dims {dims} out of range 0..{X.dim}")
    counts = {cid: 1 for cid in X.by_dim[dims[0]]}
    for lo, hi in zip(dims, dims[1:]):
        counts = {
            cid: sum(counts[f] for f in X.faces_of_dim(cid, lo)) for cid in X.by_dim[hi]
        }
    return sum(counts.values())


def fatness3(f) -> Fraction:
    if len(f) != 4:
        raise ValueError("fatness3 needs a length-4 f-vector")
    den = f[0] + f[3]
    if den == 0:
        raise ZeroDivisionError("f_0 + f_3 == 0")
    return Fraction(f[1] + f[2], den)


def fatness2(f) -> Fraction:
    if len(f) != 3:
        raise ValueError("fatness2 needs a length-3 f-vector")
    den = f[0] + f[2]
    if den == 0:
        raise ZeroDivisionError("f_0 + f_2 == 0")
    return Fraction(f[1], den)


def euler_characteristic(f) -> int:
    return sum((-1) ** i * c for i, c in enumerate(f))


def euler_check(f, chi: int | None = None) -> bool:
    """Alternating sum against ``chi``; defaults: 2 for length 3, 0 for length 4."""
    if chi is None:
        if len(f) == 3:
            chi = 2
        elif len(f) == 4:
            chi = 0
        else:
            raise ValueError("f-vector must have length 3 or 4")
    return euler_characteristic(f) == chi


# --------------------------------------------------------------------------
# regularity
# --------------------------------------------------------------------------


def is_regular(X: CellComplex) -> tuple[bool, str | None]:
    """Closed cells embedded.  Returns (verdict, witness)."""
    for e in X.by_dim[1] if X.dim >= 1 else ():
        cell = X.cells[e]
        if cell.ends is not None:
            if cell.ends[0] == cell.ends[1]:
                return False, f"edge {e} is a loop at vertex {cell.ends[0]}"
        elif len(cell.boundary) != 2:
            return False, f"edge {e} does not have two distinct endpoints"
    if isinstance(X, SurfaceComplex):
        for fid in X.by_dim[2]:
            walk = X.cells[fid].walk
            verts = X.walk_vertices(fid)
            if len(set(verts)) != len(verts):
                return False, f"face {fid} visits a vertex twice"
            if len({abs(s) for s in walk}) != len(walk):
                return False, f"face {fid} traverses an edge twice"
    return True, None


def _kernel_arrays(X: CellComplex):
    clos = X.closures
    indptr = np.zeros(len(clos) + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(c) for c in clos])
    indices = np.fromiter(
        (x for c in clos for x in sorted(c)), dtype=np.int64, count=int(indptr[-1])
    )
    dims = np.array([c.dim for c in X.cells], dtype=np.int64)
    verts = X.by_dim[0]
    star = [[] for _ in verts]
    vpos = {v: i for i, v in enumerate(verts)}
    for cid, vs in enumerate(X.vertex_sets):
        for v in vs:
            star[vpos[v]].append(cid)
    sptr = np.zeros(len(star) + 1, dtype=np.int64)
    sptr[1:] = np.cumsum([len(s) for s in star])
    sidx = np.fromiter((c for s in star for c in s), dtype=np.int64, count=int(sptr[-1]))
    vsets = [sorted(vpos[v] for v in vs) for vs in X.vertex_sets]
    vptr = np.zeros(len(vsets) + 1, dtype=np.int64)
    vptr[1:] = np.cumsum([len(s) for s in vsets])
    vidx = np.fromiter((x for s in vsets for x in s), dtype=np.int64, count=int(vptr[-1]))
    return indptr, indices, dims, sptr, sidx, vptr, vidx


def is_strongly_regular(X: CellComplex) -> tuple[bool, tuple[int, int] | None]:
    """Every pair of closed cells meets in the empty set or in one closed cell.

    Returns (verdict, violating pair).  Raises ``ValueError`` for irregular input.
    """
    ok, why = is_regular(X)
    if not ok:
        raise ValueError(f"complex is not regular: {why}")
    a, b = kernels.strong_regularity_violation(*_kernel_arrays(X), threads=kernels.get_threads())
    if a < 0:
        return True, None
    return False, (int(a), int(b))


# --------------------------------------------------------------------------
# graphs, stars, products
# --------------------------------------------------------------------------


def dual_graph(X: CellComplex) -> nx.MultiGraph:
    """Top cells joined once per shared ridge; ridges must lie in exactly two top cells."""
    top = X.dim
    G = nx.MultiGraph()
    G.add_nodes_from(X.by_dim[top])
    incidences: dict[int, list[int]] = {r: [] for r in X.by_dim[top - 1]}
    for t in X.by_dim[top]:
        cell = X.cells[t]
        if cell.walk is not None:
            for s in cell.walk:
                incidences[abs(s)].append(t)
        else:
            for r in cell.boundary:
                incidences[r].append(t)
    for r, ts in incidences.items():
        if len(ts) != 2:
            raise ValueError(f"ridge {r} lies in {len(ts)} top cells, expected 2")
        G.add_edge(ts[0], ts[1], key=r)
    return G


def star(X: CellComplex, v: int) -> frozenset:
    """Ids of the closed star: every cell containing v together with its faces."""
    if not 0 <= v < len(X) or X.cells[v].dim != 0:
        raise ValueError(f"{v} is not a vertex")
    containing = {c for c, vs in enumerate(X.vertex_sets) if v in vs}
    out = set()
    for c in containing:
        out |= X.closures[c]
    return frozenset(out)


def open_star(X: CellComplex, v: int) -> frozenset:
    if not 0 <= v < len(X) or X.cells[v].dim != 0:
        raise ValueError(f"{v} is not a vertex")
    return frozenset(c for c, vs in enumerate(X.vertex_sets) if v in vs)


def link(X: CellComplex, v: int) -> frozenset:
    return star(X, v) - open_star(X, v)


def subcomplex(X: CellComplex, ids) -> tuple[CellComplex, dict[int, int]]:
    """Re-indexed subcomplex on a down-closed id set; returns (complex, old->new)."""
    ids = sorted(ids, key=lambda c: (X.cells[c].dim, c))
    idset = set(ids)
    for c in ids:
        if not X.cells[c].boundary <= idset:
            raise ValueError(f"id set is not closed under faces at cell {c}")
    new = {old: i for i, old in enumerate(ids)}
    cells = []
    for old in ids:
        c = X.cells[old]
        walk = None
        if c.walk is not None:
            walk = tuple(new[abs(s)] * (1 if s > 0 else -1) for s in c.walk)
        ends = tuple(new[u] for u in c.ends) if c.ends is not None else None
        cells.append(Cell(new[old], c.dim, frozenset(new[b] for b in c.boundary), walk, ends))
    dim = max(c.dim for c in cells)
    if isinstance(X, SurfaceComplex) and dim == 2:
        return SurfaceComplex(cells), new
    return CellComplex(cells, dim=dim), new


def product_with_path(S: CellComplex, N: int) -> CellComplex:
    """Prism complex S x [0, N] with the interval cut into N unit segments."""
    if N < 1:
        raise ValueError("N must be positive")
    ok, why = is_regular(S)
    if not ok:
        raise ValueError(f"input is not regular: {why}")
    # keys: ("c", cell, level) for c x {level}; ("p", cell, seg) for c x [seg, seg+1]
    entries = []
    for c in S.cells:
        for i in range(N + 1):
            entries.append((c.dim, ("c", c.id, i)))
        for j in range(N):
            entries.append((c.dim + 1, ("p", c.id, j)))
    entries.sort(key=lambda e: (e[0], e[1][0] == "p", e[1][1], e[1][2]))
    ident = {key: i for i, (_, key) in enumerate(entries)}
    cells = []
    for i, (dim, key) in enumerate(entries):
        kind, cid, t = key
        base = S.cells[cid]
        if kind == "c":
            bd = {ident[("c", b, t)] for b in base.boundary}
        else:
            bd = {ident[("c", cid, t)], ident[("c", cid, t + 1)]}
            bd |= {ident[("p", b, t)] for b in base.boundary}
        cells.append(Cell(i, dim, frozenset(bd)))
    return CellComplex(cells, dim=S.dim + 1)


def product_fvector(f, N: int) -> FVector:
    """Closed form for the f-vector of a surface times an N-segment path."""
    f0, f1, f2 = f
    return FVector((f0 * (N + 1), f1 * (N + 1) + f0 * N, f2 * (N + 1) + f1 * N, f2 * N))


# --------------------------------------------------------------------------
# JSON
# --------------------------------------------------------------------------


def to_json(X: CellComplex) -> dict:
    out = []
    for c in sorted(X.cells, key=lambda c: (c.dim, c.id)):
        entry = {"id": c.id, "dim": c.dim}
        if c.ends is not None:
            entry["boundary"] = list(c.ends)
        else:
            entry["boundary"] = sorted(c.boundary)
        if c.walk is not None:
            entry["walk"] = list(c.walk)
        out.append(entry)
    return {"dim": X.dim, "cells": out}


def from_json(obj) -> CellComplex:
    if isinstance(obj, str):
        obj = json.loads(obj)
    has_walks = any("walk" in c for c in obj["cells"])
    cells = []
    for c in obj["cells"]:
        bd = c["boundary"]
        ends = None
        if has_walks and c["dim"] == 1:
            ends = (bd[0], bd[-1])
        walk = tuple(c["walk"]) if "walk" in c else None
        cells.append(Cell(c["id"], c["dim"], frozenset(bd), walk, ends))
    if has_walks:
        return SurfaceComplex(cells)
    return CellComplex(cells, dim=obj["dim"])


def dumps(X: CellComplex) -> str:
    return json.dumps(to_json(X), separators=(",", ":"))


# --------------------------------------------------------------------------
# small builders used throughout
# --------------------------------------------------------------------------


def simplicial_closure(facets, vertex_order=None) -> tuple[CellComplex, dict]:
    """Boundary-style complex generated by simplices given as vertex sets.

    Returns the complex and a map from vertex frozensets to cell ids.
    """
    faces = set()
    for F in facets:
        F = tuple(sorted(F))
        for k in range(1, len(F) + 1):
            faces.update(frozenset(s) for s in combinations(F, k))
    key = (lambda s: (len(s), sorted(s))) if vertex_order is None else (
        lambda s: (len(s), sorted(vertex_order[x] for x in s))
    )
    ordered = sorted(faces, key=key)
    ident = {s: i for i, s in enumerate(ordered)}
    cells = []
    for s, i in ident.items():
        bd = frozenset(ident[s - {x}] for x in s) if len(s) > 1 else frozenset()
        cells.append(Cell(i, len(s) - 1, bd))
    return CellComplex(cells), ident


def simplex_boundary(d: int) -> CellComplex:
    """Boundary of the d-simplex on vertices 0..d."""
    return simplicial_closure(combinations(range(d + 1), d))[0]


def tetrahedron_surface() -> SurfaceComplex:
    """Boundary of the tetrahedron as a SurfaceComplex with oriented walks."""
    # vertices 0..3, edges 4..9, faces 10..13
    edges = list(combinations(range(4), 2))
    eid = {e: 4 + i for i, e in enumerate(edges)}
    cells = [Cell(v, 0, frozenset()) for v in range(4)]
    cells += [Cell(eid[e], 1, frozenset(e), ends=e) for e in edges]

    def signed(u, v):
        return eid[(u, v)] if u < v else -eid[(v, u)]

    # outward orientation of faces of the tetrahedron
    tris = [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)]
    for i, (a, b, c) in enumerate(tris):
        walk = (signed(a, b), signed(b, c), signed(c, a))
        cells.append(Cell(10 + i, 2, frozenset(abs(s) for s in walk), walk))
    return SurfaceComplex(cells)


def cube_boundary(d: int = 4) -> CellComplex:
    """Boundary complex of the d-cube; faces are sign patterns in {-1,0,+1}^d."""
    faces = [f for f in product((-1, 0, 1), repeat=d) if f.count(0) < d]
    faces.sort(key=lambda f: (f.count(0), f))
    ident = {f: i for i, f in enumerate(faces)}
    cells = []
    for f in faces:
        bd = set()
        for i, x in enumerate(f):
            if x == 0:
                bd.update(ident[f[:i] + (s,) + f[i + 1:]] for s in (-1, 1))
        cells.append(Cell(ident[f], f.count(0), frozenset(bd)))
    return CellComplex(cells, dim=d - 1)
