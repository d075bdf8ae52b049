"""Obstructing loops of S'_g and their integral homology classes.

A star point of v is a vertex occurrence w != v in a face around v.  Points on
the two faces adjacent along an edge (v, w) coincide, so a point is identified
by its target vertex and the set of faces containing it.  Two points over the
same target give a loop: out along one face, back along the other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

import numpy as np

from .complex import SurfaceComplex
from .surfaces import CheckReport, CoverSurface


@dataclass(frozen=True)
class StarPoint:
    base: int
    target: int
    faces: frozenset


@dataclass(frozen=True)
class ObstructingLoop:
    v: int
    w: int
    faces: tuple  # (faceset of first point, faceset of second point)
    arcs: tuple  # two signed edge sequences from v to w
    chain: tuple  # sorted (edge, coefficient) pairs of arc0 - arc1

    @property
    def length(self) -> int:
        return len(self.arcs[0]) + len(self.arcs[1])

    @property
    def support(self) -> int:
        return len(self.chain)

    def key(self) -> tuple:
        return (frozenset((self.v, self.w)), frozenset(self.faces))


def _incidences(S: SurfaceComplex) -> dict:
    """Vertex -> list of (face, position in walk)."""
    out: dict = {v: [] for v in S.by_dim[0]}
    for f in S.by_dim[2]:
        for pos, v in enumerate(S.walk_vertices(f)):
            out[v].append((f, pos))
    return out


def _edge_faces(S: SurfaceComplex) -> dict:
    out: dict = {}
    for f in S.by_dim[2]:
        for x in S.cells[f].walk:
            out.setdefault(abs(x), []).append(f)
    return out


def star_points(S: SurfaceComplex, v: int, inc=None, ef=None) -> list[StarPoint]:
    inc = _incidences(S) if inc is None else inc
    ef = _edge_faces(S) if ef is None else ef
    pts = set()
    for f, pos in inc[v]:
        walk = S.cells[f].walk
        verts = S.walk_vertices(f)
        m = len(walk)
        for j in range(m):
            if j == pos:
                continue
            if j == (pos + 1) % m:
                faces = frozenset(ef[abs(walk[pos])])
            elif j == (pos - 1) % m:
                faces = frozenset(ef[abs(walk[j])])
            else:
                faces = frozenset((f,))
            pts.add(StarPoint(v, verts[j], faces))
    return sorted(pts, key=lambda p: (p.target, sorted(p.faces)))


def _arc(S: SurfaceComplex, f: int, i: int, j: int) -> tuple:
    """Shorter boundary arc of face f from walk position i to j, as signed edges."""
    walk = S.cells[f].walk
    m = len(walk)
    fwd = (j - i) % m
    if fwd <= m - fwd:
        return tuple(walk[(i + t) % m] for t in range(fwd))
    return tuple(-walk[(i - 1 - t) % m] for t in range(m - fwd))


def _point_arc(S: SurfaceComplex, p: StarPoint, inc) -> tuple:
    f = min(p.faces)
    pos = {u: k for k, u in enumerate(S.walk_vertices(f))}
    return _arc(S, f, pos[p.base], pos[p.target])


def _chain(arc0, arc1) -> tuple:
    c: dict = {}
    for s, arc in ((1, arc0), (-1, arc1)):
        for x in arc:
            c[abs(x)] = c.get(abs(x), 0) + s * (1 if x > 0 else -1)
    return tuple(sorted((e, k) for e, k in c.items() if k))


def enumerate_obstructing_loops(C: CoverSurface | SurfaceComplex) -> list[ObstructingLoop]:
    S = C.complex if isinstance(C, CoverSurface) else C
    inc, ef = _incidences(S), _edge_faces(S)
    seen = {}
    for v in S.by_dim[0]:
        by_target: dict = {}
        for p in star_points(S, v, inc, ef):
            by_target.setdefault(p.target, []).append(p)
        for w, pts in sorted(by_target.items()):
            for a, b in combinations(pts, 2):
                if a.faces & b.faces:
                    raise AssertionError("two star points over one vertex share a face")
                loop_key = (frozenset((v, w)), frozenset((a.faces, b.faces)))
                if loop_key in seen:
                    continue
                arcs = (_point_arc(S, a, inc), _point_arc(S, b, inc))
                seen[loop_key] = ObstructingLoop(v, w, (a.faces, b.faces), arcs, _chain(*arcs))
    return list(seen.values())


def loop_bound(g: int) -> int:
    return (4 * g + 1) * 4 * g * (4 * g - 2) * (4 * g - 3) // 4


def expected_loop_count(g: int) -> int:
    q = 4 * g + 1
    return comb(q, 2) * comb(4 * g - 2, 2)


# --------------------------------------------------------------------------
# tree-cotree homology
# --------------------------------------------------------------------------


@dataclass
class TreeCotree:
    tree: list  # edge ids of a spanning tree
    cotree: list  # edge ids of a spanning tree of the dual graph
    generators: list  # remaining edges, 2 * genus of them
    face_order: list  # dual BFS order, root first
    parent_edge: dict  # face -> dual tree edge towards the root

    @property
    def rank(self) -> int:
        return len(self.generators)


def tree_cotree(S: SurfaceComplex) -> TreeCotree:
    verts, edges, faces = S.by_dim
    adj: dict = {v: [] for v in verts}
    for e in edges:
        a, b = S.cells[e].ends
        adj[a].append((e, b))
        adj[b].append((e, a))
    tree, seen = [], {verts[0]}
    dq = deque([verts[0]])
    while dq:
        u = dq.popleft()
        for e, w in adj[u]:
            if w not in seen:
                seen.add(w)
                tree.append(e)
                dq.append(w)
    if len(seen) != len(verts):
        raise ValueError("1-skeleton is disconnected")
    in_tree = set(tree)
    ef = _edge_faces(S)
    fadj: dict = {f: [] for f in faces}
    for e in edges:
        if e in in_tree:
            continue
        fs = ef[e]
        if len(fs) == 2 and fs[0] != fs[1]:
            fadj[fs[0]].append((e, fs[1]))
            fadj[fs[1]].append((e, fs[0]))
    order, parent, fseen = [faces[0]], {}, {faces[0]}
    dq = deque(order)
    while dq:
        f = dq.popleft()
        for e, h in fadj[f]:
            if h not in fseen:
                fseen.add(h)
                parent[h] = e
                order.append(h)
                dq.append(h)
    if len(fseen) != len(faces):
        raise ValueError("dual graph is disconnected")
    cotree = [parent[f] for f in order[1:]]
    used = in_tree | set(cotree)
    gens = [e for e in edges if e not in used]
    return TreeCotree(tree, cotree, gens, order, parent)


def solve_cocycle(S: SurfaceComplex, tc: TreeCotree, gen_values, modulus: int | None = None) -> dict:
    """Extend values on generator edges (tree edges 0) to a cocycle, leaf faces first."""
    val = {e: 0 for e in S.by_dim[1]}
    for e, x in zip(tc.generators, gen_values):
        val[e] = int(x) % modulus if modulus else int(x)
    for f in reversed(tc.face_order[1:]):
        pe = tc.parent_edge[f]
        total, sign = 0, 0
        for x in S.cells[f].walk:
            if abs(x) == pe:
                sign = 1 if x > 0 else -1
            else:
                total += val[abs(x)] if x > 0 else -val[abs(x)]
        val[pe] = -sign * total
        if modulus:
            val[pe] %= modulus
    if not cocycle_ok(S, val, modulus):
        raise AssertionError("face relation fails after solving")
    return val


def cocycle_ok(S: SurfaceComplex, val: dict, modulus: int | None = None) -> bool:
    for f in S.by_dim[2]:
        s = sum(val[abs(x)] if x > 0 else -val[abs(x)] for x in S.cells[f].walk)
        if (s % modulus if modulus else s) != 0:
            return False
    return True


class HomologyBasis:
    """Integral coordinates on H_1 dual to the generator edges of a tree-cotree split."""

    def __init__(self, S: SurfaceComplex):
        self.S = S
        self.tc = tree_cotree(S)
        self.edges = list(S.by_dim[1])
        self.col = {e: i for i, e in enumerate(self.edges)}
        r = self.tc.rank
        M = np.zeros((r, len(self.edges)), dtype=np.int64)
        for k in range(r):
            phi = solve_cocycle(S, self.tc, [int(i == k) for i in range(r)])
            for e, x in phi.items():
                M[k, self.col[e]] = x
        self.matrix = M

    @property
    def rank(self) -> int:
        return self.tc.rank

    def coordinates(self, chain) -> tuple:
        vec = np.zeros(len(self.edges), dtype=np.int64)
        for e, k in chain:
            vec[self.col[e]] += k
        return tuple(int(x) for x in self.matrix @ vec)

    def is_cycle(self, chain) -> bool:
        bd: dict = {}
        for e, k in chain:
            a, b = self.S.cells[e].ends
            bd[a] = bd.get(a, 0) - k
            bd[b] = bd.get(b, 0) + k
        return all(x == 0 for x in bd.values())


def indivisible(coords) -> bool:
    g = 0
    for x in coords:
        g = gcd(g, x)
    return g == 1


def face_boundary_chain(S: SurfaceComplex, f: int) -> tuple:
    return _chain(S.cells[f].walk, ())


def verify_loop_classes(C: CoverSurface, loops=None, basis: HomologyBasis | None = None) -> CheckReport:
    S, g, q = C.complex, C.g, C.q
    loops = enumerate_obstructing_loops(C) if loops is None else loops
    basis = HomologyBasis(S) if basis is None else basis
    items = {}
    items["rank"] = basis.rank == 2 * (1 + q * (g - 1))
    items["cycles"] = all(basis.is_cycle(l.chain) for l in loops)
    coords = [basis.coordinates(l.chain) for l in loops]
    items["nonzero"] = all(any(c) for c in coords)
    items["indivisible"] = all(indivisible(c) for c in coords)
    items["short-support"] = all(l.length < 4 * g for l in loops)
    items["split-bound"] = min(k * (q - k) for k in range(1, q)) >= 4 * g
    # negative control: a face boundary is null-homologous and must be flagged
    ctrl = basis.coordinates(face_boundary_chain(S, S.by_dim[2][0]))
    items["control-flagged"] = not any(ctrl)
    return CheckReport(items)
