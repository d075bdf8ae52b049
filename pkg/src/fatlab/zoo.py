"""Exact vertex models and face lattices of the atom polytopes.

Coordinates live in Q or Q(sqrt 5).  Edge tangency is tested against a sphere
of squared radius r2 about the model center; angles are scale free so no
square roots outside the field are ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product

from .complex import Cell, CellComplex, FVector
from .exact import QuadNum, golden_ratio, quad_sign, scalar_to_json

PHI = golden_ratio()


def _sign(x) -> int:
    return quad_sign(x) if isinstance(x, QuadNum) else (x > 0) - (x < 0)


def dot(x, y):
    s = 0
    for a, b in zip(x, y):
        s = s + a * b
    return s


def sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


@dataclass(frozen=True)
class VertexModel:
    field: str
    vertices: tuple
    center: tuple
    r2: object

    @property
    def ambient_dim(self) -> int:
        return len(self.center)

    def rel(self, i: int) -> tuple:
        """Vertex i relative to the center."""
        return sub(self.vertices[i], self.center)

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "center": [scalar_to_json(x) for x in self.center],
            "vertices": [[scalar_to_json(x) for x in v] for v in self.vertices],
            "r2": scalar_to_json(self.r2),
        }


@dataclass
class PolytopeLattice:
    """Boundary face lattice plus one supporting hyperplane per facet.

    Vertex cell ``i`` of ``complex`` is model vertex ``vertex_index[i]``.
    Hyperplanes are ``(x - center) . u <= c``.
    """

    complex: CellComplex
    vertex_index: list
    facet_sets: dict = field(default_factory=dict)
    hyperplanes: dict = field(default_factory=dict)
    facet_kind: dict = field(default_factory=dict)

    @property
    def facets(self) -> list[int]:
        return self.complex.by_dim[self.complex.dim]

    def f_vector(self) -> FVector:
        return self.complex.f_vector()

    def ridges(self) -> list[int]:
        return self.complex.by_dim[self.complex.dim - 1]

    def ridge_facets(self, ridge: int) -> list[int]:
        return self.complex.cofaces[ridge]

    def vertex_set(self, cid: int) -> frozenset:
        """Model vertex indices of a cell."""
        return frozenset(self.vertex_index[v] for v in self.complex.vertex_sets[cid])

    def to_json(self) -> dict:
        from .complex import to_json

        out = to_json(self.complex)
        out["vertex_index"] = list(self.vertex_index)
        out["hyperplanes"] = [
            {"facet": f, "u": [scalar_to_json(x) for x in u], "c": scalar_to_json(c),
             "kind": self.facet_kind.get(f, "")}
            for f, (u, c) in sorted(self.hyperplanes.items())
        ]
        return out


def lattice_from_facets(facet_vsets, hyperplanes=None, kinds=None) -> PolytopeLattice:
    """Face lattice of a polytope from the vertex sets of its facets.

    Faces of a facet are intersections with other facets; the proper faces of
    a face F are the maximal proper nonempty intersections of F with facets.
    """
    facet_vsets = [frozenset(F) for F in facet_vsets]
    by_vertex: dict = {}
    for i, F in enumerate(facet_vsets):
        for v in F:
            by_vertex.setdefault(v, []).append(i)
    dim_of: dict = {}
    subfaces: dict = {}
    level = sorted(set(facet_vsets), key=lambda s: sorted(s))
    if len(level) != len(facet_vsets):
        raise ValueError("duplicate facets")
    layers = [level]
    while True:
        nxt = set()
        for F in layers[-1]:
            if len(F) == 1:
                subfaces[F] = []
                continue
            cands = set()
            for v in F:
                for j in by_vertex[v]:
                    G = F & facet_vsets[j]
                    if G != F:
                        cands.add(G)
            maximal = [G for G in cands if not any(G < H for H in cands)]
            if len(F) > 1 and not maximal:
                raise ValueError(f"face {sorted(F)} has no proper faces")
            subfaces[F] = maximal
            nxt.update(maximal)
        if not nxt:
            break
        layers.append(sorted(nxt, key=lambda s: (len(s), sorted(s))))
    top = len(layers) - 1
    for k, layer in enumerate(layers):
        for F in layer:
            dk = top - k
            if dim_of.setdefault(F, dk) != dk:
                raise ValueError(f"face {sorted(F)} is not graded")
    if any(len(F) != 1 for F in layers[-1]):
        raise ValueError("lattice does not bottom out in vertices")
    verts = sorted(v for (v,) in layers[-1])
    ordered = []
    for dk in range(top + 1):
        faces = [F for F, x in dim_of.items() if x == dk]
        faces.sort(key=lambda s: sorted(s))
        if dk == 0:
            faces.sort(key=lambda s: next(iter(s)))
        ordered.extend(faces)
    ident = {F: i for i, F in enumerate(ordered)}
    cells = [Cell(ident[F], dim_of[F], frozenset(ident[G] for G in subfaces[F]))
             for F in ordered]
    X = CellComplex(cells, dim=top)
    L = PolytopeLattice(X, verts)
    fidx = {F: i for i, F in enumerate(facet_vsets)}
    for F in layers[0]:
        cid = ident[F]
        L.facet_sets[cid] = F
        if hyperplanes is not None:
            L.hyperplanes[cid] = hyperplanes[fidx[F]]
        if kinds is not None:
            L.facet_kind[cid] = kinds[fidx[F]]
    return L


def verify_hyperplanes(M: VertexModel, L: PolytopeLattice, side=None):
    """Every facet inequality holds on all lattice vertices, tight exactly on the facet.

    Raises ``ValueError`` on the first failure.  ``side(i, facet)``, if given,
    returns the sign of (v_i - center) . u - c from precomputed data.
    """
    for f, (u, c) in L.hyperplanes.items():
        F = L.facet_sets[f]
        for i in L.vertex_index:
            s = side(i, f) if side else _sign(dot(M.rel(i), u) - c)
            if s > 0 or (s == 0) != (i in F):
                raise ValueError(f"facet {f}: hyperplane fails at vertex {i}")
    return True


# --------------------------------------------------------------------------
# atoms
# --------------------------------------------------------------------------


def build_simplex4() -> tuple[VertexModel, PolytopeLattice]:
    """Regular 4-simplex as e_1..e_5 in the hyperplane sum(x) = 1."""
    verts = tuple(tuple(Fraction(int(i == j)) for j in range(5)) for i in range(5))
    center = tuple(Fraction(1, 5) for _ in range(5))
    M = VertexModel("Q", verts, center, Fraction(3, 10))
    facets, hyps = [], []
    for i in range(5):
        facets.append([j for j in range(5) if j != i])
        u = tuple(Fraction(1, 5) - (1 if j == i else 0) for j in range(5))
        hyps.append((u, Fraction(1, 5)))
    L = lattice_from_facets(facets, hyps, ["simplex"] * 5)
    verify_hyperplanes(M, L)
    return M, L


def build_cross4() -> tuple[VertexModel, PolytopeLattice]:
    """Cross polytope with vertices +-e_i; facet normals are the sign vectors."""
    verts = []
    for i in range(4):
        for s in (1, -1):
            verts.append(tuple(Fraction(s * int(i == j)) for j in range(4)))
    M = VertexModel("Q", tuple(verts), (Fraction(0),) * 4, Fraction(1, 2))
    facets, hyps = [], []
    for signs in product((1, -1), repeat=4):
        facets.append([2 * i + (0 if s > 0 else 1) for i, s in enumerate(signs)])
        hyps.append((tuple(Fraction(s) for s in signs), Fraction(1)))
    L = lattice_from_facets(facets, hyps, ["cross"] * 16)
    verify_hyperplanes(M, L)
    return M, L


def cross_facet_signs(L: PolytopeLattice, facet: int) -> tuple:
    return tuple(int(x) for x in L.hyperplanes[facet][0])


def build_cube4() -> tuple[VertexModel, PolytopeLattice]:
    """4-cube with vertices (+-1)^4; edge midpoints have norm^2 3."""
    verts = tuple(tuple(Fraction(s) for s in v) for v in product((1, -1), repeat=4))
    M = VertexModel("Q", verts, (Fraction(0),) * 4, Fraction(3))
    facets, hyps = [], []
    for i in range(4):
        for s in (1, -1):
            facets.append([k for k, v in enumerate(verts) if v[i] == s])
            hyps.append((tuple(Fraction(s * int(i == j)) for j in range(4)), Fraction(1)))
    L = lattice_from_facets(facets, hyps, ["cube"] * 8)
    verify_hyperplanes(M, L)
    return M, L


def _even_permutations(n: int):
    for p in permutations(range(n)):
        inv = sum(1 for i, j in combinations(range(n), 2) if p[i] > p[j])
        if inv % 2 == 0:
            yield p


def binary_icosahedral() -> list[tuple]:
    """The 120 unit quaternions of the binary icosahedral group over Q(sqrt 5)."""
    z, h = QuadNum(0), QuadNum(Fraction(1, 2))
    out = []
    for i in range(4):
        for s in (1, -1):
            out.append(tuple(QuadNum(s * int(i == j)) for j in range(4)))
    for signs in product((1, -1), repeat=4):
        out.append(tuple(h * s for s in signs))
    base = (PHI / 2, QuadNum(Fraction(1, 2)), (PHI - 1) / 2, z)
    for p in _even_permutations(4):
        for signs in product((1, -1), repeat=3):
            vals = [base[0] * signs[0], base[1] * signs[1], base[2] * signs[2], z]
            out.append(tuple(vals[p[k]] for k in range(4)))
    return out


def is_hurwitz(v) -> bool:
    return all(x.b == 0 for x in v)


def _quad_sign_int(a: int, b: int) -> int:
    # sign of a + b*sqrt(5) for integers
    sa, sb = (a > 0) - (a < 0), (b > 0) - (b < 0)
    if sb == 0 or sa == sb:
        return sa or sb
    if sa == 0:
        return sb
    lhs, rhs = a * a, 5 * b * b
    return sa if lhs > rhs else sb if lhs < rhs else 0


class _Model600:
    """Cached Gram data for the 120 unit quaternions.

    Coordinates scaled by 4 are integer pairs (a, b) meaning a + b*sqrt(5), so
    Gram entries are integer pairs scaled by 16.
    """

    _inst = None

    def __init__(self):
        self.vertices = binary_icosahedral()
        n = len(self.vertices)
        iv = [[(int(4 * x.a), int(4 * x.b)) for x in v] for v in self.vertices]
        self.gram_int = []
        for i in range(n):
            row = []
            for j in range(n):
                A = B = 0
                for (a1, b1), (a2, b2) in zip(iv[i], iv[j]):
                    A += a1 * a2 + 5 * b1 * b2
                    B += a1 * b2 + a2 * b1
                row.append((A, B))
            self.gram_int.append(row)
        self.adj = [frozenset(j for j in range(n) if self.gram_int[i][j] == (4, 4))
                    for i in range(n)]

    def gram(self, i: int, j: int) -> QuadNum:
        A, B = self.gram_int[i][j]
        return QuadNum(Fraction(A, 16), Fraction(B, 16))

    @classmethod
    def get(cls):
        if cls._inst is None:
            cls._inst = cls()
        return cls._inst


def four_cliques(adj, allowed=None) -> list[tuple]:
    n = len(adj)
    allowed = set(range(n)) if allowed is None else set(allowed)
    out = []
    for a in sorted(allowed):
        na = {x for x in adj[a] if x > a and x in allowed}
        for b in sorted(na):
            nb = na & adj[b]
            for c in sorted(x for x in nb if x > b):
                for d in sorted(x for x in nb & adj[c] if x > c):
                    out.append((a, b, c, d))
    return out


def _model600(vertices, r2=None) -> VertexModel:
    if r2 is None:
        r2 = (PHI + 2) / 4
    return VertexModel("Q(sqrt5)", tuple(vertices), (QuadNum(0),) * 4, r2)


def _tet_hyperplane(data, tet):
    u = tuple(sum((data.vertices[i][k] for i in tet), QuadNum(0)) for k in range(4))
    return u, sum((data.gram(tet[0], j) for j in tet), QuadNum(0))


def _gram_side(data, lattice):
    """side() for verify_hyperplanes using integer Gram sums."""
    refs = {}
    for f, F in lattice.facet_sets.items():
        if lattice.facet_kind[f] == "tet":
            t = tuple(F)
            A = sum(data.gram_int[t[0]][j][0] for j in t)
            B = sum(data.gram_int[t[0]][j][1] for j in t)
            refs[f] = (t, A, B)
        else:
            refs[f] = ((lattice.facet_apex[f],), 4, 4)

    def side(i, f):
        t, A, B = refs[f]
        g = data.gram_int[i]
        return _quad_sign_int(sum(g[j][0] for j in t) - A, sum(g[j][1] for j in t) - B)

    return side


def cut_600cell(cuts=()) -> tuple[VertexModel, PolytopeLattice]:
    """600-cell with the given vertices cut off; each cut leaves an icosahedral facet.

    Vertex indices refer to :func:`binary_icosahedral` order.
    """
    data = _Model600.get()
    cuts = sorted(set(cuts))
    for a, b in combinations(cuts, 2):
        if b in data.adj[a]:
            raise ValueError(f"cut vertices {a} and {b} are adjacent")
    cutset = set(cuts)
    keep = [i for i in range(120) if i not in cutset]
    facets, hyps, kinds, apex = [], [], [], []
    for tet in four_cliques(data.adj):
        if cutset.isdisjoint(tet):
            facets.append(tet)
            hyps.append(_tet_hyperplane(data, tet))
            kinds.append("tet")
            apex.append(None)
    for w in cuts:
        facets.append(tuple(sorted(data.adj[w])))
        hyps.append((data.vertices[w], PHI / 2))
        kinds.append("ico")
        apex.append(w)
    L = lattice_from_facets(facets, hyps, kinds)
    fidx = {frozenset(F): a for F, a in zip(facets, apex)}
    L.facet_apex = {f: fidx[F] for f, F in L.facet_sets.items()}
    L.cuts = tuple(cuts)
    M = _model600([data.vertices[i] for i in range(120)])
    if L.vertex_index != keep:
        raise ValueError("lattice vertex set does not match the kept vertices")
    verify_hyperplanes(M, L, _gram_side(data, L))
    return M, L


def build_600cell() -> tuple[VertexModel, PolytopeLattice]:
    return cut_600cell(())


def hurwitz_indices() -> list[int]:
    return [i for i, v in enumerate(_Model600.get().vertices) if is_hurwitz(v)]


def build_snub24() -> tuple[VertexModel, PolytopeLattice]:
    """Snub 24-cell built directly on the 96 non-Hurwitz vertices.

    Tetrahedral facets are the 4-cliques of the induced edge graph; each removed
    vertex contributes the icosahedron of its neighbours.
    """
    data = _Model600.get()
    removed = hurwitz_indices()
    keep = [i for i in range(120) if i not in set(removed)]
    facets, hyps, kinds, apex = [], [], [], []
    for tet in four_cliques(data.adj, keep):
        facets.append(tet)
        hyps.append(_tet_hyperplane(data, tet))
        kinds.append("tet")
        apex.append(None)
    for w in removed:
        facets.append(tuple(sorted(data.adj[w])))
        hyps.append((data.vertices[w], PHI / 2))
        kinds.append("ico")
        apex.append(w)
    L = lattice_from_facets(facets, hyps, kinds)
    fidx = {frozenset(F): a for F, a in zip(facets, apex)}
    L.facet_apex = {f: fidx[F] for f, F in L.facet_sets.items()}
    L.cuts = tuple(removed)
    M = _model600(data.vertices)
    verify_hyperplanes(M, L, _gram_side(data, L))
    return M, L


def cap_fvector() -> FVector:
    """Pyramid over an icosahedron: the piece a single cut removes."""
    ico = (12, 30, 20)
    return FVector((1 + ico[0], ico[0] + ico[1], ico[1] + ico[2], ico[2] + 1))


CAP_SIMPLICIAL_FACETS = 20


# --------------------------------------------------------------------------
# tangency and angles
# --------------------------------------------------------------------------


def check_edge_tangent(M: VertexModel, L: PolytopeLattice):
    """(True, r2) iff every edge touches the r2-sphere strictly inside and vertices lie outside."""
    X = L.complex
    r2 = M.r2
    for e in X.by_dim[1]:
        a, b = (L.vertex_index[v] for v in X.vertex_sets[e])
        pa, pb = M.rel(a), M.rel(b)
        d = sub(pb, pa)
        dd = dot(d, d)
        if _sign(dd) == 0:
            raise ValueError(f"edge {e} is degenerate")
        t = -dot(pa, d) / dd
        if not (_sign(t) > 0 and _sign(t - 1) < 0):
            return False, r2
        dist2 = dot(pa, pa) - dot(pa, d) * dot(pa, d) / dd
        if _sign(dist2 - r2) != 0:
            return False, r2
    for i in L.vertex_index:
        p = M.rel(i)
        if _sign(dot(p, p) - r2) <= 0:
            return False, r2
    return True, r2


def _lip(U1, U2):
    # Lorentz product of (u, c/r) vectors, signature (+,...,+,-)
    (u1, c1, r2), (u2, c2, _) = U1, U2
    return dot(u1, u2) - c1 * c2 / r2


def hyperbolic_dihedral_cos2(L: PolytopeLattice, ridge: int, r2):
    """(cos^2 theta, sign of cos theta) at a ridge, from its two facet hyperplanes."""
    fs = L.ridge_facets(ridge)
    if len(fs) != 2:
        raise ValueError(f"ridge {ridge} lies in {len(fs)} facets")
    U = []
    for f in fs:
        u, c = L.hyperplanes[f]
        V = (u, c, r2)
        if _sign(_lip(V, V)) <= 0:
            raise ValueError(f"facet {f} hyperplane misses the ball")
        U.append(V)
    ip = _lip(U[0], U[1])
    cos2 = ip * ip / (_lip(U[0], U[0]) * _lip(U[1], U[1]))
    return cos2, -_sign(ip)


def ridge_dihedrals(L: PolytopeLattice, r2) -> dict:
    """(cos^2, sign) for every ridge, reusing per-facet Lorentz norms."""
    norms = {}
    for f, (u, c) in L.hyperplanes.items():
        n = _lip((u, c, r2), (u, c, r2))
        if _sign(n) <= 0:
            raise ValueError(f"facet {f} hyperplane misses the ball")
        norms[f] = n
    out = {}
    for r in L.ridges():
        fs = L.ridge_facets(r)
        if len(fs) != 2:
            raise ValueError(f"ridge {r} lies in {len(fs)} facets")
        (u1, c1), (u2, c2) = L.hyperplanes[fs[0]], L.hyperplanes[fs[1]]
        ip = _lip((u1, c1, r2), (u2, c2, r2))
        out[r] = (ip * ip / (norms[fs[0]] * norms[fs[1]]), -_sign(ip))
    return out


def dihedral_spectrum(L: PolytopeLattice, r2) -> dict:
    """Distinct (cos^2, sign) values over all ridges with their multiplicities."""
    out: dict = {}
    for key in ridge_dihedrals(L, r2).values():
        out[key] = out.get(key, 0) + 1
    return out


def ridge_kind(L: PolytopeLattice, ridge: int) -> str:
    return "-".join(sorted(L.facet_kind[f] for f in L.ridge_facets(ridge)))


ZOO = {
    "simplex": build_simplex4,
    "cross": build_cross4,
    "cube": build_cube4,
    "600cell": build_600cell,
    "snub24": build_snub24,
}
