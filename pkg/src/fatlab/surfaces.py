"""The one-vertex surface S_g and its F_q abelian cover S'_g.

S_g glues opposite sides of a 4g-gon: its face walk is
x_0 ... x_{2g-1} x_0^-1 ... x_{2g-1}^-1.  S'_g has vertex set F_q (q = 4g+1),
edges v -> v + alpha^i for i < 2g, and one face F^s per s in F_q whose k-th
vertex is s + (alpha^k - 1)/(alpha - 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .complex import Cell, SurfaceComplex, dual_graph, is_regular
from .exact import GF, GFElem, gf_generator, gf_make, prime_power


def build_sg(g: int) -> SurfaceComplex:
    """Perfect cellulation with f-vector (1, 2g, 1)."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    cells = [Cell(0, 0, frozenset())]
    for i in range(2 * g):
        cells.append(Cell(1 + i, 1, frozenset({0}), ends=(0, 0)))
    walk = tuple(1 + i for i in range(2 * g)) + tuple(-(1 + i) for i in range(2 * g))
    cells.append(Cell(2 * g + 1, 2, frozenset(range(1, 2 * g + 1)), walk))
    S = SurfaceComplex(cells)
    S.genus = g
    return S


@dataclass
class CoverSurface:
    """S'_g with its field data and labels."""

    g: int
    field: GF
    alpha: GFElem
    complex: SurfaceComplex
    elements: list  # vertex id -> field element
    edge_of: dict = field(default_factory=dict)  # (i, tail element index) -> edge id
    face_of: dict = field(default_factory=dict)  # s index -> face id

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def genus(self) -> int:
        return 1 + self.q * (self.g - 1)

    def label(self, s: GFElem, k: int) -> GFElem:
        """v_k^s = s + (alpha^k - 1)/(alpha - 1)."""
        one = self.field.one
        return s + (self.alpha ** (k % (4 * self.g)) - one) / (self.alpha - one)

    def face_vertices(self, s: GFElem) -> list:
        return [self.label(s, k) for k in range(4 * self.g)]


def build_sg_prime(g: int) -> CoverSurface:
    if g < 1:
        raise ValueError("genus must be at least 1")
    q = 4 * g + 1
    if prime_power(q) is None:
        raise ValueError(f"q = {q} is not a prime power")
    F = gf_make(q)
    alpha = gf_generator(F)
    elems = F.elements()
    if alpha ** (2 * g) != -F.one:
        raise AssertionError("alpha^(2g) != -1")
    idx = {e: i for i, e in enumerate(elems)}
    cells = [Cell(i, 0, frozenset()) for i in range(q)]
    edge_of = {}
    for i in range(2 * g):
        step = alpha ** i
        for v in elems:
            eid = len(cells)
            w = v + step
            cells.append(Cell(eid, 1, frozenset({idx[v], idx[w]}), ends=(idx[v], idx[w])))
            edge_of[(i, idx[v])] = eid
    cover = CoverSurface(g, F, alpha, None, elems, edge_of)
    for s in elems:
        walk = []
        for k in range(4 * g):
            if k < 2 * g:
                walk.append(edge_of[(k, idx[cover.label(s, k)])])
            else:
                walk.append(-edge_of[(k - 2 * g, idx[cover.label(s, k + 1)])])
        fid = len(cells)
        cells.append(Cell(fid, 2, frozenset(abs(x) for x in walk), tuple(walk)))
        cover.face_of[idx[s]] = fid
    S = SurfaceComplex(cells)
    S.genus = cover.genus
    cover.complex = S
    return cover


@dataclass
class CheckReport:
    items: dict

    @property
    def ok(self) -> bool:
        return all(v for v in self.items.values())

    def failures(self) -> list:
        return [k for k, v in self.items.items() if not v]


def verify_cover_structure(C: CoverSurface) -> CheckReport:
    """Regularity, counts, complete skeleton and dual, shared vertices of facet pairs."""
    S, q, g = C.complex, C.q, C.g
    items = {}
    items["regular"] = is_regular(S)[0]
    items["f-vector"] = tuple(S.f_vector()) == (q, 2 * g * q, q)
    faces = S.by_dim[2]
    fverts = {f: S.walk_vertices(f) for f in faces}
    items["facet-vertices"] = all(len(set(v)) == 4 * g == len(v) for v in fverts.values())
    degree = {v: 0 for v in S.by_dim[0]}
    pairs = set()
    simple = True
    for e in S.by_dim[1]:
        a, b = S.cells[e].ends
        if a == b or frozenset((a, b)) in pairs:
            simple = False
        pairs.add(frozenset((a, b)))
        degree[a] += 1
        degree[b] += 1
    items["skeleton-complete"] = simple and len(pairs) == q * (q - 1) // 2
    items["vertex-degree"] = all(d == 4 * g for d in degree.values())
    D = dual_graph(S)
    complete = D.number_of_edges() == q * (q - 1) // 2
    for a, b in combinations(faces, 2):
        if D.number_of_edges(a, b) != 1:
            complete = False
    items["dual-complete"] = complete
    items["shared-vertices"] = all(
        len(set(fverts[a]) & set(fverts[b])) - 2 == q - 4 for a, b in combinations(faces, 2)
    )
    items["labels"] = labeling_closed_form(C)
    items["euler"] = q - 2 * g * q + q == 2 - 2 * C.genus
    return CheckReport(items)


def labeling_closed_form(C: CoverSurface) -> bool:
    """Walk vertices match v_k^s, with successive differences alpha^k."""
    S = C.complex
    for si, fid in C.face_of.items():
        s = C.elements[si]
        labels = C.face_vertices(s)
        if [C.elements[v] for v in S.walk_vertices(fid)] != labels:
            return False
        for k in range(4 * C.g):
            if labels[(k + 1) % (4 * C.g)] - labels[k] != C.alpha ** k:
                return False
    return True


def first_prime_power_genus(g: int, limit: int = 10_000) -> int:
    """Least g' >= g with 4g'+1 a prime power."""
    for h in range(g, g + limit):
        if prime_power(4 * h + 1) is not None:
            return h
    raise ValueError(f"no prime power 4g+1 for g in [{g}, {g + limit})")
