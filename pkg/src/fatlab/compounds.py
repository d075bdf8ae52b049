"""Edge-tangent compounds as combinatorial objects.

Atoms carry global vertex labels, their facets and the hyperbolic dihedral
angle at each ridge.  Two atoms sharing a facet vertex set are glued along it.
Convexity is decided by exact angle sums at ridges.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from .complex import CellComplex, FVector, simplicial_closure
from .exact import PI, TWO_PI, AnglePi, angle_cmp, angle_sum, cos_squared_and_sign
from .jewels import enumerate_triangle_jewels
from . import zoo

# --------------------------------------------------------------------------
# angles and atom data
# --------------------------------------------------------------------------

_CANDIDATE_DENOMS = (1, 2, 3, 4, 5, 6)


@lru_cache(maxsize=None)
def angle_from_cos2(cos2, sign) -> AnglePi:
    """The unique angle in (0, pi) with the given (cos^2, sign of cos)."""
    hits = []
    for den in _CANDIDATE_DENOMS:
        for k in range(1, den):
            a = AnglePi.of(k, den)
            if a.coefficient.denominator != den:
                continue
            c2, s = cos_squared_and_sign(a)
            if c2 == cos2 and s == sign:
                hits.append(a)
    if len(hits) != 1:
        raise ValueError(f"no unique angle with cos^2={cos2}, sign={sign}")
    return hits[0]


@lru_cache(maxsize=None)
def atom_lattice(name: str):
    """(lattice, ridge angles by cell id) for a named atom; angles come from the zoo."""
    if name == "simplex":
        M, L = zoo.build_simplex4()
    elif name == "cross":
        M, L = zoo.build_cross4()
    elif name.startswith("600"):
        cuts = tuple(int(x) for x in name.split(":")[1].split(",") if x) if ":" in name else ()
        M, L = zoo.cut_600cell(cuts)
    else:
        raise ValueError(f"unknown atom {name}")
    angles = {r: angle_from_cos2(*v) for r, v in zoo.ridge_dihedrals(L, M.r2).items()}
    return L, angles


def atom_dihedrals(name: str) -> dict:
    """Distinct dihedral angles of an atom, keyed by the facet kinds at the ridge."""
    L, angles = atom_lattice(name)
    out: dict = {}
    for r, a in angles.items():
        out.setdefault(zoo.ridge_kind(L, r), set()).add(a)
    return out


@dataclass(frozen=True)
class AtomType:
    name: str
    dihedral: AnglePi
    link_polygon: tuple

    def link_angle_sum_ok(self) -> bool:
        k = len(self.link_polygon)
        return angle_sum(self.link_polygon) == AnglePi(k - 2)


def atom_types() -> dict:
    """Edge-link polygons of each atom, as corner angles."""
    s = AnglePi.of(1, 3)
    c = AnglePi.of(1, 2)
    t = AnglePi.of(3, 5)
    cut = AnglePi.of(2, 5)
    dbl = AnglePi.of(1, 5)
    return {
        "simplex": AtomType("simplex", s, (s, s, s)),
        "cross": AtomType("cross", c, (c, c, c, c)),
        "600cell": AtomType("600cell", t, (t, t, t, t, t)),
        "cut600": AtomType("cut600", t, (t, t, cut, cut)),
        "cut600x2": AtomType("cut600x2", t, (cut, cut, dbl)),
    }


@dataclass
class Atom:
    kind: str
    vertices: frozenset
    facets: tuple
    facet_kind: dict
    ridge_angle: dict
    ridge_facets: dict

    def relabel(self, m) -> Atom:
        f = lambda s: frozenset(m[x] for x in s)  # noqa: E731
        return Atom(
            self.kind,
            f(self.vertices),
            tuple(f(F) for F in self.facets),
            {f(F): k for F, k in self.facet_kind.items()},
            {f(r): a for r, a in self.ridge_angle.items()},
            {f(r): tuple(f(F) for F in fs) for r, fs in self.ridge_facets.items()},
        )


def atom_from_lattice(name: str, labels) -> Atom:
    """Atom of a named type with model vertex i labelled ``labels[i]``."""
    L, angles = atom_lattice(name)
    lab = lambda s: frozenset(labels[i] for i in s)  # noqa: E731
    facets = tuple(lab(L.facet_sets[f]) for f in L.facets)
    kinds = {lab(L.facet_sets[f]): L.facet_kind.get(f, name) for f in L.facets}
    ridge_angle, ridge_facets = {}, {}
    for r in L.ridges():
        key = lab(L.vertex_set(r))
        ridge_angle[key] = angles[r]
        ridge_facets[key] = tuple(lab(L.facet_sets[f]) for f in L.ridge_facets(r))
    verts = frozenset(labels[i] for i in L.vertex_index)
    return Atom(name.split(":")[0], verts, facets, kinds, ridge_angle, ridge_facets)


def simplex_atom(labels) -> Atom:
    labels = list(labels)
    if len(set(labels)) != 5:
        raise ValueError("a 4-simplex needs 5 distinct labels")
    return atom_from_lattice("simplex", labels)


def cross_atom(pairs) -> Atom:
    """Cross polytope on antipodal label pairs (+e_j, -e_j), j = 0..3."""
    labels = [x for p in pairs for x in p]
    if len(set(labels)) != 8:
        raise ValueError("a cross polytope needs 8 distinct labels")
    return atom_from_lattice("cross", labels)


# --------------------------------------------------------------------------
# compounds
# --------------------------------------------------------------------------


class Compound:
    def __init__(self, atoms):
        atoms = list(atoms)
        if not atoms:
            raise ValueError("a compound needs at least one atom")
        self.atoms = atoms
        count = Counter(F for a in atoms for F in a.facets)
        over = [F for F, c in count.items() if c > 2]
        if over:
            raise ValueError(f"facet {sorted(over[0])} is glued more than once")
        self.facet_count = count
        for a, b in combinations(atoms, 2):
            if a.vertices == b.vertices and set(a.facets) == set(b.facets):
                raise ValueError("duplicate atom")

    @property
    def glued_facets(self) -> list:
        return [F for F, c in self.facet_count.items() if c == 2]

    @property
    def boundary_facets(self) -> list:
        return [F for F, c in self.facet_count.items() if c == 1]

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*(a.vertices for a in self.atoms))

    def ridge_angles(self) -> dict:
        out: dict = {}
        for a in self.atoms:
            for r, ang in a.ridge_angle.items():
                out[r] = out.get(r, AnglePi(0)) + ang
        return out

    def boundary_ridges(self) -> dict:
        """Boundary ridge -> boundary facets containing it."""
        out: dict = {}
        bset = set(self.boundary_facets)
        for a in self.atoms:
            for r, fs in a.ridge_facets.items():
                for F in fs:
                    if F in bset:
                        out.setdefault(r, set()).add(F)
        return out


VERDICTS = ("strictly-convex", "flat", "reflex", "interior-ok", "interior-deficient")


@dataclass
class ConvexityReport:
    verdicts: dict
    convex: bool

    def counts(self) -> dict:
        c = Counter(self.verdicts.values())
        return {v: c.get(v, 0) for v in VERDICTS}

    def ridges(self, verdict: str) -> list:
        return sorted((r for r, v in self.verdicts.items() if v == verdict), key=sorted)


def check_convex(C: Compound) -> ConvexityReport:
    """Classify every ridge by its total dihedral angle."""
    angles = C.ridge_angles()
    bridges = C.boundary_ridges()
    verdicts = {}
    for r, total in angles.items():
        if r in bridges:
            if len(bridges[r]) != 2:
                raise ValueError(f"inconsistent fan at ridge {sorted(r)}")
            c = angle_cmp(total, PI)
            verdicts[r] = "strictly-convex" if c < 0 else "flat" if c == 0 else "reflex"
        else:
            verdicts[r] = "interior-ok" if total == TWO_PI else "interior-deficient"
    convex = all(v in ("strictly-convex", "interior-ok") for v in verdicts.values())
    return ConvexityReport(verdicts, convex)


def boundary_complex(C: Compound) -> CellComplex:
    facets = C.boundary_facets
    if all(len(F) == 4 for F in facets):
        return simplicial_closure(facets)[0]
    return zoo.lattice_from_facets(facets).complex


def compound_fvector(C: Compound) -> FVector:
    return boundary_complex(C).f_vector()


# --------------------------------------------------------------------------
# edge links
# --------------------------------------------------------------------------


@dataclass
class EdgeLink:
    edge: frozenset
    polygons: list  # (atom index, link-vertex set, link edges)
    angles: dict  # link vertex -> total angle
    boundary_edges: list
    interior: frozenset = field(default_factory=frozenset)

    def boundary_cycle(self) -> list:
        adj: dict = {}
        for a, b in self.boundary_edges:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        if not adj:
            return []
        if any(len(v) != 2 for v in adj.values()):
            raise ValueError("link boundary is not a cycle")
        start = min(adj, key=repr)
        cyc, prev, cur = [start], None, start
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            if nxt == start:
                break
            cyc.append(nxt)
            prev, cur = cur, nxt
        return cyc

    def corner_angles(self) -> list:
        return [self.angles[w] for w in self.boundary_cycle()]


def edge_link(C: Compound, e) -> EdgeLink:
    e = frozenset(e)
    polys = []
    angles: dict = {}
    edge_count: Counter = Counter()
    for i, a in enumerate(C.atoms):
        if not e <= a.vertices:
            continue
        verts = set()
        for r, ang in a.ridge_angle.items():
            if e <= r:
                (w,) = r - e
                verts.add(w)
                angles[w] = angles.get(w, AnglePi(0)) + ang
        ledges = []
        for F in a.facets:
            if e <= F:
                ws = [w for w in verts if e | {w} <= F]
                if len(ws) != 2:
                    raise ValueError("facet meets the edge link in other than a segment")
                ledges.append(frozenset(ws))
                edge_count[(frozenset(ws), F)] += 1
        if verts:
            polys.append((i, frozenset(verts), ledges))
    bset = set(C.boundary_facets)
    boundary = [tuple(sorted(ws, key=repr)) for (ws, F) in edge_count if F in bset]
    on_boundary = {w for ws in boundary for w in ws}
    interior = frozenset(w for w in angles if w not in on_boundary)
    return EdgeLink(e, polys, angles, boundary, interior)


def compound_edges(C: Compound) -> set:
    out = set()
    for a in C.atoms:
        for r in a.ridge_angle:
            for p in combinations(sorted(r, key=repr), 2):
                out.add(frozenset(p))
    return out


# --------------------------------------------------------------------------
# triangle-jewel embedding (link pruning for simplex compounds)
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _jewel_triangle_complexes() -> tuple:
    out = []
    for j in enumerate_triangle_jewels():
        for til in j.tilings:
            ids: dict = {}
            tris = []
            for _, T in til:
                tris.append(frozenset(ids.setdefault(p, len(ids)) for p in T))
            out.append((len(ids), tuple(tris)))
    return tuple(out)


def _embeds(tris, target, full: bool) -> bool:
    nverts, ttris = target
    tris = list(tris)
    if len(tris) > len(ttris):
        return False
    if full and len(tris) != len(ttris):
        return False
    lverts = {v for t in tris for v in t}
    if full and len(lverts) != nverts:
        return False
    tset = set(ttris)

    def rec(i, m, used):
        if i == len(tris):
            return True
        t = sorted(tris[i], key=repr)
        for T in ttris:
            for img in permutations(sorted(T)):
                ok = True
                m2 = dict(m)
                u2 = set(used)
                for x, y in zip(t, img):
                    if x in m2:
                        if m2[x] != y:
                            ok = False
                            break
                    elif y in u2:
                        ok = False
                        break
                    else:
                        m2[x] = y
                        u2.add(y)
                if ok and frozenset(m2[x] for x in t) in tset and rec(i + 1, m2, u2):
                    return True
        return False

    return rec(0, {}, set())


def link_triangles(C: Compound, e) -> list:
    e = frozenset(e)
    return [a.vertices - e for a in C.atoms if e <= a.vertices]


def link_embeds_in_jewel(tris, full: bool = False) -> bool:
    return any(_embeds(tris, J, full) for J in _jewel_triangle_complexes())


# --------------------------------------------------------------------------
# canonical forms
# --------------------------------------------------------------------------


def canonical_form(atom_sets, kinds=None) -> tuple:
    """Relabeling-invariant form of a set of labelled atoms.

    Vertex classes are refined by incidence counts, then every relabeling that
    respects the classes is tried; the least sorted atom list wins.
    """
    atom_sets = [frozenset(s) for s in atom_sets]
    kinds = kinds or ["x"] * len(atom_sets)
    verts = sorted({v for s in atom_sets for v in s}, key=repr)
    color = {v: 0 for v in verts}
    for _ in range(len(verts)):
        sig = {
            v: (color[v], tuple(sorted((kinds[i], tuple(sorted(color[w] for w in s)))
                                       for i, s in enumerate(atom_sets) if v in s)))
            for v in verts
        }
        keys = sorted(set(sig.values()))
        new = {v: keys.index(sig[v]) for v in verts}
        if len(set(new.values())) == len(set(color.values())):
            color = new
            break
        color = new
    classes: dict = {}
    for v in verts:
        classes.setdefault(color[v], []).append(v)
    order = sorted(classes)
    offsets, pos = {}, 0
    for c in order:
        offsets[c] = pos
        pos += len(classes[c])
    best = None
    for perms in product(*(permutations(classes[c]) for c in order)):
        m = {}
        for c, p in zip(order, perms):
            for k, v in enumerate(p):
                m[v] = offsets[c] + k
        form = tuple(sorted((kinds[i], tuple(sorted(m[v] for v in s)))
                            for i, s in enumerate(atom_sets)))
        if best is None or form < best:
            best = form
    return best


# --------------------------------------------------------------------------
# simplex compounds
# --------------------------------------------------------------------------


def _simplex_compound(atom_sets) -> Compound:
    return Compound([simplex_atom(sorted(s)) for s in atom_sets])


def _links_ok(atom_sets, full: bool) -> bool:
    edges = set()
    for s in atom_sets:
        edges.update(frozenset(p) for p in combinations(sorted(s), 2))
    for e in edges:
        tris = [s - e for s in atom_sets if e <= s]
        if not link_embeds_in_jewel(tris, full=full):
            return False
    return True


def _facet_counts(atom_sets) -> Counter:
    return Counter(frozenset(F) for s in atom_sets for F in combinations(sorted(s), 4))


@dataclass
class SearchResult:
    compounds: list
    states_seen: int
    frontier_sizes: list
    rejected_extensions: int


def classify_simplex_compounds(max_atoms: int = 12) -> SearchResult:
    """Breadth-first search over gluings of 4-simplices with edge-link pruning.

    A state is a set of 5-vertex atoms; an extension glues a new simplex onto a
    boundary facet, closing it with an existing or a new vertex.  States whose
    edge links do not embed into a triangle jewel are dropped.  A state is
    complete when every edge link is a whole jewel and the compound is convex.
    """
    start = (frozenset(range(5)),)
    seen = {canonical_form(start)}
    frontier = [start]
    done = []
    sizes = []
    rejected = 0
    for _ in range(max_atoms):
        if not frontier:
            break
        sizes.append(len(frontier))
        nxt = []
        for state in frontier:
            if _links_ok(state, full=True) and check_convex(_simplex_compound(state)).convex:
                done.append(state)
            counts = _facet_counts(state)
            verts = sorted({v for s in state for v in s})
            fresh = max(verts) + 1
            for F in sorted((F for F, c in counts.items() if c == 1), key=sorted):
                for x in [v for v in verts if v not in F] + [fresh]:
                    new = F | {x}
                    if new in state:
                        continue
                    cand = state + (new,)
                    if max(_facet_counts(cand).values()) > 2 or not _links_ok(cand, full=False):
                        rejected += 1
                        continue
                    key = canonical_form(cand)
                    if key in seen:
                        continue
                    seen.add(key)
                    nxt.append(cand)
        frontier = nxt
    if frontier:
        raise AssertionError(f"search frontier not exhausted at {max_atoms} atoms")
    compounds = sorted(done, key=lambda s: (len(s), canonical_form(s)))
    return SearchResult(compounds, len(seen), sizes, rejected)


def simplex_compound_fvectors(result: SearchResult) -> list:
    return [compound_fvector(_simplex_compound(s)) for s in result.compounds]


# --------------------------------------------------------------------------
# cross polytope with simplices
# --------------------------------------------------------------------------

CROSS_PAIRS = tuple((f"p{j}", f"q{j}") for j in range(4))


def cross_facet(signs) -> frozenset:
    return frozenset(CROSS_PAIRS[j][0 if s > 0 else 1] for j, s in enumerate(signs))


def cross_with_simplices(sign_vectors) -> Compound:
    """A cross polytope with one simplex glued onto each listed facet."""
    atoms = [cross_atom(CROSS_PAIRS)]
    for i, s in enumerate(sign_vectors):
        atoms.append(simplex_atom(sorted(cross_facet(s)) + [f"a{i}"]))
    return Compound(atoms)


# --------------------------------------------------------------------------
# chains and rings
# --------------------------------------------------------------------------


def _cross_chain_atoms(n: int) -> list:
    # cross i has pairs (v[i][j], v[i+1][j]); its +facet is glued to the -facet of cross i+1
    atoms = []
    for i in range(n):
        pairs = [(f"x{i + 1}.{j}", f"x{i}.{j}") for j in range(4)]
        atoms.append(cross_atom(pairs))
    return atoms


def build_cross_chain(n: int, caulk: bool = True) -> Compound:
    """n cross polytopes glued end to end, each flat ridge filled by three simplices."""
    if n < 1:
        raise ValueError("n must be positive")
    C = Compound(_cross_chain_atoms(n))
    if not caulk:
        return C
    atoms = list(C.atoms)
    flats = check_convex(C).ridges("flat")
    bridges = C.boundary_ridges()
    for k, r in enumerate(flats):
        F1, F2 = sorted(bridges[r], key=sorted)
        (u1,) = F1 - r
        (u2,) = F2 - r
        p, q = f"c{k}.p", f"c{k}.q"
        rs = sorted(r)
        atoms.append(simplex_atom(rs + [u1, p]))
        atoms.append(simplex_atom(rs + [p, q]))
        atoms.append(simplex_atom(rs + [q, u2]))
    return Compound(atoms)


def flat_ridges_before_caulking(n: int) -> int:
    return len(check_convex(build_cross_chain(n, caulk=False)).ridges("flat"))


def _antipode_map() -> list:
    data = zoo._Model600.get()
    idx = {v: i for i, v in enumerate(data.vertices)}
    return [idx[tuple(-x for x in v)] for v in data.vertices]


CHAIN_CUT = 0  # cut at vertex 0 and at its antipode


def build_cut600_chain(n: int) -> Compound:
    """n cut 600-cells, consecutive atoms glued along icosahedral facets by y -> -y."""
    if n < 1:
        raise ValueError("n must be positive")
    neg = _antipode_map()
    w, mw = CHAIN_CUT, neg[CHAIN_CUT]
    parent: dict = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    data = zoo._Model600.get()
    for i in range(n - 1):
        # icosahedron around w in atom i meets the one around -w in atom i+1
        for y in data.adj[w]:
            a, b = find((i, y)), find((i + 1, neg[y]))
            if a != b:
                parent[max(a, b)] = min(a, b)
    atoms = []
    for i in range(n):
        cuts = []
        if i < n - 1:
            cuts.append(w)
        if i > 0:
            cuts.append(mw)
        name = "600:" + ",".join(str(c) for c in sorted(cuts))
        labels = {y: find((i, y)) for y in range(120)}
        atoms.append(atom_from_lattice(name, labels))
    return Compound(atoms)


def glued_ridge_angles(C: Compound) -> set:
    """Total angles at ridges of glued facets."""
    glued = set(C.glued_facets)
    angles = C.ridge_angles()
    out = set()
    for a in C.atoms:
        for r, fs in a.ridge_facets.items():
            if any(F in glued for F in fs):
                if C.boundary_ridges().get(r):
                    out.add(angles[r])
    return out


def doubly_cut_link() -> tuple:
    """Corner angles of the edge link of an edge next to two cuts of one 600-cell."""
    data = zoo._Model600.get()
    for w1 in range(120):
        for w2 in range(w1 + 1, 120):
            if w2 in data.adj[w1]:
                continue
            common = data.adj[w1] & data.adj[w2]
            for x, y in combinations(sorted(common), 2):
                if y in data.adj[x]:
                    a = atom_from_lattice(f"600:{w1},{w2}", list(range(120)))
                    link = edge_link(Compound([a]), (x, y))
                    return tuple(link.corner_angles())
    raise AssertionError("no edge adjacent to two cuts")


def ring_of_ten_check(copies: int = 10) -> dict:
    """Angle bookkeeping for doubly-cut 600-cells sharing one triangle."""
    corners = doubly_cut_link()
    small = min(corners, key=lambda a: a.coefficient)
    others = [c for c in corners if c != small] if corners.count(small) == 1 else []
    total = angle_sum([small] * copies)
    decagon = [o + o for o in others[:1]] * copies
    return {
        "link_corners": corners,
        "shared_angle": small,
        "copies": copies,
        "total": total,
        "verdict": "interior-ok" if total == TWO_PI else "interior-deficient",
        "outer_corners": decagon,
        "outer_convex": all(angle_cmp(c, PI) < 0 for c in decagon),
    }


def e_ratio(f) -> Fraction:
    return Fraction(6 * f[3], f[1])
