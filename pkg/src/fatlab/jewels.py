"""Strictly convex unit-edge polygons tiled by unit triangles and squares.

Edge directions are multiples of 30 degrees.  Points are stored as integer
4-tuples (xa, xb, ya, yb) meaning x = (xa + xb*sqrt3)/2, y = (ya + yb*sqrt3)/2,
so every geometric predicate is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

TILE_CAP = 24

# unit vectors at k*30 degrees, k = 0..5; k + 6 is the negation
_BASE = [(2, 0, 0, 0), (0, 1, 1, 0), (1, 0, 0, 1), (0, 0, 2, 0), (-1, 0, 0, 1), (0, -1, 1, 0)]
UNIT = _BASE + [tuple(-c for c in v) for v in _BASE]

# interior angles available at a polygon corner, as turns of 30 degrees
ALLOWED_TURNS = {"tri": {2, 4}, "trisq": {1, 2, 3, 4}}


def add(p, q):
    return (p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3])


def _mul(a, b):
    # (a0 + a1 r3)(b0 + b1 r3)
    return (a[0] * b[0] + 3 * a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _sgn(a) -> int:
    x, y = a
    sx, sy = (x > 0) - (x < 0), (y > 0) - (y < 0)
    if sy == 0 or sx == sy:
        return sx or sy
    if sx == 0:
        return sy
    lhs, rhs = x * x, 3 * y * y
    return sx if lhs > rhs else sy if lhs < rhs else 0


def proj(p, k: int):
    """4 * (p . u_k) as an element (a, b) of Z[sqrt3]."""
    u = UNIT[k % 12]
    a = _mul((p[0], p[1]), (u[0], u[1]))
    b = _mul((p[2], p[3]), (u[2], u[3]))
    return (a[0] + b[0], a[1] + b[1])


def _cmp(a, b) -> int:
    return _sgn((a[0] - b[0], a[1] - b[1]))


def polygon_vertices(dirs) -> list:
    pts = [(0, 0, 0, 0)]
    for d in dirs[:-1]:
        pts.append(add(pts[-1], UNIT[d]))
    return pts


def closes(dirs) -> bool:
    s = (0, 0, 0, 0)
    for d in dirs:
        s = add(s, UNIT[d])
    return s == (0, 0, 0, 0)


def double_area(pts):
    """Twice the shoelace area as (a, b) in Z[sqrt3], scaled by 1/4."""
    A = (0, 0)
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        t1 = _mul((p[0], p[1]), (q[2], q[3]))
        t2 = _mul((q[0], q[1]), (p[2], p[3]))
        A = (A[0] + t1[0] - t2[0], A[1] + t1[1] - t2[1])
    return A


def tile_counts(dirs) -> tuple[int, int] | None:
    """(triangles, squares) forced by the polygon area, or None if no count fits."""
    a, b = double_area(polygon_vertices(dirs))
    # area = a/8 + (b/8) sqrt3 = squares + triangles * sqrt3/4
    if a % 8 or b % 2:
        return None
    return b // 2, a // 8


def canonical_dirs(dirs) -> tuple:
    """Least direction set under rotations and reflections of the 30-degree lattice."""
    cands = []
    for r in range(12):
        for s in (1, -1):
            cands.append(tuple(sorted((s * d + r) % 12 for d in dirs)))
    return min(cands)


def turns(dirs) -> list[int]:
    n = len(dirs)
    return [(dirs[(i + 1) % n] - dirs[i]) % 12 for i in range(n)]


def candidate_polygons(kind: str = "trisq") -> list[tuple]:
    """Canonical direction sets of closed strictly convex polygons with tileable corners."""
    allowed = ALLOWED_TURNS[kind]
    seen = set()
    for m in range(3, 13):
        for dirs in combinations(range(12), m):
            if not set(turns(dirs)) <= allowed or not closes(dirs):
                continue
            seen.add(canonical_dirs(dirs))
    return sorted(seen, key=lambda d: (len(d), d))


# --------------------------------------------------------------------------
# tiling search
# --------------------------------------------------------------------------


def _tile(kind: str, p, d: int) -> tuple:
    if kind == "tri":
        return (p, add(p, UNIT[d]), add(p, UNIT[(d + 2) % 12]))
    q = add(p, UNIT[d])
    return (p, q, add(q, UNIT[(d + 3) % 12]), add(p, UNIT[(d + 3) % 12]))


def _tile_dirs(kind: str, d: int) -> list[int]:
    if kind == "tri":
        return [d, (d + 4) % 12, (d + 8) % 12]
    return [d, (d + 3) % 12, (d + 6) % 12, (d + 9) % 12]


def _separated(P, Pd, Q, Qd) -> bool:
    """Interiors of convex polygons P, Q (with edge directions) are disjoint."""
    for k in set(Pd) | set(Qd):
        n = (k + 3) % 12
        if _cmp(_exact_max(P, n), _exact_min(Q, n)) <= 0 or _cmp(_exact_max(Q, n), _exact_min(P, n)) <= 0:
            return True
    return False


def _exact_max(P, n):
    best = proj(P[0], n)
    for x in P[1:]:
        v = proj(x, n)
        if _cmp(v, best) > 0:
            best = v
    return best


def _exact_min(P, n):
    best = proj(P[0], n)
    for x in P[1:]:
        v = proj(x, n)
        if _cmp(v, best) < 0:
            best = v
    return best


def _inside(poly, poly_dirs, pts) -> bool:
    for i, d in enumerate(poly_dirs):
        n = (d + 3) % 12  # inward normal of a CCW edge
        base = proj(poly[i], n)
        for x in pts:
            if _cmp(proj(x, n), base) < 0:
                return False
    return True


def tilings(dirs, kinds=("tri", "sq"), limit: int | None = None) -> list[list[tuple]]:
    """All edge-to-edge tilings of the polygon; each tiling is a list of (kind, vertices)."""
    dirs = tuple(dirs)
    poly = polygon_vertices(dirs)
    counts = tile_counts(dirs)
    if counts is None:
        return []
    t_need, s_need = counts
    if t_need + s_need > TILE_CAP:
        raise AssertionError(f"polygon needs {t_need + s_need} tiles, above the cap")
    frontier = {(poly[i], poly[(i + 1) % len(poly)]): dirs[i] for i in range(len(poly))}
    placed: list = []
    out: list = []

    def rec(nt, ns):
        if limit is not None and len(out) >= limit:
            return
        if not frontier:
            out.append(list(placed))
            return
        (a, b) = min(frontier)
        d = frontier[(a, b)]
        for kind in kinds:
            if kind == "tri" and nt == t_need or kind == "sq" and ns == s_need:
                continue
            T = _tile(kind, a, d)
            Td = _tile_dirs(kind, d)
            if not _inside(poly, dirs, T):
                continue
            if any(not _separated(T, Td, P, Pd) for _, P, Pd in placed):
                continue
            changes = []
            m = len(T)
            for i in range(m):
                x, y = T[i], T[(i + 1) % m]
                if (x, y) in frontier:
                    changes.append(("del", (x, y), frontier.pop((x, y))))
                else:
                    key = (y, x)
                    if key in frontier:
                        raise AssertionError("frontier edge would be doubled")
                    frontier[key] = (Td[i] + 6) % 12
                    changes.append(("add", key, None))
            placed.append((kind, T, Td))
            rec(nt + (kind == "tri"), ns + (kind == "sq"))
            placed.pop()
            for op, key, val in reversed(changes):
                if op == "del":
                    frontier[key] = val
                else:
                    del frontier[key]

    rec(0, 0)
    return [[(k, T) for k, T, _ in til] for til in out]


def adjacent_square_pairs(tiling) -> int:
    """Number of tile sides shared by two squares."""
    edges: dict = {}
    for kind, T in tiling:
        if kind != "sq":
            continue
        for i in range(len(T)):
            e = frozenset((T[i], T[(i + 1) % len(T)]))
            edges[e] = edges.get(e, 0) + 1
    return sum(1 for c in edges.values() if c == 2)


@dataclass(frozen=True)
class Jewel:
    dirs: tuple
    triangles: int
    squares: int
    tilings: tuple
    bouquet_convex: bool

    @property
    def tiles(self) -> int:
        return self.triangles + self.squares

    @property
    def corners(self) -> tuple:
        """Interior angles in degrees, walking counterclockwise."""
        return tuple(180 - 30 * t for t in turns(self.dirs))

    def to_json(self) -> dict:
        return {
            "dirs": list(self.dirs),
            "corners": list(self.corners),
            "triangles": self.triangles,
            "squares": self.squares,
            "tilings": len(self.tilings),
            "bouquet_convex": self.bouquet_convex,
        }


def _catalog(kind: str) -> list[Jewel]:
    kinds = ("tri",) if kind == "tri" else ("tri", "sq")
    out = []
    for dirs in candidate_polygons(kind):
        counts = tile_counts(dirs)
        if counts is None:
            continue
        t, s = counts
        if kind == "tri" and s:
            continue
        tl = tilings(dirs, kinds)
        if not tl:
            continue
        convex = any(adjacent_square_pairs(x) == 0 for x in tl)
        out.append(Jewel(dirs, t, s, tuple(tuple(x) for x in tl), convex))
    return out


def enumerate_triangle_jewels() -> list[Jewel]:
    return _catalog("tri")


def enumerate_square_triangle_jewels() -> list[Jewel]:
    return _catalog("trisq")


def triangle_only(jewels) -> list[Jewel]:
    """Jewels admitting a tiling by triangles alone, with those tilings only."""
    out = []
    for j in jewels:
        tl = tuple(t for t in j.tilings if all(k == "tri" for k, _ in t))
        if tl:
            out.append(Jewel(j.dirs, j.triangles, j.squares, tl, j.bouquet_convex))
    return out


def triangle_jewel_corner_sequences() -> set:
    """Cyclic corner sequences (in units of pi/3) of triangle jewels, up to dihedral symmetry."""
    out = set()
    for j in enumerate_triangle_jewels():
        out.add(_canonical_cycle(tuple(c // 60 for c in j.corners)))
    return out


def _canonical_cycle(seq) -> tuple:
    n = len(seq)
    cands = []
    for s in (seq, seq[::-1]):
        for r in range(n):
            cands.append(tuple(s[r:] + s[:r]))
    return min(cands)
