"""Simplices glued onto pairwise non-adjacent facets of a cross polytope.

Facets of the 4-dimensional cross polytope are sign vectors in {+1,-1}^4 and
two facets share a ridge iff their sign vectors differ in one coordinate, so
admissible facet sets are the independent sets of the 4-cube graph.  They are
counted up to signed permutations of the coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

import networkx as nx

FACETS = tuple(product((1, -1), repeat=4))
_INDEX = {s: i for i, s in enumerate(FACETS)}


def facet_graph() -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(16))
    for i, j in combinations(range(16), 2):
        if sum(a != b for a, b in zip(FACETS[i], FACETS[j])) == 1:
            G.add_edge(i, j)
    return G


def _perm_sign(p) -> int:
    inv = sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])
    return -1 if inv % 2 else 1


def signed_permutations(orientation_preserving: bool = False) -> list[tuple]:
    """Group elements as permutations of the 16 facet indices."""
    out = []
    for p in permutations(range(4)):
        for signs in product((1, -1), repeat=4):
            det = _perm_sign(p) * signs[0] * signs[1] * signs[2] * signs[3]
            if orientation_preserving and det != 1:
                continue
            img = []
            for s in FACETS:
                t = tuple(signs[k] * s[p[k]] for k in range(4))
                img.append(_INDEX[t])
            out.append(tuple(img))
    return out


def independent_sets(G: nx.Graph | None = None) -> list[frozenset]:
    G = facet_graph() if G is None else G
    nodes = sorted(G.nodes)
    out = []

    def rec(i, chosen, banned):
        if i == len(nodes):
            out.append(frozenset(chosen))
            return
        v = nodes[i]
        rec(i + 1, chosen, banned)
        if v not in banned:
            rec(i + 1, chosen + [v], banned | set(G[v]))

    rec(0, [], set())
    return out


def _canonical(S, group) -> tuple:
    return min(tuple(sorted(g[x] for x in S)) for g in group)


@dataclass
class OrbitTable:
    counts: dict  # k -> number of orbits
    raw: dict  # k -> number of independent sets
    representatives: dict  # k -> list of canonical sets
    orbit_sizes: dict  # k -> list of orbit sizes
    group_order: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def row(self) -> list[int]:
        return [self.counts.get(k, 0) for k in range(max(self.counts) + 1)]


def orbit_table(orientation_preserving: bool = False) -> OrbitTable:
    group = signed_permutations(orientation_preserving)
    sets = independent_sets()
    reps: dict = {}
    sizes: dict = {}
    seen: dict = {}
    for S in sets:
        key = _canonical(S, group)
        seen[key] = seen.get(key, 0) + 1
    for key, size in sorted(seen.items(), key=lambda kv: (len(kv[0]), kv[0])):
        k = len(key)
        reps.setdefault(k, []).append(key)
        sizes.setdefault(k, []).append(size)
    raw: dict = {}
    for S in sets:
        raw[len(S)] = raw.get(len(S), 0) + 1
    counts = {k: len(v) for k, v in reps.items()}
    return OrbitTable(counts, raw, reps, sizes, len(group))


def burnside_counts(orientation_preserving: bool = False) -> dict:
    """Orbit counts per size k as the group average of fixed independent sets."""
    group = signed_permutations(orientation_preserving)
    sets = independent_sets()
    fixed: dict = {}
    for g in group:
        for S in sets:
            if all(g[x] in S for x in S):
                fixed[len(S)] = fixed.get(len(S), 0) + 1
    out = {}
    for k, total in fixed.items():
        avg = Fraction(total, len(group))
        if avg.denominator != 1:
            raise AssertionError("Burnside average is not an integer")
        out[k] = int(avg)
    return out


def representative_signs(S) -> list[tuple]:
    return [FACETS[i] for i in sorted(S)]


def format_table(row, total) -> str:
    ks = " ".join(f"{k:>2}" for k in range(len(row)))
    vs = " ".join(f"{v:>2}" for v in row)
    return f" k | {ks} | Total\n # | {vs} | {total}"
