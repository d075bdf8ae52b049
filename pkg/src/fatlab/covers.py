"""Random Z/n abelian covers of S'_g and the strong-regularity experiment."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .complex import Cell, SurfaceComplex, is_strongly_regular
from .exact import ModNum
from .loops import HomologyBasis, enumerate_obstructing_loops, solve_cocycle
from .surfaces import CoverSurface, build_sg_prime


@dataclass
class Cocycle:
    n: int
    values: dict  # edge id -> int in [0, n)
    generator_values: tuple = ()

    def __post_init__(self):
        self.values = {e: v % self.n for e, v in self.values.items()}

    def __getitem__(self, e: int) -> ModNum:
        return ModNum(self.values[e], self.n)

    def evaluate(self, chain) -> int:
        return sum(k * self.values[e] for e, k in chain) % self.n

    def surjective(self) -> bool:
        g = self.n
        for x in self.generator_values:
            g = gcd(g, x)
        return g == 1


def trial_rng(seed: int, i: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, i]))


def random_cocycle(S: SurfaceComplex, n: int, seed: int | np.random.Generator,
                   basis: HomologyBasis | None = None) -> Cocycle:
    """Uniform cocycle: tree edges 0, generator edges uniform, the rest solved."""
    if n < 1:
        raise ValueError("modulus must be positive")
    basis = HomologyBasis(S) if basis is None else basis
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    gens = tuple(int(x) for x in rng.integers(0, n, size=basis.rank))
    vals = solve_cocycle(S, basis.tc, gens, n)
    return Cocycle(n, vals, gens)


def zero_cocycle(S: SurfaceComplex, n: int) -> Cocycle:
    return Cocycle(n, {e: 0 for e in S.by_dim[1]}, ())


def build_cover(S: SurfaceComplex, c: Cocycle) -> SurfaceComplex:
    """The basepoint component of the n-fold cover defined by c."""
    n = c.n
    vals = c.values
    # component of (v0, 0) in the lifted 1-skeleton
    adj: dict = {v: [] for v in S.by_dim[0]}
    for e in S.by_dim[1]:
        a, b = S.cells[e].ends
        adj[a].append((b, vals[e]))
        adj[b].append((a, -vals[e]))
    v0 = S.by_dim[0][0]
    comp = {(v0, 0)}
    stack = [(v0, 0)]
    while stack:
        v, t = stack.pop()
        for w, d in adj[v]:
            x = (w, (t + d) % n)
            if x not in comp:
                comp.add(x)
                stack.append(x)
    vid = {x: i for i, x in enumerate(sorted(comp))}
    cells = [Cell(i, 0, frozenset()) for i in range(len(vid))]
    eid = {}
    for e in S.by_dim[1]:
        a, b = S.cells[e].ends
        for t in range(n):
            if (a, t) not in vid:
                continue
            u, w = vid[(a, t)], vid[(b, (t + vals[e]) % n)]
            k = len(cells)
            cells.append(Cell(k, 1, frozenset((u, w)), ends=(u, w)))
            eid[(e, t)] = k
    for f in S.by_dim[2]:
        walk = S.cells[f].walk
        start = S.walk_vertices(f)[0]
        for t0 in range(n):
            if (start, t0) not in vid:
                continue
            t, lifted = t0, []
            for x in walk:
                e = abs(x)
                if x > 0:
                    lifted.append(eid[(e, t)])
                    t = (t + vals[e]) % n
                else:
                    t = (t - vals[e]) % n
                    lifted.append(-eid[(e, t)])
            if t != t0:
                raise AssertionError("face walk does not close in the cover")
            k = len(cells)
            cells.append(Cell(k, 2, frozenset(abs(y) for y in lifted), tuple(lifted)))
    return SurfaceComplex(cells)


def loop_values(loops, c: Cocycle) -> list[int]:
    return [c.evaluate(l.chain) for l in loops]


def strongly_regular_via_loops(loops, c: Cocycle) -> bool:
    return all(c.evaluate(l.chain) != 0 for l in loops)


@dataclass
class TrialResult:
    index: int
    surjective: bool
    via_loops: bool
    direct: bool | None
    zero_loops: int


@dataclass
class ExperimentReport:
    g: int
    n: int
    trials: int
    seed: int
    loop_count: int
    results: list = field(default_factory=list)

    @property
    def bound(self) -> Fraction:
        return 1 - Fraction(self.loop_count, self.n)

    @property
    def successes(self) -> int:
        return sum(r.via_loops for r in self.results)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.successes, max(self.trials, 1))

    @property
    def surjective_trials(self) -> int:
        return sum(r.surjective for r in self.results)

    @property
    def conditioned_fraction(self) -> Fraction | None:
        k = self.surjective_trials
        if not k:
            return None
        return Fraction(sum(r.via_loops for r in self.results if r.surjective), k)

    @property
    def direct_checked(self) -> int:
        return sum(r.direct is not None for r in self.results)

    @property
    def agreement(self) -> int:
        return sum(r.direct == r.via_loops for r in self.results if r.direct is not None)

    def to_json(self) -> dict:
        from .exact import frac_str
        cond = self.conditioned_fraction
        return {
            "g": self.g, "n": self.n, "trials": self.trials, "seed": self.seed,
            "loop_classes": self.loop_count,
            "successes": self.successes,
            "fraction": frac_str(self.fraction),
            "bound": frac_str(self.bound),
            "surjective_trials": self.surjective_trials,
            "conditioned_fraction": None if cond is None else frac_str(cond),
            "direct_checked": self.direct_checked,
            "agreement": self.agreement,
            "log": [
                {"trial": r.index, "surjective": r.surjective, "strongly_regular": r.via_loops,
                 "direct": r.direct, "zero_loops": r.zero_loops}
                for r in self.results
            ],
        }


def random_cover_experiment(g: int, n: int, trials: int, seed: int = 0, direct: bool = False,
                     threads: int = 1, cover: CoverSurface | None = None) -> ExperimentReport:
    """Per-trial seeds come from (seed, trial index), so results do not depend on threads."""
    if n < 1 or trials < 0:
        raise ValueError("need n >= 1 and trials >= 0")
    C = build_sg_prime(g) if cover is None else cover
    S = C.complex
    loops = enumerate_obstructing_loops(C)
    basis = HomologyBasis(S)

    def run(i):
        c = zero_cocycle(S, 1) if n == 1 else random_cocycle(S, n, trial_rng(seed, i), basis)
        vals = loop_values(loops, c)
        ok = all(vals)
        d = is_strongly_regular(build_cover(S, c))[0] if direct else None
        return TrialResult(i, c.surjective(), ok, d, sum(1 for x in vals if x == 0))

    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            results = list(ex.map(run, range(trials)))
    else:
        results = [run(i) for i in range(trials)]
    return ExperimentReport(g, n, trials, seed, len(loops), results)
