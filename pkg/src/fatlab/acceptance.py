"""The fifteen acceptance checks, shared by `fatlab verify-all` and the test suite."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import compounds as cp
from . import covers, fvectors as fv, jewels, loops, orbits, sausage, surfaces, zoo
from .complex import (FVector, cube_boundary, euler_check, fatness3, flag_vector,
                      product_with_path)
from .exact import QuadNum
from .report import Report


@lru_cache(maxsize=None)
def _zoo(name):
    return zoo.ZOO[name]()


@lru_cache(maxsize=None)
def _cut_one():
    return zoo.cut_600cell((0,))


def _timed(rep: Report, cid: str, seconds: float, budget: float):
    rep.add(cid, f"< {budget:g} s", f"{seconds:.2f} s", "DERIVED", passed=seconds < budget)


# --------------------------------------------------------------------------


def c01_fatness(rep: Report, ctx):
    rep.add("fatness.simplex", Fraction(2), fatness3((5, 10, 10, 5)), "PAPER")
    rep.add("fatness.cube", Fraction(7, 3), fatness3((16, 32, 24, 8)), "PAPER")
    f600 = _zoo("600cell")[1].f_vector()
    fE, phi = fv.e_fvector_from_simplicial(f600)
    rep.add("fatness.e600", Fraction(5), phi, "PAPER")
    rep.add("fatness.e600.direct", Fraction(5), fatness3(fE), "DERIVED")


def c02_econ(rep: Report, ctx):
    rep.add("econ.cube", FVector((24, 96, 96, 24)), fv.e_fvector_from_simple((16, 32, 24, 8))[0], "PAPER")
    rep.add("econ.120cell", FVector((720, 3600, 3600, 720)),
            fv.e_fvector_from_simple((600, 1200, 720, 120))[0], "PAPER")
    for name in zoo.ZOO:
        f = _zoo(name)[1].f_vector()
        routes = []
        # a simplicial f and its simple dual must give the same E, in either order
        for simplicial in (f, f.reversed()):
            if fv.simplicial_ds_check(simplicial) and fv.simple_ds_check(simplicial.reversed()):
                routes.append((fv.e_fvector_from_simplicial(simplicial),
                               fv.e_fvector_from_simple(simplicial.reversed())))
        if not routes:
            rep.add(f"econ.dual-route.{name}", "not simple or simplicial", "not simple or simplicial",
                    "TRIVIAL")
            continue
        rep.add(f"econ.dual-route.{name}", True, all(a == b for a, b in routes), "DERIVED")


def c03_orbits(rep: Report, ctx):
    t0 = time.perf_counter()
    T = orbits.orbit_table()
    rep.add("orbits.table", [1, 1, 3, 3, 6, 3, 2, 1, 1], T.row(), "PAPER")
    rep.add("orbits.total", 21, T.total, "PAPER")
    rep.add("orbits.burnside", T.counts, orbits.burnside_counts(), "DERIVED")
    _timed(rep, "orbits.runtime", time.perf_counter() - t0, 60)


def c04_jewels(rep: Report, ctx):
    t0 = time.perf_counter()
    tri = jewels.enumerate_triangle_jewels()
    mixed = jewels.enumerate_square_triangle_jewels()
    rep.add("jewels.triangle", 3, len(tri), "PAPER")
    rep.add("jewels.square-triangle", 11, len(mixed), "PAPER")
    rep.add("jewels.triangle-only", sorted(j.dirs for j in tri),
            sorted(j.dirs for j in jewels.triangle_only(mixed)), "DERIVED")
    _timed(rep, "jewels.runtime", time.perf_counter() - t0, 120)


def c05_prop4(rep: Report, ctx):
    res = cp.classify_simplex_compounds()
    fs = cp.simplex_compound_fvectors(res)
    rep.add("simplex-compounds.count", 3, len(fs), "PAPER")
    rep.add("simplex-compounds.fvectors", [FVector(x) for x in ((5, 10, 10, 5), (6, 14, 16, 8), (9, 27, 36, 18))],
            sorted(fs), "PAPER")
    rep.add("simplex-compounds.e-third", FVector((27, 108, 108, 27)), fv.e_fvector_from_simplicial(sorted(fs)[-1])[0],
            "PAPER")


def c06_zoo(rep: Report, ctx):
    L600 = _zoo("600cell")[1]
    rep.add("zoo.600cell", FVector((120, 720, 1200, 600)), L600.f_vector(), "PAPER")
    Ls = _zoo("snub24")[1]
    rep.add("zoo.snub24", FVector((96, 432, 480, 144)), Ls.f_vector(), "PAPER")
    fc = _cut_one()[1].f_vector()
    rep.add("zoo.cut1", FVector((119, 708, 1170, 581)), fc, "DERIVED")
    rep.add("zoo.cut1.euler", True, euler_check(fc), "TRIVIAL")
    X = L600.complex
    facets_per_vertex = {sum(1 for f in X.by_dim[3] if v in X.vertex_sets[f]) for v in X.by_dim[0]}
    rep.add("zoo.600cell.vertex-facets", {20}, facets_per_vertex, "DERIVED")
    ico = sum(1 for r in Ls.ridges() if zoo.ridge_kind(Ls, r) == "ico-ico")
    rep.add("zoo.snub24.ico-ridges", 96, ico, "DERIVED")


def c07_angles(rep: Report, ctx):
    s5 = QuadNum(0, 1, 5)
    r600 = (5 + 2 * s5) / (6 + 2 * s5)
    expect = {
        "simplex": (Fraction(3, 10), {(Fraction(1, 4), 1)}),
        "cross": (Fraction(1, 2), {(Fraction(0), 0)}),
        "600cell": (r600, {(((1 - s5) / 4) ** 2, -1)}),
    }
    for name, (r2, spectrum) in expect.items():
        M, L = _zoo(name)
        ok, got = zoo.check_edge_tangent(M, L)
        rep.add(f"tangent.{name}", True, ok, "PAPER")
        rep.add(f"tangent.{name}.r2", r2, got, "DERIVED")
        rep.add(f"dihedral.{name}", spectrum, set(zoo.dihedral_spectrum(L, got)), "PAPER")


def c08_chains(rep: Report, ctx):
    got = [cp.compound_fvector(cp.build_cross_chain(n)) for n in range(1, 6)]
    rep.add("chain.cross.fvectors", [fv.FILLED_CROSS_CHAIN(n) for n in range(1, 6)], got, "DERIVED")
    rep.add("chain.cross.convex", True, all(cp.check_convex(cp.build_cross_chain(n)).convex for n in range(1, 6)),
            "DERIVED")
    typo = fv.cross_chain_typo_report(2)
    rep.add("chain.cross.printed-euler-fails", False, typo["printed_euler"], "DERIVED",
            note="printed f2 coefficient 84n-54 corrected to 84n-52")
    rep.add("chain.cross.limit", Fraction(14, 3), fv.family_limit_fatness_e(fv.FILLED_CROSS_CHAIN), "PAPER")
    one = cp.compound_fvector(cp.build_cut600_chain(1))
    rep.add("chain.cut600.n1", FVector((120, 720, 1200, 600)), one, "PAPER")
    rep.add("chain.cut600.formula-n1", one, fv.CUT600_CHAIN(1), "DERIVED")
    rep.add("chain.cut600.phi-limit", Fraction(560, 111), fv.family_limit_fatness_e(fv.CUT600_CHAIN), "PAPER")
    rep.add("chain.cut600.kappa-limit", Fraction(666, 53), fv.family_limit_kissing(fv.CUT600_CHAIN), "PAPER")


def c09_corona(rep: Report, ctx):
    f, phi, kappa = fv.corona_fvector(697, 792, 96)
    rep.add("corona.fvector", FVector((72840, 459360, 773040, 386520)), f, "PAPER")
    rep.add("corona.fatness", Fraction(3221, 638), phi, "PAPER")
    rep.add("corona.kissing", Fraction(7656, 607), kappa, "PAPER")
    rep.add("corona.below-bound", True, fv.below_kissing_bound(kappa), "PAPER")
    rep.add("corona.cap-facets", 20, zoo.cap_fvector()[3] - 1, "DERIVED",
            note="printed cap facet count 30 would give f3 = "
                 f"{fv.corona_fvector(697, 792, 96, cap_facets=30)[0][3]}")


def c10_structure(rep: Report, ctx):
    for g in (1, 2, 3, 4, 7):
        r = surfaces.verify_cover_structure(surfaces.build_sg_prime(g))
        rep.add(f"sgprime.g{g}", [], r.failures(), "PAPER")


@lru_cache(maxsize=None)
def _cover_and_loops(g):
    C = surfaces.build_sg_prime(g)
    return C, loops.enumerate_obstructing_loops(C)


def c11_loops(rep: Report, ctx):
    for g in (1, 2, 3):
        C, ls = _cover_and_loops(g)
        L = len(ls)
        rep.add(f"loops.g{g}.count", loops.expected_loop_count(g), L, "DERIVED")
        rep.add(f"loops.g{g}.bound", True, L < 64 * g ** 4 and L <= loops.loop_bound(g), "PAPER")
        r = loops.verify_loop_classes(C, ls)
        rep.add(f"loops.g{g}.indivisible", [], r.failures(), "PAPER")


def c12_oracle(rep: Report, ctx):
    for g, n, trials in ((1, 16, 50), (2, 32, 20)):
        C, _ = _cover_and_loops(g)
        r = covers.random_cover_experiment(g, n, trials, seed=ctx.seed, direct=True, threads=ctx.threads, cover=C)
        rep.add(f"oracle.g{g}.n{n}", trials, r.agreement, "DERIVED",
                note=f"{r.successes} strongly regular")


def c13_statistics(rep: Report, ctx):
    t0 = time.perf_counter()
    C, _ = _cover_and_loops(1)
    r = covers.random_cover_experiment(1, 128, 200, seed=ctx.seed, threads=ctx.threads, cover=C)
    floor = r.bound - Fraction(1, 10)
    rep.add("covers.fraction", f">= {float(floor):.6f}", r.fraction, "DERIVED", passed=r.fraction >= floor)
    rep.add("covers.hypothesis", True, 128 >= 128 * 1 ** 4, "PAPER")
    _timed(rep, "covers.runtime", time.perf_counter() - t0, 120)


def c14_sausage(rep: Report, ctx):
    S = surfaces.build_sg_prime(1).complex
    direct = [product_with_path(S, N).f_vector() for N in (1, 2, 3)]
    formula = [sausage.sausage_fvector((5, 10, 5), N)[0] for N in (1, 2, 3)]
    rep.add("sausage.product-counts", direct, formula, "DERIVED")
    cap = sausage.cap_fvector(6, 1)
    series = sausage.fatness_series((5, 10, 5), range(1, 30), cap, cap)
    rep.add("sausage.increasing", True, all(a < b for a, b in zip(series, series[1:])), "DERIVED")
    flat = sausage.fatness_series((5, 10, 5), range(1, 30))
    rep.add("sausage.zero-caps-nondecreasing", True, all(a <= b for a, b in zip(flat, flat[1:])), "DERIVED")
    rep.add("sausage.limit", [Fraction(2 * g + 1) for g in (1, 2, 3)],
            [sausage.sausage_limit(sausage.cover_core(g, 7)) for g in (1, 2, 3)], "DERIVED")
    a = sausage.symbolic_asymptotics()
    rep.add("sausage.asymptotic.f0-degree", 12, a.degrees[0], "PAPER")
    rep.add("sausage.asymptotic.fatness-degree", 1, a.fatness_degree, "DERIVED")
    rep.add("sausage.asymptotic.exponent", Fraction(1, 12), a.exponent, "PAPER")
    rep.add("sausage.asymptotic.genus-degree", 6, a.genus_degree, "DERIVED")
    bound = True
    for g in range(1, 21):
        r = sausage.sausage_accounting(g)
        bound &= r.fatness >= a.fatness_leading * r.g and sum((-1) ** i * x for i, x in enumerate(r.fvector)) == 0
    rep.add("sausage.asymptotic.fatness-linear", True, bound, "DERIVED", note=f"c' = {a.fatness_leading}")


def c15_flags(rep: Report, ctx):
    Q = cube_boundary(4)
    rep.add("flag.cube.013", 192, flag_vector(Q, (0, 1, 3)), "PAPER")
    rep.add("flag.cube.03", 64, flag_vector(Q, (0, 3)), "DERIVED")
    rep.add("steinitz.tetrahedron", True, fv.steinitz_check((4, 6, 4)), "TRIVIAL")
    rep.add("steinitz.cube", True, fv.steinitz_check((8, 12, 6)), "DERIVED")
    rep.add("steinitz.euler-fails", False, fv.steinitz_check((5, 9, 5)), "TRIVIAL")


CRITERIA = [
    (1, "fatness values", c01_fatness),
    (2, "E-construction map", c02_econ),
    (3, "cross polytope orbit table", c03_orbits),
    (4, "jewel catalogs", c04_jewels),
    (5, "simplex compounds", c05_prop4),
    (6, "polytope zoo", c06_zoo),
    (7, "tangency and dihedral angles", c07_angles),
    (8, "chains", c08_chains),
    (9, "corona", c09_corona),
    (10, "S'_g structure", c10_structure),
    (11, "obstructing loops", c11_loops),
    (12, "loop criterion vs direct check", c12_oracle),
    (13, "random cover statistics", c13_statistics),
    (14, "sausage accounting", c14_sausage),
    (15, "flag vectors and Steinitz", c15_flags),
]


@dataclass
class Context:
    seed: int = 0
    threads: int = 1


@dataclass
class CriterionResult:
    number: int
    title: str
    report: Report
    seconds: float

    @property
    def passed(self) -> bool:
        return self.report.ok

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number:2d}: {self.title} ({self.seconds:.2f} s)"


def run_criterion(number: int, ctx: Context | None = None) -> CriterionResult:
    ctx = ctx or Context()
    _, title, fn = CRITERIA[number - 1]
    rep = Report(f"criterion {number}: {title}")
    t0 = time.perf_counter()
    try:
        fn(rep, ctx)
    except Exception as exc:  # a crash is a failed claim, not an abort
        rep.add(f"criterion{number}.error", "no exception", repr(exc), "TRIVIAL", passed=False)
    return CriterionResult(number, title, rep, time.perf_counter() - t0)


def run_all(ctx: Context | None = None, only=None) -> list[CriterionResult]:
    nums = [n for n, _, _ in CRITERIA if only is None or n in only]
    return [run_criterion(n, ctx) for n in nums]
