"""f-vector accounting for S^3 as a thick product S x [0, N] with two handlebody caps.

Cap counts are the cells added beyond the boundary surface.  A genus-h cap
with V extra vertices contributes (V, 2V, V + 3h, 1 + 2h): the tripled meridian
disks add 3h 2-cells and cut the handlebody into 1 + 2h 3-cells.  Its
alternating sum is h - 1, which keeps the total Euler characteristic at 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from .complex import FVector, fatness3, product_fvector
from .surfaces import first_prime_power_genus

ZERO_CAP = FVector((0, 0, 0, 0))


def cap_fvector(vertices: int, genus: int) -> FVector:
    return FVector((vertices, 2 * vertices, vertices + 3 * genus, 1 + 2 * genus))


def sausage_fvector(core, N: int, cap1=ZERO_CAP, cap2=ZERO_CAP) -> tuple[FVector, Fraction]:
    if N < 1:
        raise ValueError("need at least one slice")
    f = product_fvector(core, N) + FVector(cap1) + FVector(cap2)
    return f, fatness3(f)


def sausage_limit(core) -> Fraction:
    f0, f1, f2 = core
    return Fraction(f0 + 2 * f1 + f2, f0 + f2)


def cover_core(g: int, m: int = 1) -> FVector:
    q = 4 * g + 1
    return FVector((m * q, m * 2 * g * q, m * q))


def fatness_series(core, Ns, cap1=ZERO_CAP, cap2=ZERO_CAP) -> list[Fraction]:
    return [sausage_fvector(core, N, cap1, cap2)[1] for N in Ns]


# --------------------------------------------------------------------------
# parameter chain
# --------------------------------------------------------------------------


@dataclass
class AccountingReport:
    g_requested: int
    g: int
    q: int
    n: int
    cover_genus: int
    cover_fvector: FVector
    cap_vertices: int
    cap: FVector
    slices: int
    fvector: FVector
    fatness: Fraction
    c: int
    slice_exponent: int

    def to_json(self) -> dict:
        from .exact import frac_str
        return {
            "g_requested": self.g_requested, "g": self.g, "q": self.q, "n": self.n,
            "cover_genus": self.cover_genus,
            "cover_fvector": list(self.cover_fvector),
            "cap_vertices_parametric": self.cap_vertices,
            "cap_fvector_parametric": list(self.cap),
            "slices": self.slices, "slice_exponent": self.slice_exponent, "c": self.c,
            "fvector": list(self.fvector),
            "fatness": frac_str(self.fatness),
            "euler": sum((-1) ** i * x for i, x in enumerate(self.fvector)),
        }


def sausage_accounting(g: int, c: int = 1, slice_exponent: int = 7, search_limit: int = 10_000) -> AccountingReport:
    if g < 1 or c < 1:
        raise ValueError("need g >= 1 and c >= 1")
    h = first_prime_power_genus(g, search_limit)
    q = 4 * h + 1
    n = 128 * h ** 4
    core = cover_core(h, n)
    genus = 1 + n * q * (h - 1)
    if 2 - 2 * genus != core[0] - core[1] + core[2]:
        raise AssertionError("cover genus disagrees with its Euler characteristic")
    V = c * 3 * core[1] * genus
    cap = cap_fvector(V, genus)
    N = h ** slice_exponent
    f, phi = sausage_fvector(core, N, cap, cap)
    return AccountingReport(g, h, q, n, genus, core, V, cap, N, f, phi, c, slice_exponent)


def symbolic_fvector(c: int = 1, slice_exponent: int = 7):
    """Total f-vector as polynomials in g, from the same chain as sausage_accounting."""
    g = sp.symbols("g", positive=True)
    q = 4 * g + 1
    n = 128 * g ** 4
    a0, a1, a2 = n * q, n * 2 * g * q, n * q
    genus = 1 + n * q * (g - 1)
    V = c * 3 * a1 * genus
    N = g ** slice_exponent
    prod = (a0 * (N + 1), a1 * (N + 1) + a0 * N, a2 * (N + 1) + a1 * N, a2 * N)
    cap = (V, 2 * V, V + 3 * genus, 1 + 2 * genus)
    return g, tuple(sp.expand(p + 2 * k) for p, k in zip(prod, cap))


@dataclass
class Asymptotics:
    degrees: tuple
    fatness_degree: int
    fatness_leading: Fraction
    exponent: Fraction
    genus_degree: int


def symbolic_asymptotics(c: int = 1, slice_exponent: int = 7) -> Asymptotics:
    g, f = symbolic_fvector(c, slice_exponent)
    polys = [sp.Poly(x, g) for x in f]
    degs = tuple(p.degree() for p in polys)
    num, den = polys[1] + polys[2], polys[0] + polys[3]
    lead = Fraction(int(num.LC()), int(den.LC()))
    fdeg = num.degree() - den.degree()
    genus = sp.Poly(sp.expand(1 + 128 * g ** 4 * (4 * g + 1) * (g - 1)), g)
    return Asymptotics(degs, fdeg, lead, Fraction(fdeg, degs[0]), genus.degree())
