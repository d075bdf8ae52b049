"""Closed-form f-vector and fatness algebra for 3-spheres and 4-polytopes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complex import FVector, euler_check, fatness3
from .exact import QuadNum, quad_sign
from .zoo import CAP_SIMPLICIAL_FACETS, cap_fvector


def steinitz_check(f) -> bool:
    """Euler plus the two triangle-count inequalities for 3-polytopes."""
    if len(f) != 3:
        raise ValueError("steinitz_check needs a length-3 f-vector")
    f0, f1, f2 = f
    return f1 == f0 + f2 - 2 and f2 <= 2 * f0 - 4 and f0 <= 2 * f2 - 4


def simple_ds_check(f) -> bool:
    """Dehn-Sommerville relations of a simple 4-polytope."""
    if len(f) != 4:
        raise ValueError("simple_ds_check needs a length-4 f-vector")
    f0, f1, f2, f3 = f
    return f2 == f1 + f3 - f0 and f1 == 2 * f0


def simplicial_ds_check(f) -> bool:
    if len(f) != 4:
        raise ValueError("simplicial_ds_check needs a length-4 f-vector")
    return f[2] == 2 * f[3] and euler_check(f)


def e_fvector_from_simple(fP) -> tuple[FVector, Fraction]:
    """f-vector of the E-polytope built over the dual of a simple P, and its fatness."""
    if not simple_ds_check(fP):
        raise ValueError(f"{tuple(fP)} is not the f-vector of a simple 4-polytope")
    f0, _, f2, _ = fP
    fE = FVector((f2, 6 * f0, 6 * f0, f2))
    return fE, Fraction(6 * f0, f2)


def e_fvector_from_simplicial(fQ) -> tuple[FVector, Fraction]:
    if not simplicial_ds_check(fQ):
        raise ValueError(f"{tuple(fQ)} is not the f-vector of a simplicial 4-polytope")
    f0, f1, _, f3 = fQ
    fE = FVector((f1, 6 * f3, 6 * f3, f1))
    return fE, 6 * (1 - Fraction(f0, f1))


def neighborly_cubical_fvector(n: int) -> tuple[FVector, Fraction]:
    if n < 4:
        raise ValueError("neighborly cubical 4-polytopes need n >= 4")
    k = 2 ** (n - 2)
    f = FVector((4 * k, 2 * n * k, (3 * n - 6) * k, (n - 2) * k))
    return f, Fraction(5 * n - 6, n + 2)


@dataclass(frozen=True)
class FVectorFamily:
    """Four affine forms a*n + b, one per dimension."""

    name: str
    coeffs: tuple

    def __call__(self, n: int) -> FVector:
        return FVector(a * n + b for a, b in self.coeffs)

    def leading(self) -> tuple:
        return tuple(a for a, _ in self.coeffs)

    def euler_identically_zero(self) -> bool:
        return all(sum((-1) ** i * c[j] for i, c in enumerate(self.coeffs)) == 0 for j in (0, 1))


CROSS_CHAIN = FVectorFamily("cross-chain", ((4, 4), (18, 6), (28, 4), (14, 2)))
CAULK = FVector((2, 9, 14, 7))
FILLED_CROSS_CHAIN = FVectorFamily("filled-cross-chain", ((12, -4), (54, -30), (84, -52), (42, -26)))
# printed variant that fails Euler; kept so reports can flag it
FILLED_CROSS_CHAIN_PRINTED = FVectorFamily("filled-cross-chain-printed",
                                           ((12, -4), (54, -30), (84, -54), (42, -26)))
CUT600_CHAIN = FVectorFamily("cut600-chain", ((106, 14), (666, 54), (1120, 80), (560, 40)))


def cross_chain_fvectors(n: int):
    """(base, filled, E, fatness of E) for a chain of n cross polytopes."""
    if n < 1:
        raise ValueError("n must be positive")
    base = CROSS_CHAIN(n)
    filled = base + CAULK.scale(4 * (n - 1))
    if filled != FILLED_CROSS_CHAIN(n):
        raise AssertionError("caulk increment disagrees with the closed form")
    fE, phi = e_fvector_from_simplicial(filled)
    return base, filled, fE, phi


def cross_chain_typo_report(n: int) -> dict:
    printed = FILLED_CROSS_CHAIN_PRINTED(n)
    return {
        "n": n,
        "printed": tuple(printed),
        "printed_euler": euler_check(printed),
        "corrected": tuple(FILLED_CROSS_CHAIN(n)),
        "corrected_euler": euler_check(FILLED_CROSS_CHAIN(n)),
    }


def cut600_chain_fvectors(n: int):
    """(Q, E, fatness of E, kissing average of Q) for a chain of n cut 600-cells."""
    if n < 1:
        raise ValueError("n must be positive")
    fQ = CUT600_CHAIN(n)
    fE, phi = e_fvector_from_simplicial(fQ)
    if fE != FVector((666 * n + 54, 3360 * n + 240, 3360 * n + 240, 666 * n + 54)):
        raise AssertionError("E-vector disagrees with the closed form")
    return fQ, fE, phi, kissing_average(fQ)


def family_limit_fatness_e(family: FVectorFamily) -> Fraction:
    """Limit of the E-fatness 6 f3/f1 along a simplicial family."""
    a = family.leading()
    return Fraction(6 * a[3], a[1])


def family_limit_kissing(family: FVectorFamily) -> Fraction:
    a = family.leading()
    return Fraction(2 * a[1], a[0])


def corona_fvector(atoms: int, bonds: int, rings: int, cap_facets: int = CAP_SIMPLICIAL_FACETS):
    """f-vector, E-fatness and kissing average of a corona of cut 600-cells.

    Each bond removes two caps and glues an icosahedron; each ring of ten
    doubly-cut atoms adds one shared triangle.
    """
    if atoms < 1 or bonds < 0 or rings < 0:
        raise ValueError("need atoms >= 1 and nonnegative bonds, rings")
    cap = cap_fvector()
    ico_vertices, tri_vertices = 12, 3
    f3 = atoms * 600 - bonds * 2 * cap_facets
    f0 = atoms * 120 - bonds * 2 * cap[0] + bonds * ico_vertices + rings * tri_vertices
    if f3 <= 0 or f0 <= 0:
        raise ValueError("negative intermediate counts")
    f = FVector((f0, f0 + f3, 2 * f3, f3))
    return f, Fraction(6 * f3, f[1]), kissing_average(f)


def kissing_average(f) -> Fraction:
    if f[0] <= 0:
        raise ValueError("no vertices")
    return Fraction(2 * f[1], f[0])


def kissing_bound() -> QuadNum:
    return QuadNum(8, 4, 3)


def below_kissing_bound(k: Fraction) -> bool:
    return quad_sign(kissing_bound() - k) > 0


def dual_fatness_equal(f) -> bool:
    return fatness3(f) == fatness3(FVector(f).reversed())


def fatness_of_simple(f) -> Fraction:
    """For simple f: (3f0 + f3)/(f0 + f3), which stays below 3."""
    return Fraction(3 * f[0] + f[3], f[0] + f[3])


def decimal(x: Fraction, places: int = 6) -> str:
    return f"{float(x):.{places}f}"
