"""Exact scalars: rationals, real quadratic fields, finite fields, Z/n and angles in units of pi.

Rationals are plain :class:`fractions.Fraction` objects.  Everything else in
this module is an immutable value type that interoperates with ``int`` and
``Fraction`` through the usual operators.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import total_ordering

Rational = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Fraction")


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


# --------------------------------------------------------------------------
# Q(sqrt d)
# --------------------------------------------------------------------------


@total_ordering
class QuadNum:
    """The real number ``a + b*sqrt(d)`` with rational ``a``, ``b``.

    ``d`` must be a squarefree integer >= 2.  Arithmetic between elements with
    different ``d`` raises ``ValueError``; ints and Fractions are treated as
    elements with ``b == 0``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 5, check: bool = True):
        if check and not is_squarefree(d):
            raise ValueError(f"d={d} is not a squarefree integer >= 2")
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadNum is immutable")

    @classmethod
    def _make(cls, a: Fraction, b: Fraction, d: int) -> QuadNum:
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "d", d)
        return obj

    @classmethod
    def sqrt(cls, d: int) -> QuadNum:
        return cls(0, 1, d)

    def _coerce(self, other):
        if isinstance(other, QuadNum):
            if other.d != self.d:
                raise ValueError(f"mixing Q(sqrt {self.d}) with Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum._make(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum._make(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum._make(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return QuadNum._make(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadNum._make(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum._make(
            self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a, self.d
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadNum:
        return QuadNum._make(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - d b^2."""
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadNum division by zero")
        return QuadNum._make(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("QuadNum division by zero")
            return QuadNum._make(self.a / other, self.b / other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadNum._make(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> int:
        return quad_sign(self)

    def __eq__(self, other):
        if isinstance(other, QuadNum):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return quad_sign(self - o) < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"QuadNum({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*sqrt({self.d})"

    def to_json(self):
        return {"a": frac_str(self.a), "b": frac_str(self.b), "d": self.d}


def quad_sign(x) -> int:
    """Exact sign of a + b*sqrt(d)."""
    if not isinstance(x, QuadNum):
        return _sign(x)
    sa, sb = _sign(x.a), _sign(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    lhs = x.a * x.a
    rhs = x.b * x.b * x.d
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


def golden_ratio() -> QuadNum:
    return QuadNum(Fraction(1, 2), Fraction(1, 2), 5)


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_to_json(x):
    if isinstance(x, QuadNum):
        return x.to_json()
    return frac_str(Fraction(x))


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return QuadNum(Fraction(obj["a"]), Fraction(obj["b"]), int(obj["d"]))
    return Fraction(obj)


# --------------------------------------------------------------------------
# Finite fields
# --------------------------------------------------------------------------


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q == p**k and p prime, or None."""
    if q < 2:
        return None
    p = next(f for f in itertools.count(2) if q % f == 0 or f * f > q)
    if q % p:
        p = q
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    # m is monic, coefficients low -> high
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm]


def _divides(f: tuple[int, ...], m: tuple[int, ...], p: int) -> bool:
    # does monic f divide monic m over F_p
    r = list(m)
    df = len(f) - 1
    for i in range(len(r) - 1, df - 1, -1):
        c = r[i] % p
        if c:
            for j in range(df + 1):
                r[i - df + j] = (r[i - df + j] - c * f[j]) % p
    return not any(x % p for x in r[:df])


def _monic_polys(p: int, k: int):
    """Monic degree-k polynomials in increasing integer encoding order."""
    for idx in range(p**k):
        coeffs = [(idx // p**i) % p for i in range(k)]
        yield tuple(coeffs) + (1,)


def is_irreducible(m: tuple[int, ...], p: int) -> bool:
    k = len(m) - 1
    for dk in range(1, k // 2 + 1):
        for f in _monic_polys(p, dk):
            if _divides(f, m, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    for m in _monic_polys(p, k):
        if is_irreducible(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GF:
    """The field F_q, q = p**k, as polynomials over F_p modulo a fixed irreducible.

    The modulus is the least monic irreducible of degree k, ordering polynomials
    by the integer ``sum(c_i * p**i)`` of their non-leading coefficients.  The
    same integer encoding orders field elements.
    """

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise ValueError(f"q={q} is not a prime power")
        self.q = q
        self.p, self.k = pk
        self.modulus = least_irreducible(self.p, self.k) if self.k > 1 else (0, 1)

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __call__(self, x) -> GFElem:
        if isinstance(x, GFElem):
            return x
        if isinstance(x, int):
            if self.k == 1:
                return GFElem(self, (x % self.p,))
            if not 0 <= x < self.q:
                # integers outside the index range embed through the prime field
                return GFElem(self, (x % self.p,) + (0,) * (self.k - 1))
            return self.from_index(x)
        if isinstance(x, (tuple, list)):
            if len(x) != self.k:
                raise ValueError("wrong coefficient count")
            return GFElem(self, tuple(c % self.p for c in x))
        raise TypeError(f"cannot convert {type(x).__name__} into {self}")

    def from_index(self, idx: int) -> GFElem:
        return GFElem(self, tuple((idx // self.p**i) % self.p for i in range(self.k)))

    def elements(self) -> list[GFElem]:
        return [self.from_index(i) for i in range(self.q)]

    @property
    def zero(self) -> GFElem:
        return self.from_index(0)

    @property
    def one(self) -> GFElem:
        return GFElem(self, (1,) + (0,) * (self.k - 1))

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(_poly_mod(prod, self.modulus, p))


def gf_make(q: int) -> GF:
    return GF(q)


@total_ordering
class GFElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: tuple[int, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("GFElem is immutable")

    @property
    def index(self) -> int:
        p = self.field.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def _other(self, other) -> GFElem:
        if isinstance(other, GFElem):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field(other % self.field.p if self.field.k > 1 else other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        p = self.field.p
        return GFElem(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return GFElem(self.field, tuple((-x) % p for x in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElem(self.field, self.field._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> GFElem:
        if not self:
            raise ZeroDivisionError("inverse of zero in " + repr(self.field))
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def order(self) -> int:
        """Multiplicative order (by repeated multiplication)."""
        if not self:
            raise ValueError("zero has no multiplicative order")
        one = self.field.one
        x, n = self, 1
        while x != one:
            x = x * self
            n += 1
        return n

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, GFElem):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self._other(other)
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, GFElem):
            return NotImplemented
        return self.index < other.index

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        if self.field.k == 1:
            return f"GF({self.field.q})({self.coeffs[0]})"
        return f"GF({self.field.q}){list(self.coeffs)}"

    def __str__(self):
        # polynomial in x, leading coefficient first
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            terms.append(str(c) if not mono else mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"


def gf_generator(field: GF) -> GFElem:
    """Least element (by index) of multiplicative order q - 1."""
    target = field.q - 1
    factors = {f for f in range(2, target + 1) if target % f == 0 and prime_power(f) == (f, 1)}
    one = field.one
    for x in field.elements()[1:]:
        if all(x ** (target // f) != one for f in factors):
            return x
    raise AssertionError("no generator")  # pragma: no cover


# --------------------------------------------------------------------------
# Z/n
# --------------------------------------------------------------------------


class ModNum:
    __slots__ = ("value", "n")

    def __init__(self, value: int, n: int):
        if n < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "value", value % n)

    def __setattr__(self, name, value):
        raise AttributeError("ModNum is immutable")

    def _v(self, other):
        if isinstance(other, ModNum):
            if other.n != self.n:
                raise ValueError("different moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._v(other)
        return v if v is NotImplemented else ModNum(self.value + v, self.n)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._v(other)
        return v if v is NotImplemented else ModNum(self.value - v, self.n)

    def __rsub__(self, other):
        v = self._v(other)
        return v if v is NotImplemented else ModNum(v - self.value, self.n)

    def __neg__(self):
        return ModNum(-self.value, self.n)

    def __mul__(self, other):
        v = self._v(other)
        return v if v is NotImplemented else ModNum(self.value * v, self.n)

    __rmul__ = __mul__

    def inverse(self) -> ModNum:
        return ModNum(pow(self.value, -1, self.n), self.n)

    def __eq__(self, other):
        if isinstance(other, ModNum):
            return self.n == other.n and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.n
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.n))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModNum({self.value}, {self.n})"


# --------------------------------------------------------------------------
# Angles as rational multiples of pi
# --------------------------------------------------------------------------


@total_ordering
class AnglePi:
    """An angle ``coefficient * pi`` with rational coefficient."""

    __slots__ = ("coefficient",)

    def __init__(self, coefficient=0):
        object.__setattr__(self, "coefficient", _frac(coefficient))

    def __setattr__(self, name, value):
        raise AttributeError("AnglePi is immutable")

    @classmethod
    def of(cls, num: int, den: int = 1) -> AnglePi:
        return cls(Fraction(num, den))

    def __add__(self, other):
        if not isinstance(other, AnglePi):
            return NotImplemented
        return AnglePi(self.coefficient + other.coefficient)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __sub__(self, other):
        if not isinstance(other, AnglePi):
            return NotImplemented
        return AnglePi(self.coefficient - other.coefficient)

    def __mul__(self, k):
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return AnglePi(self.coefficient * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, AnglePi):
            return self.coefficient == other.coefficient
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, AnglePi):
            return NotImplemented
        return self.coefficient < other.coefficient

    def __hash__(self):
        return hash(("pi", self.coefficient))

    def __repr__(self):
        return f"AnglePi({frac_str(self.coefficient)})"

    def __str__(self):
        c = self.coefficient
        if c == 0:
            return "0"
        num = "" if c.numerator == 1 else str(c.numerator)
        return f"{num}pi" if c.denominator == 1 else f"{num}pi/{c.denominator}"


PI = AnglePi(1)
TWO_PI = AnglePi(2)


def angle_sum(angles) -> AnglePi:
    return sum(angles, AnglePi(0))


def angle_cmp(x: AnglePi, bound: AnglePi) -> int:
    return _sign(x.coefficient - bound.coefficient)


_SQRT5 = QuadNum(0, 1, 5)


def cos_exact(angle: AnglePi):
    """cos of the angle when it lies in Q or Q(sqrt 5); None otherwise.

    Covers denominators 1, 2, 3, 5 (and 10 for odd multiples giving 0).
    """
    c = angle.coefficient % 2
    den = c.denominator
    k = c.numerator
    if den == 1:
        return Fraction(1 if k == 0 else -1)
    if den == 2:
        return Fraction(0)
    if den == 3:
        return [Fraction(1, 2), Fraction(-1, 2), None, Fraction(-1, 2), Fraction(1, 2)][k - 1]
    if den == 5:
        # cos(k pi / 5), k in 0..9
        table = {
            1: (1 + _SQRT5) / 4,
            2: (_SQRT5 - 1) / 4,
            3: (1 - _SQRT5) / 4,
            4: -(1 + _SQRT5) / 4,
        }
        kk = k if k <= 5 else 10 - k
        return table[kk]
    return None


def cos_squared_and_sign(angle: AnglePi):
    """(cos^2, sign of cos), exact; also handles denominators 4 and 6."""
    c = angle.coefficient % 2
    den, k = c.denominator, c.numerator
    if den in (4, 6):
        sq = Fraction(1, 2) if den == 4 else Fraction(3, 4)
        # k is odd here; cos > 0 on (0, pi/2) and (3pi/2, 2pi)
        return sq, 1 if (c < Fraction(1, 2) or c > Fraction(3, 2)) else -1
    cv = cos_exact(angle)
    if cv is None:
        raise ValueError(f"no exact cosine for {angle}")
    return cv * cv, quad_sign(cv)
