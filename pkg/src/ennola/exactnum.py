"""Exact coefficient domains: big rationals, Laurent polynomials over Q, and Q(zeta_N).

Everything here is immutable and pure, so values can be shared freely across
threads and memo caches.
"""

from __future__ import annotations

import cmath
import dataclasses
import functools
import math
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "QPoly",
    "Cyclotomic",
    "ConductorError",
    "qpoly_eval",
    "cyclo_arith",
    "cyclotomic_polynomial",
    "euler_phi",
]


class ConductorError(ValueError):
    """Raised when two cyclotomic values with different conductors are combined."""


def _divexact_int_poly(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials in little-endian form.

    Raises ValueError if the division leaves a remainder (it never should for
    the cyclotomic products this module performs).
    """
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ValueError("inexact integer polynomial division")
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num):
        raise ValueError("inexact integer polynomial division")
    return out


@functools.cache
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial Phi_n, little-endian.

    Computed by exact division of x^n - 1 by the product of Phi_d over proper
    divisors d of n.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            phi_d = cyclotomic_polynomial(d)
            den = [
                sum(den[i] * phi_d[k - i] for i in range(len(den)) if 0 <= k - i < len(phi_d))
                for k in range(len(den) + len(phi_d) - 1)
            ]
    return tuple(_divexact_int_poly(num, den))


def euler_phi(n: int) -> int:
    """Euler totient, read off as deg Phi_n."""
    return len(cyclotomic_polynomial(n)) - 1


@functools.cache
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e = integer coordinates of x^e modulo Phi_n, for 0 <= e < max(n, 2*phi(n) - 1)."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    row = [0] * d
    row[0] = 1
    count = max(n, 2 * d - 1)
    for _ in range(count):
        rows.append(tuple(row))
        top = row[d - 1]
        row = [-top * phi[0]] + [row[i - 1] - top * phi[i] for i in range(1, d)]
    return tuple(rows)


@dataclasses.dataclass(init=False, frozen=True)
class QPoly:
    """Laurent polynomial over Q in one variable t.

    Stored as a sorted tuple of (exponent, coefficient) pairs with no zero
    coefficients; exponents may be negative.

    >>> p = QPoly({0: 1, 1: -1})
    >>> p.eval(-2)
    Fraction(3, 1)
    >>> (p * p).eval(-2)
    Fraction(9, 1)
    """

    coeffs: tuple[tuple[int, Fraction], ...]

    def __init__(self, coeffs: dict[int, Fraction | int] | None = None):
        items = []
        for e, c in sorted((coeffs or {}).items()):
            c = Fraction(c)
            if c:
                items.append((e, c))
        object.__setattr__(self, "coeffs", tuple(items))

    @staticmethod
    def gen() -> QPoly:
        """The variable t."""
        return QPoly({1: 1})

    @staticmethod
    def const(c: Fraction | int) -> QPoly:
        return QPoly({0: c})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: QPoly | int | Fraction) -> QPoly:
        if not isinstance(other, QPoly):
            other = QPoly.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs:
            out[e] = out.get(e, Fraction(0)) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly({e: -c for e, c in self.coeffs})

    def __sub__(self, other: QPoly | int | Fraction) -> QPoly:
        return self + (-other if isinstance(other, QPoly) else QPoly.const(-Fraction(other)))

    def __rsub__(self, other: int | Fraction) -> QPoly:
        return QPoly.const(other) - self

    def __mul__(self, other: QPoly | int | Fraction) -> QPoly:
        if not isinstance(other, QPoly):
            other = QPoly.const(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative powers: use shift/inverse_variable on monomials")
        out = QPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def shift(self, k: int) -> QPoly:
        """Multiply by t^k (k may be negative)."""
        return QPoly({e + k: c for e, c in self.coeffs})

    def inverse_variable(self) -> QPoly:
        """Substitute t -> 1/t."""
        return QPoly({-e: c for e, c in self.coeffs})

    def eval(self, v: Fraction | int) -> Fraction:
        """Evaluate at v exactly; raises ZeroDivisionError at v = 0 with negative exponents."""
        v = Fraction(v)
        total = Fraction(0)
        for e, c in self.coeffs:
            total += c * v**e
        return total

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e, _ in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.coeffs)

    def min_exp(self) -> int:
        return self.coeffs[0][0] if self.coeffs else 0

    def max_exp(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    def constant_value(self) -> Fraction:
        """The value of a constant Laurent polynomial, error otherwise."""
        if not self.coeffs:
            return Fraction(0)
        if self.coeffs != ((0, self.coeffs[0][1]),):
            raise ValueError("not a constant polynomial")
        return self.coeffs[0][1]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "QPoly(0)"
        parts = []
        for e, c in self.coeffs:
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{e}" if c != 1 else f"t^{e}")
        return "QPoly(" + " + ".join(parts) + ")"


def qpoly_eval(p: QPoly, v: Fraction | int) -> Fraction:
    """Exact evaluation of a Laurent polynomial at a nonzero rational (zero OK without negative exponents)."""
    return p.eval(v)


@dataclasses.dataclass(init=False, frozen=True)
class Cyclotomic:
    """Element of Q(zeta_N), stored as integer coordinates over 1, zeta, ..., zeta^{phi(N)-1}
    with one positive common denominator.

    Arithmetic requires both operands at the same conductor; ``lift`` and
    ``common`` move values between compatible conductors. Equality lifts to the
    least common conductor, but hashing is per-conductor, so do not mix
    conductors as keys of one dict.

    >>> z = Cyclotomic.root(3)
    >>> z + z * z
    Cyclotomic(3, (-1, 0), 1)
    >>> z ** 3 == 1
    True
    """

    conductor: int
    num: tuple[int, ...]
    den: int

    def __init__(self, conductor: int, num: tuple[int, ...] | list[int], den: int = 1):
        d = euler_phi(conductor)
        if len(num) != d:
            raise ValueError(f"need {d} coordinates at conductor {conductor}, got {len(num)}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = [-c for c in num], -den
        g = math.gcd(den, *num)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "den", den)

    @staticmethod
    def zero(conductor: int = 1) -> Cyclotomic:
        return Cyclotomic(conductor, [0] * euler_phi(conductor))

    @staticmethod
    def from_rational(v: Fraction | int, conductor: int = 1) -> Cyclotomic:
        v = Fraction(v)
        num = [0] * euler_phi(conductor)
        num[0] = v.numerator
        return Cyclotomic(conductor, num, v.denominator)

    @staticmethod
    def root(conductor: int, power: int = 1) -> Cyclotomic:
        """zeta_N^power."""
        rows = _power_rows(conductor)
        return Cyclotomic(conductor, rows[power % conductor])

    def _coerce(self, other: Cyclotomic | int | Fraction) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise ConductorError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}"
                )
            return other
        return Cyclotomic.from_rational(other, self.conductor)

    def __add__(self, other: Cyclotomic | int | Fraction) -> Cyclotomic:
        other = self._coerce(other)
        den = self.den * other.den
        num = [a * other.den + b * self.den for a, b in zip(self.num, other.num)]
        return Cyclotomic(self.conductor, num, den)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, [-c for c in self.num], self.den)

    def __sub__(self, other: Cyclotomic | int | Fraction) -> Cyclotomic:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int | Fraction) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other: Cyclotomic | int | Fraction) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Cyclotomic(
                self.conductor,
                [c * other.numerator for c in self.num],
                self.den * other.denominator,
            )
        other = self._coerce(other)
        if other.is_rational():
            return self * Fraction(other.num[0], other.den)
        if self.is_rational():
            return other * Fraction(self.num[0], self.den)
        a, b = self.num, other.num
        d = len(a)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        num = conv[:d]
        rows = _power_rows(self.conductor)
        for e in range(d, 2 * d - 1):
            c = conv[e]
            if c:
                row = rows[e]
                for i in range(d):
                    num[i] += c * row[i]
        return Cyclotomic(self.conductor, num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            raise ValueError("negative powers not supported")
        out = Cyclotomic.from_rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> Cyclotomic:
        """Complex conjugation, zeta_N -> zeta_N^{-1}."""
        if self.is_rational():
            return self
        n = self.conductor
        rows = _power_rows(n)
        d = len(self.num)
        num = [0] * d
        for i, c in enumerate(self.num):
            if c:
                row = rows[(n - i) % n]
                for j in range(d):
                    num[j] += c * row[j]
        return Cyclotomic(n, num, self.den)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other, self.conductor)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.conductor != self.conductor:
            m = math.lcm(self.conductor, other.conductor)
            return self.lift(m) == other.lift(m)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.conductor, self.num, self.den))

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return Fraction(self.num[0], self.den)

    def lift(self, conductor: int) -> Cyclotomic:
        """Rewrite at a larger conductor (the current one must divide it)."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor != 0:
            raise ConductorError(f"{self.conductor} does not divide {conductor}")
        step = conductor // self.conductor
        rows = _power_rows(conductor)
        d = euler_phi(conductor)
        num = [0] * d
        for i, c in enumerate(self.num):
            if c:
                row = rows[(i * step) % conductor]
                for j in range(d):
                    num[j] += c * row[j]
        return Cyclotomic(conductor, num, self.den)

    @staticmethod
    def common(a: Cyclotomic, b: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        """Lift both values to their least common conductor."""
        m = math.lcm(a.conductor, b.conductor)
        return a.lift(m), b.lift(m)

    def to_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def to_json(self) -> dict:
        return {
            "N": self.conductor,
            "coeffs": [[c.numerator, c.denominator] for c in self.to_fractions()],
        }

    def approx(self) -> complex:
        """Float embedding zeta_N -> exp(2*pi*i/N); display use only."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(c * z**i for i, c in enumerate(self.num)) / self.den

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {self.num}, {self.den})"


def cyclo_arith(
    a: Cyclotomic, b: Cyclotomic | None, op: str
) -> Cyclotomic | bool:
    """Dispatch {add, mul, conj, eq} on cyclotomic values sharing a conductor."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "conj":
        return a.conj()
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")
