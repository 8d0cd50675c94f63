"""Exact arithmetic in the cyclotomic field Q(t), t a primitive (4k+8)-th root of unity.

Elements are stored as rational polynomials in ``t`` reduced modulo the
cyclotomic polynomial, using python-flint's ``fmpq_poly``.  Everything that
the diagram calculus needs (``t``, ``q = t^2``, the loop value ``delta`` and
the quantum integers) lives in this field.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import flint

__all__ = [
    "CyclotomicField",
    "CycNum",
    "LevelParams",
    "make_params",
    "t",
    "q",
    "delta",
    "qint",
    "inv",
]


class CyclotomicField:
    """The field Q[x]/Phi_N(x), x standing for exp(pi*i*2/N)."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("order must be positive")
        self.N = N
        self.modulus = flint.fmpq_poly(flint.fmpz_poly.cyclotomic(N).coeffs())
        self.degree = self.modulus.degree()
        self._zero = flint.fmpq_poly([])
        self._one = flint.fmpq_poly([1])
        # powers of the generator, reduced, for exponents 0..N-1
        self._gen_powers: list[flint.fmpq_poly] = []
        cur = self._one
        x = flint.fmpq_poly([0, 1])
        for _ in range(N):
            self._gen_powers.append(cur)
            cur = (cur * x) % self.modulus

    def __repr__(self):
        return f"CyclotomicField({self.N})"

    # raw polynomial helpers (used by hot loops elsewhere)
    def reduce(self, p: flint.fmpq_poly) -> flint.fmpq_poly:
        if p.degree() < self.degree:
            return p
        return p % self.modulus

    def gen_power_poly(self, e: int) -> flint.fmpq_poly:
        return self._gen_powers[e % self.N]

    def inverse_poly(self, p: flint.fmpq_poly) -> flint.fmpq_poly:
        if p.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        g, s, _ = p.xgcd(self.modulus)
        # Phi_N is irreducible, so g is a nonzero constant
        return self.reduce(s / g.coeffs()[0])

    # CycNum constructors
    def __call__(self, value) -> "CycNum":
        return self.coerce(value)

    def coerce(self, value) -> "CycNum":
        if isinstance(value, CycNum):
            if value.field is not self and value.field.N != self.N:
                raise ValueError("elements of different cyclotomic fields")
            return value
        if isinstance(value, (int, Fraction)):
            if isinstance(value, Fraction):
                value = flint.fmpq(value.numerator, value.denominator)
            return CycNum(self, flint.fmpq_poly([value]))
        if isinstance(value, flint.fmpq):
            return CycNum(self, flint.fmpq_poly([value]))
        if isinstance(value, flint.fmpq_poly):
            return CycNum(self, self.reduce(value))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def zero(self) -> "CycNum":
        return CycNum(self, self._zero)

    def one(self) -> "CycNum":
        return CycNum(self, self._one)

    def gen(self) -> "CycNum":
        return CycNum(self, self._gen_powers[1 % self.N])

    def root_power(self, e: int) -> "CycNum":
        """Return t**e."""
        return CycNum(self, self._gen_powers[e % self.N])

    def from_coeffs(self, coeffs) -> "CycNum":
        return CycNum(self, self.reduce(flint.fmpq_poly([_to_fmpq(c) for c in coeffs])))

    def from_json(self, data) -> "CycNum":
        """Inverse of :meth:`CycNum.to_json`."""
        return self.from_coeffs([Fraction(int(n), int(d)) for n, d in data])


def _to_fmpq(c):
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, str):
        f = Fraction(c)
        return flint.fmpq(f.numerator, f.denominator)
    return flint.fmpq(c)


@lru_cache(maxsize=None)
def _field(N: int) -> CyclotomicField:
    return CyclotomicField(N)


class CycNum:
    """An immutable element of a cyclotomic field."""

    __slots__ = ("field", "p")

    def __init__(self, field: CyclotomicField, p: flint.fmpq_poly):
        self.field = field
        self.p = p

    def _other(self, other):
        if isinstance(other, CycNum):
            if other.field.N != self.field.N:
                raise ValueError("elements of different cyclotomic fields")
            return other.p
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return flint.fmpq_poly([_to_fmpq(other)])
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, self.p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, self.p - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, o - self.p)

    def __neg__(self):
        return CycNum(self.field, -self.p)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, self.field.reduce(self.p * o))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        return CycNum(self.field, self.field.inverse_poly(self.p))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, self.field.reduce(self.p * self.field.inverse_poly(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, self.field.reduce(o * self.field.inverse_poly(self.p)))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = self.field._one
        b = base.p
        while e:
            if e & 1:
                result = self.field.reduce(result * b)
            e >>= 1
            if e:
                b = self.field.reduce(b * b)
        return CycNum(self.field, result)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.p == o

    def __hash__(self):
        return hash((self.field.N, tuple(str(c) for c in self.p.coeffs())))

    def __bool__(self):
        return not self.p.is_zero()

    def is_zero(self) -> bool:
        return self.p.is_zero()

    def conjugate(self) -> "CycNum":
        """Image under the field automorphism t -> t^{-1} (complex conjugation)."""
        f = self.field
        acc = f._zero
        for e, c in enumerate(self.p.coeffs()):
            if c != 0:
                acc = acc + f.gen_power_poly(-e) * c
        return CycNum(f, f.reduce(acc))

    def is_rational(self) -> bool:
        return self.p.degree() <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        cs = self.p.coeffs()
        if not cs:
            return Fraction(0)
        return Fraction(int(cs[0].p), int(cs[0].q))

    def coeffs(self) -> list[Fraction]:
        return [Fraction(int(c.p), int(c.q)) for c in self.p.coeffs()]

    def to_json(self) -> list[list[int]]:
        """Coefficient vector of the reduced representative as [num, den] pairs."""
        return [[int(c.p), int(c.q)] for c in self.p.coeffs()]

    def to_complex(self) -> complex:
        """Floating point value, for display only."""
        z = cmath.exp(2j * cmath.pi / self.field.N)
        return sum(float(Fraction(int(c.p), int(c.q))) * z**e for e, c in enumerate(self.p.coeffs()))

    def __str__(self):
        if self.p.is_zero():
            return "0"
        if self.is_rational():
            return str(self.to_fraction())
        return self.p.str(var="t")

    def __repr__(self):
        return f"CycNum({self})"


@dataclass(frozen=True)
class LevelParams:
    """Level data: k and the order N = 4k + 8 of t."""

    k: int
    N: int
    field: CyclotomicField = field(compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("level k must be at least 1")
        if self.N != 4 * self.k + 8:
            raise ValueError("N must equal 4k + 8")

    @property
    def t(self) -> CycNum:
        return self.field.gen()

    @property
    def q(self) -> CycNum:
        return self.field.root_power(2)

    @property
    def delta(self) -> CycNum:
        return _delta(self.k)

    def qint(self, i: int) -> CycNum:
        return _qint(self.k, i)

    def tpow(self, e: int) -> CycNum:
        return self.field.root_power(e)

    def __call__(self, value) -> CycNum:
        return self.field.coerce(value)


@lru_cache(maxsize=None)
def make_params(k: int) -> LevelParams:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"level must be a positive integer, got {k!r}")
    N = 4 * k + 8
    return LevelParams(k, N, _field(N))


def t(params: LevelParams) -> CycNum:
    return params.t


def q(params: LevelParams) -> CycNum:
    return params.q


@lru_cache(maxsize=None)
def _delta(k: int) -> CycNum:
    P = make_params(k)
    return -(P.q + P.field.root_power(-2))


def delta(params: LevelParams) -> CycNum:
    """Loop value -q - q^{-1}."""
    return params.delta


@lru_cache(maxsize=None)
def _qint(k: int, i: int) -> CycNum:
    P = make_params(k)
    f = P.field
    if i < 0:
        return -_qint(k, -i)
    # (q^i - q^-i)/(q - q^-1) = sum_{j=0}^{i-1} q^{i-1-2j}
    acc = f.zero()
    for j in range(i):
        acc = acc + f.root_power(2 * (i - 1 - 2 * j))
    return acc


def qint(params: LevelParams, i: int) -> CycNum:
    """The quantum integer [i]; [-i] = -[i]."""
    return _qint(params.k, i)


def inv(x: CycNum) -> CycNum:
    return x.inverse()
