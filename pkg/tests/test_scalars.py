from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tlfrobenius.scalars import CyclotomicField, _field, make_params


def qint_float(k, i):
    # independent oracle: [i] = sin(i pi/(k+2)) / sin(pi/(k+2)) at q = exp(i pi/(k+2))
    h = k + 2
    return math.sin(i * math.pi / h) / math.sin(math.pi / h)


@pytest.mark.parametrize("k", range(1, 7))
def test_quantum_integers_match_float_oracle(k):
    P = make_params(k)
    for i in range(-2, 2 * k + 6):
        assert abs(P.qint(i).to_complex() - qint_float(k, i)) < 1e-9


@pytest.mark.parametrize("k", range(1, 7))
def test_level_identities(k):
    P = make_params(k)
    assert P.qint(k + 2).is_zero()
    assert P.qint(1) == 1
    assert P.delta == -P.qint(2)
    assert P.t ** P.N == 1
    assert P.t ** (P.N // 2) == -1
    assert P.q == P.t * P.t
    # [j] = [k+2-j]
    for j in range(k + 3):
        assert P.qint(j) == P.qint(k + 2 - j)


def test_t_is_the_primitive_root():
    P = make_params(2)
    assert abs(P.t.to_complex() - cmath.exp(1j * math.pi / (2 * 2 + 4))) < 1e-12


def test_field_axioms_random():
    F = _field(12)
    rng = random.Random(1)
    for _ in range(100):
        a = F.from_coeffs([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)])
        b = F.from_coeffs([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)])
        c = F.from_coeffs([rng.randint(-3, 3) for _ in range(3)])
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == 1
            assert (b / a) * a == b


def test_json_round_trip():
    F = _field(16)
    x = F.from_coeffs([1, Fraction(-1, 2), 0, 3])
    assert F.from_json(x.to_json()) == x


def test_rational_detection():
    F = CyclotomicField(8)
    assert F(Fraction(3, 4)).is_rational()
    assert F(Fraction(3, 4)).to_fraction() == Fraction(3, 4)
    assert not F.gen().is_rational()


def test_level_must_be_positive():
    with pytest.raises(ValueError):
        make_params(0)


@settings(max_examples=200, derandomize=True, deadline=None)
@given(st.integers(1, 6), st.integers(-12, 12), st.integers(-12, 12))
def test_quantum_clebsch_gordan(k, a, b):
    # [a][b] = sum_{l=0}^{b-1} [a - b + 1 + 2l] for b >= 1, extended by [-b] = -[b]
    P = make_params(k)
    sign = 1 if b >= 0 else -1
    rhs = sum((P.qint(a - abs(b) + 1 + 2 * l) for l in range(abs(b))), P(0))
    assert P.qint(a) * P.qint(b) == rhs * sign


@settings(max_examples=200, derandomize=True, deadline=None)
@given(st.integers(1, 6), st.integers(-20, 20))
def test_quantum_integer_symmetries(k, i):
    P = make_params(k)
    h = k + 2
    assert P.qint(i + 2 * h) == P.qint(i)
    assert P.qint(h - i) == P.qint(i)
    assert P.qint(-i) == -P.qint(i)
