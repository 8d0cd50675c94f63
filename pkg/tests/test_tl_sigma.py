from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tlfrobenius import frobenius as fr
from tlfrobenius.jones_wenzl import is_negligible, pm_id
from tlfrobenius.scalars import make_params
from tlfrobenius.tl_sigma import (
    brute_force_square,
    build_sigma,
    cap_cup_scalar,
    classical_forms_singular,
    frobenius_data,
    frobenius_form,
    nakayama_squared,
    phi_component,
    psi_component,
    sliding_identity,
    verify_frobenius,
)


def test_sigma_is_an_algebra(params):
    sig = build_sigma(params)
    assert all(fr.check_algebra(sig.cat, sig.algebra).values())
    assert len(sig.A) == params.k + 1


def test_multiplication_vanishes_above_top(params):
    sig = build_sigma(params)
    k = params.k
    for i in range(k + 1):
        for j in range(k + 1):
            assert (sig.mult(i, j) is None) == (i + j > k)


def test_form_is_top_projection(params):
    W, n = frobenius_form(params)
    assert W == ((params.k,),)
    assert list(n.blocks) == [(0, params.k)]


def test_components(params):
    res = verify_frobenius(params)
    assert [c.i for c in res] == list(range(params.k + 1))
    assert all(c.ok for c in res), res


@pytest.mark.parametrize("k", [1, 2, 3])
def test_psi_phi_is_exactly_identity(k):
    P = make_params(k)
    for i in range(k + 1):
        assert (psi_component(P, i) @ phi_component(P, i)).exact_equal(pm_id(P, i))


def test_phi_psi_is_not_exactly_identity_at_top():
    # phi_0 psi_0 = 1 on F_k x F_k only modulo negligible maps
    P = make_params(2)
    d = phi_component(P, 0) @ psi_component(P, 0) - pm_id(P, 2, 2)
    assert is_negligible(P, d)
    assert not d.exact_equal(pm_id(P, 2, 2) - pm_id(P, 2, 2))


def test_generic_phi_invertible(params):
    assert frobenius_data(params).invertible


def test_classical_forms_singular(params):
    res = classical_forms_singular(params)
    assert res["dimension"] == 1
    assert res["supported_on_grade_0"]
    assert res["all_singular"]
    # phi for the grade-0 form only sees F_0, so it misses the other k grades
    assert res["defects"] == [params.k]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sliding(k):
    P = make_params(k)
    assert all(sliding_identity(P, i) for i in range(k + 1))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_cap_cup_scalar_is_a_sign(k):
    P = make_params(k)
    assert cap_cup_scalar(P) == P((-1) ** k)


# -- the square of the Nakayama morphism


@pytest.mark.parametrize("k", [1, 2, 3])
def test_square_is_grade_sign(k):
    P = make_params(k)
    assert nakayama_squared(P) == [P((-1) ** i) for i in range(k + 1)]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_brute_force_agrees_with_pipeline(k):
    # independent oracle: plain diagram arithmetic, no categorical structure
    P = make_params(k)
    pipeline = nakayama_squared(P)
    for i in range(k + 1):
        r = brute_force_square(P, i)
        assert r["residual_negligible"]
        assert r["lambda"] == pipeline[i]


@pytest.mark.parametrize("k", [1, 2])
def test_square_independent_of_xi_scale(k):
    P = make_params(k)
    fd = frobenius_data(P)
    base = nakayama_squared(P, fd)
    rng = random.Random(k)
    F = P.field
    for _ in range(100):
        s = F.from_coeffs([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)])
        if s.is_zero():
            continue
        assert nakayama_squared(P, fd, xi_scale=s) == base
