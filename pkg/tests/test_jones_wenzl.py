from __future__ import annotations

import random

import pytest

from tlfrobenius import linalg
from tlfrobenius.diagrams import TLMorphism, basis, cap, capcup, compose, id_diagram, identity, markov_trace
from tlfrobenius.jones_wenzl import (
    NotScalar,
    ProjMorphism,
    ProjObject,
    check_jw_annihilation,
    eval_coev,
    fusion_rule,
    iota,
    is_negligible,
    jw,
    partial_close,
    partial_close_coefficient,
    pi,
    pm_id,
    quotient_dim,
    quotient_hom,
    reduced_diagrams,
    scalar_on_simple,
)
from tlfrobenius.scalars import make_params


def jw_by_linear_solve(P, n):
    """Independent oracle: the unique combination with identity coefficient 1 killed by every cap."""
    F = P.field
    B = basis(n, n)
    idx = {d: i for i, d in enumerate(B)}
    rows, rhs = [], []
    for i in range(n - 1):
        c = cap(P, i, n - 2)
        images = [compose(c, TLMorphism.from_diagram(P, d)) for d in B]
        targets = sorted({e for img in images for e, _ in img.items()})
        for e in targets:
            rows.append([img.coefficient(e) for img in images])
            rhs.append(F.zero())
    row = [F.zero()] * len(B)
    row[idx[id_diagram(n)]] = F.one()
    rows.append(row)
    rhs.append(F.one())
    x = linalg.solve(rows, rhs, F)
    assert x is not None
    out = TLMorphism.zero(P, n, n)
    for d, c in zip(B, x):
        out = out + TLMorphism.from_diagram(P, d, c)
    return out


def test_f2_explicit():
    P = make_params(2)
    f2 = jw(P, 2)
    assert len(f2) == 2
    assert f2 == identity(P, 2) + capcup(P, 0, 2).scale(P.qint(2).inverse())


def test_f0_f1():
    P = make_params(1)
    assert jw(P, 0) == identity(P, 0)
    assert jw(P, 1) == identity(P, 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_recursion_matches_linear_solve_oracle(k):
    P = make_params(k)
    for n in range(2, k + 2):
        assert jw(P, n) == jw_by_linear_solve(P, n)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_idempotent_and_annihilated(k):
    P = make_params(k)
    for i in range(k + 2):
        assert jw(P, i) @ jw(P, i) == jw(P, i)
    for n in range(2, k + 2):
        for i in range(n - 1):
            assert check_jw_annihilation(P, n, i)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_quantum_dimension(k):
    P = make_params(k)
    for i in range(k + 2):
        assert markov_trace(jw(P, i)) == P.qint(i + 1) * (-1) ** i
    assert markov_trace(jw(P, k + 1)).is_zero()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_partial_trace_coefficients(k):
    P = make_params(k)
    for n in range(k + 1):
        for j in range(1, k + 2 - n):
            c = partial_close_coefficient(P, n, j)
            assert c == P.qint(n + j + 1) / P.qint(n + 1) * (-1) ** j
            assert partial_close(P, n, j) == jw(P, n).scale(c)


def test_top_projector_is_negligible(params):
    k = params.k
    top = pm_id(params, k + 1)
    assert is_negligible(params, top)
    assert not is_negligible(params, pm_id(params, k))


def test_iota_pi_are_the_projector(params):
    k = params.k
    for i in range(k + 1):
        for j in range(k + 1 - i):
            assert (pi(params, i, j) @ iota(params, i, j)).exact_equal(pm_id(params, i + j))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fusion_rule_gram_ranks(k):
    P = make_params(k)
    for i in range(k + 1):
        for j in range(k + 1):
            for l in range(k + 1):
                want = 1 if l in fusion_rule(k, i, j) else 0
                assert quotient_dim(ProjObject(P, (i, j)), ProjObject(P, (l,))) == want


def test_fusion_with_generator():
    k = 4
    for i in range(k + 1):
        assert fusion_rule(k, 1, i) == [l for l in (i - 1, i + 1) if 0 <= l <= k]


def test_quotient_coordinates_round_trip(params):
    rng = random.Random(2)
    k = params.k
    X = ProjObject(params, (1, k))
    Y = ProjObject(params, (k, 1))
    H = quotient_hom(X, Y)
    for _ in range(5):
        coords = [params(rng.randint(-3, 3)) for _ in range(H.dim)]
        f = H.element(coords)
        assert H.coordinates(f) == coords


def test_reduced_diagrams_have_no_turnbacks(P2):
    X = ProjObject(P2, (2,))
    Y = ProjObject(P2, (1, 1))
    for d in reduced_diagrams(X, Y):
        assert d.through_strands() == 2


def test_eval_coev_zigzag(params):
    for i in range(params.k + 1):
        e, c = eval_coev(params, i)
        one = pm_id(params, i)
        zig = (one.tensor(e)) @ (c.tensor(one))
        assert zig.exact_equal(one)


def test_scalar_on_simple(params):
    k = params.k
    assert scalar_on_simple(params, pm_id(params, k).scale(3)) == 3
    with pytest.raises(NotScalar):
        scalar_on_simple(params, pm_id(params, k + 1))


def test_negligible_predicate_on_trace_zero_morphism():
    P = make_params(1)
    # on F_1 x F_1 = F_0 + F_2, the F_2 part is negligible at level 1
    f = ProjMorphism.from_tl(ProjObject(P, (1, 1)), ProjObject(P, (1, 1)), jw(P, 2))
    assert is_negligible(P, f)
