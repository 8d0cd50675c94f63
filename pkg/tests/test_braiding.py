from __future__ import annotations

import random

import pytest

from tlfrobenius.braiding import (
    BraidWord,
    block_braid,
    braid_scalar_identities,
    crossing,
    expand_braid,
    expected_twist,
    twist_scalar,
)
from tlfrobenius.diagrams import capcup, identity
from tlfrobenius.scalars import make_params
from tlfrobenius.tl_sigma import cap_cup_scalar


def test_kauffman_crossing(P2):
    P = P2
    assert crossing(P) == identity(P, 2).scale(P.t) + capcup(P, 0, 2).scale(P.t.inverse())
    assert crossing(P) @ crossing(P, -1) == identity(P, 2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_braid_relations(k):
    P = make_params(k)
    s1 = expand_braid(P, BraidWord(3, ((0, 1),)))
    s2 = expand_braid(P, BraidWord(3, ((1, 1),)))
    assert s1 @ s2 @ s1 == s2 @ s1 @ s2
    far = [expand_braid(P, BraidWord(4, ((0, 1),))), expand_braid(P, BraidWord(4, ((2, -1),)))]
    assert far[0] @ far[1] == far[1] @ far[0]


def test_random_words_times_inverse_are_identity():
    P = make_params(2)
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(2, 4)
        w = BraidWord(n, tuple((rng.randint(0, n - 2), rng.choice((1, -1))) for _ in range(rng.randint(0, 4))))
        assert expand_braid(P, w.inverse()) @ expand_braid(P, w) == identity(P, n)


def test_braid_word_text_round_trip():
    w = BraidWord(4, ((0, 1), (2, -1), (1, 1)))
    assert BraidWord.parse(4, str(w)) == w


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_projector_absorbs_braid(k):
    P = make_params(k)
    for a in range(k + 2):
        for b in range(k + 2 - a):
            assert all(braid_scalar_identities(P, a, b).values())


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_twist_scalar(k):
    P = make_params(k)
    for j in range(k + 1):
        assert twist_scalar(P, j) == expected_twist(P, j)
        assert twist_scalar(P, j, side="left") == expected_twist(P, j)
        assert twist_scalar(P, j, inverse=True) == expected_twist(P, j).inverse()


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_cap_cup_sign(k):
    P = make_params(k)
    assert cap_cup_scalar(P) == (-1) ** k


def test_block_braid_shapes(P2):
    f = block_braid(P2, 1, 2)
    assert f.src == f.dst == 3
    assert block_braid(P2, 2, 1, inverse=True) @ block_braid(P2, 1, 2) == identity(P2, 3)
