from __future__ import annotations

import random
from math import comb

import pytest

from tlfrobenius.diagrams import (
    PlanarDiagram,
    TLMorphism,
    basis,
    cap,
    cap_diagram,
    capcup,
    catalan,
    compose,
    compose_diagrams,
    cup,
    cup_diagram,
    factor_through,
    id_diagram,
    identity,
    markov_trace,
    rotate180,
    rotate_diagram,
    tensor,
    tensor_diagrams,
    trace_loops,
)
from tlfrobenius.scalars import make_params


def union_find_compose(g, f):
    """Independent oracle: glue f (m->n) and g (n->p) as a graph and read off components."""
    m, n, p = f.m, f.n, g.n
    # nodes: bottom 0..m-1, middle m..m+n-1, top m+n..m+n+p-1
    parent = list(range(m + n + p))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(a, b):
        parent[find(a)] = find(b)

    for x, y in f.arcs():
        join(x, y)  # f's points: bottom 0..m-1, top m..m+n-1 = middle
    for x, y in g.arcs():
        join(m + x, m + y)  # g's bottom = middle, g's top = top
    groups = {}
    for x in range(m + n + p):
        groups.setdefault(find(x), []).append(x)
    pairs = [0] * (m + p)
    loops = 0
    for members in groups.values():
        ends = [x for x in members if x < m or x >= m + n]
        if not ends:
            loops += 1
            continue
        assert len(ends) == 2
        a, b = (e if e < m else e - n for e in ends)
        pairs[a], pairs[b] = b, a
    return PlanarDiagram(m, p, tuple(pairs)), loops


def rand_diagram(rng, m, n):
    return rng.choice(basis(m, n))


@pytest.mark.parametrize("n", range(0, 9))
def test_catalan_counts(n):
    c = comb(2 * n, n) // (n + 1)
    assert catalan(n) == c
    for m in range(0, 2 * n + 1):
        assert len(basis(m, 2 * n - m)) == c


def test_basis_elements_are_distinct_and_planar():
    for m, n in [(3, 3), (4, 2), (2, 6), (5, 1)]:
        B = basis(m, n)
        assert len(set(B)) == len(B)
        for d in B:
            d._validate()


def test_crossing_pairing_rejected():
    with pytest.raises(ValueError):
        PlanarDiagram(4, 0, (2, 3, 0, 1))


def test_composition_matches_union_find_oracle():
    rng = random.Random(11)
    for _ in range(300):
        m = rng.randint(0, 5)
        n = m + 2 * rng.randint(-(m // 2), 2)
        p = n + 2 * rng.randint(-(n // 2), 2)
        f, g = rand_diagram(rng, m, n), rand_diagram(rng, n, p)
        assert compose_diagrams(g, f) == union_find_compose(g, f)


def test_generators_and_small_relations():
    # cap o cup is a loop
    d, loops = compose_diagrams(cap_diagram(0, 0), cup_diagram(0, 0))
    assert d == id_diagram(0) and loops == 1
    # zig-zag
    zz, loops = compose_diagrams(tensor_diagrams(id_diagram(1), cap_diagram(0, 0)), tensor_diagrams(cup_diagram(0, 0), id_diagram(1)))
    assert zz == id_diagram(1) and loops == 0


def test_temperley_lieb_relations(P2):
    P = P2
    U0, U1 = capcup(P, 0, 3), capcup(P, 1, 3)
    assert U0 @ U0 == U0.scale(P.delta)
    assert U0 @ U1 @ U0 == U0
    assert U1 @ U0 @ U1 == U1
    assert capcup(P, 0, 4) @ capcup(P, 2, 4) == capcup(P, 2, 4) @ capcup(P, 0, 4)


def test_rotation_involutive_and_reverses_composition():
    rng = random.Random(5)
    for _ in range(200):
        m = rng.randint(0, 5)
        n = m + 2 * rng.randint(-(m // 2), 2)
        p = n + 2 * rng.randint(-(n // 2), 1)
        f, g = rand_diagram(rng, m, n), rand_diagram(rng, n, p)
        assert rotate_diagram(rotate_diagram(f)) == f
        d, loops = compose_diagrams(g, f)
        rd, rloops = compose_diagrams(rotate_diagram(f), rotate_diagram(g))
        assert rd == rotate_diagram(d) and rloops == loops


def test_trace_cyclicity_and_interchange():
    P = make_params(3)
    rng = random.Random(7)
    for _ in range(150):
        a = rng.randint(0, 4)
        b = a + 2 * rng.randint(-(a // 2), 1)
        f = TLMorphism.from_diagram(P, rand_diagram(rng, a, b), rng.randint(1, 9))
        g = TLMorphism.from_diagram(P, rand_diagram(rng, b, a), rng.randint(1, 9))
        assert markov_trace(compose(g, f)) == markov_trace(compose(f, g))
        c = rng.randint(0, 3)
        d = c + 2 * rng.randint(-(c // 2), 1)
        h1 = TLMorphism.from_diagram(P, rand_diagram(rng, c, d))
        h2 = TLMorphism.from_diagram(P, rand_diagram(rng, d, c))
        assert compose(tensor(g, h2), tensor(f, h1)) == tensor(compose(g, f), compose(h2, h1))


def test_trace_of_identity_is_power_of_delta(params):
    for n in range(5):
        assert markov_trace(identity(params, n)) == params.delta ** n
        assert trace_loops(id_diagram(n)) == n


def test_factor_through_recovers_diagram():
    rng = random.Random(3)
    for _ in range(200):
        m = rng.randint(0, 6)
        n = m + 2 * rng.randint(-(m // 2), 2)
        d = rand_diagram(rng, m, n)
        C, U = factor_through(d)
        assert C.n == U.m == d.through_strands()
        assert compose_diagrams(U, C) == (d, 0)


def test_linear_structure(P2):
    P = P2
    f = cup(P, 0, 0)
    assert (f + f.scale(-1)).is_zero()
    assert (cap(P, 0, 0) @ f).coefficient(id_diagram(0)) == P.delta
    assert rotate180(f) == cap(P, 0, 0)
