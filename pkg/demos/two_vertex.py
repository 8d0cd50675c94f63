"""A two-vertex twisted Frobenius algebra and its Nakayama morphism.

A = kQ/(ab, ba) for the quiver 1 <-> 2, with W spanned by w12, w21 and
n(a) = w12, n(b) = w21.  The Nakayama morphism swaps the vertices, so A is a
beta-Frobenius extension of k x k for beta = swap and not for beta = id.

Run: python demos/two_vertex.py
"""
from __future__ import annotations

from tlfrobenius import frobenius as fr
from tlfrobenius.bimodules import beta_frobenius_check, example_fixture
from tlfrobenius.cli import example_alpha_table

fx = example_fixture()
fd = fr.frobenius_data(fx.cat, fx.algebra, fx.W, fx.n)
print("phi invertible:", fd.invertible)
for src, dst in sorted(example_alpha_table(fx, fd).items()):
    print(f"  alpha({src}) = {dst}")
print("order:", fr.nakayama_order(fx.cat, fd, max_n=3).order)
for beta, label in (([1, 0], "swap"), ([0, 1], "id")):
    r = beta_frobenius_check(fx.cat, fx.algebra, beta)
    print(f"beta = {label}: {r.holds} ({r.reason})")
