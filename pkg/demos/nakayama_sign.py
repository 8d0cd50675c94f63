"""The Nakayama morphism of Sigma = F_0 + ... + F_k and the sign it carries.

Sigma is a twisted Frobenius algebra with W = F_k.  Squaring its Nakayama
morphism and closing with the cap e_k gives a scalar on each F_i.  The generic
pipeline and a brute-force diagram computation both give (-1)^i, so in TL the
Nakayama morphism has order 4.

Run: python demos/nakayama_sign.py [max_level]
"""
from __future__ import annotations

import sys
import time

from tlfrobenius import frobenius as fr
from tlfrobenius.scalars import make_params
from tlfrobenius.tl_sigma import brute_force_square, build_sigma, frobenius_data, nakayama_squared, verify_frobenius

max_k = int(sys.argv[1]) if len(sys.argv) > 1 else 3
for k in range(1, max_k + 1):
    P = make_params(k)
    t0 = time.perf_counter()
    sig = build_sigma(P)
    comps = verify_frobenius(P, sig)
    fd = frobenius_data(P, sig)
    lam = nakayama_squared(P, fd)
    line = f"k={k}: phi invertible {fd.invertible}, components ok {all(c.ok for c in comps)}, lambda = {[str(x) for x in lam]}"
    if k <= 3:
        brute = [str(brute_force_square(P, i)["lambda"]) for i in range(k + 1)]
        line += f", brute force {brute}"
    print(line, f"({time.perf_counter() - t0:.1f}s)")

P = make_params(1)
sig = build_sigma(P)
res = fr.nakayama_order(sig.cat, frobenius_data(P, sig), max_n=4)
print("\norder search at k=1:")
for step in res.tried:
    print("  ", step)
print("order:", res.order)
