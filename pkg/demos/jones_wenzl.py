"""Jones-Wenzl projectors at level 2 and what survives in the quotient.

Run: python demos/jones_wenzl.py
"""
from __future__ import annotations

from tlfrobenius.jones_wenzl import ProjObject, fusion_rule, jw, quotient_dim
from tlfrobenius.scalars import make_params

P = make_params(2)
print(f"level {P.k}: t is a primitive {P.N}th root of unity, delta = {P.delta}")
print("quantum integers [0..5]:", [str(P.qint(i)) for i in range(6)])

for i in range(P.k + 2):
    f = jw(P, i)
    print(f"f_{i}: {len(f.terms)} diagrams, idempotent: {f @ f == f}")

# f_{k+1} is nonzero in TL but negligible, so F_{k+1} vanishes in the quotient
print("dim End(F_3) in the quotient:", quotient_dim(ProjObject(P, (3,)), ProjObject(P, (3,))))

print("\nfusion F_i x F_j at level 2 (summands F_l):")
for i in range(3):
    for j in range(3):
        got = [l for l in range(3) if quotient_dim(ProjObject(P, (i, j)), ProjObject(P, (l,)))]
        print(f"  F_{i} x F_{j} -> {got}   (truncated Clebsch-Gordan: {fusion_rule(2, i, j)})")
