"""G(Sigma) for ADE graphs: the preprojective algebra, with Nakayama order 2.

The graph functor sends the strand to the bimodule spanned by the arrows of
the doubled graph.  Over the vertex idempotents the sign that TL sees can be
absorbed, and the order drops to 2.

Run: python demos/preprojective.py
"""
from __future__ import annotations

from tlfrobenius.graph_functor import build_graph, verify_corollary
from tlfrobenius.scalars import make_params

for k, name in [(1, "A2"), (2, "A3"), (3, "A4"), (4, "A5"), (4, "D4")]:
    g = build_graph(make_params(k), name)
    r = verify_corollary(g)
    perm = r.top_permutation
    print(f"{name} at level {k}: degrees {r.degree_dims}, total {r.total_dim} (oracle {r.oracle_total}), "
          f"relations {'ok' if r.relations.ok else 'FAIL'}, order {r.order}, top permutation {perm}, "
          f"beta-Frobenius {r.beta.holds}")
