"""Command line: ``tlfrob verify``, ``tlfrob jw`` and ``tlfrob preproj``."""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .scalars import make_params

SCHEMA = 1
DEFAULT_MAX_LEVEL = 5
SUITES = ("core", "braiding", "frobenius", "preproj", "all")
REPORT_DIR_ENV = "TLFROB_REPORT_DIR"


@dataclass
class CheckResult:
    id: str
    claim: str
    passed: bool
    witness: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        # no timing here: the JSON report must be reproducible
        return {"id": self.id, "claim": self.claim, "status": "pass" if self.passed else "fail", "witness": self.witness}


# --- individual checks (top level so they can run in worker processes) ---------


def _jw_idempotent(k):
    from .jones_wenzl import jw

    P = make_params(k)
    bad = [i for i in range(k + 2) if jw(P, i) @ jw(P, i) != jw(P, i)]
    return not bad, {"failing_i": bad, "checked": k + 2}


def _jw_annihilation(k):
    from .jones_wenzl import check_jw_annihilation

    P = make_params(k)
    bad = [(n, i) for n in range(2, k + 2) for i in range(n - 1) if not check_jw_annihilation(P, n, i)]
    return not bad, {"failing": [list(b) for b in bad]}


def _jw_partial_trace(k):
    from .jones_wenzl import jw, partial_close, partial_close_coefficient

    P = make_params(k)
    bad = []
    for n in range(0, k + 1):
        for j in range(1, k + 2 - n):
            if partial_close(P, n, j) != jw(P, n).scale(partial_close_coefficient(P, n, j)):
                bad.append([n, j])
    return not bad, {"failing": bad}


def _fusion(k):
    from .jones_wenzl import ProjObject, fusion_rule, quotient_dim

    P = make_params(k)
    bad = []
    for i in range(k + 1):
        for j in range(k + 1):
            for l in range(k + 1):
                want = 1 if l in fusion_rule(k, i, j) else 0
                if quotient_dim(ProjObject(P, (i, j)), ProjObject(P, (l,))) != want:
                    bad.append([i, j, l])
    return not bad, {"failing": bad}


def _top_negligible(k):
    from .jones_wenzl import ProjObject, quotient_dim

    P = make_params(k)
    d = quotient_dim(ProjObject(P, (k,)), ProjObject(P, ()))
    return d == 0, {"dim Hom(F_k, 1)": d}


def _diagram_properties(k, seed):
    from .diagrams import TLMorphism, basis, compose, markov_trace, rotate180, tensor

    P = make_params(k)
    rng = random.Random(seed)

    def sample(m, n):
        return TLMorphism.from_diagram(P, rng.choice(basis(m, n)), rng.randint(1, 5))

    fails = 0
    samples = 100
    for _ in range(samples):
        a = rng.randint(0, 4)
        b = a + 2 * rng.randint(-(a // 2), 1)
        c = b + 2 * rng.randint(-(b // 2), 1)
        f, g = sample(a, b), sample(b, c)
        h = sample(1, 1 + 2 * rng.randint(0, 1))
        h2 = sample(h.dst, 1)
        back = sample(b, a)
        ok = (
            rotate180(rotate180(f)) == f
            and markov_trace(compose(back, f)) == markov_trace(compose(f, back))
            and compose(tensor(g, h2), tensor(f, h)) == tensor(compose(g, f), compose(h2, h))
        )
        fails += not ok
    return fails == 0, {"samples": samples, "failures": fails, "seed": seed}


def _braid_absorption(k):
    from .braiding import braid_scalar_identities

    P = make_params(k)
    bad = [[a, b] for a in range(k + 2) for b in range(k + 2 - a) if not all(braid_scalar_identities(P, a, b).values())]
    return not bad, {"failing": bad}


def _twist(k):
    from .braiding import expected_twist, twist_scalar

    P = make_params(k)
    bad = [j for j in range(k + 1) if twist_scalar(P, j) != expected_twist(P, j)]
    return not bad, {"failing_j": bad}


def _cap_cup_sign(k):
    from .tl_sigma import cap_cup_scalar

    P = make_params(k)
    s = cap_cup_scalar(P)
    return s == P((-1) ** k), {"scalar": str(s)}


def _sliding(k):
    from .tl_sigma import sliding_identity

    P = make_params(k)
    bad = [i for i in range(k + 1) if not sliding_identity(P, i)]
    return not bad, {"failing_i": bad}


def _sigma_algebra(k):
    from . import frobenius as fr
    from .tl_sigma import build_sigma

    sig = build_sigma(make_params(k))
    laws = fr.check_algebra(sig.cat, sig.algebra)
    return all(laws.values()), laws


def _sigma_frobenius(k):
    from .tl_sigma import verify_frobenius

    checks = verify_frobenius(make_params(k))
    bad = [c.i for c in checks if not c.ok]
    return not bad, {"failing_i": bad, "components": len(checks)}


def _sigma_classical(k):
    from .tl_sigma import classical_forms_singular

    r = classical_forms_singular(make_params(k))
    return r["all_singular"] and r["supported_on_grade_0"], r


def _sigma_square(k):
    from .tl_sigma import nakayama_squared

    lam = nakayama_squared(make_params(k))
    return all(x == 1 for x in lam), {"lambda": [str(x) for x in lam]}


def _sigma_order(k):
    from . import frobenius as fr
    from .tl_sigma import build_sigma, frobenius_data

    P = make_params(k)
    sig = build_sigma(P)
    fd = frobenius_data(P, sig)
    res = fr.nakayama_order(sig.cat, fd, max_n=2)
    return res.order == 2, {"order_up_to_2": res.order, "tried": res.tried}


def _sigma_brute(k):
    from .tl_sigma import brute_force_square

    P = make_params(k)
    out = [brute_force_square(P, i) for i in range(k + 1)]
    lam = [str(r["lambda"]) for r in out]
    return all(r["lambda"] == 1 and r["residual_negligible"] for r in out), {"lambda": lam}


def _preproj(k, name, seed):
    from .graph_functor import build_graph, verify_corollary

    r = verify_corollary(build_graph(make_params(k), name), seed=seed)
    return r.ok, _corollary_witness(r)


def _example(_k):
    from . import frobenius as fr
    from .bimodules import beta_frobenius_check, example_fixture

    fx = example_fixture()
    cat = fx.cat
    fd = fr.frobenius_data(cat, fx.algebra, fx.W, fx.n)
    table = example_alpha_table(fx, fd)
    want = {"w12 x e2": "e1 x w12", "w21 x e1": "e2 x w21", "w12 x b": "a x w21", "w21 x a": "b x w12"}
    order = fr.nakayama_order(cat, fd, max_n=2).order
    swap = beta_frobenius_check(cat, fx.algebra, [1, 0]).holds
    ident = beta_frobenius_check(cat, fx.algebra, [0, 1]).holds
    ok = table == want and order == 2 and swap and not ident
    return ok, {"alpha": table, "order": order, "beta_swap": swap, "beta_identity": ident}


def example_alpha_table(fx, fd) -> dict:
    """alpha of the two-vertex example as 'w x a' -> 'a x w' strings.

    V = W^dual is written back in terms of W through w_ij <-> w_ji*.
    Coefficients other than 1 are shown explicitly.
    """
    from . import frobenius as fr

    cat = fx.cat
    alpha = fd.alpha if fd.alpha is not None else fr.nakayama(cat, fd)
    names_A = [e[0] for e in fx.A_atom.elems]
    names_W = [e[0] for e in fx.W_atom.elems]

    def w_of_dual(idx):
        # element idx of W* is w_ij*, identified with w_ji
        lbl = names_W[idx]
        return "w" + lbl[2] + lbl[1]

    out = {}
    for blk in alpha.blocks.values():
        ps, pd = cat.paths(blk.src), cat.paths(blk.dst)
        for (i, j), c in sorted(blk.entries.items()):
            _s, _t, (v, a) = ps[j]
            _s2, _t2, (a2, v2) = pd[i]
            coeff = "" if c == 1 else f"({c}) "
            out[f"{w_of_dual(v)} x {names_A[a]}"] = f"{coeff}{names_A[a2]} x {w_of_dual(v2)}"
    return out


def _corollary_witness(r) -> dict:
    return {
        "graph": r.graph,
        "degree_dims": r.degree_dims,
        "total_dim": r.total_dim,
        "oracle_total": r.oracle_total,
        "relations": r.relations.ok,
        "relation_witness": r.relations.relation_witness,
        "algebra_laws": all(r.algebra_laws.values()),
        "phi_invertible": r.phi_invertible,
        "order": r.order,
        "top_permutation": r.top_permutation,
        "beta_frobenius": r.beta.holds if r.beta else None,
        "fusion_dims": r.fusion_rule,
        "loop_is_delta": r.loop_ok,
        "kills_f_k+1": r.kills_top,
    }


# --- suites ------------------------------------------------------------------------


CLAIMS = {
    "jw.idempotent": "f_i o f_i = f_i for 0 <= i <= k+1",
    "jw.annihilation": "caps and cups next to f_n vanish",
    "jw.partial_trace": "closing j strands of f_{n+j} gives (-1)^j [n+j+1]/[n+1] f_n",
    "fusion.gram_rank": "dim Hom(F_i x F_j, F_l) matches the truncated Clebsch-Gordan rule",
    "fusion.top_to_unit": "Hom(F_k, 1) = 0",
    "diagrams.properties": "rotation involutive, trace cyclic, interchange law (seeded samples)",
    "braiding.absorption": "f_{a+b} absorbs the block braid as t^{+-ab}",
    "braiding.twist": "twist on F_j is (-1)^j t^{j^2+2j}",
    "braiding.cap_cup_sign": "c_k o e_k = (-1)^k on F_k x F_k",
    "sigma.sliding": "(e_k x 1)(1 x pi x 1)(1 x 1 x c) equals (1 x e_i)(iota x 1)",
    "sigma.algebra": "Sigma is associative and unital",
    "sigma.frobenius_components": "psi_i phi_i = 1 exactly and phi_i psi_i = 1 modulo negligibles",
    "sigma.classical_singular": "every n: Sigma -> 1 gives a singular phi",
    "sigma.nakayama_square": "alpha^2 acts on every F_i by 1",
    "sigma.nakayama_order": "the Nakayama morphism has order 2",
    "sigma.brute_force_square": "direct TL expansion of alpha^2 gives 1 on every F_i",
    "example.two_vertex": "two-vertex example: alpha table, order 2, beta-Frobenius for swap only",
    "preproj.corollary": "G(Sigma) is preprojective, Frobenius, Nakayama order 2",
}


def _plan(k: int, suite: str, seed: int, graphs: list[str] | None) -> list[tuple[str, str, tuple]]:
    """(check id, function name, args) in report order."""
    s = {suite} if suite != "all" else set(SUITES)
    plan = []
    if "core" in s:
        plan += [
            ("jw.idempotent", "_jw_idempotent", (k,)),
            ("jw.annihilation", "_jw_annihilation", (k,)),
            ("jw.partial_trace", "_jw_partial_trace", (k,)),
            ("fusion.gram_rank", "_fusion", (k,)),
            ("fusion.top_to_unit", "_top_negligible", (k,)),
            ("diagrams.properties", "_diagram_properties", (k, seed)),
        ]
    if "braiding" in s:
        plan += [
            ("braiding.absorption", "_braid_absorption", (k,)),
            ("braiding.twist", "_twist", (k,)),
            ("braiding.cap_cup_sign", "_cap_cup_sign", (k,)),
            ("sigma.sliding", "_sliding", (k,)),
        ]
    if "frobenius" in s:
        plan += [
            ("sigma.algebra", "_sigma_algebra", (k,)),
            ("sigma.frobenius_components", "_sigma_frobenius", (k,)),
            ("sigma.classical_singular", "_sigma_classical", (k,)),
            ("sigma.nakayama_square", "_sigma_square", (k,)),
            ("sigma.nakayama_order", "_sigma_order", (k,)),
        ]
        if k <= 3:
            plan.append(("sigma.brute_force_square", "_sigma_brute", (k,)))
    if "preproj" in s:
        plan.append(("example.two_vertex", "_example", (k,)))
        for g in graphs if graphs is not None else compatible_graphs(k):
            plan.append((f"preproj.corollary[{g}]", "_preproj", (k, g, seed)))
    return plan


def compatible_graphs(k: int) -> list[str]:
    """Named ADE graphs with Coxeter number k+2."""
    out = [f"A{k + 1}"]
    if k % 2 == 0 and k >= 4:
        out.append(f"D{k // 2 + 2}")
    out += [{10: "E6", 16: "E7", 28: "E8"}[k]] if k in (10, 16, 28) else []
    return out


def _run_one(item) -> CheckResult:
    cid, fname, args = item
    t0 = time.perf_counter()
    try:
        passed, witness = globals()[fname](*args)
    except Exception as exc:  # a crashing check is a failing check
        passed, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
    base = cid.split("[", 1)[0]
    return CheckResult(cid, CLAIMS[base], bool(passed), _jsonable(witness), time.perf_counter() - t0)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


def run_checks(plan, jobs: int = 1) -> list[CheckResult]:
    if jobs <= 1 or len(plan) <= 1:
        return [_run_one(item) for item in plan]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_run_one, plan))


def make_report(k: int, suite: str, seed: int, results: list[CheckResult]) -> dict:
    return {
        "schema": SCHEMA,
        "level": k,
        "suite": suite,
        "seed": seed,
        "ok": all(r.passed for r in results),
        "checks": [r.to_json() for r in results],
    }


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def format_text(k: int, suite: str, results: list[CheckResult]) -> str:
    lines = [f"level {k}, suite {suite}"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"  [{status}] {r.id:<34} {r.seconds:7.2f}s  {r.claim}")
        if not r.passed or r.id.startswith(("sigma.nakayama", "preproj", "example")):
            for key, val in r.witness.items():
                lines.append(f"           {key}: {val}")
    n_fail = sum(not r.passed for r in results)
    lines.append(f"{len(results) - n_fail} passed, {n_fail} failed")
    return "\n".join(lines) + "\n"


# --- argument handling ---------------------------------------------------------------


def _level_type(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"level must be an integer, got {s!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("level must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tlfrob", description="Exact checks for twisted Frobenius structures in Temperley-Lieb categories.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite at one level")
    v.add_argument("--level", type=_level_type, required=True)
    v.add_argument("--suite", choices=SUITES, default="core")
    v.add_argument("--graph", action="append", help="restrict the preproj suite to these graphs (repeatable)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--max-level", type=int, default=DEFAULT_MAX_LEVEL)

    j = sub.add_parser("jw", help="print a Jones-Wenzl projector")
    j.add_argument("--level", type=_level_type, required=True)
    j.add_argument("--index", "-i", type=int, required=True)
    j.add_argument("--format", choices=("text", "json"), default="text")

    pp = sub.add_parser("preproj", help="build G(Sigma) for an ADE graph")
    pp.add_argument("--level", type=_level_type, required=True)
    pp.add_argument("--graph", required=True, help="a name such as A3 or D4, or a file with one edge 'u v' per line")
    pp.add_argument("--format", choices=("text", "json"), default="text")
    pp.add_argument("--seed", type=int, default=0)
    pp.add_argument("--max-level", type=int, default=14)
    return p


def _check_level(parser, k: int, max_level: int, default: int):
    if max_level > default:
        print(f"warning: --max-level {max_level} is above {default}; diagram bases grow like Catalan numbers", file=sys.stderr)
    if k > max_level:
        parser.error(f"level {k} is above --max-level {max_level}")


def cmd_verify(args, parser) -> int:
    _check_level(parser, args.level, args.max_level, DEFAULT_MAX_LEVEL)
    plan = _plan(args.level, args.suite, args.seed, args.graph)
    results = run_checks(plan, args.jobs)
    report = make_report(args.level, args.suite, args.seed, results)
    text = dump_json(report) if args.format == "json" else format_text(args.level, args.suite, results)
    sys.stdout.write(text)
    out_dir = os.environ.get(REPORT_DIR_ENV)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        with open(os.path.join(out_dir, f"verify-k{args.level}-{args.suite}.json"), "w") as fh:
            fh.write(dump_json(report))
    return 0 if report["ok"] else 1


def jw_terms(k: int, i: int) -> list[dict]:
    from .jones_wenzl import jw

    f = jw(make_params(k), i)
    return [{"coefficient": c.to_json(), "value": str(c), "diagram": d.notation(), "pairs": list(d.pairs)} for d, c in f.items()]


def cmd_jw(args, parser) -> int:
    k, i = args.level, args.index
    if not 0 <= i <= k + 1:
        parser.error(f"index must satisfy 0 <= i <= {k + 1}")
    terms = jw_terms(k, i)
    if args.format == "json":
        sys.stdout.write(dump_json({"schema": SCHEMA, "level": k, "index": i, "terms": terms}))
    else:
        print(f"f_{i} at level {k}: {len(terms)} terms")
        for t in terms:
            print(f"  {t['value']:>40}  [{t['diagram']}]")
    return 0


def cmd_preproj(args, parser) -> int:
    from .graph_functor import GraphError, build_graph, read_adjacency, verify_corollary

    _check_level(parser, args.level, args.max_level, 14)
    P = make_params(args.level)
    try:
        if os.path.exists(args.graph):
            nv, edges, names = read_adjacency(args.graph)
            g = build_graph(P, nverts=nv, edges=edges, names=names)
        else:
            g = build_graph(P, args.graph)
    except GraphError as exc:
        print(f"tlfrob preproj: error: {exc}", file=sys.stderr)
        return 2
    r = verify_corollary(g, seed=args.seed)
    w = _corollary_witness(r)
    if args.format == "json":
        from .graph_functor import build_preprojective

        Pi = build_preprojective(g)
        w["dimension_matrices"] = [Pi.dims(i) for i in range(args.level + 1)]
        sys.stdout.write(dump_json({"schema": SCHEMA, "level": args.level, "ok": r.ok, "result": w}))
    else:
        print(f"{r.graph} at level {r.k}")
        print(f"  dims of G(F_0..F_k): {r.degree_dims}")
        print(f"  total dimension {r.total_dim} (path-algebra oracle {r.oracle_total})")
        print(f"  preprojective relations: {'ok' if r.relations.ok else 'FAIL'}")
        print(f"  phi invertible: {r.phi_invertible}; Nakayama order: {r.order}")
        if r.top_permutation is not None:
            print("  G(F_k) permutes vertices: " + ", ".join(f"{g.names[v]}->{g.names[w]}" for v, w in enumerate(r.top_permutation)))
        if r.beta is not None:
            print(f"  beta-Frobenius for that permutation: {r.beta.holds}")
    return 0 if r.ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args, parser)
    if args.command == "jw":
        return cmd_jw(args, parser)
    return cmd_preproj(args, parser)


if __name__ == "__main__":
    sys.exit(main())
