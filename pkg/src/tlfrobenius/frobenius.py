"""Twisted Frobenius structures and Nakayama morphisms in a rigid category.

The algorithms here only talk to a :class:`WordCategory`: a strict rigid
monoidal category whose objects are *words* (tuples of atoms), with finite
hom-space bases over a field and an equality predicate.  On top of that this
module adds finite direct sums: an object is a tuple of words and a morphism
is a sparse matrix of word morphisms (:class:`Mor`).

Everything is computed by composing the categorical structure maps; nothing
here knows about diagrams or bimodules.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .scalars import CycNum, CyclotomicField

__all__ = [
    "WordCategory",
    "Mor",
    "NonInvertible",
    "AlgebraObject",
    "FrobeniusData",
    "OrderResult",
    "tensor_obj",
    "dual_obj",
    "unit_obj",
    "identity",
    "zero",
    "compose",
    "chain",
    "tensor",
    "add",
    "scale",
    "dual_mor",
    "ev",
    "coev",
    "pivotal",
    "pivotal_inv",
    "dual_tensor_iso",
    "hom_basis",
    "coordinates",
    "equal",
    "is_zero",
    "invert",
    "check_algebra",
    "build_phi",
    "invert_phi",
    "frobenius_data",
    "left_form",
    "left_phi",
    "from_left_form",
    "left_inverse_from",
    "check_left_frobenius",
    "check_phi_module_map",
    "check_dual_identification",
    "check_right_dual",
    "nakayama",
    "nakayama_power",
    "order_composite",
    "nakayama_order",
]


class WordCategory:
    """Interface for a strict rigid monoidal category with words as objects.

    Words are tuples of atoms, tensor is concatenation and the unit is ``()``.
    Implementations supply the methods that raise NotImplementedError.
    """

    field: CyclotomicField

    # atoms and words
    def dual_atom(self, a):
        raise NotImplementedError

    def dual_word(self, w: tuple) -> tuple:
        return tuple(self.dual_atom(a) for a in reversed(w))

    # morphisms of words
    def src(self, f) -> tuple:
        raise NotImplementedError

    def dst(self, f) -> tuple:
        raise NotImplementedError

    def identity(self, w):
        raise NotImplementedError

    def zero(self, w1, w2):
        raise NotImplementedError

    def compose(self, g, f):
        raise NotImplementedError

    def tensor(self, f, g):
        raise NotImplementedError

    def add(self, f, g):
        raise NotImplementedError

    def scale(self, f, c: CycNum):
        raise NotImplementedError

    def ev(self, w):
        """dual(w) x w -> ()"""
        raise NotImplementedError

    def coev(self, w):
        """() -> w x dual(w)"""
        raise NotImplementedError

    def pivotal(self, w):
        """w -> dual(dual(w))"""
        raise NotImplementedError

    def pivotal_inv(self, w):
        raise NotImplementedError

    def hom_basis(self, w1, w2) -> list:
        raise NotImplementedError

    def coordinates(self, f) -> list[CycNum]:
        raise NotImplementedError

    def unit_idempotents(self) -> list:
        """Primitive orthogonal idempotents of End(unit) summing to the identity."""
        return [self.identity(())]

    # defaults
    def dual_mor(self, f):
        """(ev_Y x 1)(1 x f x 1)(1 x coev_X): dual(Y) -> dual(X)."""
        X, Y = self.src(f), self.dst(f)
        dY, dX = self.dual_word(Y), self.dual_word(X)
        a = self.tensor(self.identity(dY), self.coev(X))
        b = self.tensor(self.tensor(self.identity(dY), f), self.identity(dX))
        c = self.tensor(self.ev(Y), self.identity(dX))
        return self.compose(c, self.compose(b, a))

    def is_zero(self, f) -> bool:
        return all(c.is_zero() for c in self.coordinates(f))

    def equal(self, f, g) -> bool:
        return self.is_zero(self.add(f, self.scale(g, -self.field.one())))


# --- finite direct sums ----------------------------------------------------


def unit_obj() -> tuple:
    return ((),)


def tensor_obj(X: Sequence[tuple], Y: Sequence[tuple]) -> tuple:
    return tuple(x + y for x in X for y in Y)


def dual_obj(cat: WordCategory, X) -> tuple:
    return tuple(cat.dual_word(w) for w in X)


class Mor:
    """A morphism between direct sums of words.

    ``blocks[(r, c)]`` is a word morphism ``src[c] -> dst[r]``; missing blocks
    are zero.
    """

    __slots__ = ("src", "dst", "blocks")

    def __init__(self, src, dst, blocks=None):
        self.src = tuple(src)
        self.dst = tuple(dst)
        self.blocks = dict(blocks or {})

    def __repr__(self):
        return f"Mor({len(self.src)} -> {len(self.dst)} summands, {len(self.blocks)} blocks)"

    def block(self, r: int, c: int):
        return self.blocks.get((r, c))


def identity(cat: WordCategory, X) -> Mor:
    return Mor(X, X, {(i, i): cat.identity(w) for i, w in enumerate(X)})


def zero(cat: WordCategory, X, Y) -> Mor:
    return Mor(X, Y, {})


def compose(cat: WordCategory, g: Mor, f: Mor) -> Mor:
    """g after f."""
    if tuple(g.src) != tuple(f.dst):
        raise ValueError("cannot compose: objects differ")
    by_row: dict = {}
    for (r, c), b in f.blocks.items():
        by_row.setdefault(r, []).append((c, b))
    out = {}
    for (r2, m), a in g.blocks.items():
        for c, b in by_row.get(m, ()):
            t = cat.compose(a, b)
            key = (r2, c)
            out[key] = t if key not in out else cat.add(out[key], t)
    return Mor(f.src, g.dst, out)


def chain(cat: WordCategory, *ms: Mor) -> Mor:
    """chain(cat, a, b, c) = a o b o c."""
    out = ms[-1]
    for m in reversed(ms[:-1]):
        out = compose(cat, m, out)
    return out


def tensor(cat: WordCategory, f: Mor, g: Mor) -> Mor:
    n_src2, n_dst2 = len(g.src), len(g.dst)
    out = {}
    for (r1, c1), a in f.blocks.items():
        for (r2, c2), b in g.blocks.items():
            out[(r1 * n_dst2 + r2, c1 * n_src2 + c2)] = cat.tensor(a, b)
    return Mor(tensor_obj(f.src, g.src), tensor_obj(f.dst, g.dst), out)


def add(cat: WordCategory, f: Mor, g: Mor) -> Mor:
    if f.src != g.src or f.dst != g.dst:
        raise ValueError("cannot add morphisms between different objects")
    out = dict(f.blocks)
    for key, b in g.blocks.items():
        out[key] = b if key not in out else cat.add(out[key], b)
    return Mor(f.src, f.dst, out)


def scale(cat: WordCategory, f: Mor, c) -> Mor:
    c = cat.field.coerce(c)
    return Mor(f.src, f.dst, {key: cat.scale(b, c) for key, b in f.blocks.items()})


def dual_mor(cat: WordCategory, f: Mor) -> Mor:
    return Mor(dual_obj(cat, f.dst), dual_obj(cat, f.src),
               {(c, r): cat.dual_mor(b) for (r, c), b in f.blocks.items()})


def ev(cat: WordCategory, X) -> Mor:
    """dual(X) x X -> unit."""
    n = len(X)
    return Mor(tensor_obj(dual_obj(cat, X), X), unit_obj(), {(0, a * n + a): cat.ev(w) for a, w in enumerate(X)})


def coev(cat: WordCategory, X) -> Mor:
    """unit -> X x dual(X)."""
    n = len(X)
    return Mor(unit_obj(), tensor_obj(X, dual_obj(cat, X)), {(a * n + a, 0): cat.coev(w) for a, w in enumerate(X)})


def pivotal(cat: WordCategory, X) -> Mor:
    dd = dual_obj(cat, dual_obj(cat, X))
    return Mor(X, dd, {(i, i): cat.pivotal(w) for i, w in enumerate(X)})


def pivotal_inv(cat: WordCategory, X) -> Mor:
    dd = dual_obj(cat, dual_obj(cat, X))
    return Mor(dd, X, {(i, i): cat.pivotal_inv(w) for i, w in enumerate(X)})


def dual_tensor_iso(cat: WordCategory, X, Y) -> Mor:
    """The reindexing dual(X x Y) -> dual(Y) x dual(X) (identity blocks)."""
    src = dual_obj(cat, tensor_obj(X, Y))
    dst = tensor_obj(dual_obj(cat, Y), dual_obj(cat, X))
    nX, nY = len(X), len(Y)
    blocks = {}
    for i in range(nX):
        for j in range(nY):
            s, d = i * nY + j, j * nX + i
            assert src[s] == dst[d]
            blocks[(d, s)] = cat.identity(src[s])
    return Mor(src, dst, blocks)


def hom_basis(cat: WordCategory, X, Y) -> list[Mor]:
    out = []
    for r, wy in enumerate(Y):
        for c, wx in enumerate(X):
            for b in cat.hom_basis(wx, wy):
                out.append(Mor(X, Y, {(r, c): b}))
    return out


def coordinates(cat: WordCategory, f: Mor) -> list[CycNum]:
    F = cat.field
    out = []
    for r, wy in enumerate(f.dst):
        for c, wx in enumerate(f.src):
            b = f.blocks.get((r, c))
            if b is None:
                out.extend(F.zero() for _ in cat.hom_basis(wx, wy))
            else:
                out.extend(cat.coordinates(b))
    return out


def is_zero(cat: WordCategory, f: Mor) -> bool:
    return all(cat.is_zero(b) for b in f.blocks.values())


def equal(cat: WordCategory, f: Mor, g: Mor) -> bool:
    if tuple(f.src) != tuple(g.src) or tuple(f.dst) != tuple(g.dst):
        raise ValueError("comparing morphisms between different objects")
    keys = set(f.blocks) | set(g.blocks)
    for key in keys:
        a, b = f.blocks.get(key), g.blocks.get(key)
        if a is None:
            if not cat.is_zero(b):
                return False
        elif b is None:
            if not cat.is_zero(a):
                return False
        elif not cat.equal(a, b):
            return False
    return True


class NonInvertible(ArithmeticError):
    """A morphism has no two-sided inverse; ``defect`` measures the rank deficiency."""

    def __init__(self, message: str, defect: int):
        super().__init__(f"{message} (defect {defect})")
        self.defect = defect


def _combine(cat: WordCategory, X, Y, coeffs, basis) -> Mor:
    out = Mor(X, Y, {})
    for c, b in zip(coeffs, basis):
        if not c.is_zero():
            out = add(cat, out, scale(cat, b, c))
    return out


def _image_rank(cat: WordCategory, maps: list[Mor]) -> int:
    if not maps:
        return 0
    rows = [coordinates(cat, m) for m in maps]
    if not rows[0]:
        return 0
    return linalg.rank(rows, cat.field)


def invert(cat: WordCategory, f: Mor) -> Mor:
    """Two-sided inverse of f by an exact linear solve.

    Solves psi o f = 1 in the hom-space coordinates of End(src), then checks
    f o psi = 1 with the category's equality predicate.  In a semisimple
    category a left inverse that is also a right inverse is the inverse.
    Categories may short-circuit this with an ``invert_mor`` method.
    """
    fast = getattr(cat, "invert_mor", None)
    if fast is not None:
        return fast(f)
    X, Y = f.src, f.dst
    F = cat.field
    basis = hom_basis(cat, Y, X)
    target = coordinates(cat, identity(cat, X))
    if not target:
        # End(X) = 0, so X is a zero object
        if _image_rank(cat, [identity(cat, Y)]) == 0:
            return Mor(Y, X, {})
        raise NonInvertible("source is zero but target is not", len(coordinates(cat, identity(cat, Y))))
    products = [compose(cat, b, f) for b in basis]
    if not products:
        raise NonInvertible("no morphisms in the reverse direction", len(target))
    cols = [coordinates(cat, p) for p in products]
    M = [[cols[j][i] for j in range(len(basis))] for i in range(len(target))]
    x = linalg.solve(M, target, F)
    if x is None:
        raise NonInvertible("no left inverse", len(target) - linalg.rank(M, F))
    psi = _combine(cat, Y, X, x, basis)
    if not equal(cat, compose(cat, f, psi), identity(cat, Y)):
        # f is split mono but not epi; measure how far f o Hom(Y, X) is from End(Y)
        dim_end = len(coordinates(cat, identity(cat, Y)))
        reach = _image_rank(cat, [compose(cat, f, b) for b in basis])
        raise NonInvertible("left inverse is not a right inverse", dim_end - reach)
    return psi


# --- algebras and Frobenius structures -------------------------------------


@dataclass
class AlgebraObject:
    A: tuple
    m: Mor  # A x A -> A
    u: Mor  # unit -> A


def check_algebra(cat: WordCategory, alg: AlgebraObject) -> dict[str, bool]:
    A = alg.A
    one = identity(cat, A)
    assoc_l = compose(cat, alg.m, tensor(cat, alg.m, one))
    assoc_r = compose(cat, alg.m, tensor(cat, one, alg.m))
    unit_l = compose(cat, alg.m, tensor(cat, alg.u, one))
    unit_r = compose(cat, alg.m, tensor(cat, one, alg.u))
    return {
        "associative": equal(cat, assoc_l, assoc_r),
        "left unit": equal(cat, unit_l, one),
        "right unit": equal(cat, unit_r, one),
    }


@dataclass
class FrobeniusData:
    algebra: AlgebraObject
    W: tuple
    n: Mor
    phi: Mor
    psi: Mor | None = None
    V: tuple | None = None
    alpha: Mor | None = None
    notes: dict = field(default_factory=dict)

    @property
    def invertible(self) -> bool:
        return self.psi is not None


def build_phi(cat: WordCategory, alg: AlgebraObject, W, n: Mor) -> Mor:
    """(kappa x 1)(1 x c_A): A -> W x dual(A), kappa = n o m."""
    A = alg.A
    dA = dual_obj(cat, A)
    kappa = compose(cat, n, alg.m)
    return compose(cat, tensor(cat, kappa, identity(cat, dA)), tensor(cat, identity(cat, A), coev(cat, A)))


def invert_phi(cat: WordCategory, phi: Mor) -> Mor:
    return invert(cat, phi)


def frobenius_data(cat: WordCategory, alg: AlgebraObject, W, n: Mor) -> FrobeniusData:
    """Build phi and try to invert it; psi stays None when phi is singular."""
    phi = build_phi(cat, alg, W, n)
    fd = FrobeniusData(alg, tuple(W), n, phi)
    try:
        fd.psi = invert(cat, phi)
    except NonInvertible as exc:
        fd.notes["non_invertible"] = exc.defect
        return fd
    fd.V = dual_obj(cat, W)
    return fd


# -- left Frobenius structures


def left_form(cat: WordCategory, fd: FrobeniusData) -> Mor:
    """n^l = e_W o (1_V x n): V x A -> unit."""
    V = dual_obj(cat, fd.W)
    return compose(cat, ev(cat, fd.W), tensor(cat, identity(cat, V), fd.n))


def left_phi(cat: WordCategory, alg: AlgebraObject, V, nl: Mor) -> Mor:
    """(n^l x 1)(1 x m x 1)(1 x 1 x c_A): V x A -> dual(A)."""
    A = alg.A
    dA = dual_obj(cat, A)
    step1 = tensor(cat, identity(cat, tensor_obj(V, A)), coev(cat, A))
    step2 = tensor(cat, tensor(cat, identity(cat, V), alg.m), identity(cat, dA))
    step3 = tensor(cat, nl, identity(cat, dA))
    return chain(cat, step3, step2, step1)


def from_left_form(cat: WordCategory, W, nl: Mor) -> Mor:
    """n = (1_W x n^l)(c_W x 1_A)."""
    V = dual_obj(cat, W)
    A = _strip_prefix(nl.src, V)
    return compose(cat, tensor(cat, identity(cat, W), nl), tensor(cat, coev(cat, W), identity(cat, A)))


def _strip_prefix(X, V):
    """Recover A from V x A when V has a single summand."""
    if len(V) != 1:
        raise ValueError("expected a single-summand object")
    v = V[0]
    out = []
    for w in X:
        if w[: len(v)] != v:
            raise ValueError("object is not of the form V x A")
        out.append(w[len(v):])
    return tuple(out)


def left_inverse_from(cat: WordCategory, fd: FrobeniusData) -> Mor:
    """psi^l = (1_V x psi)(e_W^{-1} x 1): dual(A) -> V x A."""
    W = fd.W
    V = dual_obj(cat, W)
    dA = dual_obj(cat, fd.algebra.A)
    e_inv = invert(cat, ev(cat, W))
    return compose(cat, tensor(cat, identity(cat, V), fd.psi), tensor(cat, e_inv, identity(cat, dA)))


def check_left_frobenius(cat: WordCategory, fd: FrobeniusData) -> dict[str, bool]:
    """Round trip between (W, n) and (V, n^l), and agreement of the phi's and inverses."""
    alg = fd.algebra
    W = fd.W
    V = dual_obj(cat, W)
    nl = left_form(cat, fd)
    phil = left_phi(cat, alg, V, nl)
    out = {}
    out["n recovered"] = equal(cat, from_left_form(cat, W, nl), fd.n)
    via_phi = compose(cat, tensor(cat, ev(cat, W), identity(cat, dual_obj(cat, alg.A))),
                      tensor(cat, identity(cat, V), fd.phi))
    out["phi^l from phi"] = equal(cat, phil, via_phi)
    back = compose(cat, tensor(cat, identity(cat, W), phil), tensor(cat, coev(cat, W), identity(cat, alg.A)))
    out["phi from phi^l"] = equal(cat, back, fd.phi)
    if fd.psi is not None:
        psil = left_inverse_from(cat, fd)
        out["psi^l o phi^l = 1"] = equal(cat, compose(cat, psil, phil), identity(cat, phil.src))
        out["phi^l o psi^l = 1"] = equal(cat, compose(cat, phil, psil), identity(cat, phil.dst))
    else:
        try:
            invert(cat, phil)
            out["phi^l singular too"] = False
        except NonInvertible:
            out["phi^l singular too"] = True
    return out


def check_phi_module_map(cat: WordCategory, fd: FrobeniusData) -> bool:
    """phi o m = (1_W x rho)(phi x 1_A), rho the right action of A on dual(A)."""
    alg = fd.algebra
    A = alg.A
    dA = dual_obj(cat, A)
    one_dA = identity(cat, dA)
    rho = chain(
        cat,
        tensor(cat, ev(cat, A), one_dA),
        tensor(cat, tensor(cat, one_dA, alg.m), one_dA),
        tensor(cat, identity(cat, tensor_obj(dA, A)), coev(cat, A)),
    )
    lhs = compose(cat, fd.phi, alg.m)
    rhs = compose(cat, tensor(cat, identity(cat, fd.W), rho), tensor(cat, fd.phi, identity(cat, A)))
    return equal(cat, lhs, rhs)


def check_dual_identification(cat: WordCategory, fd: FrobeniusData) -> bool:
    """With f = (e_W x 1)(1_V x phi): V x A -> dual(A), (1_W x f^{-1}) o phi = c_W x 1_A."""
    W, A = fd.W, fd.algebra.A
    V = dual_obj(cat, W)
    f = compose(cat, tensor(cat, ev(cat, W), identity(cat, dual_obj(cat, A))), tensor(cat, identity(cat, V), fd.phi))
    f_inv = invert(cat, f)
    lhs = compose(cat, tensor(cat, identity(cat, W), f_inv), fd.phi)
    rhs = tensor(cat, coev(cat, W), identity(cat, A))
    return equal(cat, lhs, rhs)


def check_right_dual(cat: WordCategory, fd: FrobeniusData) -> dict[str, bool]:
    """Right dual A x V of A built from phi; triangle identities and phi' = 1_A x c_V."""
    alg = fd.algebra
    A, W = alg.A, fd.W
    V = dual_obj(cat, W)
    dA = dual_obj(cat, A)
    rA = tensor_obj(A, V)
    one_A, one_V, one_W = identity(cat, A), identity(cat, V), identity(cat, W)
    # e': A x A x V -> W x dA x A x V -> W x V -> 1
    e_r = chain(
        cat,
        ev(cat, V),
        tensor(cat, tensor(cat, one_W, ev(cat, A)), one_V),
        tensor(cat, fd.phi, identity(cat, rA)),
    )
    # c^r: 1 -> A x dA -> A x V x W x dA -> A x V x A
    c_r = chain(
        cat,
        tensor(cat, identity(cat, rA), fd.psi),
        tensor(cat, tensor(cat, one_A, coev(cat, V)), identity(cat, dA)),
        coev(cat, A),
    )
    one_rA = identity(cat, rA)
    tri1 = compose(cat, tensor(cat, one_rA, e_r), tensor(cat, c_r, one_rA))
    tri2 = compose(cat, tensor(cat, e_r, one_A), tensor(cat, one_A, c_r))
    kappa = compose(cat, fd.n, alg.m)
    phi_p = compose(cat, tensor(cat, one_rA, kappa), tensor(cat, c_r, one_A))
    expect = tensor(cat, one_A, coev(cat, V))
    return {
        "triangle (right dual side)": equal(cat, tri1, one_rA),
        "triangle (A side)": equal(cat, tri2, one_A),
        "phi' = 1 x c_V": equal(cat, phi_p, expect),
    }


# --- Nakayama morphism -------------------------------------------------------


def nakayama(cat: WordCategory, fd: FrobeniusData) -> Mor:
    """alpha = (iota_A^{-1} x 1_V)(e_W x (phi^dual)^{-1})(1_V x phi): V x A -> A x V.

    (phi^dual)^{-1} is computed as the dual of psi = phi^{-1}.
    """
    if fd.psi is None:
        raise NonInvertible("phi is not invertible", fd.notes.get("non_invertible", 1))
    A, W = fd.algebra.A, fd.W
    V = dual_obj(cat, W)
    dA = dual_obj(cat, A)
    psi_dual = compose(cat, dual_tensor_iso(cat, W, dA), dual_mor(cat, fd.psi))  # dA -> ddA x V
    step1 = tensor(cat, identity(cat, V), fd.phi)
    step2 = tensor(cat, ev(cat, W), psi_dual)
    step3 = tensor(cat, pivotal_inv(cat, A), identity(cat, V))
    alpha = chain(cat, step3, step2, step1)
    fd.V = V
    fd.alpha = alpha
    return alpha


def nakayama_power(cat: WordCategory, fd: FrobeniusData, n: int) -> Mor:
    """alpha^n: V^n x A -> A x V^n, alpha^n = (alpha x 1)(1_V x alpha^{n-1})."""
    alpha = fd.alpha if fd.alpha is not None else nakayama(cat, fd)
    V = fd.V
    out = alpha
    Vk = V
    for _ in range(n - 1):
        out = compose(cat, tensor(cat, alpha, identity(cat, Vk)), tensor(cat, identity(cat, V), out))
        Vk = tensor_obj(V, Vk)
    return out


def order_composite(cat: WordCategory, fd: FrobeniusData, n: int, xi: Mor, xi_inv: Mor, alpha_n: Mor | None = None) -> Mor:
    """(1_A x xi) alpha^n (xi^{-1} x 1_A): A -> A."""
    A = fd.algebra.A
    an = alpha_n if alpha_n is not None else nakayama_power(cat, fd, n)
    one = identity(cat, A)
    return chain(cat, tensor(cat, one, xi), an, tensor(cat, xi_inv, one))


@dataclass
class OrderResult:
    order: int | None  # None means not found up to max_n
    tried: list = field(default_factory=list)  # per n: dict describing what happened
    xi: Mor | None = None
    xi_inv: Mor | None = None


def _find_invertible(cat: WordCategory, src, dst, rng: random.Random, tries: int = 6):
    basis = hom_basis(cat, src, dst)
    if not basis:
        return None
    F = cat.field
    candidates = [[F.one()] * len(basis)]
    for _ in range(tries):
        candidates.append([F(rng.randint(1, 97)) for _ in basis])
    for coeffs in candidates:
        xi = None
        for c, b in zip(coeffs, basis):
            term = scale(cat, b, c)
            xi = term if xi is None else add(cat, xi, term)
        try:
            return xi, invert(cat, xi)
        except NonInvertible:
            continue
    return None


def _unit_blocks(cat: WordCategory, A):
    """Projections (eps_v x 1_A)(1_A x eps_w) onto the S-blocks of A."""
    eps = [Mor(unit_obj(), unit_obj(), {(0, 0): e}) for e in cat.unit_idempotents()]
    one = identity(cat, A)
    out = {}
    for v, ev_ in enumerate(eps):
        for w, ew in enumerate(eps):
            P = compose(cat, tensor(cat, ev_, one), tensor(cat, one, ew))
            if not is_zero(cat, P):
                out[(v, w)] = P
    return out


def _ratio(cat: WordCategory, f: Mor, g: Mor):
    """Scalar r with f = r g, or None (g assumed nonzero)."""
    cf, cg = coordinates(cat, f), coordinates(cat, g)
    r = None
    for a, b in zip(cf, cg):
        if b.is_zero():
            if not a.is_zero():
                return None
            continue
        q = a / b
        if r is None:
            r = q
        elif q != r:
            return None
    return r


def _solve_gauge(cat: WordCategory, C0: Mor, blocks: dict):
    """Find invertible z in End(unit) with (1 x z) C0 (z^{-1} x 1) = 1, as vertex weights.

    Writes z = sum g_v eps_v.  Then the composite restricted to the (v, w)
    block is (g_w / g_v) C0 P_vw, so each block needs C0 P_vw = m_vw P_vw and
    g_w / g_v = 1 / m_vw.
    """
    F = cat.field
    ratios = {}
    for (v, w), P in blocks.items():
        CP = compose(cat, C0, P)
        m = _ratio(cat, CP, P)
        if m is None or m.is_zero():
            return None
        ratios[(v, w)] = m
    nverts = len(cat.unit_idempotents())
    g: dict = {}
    adj: dict = {}
    for (v, w), m in ratios.items():
        adj.setdefault(v, []).append((w, m.inverse()))  # g_w = g_v / m
        adj.setdefault(w, []).append((v, m))  # g_v = g_w * m
    for start in range(nverts):
        if start in g:
            continue
        g[start] = F.one()
        stack = [start]
        while stack:
            v = stack.pop()
            for w, factor in adj.get(v, ()):
                val = g[v] * factor
                if w in g:
                    if g[w] != val:
                        return None
                else:
                    g[w] = val
                    stack.append(w)
    return [g[v] for v in range(nverts)]


def nakayama_order(cat: WordCategory, fd: FrobeniusData, max_n: int = 4, seed: int = 0) -> OrderResult:
    """Least n <= max_n with alpha^n = 1, searching invertible xi: V^n -> unit.

    For one invertible xi0, every other one is z xi0 with z invertible in
    End(unit); the effect of z is solved for exactly (see _solve_gauge).
    """
    rng = random.Random(seed)
    A = fd.algebra.A
    if fd.alpha is None:
        nakayama(cat, fd)
    V = fd.V
    res = OrderResult(None)
    blocks = _unit_blocks(cat, A)
    Vn = V
    alpha_n = None
    eps = cat.unit_idempotents()
    for n in range(1, max_n + 1):
        if n == 1:
            alpha_n = fd.alpha
        else:
            # Vn is V^{n-1} here
            alpha_n = compose(cat, tensor(cat, fd.alpha, identity(cat, Vn)), tensor(cat, identity(cat, V), alpha_n))
            Vn = tensor_obj(V, Vn)
        found = _find_invertible(cat, Vn, unit_obj(), rng)
        if found is None:
            res.tried.append({"n": n, "xi": False})
            continue
        xi0, xi0_inv = found
        C0 = order_composite(cat, fd, n, xi0, xi0_inv, alpha_n)
        gauge = _solve_gauge(cat, C0, blocks)
        if gauge is None:
            res.tried.append({"n": n, "xi": True, "identity": False})
            continue
        z = Mor(unit_obj(), unit_obj(), {(0, 0): _sum_word(cat, [cat.scale(e, gv) for e, gv in zip(eps, gauge)])})
        z_inv = Mor(unit_obj(), unit_obj(), {(0, 0): _sum_word(cat, [cat.scale(e, gv.inverse()) for e, gv in zip(eps, gauge)])})
        xi = compose(cat, z, xi0)
        xi_inv = compose(cat, xi0_inv, z_inv)
        final = order_composite(cat, fd, n, xi, xi_inv, alpha_n)
        ok = equal(cat, final, identity(cat, A))
        res.tried.append({"n": n, "xi": True, "identity": ok})
        if ok:
            res.order = n
            res.xi, res.xi_inv = xi, xi_inv
            return res
    return res


def _sum_word(cat: WordCategory, ms: list):
    out = ms[0]
    for m in ms[1:]:
        out = cat.add(out, m)
    return out
