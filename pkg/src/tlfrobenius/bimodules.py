"""Bimodules over S = k x ... x k as a :class:`WordCategory`.

An atom is a bimodule given by a basis of elements x with e_s x e_t = x for a
pair of vertices (s, t).  The tensor product over S of a word of atoms has the
composable sequences of basis elements ("paths") as a basis.  Morphisms are
sparse matrices between path bases that preserve endpoints.

Duals: the dual atom has a basis element x* with endpoints swapped for every x,
ev(x* y) = [x = y] e_t, coev(e_s) = sum of x x* over x starting at s.  With
these choices the double dual is literally the original atom and the pivotal
structure is the identity.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from . import frobenius as fr
from . import linalg
from .frobenius import AlgebraObject, Mor, NonInvertible, WordCategory
from .scalars import CycNum, CyclotomicField, _field

__all__ = [
    "Atom",
    "BimMor",
    "BimoduleCategory",
    "paths",
    "algebra_from_table",
    "twisted_unit",
    "ExampleFixture",
    "example_fixture",
    "BetaResult",
    "beta_frobenius_check",
]


@dataclass(frozen=True)
class Atom:
    """A bimodule with a chosen basis; ``elems`` lists (label, source, target)."""

    name: str
    elems: tuple[tuple[str, int, int], ...]
    dual: bool = False

    def __repr__(self):
        return self.name + ("*" if self.dual else "")

    def dualized(self) -> "Atom":
        return Atom(self.name, tuple((lbl, t, s) for lbl, s, t in self.elems), not self.dual)

    def index(self, label: str) -> int:
        for i, (lbl, _s, _t) in enumerate(self.elems):
            if lbl == label:
                return i
        raise KeyError(label)

    def dims(self, nverts: int) -> list[list[int]]:
        d = [[0] * nverts for _ in range(nverts)]
        for _lbl, s, t in self.elems:
            d[s][t] += 1
        return d


@lru_cache(maxsize=None)
def paths(word: tuple, nverts: int) -> tuple:
    """Basis of the tensor product of ``word``: tuples (start, end, element indices)."""
    if not word:
        return tuple((v, v, ()) for v in range(nverts))
    out = [(s, t, (i,)) for i, (_l, s, t) in enumerate(word[0].elems)]
    for atom in word[1:]:
        nxt = []
        for s, t, idx in out:
            for i, (_l, s2, t2) in enumerate(atom.elems):
                if s2 == t:
                    nxt.append((s, t2, idx + (i,)))
        out = nxt
    return tuple(out)


@lru_cache(maxsize=None)
def _path_index(word: tuple, nverts: int) -> dict:
    return {p: i for i, p in enumerate(paths(word, nverts))}


class BimMor:
    """Endpoint-preserving linear map between the path bases of two words."""

    __slots__ = ("src", "dst", "entries")

    def __init__(self, src: tuple, dst: tuple, entries: Mapping[tuple[int, int], CycNum] | None = None):
        self.src = src
        self.dst = dst
        self.entries = {key: c for key, c in (entries or {}).items() if not c.is_zero()}

    def __repr__(self):
        return f"BimMor({self.src} -> {self.dst}, {len(self.entries)} entries)"


class BimoduleCategory(WordCategory):
    def __init__(self, field: CyclotomicField, nverts: int, names: Iterable[str] | None = None):
        self.field = field
        self.nverts = nverts
        self.names = list(names) if names is not None else [str(v + 1) for v in range(nverts)]

    def __repr__(self):
        return f"BimoduleCategory({self.nverts} vertices)"

    def paths(self, w) -> tuple:
        return paths(tuple(w), self.nverts)

    def dual_atom(self, a: Atom) -> Atom:
        return a.dualized()

    def src(self, f):
        return f.src

    def dst(self, f):
        return f.dst

    def identity(self, w):
        w = tuple(w)
        one = self.field.one()
        return BimMor(w, w, {(i, i): one for i in range(len(self.paths(w)))})

    def zero(self, w1, w2):
        return BimMor(tuple(w1), tuple(w2))

    def compose(self, g: BimMor, f: BimMor) -> BimMor:
        if g.src != f.dst:
            raise ValueError("cannot compose bimodule maps: words differ")
        by_row: dict = {}
        for (r, c), v in f.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict = {}
        for (r2, m), a in g.entries.items():
            for c, b in by_row.get(m, ()):
                key = (r2, c)
                acc[key] = acc[key] + a * b if key in acc else a * b
        return BimMor(f.src, g.dst, acc)

    def tensor(self, f: BimMor, g: BimMor) -> BimMor:
        nv = self.nverts
        src, dst = f.src + g.src, f.dst + g.dst
        ps1, ps2, pd1, pd2 = paths(f.src, nv), paths(g.src, nv), paths(f.dst, nv), paths(g.dst, nv)
        isrc, idst = _path_index(src, nv), _path_index(dst, nv)
        out = {}
        g_by_col: dict = {}
        for (r2, c2), b in g.entries.items():
            g_by_col.setdefault(ps2[c2][0], []).append((r2, c2, b))
        for (r1, c1), a in f.entries.items():
            p1, q1 = ps1[c1], pd1[r1]
            for r2, c2, b in g_by_col.get(p1[1], ()):
                p2, q2 = ps2[c2], pd2[r2]
                col = isrc[_join(p1, p2)]
                row = idst[_join(q1, q2)]
                out[(row, col)] = a * b
        return BimMor(src, dst, out)

    def add(self, f: BimMor, g: BimMor) -> BimMor:
        if f.src != g.src or f.dst != g.dst:
            raise ValueError("cannot add bimodule maps between different words")
        out = dict(f.entries)
        for key, c in g.entries.items():
            out[key] = out[key] + c if key in out else c
        return BimMor(f.src, f.dst, out)

    def scale(self, f: BimMor, c) -> BimMor:
        c = self.field.coerce(c)
        return BimMor(f.src, f.dst, {key: v * c for key, v in f.entries.items()})

    def ev(self, w):
        w = tuple(w)
        dw = self.dual_word(w)
        src = dw + w
        isrc = _path_index(src, self.nverts)
        one = self.field.one()
        out = {}
        for s, t, idx in self.paths(w):
            # the dual path runs backwards from t to s
            col = isrc[(t, t, tuple(reversed(idx)) + idx)]
            out[(t, col)] = one
        return BimMor(src, (), out)

    def coev(self, w):
        w = tuple(w)
        dst = w + self.dual_word(w)
        idst = _path_index(dst, self.nverts)
        one = self.field.one()
        out = {}
        for s, t, idx in self.paths(w):
            row = idst[(s, s, idx + tuple(reversed(idx)))]
            out[(row, s)] = one
        return BimMor((), dst, out)

    def pivotal(self, w):
        return self.identity(w)

    def pivotal_inv(self, w):
        return self.identity(w)

    def hom_basis(self, w1, w2) -> list:
        return [BimMor(tuple(w1), tuple(w2), {(r, c): self.field.one()}) for r, c in _hom_pairs(tuple(w1), tuple(w2), self.nverts)]

    def coordinates(self, f: BimMor) -> list[CycNum]:
        z = self.field.zero()
        return [f.entries.get(key, z) for key in _hom_pairs(f.src, f.dst, self.nverts)]

    def is_zero(self, f: BimMor) -> bool:
        return not f.entries

    def equal(self, f: BimMor, g: BimMor) -> bool:
        return f.src == g.src and f.dst == g.dst and f.entries == g.entries

    def unit_idempotents(self) -> list:
        one = self.field.one()
        return [BimMor((), (), {(v, v): one}) for v in range(self.nverts)]

    # whole-object matrices ------------------------------------------------

    def _flat(self, X) -> list[tuple[int, tuple]]:
        """(summand, path) for every basis vector of the direct sum X."""
        return [(a, p) for a, w in enumerate(X) for p in self.paths(w)]

    def to_matrix(self, f: Mor):
        """Dense matrix of a direct-sum morphism with rows/cols in _flat order."""
        rows, cols = self._flat(f.dst), self._flat(f.src)
        roff, coff = _offsets(self, f.dst), _offsets(self, f.src)
        M = linalg.zeros(len(rows), len(cols), self.field)
        for (r, c), blk in f.blocks.items():
            for (i, j), v in blk.entries.items():
                M[roff[r] + i][coff[c] + j] = v
        return M

    def from_matrix(self, X, Y, M) -> Mor:
        roff, coff = _offsets(self, Y), _offsets(self, X)
        blocks = {}
        for r, wy in enumerate(Y):
            ny = len(self.paths(wy))
            for c, wx in enumerate(X):
                nx = len(self.paths(wx))
                ent = {}
                for i in range(ny):
                    row = M[roff[r] + i]
                    for j in range(nx):
                        v = row[coff[c] + j]
                        if not v.is_zero():
                            ent[(i, j)] = v
                if ent:
                    blocks[(r, c)] = BimMor(wx, wy, ent)
        return Mor(X, Y, blocks)

    def invert_mor(self, f: Mor) -> Mor:
        """Invert endpoint block by endpoint block."""
        rows, cols = self._flat(f.dst), self._flat(f.src)
        M = self.to_matrix(f)
        F = self.field
        groups_r: dict = {}
        groups_c: dict = {}
        for i, (_a, p) in enumerate(rows):
            groups_r.setdefault(p[:2], []).append(i)
        for j, (_a, p) in enumerate(cols):
            groups_c.setdefault(p[:2], []).append(j)
        inv = linalg.zeros(len(cols), len(rows), F)
        defect = 0
        for key in set(groups_r) | set(groups_c):
            ri, ci = groups_r.get(key, []), groups_c.get(key, [])
            sub = [[M[i][j] for j in ci] for i in ri]
            rk = linalg.rank(sub, F) if ri and ci else 0
            if len(ri) != len(ci) or rk < len(ri):
                defect += max(len(ri), len(ci)) - rk
                continue
            sinv = linalg.inverse(sub, F)
            for a, j in enumerate(ci):
                for b, i in enumerate(ri):
                    inv[j][i] = sinv[a][b]
        if defect:
            raise NonInvertible("bimodule map is not bijective", defect)
        return self.from_matrix(f.dst, f.src, inv)


def _join(p1, p2):
    return (p1[0], p2[1], p1[2] + p2[2])


def _offsets(cat: BimoduleCategory, X) -> list[int]:
    out, acc = [], 0
    for w in X:
        out.append(acc)
        acc += len(cat.paths(w))
    return out


@lru_cache(maxsize=None)
def _hom_pairs(w1: tuple, w2: tuple, nverts: int) -> tuple:
    p1, p2 = paths(w1, nverts), paths(w2, nverts)
    by_end: dict = {}
    for j, p in enumerate(p1):
        by_end.setdefault(p[:2], []).append(j)
    out = []
    for i, q in enumerate(p2):
        for j in by_end.get(q[:2], ()):
            out.append((i, j))
    return tuple(out)


# --- building algebras from structure constants ----------------------------


def algebra_from_table(
    cat: BimoduleCategory,
    atom: Atom,
    products: Mapping[tuple[str, str], Mapping[str, object]],
    units: Mapping[int, str],
) -> AlgebraObject:
    """A one-atom algebra: ``products[(x, y)] = {z: coeff}`` and ``units[v]`` = label of e_v."""
    A = ((atom,),)
    AA = ((atom, atom),)
    F = cat.field
    nv = cat.nverts
    iAA = _path_index((atom, atom), nv)
    ent = {}
    for (x, y), res in products.items():
        i, j = atom.index(x), atom.index(y)
        s, _t = atom.elems[i][1], atom.elems[i][2]
        t2 = atom.elems[j][2]
        col = iAA[(s, t2, (i, j))]
        for z, c in res.items():
            ent[(atom.index(z), col)] = F.coerce(c)
    m = Mor(AA, A, {(0, 0): BimMor((atom, atom), (atom,), ent)})
    uent = {(atom.index(lbl), v): F.one() for v, lbl in units.items()}
    u = Mor(fr.unit_obj(), A, {(0, 0): BimMor((), (atom,), uent)})
    return AlgebraObject(A, m, u)


def twisted_unit(nverts: int, beta: Mapping[int, int] | list[int], name: str = "S_beta") -> Atom:
    """S with right action twisted by the vertex permutation beta.

    e_v x_v e_w is nonzero iff beta(e_w) = e_v, so x_v has endpoints (v, beta^{-1}(v)).
    """
    inv = {beta[v]: v for v in range(nverts)}
    return Atom(name, tuple((f"x{v + 1}", v, inv[v]) for v in range(nverts)))


# --- the two-vertex example ---------------------------------------------------


@dataclass
class ExampleFixture:
    cat: BimoduleCategory
    A_atom: Atom
    W_atom: Atom
    algebra: AlgebraObject
    n: Mor

    @property
    def W(self):
        return ((self.W_atom,),)


def example_fixture(field: CyclotomicField | None = None) -> ExampleFixture:
    """k Q/(ab, ba) for the quiver 1 <-> 2 with a: 1 -> 2 and b: 2 -> 1 (vertices 0, 1 internally).

    W has basis w12, w21 and n(a) = w12, n(b) = w21, n(e_i) = 0.
    """
    F = field or _field(1)
    cat = BimoduleCategory(F, 2)
    A = Atom("A", (("e1", 0, 0), ("e2", 1, 1), ("a", 0, 1), ("b", 1, 0)))
    W = Atom("W", (("w12", 0, 1), ("w21", 1, 0)))
    products = {
        ("e1", "e1"): {"e1": 1},
        ("e2", "e2"): {"e2": 1},
        ("e1", "a"): {"a": 1},
        ("a", "e2"): {"a": 1},
        ("e2", "b"): {"b": 1},
        ("b", "e1"): {"b": 1},
    }
    alg = algebra_from_table(cat, A, products, {0: "e1", 1: "e2"})
    n = Mor(alg.A, ((W,),), {(0, 0): BimMor((A,), (W,), {(W.index("w12"), A.index("a")): F.one(),
                                                         (W.index("w21"), A.index("b")): F.one()})})
    return ExampleFixture(cat, A, W, alg, n)


# --- beta-Frobenius extensions ----------------------------------------------


@dataclass
class BetaResult:
    holds: bool
    reason: str
    witness: Mor | None = None
    span_rank: int = 0
    target_dim: int = 0


def beta_frobenius_check(cat: BimoduleCategory, alg: AlgebraObject, beta, seed: int = 0, tries: int = 8) -> BetaResult:
    """Is there n: R -> S_beta with phi invertible?

    phi depends linearly on n, so the images of phi over a basis of
    Hom(R, S_beta) span everything phi can ever reach.  If that span misses
    part of the target no n works.  Otherwise seeded random combinations are
    tried; an invertible one is a certificate.
    """
    atom = twisted_unit(cat.nverts, beta)
    W = ((atom,),)
    basis = fr.hom_basis(cat, alg.A, W)
    phis = [fr.build_phi(cat, alg, W, n) for n in basis]
    target_dim = len(cat._flat(fr.tensor_obj(W, fr.dual_obj(cat, alg.A))))
    src_dim = len(cat._flat(alg.A))
    if not phis:
        return BetaResult(False, "no bimodule maps R -> S_beta", None, 0, target_dim)
    # column space spanned by all phi(n_i)
    cols = []
    for ph in phis:
        M = cat.to_matrix(ph)
        cols.extend([[M[i][j] for i in range(len(M))] for j in range(len(M[0]))])
    span = linalg.rank(cols, cat.field) if cols else 0
    if span < target_dim or src_dim != target_dim:
        return BetaResult(False, f"phi(n) can reach at most a {span}-dimensional subspace of a {target_dim}-dimensional target",
                          None, span, target_dim)
    rng = random.Random(seed)
    F = cat.field
    for attempt in range(tries):
        coeffs = [F.one()] * len(basis) if attempt == 0 else [F(rng.randint(1, 1000)) for _ in basis]
        n = None
        for c, b in zip(coeffs, basis):
            term = fr.scale(cat, b, c)
            n = term if n is None else fr.add(cat, n, term)
        try:
            fr.invert(cat, fr.build_phi(cat, alg, W, n))
        except NonInvertible:
            continue
        return BetaResult(True, "found n with invertible phi", n, span, target_dim)
    return BetaResult(False, f"no invertible phi among {tries} seeded combinations (not a proof)", None, span, target_dim)
