"""Jones-Wenzl projectors, projected objects F_i and the negligible quotient.

Objects of the idempotent completion are tensor words ``(i1, ..., ir)`` of
Jones-Wenzl labels.  A morphism between two such words is kept as a linear
combination of *chains*: lists of factors that are applied bottom to top, with
the source and target projectors implicit at both ends.  The absorbed
TL morphism ``P_dst o chain o P_src`` is only expanded when it is asked for,
and then by pushing a vector of diagrams through the chain from whichever end
has fewer strands.  Keeping things factored is what makes 15 and 20 strand
composites tractable: a fully expanded projector on 15 strands would have
millions of terms, while pushing a vector through one Jones-Wenzl block at a
time never exceeds the size of the largest intermediate hom space.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import flint

from . import linalg
from .diagrams import (
    PlanarDiagram,
    TLMorphism,
    basis,
    capcup,
    compose,
    id_diagram,
    identity,
    iterated_cap,
    iterated_cup,
    markov_trace,
    rotate180,
    tensor,
    trace_loops,
    compose_diagrams,
    factor_through,
    _delta_pow,
)
from .scalars import CycNum, LevelParams, make_params

__all__ = [
    "jw",
    "check_jw_annihilation",
    "partial_close",
    "ProjObject",
    "ProjMorphism",
    "iota",
    "pi",
    "eval_coev",
    "is_negligible",
    "quotient_equal",
    "scalar_on_simple",
    "QuotientHom",
    "quotient_hom",
    "reduced_diagrams",
    "NotScalar",
    "quotient_dim",
    "fusion_rule",
]


# --- projectors ----------------------------------------------------------


@lru_cache(maxsize=None)
def _jw_cached(k: int, i: int) -> TLMorphism:
    P = make_params(k)
    if i <= 1:
        return identity(P, i)
    prev = tensor(_jw_cached(k, i - 1), identity(P, 1))
    U = capcup(P, i - 2, i)
    c = P.qint(i - 1) / P.qint(i)
    return prev + (prev @ U @ prev).scale(c)


def jw(params: LevelParams, i: int) -> TLMorphism:
    """The Jones-Wenzl projector f_i on i strands (0 <= i <= k+1)."""
    if not 0 <= i <= params.k + 1:
        raise ValueError(f"f_{i} is not defined at level {params.k} (needs 0 <= i <= {params.k + 1})")
    return _jw_cached(params.k, i)


def check_jw_annihilation(params: LevelParams, n: int, i: int) -> bool:
    """True iff f_n o U_{i,n-2} = 0 and cap_{i,n-2} o f_n = 0."""
    if not 0 <= i <= n - 2 or n > params.k + 1:
        raise ValueError("need 0 <= i <= n-2 and n <= k+1")
    from .diagrams import cap, cup

    f = jw(params, n)
    return (f @ cup(params, i, n - 2)).is_zero() and (cap(params, i, n - 2) @ f).is_zero()


def partial_close(params: LevelParams, n: int, j: int) -> TLMorphism:
    """Close the last j strands of f_{n+j} with nested caps and cups."""
    if j < 1 or n < 0 or n + j > params.k + 1:
        raise ValueError("need j >= 1 and n + j <= k+1")
    f = tensor(jw(params, n + j), identity(params, j))
    return iterated_cap(params, n, j, n) @ f @ iterated_cup(params, n, j, n)


def partial_close_coefficient(params: LevelParams, n: int, j: int) -> CycNum:
    """(-1)^j [n+j+1] / [n+1]."""
    return (params.qint(n + j + 1) / params.qint(n + 1)) * (-1) ** j


# --- objects --------------------------------------------------------------


def _blocks(word: Sequence[int]) -> tuple[tuple[int, int], ...]:
    out, off = [], 0
    for a in word:
        if a >= 2:
            out.append((off, a))
        off += a
    return tuple(out)


class ProjObject:
    """A tensor word F_{i1} x ... x F_{ir}; the empty word is the unit."""

    __slots__ = ("params", "word", "strands", "blocks", "_hash")

    def __init__(self, params: LevelParams, word: Iterable[int]):
        word = tuple(int(a) for a in word)
        if any(a < 0 or a > params.k + 1 for a in word):
            raise ValueError(f"labels must lie in 0..{params.k + 1}: {word}")
        self.params = params
        self.word = word
        self.strands = sum(word)
        self.blocks = _blocks(word)
        self._hash = hash((params.k, word))

    def __eq__(self, other):
        return isinstance(other, ProjObject) and other.params.k == self.params.k and other.word == self.word

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.word:
            return "F()"
        return "F" + "x".join(str(a) for a in self.word)

    @property
    def projector(self) -> TLMorphism:
        out = identity(self.params, 0)
        for a in self.word:
            out = tensor(out, jw(self.params, a))
        return out

    def tensor(self, other: "ProjObject") -> "ProjObject":
        return ProjObject(self.params, self.word + other.word)

    def dual(self) -> "ProjObject":
        return ProjObject(self.params, tuple(reversed(self.word)))

    def dimension(self) -> CycNum:
        """Quantum dimension: the trace of the projector."""
        P = self.params
        out = P.field.one()
        for a in self.word:
            out = out * P.qint(a + 1) * (-1) ** a
        return out


# --- factors of a chain --------------------------------------------------


class Local:
    """``id_offset x core x id_rest`` acting on ``width`` strands.

    ``src_blocks``/``dst_blocks`` (relative to the core) record projector
    blocks the core is known to absorb, so that redundant projector
    applications next to it can be skipped.
    """

    __slots__ = ("offset", "core", "width", "src_blocks", "dst_blocks", "_full", "_rot")

    def __init__(self, offset, core: TLMorphism, width, src_blocks=(), dst_blocks=()):
        self.offset = offset
        self.core = core
        self.width = width
        self.src_blocks = tuple(src_blocks)
        self.dst_blocks = tuple(dst_blocks)
        self._full = None
        self._rot = None

    @property
    def out_width(self):
        return self.width - self.core.src + self.core.dst

    def full(self) -> TLMorphism:
        if self._full is None:
            P = self.core.params
            left = identity(P, self.offset)
            right = identity(P, self.width - self.offset - self.core.src)
            self._full = tensor(tensor(left, self.core), right)
        return self._full

    def shifted(self, left: int, right: int) -> "Local":
        if left == 0 and right == 0:
            return self
        return Local(self.offset + left, self.core, self.width + left + right, self.src_blocks, self.dst_blocks)

    def rotated(self) -> "Local":
        if self._rot is None:
            c = self.core
            self._rot = Local(
                self.out_width - self.offset - c.dst,
                rotate180(c),
                self.out_width,
                _rot_blocks(self.dst_blocks, c.dst),
                _rot_blocks(self.src_blocks, c.src),
            )
            self._rot._rot = self
        return self._rot


class Proj:
    """Apply the Jones-Wenzl projector on each listed block (offset, size)."""

    __slots__ = ("blocks", "width")

    def __init__(self, blocks, width):
        self.blocks = tuple(blocks)
        self.width = width

    @property
    def out_width(self):
        return self.width

    def shifted(self, left: int, right: int) -> "Proj":
        if left == 0 and right == 0:
            return self
        return Proj(tuple((o + left, a) for o, a in self.blocks), self.width + left + right)

    def rotated(self) -> "Proj":
        return Proj(_rot_blocks(self.blocks, self.width), self.width)


def _rot_blocks(blocks, width):
    return tuple(sorted((width - o - a, a) for o, a in blocks))


@lru_cache(maxsize=None)
def _embedded_jw(k: int, a: int, offset: int, width: int) -> TLMorphism:
    P = make_params(k)
    return tensor(tensor(identity(P, offset), jw(P, a)), identity(P, width - offset - a))


def _has_top_turnback(d: PlanarDiagram, o: int, a: int) -> bool:
    m = d.m
    lo, hi = m + o, m + o + a
    p = d.pairs
    for x in range(lo, hi):
        y = p[x]
        if lo <= y < hi:
            return True
    return False


def _has_bottom_turnback(d: PlanarDiagram, o: int, a: int) -> bool:
    p = d.pairs
    for x in range(o, o + a):
        y = p[x]
        if o <= y < o + a:
            return True
    return False


def _propagate(params: LevelParams, start_width: int, factors: Sequence) -> TLMorphism:
    """Apply the factors bottom to top to the identity on ``start_width`` strands."""
    v = identity(params, start_width)
    projected: set = set()
    k = params.k
    nf = len(factors)
    for idx, fac in enumerate(factors):
        if isinstance(fac, Proj):
            nxt = factors[idx + 1] if idx + 1 < nf else None
            absorbed = set()
            if isinstance(nxt, Local):
                absorbed = {(o + nxt.offset, a) for o, a in nxt.src_blocks}
            for o, a in fac.blocks:
                if (o, a) in projected:
                    continue
                if (o, a) not in absorbed:
                    terms = {d: c for d, c in v.terms.items() if not _has_top_turnback(d, o, a)}
                    v = TLMorphism._raw(params, v.src, v.dst, terms)
                    v = compose(_embedded_jw(k, a, o, fac.width), v)
                projected.add((o, a))
        else:
            v = compose(fac.full(), v)
            lo, hi = fac.offset, fac.offset + fac.core.src
            shift = fac.core.dst - fac.core.src
            new = set()
            for o, a in projected:
                if o + a <= lo:
                    new.add((o, a))
                elif o >= hi:
                    new.add((o + shift, a))
            for o, a in fac.dst_blocks:
                new.add((o + fac.offset, a))
            projected = new
    return v


def _rotate_factor(f):
    return f.rotated()


def evaluate_chain(params: LevelParams, src: "ProjObject", dst: "ProjObject", factors: Sequence) -> TLMorphism:
    """The absorbed TL morphism P_dst o factors o P_src."""
    full = [Proj(src.blocks, src.strands), *factors, Proj(dst.blocks, dst.strands)]
    if src.strands <= dst.strands:
        return _propagate(params, src.strands, full)
    rot = [f.rotated() for f in reversed(full)]
    return rotate180(_propagate(params, dst.strands, rot))


# --- morphisms -------------------------------------------------------------


class ProjMorphism:
    """A morphism between projected objects.

    Stored as ``chains``: a tuple of (coefficient, factors) pairs.  ``map``
    gives the absorbed TL morphism ``P_dst o h o P_src``.
    """

    __slots__ = ("src", "dst", "chains", "_map", "_parts")

    def __init__(self, src: ProjObject, dst: ProjObject, chains=(), map: TLMorphism | None = None, parts=None):
        self.src = src
        self.dst = dst
        self.chains = tuple(chains)
        self._map = map
        # summands whose maps (once cached) give this map; avoids re-evaluating chains
        self._parts = parts

    @property
    def params(self) -> LevelParams:
        return self.src.params

    # constructors
    @classmethod
    def from_tl(cls, src: ProjObject, dst: ProjObject, h: TLMorphism, absorbed: bool = False) -> "ProjMorphism":
        """Sandwich ``h`` between the projectors; ``absorbed`` asserts h already equals P h P."""
        if h.src != src.strands or h.dst != dst.strands:
            raise ValueError(f"TL morphism {h.src}->{h.dst} does not fit {src}->{dst}")
        P = src.params
        if absorbed:
            fac = Local(0, h, src.strands, src.blocks, dst.blocks)
            return cls(src, dst, ((P.field._one, (fac,)),), map=h)
        return cls(src, dst, ((P.field._one, (Local(0, h, src.strands),)),))

    @classmethod
    def identity(cls, X: ProjObject) -> "ProjMorphism":
        return cls(X, X, ((X.params.field._one, ()),))

    @classmethod
    def zero(cls, X: ProjObject, Y: ProjObject) -> "ProjMorphism":
        return cls(X, Y, (), map=TLMorphism.zero(X.params, X.strands, Y.strands))

    @property
    def map(self) -> TLMorphism:
        if self._map is None and self._parts is not None:
            out = self._parts[0].map
            for part in self._parts[1:]:
                out = out + part.map
            self._map = out
        if self._map is None:
            P = self.params
            F = P.field
            out = TLMorphism.zero(P, self.src.strands, self.dst.strands)
            for c, factors in self.chains:
                m = evaluate_chain(P, self.src, self.dst, factors)
                out = out + (m if c == F._one else m.scale(CycNum(F, c)))
            self._map = out
        return self._map

    def _compose_chains(self):
        if self._map is not None:
            return ((self.params.field._one, (Local(0, self._map, self.src.strands, self.src.blocks, self.dst.blocks),)),)
        return self.chains

    def is_zero_exact(self) -> bool:
        return self.map.is_zero()

    def __repr__(self):
        return f"ProjMorphism({self.src}->{self.dst}, {len(self.chains)} chain(s))"

    # linear structure
    def _check(self, other):
        if self.src != other.src or self.dst != other.dst:
            raise ValueError(f"shape mismatch {self.src}->{self.dst} vs {other.src}->{other.dst}")

    def __add__(self, other):
        if not isinstance(other, ProjMorphism):
            return NotImplemented
        self._check(other)
        m = self._map + other._map if self._map is not None and other._map is not None else None
        return ProjMorphism(self.src, self.dst, self.chains + other.chains, map=m, parts=(self, other))

    def scale(self, s) -> "ProjMorphism":
        F = self.params.field
        sp = s.p if isinstance(s, CycNum) else F.coerce(s).p
        chains = tuple((F.reduce(c * sp), fs) for c, fs in self.chains)
        m = self._map.scale(CycNum(F, sp)) if self._map is not None else None
        parts = tuple(p.scale(s) for p in self._parts) if self._parts is not None and m is None else None
        return ProjMorphism(self.src, self.dst, chains, map=m, parts=parts)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    # categorical structure
    def compose(self, f: "ProjMorphism") -> "ProjMorphism":
        """``self`` after ``f``."""
        g = self
        if g.src != f.dst:
            raise ValueError(f"cannot compose {g.src}->{g.dst} after {f.src}->{f.dst}")
        F = self.params.field
        Y = f.dst
        mid = (Proj(Y.blocks, Y.strands),) if Y.blocks else ()
        chains = []
        for c1, fa in f._compose_chains():
            for c2, ga in g._compose_chains():
                chains.append((F.reduce(c1 * c2), fa + mid + ga))
        return ProjMorphism(f.src, g.dst, chains)

    def __matmul__(self, f):
        return self.compose(f)

    def tensor(self, g: "ProjMorphism") -> "ProjMorphism":
        f = self
        F = self.params.field
        X1, Y1, X2, Y2 = f.src, f.dst, g.src, g.dst
        mid_obj = X1.tensor(Y2)
        mid = (Proj(mid_obj.blocks, mid_obj.strands),) if mid_obj.blocks else ()
        chains = []
        for c1, fa in f._compose_chains():
            for c2, ga in g._compose_chains():
                lower = tuple(x.shifted(X1.strands, 0) for x in ga)
                upper = tuple(x.shifted(0, Y2.strands) for x in fa)
                chains.append((F.reduce(c1 * c2), lower + mid + upper))
        return ProjMorphism(X1.tensor(X2), Y1.tensor(Y2), chains)

    def dual(self) -> "ProjMorphism":
        """Half-turn rotation: the dual morphism dst* -> src*."""
        chains = tuple((c, tuple(x.rotated() for x in reversed(fs))) for c, fs in self.chains)
        m = rotate180(self._map) if self._map is not None else None
        return ProjMorphism(self.dst.dual(), self.src.dual(), chains, map=m)

    def trace(self) -> CycNum:
        if self.src != self.dst:
            raise ValueError("trace needs an endomorphism")
        return markov_trace(self.map)

    def exact_equal(self, other: "ProjMorphism") -> bool:
        """Equality in TL itself (before the quotient)."""
        self._check(other)
        return self.map == other.map


def pm_compose(*ms: ProjMorphism) -> ProjMorphism:
    """pm_compose(a, b, c) = a o b o c."""
    out = ms[-1]
    for m in reversed(ms[:-1]):
        out = m.compose(out)
    return out


def pm_tensor(*ms: ProjMorphism) -> ProjMorphism:
    out = ms[0]
    for m in ms[1:]:
        out = out.tensor(m)
    return out


def obj(params: LevelParams, *word: int) -> ProjObject:
    return ProjObject(params, word)


def pm_id(params: LevelParams, *word: int) -> ProjMorphism:
    return ProjMorphism.identity(ProjObject(params, word))


def iota(params: LevelParams, i: int, j: int) -> ProjMorphism:
    """F_{i+j} -> F_i x F_j; as a TL morphism this is f_{i+j}."""
    if i < 0 or j < 0 or i + j > params.k + 1:
        raise ValueError("need i + j <= k+1")
    X, Y = ProjObject(params, (i + j,)), ProjObject(params, (i, j))
    return ProjMorphism(X, Y, ((params.field._one, ()),))


def pi(params: LevelParams, i: int, j: int) -> ProjMorphism:
    """F_i x F_j -> F_{i+j}; as a TL morphism this is f_{i+j}."""
    if i < 0 or j < 0 or i + j > params.k + 1:
        raise ValueError("need i + j <= k+1")
    X, Y = ProjObject(params, (i, j)), ProjObject(params, (i + j,))
    return ProjMorphism(X, Y, ((params.field._one, ()),))


def eval_coev(params: LevelParams, i: int) -> tuple[ProjMorphism, ProjMorphism]:
    """Evaluation F_i x F_i -> 1 and coevaluation 1 -> F_i x F_i (nested caps/cups)."""
    if not 0 <= i <= params.k + 1:
        raise ValueError("label out of range")
    one = ProjObject(params, ())
    XX = ProjObject(params, (i, i))
    e = ProjMorphism.from_tl(XX, one, iterated_cap(params, 0, i, 0))
    c = ProjMorphism.from_tl(one, XX, iterated_cup(params, 0, i, 0))
    return e, c


# --- the negligible quotient ---------------------------------------------


@lru_cache(maxsize=None)
def _reduced(src_word: tuple, dst_word: tuple) -> tuple[PlanarDiagram, ...]:
    m, n = sum(src_word), sum(dst_word)
    sb, db = _blocks(src_word), _blocks(dst_word)
    out = []
    for d in basis(m, n):
        if any(_has_bottom_turnback(d, o, a) for o, a in sb):
            continue
        if any(_has_top_turnback(d, o, a) for o, a in db):
            continue
        out.append(d)
    return tuple(out)


def reduced_diagrams(X: ProjObject, Y: ProjObject) -> tuple[PlanarDiagram, ...]:
    """Diagrams X -> Y with no turnback inside a single projector block.

    Every other diagram is killed by the projectors, so these span Hom(X, Y).
    """
    return _reduced(X.word, Y.word)


def _pair_trace(params: LevelParams, h: PlanarDiagram, f: TLMorphism) -> CycNum:
    """markov_trace(h o f) for a single diagram h."""
    F = params.field
    acc = F._zero
    for d, c in f.terms.items():
        comp, loops = compose_diagrams(h, d)
        acc = acc + c * _delta_pow(params, loops + trace_loops(comp))
    return CycNum(F, F.reduce(acc))


def _is_identity(d: PlanarDiagram) -> bool:
    return d.m == d.n and all(d.pairs[i] == d.m + i for i in range(d.m))


def _diagram_factor(params: LevelParams, d: PlanarDiagram) -> list:
    if _is_identity(d):
        return []
    return [Local(0, TLMorphism.from_diagram(params, d), d.m)]


def _width_in(fac) -> int:
    return fac.width


def cyclic_trace(params: LevelParams, factors: Sequence) -> CycNum:
    """markov_trace of the composite of ``factors`` (bottom to top, closing up).

    The trace is invariant under cycling the factors, so propagation starts
    at the narrowest cut.
    """
    if not factors:
        raise ValueError("empty cycle")
    widths = [_width_in(f) for f in factors]
    j = min(range(len(factors)), key=lambda i: (widths[i], i))
    order = list(factors[j:]) + list(factors[:j])
    return markov_trace(_propagate(params, widths[j], order))


def pair(h: PlanarDiagram, f: ProjMorphism) -> CycNum:
    """markov_trace(h o f) for a diagram h: f.dst -> f.src.

    h is split through its through strands as U o C and the trace is taken
    around the cycle C, f, U, started at its narrowest point.
    """
    P = f.params
    X, Y = f.src, f.dst
    C, U = factor_through(h)
    F = P.field
    total = F.zero()
    cu, cc = _diagram_factor(P, U), _diagram_factor(P, C)
    px = [Proj(X.blocks, X.strands)] if X.blocks else []
    py = [Proj(Y.blocks, Y.strands)] if Y.blocks else []
    if f._map is not None and len(f.chains) != 1:
        chains = f._compose_chains()
    else:
        chains = f.chains
    for c, factors in chains:
        cyc = [*cu, *px, *factors, *py, *cc]
        tr = cyclic_trace(P, cyc) if cyc else P.delta ** X.strands
        total = total + tr * CycNum(F, c)
    return total


def is_negligible(params: LevelParams, f: ProjMorphism) -> bool:
    """Whether f pairs to zero under the trace with every morphism dst -> src."""
    if f._map is not None and f._map.is_zero():
        return True
    if not f.chains and f._map is None and f._parts is None:
        return True
    for h in reduced_diagrams(f.dst, f.src):
        if not pair(h, f).is_zero():
            return False
    return True


def quotient_equal(f: ProjMorphism, g: ProjMorphism) -> bool:
    f._check(g)
    return is_negligible(f.params, f - g)


class NotScalar(ArithmeticError):
    """Raised when a morphism is not a scalar multiple of the identity in the quotient."""


def scalar_on_simple(params: LevelParams, f: ProjMorphism) -> CycNum:
    """lambda with f = lambda * id in the quotient, checked by negligibility."""
    X = f.src
    if X != f.dst:
        raise ValueError("need an endomorphism")
    dim = X.dimension()
    if dim.is_zero():
        raise NotScalar(f"{X} has zero quantum dimension (it is zero in the quotient)")
    lam = f.trace() / dim
    if not is_negligible(params, f - ProjMorphism.identity(X).scale(lam)):
        raise NotScalar(f"endomorphism of {X} is not a multiple of the identity")
    return lam


class QuotientHom:
    """A basis of Hom(X, Y) in the quotient, found from the trace pairing.

    Spanning set: projected reduced diagrams X -> Y.  Test functionals:
    tr(h o -) for reduced diagrams h: Y -> X.  The Gram matrix has rank equal
    to the dimension of the quotient hom space.
    """

    def __init__(self, X: ProjObject, Y: ProjObject):
        self.X, self.Y = X, Y
        P = X.params
        self.params = P
        F = P.field
        span = reduced_diagrams(X, Y)
        tests = reduced_diagrams(Y, X)
        # Write d = U o C through its t through strands.  Then
        # tr(h P_Y d P_X) = tr((C_h P_Y U_d) o (C_d P_X U_h)), and both factors
        # live between small strand counts.
        span_f = [factor_through(d) for d in span]
        test_f = [factor_through(h) for h in tests]
        px = [Proj(X.blocks, X.strands)] if X.blocks else []
        py = [Proj(Y.blocks, Y.strands)] if Y.blocks else []
        G = []
        for Ch, Uh in test_f:
            row = []
            for Cd, Ud in span_f:
                cyc = [*_diagram_factor(P, Ud), *py, *_diagram_factor(P, Ch),
                       *_diagram_factor(P, Uh), *px, *_diagram_factor(P, Cd)]
                row.append(cyclic_trace(P, cyc) if cyc else P.delta ** X.strands)
            G.append(row)
        rows, cols = linalg.independent_rows_cols(G, F) if G and span else ([], [])
        self.gram = G
        self.dim = len(cols)
        self.test_diagrams = [tests[r] for r in rows]
        self.basis = [ProjMorphism.from_tl(X, Y, TLMorphism.from_diagram(P, span[c])) for c in cols]
        sub = [[G[r][c] for c in cols] for r in rows]
        self._inv = linalg.inverse(sub, F) if self.dim else []

    def coordinates(self, f: ProjMorphism) -> list[CycNum]:
        if f.src != self.X or f.dst != self.Y:
            raise ValueError("morphism is not in this hom space")
        if not self.dim:
            return []
        rhs = [pair(h, f) for h in self.test_diagrams]
        F = self.params.field
        return [sum((a * b for a, b in zip(row, rhs)), F.zero()) for row in self._inv]

    def element(self, coords: Sequence[CycNum]) -> ProjMorphism:
        out = ProjMorphism.zero(self.X, self.Y)
        for c, b in zip(coords, self.basis):
            if not c.is_zero():
                out = out + b.scale(c)
        return out


@lru_cache(maxsize=None)
def _quotient_hom_cached(k: int, src: tuple, dst: tuple) -> QuotientHom:
    P = make_params(k)
    return QuotientHom(ProjObject(P, src), ProjObject(P, dst))


def quotient_hom(X: ProjObject, Y: ProjObject) -> QuotientHom:
    return _quotient_hom_cached(X.params.k, X.word, Y.word)


def quotient_dim(X: ProjObject, Y: ProjObject) -> int:
    return quotient_hom(X, Y).dim


def fusion_rule(k: int, i: int, j: int) -> list[int]:
    """Labels l with F_l a summand of F_i x F_j at level k (each with multiplicity one)."""
    return [l for l in range(abs(i - j), min(i + j, 2 * k - i - j) + 1, 2)]
