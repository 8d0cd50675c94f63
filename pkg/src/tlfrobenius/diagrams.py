"""Planar (Temperley-Lieb) diagrams and their linear combinations.

A diagram ``m -> n`` has ``m`` bottom points numbered ``0..m-1`` left to right
and ``n`` top points numbered ``m..m+n-1`` left to right.  It is stored as the
involution ``pairs`` with ``pairs[x]`` the partner of ``x``.  Closed loops are
never stored; composition turns them into powers of ``delta``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import flint

from .scalars import CycNum, LevelParams

__all__ = [
    "PlanarDiagram",
    "TLMorphism",
    "compose_diagrams",
    "tensor_diagrams",
    "rotate_diagram",
    "trace_loops",
    "factor_through",
    "basis",
    "catalan",
    "id_diagram",
    "cup_diagram",
    "cap_diagram",
    "capcup_diagram",
    "identity",
    "cup",
    "cap",
    "capcup",
    "iterated_cup",
    "iterated_cap",
    "compose",
    "tensor",
    "rotate180",
    "markov_trace",
]


_INTERN: dict = {}


class PlanarDiagram:
    """A non-crossing perfect matching between ``m`` bottom and ``n`` top points.

    Instances are interned: two equal diagrams are the same object, so hashing
    and equality are by identity (this is the hottest path in the package).
    """

    __slots__ = ("m", "n", "pairs", "__weakref__")

    def __new__(cls, m: int, n: int, pairs: tuple[int, ...], check: bool = True):
        pairs = tuple(pairs)
        key = (m, n, pairs)
        obj = _INTERN.get(key)
        if obj is not None:
            return obj
        obj = object.__new__(cls)
        obj.m = m
        obj.n = n
        obj.pairs = pairs
        if check:
            obj._validate()
        _INTERN[key] = obj
        return obj

    def __reduce__(self):
        return (PlanarDiagram, (self.m, self.n, self.pairs, False))

    def _validate(self):
        m, n, p = self.m, self.n, self.pairs
        if m < 0 or n < 0 or len(p) != m + n:
            raise ValueError("pairing has the wrong number of points")
        for x, y in enumerate(p):
            if not 0 <= y < m + n or y == x or p[y] != x:
                raise ValueError(f"pairing is not a fixed-point-free involution: {p}")
        if not is_planar(m, n, p):
            raise ValueError(f"pairing {p} has crossings")

    @property
    def src(self) -> int:
        return self.m

    @property
    def dst(self) -> int:
        return self.n

    def __lt__(self, other: "PlanarDiagram"):
        return (self.m, self.n, self.pairs) < (other.m, other.n, other.pairs)

    def arcs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in enumerate(self.pairs) if x < y]

    def through_strands(self) -> int:
        m = self.m
        return sum(1 for x in range(m) if self.pairs[x] >= m)

    def __repr__(self):
        return f"PlanarDiagram({self.m}->{self.n}: {self.notation()})"

    def notation(self) -> str:
        """Compact text form; ``b2`` is bottom point 2, ``t0`` top point 0."""
        m = self.m

        def name(x):
            return f"b{x}" if x < m else f"t{x - m}"

        return " ".join(f"{name(x)}-{name(y)}" for x, y in self.arcs()) or "empty"


def _cyclic_positions(m: int, n: int) -> list[int]:
    # position around the boundary: bottom left-to-right, then top right-to-left
    pos = list(range(m + n))
    for j in range(n):
        pos[m + j] = m + (n - 1 - j)
    return pos


def is_planar(m: int, n: int, pairs: tuple[int, ...]) -> bool:
    pos = _cyclic_positions(m, n)
    order = [0] * (m + n)
    for x in range(m + n):
        order[pos[x]] = x
    stack = []
    for c in range(m + n):
        x = order[c]
        partner = pos[pairs[x]]
        if partner > c:
            stack.append(c)
        else:
            if not stack or stack[-1] != partner:
                return False
            stack.pop()
    return not stack


@lru_cache(maxsize=None)
def _line_matchings(L: int) -> tuple[tuple[int, ...], ...]:
    """All non-crossing perfect matchings of 0..L-1 on a line, as involutions."""
    if L % 2:
        return ()
    if L == 0:
        return ((),)
    out = []
    for r in range(1, L, 2):
        for inner in _line_matchings(r - 1):
            for outer in _line_matchings(L - r - 1):
                p = [0] * L
                p[0], p[r] = r, 0
                for a, b in enumerate(inner):
                    p[1 + a] = 1 + b
                for a, b in enumerate(outer):
                    p[r + 1 + a] = r + 1 + b
                out.append(tuple(p))
    return tuple(out)


@lru_cache(maxsize=None)
def basis(m: int, n: int) -> tuple[PlanarDiagram, ...]:
    """All diagrams m -> n, sorted lexicographically by their involution."""
    if (m + n) % 2:
        return ()
    pos = _cyclic_positions(m, n)
    order = [0] * (m + n)
    for x in range(m + n):
        order[pos[x]] = x
    result = []
    for lm in _line_matchings(m + n):
        p = [0] * (m + n)
        for c, d in enumerate(lm):
            p[order[c]] = order[d]
        result.append(PlanarDiagram(m, n, tuple(p), check=False))
    result.sort()
    return tuple(result)


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


# --- elementary diagrams -------------------------------------------------


@lru_cache(maxsize=None)
def id_diagram(n: int) -> PlanarDiagram:
    return PlanarDiagram(n, n, tuple(list(range(n, 2 * n)) + list(range(n))), check=False)


@lru_cache(maxsize=None)
def cup_diagram(i: int, n: int) -> PlanarDiagram:
    """n -> n+2 with a cup joining top points i, i+1."""
    if not 0 <= i <= n:
        raise ValueError(f"cup position {i} out of range for {n} strands")
    m, top = n, n + 2
    p = [0] * (m + top)
    for s in range(n):
        t_pos = s if s < i else s + 2
        p[s] = m + t_pos
        p[m + t_pos] = s
    p[m + i], p[m + i + 1] = m + i + 1, m + i
    return PlanarDiagram(m, top, tuple(p), check=False)


@lru_cache(maxsize=None)
def cap_diagram(i: int, n: int) -> PlanarDiagram:
    """n+2 -> n with a cap joining bottom points i, i+1."""
    if not 0 <= i <= n:
        raise ValueError(f"cap position {i} out of range for {n} strands")
    return rotate_diagram(cup_diagram(n - i, n))


@lru_cache(maxsize=None)
def capcup_diagram(i: int, n: int) -> PlanarDiagram:
    """The generator U_i on n strands (cap then cup on strands i, i+1)."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"cap-cup position {i} out of range for {n} strands")
    d, loops = compose_diagrams(cup_diagram(i, n - 2), cap_diagram(i, n - 2))
    return d


# --- structural operations on diagrams -----------------------------------


@lru_cache(maxsize=1 << 18)
def compose_diagrams(g: PlanarDiagram, f: PlanarDiagram) -> tuple[PlanarDiagram, int]:
    """Stack ``g`` on top of ``f``; returns the diagram and the number of closed loops."""
    m, n = f.m, f.n
    if g.m != n:
        raise ValueError(f"cannot compose {g.m}->{g.n} after {m}->{n}")
    p = g.n
    fp, gp = f.pairs, g.pairs
    res = [0] * (m + p)
    seen = [False] * n

    for start in range(m + p):
        if start < m:
            y = fp[start]
            in_f = True
        else:
            y = gp[n + start - m]
            in_f = False
        while True:
            if in_f:
                if y < m:
                    res[start] = y
                    break
                j = y - m
                seen[j] = True
                y = gp[j]
                in_f = False
            else:
                if y >= n:
                    res[start] = m + y - n
                    break
                seen[y] = True
                y = fp[m + y]
                in_f = True

    loops = 0
    for j0 in range(n):
        if seen[j0]:
            continue
        loops += 1
        j = j0
        while True:
            seen[j] = True
            # walk: middle point j, go through f then through g
            y = fp[m + j] - m
            seen[y] = True
            j = gp[y]
            if j == j0:
                break
    return PlanarDiagram(m, p, tuple(res), check=False), loops


@lru_cache(maxsize=1 << 18)
def tensor_diagrams(a: PlanarDiagram, b: PlanarDiagram) -> PlanarDiagram:
    m1, n1, m2, n2 = a.m, a.n, b.m, b.n
    M = m1 + m2

    def ma(x):
        return x if x < m1 else M + (x - m1)

    def mb(x):
        return m1 + x if x < m2 else M + n1 + (x - m2)

    p = [0] * (M + n1 + n2)
    for x, y in enumerate(a.pairs):
        p[ma(x)] = ma(y)
    for x, y in enumerate(b.pairs):
        p[mb(x)] = mb(y)
    return PlanarDiagram(M, n1 + n2, tuple(p), check=False)


@lru_cache(maxsize=1 << 18)
def rotate_diagram(d: PlanarDiagram) -> PlanarDiagram:
    """Rotate by a half turn: m -> n becomes n -> m."""
    m, n = d.m, d.n

    def r(x):
        # bottom i -> top position m-1-i ; top j -> bottom position n-1-j
        return n + (m - 1 - x) if x < m else n - 1 - (x - m)

    p = [0] * (m + n)
    for x, y in enumerate(d.pairs):
        p[r(x)] = r(y)
    return PlanarDiagram(n, m, tuple(p), check=False)


@lru_cache(maxsize=1 << 16)
def factor_through(d: PlanarDiagram) -> tuple[PlanarDiagram, PlanarDiagram]:
    """Split d: m -> n as U o C with C: m -> t all caps, U: t -> n all cups.

    t is the number of through strands; ``compose_diagrams(U, C)`` gives back d.
    """
    m, n, p = d.m, d.n, d.pairs
    through = [x for x in range(m) if p[x] >= m]
    t = len(through)
    cp = [0] * (m + t)
    for x in range(m):
        y = p[x]
        if y < m:
            cp[x] = y
    for r, x in enumerate(through):
        cp[x] = m + r
        cp[m + r] = x
    up = [0] * (t + n)
    tops = sorted(p[x] - m for x in through)
    for j in range(n):
        y = p[m + j]
        if y >= m:
            up[t + j] = t + (y - m)
    for r, j in enumerate(tops):
        up[r] = t + j
        up[t + j] = r
    return PlanarDiagram(m, t, tuple(cp), check=False), PlanarDiagram(t, n, tuple(up), check=False)


def trace_loops(d: PlanarDiagram) -> int:
    """Loops produced by closing top strand j onto bottom strand j for every j."""
    n = d.n
    if d.m != n:
        raise ValueError("trace needs an endomorphism")
    seen = [False] * (2 * n)
    loops = 0
    for x0 in range(2 * n):
        if seen[x0]:
            continue
        loops += 1
        x = x0
        while not seen[x]:
            seen[x] = True
            y = d.pairs[x]
            seen[y] = True
            x = y + n if y < n else y - n  # closure arc
    return loops


# --- linear combinations -------------------------------------------------


@lru_cache(maxsize=None)
def _delta_powers(k: int) -> list:
    from .scalars import make_params

    P = make_params(k)
    return [P.field._one]


def _delta_pow(params: LevelParams, e: int) -> flint.fmpq_poly:
    pw = _delta_powers(params.k)
    d = params.delta.p
    while len(pw) <= e:
        pw.append(params.field.reduce(pw[-1] * d))
    return pw[e]


class TLMorphism:
    """A finite linear combination of diagrams ``src -> dst`` over Q(t).

    Coefficients are stored as reduced flint polynomials; zero terms are dropped.
    """

    __slots__ = ("params", "src", "dst", "terms")

    def __init__(self, params: LevelParams, src: int, dst: int, terms: Mapping | None = None):
        self.params = params
        self.src = src
        self.dst = dst
        clean = {}
        if terms:
            F = params.field
            for d, c in terms.items():
                if d.m != src or d.n != dst:
                    raise ValueError(f"diagram {d} does not have shape {src}->{dst}")
                if isinstance(c, CycNum):
                    c = c.p
                elif not isinstance(c, flint.fmpq_poly):
                    c = F.coerce(c).p
                if not c.is_zero():
                    clean[d] = c
        self.terms = clean

    @classmethod
    def _raw(cls, params, src, dst, terms):
        # terms already reduced and nonzero
        obj = cls.__new__(cls)
        obj.params = params
        obj.src = src
        obj.dst = dst
        obj.terms = terms
        return obj

    @classmethod
    def from_diagram(cls, params: LevelParams, d: PlanarDiagram, coeff=1) -> "TLMorphism":
        return cls(params, d.m, d.n, {d: coeff})

    @classmethod
    def zero(cls, params: LevelParams, src: int, dst: int) -> "TLMorphism":
        return cls._raw(params, src, dst, {})

    # -- inspection
    def coefficient(self, d: PlanarDiagram) -> CycNum:
        c = self.terms.get(d)
        return CycNum(self.params.field, c if c is not None else self.params.field._zero)

    def items(self) -> Iterator[tuple[PlanarDiagram, CycNum]]:
        F = self.params.field
        for d in sorted(self.terms):
            yield d, CycNum(F, self.terms[d])

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TLMorphism):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and self.params.k == other.params.k
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("TLMorphism is not hashable")

    def __repr__(self):
        if not self.terms:
            return f"TLMorphism({self.src}->{self.dst}: 0)"
        body = " + ".join(f"({c})*[{d.notation()}]" for d, c in self.items())
        return f"TLMorphism({self.src}->{self.dst}: {body})"

    def to_json(self) -> list:
        return [[c.to_json(), list(d.pairs)] for d, c in self.items()]

    # -- vector space structure
    def _check_same(self, other: "TLMorphism"):
        if self.src != other.src or self.dst != other.dst:
            raise ValueError(
                f"shape mismatch: {self.src}->{self.dst} vs {other.src}->{other.dst}"
            )

    def __add__(self, other):
        if not isinstance(other, TLMorphism):
            return NotImplemented
        self._check_same(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            s = out.get(d)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(d, None)
            else:
                out[d] = s
        return TLMorphism._raw(self.params, self.src, self.dst, out)

    def __neg__(self):
        return TLMorphism._raw(self.params, self.src, self.dst, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TLMorphism):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> "TLMorphism":
        F = self.params.field
        sp = s.p if isinstance(s, CycNum) else F.coerce(s).p
        if sp.is_zero():
            return TLMorphism.zero(self.params, self.src, self.dst)
        return TLMorphism._raw(
            self.params, self.src, self.dst, {d: F.reduce(c * sp) for d, c in self.terms.items()}
        )

    def __mul__(self, s):
        if isinstance(s, TLMorphism):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    # -- categorical structure
    def compose(self, f: "TLMorphism") -> "TLMorphism":
        """``self`` after ``f``."""
        return compose(self, f)

    def __matmul__(self, f):
        return compose(self, f)

    def tensor(self, other: "TLMorphism") -> "TLMorphism":
        return tensor(self, other)

    def rotate180(self) -> "TLMorphism":
        return rotate180(self)

    def trace(self) -> CycNum:
        return markov_trace(self)


def compose(g: TLMorphism, f: TLMorphism) -> TLMorphism:
    """Vertical stacking: ``g`` on top of ``f``."""
    if g.src != f.dst:
        raise ValueError(f"cannot compose {g.src}->{g.dst} after {f.src}->{f.dst}")
    P = f.params
    acc: dict = {}
    get = acc.get
    ident = id_diagram(f.dst)
    for dg, cg in g.terms.items():
        if dg is ident:
            for df, cf in f.terms.items():
                key = (df, 0)
                s = get(key)
                acc[key] = cf * cg if s is None else s + cf * cg
            continue
        for df, cf in f.terms.items():
            key = compose_diagrams(dg, df)
            s = get(key)
            acc[key] = cf * cg if s is None else s + cf * cg
    return _collect(P, f.src, g.dst, acc)


def _collect(P: LevelParams, src: int, dst: int, acc: dict) -> TLMorphism:
    """Turn {(diagram, loops): unreduced coeff} into a canonical TLMorphism."""
    F = P.field
    out: dict = {}
    for (d, loops), c in acc.items():
        if loops:
            c = c * _delta_pow(P, loops)
        s = out.get(d)
        out[d] = c if s is None else s + c
    final = {}
    for d, c in out.items():
        c = F.reduce(c)
        if not c.is_zero():
            final[d] = c
    return TLMorphism._raw(P, src, dst, final)


def tensor(f: TLMorphism, g: TLMorphism) -> TLMorphism:
    """Horizontal juxtaposition, ``f`` on the left."""
    F = f.params.field
    out = {}
    for da, ca in f.terms.items():
        for db, cb in g.terms.items():
            d = tensor_diagrams(da, db)
            c = ca * cb
            s = out.get(d)
            out[d] = c if s is None else s + c
    final = {}
    for d, c in out.items():
        c = F.reduce(c)
        if not c.is_zero():
            final[d] = c
    return TLMorphism._raw(f.params, f.src + g.src, f.dst + g.dst, final)


def rotate180(f: TLMorphism) -> TLMorphism:
    return TLMorphism._raw(f.params, f.dst, f.src, {rotate_diagram(d): c for d, c in f.terms.items()})


def markov_trace(f: TLMorphism) -> CycNum:
    if f.src != f.dst:
        raise ValueError("trace needs an endomorphism")
    P = f.params
    acc = P.field._zero
    for d, c in f.terms.items():
        acc = acc + c * _delta_pow(P, trace_loops(d))
    return CycNum(P.field, P.field.reduce(acc))


# --- generators as morphisms ---------------------------------------------


def identity(params: LevelParams, n: int) -> TLMorphism:
    return TLMorphism.from_diagram(params, id_diagram(n))


def cup(params: LevelParams, i: int, n: int) -> TLMorphism:
    """U_{i,n}: n -> n+2."""
    return TLMorphism.from_diagram(params, cup_diagram(i, n))


def cap(params: LevelParams, i: int, n: int) -> TLMorphism:
    """The cap n+2 -> n at positions i, i+1."""
    return TLMorphism.from_diagram(params, cap_diagram(i, n))


def capcup(params: LevelParams, i: int, n: int) -> TLMorphism:
    """U_i on n strands."""
    return TLMorphism.from_diagram(params, capcup_diagram(i, n))


@lru_cache(maxsize=None)
def iterated_cup_diagram(i: int, m: int, n: int) -> PlanarDiagram:
    """n -> n+2m, m nested cups whose outermost feet are top points i and i+2m-1."""
    if m < 0 or not 0 <= i <= n:
        raise ValueError("iterated cup indices out of range")
    if m == 0:
        return id_diagram(n)
    d, _ = compose_diagrams(iterated_cup_diagram(i + 1, m - 1, n + 2), cup_diagram(i, n))
    return d


@lru_cache(maxsize=None)
def iterated_cap_diagram(i: int, m: int, n: int) -> PlanarDiagram:
    """n+2m -> n, the half-turn mirror image of the nested cups."""
    if m < 0 or not 0 <= i <= n:
        raise ValueError("iterated cap indices out of range")
    return rotate_diagram(iterated_cup_diagram(n - i, m, n))


def iterated_cup(params: LevelParams, i: int, m: int, n: int) -> TLMorphism:
    return TLMorphism.from_diagram(params, iterated_cup_diagram(i, m, n))


def iterated_cap(params: LevelParams, i: int, m: int, n: int) -> TLMorphism:
    return TLMorphism.from_diagram(params, iterated_cap_diagram(i, m, n))


def linear_combination(params: LevelParams, src: int, dst: int, pairs: Iterable) -> TLMorphism:
    """Build a morphism from (coefficient, diagram) pairs, summing repeats."""
    out = TLMorphism.zero(params, src, dst)
    for c, d in pairs:
        out = out + TLMorphism.from_diagram(params, d, c)
    return out
