"""Crossings expanded by the Kauffman skein rule, block braidings and twists."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagrams import TLMorphism, capcup, identity, tensor
from .jones_wenzl import Local, ProjMorphism, ProjObject, eval_coev, jw, pm_compose, scalar_on_simple
from .scalars import CycNum, LevelParams, make_params

__all__ = [
    "BraidWord",
    "crossing",
    "expand_braid",
    "block_braid_word",
    "block_braid",
    "braid_on_projectors",
    "braid_scalar_identities",
    "twist",
    "twist_scalar",
    "expected_twist",
]


@dataclass(frozen=True)
class BraidWord:
    """Elementary crossings (position, sign) listed bottom to top."""

    strands: int
    crossings: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for pos, sign in self.crossings:
            if not 0 <= pos <= self.strands - 2:
                raise ValueError(f"crossing position {pos} out of range for {self.strands} strands")
            if sign not in (1, -1):
                raise ValueError("crossing sign must be +1 or -1")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((p, -s) for p, s in reversed(self.crossings)))

    def __str__(self):
        return " ".join(f"s{p}" if s > 0 else f"s{p}^-1" for p, s in self.crossings)

    @classmethod
    def parse(cls, strands: int, text: str) -> "BraidWord":
        """Read the form ``"s0 s1^-1 s0"``."""
        out = []
        for tok in text.split():
            if not tok.startswith("s"):
                raise ValueError(f"bad braid token {tok!r}")
            body = tok[1:]
            sign = 1
            if body.endswith("^-1"):
                body, sign = body[:-3], -1
            out.append((int(body), sign))
        return cls(strands, tuple(out))


@lru_cache(maxsize=None)
def _crossing(k: int, sign: int) -> TLMorphism:
    P = make_params(k)
    a, b = (P.t, P.t.inverse()) if sign > 0 else (P.t.inverse(), P.t)
    return identity(P, 2).scale(a) + capcup(P, 0, 2).scale(b)


def crossing(params: LevelParams, sign: int = 1) -> TLMorphism:
    """sigma (sign=+1) or its inverse (sign=-1) on two strands."""
    return _crossing(params.k, 1 if sign > 0 else -1)


@lru_cache(maxsize=None)
def _placed(k: int, pos: int, sign: int, n: int) -> TLMorphism:
    P = make_params(k)
    return tensor(tensor(identity(P, pos), crossing(P, sign)), identity(P, n - pos - 2))


def expand_braid(params: LevelParams, w: BraidWord) -> TLMorphism:
    out = identity(params, w.strands)
    for pos, sign in w.crossings:
        out = _placed(params.k, pos, sign, w.strands) @ out
    return out


def block_braid_word(a: int, b: int, sign: int = 1) -> BraidWord:
    """Braid word of sigma_{a,b}: the a left strands pass over the b right ones.

    The rightmost of the a strands moves first; ab crossings in total.  For the
    inverse braid use ``block_braid_word(a, b).inverse()``, which goes b,a -> a,b.
    """
    cr = []
    for r in range(a - 1, -1, -1):
        for pos in range(r, r + b):
            cr.append((pos, sign))
    return BraidWord(a + b, tuple(cr))


def block_braid(params: LevelParams, a: int, b: int, inverse: bool = False) -> TLMorphism:
    """sigma_{a,b}, or with ``inverse`` the inverse of sigma_{b,a}; both a+b -> a+b strands, from a|b."""
    if inverse:
        # sigma_{b,a}^{-1}: maps a|b to b|a
        return expand_braid(params, block_braid_word(b, a).inverse())
    return expand_braid(params, block_braid_word(a, b))


def braid_on_projectors(params: LevelParams, a: int, b: int, inverse: bool = False) -> ProjMorphism:
    """The braiding F_a x F_b -> F_b x F_a (or the inverse braiding of F_b, F_a).

    Kept as a chain of single crossings so that it is never expanded on its own.
    """
    X = ProjObject(params, (a, b))
    Y = ProjObject(params, (b, a))
    w = block_braid_word(b, a).inverse() if inverse else block_braid_word(a, b)
    return braid_chain(params, X, Y, w)


def braid_chain(params: LevelParams, X: ProjObject, Y: ProjObject, w: BraidWord) -> ProjMorphism:
    if X.strands != w.strands or Y.strands != w.strands:
        raise ValueError("braid word does not fit the objects")
    factors = tuple(Local(pos, crossing(params, sign), w.strands) for pos, sign in w.crossings)
    return ProjMorphism(X, Y, ((params.field._one, factors),))


def braid_scalar_identities(params: LevelParams, a: int, b: int) -> dict[str, bool]:
    """The four projector-absorption identities for sigma_{a,b} and its inverse.

    Checked exactly in TL: f_{a+b} o sigma = t^{ab} f_{a+b} and sigma o f_{a+b}
    = t^{ab} f_{a+b}, and the same with t^{-ab} for the inverse braid.
    """
    if a < 0 or b < 0 or a + b > params.k + 1:
        raise ValueError("need a + b <= k+1")
    f = jw(params, a + b)
    s = block_braid(params, a, b)
    s_inv = expand_braid(params, block_braid_word(a, b).inverse())  # b|a -> a|b
    up, down = params.tpow(a * b), params.tpow(-a * b)
    return {
        "f o sigma": f @ s == f.scale(up),
        "f o sigma^-1": f @ s_inv == f.scale(down),
        "sigma o f": s @ f == f.scale(up),
        "sigma^-1 o f": s_inv @ f == f.scale(down),
    }


def twist(params: LevelParams, j: int, side: str = "right", inverse: bool = False) -> ProjMorphism:
    """Left or right twist on F_j, composed from e_j, c_j and the braiding of F_j with itself."""
    if not 0 <= j <= params.k:
        raise ValueError("need 0 <= j <= k")
    P = params
    one = ProjMorphism.identity(ProjObject(P, (j,)))
    e, c = eval_coev(P, j)
    s = braid_on_projectors(P, j, j, inverse=inverse)
    if side == "right":
        # (1 x e)(sigma x 1)(1 x c)
        return pm_compose(one.tensor(e), s.tensor(one), one.tensor(c))
    if side == "left":
        # (e x 1)(1 x sigma)(c x 1)
        return pm_compose(e.tensor(one), one.tensor(s), c.tensor(one))
    raise ValueError("side must be 'left' or 'right'")


def twist_scalar(params: LevelParams, j: int, side: str = "right", inverse: bool = False) -> CycNum:
    """Scalar by which the twist acts on F_j (checked by negligibility)."""
    return scalar_on_simple(params, twist(params, j, side, inverse))


def expected_twist(params: LevelParams, j: int) -> CycNum:
    """(-1)^j t^{j^2+2j}."""
    return params.tpow(j * j + 2 * j) * (-1) ** j
