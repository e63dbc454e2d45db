"""Cevian feet, cevian lines and the generalized Routh points P, Q, R.

Conventions for a triangle ABC and parameter ``s = (p : q)``:

* from A the foot lies on BC with ``BD = s DC``,
* from B the foot lies on CA with ``CD = s DA``,
* from C the foot lies on AB with ``AD = s DB``.

So the foot is ``(q * first + p * second : q + p)`` where ``(first, second)``
is ``(B, C)``, ``(C, A)`` or ``(A, B)``. ``s = -1`` gives the direction of
the side, i.e. the cevian through the vertex parallel to the opposite side.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from fractions import Fraction

from .errors import DegeneratePair, IdenticalLines, NotOnSideLine
from .param_line import ExtParam, ParamLike, as_param
from .projective import HLine, HPoint, Triangle, cross, dot, join, meet

__all__ = [
    "PairClass",
    "RouthConfig",
    "Vertex",
    "cevian_line",
    "cevian_point",
    "generalized_routh_points",
    "pair_class",
    "pair_factor",
    "param_of_point",
]


class Vertex(enum.Enum):
    A = 0
    B = 1
    C = 2


class PairClass(enum.Enum):
    TRANSVERSAL = "transversal"
    PARALLEL = "parallel"
    COINCIDENT = "coincident"


@dataclass(frozen=True)
class RouthConfig:
    """The six cevian parameters.

    ``P = AA_x ∩ BB_v``, ``Q = BB_y ∩ CC_w``, ``R = CC_z ∩ AA_u``.
    Fields accept anything :func:`~cevian_lab.param_line.as_param` does.
    """

    x: ExtParam
    y: ExtParam
    z: ExtParam
    u: ExtParam
    v: ExtParam
    w: ExtParam

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, as_param(getattr(self, f.name)))

    @classmethod
    def routh(cls, x: ParamLike, y: ParamLike, z: ParamLike) -> "RouthConfig":
        return cls(x, y, z, x, y, z)

    @classmethod
    def cevial(cls, x: ParamLike, y: ParamLike, z: ParamLike) -> "RouthConfig":
        return cls(x, y, z, 0, 0, 0)

    @classmethod
    def uniform(cls, s: ParamLike, t: ParamLike) -> "RouthConfig":
        """``u = v = w = s`` and ``x = y = z = t``."""
        return cls(t, t, t, s, s, s)

    def as_tuple(self) -> tuple[ExtParam, ...]:
        return (self.x, self.y, self.z, self.u, self.v, self.w)

    def rotated(self) -> "RouthConfig":
        """Parameters after relabelling the vertices A->B->C->A."""
        return RouthConfig(self.y, self.z, self.x, self.v, self.w, self.u)

    def pairs(self) -> tuple[tuple[str, ExtParam, ExtParam], ...]:
        """``(label, first, second)`` for the cevian pairs meeting in P, Q, R."""
        return (
            ("P", self.x, self.v),
            ("Q", self.y, self.w),
            ("R", self.z, self.u),
        )

    def __str__(self):
        return " ".join(str(t) for t in self.as_tuple())


def _side(t: Triangle, vertex: Vertex):
    A, B, C = t.vertices
    return {Vertex.A: (A, B, C), Vertex.B: (B, C, A), Vertex.C: (C, A, B)}[vertex]


def cevian_point(t: Triangle, vertex: Vertex, s: ExtParam) -> HPoint:
    _, (fx, fy), (sx, sy) = _side(t, vertex)
    p, q = s.p, s.q
    return HPoint.from_coords(q * fx + p * sx, q * fy + p * sy, q + p)


def param_of_point(t: Triangle, vertex: Vertex, d: HPoint) -> ExtParam:
    """Inverse of :func:`cevian_point` on the side line opposite ``vertex``."""
    _, (fx, fy), (sx, sy) = _side(t, vertex)
    first = (fx, fy, Fraction(1))
    second = (sx, sy, Fraction(1))
    n = cross(first, second)
    if dot(n, d.coords) != 0:
        raise NotOnSideLine(f"{d!r} is not on the side opposite {vertex.name}")
    # d = q*first + p*second, so d x second = q*n and first x d = p*n
    i = next(k for k in range(3) if n[k] != 0)
    q = Fraction(cross(d.coords, second)[i] / n[i])
    p = Fraction(cross(first, d.coords)[i] / n[i])
    return ExtParam(p.numerator * q.denominator, q.numerator * p.denominator)


def cevian_line(t: Triangle, vertex: Vertex, s: ExtParam) -> HLine:
    apex = HPoint.affine(*_side(t, vertex)[0])
    return join(apex, cevian_point(t, vertex, s))


def pair_factor(s1: ExtParam, s2: ExtParam) -> int:
    """Homogenized ``1 + s1 + s1*s2``; zero iff the two cevians fail to cross once."""
    return s1.q * s2.q + s1.p * s2.q + s1.p * s2.p


def pair_class(s1: ExtParam, s2: ExtParam) -> PairClass:
    """Classify cevian ``s1`` from one vertex against ``s2`` from the next one.

    Only ``(0, ∞)`` makes the two lines coincide (both are the shared side).
    """
    if pair_factor(s1, s2) != 0:
        return PairClass.TRANSVERSAL
    if s1.p == 0 and s2.q == 0:
        return PairClass.COINCIDENT
    return PairClass.PARALLEL


_PAIR_VERTICES = {
    "P": (Vertex.A, Vertex.B),
    "Q": (Vertex.B, Vertex.C),
    "R": (Vertex.C, Vertex.A),
}


def _intersect(t: Triangle, label: str, s1: ExtParam, s2: ExtParam) -> HPoint:
    v1, v2 = _PAIR_VERTICES[label]
    try:
        pt = meet(cevian_line(t, v1, s1), cevian_line(t, v2, s2))
    except IdenticalLines:
        raise DegeneratePair(label, PairClass.COINCIDENT) from None
    if not pt.is_finite:
        raise DegeneratePair(label, PairClass.PARALLEL)
    return pt


def generalized_routh_points(t: Triangle, cfg: RouthConfig) -> tuple[HPoint, HPoint, HPoint]:
    """Intersect the six cevians of ``cfg`` pairwise to get P, Q, R.

    The degeneracy check is geometric (the actual meet of the two lines),
    so it is independent of :func:`pair_class`.
    """
    return tuple(_intersect(t, label, s1, s2) for label, s1, s2 in cfg.pairs())
