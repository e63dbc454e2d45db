"""Homogeneous points and lines of the rational projective plane.

Points and lines are integer triples reduced by their gcd. A finite point
has ``W > 0``; a line's last coordinate plays the same role. Affine
coordinates are exposed as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import (
    DegenerateTriangle,
    IdenticalLines,
    IdenticalPoints,
    InfinitePoint,
    SingularMap,
)

__all__ = [
    "AffineMap",
    "HLine",
    "HPoint",
    "Triangle",
    "apply_affine",
    "collinear",
    "cross",
    "det3",
    "join",
    "meet",
    "signed_area",
]

Vec3 = Tuple[int, int, int]


def cross(a: Sequence, b: Sequence) -> tuple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def dot(a: Sequence, b: Sequence):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def det3(a: Sequence, b: Sequence, c: Sequence):
    """Determinant of the 3x3 matrix with rows ``a``, ``b``, ``c``."""
    return dot(a, cross(b, c))


def _integral(coords: Iterable) -> Vec3:
    """Scale a rational triple to coprime integers (sign left untouched)."""
    fr = [Fraction(c) for c in coords]
    lcm = 1
    for f in fr:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fr]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("homogeneous coordinates must not all vanish")
    return tuple(i // g for i in ints)


def _canonical(a: int, b: int, c: int) -> Vec3:
    g = math.gcd(a, b, c)
    if g == 0:
        raise ValueError("homogeneous coordinates must not all vanish")
    a, b, c = a // g, b // g, c // g
    lead = c if c != 0 else (a if a != 0 else b)
    if lead < 0:
        a, b, c = -a, -b, -c
    return a, b, c


@dataclass(frozen=True)
class HPoint:
    """Point ``(X : Y : W)``; ``W == 0`` is a direction (point at infinity)."""

    X: int
    Y: int
    W: int

    def __post_init__(self):
        X, Y, W = _canonical(int(self.X), int(self.Y), int(self.W))
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "W", W)

    @classmethod
    def from_coords(cls, X, Y, W) -> "HPoint":
        """Build from rational homogeneous coordinates."""
        return cls(*_integral((X, Y, W)))

    @classmethod
    def affine(cls, x, y) -> "HPoint":
        return cls.from_coords(x, y, 1)

    @property
    def coords(self) -> Vec3:
        return (self.X, self.Y, self.W)

    @property
    def is_finite(self) -> bool:
        return self.W != 0

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        if self.W == 0:
            raise InfinitePoint(f"{self!r} has no affine coordinates")
        return Fraction(self.X, self.W), Fraction(self.Y, self.W)

    def to_json(self) -> dict:
        return {"X": str(self.X), "Y": str(self.Y), "W": str(self.W)}

    def __repr__(self):
        return f"HPoint({self.X}, {self.Y}, {self.W})"


@dataclass(frozen=True)
class HLine:
    """Line ``aX + bY + cW = 0``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = _canonical(int(self.a), int(self.b), int(self.c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def coords(self) -> Vec3:
        return (self.a, self.b, self.c)

    def contains(self, p: HPoint) -> bool:
        return dot(self.coords, p.coords) == 0

    def __repr__(self):
        return f"HLine({self.a}, {self.b}, {self.c})"


def join(p: HPoint, q: HPoint) -> HLine:
    v = cross(p.coords, q.coords)
    if v == (0, 0, 0):
        raise IdenticalPoints(f"{p!r} and {q!r} are the same point")
    return HLine(*v)


def meet(l: HLine, m: HLine) -> HPoint:
    v = cross(l.coords, m.coords)
    if v == (0, 0, 0):
        raise IdenticalLines(f"{l!r} and {m!r} are the same line")
    return HPoint(*v)


def collinear(p: HPoint, q: HPoint, r: HPoint) -> bool:
    return det3(p.coords, q.coords, r.coords) == 0


def signed_area(p: HPoint, q: HPoint, r: HPoint) -> Fraction:
    """Signed area of triangle pqr; positive when counterclockwise."""
    for pt in (p, q, r):
        if pt.W == 0:
            raise InfinitePoint(f"{pt!r} is at infinity")
    return Fraction(det3(p.coords, q.coords, r.coords), 2 * p.W * q.W * r.W)


Pair = Tuple[Fraction, Fraction]


def _pair(pt) -> Pair:
    x, y = pt
    return Fraction(x), Fraction(y)


@dataclass(frozen=True)
class Triangle:
    """Three non-collinear affine points with rational coordinates."""

    A: Pair
    B: Pair
    C: Pair

    def __post_init__(self):
        for name in "ABC":
            object.__setattr__(self, name, _pair(getattr(self, name)))
        if self.area == 0:
            raise DegenerateTriangle(f"vertices {self.A}, {self.B}, {self.C} are collinear")

    @classmethod
    def canonical(cls) -> "Triangle":
        """The triangle (0,0), (1,0), (0,1) of area 1/2."""
        return cls((0, 0), (1, 0), (0, 1))

    @property
    def vertices(self) -> tuple[Pair, Pair, Pair]:
        return (self.A, self.B, self.C)

    @property
    def hpoints(self) -> tuple[HPoint, HPoint, HPoint]:
        return tuple(HPoint.affine(*v) for v in self.vertices)

    @property
    def area(self) -> Fraction:
        (ax, ay), (bx, by), (cx, cy) = self.A, self.B, self.C
        return ((bx - ax) * (cy - ay) - (cx - ax) * (by - ay)) / 2

    @property
    def centroid(self) -> Pair:
        return (
            (self.A[0] + self.B[0] + self.C[0]) / 3,
            (self.A[1] + self.B[1] + self.C[1]) / 3,
        )


@dataclass(frozen=True)
class AffineMap:
    """``p -> M p + b`` with an invertible rational 2x2 matrix ``M``."""

    M: tuple[Pair, Pair]
    b: Pair = (Fraction(0), Fraction(0))

    def __post_init__(self):
        M = (_pair(self.M[0]), _pair(self.M[1]))
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "b", _pair(self.b))
        if self.det == 0:
            raise SingularMap(f"matrix {M} is singular")

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(((1, 0), (0, 1)))

    @property
    def det(self) -> Fraction:
        (a, b), (c, d) = self.M
        return a * d - b * c

    def __call__(self, pt: Pair) -> Pair:
        (a, b), (c, d) = self.M
        x, y = pt
        return (a * x + b * y + self.b[0], c * x + d * y + self.b[1])

    def apply_point(self, p: HPoint) -> HPoint:
        """Image of a homogeneous point; directions move by the linear part only."""
        (a, b), (c, d) = self.M
        X, Y, W = p.coords
        return HPoint.from_coords(
            a * X + b * Y + self.b[0] * W,
            c * X + d * Y + self.b[1] * W,
            W,
        )


def apply_affine(f: AffineMap, t: Triangle) -> Triangle:
    return Triangle(f(t.A), f(t.B), f(t.C))
