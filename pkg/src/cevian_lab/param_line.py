"""The extended cevian parameter line, stored as the projective line over Q.

A parameter ``t`` is a pair ``(p : q)`` with ``q >= 0``; ``q == 0`` is the
single point at infinity. Every formula downstream is a polynomial in
``(p, q)`` so infinite parameters need no special casing.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import BothZero

__all__ = [
    "ExtParam",
    "INF",
    "ParamLike",
    "PositionClass",
    "as_param",
    "classify_position",
    "ext_param",
    "parse_param",
]


@dataclass(frozen=True)
class ExtParam:
    """A point ``p/q`` of Q ∪ {∞}, always held in canonical form.

    The constructor accepts any nonzero integer pair and canonicalizes it,
    so ``ExtParam(-4, -6) == ExtParam(2, 3)``.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p == 0 and q == 0:
            raise BothZero("parameter 0/0 is undefined")
        if q == 0:
            p = 1
        else:
            if q < 0:
                p, q = -p, -q
            g = math.gcd(p, q)
            p, q = p // g, q // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def value(self) -> Fraction | None:
        """The rational value, or ``None`` for ∞."""
        if self.q == 0:
            return None
        return Fraction(self.p, self.q)

    def __str__(self):
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"

    def __repr__(self):
        return f"ExtParam({self})"


INF = ExtParam(1, 0)

ParamLike = Union[ExtParam, int, Fraction, str]


def ext_param(num: int, den: int) -> ExtParam:
    """Canonical parameter ``num/den``; ``den == 0`` gives ∞."""
    return ExtParam(num, den)


_PARAM_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_param(text: str) -> ExtParam:
    """Parse ``"3"``, ``"-4/7"`` or ``"inf"``.

    The infinite point has no sign, so ``"+inf"`` and ``"-inf"`` are both
    accepted as ∞. Raises ``ValueError`` on anything else.
    """
    s = text.strip()
    if s.lstrip("+-").lower() in ("inf", "infinity", "∞"):
        return INF
    m = _PARAM_RE.match(s)
    if m is None:
        raise ValueError(f"cannot parse parameter {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return ExtParam(num, den)


def as_param(obj: ParamLike) -> ExtParam:
    """Coerce ints, rationals and parameter strings to :class:`ExtParam`."""
    if isinstance(obj, ExtParam):
        return obj
    if isinstance(obj, str):
        return parse_param(obj)
    if isinstance(obj, bool):
        raise TypeError("booleans are not parameters")
    if isinstance(obj, Rational):
        return ExtParam(obj.numerator, obj.denominator)
    if isinstance(obj, float) and math.isinf(obj):
        return INF
    raise TypeError(f"cannot use {type(obj).__name__} as a cevian parameter")


class PositionClass(enum.Enum):
    """Where the cevian foot ``A_t`` sits on the line BC."""

    AT_B = "at_b"
    AT_C = "at_c"
    BETWEEN_B_C = "between_b_c"
    BEYOND_B = "beyond_b"
    BEYOND_C = "beyond_c"
    AT_INFINITY = "at_infinity"


def classify_position(t: ExtParam) -> PositionClass:
    if t.q == 0:
        return PositionClass.AT_C
    if t.p == 0:
        return PositionClass.AT_B
    if t.p == -t.q:
        return PositionClass.AT_INFINITY
    if t.p > 0:
        return PositionClass.BETWEEN_B_C
    # q > 0 here, so comparing p with -q compares t with -1
    if t.p > -t.q:
        return PositionClass.BEYOND_B
    return PositionClass.BEYOND_C
