"""Exhaustive searches over small coefficient sets.

All scans are exact. Results come back as ratio -> hits dictionaries with
hits in enumeration order; nothing depends on dict iteration order of the
inputs.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .cevians import RouthConfig, generalized_routh_points
from .errors import RatioUndefined
from .formulas import generalized_ratio, routh_ratio
from .param_line import ExtParam, ParamLike, as_param
from .projective import Triangle

__all__ = [
    "DIGITS",
    "HomothetyReport",
    "SearchHit",
    "homothety_report",
    "is_digit_fraction",
    "is_digit_reciprocal",
    "scan_digit_triples",
    "scan_equal_integer",
    "scan_generalized_pairs",
]

DIGITS = tuple(range(1, 10))


@dataclass(frozen=True)
class SearchHit:
    """One configuration found by a scan.

    ``coefficients`` is ``(n, n, n)`` or ``(x, y, z)`` for Routh scans and
    ``(s, t)`` (``u = v = w = s``, ``x = y = z = t``) for the pair scan.
    """

    coefficients: tuple[ExtParam, ...]
    ratio: Fraction
    orbit_representative: bool = True
    trivial: bool = False
    # pair scan only: PQR is a homothetic copy of ABC about the centroid
    scaled_image: Optional[bool] = None

    def to_json(self) -> dict:
        out = {
            "coefficients": [str(c) for c in self.coefficients],
            "ratio": str(self.ratio),
            "orbit_representative": self.orbit_representative,
            "trivial": self.trivial,
        }
        if self.scaled_image is not None:
            out["scaled_image"] = self.scaled_image
        return out


def is_digit_reciprocal(r: Fraction) -> bool:
    return r.numerator == 1 and 1 <= r.denominator <= 9


def is_digit_fraction(r: Fraction) -> bool:
    """Reduced numerator and denominator both single nonzero digits."""
    return 1 <= r.numerator <= 9 and 1 <= r.denominator <= 9


def _rotations(t: tuple) -> list[tuple]:
    return [t[i:] + t[:i] for i in range(len(t))]


def _key(c: ExtParam):
    return Fraction(c.p, c.q) if c.q else float("inf")


def _orbit_rep(t: tuple[ExtParam, ...]) -> tuple[ExtParam, ...]:
    return min(_rotations(t), key=lambda r: [_key(c) for c in r])


def scan_equal_integer(n_min: int, n_max: int) -> list[SearchHit]:
    """Integers n with Routh ratio of ``(n, n, n)`` equal to ``1/d``, d a nonzero digit.

    ``n = 0`` gives ratio exactly 1 (PQR is ABC relabelled) and is returned
    with ``trivial=True``.
    """
    if n_min > n_max:
        raise ValueError(f"empty range [{n_min}, {n_max}]")
    hits = []
    for n in range(n_min, n_max + 1):
        try:
            r = routh_ratio(n, n, n).value
        except RatioUndefined:
            continue
        if is_digit_reciprocal(r):
            c = ExtParam(n, 1)
            hits.append(SearchHit((c, c, c), r, True, trivial=(n == 0)))
    return hits


def scan_digit_triples(digits=DIGITS) -> dict[Fraction, list[SearchHit]]:
    """Routh ratios in (0, 1) with digit numerator and denominator over digit triples."""
    found: dict[Fraction, list[SearchHit]] = defaultdict(list)
    for triple in itertools.product(digits, repeat=3):
        coeffs = tuple(ExtParam(d, 1) for d in triple)
        r = routh_ratio(*coeffs).value
        if 0 < r < 1 and is_digit_fraction(r):
            found[r].append(SearchHit(coeffs, r, _orbit_rep(coeffs) == coeffs))
    return dict(sorted(found.items()))


def pair_domain(include_reciprocals: bool) -> list[tuple[ExtParam, bool]]:
    """``(value, is_reciprocal)`` candidates; ``1/1`` is counted as the digit 1."""
    out = [(ExtParam(d, 1), False) for d in DIGITS]
    if include_reciprocals:
        out += [(ExtParam(1, d), True) for d in DIGITS if d > 1]
    return out


def scan_generalized_pairs(
    include_reciprocals: bool = False,
    both_reciprocals: bool = False,
) -> dict[Fraction, list[SearchHit]]:
    """Scan ``u = v = w = s``, ``x = y = z = t`` with ``s != t``.

    Without reciprocals s and t range over the digits. With them, either one
    may also be ``1/d``; ``both_reciprocals`` additionally admits pairs where
    s and t are both reciprocals. Returned ratios are those in (0, 1] with a
    digit numerator and denominator; use :func:`is_digit_reciprocal` to split
    the ``1/d`` values from ones like ``4/9``.
    """
    domain = pair_domain(include_reciprocals)
    found: dict[Fraction, list[SearchHit]] = defaultdict(list)
    for (s, s_rec), (t, t_rec) in itertools.product(domain, repeat=2):
        if s == t or (s_rec and t_rec and not both_reciprocals):
            continue
        try:
            r = generalized_ratio(RouthConfig.uniform(s, t)).value
        except RatioUndefined:
            continue
        if 0 < r <= 1 and is_digit_fraction(r):
            scaled = homothety_report(s, t).exists
            found[r].append(SearchHit((s, t), r, scaled_image=scaled))
    return dict(sorted(found.items()))


_PAIRINGS = (
    ("A", "B", "C"),
    ("B", "C", "A"),
    ("C", "A", "B"),
    ("A", "C", "B"),
    ("C", "B", "A"),
    ("B", "A", "C"),
)


@dataclass(frozen=True)
class HomothetyReport:
    exists: bool
    centroid_shared: bool
    ratio_k: Optional[Fraction] = None
    vertex_pairing: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "exists": self.exists,
            "centroid_shared": self.centroid_shared,
            "k": None if self.ratio_k is None else str(self.ratio_k),
            "pairing": dict(self.vertex_pairing),
        }


def _solve_scale(pairs) -> Optional[Fraction]:
    """Common k with ``d = k * e`` for every (d, e) vector pair, if any."""
    k = None
    for d, e in pairs:
        for di, ei in zip(d, e):
            if ei == 0:
                if di != 0:
                    return None
            elif k is None:
                k = di / ei
            elif di != k * ei:
                return None
    return k


def homothety_report(s: ParamLike, t: ParamLike, triangle: Triangle | None = None) -> HomothetyReport:
    """Is PQR for ``u=v=w=s, x=y=z=t`` a scaled copy of ABC about the centroid?

    Tries the cyclic vertex pairings first, then the reflective ones, and
    reports the first exact match. ``k < 0`` means a half-turn is included.
    """
    tri = triangle or Triangle.canonical()
    cfg = RouthConfig.uniform(as_param(s), as_param(t))
    pts = [p.xy for p in generalized_routh_points(tri, cfg)]
    gx, gy = tri.centroid
    pqr_centroid = (sum(p[0] for p in pts) / 3, sum(p[1] for p in pts) / 3)
    shared = pqr_centroid == (gx, gy)

    verts = dict(zip("ABC", tri.vertices))
    for pairing in _PAIRINGS:
        vecs = [
            ((px - gx, py - gy), (verts[v][0] - gx, verts[v][1] - gy))
            for (px, py), v in zip(pts, pairing)
        ]
        k = _solve_scale(vecs)
        if k is not None and k != 0:
            return HomothetyReport(True, shared, k, dict(zip("PQR", pairing)))
    return HomothetyReport(False, shared)
