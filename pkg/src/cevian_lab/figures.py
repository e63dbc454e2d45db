"""SVG drawings of a host triangle, its six cevians and the triangle PQR.

Geometry stays exact until a coordinate is written into the document, where
it is rounded to six fractional digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape, quoteattr

from .cevians import PairClass, RouthConfig, Vertex, cevian_point, generalized_routh_points
from .errors import DegeneratePair
from .projective import HPoint, Triangle, collinear

__all__ = ["CanvasTransform", "FigureSpec", "canvas_transform", "emit_svg", "format_decimal"]

Pair = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class FigureSpec:
    triangle: Triangle
    config: RouthConfig
    show_cevians: bool = True
    show_labels: bool = True
    width: int = 600
    height: int = 600
    margin: int = 40

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas dimensions must be positive")
        if self.margin < 0 or 2 * self.margin >= min(self.width, self.height):
            raise ValueError("margin leaves no drawing area")


def format_decimal(v: Fraction, digits: int = 6) -> str:
    scaled = round(Fraction(v) * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class CanvasTransform:
    """World -> pixel map: uniform scale, y flipped so counterclockwise stays counterclockwise."""

    scale: Fraction
    x0: Fraction
    y0: Fraction
    ox: Fraction
    oy: Fraction
    height: int

    def to_pixel(self, pt: Pair) -> Pair:
        x, y = pt
        return (self.ox + (x - self.x0) * self.scale, self.height - self.oy - (y - self.y0) * self.scale)

    def from_pixel(self, px) -> Pair:
        X, Y = (Fraction(c) for c in px)
        return ((X - self.ox) / self.scale + self.x0, (self.height - self.oy - Y) / self.scale + self.y0)

    def world_bounds(self, width: int) -> tuple[Pair, Pair]:
        lo = self.from_pixel((0, self.height))
        hi = self.from_pixel((width, 0))
        return lo, hi


def _routh_points(spec: FigureSpec):
    try:
        return generalized_routh_points(spec.triangle, spec.config), None
    except DegeneratePair as exc:
        return None, exc


def canvas_transform(spec: FigureSpec) -> CanvasTransform:
    """Fit the host triangle (and PQR, when it exists) inside the margins."""
    pts = list(spec.triangle.vertices)
    pqr, _ = _routh_points(spec)
    if pqr is not None:
        pts += [p.xy for p in pqr]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    bw = max(xs) - min(xs)
    bh = max(ys) - min(ys)
    aw = Fraction(spec.width - 2 * spec.margin)
    ah = Fraction(spec.height - 2 * spec.margin)
    candidates = [s for s in (aw / bw if bw else None, ah / bh if bh else None) if s]
    scale = min(candidates)
    ox = spec.margin + (aw - bw * scale) / 2
    oy = spec.margin + (ah - bh * scale) / 2
    return CanvasTransform(scale, min(xs), min(ys), ox, oy, spec.height)


def _clip_line(origin: Pair, direction: Pair, lo: Pair, hi: Pair) -> Optional[tuple[Pair, Pair]]:
    """Part of the infinite line ``origin + l*direction`` inside the box, exact."""
    l_min, l_max = None, None
    for o, d, a, b in ((origin[0], direction[0], lo[0], hi[0]), (origin[1], direction[1], lo[1], hi[1])):
        if d == 0:
            if not a <= o <= b:
                return None
            continue
        t1, t2 = (a - o) / d, (b - o) / d
        if t1 > t2:
            t1, t2 = t2, t1
        l_min = t1 if l_min is None else max(l_min, t1)
        l_max = t2 if l_max is None else min(l_max, t2)
    if l_min is None or l_min > l_max:
        return None
    return tuple((origin[0] + l * direction[0], origin[1] + l * direction[1]) for l in (l_min, l_max))


_CEVIANS = (
    (Vertex.A, "x"), (Vertex.A, "u"),
    (Vertex.B, "y"), (Vertex.B, "v"),
    (Vertex.C, "z"), (Vertex.C, "w"),
)


def _direction(apex: Pair, foot: HPoint) -> Pair:
    if foot.is_finite:
        fx, fy = foot.xy
        return (fx - apex[0], fy - apex[1])
    return (Fraction(foot.X), Fraction(foot.Y))


def _pts_attr(tf: CanvasTransform, pts) -> str:
    out = []
    for p in pts:
        X, Y = tf.to_pixel(p)
        out.append(f"{format_decimal(X)},{format_decimal(Y)}")
    return " ".join(out)


def emit_svg(spec: FigureSpec) -> str:
    tf = canvas_transform(spec)
    lo, hi = tf.world_bounds(spec.width)
    tri = spec.triangle
    verts = dict(zip("ABC", tri.vertices))
    pqr, failure = _routh_points(spec)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<title>{escape("generalized Routh triangle " + str(spec.config))}</title>',
        f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="#ffffff"/>',
    ]

    if pqr is not None and not collinear(*pqr):
        lines.append(
            f'<polygon id="pqr" points="{_pts_attr(tf, [p.xy for p in pqr])}" '
            'fill="#9ecae1" fill-opacity="0.8" stroke="#08519c" stroke-width="1.5"/>'
        )

    if spec.show_cevians:
        lines.append('<g id="cevians" stroke="#636363" stroke-width="1" fill="none">')
        for vertex, name in _CEVIANS:
            s = getattr(spec.config, name)
            apex = verts[vertex.name]
            seg = _clip_line(apex, _direction(apex, cevian_point(tri, vertex, s)), lo, hi)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = (tf.to_pixel(p) for p in seg)
            label = quoteattr(f"{vertex.name}{vertex.name}_{name}={s}")
            lines.append(
                f'<line data-cevian={label} x1="{format_decimal(x1)}" y1="{format_decimal(y1)}" '
                f'x2="{format_decimal(x2)}" y2="{format_decimal(y2)}"/>'
            )
        lines.append("</g>")

    lines.append(
        f'<polygon id="host" points="{_pts_attr(tf, tri.vertices)}" '
        'fill="none" stroke="#000000" stroke-width="2"/>'
    )

    labelled: list[tuple[str, Pair]] = list(verts.items())
    if pqr is not None:
        labelled += list(zip("PQR", (p.xy for p in pqr)))
        for name, p in zip("PQR", pqr):
            X, Y = tf.to_pixel(p.xy)
            lines.append(
                f'<circle id="pt-{name}" cx="{format_decimal(X)}" cy="{format_decimal(Y)}" '
                'r="3" fill="#08519c"/>'
            )

    if spec.show_labels:
        gx, gy = tf.to_pixel(tri.centroid)
        for name, p in labelled:
            X, Y = tf.to_pixel(p)
            dx, dy = X - gx, Y - gy
            norm = max(abs(dx), abs(dy)) or 1
            X, Y = X + 12 * dx / norm, Y + 12 * dy / norm
            lines.append(
                f'<text x="{format_decimal(X)}" y="{format_decimal(Y)}" font-family="serif" '
                f'font-size="14" text-anchor="middle">{name}</text>'
            )

    note = _note(pqr, failure)
    if note:
        lines.append(
            f'<text class="note" x="{spec.margin}" y="{spec.height - spec.margin // 3}" '
            f'font-family="sans-serif" font-size="12">{escape(note)}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _note(pqr, failure: Optional[DegeneratePair]) -> str:
    if failure is not None:
        kind = "coincident cevians" if failure.pair_class is PairClass.COINCIDENT else "parallel cevians"
        return f"{kind}: {failure.which} is undefined"
    P, Q, R = pqr
    if P == Q == R:
        return "cevians concurrent: P = Q = R"
    if collinear(P, Q, R):
        return "P, Q, R collinear"
    return ""
