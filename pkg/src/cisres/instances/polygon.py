"""Compact convex subsets of the plane with rational vertices.

Addition is the convex hull of the union and multiplication is the
Minkowski sum. A payload is ``None`` (the empty set) or the tuple of hull
vertices in counter-clockwise order starting from the lexicographically
smallest vertex; a point or a segment is the degenerate one- or two-vertex
case. Integral coordinates are held as ``int``, others as ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from ..errors import ParseError
from ..semiring import Semiring
from ._text import format_rational, parse_rational, split_top, strip_brackets

Point = tuple[Fraction, Fraction]
EMPTY = None


def _exact(x):
    # integral coordinates stay ints (much faster); equality with Fraction is preserved
    q = Fraction(x)
    return q.numerator if q.denominator == 1 else q


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> tuple[Point, ...]:
    """Strict convex hull by the monotone chain; collinear points dropped."""
    pts = sorted(set((_exact(x), _exact(y)) for x, y in points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    # all points collinear: the chain degenerates to the two extremes
    return tuple(hull) if len(hull) > 2 else (pts[0], pts[-1])


def _edges_from_bottom(poly: tuple[Point, ...]) -> tuple[Point, list[Point]]:
    start = min(range(len(poly)), key=lambda k: (poly[k][1], poly[k][0]))
    ring = poly[start:] + poly[:start]
    if len(ring) == 1:
        return ring[0], []
    edges = [(b[0] - a[0], b[1] - a[1]) for a, b in zip(ring, ring[1:] + ring[:1])]
    return ring[0], edges


def _half(v: Point) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_cmp(a: Point, b: Point) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def minkowski_sum(p, q):
    """Minkowski sum of two canonical hulls by merging edges in angle order."""
    if p is EMPTY or q is EMPTY:
        return EMPTY
    p0, ep = _edges_from_bottom(p)
    q0, eq = _edges_from_bottom(q)
    edges = sorted(ep + eq, key=cmp_to_key(_angle_cmp))
    cur = (p0[0] + q0[0], p0[1] + q0[1])
    out = [cur]
    for dx, dy in edges:
        cur = (cur[0] + dx, cur[1] + dy)
        out.append(cur)
    return convex_hull(out)


def hull_union(p, q):
    if p is EMPTY:
        return q
    if q is EMPTY:
        return p
    return convex_hull(p + q)


def _parse_point(text: str) -> Point:
    inner = strip_brackets(text, "()")
    if inner is None:
        raise ParseError(f"expected a point '(x,y)', got {text!r}")
    xy = split_top(inner)
    if len(xy) != 2:
        raise ParseError(f"expected two coordinates in {text!r}")
    return parse_rational(xy[0]), parse_rational(xy[1])


@dataclass(frozen=True)
class ConvexPolygon(Semiring):
    tag = "polygon"

    def _zero(self):
        return EMPTY

    def _one(self):
        return ((0, 0),)

    def _add(self, p, q):
        return hull_union(p, q)

    def _mul(self, p, q):
        return minkowski_sum(p, q)

    def _canonical(self, raw):
        if raw is None:
            return EMPTY
        raw = list(raw)
        if not raw:
            return EMPTY
        return convex_hull(raw)

    def _parse(self, text):
        t = text.strip()
        if t in ("∅", "{}", "empty"):
            return EMPTY
        inner = strip_brackets(t, "<>")
        if inner is None:
            inner = strip_brackets(t, "⟨⟩")
        if inner is not None:
            pieces = split_top(inner, ",")
        else:
            pieces = split_top(t, ";")
        pieces = [s for s in pieces if s]
        if not pieces:
            raise ParseError(f"empty polygon literal {text!r}")
        return convex_hull(_parse_point(s) for s in pieces)

    def _format(self, payload):
        if payload is None:
            return "∅"
        pts = ",".join(f"({format_rational(x)},{format_rational(y)})" for x, y in payload)
        return f"<{pts}>"

    def _random(self, rng):
        if rng.random() < 0.1:
            return EMPTY
        k = rng.randint(1, 4)
        return convex_hull((rng.randint(0, 3), rng.randint(0, 3)) for _ in range(k))

    def _samples(self):
        pts = [
            [(0, 0)],
            [(0, 0), (1, 0)],
            [(0, 0), (0, 1)],
            [(0, 0), (1, 0), (0, 1)],
            [(1, 1), (2, 1), (1, 3), (2, 2)],
            [(-1, 0), (1, 2)],
        ]
        return [EMPTY] + [convex_hull(p) for p in pts]
