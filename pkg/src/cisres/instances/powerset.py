"""Power set of a finite labelled universe: union and intersection.

Universe points are exact rationals, so intervals ``[a,b]`` select every
declared point inside them. Payloads are bitmasks over the sorted universe.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidParameterError, ParseError
from ..semiring import Semiring
from ._text import (format_point_set, parse_point_set, parse_rational,
                    split_top, strip_brackets)

MAX_POINTS = 64


def parse_universe(universe) -> tuple[Fraction, ...]:
    """Accept ``"a..b"`` (integer range), ``"p,q,..."`` or an iterable."""
    if isinstance(universe, str):
        text = universe.strip()
        if ".." in text:
            lo, hi = text.split("..", 1)
            try:
                lo, hi = int(lo), int(hi)
            except ValueError as exc:
                raise InvalidParameterError(f"bad universe range {universe!r}") from exc
            points = [Fraction(k) for k in range(lo, hi + 1)]
        else:
            points = parse_point_set(text)
    else:
        points = [Fraction(p) for p in universe]
    return tuple(sorted(set(points)))


@dataclass(frozen=True)
class PowerSet(Semiring):
    universe: tuple[Fraction, ...]

    tag = "powerset"

    def __post_init__(self):
        u = tuple(sorted(set(Fraction(p) for p in self.universe)))
        if not 1 <= len(u) <= MAX_POINTS:
            raise InvalidParameterError(
                f"power-set universe must have 1..{MAX_POINTS} points, got {len(u)}")
        object.__setattr__(self, "universe", u)

    @property
    def _full(self) -> int:
        return (1 << len(self.universe)) - 1

    def _zero(self):
        return 0

    def _one(self):
        return self._full

    def _add(self, p, q):
        return p | q

    def _mul(self, p, q):
        return p & q

    def _canonical(self, raw):
        if isinstance(raw, int):
            if raw < 0 or raw > self._full:
                raise ParseError(f"bitmask {raw} outside universe")
            return raw
        return self.mask_of(raw)

    def mask_of(self, points) -> int:
        index = {p: i for i, p in enumerate(self.universe)}
        mask = 0
        for p in points:
            p = Fraction(p)
            if p not in index:
                raise ParseError(f"point {p} is not in the universe")
            mask |= 1 << index[p]
        return mask

    def interval(self, lo, hi) -> int:
        lo, hi = Fraction(lo), Fraction(hi)
        mask = 0
        for i, p in enumerate(self.universe):
            if lo <= p <= hi:
                mask |= 1 << i
        return mask

    def points(self, mask: int) -> list[Fraction]:
        return [p for i, p in enumerate(self.universe) if mask >> i & 1]

    def _parse(self, text):
        # union of pieces: [a,b] closed interval, {p,q} point set, U, ∅
        mask = 0
        for piece in text.replace("∪", "|").split("|"):
            piece = piece.strip()
            if piece in ("∅", "{}", "empty"):
                continue
            if piece in ("U", "S", "all"):
                mask |= self._full
                continue
            inner = strip_brackets(piece, "[]")
            if inner is not None:
                ends = split_top(inner)
                if len(ends) != 2:
                    raise ParseError(f"interval needs two endpoints: {piece!r}")
                mask |= self.interval(parse_rational(ends[0]), parse_rational(ends[1]))
                continue
            if piece.startswith("{"):
                mask |= self.mask_of(parse_point_set(piece))
                continue
            raise ParseError(f"not a power-set literal: {piece!r}")
        return mask

    def _format(self, payload):
        if payload == 0:
            return "∅"
        return format_point_set(self.points(payload))

    def _random(self, rng):
        return rng.getrandbits(len(self.universe))

    def _samples(self):
        k = len(self.universe)
        full = self._full
        pool = [0, full, 1, 1 << (k - 1), full & 0b0101010101, full & 0b0110]
        return list(dict.fromkeys(pool))

    def params(self):
        return {"universe": [str(p) for p in self.universe]}
