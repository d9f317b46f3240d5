"""Cofinite topology on the rationals/reals.

Open sets are the empty set and complements of finite point sets. The
payload is ``None`` for the empty set, otherwise the sorted tuple of
excluded points (``()`` is the whole line).
"""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from ..semiring import Semiring
from ._text import format_point_set, parse_point_set

EMPTY = None
_WHOLE = ("R", "ℝ")


@dataclass(frozen=True)
class Cofinite(Semiring):
    tag = "cofinite"

    def _zero(self):
        return EMPTY

    def _one(self):
        return ()

    def _add(self, p, q):
        if p is None:
            return q
        if q is None:
            return p
        return tuple(sorted(set(p) & set(q)))

    def _mul(self, p, q):
        if p is None or q is None:
            return EMPTY
        return tuple(sorted(set(p) | set(q)))

    def _canonical(self, raw):
        if raw is None:
            return EMPTY
        return tuple(sorted(set(Fraction(x) for x in raw)))

    def _parse(self, text):
        t = text.replace(" ", "")
        if t in ("∅", "{}", "empty"):
            return EMPTY
        if t in _WHOLE:
            return ()
        for head in ("R\\", "ℝ∖", "ℝ\\", "R∖", "cof"):
            if t.startswith(head):
                return self._canonical(parse_point_set(t[len(head):]))
        raise ParseError(f"not a cofinite-open literal: {text!r}")

    def _format(self, payload):
        if payload is None:
            return "∅"
        if not payload:
            return "R"
        return "R\\" + format_point_set(payload)

    def _random(self, rng):
        if rng.random() < 0.1:
            return EMPTY
        k = rng.randint(0, 3)
        return self._canonical(rng.sample(range(-3, 4), k))

    def _samples(self):
        return [EMPTY, (), (Fraction(0),), (Fraction(0), Fraction(1)),
                (Fraction(-1), Fraction(2)), (Fraction(0), Fraction(1), Fraction(2))]
