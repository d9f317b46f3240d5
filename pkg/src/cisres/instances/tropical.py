"""Max-plus tropical semiring over exact rationals.

The payload is a :class:`~fractions.Fraction`, or ``None`` standing for
minus infinity (the additive zero).
"""

from dataclasses import dataclass
from fractions import Fraction

from ..semiring import Semiring
from ._text import format_rational, parse_rational

NEG_INF = None


@dataclass(frozen=True)
class Tropical(Semiring):
    tag = "tropical"

    def _zero(self):
        return NEG_INF

    def _one(self):
        return Fraction(0)

    def _add(self, p, q):
        if p is None:
            return q
        if q is None:
            return p
        return p if p >= q else q

    def _mul(self, p, q):
        if p is None or q is None:
            return NEG_INF
        return p + q

    def _canonical(self, raw):
        if raw is None or raw == float("-inf"):
            return NEG_INF
        return Fraction(raw)

    def _parse(self, text):
        if text.lower() in ("-inf", "-∞", "−∞", "-infinity"):
            return NEG_INF
        return parse_rational(text)

    def _format(self, payload):
        return "-inf" if payload is None else format_rational(payload)

    def _random(self, rng):
        if rng.random() < 0.1:
            return NEG_INF
        return Fraction(rng.randint(-6, 6), rng.choice((1, 1, 1, 2)))

    def _samples(self):
        return [NEG_INF, Fraction(0), Fraction(1), Fraction(3),
                Fraction(-2), Fraction(5, 2)]
