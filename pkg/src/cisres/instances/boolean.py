"""Two-element boolean algebra: ``or`` as addition, ``and`` as product."""

from dataclasses import dataclass

from ..errors import ParseError
from ..semiring import Semiring

_TRUE = {"t", "true", "1", "⊤"}
_FALSE = {"f", "false", "0", "⊥"}


@dataclass(frozen=True)
class Boolean(Semiring):
    tag = "boolean"

    def _zero(self):
        return False

    def _one(self):
        return True

    def _add(self, p, q):
        return p or q

    def _mul(self, p, q):
        return p and q

    def _canonical(self, raw):
        return bool(raw)

    def _parse(self, text):
        t = text.lower()
        if t in _TRUE:
            return True
        if t in _FALSE:
            return False
        raise ParseError(f"not a boolean literal: {text!r}")

    def _format(self, payload):
        return "T" if payload else "F"

    def _random(self, rng):
        return rng.random() < 0.5

    def _samples(self):
        return [False, True]
