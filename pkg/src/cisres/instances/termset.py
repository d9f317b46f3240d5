"""The free idempotent semiring on symbols ``a1..am, b1..bn``.

A value is a finite set of monomials, each stored as one exponent tuple of
length ``m + n`` (the ``a`` exponents followed by the ``b`` exponents).
Sum is union and product is pairwise exponent addition, so evaluating an
expression here yields exactly its set of monomials with multiplicities
forgotten.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import InvalidParameterError, ParseError
from ..semiring import Semiring

_FACTOR = re.compile(r"^([abαβ])(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class TermSet(Semiring):
    m: int
    n: int

    tag = "termset"

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n == 0:
            raise InvalidParameterError("term-set dimensions must be non-negative, not both 0")

    @property
    def width(self) -> int:
        return self.m + self.n

    def _zero(self):
        return frozenset()

    def _one(self):
        return frozenset({(0,) * self.width})

    def _add(self, p, q):
        return p | q

    def _mul(self, p, q):
        return frozenset(tuple(x + y for x, y in zip(s, t)) for s in p for t in q)

    def _canonical(self, raw):
        out = set()
        for term in raw:
            if len(term) == 2 and isinstance(term[0], (tuple, list)):
                mu, nu = term
                if len(mu) != self.m or len(nu) != self.n:
                    raise InvalidParameterError(
                        f"term {term!r} does not have dimensions ({self.m},{self.n})")
                term = tuple(mu) + tuple(nu)
            term = tuple(int(e) for e in term)
            if len(term) != self.width or min(term, default=0) < 0:
                raise InvalidParameterError(f"bad exponent vector {term!r}")
            out.add(term)
        return frozenset(out)

    def alpha(self, i: int):
        """Payload of the single symbol ``a_i`` (1-based)."""
        e = [0] * self.width
        e[i - 1] = 1
        return frozenset({tuple(e)})

    def beta(self, j: int):
        e = [0] * self.width
        e[self.m + j - 1] = 1
        return frozenset({tuple(e)})

    def split(self, term) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(term[: self.m]), tuple(term[self.m:])

    def _parse_monomial(self, text):
        e = [0] * self.width
        if text == "1":
            return tuple(e)
        for factor in text.split("*"):
            f = _FACTOR.match(factor.strip())
            if not f:
                raise ParseError(f"bad factor {factor!r}")
            sym, idx, exp = f.group(1), int(f.group(2)), int(f.group(3) or 1)
            if sym in "aα":
                if not 1 <= idx <= self.m:
                    raise ParseError(f"symbol a{idx} outside 1..{self.m}")
                e[idx - 1] += exp
            else:
                if not 1 <= idx <= self.n:
                    raise ParseError(f"symbol b{idx} outside 1..{self.n}")
                e[self.m + idx - 1] += exp
        return tuple(e)

    def _parse(self, text):
        t = text.replace(" ", "")
        if t in ("0", "∅", "{}"):
            return frozenset()
        return frozenset(self._parse_monomial(mono) for mono in t.split("+"))

    def _format_monomial(self, term):
        parts = []
        for k, e in enumerate(term):
            if not e:
                continue
            name = f"a{k + 1}" if k < self.m else f"b{k - self.m + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) or "1"

    def _format(self, payload):
        if not payload:
            return "0"
        return " + ".join(self._format_monomial(t) for t in sorted(payload, reverse=True))

    def _random(self, rng):
        terms = set()
        for _ in range(rng.randint(0, 2)):
            terms.add(tuple(rng.randint(0, 1) for _ in range(self.width)))
        return frozenset(terms)

    def _samples(self):
        w = self.width
        unit = [tuple(int(k == i) for k in range(w)) for i in range(w)]
        out = [frozenset(), self._one(), frozenset(unit[:1]), frozenset(unit[-1:]),
               frozenset(unit[:2]), frozenset({tuple(2 if k == 0 else 0 for k in range(w))}),
               frozenset({tuple(1 for _ in range(w))})]
        return list(dict.fromkeys(out))

    def params(self):
        return {"m": self.m, "n": self.n}
