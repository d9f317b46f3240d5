"""Truncated sequences over an inner semiring.

Addition is componentwise and multiplication is the convolution cut off at
``length`` terms, which keeps every axiom since index ``i`` of a product
only reads indices ``<= i``. Over the boolean inner instance the shorthand
``s<k>`` denotes ``k+1`` leading ``T`` entries (``s-1`` is zero, ``s0``
is one).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import InvalidParameterError, ParseError
from ..semiring import Semiring
from ._text import split_top, strip_brackets
from .boolean import Boolean

_SHORTHAND = re.compile(r"s(-?\d+)$")


@dataclass(frozen=True)
class Sequences(Semiring):
    inner: Semiring
    length: int = 16

    tag = "sequences"

    def __post_init__(self):
        if not isinstance(self.inner, Semiring):
            raise InvalidParameterError("sequences need an inner semiring instance")
        if self.length < 1:
            raise InvalidParameterError("sequence length must be at least 1")

    def _zero(self):
        return (self.inner._zero(),) * self.length

    def _one(self):
        z = self.inner._zero()
        return (self.inner._one(),) + (z,) * (self.length - 1)

    def _add(self, p, q):
        add = self.inner._add
        return tuple(add(a, b) for a, b in zip(p, q))

    def _mul(self, p, q):
        inner = self.inner
        z = inner._zero()
        out = [z] * self.length
        for j, a in enumerate(p):
            if a == z:
                continue
            for k in range(self.length - j):
                b = q[k]
                if b == z:
                    continue
                out[j + k] = inner._add(out[j + k], inner._mul(a, b))
        return tuple(out)

    def shorthand(self, k: int):
        """Payload of ``s_k`` over a boolean inner instance."""
        if not isinstance(self.inner, Boolean):
            raise InvalidParameterError("s_k shorthand needs the boolean inner instance")
        if k < -1:
            raise InvalidParameterError(f"s_{k} is undefined")
        k = min(k, self.length - 1)
        return tuple(i <= k for i in range(self.length))

    def _canonical(self, raw):
        raw = tuple(self.inner._canonical(x) for x in raw)
        if len(raw) > self.length:
            raise ParseError(f"sequence longer than truncation length {self.length}")
        return raw + (self.inner._zero(),) * (self.length - len(raw))

    def _parse(self, text):
        m = _SHORTHAND.match(text.strip())
        if m:
            return self.shorthand(int(m.group(1)))
        inner = strip_brackets(text, "()")
        if inner is None:
            raise ParseError(f"not a sequence literal: {text!r}")
        items = [s for s in split_top(inner) if s] if inner.strip() else []
        return self._canonical(self.inner._parse(s) for s in items)

    def _shorthand_index(self, payload):
        if not isinstance(self.inner, Boolean):
            return None
        k = sum(payload) - 1
        return k if payload == self.shorthand(k) else None

    def _format(self, payload):
        k = self._shorthand_index(payload)
        if k is not None:
            return f"s{k}"
        z = self.inner._zero()
        items = list(payload)
        while items and items[-1] == z:
            items.pop()
        return "(" + ",".join(self.inner._format(x) for x in items) + ")"

    def _random(self, rng):
        if isinstance(self.inner, Boolean):
            if rng.random() < 0.7:
                return self.shorthand(rng.randint(-1, min(4, self.length - 1)))
            return tuple(rng.random() < 0.4 if i < 5 else False for i in range(self.length))
        span = min(self.length, 4)
        return self._canonical(self.inner._random(rng) for _ in range(span))

    def _samples(self):
        if isinstance(self.inner, Boolean):
            pool = [self.shorthand(k) for k in (-1, 0, 1, 2, 4)]
            pool.append(self._canonical([True, False, True]))
            pool.append(self._canonical([False, True]))
            return list(dict.fromkeys(pool))
        inner = self.inner._samples()
        out = [self._zero(), self._one()]
        for a, b in zip(inner, inner[1:]):
            out.append(self._canonical([a, b]))
        return list(dict.fromkeys(out))

    def params(self):
        return {"inner": self.inner.tag, "inner_params": self.inner.params(),
                "length": self.length}
