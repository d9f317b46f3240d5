"""Ideals of Q[v]: every ideal is principal, so we store its monic generator.

Ideal sum is generated by the gcd of the generators, ideal product by
their product. Payloads are coefficient tuples, leading coefficient first;
``()`` is the zero ideal and ``(1,)`` the unit ideal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from ..semiring import Semiring
from ._text import format_rational, parse_rational, strip_brackets

QPoly = tuple  # tuple[Fraction, ...], leading coefficient first, no leading zeros


def qp_trim(p) -> QPoly:
    p = [Fraction(c) for c in p]
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    return tuple(p[k:])


def qp_mul(p: QPoly, q: QPoly) -> QPoly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return qp_trim(out)


def qp_divmod(p: QPoly, q: QPoly) -> tuple[QPoly, QPoly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[0]
    for k in range(len(quot)):
        c = rem[k] / lead
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                rem[k + j] -= c * b
    return qp_trim(quot), qp_trim(rem[len(quot):])


def qp_monic(p: QPoly) -> QPoly:
    if not p:
        return ()
    lead = p[0]
    return tuple(c / lead for c in p)


def qp_gcd(p: QPoly, q: QPoly) -> QPoly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = qp_trim(p), qp_trim(q)
    while b:
        a, b = b, qp_divmod(a, b)[1]
    return qp_monic(a)


_TERM = re.compile(r"^([+-]?)([^v]*?)\*?(v(?:\^(\d+))?)?$")


def parse_qpoly(text: str, var: str = "v") -> QPoly:
    t = text.replace(" ", "").replace("**", "^").replace(var, "v")
    if not t:
        raise ParseError("empty polynomial")
    # split into signed terms, keeping the sign with each term
    terms = re.findall(r"[+-]?[^+-]+", t)
    if "".join(terms) != t:
        raise ParseError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        m = _TERM.match(term)
        if not m:
            raise ParseError(f"cannot parse term {term!r} in {text!r}")
        sign, num, mono, exp = m.groups()
        if mono is None and not num:
            raise ParseError(f"cannot parse term {term!r} in {text!r}")
        c = parse_rational(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        e = 0 if mono is None else (int(exp) if exp else 1)
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
    deg = max(coeffs)
    return qp_trim(coeffs.get(e, Fraction(0)) for e in range(deg, -1, -1))


def format_qpoly(p: QPoly, var: str = "v") -> str:
    if not p:
        return "0"
    deg = len(p) - 1
    out = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        e = deg - k
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        mag = abs(c)
        coef = format_rational(mag)
        body = coef if not mono else (mono if mag == 1 else f"{coef}*{mono}")
        sign = "-" if c < 0 else "+"
        out.append(("-" if sign == "-" else "") + body if not out else sign + body)
    return "".join(out)


@dataclass(frozen=True)
class PrincipalIdeals(Semiring):
    tag = "ideals"

    def _zero(self):
        return ()

    def _one(self):
        return (Fraction(1),)

    def _add(self, p, q):
        if not p:
            return q
        if not q:
            return p
        return qp_gcd(p, q)

    def _mul(self, p, q):
        return qp_monic(qp_mul(p, q))

    def _canonical(self, raw):
        return qp_monic(qp_trim(raw))

    def _parse(self, text):
        inner = strip_brackets(text, "<>")
        if inner is None:
            inner = strip_brackets(text, "⟨⟩")
        return qp_monic(parse_qpoly(text if inner is None else inner))

    def _format(self, payload):
        return f"<{format_qpoly(payload)}>"

    def _random(self, rng):
        r = rng.random()
        if r < 0.05:
            return ()
        if r < 0.15:
            return (Fraction(1),)
        gen: QPoly = (Fraction(1),)
        for _ in range(rng.randint(1, 2)):
            gen = qp_mul(gen, (Fraction(1), Fraction(rng.randint(-2, 2))))
        return gen

    def _samples(self):
        one = Fraction(1)
        return [(), (one,), (one, Fraction(-1)), (one, Fraction(1)),
                (one, Fraction(0), Fraction(-1)), (one, Fraction(-3), Fraction(2)),
                (one, Fraction(0))]
