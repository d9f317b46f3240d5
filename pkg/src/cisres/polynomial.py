"""Univariate polynomials with coefficients in a semiring instance.

Coefficients are stored leading-first: ``coeffs[k]`` multiplies
``x**(degree - k)``, so the Sylvester rows are the coefficient vector
itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .errors import InstanceMismatchError, InvalidParameterError
from .semiring import CisValue, Semiring, same_instance


@dataclass(frozen=True)
class CisPolynomial:
    semiring: Semiring
    coeffs: tuple[CisValue, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise InvalidParameterError("a polynomial needs at least one coefficient")
        for c in self.coeffs:
            self.semiring._check(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "CisPolynomial") -> "CisPolynomial":
        return poly_mul(self, other)

    def __str__(self) -> str:
        d = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            e = d - k
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def constant(value: CisValue) -> CisPolynomial:
    return CisPolynomial(value.semiring, (value,))


def linear_factor(root: CisValue) -> CisPolynomial:
    """The monic polynomial ``x + root``."""
    s = root.semiring
    return CisPolynomial(s, (s.one, root))


def poly_mul(p: CisPolynomial, q: CisPolynomial) -> CisPolynomial:
    if p.semiring is not q.semiring and p.semiring != q.semiring:
        raise InstanceMismatchError("polynomials over different instances")
    s = p.semiring
    out = [s.zero] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + a * b
    return CisPolynomial(s, tuple(out))


def poly_from_roots(roots: Sequence[CisValue]) -> CisPolynomial:
    """Expand ``(x + r_1)(x + r_2)...(x + r_k)``.

    Coefficient ``k`` of the result is the sum over all ``k``-subsets of
    the roots of their product.
    """
    roots = list(roots)
    if not roots:
        raise InvalidParameterError("poly_from_roots needs at least one root")
    same_instance(roots)
    return reduce(poly_mul, (linear_factor(r) for r in roots))
