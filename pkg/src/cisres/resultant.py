"""Resultants over an idempotent semiring.

``R`` is the product of ``alpha_i + beta_j`` over all root pairs; ``S`` is
the permanent of the Sylvester matrix of the two monic polynomials built
from those roots. Over any commutative idempotent semiring the two agree.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionError, InvalidParameterError
from .polynomial import CisPolynomial, poly_from_roots
from .semiring import CisValue, Semiring, same_instance


@dataclass(frozen=True)
class RootVectors:
    alphas: tuple[CisValue, ...]
    betas: tuple[CisValue, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        object.__setattr__(self, "betas", tuple(self.betas))
        if not self.alphas or not self.betas:
            raise InvalidParameterError("need at least one alpha and one beta")
        same_instance(self.alphas + self.betas)

    @property
    def semiring(self) -> Semiring:
        return self.alphas[0].semiring

    @property
    def m(self) -> int:
        return len(self.alphas)

    @property
    def n(self) -> int:
        return len(self.betas)

    def swapped(self) -> "RootVectors":
        return RootVectors(self.betas, self.alphas)


def _roots(alphas, betas=None) -> RootVectors:
    if isinstance(alphas, RootVectors):
        return alphas
    return RootVectors(tuple(alphas), tuple(betas))


def resultant_product(alphas, betas=None) -> CisValue:
    """Product of ``alpha_i + beta_j`` folded in row-major order."""
    roots = _roots(alphas, betas)
    acc = roots.semiring.one
    for a in roots.alphas:
        for b in roots.betas:
            acc = acc * (a + b)
    return acc


SquareMatrix = tuple  # tuple of row tuples of CisValue


def sylvester_matrix(f: CisPolynomial, g: CisPolynomial) -> SquareMatrix:
    """``n`` shifted copies of f's coefficients above ``m`` shifted copies of g's."""
    same_instance([f.coeffs[0], g.coeffs[0]])
    m, n = f.degree, g.degree
    if m < 1 or n < 1:
        raise InvalidParameterError("sylvester_matrix needs polynomials of degree >= 1")
    zero = f.semiring.zero
    size = m + n
    rows = []
    for shift in range(n):
        rows.append(tuple(f.coeffs[k - shift] if 0 <= k - shift <= m else zero
                          for k in range(size)))
    for shift in range(m):
        rows.append(tuple(g.coeffs[k - shift] if 0 <= k - shift <= n else zero
                          for k in range(size)))
    return tuple(rows)


def permanent(matrix: Sequence[Sequence[CisValue]]) -> CisValue:
    """Permanent by row expansion memoized on the set of used columns.

    Runs in O(2^k k) semiring operations for order ``k``; zero entries and
    zero partial sums are skipped, which prunes most of a banded matrix.
    """
    rows = [tuple(r) for r in matrix]
    k = len(rows)
    if k == 0:
        raise DimensionError("permanent of an empty matrix")
    if any(len(r) != k for r in rows):
        raise DimensionError("permanent needs a square matrix")
    s = same_instance([x for r in rows for x in r])
    # partial[mask]: sum over ways to place the first popcount(mask) rows in columns mask
    partial: dict[int, CisValue] = {0: s.one}
    for row in rows:
        nxt: dict[int, CisValue] = {}
        for mask, acc in partial.items():
            for j, entry in enumerate(row):
                if mask >> j & 1 or entry.is_zero():
                    continue
                term = acc * entry
                if term.is_zero():
                    continue
                key = mask | 1 << j
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        partial = nxt
        if not partial:
            return s.zero
    return partial.get((1 << k) - 1, s.zero)


def sylvester_expression(alphas, betas=None) -> CisValue:
    roots = _roots(alphas, betas)
    f = poly_from_roots(roots.alphas)
    g = poly_from_roots(roots.betas)
    return permanent(sylvester_matrix(f, g))


@dataclass(frozen=True)
class Verdict:
    equal: bool
    r: CisValue
    s: CisValue

    def __str__(self) -> str:
        return f"R = {self.r}, S = {self.s}, {'EQUAL' if self.equal else 'UNEQUAL'}"


def verify_main_theorem(alphas, betas=None) -> Verdict:
    roots = _roots(alphas, betas)
    r = resultant_product(roots)
    s = sylvester_expression(roots)
    return Verdict(r == s, r, s)


@dataclass
class SweepReport:
    checked: int = 0
    failures: list[tuple[str, RootVectors, Verdict]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def sweep_main_theorem(instances: Sequence[Semiring], max_m: int = 4, max_n: int = 4,
                       draws: int = 20, seed: int = 0) -> SweepReport:
    """Check R = S on random root vectors for every instance and size.

    One ``random.Random(seed)`` drives all draws, so a sweep is reproducible.
    """
    rng = random.Random(seed)
    report = SweepReport()
    start = time.perf_counter()
    for inst in instances:
        for m in range(1, max_m + 1):
            for n in range(1, max_n + 1):
                for _ in range(draws):
                    roots = RootVectors(tuple(inst.random_value(rng) for _ in range(m)),
                                        tuple(inst.random_value(rng) for _ in range(n)))
                    verdict = verify_main_theorem(roots)
                    report.checked += 1
                    if not verdict.equal:
                        report.failures.append((inst.tag, roots, verdict))
    report.seconds = time.perf_counter() - start
    return report
