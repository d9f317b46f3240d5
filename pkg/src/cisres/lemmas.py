"""Exhaustive checks of the combinatorial facts behind ``R = S``.

Each check walks every object of a bounded size and returns a
:class:`LemmaResult` listing counterexamples (there should be none).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .instances import TermSet
from .representations import (BoolMatrix, SylPair, TermExponent, all_matrices, col_sum,
                              complement, flushed_from_col_sums, is_res_rep,
                              is_sorted_flushed, is_syl_rep, properly_coupled, term_of_res,
                              term_of_syl)
from .resultant import resultant_product, sylvester_expression


@dataclass
class LemmaResult:
    name: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def __str__(self) -> str:
        status = "ok" if self.ok else f"{len(self.counterexamples)} counterexamples"
        return f"{self.name}: {self.checked} cases, {status} ({self.seconds:.2f}s)"


def _sizes(limit):
    return [(m, n) for m in range(1, limit + 1) for n in range(1, limit + 1)]


def non_increasing_vectors(length: int, top: int):
    """All non-increasing vectors of ``length`` entries in ``0..top``."""
    for combo in itertools.combinations_with_replacement(range(top, -1, -1), length):
        yield combo


def symbolic_roots(m: int, n: int):
    ts = TermSet(m, n)
    alphas = tuple(ts.value(ts.alpha(i)) for i in range(1, m + 1))
    betas = tuple(ts.value(ts.beta(j)) for j in range(1, n + 1))
    return alphas, betas


def _as_terms(value, m):
    return {TermExponent(t[:m], t[m:]) for t in value.payload}


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - start
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def check_delta_res(limit: int = 3) -> LemmaResult:
    """Terms of R in the term-set semiring are exactly the terms of all boolean matrices."""
    res = LemmaResult("Delta_res")
    for m, n in _sizes(limit):
        alphas, betas = symbolic_roots(m, n)
        expected = _as_terms(resultant_product(alphas, betas), m)
        found = {term_of_res(M) for M in all_matrices(m, n)}
        res.checked += 1
        if found != expected:
            res.counterexamples.append(((m, n), found ^ expected))
    return res


@_timed
def check_pi_syl(limit: int = 3) -> LemmaResult:
    """Terms of S in the term-set semiring are exactly the terms of coupled pairs."""
    res = LemmaResult("Pi_syl")
    for m, n in _sizes(limit):
        alphas, betas = symbolic_roots(m, n)
        expected = _as_terms(sylvester_expression(alphas, betas), m)
        mats = list(all_matrices(m, n))
        found = set()
        for s1 in mats:
            for s2 in mats:
                pair = SylPair(s1, s2)
                if properly_coupled(pair):
                    found.add(term_of_syl(pair))
        res.checked += 1
        if found != expected:
            res.counterexamples.append(((m, n), found ^ expected))
    return res


@_timed
def check_flushed_pc(limit: int = 4) -> LemmaResult:
    """Every flushed matrix is properly coupled with its complement."""
    res = LemmaResult("Flushed_PC")
    for m, n in _sizes(limit):
        for c in non_increasing_vectors(n, m):
            F = flushed_from_col_sums(c, m)
            res.checked += 1
            if not properly_coupled(SylPair(complement(F), F)):
                res.counterexamples.append(F)
    return res


@_timed
def check_flushed_pc2(limit: int = 3) -> LemmaResult:
    """For sorted-flushed (A, B): cs(A) = cs(complement B) iff (A, B) is coupled."""
    res = LemmaResult("Flushed_PC2")
    for m, n in _sizes(limit):
        flushed = [flushed_from_col_sums(c, m) for c in non_increasing_vectors(n, m)]
        for A in all_matrices(m, n):
            for B in flushed:
                pair = SylPair(A, B)
                if not is_sorted_flushed(pair):
                    continue
                res.checked += 1
                if (col_sum(A) == col_sum(complement(B))) != properly_coupled(pair):
                    res.counterexamples.append(pair)
    return res


@_timed
def check_flushed(limit: int = 3) -> LemmaResult:
    """M is a res-rep of t iff (M, F_nu) is a sorted-flushed syl-rep of t (nu sorted)."""
    res = LemmaResult("Flushed")
    for m, n in _sizes(limit):
        mats = list(all_matrices(m, n))
        for nu in non_increasing_vectors(n, m):
            F = flushed_from_col_sums(nu, m)
            for mu in itertools.product(range(n + 1), repeat=m):
                t = TermExponent(mu, nu)
                for M in mats:
                    pair = SylPair(M, F)
                    res.checked += 1
                    lhs = is_res_rep(M, t)
                    rhs = is_sorted_flushed(pair) and is_syl_rep(pair, t)
                    if lhs != rhs:
                        res.counterexamples.append((t, M))
    return res


ALL_CHECKS = (check_delta_res, check_pi_syl, check_flushed_pc, check_flushed_pc2,
              check_flushed)


def run_all() -> list[LemmaResult]:
    return [check() for check in ALL_CHECKS]
