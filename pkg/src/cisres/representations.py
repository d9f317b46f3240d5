"""Boolean-matrix encodings of resultant terms and the maps between them.

A term ``a^mu b^nu`` of the product-form resultant is encoded by one 0/1
matrix (a *res-representation*): entry ``(i, j)`` says which side of the
factor ``(alpha_i + beta_j)`` was picked. A term of the Sylvester permanent
is encoded by a *properly coupled* pair of matrices (a
*syl-representation*). This module provides the predicates, the
constructive translations in both directions, and brute-force enumerators.

Indices are 0-based in code and 1-based in traces and printed output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (CisError, DimensionError, EnumerationLimitError, ParseError,
                     PreconditionError)

MAX_RES_CELLS = 12
MAX_SYL_CELLS = 9


@dataclass(frozen=True)
class BoolMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionError("a boolean matrix needs at least one row and column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged boolean matrix")
        if any(x not in (0, 1) for r in rows for x in r):
            raise DimensionError("boolean matrix entries must be 0 or 1")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zeros(cls, m: int, n: int) -> "BoolMatrix":
        return cls(((0,) * n,) * m)

    @classmethod
    def ones(cls, m: int, n: int) -> "BoolMatrix":
        return cls(((1,) * n,) * m)

    @classmethod
    def parse(cls, text: str) -> "BoolMatrix":
        """Rows on separate lines; entries separated by spaces or run together."""
        rows = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) == 1 and len(tokens[0]) > 1:
                tokens = list(tokens[0])
            if any(tok not in ("0", "1") for tok in tokens):
                raise ParseError(f"boolean matrix rows must hold 0/1 entries: {line!r}")
            rows.append(tuple(int(tok) for tok in tokens))
        if not rows:
            raise ParseError("empty boolean matrix")
        try:
            return cls(tuple(rows))
        except DimensionError as exc:
            raise ParseError(str(exc)) from exc

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


@dataclass(frozen=True)
class TermExponent:
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(x) for x in self.mu))
        object.__setattr__(self, "nu", tuple(int(x) for x in self.nu))
        if min(self.mu + self.nu, default=0) < 0:
            raise DimensionError("exponents must be non-negative")

    @property
    def m(self) -> int:
        return len(self.mu)

    @property
    def n(self) -> int:
        return len(self.nu)

    def __str__(self) -> str:
        return f"a^({','.join(map(str, self.mu))}) b^({','.join(map(str, self.nu))})"


@dataclass(frozen=True)
class SylPair:
    s1: BoolMatrix
    s2: BoolMatrix

    def __post_init__(self):
        if self.s1.shape != self.s2.shape:
            raise DimensionError(f"pair shapes differ: {self.s1.shape} vs {self.s2.shape}")

    @property
    def m(self) -> int:
        return self.s1.m

    @property
    def n(self) -> int:
        return self.s1.n

    def __str__(self) -> str:
        return f"S1 =\n{self.s1}\nS2 =\n{self.s2}"


# ---------------------------------------------------------------------------
# notation

def complement(M: BoolMatrix) -> BoolMatrix:
    return BoolMatrix(tuple(tuple(1 - x for x in r) for r in M.rows))


def row_sum(M: BoolMatrix) -> tuple[int, ...]:
    return tuple(sum(r) for r in M.rows)


def col_sum(M: BoolMatrix) -> tuple[int, ...]:
    return tuple(sum(c) for c in zip(*M.rows))


def adj_row_sum(M: BoolMatrix) -> tuple[int, ...]:
    return tuple(i + 1 + s for i, s in enumerate(row_sum(M)))


def adj_col_sum(M: BoolMatrix) -> tuple[int, ...]:
    return tuple(j + 1 + s for j, s in enumerate(col_sum(M)))


def _non_increasing(v: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(v, v[1:]))


def _increasing(v: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(v, v[1:]))


# ---------------------------------------------------------------------------
# predicates

def term_of_res(M: BoolMatrix) -> TermExponent:
    """The term a matrix represents when read as a res-representation."""
    return TermExponent(row_sum(M), col_sum(complement(M)))


def term_of_syl(p: SylPair) -> TermExponent:
    return TermExponent(row_sum(p.s1), col_sum(p.s2))


def _check_dims(shape: tuple[int, int], t: TermExponent) -> None:
    if shape != (t.m, t.n):
        raise DimensionError(f"matrix shape {shape} does not match term dimensions "
                             f"({t.m},{t.n})")


def is_res_rep(M: BoolMatrix, t: TermExponent) -> bool:
    _check_dims(M.shape, t)
    return row_sum(M) == t.mu and col_sum(complement(M)) == t.nu


def properly_coupled(p: SylPair) -> bool:
    """Adjusted column sums of S1 and adjusted row sums of S2 tile 1..m+n."""
    values = adj_col_sum(p.s1) + adj_row_sum(p.s2)
    return sorted(values) == list(range(1, p.m + p.n + 1))


def is_syl_rep(p: SylPair, t: TermExponent) -> bool:
    _check_dims(p.s1.shape, t)
    return row_sum(p.s1) == t.mu and col_sum(p.s2) == t.nu and properly_coupled(p)


def is_sorted_pair(p: SylPair) -> bool:
    return _increasing(adj_col_sum(p.s1)) and _increasing(adj_row_sum(p.s2))


def is_bottom_left_flushed(M: BoolMatrix) -> bool:
    """Ones sit at the bottom of each column and column sums never increase."""
    for col in zip(*M.rows):
        seen_one = False
        for x in col:
            if x:
                seen_one = True
            elif seen_one:
                return False
    return _non_increasing(col_sum(M))


def is_sorted_flushed(p: SylPair) -> bool:
    return is_sorted_pair(p) and is_bottom_left_flushed(p.s2)


def flushed_from_col_sums(c: Sequence[int], m: int) -> BoolMatrix:
    """The unique bottom-left flushed ``m x len(c)`` matrix with column sums ``c``."""
    c = tuple(int(x) for x in c)
    if m < 1 or not c:
        raise DimensionError("flushed matrix needs m >= 1 and at least one column")
    if any(not 0 <= x <= m for x in c):
        raise PreconditionError("column-sums-in-range", f"column sums {c} must lie in 0..{m}")
    if not _non_increasing(c):
        raise PreconditionError("column-sums-non-increasing",
                                f"column sums {c} must be non-increasing to be flushed")
    return BoolMatrix(tuple(tuple(int(i >= m - x) for x in c) for i in range(m)))


# ---------------------------------------------------------------------------
# tracing

@dataclass
class Trace:
    """Collects one ``SWAP`` line per swap, optionally with matrix snapshots.

    ``loops`` counts iterations of each algorithm's main loop.
    """

    snapshots: bool = False
    lines: list[str] = field(default_factory=list)
    loops: dict[str, int] = field(default_factory=dict)

    def swap(self, name: str, a: tuple[int, int], b: tuple[int, int], state=None) -> None:
        self.lines.append(f"SWAP {name} ({a[0] + 1},{a[1] + 1}) <-> ({b[0] + 1},{b[1] + 1})")
        if self.snapshots and state is not None:
            self.snapshot(name, state)

    def snapshot(self, name: str, grid) -> None:
        self.lines.append(f"{name} =")
        self.lines.extend(" ".join(str(x) for x in row) for row in grid)

    def note(self, text: str) -> None:
        self.lines.append(text)

    def tick(self, loop: str) -> None:
        self.loops[loop] = self.loops.get(loop, 0) + 1

    def __str__(self) -> str:
        return "\n".join(self.lines)


class _Null(Trace):
    def swap(self, *args, **kwargs):
        pass

    def snapshot(self, *args, **kwargs):
        pass

    def note(self, *args, **kwargs):
        pass


def _grid(M: BoolMatrix) -> list[list[int]]:
    return [list(r) for r in M.rows]


def _freeze(grid) -> BoolMatrix:
    return BoolMatrix(tuple(tuple(r) for r in grid))


def _acs(grid) -> list[int]:
    return [j + 1 + sum(col) for j, col in enumerate(zip(*grid))]


def _ars(grid) -> list[int]:
    return [i + 1 + sum(row) for i, row in enumerate(grid)]


# ---------------------------------------------------------------------------
# algorithms

def syl_from_res(M: BoolMatrix, trace: Trace | None = None) -> SylPair:
    """Pair a res-representation with the flushed matrix of its beta exponents.

    The beta exponents ``m - colsum(M)`` must be non-increasing; use
    :func:`normalize_term` (or :func:`to_syl_rep`) for other terms.
    """
    trace = trace if trace is not None else _Null()
    c = col_sum(M)
    nu = tuple(M.m - x for x in c)
    if not _non_increasing(nu):
        raise PreconditionError(
            "nu-non-increasing",
            f"beta exponents {nu} are not non-increasing; normalize the term first")
    trace.note(f"c = [{','.join(map(str, c))}]")
    F = flushed_from_col_sums(nu, M.m)
    if trace.snapshots:
        trace.snapshot("F", F.rows)
    return SylPair(M, F)


def _require_syl(p: SylPair) -> None:
    if not properly_coupled(p):
        raise PreconditionError("properly-coupled",
                                "input pair is not properly coupled, so not a syl-representation")


def sort_pair(p: SylPair, trace: Trace | None = None) -> SylPair:
    """Bubble-sort a syl-representation until acs(S1) and ars(S2) increase.

    Out-of-order neighbours are repaired by moving ``h`` ones across the
    offending column pair of S1 (resp. row pair of S2); every choice takes
    the smallest index.
    """
    trace = trace if trace is not None else _Null()
    _require_syl(p)
    s1, s2 = _grid(p.s1), _grid(p.s2)
    m, n = p.m, p.n

    while True:
        trace.tick("sort-columns")
        C = _acs(s1)
        j = next((j for j in range(n - 1) if C[j] > C[j + 1]), None)
        if j is None:
            break
        for _ in range(C[j] - C[j + 1]):
            i = next(i for i in range(m) if s1[i][j] == 1 and s1[i][j + 1] == 0)
            s1[i][j], s1[i][j + 1] = s1[i][j + 1], s1[i][j]
            trace.swap("S1", (i, j), (i, j + 1), s1)

    while True:
        trace.tick("sort-rows")
        R = _ars(s2)
        i = next((i for i in range(m - 1) if R[i] > R[i + 1]), None)
        if i is None:
            break
        for _ in range(R[i] - R[i + 1]):
            j = next(j for j in range(n) if s2[i][j] == 1 and s2[i + 1][j] == 0)
            s2[i][j], s2[i + 1][j] = s2[i + 1][j], s2[i][j]
            trace.swap("S2", (i, j), (i + 1, j), s2)

    return SylPair(_freeze(s1), _freeze(s2))


def flush_pair(p: SylPair, trace: Trace | None = None) -> SylPair:
    """Turn a sorted syl-representation into a sorted-flushed one.

    Each round moves one out-of-order one down in S2, rebalances the rows
    sharing its old row sum so the adjusted row sums stay increasing, and
    compensates with one swap in S1. Row sums ``r`` and the adjusted sums
    ``C``/``R`` used for the rebalancing are those read at the start of the
    round.
    """
    trace = trace if trace is not None else _Null()
    _require_syl(p)
    if not is_sorted_pair(p):
        raise PreconditionError("sorted", "flush_pair needs a sorted syl-representation")
    if not _non_increasing(col_sum(p.s2)):
        raise PreconditionError("nu-non-increasing",
                                "flush_pair needs non-increasing column sums in S2")
    s1, s2 = _grid(p.s1), _grid(p.s2)
    m, n = p.m, p.n

    while True:
        if is_bottom_left_flushed(_freeze(s2)):
            return SylPair(_freeze(s1), _freeze(s2))
        trace.tick("flush")
        r = [sum(row) for row in s2]
        C = _acs(s1)
        R = _ars(s2)

        i, j = next((i, j) for i in range(m - 1) for j in range(n)
                    if s2[i][j] == 1 and s2[i + 1][j] == 0)
        s2[i][j], s2[i + 1][j] = 0, 1
        trace.swap("S2", (i, j), (i + 1, j), s2)

        lo = min(k for k in range(i + 1) if r[k] == r[i])
        if lo < i:
            jj = next(jj for jj in range(n) if s2[lo][jj] == 1 and s2[i][jj] == 0)
            s2[lo][jj], s2[i][jj] = 0, 1
            trace.swap("S2", (lo, jj), (i, jj), s2)

        hi = max(k for k in range(i + 1, m) if r[k] == r[i + 1])
        if i + 1 < hi:
            jj = next(jj for jj in range(n) if s2[i + 1][jj] == 1 and s2[hi][jj] == 0)
            s2[i + 1][jj], s2[hi][jj] = 0, 1
            trace.swap("S2", (i + 1, jj), (hi, jj), s2)

        try:
            j_lo = C.index(R[lo] - 1)
            j_hi = C.index(R[hi] + 1)
            row = next(k for k in range(m) if s1[k][j_lo] == 0 and s1[k][j_hi] == 1)
        except (ValueError, StopIteration) as exc:
            raise CisError("flush could not find a compensating swap in S1; "
                           "the input was not a sorted syl-representation") from exc
        s1[row][j_lo], s1[row][j_hi] = 1, 0
        trace.swap("S1", (row, j_lo), (row, j_hi), s1)


def res_from_syl(p: SylPair, trace: Trace | None = None) -> BoolMatrix:
    """Sort, then flush, then keep the first matrix."""
    _require_syl(p)
    if not _non_increasing(col_sum(p.s2)):
        raise PreconditionError(
            "nu-non-increasing",
            f"beta exponents {col_sum(p.s2)} are not non-increasing; normalize the term first")
    return flush_pair(sort_pair(p, trace), trace).s1


# ---------------------------------------------------------------------------
# normalization

def normalize_term(t: TermExponent):
    """Sort both exponent vectors into non-increasing order.

    Returns ``(t_sorted, sigma_alpha, sigma_beta)`` with
    ``t_sorted.mu[k] == t.mu[sigma_alpha[k]]`` (0-based; ties keep order).
    """
    sa = tuple(sorted(range(t.m), key=lambda i: -t.mu[i]))
    sb = tuple(sorted(range(t.n), key=lambda j: -t.nu[j]))
    return TermExponent(tuple(t.mu[i] for i in sa), tuple(t.nu[j] for j in sb)), sa, sb


def _take_rows(M: BoolMatrix, perm) -> BoolMatrix:
    return BoolMatrix(tuple(M.rows[k] for k in perm))


def _take_cols(M: BoolMatrix, perm) -> BoolMatrix:
    return BoolMatrix(tuple(tuple(r[k] for k in perm) for r in M.rows))


def _inverse(perm) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p] = k
    return tuple(inv)


def permute_res_rep(M: BoolMatrix, sigma_alpha, sigma_beta) -> BoolMatrix:
    """Map a res-representation of the sorted term back to the original term."""
    return _take_cols(_take_rows(M, _inverse(sigma_alpha)), _inverse(sigma_beta))


def permute_syl_rep(p: SylPair, sigma_alpha, sigma_beta) -> SylPair:
    """Map a syl-representation of the sorted term back to the original term.

    Rows of S1 follow the alpha permutation and columns of S2 the beta one;
    neither move changes the adjusted sums, so coupling is preserved.
    """
    return SylPair(_take_rows(p.s1, _inverse(sigma_alpha)),
                   _take_cols(p.s2, _inverse(sigma_beta)))


def to_syl_rep(M: BoolMatrix, trace: Trace | None = None) -> SylPair:
    """:func:`syl_from_res` for a res-representation of any term."""
    _, sa, sb = normalize_term(term_of_res(M))
    sorted_rep = _take_cols(_take_rows(M, sa), sb)
    return permute_syl_rep(syl_from_res(sorted_rep, trace), sa, sb)


def to_res_rep(p: SylPair, trace: Trace | None = None) -> BoolMatrix:
    """:func:`res_from_syl` for a syl-representation of any term."""
    _, sa, sb = normalize_term(term_of_syl(p))
    sorted_pair = SylPair(_take_rows(p.s1, sa), _take_cols(p.s2, sb))
    return permute_res_rep(res_from_syl(sorted_pair, trace), sa, sb)


# ---------------------------------------------------------------------------
# enumeration

def _rows_with_sums(sums: Sequence[int], width: int) -> Iterable[tuple[tuple[int, ...], ...]]:
    choices = []
    for s in sums:
        if not 0 <= s <= width:
            return
        choices.append([tuple(int(k in ones) for k in range(width))
                        for ones in itertools.combinations(range(width), s)])
    yield from itertools.product(*choices)


def _transpose(rows):
    return tuple(zip(*rows))


def all_matrices(m: int, n: int) -> Iterable[BoolMatrix]:
    for bits in itertools.product((0, 1), repeat=m * n):
        yield BoolMatrix(tuple(bits[i * n:(i + 1) * n] for i in range(m)))


def enumerate_res_reps(t: TermExponent) -> list[BoolMatrix]:
    if t.m * t.n > MAX_RES_CELLS:
        raise EnumerationLimitError(f"m*n = {t.m * t.n} exceeds {MAX_RES_CELLS}")
    if t.m == 0 or t.n == 0 or sum(t.mu) + sum(t.nu) != t.m * t.n:
        return []
    out = []
    for rows in _rows_with_sums(t.mu, t.n):
        M = BoolMatrix(rows)
        if col_sum(complement(M)) == t.nu:
            out.append(M)
    return out


def enumerate_syl_reps(t: TermExponent) -> list[SylPair]:
    if t.m * t.n > MAX_SYL_CELLS:
        raise EnumerationLimitError(f"m*n = {t.m * t.n} exceeds {MAX_SYL_CELLS}")
    if t.m == 0 or t.n == 0 or sum(t.mu) + sum(t.nu) != t.m * t.n:
        return []
    firsts = [BoolMatrix(rows) for rows in _rows_with_sums(t.mu, t.n)]
    seconds = [BoolMatrix(_transpose(cols)) for cols in _rows_with_sums(t.nu, t.m)]
    out = []
    for s1 in firsts:
        for s2 in seconds:
            pair = SylPair(s1, s2)
            if properly_coupled(pair):
                out.append(pair)
    return out
