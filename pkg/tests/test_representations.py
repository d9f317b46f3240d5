import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from cisres.errors import (DimensionError, EnumerationLimitError, ParseError,
                           PreconditionError)
from cisres.representations import (BoolMatrix, SylPair, TermExponent, Trace, adj_col_sum,
                                    adj_row_sum, all_matrices, col_sum, complement,
                                    enumerate_res_reps, enumerate_syl_reps, flush_pair,
                                    flushed_from_col_sums, is_bottom_left_flushed, is_res_rep,
                                    is_sorted_flushed, is_sorted_pair, is_syl_rep,
                                    normalize_term, permute_res_rep, permute_syl_rep,
                                    properly_coupled, res_from_syl, row_sum, sort_pair,
                                    syl_from_res, term_of_res, term_of_syl, to_res_rep,
                                    to_syl_rep)

from worked import (FLUSH_OUTPUT, FLUSH_ROUND1, FLUSH_SWAPS, FLUSHED_OUT, NOTATION_M,
                    RES_INPUT, SMALL_RES, SMALL_SYL, SMALL_TERM, SORT_INPUT, SORT_OUTPUT,
                    SORT_SWAPS, TERM_54, mat, pair)


def _sorted_nu(t):
    return list(t.nu) == sorted(t.nu, reverse=True)


def all_syl_reps(m, n):
    mats = list(all_matrices(m, n))
    for s1 in mats:
        for s2 in mats:
            p = SylPair(s1, s2)
            if properly_coupled(p):
                yield p


# --- notation ------------------------------------------------------------

def test_notation_example():
    M = NOTATION_M
    assert row_sum(M) == (3, 2, 2, 1)
    assert col_sum(M) == (2, 3, 3)
    assert adj_row_sum(M) == (4, 4, 5, 5)
    assert adj_col_sum(M) == (3, 5, 6)
    assert row_sum(complement(M)) == (0, 1, 1, 2)


def test_trivial_sums():
    z, o = BoolMatrix.zeros(3, 2), BoolMatrix.ones(3, 2)
    assert complement(o) == z
    assert adj_row_sum(z) == (1, 2, 3)
    assert col_sum(o) == (3, 3) and adj_col_sum(o) == (4, 5)


def test_parse_forms():
    assert BoolMatrix.parse("1 0 1\n0 1 1  # note\n") == mat("101", "011")
    assert BoolMatrix.parse("# header\n101\n011") == mat("101", "011")
    for bad in ("", "12\n01", "10\n1"):
        with pytest.raises(ParseError):
            BoolMatrix.parse(bad)
    with pytest.raises(DimensionError):
        BoolMatrix(((1, 2),))
    assert str(mat("10", "01")) == "1 0\n0 1"


# --- predicates ----------------------------------------------------------

def test_res_rep_examples():
    for M in SMALL_RES:
        assert is_res_rep(M, SMALL_TERM)
    assert not is_res_rep(BoolMatrix.ones(3, 2), SMALL_TERM)
    with pytest.raises(DimensionError):
        is_res_rep(BoolMatrix.ones(2, 2), SMALL_TERM)


def test_pc_examples():
    p = SMALL_SYL[0]
    assert sorted(adj_col_sum(p.s1) + adj_row_sum(p.s2)) == [1, 2, 3, 4, 5]
    assert properly_coupled(p)
    assert not properly_coupled(SylPair(BoolMatrix.zeros(3, 2), BoolMatrix.zeros(3, 2)))


def test_syl_rep_examples():
    for p in SMALL_SYL:
        assert is_syl_rep(p, SMALL_TERM)
    # flip one bit of S2 keeping column sums: the coupling breaks
    broken = pair(("11", "01", "01"), ("10", "00", "01"))
    assert col_sum(broken.s2) == SMALL_TERM.nu and row_sum(broken.s1) == SMALL_TERM.mu
    assert not is_syl_rep(broken, SMALL_TERM)
    with pytest.raises(DimensionError):
        SylPair(BoolMatrix.zeros(2, 2), BoolMatrix.zeros(3, 2))


def test_flushed_examples():
    F = flushed_from_col_sums((4, 2, 2, 1, 0), 6)
    assert F == mat("00000", "00000", "10000", "10000", "11100", "11110")
    assert is_bottom_left_flushed(F)
    assert flushed_from_col_sums((2, 2, 2, 1), 5) == FLUSHED_OUT
    assert flushed_from_col_sums((0, 0), 3) == BoolMatrix.zeros(3, 2)
    assert is_bottom_left_flushed(BoolMatrix.zeros(2, 2))
    assert is_bottom_left_flushed(BoolMatrix.ones(2, 2))
    assert not is_bottom_left_flushed(mat("10", "01"))


def test_flushed_errors():
    with pytest.raises(PreconditionError) as exc:
        flushed_from_col_sums((1, 2), 3)
    assert exc.value.predicate == "column-sums-non-increasing"
    with pytest.raises(PreconditionError):
        flushed_from_col_sums((4,), 3)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 2), (3, 3)])
def test_flushed_is_unique(m, n):
    found = [M for M in all_matrices(m, n) if is_bottom_left_flushed(M)]
    assert len({col_sum(M) for M in found}) == len(found)
    assert {col_sum(M) for M in found} == {c for c in itertools.product(range(m + 1), repeat=n)
                                           if list(c) == sorted(c, reverse=True)}
    for M in found:
        assert flushed_from_col_sums(col_sum(M), m) == M


# --- worked traces -------------------------------------------------------

def test_syl_from_res_trace():
    tr = Trace(snapshots=True)
    out = syl_from_res(RES_INPUT, tr)
    assert out == SylPair(RES_INPUT, FLUSHED_OUT)
    assert str(tr) == "c = [3,3,3,4]\nF =\n0 0 0 0\n0 0 0 0\n0 0 0 0\n1 1 1 0\n1 1 1 1"
    assert is_sorted_flushed(out) and is_syl_rep(out, TERM_54)


def test_sort_trace():
    assert adj_col_sum(SORT_INPUT.s1) == (2, 6, 8, 7)
    tr = Trace()
    out = sort_pair(SORT_INPUT, tr)
    assert out == SORT_OUTPUT
    assert adj_col_sum(out.s1) == (2, 6, 7, 8)
    assert adj_row_sum(out.s2) == (1, 3, 4, 5, 9)
    assert tr.lines == SORT_SWAPS


def test_flush_trace():
    tr = Trace(snapshots=True)
    out = flush_pair(SORT_OUTPUT, tr)
    assert out == FLUSH_OUTPUT
    swaps = [line for line in tr.lines if line.startswith("SWAP")]
    assert swaps == FLUSH_SWAPS
    assert tr.loops["flush"] == 2
    # snapshot after the third swap is the state at the end of round one
    third = tr.lines.index(FLUSH_SWAPS[2])
    s1_rows = tr.lines[third + 2:third + 7]
    assert [r.replace(" ", "") for r in s1_rows] == ["".join(map(str, r))
                                                    for r in FLUSH_ROUND1.s1.rows]
    second = tr.lines.index(FLUSH_SWAPS[1])
    s2_rows = tr.lines[second + 2:second + 7]
    assert [r.replace(" ", "") for r in s2_rows] == ["".join(map(str, r))
                                                    for r in FLUSH_ROUND1.s2.rows]


def test_res_from_syl_trace():
    tr = Trace()
    out = res_from_syl(SORT_INPUT, tr)
    assert out == RES_INPUT
    assert tr.lines == SORT_SWAPS + FLUSH_SWAPS
    assert is_res_rep(out, TERM_54)


def test_idempotent_on_finished_input():
    assert sort_pair(SORT_OUTPUT) == SORT_OUTPUT
    assert flush_pair(FLUSH_OUTPUT) == FLUSH_OUTPUT
    assert res_from_syl(FLUSH_OUTPUT) == FLUSH_OUTPUT.s1


def test_all_ones():
    out = syl_from_res(BoolMatrix.ones(3, 2))
    assert out.s2 == BoolMatrix.zeros(3, 2)


# --- preconditions -------------------------------------------------------

def test_preconditions_are_named():
    with pytest.raises(PreconditionError) as exc:
        syl_from_res(mat("10", "10"))
    assert exc.value.predicate == "nu-non-increasing"
    not_pc = SylPair(BoolMatrix.zeros(3, 2), BoolMatrix.zeros(3, 2))
    for fn in (sort_pair, flush_pair, res_from_syl):
        with pytest.raises(PreconditionError) as exc:
            fn(not_pc)
        assert exc.value.predicate == "properly-coupled"
    with pytest.raises(PreconditionError) as exc:
        flush_pair(SORT_INPUT)
    assert exc.value.predicate == "sorted"


# --- normalization -------------------------------------------------------

def test_normalize_examples():
    t, sa, sb = normalize_term(TermExponent((1, 3, 2), (0, 2)))
    assert t.mu == (3, 2, 1) and sa == (1, 2, 0)
    assert t.nu == (2, 0) and sb == (1, 0)
    t, sa, sb = normalize_term(SMALL_TERM)
    assert t == SMALL_TERM and sa == (0, 1, 2) and sb == (0, 1)


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_permutations_map_representations(m, n):
    for M in all_matrices(m, n):
        t = term_of_res(M)
        ts, sa, sb = normalize_term(t)
        for R in enumerate_res_reps(ts):
            assert is_res_rep(permute_res_rep(R, sa, sb), t)
        for p in enumerate_syl_reps(ts):
            assert is_syl_rep(permute_syl_rep(p, sa, sb), t)


# --- enumeration ---------------------------------------------------------

def test_enumeration_of_small_term():
    res = enumerate_res_reps(SMALL_TERM)
    syl = enumerate_syl_reps(SMALL_TERM)
    assert len(res) == 2 and len(syl) == 6
    assert set(res) == set(SMALL_RES)
    assert set(syl) == set(SMALL_SYL)


def test_enumeration_edge_cases():
    assert enumerate_res_reps(TermExponent((1, 1), (1, 0))) == []
    assert enumerate_syl_reps(TermExponent((2, 2), (2, 2))) == []
    with pytest.raises(EnumerationLimitError):
        enumerate_res_reps(TermExponent((0,) * 4, (4,) * 4))
    with pytest.raises(EnumerationLimitError):
        enumerate_syl_reps(TermExponent((0,) * 4, (3,) * 3))


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_enumeration_matches_brute_force(m, n):
    by_term = {}
    for M in all_matrices(m, n):
        by_term.setdefault(term_of_res(M), set()).add(M)
    for t, mats in by_term.items():
        assert set(enumerate_res_reps(t)) == mats
    syl_by_term = {}
    for p in all_syl_reps(m, n):
        syl_by_term.setdefault(term_of_syl(p), set()).add(p)
    for t, pairs in syl_by_term.items():
        assert set(enumerate_syl_reps(t)) == pairs
    assert set(syl_by_term) == set(by_term)


# --- exhaustive algorithm properties -------------------------------------

SIZES = [(m, n) for m in range(1, 4) for n in range(1, 4)]


@pytest.mark.parametrize("m,n", SIZES)
def test_sort_and_flush_exhaustive(m, n):
    bound = (m * n) ** 2
    for p in all_syl_reps(m, n):
        t = term_of_syl(p)
        tr = Trace()
        q = sort_pair(p, tr)
        assert is_sorted_pair(q) and is_syl_rep(q, t)
        if _sorted_nu(t):
            f = flush_pair(q, tr)
            assert is_sorted_flushed(f) and is_syl_rep(f, t)
        assert all(v <= bound for v in tr.loops.values())


@pytest.mark.parametrize("m,n", SIZES)
def test_round_trips_exhaustive(m, n):
    for M in all_matrices(m, n):
        t = term_of_res(M)
        if _sorted_nu(t):
            p = syl_from_res(M)
            assert is_sorted_flushed(p) and is_syl_rep(p, t)
            assert is_res_rep(res_from_syl(p), t)
        assert is_res_rep(to_res_rep(to_syl_rep(M)), t)
    for p in all_syl_reps(m, n):
        t = term_of_syl(p)
        assert is_syl_rep(to_syl_rep(to_res_rep(p)), t)


@st.composite
def res_reps(draw):
    m, n = draw(st.integers(1, 5)), draw(st.integers(1, 5))
    bits = draw(st.lists(st.integers(0, 1), min_size=m * n, max_size=m * n))
    return BoolMatrix(tuple(tuple(bits[i * n:(i + 1) * n]) for i in range(m)))


@settings(max_examples=200, deadline=None)
@given(res_reps(), st.randoms(use_true_random=False))
def test_round_trip_larger_random(M, rnd):
    """Scramble a syl-rep by coupling-preserving row/column moves, then map back."""
    t = term_of_res(M)
    p = to_syl_rep(M)
    assert is_syl_rep(p, t)
    back = to_res_rep(p)
    assert is_res_rep(back, t)
    # swapping two S2 columns changes nu but keeps coupling: still a valid syl-rep
    if p.n > 1:
        i, j = rnd.sample(range(p.n), 2)
        cols = list(range(p.n))
        cols[i], cols[j] = cols[j], cols[i]
        q = SylPair(p.s1, BoolMatrix(tuple(tuple(r[k] for k in cols) for r in p.s2.rows)))
        assert properly_coupled(q)
        assert is_res_rep(to_res_rep(q), term_of_syl(q))
