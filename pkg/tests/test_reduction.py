import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import (
    H2_RECIPROCAL_PATHS,
    H1,
    H2,
    H2_RECIPROCAL,
    H2_RECIPROCAL_REDUCED,
    S_113,
    S_113_REDUCED,
    S_243,
    S_243_REDUCED,
    S_555,
    S_555_REDUCED,
    ZETA_REVERSED,
)
from test_poly import poly_matrices
from ocl_forge.errors import AdvanceUnderflow, DegenerateMatrix, WidthMismatch
from ocl_forge.poly import BitSymbolSequence, Gf2PolyMatrix, convolve_syndrome, line_valuation
from ocl_forge.qc import ExponentMatrix, exponent_to_poly
from ocl_forge.reduction import (
    ShiftLedger,
    apply_ledger,
    double_reduce,
    ocl,
    reciprocal,
    reciprocal_then_reduce,
    reduce,
)


def test_reduce_s113():
    R = reduce(S_113)
    assert [list(r) for r in R.matrix.exps] == S_113_REDUCED
    assert R.ledger.col_delays == (0, 1, 0, 4, 13)
    assert R.ledger.row_delays == (0, 0, 0)
    assert R.ocl == 36


def test_reduce_s243_and_s555():
    R = reduce(S_243)
    assert [list(r) for r in R.matrix.exps] == S_243_REDUCED
    assert R.ledger.col_delays == (18, 0, 0, 0, 9)
    assert R.ocl == 35
    R = reduce(S_555)
    assert [list(r) for r in R.matrix.exps] == S_555_REDUCED
    assert R.ocl == 35


def test_reduce_p1_q1_r1():
    # column minima (0,1,3,4,3) by hand; row maxima 12 + 12 + 24
    S = ExponentMatrix(31, [[0, 1, 3, 7, 15], [0, 5, 15, 4, 13], [0, 25, 13, 20, 3]])
    assert reduce(S).ocl == 48


def test_reduce_already_reduced():
    R = reduce(ExponentMatrix(31, S_113_REDUCED))
    assert R.ledger.is_zero
    assert [list(r) for r in R.matrix.exps] == S_113_REDUCED


def test_reduce_poly_and_exponent_agree():
    for S in (S_113, S_243, S_555):
        R_exp = reduce(S)
        R_poly = reduce(exponent_to_poly(S))
        assert R_poly.matrix == exponent_to_poly(R_exp.matrix)
        assert R_poly.ledger == R_exp.ledger


def test_reduce_runs_row_pass_first():
    M = Gf2PolyMatrix.from_strings([["D^2", "D^3"], ["D", "D^4"]])
    R = reduce(M)
    assert R.ledger.row_delays == (2, 1)
    assert R.ledger.col_delays == (0, 1)
    assert R.matrix == Gf2PolyMatrix.from_strings([["1", "1"], ["1", "D^2"]])


def test_reduce_needs_several_passes():
    # the column pass frees a factor in row 2 that the first row pass could not see
    M = Gf2PolyMatrix.from_strings([["1", "D"], ["D^2", "D+D^3"]])
    R = reduce(M)
    assert line_valuation(R.matrix.entries[1]) == 0
    assert R.ledger.row_delays == (0, 1)
    assert all(line_valuation(R.matrix.column(j)) == 0 for j in range(2))


def test_reduce_rejects_zero_column():
    with pytest.raises(DegenerateMatrix):
        reduce(Gf2PolyMatrix.from_strings([["1", "0"], ["D", "0"]]))


def test_h1_chain():
    R = reduce(reciprocal(H1))
    assert R.ledger.col_delays == (0, 0, 2)
    assert R.ocl == 2
    assert reduce(H1).ocl == 4


def test_reciprocal_then_reduce_h2():
    R = reciprocal_then_reduce(H2)
    assert R.matrix == H2_RECIPROCAL_REDUCED
    assert R.ledger.reversed
    assert R.ledger.col_delays == (0, 0, 1)
    assert R.ocl == 1
    const = Gf2PolyMatrix.from_strings([["1", "1"], ["0", "1"]])
    assert reciprocal_then_reduce(const).matrix == const


def test_double_reduce_symmetric_profile():
    M = ExponentMatrix(31, [[0, 3, 6], [6, 3, 0]])
    mu, mu_prime, final = double_reduce(M)
    assert mu == mu_prime
    assert final.ledger.reversed


def test_exponent_reciprocal_matches_poly():
    for S in (S_113, S_243, S_555):
        assert exponent_to_poly(reciprocal(S)) == reciprocal(exponent_to_poly(S))


def exponent_matrices():
    return st.integers(1, 4).flatmap(
        lambda r: st.integers(1, 5).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, 30), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(lambda g: ExponentMatrix(31, g))


@settings(max_examples=300)
@given(exponent_matrices())
def test_reduce_idempotent_and_monotone_exponents(S):
    R = reduce(S)
    assert reduce(R.matrix).matrix == R.matrix
    assert reduce(R.matrix).ledger.is_zero
    assert R.ocl <= ocl(S)
    assert all(min(row) == 0 for row in R.matrix.exps)
    assert all(min(c) == 0 for c in zip(*R.matrix.exps))


@settings(max_examples=300)
@given(poly_matrices())
def test_reduce_idempotent_and_monotone_polys(M):
    assume(all(line_valuation(M.column(j)) is not None for j in range(M.cols)))
    R = reduce(M)
    assert reduce(R.matrix).matrix == R.matrix
    assert R.ocl <= ocl(M)


@settings(max_examples=200)
@given(exponent_matrices())
def test_zero_survival(S):
    rows = [[x - min(row) for x in row] for row in S.exps]
    R = reduce(ExponentMatrix(31, rows))
    assert R.ledger.row_delays == (0,) * len(rows)
    assert all(0 in row for row in R.matrix.exps)


def _random_seq(rng, width, T):
    return BitSymbolSequence(width, [tuple(rng.randint(0, 1) for _ in range(width)) for _ in range(T)])


def _check_equivalence(M, e):
    R = reduce(M)
    e_red = apply_ledger(R.ledger, e, "error", "to_reduced")
    zeta_red = convolve_syndrome(R.matrix, e_red)
    return apply_ledger(R.ledger, zeta_red, "syndrome", "to_original") == convolve_syndrome(M, e)


@settings(max_examples=300)
@given(poly_matrices(max_bits=6), st.data())
def test_ledger_syndrome_equivalence(M, data):
    assume(all(line_valuation(M.column(j)) is not None for j in range(M.cols)))
    T = data.draw(st.integers(0, 12))
    sym = st.tuples(*[st.integers(0, 1)] * M.cols)
    e = BitSymbolSequence(M.cols, data.draw(st.lists(sym, min_size=T, max_size=T)))
    assert _check_equivalence(M, e)


def test_ledger_equivalence_on_pattern_113():
    rng = random.Random(11)
    M = exponent_to_poly(S_113)
    for _ in range(30):
        assert _check_equivalence(M, _random_seq(rng, 5, rng.randint(1, 40)))


def test_apply_ledger_zero_is_identity():
    L = ShiftLedger.zero(2, 3)
    zeta = BitSymbolSequence.parse("01 10 01")
    assert apply_ledger(L, zeta, "syndrome", "to_original") == zeta
    assert apply_ledger(L, zeta, "syndrome", "to_reduced") == zeta


def test_apply_ledger_round_trip_and_underflow():
    L = ShiftLedger((1, 0), (0, 2, 0))
    e = BitSymbolSequence.parse("111 010 101 000 000")
    there = apply_ledger(L, e, "error", "to_reduced")
    assert str(there) == "101 000 111 010 000"
    assert apply_ledger(L, there, "error", "to_original") == e
    with pytest.raises(AdvanceUnderflow):
        apply_ledger(L, e, "error", "to_original")
    with pytest.raises(WidthMismatch):
        apply_ledger(L, e, "syndrome", "to_original")


def test_reversed_ledger_maps_reciprocal_paths():
    # every reciprocal-trellis path, delayed in column 3, is admissible for the reduced reciprocal matrix
    R = reduce(H2_RECIPROCAL)
    assert R.matrix == H2_RECIPROCAL_REDUCED
    for text in H2_RECIPROCAL_PATHS:
        e = BitSymbolSequence.parse(text)
        e_red = apply_ledger(R.ledger, e, "error", "to_reduced")
        assert convolve_syndrome(H2_RECIPROCAL, e) == ZETA_REVERSED
        assert convolve_syndrome(R.matrix, e_red) == ZETA_REVERSED
