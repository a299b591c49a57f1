from itertools import product

import pytest
from hypothesis import given, strategies as st

from cycleib import GF, Q, Derivation, Element, Endo, der_bracket, endo_compose
from cycleib.errors import DimensionMismatch, MixedFields, ParseError, WindowTooSmall
from cycleib.finmat import (
    FinMatrixWindow,
    commutator,
    dump_matrix,
    matches_der_pattern,
    matches_endo_pattern,
    matmul,
    matrix_of_der,
    matrix_of_endo,
    oracle_check_der,
    oracle_check_endo,
    parse_matrix_dump,
    window_kernel,
    window_preimage,
)
from cycleib.textio import parse_element

from .conftest import ders, endos, with_field


def lower_triangular_windows(fd, N):
    """Every lower-triangular N x N window over a small prime field."""
    slots = [(r, c) for r in range(N) for c in range(r + 1)]
    for values in product(range(fd.p), repeat=len(slots)):
        rows = [[0] * N for _ in range(N)]
        for (r, c), v in zip(slots, values):
            rows[r][c] = v
        yield rows


class TestExamples:
    def test_shift_map(self):
        M = matrix_of_endo(Endo(Q, [1, 1]), 4)
        assert M.valid_cols == 3
        assert dump_matrix(M) == "1 0 0 0\n1 1 0 0\n0 1 1 0\n0 0 1 1"
        assert M.is_unit_lower_triangular()
        assert oracle_check_endo(M)

    def test_diagonal_derivation(self):
        M = matrix_of_der(Derivation(Q, [1]), 3)
        assert dump_matrix(M) == "1 0 0\n0 2 0\n0 0 3"
        assert M.valid_cols == 3
        assert oracle_check_der(M)

    def test_zero_matrix_passes_both(self):
        Z = FinMatrixWindow.from_rows(Q, [[0] * 4 for _ in range(4)])
        assert oracle_check_endo(Z) and oracle_check_der(Z)

    def test_endomorphism_matrix_is_not_a_derivation(self):
        M = matrix_of_endo(Endo(Q, [1, 1]), 5)
        assert oracle_check_endo(M) and not oracle_check_der(M)

    def test_diagonal_product(self):
        P = matmul(matrix_of_endo(Endo(Q, [2]), 3), matrix_of_endo(Endo(Q, [3]), 3))
        assert dump_matrix(P) == "  6   0   0\n  0  36   0\n  0   0 216"
        assert P.agrees(matrix_of_endo(Endo(Q, [6]), 3)) and P.valid_cols == 3

    def test_identity_is_not_a_derivation(self):
        M = FinMatrixWindow.from_rows(Q, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert oracle_check_endo(M) and not oracle_check_der(M)
        assert matches_endo_pattern(M) and not matches_der_pattern(M)

    def test_window_too_small(self):
        with pytest.raises(WindowTooSmall):
            matrix_of_endo(Endo(Q, [1, 0, 0, 1]), 3)
        with pytest.raises(WindowTooSmall):
            oracle_check_endo(matrix_of_endo(Endo(Q, [1, 0, 1]), 3))
        with pytest.raises(WindowTooSmall):
            oracle_check_endo(matrix_of_endo(Endo(Q, [1]), 4), margin=0)

    def test_margin_shrinks_the_safe_window(self):
        M = matrix_of_endo(Endo(Q, [1, 1]), 4)
        assert oracle_check_endo(M, margin=2)
        with pytest.raises(WindowTooSmall):
            oracle_check_endo(M, margin=3)

    def test_matmul_errors(self):
        a = matrix_of_endo(Endo(Q, [1]), 3)
        with pytest.raises(DimensionMismatch):
            matmul(a, matrix_of_endo(Endo(Q, [1]), 4))
        with pytest.raises(MixedFields):
            matmul(a, matrix_of_endo(Endo(GF(5), [1]), 3))
        with pytest.raises(DimensionMismatch):
            FinMatrixWindow.from_rows(Q, [[1, 2], [3]])

    def test_apply_only_on_trusted_columns(self):
        M = matrix_of_endo(Endo(Q, [1, 1]), 4)
        assert M.apply(parse_element("a3", Q)) == parse_element("a3 + a4", Q)
        with pytest.raises(WindowTooSmall):
            M.apply(parse_element("a4", Q))

    def test_kernel(self):
        assert window_kernel(matrix_of_endo(Endo(Q, [2, 1]), 5)) == []
        ker = window_kernel(matrix_of_endo(Endo(Q, [0, 1]), 4))
        assert len(ker) == 3 and all(x.coeff(1) == 0 for x in ker)

    def test_preimage(self):
        assert window_preimage(Endo(Q, [1, 1]), Element.basis(Q, 1), 6) is None
        assert window_preimage(Endo(Q, [2]), Element.basis(Q, 1), 6) == parse_element("1/2*a1", Q)
        y = parse_element("a1 + 2*a2 + a3", Q)
        assert window_preimage(Endo(Q, [1, 1]), y, 4) == parse_element("a1 + a2", Q)


@pytest.mark.parametrize("p, N", [(2, 3), (2, 4), (3, 3)])
@pytest.mark.parametrize("valid_cols", ["full", "minus_one"])
def test_oracle_agrees_with_pattern_exhaustively(p, N, valid_cols):
    fd = GF(p)
    vc = N if valid_cols == "full" else N - 1
    if vc < 2:
        pytest.skip("no safe columns")
    endo_hits = der_hits = 0
    for rows in lower_triangular_windows(fd, N):
        M = FinMatrixWindow.from_rows(fd, rows, vc)
        e, d = oracle_check_endo(M), oracle_check_der(M)
        assert e == matches_endo_pattern(M), rows
        assert d == matches_der_pattern(M), rows
        endo_hits += e
        der_hits += d
    assert endo_hits and der_hits


def test_non_triangular_windows_fail_the_oracle():
    for rows in ([[1, 1], [0, 1]], [[0, 0, 1], [0, 0, 0], [0, 0, 0]]):
        M = FinMatrixWindow.from_rows(Q, rows)
        assert not oracle_check_endo(M) and not matches_endo_pattern(M)


@given(with_field(lambda f: st.tuples(endos(f, max_degree=4), st.integers(6, 10))))
def test_genuine_endomorphisms_pass(case):
    fd, (f, N) = case
    M = matrix_of_endo(f, N)
    assert oracle_check_endo(M) and matches_endo_pattern(M)
    assert M.is_lower_triangular()


@given(with_field(lambda f: st.tuples(ders(f, max_degree=4), st.integers(6, 10))))
def test_genuine_derivations_pass(case):
    fd, (f, N) = case
    M = matrix_of_der(f, N)
    assert oracle_check_der(M) and matches_der_pattern(M)


@given(with_field(lambda f: st.tuples(endos(f, max_degree=4), st.integers(1, 8), st.integers(2, 7), st.integers(1, 6))))
def test_mutants_fail(case):
    fd, (f, r, c, bump) = case
    N = 8
    M = matrix_of_endo(f, N)
    # column 1 is free data; any later trusted column is forced by it
    if c > M.valid_cols or bump % (fd.p or 7) == 0:
        return
    mutant = M.with_entry(r, c, fd.add(M.entries[r - 1][c - 1], fd.coerce(bump)))
    assert not matches_endo_pattern(mutant)
    assert not oracle_check_endo(mutant)


@given(with_field(lambda f: st.tuples(endos(f, max_degree=3), endos(f, max_degree=3))))
def test_product_agrees_with_composition(case):
    fd, (f, g) = case
    N = 10
    P = matmul(matrix_of_endo(f, N), matrix_of_endo(g, N))
    assert P.valid_cols >= min(N, N - max(f.degree, 1) - max(g.degree, 1) + 2)
    assert P.agrees(matrix_of_endo(endo_compose(f, g), N))


@given(with_field(lambda f: st.tuples(ders(f, max_degree=3), ders(f, max_degree=3))))
def test_commutator_agrees_with_lie_bracket(case):
    fd, (f, g) = case
    N = 10
    C = commutator(matrix_of_der(f, N), matrix_of_der(g, N))
    assert C.valid_cols >= 2
    assert C.agrees(matrix_of_der(der_bracket(f, g), N))


@given(with_field(lambda f: st.tuples(endos(f, max_degree=4), st.integers(4, 8))))
def test_dump_round_trip(case):
    fd, (f, N) = case
    M = matrix_of_endo(f, N)
    back = parse_matrix_dump(fd, "# comment\n" + dump_matrix(M), M.valid_cols)
    assert back.entries == M.entries and back.valid_cols == M.valid_cols


def test_dump_parse_error():
    with pytest.raises(ParseError):
        parse_matrix_dump(Q, "1 0\n0 x")
