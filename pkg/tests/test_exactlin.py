import random

import pytest
from gmpy2 import mpq

from gkf2 import exactlin
from gkf2.exactlin import (
    DimensionMismatch,
    NotInSpan,
    SparseMatrix,
    SparseVector,
    kernel_basis,
    matmul,
    matrix_from_text,
    matrix_to_text,
    rank,
    solve_in_span,
    vector_from_text,
    vector_to_text,
)

from helpers import GOLDEN_A_W8, GOLDEN_B_W8, dense_rank_of


def random_matrix(rng, n_rows, n_cols, density=0.4, scale=9):
    ent = {}
    for r in range(n_rows):
        for c in range(n_cols):
            if rng.random() < density:
                num = rng.randint(-scale, scale)
                den = rng.randint(1, 4)
                if num:
                    ent[(r, c)] = mpq(num, den)
    return SparseMatrix(n_rows, n_cols, ent)


class TestRank:
    def test_golden_b_row(self):
        assert rank(SparseMatrix.from_dense(GOLDEN_B_W8)) == 1

    def test_zero_matrix(self):
        assert rank(SparseMatrix(3, 3)) == 0

    def test_golden_a(self):
        a = SparseMatrix.from_dense(GOLDEN_A_W8)
        assert rank(a) == 4

    def test_empty_shapes(self):
        assert rank(SparseMatrix(0, 5)) == 0
        assert rank(SparseMatrix(5, 0)) == 0

    def test_matches_dense_oracle(self):
        rng = random.Random(20240811)
        for trial in range(40):
            n_rows = rng.randint(1, 12)
            n_cols = rng.randint(1, 12)
            m = random_matrix(rng, n_rows, n_cols, density=rng.choice([0.2, 0.5, 0.9]))
            assert rank(m) == dense_rank_of(m)

    def test_matches_dense_oracle_50x50(self):
        rng = random.Random(7)
        m = random_matrix(rng, 50, 50, density=0.15)
        assert rank(m) == dense_rank_of(m)

    def test_rank_of_transpose(self):
        rng = random.Random(99)
        for _ in range(15):
            m = random_matrix(rng, rng.randint(1, 10), rng.randint(1, 10))
            assert rank(m) == rank(m.transpose())

    def test_certified_path_matches_direct(self):
        # force the modular route by shrinking the thresholds
        rng = random.Random(5150)
        m = random_matrix(rng, 30, 26, density=0.5)
        expected = dense_rank_of(m)
        assert rank(m) == expected
        old = exactlin._BAREISS_MAX_DIM, exactlin._RREF_EXACT_MAX_COLS
        exactlin._BAREISS_MAX_DIM = 0
        exactlin._RREF_EXACT_MAX_COLS = 0
        try:
            assert rank(m) == expected
            assert kernel_basis(m) == _with_thresholds_restored(old, m)
        finally:
            exactlin._BAREISS_MAX_DIM, exactlin._RREF_EXACT_MAX_COLS = old

    def test_modular_rank_is_lower_bound(self):
        rng = random.Random(321)
        for _ in range(10):
            m = random_matrix(rng, rng.randint(1, 10), rng.randint(1, 10))
            rows_int = exactlin._integer_rows(m)
            for p in exactlin._PRIMES[:3]:
                pivots, _ = exactlin._dense_mod_rref(rows_int, m.n_cols, p)
                assert len(pivots) <= rank(m)


def _with_thresholds_restored(old, m):
    cur = exactlin._BAREISS_MAX_DIM, exactlin._RREF_EXACT_MAX_COLS
    exactlin._BAREISS_MAX_DIM, exactlin._RREF_EXACT_MAX_COLS = old
    try:
        return kernel_basis(m)
    finally:
        exactlin._BAREISS_MAX_DIM, exactlin._RREF_EXACT_MAX_COLS = cur


class TestKernel:
    def test_identity_has_no_kernel(self):
        assert kernel_basis(SparseMatrix.identity(4)) == []

    def test_zero_row_matrix(self):
        vectors = kernel_basis(SparseMatrix(1, 3))
        assert vectors == [SparseVector(3, {i: 1}) for i in range(3)]

    def test_weight6_invariance_system(self):
        # X acting on the H-weight-0 monomials of the wedge square of the
        # 6-dimensional irreducible: rows are the weight-2 monomials.
        m = SparseMatrix.from_dense([[5, 1, 0], [0, 4, 2]])
        (v,) = kernel_basis(m)
        assert v.entries[2] == 1  # pivot coordinate of the free column
        assert v == SparseVector(3, {0: mpq(1, 10), 1: mpq(-1, 2), 2: 1})

    def test_kernel_properties(self):
        rng = random.Random(42)
        for _ in range(30):
            m = random_matrix(rng, rng.randint(1, 10), rng.randint(1, 10),
                              density=rng.choice([0.25, 0.6]))
            vectors = kernel_basis(m)
            assert len(vectors) == m.n_cols - rank(m)
            free = sorted(v_free for v in vectors
                          for v_free, val in v.entries.items() if val == 1)
            for v in vectors:
                assert m.mul_vector(v).is_zero()
            # reduced normal form: each vector is 1 at its own free column
            # and 0 at the free columns of all the others
            pivot_cols = []
            for v in vectors:
                mine = [c for c in v.entries
                        if all(c not in w.entries for w in vectors if w is not v)]
                assert any(v.entries[c] == 1 for c in mine)

    def test_normal_form_is_canonical_under_row_scaling(self):
        rng = random.Random(17)
        m = random_matrix(rng, 6, 9, density=0.5)
        scaled = SparseMatrix(6, 9, {(r, c): v * mpq(2 * r + 1, 3)
                                     for (r, c), v in m.entries.items()})
        assert kernel_basis(m) == kernel_basis(scaled)


class TestSolveInSpan:
    def test_standard_basis(self):
        e1 = SparseVector(3, {0: 1})
        e2 = SparseVector(3, {1: 1})
        target = SparseVector(3, {0: 3, 1: -1})
        assert solve_in_span([e1, e2], target) == [3, -1]

    def test_not_in_span(self):
        e1 = SparseVector(2, {0: 1})
        with pytest.raises(NotInSpan):
            solve_in_span([e1], SparseVector(2, {1: 1}))

    def test_pivot_fast_path(self):
        b1 = SparseVector(4, {0: 1, 2: mpq(1, 3)})
        b2 = SparseVector(4, {1: 1, 2: -2})
        target = SparseVector(4, {0: 2, 1: 5, 2: mpq(2, 3) - 10})
        assert solve_in_span([b1, b2], target, pivots=[0, 1]) == [2, 5]
        bad = SparseVector(4, {0: 2, 1: 5, 2: 99})
        with pytest.raises(NotInSpan):
            solve_in_span([b1, b2], bad, pivots=[0, 1])

    def test_recombination_roundtrip(self):
        rng = random.Random(8)
        for _ in range(20):
            dim = rng.randint(2, 9)
            k = rng.randint(1, dim)
            basis = kernel_basis(random_matrix(rng, rng.randint(1, dim), dim))
            if not basis:
                continue
            coeffs = [mpq(rng.randint(-5, 5), rng.randint(1, 3)) for _ in basis]
            acc = {}
            for c, b in zip(coeffs, basis):
                for i, v in b.entries.items():
                    acc[i] = acc.get(i, mpq(0)) + c * v
            target = SparseVector(dim, {i: v for i, v in acc.items() if v})
            assert solve_in_span(basis, target) == coeffs

    def test_dependent_basis_rejected(self):
        v = SparseVector(2, {0: 1, 1: 2})
        w = SparseVector(2, {0: 2, 1: 4})
        with pytest.raises(ValueError):
            solve_in_span([v, w], SparseVector(2, {0: 1, 1: 2}))


class TestMatmul:
    def test_golden_ba_vanishes(self):
        a = SparseMatrix.from_dense(GOLDEN_A_W8)
        b = SparseMatrix.from_dense(GOLDEN_B_W8)
        prod = matmul(b, a)
        assert prod.n_rows == 1 and prod.n_cols == 4
        assert prod.nnz == 0

    def test_identity(self):
        rng = random.Random(3)
        m = random_matrix(rng, 4, 6)
        assert matmul(SparseMatrix.identity(4), m) == m

    def test_zero(self):
        rng = random.Random(4)
        m = random_matrix(rng, 4, 6)
        z = SparseMatrix(6, 2)
        assert matmul(m, z).nnz == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            matmul(SparseMatrix(2, 3), SparseMatrix(2, 3))


class TestSerialization:
    def test_matrix_roundtrip(self):
        rng = random.Random(11)
        m = random_matrix(rng, 5, 7)
        text = matrix_to_text(m)
        header = text.splitlines()[0].split()
        assert header == ["5", "7", str(m.nnz)]
        assert matrix_from_text(text) == m

    def test_vector_roundtrip(self):
        v = SparseVector(6, {0: mpq(-2, 3), 5: 4})
        assert vector_from_text(vector_to_text(v)) == v

    def test_truncated_matrix_rejected(self):
        rng = random.Random(12)
        m = random_matrix(rng, 3, 3, density=0.9)
        text = matrix_to_text(m)
        lines = text.splitlines()
        with pytest.raises(ValueError):
            matrix_from_text("\n".join(lines[:-1]))


class TestInvariants:
    def test_stored_zeros_dropped(self):
        m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): 5})
        assert m.nnz == 1
        v = SparseVector(2, {0: 0, 1: mpq(2, 4)})
        assert v.entries == {1: mpq(1, 2)}

    def test_lowest_terms(self):
        q = mpq(6, -4)
        assert q.numerator == -3 and q.denominator == 2

    def test_out_of_bounds_rejected(self):
        with pytest.raises(IndexError):
            SparseMatrix(2, 2, {(2, 0): 1})
        with pytest.raises(IndexError):
            SparseVector(2, {2: 1})
