import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from colorkernel.field import (
    FieldError,
    FieldMismatch,
    Matrix,
    NotSquare,
    PrimeField,
    Singular,
    ZeroInverse,
    ff_inverse,
    mat_determinant,
    row_reduce,
    solve_unique,
)
from colorkernel.palette import construct_palette, truncated_system

GF3 = PrimeField(3)


def cofactor_det(rows, p):
    """Independent oracle: Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor, p)
    return total % p


def leibniz_det(rows, p):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inversions
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total % p


def random_matrix(rng, F, n, m=None):
    m = n if m is None else m
    return Matrix.from_rows(F, [[rng.randrange(F.p) for _ in range(m)] for _ in range(n)])


class TestPrimeField:
    def test_rejects_composite(self):
        with pytest.raises(FieldError):
            PrimeField(9)

    @pytest.mark.parametrize("p", [0, 1, 2**31])
    def test_rejects_out_of_range(self, p):
        with pytest.raises(FieldError):
            PrimeField(p)

    def test_large_prime_accepted(self):
        assert PrimeField(2**31 - 1).p == 2**31 - 1

    def test_default_is_gf3(self):
        assert PrimeField().p == 3


class TestInverse:
    def test_examples(self):
        assert ff_inverse(GF3(2)) == 2
        assert ff_inverse(GF3(1)) == 1
        with pytest.raises(ZeroInverse):
            ff_inverse(GF3(0))

    def test_bare_int_needs_field(self):
        assert ff_inverse(2, GF3).value == 2
        with pytest.raises(TypeError):
            ff_inverse(2)

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 101, 2**31 - 1])
    def test_involution(self, p):
        F = PrimeField(p)
        rng = random.Random(p)
        for _ in range(50):
            a = F(rng.randrange(1, p))
            assert ff_inverse(ff_inverse(a)) == a
            assert (a * ff_inverse(a)).value == 1

    def test_mixed_fields_rejected(self):
        with pytest.raises(FieldMismatch):
            GF3(1) + PrimeField(5)(1)
        with pytest.raises(FieldMismatch):
            ff_inverse(GF3(1), PrimeField(5))


def test_element_arithmetic():
    F = PrimeField(7)
    a, b = F(3), F(5)
    assert a + b == 1
    assert a - b == 5
    assert a * b == 1
    assert a / b == 2
    assert -a == 4
    assert a**6 == 1
    assert 2 * a == 6
    assert int(F(10)) == 3


class TestDeterminant:
    def test_identity(self):
        assert mat_determinant(Matrix.identity(GF3, 4)) == 1

    def test_repeated_column(self):
        M = Matrix.from_columns(GF3, [(1, 2, 0), (1, 2, 0), (0, 1, 1)])
        assert mat_determinant(M) == 0

    def test_triangular_palette_matrix(self):
        assert mat_determinant(construct_palette(4, GF3, 1).matrix()) == 1

    def test_not_square(self):
        with pytest.raises(NotSquare):
            mat_determinant(Matrix.zeros(GF3, 2, 3))

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_matches_cofactor_oracle(self, p):
        F = PrimeField(p)
        rng = random.Random(p)
        for n in range(1, 6):
            for _ in range(20):
                M = random_matrix(rng, F, n)
                assert mat_determinant(M).value == cofactor_det(M.to_rows(), p)

    def test_leibniz_and_cofactor_oracles_agree(self):
        rng = random.Random(0)
        for _ in range(20):
            rows = [[rng.randrange(5) for _ in range(4)] for _ in range(4)]
            assert leibniz_det(rows, 5) == cofactor_det(rows, 5)

    @pytest.mark.parametrize("p", [3, 5])
    def test_multiplicative(self, p):
        F = PrimeField(p)
        rng = random.Random(10 + p)
        for n in range(1, 6):
            for _ in range(10):
                A, B = random_matrix(rng, F, n), random_matrix(rng, F, n)
                assert cofactor_det((A @ B).to_rows(), p) == (mat_determinant(A) * mat_determinant(B)).value


class TestSolve:
    def test_triangular_truncated_system(self):
        D, d4 = truncated_system(construct_palette(4, GF3, 1))
        assert solve_unique(D, d4) == (2, 1, 1)

    def test_identity(self):
        assert solve_unique(Matrix.identity(GF3, 3), (2, 0, 1)) == (2, 0, 1)

    def test_singular(self):
        with pytest.raises(Singular):
            solve_unique(Matrix.from_rows(GF3, [[1, 1], [2, 2]]), (1, 2))

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_round_trip(self, p):
        F = PrimeField(p)
        rng = random.Random(p * 7)
        done = 0
        while done < 30:
            n = rng.randint(1, 6)
            A = random_matrix(rng, F, n)
            if mat_determinant(A) == 0:
                continue
            x = tuple(rng.randrange(p) for _ in range(n))
            assert solve_unique(A, A.apply(x)) == x
            done += 1


class TestRowReduce:
    def test_palette_full_rank(self):
        assert row_reduce(construct_palette(4, GF3, 1).matrix())[0] == 4

    def test_zero(self):
        rank, E = row_reduce(Matrix.zeros(GF3, 3, 4))
        assert rank == 0
        assert E == Matrix.zeros(GF3, 3, 4)

    def test_duplicate_row(self):
        assert row_reduce(Matrix.from_rows(GF3, [[1, 2, 0], [0, 1, 1], [1, 2, 0]]))[0] < 3

    @staticmethod
    def _is_rref(E):
        lead_cols = []
        for i in range(E.rows):
            row = E.row(i)
            nz = [j for j, v in enumerate(row) if v]
            if not nz:
                assert all(not any(E.row(k)) for k in range(i, E.rows))
                break
            lead = nz[0]
            assert row[lead] == 1
            assert all(E[k, lead] == 0 for k in range(E.rows) if k != i)
            lead_cols.append(lead)
        assert lead_cols == sorted(lead_cols)
        return len(lead_cols)

    @settings(max_examples=60, deadline=None)
    @given(
        p=st.sampled_from([2, 3, 5]),
        rows=st.integers(1, 5),
        cols=st.integers(1, 5),
        data=st.data(),
    )
    def test_properties(self, p, rows, cols, data):
        F = PrimeField(p)
        entries = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
                                     min_size=rows, max_size=rows))
        M = Matrix.from_rows(F, entries)
        rank, E = row_reduce(M)
        assert self._is_rref(E) == rank
        # row space preserved: stacking the echelon rows onto M adds no rank
        stacked = Matrix.from_rows(F, entries + E.to_rows())
        assert row_reduce(stacked)[0] == rank
        shuffled = data.draw(st.permutations(entries))
        assert row_reduce(Matrix.from_rows(F, shuffled))[0] == rank
