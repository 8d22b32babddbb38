"""Exact integer linear algebra against the sympy oracle."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix as SymMatrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from kh.snf import IntMatrix, kernel_basis, smith_normal_form, solve


def _random_matrix(rng, nrows, ncols, lo=-9, hi=9, density=0.7):
    entries = {}
    for r in range(nrows):
        for c in range(ncols):
            if rng.random() < density:
                v = rng.randint(lo, hi)
                if v:
                    entries[(r, c)] = v
    return IntMatrix(nrows, ncols, entries)


def _sympy_divisors(M):
    if M.nrows == 0 or M.ncols == 0:
        return ()
    D = sympy_snf(SymMatrix(M.to_rows()))
    diag = [abs(D[i, i]) for i in range(min(M.nrows, M.ncols))]
    return tuple(int(d) for d in diag if d != 0)


def test_constructor_rejects_out_of_range_entries():
    try:
        IntMatrix(2, 2, {(2, 0): 1})
    except IndexError:
        pass
    else:
        raise AssertionError("entry outside the shape was accepted")


def test_from_rows_roundtrip():
    rows = [[1, -2, 0], [0, 3, 7]]
    M = IntMatrix.from_rows(rows)
    assert (M.nrows, M.ncols) == (2, 3)
    assert M.to_rows() == rows


def test_matmul_against_sympy():
    rng = random.Random(20)
    for _ in range(25):
        A = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        B = _random_matrix(rng, A.ncols, rng.randint(1, 5))
        want = SymMatrix(A.to_rows()) * SymMatrix(B.to_rows())
        assert (A @ B).to_rows() == want.tolist()


def test_smith_anchors():
    assert smith_normal_form(IntMatrix.zero(3, 2)) == ((), 0)
    assert smith_normal_form(IntMatrix.identity(3)) == ((1, 1, 1), 3)
    M = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert smith_normal_form(M) == ((1, 6), 2)
    # the classic 2 4 4 / -6 6 12 / 10 4 16 example has divisors 2, 2, 156
    M = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert smith_normal_form(M) == ((2, 2, 156), 3)


def test_smith_matches_sympy_on_random_matrices():
    rng = random.Random(21)
    for _ in range(60):
        M = _random_matrix(rng, rng.randint(0, 6), rng.randint(0, 6))
        divisors, rank = smith_normal_form(M)
        assert divisors == _sympy_divisors(M)
        assert rank == len(divisors)
        for a, b in zip(divisors, divisors[1:]):
            assert b % a == 0


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=5),
        min_size=1,
        max_size=5,
    ).filter(lambda rows: len({len(r) for r in rows}) == 1)
)
def test_smith_matches_sympy_property(rows):
    M = IntMatrix.from_rows(rows)
    divisors, rank = smith_normal_form(M)
    assert divisors == _sympy_divisors(M)
    assert rank == int(SymMatrix(rows).rank())


def test_kernel_vectors_annihilate_and_have_full_rank():
    rng = random.Random(22)
    for _ in range(40):
        M = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        basis = kernel_basis(M)
        _, rank = smith_normal_form(M)
        assert len(basis) == M.ncols - rank
        for vec in basis:
            assert all(
                sum(M.get(r, c) * vec[c] for c in range(M.ncols)) == 0
                for r in range(M.nrows)
            )
        if basis:
            K = IntMatrix.from_rows([list(v) for v in zip(*basis)])
            _, krank = smith_normal_form(K)
            assert krank == len(basis)


def test_kernel_lattice_is_saturated():
    # x + 2y = 0 has primitive kernel (2, -1); the non-primitive (4, -2)
    # generates an index-2 sublattice and must not be what comes back
    M = IntMatrix.from_rows([[1, 2]])
    (vec,) = kernel_basis(M)
    assert vec in ((2, -1), (-2, 1))


def test_solve_finds_exact_solutions():
    rng = random.Random(23)
    solved = 0
    for _ in range(40):
        M = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        x = tuple(rng.randint(-4, 4) for _ in range(M.ncols))
        b = M.apply(x)
        got = solve(M, b)
        assert got is not None
        assert M.apply(got) == tuple(b)
        solved += 1
    assert solved == 40


def test_solve_detects_unsolvable_systems():
    M = IntMatrix.from_rows([[2]])
    assert solve(M, (1,)) is None
    M = IntMatrix.from_rows([[1], [1]])
    assert solve(M, (0, 1)) is None
