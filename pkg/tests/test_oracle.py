from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import all_cyclic, all_linear
from nakayama import linalg
from nakayama.homext import cochain_dims, ext_dims, hom_dim
from nakayama.kupisch import validate
from nakayama.modrep import Indecomposable, all_modules, projective
from nakayama.oracle import (cochain_dims_oracle, ext_dim_oracle, hom_dim_oracle,
                             hom_dim_reps, rep_of, resolution)

A3 = validate("cyclic", [3])
A23 = validate("cyclic", [2, 3])


def as_ints(m):
    return [[int(x) for x in row] for row in m]


def test_rep_of_examples():
    rep = rep_of(A3, Indecomposable(0, 2))
    assert rep.dims == (2,)
    assert as_ints(rep.arrows[0]) == [[0, 0], [1, 0]]
    assert rep_of(A23, Indecomposable(1, 2)).dims == (1, 1)
    B = validate("linear", [3, 2, 1])
    rep = rep_of(B, Indecomposable(0, 3))
    assert rep.dims == (1, 1, 1) and set(rep.arrows) == {0, 1}


@pytest.mark.parametrize("A", all_cyclic(3, 6) + all_linear(5), ids=str)
def test_relations_hold(A):
    for M in all_modules(A):
        assert rep_of(A, M).check_relations()


def test_relations_detect_violation():
    rep = rep_of(A3, Indecomposable(0, 3))
    rep.arrows[0] = linalg.identity(3)
    assert not rep.check_relations()


def test_hom_oracle_examples():
    M = Indecomposable(0, 2)
    assert hom_dim_oracle(A3, M, M) == 2
    A22 = validate("cyclic", [2, 2])
    assert hom_dim_oracle(A22, Indecomposable(0, 1), Indecomposable(1, 1)) == 0
    assert hom_dim_oracle(A22, Indecomposable(1, 1), Indecomposable(0, 1)) == 0


def test_ext_oracle_examples():
    M = Indecomposable(0, 2)
    assert ext_dim_oracle(A3, M, M, 2) == 1
    assert ext_dim_oracle(A23, Indecomposable(1, 3), Indecomposable(0, 1), 1) == 0
    M = Indecomposable(1, 2)
    assert ext_dim_oracle(A23, M, M, 2) == 0
    S0 = Indecomposable(0, 1)
    assert [ext_dim_oracle(A23, S0, S0, l) for l in range(5)] == [1, 0, 1, 0, 0]


def test_resolution_terms_are_single_projectives():
    res = resolution(A23, Indecomposable(0, 1), 5)
    assert [P.tops for P in res.terms] == [[0], [1], [0]]
    assert res.finished and res.length() == 2


@pytest.mark.parametrize("A", all_cyclic(3, 6) + all_linear(5), ids=str)
def test_cochain_terms_match(A):
    # Hom(P_j, M) by the intertwiner equations versus the path count
    for N in all_modules(A):
        for M in all_modules(A):
            assert cochain_dims_oracle(A, N, M, 4) == cochain_dims(A, N, M, 4)


def test_projective_hom_is_yoneda():
    for A in all_cyclic(2, 5):
        for i in A.vertices():
            P = projective(A, i)
            for M in all_modules(A):
                assert hom_dim_oracle(A, P, M) == rep_of(A, M).dims[i]


# every pair over every cyclic algebra with n <= 3, c_i <= 8 and every linear one with n <= 6
SWEEP = all_cyclic(3, 8) + all_linear(6)


@pytest.mark.parametrize("A", SWEEP, ids=str)
def test_agreement_sweep(A):
    mods = all_modules(A)
    for N in mods:
        for M in mods:
            assert hom_dim_oracle(A, N, M) == hom_dim(A, N, M)
            dims = ext_dims(A, N, M, 8).dims
            assert tuple(ext_dim_oracle(A, N, M, l) for l in range(9)) == dims


# -- exact linear algebra, checked against sympy ------------------------------

small_int_matrix = st.integers(0, 5).flatmap(
    lambda r: st.integers(0, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                           min_size=r, max_size=r).map(lambda rows: (rows, r, c))))


def to_exact(rows, r, c):
    m = linalg.zeros(r, c)
    for i in range(r):
        for j in range(c):
            m[i, j] = Fraction(rows[i][j])
    return m


@settings(max_examples=200, deadline=None)
@given(small_int_matrix)
def test_rank_and_nullspace(data):
    rows, r, c = data
    m = to_exact(rows, r, c)
    expected = sympy.Matrix(r, c, [x for row in rows for x in row]).rank() if r and c else 0
    assert linalg.rank(m) == expected
    ns = linalg.nullspace(m)
    assert ns.shape == (c, c - expected)
    if r and ns.shape[1]:
        assert all(x == 0 for x in m.dot(ns).flat)
    assert linalg.rank(ns.T.copy()) == ns.shape[1]


@settings(max_examples=100, deadline=None)
@given(small_int_matrix, st.lists(st.integers(-2, 2), min_size=5, max_size=5))
def test_solve(data, coeffs):
    rows, r, c = data
    b = to_exact(rows, r, c)
    x = linalg.zeros(c, 1)
    for j in range(c):
        x[j, 0] = Fraction(coeffs[j])
    rhs = b.dot(x) if r else linalg.zeros(0, 1)
    sol = linalg.solve(b, rhs)
    if r:
        assert all(v == 0 for v in (b.dot(sol) - rhs).flat)


def test_solve_inconsistent():
    b = to_exact([[1, 0], [0, 0]], 2, 2)
    with pytest.raises(ValueError):
        linalg.solve(b, to_exact([[0], [1]], 2, 1))


def test_sparse_rank_matches_dense():
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = rng.integers(-2, 3, size=(6, 8))
        a[rng.random(a.shape) < 0.6] = 0
        rows = [{j: int(v) for j, v in enumerate(row) if v} for row in a]
        assert linalg.sparse_rank(rows) == sympy.Matrix(a.tolist()).rank()


def test_hom_reps_on_transposed_modules():
    # sanity: End of the regular module over K[x]/(x^3) is 3-dimensional
    P = rep_of(A3, Indecomposable(0, 3))
    assert hom_dim_reps(P, P) == 3
