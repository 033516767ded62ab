#!/usr/bin/env python3
"""
Smith normal form and lattice echelon tests
"""

import os
import sys

from hypothesis import given, settings, strategies as st
from sympy import Matrix

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from corkforge.algebra.snf import echelon_basis, invariant_factors, smith_normal_form

entries = st.integers(min_value=-9, max_value=9)


def as_matrix(rows) -> Matrix:
    return Matrix([list(row) for row in rows])


def matrices(max_size: int = 6):
    return st.integers(1, max_size).flatmap(
        lambda r: st.integers(1, max_size).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_invariant_factors_small():
    """Diagonal of a 2x2 matrix is (gcd of entries, |det| / gcd)"""
    assert invariant_factors([[2, 4], [6, 8]]) == (2, 4)
    assert invariant_factors([[2, 0], [0, 3]]) == (1, 6)


def test_transform_matrices_reproduce_diagonal():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    form = smith_normal_form(m)
    product = as_matrix(form.U) * Matrix(m) * as_matrix(form.V)
    assert product == as_matrix(form.D), "U*M*V should equal D"
    assert form.diagonal == (2, 6, 12), f"Unexpected invariant factors {form.diagonal}"


def test_empty_shapes():
    form = smith_normal_form([], cols=3)
    assert form.diagonal == ()
    assert form.rank == 0
    assert [list(r) for r in form.V] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_cokernel_factors_count_free_summands():
    assert smith_normal_form([[0, 0]]).cokernel_factors() == [0], "Zero map onto Z leaves Z"
    assert smith_normal_form([[2], [0]]).cokernel_factors() == [2, 0], "Z/2 plus a free Z"
    assert smith_normal_form([[-3]]).cokernel_factors() == [3]


def test_echelon_basis_depends_only_on_lattice():
    assert echelon_basis([[2, 1], [1, 1]], 2) == [[1, 0], [0, 1]]
    assert echelon_basis([[1, 0], [0, 1]], 2) == [[1, 0], [0, 1]]
    assert echelon_basis([[0, 0, 0]], 3) == []
    assert echelon_basis([], 3) == []
    assert echelon_basis([[-1, 1, 0]], 3) == [[1, -1, 0]], "Pivots are made positive"


def test_echelon_basis_reduces_above_pivots():
    assert echelon_basis([[2, 1, 0], [0, 3, 1]], 3) == [[2, 1, 0], [0, 3, 1]]
    assert echelon_basis([[2, 5, 0], [0, 3, 1]], 3) == [[2, 2, -1], [0, 3, 1]]
    assert echelon_basis([[0, 3, 1], [2, 5, 0]], 3) == [[2, 2, -1], [0, 3, 1]], "Order of generators"
    assert echelon_basis([[0, 0, 4], [0, 0, 6]], 3) == [[0, 0, 2]]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(entries, min_size=4, max_size=4), min_size=1, max_size=4))
def test_echelon_basis_ignores_redundant_generators(rows):
    extended = rows + [[a - 2 * b for a, b in zip(rows[0], rows[-1])]]
    basis = echelon_basis(rows, 4)
    assert basis == echelon_basis(extended, 4)
    assert basis == echelon_basis(list(reversed(rows)), 4)
    for row in basis:
        pivot = next(x for x in row if x != 0)
        assert pivot > 0, f"Non-positive pivot in {basis}"


@settings(max_examples=1000, deadline=None)
@given(matrices())
def test_smith_form_properties(m):
    """U*M*V = D, U and V unimodular, and the diagonal is a non-negative divisor chain"""
    form = smith_normal_form(m)
    assert as_matrix(form.U) * Matrix(m) * as_matrix(form.V) == as_matrix(form.D)
    assert abs(as_matrix(form.U).det()) == 1
    assert abs(as_matrix(form.V).det()) == 1
    rows, cols = len(m), len(m[0])
    for i in range(rows):
        for j in range(cols):
            assert i == j or form.D[i][j] == 0, f"Off-diagonal entry at ({i}, {j})"
    diagonal = form.diagonal
    assert all(d >= 0 for d in diagonal)
    for prev, cur in zip(diagonal, diagonal[1:]):
        assert (prev == 0 and cur == 0) or (prev != 0 and cur % prev == 0), f"Broken chain {diagonal}"
