#!/usr/bin/env python3
"""
Handlebody validation and homology profile tests
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from corkforge.algebra import (
    ClassVector,
    Handlebody,
    Role,
    TwoHandle,
    homology,
    kernel_basis,
    signature,
    spans_h2,
    validate,
)
from corkforge.errors import HandlebodyError
from corkforge.modifications import w_minus, w_plus
from corkforge.pipeline import example_u


def _two_over_one() -> Handlebody:
    a = TwoHandle('A', Role.EXTRA, framing=1, tb=2, rot=1, run_over=(1,))
    b = TwoHandle('B', Role.EXTRA, framing=-2, tb=-1, rot=0, run_over=(1,))
    return Handlebody(1, (a, b), ((1, 3), (3, -2)))


def test_profile_of_u_minus_three():
    profile = homology(example_u(-3))
    assert profile.h1_invariant_factors == ()
    assert profile.b2 == 1
    assert profile.intersection_matrix == ((-3,),)
    assert profile.boundary_h1_invariant_factors == (3,), "Boundary is a lens space with H1 = Z/3"
    assert profile.boundary_b1 == 0
    assert profile.euler == 2
    assert profile.signature == -1


def test_profile_of_u_zero_has_free_boundary():
    profile = homology(example_u(0))
    assert profile.boundary_h1_invariant_factors == (0,)
    assert profile.boundary_b1 == 1
    assert profile.signature == 0


def test_w_moves_keep_profile():
    h = example_u(-3)
    before = homology(h)
    plus, _ = w_plus(h, 'K0', 2)
    minus, _ = w_minus(h, 'K0', 2)
    assert homology(plus) == before
    assert homology(minus) == before
    both, _ = w_minus(plus, 'K0', 3)
    assert homology(both) == before


def test_kernel_basis_is_echelon():
    h = _two_over_one()
    assert [v.to_list() for v in kernel_basis(h)] == [[1, -1]]
    profile = homology(h)
    # (A - B)^2 = 1 - 6 - 2
    assert profile.intersection_matrix == ((-7,),)
    assert profile.h1_invariant_factors == ()


def test_spans_h2():
    h = _two_over_one()
    assert spans_h2(h, [ClassVector((-1, 1))])
    assert not spans_h2(h, [ClassVector((2, -2))])


def test_signature_exact():
    assert signature([[1, 0], [0, -1]]) == 0
    assert signature([[2, 1], [1, 2]]) == 2
    assert signature([[0]]) == 0
    assert signature([[-3, 0], [0, 0]]) == -1
    assert signature([]) == 0


def test_validate_reports_every_violation():
    k = TwoHandle('K', Role.BASIS, framing=0, tb=1, rot=0, run_over=(1,), genus=0)
    dup = TwoHandle('K', Role.EXTRA, framing=2, tb=None, rot=3, run_over=())
    h = Handlebody(1, (k, dup), ((1, 2), (3, 2)))
    violations = validate(h).violations
    text = ' | '.join(violations)
    assert "duplicate id 'K'" in text
    assert "linking diagonal" in text
    assert "not symmetric" in text
    assert "tb and rot must be present together" in text
    assert "witness over 1-handle" in text
    assert "slice-Bennequin" in text
    assert not validate(h).ok


def test_homology_rejects_invalid_handlebody():
    k = TwoHandle('K', Role.BASIS, framing=1, tb=0, rot=1)
    with pytest.raises(HandlebodyError):
        homology(Handlebody(0, (k,), ((2,),)))


def test_handlebody_json_shape():
    record = example_u(-3).to_dict()
    assert set(record) == {'one_handles', 'handles', 'linking'}
    assert record['handles'][0] == {
        'id': 'K0', 'role': 'basis', 'framing': -3, 'tb': -2, 'rot': 1, 'run_over': [], 'genus': 0,
    }
    assert Handlebody.from_dict(record) == example_u(-3)
    with pytest.raises(HandlebodyError):
        Handlebody.from_dict({'handles': [{'id': 'x'}]})
