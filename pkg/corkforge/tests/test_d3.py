#!/usr/bin/env python3
"""
d3 of boundary contact structures
"""

import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from corkforge.algebra import Handlebody, Role, TwoHandle
from corkforge.certify import contact_incompatibilities, d3_family
from corkforge.errors import CertificateRefused, LegendrianError
from corkforge.legendrian import ContactInvariant, c1_squared_b2one, d3
from corkforge.pipeline import build_family, example_u, extract_data, solve_plan


def family_of(h: Handlebody, n: int):
    data = extract_data(h)
    return build_family(h, data, solve_plan(data, n))


def test_d3_of_single_unknot():
    invariant = d3(example_u(-3), 1)
    assert invariant.c1_squared == Fraction(-1, 3)
    assert (invariant.euler, invariant.signature) == (2, -1)
    assert invariant.d3 == Fraction(-1, 3)
    assert invariant.to_dict()['d3'] == '-1/3'


def test_d3_values_along_unknot_family():
    report = d3_family(family_of(example_u(-3), 3))
    assert report.pairings == {1: 3, 2: 5, 3: 7}
    assert report.values == {1: Fraction(-1), 2: Fraction(-7, 3), 3: Fraction(-13, 3)}
    assert report.all_distinct
    assert all(inv.euler == 2 and inv.signature == -1 for inv in report.invariants.values())
    data = report.to_dict()
    assert data['values'] == {'1': '-1/1', '2': '-7/3', '3': '-13/3'}
    assert data['all_distinct'] is True


def test_contact_incompatibilities():
    records = contact_incompatibilities(family_of(example_u(-3), 3))
    assert [(r.i, r.j) for r in records] == [(1, 2), (1, 3), (2, 3)]
    assert all(r.ok for r in records)
    assert records[2].inequality.lhs == 5
    assert records[2].threshold == 2


def test_d3_preconditions():
    with pytest.raises(LegendrianError):
        d3(example_u(0), 0)
    loose = Handlebody(0, (TwoHandle('K', Role.BASIS, framing=-3, tb=0, rot=0, genus=1),), ((-3,),))
    with pytest.raises(LegendrianError):
        d3(loose, 0)
    two = Handlebody(0, (TwoHandle('A', Role.BASIS, framing=-2, tb=-1, rot=0),
                         TwoHandle('B', Role.BASIS, framing=-2, tb=-1, rot=0)), ((-2, 0), (0, -2)))
    with pytest.raises(LegendrianError):
        d3(two, 0)
    with pytest.raises(LegendrianError):
        c1_squared_b2one(1, 0)
    with pytest.raises(LegendrianError):
        ContactInvariant(Fraction(0), Fraction(1), 1, 1)


def test_d3_family_refusals():
    with pytest.raises(CertificateRefused):
        d3_family(family_of(example_u(0), 2))
    k0 = TwoHandle('K0', Role.BASIS, framing=-3, tb=-2, rot=1, genus=0)
    k1 = TwoHandle('K1', Role.BASIS, framing=-1, tb=-1, rot=0, genus=0)
    with pytest.raises(CertificateRefused):
        d3_family(family_of(Handlebody(0, (k0, k1), ((-3, 0), (0, -1))), 2))
