#!/usr/bin/env python3
"""
Genus-threshold certificates and homeomorphism metadata
"""

import os
import sys
from dataclasses import replace

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from corkforge.algebra import Handlebody, Role, TwoHandle
from corkforge.certify import NOT_DISTINGUISHED, adjunction_sweep, certify_family, homeo_report
from corkforge.errors import CertificateRefused
from corkforge.pipeline import SequencePlan, build_family, example_u, extract_data, solve_plan


def family_of(h: Handlebody, n: int, variant: str = 'standard'):
    data = extract_data(h)
    return build_family(h, data, solve_plan(data, n, variant))


def two_basis_handles() -> Handlebody:
    k0 = TwoHandle('K0', Role.BASIS, framing=-3, tb=-2, rot=1, genus=0)
    k1 = TwoHandle('K1', Role.BASIS, framing=-1, tb=-1, rot=0, genus=0)
    return Handlebody(0, (k0, k1), ((-3, 0), (0, -1)))


def test_unknot_minus_three_certificate():
    certificate = certify_family(family_of(example_u(-3), 2))
    assert certificate.M == (3, 5)
    assert certificate.no_basis_threshold == {1: 0, 2: 1}
    assert certificate.realized_genus == {-1: 0, 0: 0, 1: 1, 2: 2}
    assert certificate.distinct_pairs() == [(-1, 1), (-1, 2), (0, 1), (0, 2), (1, 2)]
    assert certificate.reason(-1, 0) == NOT_DISTINGUISHED
    assert certificate.reason(2, 2) == "same member"
    assert certificate.is_distinct(2, 1)
    assert certificate.orientation_independent


def test_unknot_zero_certificate():
    certificate = certify_family(family_of(example_u(0), 4))
    assert certificate.M == (2, 4, 6, 8)
    pairs = [(a, b) for a, b in certificate.distinct_pairs() if a >= 0]
    assert len(pairs) == 10, f"expected all pairs among X_0..X_4, got {pairs}"
    assert not certificate.is_distinct(-1, 0)
    data = certificate.to_dict()
    assert data['accepted'] is True
    assert data['indices'] == [-1, 0, 1, 2, 3, 4]
    assert data['no_basis_threshold'] == {'1': 0, '2': 2, '3': 3, '4': 4}
    assert all(check['ok'] for group in data['thresholds'] for check in group['checks'])


def test_basis_thresholds_and_orientation():
    standard = certify_family(family_of(two_basis_handles(), 2))
    strong = certify_family(family_of(two_basis_handles(), 2, 'strengthened'))
    assert standard.M == strong.M == (3, 5)
    assert not standard.orientation_independent
    assert strong.orientation_independent
    assert standard.basis_genus == {-1: (1,), 0: (1,), 1: (1,), 2: (1,)}
    names = [check.name for check in strong.thresholds[0].checks]
    assert names == ['M_positive', 'genus_ladder', 'basis_separated_1']
    assert strong.thresholds[1].checks[1].lhs == 3
    assert len(standard.distinct_pairs()) == 5


def test_tampered_plan_is_refused():
    family = family_of(example_u(0), 2)
    tampered = replace(family, plan=SequencePlan('standard', (0,), (2, 2)))
    with pytest.raises(CertificateRefused) as excinfo:
        certify_family(tampered)
    assert any("p_i > p_{i-1} violated" in reason for reason in excinfo.value.reasons)


def test_missing_witness_is_refused():
    family = family_of(example_u(-3), 2)
    member = family.member(1)
    stripped = replace(member, handlebody=member.handlebody.with_changes(witnesses=()))
    members = tuple(stripped if m.index == 1 else m for m in family.members)
    with pytest.raises(CertificateRefused) as excinfo:
        certify_family(replace(family, members=members))
    assert "X_1: no witness for v_0" in excinfo.value.reasons


def test_homeo_report_for_unknot_family():
    report = homeo_report(family_of(example_u(0), 1))
    assert report.labels == ('X_-1', 'X_0', 'X_1')
    assert report.twists[('X_0', 'X_1')] == (0,)
    assert report.twists[('X_-1', 'X_0')] == ()
    data = report.to_dict()
    assert data['machine_verified'] is False
    assert data['profile']['b2'] == 1


def test_homeo_report_refuses_profile_mismatch():
    with pytest.raises(CertificateRefused):
        homeo_report([('a', example_u(-3), None), ('b', example_u(0), None)])
    assert homeo_report([]).labels == ()


def test_understated_witness_genus_is_refused():
    """X_2 of U(-3) claims genus 1 for v_0: -3 + 5 > 0 breaks adjunction"""
    family = family_of(example_u(-3), 2)
    member = family.member(2)
    v0 = member.classes[0]
    witnesses = tuple(replace(w, genus=w.genus - 1) if w.cls == v0 else w for w in member.witnesses)
    edited = replace(member, handlebody=member.handlebody.with_changes(witnesses=witnesses))
    corrupted = replace(family, members=tuple(edited if m.index == 2 else m for m in family.members))

    violations = adjunction_sweep(corrupted)
    assert len(violations) == 1, f"expected one violation, got {violations}"
    assert violations[0].startswith("X_2 witness")
    assert "square -3 + |c1| 5 > 2g-2 = 0" in violations[0]

    with pytest.raises(CertificateRefused) as excinfo:
        certify_family(corrupted)
    assert any(reason.startswith("X_2 witness") for reason in excinfo.value.reasons)


def test_sweep_reports_each_choice_once():
    family = family_of(two_basis_handles(), 2)
    member = family.member(1)
    witnesses = tuple(replace(w, genus=0) for w in member.witnesses)
    edited = replace(member, handlebody=member.handlebody.with_changes(witnesses=witnesses))
    corrupted = replace(family, members=tuple(edited if m.index == 1 else m for m in family.members))
    violations = adjunction_sweep(corrupted)
    assert violations
    assert len(violations) == len(set(violations)), "a choice was tested twice"
