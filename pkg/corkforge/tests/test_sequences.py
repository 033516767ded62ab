#!/usr/bin/env python3
"""
Basic data extraction and the q / p sequence solvers and checker
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from corkforge.algebra import Handlebody, Role, TwoHandle
from corkforge.errors import PlanError
from corkforge.pipeline import (
    BasisData,
    SequencePlan,
    Variant,
    check_plan,
    example_u,
    extract_data,
    recheck,
    solve_p,
    solve_plan,
    solve_q,
)


def two_basis_handles() -> Handlebody:
    k0 = TwoHandle('K0', Role.BASIS, framing=-3, tb=-2, rot=1, genus=0)
    k1 = TwoHandle('K1', Role.BASIS, framing=-1, tb=-1, rot=0, genus=0)
    return Handlebody(0, (k0, k1), ((-3, 0), (0, -1)))


def test_extract_data_from_unknot():
    data = extract_data(example_u(-3))
    assert data.to_dict() == {
        'k': 0, 'l': 0, 'ids': ['K0'], 'm': [-3], 't': [-2], 'r': [1], 'g': [0],
    }
    assert data.b2 == 1


def test_extract_data_orders_k0_first():
    data = extract_data(two_basis_handles(), k0='K1')
    assert data.ids == ('K1', 'K0')
    assert data.m == (-1, -3)


def test_extract_data_errors():
    with pytest.raises(PlanError):
        extract_data(two_basis_handles(), basis_ids=['K0'])
    with pytest.raises(PlanError):
        extract_data(two_basis_handles(), k0='K7')
    no_genus = Handlebody(0, (TwoHandle('K0', Role.BASIS, framing=-2, tb=-1, rot=0),), ((-2,),))
    with pytest.raises(PlanError):
        extract_data(no_genus)
    over = TwoHandle('K0', Role.BASIS, framing=-2, tb=-1, rot=0, run_over=(0,), genus=0)
    extra = TwoHandle('E', Role.EXTRA, framing=0, tb=1, rot=0, run_over=(1,))
    with pytest.raises(PlanError):
        extract_data(Handlebody(1, (over, extra), ((-2, 0), (0, 0))), basis_ids=['E'])


def test_solve_q():
    data = BasisData(k=1, l=1, ids=('K0', 'K1'), m=(-3, -1), t=(-2, -1), r=(1, 0), g=(0, 0))
    assert solve_q(data) == (0, 1)
    wider = BasisData(k=1, l=2, ids=('K0', 'K1', 'E'), m=(-3, -1, 3), t=(-2, -1, 4), r=(1, 0, 0),
                      g=(0, 0))
    assert solve_q(wider) == (0, 1, 0)


def test_minimal_p_for_unknots():
    assert solve_plan(extract_data(example_u(-3)), 3).p == (1, 2, 3)
    assert solve_plan(extract_data(example_u(0)), 4).p == (2, 3, 4, 5)
    assert solve_plan(extract_data(example_u(5)), 2).p == (7, 8)


def test_unknot_sequences_start_and_step():
    """p_1 = 1 for m <= -2, m + 2 otherwise, then consecutive"""
    for m in range(-6, 5):
        p = solve_plan(extract_data(example_u(m)), 5).p
        first = 1 if m <= -2 else m + 2
        assert p == tuple(range(first, first + 5)), f"U({m}): {p}"


def test_minimal_p_for_partner_variants():
    assert solve_plan(extract_data(example_u(-3)), 2, Variant.NONSTEIN).p == (1, 2)
    assert solve_plan(extract_data(example_u(0)), 1, Variant.NONSTEIN).p == (3,)
    assert solve_plan(extract_data(example_u(0)), 1, Variant.NONSTEIN_MINUS1).p == (2,)


def test_two_basis_handles_both_variants():
    data = extract_data(two_basis_handles())
    for variant in (Variant.STANDARD, Variant.STRENGTHENED):
        plan = solve_plan(data, 3, variant)
        assert plan.q == (0, 1)
        assert plan.p == (1, 2, 3), f"{variant.value}: {plan.p}"
        assert plan.valid
    names = {e.name for e in solve_plan(data, 2, Variant.STRENGTHENED).evidence}
    assert 'p_genus_ladder_reversed' in names
    assert 'p_genus_ladder_reversed' not in {e.name for e in solve_plan(data, 2).evidence}


def test_solver_errors():
    data = extract_data(example_u(0))
    with pytest.raises(PlanError):
        solve_p(data, (0,), 0)
    with pytest.raises(PlanError):
        solve_p(data, (0, 1), 2)
    with pytest.raises(PlanError):
        check_plan(data, (0,), ())


def test_check_plan_reports_failure():
    data = extract_data(example_u(0))
    plan = check_plan(data, (0,), (2, 2))
    assert not plan.valid
    assert "p_i > p_{i-1} violated at 2: 2 > 2 is false" in plan.failures


def test_every_mutation_is_rejected():
    """Twenty edits of the minimal U(0) plan, each breaking some condition"""
    data = extract_data(example_u(0))
    p = list(solve_plan(data, 4).p)
    mutations = []
    for i in range(4):
        for value in (p[i] - 1, p[i - 1] if i else 0, 0, -p[i]):
            edited = list(p)
            edited[i] = value
            mutations.append(edited)
    for i in range(3):
        edited = list(p)
        edited[i], edited[i + 1] = edited[i + 1], edited[i]
        mutations.append(edited)
    mutations.append([1] + p[1:])
    assert len(mutations) == 20
    for edited in mutations:
        assert not check_plan(data, (0,), edited).valid, f"mutation {edited} accepted"


def test_plan_json_round_trip():
    data = extract_data(example_u(-3))
    plan = solve_plan(data, 2)
    stored = SequencePlan.from_dict(plan.to_dict())
    assert (stored.variant, stored.q, stored.p) == (plan.variant, plan.q, plan.p)
    assert stored.evidence == ()
    assert recheck(data, stored) == plan
    assert plan.to_dict()['p'] == [0, 0, 1, 2]
    with pytest.raises(PlanError):
        SequencePlan.from_dict({'q': [0], 'p': [1, 0, 2]})
    with pytest.raises(PlanError):
        SequencePlan.from_dict({'q': [0]})
