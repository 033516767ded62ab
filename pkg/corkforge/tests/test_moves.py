#!/usr/bin/env python3
"""
W-modifications, boundary sums and witness stabilization
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from corkforge.algebra import (
    ClassVector,
    GenusWitness,
    Handlebody,
    Provenance,
    Role,
    TwoHandle,
    homology,
    kernel_basis,
    validate,
)
from corkforge.errors import ModificationError
from corkforge.modifications import (
    ModificationRecord,
    RecordKind,
    apply_record,
    boundary_sum,
    stabilize_witness,
    w_minus,
    w_plus,
)
from corkforge.pipeline import example_u
from corkforge.utils.fuzz import make_rng, random_handlebody, random_w_moves


def test_w_plus_on_unknot():
    """W+(2) on U(-3): K0 runs twice over the new 1-handle and its witness picks up genus"""
    h, record = w_plus(example_u(-3), 'K0', 2)
    k0, gamma = h.handles
    assert h.one_handles == 1
    assert (k0.run_over, k0.tb, k0.rot, k0.genus) == ((2,), 0, 1, None)
    assert gamma.id == 'K0#aux1'
    assert gamma.role == Role.AUX_PLUS
    assert (gamma.framing, gamma.tb, gamma.rot, gamma.run_over) == (0, 2, 0, (1,))
    assert h.linking == ((-3, 0), (0, 0))
    assert record.kind == RecordKind.W_PLUS
    assert record.created == (0, 'K0#aux1')

    assert h.witnesses == (GenusWitness(ClassVector((1, -2)), 2, Provenance.PROP_GENUS_SHIFT),)
    assert kernel_basis(h) == [ClassVector((1, -2))]
    assert validate(h).ok, f"W+ result invalid: {validate(h).violations}"


def test_w_minus_on_unknot():
    h, record = w_minus(example_u(-3), 'K0', 3)
    k0, gamma = h.handles
    assert (k0.run_over, k0.tb, k0.rot, k0.genus) == ((0,), -2, 1, 0)
    assert gamma.role == Role.AUX_MINUS
    assert (gamma.framing, gamma.tb, gamma.rot, gamma.run_over) == (0, 1, 1, (1,))
    assert h.linking == ((-3, 3), (3, 0))
    assert record.kind == RecordKind.W_MINUS
    assert h.witnesses == (GenusWitness(ClassVector((1, 0)), 0, Provenance.INPUT),)
    assert validate(h).ok


def test_auxiliary_ids_are_fresh():
    h, first = w_minus(example_u(-3), 'K0', 1)
    h, second = w_minus(h, 'K0', 2)
    assert first.created == (0, 'K0#aux1')
    assert second.created == (1, 'K0#aux2')
    assert h.ids == ('K0', 'K0#aux1', 'K0#aux2')


def test_w_move_keeps_homology_profile():
    base = example_u(-3)
    expected = homology(base)
    plus, _ = w_plus(base, 'K0', 2)
    minus, _ = w_minus(base, 'K0', 2)
    assert homology(plus) == expected
    assert homology(minus) == expected


def test_w_move_errors():
    h = example_u(-3)
    with pytest.raises(ModificationError):
        w_plus(h, 'K0', 0)
    with pytest.raises(ModificationError):
        w_minus(h, 'missing', 1)
    bare = Handlebody(0, (TwoHandle('K', Role.BASIS, framing=-1),), ((-1,),))
    with pytest.raises(ModificationError):
        w_plus(bare, 'K', 1)
    with pytest.raises(ModificationError):
        ModificationRecord(RecordKind.W_PLUS, target='K0', p=-1)


def test_witness_with_larger_coefficient_is_dropped():
    h = example_u(-3).with_changes(witnesses=(GenusWitness(ClassVector((2,)), 1),))
    result, _ = w_plus(h, 'K0', 1)
    assert result.witnesses == ()


def test_boundary_sum_namespaces_colliding_ids():
    a, _ = w_minus(example_u(-3), 'K0', 1)
    b = example_u(0)
    h = boundary_sum(a, b)
    assert h.ids == ('K0', 'K0#aux1', 'R.K0')
    assert h.one_handles == 1
    assert h.handle('R.K0').run_over == (0,)
    assert h.linking == ((-3, 1, 0), (1, 0, 0), (0, 0, 0))
    assert [w.cls.to_list() for w in h.witnesses] == [[1, 0, 0], [0, 0, 1]]
    assert all(w.provenance == Provenance.BOUNDARY_SUM for w in h.witnesses)
    assert validate(h).ok


def test_boundary_sum_repeats_prefix_until_disjoint():
    left = boundary_sum(example_u(-3), example_u(0))
    assert left.ids == ('K0', 'R.K0')
    h = boundary_sum(left, example_u(-2))
    assert h.ids == ('K0', 'R.K0', 'R.R.K0')
    assert len(set(h.ids)) == len(h.ids)
    assert validate(h).ok
    assert homology(h).intersection_matrix == ((-3, 0, 0), (0, 0, 0), (0, 0, -2))


def test_boundary_sum_keeps_distinct_ids():
    b = Handlebody(0, (TwoHandle('L', Role.BASIS, framing=-2, tb=-1, rot=0, genus=0),), ((-2,),))
    h = boundary_sum(example_u(-3), b)
    assert h.ids == ('K0', 'L')
    assert homology(h).intersection_matrix == ((-3, 0), (0, -2))


def test_stabilize_witness():
    witness = GenusWitness(ClassVector((1, -1)), 1, Provenance.PROP_GENUS_SHIFT)
    assert stabilize_witness(witness, 0) is witness
    raised = stabilize_witness(witness, 2)
    assert raised.genus == 3
    assert raised.cls == witness.cls
    assert raised.provenance == Provenance.STABILIZATION
    with pytest.raises(ModificationError):
        stabilize_witness(witness, -1)


def test_random_w_moves_keep_homology_profile():
    """200 seeded inputs, each followed by up to five W-moves"""
    for seed in range(200):
        rng = make_rng(seed)
        h = random_handlebody(rng)
        expected = homology(h)
        for record in random_w_moves(rng, h, int(rng.integers(0, 6))):
            h, _ = apply_record(h, record)
            assert homology(h) == expected, f"seed {seed}: profile changed by {record.to_dict()}"
