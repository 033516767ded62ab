#!/usr/bin/env python3
"""
JSON helpers and handlebody records
"""

import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from corkforge.algebra import Handlebody
from corkforge.errors import SerializationError
from corkforge.utils import (
    dumps,
    format_rational,
    loads,
    read_bundle,
    read_json,
    write_bundle,
)
from corkforge.utils.fuzz import make_rng, random_handlebody


def test_rational_text():
    assert format_rational(Fraction(-14, 6)) == '-7/3'
    assert format_rational(Fraction(4)) == '4/1'


def test_dumps_is_deterministic():
    assert dumps({'b': 1, 'a': [1, 2]}) == dumps({'a': [1, 2], 'b': 1})
    assert dumps({'b': 1, 'a': 2}).index('"a"') < dumps({'b': 1, 'a': 2}).index('"b"')
    with pytest.raises(SerializationError):
        loads('{', source='broken.json')


def test_bundle_round_trip(tmp_path):
    files = {'plan.json': {'q': [0], 'p': [0, 0, 1]}, 'X_0.json': {'one_handles': 0}}
    target = str(tmp_path / 'family')
    write_bundle(target, files)
    assert read_bundle(target) == files
    assert read_bundle(target, ['plan.json']) == {'plan.json': files['plan.json']}
    with pytest.raises(SerializationError):
        read_bundle(str(tmp_path / 'missing'))
    with pytest.raises(SerializationError):
        read_json(str(tmp_path / 'missing.json'))


def test_random_handlebody_records_survive_json():
    rng = make_rng(7)
    for _ in range(10):
        h = random_handlebody(rng)
        assert Handlebody.from_dict(loads(dumps(h.to_dict()))) == h
