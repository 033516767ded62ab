#!/usr/bin/env python3
"""
Zig-zag bookkeeping tests
"""

import os
import sys

import pytest
from hypothesis import given, strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from corkforge.algebra import Role, TwoHandle
from corkforge.errors import LegendrianError
from corkforge.legendrian import zigzag, zigzag_params

K = TwoHandle('K', Role.BASIS, framing=-3, tb=4, rot=-1, genus=3)


def test_zigzag_table():
    """Every 0 <= d <= t <= 10 shifts tb by -t and rot by 2d - t"""
    for t in range(11):
        for d in range(t + 1):
            out = zigzag(K, t, d)
            assert out.tb == K.tb - t, f"tb wrong for t={t}, d={d}"
            assert out.rot == K.rot + 2 * d - t, f"rot wrong for t={t}, d={d}"
            assert (out.framing, out.run_over, out.genus) == (K.framing, K.run_over, K.genus)


def test_zigzag_zero_is_identity():
    assert zigzag(K, 0, 0) == K


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_zigzags_compose(t1, d1, t2, d2):
    d1, d2 = min(d1, t1), min(d2, t2)
    assert zigzag(zigzag(K, t1, d1), t2, d2) == zigzag(K, t1 + t2, d1 + d2)


def test_zigzag_rejects_bad_parameters():
    with pytest.raises(LegendrianError):
        zigzag(K, 2, 3)
    with pytest.raises(LegendrianError):
        zigzag(K, -1, 0)
    with pytest.raises(LegendrianError):
        zigzag(TwoHandle('P', Role.EXTRA, framing=0), 1, 0)


def test_zigzag_params_inverts_zigzag():
    assert zigzag_params(K, 1, 0) == (3, 2)
    with pytest.raises(LegendrianError):
        zigzag_params(K, 5, 0)
    with pytest.raises(LegendrianError):
        zigzag_params(K, 2, 0)
