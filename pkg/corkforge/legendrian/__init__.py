"""
Stein-side bookkeeping: zig-zags, Stein checks, c1 pairings, adjunction and d3

Usage:
    from corkforge.legendrian import zigzag, is_stein_handlebody, d3

    k = zigzag(handle, t=1, d=0)
    if is_stein_handlebody(h):
        invariant = d3(h, pairing=3)
"""

from .contact import ContactInvariant, c1_squared_b2one, d3
from .stein import (
    Obstruction,
    PairingData,
    SteinStructureChoice,
    adjunction_check,
    apply_choice,
    c1_pairing,
    is_good_stein,
    is_stein_handlebody,
    max_pairing,
    pending_handles,
    stein_obstruction,
)
from .zigzag import zigzag, zigzag_params

__all__ = [
    'ContactInvariant', 'c1_squared_b2one', 'd3',
    'Obstruction', 'PairingData', 'SteinStructureChoice', 'adjunction_check', 'apply_choice',
    'c1_pairing', 'is_good_stein', 'is_stein_handlebody', 'max_pairing', 'pending_handles',
    'stein_obstruction',
    'zigzag', 'zigzag_params',
]
