"""
W-modifications, boundary sums and replayable modification logs

Usage:
    from corkforge.modifications import ModificationLog, w_minus, replay

    h, record = w_minus(h, 'K0', 2)
    log = ModificationLog(base).extended(record)
    assert replay(log) == h
"""

from .log import (
    ModificationLog,
    TietzeCertificate,
    TietzeStep,
    apply_record,
    effective_records,
    record_from_dict,
    replay,
    swap_sign,
    swap_sign_log,
    tietze_certificate,
)
from .moves import (
    ModificationRecord,
    RecordKind,
    apply_zigzag,
    boundary_sum,
    stabilize_witness,
    swap_record,
    w_minus,
    w_plus,
    zigzag_record,
)

__all__ = [
    'ModificationLog', 'TietzeCertificate', 'TietzeStep', 'apply_record', 'effective_records',
    'record_from_dict', 'replay', 'swap_sign', 'swap_sign_log', 'tietze_certificate',
    'ModificationRecord', 'RecordKind', 'apply_zigzag', 'boundary_sum', 'stabilize_witness',
    'swap_record', 'w_minus', 'w_plus', 'zigzag_record',
]
