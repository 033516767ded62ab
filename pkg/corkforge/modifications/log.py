"""Replayable modification logs, sign swaps and Tietze certificates"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Tuple

from ..algebra.handlebody import Handlebody
from ..errors import HandlebodyError, ModificationError
from .moves import (
    ModificationRecord,
    RecordKind,
    apply_zigzag,
    boundary_sum,
    swap_record,
    w_minus,
    w_plus,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModificationLog:
    """A base handlebody and the ordered moves applied to it"""

    base: Handlebody
    records: Tuple[ModificationRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'records', tuple(self.records))

    def extended(self, *records: ModificationRecord) -> 'ModificationLog':
        return ModificationLog(self.base, self.records + tuple(records))

    def w_indices(self) -> List[int]:
        return [i for i, r in enumerate(self.records) if r.kind.is_w_move]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'base': self.base.to_dict(),
            'records': [record.to_dict() for record in self.records],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ModificationLog':
        try:
            base = Handlebody.from_dict(data['base'])
            records = tuple(record_from_dict(r) for r in data.get('records', []))
        except (KeyError, TypeError, ValueError, HandlebodyError) as e:
            raise ModificationError(f"Malformed modification log: {e}") from e
        return cls(base, records)


def record_from_dict(data: Dict[str, Any]) -> ModificationRecord:
    created = data.get('created')
    operand = data.get('operand')
    return ModificationRecord(
        kind=RecordKind(data['kind']),
        target=str(data.get('target', '')),
        p=int(data.get('p', 0)),
        t=int(data.get('t', 0)),
        d=int(data.get('d', 0)),
        created=(int(created[0]), str(created[1])) if created is not None else None,
        index=int(data['index']) if data.get('index') is not None else None,
        operand=ModificationLog.from_dict(operand) if operand is not None else None,
    )


def apply_record(h: Handlebody, record: ModificationRecord) -> Tuple[Handlebody, ModificationRecord]:
    """
    Apply a single non-swap record

    Returns:
        (new handlebody, record with its created ids filled in)

    Raises:
        ModificationError: If the record cannot be applied or its stored ids disagree
    """
    if record.kind.is_w_move:
        move = w_plus if record.kind == RecordKind.W_PLUS else w_minus
        result, fresh = move(h, record.target, record.p)
        if record.created is not None and record.created != fresh.created:
            raise ModificationError(
                f"Record on '{record.target}' created {fresh.created}, log says {record.created}")
        return result, fresh
    if record.kind == RecordKind.ZIGZAG:
        return apply_zigzag(h, record.target, record.t, record.d), record
    if record.kind == RecordKind.BOUNDARY_SUM:
        if record.operand is None:
            raise ModificationError("boundary_sum record without operand")
        return boundary_sum(h, replay(record.operand)), record
    raise ModificationError(f"Record kind {record.kind.value} cannot be applied directly")


def effective_records(log: ModificationLog) -> List[ModificationRecord]:
    """
    The log with every swap_sign record folded into the kind of its target record

    Raises:
        ModificationError: If a swap points outside the log or at a non-W record
    """
    effective: List[ModificationRecord] = []
    position: Dict[int, int] = {}
    for idx, record in enumerate(log.records):
        if record.kind != RecordKind.SWAP_SIGN:
            position[idx] = len(effective)
            effective.append(record)
            continue
        if record.index is None or record.index not in position:
            raise ModificationError(f"swap_sign at {idx} refers to invalid record {record.index}")
        j = position[record.index]
        if not effective[j].kind.is_w_move:
            raise ModificationError(
                f"swap_sign at {idx}: record {record.index} is {effective[j].kind.value}, not a W-move")
        effective[j] = effective[j].toggled()
    return effective


def replay(log: ModificationLog) -> Handlebody:
    """Rebuild the current handlebody from the base; deterministic and bit-exact"""
    h = log.base
    for record in effective_records(log):
        h, _ = apply_record(h, record)
    return h


def swap_sign_log(log: ModificationLog, record_index: int) -> ModificationLog:
    """Append a swap_sign record toggling the W-move at record_index"""
    if not 0 <= record_index < len(log.records):
        raise ModificationError(f"Record index {record_index} out of range (0..{len(log.records) - 1})")
    if not log.records[record_index].kind.is_w_move:
        raise ModificationError(
            f"Record {record_index} is {log.records[record_index].kind.value}, not a W-move")
    return log.extended(swap_record(record_index))


def swap_sign(h: Handlebody, log: ModificationLog, record_index: int) -> Handlebody:
    """
    Cork-twist a logged W-move into its opposite sign

    The log is replayed with the record's kind toggled, so genus witnesses are
    re-derived: W- to W+ adds the genus-shifted witness, the reverse removes it.

    Args:
        h: Current handlebody; must equal replay(log)
        log: Its modification log
        record_index: Index of a w_plus or w_minus record

    Raises:
        ModificationError: Index out of range, record not a W-move, or h not matching the log
    """
    if replay(log) != h:
        raise ModificationError("Handlebody does not match its modification log")
    return replay(swap_sign_log(log, record_index))


class TietzeStep(str, Enum):
    ADD = 'add_cancelling_pair'
    REMOVE = 'remove_cancelling_pair'


@dataclass(frozen=True)
class TietzeCertificate:
    """Each W-move adds a 1-handle cancelled geometrically once by its auxiliary handle"""

    steps: Tuple[str, ...]
    details: Tuple[str, ...]
    statement: str = "pi_1 preserved"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'steps': list(self.steps),
            'details': list(self.details),
            'statement': self.statement,
        }


def tietze_certificate(log: ModificationLog) -> TietzeCertificate:
    """One add_cancelling_pair step per effective W-move, boundary-sum operands included"""
    steps: List[str] = []
    details: List[str] = []
    h = log.base
    for record in effective_records(log):
        h, fresh = apply_record(h, record)
        if fresh.kind.is_w_move:
            one_handle, aux_id = fresh.created
            steps.append(TietzeStep.ADD.value)
            details.append(f"1-handle {one_handle} cancelled geometrically once by '{aux_id}' "
                           f"({fresh.kind.value}({fresh.p}) near '{fresh.target}')")
        elif fresh.kind == RecordKind.BOUNDARY_SUM:
            inner = tietze_certificate(fresh.operand)
            steps.extend(inner.steps)
            details.extend(f"right summand: {d}" for d in inner.details)
    return TietzeCertificate(tuple(steps), tuple(details))
