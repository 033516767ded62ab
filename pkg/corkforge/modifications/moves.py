"""
W-modifications, zig-zag records and boundary sums as pure transformations

A W(p)-modification near a 2-handle K adds a 1-handle and a 0-framed
auxiliary 2-handle gamma going over it once. In the plus version K goes over
the new 1-handle p times and gamma is unlinked from K; in the minus version K
avoids the 1-handle algebraically and links gamma p times. The two differ by
a cork twist, and both leave the homology profile unchanged.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..algebra.handlebody import (
    ClassVector,
    GenusWitness,
    Handlebody,
    Provenance,
    Role,
    TwoHandle,
)
from ..errors import HandlebodyError, ModificationError
from ..legendrian.zigzag import zigzag

logger = logging.getLogger(__name__)


class RecordKind(str, Enum):
    W_PLUS = 'w_plus'
    W_MINUS = 'w_minus'
    ZIGZAG = 'zigzag'
    BOUNDARY_SUM = 'boundary_sum'
    SWAP_SIGN = 'swap_sign'

    @property
    def is_w_move(self) -> bool:
        return self in (RecordKind.W_PLUS, RecordKind.W_MINUS)

    def toggled(self) -> 'RecordKind':
        if self == RecordKind.W_PLUS:
            return RecordKind.W_MINUS
        if self == RecordKind.W_MINUS:
            return RecordKind.W_PLUS
        raise ModificationError(f"Record kind {self.value} is not a W-move")


@dataclass(frozen=True)
class ModificationRecord:
    """
    One logged move

    Attributes:
        kind: Move type
        target: Handle the move acts on (empty for boundary sums)
        p: W-move parameter
        t, d: Zig-zag parameters
        created: (new 1-handle index, auxiliary handle id) for W-moves
        index: Record toggled by a swap_sign record
        operand: Right-hand log of a boundary sum
    """

    kind: RecordKind
    target: str = ''
    p: int = 0
    t: int = 0
    d: int = 0
    created: Optional[Tuple[int, str]] = None
    index: Optional[int] = None
    operand: Optional[Any] = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', RecordKind(self.kind))
        if self.kind.is_w_move and self.p < 0:
            raise ModificationError(f"W-move parameter must be >= 0, got {self.p}")

    def toggled(self) -> 'ModificationRecord':
        return replace(self, kind=self.kind.toggled())

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'kind': self.kind.value,
            'target': self.target,
            'p': self.p,
            't': self.t,
            'd': self.d,
        }
        if self.created is not None:
            data['created'] = [self.created[0], self.created[1]]
        if self.index is not None:
            data['index'] = self.index
        if self.operand is not None:
            data['operand'] = self.operand.to_dict()
        return data


def zigzag_record(target: str, t: int, d: int) -> ModificationRecord:
    return ModificationRecord(RecordKind.ZIGZAG, target=target, t=t, d=d)


def swap_record(index: int) -> ModificationRecord:
    return ModificationRecord(RecordKind.SWAP_SIGN, index=index)


def _aux_id(h: Handlebody, target: str) -> str:
    taken = set(h.ids)
    n = 1
    while f"{target}#aux{n}" in taken:
        n += 1
    return f"{target}#aux{n}"


def _w_move(h: Handlebody, target: str, p: int, plus: bool) -> Tuple[Handlebody, ModificationRecord]:
    kind = RecordKind.W_PLUS if plus else RecordKind.W_MINUS
    if p < 1:
        raise ModificationError(f"{kind.value}: p must be a positive integer, got {p}")
    try:
        t_index = h.index_of(target)
    except HandlebodyError as e:
        raise ModificationError(f"{kind.value}: {e}") from e
    k = h.handles[t_index]
    if not k.has_legendrian:
        raise ModificationError(f"{kind.value}: handle '{target}' has no Legendrian data")

    s, c = h.one_handles, h.handle_count
    aux_id = _aux_id(h, target)

    handles: List[TwoHandle] = []
    for j, handle in enumerate(h.handles):
        run_over = handle.run_over + (0,)
        if j == t_index and plus:
            run_over = handle.run_over + (p,)
            handle = handle.replace(tb=handle.tb + p, genus=None)
        handles.append(handle.replace(run_over=run_over))
    gamma = TwoHandle(
        id=aux_id,
        role=Role.AUX_PLUS if plus else Role.AUX_MINUS,
        framing=0,
        tb=2 if plus else 1,
        rot=0 if plus else 1,
        run_over=(0,) * s + (1,),
    )
    handles.append(gamma)

    link_to_gamma = 0 if plus else p
    linking = [list(row) + [link_to_gamma if i == t_index else 0] for i, row in enumerate(h.linking)]
    linking.append([link_to_gamma if j == t_index else 0 for j in range(c)] + [0])

    witnesses: List[GenusWitness] = []
    gamma_cls = ClassVector.unit(c + 1, c)
    for witness in h.witnesses:
        cls = witness.cls.padded(after=1)
        coeff = witness.cls[t_index]
        if not plus or coeff == 0:
            witnesses.append(GenusWitness(cls, witness.genus, witness.provenance))
        elif abs(coeff) == 1:
            shifted = cls - gamma_cls.scaled(coeff * p)
            witnesses.append(GenusWitness(shifted, witness.genus + p, Provenance.PROP_GENUS_SHIFT))
        else:
            logger.debug(f"{kind.value}: dropping witness with coefficient {coeff} on '{target}'")

    result = Handlebody(s + 1, tuple(handles), tuple(tuple(r) for r in linking), tuple(witnesses))
    record = ModificationRecord(kind, target=target, p=p, created=(s, aux_id))
    logger.debug(f"{kind.value}({p}) on '{target}': new 1-handle {s}, auxiliary '{aux_id}'")
    return result, record


def w_plus(h: Handlebody, target: str, p: int) -> Tuple[Handlebody, ModificationRecord]:
    """
    W+(p)-modification: tb(target) rises by p, the new auxiliary handle has tb 2, rot 0

    A witness with coefficient +-1 on the target becomes the class
    target - p*gamma with genus increased by p.

    Raises:
        ModificationError: Unknown target, missing Legendrian data or p < 1
    """
    return _w_move(h, target, p, plus=True)


def w_minus(h: Handlebody, target: str, p: int) -> Tuple[Handlebody, ModificationRecord]:
    """
    W-(p)-modification: target data unchanged, the new auxiliary handle has tb 1, rot 1

    Raises:
        ModificationError: Unknown target, missing Legendrian data or p < 1
    """
    return _w_move(h, target, p, plus=False)


def apply_zigzag(h: Handlebody, target: str, t: int, d: int) -> Handlebody:
    try:
        index = h.index_of(target)
    except HandlebodyError as e:
        raise ModificationError(f"zigzag: {e}") from e
    return h.replace_handle(index, zigzag(h.handles[index], t, d))


def boundary_sum(a: Handlebody, b: Handlebody) -> Handlebody:
    """
    Boundary connected sum: block-diagonal data, right ids namespaced with "R." on collision

    The prefix is repeated ("R.R.") until no right id collides with a left one.

    Witnesses of both sides are carried over with zero-extended classes.
    """
    right_ids = b.ids
    prefix = ''
    while set(a.ids) & set(right_ids):
        prefix += 'R.'
        right_ids = tuple(f"{prefix}{handle_id}" for handle_id in b.ids)
    if prefix:
        logger.debug(f"boundary_sum: id collision, right operand namespaced with '{prefix}'")

    sa, sb = a.one_handles, b.one_handles
    ca, cb = a.handle_count, b.handle_count
    handles = [handle.replace(run_over=handle.run_over + (0,) * sb) for handle in a.handles]
    handles += [
        handle.replace(id=new_id, run_over=(0,) * sa + handle.run_over)
        for handle, new_id in zip(b.handles, right_ids)
    ]
    linking = [tuple(row) + (0,) * cb for row in a.linking]
    linking += [(0,) * ca + tuple(row) for row in b.linking]
    witnesses = [
        GenusWitness(w.cls.padded(after=cb), w.genus, Provenance.BOUNDARY_SUM) for w in a.witnesses
    ] + [
        GenusWitness(w.cls.padded(before=ca), w.genus, Provenance.BOUNDARY_SUM) for w in b.witnesses
    ]
    return Handlebody(sa + sb, tuple(handles), tuple(linking), tuple(witnesses))


def stabilize_witness(witness: GenusWitness, extra: int) -> GenusWitness:
    """Raise the genus by tubing on `extra` null-homologous tori"""
    if extra < 0:
        raise ModificationError(f"Cannot stabilize by a negative genus {extra}")
    if extra == 0:
        return witness
    return GenusWitness(witness.cls, witness.genus + extra, Provenance.STABILIZATION)
