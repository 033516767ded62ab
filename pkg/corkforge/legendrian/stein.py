"""Stein handlebody checks, first Chern class pairings and adjunction bounds"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..algebra.handlebody import ClassVector, GenusWitness, Handlebody, Role
from ..algebra.homology import in_h2, spans_h2
from ..errors import HandlebodyError, LegendrianError
from .zigzag import zigzag

logger = logging.getLogger(__name__)


def is_stein_handlebody(h: Handlebody) -> bool:
    """Every 2-handle is Legendrian and attached with framing tb - 1"""
    return all(
        handle.has_legendrian and handle.framing == handle.tb - 1
        for handle in h.handles
    )


def is_good_stein(h: Handlebody, basis_ids: Optional[Sequence[str]] = None) -> bool:
    """
    Stein, and the designated basis handles avoid the 1-handles and span H2

    Args:
        h: Handlebody to test
        basis_ids: Designated spanning set; defaults to every handle with role basis
    """
    if not is_stein_handlebody(h):
        return False
    if basis_ids is None:
        basis_ids = [handle.id for handle in h.handles if handle.role == Role.BASIS]
    try:
        indices = [h.index_of(handle_id) for handle_id in basis_ids]
    except HandlebodyError:
        return False
    if any(any(h.handles[j].run_over) for j in indices):
        return False
    classes = [ClassVector.unit(h.handle_count, j) for j in indices]
    return spans_h2(h, classes)


@dataclass(frozen=True)
class SteinStructureChoice:
    """Rotation sign chosen for each handle still waiting for its last zig-zag"""

    delta_signs: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        items = dict(self.delta_signs)
        for handle_id, sign in items.items():
            if sign not in (1, -1):
                raise LegendrianError(f"Sign for '{handle_id}' must be +1 or -1, got {sign}")
        object.__setattr__(self, 'delta_signs', tuple(sorted(items.items())))

    @classmethod
    def of(cls, signs: Mapping[str, int]) -> 'SteinStructureChoice':
        return cls(tuple(signs.items()))

    @classmethod
    def uniform(cls, h: Handlebody, sign: int = -1) -> 'SteinStructureChoice':
        return cls(tuple((handle_id, sign) for handle_id in pending_handles(h)))

    def as_dict(self) -> Dict[str, int]:
        return dict(self.delta_signs)

    def to_dict(self) -> Dict[str, Any]:
        return {'delta_signs': self.as_dict()}


def pending_handles(h: Handlebody) -> List[str]:
    """
    Handles sitting one zig-zag above the Stein framing

    These are the auxiliary handles and the handles that avoid the 1-handles;
    the direction of their last zig-zag is the free choice of a
    Stein structure.
    """
    return [
        handle.id for handle in h.handles
        if handle.has_legendrian and handle.tb == handle.framing + 2
        and (handle.role.is_auxiliary or not any(handle.run_over))
    ]


def apply_choice(h: Handlebody, choice: SteinStructureChoice) -> Handlebody:
    """
    Perform the finishing zig-zag on every pending handle

    Raises:
        LegendrianError: If the choice does not cover exactly the pending handles
    """
    pending = pending_handles(h)
    signs = choice.as_dict()
    if set(signs) != set(pending):
        missing = sorted(set(pending) - set(signs))
        extra = sorted(set(signs) - set(pending))
        raise LegendrianError(f"Choice incomplete: missing {missing}, unexpected {extra}")
    result = h
    for handle_id in pending:
        index = result.index_of(handle_id)
        d = 1 if signs[handle_id] > 0 else 0
        result = result.replace_handle(index, zigzag(result.handles[index], 1, d))
    return result


def c1_pairing(h: Handlebody, choice: SteinStructureChoice, a: ClassVector) -> int:
    """
    Evaluate the first Chern class of the Stein structure on a 2-chain

    The class is the cocycle taking each 2-handle to its rotation number,
    read after the choice's finishing zig-zags.

    Raises:
        LegendrianError: If the choice is incomplete or the result is not Stein
    """
    finished = apply_choice(h, choice)
    if not is_stein_handlebody(finished):
        raise LegendrianError("Handlebody is not Stein after applying the choice")
    if len(a) != finished.handle_count:
        raise LegendrianError(
            f"Class of length {len(a)} on a handlebody with {finished.handle_count} 2-handles")
    return sum(coeff * handle.rot for coeff, handle in zip(a.coeffs, finished.handles))


@dataclass(frozen=True)
class PairingData:
    """
    Construction data of a family member needed to maximise c1 pairings

    Attributes:
        i: Member index (>= 1)
        p_i: Member's p value
        t0, m0, r0: Basic data of K_0
        q: q_1..q_k for the basis handles other than K_0
        classes: v_0..v_k as chains on the member
        delta_ids: Auxiliary handle id per basis index j >= 1 (None when q_j = 0)
        basis_ids: Handle ids of K_1..K_k
    """
    i: int
    p_i: int
    t0: int
    m0: int
    r0: int
    q: Tuple[int, ...]
    classes: Tuple[ClassVector, ...]
    delta_ids: Tuple[Optional[str], ...] = field(default=())
    basis_ids: Tuple[str, ...] = field(default=())

    @property
    def m_value(self) -> int:
        return 2 * self.p_i + (self.t0 - 1) - self.m0 + abs(self.r0)

    @property
    def q_hat(self) -> Tuple[int, ...]:
        return tuple(qj - 1 if qj != 0 else 0 for qj in self.q)

    def chain(self, a: Sequence[int]) -> ClassVector:
        """Chain of the class with coordinates a in the v basis"""
        if len(a) != len(self.classes):
            raise LegendrianError(f"Expected {len(self.classes)} coordinates, got {len(a)}")
        size = len(self.classes[0])
        total = ClassVector.zero(size)
        for coeff, v in zip(a, self.classes):
            total = total + v.scaled(coeff)
        return total


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def max_pairing(h: Handlebody, a: Sequence[int],
                family_data: Optional[PairingData]) -> Tuple[int, SteinStructureChoice]:
    """
    Lower bound for the largest |<c1(J), a>| over Stein structures J, and a J realising it

    Args:
        h: A constructed family member X_i with i >= 1
        a: Coordinates in the basis v_0..v_k of that member
        family_data: PairingData recorded when the member was built

    Returns:
        (bound, choice) with |c1_pairing(h, choice, a)| >= bound

    Raises:
        LegendrianError: If h is not a constructed member with i >= 1
    """
    if family_data is None or family_data.i < 1:
        raise LegendrianError("max_pairing needs a constructed family member X_i with i >= 1")
    a = [int(x) for x in a]
    if len(a) != 1 + len(family_data.q):
        raise LegendrianError(f"Expected {1 + len(family_data.q)} coordinates, got {len(a)}")

    bound = abs(a[0]) * family_data.m_value + sum(
        abs(aj * qh) for aj, qh in zip(a[1:], family_data.q_hat))

    # orient every term along the sign fixed by the K_0 term
    v0 = family_data.classes[0]
    sigma0 = _sign(sum(c * handle.rot for c, handle in zip(v0.coeffs, h.handles)))
    overall = _sign(a[0] * sigma0) or 1
    pending = set(pending_handles(h))
    signs: Dict[str, int] = {}
    for aj, delta_id, kj in zip(a[1:], family_data.delta_ids, family_data.basis_ids):
        if delta_id is not None:
            signs[delta_id] = -overall * _sign(aj) if aj != 0 else -1
        if kj in pending:
            signs[kj] = overall * _sign(aj) if aj != 0 else -1
    for handle_id in pending_handles(h):
        signs.setdefault(handle_id, -1)
    choice = SteinStructureChoice.of(signs)
    logger.debug(f"max_pairing X_{family_data.i}: a={a}, bound={bound}")
    return bound, choice


def adjunction_check(square: int, pairing_abs: int, genus: int) -> bool:
    """square + |<c1, a>| <= 2g - 2"""
    return square + pairing_abs <= 2 * genus - 2


@dataclass(frozen=True)
class Obstruction:
    """A witness whose square alone violates the adjunction inequality"""

    witness_index: int
    cls: ClassVector
    genus: int
    square: int
    any_orientation: bool

    @property
    def reason(self) -> str:
        scope = "any orientation" if self.any_orientation else "this orientation"
        return (f"genus {self.genus} class with square {self.square} > {2 * self.genus - 2}: "
                f"no Stein structure ({scope})")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'witness_index': self.witness_index,
            'class': self.cls.to_list(),
            'genus': self.genus,
            'square': self.square,
            'any_orientation': self.any_orientation,
            'reason': self.reason,
        }


def stein_obstruction(h: Handlebody,
                      witnesses: Optional[Iterable[GenusWitness]] = None) -> Optional[Obstruction]:
    """
    Look for a witness ruling out every Stein structure

    A nonzero class of genus g with square > 2g - 2 violates the adjunction
    inequality whatever c1 is. Reversing orientation negates squares, so the
    obstruction holds for both orientations when -square > 2g - 2 too.

    Args:
        h: Handlebody
        witnesses: Witnesses to try; defaults to those carried by h

    Returns:
        The strongest Obstruction found, or None
    """
    if witnesses is None:
        witnesses = h.witnesses
    found: List[Obstruction] = []
    for index, witness in enumerate(witnesses):
        if len(witness.cls) != h.handle_count or witness.cls.is_zero():
            continue
        if not in_h2(h, witness.cls):
            continue
        square = h.square(witness.cls)
        limit = 2 * witness.genus - 2
        if square > limit:
            found.append(Obstruction(index, witness.cls, witness.genus, square, -square > limit))
    if not found:
        return None
    found.sort(key=lambda o: (not o.any_orientation, o.witness_index))
    logger.info(f"Stein obstruction: {found[0].reason}")
    return found[0]
