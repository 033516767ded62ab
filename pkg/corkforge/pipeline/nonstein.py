"""
Stein / non-Stein families by boundary sum with a small partner

X^S_i sums the member X_i of the input family with the Stein member X_1 of
the partner family, X^N_i with the partner's X_0, whose partner class is a
sphere of square 0 (U(0)) or -1 (U(-1)).
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..algebra.handlebody import ClassVector, GenusWitness, Handlebody
from ..errors import PlanError
from ..modifications.log import ModificationLog
from ..modifications.moves import ModificationRecord, RecordKind, boundary_sum
from .data import extract_data
from .examples import example_u
from .family import Family, FamilyMember, build_family
from .sequences import Variant, solve_plan

logger = logging.getLogger(__name__)

PARTNER_VARIANTS = {0: Variant.NONSTEIN, -1: Variant.NONSTEIN_MINUS1}


@dataclass(frozen=True)
class SummedMember:
    """
    X_i summed with one partner member

    Attributes:
        label: 'S{i}' or 'N{i}'
        index: i
        stein_side: True for X^S_i
        handlebody: The boundary sum
        log: Log of X_i extended by a boundary_sum record carrying the partner log
        classes: v_0..v_k of X_i followed by the partner class w
        expected_genus: Genus claimed for each class
    """

    label: str
    index: int
    stein_side: bool
    handlebody: Handlebody
    log: ModificationLog
    classes: Tuple[ClassVector, ...]
    expected_genus: Tuple[int, ...]

    @property
    def partner_class(self) -> ClassVector:
        return self.classes[-1]

    def partner_witness(self) -> Optional[GenusWitness]:
        matches = [w for w in self.handlebody.witnesses if w.cls == self.partner_class]
        return min(matches, key=lambda w: w.genus) if matches else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'label': self.label,
            'index': self.index,
            'stein_side': self.stein_side,
            'classes': [cls.to_list() for cls in self.classes],
            'expected_genus': list(self.expected_genus),
        }


@dataclass(frozen=True)
class SteinNonsteinFamily:
    family: Family
    partner: Family
    partner_framing: int
    stein: Tuple[SummedMember, ...]
    nonstein: Tuple[SummedMember, ...]

    @property
    def members(self) -> List[SummedMember]:
        return list(self.stein) + list(self.nonstein)

    def output_files(self) -> Dict[str, Any]:
        files: Dict[str, Any] = {
            'plan.json': self.family.plan.to_dict(),
            'partner_plan.json': self.partner.plan.to_dict(),
            'classes.json': {m.label: m.to_dict() for m in self.members},
        }
        for m in self.members:
            files[f"X{m.label}.json"] = m.handlebody.to_dict()
            files[f"log_{m.label}.json"] = m.log.to_dict()
        return files


def _summed(member: FamilyMember, partner: FamilyMember, label: str, stein_side: bool) -> SummedMember:
    h = boundary_sum(member.handlebody, partner.handlebody)
    log = member.log.extended(ModificationRecord(RecordKind.BOUNDARY_SUM, operand=partner.log))
    left, right = member.handlebody.handle_count, partner.handlebody.handle_count
    classes = tuple(cls.padded(after=right) for cls in member.classes)
    classes += (partner.classes[0].padded(before=left),)
    genera = tuple(member.expected_genus) + (partner.expected_genus[0],)
    return SummedMember(label, member.index, stein_side, h, log, classes, genera)


def stein_nonstein_family(h: Handlebody, n: int, partner: int = 0,
                          basis_ids: Optional[Sequence[str]] = None,
                          k0: Optional[str] = None) -> SteinNonsteinFamily:
    """
    Build X^S_1..X^S_n and X^N_1..X^N_n

    Args:
        h: Good Stein input handlebody
        n: Family size
        partner: Framing of the partner unknot, 0 or -1
        basis_ids: Designated basis of h
        k0: Distinguished basis handle

    Returns:
        SteinNonsteinFamily

    Raises:
        PlanError: Unsupported partner, or any failure building either family
    """
    if partner not in PARTNER_VARIANTS:
        raise PlanError(f"Partner framing must be 0 or -1, got {partner}")
    data = extract_data(h, basis_ids, k0)
    family = build_family(h, data, solve_plan(data, n, PARTNER_VARIANTS[partner]))

    u = example_u(partner)
    u_data = extract_data(u)
    partner_family = build_family(u, u_data, solve_plan(u_data, 1, Variant.STANDARD))
    stein_partner, sphere_partner = partner_family.member(1), partner_family.member(0)

    stein = tuple(
        _summed(family.member(i), stein_partner, f"S{i}", True) for i in range(1, n + 1))
    nonstein = tuple(
        _summed(family.member(i), sphere_partner, f"N{i}", False) for i in range(1, n + 1))
    logger.info(f"Stein/non-Stein family: n={n}, partner U({partner}), plan p={list(family.plan.p)}")
    return SteinNonsteinFamily(family, partner_family, partner, stein, nonstein)
