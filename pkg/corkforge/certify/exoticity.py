"""
Genus-threshold certificates of pairwise non-diffeomorphism

For i >= 1, X_i has no basis v_0..v_k with genus(v_0) <= g_0 + p_{i-1} and
genus(v_j) <= g_j + q_j, because the Stein structure realising
M_i = 2p_i + (t_0-1) - m_0 + |r_0| on v_0 would violate the adjunction
inequality. Any other member carrying such a basis is therefore not
diffeomorphic to X_i. Every inequality is stored with its evaluated numbers.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..algebra.handlebody import GenusWitness
from ..algebra.homology import homology
from ..errors import CertificateRefused
from ..legendrian.stein import (
    SteinStructureChoice,
    c1_pairing,
    max_pairing,
    pending_handles,
)
from ..modifications.moves import stabilize_witness
from ..pipeline.family import Family, FamilyMember
from ..pipeline.sequences import Evidence, recheck

logger = logging.getLogger(__name__)

NOT_DISTINGUISHED = "not distinguished by this method"


@dataclass(frozen=True)
class ThresholdChecks:
    i: int
    checks: Tuple[Evidence, ...]

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {'i': self.i, 'checks': [check.to_dict() for check in self.checks]}


@dataclass(frozen=True)
class ExoticityCertificate:
    """
    Evaluated thresholds and the distinctness matrix of a family

    Attributes:
        indices: Member indices, -1..n, giving the row/column order
        M: M_1..M_n
        thresholds: Per-member threshold inequalities (i >= 1)
        realized_genus: Genus of the stored witness for v_0, per member
        no_basis_threshold: g_0 + p_{i-1} per member i >= 1
        basis_genus: Genus of v_1..v_k per member after stabilization to g_j + q_j
        distinct: Symmetric matrix over indices
        reasons: Justification per matrix entry
        orientation_independent: Distinctness also holds with orientations reversed
    """

    variant: str
    indices: Tuple[int, ...]
    M: Tuple[int, ...]
    thresholds: Tuple[ThresholdChecks, ...]
    realized_genus: Dict[int, int]
    no_basis_threshold: Dict[int, int]
    basis_genus: Dict[int, Tuple[int, ...]]
    distinct: Tuple[Tuple[bool, ...], ...]
    reasons: Tuple[Tuple[str, ...], ...]
    orientation_independent: bool

    def is_distinct(self, a: int, b: int) -> bool:
        return self.distinct[self.indices.index(a)][self.indices.index(b)]

    def reason(self, a: int, b: int) -> str:
        return self.reasons[self.indices.index(a)][self.indices.index(b)]

    def distinct_pairs(self) -> List[Tuple[int, int]]:
        return [
            (a, b)
            for x, a in enumerate(self.indices)
            for b in self.indices[x + 1:]
            if self.is_distinct(a, b)
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'accepted': True,
            'variant': self.variant,
            'indices': list(self.indices),
            'M': list(self.M),
            'thresholds': [t.to_dict() for t in self.thresholds],
            'realized_genus': {str(i): g for i, g in sorted(self.realized_genus.items())},
            'no_basis_threshold': {str(i): g for i, g in sorted(self.no_basis_threshold.items())},
            'basis_genus': {str(i): list(g) for i, g in sorted(self.basis_genus.items())},
            'distinct': [list(row) for row in self.distinct],
            'reasons': [list(row) for row in self.reasons],
            'orientation_independent': self.orientation_independent,
        }


def m_value(family: Family, i: int) -> int:
    """M_i = 2p_i + (t_0-1) - m_0 + |r_0|"""
    d = family.data
    return 2 * family.plan.p_at(i) + (d.t[0] - 1) - d.m[0] + abs(d.r[0])


def _threshold_checks(family: Family, i: int, strong: bool) -> ThresholdChecks:
    d, plan = family.data, family.plan
    M = m_value(family, i)
    g0, m0 = d.g[0], d.m[0]
    checks = [Evidence('M_positive', 'M_i > 0', i, M, '>', 0)]
    if strong:
        checks.append(Evidence('genus_ladder', '2(g_0+p_{i-1})-2+|m_0| < M_i', i,
                               2 * (g0 + plan.p_at(i - 1)) - 2 + abs(m0), '<', M))
    else:
        checks.append(Evidence('genus_ladder', '2(g_0+p_{i-1})-2-m_0 < M_i', i,
                               2 * (g0 + plan.p_at(i - 1)) - 2 - m0, '<', M))
    for j in range(1, d.k + 1):
        bound = 2 * (d.g[j] + plan.q[j]) - 2
        if strong:
            checks.append(Evidence(f"basis_separated_{j}", '2(g_j+q_j)-2+|m_j| < M_i', i,
                                   bound + abs(d.m[j]), '<', M))
        else:
            checks.append(Evidence(f"basis_separated_{j}", '2(g_j+q_j)-2-m_j < M_i', i,
                                   bound - d.m[j], '<', M))
    return ThresholdChecks(i, tuple(checks))


def _realized(member: FamilyMember) -> Optional[int]:
    witness = member.witness_for(member.classes[0])
    return None if witness is None else witness.genus


def _basis_genus(family: Family, member: FamilyMember) -> Tuple[Tuple[int, ...], List[str]]:
    """Genus of v_1..v_k, stabilized up to g_j + q_j; problems are reported, not raised"""
    d, q = family.data, family.plan.q
    genera: List[int] = []
    problems: List[str] = []
    for j in range(1, d.k + 1):
        witness = member.witness_for(member.classes[j])
        target = d.g[j] + q[j]
        if witness is None or witness.genus > target:
            found = None if witness is None else witness.genus
            problems.append(f"X_{member.index}: v_{j} has genus {found}, above g_j+q_j = {target}")
            continue
        genera.append(stabilize_witness(witness, target - witness.genus).genus)
    return tuple(genera), problems


def _orientation_independent(family: Family) -> bool:
    d = family.data
    if d.k == 0:
        return True
    if family.plan.variant.strengthened:
        return True
    matrix = homology(family.base).intersection_matrix
    return all(entry == 0 for row in matrix for entry in row)


def certify_family(family: Family) -> ExoticityCertificate:
    """
    Evaluate every threshold inequality and derive the distinctness matrix

    Args:
        family: A built family; its plan is re-checked first

    Returns:
        ExoticityCertificate

    Raises:
        CertificateRefused: If the plan or any threshold inequality fails, a
            member lacks the witnesses the matrix relies on, or a stored witness
            violates the adjunction inequality on a Stein member
    """
    plan = recheck(family.data, family.plan)
    reasons: List[str] = list(plan.failures)
    strong = plan.variant.strengthened and family.data.k >= 1
    g0 = family.data.g[0]

    thresholds = tuple(_threshold_checks(family, i, strong) for i in range(1, family.n + 1))
    for group in thresholds:
        reasons.extend(check.reason for check in group.checks if not check.ok)

    realized: Dict[int, int] = {}
    basis_genus: Dict[int, Tuple[int, ...]] = {}
    for member in family.members:
        genus = _realized(member)
        if genus is None:
            reasons.append(f"X_{member.index}: no witness for v_0")
        else:
            realized[member.index] = genus
        basis_genus[member.index], problems = _basis_genus(family, member)
        reasons.extend(problems)
    no_basis = {i: g0 + plan.p_at(i - 1) for i in range(1, family.n + 1)}
    reasons.extend(adjunction_sweep(family))

    if reasons:
        logger.warning(f"Certificate refused: {reasons}")
        raise CertificateRefused("Exoticity certificate refused", reasons)

    indices = tuple(family.indices)
    distinct: List[List[bool]] = [[False] * len(indices) for _ in indices]
    why: List[List[str]] = [[''] * len(indices) for _ in indices]
    for x, a in enumerate(indices):
        for y, b in enumerate(indices):
            if a == b:
                why[x][y] = "same member"
                continue
            lo, hi = min(a, b), max(a, b)
            if hi <= 0:
                why[x][y] = NOT_DISTINGUISHED
            elif realized[lo] <= no_basis[hi]:
                distinct[x][y] = True
                why[x][y] = (f"X_{lo} has a basis with genus(v_0) = {realized[lo]} <= {no_basis[hi]}; "
                             f"X_{hi} has none")
            else:
                why[x][y] = (f"{NOT_DISTINGUISHED}: genus {realized[lo]} of X_{lo} above "
                             f"threshold {no_basis[hi]} of X_{hi}")

    certificate = ExoticityCertificate(
        variant=plan.variant.value,
        indices=indices,
        M=tuple(m_value(family, i) for i in range(1, family.n + 1)),
        thresholds=thresholds,
        realized_genus=realized,
        no_basis_threshold=no_basis,
        basis_genus=basis_genus,
        distinct=tuple(tuple(row) for row in distinct),
        reasons=tuple(tuple(row) for row in why),
        orientation_independent=_orientation_independent(family),
    )
    logger.info(f"Certificate accepted: {len(certificate.distinct_pairs())} distinct pair(s)")
    return certificate


def adjunction_sweep(family: Family) -> List[str]:
    """
    Check square + |<c1, a>| <= 2g - 2 for every stored witness on every Stein member

    Each witness is tested against the two uniform structures and, for the
    classes v_j, the structure chosen by max_pairing.

    Returns:
        A description of every violation; empty when all witnesses are consistent
    """
    violations: List[str] = []
    for member in family.members:
        if not member.stein:
            continue
        h = member.handlebody
        for index, witness in enumerate(member.witnesses):
            if witness.cls.is_zero():
                continue
            for choice in _choices_for(member, witness):
                pairing = c1_pairing(h, choice, witness.cls)
                square = h.square(witness.cls)
                if square + abs(pairing) > 2 * witness.genus - 2:
                    violations.append(
                        f"X_{member.index} witness {index}: square {square} + |c1| {abs(pairing)} "
                        f"> 2g-2 = {2 * witness.genus - 2} (signs {choice.as_dict()})")
    return violations


def _choices_for(member: FamilyMember, witness: GenusWitness) -> List[SteinStructureChoice]:
    h = member.handlebody
    choices = [SteinStructureChoice.uniform(h, -1)]
    if pending_handles(h):
        choices.append(SteinStructureChoice.uniform(h, 1))
    if member.pairing_data is not None and witness.cls in member.classes:
        a = [1 if cls == witness.cls else 0 for cls in member.classes]
        chosen = max_pairing(h, a, member.pairing_data)[1]
        if chosen not in choices:
            choices.append(chosen)
    return choices
