"""d3 values of the boundary contact structures of a b2 = 1 family"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from ..errors import CertificateRefused, LegendrianError
from ..legendrian.contact import ContactInvariant, d3
from ..legendrian.stein import c1_pairing, max_pairing
from ..pipeline.family import Family
from ..pipeline.sequences import Evidence
from ..utils.serialization import format_rational
from .exoticity import m_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Incompatibility:
    """X_i admits no Stein structure compatible with the contact structure of X_j (i < j)"""

    i: int
    j: int
    inequality: Evidence
    realized_genus: int
    threshold: int

    @property
    def ok(self) -> bool:
        return self.inequality.ok and self.realized_genus <= self.threshold

    def to_dict(self) -> Dict[str, Any]:
        return {
            'i': self.i,
            'j': self.j,
            'inequality': self.inequality.to_dict(),
            'realized_genus': self.realized_genus,
            'threshold': self.threshold,
            'ok': self.ok,
        }


@dataclass(frozen=True)
class D3Report:
    values: Dict[int, Fraction]
    invariants: Dict[int, ContactInvariant]
    pairings: Dict[int, int]
    incompatibilities: Tuple[Incompatibility, ...] = ()

    @property
    def all_distinct(self) -> bool:
        return len(set(self.values.values())) == len(self.values)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'values': {str(i): format_rational(v) for i, v in sorted(self.values.items())},
            'invariants': {str(i): inv.to_dict() for i, inv in sorted(self.invariants.items())},
            'pairings': {str(i): p for i, p in sorted(self.pairings.items())},
            'all_distinct': self.all_distinct,
            'incompatibilities': [inc.to_dict() for inc in self.incompatibilities],
        }


def d3_family(family: Family) -> D3Report:
    """
    d3 of the contact structure induced on the boundary of each X_i, i = 1..n

    The Stein structure used on X_i is the one realising |<c1, v_0>| = M_i.

    Raises:
        CertificateRefused: b2 != 1, zero intersection form, or a pairing not equal to M_i
    """
    data = family.data
    if data.k != 0:
        raise CertificateRefused("d3 report unavailable", [f"b2 = {data.b2}, d3 needs b2 = 1"])
    if data.m[0] == 0:
        raise CertificateRefused("d3 report unavailable", ["m_0 = 0: intersection form is zero"])

    values: Dict[int, Fraction] = {}
    invariants: Dict[int, ContactInvariant] = {}
    pairings: Dict[int, int] = {}
    for i in range(1, family.n + 1):
        member = family.member(i)
        M = m_value(family, i)
        bound, choice = max_pairing(member.handlebody, [1], member.pairing_data)
        pairing = c1_pairing(member.handlebody, choice, member.classes[0])
        if not abs(pairing) == bound == M:
            raise CertificateRefused("d3 report refused",
                                     [f"X_{i}: |<c1, v_0>| = {abs(pairing)}, bound {bound}, M_i = {M}"])
        try:
            invariant = d3(member.finished(choice), pairing)
        except LegendrianError as e:
            raise CertificateRefused("d3 report refused", [f"X_{i}: {e}"]) from e
        values[i] = invariant.d3
        invariants[i] = invariant
        pairings[i] = pairing

    report = D3Report(values, invariants, pairings, tuple(contact_incompatibilities(family)))
    logger.info(f"d3 values: {[format_rational(v) for v in values.values()]}, "
                f"all distinct: {report.all_distinct}")
    return report


def contact_incompatibilities(family: Family) -> List[Incompatibility]:
    """For i < j, the genus g_0+p_i of v_0 on X_i is within the no-basis threshold of X_j"""
    data, plan = family.data, family.plan
    g0, m0 = data.g[0], data.m[0]
    records: List[Incompatibility] = []
    for j in range(2, family.n + 1):
        M = m_value(family, j)
        ineq = Evidence('contact_incompatible', '2(g_0+p_{j-1})-2-m_0 < M_j', j,
                        2 * (g0 + plan.p_at(j - 1)) - 2 - m0, '<', M)
        for i in range(1, j):
            records.append(Incompatibility(i, j, ineq, g0 + plan.p_at(i), g0 + plan.p_at(j - 1)))
    return records
