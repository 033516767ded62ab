"""Stein / non-Stein reports, homeomorphism metadata and the combined certificate"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..algebra.handlebody import GenusWitness, Handlebody
from ..algebra.homology import homology
from ..errors import CertificateRefused
from ..legendrian.stein import (
    Obstruction,
    SteinStructureChoice,
    apply_choice,
    is_stein_handlebody,
    stein_obstruction,
)
from ..modifications.log import ModificationLog, effective_records
from ..pipeline.family import Family
from ..pipeline.nonstein import SteinNonsteinFamily
from .exoticity import ExoticityCertificate, certify_family

logger = logging.getLogger(__name__)

HOMEOMORPHISM_NOTE = ("pairwise homeomorphic: members differ by cork twists recorded as "
                      "toggled W-moves; not machine-verified")


@dataclass(frozen=True)
class SteinStatus:
    label: str
    stein: bool
    obstruction: Optional[Obstruction]

    @property
    def status(self) -> str:
        if self.obstruction is not None:
            return 'obstructed'
        if self.stein:
            return 'stein'
        return 'no obstruction found'

    def to_dict(self) -> Dict[str, Any]:
        return {
            'label': self.label,
            'status': self.status,
            'stein_handlebody': self.stein,
            'obstruction': None if self.obstruction is None else self.obstruction.to_dict(),
        }


@dataclass(frozen=True)
class NonsteinReport:
    entries: Tuple[SteinStatus, ...] = ()

    def count(self, status: str) -> int:
        return sum(1 for entry in self.entries if entry.status == status)

    def entry(self, label: str) -> SteinStatus:
        for entry in self.entries:
            if entry.label == label:
                return entry
        raise KeyError(label)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'members': [entry.to_dict() for entry in self.entries],
            'stein': self.count('stein'),
            'obstructed': self.count('obstructed'),
            'no_obstruction_found': self.count('no obstruction found'),
        }


def verify_nonstein(members: Sequence[Tuple[str, Handlebody]],
                    witnesses: Optional[Mapping[str, Iterable[GenusWitness]]] = None) -> NonsteinReport:
    """
    Stein check and adjunction obstruction for each member

    A member with no obstructing witness is reported as "no obstruction found"
    unless it is itself a Stein handlebody; absence of a witness says nothing
    about Stein structures.

    Args:
        members: (label, handlebody) pairs
        witnesses: Optional per-label witness lists replacing the carried ones
    """
    witnesses = witnesses or {}
    entries = []
    for label, h in members:
        finished = apply_choice(h, SteinStructureChoice.uniform(h))
        obstruction = stein_obstruction(h, witnesses.get(label))
        entries.append(SteinStatus(label, is_stein_handlebody(finished), obstruction))
    report = NonsteinReport(tuple(entries))
    logger.info(f"Non-Stein report: {report.count('stein')} Stein, "
                f"{report.count('obstructed')} obstructed")
    return report


@dataclass(frozen=True)
class HomeoReport:
    labels: Tuple[str, ...]
    profile: Optional[Dict[str, Any]]
    twists: Dict[Tuple[str, str], Tuple[int, ...]] = field(default_factory=dict)
    note: str = HOMEOMORPHISM_NOTE

    def to_dict(self) -> Dict[str, Any]:
        return {
            'labels': list(self.labels),
            'profiles_equal': True,
            'profile': self.profile,
            'pairs': [
                {'a': a, 'b': b, 'homeomorphic': True, 'toggled_records': list(toggled)}
                for (a, b), toggled in sorted(self.twists.items())
            ],
            'note': self.note,
            'machine_verified': False,
        }


def _skeleton(log: Optional[ModificationLog]) -> Optional[List[Tuple[str, int, str]]]:
    if log is None:
        return None
    return [(r.target, r.p, r.kind.value) for r in effective_records(log) if r.kind.is_w_move]


def homeo_report(members: Union[Family, Sequence[Tuple[str, Handlebody, Optional[ModificationLog]]]]) -> HomeoReport:
    """
    Homeomorphism metadata backed by a profile cross-check

    Args:
        members: A Family, or (label, handlebody, log or None) triples

    Raises:
        CertificateRefused: If two members have different homology profiles
    """
    if isinstance(members, Family):
        members = [(f"X_{m.index}", m.handlebody, m.log) for m in members.members]
    members = list(members)
    if not members:
        return HomeoReport((), None)

    profiles = [(label, homology(h)) for label, h, _ in members]
    first_label, first = profiles[0]
    mismatched = [label for label, profile in profiles[1:] if profile != first]
    if mismatched:
        raise CertificateRefused("Homology profiles differ",
                                 [f"{label} differs from {first_label}" for label in mismatched])

    twists: Dict[Tuple[str, str], Tuple[int, ...]] = {}
    skeletons = [(label, _skeleton(log)) for label, _, log in members]
    for x, (a, sa) in enumerate(skeletons):
        for b, sb in skeletons[x + 1:]:
            toggled: Tuple[int, ...] = ()
            if sa is not None and sb is not None and len(sa) == len(sb):
                toggled = tuple(
                    n for n, (ra, rb) in enumerate(zip(sa, sb))
                    if ra[:2] == rb[:2] and ra[2] != rb[2])
            twists[(a, b)] = toggled
    return HomeoReport(tuple(label for label, _, _ in members), first.to_dict(), twists)


@dataclass(frozen=True)
class SteinNonsteinCertificate:
    labels: Tuple[str, ...]
    status: NonsteinReport
    base: ExoticityCertificate
    distinct: Tuple[Tuple[bool, ...], ...]
    reasons: Tuple[Tuple[str, ...], ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'labels': list(self.labels),
            'status': self.status.to_dict(),
            'base': self.base.to_dict(),
            'distinct': [list(row) for row in self.distinct],
            'reasons': [list(row) for row in self.reasons],
        }


def certify_stein_nonstein(result: SteinNonsteinFamily) -> SteinNonsteinCertificate:
    """
    Distinctness over X^S_1..X^S_n, X^N_1..X^N_n

    S against N: one side is Stein, the other has an orientation-free
    obstruction. S against S and N against N: the genus-threshold certificate
    of the summed family, whose basis classes carry over to the sums.

    Raises:
        CertificateRefused: If the base certificate is refused
    """
    base = certify_family(result.family)
    members = result.members
    status = verify_nonstein([(m.label, m.handlebody) for m in members])
    labels = tuple(m.label for m in members)

    size = len(members)
    distinct = [[False] * size for _ in range(size)]
    why = [[''] * size for _ in range(size)]
    for x, a in enumerate(members):
        for y, b in enumerate(members):
            if x == y:
                why[x][y] = "same member"
                continue
            if a.stein_side != b.stein_side:
                s, n = (a, b) if a.stein_side else (b, a)
                s_status, n_status = status.entry(s.label), status.entry(n.label)
                if (s_status.status == 'stein' and n_status.obstruction is not None
                        and n_status.obstruction.any_orientation):
                    distinct[x][y] = True
                    why[x][y] = f"X{s.label} is Stein; X{n.label} admits no Stein structure (any orientation)"
                else:
                    why[x][y] = "Stein status not established"
            elif base.is_distinct(a.index, b.index):
                distinct[x][y] = True
                why[x][y] = f"genus threshold: {base.reason(a.index, b.index)}"
            else:
                why[x][y] = base.reason(a.index, b.index)

    logger.info(f"Stein/non-Stein certificate over {size} member(s)")
    return SteinNonsteinCertificate(labels, status, base,
                                    tuple(tuple(r) for r in distinct), tuple(tuple(r) for r in why))
