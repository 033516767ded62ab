"""
Construction of the families X_i (i = -1..n)

The other handles K_1..K_l are prepared by W+(q_j) and zig-zags, then
W-(p_1..p_n) on K_0 gives X_0. X_{-1} twists the preparation moves back, and
X_i twists the i-th W-(p_i) on K_0 and fixes the Legendrian data of K_0 and
gamma_i with zig-zags.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..algebra.handlebody import ClassVector, GenusWitness, Handlebody
from ..errors import LegendrianError, ModificationError, PlanError
from ..legendrian.stein import (
    PairingData,
    SteinStructureChoice,
    apply_choice,
    is_good_stein,
    is_stein_handlebody,
)
from ..legendrian.zigzag import zigzag_params
from ..modifications.log import ModificationLog, apply_record, replay
from ..modifications.moves import (
    ModificationRecord,
    RecordKind,
    swap_record,
    zigzag_record,
)
from .data import BasisData, extract_data
from .sequences import SequencePlan, recheck

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyMember:
    """
    One X_i with its log, its classes v_0..v_k and Stein bookkeeping

    Attributes:
        index: i in -1..n
        handlebody: The constructed handlebody (pending auxiliary handles unfinished)
        log: Modification log reproducing it from the input
        classes: v_0..v_k as chains on this member
        expected_genus: Genus claimed for each class
        stein: True when the member is Stein after finishing zig-zags, None when not claimed
        pairing_data: Data for max_pairing (members i >= 1 only)
    """

    index: int
    handlebody: Handlebody
    log: ModificationLog
    classes: Tuple[ClassVector, ...]
    expected_genus: Tuple[int, ...]
    stein: Optional[bool]
    pairing_data: Optional[PairingData] = None

    @property
    def witnesses(self) -> Tuple[GenusWitness, ...]:
        return self.handlebody.witnesses

    def witness_for(self, cls: ClassVector) -> Optional[GenusWitness]:
        """Lowest-genus stored witness for exactly this class"""
        matches = [w for w in self.witnesses if w.cls == cls]
        return min(matches, key=lambda w: w.genus) if matches else None

    def finished(self, choice: Optional[SteinStructureChoice] = None) -> Handlebody:
        """The member after the finishing zig-zags of a Stein structure choice"""
        if choice is None:
            choice = SteinStructureChoice.uniform(self.handlebody)
        return apply_choice(self.handlebody, choice)


@dataclass(frozen=True)
class Family:
    """The constructed members X_{-1}, X_0, X_1..X_n and what they were built from"""

    base: Handlebody
    data: BasisData
    plan: SequencePlan
    members: Tuple[FamilyMember, ...]
    input_good_stein: bool

    @property
    def n(self) -> int:
        return len(self.members) - 2

    @property
    def indices(self) -> List[int]:
        return [member.index for member in self.members]

    def member(self, i: int) -> FamilyMember:
        for member in self.members:
            if member.index == i:
                return member
        raise PlanError(f"No member X_{i} in a family of size {self.n}")

    def classes_dict(self) -> Dict[str, Any]:
        return {
            str(m.index): {f"v{j}": cls.to_list() for j, cls in enumerate(m.classes)}
            for m in self.members
        }

    def witnesses_dict(self) -> Dict[str, Any]:
        return {str(m.index): [w.to_dict() for w in m.witnesses] for m in self.members}

    def output_files(self) -> Dict[str, Any]:
        """Directory layout: X_{i}.json, log_{i}.json, plan.json, data.json, classes.json, witnesses.json"""
        files: Dict[str, Any] = {
            'plan.json': self.plan.to_dict(),
            'data.json': self.data.to_dict(),
            'classes.json': self.classes_dict(),
            'witnesses.json': self.witnesses_dict(),
        }
        for m in self.members:
            files[f"X_{m.index}.json"] = m.handlebody.to_dict()
            files[f"log_{m.index}.json"] = m.log.to_dict()
        return files


def _step(h: Handlebody, log: ModificationLog,
          record: ModificationRecord) -> Tuple[Handlebody, ModificationLog, ModificationRecord]:
    result, fresh = apply_record(h, record)
    return result, log.extended(fresh), fresh


def _zigzag_to(h: Handlebody, log: ModificationLog, target: str,
               tb: int, rot: int) -> Tuple[Handlebody, ModificationLog]:
    try:
        t, d = zigzag_params(h.handle(target), tb, rot)
    except LegendrianError as e:
        raise PlanError(f"Zig-zag target unreachable: {e}") from e
    if t == 0:
        return h, log
    h, log, _ = _step(h, log, zigzag_record(target, t, d))
    return h, log


def _prepare(h: Handlebody, data: BasisData, q: Tuple[int, ...],
              with_zigzags: bool) -> Tuple[Handlebody, ModificationLog, List[Optional[str]], List[int]]:
    """W+(q_j) and zig-zags on K_1..K_l; returns delta ids and the W record positions"""
    log = ModificationLog(h)
    deltas: List[Optional[str]] = [None]
    w_positions: List[int] = []
    for j in range(1, data.l + 1):
        kj = data.ids[j]
        delta = None
        if q[j] > 0:
            w_positions.append(len(log.records))
            h, log, fresh = _step(h, log, ModificationRecord(RecordKind.W_PLUS, target=kj, p=q[j]))
            delta = fresh.created[1]
        deltas.append(delta)
        if not with_zigzags:
            continue
        handle = h.handle(kj)
        t = handle.tb - (data.m[j] + 1)
        if t < 0:
            raise PlanError(f"K_{j}: tb {handle.tb} already below m_j+1 = {data.m[j] + 1}")
        if j <= data.k:
            if t < abs(handle.rot):
                raise PlanError(f"K_{j}: {t} zig-zags cannot bring |rot| = {abs(handle.rot)} to <= 1")
            d = (t - handle.rot) // 2
            if q[j] == 0 and (t - handle.rot) % 2:
                # stop one zig-zag short at rot 0; the last one is a Stein choice
                h, log = _zigzag_to(h, log, kj, data.m[j] + 2, 0)
                continue
        else:
            d = min(max((t - handle.rot) // 2, 0), t)
        h, log = _zigzag_to(h, log, kj, data.m[j] + 1, handle.rot + 2 * d - t)
        if j > data.k and delta is not None:
            h, log = _zigzag_to(h, log, delta, 1, h.handle(delta).rot - 1)
    return h, log, deltas, w_positions


def _check_witnesses(member: FamilyMember) -> None:
    for j, (cls, genus) in enumerate(zip(member.classes, member.expected_genus)):
        witness = member.witness_for(cls)
        if witness is None or witness.genus != genus:
            found = None if witness is None else witness.genus
            raise PlanError(f"X_{member.index}: witness for v_{j} has genus {found}, expected {genus}")


def build_family(h: Handlebody, data: BasisData, plan: SequencePlan,
                 n: Optional[int] = None) -> Family:
    """
    Build X_{-1}, X_0, X_1..X_n

    Args:
        h: Input handlebody the basic data was read from
        data: Basic data
        plan: Sequence plan valid for data
        n: Family size; defaults to the plan's length

    Returns:
        Family

    Raises:
        PlanError: If the plan is invalid or a construction step is unreachable
    """
    plan = recheck(data, plan)
    if not plan.valid:
        raise PlanError(f"Plan is not valid for this input: {plan.failures}")
    n = plan.n if n is None else n
    if not 1 <= n <= plan.n:
        raise PlanError(f"Family size {n} outside 1..{plan.n}")

    q, k = plan.q, data.k
    m0, t0, r0, g0 = data.m[0], data.t[0], data.r[0], data.g[0]
    k0 = data.k0
    good_stein = is_good_stein(h, data.basis_ids)

    # prepare K_1..K_l, then stack W-(p_i) on K_0
    h0, log0, deltas, prep_w = _prepare(h, data, q, with_zigzags=True)
    stack_w: List[int] = []
    gammas: List[str] = []
    for i in range(1, n + 1):
        stack_w.append(len(log0.records))
        h0, log0, fresh = _step(h0, log0, ModificationRecord(RecordKind.W_MINUS, target=k0, p=plan.p_at(i)))
        gammas.append(fresh.created[1])

    size = h0.handle_count
    k_units = [ClassVector.unit(size, h0.index_of(data.ids[j])) for j in range(k + 1)]

    def basis_classes(twisted_back: bool) -> Tuple[List[ClassVector], List[int]]:
        classes, genera = [], []
        for j in range(1, k + 1):
            if deltas[j] is None or twisted_back:
                classes.append(k_units[j])
                genera.append(data.g[j])
            else:
                delta = ClassVector.unit(size, h0.index_of(deltas[j]))
                classes.append(k_units[j] - delta.scaled(q[j]))
                genera.append(data.g[j] + q[j])
        return classes, genera

    members: List[FamilyMember] = []

    # twist the preparation back
    if data.l == 0:
        h_minus, log_minus = h0, log0
    else:
        _, log_minus, _, _ = _prepare(h, data, q, with_zigzags=False)
        for i in range(1, n + 1):
            log_minus = log_minus.extended(ModificationRecord(RecordKind.W_MINUS, target=k0, p=plan.p_at(i)))
        log_minus = log_minus.extended(*(swap_record(pos) for pos in prep_w))
        h_minus = replay(log_minus)
    rest, rest_genus = basis_classes(twisted_back=True)
    members.append(FamilyMember(-1, h_minus, log_minus, tuple([k_units[0]] + rest),
                                tuple([g0] + rest_genus), True if good_stein else None))

    rest, rest_genus = basis_classes(twisted_back=False)
    members.append(FamilyMember(0, h0, log0, tuple([k_units[0]] + rest),
                                tuple([g0] + rest_genus), True if good_stein else None))

    # twist the i-th W-(p_i)
    for i in range(1, n + 1):
        p_i = plan.p_at(i)
        log_i = log0.extended(swap_record(stack_w[i - 1]))
        h_i = replay(log_i)
        k0_handle = h_i.handle(k0)
        t = t0 + p_i - m0 - 1
        sign = 1 if r0 >= 0 else -1
        h_i, log_i = _zigzag_to(h_i, log_i, k0, m0 + 1, sign * (t + abs(r0)))
        k0_rot = h_i.handle(k0).rot
        gamma_rot = -1 if k0_rot >= 0 else 1
        h_i, log_i = _zigzag_to(h_i, log_i, gammas[i - 1], 1, gamma_rot)
        logger.debug(f"X_{i}: K_0 tb {k0_handle.tb}->{m0 + 1}, rot {k0_handle.rot}->{k0_rot}")

        gamma = ClassVector.unit(size, h_i.index_of(gammas[i - 1]))
        v0 = k_units[0] - gamma.scaled(p_i)
        classes = tuple([v0] + rest)
        pairing_data = PairingData(
            i=i, p_i=p_i, t0=t0, m0=m0, r0=r0,
            q=tuple(q[1:k + 1]), classes=classes, delta_ids=tuple(deltas[1:k + 1]),
            basis_ids=tuple(data.ids[1:k + 1]))
        members.append(FamilyMember(i, h_i, log_i, classes, tuple([g0 + p_i] + rest_genus),
                                    True, pairing_data))

    for member in members:
        _check_witnesses(member)
        if member.stein and not is_stein_handlebody(member.finished()):
            raise PlanError(f"X_{member.index} is not Stein after finishing zig-zags")

    family = Family(h, data, plan, tuple(members), good_stein)
    logger.info(f"Built family of size {n} from '{k0}' ({plan.variant.value}); "
                f"input good Stein: {good_stein}")
    return family


def family_from_files(files: Dict[str, Any]) -> Family:
    """
    Rebuild a family from its directory files and compare it with what was stored

    The input handlebody is the base of log_0.json; the basis comes from
    data.json and the plan from plan.json (re-checked, never trusted).

    Raises:
        PlanError: Missing files, an invalid plan, or a stored member that differs
            from the rebuilt one
    """
    for name in ('plan.json', 'data.json', 'log_0.json'):
        if name not in files:
            raise PlanError(f"Family directory has no {name}")
    try:
        base = ModificationLog.from_dict(files['log_0.json']).base
    except ModificationError as e:
        raise PlanError(f"log_0.json: {e}") from e
    stored = files['data.json']
    try:
        ids, k = list(stored['ids']), int(stored['k'])
    except (KeyError, TypeError, ValueError) as e:
        raise PlanError(f"data.json: {e}") from e
    data = extract_data(base, ids[:k + 1], ids[0] if ids else None)
    plan = SequencePlan.from_dict(files['plan.json'])
    family = build_family(base, data, plan)

    for member in family.members:
        name = f"X_{member.index}.json"
        if name in files and files[name] != member.handlebody.to_dict():
            raise PlanError(f"{name} differs from the member rebuilt from its log and plan")
    logger.info(f"Rebuilt family of size {family.n} from stored files")
    return family
