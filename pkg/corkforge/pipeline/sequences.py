"""
The q and p integer sequences: minimal solvers and a validity checker

Every condition is one-sided, so the minimal solution is found in closed form
(the least integer x with 2x > R is R // 2 + 1) and then re-verified by
check_plan, which is also used for externally supplied plans.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..errors import PlanError
from .data import BasisData

logger = logging.getLogger(__name__)


class Variant(str, Enum):
    """Which family of p conditions a plan must satisfy"""
    STANDARD = 'standard'
    STRENGTHENED = 'strengthened'
    NONSTEIN = 'nonstein'
    NONSTEIN_MINUS1 = 'nonstein_minus1'

    @property
    def strengthened(self) -> bool:
        return self != Variant.STANDARD

    @property
    def partner_framing(self) -> Optional[int]:
        """Framing of the unknot summed on for the Stein/non-Stein family"""
        return {Variant.NONSTEIN: 0, Variant.NONSTEIN_MINUS1: -1}.get(self)


_OPS = {
    '>': lambda a, b: a > b,
    '>=': lambda a, b: a >= b,
    '<': lambda a, b: a < b,
    '<=': lambda a, b: a <= b,
    '==': lambda a, b: a == b,
}


@dataclass(frozen=True)
class Evidence:
    """One evaluated inequality lhs <op> rhs"""

    name: str
    statement: str
    index: int
    lhs: int
    op: str
    rhs: int

    @property
    def ok(self) -> bool:
        return _OPS[self.op](self.lhs, self.rhs)

    @property
    def reason(self) -> str:
        return f"{self.statement} violated at {self.index}: {self.lhs} {self.op} {self.rhs} is false"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'statement': self.statement,
            'index': self.index,
            'lhs': self.lhs,
            'op': self.op,
            'rhs': self.rhs,
            'ok': self.ok,
        }


@dataclass(frozen=True)
class SequencePlan:
    """
    q (indexed 0..l) and p (indexed 1..n; p_{-1} = p_0 = 0) with evaluated evidence

    Attributes:
        variant: Condition family the plan was checked against
        q: q_0..q_l
        p: p_1..p_n
        evidence: Every evaluated condition
    """

    variant: Variant
    q: Tuple[int, ...]
    p: Tuple[int, ...]
    evidence: Tuple[Evidence, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'variant', Variant(self.variant))
        object.__setattr__(self, 'q', tuple(int(x) for x in self.q))
        object.__setattr__(self, 'p', tuple(int(x) for x in self.p))
        object.__setattr__(self, 'evidence', tuple(self.evidence))

    @property
    def n(self) -> int:
        return len(self.p)

    def p_at(self, i: int) -> int:
        """p_i with p_{-1} = p_0 = 0"""
        if i <= 0:
            return 0
        return self.p[i - 1]

    @property
    def valid(self) -> bool:
        return all(e.ok for e in self.evidence)

    @property
    def failures(self) -> List[str]:
        return [e.reason for e in self.evidence if not e.ok]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'variant': self.variant.value,
            'q': list(self.q),
            'p': [0, 0] + list(self.p),
            'n': self.n,
            'valid': self.valid,
            'evidence': [e.to_dict() for e in self.evidence],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SequencePlan':
        """Read variant, q and p (indexed from -1); stored evidence is ignored and must be recomputed"""
        try:
            p = [int(x) for x in data['p']]
            if len(p) < 3 or p[0] != 0 or p[1] != 0:
                raise ValueError("p must be listed from p_{-1} = p_0 = 0")
            p = p[2:]
            return cls(Variant(data.get('variant', Variant.STANDARD.value)),
                       tuple(int(x) for x in data['q']), tuple(p))
        except (KeyError, TypeError, ValueError) as e:
            raise PlanError(f"Malformed plan: {e}") from e


def _least_double_above(bound: int) -> int:
    """Least integer x with 2x > bound"""
    return bound // 2 + 1


def solve_q(data: BasisData) -> Tuple[int, ...]:
    """
    Minimal q: q_0 = 0 and, for j >= 1, the least q_j >= 0 with
    q_j + (t_j - 1) - m_j >= 0, and also >= |r_j| when j <= k
    """
    q = [0]
    for j in range(1, data.l + 1):
        need = max(0, data.m[j] - data.t[j] + 1)
        if j <= data.k:
            need = max(need, abs(data.r[j]) + data.m[j] - data.t[j] + 1)
        q.append(need)
    logger.debug(f"solve_q: {q}")
    return tuple(q)


def _strengthened_applies(data: BasisData, variant: Variant) -> bool:
    # with b2 = 1 the strengthened family is the standard one
    return variant.strengthened and data.k >= 1


def solve_p(data: BasisData, q: Sequence[int], n: int, variant: Variant = Variant.STANDARD) -> Tuple[int, ...]:
    """
    Minimal increasing p_1..p_n meeting every condition of the variant

    Raises:
        PlanError: If n < 1 or q has the wrong length
    """
    variant = Variant(variant)
    if n < 1:
        raise PlanError(f"Family size n must be >= 1, got {n}")
    if len(q) != data.l + 1:
        raise PlanError(f"q has length {len(q)}, expected {data.l + 1}")
    m0, t0, r0, g0 = data.m[0], data.t[0], data.r[0], data.g[0]
    a = (t0 - 1) - m0 + abs(r0)
    b = (t0 - 1) + abs(r0)
    strong = _strengthened_applies(data, variant)

    candidates = [1, m0 - t0 + 1]
    for j in range(data.k + 1):
        genus_bound = 2 * (data.g[j] + q[j]) - 2
        candidates.append(_least_double_above(genus_bound - a - data.m[j]))
        if strong:
            candidates.append(_least_double_above(genus_bound - a + data.m[j]))
    if variant == Variant.NONSTEIN:
        candidates.append(_least_double_above(2 - a))
    elif variant == Variant.NONSTEIN_MINUS1:
        candidates.append(_least_double_above(1 - a))

    p: List[int] = []
    previous = 0
    for i in range(1, n + 1):
        ladder = 2 * (g0 + previous) - 2
        options = [previous + 1, _least_double_above(ladder - b)]
        if strong:
            options.append(_least_double_above(ladder - b + 2 * m0))
        if i == 1:
            options.extend(candidates)
        previous = max(options)
        p.append(previous)
    logger.debug(f"solve_p ({variant.value}): {p}")
    return tuple(p)


def check_plan(data: BasisData, q: Sequence[int], p: Sequence[int],
               variant: Variant = Variant.STANDARD) -> SequencePlan:
    """
    Evaluate every condition of the variant on the given q and p

    Args:
        data: Basic data
        q: q_0..q_l
        p: p_1..p_n
        variant: Condition family

    Returns:
        SequencePlan carrying the evidence; plan.valid tells whether all hold

    Raises:
        PlanError: If the vectors have the wrong shape
    """
    variant = Variant(variant)
    q = tuple(int(x) for x in q)
    p = tuple(int(x) for x in p)
    if len(q) != data.l + 1:
        raise PlanError(f"q has length {len(q)}, expected {data.l + 1}")
    if not p:
        raise PlanError("p must contain at least p_1")

    m, t, r, g = data.m, data.t, data.r, data.g
    m0, t0, r0, g0 = m[0], t[0], r[0], g[0]
    a = (t0 - 1) - m0 + abs(r0)
    b = (t0 - 1) + abs(r0)
    ev: List[Evidence] = []

    ev.append(Evidence('q_zero', 'q_0 = 0', 0, q[0], '==', 0))
    for j in range(1, data.l + 1):
        ev.append(Evidence('q_nonnegative', 'q_j >= 0', j, q[j], '>=', 0))
        ev.append(Evidence('q_tb_reachable', 'q_j+(t_j-1)-m_j >= 0', j,
                           q[j] + (t[j] - 1) - m[j], '>=', 0))
        if j <= data.k:
            ev.append(Evidence('q_rotation_room', 'q_j+(t_j-1)-m_j >= |r_j|', j,
                               q[j] + (t[j] - 1) - m[j], '>=', abs(r[j])))

    def p_at(i: int) -> int:
        return 0 if i <= 0 else p[i - 1]

    for i in range(1, len(p) + 1):
        ev.append(Evidence('p_increasing', 'p_i > p_{i-1}', i, p_at(i), '>', p_at(i - 1)))
    ev.append(Evidence('p_tb_reachable', 'p_1+(t_0-1)-m_0 >= 0', 1, p[0] + (t0 - 1) - m0, '>=', 0))
    for j in range(data.k + 1):
        ev.append(Evidence('p_basis_separated', '2p_1+(t_0-1)-m_0+|r_0|+m_j > 2(g_j+q_j)-2', j,
                           2 * p[0] + a + m[j], '>', 2 * (g[j] + q[j]) - 2))
    for i in range(1, len(p) + 1):
        ev.append(Evidence('p_genus_ladder', '2p_i+(t_0-1)+|r_0| > 2(g_0+p_{i-1})-2', i,
                           2 * p_at(i) + b, '>', 2 * (g0 + p_at(i - 1)) - 2))

    if _strengthened_applies(data, variant):
        for j in range(data.k + 1):
            ev.append(Evidence('p_basis_separated_reversed',
                               '2p_1+(t_0-1)-m_0+|r_0|-m_j > 2(g_j+q_j)-2', j,
                               2 * p[0] + a - m[j], '>', 2 * (g[j] + q[j]) - 2))
        for i in range(1, len(p) + 1):
            ev.append(Evidence('p_genus_ladder_reversed',
                               '2p_i+(t_0-1)-2m_0+|r_0| > 2(g_0+p_{i-1})-2', i,
                               2 * p_at(i) + b - 2 * m0, '>', 2 * (g0 + p_at(i - 1)) - 2))
    if variant == Variant.NONSTEIN:
        ev.append(Evidence('p_sphere_partner', '2p_1+(t_0-1)-m_0+|r_0| > 2', 1, 2 * p[0] + a, '>', 2))
    elif variant == Variant.NONSTEIN_MINUS1:
        ev.append(Evidence('p_blowdown_partner', '2p_1+(t_0-1)-m_0+|r_0|-1 > 0', 1,
                           2 * p[0] + a - 1, '>', 0))

    plan = SequencePlan(variant, q, p, tuple(ev))
    if not plan.valid:
        logger.warning(f"Plan check failed: {plan.failures}")
    return plan


def solve_plan(data: BasisData, n: int, variant: Variant = Variant.STANDARD) -> SequencePlan:
    """
    Minimal plan for the variant, with evidence

    Raises:
        PlanError: If the minimal solution fails its own check (a solver bug)
    """
    variant = Variant(variant)
    q = solve_q(data)
    p = solve_p(data, q, n, variant)
    plan = check_plan(data, q, p, variant)
    if not plan.valid:
        raise PlanError(f"Minimal plan failed verification: {plan.failures}")
    logger.info(f"Plan ({variant.value}, n={n}): q={list(q)}, p={list(p)}")
    return plan


def recheck(data: BasisData, plan: SequencePlan) -> SequencePlan:
    """Recompute the evidence of a plan whose vectors may have been edited"""
    return replace(plan, evidence=check_plan(data, plan.q, plan.p, plan.variant).evidence)
