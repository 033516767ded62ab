"""
Random handlebody generators for property suites and `example random`

All randomness comes from a seeded numpy Generator so every draw is reproducible.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from config import Config

from ..algebra.handlebody import Handlebody, Role, TwoHandle
from ..modifications.moves import ModificationRecord, RecordKind

logger = logging.getLogger(__name__)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(Config.FUZZ_SEED if seed is None else seed)


def _int(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in [low, high]"""
    return int(rng.integers(low, high + 1))


def random_handlebody(rng: np.random.Generator, max_one_handles: int = 4,
                      max_two_handles: int = 6, max_entry: Optional[int] = None) -> Handlebody:
    """
    A valid handlebody with Legendrian data on every 2-handle and no genus witnesses

    Args:
        rng: numpy Generator
        max_one_handles: Upper bound on s
        max_two_handles: Upper bound on c (at least one handle is drawn)
        max_entry: Bound on |framing|, |linking|, |run_over|, |tb|, |rot|
    """
    bound = Config.FUZZ_MAX_ENTRY if max_entry is None else max_entry
    s = _int(rng, 0, max_one_handles)
    c = _int(rng, 1, max_two_handles)

    upper = rng.integers(-bound, bound + 1, size=(c, c))
    linking = np.triu(upper) + np.triu(upper, 1).T
    handles = [
        TwoHandle(
            id=f"h{j}",
            role=Role.EXTRA,
            framing=int(linking[j, j]),
            tb=_int(rng, -bound, bound),
            rot=_int(rng, -bound, bound),
            run_over=tuple(int(x) for x in rng.integers(-bound, bound + 1, size=s)),
        )
        for j in range(c)
    ]
    rows = tuple(tuple(int(x) for x in row) for row in linking)
    return Handlebody(s, tuple(handles), rows)


def random_good_stein_b2one(rng: np.random.Generator, with_extra: Optional[bool] = None) -> Handlebody:
    """
    A good Stein handlebody with b2 = 1

    K0 is a Legendrian knot with genus g0 satisfying tb + |rot| <= 2g0 - 1 and
    tb + rot odd, attached with framing tb - 1. Optionally a second Stein
    handle runs once over a single 1-handle, so it adds nothing to H2.
    """
    g0 = _int(rng, 0, 2)
    r0 = _int(rng, -3, 3)
    t0 = 2 * g0 - 1 - abs(r0) - _int(rng, 0, 4)
    if (t0 + r0) % 2 == 0:
        t0 -= 1
    k0 = TwoHandle(id='K0', role=Role.BASIS, framing=t0 - 1, tb=t0, rot=r0, genus=g0)

    if with_extra is None:
        with_extra = bool(rng.integers(0, 2))
    if not with_extra:
        return Handlebody(0, (k0.replace(run_over=()),), ((t0 - 1,),))

    tb = _int(rng, -4, 2)
    rot = _int(rng, -3, 3)
    if (tb + rot) % 2 == 0:
        rot += 1
    lk = _int(rng, -3, 3)
    extra = TwoHandle(id='E1', role=Role.EXTRA, framing=tb - 1, tb=tb, rot=rot, run_over=(1,))
    h = Handlebody(1, (k0.replace(run_over=(0,)), extra), ((t0 - 1, lk), (lk, tb - 1)))
    logger.debug(f"random good Stein: g0={g0}, tb0={t0}, rot0={r0}, extra tb={tb}")
    return h


def random_w_moves(rng: np.random.Generator, h: Handlebody, count: int,
                   max_p: int = 4) -> List[ModificationRecord]:
    """Up to `count` W+/W- records targeting handles of h"""
    records: List[ModificationRecord] = []
    targets: Tuple[str, ...] = tuple(handle.id for handle in h.handles if handle.has_legendrian)
    if not targets:
        return records
    for _ in range(count):
        kind = RecordKind.W_PLUS if rng.integers(0, 2) else RecordKind.W_MINUS
        target = targets[int(rng.integers(0, len(targets)))]
        records.append(ModificationRecord(kind, target=target, p=_int(rng, 1, max_p)))
    return records
