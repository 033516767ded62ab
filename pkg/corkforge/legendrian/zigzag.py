"""Zig-zag (Legendrian stabilization) bookkeeping"""

import logging

from ..algebra.handlebody import TwoHandle
from ..errors import LegendrianError

logger = logging.getLogger(__name__)


def zigzag(k: TwoHandle, t: int, d: int) -> TwoHandle:
    """
    Add t zig-zags to a Legendrian 2-handle, d of them going down

    tb drops by t and rot changes by 2d - t. t = 0 is the identity.

    Args:
        k: Handle with Legendrian data
        t: Number of zig-zags (>= 0)
        d: Number of downward zig-zags (0 <= d <= t)

    Returns:
        New TwoHandle; framing, run_over and genus are untouched

    Raises:
        LegendrianError: On missing tb/rot or out-of-range t, d
    """
    if not k.has_legendrian:
        raise LegendrianError(f"Handle '{k.id}' has no Legendrian data")
    if t < 0 or d < 0 or d > t:
        raise LegendrianError(f"Zig-zag parameters need 0 <= d <= t, got t={t}, d={d}")
    return k.replace(tb=k.tb - t, rot=k.rot + 2 * d - t)


def zigzag_params(k: TwoHandle, tb: int, rot: int) -> tuple:
    """
    The (t, d) taking k to the requested tb and rot

    Raises:
        LegendrianError: If the target cannot be reached by zig-zags
    """
    if not k.has_legendrian:
        raise LegendrianError(f"Handle '{k.id}' has no Legendrian data")
    t = k.tb - tb
    if t < 0:
        raise LegendrianError(f"Handle '{k.id}': cannot raise tb from {k.tb} to {tb} by zig-zags")
    twice_d = rot - k.rot + t
    if twice_d % 2 != 0 or not 0 <= twice_d // 2 <= t:
        raise LegendrianError(
            f"Handle '{k.id}': rot {rot} unreachable from rot {k.rot} with {t} zig-zags")
    logger.debug(f"Zig-zag '{k.id}': t={t}, d={twice_d // 2} -> tb={tb}, rot={rot}")
    return t, twice_d // 2
