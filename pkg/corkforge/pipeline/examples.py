"""Worked example inputs"""

import logging

from ..algebra.handlebody import Handlebody, Role, TwoHandle

logger = logging.getLogger(__name__)


def example_u(m: int) -> Handlebody:
    """
    U(m): a single m-framed unknot with no 1-handles

    The Legendrian unknot is stabilized d times, d = -m-1 for m <= -2 and
    d = 1 otherwise, so tb = -d and rot = d-1 (rot is 0 for m >= -1).

    Args:
        m: Framing

    Returns:
        Handlebody with one basis handle 'K0' of genus 0
    """
    if m <= -2:
        tb, rot = m + 1, -m - 2
    else:
        tb, rot = -1, 0
    k0 = TwoHandle(id='K0', role=Role.BASIS, framing=m, tb=tb, rot=rot, run_over=(), genus=0)
    logger.debug(f"U({m}): tb={tb}, rot={rot}")
    return Handlebody(0, (k0,), ((m,),))
