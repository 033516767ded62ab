"""The d3 invariant of the boundary contact structure"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict

from ..algebra.handlebody import Handlebody
from ..algebra.homology import homology
from ..errors import LegendrianError
from ..utils.serialization import format_rational
from .stein import is_stein_handlebody

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContactInvariant:
    d3: Fraction
    c1_squared: Fraction
    euler: int
    signature: int

    def __post_init__(self):
        expected = (self.c1_squared - 2 * self.euler - 3 * self.signature) / 4
        if self.d3 != expected:
            raise LegendrianError(f"d3 {self.d3} inconsistent with its inputs ({expected})")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'd3': format_rational(self.d3),
            'c1_squared': format_rational(self.c1_squared),
            'euler': self.euler,
            'signature': self.signature,
        }


def c1_squared_b2one(pairing: int, square: int) -> Fraction:
    """
    c1^2 for b2 = 1, from the pairing with a generator and its square

    Raises:
        LegendrianError: If square == 0
    """
    if square == 0:
        raise LegendrianError("c1^2 is undefined by this formula when the generator has square 0")
    return Fraction(pairing * pairing, square)


def d3(h: Handlebody, pairing: int) -> ContactInvariant:
    """
    d3 = (c1^2 - 2e - 3 sigma) / 4 for a Stein handlebody with b2 = 1

    Args:
        h: Stein handlebody with b2 = 1 and nonzero form
        pairing: <c1, v> on a generator v of H2

    Raises:
        LegendrianError: If any precondition fails
    """
    profile = homology(h)
    if profile.b2 != 1:
        raise LegendrianError(f"d3 needs b2 = 1, got b2 = {profile.b2}")
    square = profile.intersection_matrix[0][0]
    if square == 0:
        raise LegendrianError("d3 needs a nonzero intersection form")
    if not is_stein_handlebody(h):
        raise LegendrianError("d3 needs a Stein handlebody")
    c1_sq = c1_squared_b2one(pairing, square)
    value = (c1_sq - 2 * profile.euler - 3 * profile.signature) / 4
    logger.debug(f"d3: pairing={pairing}, c1^2={c1_sq}, d3={value}")
    return ContactInvariant(value, c1_sq, profile.euler, profile.signature)
