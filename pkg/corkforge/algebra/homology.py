"""Homological invariants of abstract 2-handlebodies"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from sympy import Matrix

from .handlebody import ClassVector, Handlebody, require_valid
from .snf import IntMatrix, echelon_basis, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyProfile:
    """
    Everything compared when two handlebodies are claimed to share homology

    The intersection matrix is expressed in the canonical H2 basis returned by
    kernel_basis(); boundary data comes from the surgery matrix obtained by
    replacing every dotted circle with a 0-framed unknot.
    """

    h1_invariant_factors: Tuple[int, ...]
    b2: int
    intersection_matrix: Tuple[Tuple[int, ...], ...]
    boundary_h1_invariant_factors: Tuple[int, ...]
    boundary_b1: int
    euler: int
    signature: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'h1_invariant_factors': list(self.h1_invariant_factors),
            'b2': self.b2,
            'intersection_matrix': [list(row) for row in self.intersection_matrix],
            'boundary_h1_invariant_factors': list(self.boundary_h1_invariant_factors),
            'boundary_b1': self.boundary_b1,
            'euler': self.euler,
            'signature': self.signature,
        }


def kernel_basis(h: Handlebody) -> List[ClassVector]:
    """
    Canonical Z-basis of H2 = ker(boundary)

    The kernel is read off the Smith decomposition (the trailing columns of V)
    and put in row Hermite normal form, so the result is a function of the
    kernel lattice alone.
    """
    c = h.handle_count
    if h.one_handles == 0:
        return [ClassVector.unit(c, j) for j in range(c)]
    form = smith_normal_form(h.boundary_matrix(), cols=c)
    V = form.V
    raw = [[V[i][j] for i in range(c)] for j in range(form.rank, c)]
    return [ClassVector(tuple(row)) for row in echelon_basis(raw, c)]


def intersection_matrix(h: Handlebody, basis: Sequence[ClassVector]) -> IntMatrix:
    return [[h.pairing(a, b) for b in basis] for a in basis]


def surgery_matrix(h: Handlebody) -> IntMatrix:
    """Linking matrix of the boundary surgery link (dotted circles first)"""
    s, c = h.one_handles, h.handle_count
    d = h.boundary_matrix()
    top = [[0] * s + list(d[a]) for a in range(s)]
    bottom = [
        [d[a][j] for a in range(s)] + list(h.linking[j])
        for j in range(c)
    ]
    return top + bottom


def signature(q: Sequence[Sequence[int]]) -> int:
    """
    Signature of a symmetric integer matrix, computed exactly

    Symmetric matrices have only real eigenvalues, so Descartes' rule of signs
    on the characteristic polynomial counts positive and negative eigenvalues
    exactly.
    """
    size = len(q)
    if size == 0:
        return 0
    coeffs = [int(x) for x in Matrix([list(row) for row in q]).charpoly().all_coeffs()]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    degree = len(coeffs) - 1
    mirrored = [x * (-1) ** (degree - i) for i, x in enumerate(coeffs)]
    return _sign_changes(coeffs) - _sign_changes(mirrored)


def _sign_changes(coeffs: Sequence[int]) -> int:
    signs = [1 if x > 0 else -1 for x in coeffs if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def homology(h: Handlebody) -> HomologyProfile:
    """
    Compute the homology profile of a handlebody

    Args:
        h: A valid handlebody

    Returns:
        HomologyProfile

    Raises:
        HandlebodyError: If h fails validation
    """
    require_valid(h)
    s, c = h.one_handles, h.handle_count

    h1 = smith_normal_form(h.boundary_matrix(), cols=c).cokernel_factors()
    basis = kernel_basis(h)
    q = intersection_matrix(h, basis)

    surgery = surgery_matrix(h)
    boundary = smith_normal_form(surgery, cols=s + c).cokernel_factors()

    profile = HomologyProfile(
        h1_invariant_factors=tuple(h1),
        b2=len(basis),
        intersection_matrix=tuple(tuple(row) for row in q),
        boundary_h1_invariant_factors=tuple(boundary),
        boundary_b1=sum(1 for d in boundary if d == 0),
        euler=1 - s + c,
        signature=signature(q),
    )
    logger.debug(f"Homology: b2={profile.b2}, H1={list(profile.h1_invariant_factors)}, "
                 f"boundary H1={list(profile.boundary_h1_invariant_factors)}")
    return profile


def profiles_equal(a: HomologyProfile, b: HomologyProfile) -> bool:
    """Field-by-field equality; intersection matrices compared as matrices, not up to congruence"""
    return a == b


def in_h2(h: Handlebody, cls: ClassVector) -> bool:
    return not any(h.boundary_of(cls))

def spans_h2(h: Handlebody, classes: Sequence[ClassVector]) -> bool:
    """True iff the given cycles generate the whole of H2"""
    c = h.handle_count
    if any(not in_h2(h, cls) for cls in classes):
        return False
    return echelon_basis([cls.coeffs for cls in classes], c) == \
        [list(b.coeffs) for b in kernel_basis(h)]

