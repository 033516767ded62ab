"""Basic data of the input handlebody read off its Legendrian records"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from ..algebra.handlebody import ClassVector, Handlebody, Role, require_valid
from ..algebra.homology import kernel_basis, spans_h2
from ..errors import HandlebodyError, PlanError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisData:
    """
    Integers (m_j, t_j, r_j) for every 2-handle and g_j for the basis handles

    Handles are ordered K_0, K_1..K_k (the basis) then K_{k+1}..K_l (the rest).
    """

    k: int
    l: int
    ids: Tuple[str, ...]
    m: Tuple[int, ...]
    t: Tuple[int, ...]
    r: Tuple[int, ...]
    g: Tuple[int, ...]

    @property
    def k0(self) -> str:
        return self.ids[0]

    @property
    def basis_ids(self) -> Tuple[str, ...]:
        return self.ids[:self.k + 1]

    @property
    def b2(self) -> int:
        return self.k + 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'k': self.k,
            'l': self.l,
            'ids': list(self.ids),
            'm': list(self.m),
            't': list(self.t),
            'r': list(self.r),
            'g': list(self.g),
        }


def extract_data(h: Handlebody, basis_ids: Optional[Sequence[str]] = None,
                 k0: Optional[str] = None) -> BasisData:
    """
    Read the basic data of a Legendrian handlebody

    Args:
        h: Valid handlebody with Legendrian data on every 2-handle
        basis_ids: Handles spanning H2; defaults to every handle with role basis
        k0: The distinguished basis handle K_0; defaults to the first basis handle

    Returns:
        BasisData

    Raises:
        PlanError: Missing Legendrian data or genus, a basis handle over a
            1-handle, or a basis that does not span H2
    """
    try:
        require_valid(h)
    except HandlebodyError as e:
        raise PlanError(str(e)) from e

    if basis_ids is None:
        basis_ids = [handle.id for handle in h.handles if handle.role == Role.BASIS]
    basis_ids = list(basis_ids)
    if not basis_ids:
        raise PlanError("No basis handles designated")
    if k0 is None:
        k0 = basis_ids[0]
    if k0 not in basis_ids:
        raise PlanError(f"K_0 '{k0}' is not one of the basis handles {basis_ids}")
    basis_ids.remove(k0)
    basis_ids.insert(0, k0)

    try:
        indices = [h.index_of(handle_id) for handle_id in basis_ids]
    except HandlebodyError as e:
        raise PlanError(str(e)) from e
    rest = [j for j in range(h.handle_count) if j not in indices]
    order = indices + rest

    for j in order:
        handle = h.handles[j]
        if not handle.has_legendrian:
            raise PlanError(f"Handle '{handle.id}' has no Legendrian data")
    for j in indices:
        handle = h.handles[j]
        if any(handle.run_over):
            raise PlanError(f"Basis handle '{handle.id}' goes over a 1-handle")
        if handle.genus is None:
            raise PlanError(f"Basis handle '{handle.id}' has no genus witness")

    classes = [ClassVector.unit(h.handle_count, j) for j in indices]
    if len(indices) != len(kernel_basis(h)) or not spans_h2(h, classes):
        raise PlanError(f"Basis {basis_ids} does not span H2")

    handles = [h.handles[j] for j in order]
    data = BasisData(
        k=len(indices) - 1,
        l=len(order) - 1,
        ids=tuple(handle.id for handle in handles),
        m=tuple(handle.framing for handle in handles),
        t=tuple(handle.tb for handle in handles),
        r=tuple(handle.rot for handle in handles),
        g=tuple(h.handles[j].genus for j in indices),
    )
    logger.info(f"Basic data: k={data.k}, l={data.l}, K_0='{data.k0}' "
                f"(m={data.m[0]}, tb={data.t[0]}, rot={data.r[0]}, g={data.g[0]})")
    return data
