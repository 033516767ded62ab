"""Smith and Hermite normal forms over the integers"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from ..errors import SmithNormalFormError

logger = logging.getLogger(__name__)

IntMatrix = List[List[int]]


@dataclass(frozen=True)
class SmithForm:
    """U * M * V = D with U, V unimodular and the diagonal of D a divisor chain"""

    diagonal: Tuple[int, ...]
    D: Tuple[Tuple[int, ...], ...]
    U: Tuple[Tuple[int, ...], ...]
    V: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    def cokernel_factors(self) -> List[int]:
        """Invariant factors of the cokernel: trivial 1s dropped, a 0 per free summand"""
        rows = len(self.D)
        factors = [d for d in self.diagonal if d != 1]
        return factors + [0] * (rows - len(self.diagonal))


def _to_domain(m: Sequence[Sequence[int]], rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in m], (rows, cols), ZZ)


def identity(size: int) -> IntMatrix:
    return _to_rows(DomainMatrix.eye(size, ZZ))


def _to_rows(dm: DomainMatrix) -> IntMatrix:
    return [[int(x) for x in row] for row in dm.to_Matrix().tolist()]


def smith_normal_form(m: Sequence[Sequence[int]], cols: int = None) -> SmithForm:
    """
    Compute the Smith normal form with transformation matrices

    Args:
        m: Integer matrix as a list of rows
        cols: Column count, required when `m` has no rows

    Returns:
        SmithForm with U * m * V == D verified exactly

    Raises:
        SmithNormalFormError: If the decomposition fails verification
    """
    rows = len(m)
    if cols is None:
        cols = len(m[0]) if rows else 0
    matrix = [[int(x) for x in row] for row in m]

    if rows == 0 or cols == 0:
        D = [[0] * cols for _ in range(rows)]
        return SmithForm((), _freeze(D), _freeze(identity(rows)), _freeze(identity(cols)))

    a, s, t = smith_normal_decomp(_to_domain(matrix, rows, cols))
    D, U, V = _to_rows(a), _to_rows(s), _to_rows(t)

    # normalise signs so every invariant factor is non-negative
    for i in range(min(rows, cols)):
        if D[i][i] < 0:
            D[i] = [-x for x in D[i]]
            U[i] = [-x for x in U[i]]

    diagonal = tuple(D[i][i] for i in range(min(rows, cols)))
    _verify(matrix, D, U, V, diagonal, rows, cols)
    return SmithForm(diagonal, _freeze(D), _freeze(U), _freeze(V))


def _verify(m: IntMatrix, D: IntMatrix, U: IntMatrix, V: IntMatrix,
            diagonal: Tuple[int, ...], rows: int, cols: int) -> None:
    product = _to_domain(U, rows, rows).matmul(_to_domain(m, rows, cols)).matmul(_to_domain(V, cols, cols))
    if _to_rows(product) != D:
        raise SmithNormalFormError(f"U*M*V != D for a {rows}x{cols} matrix")
    for i in range(rows):
        for j in range(cols):
            if i != j and D[i][j] != 0:
                raise SmithNormalFormError(f"Off-diagonal entry at ({i}, {j})")
    for prev, cur in zip(diagonal, diagonal[1:]):
        if (prev == 0 and cur != 0) or (prev != 0 and cur % prev != 0):
            raise SmithNormalFormError(f"Divisor chain broken: {diagonal}")
    if abs(_det(U, rows)) != 1 or abs(_det(V, cols)) != 1:
        raise SmithNormalFormError("Transformation matrix is not unimodular")


def _det(m: IntMatrix, size: int) -> int:
    if size == 0:
        return 1
    return int(_to_domain(m, size, size).det())


def _freeze(m: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in m)


def invariant_factors(m: Sequence[Sequence[int]], cols: int = None) -> Tuple[int, ...]:
    return smith_normal_form(m, cols).diagonal


def echelon_basis(vectors: Sequence[Sequence[int]], width: int) -> IntMatrix:
    """
    Row Hermite normal form of the lattice spanned by `vectors`

    Pivots are taken leftmost first, pivot entries are positive and entries
    above a pivot are reduced into [0, pivot). The result depends only on the
    lattice, never on the generating set. Zero rows are dropped.
    """
    rows = [[int(x) for x in v] for v in vectors if any(v)]
    if not rows or width == 0:
        return []
    # generators as columns with coordinates reversed: the bottom pivots of the
    # column Hermite form are then the leftmost entries of the generators
    flipped = _to_domain(
        [[row[width - 1 - i] for row in rows] for i in range(width)], width, len(rows))
    form = _to_rows(hermite_normal_form(flipped))
    rank = len(form[0])
    return [[form[width - 1 - i][col] for i in range(width)] for col in reversed(range(rank))]
