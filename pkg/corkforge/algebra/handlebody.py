"""Abstract 2-handlebody data model

A handlebody is stored purely algebraically: the number of 1-handles, the
framed 2-handle records and the symmetric linking matrix. Embedded surfaces
are represented by genus witnesses (a homology class plus a genus).
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import HandlebodyError

logger = logging.getLogger(__name__)


class Role(str, Enum):
    """Role tag of a 2-handle"""
    BASIS = 'basis'
    EXTRA = 'extra'
    AUX_PLUS = 'auxiliary_plus'
    AUX_MINUS = 'auxiliary_minus'

    @property
    def is_auxiliary(self) -> bool:
        return self in (Role.AUX_PLUS, Role.AUX_MINUS)


class Provenance(str, Enum):
    """How a genus witness came to exist"""
    INPUT = 'input'
    PROP_GENUS_SHIFT = 'prop_genus_shift'
    BOUNDARY_SUM = 'boundary_sum'
    STABILIZATION = 'stabilization'


def _ints(values: Iterable[Any]) -> Tuple[int, ...]:
    return tuple(int(v) for v in values)


@dataclass(frozen=True)
class TwoHandle:
    """A framed 2-handle, optionally with a Legendrian presentation"""

    id: str
    role: Role
    framing: int
    tb: Optional[int] = None
    rot: Optional[int] = None
    run_over: Tuple[int, ...] = ()
    genus: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'role', Role(self.role))
        object.__setattr__(self, 'run_over', _ints(self.run_over))

    @property
    def has_legendrian(self) -> bool:
        return self.tb is not None and self.rot is not None

    def replace(self, **changes) -> 'TwoHandle':
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'id': self.id,
            'role': self.role.value,
            'framing': self.framing,
            'tb': self.tb,
            'rot': self.rot,
            'run_over': list(self.run_over),
            'genus': self.genus,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TwoHandle':
        def opt(key):
            value = data.get(key)
            return None if value is None else int(value)

        return cls(
            id=str(data['id']),
            role=Role(data.get('role', Role.BASIS.value)),
            framing=int(data['framing']),
            tb=opt('tb'),
            rot=opt('rot'),
            run_over=_ints(data.get('run_over', ())),
            genus=opt('genus'),
        )


@dataclass(frozen=True)
class ClassVector:
    """Integer coefficients of a 2-chain, indexed by the 2-handles of one handlebody"""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _ints(self.coeffs))

    @classmethod
    def unit(cls, size: int, index: int) -> 'ClassVector':
        return cls(tuple(1 if j == index else 0 for j in range(size)))

    @classmethod
    def zero(cls, size: int) -> 'ClassVector':
        return cls((0,) * size)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, index: int) -> int:
        return self.coeffs[index]

    def __add__(self, other: 'ClassVector') -> 'ClassVector':
        self._check_size(other)
        return ClassVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'ClassVector') -> 'ClassVector':
        self._check_size(other)
        return ClassVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'ClassVector':
        return ClassVector(tuple(-a for a in self.coeffs))

    def scaled(self, factor: int) -> 'ClassVector':
        return ClassVector(tuple(factor * a for a in self.coeffs))

    def padded(self, before: int = 0, after: int = 0) -> 'ClassVector':
        """Zero-extend on either side (used when handles are added around this chain)"""
        return ClassVector((0,) * before + self.coeffs + (0,) * after)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check_size(self, other: 'ClassVector') -> None:
        if len(other) != len(self):
            raise HandlebodyError(
                f"Class vectors of different sizes: {len(self)} vs {len(other)}")

    def to_list(self) -> List[int]:
        return list(self.coeffs)


@dataclass(frozen=True)
class GenusWitness:
    """A class known to be represented by an embedded surface of the given genus"""

    cls: ClassVector
    genus: int
    provenance: Provenance = Provenance.INPUT

    def __post_init__(self):
        object.__setattr__(self, 'provenance', Provenance(self.provenance))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'class': self.cls.to_list(),
            'genus': self.genus,
            'provenance': self.provenance.value,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'GenusWitness':
        return cls(
            cls=ClassVector(_ints(data['class'])),
            genus=int(data['genus']),
            provenance=Provenance(data.get('provenance', Provenance.INPUT.value)),
        )


def input_witnesses(handles: Sequence[TwoHandle]) -> Tuple[GenusWitness, ...]:
    """Witnesses read off the genus fields of the handle records"""
    size = len(handles)
    return tuple(
        GenusWitness(ClassVector.unit(size, j), handle.genus, Provenance.INPUT)
        for j, handle in enumerate(handles)
        if handle.genus is not None
    )


@dataclass(frozen=True)
class Handlebody:
    """
    One 0-handle, `one_handles` 1-handles and the given 2-handles

    Attributes:
        one_handles: Number of 1-handles (dotted circles)
        handles: Ordered 2-handle records
        linking: Symmetric linking matrix, diagonal entries are framings
        witnesses: Genus witnesses; derived from the handles' genus fields when omitted
    """

    one_handles: int
    handles: Tuple[TwoHandle, ...]
    linking: Tuple[Tuple[int, ...], ...]
    witnesses: Optional[Tuple[GenusWitness, ...]] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, 'one_handles', int(self.one_handles))
        object.__setattr__(self, 'handles', tuple(self.handles))
        object.__setattr__(self, 'linking', tuple(_ints(row) for row in self.linking))
        if self.witnesses is None:
            object.__setattr__(self, 'witnesses', input_witnesses(self.handles))
        else:
            object.__setattr__(self, 'witnesses', tuple(self.witnesses))

    @classmethod
    def empty(cls) -> 'Handlebody':
        return cls(0, (), ())

    @property
    def handle_count(self) -> int:
        return len(self.handles)

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(handle.id for handle in self.handles)

    def index_of(self, handle_id: str) -> int:
        for j, handle in enumerate(self.handles):
            if handle.id == handle_id:
                return j
        raise HandlebodyError(f"Unknown 2-handle id '{handle_id}'")

    def handle(self, handle_id: str) -> TwoHandle:
        return self.handles[self.index_of(handle_id)]

    def boundary_matrix(self) -> List[List[int]]:
        """The s x c cellular boundary map; column j is the run-over vector of handle j"""
        return [
            [handle.run_over[a] for handle in self.handles]
            for a in range(self.one_handles)
        ]

    def boundary_of(self, cls: ClassVector) -> Tuple[int, ...]:
        if len(cls) != self.handle_count:
            raise HandlebodyError(
                f"Class of length {len(cls)} on a handlebody with {self.handle_count} 2-handles")
        return tuple(
            sum(c * handle.run_over[a] for c, handle in zip(cls.coeffs, self.handles))
            for a in range(self.one_handles)
        )

    def square(self, cls: ClassVector) -> int:
        """Self-intersection of a class via the linking matrix"""
        return self.pairing(cls, cls)

    def pairing(self, a: ClassVector, b: ClassVector) -> int:
        if len(a) != self.handle_count or len(b) != self.handle_count:
            raise HandlebodyError("Class vector length does not match handle count")
        return sum(
            a[i] * self.linking[i][j] * b[j]
            for i in range(self.handle_count)
            for j in range(self.handle_count)
        )

    def with_changes(self, **changes) -> 'Handlebody':
        return replace(self, **changes)

    def replace_handle(self, index: int, handle: TwoHandle) -> 'Handlebody':
        handles = list(self.handles)
        handles[index] = handle
        return replace(self, handles=tuple(handles))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'one_handles': self.one_handles,
            'handles': [handle.to_dict() for handle in self.handles],
            'linking': [list(row) for row in self.linking],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Handlebody':
        try:
            handles = tuple(TwoHandle.from_dict(h) for h in data.get('handles', []))
            return cls(
                one_handles=int(data.get('one_handles', 0)),
                handles=handles,
                linking=tuple(_ints(row) for row in data.get('linking', [])),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise HandlebodyError(f"Malformed handlebody record: {e}") from e


@dataclass(frozen=True)
class ValidationReport:
    """Every violated handlebody invariant; empty means well-formed"""

    violations: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {'valid': self.ok, 'violations': list(self.violations)}


def validate(h: Handlebody) -> ValidationReport:
    """
    Check every structural invariant of a handlebody

    Args:
        h: Handlebody to inspect

    Returns:
        ValidationReport listing each violation (never raises for bad data)
    """
    problems: List[str] = []
    c = h.handle_count

    if h.one_handles < 0:
        problems.append(f"negative 1-handle count {h.one_handles}")

    seen = set()
    for handle in h.handles:
        if handle.id in seen:
            problems.append(f"duplicate id '{handle.id}'")
        seen.add(handle.id)

    if len(h.linking) != c or any(len(row) != c for row in h.linking):
        problems.append(f"linking matrix is not {c}x{c}")
    else:
        for i in range(c):
            if h.linking[i][i] != h.handles[i].framing:
                problems.append(
                    f"handle '{h.handles[i].id}': linking diagonal {h.linking[i][i]} "
                    f"!= framing {h.handles[i].framing}")
            for j in range(i + 1, c):
                if h.linking[i][j] != h.linking[j][i]:
                    problems.append(f"linking matrix not symmetric at ({i}, {j})")

    for handle in h.handles:
        label = f"handle '{handle.id}'"
        if len(handle.run_over) != h.one_handles:
            problems.append(
                f"{label}: run_over has length {len(handle.run_over)}, expected {h.one_handles}")
        if (handle.tb is None) != (handle.rot is None):
            problems.append(f"{label}: tb and rot must be present together")
        if handle.genus is not None:
            if handle.genus < 0:
                problems.append(f"{label}: negative genus {handle.genus}")
            if any(handle.run_over):
                problems.append(f"{label}: witness over 1-handle")
            if handle.has_legendrian and handle.tb + abs(handle.rot) > 2 * handle.genus - 1:
                problems.append(
                    f"{label}: slice-Bennequin bound tb+|rot| <= 2g-1 violated "
                    f"({handle.tb}+{abs(handle.rot)} > {2 * handle.genus - 1})")

    for k, witness in enumerate(h.witnesses):
        label = f"witness {k}"
        if len(witness.cls) != c:
            problems.append(f"{label}: class has length {len(witness.cls)}, expected {c}")
            continue
        if witness.genus < 0:
            problems.append(f"{label}: negative genus {witness.genus}")
        if all(len(handle.run_over) == h.one_handles for handle in h.handles):
            if any(h.boundary_of(witness.cls)):
                problems.append(f"{label}: class is not a cycle")

    if problems:
        logger.debug(f"Validation found {len(problems)} problem(s)")
    return ValidationReport(tuple(problems))


def require_valid(h: Handlebody) -> None:
    """Raise HandlebodyError when validate() reports anything"""
    report = validate(h)
    if not report.ok:
        raise HandlebodyError("Invalid handlebody: " + "; ".join(report.violations))
