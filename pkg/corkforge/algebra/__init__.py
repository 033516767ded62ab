"""
Exact-integer data model of abstract 2-handlebodies and their homology

Usage:
    from corkforge.algebra import Handlebody, homology

    h = Handlebody.from_dict(record)
    report = validate(h)
    if report.ok:
        profile = homology(h)
        print(profile.intersection_matrix, profile.boundary_h1_invariant_factors)
"""

from .handlebody import (
    ClassVector,
    GenusWitness,
    Handlebody,
    Provenance,
    Role,
    TwoHandle,
    ValidationReport,
    input_witnesses,
    require_valid,
    validate,
)
from .homology import (
    HomologyProfile,
    homology,
    in_h2,
    kernel_basis,
    profiles_equal,
    signature,
    spans_h2,
    surgery_matrix,
)
from .snf import SmithForm, echelon_basis, invariant_factors, smith_normal_form

__all__ = [
    'ClassVector', 'GenusWitness', 'Handlebody', 'Provenance', 'Role', 'TwoHandle',
    'ValidationReport', 'input_witnesses', 'require_valid', 'validate',
    'HomologyProfile', 'homology', 'in_h2', 'kernel_basis',
    'profiles_equal', 'signature', 'spans_h2', 'surgery_matrix',
    'SmithForm', 'echelon_basis', 'invariant_factors', 'smith_normal_form',
]
