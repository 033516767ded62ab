"""
The construction pipeline: basic data, q/p sequences and the families X_i

Usage:
    from corkforge.pipeline import extract_data, solve_plan, build_family, example_u

    h = example_u(0)
    data = extract_data(h)
    plan = solve_plan(data, n=3, variant='standard')
    family = build_family(h, data, plan)
    x1 = family.member(1).handlebody
"""

from .data import BasisData, extract_data
from .examples import example_u
from .family import Family, FamilyMember, build_family, family_from_files
from .nonstein import SteinNonsteinFamily, SummedMember, stein_nonstein_family
from .sequences import (
    Evidence,
    SequencePlan,
    Variant,
    check_plan,
    recheck,
    solve_p,
    solve_plan,
    solve_q,
)

__all__ = [
    'BasisData', 'extract_data', 'example_u',
    'Family', 'FamilyMember', 'build_family', 'family_from_files',
    'SteinNonsteinFamily', 'SummedMember', 'stein_nonstein_family',
    'Evidence', 'SequencePlan', 'Variant', 'check_plan', 'recheck', 'solve_p', 'solve_plan',
    'solve_q',
]
