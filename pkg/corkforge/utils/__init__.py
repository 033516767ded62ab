"""
Shared helpers: deterministic JSON I/O and, in utils.fuzz, seeded random inputs

Usage:
    from corkforge.utils import read_json, write_bundle
    from corkforge.utils.fuzz import make_rng, random_handlebody
"""

from .serialization import (
    dumps,
    format_rational,
    loads,
    read_bundle,
    read_json,
    write_bundle,
    write_json,
)

__all__ = [
    'dumps', 'format_rational', 'loads',
    'read_bundle', 'read_json', 'write_bundle', 'write_json',
]
