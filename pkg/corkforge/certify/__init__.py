"""
Machine-checkable certificates over constructed families

Usage:
    from corkforge.certify import certify_family, d3_family

    certificate = certify_family(family)
    print(certificate.distinct_pairs())
    report = d3_family(family)
    assert report.all_distinct
"""

from .contact import D3Report, Incompatibility, contact_incompatibilities, d3_family
from .exoticity import (
    NOT_DISTINGUISHED,
    ExoticityCertificate,
    ThresholdChecks,
    adjunction_sweep,
    certify_family,
    m_value,
)
from .reports import (
    HomeoReport,
    NonsteinReport,
    SteinNonsteinCertificate,
    SteinStatus,
    certify_stein_nonstein,
    homeo_report,
    verify_nonstein,
)

__all__ = [
    'D3Report', 'Incompatibility', 'contact_incompatibilities', 'd3_family',
    'NOT_DISTINGUISHED', 'ExoticityCertificate', 'ThresholdChecks', 'adjunction_sweep',
    'certify_family', 'm_value',
    'HomeoReport', 'NonsteinReport', 'SteinNonsteinCertificate', 'SteinStatus',
    'certify_stein_nonstein', 'homeo_report', 'verify_nonstein',
]
