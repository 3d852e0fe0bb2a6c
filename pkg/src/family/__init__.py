"""
Family Module
Family descriptors, base change and the L2 degree ledger
"""

from .descriptor import FamilyDescriptor, MarkedPoint
from .resolver import ResolvedFamily, base_change, classify_point, resolve
from .degree_ledger import (
    DegreeLedger,
    bundle_degrees,
    closed_form_hodge,
    degree_ledger,
    family_report,
    hodge_from_ledger,
)

__all__ = [
    'FamilyDescriptor',
    'MarkedPoint',
    'ResolvedFamily',
    'base_change',
    'classify_point',
    'resolve',
    'DegreeLedger',
    'bundle_degrees',
    'closed_form_hodge',
    'degree_ledger',
    'family_report',
    'hodge_from_ledger',
]
