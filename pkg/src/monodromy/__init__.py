"""
Monodromy Module
Local monodromy classification, weight filtrations and L2 twist ledgers
"""

from .classifier import (
    MonodromyClass,
    MonodromyKind,
    allowed_kinds,
    classify,
    power_and_classify,
    strict_kind,
)
from .weight_filtration import (
    WeightFiltration,
    jordan_weights,
    nilpotent_exp,
    nilpotent_log,
    weight_filtration,
)
from .twist_ledger import ChainAlignment, TwistLedger, hodge_lines, twist_ledger, twist_ledger_for

__all__ = [
    'MonodromyClass',
    'MonodromyKind',
    'allowed_kinds',
    'classify',
    'power_and_classify',
    'strict_kind',
    'WeightFiltration',
    'jordan_weights',
    'nilpotent_exp',
    'nilpotent_log',
    'weight_filtration',
    'ChainAlignment',
    'TwistLedger',
    'hodge_lines',
    'twist_ledger',
    'twist_ledger_for',
]
