"""
Hodge Formulas Module
Closed-form Hodge numbers, check-sums and degree bounds
"""

from .formulas import (
    DegenerationCounts,
    HodgeInput,
    HodgeNumbers,
    check_sum,
    hodge_decomposed,
    hodge_weight1,
    hodge_weight2,
    hodge_weight3,
    higgs_arrow_is_isomorphism,
    line_bundle_h0,
    line_bundle_h1,
)
from .bounds import (
    ArakelovVerdict,
    arakelov_bound,
    arakelov_check,
    arakelov_degree_cap,
    parabolic_degree,
)


def hodge_numbers(data: HodgeInput) -> HodgeNumbers:
    """Dispatch to the closed formula of the input's weight"""
    return {1: hodge_weight1, 2: hodge_weight2, 3: hodge_weight3}[data.weight](data)


__all__ = [
    'DegenerationCounts',
    'HodgeInput',
    'HodgeNumbers',
    'check_sum',
    'hodge_decomposed',
    'hodge_numbers',
    'hodge_weight1',
    'hodge_weight2',
    'hodge_weight3',
    'higgs_arrow_is_isomorphism',
    'line_bundle_h0',
    'line_bundle_h1',
    'ArakelovVerdict',
    'arakelov_bound',
    'arakelov_check',
    'arakelov_degree_cap',
    'parabolic_degree',
]
