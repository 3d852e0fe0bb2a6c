"""
Hodge Degeneration Engine
Exact Hodge numbers of local systems over punctured curves
"""

__version__ = '1.0.0'
__author__ = 'Hodge Engine Team'
__description__ = 'Exact monodromy classification, weight filtrations and Hodge numbers of H^1(j_*V)'
