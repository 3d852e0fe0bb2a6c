"""
Table Verification Module
Loading and auditing the Calabi-Yau Hodge-number table
"""

from .table_loader import DEFAULT_KMAX, TableRow, load_table, parse_linear_in_k, parse_table
from .auditor import AssignmentVerdict, AuditReport, RowAudit, audit_all, audit_row, audit_table_row

__all__ = [
    'DEFAULT_KMAX',
    'TableRow',
    'load_table',
    'parse_linear_in_k',
    'parse_table',
    'AssignmentVerdict',
    'AuditReport',
    'RowAudit',
    'audit_all',
    'audit_row',
    'audit_table_row',
]
