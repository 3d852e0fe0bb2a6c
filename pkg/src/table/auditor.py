"""
Table Auditor
Checks every table row against the weight-3 Hodge-number formulas on the projective line
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd
from loguru import logger

from ..hodge import arakelov_degree_cap
from .table_loader import TableRow

Counts = Tuple[int, int, int, int]

# Points of the unramified family: 0, 1 and infinity on P^1
BASE_POINTS = 3


@dataclass(frozen=True)
class AssignmentVerdict:
    """
    Verdicts for one correlated assignment of a row

    The sum check compares the printed h^1 with 2 h^{4,0} + 2 h^{3,1} + h^{2,2}.
    Feasibility asks for nonnegative counts solving the weight-3 formulas at
    genus 0; the solutions form a one-parameter family in t = |III|.
    """

    index: int
    values: Dict[str, int]
    component_total: int
    sum_ok: bool
    n_iv: int
    consistency_ok: bool
    t_range: Optional[Tuple[int, int]]
    solutions: Tuple[Counts, ...]

    @property
    def feasible(self) -> bool:
        return self.consistency_ok and self.t_range is not None

    @property
    def passed(self) -> bool:
        return self.sum_ok and self.feasible

    def explain(self, h1: int) -> List[str]:
        v = self.values
        problems = []
        if not self.sum_ok:
            problems.append(
                f"sum check: h1={h1} but 2*h40+2*h31+h22 = 2*{v['h40']}+2*{v['h31']}+{v['h22']} "
                f"= {self.component_total}"
            )
        if not self.consistency_ok:
            problems.append(
                f"feasibility: h22+2*h31+2*a+2*|IV| = {v['h22']}+2*{v['h31']}+2*{v['a']}+2*{self.n_iv} "
                f"= {v['h22'] + 2 * v['h31'] + 2 * v['a'] + 2 * self.n_iv}, expected h1+2 = {h1 + 2}"
            )
        elif self.t_range is None:
            problems.append(f"feasibility: no nonnegative counts (|IV| = h40+1-a = {self.n_iv})")
        return problems

    def to_dict(self) -> Dict:
        return {
            'index': self.index,
            'values': dict(self.values),
            'component_total': self.component_total,
            'sum_check': self.sum_ok,
            'n_iv': self.n_iv,
            'consistency': self.consistency_ok,
            't_range': list(self.t_range) if self.t_range is not None else None,
            'solutions': [list(s) for s in self.solutions],
            'feasible': self.feasible,
            'passed': self.passed,
        }


@dataclass(frozen=True)
class RowAudit:
    row: TableRow
    assignments: Tuple[AssignmentVerdict, ...]
    flags: Tuple[str, ...]
    arakelov_ok: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return any(v.passed for v in self.assignments)

    def to_dict(self) -> Dict:
        return {
            'row': self.row.to_dict(),
            'status': 'PASS' if self.passed else 'FLAG',
            'assignments': [v.to_dict() for v in self.assignments],
            'flags': list(self.flags),
            'arakelov_ok': self.arakelov_ok,
        }


def audit_row(row: TableRow, index: int) -> AssignmentVerdict:
    """
    Check one correlated assignment of a row

    Args:
        row: Table row
        index: Position in the row's option lists

    Returns:
        AssignmentVerdict; data problems are verdicts, never exceptions
    """
    values = row.assignment(index)
    h40, h31, h22, a, b = (values[c] for c in ('h40', 'h31', 'h22', 'a', 'b'))

    component_total = 2 * h40 + 2 * h31 + h22
    sum_ok = component_total == row.h1

    n_iv = h40 + 1 - a
    unipotent_i = h22 + 2 + 2 * b          # |I| + |III|
    unipotent_ii = h31 + 2 + a - b - n_iv  # |II| + |III|
    consistency_ok = h22 + 2 * h31 + 2 * a + 2 * n_iv == row.h1 + 2

    t_range = None
    solutions: Tuple[Counts, ...] = ()
    t_max = min(unipotent_i, unipotent_ii)
    if consistency_ok and n_iv >= 0 and t_max >= 0:
        t_range = (0, t_max)
        solutions = tuple((unipotent_i - t, unipotent_ii - t, t, n_iv) for t in range(t_max + 1))

    return AssignmentVerdict(index, values, component_total, sum_ok, n_iv,
                             consistency_ok, t_range, solutions)


def audit_table_row(row: TableRow) -> RowAudit:
    """Audit all assignments of a row and collect the failing arithmetic"""
    verdicts = tuple(audit_row(row, i) for i in range(row.options))
    flags: List[str] = []
    if not any(v.passed for v in verdicts):
        for verdict in verdicts:
            flags.extend(f"option {verdict.index}: {problem}" for problem in verdict.explain(row.h1))

    arakelov_ok = None
    if row.e == 1:
        cap = arakelov_degree_cap(3, 0, BASE_POINTS)
        arakelov_ok = all(a <= cap for a in row.a)
        if not arakelov_ok:
            flags.append(f"arakelov: a={list(row.a)} exceeds the cap {cap} for e=1")
    return RowAudit(row, verdicts, tuple(flags), arakelov_ok)


@dataclass(frozen=True)
class AuditReport:
    rows: Tuple[RowAudit, ...]

    @property
    def passed_count(self) -> int:
        return sum(1 for r in self.rows if r.passed and r.arakelov_ok is not False)

    @property
    def flagged(self) -> Tuple[RowAudit, ...]:
        return tuple(r for r in self.rows if not r.passed or r.arakelov_ok is False)

    @property
    def flagged_count(self) -> int:
        return len(self.flagged)

    def to_dict(self) -> Dict:
        return {
            'summary': {
                'rows': len(self.rows),
                'passed': self.passed_count,
                'flagged': self.flagged_count,
                'flagged_rows': [r.row.key for r in self.flagged],
            },
            'rows': [r.to_dict() for r in self.rows],
        }

    def to_frame(self) -> pd.DataFrame:
        """One line per row and assignment"""
        records = []
        for audit in self.rows:
            row = audit.row
            for verdict in audit.assignments:
                records.append({
                    'model': row.model_id,
                    'name': row.model,
                    't_infty': row.t_infty_label,
                    'e': row.e,
                    'k': row.k,
                    'option': verdict.index,
                    'h1': row.h1,
                    **verdict.values,
                    'total': verdict.component_total,
                    'sum': 'ok' if verdict.sum_ok else 'FAIL',
                    'n_iv': verdict.n_iv,
                    't_range': (f"{verdict.t_range[0]}..{verdict.t_range[1]}"
                                if verdict.t_range is not None else '-'),
                    'status': 'PASS' if audit.passed else 'FLAG',
                })
        columns = ['model', 'name', 't_infty', 'e', 'k', 'option', 'h1', 'h40', 'h31', 'h22',
                   'a', 'b', 'total', 'sum', 'n_iv', 't_range', 'status']
        return pd.DataFrame.from_records(records, columns=columns)

    def to_text(self) -> str:
        frame = self.to_frame()
        lines = [frame.to_string(index=False) if not frame.empty else '(empty table)', '']
        lines.append(f"{self.passed_count} passed, {self.flagged_count} flagged")
        for audit in self.flagged:
            lines.append(f"FLAG {audit.row.key}")
            lines.extend(f"  {flag}" for flag in audit.flags)
        return '\n'.join(lines)


def audit_all(rows: Sequence[TableRow], workers: int = 1) -> AuditReport:
    """
    Audit every row; the report keeps the input order

    Args:
        rows: Table rows
        workers: Thread count for fanning rows out

    Returns:
        AuditReport
    """
    if workers > 1 and len(rows) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            audits = tuple(pool.map(audit_table_row, rows))
    else:
        audits = tuple(audit_table_row(row) for row in rows)

    report = AuditReport(audits)
    for audit in report.flagged:
        logger.warning(f"Flagged {audit.row.key}: {'; '.join(audit.flags)}")
    logger.success(f"Audited {len(audits)} rows: {report.passed_count} passed, "
                   f"{report.flagged_count} flagged")
    return report
