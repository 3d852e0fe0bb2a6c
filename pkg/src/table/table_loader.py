"""
Table Loader
Reads the transcribed Calabi-Yau Hodge-number table
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from loguru import logger

from ..utils.errors import MalformedInput
from ..utils.json_codec import TABLE_SCHEMA, load_json, validate_document

DEFAULT_KMAX = 5
OPTION_COLUMNS = ('h40', 'h31', 'h22', 'a', 'b')

_TERM = re.compile(r'([+-]?)(\d*)(k?)')

Entry = Union[int, str]


@dataclass(frozen=True)
class TableRow:
    """
    One printed row of the table, with symbolic entries already evaluated

    Option columns hold tuples of equal length; position i of every
    column belongs to the same correlated assignment.
    """

    model_id: int
    model: str
    t_infty_label: str
    e: int
    h1: int
    h40: Tuple[int, ...]
    h31: Tuple[int, ...]
    h22: Tuple[int, ...]
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    e_label: str = ''
    k: Optional[int] = None

    @property
    def options(self) -> int:
        return len(self.h40)

    def assignment(self, index: int) -> Dict[str, int]:
        if not 0 <= index < self.options:
            raise IndexError(f"Row has {self.options} assignments, no index {index}")
        return {column: getattr(self, column)[index] for column in OPTION_COLUMNS}

    @property
    def key(self) -> str:
        suffix = f" ({self.e_label}, k={self.k})" if self.k is not None else ''
        return f"model {self.model_id} e={self.e}{suffix}"

    def to_dict(self) -> Dict:
        return {
            'model_id': self.model_id,
            'model': self.model,
            't_infty': self.t_infty_label,
            'e': self.e,
            'e_label': self.e_label or str(self.e),
            'k': self.k,
            'h1': self.h1,
            **{column: list(getattr(self, column)) for column in OPTION_COLUMNS},
        }


def parse_linear_in_k(text: str) -> Tuple[int, int]:
    """
    Parse an expression c*k + d such as "2k-2", "k-1", "k" or "3"

    Returns:
        (c, d)
    """
    compact = text.replace(' ', '')
    if not compact:
        raise ValueError("empty expression")
    coefficient, constant = 0, 0
    position = 0
    while position < len(compact):
        match = _TERM.match(compact, position)
        sign, digits, variable = match.groups()
        if match.end() == position or not (digits or variable):
            raise ValueError(f"cannot parse {text!r}")
        if position > 0 and not sign:
            raise ValueError(f"missing operator in {text!r}")
        value = int(digits) if digits else 1
        if sign == '-':
            value = -value
        if variable:
            coefficient += value
        else:
            constant += value
        position = match.end()
    return coefficient, constant


def _evaluate(entry: Entry, k: Optional[int], where: str) -> int:
    if isinstance(entry, int):
        return entry
    try:
        coefficient, constant = parse_linear_in_k(entry)
    except ValueError as e:
        raise MalformedInput(f"{where}: {e}")
    if coefficient and k is None:
        raise MalformedInput(f"{where}: symbolic entry {entry!r} in a row whose e is not symbolic")
    return coefficient * (k or 0) + constant


def _column_options(raw: Union[Entry, Sequence[Entry]], k: Optional[int], where: str) -> Tuple[int, ...]:
    values = raw if isinstance(raw, list) else [raw]
    return tuple(_evaluate(v, k, where) for v in values)


def _expand_row(model: Dict, row: Dict, row_index: int, kmax: int) -> List[TableRow]:
    where = f"model {model['id']} row {row_index}"
    e_raw = row['e']
    symbolic = isinstance(e_raw, str)
    if symbolic:
        try:
            e_coefficient, _ = parse_linear_in_k(e_raw)
        except ValueError as e:
            raise MalformedInput(f"{where} column e: {e}")
        if not e_coefficient:
            raise MalformedInput(f"{where} column e: {e_raw!r} does not depend on k")
    k_values = range(1, kmax + 1) if symbolic else [None]

    expanded = []
    for k in k_values:
        e = _evaluate(e_raw, k, f"{where} column e")
        if e < 1:
            raise MalformedInput(f"{where} column e: cover degree {e} is not positive")
        columns = {c: _column_options(row[c], k, f"{where} column {c}") for c in OPTION_COLUMNS}
        length = max(len(v) for v in columns.values())
        for name, values in columns.items():
            if len(values) == 1:
                columns[name] = values * length
            elif len(values) != length:
                raise MalformedInput(
                    f"{where} column {name}: {len(values)} options, but the row has {length}"
                )
        expanded.append(TableRow(
            model_id=model['id'],
            model=model['model'],
            t_infty_label=model['t_infty'],
            e=e,
            h1=_evaluate(row['h1'], k, f"{where} column h1"),
            e_label=e_raw if symbolic else '',
            k=k,
            **columns,
        ))
    return expanded


def parse_table(document: Dict, kmax: int = DEFAULT_KMAX) -> List[TableRow]:
    """
    Turn a decoded table document into rows, expanding symbolic rows for k = 1..kmax

    Raises:
        MalformedInput: schema violations or unequal option lists, with row and column
    """
    if kmax < 1:
        raise MalformedInput(f"kmax must be positive, got {kmax}")
    validate_document(document, TABLE_SCHEMA, 'table')
    rows: List[TableRow] = []
    for model in document['models']:
        for row_index, row in enumerate(model['rows']):
            rows.extend(_expand_row(model, row, row_index, kmax))
    return rows


def load_table(path: Union[str, Path], kmax: int = DEFAULT_KMAX) -> List[TableRow]:
    """
    Load the table file

    Args:
        path: JSON file in the table schema
        kmax: Largest k for symbolic rows

    Returns:
        Rows in file order
    """
    document = load_json(path, TABLE_SCHEMA, 'table')
    rows = parse_table(document, kmax)
    logger.info(f"Loaded {len(rows)} table rows from {path} (kmax={kmax})")
    return rows
