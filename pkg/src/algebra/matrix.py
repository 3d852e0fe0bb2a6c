"""
Rational Matrices
Exact square matrices over the rationals and subspace helpers
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from loguru import logger

from ..utils.errors import MalformedInput
from .polynomial import RationalPolynomial

Scalar = Union[int, Fraction]
Vector = Tuple[Fraction, ...]

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$')


def parse_rational(value: Union[str, int]) -> Fraction:
    """
    Parse a rational literal "p/q" or "p"

    Args:
        value: String literal or integer

    Returns:
        Fraction in lowest terms
    """
    if isinstance(value, bool):
        raise MalformedInput(f"Not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise MalformedInput(f"Rational entries must be strings or integers, got {value!r}")
    match = _RATIONAL_PATTERN.match(value)
    if not match:
        raise MalformedInput(f"Not a rational literal: {value!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise MalformedInput(f"Zero denominator in {value!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# Row reduction on plain lists of vectors; used for ranks, kernels and spans.

def row_reduce(rows: Sequence[Sequence[Scalar]]) -> Tuple[List[List[Fraction]], List[int]]:
    """
    Reduced row echelon form by exact Gauss-Jordan elimination

    Args:
        rows: Rows of a rectangular matrix

    Returns:
        Tuple of (nonzero rref rows, pivot column indices)
    """
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return [], []
    width = len(work[0])
    pivots: List[int] = []
    lead_row = 0
    for col in range(width):
        pivot = next((r for r in range(lead_row, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[lead_row], work[pivot] = work[pivot], work[lead_row]
        scale = work[lead_row][col]
        work[lead_row] = [x / scale for x in work[lead_row]]
        for r in range(len(work)):
            if r != lead_row and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[lead_row])]
        pivots.append(col)
        lead_row += 1
        if lead_row == len(work):
            break
    return work[:lead_row], pivots


def rank_of_rows(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(row_reduce(rows)[1])


def span_basis(vectors: Sequence[Sequence[Scalar]]) -> List[Vector]:
    """Canonical (rref) basis of the span of the given vectors"""
    reduced, _ = row_reduce(vectors)
    return [tuple(row) for row in reduced]


def nullspace(rows: Sequence[Sequence[Scalar]], width: int) -> List[Vector]:
    """Basis of {v : rows . v = 0}"""
    reduced, pivots = row_reduce(rows)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def extend_basis(sub: Sequence[Vector], whole: Sequence[Vector]) -> List[Vector]:
    """Vectors from `whole` completing a basis of `sub` to a basis of span(whole)"""
    chosen: List[Vector] = list(sub)
    complement: List[Vector] = []
    rank = rank_of_rows(chosen) if chosen else 0
    for v in whole:
        if rank_of_rows(chosen + [v]) > rank:
            chosen.append(v)
            complement.append(v)
            rank += 1
    return complement


def solve_coordinates(basis: Sequence[Vector], vector: Sequence[Scalar]) -> List[Fraction]:
    """Coordinates of `vector` in an independent family `basis`"""
    n = len(vector)
    k = len(basis)
    augmented = [[basis[j][i] for j in range(k)] + [vector[i]] for i in range(n)]
    reduced, pivots = row_reduce(augmented)
    if k in pivots:
        raise ValueError("Vector does not lie in the span of the basis")
    coords = [Fraction(0)] * k
    for row, p in zip(reduced, pivots):
        coords[p] = row[k]
    return coords


@dataclass(frozen=True)
class RationalMatrix:
    """
    Immutable square matrix with Fraction entries

    This is the representation of a local monodromy T and of its
    nilpotent logarithm N.
    """

    rows: Tuple[Tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        frozen = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not frozen:
            raise MalformedInput("Matrix must have at least one row")
        if any(len(row) != len(frozen) for row in frozen):
            raise MalformedInput(
                f"Matrix must be square, got {len(frozen)} rows of lengths "
                f"{[len(row) for row in frozen]}"
            )
        object.__setattr__(self, 'rows', frozen)

    # Constructors

    @classmethod
    def identity(cls, n: int) -> 'RationalMatrix':
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> 'RationalMatrix':
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[Scalar]) -> 'RationalMatrix':
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def jordan_block(cls, eigenvalue: Scalar, size: int) -> 'RationalMatrix':
        """Block with `eigenvalue` on the diagonal and ones on the superdiagonal"""
        return cls([
            [eigenvalue if i == j else (1 if j == i + 1 else 0) for j in range(size)]
            for i in range(size)
        ])

    @classmethod
    def companion(cls, polynomial: RationalPolynomial) -> 'RationalMatrix':
        """Companion matrix of a monic polynomial (char poly equals the polynomial)"""
        poly = polynomial.monic()
        n = poly.degree
        if n < 1:
            raise ValueError("Companion matrix needs a polynomial of degree >= 1")
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = 1
        for i in range(n):
            rows[i][n - 1] = -poly.coefficients[i]
        return cls(rows)

    @classmethod
    def block_diagonal(cls, *blocks: 'RationalMatrix') -> 'RationalMatrix':
        n = sum(b.size for b in blocks)
        rows = [[Fraction(0)] * n for _ in range(n)]
        offset = 0
        for block in blocks:
            for i, row in enumerate(block.rows):
                for j, x in enumerate(row):
                    rows[offset + i][offset + j] = x
            offset += block.size
        return cls(rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]]) -> 'RationalMatrix':
        n = len(columns)
        return cls([[columns[j][i] for j in range(n)] for i in range(n)])

    # Basic structure

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def columns(self) -> List[Vector]:
        return [tuple(row[j] for row in self.rows) for j in range(self.size)]

    def transpose(self) -> 'RationalMatrix':
        return RationalMatrix(self.columns())

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def is_identity(self) -> bool:
        return self == RationalMatrix.identity(self.size)

    # Arithmetic

    def __add__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_shape(other)
        return RationalMatrix(
            [a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def __sub__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_shape(other)
        return RationalMatrix(
            [a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def __neg__(self) -> 'RationalMatrix':
        return RationalMatrix([-x for x in row] for row in self.rows)

    def scale(self, factor: Scalar) -> 'RationalMatrix':
        return RationalMatrix([factor * x for x in row] for row in self.rows)

    def __matmul__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_shape(other)
        cols = other.columns()
        return RationalMatrix(
            [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols]
            for row in self.rows
        )

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        return tuple(sum((a * Fraction(b) for a, b in zip(row, vector)), Fraction(0))
                     for row in self.rows)

    def power(self, exponent: int) -> 'RationalMatrix':
        """M^e by repeated squaring; negative exponents use the inverse"""
        if exponent < 0:
            return self.inverse().power(-exponent)
        result = RationalMatrix.identity(self.size)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            exponent >>= 1
            if exponent:
                base = base @ base
        return result

    def evaluate(self, polynomial: RationalPolynomial) -> 'RationalMatrix':
        """p(M) by Horner's rule"""
        result = RationalMatrix.zero(self.size)
        ident = RationalMatrix.identity(self.size)
        for c in reversed(polynomial.coefficients):
            result = result @ self + ident.scale(c)
        return result

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.size)), Fraction(0))

    # Elimination-based invariants

    def rank(self) -> int:
        return rank_of_rows(self.rows)

    def determinant(self) -> Fraction:
        work = [list(row) for row in self.rows]
        n = self.size
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det *= work[col][col]
            for r in range(col + 1, n):
                factor = work[r][col] / work[col][col]
                if factor:
                    work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return det

    def is_invertible(self) -> bool:
        return self.determinant() != 0

    def inverse(self) -> 'RationalMatrix':
        n = self.size
        augmented = [list(row) + [Fraction(int(i == j)) for j in range(n)]
                     for i, row in enumerate(self.rows)]
        reduced, pivots = row_reduce(augmented)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("Matrix is not invertible")
        return RationalMatrix(row[n:] for row in reduced)

    def conjugate(self, p: 'RationalMatrix') -> 'RationalMatrix':
        """P M P^-1"""
        return p @ self @ p.inverse()

    def is_nilpotent(self) -> bool:
        return self.power(self.size).is_zero()

    def nilpotency_index(self) -> int:
        """Minimal k with M^k = 0; raises ValueError if M is not nilpotent"""
        current = RationalMatrix.identity(self.size)
        for k in range(1, self.size + 1):
            current = current @ self
            if current.is_zero():
                return k
        raise ValueError("Matrix is not nilpotent")

    def kernel(self) -> List[Vector]:
        return nullspace(self.rows, self.size)

    def image(self) -> List[Vector]:
        """Canonical basis of the column space"""
        return span_basis(self.columns())

    # Serialisation

    def to_dict(self) -> Dict:
        return {
            'n': self.size,
            'entries': [[format_rational(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_dict(cls, payload: Dict) -> 'RationalMatrix':
        """
        Parse the matrix JSON encoding {"n": n, "entries": [[...], ...]}

        Raises:
            MalformedInput: non-square data, bad literals, zero denominators
        """
        if not isinstance(payload, dict) or 'entries' not in payload:
            raise MalformedInput("Matrix document needs an 'entries' array")
        entries = payload['entries']
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise MalformedInput("Matrix 'entries' must be a list of rows")
        n = payload.get('n', len(entries))
        if n != len(entries) or any(len(row) != n for row in entries):
            raise MalformedInput(f"Matrix is not square of size n={n}")
        matrix = cls([parse_rational(x) for x in row] for row in entries)
        logger.debug(f"Parsed {n}x{n} rational matrix")
        return matrix

    def _check_shape(self, other: 'RationalMatrix'):
        if self.size != other.size:
            raise ValueError(f"Size mismatch: {self.size} vs {other.size}")

    def __str__(self) -> str:
        return '\n'.join('[' + ', '.join(format_rational(x) for x in row) + ']'
                         for row in self.rows)
