"""
Monodromy Weight Filtration
Nilpotent logarithms and the weight filtration of a nilpotent endomorphism
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from loguru import logger

from ..algebra import RationalMatrix, format_rational, is_unipotent, rank_of_rows, span_basis
from ..algebra.matrix import Vector, extend_basis, solve_coordinates
from ..utils.errors import PreconditionFailed


def nilpotent_log(matrix: RationalMatrix) -> RationalMatrix:
    """
    N = log(T) for unipotent T

    Truncated series sum_{k=1}^{n-1} (-1)^{k+1} (T - I)^k / k.

    Raises:
        PreconditionFailed: if T is not unipotent
    """
    if not is_unipotent(matrix):
        raise PreconditionFailed("Logarithm needs a unipotent matrix (T - I nilpotent)")
    n = matrix.size
    shifted = matrix - RationalMatrix.identity(n)
    result = RationalMatrix.zero(n)
    term = RationalMatrix.identity(n)
    for k in range(1, n):
        term = term @ shifted
        result = result + term.scale(Fraction((-1) ** (k + 1), k))
    return result


def nilpotent_exp(nilpotent: RationalMatrix) -> RationalMatrix:
    """exp(N) for nilpotent N, truncated after N^(n-1)"""
    n = nilpotent.size
    result = RationalMatrix.identity(n)
    term = RationalMatrix.identity(n)
    factorial = 1
    for k in range(1, n):
        term = term @ nilpotent
        factorial *= k
        result = result + term.scale(Fraction(1, factorial))
    return result


@dataclass(frozen=True)
class WeightFiltration:
    """
    Increasing filtration W_{-m} <= ... <= W_m of a nilpotent N

    `subspaces[k]` is a canonical (row-reduced) basis of W_k for
    k in -m..m; W_k is zero below -m and everything above m.
    """

    m: int
    dimension: int
    subspaces: Dict[int, Tuple[Vector, ...]]

    def space(self, k: int) -> Tuple[Vector, ...]:
        if k < -self.m:
            return ()
        if k >= self.m:
            return self.subspaces[self.m]
        return self.subspaces[k]

    def dim(self, k: int) -> int:
        return len(self.space(k))

    def graded_dimensions(self) -> Dict[int, int]:
        return {k: self.dim(k) - self.dim(k - 1) for k in range(-self.m, self.m + 1)}

    def violations(self, nilpotent: RationalMatrix) -> List[str]:
        """Every broken defining property; empty when the filtration is valid"""
        problems = []
        if self.dim(self.m) != self.dimension:
            problems.append(f"W_{self.m} is not the whole space")
        for k in range(-self.m, self.m + 1):
            lower, upper = list(self.space(k - 1)), list(self.space(k))
            if rank_of_rows(lower + upper) != len(upper):
                problems.append(f"W_{k - 1} is not contained in W_{k}")
            shifted = [nilpotent.apply(v) for v in upper]
            target = list(self.space(k - 2))
            if rank_of_rows(target + shifted) != len(target):
                problems.append(f"N(W_{k}) is not contained in W_{k - 2}")
        graded = self.graded_dimensions()
        for k in range(0, self.m + 1):
            if graded[k] != graded[-k]:
                problems.append(f"dim Gr_{k} = {graded[k]} differs from dim Gr_{-k} = {graded[-k]}")
                continue
            power = nilpotent.power(k)
            images = [power.apply(v) for v in self.space(k)]
            below = list(self.space(-k - 1))
            if rank_of_rows(below + images) - len(below) != graded[k]:
                problems.append(f"N^{k}: Gr_{k} -> Gr_{-k} is not injective")
        return problems

    def to_dict(self) -> Dict:
        return {
            'm': self.m,
            'dimension': self.dimension,
            'graded_dimensions': {str(k): d for k, d in self.graded_dimensions().items()},
            'subspaces': {
                str(k): [[format_rational(x) for x in v] for v in self.space(k)]
                for k in range(-self.m, self.m + 1)
            },
        }


def _nilpotent_degree(nilpotent: RationalMatrix) -> int:
    """Minimal m with N^(m+1) = 0"""
    try:
        return nilpotent.nilpotency_index() - 1
    except ValueError:
        raise PreconditionFailed("Weight filtration needs a nilpotent matrix")


def _filtration_coordinates(nilpotent: RationalMatrix) -> Tuple[int, Dict[int, List[Vector]]]:
    n = nilpotent.size
    m = _nilpotent_degree(nilpotent)
    everything = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    if m == 0:
        return 0, {0: everything}

    top = nilpotent.power(m)
    kernel = top.kernel()
    image = top.image()
    complement = extend_basis(image, kernel)
    spaces: Dict[int, List[Vector]] = {m: everything, m - 1: kernel, -m: image}

    if complement:
        # N preserves Ker N^m and kills Im N^m, so it descends to the quotient,
        # written in the coordinates of the complement vectors
        quotient_basis = list(image) + complement
        offset = len(image)
        induced = RationalMatrix.from_columns([
            solve_coordinates(quotient_basis, nilpotent.apply(c))[offset:]
            for c in complement
        ])
        sub_m, sub_spaces = _filtration_coordinates(induced)
    else:
        sub_m, sub_spaces = 0, {0: []}

    for k in range(-m + 1, m - 1):
        if k >= sub_m:
            coords = sub_spaces[sub_m]
        elif k < -sub_m:
            coords = []
        else:
            coords = sub_spaces[k]
        lifted = [
            tuple(sum((c * v[i] for c, v in zip(coord, complement)), Fraction(0)) for i in range(n))
            for coord in coords
        ]
        spaces[k] = list(image) + lifted
    return m, spaces


def weight_filtration(nilpotent: RationalMatrix) -> WeightFiltration:
    """
    Monodromy weight filtration of a nilpotent N

    Seeded with W_{m-1} = Ker N^m and W_{-m} = Im N^m, the middle
    steps come from the filtration of the map N induces on
    Ker N^m / Im N^m.

    Args:
        nilpotent: Nilpotent rational matrix

    Returns:
        WeightFiltration with canonical bases
    """
    m, spaces = _filtration_coordinates(nilpotent)
    canonical = {k: tuple(span_basis(spaces[k])) if spaces[k] else () for k in range(-m, m + 1)}
    filtration = WeightFiltration(m=m, dimension=nilpotent.size, subspaces=canonical)
    problems = filtration.violations(nilpotent)
    if problems:
        raise AssertionError(f"Weight filtration construction failed: {problems}")
    logger.debug(f"Weight filtration with m={m}, graded dims {filtration.graded_dimensions()}")
    return filtration


def jordan_weights(block_sizes: Tuple[int, ...]) -> List[int]:
    """Weights carried by Jordan blocks: size s gives s-1, s-3, ..., 1-s"""
    weights = []
    for s in block_sizes:
        weights.extend(range(s - 1, -s, -2))
    return sorted(weights, reverse=True)
