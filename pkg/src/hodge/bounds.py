"""
Degree Bounds
Arakelov-type bound on deg E^{k,0} and parabolic degrees
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple, Union

from ..algebra import format_rational
from ..utils.errors import PreconditionFailed

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class ArakelovVerdict:
    bound: Fraction
    degree: int
    holds: bool

    def to_dict(self) -> Dict:
        return {'bound': format_rational(self.bound), 'degree': self.degree, 'holds': self.holds}


def arakelov_bound(k: int, g: int, num_points: int,
                   ranks: Sequence[int], kernel_ranks: Sequence[int]) -> Fraction:
    """
    Upper bound for deg E^{k,0} of a real VHS of odd weight k = 2l + 1

    (1/2 (h^{k-l,l} - h0^{k-l,l}) + sum_{j<l} (h^{k-j,j} - h0^{k-j,j})) (2g - 2 + #D)

    Args:
        k: Odd weight
        g: Genus of the base
        num_points: #D
        ranks: ranks[p] = h^{p,k-p} for p = 0..k
        kernel_ranks: kernel_ranks[p] = rank of the kernel of theta on E^{p,k-p}

    Returns:
        Exact rational bound
    """
    if k < 1 or k % 2 == 0:
        raise PreconditionFailed(f"The bound needs an odd weight k >= 1, got {k}")
    if len(ranks) != k + 1 or len(kernel_ranks) != k + 1:
        raise PreconditionFailed(f"Need {k + 1} ranks and kernel ranks")
    for p, (h, h0) in enumerate(zip(ranks, kernel_ranks)):
        if not h >= h0 >= 0:
            raise PreconditionFailed(f"Need rank >= kernel rank >= 0 at p={p}, got {h}, {h0}")
    l = (k - 1) // 2
    weight_sum = Fraction(ranks[k - l] - kernel_ranks[k - l], 2)
    for j in range(l):
        weight_sum += ranks[k - j] - kernel_ranks[k - j]
    return weight_sum * (2 * g - 2 + num_points)


def arakelov_check(degree: int, k: int, g: int, num_points: int,
                   ranks: Sequence[int], kernel_ranks: Sequence[int]) -> ArakelovVerdict:
    bound = arakelov_bound(k, g, num_points, ranks, kernel_ranks)
    return ArakelovVerdict(bound=bound, degree=degree, holds=degree <= bound)


def arakelov_degree_cap(k: int, g: int, num_points: int) -> int:
    """
    Largest integer deg E^{k,0} allowed for Hodge numbers (1, ..., 1)

    Assumes every theta arrow except the last one is nonzero.
    """
    ranks = [1] * (k + 1)
    kernels = [1] + [0] * k
    return math.floor(arakelov_bound(k, g, num_points, ranks, kernels))


def parabolic_degree(degree: int,
                     residue_data: Sequence[Sequence[Tuple[Scalar, int]]]) -> Fraction:
    """
    Parabolic degree deg + sum over points of sum alpha * multiplicity

    Args:
        degree: Ordinary degree of the bundle
        residue_data: Per point, the (alpha, multiplicity) pairs, alpha in [0, 1)

    Returns:
        Exact rational parabolic degree
    """
    total = Fraction(degree)
    for index, point in enumerate(residue_data):
        for alpha, multiplicity in point:
            alpha = Fraction(alpha)
            if not 0 <= alpha < 1:
                raise PreconditionFailed(f"Parabolic weight {alpha} at point {index} is outside [0, 1)")
            if multiplicity < 1:
                raise PreconditionFailed(f"Multiplicity must be positive at point {index}")
            total += alpha * multiplicity
    return total
