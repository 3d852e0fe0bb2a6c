"""
Spectral Data
Characteristic polynomials, quasi-unipotency and pooled Jordan structure
"""

from fractions import Fraction
from math import lcm
from typing import Dict, List, NamedTuple, Tuple

from loguru import logger

from ..utils.errors import NotQuasiUnipotent, PreconditionFailed
from .matrix import RationalMatrix
from .polynomial import RationalPolynomial, cyclotomic, cyclotomic_orders, divisors, euler_phi

# phi(d) <= 4 forces d in {1,2,3,4,5,6,8,10,12} (lcm 120); 2520 also covers
# every order with phi(d) <= 6, so rank-5 and rank-6 fixtures stay valid.
QUASI_UNIPOTENCY_BOUND = 2520


class JordanBlock(NamedTuple):
    """One pooled Jordan block: eigenvalues are primitive `order`-th roots of unity"""

    order: int
    size: int


def char_poly(matrix: RationalMatrix) -> RationalPolynomial:
    """
    Monic characteristic polynomial det(xI - M)

    Faddeev-LeVerrier recursion; the only divisions are by the integers
    1..n, so coefficients stay small.

    Args:
        matrix: Square rational matrix

    Returns:
        Monic polynomial of degree n
    """
    n = matrix.size
    ident = RationalMatrix.identity(n)
    coefficients = [Fraction(0)] * (n + 1)
    coefficients[n] = Fraction(1)
    m_k = RationalMatrix.zero(n)
    for k in range(1, n + 1):
        m_k = matrix @ m_k + ident.scale(coefficients[n - k + 1])
        coefficients[n - k] = -(matrix @ m_k).trace() / k
    return RationalPolynomial(coefficients)


def unipotent_part_multiplicity(matrix: RationalMatrix) -> int:
    """Algebraic multiplicity of the eigenvalue 1, via rank((T - I)^n)"""
    n = matrix.size
    shifted = matrix - RationalMatrix.identity(n)
    return n - shifted.power(n).rank()


def is_unipotent(matrix: RationalMatrix) -> bool:
    return (matrix - RationalMatrix.identity(matrix.size)).is_nilpotent()


def quasi_unipotency_order(matrix: RationalMatrix,
                           bound: int = QUASI_UNIPOTENCY_BOUND) -> int:
    """
    Minimal k >= 1 such that M^k is unipotent

    Tests M^bound first, then scans the divisors of `bound` in
    increasing order.

    Args:
        matrix: Invertible rational matrix
        bound: Common multiple of every admissible semisimple order

    Returns:
        The order of the semisimple part

    Raises:
        NotQuasiUnipotent: if M^bound is not unipotent
        PreconditionFailed: if bound is not positive
    """
    if bound < 1:
        raise PreconditionFailed(f"Quasi-unipotency bound must be positive, got {bound}")
    if not is_unipotent(matrix.power(bound)):
        raise NotQuasiUnipotent(
            f"M^{bound} - I is not nilpotent; some eigenvalue is not a root of unity "
            f"of order dividing {bound}"
        )
    for k in divisors(bound):
        if is_unipotent(matrix.power(k)):
            logger.debug(f"Semisimple order {k} found scanning divisors of {bound}")
            return k
    raise AssertionError("unreachable: bound itself is a divisor")


def cyclotomic_factorization(matrix: RationalMatrix) -> Dict[int, int]:
    """
    Split char_poly(M) into cyclotomic factors

    Returns:
        Map d -> multiplicity of Phi_d

    Raises:
        NotQuasiUnipotent: if a non-cyclotomic factor remains
    """
    remaining = char_poly(matrix)
    exponents: Dict[int, int] = {}
    for d in cyclotomic_orders(matrix.size):
        phi_d = cyclotomic(d)
        if phi_d.degree > remaining.degree:
            continue
        while True:
            quotient, remainder = divmod(remaining, phi_d)
            if not remainder.is_zero():
                break
            exponents[d] = exponents.get(d, 0) + 1
            remaining = quotient
        if remaining.degree == 0:
            break
    if remaining.degree != 0:
        raise NotQuasiUnipotent(
            f"Characteristic polynomial has the non-cyclotomic factor {remaining}"
        )
    return exponents


def jordan_structure(matrix: RationalMatrix) -> Tuple[JordanBlock, ...]:
    """
    Pooled Jordan blocks of M, grouped by cyclotomic factor

    For each Phi_d dividing char_poly(M) the rank sequence
    r_k = rank(Phi_d(M)^k) gives (r_{k-1} - r_k) / phi(d) blocks of
    size >= k. Eigenvalues inside one Phi_d are not separated.

    Args:
        matrix: Quasi-unipotent rational matrix

    Returns:
        Sorted tuple of JordanBlock(order, size)
    """
    n = matrix.size
    blocks: List[JordanBlock] = []
    for d, multiplicity in sorted(cyclotomic_factorization(matrix).items()):
        phi = euler_phi(d)
        factor = matrix.evaluate(cyclotomic(d))
        ranks = [n]
        current = RationalMatrix.identity(n)
        for _ in range(multiplicity):
            current = current @ factor
            ranks.append(current.rank())
        at_least = [(ranks[k - 1] - ranks[k]) // phi for k in range(1, multiplicity + 1)]
        at_least.append(0)
        for size in range(1, multiplicity + 1):
            count = at_least[size - 1] - at_least[size]
            blocks.extend([JordanBlock(d, size)] * count)
    result = tuple(sorted(blocks))
    assert sum(b.size * euler_phi(b.order) for b in result) == n
    return result


def semisimple_order_from_blocks(blocks: Tuple[JordanBlock, ...]) -> int:
    """lcm of the eigenvalue orders; agrees with quasi_unipotency_order"""
    return lcm(*(b.order for b in blocks)) if blocks else 1
