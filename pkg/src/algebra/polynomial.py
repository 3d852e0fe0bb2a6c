"""
Rational Polynomials
Exact univariate polynomials over the rationals and cyclotomic polynomials
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, List, Tuple, Union

Scalar = Union[int, Fraction]


def _strip(coefficients: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RationalPolynomial:
    """
    Polynomial with Fraction coefficients, lowest degree first

    The coefficient tuple never ends in a zero, so the zero polynomial
    is the empty tuple and equality is structural.
    """

    coefficients: Tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        object.__setattr__(self, 'coefficients', _strip(coefficients))

    @classmethod
    def x(cls) -> 'RationalPolynomial':
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Scalar) -> 'RationalPolynomial':
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> 'RationalPolynomial':
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading == 1

    def monic(self) -> 'RationalPolynomial':
        if self.is_zero():
            return self
        lead = self.leading
        return RationalPolynomial(c / lead for c in self.coefficients)

    def __add__(self, other: 'RationalPolynomial') -> 'RationalPolynomial':
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> 'RationalPolynomial':
        return RationalPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: 'RationalPolynomial') -> 'RationalPolynomial':
        return self + (-_coerce(other))

    def __rsub__(self, other: 'RationalPolynomial') -> 'RationalPolynomial':
        return _coerce(other) - self

    def __mul__(self, other: 'RationalPolynomial') -> 'RationalPolynomial':
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return RationalPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'RationalPolynomial':
        if exponent < 0:
            raise ValueError("Negative polynomial powers are not defined")
        result = RationalPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, divisor: 'RationalPolynomial') -> Tuple['RationalPolynomial', 'RationalPolynomial']:
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        remainder: List[Fraction] = list(self.coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - divisor.degree, 1)
        lead = divisor.leading
        while len(remainder) - 1 >= divisor.degree and any(remainder):
            shift = len(remainder) - 1 - divisor.degree
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for i, c in enumerate(divisor.coefficients):
                remainder[shift + i] -= factor * c
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return RationalPolynomial(quotient), RationalPolynomial(remainder)

    def __floordiv__(self, divisor: 'RationalPolynomial') -> 'RationalPolynomial':
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: 'RationalPolynomial') -> 'RationalPolynomial':
        return divmod(self, divisor)[1]

    def divides(self, other: 'RationalPolynomial') -> bool:
        """True if self divides other exactly"""
        return (other % self).is_zero()

    def __call__(self, value: Scalar) -> Fraction:
        """Evaluate at a scalar by Horner's rule"""
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                head = '' if magnitude == 1 else f"{magnitude}*"
                body = head + ('x' if power == 1 else f"x^{power}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value) -> RationalPolynomial:
    if isinstance(value, RationalPolynomial):
        return value
    return RationalPolynomial.constant(value)


def euler_phi(d: int) -> int:
    """Euler's totient"""
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def divisors(n: int) -> List[int]:
    """Positive divisors of n in increasing order"""
    small = [k for k in range(1, int(n ** 0.5) + 1) if n % k == 0]
    large = [n // k for k in reversed(small) if k * k != n]
    return small + large


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> RationalPolynomial:
    """
    The d-th cyclotomic polynomial

    Computed by dividing x^d - 1 by every Phi_e for proper divisors e of d.

    Args:
        d: Positive order

    Returns:
        Phi_d as a RationalPolynomial
    """
    if d < 1:
        raise ValueError(f"Cyclotomic order must be positive, got {d}")
    result = RationalPolynomial.monomial(d) - RationalPolynomial.constant(1)
    for e in divisors(d)[:-1]:
        result, remainder = divmod(result, cyclotomic(e))
        assert remainder.is_zero()
    return result


def cyclotomic_orders(max_degree: int) -> List[int]:
    """All d with phi(d) <= max_degree, increasing"""
    # phi(d) >= sqrt(d / 2), so d <= 2 * max_degree**2 bounds the search
    limit = max(2 * max_degree * max_degree, 2)
    return [d for d in range(1, limit + 1) if euler_phi(d) <= max_degree]
