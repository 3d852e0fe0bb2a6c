"""
Shared fixtures: monodromy normal forms, fixture families and random rational matrices
"""

import random
from fractions import Fraction
from pathlib import Path

import pytest
from loguru import logger

from src.algebra import RationalMatrix, RationalPolynomial, cyclotomic
from src.family import FamilyDescriptor, MarkedPoint

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / 'data'


@pytest.fixture(autouse=True)
def quiet_logs():
    """Keep loguru output out of the test report"""
    logger.remove()
    yield


def random_rational(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def random_invertible(rng: random.Random, n: int) -> RationalMatrix:
    while True:
        candidate = RationalMatrix([[random_rational(rng) for _ in range(n)] for _ in range(n)])
        if candidate.is_invertible():
            return candidate


def mum() -> RationalMatrix:
    return RationalMatrix.jordan_block(1, 4)


def conifold() -> RationalMatrix:
    return RationalMatrix([[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


def quintic_infinity() -> RationalMatrix:
    return RationalMatrix.companion(cyclotomic(5))


def cubic_pair_infinity() -> RationalMatrix:
    return RationalMatrix.companion(cyclotomic(3) ** 2)


def negative_mum() -> RationalMatrix:
    return -RationalMatrix.jordan_block(1, 4)


def three_point_family(infinity: RationalMatrix, a=0, b=0) -> FamilyDescriptor:
    return FamilyDescriptor(
        weight=3, genus=0, a=a, b=b,
        points=(
            MarkedPoint('0', mum(), ramified=True),
            MarkedPoint('1', conifold()),
            MarkedPoint('inf', infinity, ramified=True),
        ),
    )


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def quintic_family() -> FamilyDescriptor:
    return three_point_family(quintic_infinity())


@pytest.fixture
def cubic_pair_family() -> FamilyDescriptor:
    return three_point_family(cubic_pair_infinity())


@pytest.fixture
def negative_mum_family() -> FamilyDescriptor:
    return three_point_family(negative_mum())


@pytest.fixture
def table_path() -> Path:
    return DATA / 'cy_table.json'


@pytest.fixture
def x() -> RationalPolynomial:
    return RationalPolynomial.x()
