"""
Tests for monodromy classification and the L2 twist ledger
"""

import pytest
from hypothesis import given, settings, strategies as st

from src.algebra import RationalMatrix, cyclotomic
from src.monodromy import (
    MonodromyClass,
    MonodromyKind,
    allowed_kinds,
    classify,
    power_and_classify,
    strict_kind,
    twist_ledger,
    twist_ledger_for,
)
from src.utils.errors import (
    ClassificationError,
    ExcludedByPolarization,
    MalformedInput,
    MixedCase,
    NotQuasiUnipotent,
    PreconditionFailed,
)
from tests.conftest import (
    conifold,
    cubic_pair_infinity,
    mum,
    negative_mum,
    quintic_infinity,
    random_invertible,
)

I, II, III, IV = (MonodromyKind.TYPE_I, MonodromyKind.TYPE_II,
                  MonodromyKind.TYPE_III, MonodromyKind.TYPE_IV)
TRIVIAL = MonodromyKind.TRIVIAL


def jordan(*sizes, eigenvalue=1):
    return RationalMatrix.block_diagonal(*(RationalMatrix.jordan_block(eigenvalue, s) for s in sizes))


def companion(*orders):
    return RationalMatrix.block_diagonal(*(RationalMatrix.companion(cyclotomic(d)) for d in orders))


# (weight, matrix, expected kind, expected semisimple order, expected unipotent blocks)
ALLOWED_FORMS = [
    (1, RationalMatrix.identity(2), TRIVIAL, 1, (1, 1)),
    (1, jordan(2), I, 1, (2,)),
    (1, -RationalMatrix.identity(2), II, 2, ()),
    (1, jordan(2, eigenvalue=-1), II, 2, ()),
    (1, companion(3), II, 3, ()),
    (1, companion(4), II, 4, ()),
    (1, companion(6), II, 6, ()),
    (2, RationalMatrix.identity(3), TRIVIAL, 1, (1, 1, 1)),
    (2, jordan(3), I, 1, (3,)),
    (2, jordan(3, eigenvalue=-1), II, 2, ()),
    (2, companion(2, 3), II, 6, ()),
    (2, companion(4, 2), II, 4, ()),
    (3, RationalMatrix.identity(4), TRIVIAL, 1, (1, 1, 1, 1)),
    (3, conifold(), I, 1, (2, 1, 1)),
    (3, jordan(2, 2), II, 1, (2, 2)),
    (3, mum(), III, 1, (4,)),
    (3, quintic_infinity(), IV, 5, ()),
    (3, cubic_pair_infinity(), IV, 3, ()),
    (3, negative_mum(), IV, 2, ()),
    (3, companion(8), IV, 8, ()),
    (3, companion(12), IV, 12, ()),
    (3, companion(4, 6), IV, 12, ()),
    (3, jordan(3, 1, eigenvalue=-1), IV, 2, ()),
]

REJECTED_FORMS = [
    (1, RationalMatrix.diagonal([1, -1]), MixedCase),
    (1, RationalMatrix([[2, 0], [0, 1]]), NotQuasiUnipotent),
    (1, RationalMatrix.diagonal([2, 3]), NotQuasiUnipotent),
    (1, RationalMatrix([[2, 1], [1, 1]]), NotQuasiUnipotent),
    (2, jordan(2, 1), ExcludedByPolarization),
    (2, RationalMatrix.diagonal([1, 1, -1]), MixedCase),
    (2, RationalMatrix.block_diagonal(RationalMatrix.identity(1), companion(3)), MixedCase),
    (3, jordan(3, 1), ExcludedByPolarization),
    (3, RationalMatrix.diagonal([1, 1, -1, -1]), MixedCase),
    (3, RationalMatrix.block_diagonal(jordan(2), companion(4)), MixedCase),
    (3, RationalMatrix.diagonal([2, 2, 3, 3]), NotQuasiUnipotent),
    (3, RationalMatrix.diagonal([1, 1, 1, 2]), NotQuasiUnipotent),
    (3, RationalMatrix.block_diagonal(jordan(2), RationalMatrix([[2, 1], [1, 1]])), NotQuasiUnipotent),
]


# ----------------------------------------------------------------------------
# classify
# ----------------------------------------------------------------------------

def test_classify_examples():
    verdict = classify(mum(), 3)
    assert verdict.kind == III and verdict.semisimple_order == 1

    verdict = classify(quintic_infinity(), 3)
    assert verdict.kind == IV and verdict.semisimple_order == 5

    with pytest.raises(MixedCase):
        classify(RationalMatrix.diagonal([1, 1, -1, -1]), 3)
    with pytest.raises(ExcludedByPolarization):
        classify(jordan(2, 1), 2)
    with pytest.raises(ExcludedByPolarization):
        classify(jordan(3, 1), 3)


@pytest.mark.parametrize('weight,matrix,kind,order,blocks', ALLOWED_FORMS)
def test_allowed_forms_classify_under_conjugation(weight, matrix, kind, order, blocks, rng):
    expected = classify(matrix, weight)
    assert expected.kind == kind
    assert expected.semisimple_order == order
    assert expected.unipotent_blocks == blocks
    assert expected.is_trivial == (kind == TRIVIAL)
    for _ in range(50):
        conjugated = matrix.conjugate(random_invertible(rng, matrix.size))
        assert classify(conjugated, weight) == expected


@pytest.mark.parametrize('weight,matrix,error', REJECTED_FORMS)
def test_rejected_forms_under_conjugation(weight, matrix, error, rng):
    for _ in range(50):
        conjugated = matrix.conjugate(random_invertible(rng, matrix.size))
        with pytest.raises(error):
            classify(conjugated, weight)


def test_rejections_are_classification_errors():
    for weight, matrix, _ in REJECTED_FORMS:
        with pytest.raises(ClassificationError) as info:
            classify(matrix, weight)
        payload = info.value.to_dict()
        assert payload['error'] in ('NotQuasiUnipotent', 'MixedCase', 'ExcludedByPolarization')
        assert payload['detail']


def test_singular_matrix_is_not_quasi_unipotent():
    with pytest.raises(NotQuasiUnipotent):
        classify(RationalMatrix.zero(2), 1)


def test_classify_checks_size_and_weight():
    with pytest.raises(PreconditionFailed):
        classify(mum(), 2)
    with pytest.raises(PreconditionFailed):
        classify(RationalMatrix.identity(5), 4)


@pytest.mark.parametrize('bound', [0, -5])
def test_classify_rejects_nonpositive_bound(bound):
    with pytest.raises(PreconditionFailed):
        classify(quintic_infinity(), 3, bound)
    with pytest.raises(PreconditionFailed):
        classify(mum(), 3, bound)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([1, 2, 3]), st.data())
def test_random_integer_matrices_get_a_verdict(weight, data):
    n = weight + 1
    rows = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n),
                              min_size=n, max_size=n))
    try:
        verdict = classify(RationalMatrix(rows), weight)
    except ClassificationError:
        return
    assert verdict.kind == TRIVIAL or verdict.kind in allowed_kinds(weight)
    if weight != 3:
        assert verdict.kind != III
    if weight == 3:
        assert (verdict.semisimple_order == 1) == (verdict.kind != IV)


# ----------------------------------------------------------------------------
# power_and_classify
# ----------------------------------------------------------------------------

def test_power_and_classify_examples():
    assert power_and_classify(quintic_infinity(), 5, 3).kind == TRIVIAL
    assert power_and_classify(negative_mum(), 2, 3).kind == III
    assert power_and_classify(cubic_pair_infinity(), 3, 3).kind == II
    assert power_and_classify(cubic_pair_infinity(), 2, 3).kind == IV


def test_power_and_classify_rejects_non_positive_exponent():
    with pytest.raises(PreconditionFailed):
        power_and_classify(mum(), 0, 3)


def test_power_can_produce_mixed_case():
    # eigenvalues i, -i, -1, -1
    matrix = companion(4, 2, 2)
    assert classify(matrix, 3).kind == IV
    assert power_and_classify(matrix, 4, 3).kind == TRIVIAL
    with pytest.raises(MixedCase):
        power_and_classify(matrix, 2, 3)
    with pytest.raises(MixedCase):
        power_and_classify(RationalMatrix.block_diagonal(companion(4), companion(3)), 3, 3)


@pytest.mark.parametrize('weight,matrix', [
    (1, jordan(2)),
    (2, jordan(3)),
    (3, conifold()),
    (3, jordan(2, 2)),
    (3, mum()),
])
def test_unipotent_powers_keep_their_type(weight, matrix, rng):
    kind = classify(matrix, weight).kind
    conjugated = matrix.conjugate(random_invertible(rng, matrix.size))
    for e in range(1, 7):
        assert power_and_classify(conjugated, e, weight).kind == kind


# ----------------------------------------------------------------------------
# Kinds and declared classes
# ----------------------------------------------------------------------------

def test_kind_parsing():
    assert MonodromyKind.parse('IV') == IV
    assert MonodromyKind.parse('iii') == III
    assert MonodromyKind.parse('Trivial') == TRIVIAL
    with pytest.raises(MalformedInput):
        MonodromyKind.parse('V')


def test_allowed_and_strict_kinds():
    assert allowed_kinds(1) == (I, II)
    assert allowed_kinds(3) == (I, II, III, IV)
    assert strict_kind(2) == II
    assert strict_kind(3) == IV
    with pytest.raises(PreconditionFailed):
        allowed_kinds(4)


def test_declared_classes():
    declared = MonodromyClass.from_declared(3, IV)
    assert declared.semisimple_order is None
    assert declared.is_strictly_quasi_unipotent
    assert MonodromyClass.from_declared(3, III).unipotent_blocks == (4,)
    with pytest.raises(MalformedInput):
        MonodromyClass.from_declared(1, III)


def test_class_to_dict():
    payload = classify(quintic_infinity(), 3).to_dict()
    assert payload['kind'] == 'IV'
    assert payload['semisimple_order'] == 5
    assert payload['blocks'] == [[5, 1]]
    assert classify(conifold(), 3).to_dict()['blocks'] == [2, 1, 1]


# ----------------------------------------------------------------------------
# Twist ledger
# ----------------------------------------------------------------------------

# Twists read off the L2-complex statements for every weight and type,
# lines ordered (m,0), (m-1,1), ..., (0,m)
TWIST_TABLE = [
    (1, TRIVIAL, (0, 0), (0, 0)),
    (1, I, (-1, 0), (0, 0)),
    (1, II, (0, 0), (1, 1)),
    (2, TRIVIAL, (0, 0, 0), (0, 0, 0)),
    (2, I, (-1, 0, 0), (0, 0, 1)),
    (2, II, (0, 0, 0), (1, 1, 1)),
    (3, TRIVIAL, (0, 0, 0, 0), (0, 0, 0, 0)),
    (3, I, (0, -1, 0, 0), (0, 0, 0, 0)),
    (3, II, (-1, 0, -1, 0), (0, 0, 0, 0)),
    (3, III, (-1, -1, 0, 0), (0, 0, 0, 1)),
    (3, IV, (0, 0, 0, 0), (1, 1, 1, 1)),
]


@pytest.mark.parametrize('weight,kind,twist0,twist1', TWIST_TABLE)
def test_twist_ledger_table(weight, kind, twist0, twist1):
    ledger = twist_ledger_for(weight, kind)
    assert ledger.twist0 == twist0
    assert ledger.twist1 == twist1
    assert all(t in (-1, 0) for t in ledger.twist0)
    assert all(t in (0, 1) for t in ledger.twist1)


def test_weight3_twists_match_the_complex_terms():
    # E^{3,0}(-II-III), E^{2,1}(-I-III), E^{0,3}(III+IV) (x) one-forms
    for kind in (I, II, III, IV):
        ledger = twist_ledger_for(3, kind)
        assert (ledger.at(3)[0] == -1) == (kind in (II, III))
        assert (ledger.at(2)[0] == -1) == (kind in (I, III))
        assert (ledger.at(0)[1] == 1) == (kind in (III, IV))


@pytest.mark.parametrize('weight,matrix', [
    (3, mum()), (3, conifold()), (3, jordan(2, 2)), (3, quintic_infinity()),
    (2, jordan(3)), (1, jordan(2)), (1, companion(4)), (3, RationalMatrix.identity(4)),
])
def test_twist_ledger_of_classified_points(weight, matrix):
    verdict = classify(matrix, weight)
    assert twist_ledger(verdict) == twist_ledger_for(weight, verdict.kind)


def test_twist_ledger_rejections():
    with pytest.raises(PreconditionFailed):
        twist_ledger_for(1, III)
    with pytest.raises(PreconditionFailed):
        twist_ledger_for(2, IV)
    mismatched = MonodromyClass(weight=3, kind=III, semisimple_order=1, unipotent_blocks=(2, 2))
    with pytest.raises(PreconditionFailed):
        twist_ledger(mismatched)


def test_twist_ledger_to_dict():
    payload = twist_ledger_for(3, III).to_dict()
    assert payload['lines'] == ['3,0', '2,1', '1,2', '0,3']
    assert payload['twist0'] == [-1, -1, 0, 0]
    assert payload['twist1'] == [0, 0, 0, 1]
