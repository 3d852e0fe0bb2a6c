"""
Monodromy Classifier
Sorts local monodromy matrices into degeneration types per weight
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from loguru import logger

from ..algebra import (
    QUASI_UNIPOTENCY_BOUND,
    JordanBlock,
    RationalMatrix,
    cyclotomic_factorization,
    jordan_structure,
    quasi_unipotency_order,
    unipotent_part_multiplicity,
)
from ..utils.errors import (
    ExcludedByPolarization,
    MalformedInput,
    MixedCase,
    NotQuasiUnipotent,
    PreconditionFailed,
)

SUPPORTED_WEIGHTS = (1, 2, 3)


class MonodromyKind(str, Enum):
    """
    Degeneration type of a marked point

    For weights 1 and 2 the strictly quasi-unipotent kind is TYPE_II;
    for weight 3 it is TYPE_IV.
    """

    TRIVIAL = 'trivial'
    TYPE_I = 'I'
    TYPE_II = 'II'
    TYPE_III = 'III'
    TYPE_IV = 'IV'

    @classmethod
    def parse(cls, label: str) -> 'MonodromyKind':
        for kind in cls:
            if label == kind.value or label.lower() == kind.value.lower():
                return kind
        raise MalformedInput(f"Unknown monodromy type {label!r}")


def allowed_kinds(weight: int) -> Tuple[MonodromyKind, ...]:
    """Non-trivial types allowed at this weight"""
    if weight in (1, 2):
        return (MonodromyKind.TYPE_I, MonodromyKind.TYPE_II)
    if weight == 3:
        return (MonodromyKind.TYPE_I, MonodromyKind.TYPE_II,
                MonodromyKind.TYPE_III, MonodromyKind.TYPE_IV)
    raise PreconditionFailed(f"Weight must be one of {SUPPORTED_WEIGHTS}, got {weight}")


def strict_kind(weight: int) -> MonodromyKind:
    """The strictly quasi-unipotent kind for this weight"""
    return MonodromyKind.TYPE_IV if weight == 3 else MonodromyKind.TYPE_II


@dataclass(frozen=True)
class MonodromyClass:
    """Classification verdict of one local monodromy"""

    weight: int
    kind: MonodromyKind
    semisimple_order: Optional[int] = 1
    unipotent_blocks: Tuple[int, ...] = ()
    jordan: Tuple[JordanBlock, ...] = field(default=(), compare=False)
    declared: bool = False

    @classmethod
    def from_declared(cls, weight: int, kind: MonodromyKind) -> 'MonodromyClass':
        """Class for a point given only by its type tag"""
        if kind != MonodromyKind.TRIVIAL and kind not in allowed_kinds(weight):
            raise MalformedInput(f"Type {kind.value} is not valid for weight {weight}")
        strict = kind == strict_kind(weight)
        return cls(weight=weight, kind=kind,
                   semisimple_order=None if strict else 1,
                   unipotent_blocks=_DECLARED_BLOCKS.get((weight, kind), ()),
                   declared=True)

    @property
    def is_trivial(self) -> bool:
        return self.kind == MonodromyKind.TRIVIAL

    @property
    def is_strictly_quasi_unipotent(self) -> bool:
        return self.kind == strict_kind(self.weight)

    def to_dict(self) -> Dict:
        if self.is_strictly_quasi_unipotent:
            blocks = [[b.order, b.size] for b in self.jordan]
        else:
            blocks = list(self.unipotent_blocks)
        return {
            'weight': self.weight,
            'kind': self.kind.value,
            'semisimple_order': self.semisimple_order,
            'blocks': blocks,
            'declared': self.declared,
        }


# Jordan block sizes of N for each unipotent type, used for declared tags
_DECLARED_BLOCKS = {
    (1, MonodromyKind.TRIVIAL): (1, 1),
    (1, MonodromyKind.TYPE_I): (2,),
    (2, MonodromyKind.TRIVIAL): (1, 1, 1),
    (2, MonodromyKind.TYPE_I): (3,),
    (3, MonodromyKind.TRIVIAL): (1, 1, 1, 1),
    (3, MonodromyKind.TYPE_I): (2, 1, 1),
    (3, MonodromyKind.TYPE_II): (2, 2),
    (3, MonodromyKind.TYPE_III): (4,),
}


def _unipotent_kind(weight: int, nilpotent: RationalMatrix) -> MonodromyKind:
    nu = nilpotent.nilpotency_index()
    if weight == 1:
        return MonodromyKind.TYPE_I
    if weight == 2:
        if nu == 3:
            return MonodromyKind.TYPE_I
        raise ExcludedByPolarization(
            "Unipotent monodromy with N != 0 and N^2 = 0 (2-block + 1) is excluded "
            "for weight 2: the two N-maps are dual, so N^2 = 0 forces N = 0"
        )
    if nu == 2:
        return MonodromyKind.TYPE_I if nilpotent.rank() == 1 else MonodromyKind.TYPE_II
    if nu == 4:
        return MonodromyKind.TYPE_III
    raise ExcludedByPolarization(
        "Unipotent monodromy with a 3-block + 1 Jordan form is excluded for weight 3"
    )


def classify(matrix: RationalMatrix, weight: int,
             bound: int = QUASI_UNIPOTENCY_BOUND) -> MonodromyClass:
    """
    Classify a local monodromy matrix

    Args:
        matrix: Monodromy T of rank weight + 1
        weight: Weight m of the variation (1, 2 or 3)
        bound: Quasi-unipotency bound for the order scan

    Returns:
        MonodromyClass verdict

    Raises:
        MixedCase: eigenvalue 1 occurs with multiplicity strictly between 0 and rank
        ExcludedByPolarization: unipotent Jordan forms ruled out by the polarization
        NotQuasiUnipotent: some eigenvalue is not a root of unity
    """
    if weight not in SUPPORTED_WEIGHTS:
        raise PreconditionFailed(f"Weight must be one of {SUPPORTED_WEIGHTS}, got {weight}")
    n = matrix.size
    if n != weight + 1:
        raise PreconditionFailed(f"Weight {weight} needs a {weight + 1}x{weight + 1} matrix, got {n}x{n}")
    if bound < 1:
        raise PreconditionFailed(f"Quasi-unipotency bound must be positive, got {bound}")

    # NotQuasiUnipotent takes precedence over MixedCase
    cyclotomic_factorization(matrix)

    ident = RationalMatrix.identity(n)
    multiplicity = unipotent_part_multiplicity(matrix)

    if multiplicity == n:
        if matrix == ident:
            verdict = MonodromyClass(weight, MonodromyKind.TRIVIAL, 1, (1,) * n,
                                     jordan=((JordanBlock(1, 1),) * n))
        else:
            nilpotent = matrix - ident
            kind = _unipotent_kind(weight, nilpotent)
            blocks = jordan_structure(matrix)
            sizes = tuple(sorted((b.size for b in blocks), reverse=True))
            verdict = MonodromyClass(weight, kind, 1, sizes, jordan=blocks)
    elif multiplicity == 0:
        order = quasi_unipotency_order(matrix, bound)
        verdict = MonodromyClass(weight, strict_kind(weight), order, (),
                                 jordan=jordan_structure(matrix))
    else:
        raise MixedCase(
            f"Eigenvalue 1 has multiplicity {multiplicity} of {n}; the local system "
            f"has both a unipotent and a non-unipotent part"
        )

    logger.debug(f"Classified weight-{weight} monodromy as {verdict.kind.value} "
                 f"(order {verdict.semisimple_order})")
    return verdict


def power_and_classify(matrix: RationalMatrix, exponent: int, weight: int,
                       bound: int = QUASI_UNIPOTENCY_BOUND) -> MonodromyClass:
    """Classify T^e, the monodromy after pulling back along z -> z^e"""
    if exponent < 1:
        raise PreconditionFailed(f"Exponent must be positive, got {exponent}")
    return classify(matrix.power(exponent), weight, bound)
