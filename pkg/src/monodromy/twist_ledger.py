"""
Twist Ledger
Local twists of the L2-Higgs complex at one degeneration point
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from ..utils.errors import PreconditionFailed
from .classifier import MonodromyClass, MonodromyKind, allowed_kinds, strict_kind
from .weight_filtration import jordan_weights


class ChainAlignment(str, Enum):
    """How Jordan chains sit on the Hodge lines"""

    # each chain runs down consecutive Hodge lines, its top weight on the top line
    STANDARD = 'standard'


# Graded weight of each Hodge line (p, m-p), listed from p = m down to p = 0
_CHAIN_WEIGHTS: Dict[Tuple[int, MonodromyKind], Tuple[int, ...]] = {
    (1, MonodromyKind.TYPE_I): (1, -1),
    (2, MonodromyKind.TYPE_I): (2, 0, -2),
    (3, MonodromyKind.TYPE_I): (0, 1, -1, 0),
    (3, MonodromyKind.TYPE_II): (1, -1, 1, -1),
    (3, MonodromyKind.TYPE_III): (3, 1, -1, -3),
}


def hodge_lines(weight: int) -> Tuple[Tuple[int, int], ...]:
    """(p, m-p) for p = m down to 0"""
    return tuple((p, weight - p) for p in range(weight, -1, -1))


@dataclass(frozen=True)
class TwistLedger:
    """
    Twists of the L2 pieces of each Hodge line at one point

    twist0[i] is the twist of the degree-0 piece of line i, in {-1, 0};
    twist1[i] is the twist of the degree-1 piece relative to the
    untwisted one-forms, in {0, +1}. Lines are ordered from (m, 0) down.
    """

    weight: int
    kind: MonodromyKind
    twist0: Tuple[int, ...]
    twist1: Tuple[int, ...]

    def at(self, p: int) -> Tuple[int, int]:
        index = self.weight - p
        return self.twist0[index], self.twist1[index]

    def to_dict(self) -> Dict:
        return {
            'weight': self.weight,
            'kind': self.kind.value,
            'lines': [f"{p},{q}" for p, q in hodge_lines(self.weight)],
            'twist0': list(self.twist0),
            'twist1': list(self.twist1),
        }


def chain_weights(weight: int, kind: MonodromyKind) -> Tuple[int, ...]:
    try:
        return _CHAIN_WEIGHTS[(weight, kind)]
    except KeyError:
        raise PreconditionFailed(f"No unipotent chain alignment for type {kind.value} at weight {weight}")


def twist_ledger_for(weight: int, kind: MonodromyKind,
                     alignment: ChainAlignment = ChainAlignment.STANDARD) -> TwistLedger:
    """
    Twist ledger of a type at a weight

    Unipotent lines of graded weight w get twist0 = -1 when w > 0 and
    twist1 = +1 when w <= -2; strictly quasi-unipotent points keep E
    in degree 0 and the full log pole in degree 1.
    """
    if alignment != ChainAlignment.STANDARD:
        raise PreconditionFailed(f"Unsupported chain alignment {alignment}")
    lines = weight + 1
    if kind == MonodromyKind.TRIVIAL:
        return TwistLedger(weight, kind, (0,) * lines, (0,) * lines)
    if kind not in allowed_kinds(weight):
        raise PreconditionFailed(f"Type {kind.value} is not allowed at weight {weight}")
    if kind == strict_kind(weight):
        return TwistLedger(weight, kind, (0,) * lines, (1,) * lines)
    graded = chain_weights(weight, kind)
    twist0 = tuple(-1 if w > 0 else 0 for w in graded)
    twist1 = tuple(1 if w <= -2 else 0 for w in graded)
    return TwistLedger(weight, kind, twist0, twist1)


def twist_ledger(monodromy: MonodromyClass,
                 alignment: ChainAlignment = ChainAlignment.STANDARD) -> TwistLedger:
    """
    Twist ledger of a classified point

    The hard-coded chain weights are checked against the Jordan blocks
    recorded in the class.
    """
    ledger = twist_ledger_for(monodromy.weight, monodromy.kind, alignment)
    if (not monodromy.is_trivial and not monodromy.is_strictly_quasi_unipotent
            and monodromy.unipotent_blocks):
        expected = sorted(chain_weights(monodromy.weight, monodromy.kind), reverse=True)
        if jordan_weights(monodromy.unipotent_blocks) != expected:
            raise PreconditionFailed(
                f"Jordan blocks {monodromy.unipotent_blocks} do not match type "
                f"{monodromy.kind.value} at weight {monodromy.weight}"
            )
    return ledger
