"""
Degree Ledger
Line-bundle degrees of the L2-Higgs complex and its hypercohomology on the projective line
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..algebra import QUASI_UNIPOTENCY_BOUND
from ..hodge import (
    HodgeInput,
    HodgeNumbers,
    hodge_decomposed,
    hodge_numbers,
    line_bundle_h0,
    line_bundle_h1,
)
from ..monodromy import hodge_lines, twist_ledger
from ..utils.errors import EngineError, InconsistentInput, PreconditionFailed
from .descriptor import FamilyDescriptor
from .resolver import ResolvedFamily, resolve


@dataclass(frozen=True)
class DegreeLedger:
    """
    Degrees of the degree-0 and degree-1 pieces of every Hodge line

    Entries are ordered from the line (m, 0) down to (0, m).
    """

    weight: int
    genus: int
    bundle_degrees: Tuple[int, ...]
    deg0: Tuple[int, ...]
    deg1: Tuple[int, ...]

    def at(self, p: int) -> Tuple[int, int]:
        index = self.weight - p
        return self.deg0[index], self.deg1[index]

    def to_dict(self) -> Dict:
        return {
            'weight': self.weight,
            'genus': self.genus,
            'lines': [f"{p},{q}" for p, q in hodge_lines(self.weight)],
            'bundle_degrees': list(self.bundle_degrees),
            'deg0': list(self.deg0),
            'deg1': list(self.deg1),
        }


def bundle_degrees(family: FamilyDescriptor, resolved: ResolvedFamily) -> Tuple[int, ...]:
    """
    deg E^{p,m-p} for p = m down to 0

    Missing dual degrees default to a' = a + |strict| and b' = b + |IV|.
    """
    if family.a is None:
        raise PreconditionFailed("Degree a = deg E^(m,0) is unknown")
    counts = resolved.counts
    a = family.a
    a_prime = family.a_prime
    if a_prime is None:
        a_prime = a + counts.strict
        logger.warning(f"a' not given; using a' = a + {counts.strict} = {a_prime}")

    if family.weight == 1:
        return (a, -a_prime)
    if family.weight == 2:
        if counts.n_ii % 2:
            raise InconsistentInput(f"|II| = {counts.n_ii} is odd; deg E^(1,1) = -|II|/2 is not an integer")
        middle = -(counts.n_ii // 2)
        if family.b is not None and family.b != middle:
            raise InconsistentInput(f"deg E^(1,1) = {family.b} contradicts -|II|/2 = {middle}")
        return (a, middle, -a_prime)

    if family.b is None:
        raise PreconditionFailed("Degree b = deg E^(2,1) is unknown")
    b_prime = family.b_prime
    if b_prime is None:
        b_prime = family.b + counts.n_iv
        logger.warning(f"b' not given; using b' = b + |IV| = {b_prime}")
    return (a, family.b, -b_prime, -a_prime)


def degree_ledger(family: FamilyDescriptor, resolved: Optional[ResolvedFamily] = None,
                  bound: int = QUASI_UNIPOTENCY_BOUND) -> DegreeLedger:
    """
    Aggregate the per-point twists into line-bundle degrees

    deg0(p) = deg E^{p,m-p} + sum of twist0, deg1(p) = deg E^{p,m-p} + 2g - 2 + sum of twist1.

    Args:
        family: Descriptor with known degrees
        resolved: Result of resolve(family), computed when omitted
        bound: Quasi-unipotency bound for the classification

    Returns:
        DegreeLedger of the family
    """
    if resolved is None:
        resolved = resolve(family, bound)
    base = bundle_degrees(family, resolved)
    lines = family.weight + 1
    twist0 = [0] * lines
    twist1 = [0] * lines
    for label, verdict in resolved.classes:
        try:
            ledger = twist_ledger(verdict)
        except EngineError as e:
            raise e.at_point(label)
        for i in range(lines):
            twist0[i] += ledger.twist0[i]
            twist1[i] += ledger.twist1[i]

    canonical = 2 * family.genus - 2
    deg0 = tuple(d + t for d, t in zip(base, twist0))
    deg1 = tuple(d + canonical + t for d, t in zip(base, twist1))
    logger.debug(f"Degree ledger deg0={deg0} deg1={deg1}")
    return DegreeLedger(family.weight, family.genus, base, deg0, deg1)


def hodge_from_ledger(family: FamilyDescriptor, resolved: Optional[ResolvedFamily] = None,
                      bound: int = QUASI_UNIPOTENCY_BOUND) -> HodgeNumbers:
    """
    Hodge numbers of the hypercohomology of the split L2-Higgs complex on P^1

    Each theta arrow pairs the degree-0 piece of a line with the degree-1
    piece of the next. A nonzero arrow between line bundles contributes the
    length of its cokernel, a zero arrow contributes h^1 of the source plus
    h^0 of the target. The ends contribute h^0 of the top degree-1 piece
    and h^1 of the bottom degree-0 piece.

    Raises:
        PreconditionFailed: genus other than 0
        InconsistentInput: a nonzero arrow with negative cokernel degree
    """
    if family.genus != 0:
        raise PreconditionFailed(f"Ledger cohomology is only computed on genus 0, got g={family.genus}")
    if resolved is None:
        resolved = resolve(family, bound)
    ledger = degree_ledger(family, resolved, bound)
    m, g = family.weight, family.genus
    arrows = family.arrows

    components: List[int] = [line_bundle_h0(ledger.deg1[0], g)]
    for i, nonzero in enumerate(arrows):
        p = m - i
        source, target = ledger.deg0[i], ledger.deg1[i + 1]
        if nonzero:
            cokernel = target - source
            if cokernel < 0:
                raise InconsistentInput(
                    f"No nonzero map from degree {source} to degree {target} "
                    f"(theta on E^({p},{m - p}))"
                )
            if family.decomposed and cokernel != 0:
                raise InconsistentInput(
                    f"Decomposed theta on E^({p},{m - p}) must be an isomorphism, cokernel length {cokernel}"
                )
            components.append(cokernel)
        else:
            components.append(line_bundle_h1(source, g) + line_bundle_h0(target, g))
    components.append(line_bundle_h1(ledger.deg0[m], g))

    return HodgeNumbers(m + 1, tuple(components), {'check_sum': sum(components)})


def closed_form_hodge(family: FamilyDescriptor, resolved: ResolvedFamily) -> HodgeNumbers:
    """Closed formula of the family's case: decomposed or weight 1, 2, 3"""
    if family.a is None:
        raise PreconditionFailed("Degree a = deg E^(m,0) is unknown")
    counts = resolved.counts
    if family.decomposed:
        if family.b is None:
            raise PreconditionFailed("Degree b = deg E^(2,1) is unknown")
        return hodge_decomposed(family.genus, family.a, family.b,
                                counts.n_ii, counts.n_iv, resolved.num_points)
    data = HodgeInput(g=family.genus, a=family.a, counts=counts, b=family.b,
                      theta_nonzero=family.arrows, irreducible=family.irreducible,
                      b_prime=family.b_prime)
    return hodge_numbers(data)


def family_report(family: FamilyDescriptor, bound: int = QUASI_UNIPOTENCY_BOUND) -> Dict:
    """
    Resolve a family and compare the closed formula with the ledger computation

    The ledger side is only evaluated on genus 0.
    """
    resolved = resolve(family, bound)
    formula = closed_form_hodge(family, resolved)
    report = {
        'resolved': resolved.to_dict(),
        'hodge': formula.to_dict(),
        'ledger': None,
        'ledger_hodge': None,
        'agree': None,
    }
    if family.genus == 0:
        ledger = degree_ledger(family, resolved, bound)
        from_ledger = hodge_from_ledger(family, resolved, bound)
        report['ledger'] = ledger.to_dict()
        report['ledger_hodge'] = from_ledger.to_dict()
        report['agree'] = from_ledger.components == formula.components
        if not report['agree']:
            logger.warning(f"Closed formula {formula.components} and ledger "
                           f"{from_ledger.components} disagree")
    return report
