"""
Family Resolver
Pointwise classification and base change along z -> z^e
"""

from dataclasses import dataclass, replace
from typing import Dict, List, Tuple

from loguru import logger

from ..algebra import QUASI_UNIPOTENCY_BOUND
from ..hodge import DegenerationCounts
from ..monodromy import MonodromyClass, MonodromyKind, classify
from ..utils.errors import EngineError, InconsistentInput, PreconditionFailed
from .descriptor import FamilyDescriptor, MarkedPoint


@dataclass(frozen=True)
class ResolvedFamily:
    """Type counts plus the verdict of every non-trivial point"""

    counts: DegenerationCounts
    classes: Tuple[Tuple[str, MonodromyClass], ...]
    dropped: Tuple[str, ...]

    @property
    def num_points(self) -> int:
        return len(self.classes)

    def to_dict(self) -> Dict:
        return {
            'counts': self.counts.to_dict(),
            'points': {label: verdict.to_dict() for label, verdict in self.classes},
            'dropped': list(self.dropped),
        }


_COUNT_FIELDS = {
    MonodromyKind.TYPE_I: 'n_i',
    MonodromyKind.TYPE_II: 'n_ii',
    MonodromyKind.TYPE_III: 'n_iii',
    MonodromyKind.TYPE_IV: 'n_iv',
}


def classify_point(point: MarkedPoint, weight: int,
                   bound: int = QUASI_UNIPOTENCY_BOUND) -> MonodromyClass:
    """Classify one marked point, annotating any error with its label"""
    try:
        if point.matrix is None:
            return MonodromyClass.from_declared(weight, point.declared)
        return classify(point.matrix, weight, bound)
    except EngineError as e:
        raise e.at_point(point.label)


def resolve(family: FamilyDescriptor, bound: int = QUASI_UNIPOTENCY_BOUND) -> ResolvedFamily:
    """
    Classify every point and count the types

    Trivial points are removed from D; the first classification error
    is raised with the offending point's label.

    Args:
        family: Descriptor to resolve
        bound: Quasi-unipotency bound passed to the classifier

    Returns:
        ResolvedFamily with counts, per-point classes and dropped labels
    """
    tally = {name: 0 for name in _COUNT_FIELDS.values()}
    classes: List[Tuple[str, MonodromyClass]] = []
    dropped: List[str] = []
    for point in family.points:
        verdict = classify_point(point, family.weight, bound)
        if verdict.is_trivial:
            dropped.append(point.label)
            continue
        classes.append((point.label, verdict))
        tally[_COUNT_FIELDS[verdict.kind]] += 1

    counts = DegenerationCounts(family.weight, **tally)
    if family.decomposed and (counts.n_i or counts.n_iii):
        raise InconsistentInput(
            f"A decomposed family has no type I or III points, got |I|={counts.n_i}, |III|={counts.n_iii}"
        )
    if dropped:
        logger.info(f"Dropped trivial points {dropped} from D")
    logger.debug(f"Resolved weight-{family.weight} family to counts {counts.to_dict()}")
    return ResolvedFamily(counts, tuple(classes), tuple(dropped))


def base_change(family: FamilyDescriptor, e: int) -> FamilyDescriptor:
    """
    Pull the family back along the cover z -> z^e of the projective line

    The two ramified points get monodromy T^e; each unramified point is
    replaced by e copies labelled "label#1" .. "label#e". The degrees do
    not follow from the monodromy and are cleared.

    Args:
        family: Genus-0 family with exactly two ramified points and matrices everywhere
        e: Degree of the cover

    Returns:
        Base-changed descriptor with unknown degrees
    """
    if e < 1:
        raise PreconditionFailed(f"Cover degree must be positive, got {e}")
    if family.genus != 0:
        raise PreconditionFailed(f"Base change z -> z^e needs genus 0, got {family.genus}")
    ramified = family.ramified_points
    if len(ramified) != 2:
        raise PreconditionFailed(f"Exactly two ramified points are needed, got {len(ramified)}")
    tagged = [p.label for p in family.points if p.matrix is None]
    if tagged:
        raise PreconditionFailed(f"Base change needs monodromy matrices at every point, missing at {tagged}")

    points: List[MarkedPoint] = []
    for point in family.points:
        if point.ramified:
            points.append(replace(point, matrix=point.matrix.power(e)))
        elif e == 1:
            points.append(point)
        else:
            points.extend(replace(point, label=f"{point.label}#{i}") for i in range(1, e + 1))

    if family.a is not None or family.b is not None:
        logger.warning(f"Degrees a, b are not determined by base change (e={e}); cleared, supply them explicitly")
    logger.info(f"Base change of degree {e}: {len(family.points)} points -> {len(points)} points")
    return replace(family, points=tuple(points), a=None, b=None, a_prime=None, b_prime=None)
