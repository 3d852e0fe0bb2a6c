"""
Hodge Number Formulas
Closed-form Hodge numbers of H^1(S, j_*V) for weights 1, 2, 3 and the decomposed case
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from loguru import logger

from ..utils.errors import IndeterminateFromDegree, InconsistentInput, PreconditionFailed
from ..utils.json_codec import HODGE_INPUT_SCHEMA, parse_integer, validate_document


@dataclass(frozen=True)
class DegenerationCounts:
    """
    Number of degeneration points of each type

    Weights 1 and 2 only use n_i and n_ii (n_ii counts the strictly
    quasi-unipotent points there); weight 3 uses all four.
    """

    weight: int
    n_i: int = 0
    n_ii: int = 0
    n_iii: int = 0
    n_iv: int = 0

    def __post_init__(self):
        if self.weight not in (1, 2, 3):
            raise PreconditionFailed(f"Weight must be 1, 2 or 3, got {self.weight}")
        if min(self.n_i, self.n_ii, self.n_iii, self.n_iv) < 0:
            raise PreconditionFailed(f"Counts must be nonnegative: {self.as_tuple()}")
        if self.weight < 3 and (self.n_iii or self.n_iv):
            raise PreconditionFailed(f"Weight {self.weight} has no types III or IV")

    @property
    def num_points(self) -> int:
        return self.n_i + self.n_ii + self.n_iii + self.n_iv

    @property
    def strict(self) -> int:
        """Count of strictly quasi-unipotent points"""
        return self.n_iv if self.weight == 3 else self.n_ii

    def as_tuple(self) -> Tuple[int, ...]:
        if self.weight == 3:
            return (self.n_i, self.n_ii, self.n_iii, self.n_iv)
        return (self.n_i, self.n_ii)

    def to_dict(self) -> Dict:
        names = ('I', 'II', 'III', 'IV')
        return dict(zip(names, self.as_tuple()))


@dataclass(frozen=True)
class HodgeInput:
    """Inputs of the closed formulas: genus, Hodge-bundle degrees, counts and theta flags"""

    g: int
    a: int
    counts: DegenerationCounts
    b: Optional[int] = None
    theta_nonzero: Optional[Tuple[bool, ...]] = None
    irreducible: bool = True
    b_prime: Optional[int] = None

    @classmethod
    def from_dict(cls, payload: Dict, weight: int) -> 'HodgeInput':
        """
        Parse the Hodge-input JSON document for a given weight

        Raises:
            MalformedInput: schema violations
        """
        validate_document(payload, HODGE_INPUT_SCHEMA, 'Hodge input')
        counts = payload['counts']
        theta = payload.get('theta_nonzero')
        return cls(
            g=payload['g'],
            a=parse_integer(payload['a'], 'a'),
            counts=DegenerationCounts(weight, counts.get('I', 0), counts.get('II', 0),
                                      counts.get('III', 0), counts.get('IV', 0)),
            b=None if payload.get('b') is None else parse_integer(payload['b'], 'b'),
            theta_nonzero=tuple(theta) if theta is not None else None,
            irreducible=payload.get('irreducible', True),
            b_prime=None if payload.get('b_prime') is None else parse_integer(payload['b_prime'], 'b_prime'),
        )

    @property
    def weight(self) -> int:
        return self.counts.weight

    def arrows(self) -> Tuple[bool, ...]:
        if self.theta_nonzero is None:
            return (True,) * self.weight
        return tuple(self.theta_nonzero)


@dataclass(frozen=True)
class HodgeNumbers:
    """
    Hodge numbers h^{p,q}, p + q = weight, stored from (weight, 0) down to (0, weight)
    """

    weight: int
    components: Tuple[int, ...]
    derived: Dict[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.components) != self.weight + 1:
            raise ValueError(f"Weight {self.weight} needs {self.weight + 1} components")
        if self.components != tuple(reversed(self.components)):
            raise InconsistentInput(f"Hodge symmetry h^(p,q) = h^(q,p) fails: {self.components}")

    def h(self, p: int, q: int) -> int:
        if p + q != self.weight or min(p, q) < 0:
            raise KeyError(f"No component ({p},{q}) in weight {self.weight}")
        return self.components[self.weight - p]

    @property
    def total(self) -> int:
        return sum(self.components)

    def to_dict(self) -> Dict:
        return {
            'weight': self.weight,
            'components': {
                f"{self.weight - i},{i}": value for i, value in enumerate(self.components)
            },
            'total': self.total,
            'derived': dict(self.derived),
        }


def check_sum(weight: int, g: int, counts: DegenerationCounts) -> int:
    """
    Total dimension h^1(j_*V) from genus and type counts alone

    Pure arithmetic; defined even when the formula preconditions fail.
    """
    if weight != counts.weight:
        raise PreconditionFailed(f"Counts are for weight {counts.weight}, not {weight}")
    if weight == 1:
        return 4 * g - 4 + counts.n_i + 2 * counts.n_ii
    if weight == 2:
        return 6 * g - 6 + 2 * counts.n_i + 3 * counts.n_ii
    return (8 * g - 8 + counts.n_i + 2 * counts.n_ii
            + 3 * counts.n_iii + 4 * counts.n_iv)


def _require(condition: bool, message: str):
    if not condition:
        raise PreconditionFailed(message)


def _check_common(data: HodgeInput, weight: int):
    _require(data.weight == weight, f"Expected weight {weight} input, got weight {data.weight}")
    _require(data.g >= 0, f"Genus must be nonnegative, got {data.g}")
    _require(data.irreducible, "The local system must be irreducible")
    arrows = data.arrows()
    _require(len(arrows) == weight, f"Weight {weight} has {weight} theta arrows, got {len(arrows)}")
    _require(all(arrows), f"All theta arrows must be nonzero, got {list(arrows)}")
    strict_label = '|IV|' if weight == 3 else '|II|'
    _require(data.a + data.counts.strict > 0, f"a + {strict_label} > 0 fails (a={data.a})")


def _assemble(weight: int, components: Tuple[int, ...], expected_total: Optional[int],
              derived: Dict[str, int]) -> HodgeNumbers:
    negative = [f"h^({weight - i},{i})={v}" for i, v in enumerate(components) if v < 0]
    if negative:
        raise InconsistentInput(f"Negative Hodge numbers {', '.join(negative)}; the input "
                                f"cannot come from a variation with these invariants")
    numbers = HodgeNumbers(weight, components, derived)
    if expected_total is not None and numbers.total != expected_total:
        raise InconsistentInput(
            f"Components sum to {numbers.total} but the check-sum gives {expected_total}"
        )
    return numbers


def hodge_weight1(data: HodgeInput) -> HodgeNumbers:
    """
    Hodge numbers of the weight-2 structure for an elliptic-type local system

    h^{2,0} = g-1+a+|II|, h^{1,1} = 2g-2-2a+|I|.
    """
    _check_common(data, 1)
    c = data.counts
    h20 = data.g - 1 + data.a + c.n_ii
    h11 = 2 * data.g - 2 - 2 * data.a + c.n_i
    total = check_sum(1, data.g, c)
    return _assemble(2, (h20, h11, h20), total,
                     {'a_prime': data.a + c.n_ii, 'check_sum': total})


def hodge_weight2(data: HodgeInput) -> HodgeNumbers:
    """
    Hodge numbers of the weight-3 structure for a K3-type local system

    The degree of E^{1,1} is forced to -|II|/2, so |II| must be even.
    """
    _check_common(data, 2)
    c = data.counts
    if c.n_ii % 2:
        raise InconsistentInput(f"|II| = {c.n_ii} is odd, but deg E^(1,1) = -|II|/2 must be an integer")
    middle = -(c.n_ii // 2)
    if data.b is not None and data.b != middle:
        raise InconsistentInput(f"deg E^(1,1) = {data.b} contradicts the forced value -|II|/2 = {middle}")
    h30 = data.g - 1 + data.a + c.n_ii
    h21 = 2 * data.g - 2 - data.a + c.n_i + c.n_ii // 2
    total = check_sum(2, data.g, c)
    return _assemble(3, (h30, h21, h21, h30), total,
                     {'deg_e11': middle, 'a_prime': data.a + c.n_ii, 'check_sum': total})


def hodge_weight3(data: HodgeInput) -> HodgeNumbers:
    """
    Hodge numbers of the weight-4 structure for a Calabi-Yau-type local system

    h^{4,0} = g-1+a+|IV|, h^{3,1} = 2g-2+b-a+|II|+|III|+|IV|,
    h^{2,2} = |I|+|III|+|IV|-b-b'+2g-2 with b' = b+|IV| unless given.

    Args:
        data: HodgeInput with weight-3 counts and b = deg E^{2,1}

    Returns:
        HodgeNumbers of weight 4

    Raises:
        PreconditionFailed: missing b, zero theta arrow, a + |IV| <= 0
        InconsistentInput: negative components or a b' breaking the check-sum
    """
    _check_common(data, 3)
    _require(data.b is not None, "Weight 3 needs b = deg E^(2,1)")
    c = data.counts
    g, a, b = data.g, data.a, data.b
    b_prime = data.b_prime
    if b_prime is None:
        b_prime = b + c.n_iv
        logger.debug(f"Using b' = b + |IV| = {b_prime}")
    h40 = g - 1 + a + c.n_iv
    h31 = 2 * g - 2 + b - a + c.n_ii + c.n_iii + c.n_iv
    h22 = c.n_i + c.n_iii + c.n_iv - b - b_prime + 2 * g - 2
    total = check_sum(3, g, c)
    return _assemble(4, (h40, h31, h22, h31, h40), total,
                     {'a_prime': a + c.n_iv, 'b_prime': b_prime, 'check_sum': total})


def line_bundle_h0(degree: int, g: int) -> int:
    """
    h^0 of a line bundle determined by its degree alone

    Genus 0: max(deg+1, 0). Higher genus: 0 for negative degree and
    deg+1-g above 2g-2.

    Raises:
        IndeterminateFromDegree: for 0 <= deg <= 2g-2 when g >= 1
    """
    if g == 0:
        return max(degree + 1, 0)
    if degree < 0:
        return 0
    if degree > 2 * g - 2:
        return degree + 1 - g
    raise IndeterminateFromDegree(
        f"h^0 of a degree-{degree} line bundle on a genus-{g} curve depends on more than the degree"
    )


def line_bundle_h1(degree: int, g: int) -> int:
    """h^1 by Serre duality: h^0 of K tensor the dual, of degree 2g-2-deg"""
    return line_bundle_h0(2 * g - 2 - degree, g)


def higgs_arrow_is_isomorphism(source_degree: int, target_degree: int,
                               g: int, num_points: int) -> bool:
    """A nonzero map L -> M (x) Omega^1(log D) of line bundles is onto iff the degrees agree"""
    return source_degree == target_degree + 2 * g - 2 + num_points


def hodge_decomposed(g: int, a: int, b: int, n_ii: int, n_iv: int, num_points: int) -> HodgeNumbers:
    """
    Hodge numbers for a decomposed weight-3 Higgs bundle

    The outer theta arrows are isomorphisms and the middle one is zero,
    which forces |I| = |III| = 0 and a = b + 2g - 2 + #D.

    Args:
        g: Genus of the compactified base
        a: deg E^{3,0}
        b: deg E^{2,1}
        n_ii: Number of type II points
        n_iv: Number of type IV points
        num_points: #D

    Returns:
        HodgeNumbers of weight 4 with h^{3,1} = 0

    Raises:
        PreconditionFailed: a + |IV| <= 0 or #D != |II| + |IV|
        InconsistentInput: a != b + 2g - 2 + #D, negative h^{4,0}
        IndeterminateFromDegree: h^{2,2} not determined by degrees
    """
    _require(g >= 0, f"Genus must be nonnegative, got {g}")
    _require(min(n_ii, n_iv) >= 0, "Counts must be nonnegative")
    _require(a + n_iv > 0, f"a + |IV| > 0 fails (a={a}, |IV|={n_iv})")
    _require(num_points == n_ii + n_iv,
             f"#D = {num_points} but a decomposed bundle has only types II and IV ({n_ii} + {n_iv})")
    if not higgs_arrow_is_isomorphism(a, b, g, num_points):
        raise InconsistentInput(
            f"Decomposed bundles need a = b + 2g - 2 + #D, got a={a}, "
            f"b + 2g - 2 + #D = {b + 2 * g - 2 + num_points}"
        )
    h40 = g - 1 + a + n_iv
    h22 = 2 * line_bundle_h0(2 * g - 2 - b, g)
    counts = DegenerationCounts(3, 0, n_ii, 0, n_iv)
    total = check_sum(3, g, counts)
    numbers = _assemble(4, (h40, 0, h22, 0, h40), None,
                        {'a_prime': a + n_iv, 'b_prime': b + n_iv, 'check_sum': total})
    logger.debug(f"Decomposed Hodge numbers {numbers.components}, check-sum {total}")
    return numbers
