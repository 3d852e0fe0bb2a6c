"""
Family Descriptor
Marked points and global data of a variation over a punctured curve
"""

from dataclasses import dataclass, replace
from typing import Dict, Optional, Tuple

from ..algebra import RationalMatrix
from ..monodromy import MonodromyClass, MonodromyKind
from ..utils.errors import MalformedInput, PreconditionFailed
from ..utils.json_codec import FAMILY_SCHEMA, parse_integer, validate_document


@dataclass(frozen=True)
class MarkedPoint:
    """
    A point of D with either a monodromy matrix or a declared type tag

    Attributes:
        label: Name of the point, unique within a family
        matrix: Local monodromy T, if known
        declared: Type tag, for points given without a matrix
        ramified: True for the two points fixed by z -> z^e
    """

    label: str
    matrix: Optional[RationalMatrix] = None
    declared: Optional[MonodromyKind] = None
    ramified: bool = False

    def __post_init__(self):
        if (self.matrix is None) == (self.declared is None):
            raise MalformedInput(f"Point '{self.label}' needs exactly one of a matrix or a type tag")

    @classmethod
    def from_dict(cls, payload: Dict) -> 'MarkedPoint':
        label = payload['label']
        matrix = None
        declared = None
        try:
            if 'matrix' in payload:
                matrix = RationalMatrix.from_dict(payload['matrix'])
            else:
                declared = MonodromyKind.parse(payload['type'])
        except MalformedInput as e:
            raise e.at_point(label)
        return cls(label, matrix, declared, bool(payload.get('ramified', False)))

    def to_dict(self) -> Dict:
        payload = {'label': self.label, 'ramified': self.ramified}
        if self.matrix is not None:
            payload['matrix'] = self.matrix.to_dict()
        else:
            payload['type'] = self.declared.value
        return payload


def _optional_degree(payload: Dict, key: str) -> Optional[int]:
    value = payload.get(key)
    if value is None:
        return None
    return parse_integer(value, key)


@dataclass(frozen=True)
class FamilyDescriptor:
    """
    Global data of a weight-m variation with Hodge numbers (1, ..., 1)

    Degrees a = deg E^{m,0}, b = deg E^{2,1} (weight 3), a' = -deg E^{0,m}
    and b' = -deg E^{1,2} may be left unknown; operations that need them
    fail with PreconditionFailed.
    """

    weight: int
    genus: int
    points: Tuple[MarkedPoint, ...]
    a: Optional[int] = None
    b: Optional[int] = None
    a_prime: Optional[int] = None
    b_prime: Optional[int] = None
    theta_nonzero: Optional[Tuple[bool, ...]] = None
    decomposed: bool = False
    irreducible: bool = True

    def __post_init__(self):
        if self.weight not in (1, 2, 3):
            raise PreconditionFailed(f"Weight must be 1, 2 or 3, got {self.weight}")
        if self.genus < 0:
            raise PreconditionFailed(f"Genus must be nonnegative, got {self.genus}")
        if self.decomposed and self.weight != 3:
            raise PreconditionFailed("Only weight-3 Higgs bundles can be decomposed")
        if self.theta_nonzero is not None and len(self.theta_nonzero) != self.weight:
            raise MalformedInput(f"Weight {self.weight} has {self.weight} theta arrows, "
                                 f"got {len(self.theta_nonzero)} flags")
        if self.decomposed and self.theta_nonzero is not None and self.theta_nonzero[1]:
            raise MalformedInput("A decomposed Higgs bundle has theta = 0 on E^(2,1)")
        labels = [p.label for p in self.points]
        if len(set(labels)) != len(labels):
            raise MalformedInput(f"Point labels must be unique: {labels}")
        for point in self.points:
            if point.declared is not None:
                try:
                    MonodromyClass.from_declared(self.weight, point.declared)
                except MalformedInput as e:
                    raise e.at_point(point.label)
            elif point.matrix.size != self.weight + 1:
                raise MalformedInput(
                    f"Weight {self.weight} needs {self.weight + 1}x{self.weight + 1} monodromy, "
                    f"got {point.matrix.size}x{point.matrix.size}", point=point.label
                )

    @property
    def arrows(self) -> Tuple[bool, ...]:
        """Theta flags, defaulting to the pattern of the family's case"""
        if self.theta_nonzero is not None:
            return tuple(self.theta_nonzero)
        if self.decomposed:
            return (True, False, True)
        return (True,) * self.weight

    @property
    def ramified_points(self) -> Tuple[MarkedPoint, ...]:
        return tuple(p for p in self.points if p.ramified)

    def with_degrees(self, a: Optional[int], b: Optional[int] = None,
                     a_prime: Optional[int] = None, b_prime: Optional[int] = None) -> 'FamilyDescriptor':
        return replace(self, a=a, b=b, a_prime=a_prime, b_prime=b_prime)

    @classmethod
    def from_dict(cls, payload: Dict) -> 'FamilyDescriptor':
        """
        Build a descriptor from its JSON document

        Raises:
            MalformedInput: schema violations or bad point data
        """
        validate_document(payload, FAMILY_SCHEMA, 'family descriptor')
        theta = payload.get('theta_nonzero')
        return cls(
            weight=payload['weight'],
            genus=payload['genus'],
            points=tuple(MarkedPoint.from_dict(p) for p in payload['points']),
            a=_optional_degree(payload, 'a'),
            b=_optional_degree(payload, 'b'),
            a_prime=_optional_degree(payload, 'a_prime'),
            b_prime=_optional_degree(payload, 'b_prime'),
            theta_nonzero=tuple(theta) if theta is not None else None,
            decomposed=payload.get('decomposed', False),
            irreducible=payload.get('irreducible', True),
        )

    def to_dict(self) -> Dict:
        payload = {
            'weight': self.weight,
            'genus': self.genus,
            'decomposed': self.decomposed,
            'irreducible': self.irreducible,
            'points': [p.to_dict() for p in self.points],
        }
        for key in ('a', 'b', 'a_prime', 'b_prime'):
            value = getattr(self, key)
            payload[key] = None if value is None else str(value)
        if self.theta_nonzero is not None:
            payload['theta_nonzero'] = list(self.theta_nonzero)
        return payload
