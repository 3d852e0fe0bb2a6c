"""
Engine Errors
Structured error types with stable reason codes
"""

from enum import Enum
from typing import Dict, Optional


class ErrorReason(str, Enum):
    """Reason codes emitted in structured CLI errors"""

    NOT_QUASI_UNIPOTENT = 'NotQuasiUnipotent'
    MIXED_CASE = 'MixedCase'
    EXCLUDED_BY_POLARIZATION = 'ExcludedByPolarization'
    INCONSISTENT_INPUT = 'InconsistentInput'
    PRECONDITION_FAILED = 'PreconditionFailed'
    INDETERMINATE_FROM_DEGREE = 'IndeterminateFromDegree'
    MALFORMED_INPUT = 'MalformedInput'


class EngineError(Exception):
    """
    Base error of the engine

    Every error carries a reason code, a human-readable detail and
    optionally the label of the marked point it refers to.
    """

    reason: ErrorReason = ErrorReason.PRECONDITION_FAILED

    def __init__(self, detail: str, point: Optional[str] = None):
        super().__init__(detail)
        self.detail = detail
        self.point = point

    def at_point(self, label: str) -> 'EngineError':
        """Return a copy of this error annotated with a point label"""
        return type(self)(self.detail, point=label)

    def to_dict(self) -> Dict:
        payload = {'error': self.reason.value, 'detail': self.detail}
        if self.point is not None:
            payload['point'] = self.point
        return payload

    def __str__(self) -> str:
        where = f" at point '{self.point}'" if self.point is not None else ''
        return f"{self.reason.value}{where}: {self.detail}"


class ClassificationError(EngineError):
    """A local monodromy falls outside the allowed types"""


class NotQuasiUnipotent(ClassificationError):
    reason = ErrorReason.NOT_QUASI_UNIPOTENT


class MixedCase(ClassificationError):
    reason = ErrorReason.MIXED_CASE


class ExcludedByPolarization(ClassificationError):
    reason = ErrorReason.EXCLUDED_BY_POLARIZATION


class InconsistentInput(EngineError):
    reason = ErrorReason.INCONSISTENT_INPUT


class PreconditionFailed(EngineError):
    reason = ErrorReason.PRECONDITION_FAILED


class IndeterminateFromDegree(EngineError):
    reason = ErrorReason.INDETERMINATE_FROM_DEGREE


class MalformedInput(EngineError):
    reason = ErrorReason.MALFORMED_INPUT
