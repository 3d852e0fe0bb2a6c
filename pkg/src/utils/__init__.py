"""
Utilities Module
Logging, configuration, errors and JSON handling
"""

from .logger import setup_logger
from .config_loader import default_config, load_config, save_config
from .errors import (
    ClassificationError,
    EngineError,
    ErrorReason,
    ExcludedByPolarization,
    IndeterminateFromDegree,
    InconsistentInput,
    MalformedInput,
    MixedCase,
    NotQuasiUnipotent,
    PreconditionFailed,
)
from .json_codec import dumps, load_json, parse_integer, validate_document

__all__ = [
    'setup_logger',
    'default_config',
    'load_config',
    'save_config',
    'ClassificationError',
    'EngineError',
    'ErrorReason',
    'ExcludedByPolarization',
    'IndeterminateFromDegree',
    'InconsistentInput',
    'MalformedInput',
    'MixedCase',
    'NotQuasiUnipotent',
    'PreconditionFailed',
    'dumps',
    'load_json',
    'parse_integer',
    'validate_document',
]
