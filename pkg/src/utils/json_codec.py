"""
JSON Codec
JSON Schemas for engine documents and schema-checked loading
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

import jsonschema
from loguru import logger

from .errors import MalformedInput

_INTEGER_LIKE = {
    'oneOf': [
        {'type': 'integer'},
        {'type': 'string', 'pattern': r'^\s*[+-]?\d+\s*$'},
    ]
}

_RATIONAL_LIKE = {
    'oneOf': [
        {'type': 'integer'},
        {'type': 'string', 'pattern': r'^\s*[+-]?\d+\s*(/\s*[+-]?\d+\s*)?$'},
    ]
}

_OPTIONAL_DEGREE = {'oneOf': [_INTEGER_LIKE, {'type': 'null'}]}

MATRIX_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['n', 'entries'],
    'properties': {
        'n': {'type': 'integer', 'minimum': 1},
        'entries': {
            'type': 'array',
            'minItems': 1,
            'items': {'type': 'array', 'minItems': 1, 'items': _RATIONAL_LIKE},
        },
    },
}

COUNTS_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'properties': {kind: {'type': 'integer', 'minimum': 0} for kind in ('I', 'II', 'III', 'IV')},
    'additionalProperties': False,
}

HODGE_INPUT_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['g', 'a', 'counts'],
    'properties': {
        'g': {'type': 'integer', 'minimum': 0},
        'a': _INTEGER_LIKE,
        'b': _OPTIONAL_DEGREE,
        'b_prime': _OPTIONAL_DEGREE,
        'counts': COUNTS_SCHEMA,
        'numD': {'type': 'integer', 'minimum': 0},
        'theta_nonzero': {'type': 'array', 'items': {'type': 'boolean'}},
        'irreducible': {'type': 'boolean'},
    },
}

POINT_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['label'],
    'properties': {
        'label': {'type': 'string', 'minLength': 1},
        'matrix': MATRIX_SCHEMA,
        'type': {'type': 'string'},
        'ramified': {'type': 'boolean'},
    },
    'oneOf': [
        {'required': ['matrix'], 'not': {'required': ['type']}},
        {'required': ['type'], 'not': {'required': ['matrix']}},
    ],
}

FAMILY_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['weight', 'genus', 'points'],
    'properties': {
        'weight': {'enum': [1, 2, 3]},
        'genus': {'type': 'integer', 'minimum': 0},
        'a': _OPTIONAL_DEGREE,
        'b': _OPTIONAL_DEGREE,
        'a_prime': _OPTIONAL_DEGREE,
        'b_prime': _OPTIONAL_DEGREE,
        'decomposed': {'type': 'boolean'},
        'irreducible': {'type': 'boolean'},
        'theta_nonzero': {'type': 'array', 'items': {'type': 'boolean'}},
        'points': {'type': 'array', 'items': POINT_SCHEMA},
    },
}

_TABLE_ENTRY = {
    'oneOf': [
        {'type': 'integer'},
        {'type': 'string', 'minLength': 1},
        {'type': 'array', 'minItems': 1, 'items': {'oneOf': [{'type': 'integer'}, {'type': 'string'}]}},
    ]
}

TABLE_ROW_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['e', 'h1', 'h40', 'h31', 'h22', 'a', 'b'],
    'properties': {
        'e': {'oneOf': [{'type': 'integer', 'minimum': 1}, {'type': 'string', 'minLength': 1}]},
        'h1': {'oneOf': [{'type': 'integer'}, {'type': 'string', 'minLength': 1}]},
        **{column: _TABLE_ENTRY for column in ('h40', 'h31', 'h22', 'a', 'b')},
    },
    'additionalProperties': False,
}

TABLE_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['models'],
    'properties': {
        'models': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['id', 'model', 't_infty', 'rows'],
                'properties': {
                    'id': {'type': 'integer', 'minimum': 1},
                    'model': {'type': 'string'},
                    't_infty': {'type': 'string'},
                    'rows': {'type': 'array', 'items': TABLE_ROW_SCHEMA},
                },
            },
        },
    },
}

ARAKELOV_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['k', 'g', 'numD', 'ranks', 'kernel_ranks'],
    'properties': {
        'k': {'type': 'integer'},
        'g': {'type': 'integer', 'minimum': 0},
        'numD': {'type': 'integer', 'minimum': 0},
        'degree': {'type': 'integer'},
        'ranks': {'type': 'array', 'items': {'type': 'integer'}},
        'kernel_ranks': {'type': 'array', 'items': {'type': 'integer'}},
    },
}

PARABOLIC_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['deg', 'points'],
    'properties': {
        'deg': {'type': 'integer'},
        'points': {
            'type': 'array',
            'items': {
                'type': 'array',
                'items': {
                    'type': 'object',
                    'required': ['alpha', 'multiplicity'],
                    'properties': {
                        'alpha': _RATIONAL_LIKE,
                        'multiplicity': {'type': 'integer'},
                    },
                },
            },
        },
    },
}


def _json_path(path) -> str:
    rendered = '$'
    for part in path:
        rendered += f"[{part}]" if isinstance(part, int) else f".{part}"
    return rendered


def validate_document(document: Any, schema: Dict[str, Any], what: str) -> Any:
    """
    Validate a decoded JSON document against a schema

    Args:
        document: Decoded JSON value
        schema: JSON Schema to check against
        what: Name of the document kind, used in error messages

    Returns:
        The document, unchanged

    Raises:
        MalformedInput: on the first violation, with its JSON path
    """
    validator = jsonschema.Draft7Validator(schema)
    errors = sorted(validator.iter_errors(document), key=lambda err: list(err.absolute_path))
    if errors:
        first = errors[0]
        where = _json_path(first.absolute_path)
        logger.debug(f"{what} failed schema validation at {where}: {first.message}")
        raise MalformedInput(f"Invalid {what} at {where}: {first.message}")
    return document


def load_json(path: Union[str, Path], schema: Dict[str, Any], what: str) -> Any:
    """Read a JSON file and validate it; IO and decode failures become MalformedInput"""
    file_path = Path(path)
    try:
        document = json.loads(file_path.read_text(encoding='utf-8'))
    except FileNotFoundError:
        raise MalformedInput(f"{what} file not found: {file_path}")
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{what} file {file_path} is not valid JSON: {e}")
    return validate_document(document, schema, what)


def parse_integer(value: Union[int, str], what: str) -> int:
    """Integer from an int or a decimal string; booleans are rejected"""
    if isinstance(value, bool):
        raise MalformedInput(f"{what} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise MalformedInput(f"{what} must be an integer, got {value!r}")


def dumps(payload: Any) -> str:
    """Stable JSON rendering used for every CLI output"""
    return json.dumps(payload, indent=2, sort_keys=True)
