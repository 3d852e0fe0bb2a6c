"""
CLI Module
Command-line entry point with JSON input and output
"""

from .commands import EXIT_ERROR, EXIT_FLAGGED, EXIT_OK, build_parser, run

__all__ = ['EXIT_ERROR', 'EXIT_FLAGGED', 'EXIT_OK', 'build_parser', 'run']
