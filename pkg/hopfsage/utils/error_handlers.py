from typing import Tuple
from hopfsage.utils.errors import (HopfsageError, InvalidStructureError,
                                   ParseError)
from hopfsage.utils.logging import logger
from hopfsage.utils.verdicts import ExitCode


def error_payload(error: Exception) -> Tuple[dict, ExitCode]:
    """Map an exception raised by a command to a report payload."""
    if isinstance(error, ParseError):
        return {
            "error": "Syntax error",
            "message": error.message,
            "code": error.code,
            "line": error.line,
            "column": error.column
        }, ExitCode.ERROR

    if isinstance(error, InvalidStructureError):
        return {
            "error": "Invalid structure",
            "message": error.message,
            "code": error.code,
            "diagnostics": [str(d) for d in error.diagnostics]
        }, ExitCode.ERROR

    if isinstance(error, HopfsageError):
        return {
            "error": type(error).__name__,
            "message": error.message,
            "code": error.code
        }, ExitCode.ERROR

    if isinstance(error, OSError):
        return {
            "error": "File error",
            "message": str(error),
            "code": "FILE_ERROR"
        }, ExitCode.ERROR

    logger.error(f"Unhandled exception: {str(error)}")
    return {
        "error": "Internal error",
        "message": "An unexpected error occurred",
        "code": "INTERNAL_ERROR"
    }, ExitCode.ERROR
