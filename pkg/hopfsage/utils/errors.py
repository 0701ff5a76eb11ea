from typing import List, Optional


class HopfsageError(Exception):
    """Base class for every error raised by hopfsage."""
    code = "HOPFSAGE_ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class DimensionMismatchError(HopfsageError):
    code = "DIMENSION_MISMATCH"


class MixedFieldError(HopfsageError):
    code = "MIXED_FIELDS"


class FieldError(HopfsageError):
    code = "INVALID_FIELD"


class ParseError(HopfsageError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SemanticError(HopfsageError):
    code = "SEMANTIC_ERROR"


class PreconditionError(HopfsageError):
    code = "PRECONDITION_FAILED"


class InvalidStructureError(HopfsageError):
    code = "INVALID_STRUCTURE"

    def __init__(self, message: str, diagnostics: Optional[List] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or []
