"""
Exception types raised by the segmentation tool.

Input problems derive from ValueError so the CLI can map them to exit code 2;
broken engine invariants derive from RuntimeError.
"""


class SegToolError(Exception):
    """Mixin carrying an optional 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IrSyntaxError(SegToolError, ValueError):
    pass


class IrValidationError(SegToolError, ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        summary = "; ".join(str(d) for d in self.diagnostics[:5])
        if len(self.diagnostics) > 5:
            summary += f"; ... ({len(self.diagnostics)} total)"
        super().__init__(f"invalid IR program: {summary}")


class FrontendSyntaxError(SegToolError, ValueError):
    pass


class UnsupportedConstructError(SegToolError, ValueError):
    pass


class GraphError(SegToolError, ValueError):
    pass


class FileFormatError(SegToolError, ValueError):
    """Malformed source map or suggestions file."""


class GroundTruthError(FileFormatError):
    pass


class InputFileError(SegToolError, ValueError):
    """Input path missing or not readable."""


class InvariantViolation(SegToolError, RuntimeError):
    pass
