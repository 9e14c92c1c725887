"""seg_ir - Segment IR model, text format, queries and validation."""

from .statement import IrKind, IrStatement, IrProgram, BLOCK_KINDS, PRIMARY_KINDS, SECONDARY_KINDS
from .parser import parse_ir, read_ir_file, to_ir_text, write_ir_file
from .validate import Diagnostic, validate

__all__ = [
    "IrKind",
    "IrStatement",
    "IrProgram",
    "BLOCK_KINDS",
    "PRIMARY_KINDS",
    "SECONDARY_KINDS",
    "parse_ir",
    "read_ir_file",
    "to_ir_text",
    "write_ir_file",
    "Diagnostic",
    "validate",
]
