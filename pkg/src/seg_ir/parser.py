"""
Text format of the segment IR.

One statement per line: an optional index prefix ("7" or "7."), a lowercase
keyword, variable identifiers, and for control keywords a trailing unsigned
block length. Blank lines and '#' comment lines are skipped; indentation is
ignored.
"""

import re

from src.errors import IrSyntaxError, IrValidationError
from .statement import IrKind, IrProgram, IrStatement
from .validate import validate


IDENTIFIER_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
INDEX_PREFIX_RE = re.compile(r"^\d+\.?$")
BLOCK_LENGTH_RE = re.compile(r"^\d+$")

KEYWORDS = {kind.value: kind for kind in IrKind}


def _variables(tokens, line_no):
    for token in tokens:
        if not IDENTIFIER_RE.match(token):
            raise IrSyntaxError(f"non-identifier variable token '{token}'", line=line_no)
    return tuple(tokens)


def parse_line(text, index, line_no=None):
    """Parse one IR line (already stripped of comments) into an IrStatement."""
    tokens = text.split()
    if tokens and INDEX_PREFIX_RE.match(tokens[0]):
        tokens = tokens[1:]
    if not tokens:
        raise IrSyntaxError("missing keyword", line=line_no)

    keyword, rest = tokens[0], tokens[1:]
    kind = KEYWORDS.get(keyword)
    if kind is None:
        raise IrSyntaxError(f"malformed keyword '{keyword}'", line=line_no)

    block_length = None
    if kind.is_block:
        if not rest or not BLOCK_LENGTH_RE.match(rest[-1]):
            raise IrSyntaxError(f"'{keyword}' needs a trailing block length", line=line_no)
        block_length = int(rest[-1])
        rest = rest[:-1]

    names = _variables(rest, line_no)

    if kind == IrKind.ASSIGN:
        if not names:
            raise IrSyntaxError("assign needs the variable it defines", line=line_no)
        return IrStatement(index, kind, defined=names[:1], used=names[1:])
    if kind == IrKind.INPUT:
        if not names:
            raise IrSyntaxError("input needs at least one variable", line=line_no)
        return IrStatement(index, kind, defined=names)
    if kind == IrKind.OUTPUT:
        if not names:
            raise IrSyntaxError("output needs at least one variable (use invar)", line=line_no)
        return IrStatement(index, kind, used=names)
    if kind in (IrKind.IF, IrKind.ELSEIF, IrKind.LOOP, IrKind.DOCASE):
        return IrStatement(index, kind, used=names, block_length=block_length)
    if names:
        raise IrSyntaxError(f"'{keyword}' takes no variables", line=line_no)
    return IrStatement(index, kind, block_length=block_length)


def parse_ir(text, check=True):
    """
    Parse IR text into an IrProgram.

    Args:
        text: IR source text.
        check: raise IrValidationError when the program breaks a structural
            invariant (block overrun, partial overlap, misplaced branch).

    Returns:
        IrProgram whose indices follow line order.
    """
    statements = []
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        statements.append(parse_line(line, len(statements), line_no))

    program = IrProgram(statements)
    if check:
        diagnostics = validate(program)
        if diagnostics:
            raise IrValidationError(diagnostics)
    return program


def read_ir_file(path, check=True):
    with open(path, "r", encoding="utf-8") as f:
        return parse_ir(f.read(), check=check)


def format_statement(stmt):
    parts = [stmt.kind.value, *stmt.defined, *stmt.used]
    if stmt.block_length is not None:
        parts.append(str(stmt.block_length))
    return " ".join(parts)


def to_ir_text(program, numbered=False, indent=True):
    lines = []
    for stmt in program:
        prefix = f"{stmt.index}. " if numbered else ""
        pad = "  " * program.depth_of(stmt.index) if indent else ""
        lines.append(f"{prefix}{pad}{format_statement(stmt)}")
    return "\n".join(lines) + ("\n" if lines else "")


def write_ir_file(program, path, numbered=False, indent=True):
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_ir_text(program, numbered=numbered, indent=indent))
