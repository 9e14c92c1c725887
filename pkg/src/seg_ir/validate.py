from dataclasses import dataclass

from .statement import IrKind


# rule names reported by validate()
RULE_OVERRUN = "overrun"
RULE_PARTIAL_OVERLAP = "partial-overlap"
RULE_FIELDS = "fields"
RULE_BRANCH_PLACEMENT = "branch-placement"

_BRANCH_PARENTS = {
    IrKind.ELSE: (IrKind.IF, IrKind.ELSEIF),
    IrKind.ELSEIF: (IrKind.IF, IrKind.ELSEIF),
    IrKind.CASE: (IrKind.DOCASE, IrKind.CASE),
}


@dataclass(frozen=True)
class Diagnostic:
    index: int
    rule: str
    message: str

    def __str__(self):
        return f"IR {self.index}: {self.rule}: {self.message}"


def _field_problems(stmt):
    kind = stmt.kind
    if kind.is_block:
        if stmt.block_length is None or stmt.block_length < 0:
            yield "control statement needs a non-negative block length"
    elif stmt.block_length is not None:
        yield f"{kind.value} carries no block length"

    if kind == IrKind.ASSIGN and len(stmt.defined) != 1:
        yield "assign defines exactly one variable"
    elif kind == IrKind.INPUT:
        if not stmt.defined:
            yield "input defines at least one variable"
        if stmt.used:
            yield "input uses no variables"
    elif kind == IrKind.OUTPUT:
        if not stmt.used:
            yield "output without variables must be invar"
        if stmt.defined:
            yield "output defines no variables"
    elif kind in (IrKind.IF, IrKind.ELSEIF, IrKind.LOOP, IrKind.DOCASE):
        if stmt.defined:
            yield f"{kind.value} defines no variables"
    elif kind in (IrKind.ELSE, IrKind.CASE, IrKind.BREAK, IrKind.CONTINUE, IrKind.INVAR):
        if stmt.defined or stmt.used:
            yield f"{kind.value} takes no variables"


def validate(program):
    """
    Check the structural invariants of an IrProgram.

    Returns:
        List of Diagnostic, empty iff the program is well formed.
    """
    diagnostics = []

    for stmt in program:
        for problem in _field_problems(stmt):
            diagnostics.append(Diagnostic(stmt.index, RULE_FIELDS, problem))

    for index, missing in program.unfinished:
        length = program[index].block_length
        naive_end = index + length
        crossing = [
            c for c in range(index + 1, len(program))
            if program[c].is_block and program.block_end(c) > naive_end and _is_descendant(program, c, index)
        ]
        if crossing:
            diagnostics.append(Diagnostic(
                index, RULE_PARTIAL_OVERLAP,
                f"block of length {length} splits nested block at {crossing[0]} "
                f"(nested block ends at {program.block_end(crossing[0])}, beyond {naive_end})"))
        else:
            diagnostics.append(Diagnostic(
                index, RULE_OVERRUN,
                f"block of length {length} needs {missing} more statement(s) than the program has"))

    for stmt in program:
        allowed = _BRANCH_PARENTS.get(stmt.kind)
        if allowed is None:
            continue
        parent = program.parent_of(stmt.index)
        if parent is None or program[parent].kind not in allowed:
            names = "/".join(k.value for k in allowed)
            diagnostics.append(Diagnostic(stmt.index, RULE_BRANCH_PLACEMENT, f"{stmt.kind.value} must sit directly inside {names}"))
        elif program.children_of(parent)[-1] != stmt.index:
            diagnostics.append(Diagnostic(stmt.index, RULE_BRANCH_PLACEMENT, f"{stmt.kind.value} must be the last statement of block {parent}"))

    diagnostics.sort(key=lambda d: (d.index, d.rule))
    return diagnostics


def _is_descendant(program, index, ancestor):
    parent = program.parent_of(index)
    while parent is not None:
        if parent == ancestor:
            return True
        parent = program.parent_of(parent)
    return False
