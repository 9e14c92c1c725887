"""
Segment IR data model.

A program is a flat, indexed sequence of statements. Control statements carry
a block length: the number of statements DIRECTLY dependent on them (a nested
block counts as one, through its own control statement).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple


class IrKind(str, Enum):
    INPUT = "input"
    OUTPUT = "output"
    ASSIGN = "assign"
    IF = "if"
    ELSEIF = "elseif"
    ELSE = "else"
    DOCASE = "docase"
    CASE = "case"
    LOOP = "loop"
    BREAK = "break"
    CONTINUE = "continue"
    INVAR = "invar"

    @property
    def is_block(self):
        return self in BLOCK_KINDS

    @property
    def is_primary(self):
        return self in PRIMARY_KINDS

    @property
    def is_secondary(self):
        return self in SECONDARY_KINDS


# kinds carrying a block length
BLOCK_KINDS = frozenset({IrKind.IF, IrKind.ELSEIF, IrKind.ELSE, IrKind.DOCASE, IrKind.CASE, IrKind.LOOP})
# primary control vertices in the SDG
PRIMARY_KINDS = frozenset({IrKind.IF, IrKind.LOOP, IrKind.DOCASE})
# secondary control vertices in the SDG
SECONDARY_KINDS = frozenset({IrKind.ELSEIF, IrKind.ELSE, IrKind.CASE, IrKind.BREAK, IrKind.CONTINUE})


@dataclass(frozen=True)
class IrStatement:
    index: int
    kind: IrKind
    defined: Tuple[str, ...] = ()
    used: Tuple[str, ...] = ()
    block_length: Optional[int] = None

    def __post_init__(self):
        # accept any sequence, store tuples so statements stay hashable
        object.__setattr__(self, "kind", IrKind(self.kind))
        object.__setattr__(self, "defined", tuple(self.defined))
        object.__setattr__(self, "used", tuple(self.used))

    @property
    def is_block(self):
        return self.kind.is_block

    def with_index(self, index):
        return IrStatement(index, self.kind, self.defined, self.used, self.block_length)


def compute_nesting(statements):
    """
    Resolve direct control parents with a nesting stack.

    Args:
        statements: sequence of IrStatement in program order.

    Returns:
        (parents, unfinished) where parents[i] is the index of the direct
        control parent of statement i (None at top level) and unfinished is
        a list of (index, missing) for blocks still open at end of program.
    """
    parents: List[Optional[int]] = []
    # key: control index, value: remaining direct children
    stack: List[List[int]] = []
    for i, stmt in enumerate(statements):
        while stack and stack[-1][1] == 0:
            stack.pop()
        if stack:
            parents.append(stack[-1][0])
            stack[-1][1] -= 1
        else:
            parents.append(None)
        if stmt.is_block and stmt.block_length is not None:
            stack.append([i, stmt.block_length])
    unfinished = [(idx, remaining) for idx, remaining in stack if remaining > 0]
    return parents, unfinished


class IrProgram:
    """Immutable indexed program with the IR query functions."""

    def __init__(self, statements: Sequence[IrStatement]):
        self.statements = tuple(statements)
        for position, stmt in enumerate(self.statements):
            if stmt.index != position:
                raise ValueError(f"statement at position {position} carries index {stmt.index}")

        self._parents, self.unfinished = compute_nesting(self.statements)
        self._children = {i: [] for i, s in enumerate(self.statements) if s.is_block}
        self._ends = list(range(len(self.statements)))
        for i, parent in enumerate(self._parents):
            if parent is not None:
                self._children.setdefault(parent, []).append(i)
            ancestor = parent
            while ancestor is not None:
                self._ends[ancestor] = i
                ancestor = self._parents[ancestor]

    def __len__(self):
        return len(self.statements)

    def __iter__(self) -> Iterator[IrStatement]:
        return iter(self.statements)

    def __getitem__(self, index) -> IrStatement:
        return self.statements[index]

    def __eq__(self, other):
        return isinstance(other, IrProgram) and self.statements == other.statements

    def __hash__(self):
        return hash(self.statements)

    def __repr__(self):
        return f"IrProgram({len(self.statements)} statements)"

    def _check(self, id):
        if not 0 <= id < len(self.statements):
            raise IndexError(f"IR index {id} out of range 0..{len(self.statements) - 1}")

    def defined_at(self, id):
        self._check(id)
        return frozenset(self.statements[id].defined)

    def used_at(self, id):
        self._check(id)
        return frozenset(self.statements[id].used)

    def last_defined(self, var, id):
        """Greatest j < id defining var, or None. id may equal len(program)."""
        if not 0 <= id <= len(self.statements):
            raise IndexError(f"IR index {id} out of range 0..{len(self.statements)}")
        for j in range(id - 1, -1, -1):
            if var in self.statements[j].defined:
                return j
        return None

    def is_control_block(self, id):
        self._check(id)
        return self.statements[id].is_block

    def get_ctrl_blocks(self, start_id, end_id):
        if start_id >= end_id:
            raise ValueError(f"empty range: start {start_id} must be below end {end_id}")
        lo = max(start_id + 1, 0)
        hi = min(end_id, len(self.statements))
        return {i for i in range(lo, hi) if self.statements[i].is_block}

    def get_length(self, id):
        self._check(id)
        stmt = self.statements[id]
        if not stmt.is_block:
            raise ValueError(f"IR statement {id} ({stmt.kind.value}) is not a control block")
        return stmt.block_length

    def get_length_sum(self, id1, id2):
        return sum(self.get_length(i) for i in self.get_ctrl_blocks(id1, id2))

    def parent_of(self, cid) -> Optional[int]:
        self._check(cid)
        return self._parents[cid]

    def is_control_parent(self, pid, cid):
        self._check(pid)
        self._check(cid)
        if pid >= cid or not self.statements[pid].is_block:
            return False
        return self._parents[cid] == pid

    def children_of(self, pid):
        self._check(pid)
        return list(self._children.get(pid, []))

    def block_end(self, id):
        """Index of the last statement nested (transitively) under id, or id itself."""
        self._check(id)
        return self._ends[id]

    def depth_of(self, id):
        depth = 0
        parent = self.parent_of(id)
        while parent is not None:
            depth += 1
            parent = self._parents[parent]
        return depth
