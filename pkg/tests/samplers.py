"""
Random well-formed IR programs and toy-language sources for property tests.
Every sampler is driven by random.Random(seed).
"""

import random

from src.seg_ir import IrKind, IrProgram, IrStatement


VARIABLES = ("a", "b", "c", "d", "e", "f")


class _ProgramSampler:
    def __init__(self, seed, max_statements):
        self.rng = random.Random(seed)
        self.budget = max_statements
        self.statements = []

    def emit(self, kind, defined=(), used=(), block_length=None):
        index = len(self.statements)
        self.statements.append(IrStatement(index, kind, tuple(defined), tuple(used), block_length))
        self.budget -= 1
        return index

    def some_vars(self, low=1, high=2):
        count = self.rng.randint(low, high)
        return tuple(dict.fromkeys(self.rng.choice(VARIABLES) for _ in range(count)))

    def simple(self, in_loop):
        roll = self.rng.random()
        if roll < 0.5:
            self.emit(IrKind.ASSIGN, (self.rng.choice(VARIABLES),), self.some_vars(0, 2))
        elif roll < 0.65:
            self.emit(IrKind.INPUT, (self.rng.choice(VARIABLES),))
        elif roll < 0.8:
            self.emit(IrKind.OUTPUT, used=self.some_vars())
        elif roll < 0.9 or not in_loop:
            self.emit(IrKind.INVAR)
        else:
            self.emit(self.rng.choice((IrKind.BREAK, IrKind.CONTINUE)))

    def body(self, depth, in_loop):
        """Emit 1..3 direct children; returns how many were emitted."""
        count = 0
        for _ in range(self.rng.randint(1, 3)):
            if self.budget <= 0 and count > 0:
                break
            self.statement(depth, in_loop)
            count += 1
        return count

    def set_length(self, index, length):
        stmt = self.statements[index]
        self.statements[index] = IrStatement(index, stmt.kind, stmt.defined, stmt.used, length)

    def statement(self, depth, in_loop):
        roll = self.rng.random()
        if depth >= 3 or self.budget < 4 or roll < 0.55:
            self.simple(in_loop)
        elif roll < 0.75:
            self.if_block(depth, in_loop, IrKind.IF)
        elif roll < 0.9:
            head = self.emit(IrKind.LOOP, used=self.some_vars(), block_length=0)
            self.set_length(head, self.body(depth + 1, True))
        else:
            self.docase(depth, in_loop)

    def if_block(self, depth, in_loop, kind):
        head = self.emit(kind, used=self.some_vars(), block_length=0)
        length = self.body(depth + 1, in_loop)
        if self.budget > 2 and self.rng.random() < 0.4:
            if self.rng.random() < 0.5:
                self.if_block(depth + 1, in_loop, IrKind.ELSEIF)
            else:
                branch = self.emit(IrKind.ELSE, block_length=0)
                self.set_length(branch, self.body(depth + 1, in_loop))
            length += 1
        self.set_length(head, length)

    def docase(self, depth, in_loop):
        head = self.emit(IrKind.DOCASE, used=self.some_vars(1, 1), block_length=1)
        self.case(depth + 1, in_loop)
        self.set_length(head, 1)

    def case(self, depth, in_loop):
        head = self.emit(IrKind.CASE, block_length=0)
        length = self.body(depth, in_loop)
        if self.budget > 2 and self.rng.random() < 0.5:
            self.case(depth, in_loop)
            length += 1
        self.set_length(head, length)

    def program(self):
        while self.budget > 0:
            self.statement(0, False)
        return IrProgram(self.statements)


def random_program(seed, max_statements=40):
    """A well-formed IR program of at most about max_statements statements."""
    sampler = _ProgramSampler(seed, max(1, max_statements - 6))
    return sampler.program()


class _SourceSampler:
    def __init__(self, seed, max_statements, split_io=True, reduced_loop=False):
        self.rng = random.Random(seed)
        self.budget = max_statements
        self.split_io = split_io
        self.reduced_loop = reduced_loop
        self.expected = 0

    def expr(self):
        names = [self.rng.choice(VARIABLES) for _ in range(self.rng.randint(0, 3))]
        parts = names or [str(self.rng.randint(0, 9))]
        ops = [self.rng.choice(("+", "-", "*", "/", "%")) for _ in parts[1:]]
        text = parts[0]
        for op, part in zip(ops, parts[1:]):
            text += f" {op} {part}"
        return text

    def cond(self):
        return f"{self.rng.choice(VARIABLES)} {self.rng.choice(('<', '<=', '==', '!='))} {self.expr()}"

    def simple(self, indent):
        roll = self.rng.random()
        self.budget -= 1
        pad = "  " * indent
        if roll < 0.35:
            self.expected += 1
            return f"{pad}{self.rng.choice(VARIABLES)} = {self.expr()};\n"
        if roll < 0.45:
            self.expected += 1
            return f"{pad}{self.rng.choice(VARIABLES)}{self.rng.choice(('++', '--', ' += 2'))};\n"
        if roll < 0.6:
            names = self.rng.sample(VARIABLES, self.rng.randint(1, 3))
            self.expected += len(names) if self.split_io else 1
            return f'{pad}scanf("%d", {", ".join("&" + n for n in names)});\n'
        if roll < 0.8:
            names = self.rng.sample(VARIABLES, self.rng.randint(0, 2))
            self.expected += 1 if not names or not self.split_io else len(names)
            args = "".join(f", {n}" for n in names)
            return f'{pad}printf("value"{args});\n'
        self.expected += 1
        return f"{pad}{self.rng.choice(VARIABLES)} = {self.rng.choice(VARIABLES)} * 2;\n"

    def body(self, indent):
        text = "{\n"
        for _ in range(self.rng.randint(1, 3)):
            text += self.statement(indent + 1)
            if self.budget <= 0:
                break
        return text + "  " * indent + "}"

    def statement(self, indent):
        pad = "  " * indent
        roll = self.rng.random()
        if indent >= 4 or self.budget < 4 or roll < 0.55:
            return self.simple(indent)
        self.budget -= 1
        if roll < 0.75:
            self.expected += 1
            text = f"{pad}if ({self.cond()}) {self.body(indent)}"
            if self.rng.random() < 0.4:
                self.expected += 1
                text += f" else {self.body(indent)}"
            return text + "\n"
        if roll < 0.9:
            var = self.rng.choice(VARIABLES)
            self.expected += 2 if self.reduced_loop else 3
            return f"{pad}for ({var} = 0; {var} < {self.rng.choice(VARIABLES)}; {var}++) {self.body(indent)}\n"
        self.expected += 1
        return f"{pad}while ({self.cond()}) {self.body(indent)}\n"

    def source(self):
        text = "void sampled() {\n"
        while self.budget > 0:
            text += self.statement(1)
        return text + "}\n"


def random_toy_source(seed, max_statements=30, split_io=True, reduced_loop=False):
    """
    Returns:
        (source text, expected IR statement count)
    """
    sampler = _SourceSampler(seed, max_statements, split_io, reduced_loop)
    source = sampler.source()
    return source, sampler.expected
