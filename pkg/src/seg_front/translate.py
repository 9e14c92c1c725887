"""
Lowering of a small C-like toy language to segment IR.

Supported: declarations (with optional initializers), assignments and
increments, scanf/printf, if / else if / else, for, while, switch with case
and default, break, continue. Expressions are variable reads combined with
operators; calls, arrays, pointers and member access are rejected.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.errors import FrontendSyntaxError, UnsupportedConstructError
from src.seg_ir.statement import IrKind, IrProgram, IrStatement
from .lexer import Token, tokenize
from .source_map import SourceMap


TYPE_KEYWORDS = {"int", "float", "double", "char", "long", "short", "unsigned", "signed", "void", "bool", "const", "static"}
RESERVED = TYPE_KEYWORDS | {
    "if", "else", "for", "while", "do", "switch", "case", "default", "break", "continue",
    "return", "goto", "sizeof", "struct", "union", "enum", "typedef",
}
ASSIGN_OPS = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="}
INCDEC_OPS = {"++", "--"}
UNSUPPORTED_KEYWORDS = {
    "return": "return statements",
    "goto": "goto",
    "do": "do-while loops",
    "struct": "struct types",
    "union": "union types",
    "enum": "enum types",
    "typedef": "typedef",
    "sizeof": "sizeof",
}


@dataclass
class FrontendOptions:
    reduced_loop: bool = False
    split_io: bool = True


@dataclass
class _Node:
    kind: IrKind
    defined: Tuple[str, ...] = ()
    used: Tuple[str, ...] = ()
    lines: Tuple[int, int] = (0, 0)
    children: Optional[List["_Node"]] = None   # None for simple statements


def _unique(names):
    return tuple(dict.fromkeys(names))


class _Parser:
    def __init__(self, source, opts):
        self.tokens: List[Token] = tokenize(source)
        self.pos = 0
        self.opts = opts

    # --- token helpers ---

    @property
    def tok(self):
        return self.tokens[self.pos]

    def peek(self, offset=1):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def at(self, text):
        return self.tok.kind in ("OP", "IDENT") and self.tok.text == text

    def advance(self):
        token = self.tok
        if token.kind != "EOF":
            self.pos += 1
        return token

    def expect(self, text):
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise FrontendSyntaxError(f"expected '{text}', found '{found}'", line=self.tok.line)
        return self.advance()

    def expect_ident(self):
        token = self.tok
        if token.kind != "IDENT" or token.text in RESERVED:
            found = token.text or "end of input"
            raise FrontendSyntaxError(f"expected identifier, found '{found}'", line=token.line)
        return self.advance()

    # --- expressions ---

    def expression(self, stops):
        """
        Consume a balanced expression up to (not including) a stop token at depth 0.

        Returns:
            Variables read, in order of first appearance.
        """
        names = []
        depth = 0
        start_line = self.tok.line
        consumed = 0
        while True:
            token = self.tok
            if token.kind == "EOF":
                raise FrontendSyntaxError("unterminated expression", line=start_line)
            if depth == 0 and token.kind == "OP" and token.text in stops:
                break
            if token.kind == "OP":
                if token.text == "(":
                    depth += 1
                elif token.text == ")":
                    if depth == 0:
                        raise FrontendSyntaxError("unbalanced ')'", line=token.line)
                    depth -= 1
                elif token.text in ("[", "]"):
                    raise UnsupportedConstructError("arrays are not supported", line=token.line)
                elif token.text in ("->", ".", "{", "}", ";"):
                    raise FrontendSyntaxError(f"unexpected '{token.text}' in expression", line=token.line)
                elif token.text in ASSIGN_OPS or token.text in INCDEC_OPS:
                    raise UnsupportedConstructError("assignments inside expressions are not supported", line=token.line)
            elif token.kind == "IDENT":
                if token.text in UNSUPPORTED_KEYWORDS:
                    raise UnsupportedConstructError(f"{UNSUPPORTED_KEYWORDS[token.text]} not supported", line=token.line)
                if token.text in RESERVED:
                    raise FrontendSyntaxError(f"unexpected keyword '{token.text}' in expression", line=token.line)
                if self.peek().kind == "OP" and self.peek().text == "(":
                    raise UnsupportedConstructError(f"function call '{token.text}(...)' not supported", line=token.line)
                names.append(token.text)
            elif token.kind == "STRING":
                raise UnsupportedConstructError("string values are not supported in expressions", line=token.line)
            self.advance()
            consumed += 1
        if consumed == 0:
            raise FrontendSyntaxError("expected expression", line=self.tok.line)
        return _unique(names)

    # --- statements ---

    def statement(self) -> List[_Node]:
        token = self.tok
        if token.kind == "EOF":
            raise FrontendSyntaxError("unexpected end of input", line=token.line)
        if token.kind == "OP":
            if token.text == "{":
                return self.block()
            if token.text == ";":
                self.advance()
                return []
            if token.text in INCDEC_OPS:
                return [self.simple_assignment(";")]
            raise FrontendSyntaxError(f"unexpected '{token.text}'", line=token.line)
        if token.kind != "IDENT":
            raise FrontendSyntaxError(f"unexpected '{token.text}'", line=token.line)

        word = token.text
        if word in TYPE_KEYWORDS:
            return self.declaration()
        if word == "if":
            return [self.if_statement(IrKind.IF)]
        if word == "for":
            return self.for_statement()
        if word == "while":
            return [self.while_statement()]
        if word == "switch":
            return [self.switch_statement()]
        if word in ("break", "continue"):
            self.advance()
            end = self.expect(";")
            kind = IrKind.BREAK if word == "break" else IrKind.CONTINUE
            return [_Node(kind, lines=(token.line, end.line))]
        if word == "else":
            raise FrontendSyntaxError("'else' without matching 'if'", line=token.line)
        if word in ("case", "default"):
            raise FrontendSyntaxError(f"'{word}' outside switch", line=token.line)
        if word in UNSUPPORTED_KEYWORDS:
            raise UnsupportedConstructError(f"{UNSUPPORTED_KEYWORDS[word]} not supported", line=token.line)
        if word == "scanf":
            return self.scanf_statement()
        if word == "printf":
            return self.printf_statement()
        return [self.simple_assignment(";")]

    def block(self):
        self.expect("{")
        nodes = []
        while not self.at("}"):
            if self.tok.kind == "EOF":
                raise FrontendSyntaxError("missing '}'", line=self.tok.line)
            nodes.extend(self.statement())
        self.advance()
        return nodes

    def declaration(self):
        first = self.tok
        while self.tok.kind == "IDENT" and self.tok.text in TYPE_KEYWORDS:
            self.advance()
        nodes = []
        while True:
            name = self.expect_ident()
            if self.at("["):
                raise UnsupportedConstructError("arrays are not supported", line=self.tok.line)
            if self.at("("):
                raise UnsupportedConstructError("nested function declarations are not supported", line=self.tok.line)
            if self.at("="):
                self.advance()
                used = self.expression({",", ";"})
                nodes.append(_Node(IrKind.ASSIGN, (name.text,), used, (name.line, self.tok.line)))
            if self.at(","):
                self.advance()
                continue
            break
        end = self.expect(";")
        return [_with_end(n, end.line) if n is nodes[-1] else n for n in nodes] if nodes else []

    def simple_assignment(self, terminator):
        """Parse 'x = e', 'x op= e', 'x++', '++x' up to terminator (consumed when ';')."""
        start = self.tok
        if self.tok.kind == "OP" and self.tok.text in INCDEC_OPS:
            self.advance()
            name = self.expect_ident()
            node = _Node(IrKind.ASSIGN, (name.text,), (name.text,), (start.line, name.line))
        else:
            name = self.expect_ident()
            if self.at("("):
                raise UnsupportedConstructError(f"function call '{name.text}(...)' not supported", line=name.line)
            if self.at("["):
                raise UnsupportedConstructError("arrays are not supported", line=self.tok.line)
            op = self.tok
            if op.kind == "OP" and op.text in INCDEC_OPS:
                self.advance()
                node = _Node(IrKind.ASSIGN, (name.text,), (name.text,), (start.line, op.line))
            elif op.kind == "OP" and op.text in ASSIGN_OPS:
                self.advance()
                used = self.expression({terminator})
                if op.text != "=":
                    used = _unique((name.text,) + used)
                node = _Node(IrKind.ASSIGN, (name.text,), used, (start.line, self.tok.line))
            else:
                raise FrontendSyntaxError(f"expected assignment after '{name.text}'", line=op.line)
        if terminator == ";":
            end = self.expect(";")
            node = _with_end(node, end.line)
        return node

    def condition(self):
        self.expect("(")
        used = self.expression({")"})
        close = self.expect(")")
        return used, close.line

    def if_statement(self, kind):
        head = self.advance()
        used, close_line = self.condition()
        children = self.statement()
        node = _Node(kind, used=used, lines=(head.line, close_line), children=children)
        if self.at("else"):
            else_tok = self.advance()
            if self.at("if"):
                node.children.append(self.if_statement(IrKind.ELSEIF))
            else:
                else_children = self.statement()
                node.children.append(_Node(IrKind.ELSE, lines=(else_tok.line, else_tok.line), children=else_children))
        return node

    def for_statement(self):
        head = self.advance()
        self.expect("(")
        init = []
        if self.at(";"):
            self.advance()
        elif self.tok.kind == "IDENT" and self.tok.text in TYPE_KEYWORDS:
            init = self.declaration()
        else:
            init = [self.simple_assignment(";")]
        if len(init) > 1:
            raise UnsupportedConstructError("multiple loop initializers are not supported", line=head.line)

        used = ()
        if not self.at(";"):
            used = self.expression({";"})
        self.expect(";")

        step = []
        if not self.at(")"):
            step = [self.simple_assignment(")")]
        close = self.expect(")")
        header = (head.line, close.line)

        body = self.statement()
        init = [_Node(n.kind, n.defined, n.used, header) for n in init]
        step = [_Node(n.kind, n.defined, n.used, header) for n in step]
        children = body if self.opts.reduced_loop else body + step
        return init + [_Node(IrKind.LOOP, used=used, lines=header, children=children)]

    def while_statement(self):
        head = self.advance()
        used, close_line = self.condition()
        body = self.statement()
        return _Node(IrKind.LOOP, used=used, lines=(head.line, close_line), children=body)

    def switch_statement(self):
        head = self.advance()
        used, close_line = self.condition()
        self.expect("{")
        cases = []
        while not self.at("}"):
            token = self.tok
            if token.kind == "EOF":
                raise FrontendSyntaxError("missing '}' after switch", line=token.line)
            if self.at("case"):
                self.advance()
                self.case_label()
                colon = self.expect(":")
                cases.append(_Node(IrKind.CASE, lines=(token.line, colon.line), children=[]))
            elif self.at("default"):
                self.advance()
                colon = self.expect(":")
                cases.append(_Node(IrKind.CASE, lines=(token.line, colon.line), children=[]))
            else:
                if not cases:
                    raise FrontendSyntaxError("statement before first case label", line=token.line)
                cases[-1].children.extend(self.statement())
        self.advance()
        # every case is the last direct child of the case before it
        for prev, nxt in zip(cases, cases[1:]):
            prev.children.append(nxt)
        return _Node(IrKind.DOCASE, used=used, lines=(head.line, close_line), children=cases[:1])

    def case_label(self):
        consumed = 0
        while not self.at(":"):
            token = self.tok
            if token.kind == "EOF" or (token.kind == "OP" and token.text in (";", "{", "}")):
                raise FrontendSyntaxError("malformed case label", line=token.line)
            self.advance()
            consumed += 1
        if consumed == 0:
            raise FrontendSyntaxError("empty case label", line=self.tok.line)

    def io_arguments(self, allow_address):
        """Parse '( "fmt" {, arg} )' and return variables per argument."""
        self.expect("(")
        if self.tok.kind != "STRING":
            raise FrontendSyntaxError("expected format string", line=self.tok.line)
        self.advance()
        args = []
        while self.at(","):
            self.advance()
            if allow_address:
                if self.at("&"):
                    self.advance()
                name = self.expect_ident()
                args.append((name.text,))
            else:
                args.append(self.expression({",", ")"}))
        self.expect(")")
        return args

    def scanf_statement(self):
        head = self.advance()
        args = self.io_arguments(allow_address=True)
        end = self.expect(";")
        names = _unique(n for arg in args for n in arg)
        return self._io_nodes(IrKind.INPUT, names, (head.line, end.line))

    def printf_statement(self):
        head = self.advance()
        args = self.io_arguments(allow_address=False)
        end = self.expect(";")
        names = _unique(n for arg in args for n in arg)
        return self._io_nodes(IrKind.OUTPUT, names, (head.line, end.line))

    def _io_nodes(self, kind, names, lines):
        if not names:
            return [_Node(IrKind.INVAR, lines=lines)]
        groups = [(n,) for n in names] if self.opts.split_io else [names]
        if kind == IrKind.INPUT:
            return [_Node(kind, defined=g, lines=lines) for g in groups]
        return [_Node(kind, used=g, lines=lines) for g in groups]

    # --- translation unit ---

    def unit(self):
        """Returns (functions, bare) where functions maps name -> node list."""
        functions: Dict[str, List[_Node]] = {}
        bare: List[_Node] = []
        while self.tok.kind != "EOF":
            if self._at_function_definition():
                name, body = self.function_definition()
                if name in functions:
                    raise FrontendSyntaxError(f"function '{name}' defined twice", line=self.tok.line)
                functions[name] = body
            else:
                bare.extend(self.statement())
        return functions, bare

    def _at_function_definition(self):
        offset = 0
        while self.peek(offset).kind == "IDENT" and self.peek(offset).text in TYPE_KEYWORDS:
            offset += 1
        if offset == 0:
            return False
        name = self.peek(offset)
        after = self.peek(offset + 1)
        return name.kind == "IDENT" and after.kind == "OP" and after.text == "("

    def function_definition(self):
        while self.tok.kind == "IDENT" and self.tok.text in TYPE_KEYWORDS:
            self.advance()
        name = self.expect_ident()
        self.expect("(")
        depth = 0
        while depth > 0 or not self.at(")"):
            token = self.tok
            if token.kind == "EOF":
                raise FrontendSyntaxError("unterminated parameter list", line=name.line)
            if token.kind == "OP" and token.text == "(":
                depth += 1
            elif token.kind == "OP" and token.text == ")":
                depth -= 1
            self.advance()
        self.expect(")")
        if not self.at("{"):
            raise UnsupportedConstructError("function prototypes are not supported", line=self.tok.line)
        return name.text, self.block()


def _with_end(node, end_line):
    return _Node(node.kind, node.defined, node.used, (node.lines[0], max(node.lines[1], end_line)), node.children)


def _flatten(nodes):
    statements = []
    source_map = SourceMap()

    def emit(node):
        index = len(statements)
        length = None if node.children is None else len(node.children)
        statements.append(IrStatement(index, node.kind, node.defined, node.used, length))
        source_map.add(index, *node.lines)
        for child in node.children or ():
            emit(child)

    for node in nodes:
        emit(node)
    return IrProgram(statements), source_map


def translate_unit(source, opts=None):
    """
    Translate every function of a toy-language source.

    Returns:
        Dict mapping function name to (IrProgram, SourceMap). Statements
        outside any function are returned under the key None.
    """
    opts = opts or FrontendOptions()
    functions, bare = _Parser(source, opts).unit()
    if bare and functions:
        raise UnsupportedConstructError("statements outside a function", line=bare[0].lines[0])
    result = {name: _flatten(body) for name, body in functions.items()}
    if not functions:
        result[None] = _flatten(bare)
    return result


def translate(source, opts=None):
    """Translate a toy-language source holding bare statements or one function."""
    units = translate_unit(source, opts)
    if len(units) > 1:
        raise UnsupportedConstructError(f"expected one function, found {len(units)}; use translate_unit")
    return next(iter(units.values()))
