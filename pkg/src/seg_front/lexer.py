import re
from dataclasses import dataclass

from src.errors import FrontendSyntaxError, UnsupportedConstructError


@dataclass(frozen=True)
class Token:
    kind: str   # IDENT, NUMBER, STRING, CHAR, OP, EOF
    text: str
    line: int


_TOKEN_SPEC = [
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r\f\v]+"),
    ("LINE_COMMENT", r"//[^\n]*"),
    ("BLOCK_COMMENT", r"/\*.*?\*/"),
    ("STRING", r'"(?:\\.|[^"\\\n])*"'),
    ("CHAR", r"'(?:\\.|[^'\\\n])+'"),
    ("NUMBER", r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?[uUlLfF]*|\.\d+(?:[eE][+-]?\d+)?[fF]?"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("OP", r"<<=|>>=|\+\+|--|\+=|-=|\*=|/=|%=|&=|\|=|\^=|==|!=|<=|>=|&&|\|\||<<|>>|->|[-+*/%<>=!&|^~?:;,(){}\[\].]"),
    ("PREPROCESSOR", r"\#"),
    ("MISMATCH", r"."),
]
_MASTER_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC), re.S)


def tokenize(source):
    """Split toy-language source into tokens, tracking 1-based line numbers."""
    tokens = []
    line = 1
    for match in _MASTER_RE.finditer(source):
        kind = match.lastgroup
        text = match.group()
        if kind == "NEWLINE":
            line += 1
            continue
        if kind in ("SKIP", "LINE_COMMENT"):
            continue
        if kind == "BLOCK_COMMENT":
            line += text.count("\n")
            continue
        if kind == "PREPROCESSOR":
            raise UnsupportedConstructError("preprocessor directives are not supported", line=line)
        if kind == "MISMATCH":
            raise FrontendSyntaxError(f"unexpected character {text!r}", line=line)
        tokens.append(Token(kind, text, line))
    tokens.append(Token("EOF", "", line))
    return tokens
