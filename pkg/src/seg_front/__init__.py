"""seg_front - Toy C-like language frontend emitting segment IR and a source map."""

from .lexer import Token, tokenize
from .source_map import SourceMap, map_range, parse_source_map, read_source_map, write_source_map
from .translate import FrontendOptions, translate, translate_unit

__all__ = [
    "Token",
    "tokenize",
    "SourceMap",
    "map_range",
    "parse_source_map",
    "read_source_map",
    "write_source_map",
    "FrontendOptions",
    "translate",
    "translate_unit",
]
