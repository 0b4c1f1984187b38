"""Regular tree grammars and unranked content models compiled to tree automata."""

from .grammar import (
    Alias,
    Production,
    TreeGrammar,
    format_grammar,
    grammar_to_bta,
    load_grammar,
    parse_grammar,
)
from .unranked import (
    EMPTY,
    Alt,
    Element,
    Ref,
    Repeat,
    Seq,
    UnrankedSchema,
    decode_tree,
    encode_forest,
    encode_unranked,
    format_forest,
    load_unranked_schema,
    parse_document,
    parse_unranked_schema,
    schema_to_bta,
)

__all__ = [
    'Alias',
    'Production',
    'TreeGrammar',
    'format_grammar',
    'grammar_to_bta',
    'load_grammar',
    'parse_grammar',
    'EMPTY',
    'Alt',
    'Element',
    'Ref',
    'Repeat',
    'Seq',
    'UnrankedSchema',
    'decode_tree',
    'encode_forest',
    'encode_unranked',
    'format_forest',
    'load_unranked_schema',
    'parse_document',
    'parse_unranked_schema',
    'schema_to_bta'
]
