"""Means-end chain analysis for coded laddering interviews.

Turns a lexicon of attributes, consequences and values plus a set of ladders
into implication matrices, cutoff-pruned hierarchical value maps, scored
attribute-to-value chains and summary tables.
"""

__version__ = "0.1.0"

from .core import (
    Category,
    Corpus,
    CorpusError,
    Element,
    Ladder,
    Lexicon,
    Violation,
    category_rank,
    validate_ladder,
)
from .hvm import (
    Chain,
    Hvm,
    HvmConfig,
    HvmEdge,
    HvmError,
    build_hvm,
    cutoff_sensitivity,
    enumerate_chains,
    path_score,
    reach_score,
    subgraph_score,
)
from .implication import (
    ImplicationMatrix,
    MatrixCell,
    RelationKind,
    RelationPair,
    build_matrix,
    direct_pairs,
    indirect_pairs,
    matrix_row_totals,
    render_cell,
)
from .ingest import (
    ParseDiagnostic,
    ParseError,
    load_corpus,
    parse_ladders,
    parse_lexicon,
    read_corpus_json,
    write_corpus_json,
)
