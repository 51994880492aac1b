"""peek2: a regex-free cl100k-style pretokenizer for byte-level BPE.

Splits text in one forward pass by peeking at the next two scalars and
dispatching through a 7x8 decision table, producing byte-for-byte the same
segmentation as the original regex pattern (which ships here too, as the
conformance oracle). Includes differential/fuzz testing, a minimal
byte-level BPE encoder/trainer, and a benchmark harness.
"""

from .bench import BenchReport, BenchTask, default_tasks, run_bench
from .bpe import (
    BpeModel,
    Encoding,
    byte_alphabet_model,
    load_model,
    save_model,
    train_bpe,
)
from .core import (
    BACKEND,
    available_splitters,
    branch0_contraction,
    branch1_word,
    branch2_number,
    branch3_punct,
    branch4_whitespace,
    decide_branch,
    peek_categorize,
    pretokenize,
    pretokenize_offsets,
    pretokenize_strings,
)
from .differential import (
    DiffReport,
    FuzzConfig,
    Mismatch,
    bundled_corpus_path,
    diff_corpus,
    fuzz,
    load_corpus,
)
from .errors import (
    ClockError,
    InvalidModel,
    InvalidUtf8,
    MissingFixture,
    OracleGap,
    ParseError,
)
from .oracle import (
    ORACLE_PATTERN_TEXT,
    OraclePattern,
    oracle_split,
    oracle_split_strings,
)
from .tables import DECISION_TABLE, EOS
from .uniprops import (
    UNICODE_VERSION,
    ScalarClassTables,
    is_letter,
    is_number,
    is_whitespace,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BenchReport",
    "BenchTask",
    "BpeModel",
    "ClockError",
    "DECISION_TABLE",
    "DiffReport",
    "EOS",
    "Encoding",
    "FuzzConfig",
    "InvalidModel",
    "InvalidUtf8",
    "Mismatch",
    "MissingFixture",
    "ORACLE_PATTERN_TEXT",
    "OracleGap",
    "OraclePattern",
    "ParseError",
    "ScalarClassTables",
    "UNICODE_VERSION",
    "available_splitters",
    "branch0_contraction",
    "branch1_word",
    "branch2_number",
    "branch3_punct",
    "branch4_whitespace",
    "bundled_corpus_path",
    "byte_alphabet_model",
    "decide_branch",
    "default_tasks",
    "diff_corpus",
    "fuzz",
    "is_letter",
    "is_number",
    "is_whitespace",
    "load_corpus",
    "load_model",
    "oracle_split",
    "oracle_split_strings",
    "peek_categorize",
    "pretokenize",
    "pretokenize_offsets",
    "pretokenize_strings",
    "run_bench",
    "save_model",
    "train_bpe",
]
