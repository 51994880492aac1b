"""Reference splitter: repeated leftmost matching of the original pattern.

This is the ground truth the table-driven splitter is tested against. The
pattern is applied with the ``regex`` engine (possessive quantifiers,
negative lookahead and ``$`` are all needed; the stdlib ``re`` cannot run
it verbatim). It is deliberately allowed to be slow - it is the baseline
in every benchmark.

The engine's bundled Unicode database defines what ``\\p{L}``, ``\\p{N}``
and ``\\s`` mean here; the generated tables in ``_uni_tables`` are
extracted from the same engine so both splitters share one Unicode
version.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

import regex

from .errors import InvalidUtf8, OracleGap
from .uniprops import UNICODE_VERSION

# The split pattern, verbatim. Alternatives, leftmost first:
#   contraction endings, optionally-prefixed words, 1-3 digit number
#   groups, space-prefixed punctuation runs with trailing line folds, and
#   four whitespace rules.
ORACLE_PATTERN_TEXT = (
    r"'(?i:[sdmt]|ll|ve|re)"
    r"|[^\r\n\p{L}\p{N}]?+\p{L}++"
    r"|\p{N}{1,3}+"
    r"| ?[^\s\p{L}\p{N}]++[\r\n]*+"
    r"|\s++$"
    r"|\s*[\r\n]"
    r"|\s+(?!\S)"
    r"|\s"
)

_PATTERN = regex.compile(ORACLE_PATTERN_TEXT)

# Same pattern with one named group per alternative, used to attribute a
# match to the branch that produced it. The wrapper groups do not change
# what matches.
_BRANCH_PATTERN = regex.compile(
    r"(?P<b0>'(?i:[sdmt]|ll|ve|re))"
    r"|(?P<b1>[^\r\n\p{L}\p{N}]?+\p{L}++)"
    r"|(?P<b2>\p{N}{1,3}+)"
    r"|(?P<b3> ?[^\s\p{L}\p{N}]++[\r\n]*+)"
    r"|(?P<b4a>\s++$)"
    r"|(?P<b4b>\s*[\r\n])"
    r"|(?P<b4c>\s+(?!\S))"
    r"|(?P<b4d>\s)"
)

_GROUP_TO_BRANCH = {"b0": 0, "b1": 1, "b2": 2, "b3": 3,
                    "b4a": 4, "b4b": 4, "b4c": 4, "b4d": 4}


@dataclass(frozen=True)
class OraclePattern:
    """Identity of the reference splitter: pattern, engine, Unicode pin."""

    pattern_text: str = ORACLE_PATTERN_TEXT
    engine_name: str = f"regex {regex.__version__}"
    unicode_version: str = UNICODE_VERSION

    def compiled(self):
        return regex.compile(self.pattern_text)


def _validated(text: str | bytes) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8", errors="strict")
        except UnicodeDecodeError as exc:
            raise InvalidUtf8(str(exc)) from None
    return text


def _char_spans(text: str) -> list[tuple[int, int]]:
    spans: list[tuple[int, int]] = []
    pos = 0
    for m in _PATTERN.finditer(text):
        s, e = m.span()
        if s != pos:
            raise OracleGap(f"no alternative matched at scalar offset {pos}")
        spans.append((s, e))
        pos = e
    if pos != len(text):
        raise OracleGap(f"no alternative matched at scalar offset {pos}")
    return spans


def _to_byte_spans(text: str, spans: list[tuple[int, int]]) -> list[tuple[int, int]]:
    if text.isascii():
        return spans
    try:
        raw = text.encode("utf-32-le")
    except UnicodeEncodeError as exc:
        raise InvalidUtf8(f"lone surrogate in input: {exc}") from None
    if len(text) >= 256:
        import numpy as np

        cp = np.frombuffer(raw, dtype="<u4")
        widths = np.ones(len(cp), dtype=np.int64)
        widths += cp >= 0x80
        widths += cp >= 0x800
        widths += cp >= 0x10000
        cum = np.zeros(len(text) + 1, dtype=np.int64)
        np.cumsum(widths, out=cum[1:])
        return [(int(cum[s]), int(cum[e])) for s, e in spans]
    cum = [0] + list(accumulate(
        1 + (cp >= 0x80) + (cp >= 0x800) + (cp >= 0x10000)
        for cp in map(ord, text)))
    return [(cum[s], cum[e]) for s, e in spans]


def oracle_split(text: str | bytes, char_offsets: bool = False) -> list[tuple[int, int]]:
    """Segment text with the reference pattern; offsets are UTF-8 bytes.

    Raises OracleGap if any position fails to match (an engine-dialect
    problem; never silently skips input).
    """
    s = _validated(text)
    spans = _char_spans(s)
    if char_offsets:
        if not s.isascii():
            _to_byte_spans(s, [])  # surrogate validation only
        return spans
    return _to_byte_spans(s, spans)


def oracle_split_strings(text: str | bytes) -> list[str]:
    """Segment text with the reference pattern, returning the substrings."""
    s = _validated(text)
    return [s[a:b] for a, b in oracle_split(s, char_offsets=True)]


def first_match_branch(text: str) -> tuple[int, int] | None:
    """Branch id and end offset (in scalars) of the first oracle match.

    Returns None on empty input. Used to cross-check the decision table
    cell by cell.
    """
    if not text:
        return None
    m = _BRANCH_PATTERN.match(text)
    if m is None:
        raise OracleGap("no alternative matched at scalar offset 0")
    return _GROUP_TO_BRANCH[m.lastgroup], m.end()
