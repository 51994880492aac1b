"""The reference splitter: pattern identity, worked splits, gap handling."""

import pytest
import regex

from peek2 import oracle
from peek2.errors import InvalidUtf8, OracleGap
from peek2.uniprops import UNICODE_VERSION

from conftest import TRICKY_STRINGS

# Written out independently of the module constant so an accidental edit
# to either copy fails loudly.
EXPECTED_PATTERN = (
    "'(?i:[sdmt]|ll|ve|re)|[^\\r\\n\\p{L}\\p{N}]?+\\p{L}++|\\p{N}{1,3}+|"
    " ?[^\\s\\p{L}\\p{N}]++[\\r\\n]*+|\\s++$|\\s*[\\r\\n]|\\s+(?!\\S)|\\s"
)


def test_pattern_text_byte_identical():
    assert oracle.ORACLE_PATTERN_TEXT == EXPECTED_PATTERN
    assert oracle.OraclePattern().pattern_text == EXPECTED_PATTERN


def test_pattern_compiles_and_is_pinned():
    p = oracle.OraclePattern()
    assert p.compiled() is not None
    assert p.unicode_version == UNICODE_VERSION
    assert p.engine_name.startswith("regex ")


def test_worked_examples():
    assert oracle.oracle_split_strings("Lorem ipsum dolor sit amet.") == [
        "Lorem", " ipsum", " dolor", " sit", " amet", "."]
    assert oracle.oracle_split_strings("12345678") == ["123", "456", "78"]
    assert oracle.oracle_split("") == []


def test_byte_offsets_multibyte():
    spans = oracle.oracle_split("中文 ab")
    assert spans == [(0, 6), (6, 9)]
    chars = oracle.oracle_split("中文 ab", char_offsets=True)
    assert chars == [(0, 2), (2, 5)]


@pytest.mark.parametrize("text", TRICKY_STRINGS)
def test_tiling(text):
    spans = oracle.oracle_split(text)
    nbytes = len(text.encode("utf-8"))
    if not text:
        assert spans == []
        return
    assert spans[0][0] == 0 and spans[-1][1] == nbytes
    assert all(a < b for a, b in spans)
    assert all(spans[k][1] == spans[k + 1][0] for k in range(len(spans) - 1))


def test_invalid_input():
    with pytest.raises(InvalidUtf8):
        oracle.oracle_split(b"\xc3")
    with pytest.raises(InvalidUtf8):
        oracle.oracle_split("a\ud800")
    with pytest.raises(InvalidUtf8):
        oracle.oracle_split("\ud800" * 3, char_offsets=True)


def test_gap_detection(monkeypatch):
    # A pattern that cannot match everywhere must abort, not skip bytes.
    monkeypatch.setattr(oracle, "_PATTERN", regex.compile(r"a+"))
    with pytest.raises(OracleGap):
        oracle.oracle_split("aaab")
    with pytest.raises(OracleGap):
        oracle.oracle_split("baaa")


def test_first_match_branch():
    assert oracle.first_match_branch("") is None
    assert oracle.first_match_branch("'ll x") == (0, 3)
    assert oracle.first_match_branch(" word") == (1, 5)
    assert oracle.first_match_branch("123456") == (2, 3)
    assert oracle.first_match_branch("?!a") == (3, 2)
    assert oracle.first_match_branch("  x") == (4, 1)
    assert oracle.first_match_branch("  ") == (4, 2)
    assert oracle.first_match_branch("'quick") == (1, 6)  # fallback route


@pytest.mark.parametrize("text", [t for t in TRICKY_STRINGS if t])
def test_branch_pattern_segments_agree_with_plain_pattern(text):
    # The named-group variant must not change what matches.
    pos = 0
    spans = oracle.oracle_split(text, char_offsets=True)
    for a, b in spans:
        branch, end = oracle.first_match_branch(text[pos:])
        assert end == b - a, (text, pos)
        pos = b
