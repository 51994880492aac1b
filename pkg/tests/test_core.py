"""The segmentation engine: categories, branches, the main loop, and
compiled/pure parity."""

import concurrent.futures
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from peek2 import core
from peek2._pure import split as pure_split
from peek2.errors import InvalidUtf8
from peek2.tables import DECISION_TABLE, EOS

from conftest import TRICKY_STRINGS


def segments_text(text, spans):
    data = text.encode("utf-8")
    return [data[a:b].decode("utf-8") for a, b in spans]


# --- peek_categorize ---

@pytest.mark.parametrize("char,cat", [
    (" ", 1), ("'", 2), ("\r", 3), ("\n", 3), ("a", 4), ("Z", 4),
    ("中", 4), ("é", 4), ("\t", 5), (" ", 5), ("　", 5),
    ("7", 6), ("٣", 6), ("!", 0), ("’", 0), ("_", 0), ("\x00", 0),
    ("́", 0), ("\U0001F600", 0),
])
def test_peek_categorize(char, cat):
    assert core.peek_categorize(ord(char)) == cat


def test_peek_categorize_rejects_invalid():
    with pytest.raises(ValueError):
        core.peek_categorize(0xD800)
    with pytest.raises(ValueError):
        core.peek_categorize(0x110000)


def test_categorize_parity_compiled_vs_pure():
    if core.BACKEND != "compiled":
        pytest.skip("compiled kernel unavailable")
    from peek2 import _pure, _speedups

    rng = random.Random(7)
    samples = [rng.randrange(0, 0xD800) for _ in range(4000)]
    samples += [rng.randrange(0xE000, 0x110000) for _ in range(4000)]
    samples += list(range(0, 256))
    for cp in samples:
        assert _speedups.categorize(cp) == _pure._cat(cp), hex(cp)


# --- branch routines (byte-offset segments) ---

def test_branch0_examples():
    s = "'Does it work?"
    assert core.branch0_contraction(s, 0) == (0, 2)          # 'D
    assert core.branch0_contraction("'ll", 0) == (0, 3)
    assert core.branch0_contraction("'quick", 0) == (0, 6)   # fallback
    assert core.branch0_contraction("'ſhe", 0) == (0, 3)  # 'ſ is 3 bytes
    with pytest.raises(ValueError):
        core.branch0_contraction("x'll", 0)


def test_branch1_examples():
    assert core.branch1_word(" ipsum dolor", 0) == (0, 6)
    assert core.branch1_word("a", 0) == (0, 1)
    assert core.branch1_word("\tword ", 0) == (0, 5)
    # cursor mid-string: " ipsum" starts at byte 5 of "Lorem ipsum"
    assert core.branch1_word("Lorem ipsum", 5) == (5, 11)
    with pytest.raises(ValueError):
        core.branch1_word("7seven", 0)  # numbers are never absorbed
    with pytest.raises(ValueError):
        core.branch1_word("\nword", 0)  # line folds are never absorbed


def test_branch2_examples():
    assert core.branch2_number("12345678", 0) == (0, 3)
    assert core.branch2_number("5", 0) == (0, 1)
    arabic = "١٢٣٤"
    assert core.branch2_number(arabic, 0) == (0, 6)  # three 2-byte digits
    with pytest.raises(ValueError):
        core.branch2_number("x1", 0)


def test_branch3_examples():
    assert core.branch3_punct("?’ She", 0) == (0, 4)   # ?’
    assert core.branch3_punct(".", 0) == (0, 1)
    assert core.branch3_punct("!!\r\n\nnext", 0) == (0, 5)  # folds right-snap
    assert core.branch3_punct(" ?x", 0) == (0, 2)           # leading space
    with pytest.raises(ValueError):
        core.branch3_punct(" a", 0)


def test_branch4_examples():
    assert core.branch4_whitespace("  \n  \nX", 0) == (0, 6)
    assert core.branch4_whitespace("   word", 0) == (0, 2)
    assert core.branch4_whitespace(" 7", 0) == (0, 1)
    assert core.branch4_whitespace("\t", 0) == (0, 1)
    with pytest.raises(ValueError):
        core.branch4_whitespace("x ", 0)


# --- pretokenize ---

def test_worked_examples():
    assert segments_text(
        "Lorem ipsum dolor sit amet.",
        core.pretokenize("Lorem ipsum dolor sit amet.")) == [
        "Lorem", " ipsum", " dolor", " sit", " amet", "."]
    assert core.pretokenize_strings("12345678") == ["123", "456", "78"]
    assert core.pretokenize_strings("'Does it work?’ She asked.") == [
        "'D", "oes", " it", " work", "?’", " She", " asked", "."]


def test_empty_and_trivial():
    assert core.pretokenize("") == []
    assert core.pretokenize_strings("") == []
    assert core.pretokenize("a b") == [(0, 1), (1, 3)]
    assert core.pretokenize_strings("a b") == ["a", " b"]


def test_bytes_input():
    data = "中文 abc".encode("utf-8")
    spans = core.pretokenize(data)
    assert spans[0] == (0, 6)
    assert b"".join(data[a:b] for a, b in spans) == data


def test_invalid_utf8_bytes_rejected():
    with pytest.raises(InvalidUtf8):
        core.pretokenize(b"abc\xff\xfe")
    with pytest.raises(InvalidUtf8):
        core.pretokenize_strings(b"\x80\x80")


def test_lone_surrogate_rejected():
    for bad in ("a\ud800b", "\udfff", "ok \ud9ab"):
        with pytest.raises(InvalidUtf8):
            core.pretokenize(bad)
        with pytest.raises(InvalidUtf8):
            core.pretokenize_strings(bad)
        with pytest.raises(InvalidUtf8):
            core.pure_pretokenize(bad)


def tiling_ok(text, spans):
    if not text:
        return spans == []
    nbytes = len(text.encode("utf-8"))
    if spans[0][0] != 0 or spans[-1][1] != nbytes:
        return False
    return all(a < b for a, b in spans) and \
        all(spans[k][1] == spans[k + 1][0] for k in range(len(spans) - 1))


@pytest.mark.parametrize("text", TRICKY_STRINGS)
def test_tiling_on_tricky_strings(text):
    assert tiling_ok(text, core.pretokenize(text))
    joined = "".join(core.pretokenize_strings(text))
    assert joined == text


@settings(max_examples=300, deadline=None)
@given(st.text(max_size=80))
def test_tiling_property(text):
    spans = core.pretokenize(text)
    assert tiling_ok(text, spans)
    assert "".join(core.pretokenize_strings(text)) == text


@settings(max_examples=300, deadline=None)
@given(st.text(max_size=80))
def test_pure_equals_compiled_property(text):
    assert pure_split(text) == core.pretokenize(text)
    assert pure_split(text, DECISION_TABLE, True) == \
        core._kernel(text, DECISION_TABLE, True)


def test_determinism_across_threads():
    texts = [t for t in TRICKY_STRINGS if t] * 4
    expected = [core.pretokenize(t) for t in texts]
    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        for _ in range(3):
            got = list(pool.map(core.pretokenize, texts))
            assert got == expected


class _CountingStr(str):
    """Counts integer index reads; used to bound scalar reads per pass."""

    def __new__(cls, value):
        obj = super().__new__(cls, value)
        obj.reads = 0
        return obj

    def __getitem__(self, key):
        if isinstance(key, int):
            self.reads += 1
        return str.__getitem__(self, key)


@pytest.mark.parametrize("text", [
    "Lorem ipsum dolor sit amet. 12345678 'Does it work?’",
    "'" * 500,
    "1" * 500,
    " a" * 250,
    "\n\n  \n word\t\t\t." * 40,
])
def test_bounded_scalar_reads(text):
    counted = _CountingStr(text)
    pure_split(counted)
    n = len(text)
    # two-scalar peek plus branch consumption rereads each scalar a small
    # constant number of times
    assert counted.reads <= 6 * n + 8, (counted.reads, n)


def test_cursor_strictly_monotonic():
    spans = core.pretokenize("".join(TRICKY_STRINGS))
    assert all(a < b for a, b in spans)
    assert all(spans[k][1] == spans[k + 1][0] for k in range(len(spans) - 1))


def test_eos_constant_reexported():
    assert core.EOS == EOS == 7


@pytest.mark.parametrize("text", TRICKY_STRINGS)
def test_offsets_array_matches_tuple_api(text):
    arr = core.pretokenize_offsets(text)
    assert arr.shape[1] == 2 and arr.dtype.name == "int64"
    assert arr.tolist() == [list(p) for p in core.pretokenize(text)]


def test_offsets_array_pure_parity():
    from peek2 import _pure

    for text in TRICKY_STRINGS:
        got = _pure.split_array(text)
        want = core.pretokenize_offsets(text)
        assert got.tolist() == want.tolist()


def test_offsets_array_rejects_surrogates():
    with pytest.raises(InvalidUtf8):
        core.pretokenize_offsets("a\ud800b")
