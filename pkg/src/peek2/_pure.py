"""Pure-Python segmentation engine.

One forward pass over the scalars of the input: classify the scalar under
the cursor and the next one, look the pair up in the decision table, run
the selected branch routine, emit the segment, move the cursor to its end.
The compiled kernel in ``_speedups`` implements exactly the same behavior;
this module is the readable reference and the fallback when the extension
is not built.

Internal helpers work in scalar (str) indices; the public entry points
report segments as byte offsets into the UTF-8 encoding of the input.
"""

from __future__ import annotations

from array import array

from .errors import InvalidUtf8
from .tables import (
    CAT_LETTER,
    CAT_LINEFOLD,
    CAT_NUMBER,
    CAT_OTHER,
    CAT_QUOTE,
    CAT_SPACE,
    CAT_WHITESPACE,
    DECISION_TABLE,
    EOS,
)
from .uniprops import CONTRACTION_FOLD, _check_scalar
from .uniprops import _in_ranges as _in
from .uniprops import (
    _LETTER_ENDS,
    _LETTER_STARTS,
    _NUMBER_ENDS,
    _NUMBER_STARTS,
    _WS_ENDS,
    _WS_STARTS,
)

COMPILED = False

_SPACE = 0x20
_QUOTE = 0x27
_CR = 0x0D
_LF = 0x0A

# Category of each ASCII scalar, so the common case skips the range tables.
_ASCII_CAT = bytearray(128)
for _c in range(128):
    if _c == _SPACE:
        _ASCII_CAT[_c] = CAT_SPACE
    elif _c == _QUOTE:
        _ASCII_CAT[_c] = CAT_QUOTE
    elif _c in (_CR, _LF):
        _ASCII_CAT[_c] = CAT_LINEFOLD
    elif 0x41 <= _c <= 0x5A or 0x61 <= _c <= 0x7A:
        _ASCII_CAT[_c] = CAT_LETTER
    elif _c in (0x09, 0x0B, 0x0C):
        _ASCII_CAT[_c] = CAT_WHITESPACE
    elif 0x30 <= _c <= 0x39:
        _ASCII_CAT[_c] = CAT_NUMBER
_ASCII_CAT = bytes(_ASCII_CAT)
del _c


def _cat(cp: int) -> int:
    if cp < 128:
        return _ASCII_CAT[cp]
    if _in(cp, _LETTER_STARTS, _LETTER_ENDS):
        return CAT_LETTER
    if _in(cp, _WS_STARTS, _WS_ENDS):
        return CAT_WHITESPACE
    if _in(cp, _NUMBER_STARTS, _NUMBER_ENDS):
        return CAT_NUMBER
    return CAT_OTHER


def peek_categorize(scalar: int) -> int:
    """Classify one Unicode scalar value into its peek category.

    Precedence: space, single quote, CR/LF, Letter, White_Space, Number,
    then 0 for everything else.
    """
    _check_scalar(scalar)
    return _cat(scalar)


def _is_letter(cp: int) -> bool:
    if cp < 128:
        return _ASCII_CAT[cp] == CAT_LETTER
    return _in(cp, _LETTER_STARTS, _LETTER_ENDS)


def _is_number(cp: int) -> bool:
    if cp < 128:
        return _ASCII_CAT[cp] == CAT_NUMBER
    return _in(cp, _NUMBER_STARTS, _NUMBER_ENDS)


def _is_ws(cp: int) -> bool:
    # True for the full White_Space property, including space and CR/LF.
    if cp < 128:
        return cp == _SPACE or 0x09 <= cp <= 0x0D
    return _in(cp, _WS_STARTS, _WS_ENDS)


# --- branch routines (scalar indices in, scalar end index out) ---

def _word_end(text: str, i: int, n: int) -> int:
    # A single non-letter scalar under the cursor is absorbed into the
    # word; the decision table only routes here when a letter follows it.
    if not _is_letter(ord(text[i])):
        i += 1
    while i < n and _is_letter(ord(text[i])):
        i += 1
    return i


def _contraction_end(text: str, i: int, n: int) -> int:
    # Cursor is the quote and a letter follows. Single-letter endings win
    # over two-letter ones; on no match the quote is handed to the word
    # branch as its absorbed scalar.
    if i + 1 >= n:  # unreachable via the default table; injected tables only
        return _word_end(text, i, n)
    f1 = CONTRACTION_FOLD.get(ord(text[i + 1]))
    if f1 in ("s", "d", "m", "t"):
        return i + 2
    if f1 is not None and i + 2 < n:
        f2 = CONTRACTION_FOLD.get(ord(text[i + 2]))
        if (f1 + f2 if f2 else "") in ("ll", "ve", "re"):
            return i + 3
    return _word_end(text, i, n)


def _number_end(text: str, i: int, n: int) -> int:
    j = i + 1
    stop = min(n, i + 3)
    while j < stop and _is_number(ord(text[j])):
        j += 1
    return j


def _punct_end(text: str, i: int, n: int) -> int:
    start = i
    if text[i] == " ":
        i += 1
    while i < n:
        cp = ord(text[i])
        if _is_ws(cp) or _is_letter(cp) or _is_number(cp):
            break
        i += 1
    while i < n and ord(text[i]) in (_CR, _LF):
        i += 1
    # The default table guarantees at least one scalar is consumed; keep
    # injected tables from stalling the cursor.
    return i if i > start else start + 1


def _whitespace_end(text: str, i: int, n: int) -> int:
    j = i
    last_fold = -1
    while j < n:
        cp = ord(text[j])
        if not _is_ws(cp):
            break
        if cp in (_CR, _LF):
            last_fold = j
        j += 1
    if j == n:
        return j            # run reaches end of input: take it all
    if last_fold >= 0:
        return last_fold + 1  # break after the last line fold in the run
    if j - i >= 2:
        return j - 1        # leave the final scalar for the next segment
    return i + 1            # lone whitespace scalar


_BRANCH_ENDS = (
    _contraction_end,
    _word_end,
    _number_end,
    _punct_end,
    _whitespace_end,
)


def _utf8_len(fragment: str) -> int:
    try:
        return len(fragment.encode("utf-8"))
    except UnicodeEncodeError as exc:
        raise InvalidUtf8(f"lone surrogate in input: {exc}") from None


def split(text: str, table: bytes = DECISION_TABLE,
          char_offsets: bool = False) -> list[tuple[int, int]]:
    """Segment ``text``, returning [start, end) offset pairs.

    Offsets are byte positions in the UTF-8 encoding of ``text`` unless
    ``char_offsets`` is set. ``table`` may override the branch decision
    table (a 56-byte string; testing hook).
    """
    if len(table) != 56:
        raise ValueError("decision table must have 7*8 cells")
    if char_offsets:
        _utf8_len(text)  # byte mode validates per segment; do it upfront here
    out: list[tuple[int, int]] = []
    n = len(text)
    i = 0
    pos = 0
    while i < n:
        cat0 = _cat(ord(text[i]))
        cat1 = _cat(ord(text[i + 1])) if i + 1 < n else EOS
        j = _BRANCH_ENDS[table[cat0 * 8 + cat1]](text, i, n)
        end = j if char_offsets else pos + _utf8_len(text[i:j])
        out.append((pos, end))
        pos = end
        i = j
    return out


def split_array(text: str, table: bytes = DECISION_TABLE,
                char_offsets: bool = False):
    """``split`` with the offsets packed into an (N, 2) int64 array."""
    import numpy as np

    flat = array("q")
    for pair in split(text, table, char_offsets):
        flat.extend(pair)
    return np.frombuffer(flat, dtype=np.int64).reshape(-1, 2).copy() \
        if flat else np.empty((0, 2), dtype=np.int64)
