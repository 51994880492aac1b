"""Public splitter API with compiled/pure backend selection.

The hot segmentation loop lives in the optional ``_speedups`` extension;
when it is missing (no compiler at install time) the pure-Python engine
takes over with identical behavior. ``BACKEND`` names what was picked.

Segments are byte offsets into the UTF-8 encoding of the input, emitted in
one forward pass; consecutive segments tile the input exactly.
"""

from __future__ import annotations

from typing import Callable

from . import _pure
from .errors import InvalidUtf8
from .tables import DECISION_TABLE, EOS, decide_branch  # noqa: F401  (re-export)

try:
    from . import _speedups

    _kernel = _speedups.split
    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    _speedups = None
    _kernel = _pure.split
    BACKEND = "pure"

peek_categorize = _pure.peek_categorize

Segment = tuple[int, int]


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8", errors="strict")
        except UnicodeDecodeError as exc:
            raise InvalidUtf8(str(exc)) from None
    return data


def pretokenize(text: str | bytes, table: bytes | None = None) -> list[Segment]:
    """Split text into pretoken segments, one forward pass, no regex.

    Returns [start, end) byte-offset pairs that tile the UTF-8 input.
    ``bytes`` input must be well-formed UTF-8; ``str`` input must not
    contain lone surrogates (InvalidUtf8 otherwise). ``table`` overrides
    the branch decision table (testing hook).
    """
    s = _as_text(text)
    if table is None:
        return _kernel(s)
    return _kernel(s, table)


def pretokenize_strings(text: str | bytes, table: bytes | None = None) -> list[str]:
    """Split text into pretoken substrings; their concatenation == input."""
    s = _as_text(text)
    spans = _kernel(s, table or DECISION_TABLE, True)
    return [s[a:b] for a, b in spans]


def pretokenize_offsets(text: str | bytes, table: bytes | None = None):
    """``pretokenize`` with the segments packed into an (N, 2) int64 array.

    Same contract, but no per-segment Python objects are built; prefer
    this for offset-heavy pipelines and throughput measurements.
    """
    if _speedups is not None:
        fn = _speedups.split_array
    else:  # pragma: no cover - depends on build environment
        fn = _pure.split_array
    return fn(_as_text(text), table if table is not None else DECISION_TABLE)


def pure_pretokenize(text: str | bytes, table: bytes | None = None) -> list[Segment]:
    """``pretokenize`` forced onto the pure-Python engine."""
    return _pure.split(_as_text(text), table or DECISION_TABLE)


def available_splitters() -> dict[str, Callable[[str], list[Segment]]]:
    """Named splitter backends usable for benchmarking and diffing."""
    out: dict[str, Callable[[str], list[Segment]]] = {"peek2": pretokenize,
                                                      "peek2-pure": pure_pretokenize}
    if _speedups is not None:
        out["peek2-compiled"] = lambda text: _speedups.split(_as_text(text))
    return out


# --- the branch routines, exposed for direct testing/inspection ---
#
# Each takes the text and a cursor given in scalar (str) index and returns
# the segment as a byte-offset pair, exactly as the main loop would emit
# it. Preconditions match what the decision table guarantees when it
# routes to the branch; violations raise ValueError.

def _byte_span(text: str, i: int, j: int) -> Segment:
    start = _pure._utf8_len(text[:i])
    return (start, start + _pure._utf8_len(text[i:j]))


def branch0_contraction(text: str, cursor: int = 0) -> Segment:
    """Quote + contraction ending, or fall back to the word branch."""
    if text[cursor] != "'" or cursor + 1 >= len(text) \
            or not _pure._is_letter(ord(text[cursor + 1])):
        raise ValueError("contraction branch needs a quote followed by a letter")
    return _byte_span(text, cursor, _pure._contraction_end(text, cursor, len(text)))


def branch1_word(text: str, cursor: int = 0) -> Segment:
    """Maximal letter run, absorbing one preceding non-letter scalar."""
    cp = ord(text[cursor])
    if not _pure._is_letter(cp):
        nxt = ord(text[cursor + 1]) if cursor + 1 < len(text) else None
        if _pure._is_number(cp) or cp in (0x0D, 0x0A) or nxt is None \
                or not _pure._is_letter(nxt):
            raise ValueError("word branch needs a letter at or right after the cursor")
    return _byte_span(text, cursor, _pure._word_end(text, cursor, len(text)))


def branch2_number(text: str, cursor: int = 0) -> Segment:
    """Up to three scalars of a number run; nothing is absorbed."""
    if not _pure._is_number(ord(text[cursor])):
        raise ValueError("number branch needs a number at the cursor")
    return _byte_span(text, cursor, _pure._number_end(text, cursor, len(text)))


def branch3_punct(text: str, cursor: int = 0) -> Segment:
    """Optional leading space, a run of non-space/letter/number scalars,
    then any trailing CR/LF scalars."""
    i = cursor + 1 if text[cursor] == " " else cursor
    if i >= len(text):
        raise ValueError("punct branch needs a non-space/letter/number scalar")
    cp = ord(text[i])
    if _pure._is_ws(cp) or _pure._is_letter(cp) or _pure._is_number(cp):
        raise ValueError("punct branch needs a non-space/letter/number scalar")
    return _byte_span(text, cursor, _pure._punct_end(text, cursor, len(text)))


def branch4_whitespace(text: str, cursor: int = 0) -> Segment:
    """Whitespace run with the three break rules (end of input, last line
    fold, leave-one-behind)."""
    if not _pure._is_ws(ord(text[cursor])):
        raise ValueError("whitespace branch needs a White_Space scalar")
    return _byte_span(text, cursor, _pure._whitespace_end(text, cursor, len(text)))
