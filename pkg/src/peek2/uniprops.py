"""Unicode scalar property lookups backing the splitter and the oracle.

Everything here answers point queries against the generated range tables
in ``_uni_tables`` (see ``peek2.tools.gen_unicode_tables``): is a scalar a
Letter (L*), a Number (N*), or White_Space, plus the case folds needed by
the contraction branch. The tables are immutable module-level data, safe
to share across threads.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field

from . import _uni_tables

UNICODE_VERSION = _uni_tables.UNICODE_VERSION

_LETTER_STARTS = tuple(lo for lo, _ in _uni_tables.LETTER_RANGES)
_LETTER_ENDS = tuple(hi for _, hi in _uni_tables.LETTER_RANGES)
_NUMBER_STARTS = tuple(lo for lo, _ in _uni_tables.NUMBER_RANGES)
_NUMBER_ENDS = tuple(hi for _, hi in _uni_tables.NUMBER_RANGES)
_WS_STARTS = tuple(lo for lo, _ in _uni_tables.WHITESPACE_RANGES)
_WS_ENDS = tuple(hi for _, hi in _uni_tables.WHITESPACE_RANGES)

CONTRACTION_FOLD = dict(_uni_tables.CONTRACTION_FOLDS)


def _check_scalar(scalar: int) -> None:
    if not 0 <= scalar <= 0x10FFFF or 0xD800 <= scalar <= 0xDFFF:
        raise ValueError(f"not a Unicode scalar value: {scalar:#x}")


def _in_ranges(scalar: int, starts, ends) -> bool:
    i = bisect_right(starts, scalar) - 1
    return i >= 0 and scalar <= ends[i]


def is_letter(scalar: int) -> bool:
    """True iff the scalar's general category is Lu/Ll/Lt/Lm/Lo."""
    _check_scalar(scalar)
    return _in_ranges(scalar, _LETTER_STARTS, _LETTER_ENDS)


def is_number(scalar: int) -> bool:
    """True iff the scalar's general category is Nd/Nl/No."""
    _check_scalar(scalar)
    return _in_ranges(scalar, _NUMBER_STARTS, _NUMBER_ENDS)


def is_whitespace(scalar: int) -> bool:
    """True iff the scalar has the Unicode White_Space property."""
    _check_scalar(scalar)
    return _in_ranges(scalar, _WS_STARTS, _WS_ENDS)


def contraction_fold(scalar: int) -> str | None:
    """Case-fold a scalar onto a contraction letter (s/d/m/t/l/v/r/e).

    Returns the folded ASCII letter, or None when the scalar does not fold
    onto one. Mirrors the simple case folding the oracle engine applies to
    its case-insensitive contraction group.
    """
    return CONTRACTION_FOLD.get(scalar)


@dataclass(frozen=True)
class ScalarClassTables:
    """The classification tables as one immutable value object."""

    letter_ranges: tuple[tuple[int, int], ...] = _uni_tables.LETTER_RANGES
    number_ranges: tuple[tuple[int, int], ...] = _uni_tables.NUMBER_RANGES
    whitespace_set: frozenset[int] = field(
        default_factory=lambda: frozenset(
            cp
            for lo, hi in _uni_tables.WHITESPACE_RANGES
            for cp in range(lo, hi + 1)
        )
    )
    unicode_version: str = UNICODE_VERSION


DEFAULT_TABLES = ScalarClassTables()
