"""Scalar categories, branch ids and the branch decision table.

The splitter classifies each scalar into one of seven categories, then the
pair (category of the scalar under the cursor, category of the next scalar)
indexes a 7x8 table that names the branch routine handling the next
segment. Column 7 is the end-of-input sentinel used when there is no next
scalar.
"""

from __future__ import annotations

# Scalar categories.
CAT_OTHER = 0        # anything not matched below (punctuation, symbols, ...)
CAT_SPACE = 1        # U+0020 only
CAT_QUOTE = 2        # U+0027 only
CAT_LINEFOLD = 3     # CR or LF
CAT_LETTER = 4       # Unicode general category L*
CAT_WHITESPACE = 5   # White_Space property, minus the space/CR/LF above
CAT_NUMBER = 6       # Unicode general category N*
EOS = 7              # sentinel column: no next scalar

# Branch ids.
B_CONTRACTION = 0
B_WORD = 1
B_NUMBER = 2
B_PUNCT = 3
B_WHITESPACE = 4

BRANCH_NAMES = ("contraction", "word", "number", "punct", "whitespace")

# cells[cat0 * 8 + cat1] -> branch id. One row per first-scalar category,
# columns 0..6 for the second-scalar category plus column 7 for end of
# input. A quote followed by a letter is the only route into the
# contraction branch; letters always open a word, numbers a number group,
# CR/LF a whitespace run.
DECISION_TABLE = bytes((
    #  0  1  2  3  4  5  6  EOS
    3, 3, 3, 3, 1, 3, 3, 3,   # cat0 = other
    3, 4, 3, 4, 1, 4, 4, 4,   # cat0 = space
    3, 3, 3, 3, 0, 3, 3, 3,   # cat0 = quote
    4, 4, 4, 4, 4, 4, 4, 4,   # cat0 = CR/LF
    1, 1, 1, 1, 1, 1, 1, 1,   # cat0 = letter
    4, 4, 4, 4, 1, 4, 4, 4,   # cat0 = whitespace
    2, 2, 2, 2, 2, 2, 2, 2,   # cat0 = number
))


def decide_branch(cat0: int, cat1: int, table: bytes = DECISION_TABLE) -> int:
    """Look up the branch for a (first category, second category) pair.

    ``cat1`` may be ``EOS``; ``cat0`` may not (there is always a scalar
    under the cursor while input remains).
    """
    if not 0 <= cat0 <= 6:
        raise ValueError(f"cat0 out of range: {cat0}")
    if not 0 <= cat1 <= 7:
        raise ValueError(f"cat1 out of range: {cat1}")
    return table[cat0 * 8 + cat1]


def mutate_table(table: bytes, cat0: int, cat1: int, branch: int) -> bytes:
    """Return a copy of ``table`` with one cell replaced (testing hook)."""
    if not 0 <= branch <= 4:
        raise ValueError(f"branch out of range: {branch}")
    cells = bytearray(table)
    cells[cat0 * 8 + cat1] = branch
    return bytes(cells)
