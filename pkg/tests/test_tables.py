"""The decision table itself and the lookup around it."""

import pytest

from peek2.tables import (
    B_CONTRACTION,
    B_NUMBER,
    B_PUNCT,
    B_WHITESPACE,
    B_WORD,
    DECISION_TABLE,
    EOS,
    decide_branch,
    mutate_table,
)

# The full 7x7 block, frozen: any edit here must be justified by the
# derivation suite in test_acceptance, which re-derives every cell from
# the oracle.
EXPECTED_CELLS = [
    [3, 3, 3, 3, 1, 3, 3],
    [3, 4, 3, 4, 1, 4, 4],
    [3, 3, 3, 3, 0, 3, 3],
    [4, 4, 4, 4, 4, 4, 4],
    [1, 1, 1, 1, 1, 1, 1],
    [4, 4, 4, 4, 1, 4, 4],
    [2, 2, 2, 2, 2, 2, 2],
]

# End-of-input column: lone punct/quote close as punctuation, lone
# space/CR/LF/whitespace as whitespace, a lone letter as a word, a lone
# digit as a number.
EXPECTED_EOS = [3, 4, 3, 4, 1, 4, 2]


def test_table_cells_frozen():
    for cat0 in range(7):
        for cat1 in range(7):
            assert decide_branch(cat0, cat1) == EXPECTED_CELLS[cat0][cat1], \
                (cat0, cat1)


def test_eos_column():
    for cat0 in range(7):
        assert decide_branch(cat0, EOS) == EXPECTED_EOS[cat0], cat0


def test_row_constants():
    assert all(decide_branch(4, c) == B_WORD for c in range(8))
    assert all(decide_branch(6, c) == B_NUMBER for c in range(8))
    assert all(decide_branch(3, c) == B_WHITESPACE for c in range(8))


def test_contraction_cell_is_unique():
    cells = [(c0, c1) for c0 in range(7) for c1 in range(8)
             if decide_branch(c0, c1) == B_CONTRACTION]
    assert cells == [(2, 4)]


def test_spec_value_examples():
    assert decide_branch(2, 4) == B_CONTRACTION
    assert decide_branch(1, 4) == B_WORD
    assert decide_branch(6, EOS) == B_NUMBER
    assert decide_branch(0, 0) == B_PUNCT


def test_decide_branch_validates():
    with pytest.raises(ValueError):
        decide_branch(7, 0)
    with pytest.raises(ValueError):
        decide_branch(-1, 0)
    with pytest.raises(ValueError):
        decide_branch(0, 8)


def test_mutate_table():
    mutated = mutate_table(DECISION_TABLE, 1, 4, B_WHITESPACE)
    assert mutated != DECISION_TABLE
    assert mutated[1 * 8 + 4] == B_WHITESPACE
    assert len(mutated) == 56
    # original untouched
    assert DECISION_TABLE[1 * 8 + 4] == B_WORD
    with pytest.raises(ValueError):
        mutate_table(DECISION_TABLE, 0, 0, 9)
