import pytest

from peek2.bpe import train_bpe
from peek2.differential import bundled_corpus_path, load_corpus


@pytest.fixture(scope="session")
def corpus_docs():
    return load_corpus(bundled_corpus_path())


@pytest.fixture(scope="session")
def small_docs(corpus_docs):
    return corpus_docs[:600]


@pytest.fixture(scope="session")
def trained_model(small_docs):
    return train_bpe(small_docs, vocab_size=350, min_frequency=2)


# Strings exercising every branch and the known awkward scalars; shared by
# several suites.
TRICKY_STRINGS = [
    "",
    "a",
    " ",
    "'",
    "\n",
    "\r\n",
    "7",
    "\t",
    "Lorem ipsum dolor sit amet.",
    "12345678",
    "'Does it work?’ She asked.",
    "'ll 've 're 'S 'D 'M 'T",
    "'quick brown",
    "'ſhe 'ße won'ſ",
    "  \n  \nX",
    "   word",
    " 7",
    "a\n  ",
    "x \n y\n",
    "!!\r\n\nnext",
    "\tword ",
    "١٢٣٤",
    "中文测试 abc",
    "' s '' ''ll",
    "é́! ábc",
    "\r\r\n\n mixed \t\t",
    " 　  ",
    "KKK kelvin",
    "12'34 can'T",
    "\U0001F600\U0001F600 emoji‍️ soup",
    "〇ⅠⅢ ½²",
    "tab\tsep\tvals\r",
]
