"""Build the bundled multilingual fixture corpus.

Deterministic (fixed seed): running it twice produces byte-identical
output. The corpus is one document per line, UTF-8, and mixes the material
the splitter has to care about: Latin text with contractions, CJK,
Arabic/Hebrew (RTL), Cyrillic and Greek, emoji with ZWJ/variation
selectors, source-code-looking lines, digit runs in several scripts, and
heavy whitespace (spaces, tabs, NBSP, ideographic space, lone CR - LF is
reserved as the document separator).

The checked-in corpus was produced by:

    python -m peek2.tools.make_fixture_corpus
"""

from __future__ import annotations

import argparse
import pathlib
import random
import sys

SEED = 0x5EED2024
TARGET_BYTES = 1_300_000

LATIN = """the quick brown fox jumps over a lazy dog while seventeen wizards
brew acid jazz quietly mixing vexed nymphs with fjord banks of quartz glyphs
lorem ipsum dolor sit amet consectetur adipiscing elit sed do eiusmod tempor
incididunt ut labore et dolore magna aliqua rhoncus mattis rhoncus urna neque
viverra justo nec ultrices dui sapien eget mi proin""".split()

CONTRACTIONS = ["don't", "can't", "we'll", "you've", "they're", "I'd", "she's",
                "it's", "won't", "COULDN'T", "THEY'RE", "we'VE", "o'clock",
                "'twas", "y'all", "ma'am", "rock'n'roll", "'sup", "'Does",
                "'ſoft", "'ßeta", "isn’t", "don’t", "l'œuf",
                "dell'arte", "c'è"]

CYRILLIC = ("съешь же ещё этих мягких французских булок да выпей чаю "
            "широкая электрификация южных губерний даст мощный толчок "
            "подъёму сельского хозяйства").split()

GREEK = ("ξεσκεπάζω την ψυχοφθόρα βδελυγμία τάχιστη αλώπηξ βαφής ψημένη "
         "γη δρασκελίζει υπέρ νωθρού κυνός").split()

CJK = ("天地玄黄 宇宙洪荒 日月盈昃 辰宿列张 寒来暑往 秋收冬藏 "
       "闰余成岁 律吕调阳 云腾致雨 露结为霜 金生丽水 玉出昆冈 "
       "剑号巨阙 珠称夜光 果珍李柰 菜重芥姜 …です。 ですが、 こんにちは "
       "カタカナ モジレツ 한국어 조선말 テスト 全角　空白").split()

ARABIC = ("نص حكيم له سر قاطع وذو شأن عظيم مكتوب على ثوب أخضر ومغلف بجلد "
          "أزرق اللغة العربية جميلة").split()

HEBREW = "דג סקרן שט בים מאוכזב ולפתע מצא לו חברה איך הקליטה".split()

EMOJI = ["😀", "🚀", "🧪", "❤", "❤️", "👍🏽", "👩‍🔬", "🇺🇳", "🏳️‍🌈", "☃", "✂️"]

CODE = ['if (x != 0) { return "a\\tb"; }',
        "for i in range(10_000): total += weights[i] * x[i]",
        "SELECT count(*) FROM logs WHERE level >= 3 AND msg LIKE '%tok%';",
        "const re = /[A-Za-z0-9_]+/g; let n = s.split(re).length;",
        "printf(\"%d\\t%s\\r\\n\", 42, argv[1]);",
        "x = (a?.b ?? c[d]) ** 2 - f(g, *args, **kwargs)",
        "#!/usr/bin/env bash -- set -euo pipefail; echo \"$HOME\" | tr -d '\\r'"]

DIGITS = ["0", "7", "42", "365", "1234", "98765", "31415926535", "0x1F",
          "3.14159", "1,000,000", "١٢٣٤٥", "٦٧", "१२३४५६", "５６７８９０",
          "ⅣⅩⅢ", "½¾", "〇一二三", "2024-08-01", "12:34:56.789"]

PUNCT_RUNS = ["!!", "?!", "...", "---", "=>", "://", "))", "([{", "}])",
              "<<>>", "#@$%", "***", "§±", "€¥£", "«»", "“”", "„“", "、。",
              "！？", "…—…", "?’", "‽"]

WS_RUNS = [" ", "  ", "   ", "\t", "\t\t", " \t ", " ", "  ",
           "　", "  ", " ", "  \t", "\r", " \r ",
           " ", " "]

BOUNDARY = ["'", "''", "’", "ſ", "ſſ", "K", "ß", "ʼn", "ǅ", "ﬁ", "ﬂ",
            "é", "ñ", "́", " брат'я", "о'кей", "'s", "'S",
            "'ll", "'LL", "'vE", "'re", "'d", "'M", "'t", "'x", "'中", "'7",
            "' '", "12'34", "can'T", "won'ſ"]

# Worked examples that every conformance run must cover.
PINNED_LINES = [
    "Lorem ipsum dolor sit amet.",
    "12345678",
    "'Does it work?’ She asked.",
]


def _make_line(rng: random.Random) -> str:
    style = rng.randrange(10)
    parts: list[str] = []
    n_words = rng.randrange(4, 18)
    for _ in range(n_words):
        r = rng.random()
        if style == 0:          # latin prose with contractions
            pool = CONTRACTIONS if r < 0.25 else LATIN
        elif style == 1:        # cyrillic / greek
            pool = CYRILLIC if r < 0.6 else GREEK
        elif style == 2:        # CJK, thin spacing
            pool = CJK
        elif style == 3:        # RTL
            pool = ARABIC if r < 0.7 else HEBREW
        elif style == 4:        # code-ish
            pool = CODE if r < 0.5 else PUNCT_RUNS
        elif style == 5:        # numbers everywhere
            pool = DIGITS if r < 0.7 else LATIN
        elif style == 6:        # emoji soup
            pool = EMOJI if r < 0.6 else PUNCT_RUNS
        elif style == 7:        # boundary-alphabet stress
            pool = BOUNDARY if r < 0.7 else LATIN
        else:                   # general mix
            pool = rng.choice((LATIN, CONTRACTIONS, CYRILLIC, CJK, ARABIC,
                               DIGITS, PUNCT_RUNS, EMOJI, BOUNDARY))
        parts.append(rng.choice(pool))
        if rng.random() < 0.12:
            parts.append(rng.choice(PUNCT_RUNS))
        parts.append(rng.choice(WS_RUNS) if rng.random() < 0.2 else " ")
    line = "".join(parts).strip("\n")
    if rng.random() < 0.15:
        line = rng.choice(WS_RUNS) + line     # leading whitespace
    if rng.random() < 0.15:
        line = line + rng.choice(WS_RUNS)     # trailing whitespace
    return line


def build_corpus() -> str:
    rng = random.Random(SEED)
    lines = list(PINNED_LINES)
    size = sum(len(line.encode("utf-8")) + 1 for line in lines)
    while size < TARGET_BYTES:
        line = _make_line(rng)
        lines.append(line)
        size += len(line.encode("utf-8")) + 1
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    default_out = pathlib.Path(__file__).resolve().parent.parent / "data" / "fixture_corpus.txt"
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=pathlib.Path, default=default_out)
    args = ap.parse_args(argv)
    corpus = build_corpus()
    args.out.write_bytes(corpus.encode("utf-8"))
    print(f"wrote {args.out} ({len(corpus.encode('utf-8'))} bytes, "
          f"{corpus.count(chr(10))} documents)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
