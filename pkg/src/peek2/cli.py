"""Command-line front end: split, diff, fuzz, encode, train, bench.

Exit status: 0 on success, 1 when a conformance run (diff/fuzz) found
mismatches, 2 on usage or input errors.

Segment output escapes backslash, CR, LF and TAB (\\\\, \\r, \\n, \\t) so
each segment occupies exactly one line and can be recovered losslessly;
whitespace segments are the interesting ones and must stay visible.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext

from . import bench as bench_mod
from . import bpe as bpe_mod
from .core import BACKEND, pretokenize, pretokenize_strings
from .differential import (
    DiffReport,
    FuzzConfig,
    bundled_corpus_path,
    diff_corpus,
    fuzz,
    load_corpus,
)
from .errors import InvalidUtf8, MissingFixture, OracleGap, ParseError, InvalidModel
from .oracle import oracle_split, oracle_split_strings

_ESCAPES = {"\\": "\\\\", "\r": "\\r", "\n": "\\n", "\t": "\\t"}
_UNESCAPES = {"\\": "\\", "r": "\r", "n": "\n", "t": "\t"}


def escape_segment(segment: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in segment)


def unescape_segment(line: str) -> str:
    out = []
    it = iter(line)
    for ch in it:
        if ch != "\\":
            out.append(ch)
            continue
        marker = next(it, None)
        if marker is None or marker not in _UNESCAPES:
            raise ValueError(f"bad escape \\{marker} in segment line")
        out.append(_UNESCAPES[marker])
    return "".join(out)


def _read_input(path: str) -> str:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    try:
        return data.decode("utf-8", errors="strict")
    except UnicodeDecodeError as exc:
        raise InvalidUtf8(str(exc)) from None


def _open_output(path: str):
    if path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8", newline="")


def _cmd_split(args) -> int:
    text = _read_input(args.input)
    with _open_output(args.output) as out:
        if args.offsets:
            split = oracle_split if args.impl == "oracle" else pretokenize
            for start, end in split(text):
                out.write(f"{start}\t{end}\n")
        else:
            strings = (oracle_split_strings if args.impl == "oracle"
                       else pretokenize_strings)
            for segment in strings(text):
                out.write(escape_segment(segment) + "\n")
    return 0


def _finish_conformance(report: DiffReport, args) -> int:
    with _open_output(args.output) as out:
        report.emit(out)
    return 0 if report.ok else 1


def _cmd_diff(args) -> int:
    docs = load_corpus(args.corpus)
    return _finish_conformance(diff_corpus(docs), args)


def _cmd_fuzz(args) -> int:
    config = FuzzConfig(seed=args.seed, case_count=args.cases,
                        max_len=args.max_len)
    return _finish_conformance(fuzz(config), args)


def _cmd_encode(args) -> int:
    model = bpe_mod.load_model(args.vocab, args.merges)
    text = _read_input(args.input)
    split = oracle_split if args.impl == "oracle" else pretokenize
    enc = model.encode(text, with_offsets=args.offsets, pretokenizer=split)
    with _open_output(args.output) as out:
        if args.offsets:
            for token_id, (start, end) in zip(enc.ids, enc.offsets):
                out.write(f"{token_id}\t{start}\t{end}\n")
        else:
            out.write(" ".join(map(str, enc.ids)) + "\n")
    return 0


def _read_docs(path: str) -> list[str]:
    if path != "-":
        return load_corpus(path)
    docs = _read_input("-").split("\n")
    if docs and docs[-1] == "":
        docs.pop()
    return docs


def _cmd_train(args) -> int:
    docs = _read_docs(args.input)
    split = oracle_split if args.impl == "oracle" else pretokenize
    model = bpe_mod.train_bpe(docs, vocab_size=args.vocab_size,
                              min_frequency=args.min_frequency,
                              pretokenizer=split)
    bpe_mod.save_model(model, args.vocab, args.merges)
    print(f"trained {len(model.vocab)} tokens, {len(model.merges)} merges "
          f"-> {args.vocab}, {args.merges}", file=sys.stderr)
    return 0


def _cmd_bench(args) -> int:
    corpus = args.input if args.input != "-" else bundled_corpus_path()
    docs = load_corpus(corpus)
    if args.limit_docs:
        docs = docs[:args.limit_docs]
    names = [t.strip() for t in args.tasks.split(",") if t.strip()]
    backends = ["peek2", "oracle"]
    if args.with_pure:
        backends.append("peek2-pure")
    tasks = bench_mod.default_tasks(corpus=docs, repetitions=args.repetitions,
                                    tasks=names, backends=backends)
    report = bench_mod.run_bench(tasks)
    print(report.to_table())
    if args.output != "-":
        with _open_output(args.output) as out:
            report.emit_jsonl(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="peek2",
        description="Regex-free cl100k-style pretokenizer toolbox "
                    f"(engine: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, offsets=True):
        p.add_argument("--impl", choices=("peek2", "oracle"), default="peek2",
                       help="splitter implementation (default: peek2)")
        p.add_argument("--input", default="-", metavar="PATH|-",
                       help="input file, '-' for stdin (default)")
        p.add_argument("--output", default="-", metavar="PATH|-",
                       help="output file, '-' for stdout (default)")
        if offsets:
            p.add_argument("--offsets", action="store_true",
                           help="emit byte offsets instead of text")

    p = sub.add_parser("split", help="segment text, one segment per line")
    common(p)
    p.set_defaults(fn=_cmd_split)

    p = sub.add_parser("diff", help="diff the splitter against the oracle "
                                    "over a corpus")
    p.add_argument("--corpus", default=bundled_corpus_path(), metavar="PATH",
                   help="one document per line (default: bundled corpus)")
    p.add_argument("--output", default="-", metavar="PATH|-")
    p.set_defaults(fn=_cmd_diff)

    p = sub.add_parser("fuzz", help="seeded random conformance testing")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100_000)
    p.add_argument("--max-len", type=int, default=64)
    p.add_argument("--output", default="-", metavar="PATH|-")
    p.set_defaults(fn=_cmd_fuzz)

    p = sub.add_parser("encode", help="BPE-encode text with a model")
    common(p)
    p.add_argument("--vocab", required=True, metavar="PATH")
    p.add_argument("--merges", required=True, metavar="PATH")
    p.set_defaults(fn=_cmd_encode)

    p = sub.add_parser("train", help="train a BPE model on a corpus")
    common(p, offsets=False)
    p.add_argument("--vocab", required=True, metavar="PATH",
                   help="output path for the vocabulary JSON")
    p.add_argument("--merges", required=True, metavar="PATH",
                   help="output path for the merges file")
    p.add_argument("--vocab-size", type=int, default=512)
    p.add_argument("--min-frequency", type=int, default=2)
    p.set_defaults(fn=_cmd_train)

    p = sub.add_parser("bench", help="run the benchmark task suite")
    p.add_argument("--input", default="-", metavar="PATH|-",
                   help="corpus path (default: bundled corpus)")
    p.add_argument("--output", default="-", metavar="PATH|-",
                   help="also write JSONL records here")
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--tasks", default=",".join(bench_mod.TASK_NAMES))
    p.add_argument("--limit-docs", type=int, default=0,
                   help="use only the first N documents")
    p.add_argument("--with-pure", action="store_true",
                   help="also benchmark the pure-Python engine")
    p.set_defaults(fn=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidUtf8, MissingFixture, ParseError, InvalidModel,
            OracleGap, OSError, ValueError) as exc:
        print(f"peek2: error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
