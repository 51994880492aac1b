"""Throughput harness: the tokenizer task suite over selectable backends.

Five tasks (pretokenize-only, encode, encode-offsets, encode-batch, train)
run against the table-driven splitter and the regex oracle (plus the pure
Python engine, to quantify what the compiled kernel buys). Each task is
timed over >= 3 repetitions after a warmup, on a monotonic clock; the
report carries mean/stderr/throughput per task x backend and the
peek2/oracle throughput ratio per task, recomputed from the raw samples.

Absolute numbers are hardware-bound; the ratios are the part meant to
travel.
"""

from __future__ import annotations

import json
import os
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import bpe
from .core import available_splitters
from .differential import bundled_corpus_path, load_corpus
from .errors import ClockError, MissingFixture
from .oracle import oracle_split

TASK_NAMES = ("pretokenize-only", "encode", "encode-offsets", "encode-batch",
              "train")
DEFAULT_TRAIN_VOCAB = 384


def splitter_backends() -> dict[str, Callable]:
    backends = dict(available_splitters())
    backends["oracle"] = oracle_split
    return backends


@dataclass(frozen=True)
class BenchTask:
    name: str
    backend: str
    corpus: str | Sequence[str] | None = None  # path, documents, or bundled
    repetitions: int = 5
    vocab_size: int = DEFAULT_TRAIN_VOCAB
    max_workers: int | None = None

    def __post_init__(self):
        if self.name not in TASK_NAMES:
            raise ValueError(f"unknown task {self.name!r}")
        if self.backend not in splitter_backends():
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.repetitions < 3:
            raise ValueError("repetitions must be >= 3 for a standard error")


@dataclass
class BenchRow:
    task: str
    backend: str
    input_bytes: int
    samples_ms: list[float]
    threads: int

    @property
    def mean_ms(self) -> float:
        return statistics.fmean(self.samples_ms)

    @property
    def stderr_ms(self) -> float:
        return statistics.stdev(self.samples_ms) / len(self.samples_ms) ** 0.5

    @property
    def throughput_mb_s(self) -> float:
        return self.input_bytes / (self.mean_ms / 1e3) / 1e6

    def to_json(self) -> str:
        return json.dumps({
            "task": self.task,
            "backend": self.backend,
            "input_bytes": self.input_bytes,
            "mean_ms": self.mean_ms,
            "stderr_ms": self.stderr_ms,
            "throughput_mb_s": self.throughput_mb_s,
            "samples_ms": self.samples_ms,
            "threads": self.threads,
        })


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def ratios(self) -> dict[str, float]:
        """peek2-over-oracle throughput ratio per task (>1 = peek2 faster)."""
        by_key = {(r.task, r.backend): r for r in self.rows}
        out = {}
        for task in TASK_NAMES:
            fast = by_key.get((task, "peek2"))
            base = by_key.get((task, "oracle"))
            if fast and base:
                out[task] = base.mean_ms / fast.mean_ms
        return out

    def to_table(self) -> str:
        header = (f"{'Task':<18} {'Backend':<14} {'Throughput':>12} "
                  f"{'Time':>12} {'Std Error':>12}")
        units = (f"{'':<18} {'':<14} {'(MB/s)':>12} {'(ms)':>12} {'(ms)':>12}")
        lines = [header, units, "-" * len(header)]
        for r in self.rows:
            lines.append(f"{r.task:<18} {r.backend:<14} "
                         f"{r.throughput_mb_s:>12.3f} {r.mean_ms:>12.3f} "
                         f"{r.stderr_ms:>12.3f}")
        ratios = self.ratios()
        if ratios:
            lines.append("-" * len(header))
            for task, ratio in ratios.items():
                lines.append(f"{task:<18} peek2/oracle   {ratio:>12.3f}x")
        return "\n".join(lines)

    def emit_jsonl(self, stream) -> None:
        for r in self.rows:
            stream.write(r.to_json() + "\n")
        stream.write(json.dumps({"ratios": self.ratios()}) + "\n")


def _resolve_corpus(ref) -> list[str]:
    if ref is None:
        ref = bundled_corpus_path()
    if isinstance(ref, (str, os.PathLike)):
        if not os.path.exists(ref):
            raise MissingFixture(f"corpus not found: {ref}")
        docs = load_corpus(ref)
    else:
        docs = list(ref)
    if not docs or sum(len(d) for d in docs) == 0:
        raise MissingFixture("corpus is empty")
    return docs


def _time_once(fn: Callable[[], object]) -> float:
    t0 = time.perf_counter()
    fn()
    t1 = time.perf_counter()
    elapsed = t1 - t0
    if elapsed < 0:
        raise ClockError(f"negative duration {elapsed!r}")
    return elapsed * 1e3


def _task_callable(task: BenchTask, docs: list[str],
                   model: bpe.BpeModel) -> Callable[[], object]:
    split = splitter_backends()[task.backend]
    if task.name == "pretokenize-only":
        def run():
            for doc in docs:
                split(doc)
    elif task.name == "encode":
        def run():
            for doc in docs:
                model.encode(doc, with_offsets=False, pretokenizer=split)
    elif task.name == "encode-offsets":
        def run():
            for doc in docs:
                model.encode(doc, with_offsets=True, pretokenizer=split)
    elif task.name == "encode-batch":
        def run():
            model.encode_batch(docs, with_offsets=False, pretokenizer=split,
                               max_workers=task.max_workers)
    else:  # train
        def run():
            bpe.train_bpe(docs, vocab_size=task.vocab_size,
                          pretokenizer=split,
                          max_workers=task.max_workers or 1)
    return run


def run_bench(tasks: Sequence[BenchTask],
              model: bpe.BpeModel | None = None,
              warmup: int = 1) -> BenchReport:
    """Execute tasks in the given order and collect a report.

    One shared model is trained from the first task's corpus when none is
    supplied (encode tasks need one).
    """
    report = BenchReport()
    for task in tasks:
        docs = _resolve_corpus(task.corpus)
        if model is None and any(t.name.startswith("encode") for t in tasks):
            model = bpe.train_bpe(docs[:2000], vocab_size=DEFAULT_TRAIN_VOCAB,
                                  min_frequency=2)
        task_model = model if model is not None else bpe.byte_alphabet_model()
        run = _task_callable(task, docs, task_model)
        for _ in range(warmup):
            run()
        samples = [_time_once(run) for _ in range(task.repetitions)]
        if task.name == "encode-batch":
            threads = task.max_workers or (os.cpu_count() or 1)
        else:
            threads = task.max_workers or 1
        report.rows.append(BenchRow(
            task=task.name,
            backend=task.backend,
            input_bytes=sum(len(d.encode("utf-8")) for d in docs),
            samples_ms=samples,
            threads=threads,
        ))
    return report


def default_tasks(corpus=None, repetitions: int = 5,
                  tasks: Sequence[str] = TASK_NAMES,
                  backends: Sequence[str] = ("peek2", "oracle")) -> list[BenchTask]:
    return [BenchTask(name=name, backend=backend, corpus=corpus,
                      repetitions=repetitions)
            for name in tasks for backend in backends]
