"""Conformance harness: corpus diffing and seeded fuzzing vs the oracle.

Both splitters run over the same inputs and their byte-offset boundary
lists are compared exactly. Any disagreement is shrunk to a minimal
reproducer before it is reported. The bundled multilingual corpus plus a
seeded million-case fuzz run stand in, at desk scale, for exhaustive
corpus compliance testing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Iterable, Sequence

import numpy as np

from .core import pretokenize
from .errors import InvalidUtf8
from .oracle import oracle_split
from .tables import (
    CAT_LETTER,
    CAT_LINEFOLD,
    CAT_NUMBER,
    CAT_OTHER,
    CAT_QUOTE,
    CAT_SPACE,
    CAT_WHITESPACE,
)
from ._pure import _cat

Splitter = Callable[[str], list[tuple[int, int]]]

_EXCERPT_LEN = 80
_GEN_BATCH = 4096  # fixed so a (seed, config) pair always yields the same cases


@dataclass(frozen=True)
class Mismatch:
    """One disagreement between the splitter under test and the oracle."""

    input_index: int
    excerpt: str                      # head of the offending input
    first_divergence: int             # byte offset where boundaries part ways
    peek2_boundaries: tuple[int, ...]
    oracle_boundaries: tuple[int, ...]
    minimized: str                    # shrunk reproducer (still mismatching)

    def to_json(self) -> str:
        return json.dumps({
            "input_index": self.input_index,
            "excerpt": self.excerpt,
            "first_divergence": self.first_divergence,
            "peek2": list(self.peek2_boundaries),
            "oracle": list(self.oracle_boundaries),
            "minimized": self.minimized,
        }, ensure_ascii=True)


@dataclass
class DiffReport:
    inputs_tested: int = 0
    scalars_tested: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    seed: int | None = None
    decode_errors: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        return json.dumps({
            "inputs_tested": self.inputs_tested,
            "scalars_tested": self.scalars_tested,
            "mismatches": len(self.mismatches),
            "decode_errors": self.decode_errors,
            "seed": self.seed,
        })

    def emit(self, stream) -> None:
        """Line-delimited mismatch records followed by a summary footer."""
        for m in self.mismatches:
            stream.write(m.to_json() + "\n")
        stream.write(self.summary() + "\n")


@dataclass(frozen=True)
class FuzzConfig:
    """Seeded random-string generation parameters.

    ``category_weights`` has eight entries: one per scalar category
    (other, space, quote, CR/LF, letter, whitespace, number) plus the
    boundary alphabet of known-awkward scalars (quotes, fold oddities like
    U+017F, exotic whitespace, combining marks, Nl/No numerals).
    """

    seed: int = 0
    case_count: int = 100_000
    max_len: int = 64
    category_weights: tuple[float, ...] = (1.5, 1.5, 2.0, 1.5, 3.0, 1.5, 1.5, 2.5)

    def __post_init__(self):
        if len(self.category_weights) != 8:
            raise ValueError("category_weights needs 8 entries")
        if any(w < 0 for w in self.category_weights):
            raise ValueError("weights must be non-negative")
        if not any(w > 0 for w in self.category_weights):
            raise ValueError("at least one weight must be positive")
        if self.max_len < 1 or self.case_count < 0:
            raise ValueError("max_len must be >= 1 and case_count >= 0")


_BOUNDARY_ALPHABET = (
    0x0027, 0x2019, 0x017F, 0x212A, 0x00A0, 0x2028, 0x2029, 0x3000,
    0x000B, 0x000C,
    0x0300, 0x0301, 0x0483, 0x20D0,            # combining marks
    0x2160, 0x2162, 0x3007, 0x00BD, 0x00B2, 0x10E60,  # Nl / No numerals
)

_POOL_CANDIDATES: dict[int, tuple[int, ...]] = {
    CAT_OTHER: tuple(map(ord, "!?.,;:_@#$%&*()[]{}<>\"`~^+=|/\\-")) + (
        0x2019, 0x201C, 0x201D, 0x00A1, 0x060C, 0x061F, 0x3001, 0x3002,
        0xFF01, 0x2014, 0x2026, 0x1F600, 0x1F4A9, 0x2764, 0x200D, 0xFE0F,
        0x0301, 0x0300, 0x200E, 0x0378, 0xE000, 0x0000, 0x0007, 0x001B,
        0x001C, 0x00AD, 0x20D0,
    ),
    CAT_SPACE: (0x20,),
    CAT_QUOTE: (0x27,),
    CAT_LINEFOLD: (0x0D, 0x0A),
    CAT_LETTER: tuple(map(ord, "abelrsdmtvZQLxyon")) + (
        0x00E9, 0x00DF, 0x017F, 0x212A, 0x0130, 0x0131, 0x4E2D, 0x65E5,
        0x3042, 0x30A2, 0x05D0, 0x0645, 0x042F, 0x0391, 0x10400, 0xFB01,
        0x01C8,
    ),
    CAT_WHITESPACE: (0x09, 0x0B, 0x0C, 0x85, 0xA0, 0x1680, 0x2000, 0x2003,
                     0x2009, 0x200A, 0x2028, 0x2029, 0x202F, 0x205F, 0x3000),
    CAT_NUMBER: tuple(map(ord, "0179")) + (
        0x0663, 0x09E9, 0xFF10, 0x2160, 0x2162, 0x00BD, 0x00B2, 0x3007,
        0x10E60, 0x1D7CE,
    ),
}


def _build_pools() -> list[np.ndarray]:
    pools = []
    for cat in range(7):
        members = _POOL_CANDIDATES[cat]
        offenders = [cp for cp in members if _cat(cp) != cat]
        if offenders:  # guards the pools against Unicode-version drift
            raise RuntimeError(
                f"fuzz pool {cat} has misclassified scalars: "
                + ", ".join(f"U+{cp:04X}" for cp in offenders))
        pools.append(np.asarray(members, dtype=np.uint32))
    pools.append(np.asarray(_BOUNDARY_ALPHABET, dtype=np.uint32))
    return pools


_POOLS = _build_pools()


def boundaries(segments: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """Collapse [start, end) pairs into the cut-point list they induce."""
    return tuple(e for _, e in segments)


def _first_divergence(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    for x, y in zip(a, b):
        if x != y:
            return min(x, y)
    shorter = min(len(a), len(b))
    rest = a[shorter:] + b[shorter:]
    return rest[0] if rest else 0


def _mismatching(text: str, splitter: Splitter) -> bool:
    try:
        return boundaries(splitter(text)) != boundaries(oracle_split(text))
    except InvalidUtf8:
        return False


def shrink(text: str, splitter: Splitter = pretokenize) -> str:
    """Reduce a mismatching input to a minimal one by range bisection.

    Repeatedly deletes scalar chunks (halving chunk size down to single
    scalars) while the mismatch persists. The result is 1-minimal: no
    single scalar can be removed without losing the disagreement.
    """
    if not _mismatching(text, splitter):
        return text
    scalars = list(text)
    size = max(1, len(scalars) // 2)
    while size >= 1:
        start = 0
        while start < len(scalars):
            candidate = scalars[:start] + scalars[start + size:]
            if candidate and _mismatching("".join(candidate), splitter):
                scalars = candidate  # candidate is shorter; retry same start
            else:
                start += size
        size //= 2
    changed = True  # fixpoint on single deletions => 1-minimal result
    while changed:
        changed = False
        for k in range(len(scalars)):
            candidate = scalars[:k] + scalars[k + 1:]
            if candidate and _mismatching("".join(candidate), splitter):
                scalars = candidate
                changed = True
                break
    return "".join(scalars)


def _diff_one(report: DiffReport, index: int, text: str,
              splitter: Splitter, minimize: bool) -> None:
    got = boundaries(splitter(text))
    want = boundaries(oracle_split(text))
    report.inputs_tested += 1
    report.scalars_tested += len(text)
    if got == want:
        return
    minimized = shrink(text, splitter) if minimize else text
    report.mismatches.append(Mismatch(
        input_index=index,
        excerpt=text[:_EXCERPT_LEN],
        first_divergence=_first_divergence(got, want),
        peek2_boundaries=got,
        oracle_boundaries=want,
        minimized=minimized,
    ))


def diff_corpus(corpus: Iterable[str | bytes], splitter: Splitter = pretokenize,
                minimize: bool = True) -> DiffReport:
    """Diff every document against the oracle; mismatches are collected,
    undecodable documents are counted but not fatal."""
    report = DiffReport()
    for index, doc in enumerate(corpus):
        if isinstance(doc, bytes):
            try:
                doc = doc.decode("utf-8", errors="strict")
            except UnicodeDecodeError:
                report.decode_errors += 1
                continue
        _diff_one(report, index, doc, splitter, minimize)
    report.mismatches.sort(key=lambda m: m.input_index)
    return report


def _generate_batch(rng: np.random.Generator, count: int,
                    config: FuzzConfig) -> list[str]:
    weights = np.asarray(config.category_weights, dtype=np.float64)
    weights = weights / weights.sum()
    lengths = rng.integers(0, config.max_len + 1, size=count)
    total = int(lengths.sum())
    cats = rng.choice(8, size=total, p=weights)
    cps = np.empty(total, dtype=np.uint32)
    for cat in range(8):
        mask = cats == cat
        k = int(mask.sum())
        if k:
            pool = _POOLS[cat]
            cps[mask] = pool[rng.integers(0, len(pool), size=k)]
    blob = cps.astype("<u4").tobytes().decode("utf-32-le")
    out = []
    pos = 0
    for n in lengths:
        out.append(blob[pos:pos + n])
        pos += n
    return out


def fuzz(config: FuzzConfig, splitter: Splitter = pretokenize,
         progress: Callable[[int], None] | None = None) -> DiffReport:
    """Run ``config.case_count`` seeded random cases through both
    splitters. Deterministic: the same (seed, config) generates the same
    cases and therefore the same report."""
    report = DiffReport(seed=config.seed)
    rng = np.random.Generator(np.random.PCG64(config.seed))
    remaining = config.case_count
    index = 0
    while remaining > 0:
        batch = _generate_batch(rng, min(_GEN_BATCH, remaining), config)
        for text in batch:
            _diff_one(report, index, text, splitter, minimize=True)
            index += 1
        remaining -= len(batch)
        if progress is not None:
            progress(index)
    return report


def bundled_corpus_path() -> str:
    """Filesystem path of the packaged multilingual fixture corpus."""
    return str(resources.files("peek2").joinpath("data/fixture_corpus.txt"))


def load_corpus(path) -> list[str]:
    """Read a one-document-per-line corpus.

    Reads bytes and splits on LF only: documents may legitimately contain
    lone CR scalars, which text-mode newline translation would destroy.
    """
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("utf-8", errors="strict")
    except UnicodeDecodeError as exc:
        raise InvalidUtf8(str(exc)) from None
    docs = text.split("\n")
    if docs and docs[-1] == "":
        docs.pop()
    return docs
