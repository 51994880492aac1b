"""Minimal byte-level BPE: encode, batch encode, train, load/save.

Merging operates on raw bytes within pretokenizer segments - segments
never merge across their boundaries, which is what makes batch encoding
and training embarrassingly parallel. On disk the vocabulary uses the
usual visible-character convention for bytes (JSON map token -> id, plus a
"left right" merges text file, rank = line order) so published tokenizer
files can be ingested.

No merge-skip caching, no normalizers, no special tokens: this is the
plain reference path, sized for desk-scale corpora and benchmarks.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core import pretokenize
from .errors import InvalidModel, InvalidUtf8, ParseError

Pretokenizer = Callable[[str], list[tuple[int, int]]]


def _bytes_to_printable() -> dict[int, str]:
    # Bytes that print as themselves; the rest borrow scalars above 0xFF.
    keep = (list(range(0x21, 0x7F)) + list(range(0xA1, 0xAD))
            + list(range(0xAE, 0x100)))
    mapping = {b: chr(b) for b in keep}
    bump = 0
    for b in range(256):
        if b not in mapping:
            mapping[b] = chr(0x100 + bump)
            bump += 1
    return mapping


_B2P = _bytes_to_printable()
_P2B = {c: b for b, c in _B2P.items()}


def token_to_printable(token: bytes) -> str:
    return "".join(_B2P[b] for b in token)


def printable_to_token(text: str) -> bytes:
    try:
        return bytes(_P2B[c] for c in text)
    except KeyError as exc:
        raise ParseError(f"character {exc} is not in the byte alphabet") from None


@dataclass
class Encoding:
    """Token ids plus, optionally, per-token byte spans into the input."""

    ids: list[int]
    offsets: list[tuple[int, int]] | None = None


@dataclass
class BpeModel:
    vocab: dict[bytes, int]
    merges: list[tuple[bytes, bytes]]
    ranks: dict[tuple[bytes, bytes], int] = field(init=False, repr=False)
    id_to_token: list[bytes] = field(init=False, repr=False)

    def __post_init__(self):
        self.validate()
        self.ranks = {pair: rank for rank, pair in enumerate(self.merges)}
        self.id_to_token = [b""] * len(self.vocab)
        for token, token_id in self.vocab.items():
            self.id_to_token[token_id] = token

    def validate(self) -> None:
        ids = sorted(self.vocab.values())
        if ids != list(range(len(self.vocab))):
            dup = next((i for i, j in zip(ids, ids[1:]) if i == j), None)
            if dup is not None:
                raise InvalidModel(f"duplicate token id {dup}")
            raise InvalidModel("token ids are not dense 0..N-1")
        for b in range(256):
            if bytes([b]) not in self.vocab:
                raise InvalidModel(f"single byte 0x{b:02X} missing from vocab")
        for left, right in self.merges:
            if left not in self.vocab:
                raise InvalidModel(f"merge operand {left!r} not in vocab")
            if right not in self.vocab:
                raise InvalidModel(f"merge operand {right!r} not in vocab")
            if left + right not in self.vocab:
                raise InvalidModel(f"merge result {(left + right)!r} not in vocab")

    # --- encoding ---

    def _merge_segment(self, seg: bytes) -> list[bytes]:
        parts = [seg[k:k + 1] for k in range(len(seg))]
        ranks = self.ranks
        while len(parts) > 1:
            best_rank = None
            best_at = -1
            for k in range(len(parts) - 1):
                r = ranks.get((parts[k], parts[k + 1]))
                if r is not None and (best_rank is None or r < best_rank):
                    best_rank = r
                    best_at = k
            if best_rank is None:
                break
            parts[best_at:best_at + 2] = [parts[best_at] + parts[best_at + 1]]
        return parts

    def encode(self, text: str | bytes, with_offsets: bool = True,
               pretokenizer: Pretokenizer | None = None) -> Encoding:
        """Encode one document: pretokenize, then merge within segments."""
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8", errors="strict")
            except UnicodeDecodeError as exc:
                raise InvalidUtf8(str(exc)) from None
        split = pretokenizer or pretokenize
        try:
            data = text.encode("utf-8")
        except UnicodeEncodeError as exc:
            raise InvalidUtf8(f"lone surrogate in input: {exc}") from None
        ids: list[int] = []
        offsets: list[tuple[int, int]] | None = [] if with_offsets else None
        vocab = self.vocab
        for start, end in split(text):
            pos = start
            for part in self._merge_segment(data[start:end]):
                ids.append(vocab[part])
                if offsets is not None:
                    offsets.append((pos, pos + len(part)))
                    pos += len(part)
        return Encoding(ids=ids, offsets=offsets)

    def encode_batch(self, documents: Sequence[str | bytes],
                     with_offsets: bool = True,
                     pretokenizer: Pretokenizer | None = None,
                     max_workers: int | None = None) -> list[Encoding]:
        """Encode documents concurrently; output order == input order."""
        def one(item: tuple[int, str | bytes]) -> Encoding:
            index, doc = item
            try:
                return self.encode(doc, with_offsets, pretokenizer)
            except InvalidUtf8 as exc:
                raise InvalidUtf8(f"document {index}: {exc}") from None

        if not documents:
            return []
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(one, enumerate(documents)))

    def decode(self, ids: Iterable[int]) -> bytes:
        return b"".join(self.id_to_token[i] for i in ids)


# --- persistence ---

def save_model(model: BpeModel, vocab_path, merges_path) -> None:
    vocab_json = {token_to_printable(t): i for t, i in model.vocab.items()}
    with open(vocab_path, "w", encoding="utf-8") as fh:
        json.dump(vocab_json, fh, ensure_ascii=False, indent=0)
        fh.write("\n")
    with open(merges_path, "w", encoding="utf-8") as fh:
        for left, right in model.merges:
            fh.write(f"{token_to_printable(left)} {token_to_printable(right)}\n")


def load_model(vocab_path, merges_path) -> BpeModel:
    """Load and validate a model from vocab JSON + merges text files."""
    try:
        with open(vocab_path, encoding="utf-8") as fh:
            vocab_json = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"vocab file: {exc}") from None
    if not isinstance(vocab_json, dict):
        raise ParseError("vocab file must hold a JSON object")
    vocab: dict[bytes, int] = {}
    for printable, token_id in vocab_json.items():
        if not isinstance(token_id, int) or token_id < 0:
            raise ParseError(f"bad id for token {printable!r}: {token_id!r}")
        vocab[printable_to_token(printable)] = token_id

    merges: list[tuple[bytes, bytes]] = []
    with open(merges_path, encoding="utf-8", newline="") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line or line.startswith("#"):
                continue  # tolerate the "#version:" header convention
            fields = line.split(" ")
            if len(fields) != 2:
                raise ParseError(f"merges line {lineno}: expected 'left right'")
            merges.append((printable_to_token(fields[0]),
                           printable_to_token(fields[1])))
    return BpeModel(vocab=vocab, merges=merges)


def byte_alphabet_model() -> BpeModel:
    """The trivial model: 256 single-byte tokens, no merges."""
    return BpeModel(vocab={bytes([b]): b for b in range(256)}, merges=[])


# --- training ---

def _count_segments(documents: Sequence[str], split: Pretokenizer,
                    max_workers: int) -> dict[bytes, int]:
    """Segment-multiset counts. Chunking is fixed-size, so the reduction
    order (and therefore the result) does not depend on max_workers."""
    chunk_size = 256

    def count_chunk(chunk: Sequence[str]) -> dict[bytes, int]:
        counts: dict[bytes, int] = {}
        for doc in chunk:
            data = doc.encode("utf-8")
            for start, end in split(doc):
                seg = data[start:end]
                counts[seg] = counts.get(seg, 0) + 1
        return counts

    chunks = [documents[i:i + chunk_size]
              for i in range(0, len(documents), chunk_size)]
    if max_workers <= 1 or len(chunks) <= 1:
        partials = [count_chunk(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            partials = list(pool.map(count_chunk, chunks))
    total: dict[bytes, int] = {}
    for partial in partials:
        for seg, n in partial.items():
            total[seg] = total.get(seg, 0) + n
    return total


def train_bpe(corpus: Sequence[str | bytes], vocab_size: int,
              min_frequency: int = 2,
              pretokenizer: Pretokenizer | None = None,
              max_workers: int = 1) -> BpeModel:
    """Learn merges: repeatedly fuse the most frequent adjacent token pair.

    Ties break on the lexicographically smaller left token bytes, then the
    smaller right token bytes, which makes training bit-deterministic (and
    independent of max_workers, which only parallelizes counting).
    Stops at ``vocab_size`` tokens or when the best pair drops below
    ``min_frequency``.
    """
    if vocab_size < 256:
        raise ValueError("vocab_size must be at least 256")
    if not corpus:
        raise ValueError("corpus must not be empty")
    split = pretokenizer or pretokenize
    docs: list[str] = []
    for index, doc in enumerate(corpus):
        try:
            if isinstance(doc, bytes):
                doc = doc.decode("utf-8", errors="strict")
            else:
                doc.encode("utf-8")  # reject lone surrogates up front
        except (UnicodeDecodeError, UnicodeEncodeError) as exc:
            raise InvalidUtf8(f"document {index}: {exc}") from None
        docs.append(doc)

    seg_counts = _count_segments(docs, split, max_workers)
    words: list[list[bytes]] = []
    freqs: list[int] = []
    for seg, freq in seg_counts.items():
        words.append([seg[k:k + 1] for k in range(len(seg))])
        freqs.append(freq)

    pair_counts: dict[tuple[bytes, bytes], int] = {}
    pair_where: dict[tuple[bytes, bytes], set[int]] = {}
    for wi, word in enumerate(words):
        f = freqs[wi]
        for pair in zip(word, word[1:]):
            pair_counts[pair] = pair_counts.get(pair, 0) + f
            pair_where.setdefault(pair, set()).add(wi)

    vocab: dict[bytes, int] = {bytes([b]): b for b in range(256)}
    merges: list[tuple[bytes, bytes]] = []

    while len(vocab) < vocab_size and pair_counts:
        best_pair, best_count = min(
            pair_counts.items(), key=lambda kv: (-kv[1], kv[0][0], kv[0][1]))
        if best_count < min_frequency:
            break
        left, right = best_pair
        merged = left + right
        merges.append(best_pair)
        if merged not in vocab:
            vocab[merged] = len(vocab)

        for wi in sorted(pair_where.get(best_pair, ())):
            word = words[wi]
            f = freqs[wi]
            for pair in zip(word, word[1:]):
                remaining = pair_counts[pair] - f
                if remaining:
                    pair_counts[pair] = remaining
                else:
                    del pair_counts[pair]
                    pair_where.pop(pair, None)
            new_word: list[bytes] = []
            k = 0
            while k < len(word):
                if (k + 1 < len(word) and word[k] == left
                        and word[k + 1] == right):
                    new_word.append(merged)
                    k += 2
                else:
                    new_word.append(word[k])
                    k += 1
            words[wi] = new_word
            for pair in zip(new_word, new_word[1:]):
                pair_counts[pair] = pair_counts.get(pair, 0) + f
                pair_where.setdefault(pair, set()).add(wi)

    return BpeModel(vocab=vocab, merges=merges)
