"""Corpus ingestion, tokenization and sentence segmentation.

Instances are (question, perspective, stance, split) records stored as
JSON-lines. Tokenization and segmentation are deterministic and rule-based so
that every downstream artifact is reproducible from the corpus file alone.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CorpusError

STANCES = ("pro", "con")
SPLITS = ("train", "dev", "test")

CORPUS_FIELDS = ("id", "topic", "question", "perspective", "stance", "split")

# Word tokens keep internal apostrophes/hyphens ("aren't", "e-cigarettes");
# every other non-space character stands alone.
_TOKEN_RE = re.compile(r"\w+(?:['-]\w+)*|[^\w\s]", re.UNICODE)

_TERMINATOR_RE = re.compile(r"[.!?]+")
_TRAILING_CLOSERS = ")]}\"'’”"

# Period after one of these words does not end a sentence.
ABBREVIATIONS = frozenset(
    """
    dr mr mrs ms prof rev hon sr jr st etc e.g i.e vs cf fig figs eq al
    inc ltd co corp dept univ assn approx vol pp nos sec
    u.s u.k u.n d.c a.m p.m ph.d m.d b.a m.a b.sc m.sc
    jan feb mar apr jun jul aug sep sept oct nov dec
    """.split()
)


@dataclass(frozen=True)
class Instance:
    """One question/perspective pair with its stance label and split."""

    id: str
    topic: str
    question: str
    perspective: str
    stance: str
    split: str

    def to_record(self) -> dict:
        return {name: getattr(self, name) for name in CORPUS_FIELDS}


@dataclass(frozen=True)
class TokenizedInstance:
    """Token sequence of an instance plus its sentence structure.

    ``tokens`` is the question tokens followed by the perspective tokens.
    ``sentence_spans`` are half-open token-index ranges partitioning
    ``tokens``; the first ``question_sentence_count`` spans cover the
    question. ``sentence_texts`` keeps the raw text of each sentence so
    sentence-level scoring can see original casing and punctuation.
    """

    instance: Instance
    question_tokens: tuple[str, ...]
    perspective_tokens: tuple[str, ...]
    sentence_spans: tuple[tuple[int, int], ...]
    sentence_texts: tuple[str, ...]
    question_sentence_count: int

    @property
    def tokens(self) -> tuple[str, ...]:
        return self.question_tokens + self.perspective_tokens

    @property
    def num_tokens(self) -> int:
        return len(self.question_tokens) + len(self.perspective_tokens)


@dataclass
class SplitStats:
    split: str
    n_topics: int
    avg_words: int
    n_pro: int
    n_con: int
    total: int = field(init=False)

    def __post_init__(self):
        self.total = self.n_pro + self.n_con


def tokenize(text: str) -> list[str]:
    """Lowercase word/punctuation tokens; deterministic and idempotent."""
    return [m.group(0).lower() for m in _TOKEN_RE.finditer(text)]


def tokenize_with_offsets(text: str) -> list[tuple[str, int, int]]:
    """Like :func:`tokenize` but with character offsets into ``text``."""
    return [(m.group(0).lower(), m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]


def _is_abbreviation(text: str, period_pos: int) -> bool:
    m = re.search(r"[\w.]+$", text[:period_pos])
    if m is None:
        return False
    word = m.group(0).lower().strip(".")
    return word in ABBREVIATIONS


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Split ``text`` into contiguous character spans, one per sentence.

    Runs of ``.!?`` end a sentence except when a lone period follows a known
    abbreviation or sits inside a word or number ("e.g.", "3.14"). The spans
    cover the whole text; text without a terminator is a single sentence.
    """
    if not text.strip():
        return []
    boundaries = []
    for m in _TERMINATOR_RE.finditer(text):
        end = m.end()
        if m.group(0) == ".":
            if end < len(text) and (text[end].isalnum() or text[end] == "."):
                continue  # internal dot: decimals, acronyms, "e.g."
            if _is_abbreviation(text, m.start()):
                continue
        while end < len(text) and text[end] in _TRAILING_CLOSERS:
            end += 1
        boundaries.append(end)
    spans = []
    start = 0
    for b in boundaries:
        if b <= start:
            continue
        spans.append((start, b))
        start = b
    if start < len(text) and text[start:].strip():
        spans.append((start, len(text)))
    elif spans:
        # fold trailing whitespace into the last sentence
        last_start, _ = spans[-1]
        spans[-1] = (last_start, len(text))
    return spans


def _sentences_of(text: str) -> tuple[list[list[str]], list[str]]:
    """Token lists and raw texts per sentence, empty sentences dropped."""
    token_lists: list[list[str]] = []
    texts: list[str] = []
    toks = tokenize_with_offsets(text)
    for cstart, cend in split_sentences(text):
        sent_tokens = [t for t, s, _ in toks if cstart <= s < cend]
        if sent_tokens:
            token_lists.append(sent_tokens)
            texts.append(text[cstart:cend].strip())
    return token_lists, texts


def tokenize_instance(instance: Instance) -> TokenizedInstance:
    """Tokenize question and perspective and lay out the sentence spans."""
    q_sents, q_texts = _sentences_of(instance.question)
    p_sents, p_texts = _sentences_of(instance.perspective)
    question_tokens = [t for sent in q_sents for t in sent]
    perspective_tokens = [t for sent in p_sents for t in sent]
    spans = []
    pos = 0
    for sent in q_sents + p_sents:
        spans.append((pos, pos + len(sent)))
        pos += len(sent)
    return TokenizedInstance(
        instance=instance,
        question_tokens=tuple(question_tokens),
        perspective_tokens=tuple(perspective_tokens),
        sentence_spans=tuple(spans),
        sentence_texts=tuple(q_texts + p_texts),
        question_sentence_count=len(q_sents),
    )


def _validate_record(record: dict, where: str) -> Instance:
    for name in CORPUS_FIELDS:
        if name not in record:
            raise CorpusError(f"{where}: missing field {name!r}")
        if not isinstance(record[name], str):
            raise CorpusError(f"{where}: field {name!r} must be a string")
    stance = record["stance"].strip().lower()
    if stance not in STANCES:
        raise CorpusError(
            f"{where}: record {record['id']!r} has unknown stance {record['stance']!r}"
        )
    split = record["split"].strip().lower()
    if split not in SPLITS:
        raise CorpusError(
            f"{where}: record {record['id']!r} has unknown split {record['split']!r}"
        )
    if not record["question"].strip() or not record["perspective"].strip():
        raise CorpusError(f"{where}: record {record['id']!r} has empty text fields")
    return Instance(
        id=record["id"],
        topic=record["topic"],
        question=record["question"],
        perspective=record["perspective"],
        stance=stance,
        split=split,
    )


def load_corpus(path: str | Path, format: str = "jsonl") -> list[Instance]:
    """Load a corpus file, rejecting duplicates and malformed records.

    ``format`` is one of ``jsonl`` (canonical), ``csv`` or ``tsv``; the
    delimiter variants expect a header row naming the same fields.
    """
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"corpus file not found: {path}")
    if format not in ("jsonl", "csv", "tsv"):
        raise CorpusError(f"unknown corpus format: {format!r}")

    instances: list[Instance] = []
    seen: set[str] = set()

    def add(record: dict, where: str):
        inst = _validate_record(record, where)
        if inst.id in seen:
            raise CorpusError(f"{where}: duplicate instance id {inst.id!r}")
        seen.add(inst.id)
        instances.append(inst)

    if format == "jsonl":
        with path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise CorpusError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
                if not isinstance(record, dict):
                    raise CorpusError(f"{path}:{lineno}: record is not an object")
                add(record, f"{path}:{lineno}")
    else:
        delimiter = "," if format == "csv" else "\t"
        with path.open(encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh, delimiter=delimiter)
            for recno, row in enumerate(reader, start=1):
                if row.get(None) is not None:
                    raise CorpusError(f"{path}: record {recno}: too many columns")
                add({k: (v or "") for k, v in row.items()}, f"{path}: record {recno}")
    return instances


def save_corpus(path: str | Path, instances: list[Instance]) -> None:
    """Write instances as canonical JSON-lines (UTF-8, one record per line)."""
    with Path(path).open("w", encoding="utf-8") as fh:
        for inst in instances:
            fh.write(json.dumps(inst.to_record(), ensure_ascii=False) + "\n")


def corpus_stats(corpus: list[Instance]) -> list[SplitStats]:
    """Per-split topic/instance counts and mean perspective word count."""
    if not corpus:
        raise CorpusError("corpus_stats requires a non-empty corpus")
    by_split: dict[str, list[Instance]] = {}
    for inst in corpus:
        by_split.setdefault(inst.split, []).append(inst)
    stats = []
    for split in [s for s in SPLITS if s in by_split]:
        group = by_split[split]
        word_counts = [len(inst.perspective.split()) for inst in group]
        stats.append(
            SplitStats(
                split=split,
                n_topics=len({inst.topic for inst in group}),
                avg_words=round(sum(word_counts) / len(word_counts)),
                n_pro=sum(1 for i in group if i.stance == "pro"),
                n_con=sum(1 for i in group if i.stance == "con"),
            )
        )
    return stats
