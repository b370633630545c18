"""Bit-exact binary container for precomputed contextual token embeddings.

Layout (little-endian):
  header:  magic "STNCEMB1" | version u32 | dim u32 | count u64
  record:  id_len u32 | id bytes | T u32
           | per token: len u32 + UTF-8 bytes
           | alignment T x i32 (sub-token -> word index, -1 for specials)
           | matrix T x dim float32, row-major

Matrices are stored as float32 and promoted to float64 by compute paths.
A trainable fallback vocabulary replaces the store for desk-scale runs.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmbeddingFormatError

MAGIC = b"STNCEMB1"
VERSION = 1

_HEADER = struct.Struct("<8sIIQ")
_U32 = struct.Struct("<I")


@dataclass(frozen=True)
class EmbeddingRecord:
    """Per-instance contextual token states with word alignment."""

    instance_id: str
    tokens: tuple[str, ...]
    matrix: np.ndarray  # T x d float32
    word_alignment: tuple[int, ...]

    def validate(self) -> None:
        t, _ = self.matrix.shape
        if len(self.tokens) != t or len(self.word_alignment) != t:
            raise EmbeddingFormatError(
                f"record {self.instance_id!r}: tokens/alignment/matrix "
                f"lengths disagree ({len(self.tokens)}, "
                f"{len(self.word_alignment)}, {t})"
            )
        prev = -1
        for a in self.word_alignment:
            if a < -1:
                raise EmbeddingFormatError(
                    f"record {self.instance_id!r}: alignment index {a} < -1")
            if a >= 0:
                if a < prev:
                    raise EmbeddingFormatError(
                        f"record {self.instance_id!r}: alignment not "
                        f"non-decreasing")
                prev = a


def write_embedding_file(path: str | Path, records: list[EmbeddingRecord]) -> int:
    """Write records to ``path``; returns the number written."""
    dims = {r.matrix.shape[1] for r in records}
    if len(dims) > 1:
        raise EmbeddingFormatError(f"mixed embedding dims: {sorted(dims)}")
    dim = dims.pop() if dims else 0
    for r in records:
        r.validate()
    with Path(path).open("wb") as fh:
        fh.write(_HEADER.pack(MAGIC, VERSION, dim, len(records)))
        for r in records:
            id_bytes = r.instance_id.encode("utf-8")
            fh.write(_U32.pack(len(id_bytes)))
            fh.write(id_bytes)
            fh.write(_U32.pack(len(r.tokens)))
            for tok in r.tokens:
                tb = tok.encode("utf-8")
                fh.write(_U32.pack(len(tb)))
                fh.write(tb)
            fh.write(np.asarray(r.word_alignment, dtype="<i4").tobytes())
            fh.write(np.ascontiguousarray(r.matrix, dtype="<f4").tobytes())
    return len(records)


class _Reader:
    def __init__(self, data: bytes, path: str):
        self.data = data
        self.pos = 0
        self.path = path

    def take(self, n: int, what: str) -> bytes:
        if self.pos + n > len(self.data):
            raise EmbeddingFormatError(
                f"{self.path}: truncated while reading {what}", offset=self.pos)
        chunk = self.data[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def u32(self, what: str) -> int:
        return _U32.unpack(self.take(4, what))[0]


class EmbeddingStore:
    """Random-access, read-only view of one embedding file."""

    def __init__(self, dim: int, records: dict[str, EmbeddingRecord]):
        self.dim = dim
        self._records = records

    def __contains__(self, instance_id: str) -> bool:
        return instance_id in self._records

    def __len__(self) -> int:
        return len(self._records)

    @property
    def ids(self) -> list[str]:
        return list(self._records)

    def get(self, instance_id: str) -> EmbeddingRecord:
        try:
            return self._records[instance_id]
        except KeyError:
            raise EmbeddingFormatError(
                f"instance id {instance_id!r} not present in embedding store"
            ) from None


def read_embedding_file(path: str | Path) -> EmbeddingStore:
    """Parse and fully validate an embedding file."""
    path = Path(path)
    data = path.read_bytes()
    rd = _Reader(data, str(path))
    header = rd.take(_HEADER.size, "header")
    magic, version, dim, count = _HEADER.unpack(header)
    if magic != MAGIC:
        raise EmbeddingFormatError(f"{path}: not an embedding file (bad magic)")
    if version != VERSION:
        raise EmbeddingFormatError(f"{path}: unsupported version {version}")
    if count and dim == 0:
        raise EmbeddingFormatError(f"{path}: zero dim with nonzero count")

    records: dict[str, EmbeddingRecord] = {}
    for _ in range(count):
        id_len = rd.u32("record id length")
        instance_id = rd.take(id_len, "record id").decode("utf-8")
        t = rd.u32("token count")
        tokens = []
        for _ in range(t):
            tok_len = rd.u32("token length")
            tokens.append(rd.take(tok_len, "token").decode("utf-8"))
        alignment = np.frombuffer(
            rd.take(4 * t, "alignment"), dtype="<i4").tolist()
        matrix = np.frombuffer(
            rd.take(4 * t * dim, "matrix"), dtype="<f4").reshape(t, dim).copy()
        if instance_id in records:
            raise EmbeddingFormatError(
                f"{path}: duplicate record id {instance_id!r}")
        rec = EmbeddingRecord(
            instance_id=instance_id,
            tokens=tuple(tokens),
            matrix=matrix,
            word_alignment=tuple(alignment),
        )
        rec.validate()
        records[instance_id] = rec
    if rd.pos != len(data):
        raise EmbeddingFormatError(
            f"{path}: {len(data) - rd.pos} trailing bytes after last record",
            offset=rd.pos)
    return EmbeddingStore(dim=dim, records=records)


OOV_ROW = 0


class FallbackVocab:
    """Token-to-row mapping for the trainable fallback embedding table.

    Row 0 is reserved for out-of-vocabulary tokens; known tokens occupy
    rows 1..len(vocab) in first-seen order.
    """

    def __init__(self, words: list[str]):
        self.index: dict[str, int] = {}
        for w in words:
            if w not in self.index:
                self.index[w] = len(self.index) + 1

    @classmethod
    def from_token_streams(cls, streams) -> "FallbackVocab":
        words = [tok for stream in streams for tok in stream]
        return cls(words)

    @property
    def num_rows(self) -> int:
        return len(self.index) + 1

    def row(self, token: str) -> int:
        return self.index.get(token, OOV_ROW)

    def rows(self, tokens) -> np.ndarray:
        return np.array([self.row(t) for t in tokens], dtype=np.int64)

    def to_list(self) -> list[str]:
        return list(self.index)
