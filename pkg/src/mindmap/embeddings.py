"""Word-embedding store: loading, filtering, cosine similarity and exact kNN.

The store reads the open word2vec text format (``<count> <dim>`` header,
then one ``word v1 ... v_dim`` line per word).  Vectors are kept as
float64 rows of a single matrix with precomputed norms; search is an
exact brute-force scan so that similarity rankings are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateVectorError,
    DimensionError,
    DuplicateWordError,
    FormatError,
    OutOfVocabularyError,
)


@dataclass(frozen=True)
class VocabularyFilter:
    """Admission rule for corpus words.

    ``max_chars`` counts Unicode scalar values, not bytes: the rule is
    about characters of the word, and CJK words are multi-byte.
    """

    max_chars: int = 8
    require_in_embeddings: bool = True

    def __post_init__(self):
        if self.max_chars < 1:
            raise ValueError("max_chars must be >= 1")

    def passes(self, word: str, store: "EmbeddingStore | None" = None) -> bool:
        if len(word) > self.max_chars:
            return False
        if self.require_in_embeddings and store is not None:
            return word in store
        return True

    def reject_reason(self, word: str, store: "EmbeddingStore | None" = None) -> str | None:
        if len(word) > self.max_chars:
            return f"longer than {self.max_chars} characters"
        if self.require_in_embeddings and store is not None and word not in store:
            return "not in the embedding vocabulary"
        return None


class EmbeddingStore:
    """Immutable vocabulary of unit-normalizable word vectors.

    Safe to share across concurrent readers once constructed.
    """

    def __init__(self, words: Sequence[str], matrix: np.ndarray):
        matrix = np.asarray(matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != len(words):
            raise DimensionError("matrix shape does not match word count")
        self.words: list[str] = list(words)
        self.matrix = matrix
        self.dim = int(matrix.shape[1])
        self.norms = np.sqrt((matrix * matrix).sum(axis=1))
        self._index = {w: i for i, w in enumerate(self.words)}
        if len(self._index) != len(self.words):
            seen: set[str] = set()
            for w in self.words:
                if w in seen:
                    raise DuplicateWordError(w)
                seen.add(w)

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def __len__(self) -> int:
        return len(self.words)

    def vector(self, word: str) -> np.ndarray:
        try:
            return self.matrix[self._index[word]]
        except KeyError:
            raise OutOfVocabularyError(word) from None

    def norm(self, word: str) -> float:
        try:
            return float(self.norms[self._index[word]])
        except KeyError:
            raise OutOfVocabularyError(word) from None

    def similarity(self, a: str, b: str) -> float:
        """Cosine similarity between two stored words."""
        ia, ib = self._index.get(a), self._index.get(b)
        if ia is None:
            raise OutOfVocabularyError(a)
        if ib is None:
            raise OutOfVocabularyError(b)
        na, nb = self.norms[ia], self.norms[ib]
        if na == 0.0 or nb == 0.0:
            raise DegenerateVectorError("zero-norm vector has no direction")
        return float(np.dot(self.matrix[ia], self.matrix[ib]) / (na * nb))

    @cached_property
    def char_index(self) -> dict[str, list[str]]:
        """Character -> store words containing it, in store order.

        Lets lexical search touch only words that can share a character
        instead of scanning the whole vocabulary.
        """
        index: dict[str, list[str]] = {}
        for w in self.words:
            for ch in set(w):
                index.setdefault(ch, []).append(w)
        return index


def load_embeddings(path: str | Path, filter: VocabularyFilter | None = None) -> EmbeddingStore:
    """Load a word2vec-style text file, keeping only words passing ``filter``.

    File order is preserved.  The header count is parsed but not trusted:
    real embedding files routinely disagree with their own header.

    Raises FormatError (malformed header, wrong component count, naming
    the line) or DuplicateWordError (repeated word that passed the filter).
    """
    if filter is None:
        filter = VocabularyFilter()
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty embedding file", line_number=1)
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError("header must be '<count> <dim>'", line_number=1)
    try:
        count, dim = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError("header must be '<count> <dim>'", line_number=1) from None
    if count < 0 or dim < 1:
        raise FormatError("header count/dim out of range", line_number=1)

    words: list[str] = []
    rows: list[np.ndarray] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        # Tolerate a trailing space before the newline, a word2vec quirk.
        if parts and parts[-1] == "":
            parts.pop()
        if len(parts) != dim + 1:
            raise FormatError(
                f"expected word + {dim} values, got {len(parts)} fields", line_number=lineno
            )
        word = parts[0]
        if not filter.passes(word):
            continue
        if word in seen:
            raise DuplicateWordError(word)
        seen.add(word)
        try:
            row = np.array([float(v) for v in parts[1:]], dtype=np.float64)
        except ValueError:
            raise FormatError("non-numeric vector component", line_number=lineno) from None
        words.append(word)
        rows.append(row)

    matrix = np.vstack(rows) if rows else np.zeros((0, dim), dtype=np.float64)
    return EmbeddingStore(words, matrix)


def cosine_similarity(a: Iterable[float] | np.ndarray, b: Iterable[float] | np.ndarray) -> float:
    """dot(a,b) / (|a||b|), accumulated in float64."""
    va = np.asarray(a, dtype=np.float64)
    vb = np.asarray(b, dtype=np.float64)
    if va.shape != vb.shape:
        raise DimensionError(f"dimension mismatch: {va.shape} vs {vb.shape}")
    na = float(np.sqrt(np.dot(va, va)))
    nb = float(np.sqrt(np.dot(vb, vb)))
    if na == 0.0 or nb == 0.0:
        raise DegenerateVectorError("zero-norm vector has no direction")
    return float(np.dot(va, vb) / (na * nb))


def nearest_neighbors(
    store: EmbeddingStore,
    word: str,
    k: int,
    excluded: set[str] | frozenset[str] = frozenset(),
) -> list[tuple[str, float]]:
    """The k most similar in-store words, exact brute force.

    Never returns the query word or an excluded word.  Ties break by
    code-point order of the word so results are reproducible.  Stored
    words with zero norm have no direction and are skipped.
    """
    if word not in store:
        raise OutOfVocabularyError(word)
    if k <= 0:
        return []
    qv = store.vector(word)
    qn = store.norm(word)
    if qn == 0.0:
        raise DegenerateVectorError("query vector has zero norm")
    scored: list[tuple[float, str]] = []
    for i, w in enumerate(store.words):
        if w == word or w in excluded:
            continue
        n = store.norms[i]
        if n == 0.0:
            continue
        scored.append((float(np.dot(store.matrix[i], qv) / (n * qn)), w))
    scored.sort(key=lambda pair: (-pair[0], pair[1]))
    return [(w, s) for s, w in scored[:k]]
