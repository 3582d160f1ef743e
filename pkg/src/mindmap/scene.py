"""Classify words into the six painting domains and pick their glyphs.

Domains come from the representative paintings this generator imitates;
classification is nearest-centroid over word embeddings with prototype
words supplied as an editable TSV.  Words outside the embedding
vocabulary fall back to the visually neutral Road domain.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from .embeddings import EmbeddingStore
from .errors import ConfigurationError, FormatError

logger = logging.getLogger(__name__)


class PaintingDomain(Enum):
    """Declaration order is the fixed tie-break order for classification."""

    ARCHITECTURE = "architecture"
    MOUNTAIN = "mountain"
    RIVER = "river"
    GRASSLAND = "grassland"
    ROAD = "road"
    LAKE = "lake"


FALLBACK_DOMAIN = PaintingDomain.ROAD


@dataclass(frozen=True)
class ElementDescriptor:
    """Schematic glyph drawn for a domain: id into the renderer's table."""

    glyph: str
    size: float


_ELEMENTS = {
    PaintingDomain.ARCHITECTURE: ElementDescriptor("gable-house", 40.0),
    PaintingDomain.MOUNTAIN: ElementDescriptor("triangle-ridge", 48.0),
    PaintingDomain.RIVER: ElementDescriptor("wave-band", 44.0),
    PaintingDomain.GRASSLAND: ElementDescriptor("grass-tufts", 36.0),
    PaintingDomain.ROAD: ElementDescriptor("dashed-path", 40.0),
    PaintingDomain.LAKE: ElementDescriptor("ellipse", 44.0),
}


def painting_element(domain: PaintingDomain) -> ElementDescriptor:
    """Total, stable mapping from domain to glyph descriptor."""
    return _ELEMENTS[domain]


class DomainPrototypes:
    """Per-domain prototype words and their unit-normalized mean vector."""

    def __init__(self, prototypes: dict[PaintingDomain, list[str]], centroids: dict[PaintingDomain, np.ndarray]):
        self.prototypes = prototypes
        self.centroids = centroids


def load_prototypes(path: str | Path, store: EmbeddingStore) -> DomainPrototypes:
    """Load a ``domain<TAB>word`` TSV and build centroids.

    Out-of-vocabulary prototypes are skipped with a warning; a domain
    left without any in-vocabulary prototype is a configuration error.
    """
    by_name = {d.value: d for d in PaintingDomain}
    words: dict[PaintingDomain, list[str]] = {d: [] for d in PaintingDomain}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" not in line:
            raise FormatError("expected 'domain<TAB>word'", line_number=lineno)
        name, _, word = line.partition("\t")
        name, word = name.strip().lower(), word.strip()
        if name not in by_name:
            raise FormatError(f"unknown domain {name!r}", line_number=lineno)
        if not word:
            raise FormatError("empty prototype word", line_number=lineno)
        words[by_name[name]].append(word)

    prototypes: dict[PaintingDomain, list[str]] = {}
    centroids: dict[PaintingDomain, np.ndarray] = {}
    for domain in PaintingDomain:
        in_vocab = []
        for w in words[domain]:
            if w in store and store.norm(w) > 0.0:
                in_vocab.append(w)
            else:
                logger.warning("prototype %r for %s not in embeddings: skipped", w, domain.value)
        if not in_vocab:
            raise ConfigurationError(f"domain {domain.value!r} has no in-vocabulary prototype")
        mean = np.mean([store.vector(w) for w in in_vocab], axis=0)
        norm = float(np.sqrt(np.dot(mean, mean)))
        if norm == 0.0:
            raise ConfigurationError(f"domain {domain.value!r} prototypes cancel out")
        prototypes[domain] = in_vocab
        centroids[domain] = mean / norm
    return DomainPrototypes(prototypes, centroids)


def classify_domain(
    word: str, prototypes: DomainPrototypes, store: EmbeddingStore
) -> tuple[PaintingDomain, float]:
    """Nearest-centroid domain and its cosine as confidence.

    Ties keep the first domain in declaration order; out-of-vocabulary
    words map to (Road, 0).
    """
    if word not in store or store.norm(word) == 0.0:
        return FALLBACK_DOMAIN, 0.0
    vec = store.vector(word)
    norm = store.norm(word)
    best: PaintingDomain | None = None
    best_sim = -np.inf
    for domain in PaintingDomain:
        sim = float(np.dot(vec, prototypes.centroids[domain]) / norm)
        if sim > best_sim:
            best, best_sim = domain, sim
    assert best is not None
    return best, float(best_sim)
