"""Combine the four expansion strategies into one capped candidate list.

Per-strategy slot counts come from largest-remainder apportionment of
the configured quotas; short pools hand their deficit to the other
strategies in a fixed priority order.  Everything is deterministic
given the rng seed: per-seed sampling streams are derived from
(rng_seed, seed word), so seeds can be expanded concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from . import artist_graph, dadaist, linguistic
from .artist_graph import KnowledgeGraph
from .dadaist import DadaConfig
from .embeddings import EmbeddingStore, VocabularyFilter, nearest_neighbors
from .errors import InvalidSeedError
from .lexicon import PhoneticLexicon, TagLexicon
from .rng import Rng


class Provenance(Enum):
    """The four candidate origins; declaration order is the fixed tie order."""

    SEMANTIC = "semantic_similarity"
    LINGUISTIC = "linguistic_feature"
    DADAISM = "dadaism"
    AUTHOR_STYLE = "author_style"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Provenance.SEMANTIC: "Semantic Similarity",
    Provenance.LINGUISTIC: "Linguistic Feature",
    Provenance.DADAISM: "Dadaism",
    Provenance.AUTHOR_STYLE: "Author Style",
}

# Dedup and deficit-refill priority: rarer, more characterful signals first.
RESOLUTION_ORDER = (
    Provenance.AUTHOR_STYLE,
    Provenance.LINGUISTIC,
    Provenance.SEMANTIC,
    Provenance.DADAISM,
)

# Achieved distribution of the four strategies reported for the full
# system, reused as the default target mixing ratio.
DEFAULT_QUOTAS = {
    Provenance.SEMANTIC: 0.3516,
    Provenance.LINGUISTIC: 0.2637,
    Provenance.DADAISM: 0.2286,
    Provenance.AUTHOR_STYLE: 0.1561,
}


@dataclass(frozen=True)
class Candidate:
    word: str
    provenance: Provenance
    similarity: Optional[float]  # cosine to the seed; None when either side is OOV
    detail: str


@dataclass(frozen=True)
class LinguisticConfig:
    min_shared: int = 1
    tone_sensitive: bool = False


@dataclass(frozen=True)
class AuthorConfig:
    depth: int = 2


@dataclass
class MixConfig:
    max_candidates: int = 7
    quotas: dict[Provenance, float] = field(default_factory=lambda: dict(DEFAULT_QUOTAS))
    rng_seed: int = 0
    linguistic: LinguisticConfig = field(default_factory=LinguisticConfig)
    author: AuthorConfig = field(default_factory=AuthorConfig)
    dada: DadaConfig = field(default_factory=DadaConfig)
    allowlist: Optional[frozenset[str]] = None

    def __post_init__(self):
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be >= 1")
        total = sum(self.quotas.get(p, 0.0) for p in Provenance)
        if abs(total - 1.0) > 1e-6:
            raise ValueError(f"quotas must sum to 1, got {total}")
        if any(self.quotas.get(p, 0.0) < 0 for p in Provenance):
            raise ValueError("quotas must be nonnegative")


def baseline_config(max_candidates: int = 7, rng_seed: int = 0) -> MixConfig:
    """Pure nearest-neighbor expansion: the whole quota on semantic similarity."""
    return MixConfig(
        max_candidates=max_candidates,
        quotas={
            Provenance.SEMANTIC: 1.0,
            Provenance.LINGUISTIC: 0.0,
            Provenance.DADAISM: 0.0,
            Provenance.AUTHOR_STYLE: 0.0,
        },
        rng_seed=rng_seed,
    )


@dataclass
class Stores:
    """Everything expansion needs, loaded once and shared read-only."""

    embeddings: EmbeddingStore
    phonetic: Optional[PhoneticLexicon] = None
    tags: Optional[TagLexicon] = None
    graph: Optional[KnowledgeGraph] = None
    vocabulary_filter: VocabularyFilter = field(default_factory=VocabularyFilter)


def apportion(quotas: dict[Provenance, float], n: int) -> dict[Provenance, int]:
    """Largest-remainder split of ``n`` slots along the quota ratios.

    Remainder ties break by Provenance declaration order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    shares = {p: quotas.get(p, 0.0) * n for p in Provenance}
    counts = {p: math.floor(shares[p]) for p in Provenance}
    leftover = n - sum(counts.values())
    order = sorted(
        Provenance,
        key=lambda p: (-(shares[p] - counts[p]), list(Provenance).index(p)),
    )
    for p in order[:leftover]:
        counts[p] += 1
    return counts


def _semantic_pool(stores: Stores, seed: str, k: int) -> list[tuple[str, str]]:
    return [(w, "knn") for w, _ in nearest_neighbors(stores.embeddings, seed, k)]


def _linguistic_pool(stores: Stores, seed: str, k: int, cfg: LinguisticConfig) -> list[tuple[str, str]]:
    # Shared-character scan restricted to words that can share one: the
    # store's inverted character index and a full-vocabulary scan agree
    # whenever min_shared >= 1.
    narrowed = sorted({w for ch in set(seed) for w in stores.embeddings.char_index.get(ch, ())})
    lexical = linguistic.lexical_candidates(narrowed, seed, min_shared=cfg.min_shared, k=k)
    if stores.phonetic is not None and seed in stores.phonetic:
        homophones = linguistic.homophone_candidates(
            stores.phonetic, seed, tone_sensitive=cfg.tone_sensitive, k=k
        )
    else:
        homophones = []
    merged: list[tuple[str, str]] = []
    seen: set[str] = set()
    for i in range(max(len(lexical), len(homophones))):
        if i < len(lexical) and lexical[i].word not in seen:
            seen.add(lexical[i].word)
            merged.append((lexical[i].word, f"shares '{lexical[i].shared}'"))
        if i < len(homophones) and homophones[i][0] not in seen:
            seen.add(homophones[i][0])
            merged.append((homophones[i][0], f"syllable '{homophones[i][1]}'"))
    return merged[:k]


def _author_pool(stores: Stores, seed: str, k: int, cfg: AuthorConfig) -> list[tuple[str, str]]:
    if stores.graph is None:
        return []
    hits = artist_graph.graph_expand(stores.graph, seed, depth=cfg.depth, k=k)
    return [(w, f"{relation} ({hops} hop)") for w, relation, hops in hits]


def _dada_pool(stores: Stores, seed: str, k: int, cfg: MixConfig, rng: Rng) -> list[tuple[str, str]]:
    return dadaist.dada_candidates(
        stores.embeddings, stores.phonetic, stores.tags, seed, k, cfg.dada, rng
    )


def expand(seed: str, cfg: MixConfig, stores: Stores) -> list[Candidate]:
    """Expand one seed into at most ``cfg.max_candidates`` candidates.

    Strategy slot counts follow ``apportion``; duplicates keep the
    provenance that comes first in RESOLUTION_ORDER; deficits from short
    pools refill along the same order.  Output groups candidates by
    provenance in declaration order, inside a group in strategy rank
    order with unknown-similarity words after known ones.
    """
    reason = stores.vocabulary_filter.reject_reason(seed, stores.embeddings)
    if reason is not None:
        raise InvalidSeedError(seed, reason)

    counts = apportion(cfg.quotas, cfg.max_candidates)
    rng = Rng(cfg.rng_seed).derive(seed)
    # Pool depth: a strategy may need its own slots plus the whole
    # deficit, and up to max_candidates entries can be lost to dedup.
    depth = cfg.max_candidates * 2
    pools: dict[Provenance, list[tuple[str, str]]] = {
        Provenance.AUTHOR_STYLE: _author_pool(stores, seed, depth, cfg.author),
        Provenance.LINGUISTIC: _linguistic_pool(stores, seed, depth, cfg.linguistic),
        Provenance.SEMANTIC: _semantic_pool(stores, seed, depth),
        Provenance.DADAISM: _dada_pool(stores, seed, depth, cfg, rng),
    }
    if cfg.allowlist is not None:
        pools = {
            p: [(w, d) for w, d in pool if w in cfg.allowlist] for p, pool in pools.items()
        }

    chosen: dict[str, tuple[Provenance, str]] = {}
    taken_from: dict[Provenance, int] = {p: 0 for p in Provenance}

    def take(provenance: Provenance, want: int) -> int:
        got = 0
        pool = pools[provenance]
        while got < want and taken_from[provenance] < len(pool):
            word, detail = pool[taken_from[provenance]]
            taken_from[provenance] += 1
            if word in chosen or word == seed:
                continue
            chosen[word] = (provenance, detail)
            got += 1
        return got

    for p in RESOLUTION_ORDER:
        take(p, counts[p])
    deficit = cfg.max_candidates - len(chosen)
    for p in RESOLUTION_ORDER:
        if deficit <= 0:
            break
        deficit -= take(p, deficit)

    emb = stores.embeddings

    def similarity_to_seed(word: str) -> Optional[float]:
        if word in emb and emb.norm(word) > 0.0:
            return emb.similarity(seed, word)
        return None

    out: list[Candidate] = []
    for p in Provenance:
        block = [
            Candidate(w, p, similarity_to_seed(w), detail)
            for w, (prov, detail) in chosen.items()
            if prov is p
        ]
        # dict preserves selection order; unknown similarity sorts after known
        out.extend([c for c in block if c.similarity is not None])
        out.extend([c for c in block if c.similarity is None])
    return out
