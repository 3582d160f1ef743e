"""Rule-breaking word expansion: cross-domain, cross-POS, and random picks.

The operational reading of "never follow any known rules": a random
candidate must sit below a semantic-similarity ceiling and share no
character and no syllable with the seed, so Dadaist picks are provably
disjoint from what the other strategies could produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .embeddings import EmbeddingStore
from .errors import MissingTagError, OutOfVocabularyError
from .lexicon import PhoneticLexicon, TagLexicon
from .linguistic import shares_any_syllable
from .rng import Rng


@dataclass(frozen=True)
class DadaConfig:
    rng_seed: int = 0
    semantic_ceiling: float = 0.35
    forbid_shared_char: bool = True
    forbid_shared_syllable: bool = True

    def __post_init__(self):
        if not -1.0 <= self.semantic_ceiling <= 1.0:
            raise ValueError("semantic_ceiling must be in [-1, 1]")


def _eligible_tagged(
    tags: TagLexicon, vocab: Iterable[str], seed: str, kind: str
) -> list[tuple[str, str]]:
    if kind == "domain":
        seed_tag = tags.domain_of(seed) if tags.has_domain(seed) else None
        tag_of, has = tags.domain_of, tags.has_domain
    else:
        seed_tag = tags.pos_of(seed) if tags.has_pos(seed) else None
        tag_of, has = tags.pos_of, tags.has_pos
    if seed_tag is None:
        raise MissingTagError(seed, kind)
    return [(w, tag_of(w)) for w in sorted(set(vocab)) if w != seed and has(w) and tag_of(w) != seed_tag]


def cross_domain_candidates(
    tags: TagLexicon, vocab: Iterable[str], seed: str, k: int, rng: Rng
) -> list[tuple[str, str]]:
    """k uniform draws (without replacement) from words tagged with another domain.

    Asking for more than the pool holds returns the whole pool shuffled.
    """
    return rng.sample(_eligible_tagged(tags, vocab, seed, "domain"), k)


def cross_pos_candidates(
    tags: TagLexicon, vocab: Iterable[str], seed: str, k: int, rng: Rng
) -> list[tuple[str, str]]:
    """Same as cross_domain_candidates but jumping part-of-speech instead."""
    return rng.sample(_eligible_tagged(tags, vocab, seed, "pos"), k)


def random_pool(
    store: EmbeddingStore,
    phonetic: PhoneticLexicon | None,
    seed: str,
    cfg: DadaConfig,
) -> list[str]:
    """Every vocabulary word admissible as a random Dadaist candidate.

    Admission is the conjunction of: cosine similarity to the seed below
    cfg.semantic_ceiling, no shared character (when forbidden), and no
    shared syllable (when forbidden; words without phonetic entries
    share no syllable with anything).  Code-point sorted so sampling is
    reproducible.
    """
    if seed not in store:
        raise OutOfVocabularyError(seed)
    seed_chars = set(seed)
    pool: list[str] = []
    for w in store.words:
        if w == seed:
            continue
        if cfg.forbid_shared_char and seed_chars & set(w):
            continue
        if cfg.forbid_shared_syllable and phonetic is not None and shares_any_syllable(
            phonetic, seed, w
        ):
            continue
        if store.norm(w) == 0.0 or store.similarity(seed, w) >= cfg.semantic_ceiling:
            continue
        pool.append(w)
    pool.sort()
    return pool


def random_candidates(
    store: EmbeddingStore,
    phonetic: PhoneticLexicon | None,
    seed: str,
    k: int,
    cfg: DadaConfig,
    rng: Rng,
) -> list[str]:
    """k seeded-uniform draws from the admissible pool, without replacement."""
    return rng.sample(random_pool(store, phonetic, seed, cfg), k)


def dada_candidates(
    store: EmbeddingStore,
    phonetic: PhoneticLexicon | None,
    tags: TagLexicon | None,
    seed: str,
    k: int,
    cfg: DadaConfig,
    rng: Rng,
) -> list[tuple[str, str]]:
    """Combined Dadaist draw honoring all three principles.

    Every pick passes the random-candidate admission predicates; among
    admissible words, picks rotate cross-domain -> cross-POS -> plain
    random so domain and POS jumps surface when tags allow it.  Returns
    (word, detail) pairs.
    """
    pool = random_pool(store, phonetic, seed, cfg)
    shuffled = rng.sample(pool, len(pool))

    seed_domain = tags.domain_of(seed) if tags is not None and tags.has_domain(seed) else None
    seed_pos = tags.pos_of(seed) if tags is not None and tags.has_pos(seed) else None

    buckets: tuple[list[tuple[str, str]], ...] = ([], [], [])
    for w in shuffled:
        if seed_domain is not None and tags.has_domain(w) and tags.domain_of(w) != seed_domain:
            buckets[0].append((w, f"domain:{tags.domain_of(w)}"))
        elif seed_pos is not None and tags.has_pos(w) and tags.pos_of(w) != seed_pos:
            buckets[1].append((w, f"pos:{tags.pos_of(w)}"))
        else:
            buckets[2].append((w, "random"))

    out: list[tuple[str, str]] = []
    i = 0
    while len(out) < k and any(i < len(b) for b in buckets):
        for b in buckets:
            if i < len(b) and len(out) < k:
                out.append(b[i])
        i += 1
    return out
