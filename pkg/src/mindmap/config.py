"""TOML run configuration: asset paths plus all tunable parameters.

Paths inside a config file resolve relative to the file's directory, so
a corpus directory can carry its own config.  Command-line flags
override anything loaded here.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .artist_graph import load_graph
from .dadaist import DadaConfig
from .embeddings import VocabularyFilter, load_embeddings
from .errors import ConfigurationError
from .evaluation import AnnotationThresholds
from .generator import GenerationConfig
from .lexicon import load_phonetic_lexicon, load_tag_lexicon
from .mixer import AuthorConfig, LinguisticConfig, MixConfig, Provenance, Stores
from .scene import DomainPrototypes, load_prototypes

# accepted spellings for quota keys: enum value or its head word
_QUOTA_ALIASES = {
    "semantic": Provenance.SEMANTIC,
    "semantic_similarity": Provenance.SEMANTIC,
    "linguistic": Provenance.LINGUISTIC,
    "linguistic_feature": Provenance.LINGUISTIC,
    "dadaism": Provenance.DADAISM,
    "dada": Provenance.DADAISM,
    "author": Provenance.AUTHOR_STYLE,
    "author_style": Provenance.AUTHOR_STYLE,
}


def parse_quota_key(name: str) -> Provenance:
    try:
        return _QUOTA_ALIASES[name.strip().lower()]
    except KeyError:
        raise ConfigurationError(f"unknown quota key {name!r}") from None


@dataclass
class RunConfig:
    """Everything a CLI invocation needs: file paths and parameters."""

    embeddings: Optional[Path] = None
    phonetic: Optional[Path] = None
    pos: Optional[Path] = None
    domains: Optional[Path] = None
    graph: Optional[Path] = None
    prototypes: Optional[Path] = None
    allowlist: Optional[Path] = None
    generation: GenerationConfig = field(default_factory=GenerationConfig)
    thresholds: AnnotationThresholds = field(default_factory=AnnotationThresholds)
    vocabulary_filter: VocabularyFilter = field(default_factory=VocabularyFilter)


def load_config(path: str | Path) -> RunConfig:
    """Parse a TOML config file into a RunConfig."""
    path = Path(path)
    try:
        doc = tomllib.loads(path.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as exc:
        raise ConfigurationError(f"bad config file {path}: {exc}") from None
    base = path.parent
    cfg = RunConfig()

    assets = doc.get("assets", {})
    for name in ("embeddings", "phonetic", "pos", "domains", "graph", "prototypes", "allowlist"):
        if name in assets:
            setattr(cfg, name, (base / assets[name]).resolve())

    filt = doc.get("filter", {})
    cfg.vocabulary_filter = VocabularyFilter(
        max_chars=filt.get("max_chars", 8),
        require_in_embeddings=filt.get("require_in_embeddings", True),
    )

    mix_doc = doc.get("mix", {})
    quotas = None
    if "quotas" in mix_doc:
        quotas = {p: 0.0 for p in Provenance}
        for key, value in mix_doc["quotas"].items():
            quotas[parse_quota_key(key)] = float(value)
    ling = mix_doc.get("linguistic", {})
    author = mix_doc.get("author", {})
    dada = mix_doc.get("dada", {})
    try:
        mix = MixConfig(
            max_candidates=mix_doc.get("max_candidates", 7),
            rng_seed=mix_doc.get("rng_seed", 0),
            **({"quotas": quotas} if quotas is not None else {}),
            linguistic=LinguisticConfig(
                min_shared=ling.get("min_shared", 1),
                tone_sensitive=ling.get("tone_sensitive", False),
            ),
            author=AuthorConfig(depth=author.get("depth", 2)),
            dada=DadaConfig(
                rng_seed=dada.get("rng_seed", 0),
                semantic_ceiling=dada.get("semantic_ceiling", 0.35),
                forbid_shared_char=dada.get("forbid_shared_char", True),
                forbid_shared_syllable=dada.get("forbid_shared_syllable", True),
            ),
        )
        gen_doc = doc.get("generation", {})
        canvas = gen_doc.get("canvas", [2000.0, 2000.0])
        cfg.generation = GenerationConfig(
            iterations=gen_doc.get("iterations", 28),
            seeds_per_iteration=gen_doc.get("seeds_per_iteration", 2),
            mix=mix,
            canvas=(float(canvas[0]), float(canvas[1])),
            min_len=float(gen_doc.get("min_len", 60.0)),
            max_len=float(gen_doc.get("max_len", 300.0)),
            overlap_epsilon=float(gen_doc.get("overlap_epsilon", 18.0)),
        )
    except ValueError as exc:
        raise ConfigurationError(f"bad config value: {exc}") from None

    report = doc.get("report", {})
    cfg.thresholds = AnnotationThresholds(
        semantic_floor=report.get("semantic_floor", 0.35),
        min_shared_chars=report.get("min_shared_chars", 1),
        tone_sensitive=report.get("tone_sensitive", False),
    )
    return cfg


def load_word_list(path: str | Path) -> list[str]:
    """One word per line, UTF-8; blank lines skipped."""
    return [w.strip() for w in Path(path).read_text(encoding="utf-8").splitlines() if w.strip()]


def load_stores(cfg: RunConfig) -> tuple[Stores, DomainPrototypes]:
    """Load every referenced asset file; embeddings and prototypes are required."""
    if cfg.embeddings is None:
        raise ConfigurationError("no embeddings file configured (--embeddings or [assets])")
    store = load_embeddings(cfg.embeddings, cfg.vocabulary_filter)
    phonetic = load_phonetic_lexicon(cfg.phonetic) if cfg.phonetic else None
    if cfg.pos or cfg.domains:
        if not (cfg.pos and cfg.domains):
            raise ConfigurationError("--pos and --domains must be given together")
        tags = load_tag_lexicon(cfg.pos, cfg.domains)
    else:
        tags = None
    graph = load_graph(cfg.graph) if cfg.graph else None
    stores = Stores(
        embeddings=store,
        phonetic=phonetic,
        tags=tags,
        graph=graph,
        vocabulary_filter=cfg.vocabulary_filter,
    )
    if cfg.allowlist is not None:
        cfg.generation.mix.allowlist = frozenset(load_word_list(cfg.allowlist))
    if cfg.prototypes is None:
        raise ConfigurationError("no prototypes file configured (--prototypes or [assets])")
    prototypes = load_prototypes(cfg.prototypes, store)
    return stores, prototypes
