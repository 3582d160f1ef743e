#!/usr/bin/env python3
"""Generate the bundled desk-scale fixture corpus under assets/.

Deterministic (fixed seed).  The corpus is engineered so the bundled
report seeds behave the way the acceptance suite expects:

- 2,000 in-vocabulary words (plus a handful of over-long words that the
  loader must filter), 32-dimensional clustered embeddings so nearest
  neighbors are semantically close;
- a 25-tree knowledge graph over 150 corpus words (plus out-of-store
  leaves and isolated vertices); members of one tree never share a
  character or a syllable, so linguistic matches are never relatives;
- phonetic/POS/domain lexicons covering >=85% of the corpus, with full
  coverage of graph words;
- domain prototypes anchored to six distinct embedding clusters;
- the seed list for reports: every in-store graph word.

Run from the repo root:  python scripts/make_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parent.parent
ASSETS = REPO / "assets"
sys.path.insert(0, str(REPO / "src"))

SEED = 20260809
DIM = 32
N_WORDS = 2000
N_LONG = 10
CLUSTERS = 125  # 16 words each
NOISE = 0.6
N_TREES = 25
TREE_SIZE = 6  # root + 2 children + 3 grandchildren

CHAR_POOL = [chr(0x4E00 + i) for i in range(600)]
EXTRA_CHARS = [chr(0x4E00 + 600 + i) for i in range(40)]

ONSETS = ["b", "p", "m", "f", "d", "t", "n", "l", "g", "k", "h", "j", "q", "x",
          "zh", "ch", "sh", "r", "z", "c", "s", "y", "w"]
FINALS = ["a", "o", "e", "i", "u", "ai", "ei", "ao", "ou", "an", "en", "ang", "eng", "ong"]
BASES = [o + f for o in ONSETS for f in FINALS]

POS_TAGS = ["noun", "verb", "adjective", "adverb"]
DOMAIN_TAGS = ["food", "occupations", "clothes", "ai", "body", "stories",
               "sports", "spirit", "religion"]
PAINTING_DOMAINS = ["architecture", "mountain", "river", "grassland", "road", "lake"]


def make_words(rng: np.random.Generator) -> list[str]:
    words: list[str] = []
    seen: set[str] = set()
    while len(words) < N_WORDS:
        length = 2 if rng.random() < 0.7 else 3
        w = "".join(CHAR_POOL[i] for i in rng.integers(0, len(CHAR_POOL), size=length))
        if w not in seen:
            seen.add(w)
            words.append(w)
    return words


def char_syllables(rng: np.random.Generator) -> dict[str, tuple[str, int]]:
    table: dict[str, tuple[str, int]] = {}
    order = rng.permutation(len(BASES))
    for i, ch in enumerate(CHAR_POOL):
        base = BASES[order[i % len(BASES)]]
        tone = 0 if rng.random() < 0.03 else int(rng.integers(1, 5))
        table[ch] = (base, tone)
    return table


def word_keys(word: str, syll: dict[str, tuple[str, int]]) -> tuple[set[str], set[str]]:
    chars = set(word)
    bases = {syll[ch][0] for ch in word if ch in syll}
    return chars, bases


def build_graph(words: list[str], syll, rng: np.random.Generator):
    """25 disjoint trees whose members share no character and no syllable."""
    edges: list[tuple[str, str]] = []
    tree_words: list[str] = []
    used: set[str] = set()
    candidates = list(words)
    rng.shuffle(candidates)
    it = iter(candidates)

    for _ in range(N_TREES):
        members: list[str] = []
        chars: set[str] = set()
        bases: set[str] = set()
        while len(members) < TREE_SIZE:
            w = next(it)
            if w in used:
                continue
            wc, wb = word_keys(w, syll)
            if wc & chars or wb & bases:
                continue
            members.append(w)
            used.add(w)
            chars |= wc
            bases |= wb
        root, c1, c2, g1, g2, g3 = members
        edges += [(root, c1), (root, c2), (c1, g1), (c1, g2), (c2, g3)]
        tree_words += members

    # out-of-store leaves hang off the first trees: author-style picks
    # with unknown similarity
    oov_leaves = []
    for i in range(5):
        leaf = EXTRA_CHARS[2 * i] + EXTRA_CHARS[2 * i + 1]
        oov_leaves.append(leaf)
        edges.append((tree_words[i * TREE_SIZE], leaf))

    isolated = [w for w in words if w not in used][:10]
    return edges, tree_words, oov_leaves, isolated


def main() -> None:
    rng = np.random.default_rng(SEED)
    ASSETS.mkdir(exist_ok=True)

    words = make_words(rng)
    syll = char_syllables(rng)
    long_words = ["".join(CHAR_POOL[i] for i in rng.integers(0, len(CHAR_POOL), size=9))
                  for _ in range(N_LONG)]

    # clustered unit-ish vectors
    centers = rng.normal(size=(CLUSTERS, DIM))
    centers /= np.linalg.norm(centers, axis=1, keepdims=True)
    cluster_of = {w: i % CLUSTERS for i, w in enumerate(words)}
    vecs = {}
    for w in words:
        noise = rng.normal(size=DIM) * (NOISE / np.sqrt(DIM))
        vecs[w] = centers[cluster_of[w]] + noise
    for w in long_words:
        vecs[w] = rng.normal(size=DIM)

    lines = [f"{N_WORDS + N_LONG} {DIM}"]
    all_rows = words + long_words
    order = rng.permutation(len(all_rows))
    for i in order:
        w = all_rows[i]
        lines.append(w + " " + " ".join(f"{v:.6f}" for v in vecs[w]))
    (ASSETS / "embeddings.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")

    edges, tree_words, oov_leaves, isolated = build_graph(words, syll, rng)
    graph_lines = ["# artist knowledge graph: parent<TAB>child edges, single words are isolated vertices"]
    graph_lines += [f"{p}\t{c}" for p, c in edges]
    graph_lines += isolated
    (ASSETS / "graph.tsv").write_text("\n".join(graph_lines) + "\n", encoding="utf-8")

    graph_set = set(tree_words)
    phonetic_lines = []
    pos_lines = []
    domain_lines = []
    for w in words:
        covered = w in graph_set
        if covered or rng.random() < 0.92:
            sylls = []
            for ch in w:
                base, tone = syll[ch]
                sylls.append(f"{base}{tone}" if tone else base)
            phonetic_lines.append(w + "\t" + " ".join(sylls))
        if covered or rng.random() < 0.90:
            pos_lines.append(f"{w}\t{POS_TAGS[rng.integers(0, len(POS_TAGS))]}")
        if covered or rng.random() < 0.90:
            domain_lines.append(f"{w}\t{DOMAIN_TAGS[rng.integers(0, len(DOMAIN_TAGS))]}")
    (ASSETS / "phonetic.tsv").write_text("\n".join(phonetic_lines) + "\n", encoding="utf-8")
    (ASSETS / "pos.tsv").write_text("\n".join(pos_lines) + "\n", encoding="utf-8")
    (ASSETS / "domains.tsv").write_text("\n".join(domain_lines) + "\n", encoding="utf-8")

    # six distinct clusters anchor the painting domains; one deliberate
    # out-of-vocabulary prototype exercises the loader's skip path
    anchor_clusters = [5, 23, 41, 67, 89, 110]
    proto_lines = []
    for domain, cluster in zip(PAINTING_DOMAINS, anchor_clusters):
        members = [w for w in words if cluster_of[w] == cluster][:5]
        proto_lines += [f"{domain}\t{w}" for w in members]
    proto_lines.append("mountain\t" + EXTRA_CHARS[30] + EXTRA_CHARS[31])
    (ASSETS / "prototypes.tsv").write_text("\n".join(proto_lines) + "\n", encoding="utf-8")

    (ASSETS / "seeds.txt").write_text("\n".join(tree_words) + "\n", encoding="utf-8")

    (ASSETS / "config.toml").write_text(
        """# bundled desk-scale corpus configuration
[assets]
embeddings = "embeddings.txt"
phonetic = "phonetic.tsv"
pos = "pos.tsv"
domains = "domains.tsv"
graph = "graph.tsv"
prototypes = "prototypes.tsv"

[filter]
max_chars = 8
require_in_embeddings = true

[mix]
max_candidates = 7
rng_seed = 7

[mix.quotas]
semantic_similarity = 0.3516
linguistic_feature = 0.2637
dadaism = 0.2286
author_style = 0.1561

[mix.linguistic]
min_shared = 1
tone_sensitive = false

[mix.author]
depth = 2

[mix.dada]
semantic_ceiling = 0.35
forbid_shared_char = true
forbid_shared_syllable = true

[generation]
iterations = 28
seeds_per_iteration = 2
canvas = [2000.0, 2000.0]
min_len = 60.0
max_len = 300.0
overlap_epsilon = 18.0

[report]
semantic_floor = 0.35
""",
        encoding="utf-8",
    )

    verify()


def verify() -> None:
    """Regenerated assets must still satisfy what the test suite assumes."""
    from mindmap.config import load_config, load_stores, load_word_list
    from mindmap.evaluation import compare_configs
    from mindmap.mixer import Provenance, baseline_config

    cfg = load_config(ASSETS / "config.toml")
    stores, prototypes = load_stores(cfg)
    seeds = load_word_list(ASSETS / "seeds.txt")

    assert len(stores.embeddings) == N_WORDS, len(stores.embeddings)
    assert len(seeds) >= 100
    assert all(s in stores.embeddings for s in seeds)
    assert len(stores.graph.vertices) >= 50
    coverage = sum(1 for w in stores.embeddings.words if w in stores.phonetic) / N_WORDS
    assert coverage >= 0.85, coverage

    mix = cfg.generation.mix
    baseline, proposed = compare_configs(
        seeds, baseline_config(mix.max_candidates, mix.rng_seed), mix, stores, cfg.thresholds
    )
    print(baseline.to_text())
    print(proposed.to_text())
    assert baseline.percentage(Provenance.SEMANTIC) >= 60.0
    for p in Provenance:
        assert proposed.percentage(p) >= 11.0, (p, proposed.percentage(p))
    assert proposed.percentage(Provenance.SEMANTIC) < baseline.percentage(Provenance.SEMANTIC)
    print("fixture corpus OK")


if __name__ == "__main__":
    main()
