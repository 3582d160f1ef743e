"""Artistic mind-map generation from seed words.

Four expansion strategies — embedding similarity, lexical/phonetic
connection, an artist's knowledge graph, and Dadaist rule-breaking —
feed an iterative map builder that renders deterministic SVG scenes
and JSON provenance traces.
"""

__version__ = "0.1.0"

from .artist_graph import KnowledgeGraph, graph_expand, load_graph
from .dadaist import DadaConfig, cross_domain_candidates, cross_pos_candidates, random_candidates
from .embeddings import (
    EmbeddingStore,
    VocabularyFilter,
    cosine_similarity,
    load_embeddings,
    nearest_neighbors,
)
from .evaluation import (
    AnnotationThresholds,
    DistributionReport,
    annotate_provenance,
    compare_configs,
    distribution_report,
)
from .generator import (
    GenerationConfig,
    MindMap,
    MindMapNode,
    export_trace,
    generate,
    node_distance,
    parse_trace,
    render_svg,
)
from .lexicon import (
    PhoneticLexicon,
    TagLexicon,
    load_phonetic_lexicon,
    load_tag_lexicon,
)
from .linguistic import (
    LexicalMatch,
    homophone_candidates,
    lexical_candidates,
    longest_common_substring,
)
from .mixer import (
    Candidate,
    MixConfig,
    Provenance,
    Stores,
    apportion,
    baseline_config,
    expand,
)
from .scene import (
    DomainPrototypes,
    ElementDescriptor,
    PaintingDomain,
    classify_domain,
    load_prototypes,
    painting_element,
)

__all__ = [
    "AnnotationThresholds",
    "Candidate",
    "DadaConfig",
    "DistributionReport",
    "DomainPrototypes",
    "ElementDescriptor",
    "EmbeddingStore",
    "GenerationConfig",
    "KnowledgeGraph",
    "LexicalMatch",
    "MindMap",
    "MindMapNode",
    "MixConfig",
    "PaintingDomain",
    "PhoneticLexicon",
    "Provenance",
    "Stores",
    "TagLexicon",
    "VocabularyFilter",
    "annotate_provenance",
    "apportion",
    "baseline_config",
    "classify_domain",
    "compare_configs",
    "cosine_similarity",
    "cross_domain_candidates",
    "cross_pos_candidates",
    "distribution_report",
    "expand",
    "export_trace",
    "generate",
    "graph_expand",
    "homophone_candidates",
    "lexical_candidates",
    "load_embeddings",
    "load_graph",
    "load_phonetic_lexicon",
    "load_prototypes",
    "load_tag_lexicon",
    "longest_common_substring",
    "nearest_neighbors",
    "node_distance",
    "painting_element",
    "parse_trace",
    "random_candidates",
    "render_svg",
]
