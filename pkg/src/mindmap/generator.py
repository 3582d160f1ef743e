"""Iterative mind-map generation, radial layout, SVG and JSON-trace output.

The creation loop: draw each seed, expand it to a candidate list,
classify every candidate into a painting domain, map it to a glyph,
compute its path distance from the seed, and draw it; promoted
candidates become the next round's seeds.  A word is expanded at most
once, so the node graph is a forest rooted at the user seeds.

Iterations count frontier rounds: one round expands every node in the
current frontier.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional
from xml.sax.saxutils import escape

from . import mixer
from .mixer import MixConfig, Provenance, Stores
from .scene import (
    DomainPrototypes,
    ElementDescriptor,
    PaintingDomain,
    classify_domain,
    painting_element,
)
from .errors import InvalidSeedError

TWO_PI = 2.0 * math.pi

# Overlap resolution rotates in 15-degree steps, at most one full turn.
_ROTATION_STEPS = 24


@dataclass
class GenerationConfig:
    iterations: int = 28
    seeds_per_iteration: int = 2
    mix: MixConfig = field(default_factory=MixConfig)
    canvas: tuple[float, float] = (2000.0, 2000.0)
    min_len: float = 60.0
    max_len: float = 300.0
    overlap_epsilon: float = 18.0

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.seeds_per_iteration < 1:
            raise ValueError("seeds_per_iteration must be >= 1")
        if not self.min_len < self.max_len:
            raise ValueError("min_len must be below max_len")


@dataclass
class MindMapNode:
    word: str
    provenance: Provenance
    domain: PaintingDomain
    element: ElementDescriptor
    position: tuple[float, float]
    parent: Optional[str]  # parent node's word; words are unique map-wide
    path_length: float  # drawn edge length; may be shorter than the
    # similarity-mapped distance when canvas clamping pulled the node in
    iteration: int
    similarity: Optional[float] = None


@dataclass
class MindMap:
    nodes: list[MindMapNode]
    canvas: tuple[float, float]
    config: GenerationConfig
    rng_seed: int

    def seed_count(self) -> int:
        return sum(1 for n in self.nodes if n.parent is None)

    def edge_count(self) -> int:
        return sum(1 for n in self.nodes if n.parent is not None)


def node_distance(seed: str, candidate: str, stores: Stores, cfg: GenerationConfig) -> float:
    """Map cosine similarity onto a path length in [min_len, max_len].

    (1 - cos) / 2 spans [0, 1] over the full similarity range, so
    identical directions land at min_len and opposite ones at max_len.
    Unknown similarity (either word out of the store) is drawn at max_len.
    """
    emb = stores.embeddings
    if (
        seed not in emb
        or candidate not in emb
        or emb.norm(seed) == 0.0
        or emb.norm(candidate) == 0.0
    ):
        return cfg.max_len
    cos = emb.similarity(seed, candidate)
    t = min(max((1.0 - cos) / 2.0, 0.0), 1.0)
    return cfg.min_len + (cfg.max_len - cfg.min_len) * t


def _clamp(pos: tuple[float, float], canvas: tuple[float, float]) -> tuple[float, float]:
    return (min(max(pos[0], 0.0), canvas[0]), min(max(pos[1], 0.0), canvas[1]))


def place_child(
    occupied: list[tuple[float, float]],
    parent_pos: tuple[float, float],
    arc_start: float,
    arc_span: float,
    index: int,
    count: int,
    radius: float,
    canvas: tuple[float, float],
    epsilon: float,
) -> tuple[float, float]:
    """Radial placement: child ``index`` of ``count`` inside the parent's arc.

    The position is clamped to the canvas; if it lands within ``epsilon``
    of an existing node it is rotated in fixed steps until free, and
    overlap is allowed once a full turn fails.
    """
    base = arc_start + arc_span * index / max(count, 1)
    first: tuple[float, float] | None = None
    for step in range(_ROTATION_STEPS):
        theta = base + TWO_PI * step / _ROTATION_STEPS
        pos = _clamp(
            (parent_pos[0] + radius * math.cos(theta), parent_pos[1] + radius * math.sin(theta)),
            canvas,
        )
        if first is None:
            first = pos
        if all((pos[0] - ox) ** 2 + (pos[1] - oy) ** 2 >= epsilon * epsilon for ox, oy in occupied):
            return pos
    assert first is not None
    return first


def _available_arc(node: MindMapNode, by_word: dict[str, MindMapNode]) -> tuple[float, float]:
    """Roots own the full circle; other nodes a half-circle facing outward."""
    if node.parent is None:
        return 0.0, TWO_PI
    parent = by_word[node.parent]
    outward = math.atan2(
        node.position[1] - parent.position[1], node.position[0] - parent.position[0]
    )
    return outward - math.pi / 2.0, math.pi


def generate(seeds: list[str], cfg: GenerationConfig, stores: Stores, prototypes: DomainPrototypes) -> MindMap:
    """Run the full creation loop and return the finished map.

    Deterministic given (seeds, cfg, asset files): expansion sampling
    streams derive from (rng seed, seed word) and every ordering rule is
    fixed.  Frontier promotion takes the highest-similarity candidates
    (ties by code-point order) that pass the vocabulary filter.
    """
    for s in seeds:
        reason = stores.vocabulary_filter.reject_reason(s, stores.embeddings)
        if reason is not None:
            raise InvalidSeedError(s, reason)
    unique_seeds = list(dict.fromkeys(seeds))

    mind_map = MindMap([], cfg.canvas, cfg, cfg.mix.rng_seed)
    by_word: dict[str, MindMapNode] = {}
    occupied: list[tuple[float, float]] = []

    def add_node(node: MindMapNode) -> None:
        mind_map.nodes.append(node)
        by_word[node.word] = node
        occupied.append(node.position)

    width, height = cfg.canvas
    for i, word in enumerate(unique_seeds):
        domain, _ = classify_domain(word, prototypes, stores.embeddings)
        add_node(
            MindMapNode(
                word=word,
                # roots are their own origin; recorded as semantic by convention
                provenance=Provenance.SEMANTIC,
                domain=domain,
                element=painting_element(domain),
                position=(width * (i + 1) / (len(unique_seeds) + 1), height / 2.0),
                parent=None,
                path_length=0.0,
                iteration=0,
            )
        )

    frontier: list[MindMapNode] = list(mind_map.nodes)
    expanded: set[str] = set()
    for round_no in range(1, cfg.iterations + 1):
        next_frontier: list[MindMapNode] = []
        for node in frontier:
            if node.word in expanded:
                continue
            expanded.add(node.word)
            candidates = mixer.expand(node.word, cfg.mix, stores)
            placeable = [c for c in candidates if c.word not in by_word]
            arc_start, arc_span = _available_arc(node, by_word)
            new_nodes: list[MindMapNode] = []
            for idx, cand in enumerate(placeable):
                domain, _ = classify_domain(cand.word, prototypes, stores.embeddings)
                radius = node_distance(node.word, cand.word, stores, cfg)
                pos = place_child(
                    occupied,
                    node.position,
                    arc_start,
                    arc_span,
                    idx,
                    len(placeable),
                    radius,
                    cfg.canvas,
                    cfg.overlap_epsilon,
                )
                child = MindMapNode(
                    word=cand.word,
                    provenance=cand.provenance,
                    domain=domain,
                    element=painting_element(domain),
                    position=pos,
                    parent=node.word,
                    path_length=math.dist(node.position, pos),
                    iteration=round_no,
                    similarity=cand.similarity,
                )
                add_node(child)
                new_nodes.append(child)
            promotable = [
                n
                for n in new_nodes
                if n.word not in expanded
                and stores.vocabulary_filter.passes(n.word, stores.embeddings)
            ]
            promotable.sort(
                key=lambda n: (
                    -(n.similarity if n.similarity is not None else -math.inf),
                    n.word,
                )
            )
            next_frontier.extend(promotable[: cfg.seeds_per_iteration])
        frontier = next_frontier
        if not frontier:
            break
    return mind_map


# ---------------------------------------------------------------------------
# SVG rendering

_INK = "#3b3b3b"
_EDGE = "#9a9184"
_FILLS = {
    PaintingDomain.ARCHITECTURE: "#d9c8a0",
    PaintingDomain.MOUNTAIN: "#b7c4b0",
    PaintingDomain.RIVER: "#aac6d8",
    PaintingDomain.GRASSLAND: "#b9d2a1",
    PaintingDomain.ROAD: "#d8cfc0",
    PaintingDomain.LAKE: "#a5bfd4",
}


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _glyph_svg(glyph: str, cx: float, cy: float, s: float, fill: str) -> str:
    f, k = _fmt, s
    if glyph == "triangle-ridge":
        d = (
            f"M {f(cx - 0.6 * k)},{f(cy + 0.3 * k)} L {f(cx - 0.25 * k)},{f(cy - 0.35 * k)}"
            f" L {f(cx - 0.05 * k)},{f(cy + 0.05 * k)} L {f(cx + 0.2 * k)},{f(cy - 0.25 * k)}"
            f" L {f(cx + 0.6 * k)},{f(cy + 0.3 * k)} Z"
        )
        return f'<path d="{d}" fill="{fill}" stroke="{_INK}" stroke-width="1.5"/>'
    if glyph == "ellipse":
        return (
            f'<ellipse cx="{f(cx)}" cy="{f(cy)}" rx="{f(0.6 * k)}" ry="{f(0.3 * k)}"'
            f' fill="{fill}" stroke="{_INK}" stroke-width="1.5"/>'
        )
    if glyph == "wave-band":
        rows = []
        for dy in (-0.08 * k, 0.12 * k):
            y = cy + dy
            d = (
                f"M {f(cx - 0.6 * k)},{f(y)}"
                f" q {f(0.15 * k)},{f(-0.2 * k)} {f(0.3 * k)},0"
                f" q {f(0.15 * k)},{f(0.2 * k)} {f(0.3 * k)},0"
                f" q {f(0.15 * k)},{f(-0.2 * k)} {f(0.3 * k)},0"
            )
            rows.append(f'<path d="{d}" fill="none" stroke="{fill}" stroke-width="3"/>')
        return "".join(rows)
    if glyph == "gable-house":
        body = (
            f'<rect x="{f(cx - 0.35 * k)}" y="{f(cy - 0.05 * k)}" width="{f(0.7 * k)}"'
            f' height="{f(0.45 * k)}" fill="{fill}" stroke="{_INK}" stroke-width="1.5"/>'
        )
        roof = (
            f'<path d="M {f(cx - 0.45 * k)},{f(cy - 0.05 * k)} L {f(cx)},{f(cy - 0.5 * k)}'
            f' L {f(cx + 0.45 * k)},{f(cy - 0.05 * k)} Z" fill="{fill}" stroke="{_INK}"'
            f' stroke-width="1.5"/>'
        )
        return body + roof
    if glyph == "grass-tufts":
        blades = []
        for dx in (-0.4 * k, -0.1 * k, 0.2 * k):
            d = (
                f"M {f(cx + dx)},{f(cy + 0.3 * k)}"
                f" q {f(0.05 * k)},{f(-0.45 * k)} {f(0.2 * k)},{f(-0.55 * k)}"
            )
            blades.append(f'<path d="{d}" fill="none" stroke="{fill}" stroke-width="3"/>')
        return "".join(blades)
    if glyph == "dashed-path":
        d = (
            f"M {f(cx - 0.6 * k)},{f(cy + 0.2 * k)}"
            f" Q {f(cx)},{f(cy - 0.25 * k)} {f(cx + 0.6 * k)},{f(cy + 0.1 * k)}"
        )
        return (
            f'<path d="{d}" fill="none" stroke="{fill}" stroke-width="4"'
            f' stroke-dasharray="7 6"/>'
        )
    raise ValueError(f"unknown glyph id {glyph!r}")


def render_svg(mind_map: MindMap) -> str:
    """Standalone SVG: edge paths first, then one group per node.

    Both kinds are emitted in node creation order, so rendering the same
    map twice yields byte-identical text.  Edges are straight lines, so
    the drawn length equals the node's recorded path length.
    """
    width, height = mind_map.canvas
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}"'
        f' viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" fill="#f6f1e7"/>',
        f'<rect x="1" y="1" width="{_fmt(width - 2)}" height="{_fmt(height - 2)}" fill="none"'
        f' stroke="{_INK}" stroke-width="2"/>',
    ]
    by_word = {n.word: n for n in mind_map.nodes}
    for node in mind_map.nodes:
        if node.parent is None:
            continue
        parent = by_word[node.parent]
        parts.append(
            f'<path d="M {_fmt(parent.position[0])},{_fmt(parent.position[1])}'
            f' L {_fmt(node.position[0])},{_fmt(node.position[1])}"'
            f' fill="none" stroke="{_EDGE}" stroke-width="1.5"/>'
        )
    for i, node in enumerate(mind_map.nodes):
        cx, cy = node.position
        glyph = _glyph_svg(node.element.glyph, cx, cy, node.element.size, _FILLS[node.domain])
        label = (
            f'<text x="{_fmt(cx)}" y="{_fmt(cy + node.element.size * 0.75)}"'
            f' font-size="14" text-anchor="middle" fill="{_INK}">{escape(node.word)}</text>'
        )
        parts.append(f'<g id="node-{i}">{glyph}{label}</g>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# JSON trace

TRACE_SCHEMA_VERSION = 1


def _config_snapshot(cfg: GenerationConfig) -> dict:
    mix = cfg.mix
    return {
        "iterations": cfg.iterations,
        "seeds_per_iteration": cfg.seeds_per_iteration,
        "canvas": [cfg.canvas[0], cfg.canvas[1]],
        "min_len": cfg.min_len,
        "max_len": cfg.max_len,
        "overlap_epsilon": cfg.overlap_epsilon,
        "mix": {
            "max_candidates": mix.max_candidates,
            "rng_seed": mix.rng_seed,
            "quotas": {p.value: mix.quotas.get(p, 0.0) for p in Provenance},
            "linguistic": {
                "min_shared": mix.linguistic.min_shared,
                "tone_sensitive": mix.linguistic.tone_sensitive,
            },
            "author": {"depth": mix.author.depth},
            "dada": {
                "rng_seed": mix.dada.rng_seed,
                "semantic_ceiling": mix.dada.semantic_ceiling,
                "forbid_shared_char": mix.dada.forbid_shared_char,
                "forbid_shared_syllable": mix.dada.forbid_shared_syllable,
            },
            "allowlist": sorted(mix.allowlist) if mix.allowlist is not None else None,
        },
    }


def _config_from_snapshot(snap: dict) -> GenerationConfig:
    mix = snap["mix"]
    return GenerationConfig(
        iterations=snap["iterations"],
        seeds_per_iteration=snap["seeds_per_iteration"],
        canvas=(snap["canvas"][0], snap["canvas"][1]),
        min_len=snap["min_len"],
        max_len=snap["max_len"],
        overlap_epsilon=snap["overlap_epsilon"],
        mix=MixConfig(
            max_candidates=mix["max_candidates"],
            rng_seed=mix["rng_seed"],
            quotas={Provenance(k): v for k, v in mix["quotas"].items()},
            linguistic=mixer.LinguisticConfig(**mix["linguistic"]),
            author=mixer.AuthorConfig(**mix["author"]),
            dada=mixer.DadaConfig(**mix["dada"]),
            allowlist=frozenset(mix["allowlist"]) if mix["allowlist"] is not None else None,
        ),
    )


def export_trace(mind_map: MindMap) -> str:
    """Canonical JSON trace: sorted keys, two-space indent, one trailing newline."""
    doc = {
        "schema_version": TRACE_SCHEMA_VERSION,
        "canvas": [mind_map.canvas[0], mind_map.canvas[1]],
        "rng_seed": mind_map.rng_seed,
        "config": _config_snapshot(mind_map.config),
        "nodes": [
            {
                "word": n.word,
                "provenance": n.provenance.value,
                "domain": n.domain.value,
                "element": {"glyph": n.element.glyph, "size": n.element.size},
                "position": [n.position[0], n.position[1]],
                "parent": n.parent,
                "path_length": n.path_length,
                "iteration": n.iteration,
                "similarity": n.similarity,
            }
            for n in mind_map.nodes
        ],
    }
    return json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def parse_trace(text: str) -> MindMap:
    """Inverse of export_trace; export(parse(t)) == t for traces we wrote."""
    doc = json.loads(text)
    if doc.get("schema_version") != TRACE_SCHEMA_VERSION:
        raise ValueError(f"unsupported trace schema: {doc.get('schema_version')!r}")
    nodes = [
        MindMapNode(
            word=n["word"],
            provenance=Provenance(n["provenance"]),
            domain=PaintingDomain(n["domain"]),
            element=ElementDescriptor(n["element"]["glyph"], n["element"]["size"]),
            position=(n["position"][0], n["position"][1]),
            parent=n["parent"],
            path_length=n["path_length"],
            iteration=n["iteration"],
            similarity=n["similarity"],
        )
        for n in doc["nodes"]
    ]
    return MindMap(
        nodes=nodes,
        canvas=(doc["canvas"][0], doc["canvas"][1]),
        config=_config_from_snapshot(doc["config"]),
        rng_seed=doc["rng_seed"],
    )
