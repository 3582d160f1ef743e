"""Hand-built hypernym/hyponym forest imitating one artist's associations.

File format is TSV ``parent<TAB>child`` edge lines; a line holding a
single word declares an isolated vertex (the format allows entity lists
much larger than the relation count).  Blank lines and ``#`` comments
are ignored.  The forest property — one parent per vertex, no cycles —
is validated at load.
"""

from __future__ import annotations

from collections import deque
from pathlib import Path
from typing import Iterator, Literal

from .errors import FormatError, GraphStructureError

Relation = Literal["hyponym", "hypernym"]


class KnowledgeGraph:
    """Directed word forest; edges point hypernym -> hyponym (parent -> child)."""

    def __init__(self, parent: dict[str, str], children: dict[str, list[str]], vertices: set[str]):
        self.parent = parent
        self.children = children
        self.vertices = vertices

    @property
    def roots(self) -> list[str]:
        return sorted(v for v in self.vertices if v not in self.parent)

    def edge_count(self) -> int:
        return len(self.parent)

    def __contains__(self, word: str) -> bool:
        return word in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def ancestors(self, word: str) -> list[str]:
        """Parent chain from the word up to its root, nearest first."""
        chain: list[str] = []
        cur = self.parent.get(word)
        while cur is not None:
            chain.append(cur)
            cur = self.parent.get(cur)
        return chain

    def descendants(self, word: str) -> Iterator[tuple[str, int]]:
        """Breadth-first (word, hops) over child edges, code-point order per level."""
        queue: deque[tuple[str, int]] = deque([(word, 0)])
        while queue:
            cur, hops = queue.popleft()
            for child in sorted(self.children.get(cur, ())):
                yield child, hops + 1
                queue.append((child, hops + 1))

    def reachable(self, word: str) -> set[str]:
        """All vertices connected to the word by pure ancestor or descendant paths."""
        if word not in self.vertices:
            return set()
        found = set(self.ancestors(word))
        found.update(w for w, _ in self.descendants(word))
        return found


def load_graph(path: str | Path) -> KnowledgeGraph:
    """Load and validate a TSV edge list.

    Raises GraphStructureError naming the offending vertex for a second
    parent or a cycle; duplicate identical edges collapse silently.
    """
    parent: dict[str, str] = {}
    children: dict[str, list[str]] = {}
    vertices: set[str] = set()
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" not in line:
            vertices.add(line)
            continue
        head, _, tail = line.partition("\t")
        head, tail = head.strip(), tail.strip()
        if not head or not tail or "\t" in tail:
            raise FormatError("expected 'parent<TAB>child' or a single word", line_number=lineno)
        if tail in parent:
            if parent[tail] == head:
                continue
            raise GraphStructureError("vertex has two parents", tail)
        parent[tail] = head
        children.setdefault(head, []).append(tail)
        vertices.add(head)
        vertices.add(tail)

    # Forest check: walking up from any vertex must terminate.
    state: dict[str, int] = {}  # 1 = on current path, 2 = known clean
    for start in vertices:
        path_nodes: list[str] = []
        cur: str | None = start
        while cur is not None and state.get(cur) != 2:
            if state.get(cur) == 1:
                raise GraphStructureError("cycle detected at vertex", cur)
            state[cur] = 1
            path_nodes.append(cur)
            cur = parent.get(cur)
        for v in path_nodes:
            state[v] = 2

    return KnowledgeGraph(parent, children, vertices)


def contains(graph: KnowledgeGraph, word: str) -> bool:
    return word in graph


def graph_expand(
    graph: KnowledgeGraph, seed: str, depth: int = 2, k: int = 7
) -> list[tuple[str, Relation, int]]:
    """Vertices within ``depth`` hops of the seed, nearest first.

    Hyponyms (the seed's subtree) come before hypernyms (the parent
    chain) at equal hop counts, then code-point order.  Returns an empty
    list when the seed is not a vertex.
    """
    if depth < 1 or k < 1:
        raise ValueError("depth and k must be positive")
    if seed not in graph:
        return []
    by_hops: dict[int, tuple[list[str], list[str]]] = {}
    for word, hops in graph.descendants(seed):
        if hops > depth:
            break
        by_hops.setdefault(hops, ([], []))[0].append(word)
    for hops, word in enumerate(graph.ancestors(seed), start=1):
        if hops > depth:
            break
        by_hops.setdefault(hops, ([], []))[1].append(word)

    out: list[tuple[str, Relation, int]] = []
    for hops in sorted(by_hops):
        hyponyms, hypernyms = by_hops[hops]
        for w in sorted(hyponyms):
            out.append((w, "hyponym", hops))
        for w in hypernyms:
            out.append((w, "hypernym", hops))
        if len(out) >= k:
            break
    return out[:k]
