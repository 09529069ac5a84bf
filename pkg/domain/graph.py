# domain/graph.py
"""
Graf prosty leżący pod kołczanem, cykle z kierunkiem obiegu, cykle bezcięciwowe
i baza homologii z drzewa rozpinającego.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from core.config import Config
from core.errors import DomainError, ResourceLimitError
from domain.quiver import Quiver

logger = logging.getLogger(__name__)

Edge = Tuple[str, str]


@dataclass(frozen=True)
class SimpleGraph:
    """Krawędzie przechowywane jako (u, v) z u przed v w `vertices`."""

    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        pos = {v: i for i, v in enumerate(self.vertices)}
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"self-loop at {u!r}")
            if u not in pos or v not in pos:
                raise DomainError(f"edge {u}-{v} uses an unknown vertex")
            key = frozenset((u, v))
            if key in seen:
                raise DomainError(f"repeated edge {u}-{v}")
            seen.add(key)
        object.__setattr__(self, "_pairs", frozenset(seen))

    @classmethod
    def build(cls, vertices: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> "SimpleGraph":
        pos = {v: i for i, v in enumerate(vertices)}
        edges = sorted(
            {(u, v) if pos[u] < pos[v] else (v, u) for u, v in pairs},
            key=lambda e: (pos[e[0]], pos[e[1]]),
        )
        return cls(tuple(vertices), tuple(edges))

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self._pairs  # type: ignore[attr-defined]

    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def neighbors(self, v: str) -> List[str]:
        out = [b for a, b in self.edges if a == v] + [a for a, b in self.edges if b == v]
        return sorted(out)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def num_components(self) -> int:
        return nx.number_connected_components(self.to_networkx()) if self.vertices else 0

    def betti_number(self) -> int:
        return len(self.edges) - len(self.vertices) + self.num_components()


@dataclass(frozen=True)
class Cycle:
    """Cykl z kierunkiem obiegu; przechowywany od leksykograficznie najmniejszej nazwy."""

    vertices: Tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise DomainError("a cycle needs at least three vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("cycle vertices must be distinct")
        start = self.vertices.index(min(self.vertices))
        if start:
            object.__setattr__(self, "vertices", self.vertices[start:] + self.vertices[:start])

    @classmethod
    def of(cls, seq: Sequence[str]) -> "Cycle":
        return cls(tuple(seq))

    def __len__(self) -> int:
        return len(self.vertices)

    def steps(self) -> List[Edge]:
        """Kolejne pary (u_i, u_{i+1}) łącznie z domknięciem."""
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def reversed(self) -> "Cycle":
        return Cycle(tuple(reversed(self.vertices)))

    def undirected_key(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(frozenset(s) for s in self.steps())

    def canonical_orientation(self) -> "Cycle":
        """Obieg od najmniejszego wierzchołka w stronę mniejszego z jego sąsiadów na cyklu."""
        vs = self.vertices
        return self if vs[1] < vs[-1] else self.reversed()

    def is_oriented_in(self, q: Quiver) -> bool:
        """Czy wszystkie strzałki idą zgodnie z obiegiem."""
        return all(q.weight(u, v) > 0 for u, v in self.steps())

    def lies_in(self, g: SimpleGraph) -> bool:
        return all(v in g.vertices for v in self.vertices) and all(g.has_edge(u, v) for u, v in self.steps())

    def __str__(self) -> str:
        return "(" + ",".join(self.vertices) + ")"


def underlying_graph(q: Quiver) -> SimpleGraph:
    return SimpleGraph.build(q.vertices, ((u, v) for u, v, _ in q.arrows()))


def is_chordless(g: SimpleGraph, c: Cycle) -> bool:
    vs = c.vertices
    k = len(vs)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(vs[i], vs[j]):
                return False
    return c.lies_in(g)


def chordless_cycles(g: SimpleGraph, cap: Optional[int] = None) -> List[Cycle]:
    """Wszystkie cykle bezcięciwowe, po jednej orientacji, w ustalonej kolejności."""
    cap = Config.CHORDLESS_CAP if cap is None else cap
    if cap <= 0:
        raise DomainError("chordless-cycle cap must be positive")
    found: Dict[FrozenSet[FrozenSet[str]], Cycle] = {}
    for raw in nx.chordless_cycles(g.to_networkx()):
        if len(raw) < 3:
            continue
        cyc = Cycle.of(raw).canonical_orientation()
        found.setdefault(cyc.undirected_key(), cyc)
        if len(found) > cap:
            raise ResourceLimitError(f"more than {cap} chordless cycles")
    cycles = sorted(found.values(), key=lambda c: (len(c), c.vertices))
    logger.debug("Found %d chordless cycles on %d vertices", len(cycles), len(g.vertices))
    return cycles


@dataclass
class SpanningForest:
    """Las rozpinający BFS; korzenie w najmniejszych wierzchołkach składowych."""

    graph: SimpleGraph
    parent: Dict[str, Optional[str]] = field(default_factory=dict)
    depth: Dict[str, int] = field(default_factory=dict)
    order: List[str] = field(default_factory=list)
    non_tree_edges: List[Edge] = field(default_factory=list)

    @classmethod
    def build(cls, g: SimpleGraph) -> "SpanningForest":
        forest = cls(g)
        adj = {v: g.neighbors(v) for v in g.vertices}
        for root in sorted(g.vertices):
            if root in forest.parent:
                continue
            forest.parent[root] = None
            forest.depth[root] = 0
            forest.order.append(root)
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w in adj[v]:
                    if w not in forest.parent:
                        forest.parent[w] = v
                        forest.depth[w] = forest.depth[v] + 1
                        forest.order.append(w)
                        queue.append(w)
        tree = forest.tree_edge_keys()
        forest.non_tree_edges = [e for e in g.edges if frozenset(e) not in tree]
        return forest

    def tree_edge_keys(self) -> set:
        return {frozenset((v, p)) for v, p in self.parent.items() if p is not None}

    def roots(self) -> List[str]:
        return [v for v in self.order if self.parent[v] is None]

    def tree_path(self, u: str, v: str) -> List[str]:
        """Ścieżka u ... v w drzewie (oba w tej samej składowej)."""
        left, right = [u], [v]
        a, b = u, v
        while self.depth[a] > self.depth[b]:
            a = self.parent[a]
            left.append(a)
        while self.depth[b] > self.depth[a]:
            b = self.parent[b]
            right.append(b)
        while a != b:
            a = self.parent[a]
            b = self.parent[b]
            left.append(a)
            right.append(b)
        return left + right[-2::-1]

    def fundamental_cycle(self, edge: Edge) -> Cycle:
        u, v = edge
        # ścieżka v ... u w drzewie, domknięta krawędzią u -> v
        path = self.tree_path(v, u)
        return Cycle.of(path).canonical_orientation()

    def fundamental_cycles(self) -> List[Cycle]:
        return [self.fundamental_cycle(e) for e in self.non_tree_edges]

    def gf2_coordinates(self, c: Cycle) -> List[int]:
        """Współrzędne cyklu nad GF(2) w bazie cykli fundamentalnych."""
        steps = {frozenset(s) for s in c.steps()}
        return [1 if frozenset(e) in steps else 0 for e in self.non_tree_edges]


def homology_basis(g: SimpleGraph) -> List[Cycle]:
    """Cykle fundamentalne deterministycznego lasu rozpinającego."""
    return SpanningForest.build(g).fundamental_cycles()


def signed_edge_vector(g: SimpleGraph, c: Cycle) -> List[int]:
    """Wektor cyklu w przestrzeni krawędzi: +1 gdy obieg idzie zgodnie z (u, v) krawędzi."""
    index = g.edge_index()
    vec = [0] * len(g.edges)
    for a, b in c.steps():
        if (a, b) in index:
            vec[index[(a, b)]] += 1
        elif (b, a) in index:
            vec[index[(b, a)]] -= 1
        else:
            raise DomainError(f"cycle {c} uses a non-edge {a}-{b}")
    return vec
