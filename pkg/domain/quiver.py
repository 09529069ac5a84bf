# domain/quiver.py
"""
Kołczan (quiver) jako skośnie symetryczna macierz wymiany B z nazwanymi wierzchołkami.

b[i][j] > 0 oznacza b[i][j] strzałek i -> j. Wartości są niemutowalne – każda operacja
zwraca nowy obiekt.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from core import linalg
from core.errors import DomainError

Arrow = Tuple[str, str, int]


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    b: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise DomainError("vertex identifiers must be distinct")
        if len(self.b) != n or any(len(row) != n for row in self.b):
            raise DomainError("exchange matrix must be square and match the vertex list")
        for i in range(n):
            if self.b[i][i] != 0:
                raise DomainError(f"loop at vertex {self.vertices[i]!r}")
            for j in range(i + 1, n):
                if self.b[i][j] != -self.b[j][i]:
                    raise DomainError("exchange matrix is not skew-symmetric")

    # --------- konstrukcja ----------

    @classmethod
    def from_matrix(cls, vertices: Sequence[str], b: Sequence[Sequence[int]]) -> "Quiver":
        return cls(tuple(vertices), tuple(tuple(int(x) for x in row) for row in b))

    @classmethod
    def from_arrows(cls, vertices: Sequence[str], arrows: Iterable[Arrow]) -> "Quiver":
        index = {v: i for i, v in enumerate(vertices)}
        n = len(vertices)
        b = [[0] * n for _ in range(n)]
        for src, tgt, m in arrows:
            if src not in index or tgt not in index:
                raise DomainError(f"arrow {src}->{tgt} uses an unknown vertex")
            i, j = index[src], index[tgt]
            b[i][j] += m
            b[j][i] -= m
        return cls.from_matrix(vertices, b)

    @classmethod
    def empty(cls, vertices: Sequence[str] = ()) -> "Quiver":
        n = len(vertices)
        return cls.from_matrix(vertices, [[0] * n for _ in range(n)])

    # --------- dostęp ----------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise DomainError(f"unknown vertex {v!r}") from None

    def weight(self, u: str, v: str) -> int:
        """Liczba strzałek u -> v ze znakiem."""
        return self.b[self.index(u)][self.index(v)]

    def matrix(self) -> linalg.Matrix:
        return linalg.copy_matrix(self.b)

    def arrows(self) -> List[Arrow]:
        out = []
        for i, j in itertools.permutations(range(self.n), 2):
            if self.b[i][j] > 0:
                out.append((self.vertices[i], self.vertices[j], self.b[i][j]))
        return out

    def neighbors(self, v: str) -> List[str]:
        i = self.index(v)
        return [self.vertices[j] for j in range(self.n) if self.b[i][j] != 0]

    def adjacent(self, u: str, v: str) -> bool:
        return self.weight(u, v) != 0

    def reordered(self, order: Sequence[str]) -> "Quiver":
        """Ten sam kołczan z wierzchołkami wypisanymi w kolejności `order`."""
        if sorted(order) != sorted(self.vertices):
            raise DomainError("order must list every vertex exactly once")
        idx = [self.index(v) for v in order]
        return Quiver.from_matrix(order, [[self.b[i][j] for j in idx] for i in idx])

    def relabeled(self, mapping: Dict[str, str]) -> "Quiver":
        return Quiver(tuple(mapping[v] for v in self.vertices), self.b)

    def max_entry(self) -> int:
        return max((abs(x) for row in self.b for x in row), default=0)

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        for src, tgt, m in self.arrows():
            g.add_edge(src, tgt, weight=m)
        return g


# --------- operacje ----------

def mutate(q: Quiver, j: str) -> Quiver:
    """Mutacja w wierzchołku j."""
    k = q.index(j)
    n = q.n
    b = q.b
    out = [list(row) for row in b]
    for i in range(n):
        for l in range(n):
            if i == k or l == k:
                out[i][l] = -b[i][l]
                continue
            bik, bkl = b[i][k], b[k][l]
            prod = bik * bkl
            if prod > 0:
                out[i][l] = b[i][l] + (prod if bik > 0 else -prod)
    return Quiver.from_matrix(q.vertices, out)


def mutate_sequence(q: Quiver, seq: Iterable[str]) -> Quiver:
    for v in seq:
        q = mutate(q, v)
    return q


def opposite_arrows(q: Quiver) -> Quiver:
    return Quiver.from_matrix(q.vertices, [[-x for x in row] for row in q.b])


def subquiver(q: Quiver, s: Iterable[str]) -> Quiver:
    """Pełny podkołczan na zbiorze s (kolejność jak w q)."""
    keep = set(s)
    for v in keep:
        q.index(v)
    order = [v for v in q.vertices if v in keep]
    return _restrict(q, order)


def _restrict(q: Quiver, order: Sequence[str]) -> Quiver:
    idx = [q.index(v) for v in order]
    return Quiver.from_matrix(order, [[q.b[i][j] for j in idx] for i in idx])


def delete_vertex(q: Quiver, v: str) -> Quiver:
    return _restrict(q, [x for x in q.vertices if x != v])


# --------- predykaty ----------

def is_acyclic(q: Quiver) -> bool:
    return nx.is_directed_acyclic_graph(q.digraph())


def is_complete(q: Quiver) -> bool:
    return all(q.b[i][j] != 0 for i, j in itertools.combinations(range(q.n), 2))


def is_abundant(q: Quiver) -> bool:
    return all(abs(q.b[i][j]) >= 2 for i, j in itertools.combinations(range(q.n), 2))


def is_tree(q: Quiver) -> bool:
    if q.n == 0:
        return False
    g = nx.Graph()
    g.add_nodes_from(q.vertices)
    g.add_edges_from((s, t) for s, t, _ in q.arrows())
    return nx.is_tree(g)


def is_sink(q: Quiver, v: str) -> bool:
    i = q.index(v)
    return all(x <= 0 for x in q.b[i])


def is_source(q: Quiver, v: str) -> bool:
    i = q.index(v)
    return all(x >= 0 for x in q.b[i])


def _has_oriented_cycle(q: Quiver, length: int) -> bool:
    n = q.n
    for combo in itertools.combinations(range(n), length):
        first, rest = combo[0], combo[1:]
        for perm in itertools.permutations(rest):
            path = (first,) + perm
            if all(q.b[path[a]][path[(a + 1) % length]] > 0 for a in range(length)):
                return True
    return False


def is_vortex(q: Quiver) -> bool:
    if q.n != 4:
        raise DomainError("a vortex has exactly four vertices")
    return is_complete(q) and _has_oriented_cycle(q, 3) and not _has_oriented_cycle(q, 4)


def contains_vortex(q: Quiver) -> Optional[Tuple[str, ...]]:
    """Pierwszy (w kolejności wierzchołków) 4-podzbiór, na którym pełny podkołczan jest wirem."""
    for combo in itertools.combinations(q.vertices, 4):
        if is_vortex(_restrict(q, combo)):
            return combo
    return None


def vortex_apex(q: Quiver) -> str:
    """Wierzchołek wiru będący źródłem albo ujściem."""
    if not is_vortex(q):
        raise DomainError("quiver is not a vortex")
    for v in q.vertices:
        if is_sink(q, v) or is_source(q, v):
            return v
    raise DomainError("vortex without an apex")


def is_fork(q: Quiver) -> Optional[str]:
    """Punkt powrotu r, jeśli q jest widelcem, w przeciwnym razie None."""
    if q.n < 2 or not is_abundant(q) or is_acyclic(q):
        return None
    n = q.n
    b = q.b
    for r in range(n):
        ok = True
        for i in range(n):
            if b[i][r] <= 0:
                continue
            for j in range(n):
                if b[r][j] > 0 and not b[j][i] > max(b[i][r], b[r][j]):
                    ok = False
                    break
            if not ok:
                break
        if ok and is_acyclic(delete_vertex(q, q.vertices[r])):
            return q.vertices[r]
    return None


def det_b(q: Quiver) -> int:
    return linalg.bareiss_det(q.b)


def rank_b(q: Quiver) -> int:
    return linalg.rank(q.b)
