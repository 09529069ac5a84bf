# application/explorer.py
"""
Ograniczone przeszukiwanie wszerz klas mutacyjnych i klas mutacji właściwych,
postać kanoniczna z dokładnością do przenumerowania, część bez widelców
i wyszukiwanie kolizji niezmienników.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from core.config import Config
from core.errors import DomainError, ResourceLimitError
from domain.cyclic_order import CycOrderedQuiver, CyclicOrdering
from domain.models import ClassNode, ClassReport, ExplorationLimits
from domain.quiver import Quiver, det_b, is_abundant, is_acyclic, is_fork, mutate, rank_b
from application.invariants import (
    alexander_of_companion,
    cosquare,
    frobenius_form,
    gcd_multiset,
    lattices_of_companion,
    markov_of_companion,
    unipotent_companion,
)
from application.orderings import winding_signature
from application.properness import is_proper_in_wiggle_class, proper_mutate

logger = logging.getLogger(__name__)


# --------- postać kanoniczna ----------

def canonical_names(n: int) -> Tuple[str, ...]:
    return tuple(f"v{i + 1}" for i in range(n))


def canonical_labelings(q: Quiver) -> Tuple[Quiver, List[Tuple[int, ...]]]:
    """Najmniejsza leksykograficznie macierz po permutacjach i wszystkie permutacje, które ją dają.

    Porównujemy kolumny górnego trójkąta: blok j to (b[p0][pj], ..., b[p(j-1)][pj]).
    """
    n = q.n
    if n > Config.CANONICAL_MAX_N:
        raise ResourceLimitError(f"canonical form is limited to {Config.CANONICAL_MAX_N} vertices")
    b = q.b
    tied: List[Tuple[int, ...]] = [()]
    for level in range(n):
        best = None
        nxt: List[Tuple[int, ...]] = []
        for prefix in tied:
            used = set(prefix)
            for v in range(n):
                if v in used:
                    continue
                block = tuple(b[p][v] for p in prefix)
                if best is None or block < best:
                    best = block
                    nxt = [prefix + (v,)]
                elif block == best:
                    nxt.append(prefix + (v,))
        if len(nxt) > Config.PERMUTATION_CAP:
            raise ResourceLimitError(f"more than {Config.PERMUTATION_CAP} tied partial labelings")
        tied = nxt
    perm = tied[0] if tied else ()
    matrix = [[b[i][j] for j in perm] for i in perm]
    return Quiver.from_matrix(canonical_names(n), matrix), tied


def canonical_form(q: Quiver) -> Quiver:
    return canonical_labelings(q)[0]


def coq_key(coq: CycOrderedQuiver) -> Tuple:
    """Klucz COQ z dokładnością do przenumerowania: macierz kanoniczna i najmniejsza sygnatura nawinięć."""
    canon, perms = canonical_labelings(coq.quiver)
    names = canon.vertices
    signatures = []
    for perm in perms:
        mapping = {coq.quiver.vertices[p]: names[i] for i, p in enumerate(perm)}
        ordering = CyclicOrdering(tuple(mapping[v] for v in coq.ordering.arrangement))
        signatures.append(winding_signature(CycOrderedQuiver(canon, ordering)).winds)
    return canon.b, min(signatures)


# --------- przeszukiwanie ----------

def _quiver_fingerprint(q: Quiver) -> Dict[str, object]:
    return {
        "det_b": det_b(q),
        "rank_b": rank_b(q),
        "acyclic": is_acyclic(q),
        "abundant": is_abundant(q),
    }


def _coq_fingerprint(coq: CycOrderedQuiver) -> Dict[str, object]:
    u = unipotent_companion(coq.quiver, coq.ordering.arrangement)
    return {
        "alexander": str(alexander_of_companion(u)),
        "markov": markov_of_companion(u),
        "gcd_multiset": list(gcd_multiset(u)),
    }


def _bfs(
    seed,
    key_of: Callable,
    quiver_of: Callable,
    children: Callable,
    limits: ExplorationLimits,
    fingerprint: Callable,
    ordering_of: Callable = lambda state: None,
) -> ClassReport:
    report = ClassReport()
    index: Dict[Tuple, int] = {}

    def add(state, depth: int) -> int:
        index[key_of(state)] = len(report.nodes)
        report.nodes.append(
            ClassNode(quiver_of(state), depth, ordering_of(state), fingerprint(state))
        )
        return len(report.nodes) - 1

    add(seed, 0)
    queue = deque([(seed, 0, 0)])
    while queue:
        state, depth, idx = queue.popleft()
        if depth >= limits.max_depth:
            report.complete = False
            continue
        for label, child in children(state):
            if quiver_of(child).max_entry() > limits.max_entry:
                report.complete = False
                continue
            key = key_of(child)
            if key in index:
                report.edges.append((idx, index[key], label))
                continue
            if len(report.nodes) >= limits.max_quivers:
                report.complete = False
                continue
            child_idx = add(child, depth + 1)
            report.edges.append((idx, child_idx, label))
            queue.append((child, depth + 1, child_idx))
    logger.info("Explored %d classes (complete=%s)", len(report.nodes), report.complete)
    return report


def mutation_class(q: Quiver, limits: Optional[ExplorationLimits] = None) -> ClassReport:
    limits = limits or ExplorationLimits()
    seed = canonical_form(q)
    return _bfs(
        seed,
        key_of=lambda x: x.b,
        quiver_of=lambda x: x,
        children=lambda x: [(v, canonical_form(mutate(x, v))) for v in x.vertices],
        limits=limits,
        fingerprint=_quiver_fingerprint,
    )


def forkless_part(q: Quiver, limits: Optional[ExplorationLimits] = None) -> ClassReport:
    """Klasa mutacyjna, w której widelec mutujemy tylko w jego punkcie powrotu."""
    limits = limits or ExplorationLimits()

    def children(x: Quiver):
        point = is_fork(x)
        verts = [point] if point is not None else list(x.vertices)
        return [(v, canonical_form(mutate(x, v))) for v in verts]

    report = _bfs(
        canonical_form(q),
        key_of=lambda x: x.b,
        quiver_of=lambda x: x,
        children=children,
        limits=limits,
        fingerprint=_quiver_fingerprint,
    )
    for node in report.nodes:
        node.fingerprint["fork"] = is_fork(node.quiver) is not None
    return report


def proper_mutation_class(coq: CycOrderedQuiver, limits: Optional[ExplorationLimits] = None) -> ClassReport:
    """Klasy wiggli osiągalne mutacjami właściwymi, z dokładnością do przenumerowania."""
    limits = limits or ExplorationLimits()

    def children(x: CycOrderedQuiver):
        return [
            (v, proper_mutate(x, v))
            for v in x.quiver.vertices
            if is_proper_in_wiggle_class(x, v)
        ]

    return _bfs(
        coq,
        key_of=coq_key,
        quiver_of=lambda x: x.quiver,
        children=children,
        limits=limits,
        fingerprint=_coq_fingerprint,
        ordering_of=lambda x: x.ordering,
    )


# --------- kolizje ----------

@dataclass
class CollisionReport:
    table: pd.DataFrame
    # grupy nazw z tym samym Δ
    delta_groups: List[List[str]] = field(default_factory=list)
    # grupy nazw nierozróżnialne żadnym z liczonych niezmienników
    full_groups: List[List[str]] = field(default_factory=list)

    @property
    def resolved(self) -> List[List[str]]:
        """Kolizje Δ rozdzielone przez pozostałe niezmienniki."""
        unresolved = {tuple(g) for g in self.full_groups}
        return [g for g in self.delta_groups if tuple(g) not in unresolved]


def _groups(frame: pd.DataFrame, columns: Sequence[str]) -> List[List[str]]:
    out = []
    for _, group in frame.groupby(list(columns), sort=True):
        if len(group) >= 2:
            out.append(sorted(group["name"]))
    return sorted(out)


def collision_scan(
    family: Sequence[Quiver],
    k_list: Iterable[int] = (),
    names: Optional[Sequence[str]] = None,
    orders: Optional[Sequence[Sequence[str]]] = None,
    frobenius: bool = True,
) -> CollisionReport:
    """Grupuje kołczany po (Δ, multizbiór NWD, d_k, czynniki Frobeniusa)."""
    names = list(names) if names is not None else [f"Q{i + 1}" for i in range(len(family))]
    if len(names) != len(family):
        raise DomainError("one name per family member is required")
    ks = sorted(set(k_list))
    rows = []
    for i, (name, q) in enumerate(zip(names, family)):
        order = orders[i] if orders is not None else q.vertices
        u = unipotent_companion(q, order)
        lattices = lattices_of_companion(u, [k for k in ks if k <= q.n])
        row = {
            "name": name,
            "n": q.n,
            "delta": str(alexander_of_companion(u)),
            "markov": markov_of_companion(u),
            "det_b": det_b(q),
            "gcd": ",".join(str(x) for x in gcd_multiset(u)),
            "frobenius": " | ".join(str(p) for p in frobenius_form(cosquare(u))) if frobenius else "",
        }
        for k in ks:
            row[f"d{k}"] = str(lattices[k].as_lists()) if k in lattices else ""
        rows.append(row)
    frame = pd.DataFrame(rows)
    if frame.empty:
        return CollisionReport(frame)
    key = ["delta", "gcd", "frobenius"] + [f"d{k}" for k in ks]
    report = CollisionReport(frame, _groups(frame, ["delta"]), _groups(frame, key))
    logger.info(
        "Collision scan over %d quivers: %d Δ-groups, %d unresolved",
        len(frame), len(report.delta_groups), len(report.full_groups),
    )
    return report


# --------- DOT ----------

def exchange_graph_dot(report: ClassReport, name: str = "exchange") -> str:
    lines = [f"graph {name} {{"]
    for i, node in enumerate(report.nodes):
        label = f"{i}"
        if node.ordering is not None:
            label += f"\\n{node.ordering}"
        lines.append(f'  n{i} [label="{label}"];')
    drawn = set()
    for a, b, vertex in report.edges:
        key = (min(a, b), max(a, b), vertex)
        if a == b or key in drawn:
            continue
        drawn.add(key)
        lines.append(f'  n{a} -- n{b} [label="{vertex}"];')
    lines.append("}")
    return "\n".join(lines)
