# application/properness.py
"""
Wierzchołki właściwe (punktowo i w klasie wiggli), mutacja właściwa, COQ właściwe,
porządek-kandydat, porządki z 3-kolorowania, weryfikacja "totally proper"
oraz dopuszczalność (quasi-Cartan, homomorfizmy do Z/2).
"""
from __future__ import annotations

import itertools
import logging
from collections import deque
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from core import linalg
from core.config import Config
from core.errors import DomainError
from domain.cyclic_order import CycOrderedQuiver, CyclicOrdering
from domain.graph import (
    Cycle,
    SpanningForest,
    chordless_cycles,
    signed_edge_vector,
    underlying_graph,
)
from domain.models import (
    CandidateOrdering,
    Gf2Assignment,
    InOutSets,
    QuasiCartan,
    TotallyProperVerdict,
    UnipotentCompanion,
    freeze,
)
from domain.quiver import Quiver, is_fork, mutate
from application.orderings import (
    _solve_ordering,
    backward_steps,
    construct_with_right_turns,
    forward_steps,
    winding,
    winding_signature,
)

logger = logging.getLogger(__name__)


def in_out(q: Quiver, j: str) -> InOutSets:
    i = q.index(j)
    ins = frozenset(q.vertices[k] for k in range(q.n) if q.b[k][i] > 0)
    outs = frozenset(q.vertices[k] for k in range(q.n) if q.b[i][k] > 0)
    return InOutSets(ins, outs)


def is_proper_vertex(coq: CycOrderedQuiver, j: str) -> bool:
    """Każda ścieżka u -> j -> v skręca w prawo: θ(u,j) + θ(j,v) <= n - 1."""
    io = in_out(coq.quiver, j)
    limit = coq.n - 1
    return all(coq.theta(u, j) + coq.theta(j, v) <= limit for u in io.ins for v in io.outs)


def _proper_on_cycle(coq: CycOrderedQuiver, c: Cycle, j: str) -> bool:
    """Właściwość j w klasie wiggli podCOQ-a na cyklu bezcięciwowym c."""
    q = coq.quiver
    vs = c.vertices
    i = vs.index(j)
    prev, nxt = vs[i - 1], vs[(i + 1) % len(vs)]
    into = q.weight(prev, j) > 0
    onward = q.weight(j, nxt) > 0
    if into != onward:
        # źródło albo ujście na cyklu
        return True
    w = winding(coq, c)
    if into:
        return w < forward_steps(q, c) - 1
    return w > 1 - backward_steps(q, c)


def is_proper_in_wiggle_class(coq: CycOrderedQuiver, j: str, cap: Optional[int] = None) -> bool:
    coq.quiver.index(j)
    cycles = chordless_cycles(underlying_graph(coq.quiver), cap)
    return all(_proper_on_cycle(coq, c, j) for c in cycles if j in c.vertices)


def proper_vertices(coq: CycOrderedQuiver, cap: Optional[int] = None) -> List[str]:
    cycles = chordless_cycles(underlying_graph(coq.quiver), cap)
    return [
        j
        for j in coq.quiver.vertices
        if all(_proper_on_cycle(coq, c, j) for c in cycles if j in c.vertices)
    ]


def improper_vertices(coq: CycOrderedQuiver, cap: Optional[int] = None) -> List[str]:
    good = set(proper_vertices(coq, cap))
    return [j for j in coq.quiver.vertices if j not in good]


def pointwise_proper_vertices(coq: CycOrderedQuiver) -> List[str]:
    return [j for j in coq.quiver.vertices if is_proper_vertex(coq, j)]


def is_proper_coq(coq: CycOrderedQuiver, cap: Optional[int] = None) -> bool:
    return not improper_vertices(coq, cap)


def realize_proper_at(coq: CycOrderedQuiver, j: str) -> Optional[CycOrderedQuiver]:
    if is_proper_vertex(coq, j):
        return coq
    io = in_out(coq.quiver, j)
    turns = [(u, j, v) for u in sorted(io.ins) for v in sorted(io.outs)]
    sigma = construct_with_right_turns(coq, turns)
    return None if sigma is None else coq.with_ordering(sigma)


def _last_out_clockwise(sigma: CyclicOrdering, j: str, outs) -> Optional[str]:
    anchor = None
    start = sigma.position(j)
    for step in range(1, sigma.n):
        v = sigma.arrangement[(start + step) % sigma.n]
        if v in outs:
            anchor = v
    return anchor


def proper_mutate(coq: CycOrderedQuiver, j: str) -> CycOrderedQuiver:
    """μ_j z przestawieniem j tuż za ostatni (zgodnie z zegarem) element Out(j)."""
    realized = realize_proper_at(coq, j)
    if realized is None:
        raise DomainError(f"vertex {j!r} is not proper in the wiggle class of {coq.ordering}")
    outs = in_out(coq.quiver, j).outs
    sigma = realized.ordering
    anchor = _last_out_clockwise(sigma, j, outs)
    if anchor is not None:
        sigma = sigma.moved_after(j, anchor)
    return CycOrderedQuiver(mutate(coq.quiver, j), sigma)


def linear_order_for_mutation(coq: CycOrderedQuiver, j: str) -> Tuple[str, ...]:
    """Obrót porządku, w którym In(j) < j < Out(j); wymaga właściwości j punktowo."""
    if not is_proper_vertex(coq, j):
        raise DomainError(f"vertex {j!r} is not proper in {coq.ordering}")
    sigma = coq.ordering
    anchor = _last_out_clockwise(sigma, j, in_out(coq.quiver, j).outs)
    start = sigma.successor(anchor if anchor is not None else j)
    return sigma.linear_from(start)


# --------- porządek-kandydat ----------

def cycle_target(q: Quiver, c: Cycle) -> int:
    """+1 dla cyklu zorientowanego zgodnie z obiegiem, -1 przeciwnie, 0 dla niezorientowanego."""
    if c.is_oriented_in(q):
        return 1
    if c.reversed().is_oriented_in(q):
        return -1
    return 0


def _independent_subset(q: Quiver, cycles: Sequence[Cycle]) -> List[Cycle]:
    g = underlying_graph(q)
    target = g.betti_number()
    chosen: List[Cycle] = []
    vectors: List[List[int]] = []
    for c in cycles:
        if len(chosen) == target:
            break
        vec = signed_edge_vector(g, c)
        if linalg.rank(vectors + [vec]) > len(chosen):
            chosen.append(c)
            vectors.append(vec)
    return chosen


def candidate_ordering(q: Quiver, exhaustive: bool = False, cap: Optional[int] = None) -> CandidateOrdering:
    """Jedyny możliwy (z dokładnością do wiggli) porządek totally proper albo brak."""
    cycles = chordless_cycles(underlying_graph(q), cap)
    constrained = list(cycles) if exhaustive else _independent_subset(q, cycles)
    sigma = _solve_ordering(q, constrained, [cycle_target(q, c) for c in constrained])
    if sigma is None:
        return CandidateOrdering(None)
    coq = CycOrderedQuiver(q, sigma)
    violations = []
    for c in cycles:
        want, got = cycle_target(q, c), winding(coq, c)
        if want != got:
            violations.append((c, want, got))
    if violations:
        logger.info("Candidate ordering %s violates %d chordless cycles", sigma, len(violations))
    return CandidateOrdering(sigma, violations)


def ordering_from_coloring(q: Quiver, colors: Mapping[str, int]) -> CyclicOrdering:
    allowed = {(-1, 0), (0, 1), (1, -1)}
    for v in q.vertices:
        if colors.get(v) not in (-1, 0, 1):
            raise DomainError(f"vertex {v!r} needs a color in {{-1, 0, 1}}")
    for src, tgt, _ in q.arrows():
        if (colors[src], colors[tgt]) not in allowed:
            raise DomainError(f"arrow {src}->{tgt} goes from color {colors[src]} to {colors[tgt]}")
    blocks = [sorted(v for v in q.vertices if colors[v] == c) for c in (-1, 0, 1)]
    return CyclicOrdering(tuple(itertools.chain.from_iterable(blocks)))


# --------- totally proper ----------

def _state_key(coq: CycOrderedQuiver) -> Tuple:
    return coq.quiver.b, winding_signature(coq).winds


def verify_totally_proper(coq: CycOrderedQuiver, budget: Optional[int] = None) -> TotallyProperVerdict:
    """BFS po klasach wiggli przez mutacje właściwe; widelec rozwijany tylko w punkcie powrotu."""
    budget = Config.TP_BUDGET if budget is None else budget
    if budget <= 0:
        raise DomainError("budget must be positive")
    bad = improper_vertices(coq)
    if bad:
        return TotallyProperVerdict(TotallyProperVerdict.REFUTED, 0, coq, bad[0], [])
    seen = {_state_key(coq)}
    queue = deque([(coq, [])])
    explored = 0
    while queue:
        if explored >= budget:
            logger.info("Total-properness search stopped after %d classes", explored)
            return TotallyProperVerdict(TotallyProperVerdict.BUDGET_EXCEEDED, explored)
        node, path = queue.popleft()
        explored += 1
        fork_point = is_fork(node.quiver)
        for j in node.quiver.vertices:
            if fork_point is not None and j != fork_point:
                continue
            child = proper_mutate(node, j)
            child_path = path + [j]
            bad = improper_vertices(child)
            if bad:
                logger.info("Improper COQ reached via %s", child_path)
                return TotallyProperVerdict(TotallyProperVerdict.REFUTED, explored, child, bad[0], child_path)
            key = _state_key(child)
            if key not in seen:
                seen.add(key)
                queue.append((child, child_path))
    logger.info("Proper mutation class closed after %d classes", explored)
    return TotallyProperVerdict(TotallyProperVerdict.VERIFIED, explored)


# --------- quasi-Cartan i Z/2 ----------

def quasi_cartan(u: UnipotentCompanion) -> QuasiCartan:
    m = u.matrix()
    n = u.n
    return QuasiCartan(freeze([[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]), u.order)


def _is_oriented_cycle(q: Quiver, c: Cycle) -> bool:
    return c.is_oriented_in(q) or c.reversed().is_oriented_in(q)


def is_admissible(a: QuasiCartan, q: Quiver, cap: Optional[int] = None) -> bool:
    if sorted(a.order) != sorted(q.vertices):
        raise DomainError("quasi-Cartan companion is built over a different vertex set")
    for c in chordless_cycles(underlying_graph(q), cap):
        positive = sum(1 for x, y in c.steps() if a.entry(x, y) > 0)
        if positive % 2 != (1 if _is_oriented_cycle(q, c) else 0):
            return False
    return True


def _solve_gf2(rows: Sequence[Tuple[int, int]], width: int) -> Optional[List[int]]:
    """Rozwiązanie układu nad GF(2); wiersz = (maska bitowa współczynników, prawa strona)."""
    pivots: Dict[int, Tuple[int, int]] = {}
    for mask, rhs in rows:
        for bit in sorted(pivots, reverse=True):
            if mask >> bit & 1:
                pmask, prhs = pivots[bit]
                mask ^= pmask
                rhs ^= prhs
        if mask == 0:
            if rhs:
                return None
            continue
        top = mask.bit_length() - 1
        # redukcja istniejących wierszy, żeby pivoty były jedynymi jedynkami w swoich kolumnach
        for bit, (pmask, prhs) in list(pivots.items()):
            if pmask >> top & 1:
                pivots[bit] = (pmask ^ mask, prhs ^ rhs)
        pivots[top] = (mask, rhs)
    values = [0] * width
    for bit, (_, rhs) in pivots.items():
        values[bit] = rhs
    return values


def admissible_homomorphism(q: Quiver, cap: Optional[int] = None) -> Optional[Gf2Assignment]:
    g = underlying_graph(q)
    forest = SpanningForest.build(g)
    basis = forest.fundamental_cycles()
    rows = []
    for c in chordless_cycles(g, cap):
        coords = forest.gf2_coordinates(c)
        mask = sum(1 << i for i, bit in enumerate(coords) if bit)
        rows.append((mask, 1 if _is_oriented_cycle(q, c) else 0))
    values = _solve_gf2(rows, len(basis))
    if values is None:
        return None
    return Gf2Assignment(tuple(basis), tuple(values))
