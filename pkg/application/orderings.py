# application/orderings.py
"""
Porządki cykliczne: odległości, liczby nawinięć, wiggle, rozstrzyganie równoważności,
konstrukcja porządku z zadanych nawinięć (dokładny simpleks) i jawna ścieżka wiggli.
"""
from __future__ import annotations

import itertools
import logging
from collections import deque
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from core import linalg
from core.config import Config
from core.errors import DomainError, InvariantViolation, ResourceLimitError
from core.simplex import LinearSystem, find_feasible_point
from domain.cyclic_order import CycOrderedQuiver, CyclicOrdering, Wiggle, WindingSignature
from domain.graph import (
    Cycle,
    SimpleGraph,
    SpanningForest,
    chordless_cycles,
    homology_basis,
    signed_edge_vector,
    underlying_graph,
)
from domain.quiver import Quiver, opposite_arrows

logger = logging.getLogger(__name__)


def distance(sigma: CyclicOrdering, a: str, b: str) -> int:
    return sigma.distance(a, b)


def backward_steps(q: Quiver, c: Cycle) -> int:
    """ℓ: liczba strzałek skierowanych przeciw obiegowi."""
    return sum(1 for u, v in c.steps() if q.weight(v, u) > 0)


def forward_steps(q: Quiver, c: Cycle) -> int:
    return sum(1 for u, v in c.steps() if q.weight(u, v) > 0)


def _winding_under(q: Quiver, sigma: CyclicOrdering, c: Cycle) -> int:
    total = 0
    back = 0
    for u, v in c.steps():
        w = q.weight(u, v)
        if w == 0:
            raise DomainError(f"cycle {c} uses {u}-{v}, which is not an edge of the quiver")
        if w < 0:
            back += 1
        total += sigma.distance(u, v)
    n = sigma.n
    if total % n:
        raise InvariantViolation(f"winding of {c} is not an integer ({total}/{n})")
    return total // n - back


def winding(coq: CycOrderedQuiver, c: Cycle) -> int:
    return _winding_under(coq.quiver, coq.ordering, c)


def winding_bounds(q: Quiver, c: Cycle) -> Tuple[int, int]:
    """(1 - ℓ, r - 1) dla kołczana-cyklu bezcięciwowego."""
    return 1 - backward_steps(q, c), forward_steps(q, c) - 1


def extreme_orderings(q: Quiver, c: Cycle) -> Tuple[CyclicOrdering, CyclicOrdering]:
    """Porządki podkołczana na cyklu c osiągające odpowiednio najmniejsze i największe nawinięcie."""
    low = CyclicOrdering.of(c.vertices)
    return low, low.reversed()


def winding_signature(coq: CycOrderedQuiver) -> WindingSignature:
    basis = homology_basis(underlying_graph(coq.quiver))
    return WindingSignature.of(basis, [winding(coq, c) for c in basis])


# --------- wiggle ----------

def is_wiggle(coq: CycOrderedQuiver, u: str, v: str) -> bool:
    if u == v or u not in coq.ordering or v not in coq.ordering:
        return False
    return coq.ordering.are_consecutive(u, v) and not coq.quiver.adjacent(u, v)


def apply_wiggle(coq: CycOrderedQuiver, u: str, v: str) -> CycOrderedQuiver:
    if not is_wiggle(coq, u, v):
        raise DomainError(f"({u},{v}) is not a valid wiggle in {coq.ordering}")
    return coq.with_ordering(coq.ordering.swapped(u, v))


def available_wiggles(coq: CycOrderedQuiver) -> List[Wiggle]:
    seq = coq.ordering.arrangement
    n = len(seq)
    if n < 3:
        return []
    out = set()
    for i in range(n):
        u, v = seq[i], seq[(i + 1) % n]
        if not coq.quiver.adjacent(u, v):
            out.add(Wiggle.of(u, v))
    return sorted(out, key=lambda w: w.pair)


def wiggle_class(coq: CycOrderedQuiver) -> List[CyclicOrdering]:
    """Cała klasa wiggli – przeszukiwanie wszerz, wynik posortowany."""
    seen = {coq.ordering}
    queue = deque([coq.ordering])
    while queue:
        sigma = queue.popleft()
        current = coq.with_ordering(sigma)
        for w in available_wiggles(current):
            nxt = sigma.swapped(*w.pair)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda s: s.arrangement)


def all_cyclic_orderings(vertices: Sequence[str]) -> List[CyclicOrdering]:
    if not vertices:
        return [CyclicOrdering(())]
    first = min(vertices)
    rest = sorted(v for v in vertices if v != first)
    return [CyclicOrdering((first,) + perm) for perm in itertools.permutations(rest)]


def wiggle_equivalent(q: Quiver, sigma: CyclicOrdering, sigma2: CyclicOrdering) -> bool:
    a = CycOrderedQuiver(q, sigma)
    b = CycOrderedQuiver(q, sigma2)
    return all(winding(a, c) == winding(b, c) for c in homology_basis(underlying_graph(q)))


def opposite(coq: CycOrderedQuiver) -> CycOrderedQuiver:
    return CycOrderedQuiver(opposite_arrows(coq.quiver), coq.ordering.reversed())


# --------- konstrukcja porządku (program liniowy) ----------

def _theta_term(g: SimpleGraph, index: Dict[Tuple[str, str], int], a: str, b: str) -> Tuple[int, int]:
    """θ(a,b) = const + sign·θ_e dla krawędzi e łączącej a i b."""
    if (a, b) in index:
        return index[(a, b)], 1
    return index[(b, a)], -1


def _solve_ordering(
    q: Quiver,
    cycles: Sequence[Cycle],
    winds: Sequence[int],
    right_turns: Sequence[Tuple[str, str, str]] = (),
) -> Optional[CyclicOrdering]:
    """Szuka porządku o zadanych nawinięciach; opcjonalnie z warunkami skrętu w prawo (u, j, v)."""
    g = underlying_graph(q)
    n = q.n
    if n == 0:
        return CyclicOrdering(())
    index = g.edge_index()
    # θ_e = 1 + y_e, 0 <= y_e <= n - 2
    system = LinearSystem(num_vars=len(g.edges))
    for e in range(len(g.edges)):
        system.add_bound(e, n - 2)
    for c, w in zip(cycles, winds):
        coeffs: Dict[int, int] = {}
        fwd = bwd = 0
        for a, b in c.steps():
            e, sgn = _theta_term(g, index, a, b)
            coeffs[e] = coeffs.get(e, 0) + sgn
            if sgn > 0:
                fwd += 1
            else:
                bwd += 1
        ell = backward_steps(q, c)
        rhs = n * (ell + w - bwd) - fwd + bwd
        system.add_equality({e: a for e, a in coeffs.items() if a}, rhs)
    for u, j, v in right_turns:
        # θ(u,j) + θ(j,v) <= n - 1
        coeffs = {}
        const = 0
        for a, b in ((u, j), (j, v)):
            e, sgn = _theta_term(g, index, a, b)
            coeffs[e] = coeffs.get(e, 0) + sgn
            const += 1 if sgn > 0 else n - 1
        system.add_upper({e: a for e, a in coeffs.items() if a}, n - 1 - const)
    point = find_feasible_point(system)
    if point is None:
        logger.debug("Ordering LP infeasible (%d cycles, %d right turns)", len(cycles), len(right_turns))
        return None
    theta = {edge: 1 + point[i] for edge, i in index.items()}
    return ordering_from_point(g, theta, n)


def ordering_from_point(g: SimpleGraph, theta: Dict[Tuple[str, str], Fraction], n: int) -> CyclicOrdering:
    """Potencjały wzdłuż lasu rozpinającego, pozycje mod n, remisy po nazwie."""
    forest = SpanningForest.build(g)
    potential: Dict[str, Fraction] = {}
    for v in forest.order:
        p = forest.parent[v]
        if p is None:
            potential[v] = Fraction(0)
        elif (p, v) in theta:
            potential[v] = potential[p] + theta[(p, v)]
        else:
            potential[v] = potential[p] + n - theta[(v, p)]
    ranked = sorted(g.vertices, key=lambda v: (potential[v] % n, v))
    return CyclicOrdering(tuple(ranked))


def _check_spanning(g: SimpleGraph, cycles: Sequence[Cycle]) -> None:
    vectors = [signed_edge_vector(g, c) for c in cycles]
    if linalg.rank(vectors) != g.betti_number():
        raise DomainError("target cycles do not span the first homology of the quiver")


def _implied_windings(g: SimpleGraph, targets: WindingSignature, cycles: Sequence[Cycle]) -> List[int]:
    """Nawinięcia cykli wyznaczone przez sygnaturę (rozkład wektora krawędzi w bazie)."""
    if not cycles:
        return []
    basis = sympy.Matrix([signed_edge_vector(g, c) for c in targets.basis]).T
    rhs = sympy.Matrix([signed_edge_vector(g, c) for c in cycles]).T
    coeffs, params = basis.gauss_jordan_solve(rhs)
    # baza może być nadmiarowa; wolne parametry = 0
    coeffs = coeffs.subs({p: 0 for p in params})
    values = sympy.Matrix([list(targets.winds)]) * coeffs
    implied = []
    for c, value in zip(cycles, values):
        if not value.is_integer:
            raise InvariantViolation(f"winding of {c} implied by the targets is not an integer")
        implied.append(int(value))
    return implied


def construct_ordering(q: Quiver, targets: WindingSignature) -> Optional[CyclicOrdering]:
    g = underlying_graph(q)
    _check_spanning(g, targets.basis)
    sigma = _solve_ordering(q, targets.basis, targets.winds)
    if sigma is None:
        return None
    try:
        cycles = chordless_cycles(g, Config.CHORDLESS_CAP)
    except ResourceLimitError:
        logger.info("Too many chordless cycles; checking the constructed ordering on the targets only")
        cycles, expected = list(targets.basis), list(targets.winds)
    else:
        expected = _implied_windings(g, targets, cycles)
    for c, w in zip(cycles, expected):
        got = _winding_under(q, sigma, c)
        if got != w:
            raise InvariantViolation(f"constructed ordering winds {c} {got} times, expected {w}")
    return sigma


def construct_with_right_turns(
    coq: CycOrderedQuiver, right_turns: Sequence[Tuple[str, str, str]]
) -> Optional[CyclicOrdering]:
    """Porządek z klasy wiggli coq, w którym wszystkie ścieżki (u, j, v) skręcają w prawo."""
    sig = winding_signature(coq)
    sigma = _solve_ordering(coq.quiver, sig.basis, sig.winds, right_turns)
    if sigma is None:
        return None
    for c, w in zip(sig.basis, sig.winds):
        if _winding_under(coq.quiver, sigma, c) != w:
            raise InvariantViolation(f"constructed ordering leaves the wiggle class on {c}")
    for u, j, v in right_turns:
        if sigma.distance(u, j) + sigma.distance(j, v) > coq.n - 1:
            raise InvariantViolation(f"constructed ordering turns left at {j}")
    return sigma


# --------- ścieżka wiggli ----------

def _unrolled_positions(g: SimpleGraph, forest: SpanningForest, sigma: CyclicOrdering) -> Dict[str, int]:
    pos: Dict[str, int] = {}
    for v in forest.order:
        p = forest.parent[v]
        pos[v] = sigma.position(v) if p is None else pos[p] + sigma.distance(p, v)
    return pos


def wiggle_path(q: Quiver, sigma: CyclicOrdering, sigma2: CyclicOrdering) -> List[Wiggle]:
    """Ciąg wiggli przeprowadzający sigma w sigma2 (kolizje przy liniowej interpolacji pozycji)."""
    if not wiggle_equivalent(q, sigma, sigma2):
        raise DomainError("orderings are not wiggle equivalent")
    if sigma == sigma2:
        return []
    n = q.n
    g = underlying_graph(q)
    forest = SpanningForest.build(g)
    start = _unrolled_positions(g, forest, sigma)
    end = _unrolled_positions(g, forest, sigma2)
    slope = {v: end[v] - start[v] for v in q.vertices}

    events: Dict[Tuple[Fraction, Fraction], set] = {}
    for u, v in itertools.combinations(q.vertices, 2):
        if q.adjacent(u, v):
            continue
        a = start[v] - start[u]
        b = slope[v] - slope[u]
        if b == 0:
            continue
        lo, hi = min(a, a + b), max(a, a + b)
        for k in range(lo // n + 1, -(-hi // n)):
            t = Fraction(k * n - a, b)
            x = (start[u] + t * slope[u]) % n
            events.setdefault((t, x), set()).update((u, v))

    current = list(sigma.arrangement)
    path: List[Wiggle] = []
    for (t, x), block in sorted(events.items(), key=lambda kv: (kv[0][0], kv[0][1], min(kv[1]))):
        members = sorted(block, key=lambda v: -slope[v])
        where = {v: i for i, v in enumerate(current)}
        p = where[members[0]]
        if any(current[(p + i) % n] != v for i, v in enumerate(members)):
            raise InvariantViolation(f"collision block {members} at t={t} is not contiguous")
        m = len(members)
        for i in range(m):
            for j in range(m - 1 - i):
                a_pos, b_pos = (p + j) % n, (p + j + 1) % n
                path.append(Wiggle.of(current[a_pos], current[b_pos]))
                current[a_pos], current[b_pos] = current[b_pos], current[a_pos]
    if CyclicOrdering(tuple(current)) != sigma2:
        raise InvariantViolation("wiggle path does not end at the target ordering")
    logger.debug("Wiggle path of length %d from %s to %s", len(path), sigma, sigma2)
    return path


def apply_wiggle_path(coq: CycOrderedQuiver, path: Sequence[Wiggle]) -> CycOrderedQuiver:
    for w in path:
        coq = apply_wiggle(coq, *w.pair)
    return coq


def chordless_signature(coq: CycOrderedQuiver, cap: Optional[int] = None) -> List[Tuple[Cycle, int]]:
    cap = Config.CHORDLESS_CAP if cap is None else cap
    return [(c, winding(coq, c)) for c in chordless_cycles(underlying_graph(coq.quiver), cap)]
