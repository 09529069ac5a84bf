# application/invariants.py
"""
Towarzysze unipotentne i niezmienniki ich klas kongruencji: kokwadrat, wielomian
i kraty Alexandra, niezmiennik Markowa, multizbiór NWD, postać Frobeniusa
oraz jawni świadkowie kongruencji dla obrotu, wiggla i mutacji właściwej.
"""
from __future__ import annotations

import logging
import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from core import linalg
from core.config import Config
from core.errors import DomainError, InvariantViolation, ResourceLimitError
from domain.cyclic_order import CycOrderedQuiver
from domain.models import CongruenceWitness, InvariantReport, UnipotentCompanion, freeze
from domain.polynomial import T, IntPolynomial, PolyLattice
from domain.quiver import Quiver, det_b, mutate, rank_b

logger = logging.getLogger(__name__)


# --------- towarzysz unipotentny ----------

def unipotent_companion(q: Quiver, order: Sequence[str]) -> UnipotentCompanion:
    """U z U - Uᵀ = -B w porządku `order`."""
    b = q.reordered(order).b
    n = len(order)
    u = [[1 if i == j else (-b[i][j] if i < j else 0) for j in range(n)] for i in range(n)]
    return UnipotentCompanion(freeze(u), tuple(order))


def companion_to_quiver(u: UnipotentCompanion) -> Quiver:
    n = u.n
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            b[i][j] = -u.u[i][j]
            b[j][i] = u.u[i][j]
    return Quiver.from_matrix(u.order, b)


def cosquare(u: UnipotentCompanion) -> linalg.Matrix:
    """C = U^{-T} U."""
    inv = linalg.unipotent_inverse(u.u)
    return linalg.matmul(linalg.transpose(inv), u.u)


def _pencil_at(u: Sequence[Sequence[int]], t: int) -> linalg.Matrix:
    n = len(u)
    return [[t * u[i][j] - u[j][i] for j in range(n)] for i in range(n)]


# --------- wielomian Alexandra ----------

def _alexander_by_interpolation(u: Sequence[Sequence[int]]) -> IntPolynomial:
    n = len(u)
    values = [linalg.bareiss_det(_pencil_at(u, t)) for t in range(n + 1)]
    return IntPolynomial.of(linalg.interpolate(values))


def _alexander_by_charpoly(c: Sequence[Sequence[int]]) -> IntPolynomial:
    if not c:
        return IntPolynomial.of([1])
    return IntPolynomial.from_sympy(sympy.Matrix(c).charpoly(T).as_expr())


def alexander_of_companion(u: UnipotentCompanion) -> IntPolynomial:
    first = _alexander_by_interpolation(u.u)
    second = _alexander_by_charpoly(cosquare(u))
    if first != second:
        raise InvariantViolation(f"Alexander polynomial paths disagree: {first} vs {second}")
    return first


def alexander_polynomial(q: Quiver, order: Optional[Sequence[str]] = None) -> IntPolynomial:
    return alexander_of_companion(unipotent_companion(q, order or q.vertices))


def markov_of_companion(u: UnipotentCompanion) -> int:
    return u.n - linalg.trace(cosquare(u))


def markov_invariant(q: Quiver, order: Optional[Sequence[str]] = None) -> int:
    return markov_of_companion(unipotent_companion(q, order or q.vertices))


# --------- kraty Alexandra ----------

def lattices_of_companion(
    u: UnipotentCompanion, ks: Iterable[int], cap: Optional[int] = None
) -> Dict[int, PolyLattice]:
    """d_k dla wszystkich k z `ks`; minory liczone raz w punktach t = 0..max(ks)."""
    n = u.n
    ks = sorted(set(ks))
    if not ks:
        return {}
    if ks[0] < 1 or ks[-1] > n:
        raise DomainError(f"lattice index must lie in 1..{n}")
    cap = Config.MINOR_CAP if cap is None else cap
    top = ks[-1]
    for k in ks:
        if math.comb(n, k) ** 2 > cap:
            raise ResourceLimitError(f"{math.comb(n, k) ** 2} minors of size {k} exceed the cap {cap}")
    tables = [linalg.minor_levels(_pencil_at(u.u, t), top) for t in range(top + 1)]
    out: Dict[int, PolyLattice] = {}
    for k in ks:
        vectors = set()
        for key in tables[0][k]:
            coeffs = linalg.interpolate([tables[t][k][key] for t in range(k + 1)])
            if any(coeffs):
                vectors.add(tuple(coeffs))
        basis = linalg.hermite_normal_form(sorted(vectors), k + 1)
        out[k] = PolyLattice(k, tuple(basis))
        logger.debug("d_%d: %d generators, rank %d", k, len(vectors), len(basis))
    return out


def alexander_lattice(q: Quiver, order: Optional[Sequence[str]], k: int, cap: Optional[int] = None) -> PolyLattice:
    return lattices_of_companion(unipotent_companion(q, order or q.vertices), [k], cap)[k]


def lattice_equal(l1: PolyLattice, l2: PolyLattice) -> bool:
    if l1.degree_bound != l2.degree_bound:
        raise DomainError("lattices have different degree bounds")
    return l1.basis == l2.basis


# --------- multizbiór NWD ----------

def gcd_multiset(u: UnipotentCompanion) -> Tuple[int, ...]:
    n = u.n
    out = []
    for r in range(n):
        vals = [u.u[r][c] for c in range(n) if c != r] + [u.u[c][r] for c in range(n) if c != r]
        out.append(math.gcd(*vals) if vals else 0)
    return tuple(sorted(out))


# --------- świadkowie kongruencji ----------

def verify_witness(u: UnipotentCompanion, u2: UnipotentCompanion, g: Sequence[Sequence[int]]) -> bool:
    if linalg.bareiss_det(g) not in (1, -1):
        return False
    return freeze(linalg.congruence(g, u.u)) == u2.u


def _witness(g: Sequence[Sequence[int]], u: UnipotentCompanion, u2: UnipotentCompanion) -> CongruenceWitness:
    return CongruenceWitness(freeze(g), u.u, u2.u)


def cyclic_shift_witness(q: Quiver, order: Sequence[str]) -> Tuple[UnipotentCompanion, CongruenceWitness]:
    """Towarzysz dla porządku (v2, ..., vn, v1) i G z U' = G U Gᵀ."""
    u = unipotent_companion(q, order)
    n = u.n
    rotated = tuple(order[1:]) + tuple(order[:1])
    u2 = unipotent_companion(q, rotated)
    if n <= 1:
        return u2, _witness(linalg.identity(n), u, u2)
    k = linalg.identity(n)
    for j in range(1, n):
        k[j][0] = -u.u[0][j]
    p = linalg.permutation_matrix([(a + 1) % n for a in range(n)])
    return u2, _witness(linalg.matmul(p, k), u, u2)


def swap_matrix(n: int, k: int) -> linalg.Matrix:
    """s_k: permutacja pozycji k i k+1 (1-based)."""
    perm = list(range(n))
    perm[k - 1], perm[k] = perm[k], perm[k - 1]
    return linalg.permutation_matrix(perm)


def wiggle_witness(u: UnipotentCompanion, k: int) -> Tuple[UnipotentCompanion, CongruenceWitness]:
    """Zamiana pozycji k i k+1 (1-based); wymaga u[k][k+1] = 0."""
    n = u.n
    if not 1 <= k <= n - 1:
        raise DomainError(f"wiggle position {k} is out of range for n={n}")
    if u.u[k - 1][k] != 0:
        raise DomainError("wiggled vertices must not be adjacent in the quiver")
    s = swap_matrix(n, k)
    order = list(u.order)
    order[k - 1], order[k] = order[k], order[k - 1]
    u2 = UnipotentCompanion(freeze(linalg.congruence(s, u.u)), tuple(order))
    return u2, _witness(s, u, u2)


def proper_mutation_witness(
    q: Quiver, order: Sequence[str], k: int
) -> Tuple[UnipotentCompanion, CongruenceWitness]:
    """Towarzysz μ_k(Q) w porządku z k-tym (0-based) wierzchołkiem przeniesionym na początek."""
    n = len(order)
    if not 0 <= k < n:
        raise DomainError(f"position {k} is out of range for n={n}")
    u = unipotent_companion(q, order)
    b = q.reordered(order).b
    if any(b[i][k] < 0 for i in range(k)) or any(b[k][j] < 0 for j in range(k + 1, n)):
        raise DomainError(f"order does not place In({order[k]}) before it and Out({order[k]}) after it")
    g0 = linalg.identity(n)
    g0[k][k] = -1
    for i in range(k):
        g0[i][k] = -u.u[i][k]
    perm = [k] + [i for i in range(n) if i != k]
    g = linalg.matmul(linalg.permutation_matrix(perm), g0)
    new_order = [order[i] for i in perm]
    u2 = unipotent_companion(mutate(q, order[k]), new_order)
    return u2, _witness(g, u, u2)


# --------- postać Frobeniusa ----------

def _matrix_poly(m: sympy.Matrix, poly: sympy.Poly) -> sympy.Matrix:
    n = m.shape[0]
    acc = sympy.zeros(n, n)
    for c in poly.all_coeffs():
        acc = acc * m + c * sympy.eye(n)
    return acc


def frobenius_form(m: Sequence[Sequence[int]]) -> List[IntPolynomial]:
    """Czynniki niezmiennicze nad Q (rosnąco, każdy dzieli następny)."""
    n = len(m)
    if n == 0:
        return []
    mat = sympy.Matrix(m)
    char = sympy.Poly(mat.charpoly(T).as_expr(), T)
    _, factors = sympy.factor_list(char.as_expr(), T)
    per_factor: List[Tuple[sympy.Poly, List[int]]] = []
    for f_expr, mult in factors:
        f = sympy.Poly(f_expr, T)
        d = f.degree()
        fm = _matrix_poly(mat, f)
        ranks = [n]
        power = sympy.eye(n)
        for _ in range(mult):
            power = power * fm
            ranks.append(power.rank())
        # at_least[j] = liczba dzielników elementarnych f^e z e >= j
        at_least = [(ranks[j - 1] - ranks[j]) // d for j in range(1, mult + 1)]
        powers: List[int] = []
        for j in range(1, mult + 1):
            exact = at_least[j - 1] - (at_least[j] if j < mult else 0)
            powers.extend([j] * exact)
        per_factor.append((f, sorted(powers, reverse=True)))
    length = max(len(p) for _, p in per_factor)
    chain: List[IntPolynomial] = []
    for i in range(length):
        expr = sympy.Integer(1)
        for f, powers in per_factor:
            if i < len(powers):
                expr *= f.as_expr() ** powers[i]
        chain.append(_to_int_poly(expr))
    chain.reverse()
    return chain


def _to_int_poly(expr) -> IntPolynomial:
    poly = sympy.Poly(sympy.expand(expr), T)
    coeffs = list(reversed(poly.all_coeffs()))
    if any(not c.is_integer for c in coeffs):
        raise DomainError("invariant factor has non-integer coefficients")
    return IntPolynomial.of([int(c) for c in coeffs])


# --------- tożsamości ----------

def palindrome_check(p: IntPolynomial, n: int) -> bool:
    """Δ(t) = (-t)^n Δ(1/t)."""
    sign = -1 if n % 2 else 1
    return all(p.coefficient(i) == sign * p.coefficient(n - i) for i in range(n + 1))


def det_identity_check(q: Quiver, order: Optional[Sequence[str]] = None) -> bool:
    """det(B) = (-1)^n Δ(1)."""
    delta = alexander_polynomial(q, order)
    return det_b(q) == (-1) ** q.n * delta(1)


def four_vertex_check(q: Quiver, order: Optional[Sequence[str]] = None) -> bool:
    """Δ = (t-1)^4 + M·t(t-1)^2 + det(B)·t^2 dla n = 4."""
    if q.n != 4:
        raise DomainError("closed form applies to four-vertex quivers")
    t_minus_1 = IntPolynomial.of([-1, 1])
    expected = (
        t_minus_1 ** 4
        + IntPolynomial.monomial(1, markov_invariant(q, order)) * t_minus_1 ** 2
        + IntPolynomial.monomial(2, det_b(q))
    )
    return alexander_polynomial(q, order) == expected


# --------- raport ----------

def invariant_report(
    coq: CycOrderedQuiver, ks: Iterable[int] = (), frobenius: bool = True, cap: Optional[int] = None
) -> InvariantReport:
    order = coq.ordering.arrangement
    u = unipotent_companion(coq.quiver, order)
    report = InvariantReport(
        order=order,
        alexander=alexander_of_companion(u),
        markov=markov_of_companion(u),
        det_b=det_b(coq.quiver),
        rank_b=rank_b(coq.quiver),
        gcd_multiset=gcd_multiset(u),
        lattices=lattices_of_companion(u, ks, cap),
    )
    if frobenius:
        report.frobenius = frobenius_form(cosquare(u))
    return report
