# core/linalg.py
"""
Dokładna algebra liniowa na macierzach całkowitych (listy list intów).

Wszystko na intach Pythona (dowolna precyzja) albo na Fraction – żadnych floatów.
"""
from __future__ import annotations

import itertools
import math
from bisect import bisect_left
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import InvariantViolation, ResourceLimitError

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in m]


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def congruence(g: Sequence[Sequence[int]], u: Sequence[Sequence[int]]) -> Matrix:
    """G·U·Gᵀ."""
    return matmul(matmul(g, u), transpose(g))


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """P z P[a][perm[a]] = 1, czyli (P M Pᵀ)[a][b] = M[perm[a]][perm[b]]."""
    n = len(perm)
    p = [[0] * n for _ in range(n)]
    for a, src in enumerate(perm):
        p[a][src] = 1
    return p


def is_unipotent_upper(u: Sequence[Sequence[int]]) -> bool:
    n = len(u)
    for i in range(n):
        if u[i][i] != 1:
            return False
        for j in range(i):
            if u[i][j] != 0:
                return False
    return True


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Wyznacznik metodą Bareissa (bez ułamków, z zamianą wierszy)."""
    n = len(m)
    if n == 0:
        return 1
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                # dzielenie zawsze dokładne
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def rank(m: Sequence[Sequence[int]]) -> int:
    """Rząd nad Q (eliminacja Gaussa na Fraction)."""
    rows = [[Fraction(x) for x in row] for row in m if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                factor = f / p
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def unipotent_inverse(u: Sequence[Sequence[int]]) -> Matrix:
    """Odwrotność macierzy unipotentnej górnotrójkątnej (podstawianie wstecz)."""
    n = len(u)
    x = [[0] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(n):
            s = 1 if i == j else 0
            for k in range(i + 1, n):
                if u[i][k]:
                    s -= u[i][k] * x[k][j]
            x[i][j] = s
    return x


def trace(m: Sequence[Sequence[int]]) -> int:
    return sum(m[i][i] for i in range(len(m)))


# ---------------- interpolacja ----------------

@lru_cache(maxsize=64)
def _vandermonde_inverse(k: int) -> Tuple[Tuple[Tuple[int, ...], ...], int]:
    """(A, D) takie, że V⁻¹ = A / D dla węzłów t = 0..k."""
    size = k + 1
    v = [[Fraction(t) ** p for p in range(size)] for t in range(size)]
    # Gauss-Jordan na [V | I]
    aug = [row + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(v)]
    for col in range(size):
        pivot = next(i for i in range(col, size) if aug[i][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(size):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    inv = [row[size:] for row in aug]
    denom = 1
    for row in inv:
        for x in row:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    a = tuple(tuple(int(x * denom) for x in row) for row in inv)
    return a, denom


def interpolate(values: Sequence[int]) -> List[int]:
    """Współczynniki (od wyrazu wolnego) wielomianu o wartościach values[t] w t = 0..k."""
    k = len(values) - 1
    if k < 0:
        return []
    a, denom = _vandermonde_inverse(k)
    coeffs = []
    for row in a:
        s = sum(x * y for x, y in zip(row, values))
        if s % denom:
            raise InvariantViolation("interpolated coefficient is not an integer")
        coeffs.append(s // denom)
    return coeffs


MinorTable = Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int]


def minor_levels(m: Sequence[Sequence[int]], max_k: int, cap: Optional[int] = None) -> List[MinorTable]:
    """Minory wszystkich rozmiarów 0..max_k, rozwinięcie Laplace'a z zapamiętywaniem.

    levels[k] mapuje (wiersze, kolumny) – rosnące krotki indeksów – na minor k×k.
    """
    n = len(m)
    ncols = len(m[0]) if n else 0
    if cap is not None:
        for k in range(max_k + 1):
            count = math.comb(n, k) * math.comb(ncols, k)
            if count > cap:
                raise ResourceLimitError(f"{count} minors of size {k} exceed the cap {cap}")
    prev: MinorTable = {((), ()): 1}
    levels = [prev]
    for size in range(1, max_k + 1):
        cur: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
        # wiersze R zawsze są "ogonem" większego zbioru przy rozwinięciu po pierwszym wierszu
        for rows in itertools.combinations(range(n), size):
            first = m[rows[0]]
            tail = rows[1:]
            for cols in itertools.combinations(range(ncols), size):
                total = 0
                for pos, c in enumerate(cols):
                    entry = first[c]
                    if entry:
                        sub = prev[(tail, cols[:pos] + cols[pos + 1:])]
                        if sub:
                            total += -entry * sub if pos % 2 else entry * sub
                cur[(rows, cols)] = total
        prev = cur
        levels.append(cur)
    return levels


def all_minors(m: Sequence[Sequence[int]], k: int, cap: Optional[int] = None) -> MinorTable:
    """Wszystkie minory k×k."""
    return minor_levels(m, k, cap)[k]


# ---------------- HNF ----------------

def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(x, y, g) z x·a + y·b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


class HermiteBasis:
    """Przyrostowa baza kraty w postaci schodkowej (wiersze), domykana do HNF w `rows()`."""

    def __init__(self, dimension: int) -> None:
        self.dimension = dimension
        self._basis: List[List[int]] = []
        self._pivots: List[int] = []

    def add_vector(self, vec0: Sequence[int]) -> None:
        if len(vec0) != self.dimension:
            raise ValueError("vector length does not match lattice dimension")
        vec = list(vec0)
        for j in range(self.dimension):
            b = vec[j]
            if b == 0:
                continue
            where = bisect_left(self._pivots, j)
            if where == len(self._pivots) or self._pivots[where] != j:
                # nowy pivot w kolumnie j
                self._basis.insert(where, vec)
                self._pivots.insert(where, j)
                return
            row = self._basis[where]
            a = row[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, self.dimension):
                    vec[jj] -= q * row[jj]
            elif a % b == 0:
                row[j:], vec[j:] = vec[j:], row[j:]
                q = a // b
                for jj in range(j, self.dimension):
                    vec[jj] -= q * row[jj]
            else:
                x, y, g = xgcd(a, b)
                ag = a // g
                mbg = -b // g
                for jj in range(j, self.dimension):
                    aa = row[jj]
                    bb = vec[jj]
                    row[jj] = x * aa + y * bb
                    vec[jj] = mbg * aa + ag * bb

    def rows(self) -> List[Tuple[int, ...]]:
        """HNF: dodatnie pivoty, wpisy nad pivotem zredukowane do [0, pivot)."""
        basis = [list(r) for r in self._basis]
        for p, j in enumerate(self._pivots):
            if basis[p][j] < 0:
                basis[p] = [-x for x in basis[p]]
            pivot = basis[p][j]
            for r in range(p):
                q = basis[r][j] // pivot
                if q:
                    basis[r] = [x - q * y for x, y in zip(basis[r], basis[p])]
        return [tuple(r) for r in basis]


def hermite_normal_form(vectors: Sequence[Sequence[int]], dimension: int) -> List[Tuple[int, ...]]:
    h = HermiteBasis(dimension)
    for v in vectors:
        if any(v):
            h.add_vector(v)
    return h.rows()
