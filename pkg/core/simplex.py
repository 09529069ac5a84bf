# core/simplex.py
"""
Dokładny simpleks (Fraction) do sprawdzania wykonalności układu liniowego.

Tablica w postaci słownikowej: A·x_N + x_B = b, funkcja celu c·x_N (maksymalizowana).
Pierwsza faza z regułą Blanda – wystarcza nam odpowiedź "wykonalny/niewykonalny" i punkt.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


@dataclass
class LinearSystem:
    """Zmienne x_0..x_{n-1} >= 0, wiersze równościowe i nierównościowe (<=)."""

    num_vars: int
    equalities: List[Tuple[Dict[int, int], int]] = field(default_factory=list)
    upper_rows: List[Tuple[Dict[int, int], int]] = field(default_factory=list)

    def add_equality(self, coeffs: Dict[int, int], rhs: int) -> None:
        self.equalities.append((dict(coeffs), rhs))

    def add_upper(self, coeffs: Dict[int, int], rhs: int) -> None:
        self.upper_rows.append((dict(coeffs), rhs))

    def add_bound(self, var: int, upper: int) -> None:
        self.upper_rows.append(({var: 1}, upper))


class FeasibilityTableau:
    """Tablica pierwszej fazy: każdy wiersz dostaje zmienną sztuczną jako bazową."""

    def __init__(self, system: LinearSystem) -> None:
        rows: List[Tuple[Dict[int, int], int]] = list(system.equalities)
        num_slacks = len(system.upper_rows)
        for s, (coeffs, rhs) in enumerate(system.upper_rows):
            row = dict(coeffs)
            row[system.num_vars + s] = 1
            rows.append((row, rhs))

        self.num_real = system.num_vars
        self.n = system.num_vars + num_slacks
        self.m = len(rows)
        zero = Fraction(0)
        self.A: List[List[Fraction]] = [[zero] * self.n for _ in range(self.m)]
        self.b: List[Fraction] = [zero] * self.m
        self.c: List[Fraction] = [zero] * self.n
        for i, (coeffs, rhs) in enumerate(rows):
            sgn = -1 if rhs < 0 else 1
            for var, a in coeffs.items():
                self.A[i][var] += Fraction(sgn * a)
            self.b[i] = Fraction(sgn * rhs)
        self.nb_vars = list(range(self.n))
        # zmienne sztuczne mają numery n..n+m-1
        self.b_vars = list(range(self.n, self.n + self.m))

    def is_artificial(self, var: int) -> bool:
        return var >= self.n

    def first_phase_cost(self) -> None:
        for j in range(self.n):
            self.c[j] = sum((self.A[i][j] for i in range(self.m)), Fraction(0))

    def pivot(self, i: int, j: int) -> None:
        logger.debug("Pivot %s -> %s (%s,%s)", self.b_vars[i], self.nb_vars[j], i, j)
        piv = self.A[i][j]
        delta = self.c[j] / piv
        # c
        for l in range(self.n):
            self.c[l] -= delta * self.A[i][l]
        self.c[j] = -delta
        # wiersz i
        row = self.A[i]
        for l in range(self.n):
            row[l] = 1 / piv if l == j else row[l] / piv
        self.b[i] /= piv
        # pozostałe wiersze
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if not f:
                continue
            other = self.A[k]
            for l in range(self.n):
                other[l] = -f / piv if l == j else other[l] - f * row[l]
            self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]

    def bland_primal_step(self) -> str:
        try:
            _, j = min((self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0)
        except ValueError:
            return "optimal"
        try:
            _, _, i = min(
                (self.b[i] / self.A[i][j], self.b_vars[i], i)
                for i in range(self.m)
                if self.A[i][j] > 0
            )
        except ValueError:
            return "unbounded"
        self.pivot(i, j)
        return "go_on"

    def bland_primal(self) -> str:
        steps = 0
        while True:
            ret = self.bland_primal_step()
            if ret != "go_on":
                logger.debug("Simplex finished after %d pivots: %s", steps, ret)
                return ret
            steps += 1

    def is_feasible(self) -> bool:
        return all(
            self.b[i] == 0 for i, var in enumerate(self.b_vars) if self.is_artificial(var)
        )

    def real_values(self) -> List[Fraction]:
        values = [Fraction(0)] * self.num_real
        for i, var in enumerate(self.b_vars):
            if var < self.num_real:
                values[var] = self.b[i]
        return values


def find_feasible_point(system: LinearSystem) -> Optional[List[Fraction]]:
    """Punkt spełniający układ albo None, gdy układ jest sprzeczny."""
    if not system.equalities and not system.upper_rows:
        return [Fraction(0)] * system.num_vars
    tableau = FeasibilityTableau(system)
    tableau.first_phase_cost()
    # pierwsza faza jest ograniczona przez sumę b, więc "unbounded" nie wystąpi
    tableau.bland_primal()
    if not tableau.is_feasible():
        return None
    return tableau.real_values()


def check_point(system: LinearSystem, point: Sequence[Fraction]) -> bool:
    for coeffs, rhs in system.equalities:
        if sum(point[v] * a for v, a in coeffs.items()) != rhs:
            return False
    for coeffs, rhs in system.upper_rows:
        if sum(point[v] * a for v, a in coeffs.items()) > rhs:
            return False
    return all(x >= 0 for x in point)
