# application/braid_action.py
"""
Działanie znakowanej grupy warkoczy na macierzach unipotentnych i kołczanach
z porządkiem liniowym. Słowa działają od lewej do prawej.
"""
from __future__ import annotations

import itertools
import re
from typing import List, Sequence, Tuple

from core import linalg
from core.errors import DomainError, ParseError
from domain.models import (
    BraidGenerator,
    BraidWord,
    CongruenceWitness,
    LinearlyOrderedQuiver,
    UnipotentCompanion,
    freeze,
)
from domain.quiver import is_sink, is_source
from application.invariants import companion_to_quiver, swap_matrix, unipotent_companion

_TOKEN = re.compile(r"^([sSr])(\d+)$")
_KIND = {"s": "sigma", "S": "sigma_inv", "r": "rho"}


def parse_word(text: str) -> BraidWord:
    """'s2 S1 r3' -> σ₂, σ₁⁻¹, ρ₃ (indeksy od 1)."""
    gens = []
    for token in text.replace(",", " ").split():
        m = _TOKEN.match(token)
        if not m:
            raise ParseError(f"bad braid generator {token!r}")
        gens.append(BraidGenerator(_KIND[m.group(1)], int(m.group(2))))
    return BraidWord(tuple(gens))


def _step(u: UnipotentCompanion, g: linalg.Matrix, order: Sequence[str]) -> Tuple[UnipotentCompanion, CongruenceWitness]:
    u2 = UnipotentCompanion(freeze(linalg.congruence(g, u.u)), tuple(order))
    return u2, CongruenceWitness(freeze(g), u.u, u2.u)


def _swapped_order(order: Sequence[str], k: int) -> List[str]:
    out = list(order)
    out[k - 1], out[k] = out[k], out[k - 1]
    return out


def act_sigma(u: UnipotentCompanion, k: int) -> Tuple[UnipotentCompanion, CongruenceWitness]:
    """G = s_k (I - u_{k,k+1} E_{k+1,k})."""
    BraidGenerator("sigma", k).check_size(u.n)
    e = linalg.identity(u.n)
    e[k][k - 1] = -u.u[k - 1][k]
    g = linalg.matmul(swap_matrix(u.n, k), e)
    return _step(u, g, _swapped_order(u.order, k))


def act_sigma_inverse(u: UnipotentCompanion, k: int) -> Tuple[UnipotentCompanion, CongruenceWitness]:
    """H = s_k (I - u_{k,k+1} E_{k,k+1})."""
    BraidGenerator("sigma_inv", k).check_size(u.n)
    e = linalg.identity(u.n)
    e[k - 1][k] = -u.u[k - 1][k]
    g = linalg.matmul(swap_matrix(u.n, k), e)
    return _step(u, g, _swapped_order(u.order, k))


def act_rho(u: UnipotentCompanion, i: int) -> Tuple[UnipotentCompanion, CongruenceWitness]:
    """Zmiana znaku wiersza i kolumny i; świadek J = diag(..., -1, ...)."""
    BraidGenerator("rho", i).check_size(u.n)
    j = linalg.identity(u.n)
    j[i - 1][i - 1] = -1
    return _step(u, j, u.order)


_ACTIONS = {"sigma": act_sigma, "sigma_inv": act_sigma_inverse, "rho": act_rho}


def act_generator(u: UnipotentCompanion, gen: BraidGenerator) -> Tuple[UnipotentCompanion, CongruenceWitness]:
    return _ACTIONS[gen.kind](u, gen.index)


def act_word_on_companion(u: UnipotentCompanion, w: BraidWord) -> Tuple[UnipotentCompanion, CongruenceWitness]:
    for gen in w.generators:
        gen.check_size(u.n)
    witness = CongruenceWitness.identity(u.u)
    for gen in w.generators:
        u, step = act_generator(u, gen)
        witness = witness.then(step)
    return u, witness


def act_word(loq: LinearlyOrderedQuiver, w: BraidWord) -> Tuple[LinearlyOrderedQuiver, CongruenceWitness]:
    u = unipotent_companion(loq.quiver, loq.order)
    u2, witness = act_word_on_companion(u, w)
    quiver = companion_to_quiver(u2).reordered(loq.quiver.vertices)
    return LinearlyOrderedQuiver(quiver, u2.order), witness


# --------- słowa dla konkretnych ruchów ----------

def mutation_word(k: int, n: int) -> BraidWord:
    """S(k-1) ... S1 r1: mutacja w k-tym wierzchołku z przeniesieniem go na początek."""
    if not 1 <= k <= n:
        raise DomainError(f"position {k} is out of range for n={n}")
    gens = [BraidGenerator("sigma_inv", i) for i in range(k - 1, 0, -1)]
    gens.append(BraidGenerator("rho", 1))
    return BraidWord(tuple(gens))


def check_mutation_order(loq: LinearlyOrderedQuiver, k: int) -> None:
    """In(v_k) przed v_k, Out(v_k) po nim."""
    q = loq.quiver
    v = loq.order[k - 1]
    for pos, other in enumerate(loq.order, start=1):
        if pos < k and q.weight(other, v) < 0:
            raise DomainError(f"{other!r} precedes {v!r} but is in Out({v})")
        if pos > k and q.weight(v, other) < 0:
            raise DomainError(f"{other!r} follows {v!r} but is in In({v})")


def mutate_by_word(loq: LinearlyOrderedQuiver, k: int) -> Tuple[LinearlyOrderedQuiver, CongruenceWitness]:
    check_mutation_order(loq, k)
    return act_word(loq, mutation_word(k, loq.n))


def cyclic_shift_word(n: int) -> BraidWord:
    """s1 s2 ... s(n-1): obrót (v1, ..., vn) -> (v2, ..., vn, v1)."""
    return BraidWord(tuple(BraidGenerator("sigma", i) for i in range(1, n)))


def full_twist_word(n: int) -> BraidWord:
    word = BraidWord()
    for _ in range(n):
        word = word + cyclic_shift_word(n)
    return word


def wiggle_word(loq: LinearlyOrderedQuiver, k: int) -> BraidWord:
    a, b = loq.order[k - 1], loq.order[k]
    if loq.quiver.adjacent(a, b):
        raise DomainError(f"{a!r} and {b!r} are adjacent, swapping them is not a wiggle")
    return BraidWord((BraidGenerator("sigma", k),))


def sink_source_word(loq: LinearlyOrderedQuiver, k: int) -> BraidWord:
    v = loq.order[k - 1]
    if not (is_sink(loq.quiver, v) or is_source(loq.quiver, v)):
        raise DomainError(f"{v!r} is neither a sink nor a source")
    return BraidWord((BraidGenerator("rho", k),))


# --------- orbita odwróceń ----------

def flip_subset(loq: LinearlyOrderedQuiver, positions: Sequence[int]) -> LinearlyOrderedQuiver:
    word = BraidWord(tuple(BraidGenerator("rho", i) for i in positions))
    return act_word(loq, word)[0]


def reversal_orbit(loq: LinearlyOrderedQuiver) -> List[LinearlyOrderedQuiver]:
    """ρ_S(loq) po podzbiorach S bez pierwszej pozycji (ρ_S = ρ_{dopełnienie S}), bez powtórzeń."""
    seen = {}
    rest = range(2, loq.n + 1)
    for size in range(loq.n):
        for subset in itertools.combinations(rest, size):
            image = flip_subset(loq, subset)
            seen.setdefault(image.quiver.b, image)
    return [seen[key] for key in sorted(seen)]
