# domain/cyclic_order.py
"""
Porządki cykliczne, kołczany z porządkiem cyklicznym (COQ), sygnatury nawinięć i wiggle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.errors import DomainError
from domain.graph import Cycle
from domain.quiver import Quiver


@dataclass(frozen=True)
class CyclicOrdering:
    """Układ wierzchołków modulo przesunięcie cykliczne; zapisany od najmniejszej nazwy."""

    arrangement: Tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.arrangement)) != len(self.arrangement):
            raise DomainError("a cyclic ordering lists every vertex exactly once")
        if self.arrangement:
            start = self.arrangement.index(min(self.arrangement))
            if start:
                object.__setattr__(self, "arrangement", self.arrangement[start:] + self.arrangement[:start])
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(self.arrangement)})

    @classmethod
    def of(cls, seq: Sequence[str]) -> "CyclicOrdering":
        return cls(tuple(seq))

    @property
    def n(self) -> int:
        return len(self.arrangement)

    def __iter__(self) -> Iterator[str]:
        return iter(self.arrangement)

    def __contains__(self, v: object) -> bool:
        return v in self._pos  # type: ignore[attr-defined]

    def position(self, v: str) -> int:
        try:
            return self._pos[v]  # type: ignore[attr-defined]
        except KeyError:
            raise DomainError(f"vertex {v!r} is not in the ordering") from None

    def distance(self, a: str, b: str) -> int:
        """Odległość zgodnie z ruchem wskazówek zegara, w [0, n-1]."""
        return (self.position(b) - self.position(a)) % self.n

    def successor(self, v: str) -> str:
        return self.arrangement[(self.position(v) + 1) % self.n]

    def linear_from(self, v: str) -> Tuple[str, ...]:
        i = self.position(v)
        return self.arrangement[i:] + self.arrangement[:i]

    def rotations(self) -> List[Tuple[str, ...]]:
        return [self.linear_from(v) for v in self.arrangement]

    def are_consecutive(self, u: str, v: str) -> bool:
        return self.n >= 2 and (self.successor(u) == v or self.successor(v) == u)

    def swapped(self, u: str, v: str) -> "CyclicOrdering":
        if not self.are_consecutive(u, v):
            raise DomainError(f"{u!r} and {v!r} are not cyclically consecutive")
        seq = list(self.arrangement)
        i, j = self.position(u), self.position(v)
        seq[i], seq[j] = seq[j], seq[i]
        return CyclicOrdering(tuple(seq))

    def reversed(self) -> "CyclicOrdering":
        return CyclicOrdering(tuple(reversed(self.arrangement)))

    def moved_after(self, v: str, anchor: str) -> "CyclicOrdering":
        """Usuń v i wstaw je tuż za `anchor`."""
        seq = [x for x in self.arrangement if x != v]
        seq.insert(seq.index(anchor) + 1, v)
        return CyclicOrdering(tuple(seq))

    def __str__(self) -> str:
        return "(" + ",".join(self.arrangement) + ")"


@dataclass(frozen=True)
class CycOrderedQuiver:
    quiver: Quiver
    ordering: CyclicOrdering

    def __post_init__(self) -> None:
        if sorted(self.ordering.arrangement) != sorted(self.quiver.vertices):
            raise DomainError("ordering must cover exactly the quiver's vertices")

    @classmethod
    def of(cls, quiver: Quiver, order: Sequence[str]) -> "CycOrderedQuiver":
        return cls(quiver, CyclicOrdering.of(order))

    @property
    def n(self) -> int:
        return self.quiver.n

    def theta(self, a: str, b: str) -> int:
        return self.ordering.distance(a, b)

    def with_ordering(self, ordering: CyclicOrdering) -> "CycOrderedQuiver":
        return CycOrderedQuiver(self.quiver, ordering)

    def linear_order(self, start: Optional[str] = None) -> Tuple[str, ...]:
        start = start if start is not None else self.ordering.arrangement[0]
        return self.ordering.linear_from(start)


@dataclass(frozen=True)
class WindingSignature:
    basis: Tuple[Cycle, ...]
    winds: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.basis) != len(self.winds):
            raise DomainError("winding signature needs one winding per basis cycle")

    @classmethod
    def of(cls, basis: Sequence[Cycle], winds: Sequence[int]) -> "WindingSignature":
        return cls(tuple(basis), tuple(int(w) for w in winds))

    def as_dict(self) -> Dict[str, int]:
        return {str(c): w for c, w in zip(self.basis, self.winds)}


@dataclass(frozen=True)
class Wiggle:
    """Zamiana dwóch sąsiednich w porządku, niesąsiednich w kołczanie wierzchołków."""

    pair: Tuple[str, str]

    def __post_init__(self) -> None:
        u, v = self.pair
        if u == v:
            raise DomainError("a wiggle swaps two distinct vertices")
        if u > v:
            object.__setattr__(self, "pair", (v, u))

    @classmethod
    def of(cls, u: str, v: str) -> "Wiggle":
        return cls((u, v))

    def as_list(self) -> List[str]:
        return list(self.pair)
