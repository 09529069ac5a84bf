# domain/models.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from core import linalg
from core.config import Config
from core.errors import DomainError, InvariantViolation, ParseError
from domain.cyclic_order import CycOrderedQuiver, CyclicOrdering
from domain.graph import Cycle
from domain.polynomial import IntPolynomial, PolyLattice
from domain.quiver import Quiver

IntMatrix = Tuple[Tuple[int, ...], ...]


def freeze(m: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in m)


@dataclass(frozen=True)
class InOutSets:
    ins: FrozenSet[str]
    outs: FrozenSet[str]


@dataclass(frozen=True)
class UnipotentCompanion:
    """Unipotentna górnotrójkątna U razem z liniowym porządkiem wierzchołków."""

    u: IntMatrix
    order: Tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.u) != len(self.order):
            raise DomainError("companion size does not match its ordering")
        if not linalg.is_unipotent_upper(self.u):
            raise DomainError("matrix is not unipotent upper-triangular")

    @property
    def n(self) -> int:
        return len(self.order)

    def matrix(self) -> linalg.Matrix:
        return linalg.copy_matrix(self.u)


@dataclass(frozen=True)
class CongruenceWitness:
    """G z det G = ±1 oraz target = G·source·Gᵀ."""

    g: IntMatrix
    source: IntMatrix
    target: IntMatrix

    def __post_init__(self) -> None:
        if not self.verify():
            raise InvariantViolation("congruence witness does not verify")

    def verify(self) -> bool:
        if linalg.bareiss_det(self.g) not in (1, -1):
            return False
        return freeze(linalg.congruence(self.g, self.source)) == self.target

    def then(self, other: "CongruenceWitness") -> "CongruenceWitness":
        """Złożenie: najpierw self, potem other."""
        if other.source != self.target:
            raise DomainError("witnesses do not compose")
        return CongruenceWitness(freeze(linalg.matmul(other.g, self.g)), self.source, other.target)

    @classmethod
    def identity(cls, u: Sequence[Sequence[int]]) -> "CongruenceWitness":
        m = freeze(u)
        return cls(freeze(linalg.identity(len(m))), m, m)


@dataclass(frozen=True)
class LinearlyOrderedQuiver:
    quiver: Quiver
    order: Tuple[str, ...]

    def __post_init__(self) -> None:
        if sorted(self.order) != sorted(self.quiver.vertices):
            raise DomainError("order must cover the quiver's vertices")

    @classmethod
    def of(cls, quiver: Quiver, order: Sequence[str]) -> "LinearlyOrderedQuiver":
        return cls(quiver, tuple(order))

    @property
    def n(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class BraidGenerator:
    """sigma(k), sigma_inv(k) dla 1 <= k <= n-1 albo rho(i) dla 1 <= i <= n."""

    kind: str
    index: int

    KINDS = ("sigma", "sigma_inv", "rho")
    TOKENS = {"sigma": "s", "sigma_inv": "S", "rho": "r"}

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ParseError(f"unknown braid generator kind {self.kind!r}")
        if self.index < 1:
            raise ParseError("braid generator indices are 1-based")

    def check_size(self, n: int) -> None:
        limit = n if self.kind == "rho" else n - 1
        if self.index > limit:
            raise DomainError(f"generator {self} is out of range for n={n}")

    def inverse(self) -> "BraidGenerator":
        if self.kind == "rho":
            return self
        return BraidGenerator("sigma_inv" if self.kind == "sigma" else "sigma", self.index)

    def __str__(self) -> str:
        return f"{self.TOKENS[self.kind]}{self.index}"


@dataclass(frozen=True)
class BraidWord:
    """Generatory stosowane od lewej do prawej."""

    generators: Tuple[BraidGenerator, ...] = ()

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.generators + other.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(g.inverse() for g in reversed(self.generators)))

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.generators)


@dataclass(frozen=True)
class QuasiCartan:
    a: IntMatrix
    order: Tuple[str, ...]

    def entry(self, u: str, v: str) -> int:
        return self.a[self.order.index(u)][self.order.index(v)]


@dataclass(frozen=True)
class Gf2Assignment:
    basis: Tuple[Cycle, ...]
    values: Tuple[int, ...]

    def as_dict(self) -> Dict[str, int]:
        return {str(c): v for c, v in zip(self.basis, self.values)}


@dataclass
class TotallyProperVerdict:
    status: str  # "verified" | "refuted" | "budget-exceeded"
    explored: int
    witness: Optional[CycOrderedQuiver] = None
    vertex: Optional[str] = None
    path: List[str] = field(default_factory=list)

    VERIFIED = "verified"
    REFUTED = "refuted"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class CandidateOrdering:
    ordering: Optional[CyclicOrdering]
    # (cykl, oczekiwane nawinięcie, faktyczne nawinięcie)
    violations: List[Tuple[Cycle, int, int]] = field(default_factory=list)

    @property
    def totally_consistent(self) -> bool:
        return self.ordering is not None and not self.violations


@dataclass(frozen=True)
class ExplorationLimits:
    max_quivers: int = Config.MAX_QUIVERS
    max_depth: int = Config.MAX_DEPTH
    max_entry: int = Config.MAX_ENTRY

    def __post_init__(self) -> None:
        if min(self.max_quivers, self.max_depth, self.max_entry) <= 0:
            raise DomainError("exploration limits must be positive")

    @classmethod
    def parse(cls, text: str) -> "ExplorationLimits":
        """Format 'depth=5,size=100,entry=1000' (każde pole opcjonalne)."""
        names = {"depth": "max_depth", "size": "max_quivers", "entry": "max_entry"}
        values: Dict[str, int] = {}
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, sep, raw = part.partition("=")
            if not sep or key not in names:
                raise ParseError(f"bad limits entry {part!r}")
            try:
                values[names[key]] = int(raw)
            except ValueError:
                raise ParseError(f"bad limits value {raw!r}") from None
        return cls(**values)


@dataclass
class ClassNode:
    quiver: Quiver
    depth: int
    ordering: Optional[CyclicOrdering] = None
    fingerprint: Dict[str, object] = field(default_factory=dict)


@dataclass
class ClassReport:
    nodes: List[ClassNode] = field(default_factory=list)
    # (z, do, etykieta – wierzchołek mutacji)
    edges: List[Tuple[int, int, str]] = field(default_factory=list)
    complete: bool = True

    @property
    def representatives(self) -> List[Quiver]:
        return [node.quiver for node in self.nodes]

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass
class InvariantReport:
    """Niezmienniki jednego COQ liczone dla jednego zgodnego porządku liniowego."""

    order: Tuple[str, ...]
    alexander: IntPolynomial
    markov: int
    det_b: int
    rank_b: int
    gcd_multiset: Tuple[int, ...]
    lattices: Dict[int, PolyLattice] = field(default_factory=dict)
    frobenius: List[IntPolynomial] = field(default_factory=list)
