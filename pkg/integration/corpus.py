# integration/corpus.py
"""
Wbudowany korpus kołczanów: rodziny Dynkina, przykłady z rysunków, kraty, triangulacje
powierzchni i wszystkie drzewa na n wierzchołkach.

Nazwy rozpoznawane przez `get(name)`:
    A<n>, D<n>, E<n>        drzewa Dynkina z porządkiem (v1, ..., vn)
    cycle<n>                zorientowany n-cykl
    Q<m>                    trójwierzchołkowy Q_m (a -m-> b -m-> c -2-> a)
    Q<m>,<delta>            Q_{m,delta}
    oraz nazwy stałe z FIXED (np. "markov", "grid-2x6", "punctured-annulus").
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from core.errors import DomainError, ParseError
from domain.cyclic_order import CycOrderedQuiver, CyclicOrdering
from domain.quiver import Quiver


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    quiver: Quiver
    order: Optional[Tuple[str, ...]] = None
    description: str = ""
    # kolorowanie {-1, 0, 1} dla kołczanów z dywidów
    coloring: Mapping[str, int] = field(default_factory=dict)

    @property
    def effective_order(self) -> Tuple[str, ...]:
        return self.order if self.order is not None else self.quiver.vertices

    def coq(self) -> CycOrderedQuiver:
        return CycOrderedQuiver(self.quiver, CyclicOrdering.of(self.effective_order))


def _names(n: int) -> List[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def _entry(name: str, vertices: Sequence[str], arrows, order=None, description: str = "", coloring=None) -> CorpusEntry:
    q = Quiver.from_arrows(list(vertices), arrows)
    return CorpusEntry(name, q, tuple(order) if order is not None else tuple(vertices), description, coloring or {})


# --------- rodziny Dynkina i cykle ----------

def type_a(n: int) -> CorpusEntry:
    if n < 1:
        raise DomainError("A_n needs n >= 1")
    v = _names(n)
    return _entry(f"A{n}", v, [(v[i], v[i + 1], 1) for i in range(n - 1)], description="path v1 -> ... -> vn")


def type_d(n: int) -> CorpusEntry:
    if n < 4:
        raise DomainError("D_n needs n >= 4")
    v = _names(n)
    arrows = [(v[0], v[2], 1), (v[1], v[2], 1)] + [(v[i], v[i + 1], 1) for i in range(2, n - 1)]
    return _entry(f"D{n}", v, arrows, description="v1, v2 -> v3 -> ... -> vn")


def type_e(n: int) -> CorpusEntry:
    if n < 6:
        raise DomainError("E_n needs n >= 6")
    v = _names(n)
    arrows = [(v[0], v[1], 1), (v[1], v[3], 1), (v[2], v[3], 1)]
    arrows += [(v[i], v[i + 1], 1) for i in range(3, n - 1)]
    return _entry(f"E{n}", v, arrows, description="v1 -> v2 -> v4 -> ... -> vn, v3 -> v4")


def oriented_cycle(n: int) -> CorpusEntry:
    if n < 3:
        raise DomainError("an oriented cycle needs n >= 3")
    v = _names(n)
    return _entry(f"cycle{n}", v, [(v[i], v[(i + 1) % n], 1) for i in range(n)])


def markov() -> CorpusEntry:
    return _entry("markov", "abc", [("a", "b", 2), ("b", "c", 2), ("c", "a", 2)])


def q_m(m: int) -> CorpusEntry:
    if m < 1:
        raise DomainError("Q_m needs m >= 1")
    return _entry(f"Q{m}", "abc", [("a", "b", m), ("b", "c", m), ("c", "a", 2)])


def q_m_delta(m: int, delta: int) -> CorpusEntry:
    """U = [[1, -m, m - delta], [0, 1, -2], [0, 0, 1]]; m = 0 daje brak strzałek a -> b."""
    if m < 0 or delta - m <= 0:
        raise DomainError("Q_{m,delta} needs 0 <= m < delta")
    arrows = [("a", "c", delta - m), ("b", "c", 2)]
    if m:
        arrows.append(("a", "b", m))
    return _entry(f"Q{m},{delta}", "abc", arrows)


def affine_a21() -> CorpusEntry:
    return _entry("a21", "abc", [("a", "b", 1), ("b", "c", 1), ("a", "c", 1)])


# --------- przykłady z rysunków ----------

def grid_2x6() -> CorpusEntry:
    arrows = [
        ("a", "b", 1), ("b", "h", 1), ("c", "d", 1), ("c", "b", 1), ("d", "j", 1), ("e", "f", 1),
        ("e", "d", 1), ("f", "l", 1), ("g", "a", 1), ("h", "i", 1), ("h", "g", 1), ("i", "c", 1),
        ("j", "k", 1), ("j", "i", 1), ("k", "e", 1), ("l", "k", 1),
    ]
    return _entry("grid-2x6", "abcdefghijkl", arrows, description="2x6 grid, every square oriented")


GRID_2X6_CYCLES = (
    ("a", "b", "h", "g"),
    ("b", "c", "i", "h"),
    ("c", "d", "j", "i"),
    ("d", "e", "k", "j"),
    ("f", "e", "k", "l"),
)
GRID_2X6_TARGETS = (1, -1, 1, -1, -3)
GRID_2X6_ORDER = ("c", "b", "h", "g", "a", "k", "l", "f", "e", "d", "j", "i")


def square_grid(rows: int, cols: int) -> CorpusEntry:
    """Krata z naprzemiennie zorientowanymi kwadratami; wierzchołki x<i><j> (od 1)."""
    if rows < 2 or cols < 2:
        raise DomainError("a grid needs at least 2 rows and 2 columns")
    name = lambda i, j: f"x{i + 1}{j + 1}"  # noqa: E731
    vertices = [name(i, j) for i in range(rows) for j in range(cols)]
    arrows = []
    for i, j in itertools.product(range(rows), range(cols)):
        if j + 1 < cols:
            a, b = name(i, j), name(i, j + 1)
            arrows.append((a, b, 1) if (i + j) % 2 == 0 else (b, a, 1))
        if i + 1 < rows:
            a, b = name(i, j), name(i + 1, j)
            arrows.append((a, b, 1) if (i + j) % 2 == 1 else (b, a, 1))
    return _entry(f"grid-{rows}x{cols}", vertices, arrows)


def punctured_annulus() -> CorpusEntry:
    arrows = [
        ("a", "c", 1), ("a", "b", 1), ("c", "e", 1), ("b", "c", 1),
        ("b", "d", 1), ("d", "a", 1), ("d", "e", 1), ("e", "b", 1),
    ]
    return _entry("punctured-annulus", "abcde", arrows, description="triangulated once-punctured annulus")


def annulus_x6_part() -> CorpusEntry:
    """a -> c -> b =2=> a, e -> c -> d =2=> e; mu_c potem mu_a daje punctured-annulus."""
    arrows = [("a", "c", 1), ("c", "b", 1), ("b", "a", 2), ("e", "c", 1), ("c", "d", 1), ("d", "e", 2)]
    return _entry("annulus-x6", "abcde", arrows)


def hexagonal_divide() -> CorpusEntry:
    arrows = [
        ("1", "6", 1), ("1", "4", 1), ("6", "7", 1), ("4", "7", 1), ("7", "1", 1), ("7", "3", 1),
        ("7", "2", 1), ("3", "6", 1), ("3", "5", 1), ("2", "4", 1), ("2", "5", 1), ("5", "7", 1),
    ]
    coloring = {"1": -1, "2": -1, "3": -1, "4": 0, "5": 0, "6": 0, "7": 1}
    return _entry("hex-divide", "1234567", arrows, order="1234567", coloring=coloring,
                  description="divide quiver of affine type E6")


def e6_divide() -> CorpusEntry:
    # górny rząd p q r, dolny x y z
    arrows = [
        ("x", "y", 1), ("z", "y", 1), ("p", "q", 1), ("r", "q", 1), ("p", "x", 1),
        ("q", "y", 1), ("r", "z", 1), ("y", "p", 1), ("y", "r", 1),
    ]
    coloring = {"p": -1, "r": -1, "q": 0, "x": 0, "z": 0, "y": 1}
    entry = _entry("e6-divide", "pqrxyz", arrows, coloring=coloring, description="divide quiver of type E6")
    order = [v for c in (-1, 0, 1) for v in sorted(k for k, col in coloring.items() if col == c)]
    return CorpusEntry(entry.name, entry.quiver, tuple(order), entry.description, entry.coloring)


def proper_illustration() -> CorpusEntry:
    """COQ, w którym g, h, i, j są właściwe, a k, l nie."""
    arrows = [
        ("i", "j", 1), ("j", "k", 1), ("l", "k", 1), ("i", "l", 1),
        ("g", "l", 1), ("g", "j", 1), ("k", "h", 1), ("h", "i", 1),
    ]
    return _entry("fig5", "ghijkl", arrows, order="ijklgh")


def fork_exit_family(a=4, b=4, c=4, d=4, e=4, f=4, g=4, h=4, i=4, j=4) -> CorpusEntry:
    """Pięciowierzchołkowa rodzina, której każda mutacja jest widelcem (parametry >= 4)."""
    if min(a, b, c, d, e, f, g, h, i, j) < 4:
        raise DomainError("all fork-family parameters must be at least 4")
    v = _names(5)
    arrows = [
        (v[0], v[1], a + f), (v[0], v[2], b + h), (v[0], v[3], c + i),
        (v[1], v[2], d), (v[1], v[3], e), (v[1], v[4], a * j + f),
        (v[2], v[3], g), (v[2], v[4], b * j + h),
        (v[3], v[4], c * j + i),
        (v[4], v[0], 2 * j),
    ]
    return _entry("fork-exit", v, arrows)


REMARK_Q1 = (
    (0, -2, -18, 21),
    (2, 0, -13, -9),
    (18, 13, 0, -6),
    (-21, 9, 6, 0),
)
REMARK_Q2 = (
    (0, -2, -9, 23),
    (2, 0, -15, -10),
    (9, 15, 0, -6),
    (-23, 10, 6, 0),
)


def remark_pair() -> Tuple[CorpusEntry, CorpusEntry]:
    v = tuple(_names(4))
    return (
        CorpusEntry("pair-q1", Quiver.from_matrix(v, REMARK_Q1), v),
        CorpusEntry("pair-q2", Quiver.from_matrix(v, REMARK_Q2), v),
    )


def four_punctured_sphere() -> CorpusEntry:
    arrows = [
        ("a", "b", 1), ("b", "d", 1), ("a", "c", 1), ("c", "d", 1),
        ("d", "e", 1), ("e", "a", 1), ("d", "f", 1), ("f", "a", 1),
    ]
    return _entry("sphere-4", "abcdef", arrows)


def one_holed_torus() -> CorpusEntry:
    arrows = [("a", "b", 1), ("b", "c", 2), ("c", "d", 1), ("d", "a", 1), ("c", "a", 1), ("d", "b", 1)]
    return _entry("torus-1", "abcd", arrows)


def vortices() -> List[CorpusEntry]:
    """Cztery wiry z wierzchołkiem d jako apeksem."""
    specs = [
        [("a", "d"), ("a", "b"), ("b", "d"), ("b", "c"), ("c", "d"), ("c", "a")],
        [("a", "b"), ("d", "a"), ("d", "b"), ("d", "c"), ("b", "c"), ("c", "a")],
        [("a", "d"), ("a", "c"), ("b", "d"), ("b", "a"), ("c", "d"), ("c", "b")],
        [("a", "c"), ("d", "a"), ("d", "b"), ("d", "c"), ("b", "a"), ("c", "b")],
    ]
    return [_entry(f"vortex-{k + 1}", "abcd", [(s, t, 1) for s, t in shape]) for k, shape in enumerate(specs)]


# --------- drzewa ----------

def tree_quiver(edges: Sequence[Tuple[str, str]], name: str = "tree") -> CorpusEntry:
    """Drzewo ze strzałkami zgodnymi z podaną orientacją krawędzi."""
    vertices = sorted({v for e in edges for v in e})
    return _entry(name, vertices, [(s, t, 1) for s, t in edges])


def trees(n: int) -> List[CorpusEntry]:
    """Wszystkie drzewa na n wierzchołkach; strzałki od mniejszego numeru do większego."""
    if n < 2:
        raise DomainError("trees need at least 2 vertices")
    out = []
    for k, g in enumerate(nx.nonisomorphic_trees(n)):
        v = _names(n)
        edges = sorted((min(a, b), max(a, b)) for a, b in g.edges())
        out.append(_entry(f"T{n}-{k + 1}", v, [(v[a], v[b], 1) for a, b in edges]))
    return out


def eight_vertex_pair() -> Tuple[CorpusEntry, CorpusEntry]:
    """Dwa drzewa na 8 wierzchołkach o tym samym wielomianie Alexandra."""
    left = tree_quiver(
        [("s1", "s2"), ("s2", "s3"), ("s3", "s4"),
         ("l1", "s2"), ("l2", "s2"), ("l3", "s3"), ("l4", "s3")],
        "tree8-left",
    )
    right = tree_quiver(
        [("l1", "x"), ("l2", "x"), ("l3", "x"), ("l4", "x"),
         ("x", "p1"), ("p1", "p2"), ("p2", "p3")],
        "tree8-right",
    )
    return left, right


# --------- rejestr ----------

FIXED: Dict[str, Callable[[], CorpusEntry]] = {
    "markov": markov,
    "a21": affine_a21,
    "grid-2x6": grid_2x6,
    "grid-4x4": lambda: square_grid(4, 4),
    "punctured-annulus": punctured_annulus,
    "annulus-x6": annulus_x6_part,
    "hex-divide": hexagonal_divide,
    "e6-divide": e6_divide,
    "fig5": proper_illustration,
    "fork-exit": fork_exit_family,
    "pair-q1": lambda: remark_pair()[0],
    "pair-q2": lambda: remark_pair()[1],
    "sphere-4": four_punctured_sphere,
    "torus-1": one_holed_torus,
    "tree8-left": lambda: eight_vertex_pair()[0],
    "tree8-right": lambda: eight_vertex_pair()[1],
    **{f"vortex-{k}": (lambda k=k: vortices()[k - 1]) for k in range(1, 5)},
}

_PATTERNS = [
    (re.compile(r"^A(\d+)$"), lambda m: type_a(int(m[1]))),
    (re.compile(r"^D(\d+)$"), lambda m: type_d(int(m[1]))),
    (re.compile(r"^E(\d+)$"), lambda m: type_e(int(m[1]))),
    (re.compile(r"^cycle(\d+)$"), lambda m: oriented_cycle(int(m[1]))),
    (re.compile(r"^Q(\d+)$"), lambda m: q_m(int(m[1]))),
    (re.compile(r"^Q(\d+),(\d+)$"), lambda m: q_m_delta(int(m[1]), int(m[2]))),
]


def names() -> List[str]:
    return sorted(FIXED) + ["A<n>", "D<n>", "E<n>", "cycle<n>", "Q<m>", "Q<m>,<delta>"]


def get(name: str) -> CorpusEntry:
    if name in FIXED:
        return FIXED[name]()
    for pattern, build in _PATTERNS:
        match = pattern.match(name)
        if match:
            return build(match)
    raise ParseError(f"unknown corpus entry {name!r}")
