"""Kołczany, mutacje, predykaty strukturalne i graf leżący pod kołczanem."""
import itertools

import pytest

from core.errors import DomainError, ResourceLimitError
from domain.graph import (
    Cycle,
    SpanningForest,
    chordless_cycles,
    homology_basis,
    is_chordless,
    signed_edge_vector,
    underlying_graph,
)
from domain.quiver import (
    Quiver,
    contains_vortex,
    delete_vertex,
    det_b,
    is_abundant,
    is_acyclic,
    is_complete,
    is_fork,
    is_sink,
    is_source,
    is_tree,
    is_vortex,
    mutate,
    mutate_sequence,
    opposite_arrows,
    rank_b,
    subquiver,
    vortex_apex,
)
from application.explorer import canonical_form
from integration import corpus


# -- Konstrukcja -------------------------------------------------------------

def test_from_arrows_builds_skew_symmetric_matrix():
    q = Quiver.from_arrows("abc", [("a", "b", 2), ("c", "b", 1)])
    assert q.weight("a", "b") == 2
    assert q.weight("b", "a") == -2
    assert q.weight("b", "c") == -1
    assert q.arrows() == [("a", "b", 2), ("c", "b", 1)]


def test_matrix_must_be_skew_symmetric():
    with pytest.raises(DomainError):
        Quiver.from_matrix("ab", [[0, 1], [1, 0]])
    with pytest.raises(DomainError):
        Quiver.from_matrix("ab", [[1, 0], [0, 0]])


def test_unknown_vertex():
    q = corpus.markov().quiver
    with pytest.raises(DomainError):
        mutate(q, "z")


# -- Mutacja -----------------------------------------------------------------

def test_mutation_of_a3_path_at_middle_vertex():
    q = corpus.type_a(3).quiver
    m = mutate(q, "v2")
    assert m.weight("v1", "v3") == 1
    assert m.weight("v2", "v1") == 1
    assert m.weight("v3", "v2") == 1


@pytest.mark.parametrize("name", ["markov", "grid-2x6", "fig5", "punctured-annulus", "pair-q1"])
def test_mutation_is_an_involution(name):
    q = corpus.get(name).quiver
    for v in q.vertices:
        assert mutate(mutate(q, v), v) == q


def test_markov_quiver_mutates_to_itself_up_to_relabeling():
    q = corpus.markov().quiver
    for v in q.vertices:
        assert canonical_form(mutate(q, v)) == canonical_form(q)


def test_mutation_commutes_when_vertices_are_not_adjacent():
    q = corpus.grid_2x6().quiver
    assert not q.adjacent("a", "c")
    assert mutate_sequence(q, "ac") == mutate_sequence(q, "ca")


def test_opposite_is_an_involution_and_preserves_acyclicity():
    q = corpus.type_d(5).quiver
    assert opposite_arrows(opposite_arrows(q)) == q
    assert is_acyclic(opposite_arrows(q))


def test_subquiver_and_delete_vertex():
    q = corpus.markov().quiver
    sub = subquiver(q, ["c", "a"])
    assert sub.vertices == ("a", "c")
    assert sub.weight("c", "a") == 2
    assert delete_vertex(q, "b") == sub


# -- Predykaty ---------------------------------------------------------------

def test_markov_quiver_predicates():
    q = corpus.markov().quiver
    assert is_abundant(q)
    assert is_complete(q)
    assert not is_acyclic(q)
    assert not is_tree(q)


def test_sinks_sources_and_trees():
    q = corpus.type_a(4).quiver
    assert is_source(q, "v1")
    assert is_sink(q, "v4")
    assert not is_sink(q, "v2")
    assert is_tree(q)
    assert is_acyclic(q)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_d_n_has_singular_exchange_matrix(n):
    assert det_b(corpus.type_d(n).quiver) == 0


def test_e_n_determinant_depends_on_parity():
    assert det_b(corpus.type_e(6).quiver) == 1
    assert det_b(corpus.type_e(8).quiver) == 1
    assert det_b(corpus.type_e(7).quiver) == 0
    assert rank_b(corpus.type_e(7).quiver) == 6


@pytest.mark.parametrize("entry", corpus.vortices(), ids=lambda e: e.name)
def test_vortices_have_apex_d(entry):
    assert is_vortex(entry.quiver)
    assert vortex_apex(entry.quiver) == "d"
    assert contains_vortex(entry.quiver) == ("a", "b", "c", "d")


def test_vortex_definition_by_brute_force():
    # wszystkie orientacje pełnego grafu K4 z wagami 1
    pairs = list(itertools.combinations("abcd", 2))
    for signs in itertools.product((1, -1), repeat=len(pairs)):
        arrows = [(u, v, 1) if s > 0 else (v, u, 1) for (u, v), s in zip(pairs, signs)]
        q = Quiver.from_arrows("abcd", arrows)
        three = any(
            all(q.weight(c[i], c[(i + 1) % 3]) > 0 for i in range(3))
            for c in itertools.permutations("abcd", 3)
        )
        four = any(
            all(q.weight(c[i], c[(i + 1) % 4]) > 0 for i in range(4))
            for c in itertools.permutations("abcd")
        )
        assert is_vortex(q) == (three and not four)


def test_vortex_needs_four_vertices():
    with pytest.raises(DomainError):
        is_vortex(corpus.markov().quiver)
    assert not is_vortex(corpus.oriented_cycle(4).quiver)


def test_acyclic_quiver_is_never_a_fork():
    q = Quiver.from_arrows("abc", [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
    assert is_fork(q) is None


@pytest.mark.parametrize("vertex", ["v1", "v3", "v5"])
def test_mutation_of_the_five_vertex_family_is_a_fork_returning_there(vertex):
    q = corpus.fork_exit_family().quiver
    assert is_fork(mutate(q, vertex)) == vertex


def test_remark_pair_quivers_are_not_forks():
    q1, q2 = corpus.remark_pair()
    assert is_fork(q1.quiver) is None
    assert is_fork(q2.quiver) is None
    assert is_fork(mutate(q2.quiver, "v2")) is None


# -- Graf --------------------------------------------------------------------

def test_chordless_cycles_of_the_grid_are_its_squares():
    g = underlying_graph(corpus.grid_2x6().quiver)
    cycles = chordless_cycles(g)
    assert len(cycles) == 5
    assert all(len(c) == 4 for c in cycles)
    assert {c.undirected_key() for c in cycles} == {
        Cycle.of(c).undirected_key() for c in corpus.GRID_2X6_CYCLES
    }


def test_chordless_cycles_skip_cycles_with_chords():
    q = Quiver.from_arrows("abcd", [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1), ("a", "c", 1)])
    g = underlying_graph(q)
    cycles = chordless_cycles(g)
    assert [len(c) for c in cycles] == [3, 3]
    assert not is_chordless(g, Cycle.of("abcd"))


def _induces_cycle(q, subset):
    nbrs = {v: [u for u in subset if u != v and q.adjacent(u, v)] for v in subset}
    if any(len(found) != 2 for found in nbrs.values()):
        return False
    seen = {subset[0]}
    stack = [subset[0]]
    while stack:
        for u in nbrs[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(subset)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_chordless_cycles_match_induced_subgraph_search(rng, random_quiver, n):
    for density in (0.4, 0.6, 0.8):
        q = random_quiver(n, density=density)
        g = underlying_graph(q)
        cycles = chordless_cycles(g)
        expected = {
            frozenset(subset)
            for size in range(3, n + 1)
            for subset in itertools.combinations(q.vertices, size)
            if _induces_cycle(q, subset)
        }
        assert len(cycles) == len(expected)
        assert {frozenset(c.vertices) for c in cycles} == expected
        assert all(is_chordless(g, c) for c in cycles)


def test_chordless_cycle_cap():
    g = underlying_graph(corpus.square_grid(4, 4).quiver)
    with pytest.raises(ResourceLimitError):
        chordless_cycles(g, cap=3)


def test_cycle_is_stored_from_smallest_vertex():
    c = Cycle.of(("k", "e", "f"))
    assert c.vertices == ("e", "f", "k")
    assert c.reversed().vertices == ("e", "k", "f")


def test_homology_basis_has_betti_number_many_cycles():
    for name in ["grid-2x6", "punctured-annulus", "fig5", "A5", "markov"]:
        g = underlying_graph(corpus.get(name).quiver)
        basis = homology_basis(g)
        assert len(basis) == g.betti_number()
        assert all(c.lies_in(g) for c in basis)


def test_spanning_forest_tree_paths():
    g = underlying_graph(corpus.type_a(5).quiver)
    forest = SpanningForest.build(g)
    assert forest.roots() == ["v1"]
    assert forest.tree_path("v5", "v2") == ["v5", "v4", "v3", "v2"]
    assert forest.non_tree_edges == []


def test_signed_edge_vector_respects_traversal():
    g = underlying_graph(corpus.oriented_cycle(3).quiver)
    c = Cycle.of(("v1", "v2", "v3"))
    vec = signed_edge_vector(g, c)
    assert sorted(vec) == [-1, 1, 1]
    assert signed_edge_vector(g, c.reversed()) == [-x for x in vec]
