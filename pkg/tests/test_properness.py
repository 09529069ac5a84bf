"""Właściwość wierzchołków, mutacja właściwa, porządek-kandydat i dopuszczalność."""
import pytest

from application.invariants import unipotent_companion
from application.orderings import all_cyclic_orderings, wiggle_equivalent, winding
from application.properness import (
    admissible_homomorphism,
    candidate_ordering,
    cycle_target,
    improper_vertices,
    in_out,
    is_admissible,
    is_proper_coq,
    is_proper_in_wiggle_class,
    is_proper_vertex,
    linear_order_for_mutation,
    ordering_from_coloring,
    pointwise_proper_vertices,
    proper_mutate,
    quasi_cartan,
    realize_proper_at,
    verify_totally_proper,
)
from core.errors import DomainError
from domain.cyclic_order import CycOrderedQuiver
from domain.graph import Cycle
from domain.models import QuasiCartan, TotallyProperVerdict
from domain.quiver import Quiver, mutate
from integration import corpus


def test_in_out_sets(fig5):
    io = in_out(fig5.quiver, "k")
    assert io.ins == {"j", "l"}
    assert io.outs == {"h"}


def test_pointwise_properness_of_the_illustration(fig5):
    assert fig5.ordering.arrangement == ("g", "h", "i", "j", "k", "l")
    assert pointwise_proper_vertices(fig5) == ["g", "h", "i", "j"]
    assert not is_proper_vertex(fig5, "k")
    assert not is_proper_vertex(fig5, "l")


def test_vertex_improper_pointwise_can_be_proper_in_the_class(fig5):
    assert is_proper_in_wiggle_class(fig5, "k")
    moved = fig5.with_ordering(fig5.ordering.swapped("g", "h").swapped("l", "h"))
    assert moved.ordering.linear_from("i") == ("i", "j", "k", "h", "l", "g")
    assert is_proper_vertex(moved, "k")


def test_proper_mutation_moves_the_vertex_behind_its_outputs(fig5):
    child = proper_mutate(fig5, "k")
    assert child.quiver == mutate(fig5.quiver, "k")
    assert child.ordering.successor("h") == "k"


@pytest.mark.parametrize("entry", corpus.vortices(), ids=lambda e: e.name)
def test_no_ordering_of_a_vortex_is_proper(entry):
    for sigma in all_cyclic_orderings(entry.quiver.vertices):
        coq = CycOrderedQuiver(entry.quiver, sigma)
        assert not is_proper_coq(coq)
        bad = improper_vertices(coq)[0]
        with pytest.raises(DomainError):
            proper_mutate(coq, bad)


def test_realize_proper_at(fig5):
    realized = realize_proper_at(fig5, "k")
    assert realized is not None
    assert realized.quiver == fig5.quiver
    assert is_proper_vertex(realized, "k")
    assert realize_proper_at(fig5, "g") == fig5
    vortex = corpus.vortices()[0].coq()
    assert realize_proper_at(vortex, improper_vertices(vortex)[0]) is None


def test_linear_order_for_mutation_puts_inputs_first():
    coq = corpus.type_a(4).coq()
    order = linear_order_for_mutation(coq, "v2")
    assert order == ("v4", "v1", "v2", "v3")
    with pytest.raises(DomainError):
        linear_order_for_mutation(CycOrderedQuiver.of(coq.quiver, ("v1", "v3", "v2", "v4")), "v2")


def test_cycle_targets():
    q = corpus.oriented_cycle(4).quiver
    square = Cycle.of(("v1", "v2", "v3", "v4"))
    assert cycle_target(q, square) == 1
    assert cycle_target(q, square.reversed()) == -1
    grid = corpus.grid_2x6().quiver
    assert cycle_target(grid, Cycle.of(corpus.GRID_2X6_CYCLES[0])) == 1


def test_candidate_ordering_on_a_square_grid_violates_the_boundary():
    result = candidate_ordering(corpus.square_grid(4, 4).quiver)
    assert result.ordering is not None
    assert not result.totally_consistent
    assert any(len(c) == 12 for c, _, _ in result.violations)


def test_candidate_ordering_for_the_annulus_does_not_exist(annulus):
    result = candidate_ordering(annulus.quiver, exhaustive=True)
    assert result.ordering is None


def test_candidate_ordering_for_the_grid_matches_every_cycle():
    q = corpus.grid_2x6().quiver
    result = candidate_ordering(q, exhaustive=True)
    assert result.totally_consistent
    coq = CycOrderedQuiver(q, result.ordering)
    for cycle in corpus.GRID_2X6_CYCLES:
        c = Cycle.of(cycle)
        assert winding(coq, c) == cycle_target(q, c)


@pytest.mark.parametrize("name", ["hex-divide", "e6-divide"])
def test_coloring_orderings_are_pointwise_proper(name):
    entry = corpus.get(name)
    sigma = ordering_from_coloring(entry.quiver, entry.coloring)
    coq = CycOrderedQuiver(entry.quiver, sigma)
    assert pointwise_proper_vertices(coq) == list(entry.quiver.vertices)


def test_invalid_coloring_is_rejected():
    q = corpus.type_a(2).quiver
    with pytest.raises(DomainError):
        ordering_from_coloring(q, {"v1": 0, "v2": -1})
    with pytest.raises(DomainError):
        ordering_from_coloring(q, {"v1": 0})


@pytest.mark.parametrize(
    "name, order, budget",
    [
        ("A3", None, None),
        ("A4", None, None),
        ("D4", None, 2000),
        ("cycle4", ("v1", "v2", "v3", "v4"), None),
        ("markov", None, None),
        ("fork-exit", None, None),
    ],
)
def test_totally_proper_verified(name, order, budget):
    entry = corpus.get(name)
    coq = CycOrderedQuiver.of(entry.quiver, order or entry.effective_order)
    verdict = verify_totally_proper(coq, budget)
    assert verdict.status == TotallyProperVerdict.VERIFIED
    assert verdict.explored >= 1


def test_totally_proper_refuted_on_a_winding_two_square():
    coq = CycOrderedQuiver.of(corpus.oriented_cycle(4).quiver, ("v1", "v3", "v2", "v4"))
    verdict = verify_totally_proper(coq)
    assert verdict.status == TotallyProperVerdict.REFUTED
    assert verdict.vertex is not None
    assert not is_proper_coq(verdict.witness)


def test_totally_proper_refuted_on_the_annulus(annulus):
    verdict = verify_totally_proper(annulus.coq(), 2000)
    assert verdict.status == TotallyProperVerdict.REFUTED


def test_totally_proper_budget():
    verdict = verify_totally_proper(corpus.type_d(4).coq(), 1)
    assert verdict.status in (TotallyProperVerdict.BUDGET_EXCEEDED, TotallyProperVerdict.VERIFIED)
    with pytest.raises(DomainError):
        verify_totally_proper(corpus.type_a(3).coq(), 0)


def test_quasi_cartan_of_a_cycle_companion_is_admissible():
    q = corpus.oriented_cycle(3).quiver
    a = quasi_cartan(unipotent_companion(q, ("v1", "v2", "v3")))
    assert all(a.a[i][i] == 2 for i in range(3))
    assert is_admissible(a, q)


def test_wrong_signs_break_admissibility():
    q = corpus.oriented_cycle(3).quiver
    a = QuasiCartan(((2, 1, 1), (1, 2, -1), (1, -1, 2)), ("v1", "v2", "v3"))
    assert not is_admissible(a, q)


def test_trees_are_always_admissible():
    q = corpus.type_d(5).quiver
    a = QuasiCartan(tuple(tuple(2 if i == j else 1 for j in range(5)) for i in range(5)), q.vertices)
    assert is_admissible(a, q)


def test_admissible_homomorphism():
    assert admissible_homomorphism(corpus.punctured_annulus().quiver) is None
    grid = admissible_homomorphism(corpus.grid_2x6().quiver)
    assert grid is not None
    assert len(grid.values) == 5


def test_admissibility_rejects_mismatched_vertex_sets():
    q = corpus.oriented_cycle(3).quiver
    other = Quiver.from_arrows(("a", "b", "c"), [("a", "b", 1)])
    a = quasi_cartan(unipotent_companion(q, ("v1", "v2", "v3")))
    with pytest.raises(DomainError):
        is_admissible(a, other)


@pytest.mark.parametrize(
    "q",
    [
        corpus.oriented_cycle(4).quiver,
        corpus.type_d(4).quiver,
        mutate(corpus.type_d(4).quiver, "v3"),
        mutate(mutate(corpus.type_a(4).quiver, "v2"), "v3"),
    ],
    ids=["cycle4", "D4", "D4-mutated", "A4-mutated"],
)
def test_totally_proper_orderings_are_unique_up_to_wiggles(q):
    verified = [
        sigma
        for sigma in all_cyclic_orderings(q.vertices)
        if verify_totally_proper(CycOrderedQuiver(q, sigma), 2000).status == TotallyProperVerdict.VERIFIED
    ]
    assert verified
    assert all(wiggle_equivalent(q, verified[0], sigma) for sigma in verified[1:])
