# application/coq_service.py
from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from core.config import Config
from core.errors import DomainError, ParseError
from domain.cyclic_order import CycOrderedQuiver, CyclicOrdering, WindingSignature
from domain.graph import homology_basis, underlying_graph
from domain.models import ClassReport, CongruenceWitness, ExplorationLimits, LinearlyOrderedQuiver
from domain.polynomial import IntPolynomial, PolyLattice
from domain.quiver import Quiver, is_fork, mutate
from integration import corpus, quiver_files
from application import braid_action, explorer, invariants, orderings, properness

logger = logging.getLogger(__name__)

Source = Union[corpus.CorpusEntry, quiver_files.QuiverDocument]


# --------- serializacja ----------

def poly_payload(p: IntPolynomial) -> Dict[str, Any]:
    return {"text": str(p), "coefficients": list(p.coefficients)}


def lattice_payload(lattice: PolyLattice) -> Dict[str, Any]:
    return {"degree_bound": lattice.degree_bound, "rank": lattice.rank, "hnf": lattice.as_lists()}


def witness_payload(w: CongruenceWitness) -> Dict[str, Any]:
    return {"g": [list(r) for r in w.g], "source": [list(r) for r in w.source], "target": [list(r) for r in w.target]}


def report_payload(report: ClassReport) -> Dict[str, Any]:
    return {
        "complete": report.complete,
        "size": len(report),
        "nodes": [
            {
                "quiver": quiver_files.to_document(node.quiver, node.ordering),
                "depth": node.depth,
                "fingerprint": node.fingerprint,
            }
            for node in report.nodes
        ],
        "edges": [[a, b, v] for a, b, v in report.edges],
    }


class CoqService:
    """
    Fasada przypadków użycia: przyjmuje kołczany (z plików, korpusu albo JSON-a z API)
    i zwraca słowniki gotowe do json.dumps. Z niej korzystają CLI i blueprint /api.
    """

    def __init__(self, data_dir: Optional[Union[str, Path]] = None) -> None:
        self.data_dir = Path(data_dir or Config.DATA_DIR)

    # --------- wejście ----------

    def load(self, ref: str) -> Source:
        """Plik JSON, 'corpus:<nazwa>' albo nazwa pliku w katalogu danych (bez .json)."""
        if ref.startswith("corpus:"):
            return corpus.get(ref[len("corpus:"):])
        path = Path(ref)
        if path.exists():
            return quiver_files.load(path)
        for candidate in (self.data_dir / ref, self.data_dir / f"{ref}.json"):
            if candidate.exists():
                return quiver_files.load(candidate)
        raise ParseError(f"cannot resolve quiver {ref!r} (no such file or corpus entry)")

    @staticmethod
    def from_payload(data: Any) -> quiver_files.QuiverDocument:
        return quiver_files.parse_document(data, "request")

    @staticmethod
    def coq_of(source: Source, order: Optional[Sequence[str]] = None) -> CycOrderedQuiver:
        if order is not None and not (isinstance(order, (list, tuple)) and all(isinstance(v, str) for v in order)):
            raise ParseError("'order' must be a list of vertex names")
        return CycOrderedQuiver(source.quiver, CyclicOrdering.of(order or source.effective_order))

    # --------- kołczany ----------

    def mutate(self, source: Source, vertices: Sequence[str]) -> Dict[str, Any]:
        q = source.quiver
        for v in vertices:
            q = mutate(q, v)
        return quiver_files.to_document(q)

    # --------- niezmienniki ----------

    def invariants(self, coq: CycOrderedQuiver, ks: Iterable[int] = (), frobenius: bool = True,
                   cap: Optional[int] = None) -> Dict[str, Any]:
        report = invariants.invariant_report(coq, ks, frobenius, cap)
        return {
            "order": list(report.order),
            "alexander": poly_payload(report.alexander),
            "markov": report.markov,
            "det_b": report.det_b,
            "rank_b": report.rank_b,
            "gcd_multiset": list(report.gcd_multiset),
            "lattices": {str(k): lattice_payload(v) for k, v in sorted(report.lattices.items())},
            "frobenius": [poly_payload(p) for p in report.frobenius],
        }

    def alexander(self, coq: CycOrderedQuiver) -> Dict[str, Any]:
        return poly_payload(invariants.alexander_polynomial(coq.quiver, coq.ordering.arrangement))

    def lattice(self, coq: CycOrderedQuiver, k: int, cap: Optional[int] = None) -> Dict[str, Any]:
        return lattice_payload(invariants.alexander_lattice(coq.quiver, coq.ordering.arrangement, k, cap))

    # --------- właściwość ----------

    def check_proper(self, coq: CycOrderedQuiver, vertex: Optional[str] = None,
                     cap: Optional[int] = None) -> Dict[str, Any]:
        vertices = [vertex] if vertex is not None else list(coq.quiver.vertices)
        rows = {}
        for v in vertices:
            rows[v] = {
                "proper": properness.is_proper_vertex(coq, v),
                "proper_in_wiggle_class": properness.is_proper_in_wiggle_class(coq, v, cap),
            }
        payload: Dict[str, Any] = {"order": list(coq.ordering.arrangement), "vertices": rows}
        if vertex is None:
            payload["proper_coq"] = properness.is_proper_coq(coq, cap)
        else:
            payload["proper"] = rows[vertex]["proper"]
        return payload

    def proper_mutate(self, coq: CycOrderedQuiver, vertex: str) -> Dict[str, Any]:
        realized = properness.realize_proper_at(coq, vertex)
        if realized is None:
            raise DomainError(f"vertex {vertex!r} is not proper in any ordering of the wiggle class")
        child = properness.proper_mutate(coq, vertex)
        linear = properness.linear_order_for_mutation(realized, vertex)
        _, witness = invariants.proper_mutation_witness(realized.quiver, linear, linear.index(vertex))
        return {
            "realized_order": list(realized.ordering.arrangement),
            "result": quiver_files.coq_document(child),
            "witness": witness_payload(witness),
        }

    def find_order(self, q: Quiver, targets: Sequence[int]) -> Dict[str, Any]:
        basis = homology_basis(underlying_graph(q))
        if len(targets) != len(basis):
            raise DomainError(f"expected {len(basis)} winding targets, got {len(targets)}")
        sigma = orderings.construct_ordering(q, WindingSignature.of(basis, targets))
        return {
            "basis": [str(c) for c in basis],
            "targets": list(targets),
            "order": list(sigma.arrangement) if sigma is not None else None,
        }

    def candidate_order(self, q: Quiver, exhaustive: bool = False, cap: Optional[int] = None) -> Dict[str, Any]:
        result = properness.candidate_ordering(q, exhaustive, cap)
        return {
            "order": list(result.ordering.arrangement) if result.ordering is not None else None,
            "totally_consistent": result.totally_consistent,
            "violations": [{"cycle": str(c), "expected": want, "winding": got} for c, want, got in result.violations],
        }

    def wiggle_path(self, q: Quiver, sigma: Sequence[str], target: Sequence[str]) -> Dict[str, Any]:
        path = orderings.wiggle_path(q, CyclicOrdering.of(sigma), CyclicOrdering.of(target))
        return {"path": [w.as_list() for w in path]}

    def verify_tp(self, coq: CycOrderedQuiver, budget: Optional[int] = None) -> Dict[str, Any]:
        verdict = properness.verify_totally_proper(coq, budget)
        payload: Dict[str, Any] = {"status": verdict.status, "explored": verdict.explored}
        if verdict.witness is not None:
            payload["witness"] = quiver_files.coq_document(verdict.witness)
            payload["vertex"] = verdict.vertex
            payload["path"] = list(verdict.path)
        return payload

    # --------- warkocze ----------

    def braid(self, coq: CycOrderedQuiver, word: str) -> Dict[str, Any]:
        loq = LinearlyOrderedQuiver.of(coq.quiver, coq.ordering.arrangement)
        w = braid_action.parse_word(word)
        image, witness = braid_action.act_word(loq, w)
        return {
            "word": str(w),
            "result": quiver_files.to_document(image.quiver, image.order),
            "witness": witness_payload(witness),
        }

    def orbit(self, coq: CycOrderedQuiver) -> Dict[str, Any]:
        loq = LinearlyOrderedQuiver.of(coq.quiver, coq.ordering.arrangement)
        images = braid_action.reversal_orbit(loq)
        return {"size": len(images), "quivers": [quiver_files.to_document(x.quiver, x.order) for x in images]}

    # --------- eksplorator ----------

    def explore(self, q: Quiver, limits: Optional[ExplorationLimits] = None, dot: bool = False) -> Dict[str, Any]:
        report = explorer.mutation_class(q, limits)
        payload = report_payload(report)
        if dot:
            payload["dot"] = explorer.exchange_graph_dot(report)
        return payload

    def explore_proper(self, coq: CycOrderedQuiver, limits: Optional[ExplorationLimits] = None,
                       dot: bool = False) -> Dict[str, Any]:
        report = explorer.proper_mutation_class(coq, limits)
        payload = report_payload(report)
        if dot:
            payload["dot"] = explorer.exchange_graph_dot(report)
        return payload

    def forkless(self, q: Quiver, limits: Optional[ExplorationLimits] = None,
                 contains: Optional[Quiver] = None) -> Dict[str, Any]:
        report = explorer.forkless_part(q, limits)
        payload = report_payload(report)
        payload["is_fork"] = is_fork(q) is not None
        if contains is not None:
            target = explorer.canonical_form(contains).b
            payload["contains"] = any(node.quiver.b == target for node in report.nodes)
        return payload

    def collide(self, sources: Sequence[Source], names: Sequence[str], ks: Iterable[int] = (),
                frobenius: bool = True) -> Dict[str, Any]:
        report = explorer.collision_scan(
            [s.quiver for s in sources], ks, names, [s.effective_order for s in sources], frobenius
        )
        return {
            "table": report.table.to_dict(orient="records"),
            "delta_collisions": report.delta_groups,
            "unresolved": report.full_groups,
            "resolved": report.resolved,
        }

    def corpus_names(self) -> List[str]:
        return corpus.names()
