# integration/quiver_files.py
"""
Dokumenty JSON z kołczanami.

Format:
    {"vertices": ["a", "b", "c"],
     "arrows": [["a", "b", 1], ["b", "c", 2]],
     "order": ["a", "b", "c"]}          # opcjonalnie

Trójka strzałki to (źródło, cel, krotność > 0), najwyżej jedna na nieuporządkowaną parę.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from core.errors import DomainError, ParseError
from domain.cyclic_order import CycOrderedQuiver, CyclicOrdering
from domain.quiver import Quiver

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuiverDocument:
    quiver: Quiver
    # None, gdy plik nie miał pola "order"
    order: Optional[Tuple[str, ...]] = None

    @property
    def effective_order(self) -> Tuple[str, ...]:
        return self.order if self.order is not None else self.quiver.vertices

    def coq(self) -> CycOrderedQuiver:
        return CycOrderedQuiver(self.quiver, CyclicOrdering.of(self.effective_order))


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(message)


def parse_document(data: Any, source: str = "<document>") -> QuiverDocument:
    _expect(isinstance(data, dict), f"{source}: top level must be an object")
    vertices = data.get("vertices")
    _expect(isinstance(vertices, list) and all(isinstance(v, str) for v in vertices),
            f"{source}: 'vertices' must be a list of strings")
    _expect(len(set(vertices)) == len(vertices), f"{source}: duplicate vertex")
    known = set(vertices)

    arrows = data.get("arrows", [])
    _expect(isinstance(arrows, list), f"{source}: 'arrows' must be a list")
    seen = set()
    triples = []
    for item in arrows:
        _expect(isinstance(item, list) and len(item) == 3, f"{source}: arrow {item!r} is not a triple")
        src, tgt, m = item
        _expect(isinstance(src, str) and isinstance(tgt, str),
                f"{source}: arrow {item!r} must name vertices by strings")
        _expect(src in known and tgt in known, f"{source}: arrow {item!r} uses an unknown vertex")
        _expect(src != tgt, f"{source}: loop at {src!r}")
        _expect(isinstance(m, int) and not isinstance(m, bool) and m > 0,
                f"{source}: multiplicity of {src}->{tgt} must be a positive integer")
        pair = frozenset((src, tgt))
        _expect(pair not in seen, f"{source}: duplicate arrow pair {src}/{tgt}")
        seen.add(pair)
        triples.append((src, tgt, m))

    try:
        quiver = Quiver.from_arrows(vertices, triples)
    except DomainError as exc:
        raise ParseError(f"{source}: {exc}") from exc

    order = data.get("order")
    if order is None:
        logger.warning("%s has no 'order'; using file vertex order (invariants depend on it)", source)
        return QuiverDocument(quiver)
    _expect(isinstance(order, list) and all(isinstance(v, str) for v in order)
            and len(order) == len(vertices) and set(order) == known,
            f"{source}: 'order' must list every vertex exactly once")
    return QuiverDocument(quiver, tuple(order))


def loads(text: str, source: str = "<string>") -> QuiverDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return parse_document(data, source)


def load(path: Union[str, Path]) -> QuiverDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text") from exc
    return loads(text, str(path))


def to_document(quiver: Quiver, order: Optional[Any] = None) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "vertices": list(quiver.vertices),
        "arrows": [[s, t, m] for s, t, m in quiver.arrows()],
    }
    if order is not None:
        doc["order"] = list(order.arrangement if isinstance(order, CyclicOrdering) else order)
    return doc


def coq_document(coq: CycOrderedQuiver) -> Dict[str, Any]:
    return to_document(coq.quiver, coq.ordering)


def dumps(quiver: Quiver, order: Optional[Any] = None) -> str:
    return json.dumps(to_document(quiver, order), indent=2, ensure_ascii=False)


def dump(path: Union[str, Path], quiver: Quiver, order: Optional[Any] = None) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(quiver, order) + "\n", encoding="utf-8")
