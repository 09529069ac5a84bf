"""Wczytywanie i zapis dokumentów JSON z kołczanami."""
import logging
from pathlib import Path

import pytest

from core.errors import ParseError
from integration import corpus
from integration.quiver_files import coq_document, dump, load, loads, parse_document, to_document

DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "quivers"


@pytest.mark.parametrize("path", sorted(DATA_DIR.glob("*.json")), ids=lambda p: p.stem)
def test_bundled_files_parse(path):
    doc = load(path)
    assert doc.coq().n == doc.quiver.n


@pytest.mark.parametrize(
    "filename, name",
    [("fig5.json", "fig5"), ("markov.json", "markov"), ("grid-2x6.json", "grid-2x6")],
)
def test_bundled_files_match_the_corpus(filename, name):
    doc = load(DATA_DIR / filename)
    entry = corpus.get(name)
    assert doc.quiver == entry.quiver
    assert doc.coq().ordering == entry.coq().ordering


def test_missing_order_falls_back_to_vertex_order(caplog):
    with caplog.at_level(logging.WARNING):
        doc = loads('{"vertices": ["b", "a"], "arrows": [["a", "b", 2]]}', "x.json")
    assert doc.order is None
    assert doc.effective_order == ("b", "a")
    assert doc.quiver.weight("a", "b") == 2
    assert "x.json" in caplog.text


@pytest.mark.parametrize(
    "payload",
    [
        [],
        {"vertices": "abc"},
        {"vertices": ["a", "a"]},
        {"vertices": ["a", "b"], "arrows": [["a", "c", 1]]},
        {"vertices": ["a", "b"], "arrows": [["a", "a", 1]]},
        {"vertices": ["a", "b"], "arrows": [["a", "b", 0]]},
        {"vertices": ["a", "b"], "arrows": [["a", "b", True]]},
        {"vertices": ["a", "b"], "arrows": [["a", "b", 1], ["b", "a", 1]]},
        {"vertices": ["a", "b"], "arrows": [["a", "b"]]},
        {"vertices": ["a", "b"], "arrows": [], "order": ["a"]},
        {"vertices": ["a", "b"], "arrows": [[["a"], "b", 1]]},
        {"vertices": ["a", "b"], "arrows": [], "order": ["a", 1]},
        {"vertices": ["a", "b"], "arrows": [], "order": ["a", "a"]},
        {"vertices": ["a", "b"], "arrows": [], "order": [["a"], "b"]},
    ],
)
def test_malformed_documents(payload):
    with pytest.raises(ParseError):
        parse_document(payload)


def test_invalid_json_and_missing_file(tmp_path):
    with pytest.raises(ParseError):
        loads("{not json")
    with pytest.raises(ParseError):
        load(tmp_path / "missing.json")


def test_file_that_is_not_utf8(tmp_path):
    path = tmp_path / "binary.json"
    path.write_bytes(b"\xff\xfe{}")
    with pytest.raises(ParseError):
        load(path)


def test_dump_and_load(tmp_path):
    entry = corpus.punctured_annulus()
    target = tmp_path / "out" / "annulus.json"
    dump(target, entry.quiver, entry.coq().ordering)
    doc = load(target)
    assert doc.quiver == entry.quiver
    assert doc.order == ("a", "b", "c", "d", "e")


def test_mutated_document_has_no_order(service):
    doc = service.mutate(service.load("path-a3"), ["b"])
    assert doc == {"vertices": ["a", "b", "c"], "arrows": [["a", "c", 1], ["b", "a", 1], ["c", "b", 1]]}
    assert to_document(load(DATA_DIR / "path-a3.json").quiver)["arrows"] == [["a", "b", 1], ["b", "c", 1]]


def test_coq_document(fig5):
    doc = coq_document(fig5)
    assert doc["order"] == ["g", "h", "i", "j", "k", "l"]
    assert ["i", "j", 1] in doc["arrows"]
