"""Wiersz poleceń: wyjście tekstowe, --json i kody wyjścia."""
import json

import pytest

from interface.cli import run


def invoke(capsys, service, *argv):
    code = run(list(argv), service)
    out, err = capsys.readouterr()
    return code, out.strip(), err


def invoke_json(capsys, service, *argv):
    code, out, err = invoke(capsys, service, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_alexander_of_a_data_file(capsys, service):
    code, out, _ = invoke(capsys, service, "alexander", "dynkin-d6")
    assert code == 0
    assert out == "t^6 - t^5 - t + 1"


def test_alexander_with_an_explicit_order(capsys, service):
    code, out, _ = invoke(capsys, service, "alexander", "corpus:markov", "--order", "b,c,a")
    assert code == 0
    assert out == "t^3 + t^2 - t - 1"


@pytest.mark.parametrize("vertex, expected", [("k", "false"), ("g", "true"), ("i", "true")])
def test_check_proper_single_vertex(capsys, service, vertex, expected):
    code, out, _ = invoke(capsys, service, "check-proper", "--vertex", vertex, "fig5")
    assert code == 0
    assert out == expected


def test_check_proper_report(capsys, service):
    payload = invoke_json(capsys, service, "check-proper", "fig5")
    assert payload["order"] == ["g", "h", "i", "j", "k", "l"]
    assert payload["vertices"]["k"] == {"proper": False, "proper_in_wiggle_class": True}


def test_mutate_emits_a_document_without_order(capsys, service):
    payload = invoke_json(capsys, service, "mutate", "--at", "b", "path-a3")
    assert payload == {"vertices": ["a", "b", "c"], "arrows": [["a", "c", 1], ["b", "a", 1], ["c", "b", 1]]}


def test_mutation_sequence(capsys, service):
    payload = invoke_json(capsys, service, "mutate", "--at", "b,b", "path-a3")
    assert payload["arrows"] == [["a", "b", 1], ["b", "c", 1]]


def test_invariants(capsys, service):
    payload = invoke_json(capsys, service, "invariants", "corpus:Q2", "--k", "2")
    assert payload["markov"] == 4
    assert payload["alexander"]["coefficients"] == [-1, -1, 1, 1]
    assert payload["lattices"]["2"]["hnf"] == [[1, 0, -1], [0, 2, 2]]
    assert [p["coefficients"] for p in payload["frobenius"]] == [[1, 1], [-1, 0, 1]]


def test_lattice_cap(capsys, service):
    code, _, err = invoke(capsys, service, "lattice", "corpus:A8", "--k", "4", "--cap", "100")
    assert code == 3
    assert "error:" in err


def test_proper_mutate(capsys, service):
    payload = invoke_json(capsys, service, "proper-mutate", "fig5", "--at", "k")
    assert payload["result"]["vertices"] == ["g", "h", "i", "j", "k", "l"]
    assert len(payload["witness"]["g"]) == 6


def test_proper_mutate_at_an_unknown_vertex(capsys, service):
    code, _, err = invoke(capsys, service, "proper-mutate", "fig5", "--at", "z")
    assert code == 2
    assert "error:" in err


def test_find_order(capsys, service):
    payload = invoke_json(capsys, service, "find-order", "corpus:cycle4", "--targets", "2")
    assert payload["order"] is not None
    payload = invoke_json(capsys, service, "find-order", "corpus:cycle4", "--targets", "4")
    assert payload["order"] is None


def test_find_order_checks_the_number_of_targets(capsys, service):
    code, _, _ = invoke(capsys, service, "find-order", "corpus:cycle4", "--targets", "1,2")
    assert code == 2


def test_candidate_order(capsys, service):
    payload = invoke_json(capsys, service, "candidate-order", "punctured-annulus", "--exhaustive")
    assert payload["order"] is None


def test_wiggle_path(capsys, service):
    payload = invoke_json(
        capsys, service, "wiggle-path", "corpus:cycle4", "--order", "v1,v2,v4,v3", "--to", "v1,v4,v2,v3"
    )
    assert payload["path"]


def test_verify_tp(capsys, service):
    code, out, _ = invoke(capsys, service, "verify-tp", "corpus:A3")
    assert code == 0
    assert out.startswith("verified (explored ")


def test_verify_tp_refutation(capsys, service):
    code, out, _ = invoke(capsys, service, "verify-tp", "corpus:cycle4", "--order", "v1,v3,v2,v4")
    assert code == 0
    assert out.startswith("refuted")
    assert "improper vertex" in out


def test_braid(capsys, service):
    payload = invoke_json(capsys, service, "braid", "corpus:A4", "--word", "S1 r1")
    assert payload["word"] == "S1 r1"
    assert payload["result"]["order"] == ["v2", "v1", "v3", "v4"]


def test_bad_braid_word(capsys, service):
    code, _, err = invoke(capsys, service, "braid", "corpus:A4", "--word", "q1")
    assert code == 1
    assert "error:" in err


def test_orbit(capsys, service):
    assert invoke_json(capsys, service, "orbit", "corpus:A4")["size"] == 8


def test_explore(capsys, service):
    code, out, _ = invoke(capsys, service, "explore", "corpus:A3")
    assert code == 0
    assert out == "4 quivers, complete=True"


def test_explore_with_dot(capsys, service):
    code, out, _ = invoke(capsys, service, "explore", "corpus:a21", "--dot")
    assert code == 0
    assert "graph exchange {" in out


def test_explore_bad_limits(capsys, service):
    code, _, _ = invoke(capsys, service, "explore", "corpus:A3", "--limits", "width=2")
    assert code == 1


def test_forkless_contains(capsys, service):
    payload = invoke_json(
        capsys, service, "forkless", "corpus:pair-q2", "--contains", "corpus:pair-q1", "--limits", "depth=3,size=50"
    )
    assert payload["contains"] is False
    assert payload["is_fork"] is False


def test_collide_trees(capsys, service):
    code, out, _ = invoke(capsys, service, "collide", "--trees", "6")
    assert code == 0
    assert out == "6 quivers"


def test_collide_eight_vertex_pair(capsys, service):
    code, out, _ = invoke(
        capsys, service, "collide", "corpus:tree8-left", "corpus:tree8-right", "--k", "7", "--no-frobenius"
    )
    assert code == 0
    assert "Δ-collision corpus:tree8-left, corpus:tree8-right: resolved" in out


def test_collide_needs_two_quivers(capsys, service):
    code, _, _ = invoke(capsys, service, "collide", "corpus:A3")
    assert code == 1


def test_unknown_quiver(capsys, service):
    code, _, err = invoke(capsys, service, "alexander", "no-such-quiver")
    assert code == 1
    assert "no-such-quiver" in err


def test_unknown_verb(capsys, service):
    code, _, _ = invoke(capsys, service, "frobnicate", "corpus:A3")
    assert code == 1


@pytest.mark.parametrize(
    "content",
    [
        b"\xff\xfe{}",
        b'{"vertices": ["a", "b"], "arrows": [[["a"], "b", 1]]}',
        b'{"vertices": ["a", "b"], "arrows": [], "order": ["a", 1]}',
    ],
)
def test_malformed_quiver_file_exits_with_status_1(capsys, service, tmp_path, content):
    path = tmp_path / "broken.json"
    path.write_bytes(content)
    code, _, err = invoke(capsys, service, "alexander", str(path))
    assert code == 1
    assert "error:" in err
