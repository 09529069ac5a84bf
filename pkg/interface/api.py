# interface/api.py
from flask import Blueprint, current_app, jsonify, request

from core.errors import CoqError, ParseError
from domain.models import ExplorationLimits
from application.coq_service import CoqService

api_bp = Blueprint("api", __name__, url_prefix="/api")

_service = CoqService()


def _body() -> dict:
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise ParseError("request body must be a JSON object")
    return data


def _coq(data: dict):
    """Kołczan z pola 'quiver' (dokument JSON) albo 'corpus' (nazwa z korpusu)."""
    if "corpus" in data:
        source = _service.load(f"corpus:{data['corpus']}")
    elif "quiver" in data:
        source = _service.from_payload(data["quiver"])
    else:
        raise ParseError("request needs a 'quiver' document or a 'corpus' name")
    return source, _service.coq_of(source, data.get("order"))


@api_bp.errorhandler(CoqError)
def handle_coq_error(exc: CoqError):
    current_app.logger.info("API request failed: %s", exc)
    return jsonify({"error": str(exc), "type": type(exc).__name__}), exc.http_status


@api_bp.route("/corpus")
def get_corpus():
    return jsonify({"names": _service.corpus_names()})


@api_bp.route("/corpus/<path:name>")
def get_corpus_entry(name: str):
    entry = _service.load(f"corpus:{name}")
    doc = {"vertices": list(entry.quiver.vertices),
           "arrows": [list(a) for a in entry.quiver.arrows()],
           "order": list(entry.effective_order)}
    return jsonify({"name": entry.name, "description": entry.description, "quiver": doc})


@api_bp.route("/mutate", methods=["POST"])
def post_mutate():
    data = _body()
    source, _ = _coq(data)
    at = data.get("at")
    if isinstance(at, str):
        at = [at]
    if not at or not isinstance(at, list) or not all(isinstance(v, str) for v in at):
        raise ParseError("'at' must name a vertex or a list of vertices")
    return jsonify(_service.mutate(source, at))


@api_bp.route("/invariants", methods=["POST"])
def post_invariants():
    data = _body()
    _, coq = _coq(data)
    return jsonify(_service.invariants(coq, data.get("k", []), bool(data.get("frobenius", True))))


@api_bp.route("/check-proper", methods=["POST"])
def post_check_proper():
    data = _body()
    _, coq = _coq(data)
    return jsonify(_service.check_proper(coq, data.get("vertex")))


@api_bp.route("/proper-mutate", methods=["POST"])
def post_proper_mutate():
    data = _body()
    _, coq = _coq(data)
    if "vertex" not in data:
        raise ParseError("'vertex' is required")
    return jsonify(_service.proper_mutate(coq, data["vertex"]))


@api_bp.route("/candidate-order", methods=["POST"])
def post_candidate_order():
    data = _body()
    source, _ = _coq(data)
    return jsonify(_service.candidate_order(source.quiver, bool(data.get("exhaustive", False))))


@api_bp.route("/braid", methods=["POST"])
def post_braid():
    data = _body()
    _, coq = _coq(data)
    if not isinstance(data.get("word"), str):
        raise ParseError("'word' must be a string such as \"s2 S1 r3\"")
    return jsonify(_service.braid(coq, data["word"]))


@api_bp.route("/explore", methods=["POST"])
def post_explore():
    data = _body()
    source, _ = _coq(data)
    limits = ExplorationLimits.parse(data.get("limits", ""))
    return jsonify(_service.explore(source.quiver, limits))


@api_bp.route("/verify-tp", methods=["POST"])
def post_verify_tp():
    data = _body()
    _, coq = _coq(data)
    return jsonify(_service.verify_tp(coq, data.get("budget")))
