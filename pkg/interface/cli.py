# interface/cli.py
"""
Wiersz poleceń coqkit.

    coqkit alexander data/quivers/dynkin-d6.json
    coqkit check-proper --vertex k fig5
    coqkit mutate --at b corpus:A3 --json

Kołczan podaje się jako ścieżkę do pliku JSON, nazwę pliku w COQKIT_DATA_DIR
albo 'corpus:<nazwa>'. Kody wyjścia: 0 ok, 1 błąd parsowania, 2 błąd dziedziny,
3 przekroczony limit, 4 wewnętrzna niespójność.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from dotenv import load_dotenv

# .env przed importem Config, który czyta os.environ przy imporcie
load_dotenv()
load_dotenv(dotenv_path=".env.local", override=False)

from core.config import Config  # noqa: E402
from core.errors import CoqError, ParseError  # noqa: E402
from core.logging_config import configure_cli_logging  # noqa: E402
from domain.models import ExplorationLimits  # noqa: E402
from integration import corpus  # noqa: E402
from application.coq_service import CoqService  # noqa: E402

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise ParseError(message)


def _csv(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in _csv(text)]
    except ValueError:
        raise ParseError(f"expected a comma separated list of integers, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise ParseError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")
    common.add_argument("--log-level", default=None, help="logging level (default: LOG_LEVEL)")

    quiver = _Parser(add_help=False, parents=[common])
    quiver.add_argument("quiver", help="quiver file, data name or corpus:<name>")
    quiver.add_argument("--order", type=_csv, default=None, help='cyclic ordering, e.g. "a,b,c"')

    parser = _Parser(prog="coqkit", description="Cyclically ordered quivers: properness, mutations, invariants.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("mutate", parents=[quiver], help="mutate at one or more vertices")
    p.add_argument("--at", type=_csv, required=True, help="vertex or comma separated sequence")

    p = sub.add_parser("invariants", parents=[quiver], help="full invariant report")
    p.add_argument("--k", type=_int_list, default=[], help="Alexander lattice indices, e.g. 2,3")
    p.add_argument("--cap", type=_positive, default=None, help="minor cap")
    p.add_argument("--no-frobenius", action="store_true")

    sub.add_parser("alexander", parents=[quiver], help="Alexander polynomial")

    p = sub.add_parser("lattice", parents=[quiver], help="Alexander lattice d_k in HNF")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--cap", type=_positive, default=None)

    p = sub.add_parser("check-proper", parents=[quiver], help="properness of vertices")
    p.add_argument("--vertex", "--at", dest="vertex", default=None)
    p.add_argument("--cap", type=_positive, default=None, help="chordless cycle cap")

    p = sub.add_parser("proper-mutate", parents=[quiver], help="proper mutation of a COQ")
    p.add_argument("--at", "--vertex", dest="vertex", required=True)

    p = sub.add_parser("find-order", parents=[quiver], help="ordering with prescribed windings")
    p.add_argument("--targets", type=_int_list, required=True, help="windings on the homology basis")

    p = sub.add_parser("candidate-order", parents=[quiver], help="candidate totally proper ordering")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--cap", type=_positive, default=None)

    p = sub.add_parser("wiggle-path", parents=[quiver], help="wiggles between two orderings")
    p.add_argument("--to", type=_csv, required=True)

    p = sub.add_parser("braid", parents=[quiver], help="apply a braid word (left to right)")
    p.add_argument("--word", required=True, help='e.g. "s2 S1 r3"')

    sub.add_parser("orbit", parents=[quiver], help="orbit under arrow reversals")

    p = sub.add_parser("explore", parents=[quiver], help="bounded mutation class")
    p.add_argument("--limits", type=ExplorationLimits.parse, default=None, help="depth=,size=,entry=")
    p.add_argument("--proper", action="store_true", help="proper mutation class of the COQ")
    p.add_argument("--dot", action="store_true", help="include GraphViz DOT text")

    p = sub.add_parser("forkless", parents=[quiver], help="forkless part of the mutation class")
    p.add_argument("--limits", type=ExplorationLimits.parse, default=None)
    p.add_argument("--contains", default=None, help="report whether this quiver lies in the forkless part")

    p = sub.add_parser("collide", parents=[common], help="group quivers by invariants")
    p.add_argument("quivers", nargs="*")
    p.add_argument("--trees", type=_positive, default=None, help="use all trees on N vertices")
    p.add_argument("--k", type=_int_list, default=[])
    p.add_argument("--no-frobenius", action="store_true")

    p = sub.add_parser("verify-tp", parents=[quiver], help="bounded total properness check")
    p.add_argument("--budget", type=_positive, default=None)

    return parser


# --------- wyjście ----------

def _human(verb: str, payload: Dict[str, Any]) -> str:
    if verb == "alexander":
        return payload["text"]
    if verb == "check-proper" and "proper" in payload:
        return "true" if payload["proper"] else "false"
    if verb == "verify-tp":
        line = f"{payload['status']} (explored {payload['explored']})"
        if "vertex" in payload:
            line += f"; improper vertex {payload['vertex']} after {' '.join(payload['path']) or 'no mutations'}"
        return line
    if verb in ("explore", "forkless"):
        lines = [f"{payload['size']} quivers, complete={payload['complete']}"]
        if "contains" in payload:
            lines.append(f"contains={payload['contains']}")
        if "dot" in payload:
            lines.append(payload["dot"])
        return "\n".join(lines)
    if verb == "collide":
        lines = [f"{len(payload['table'])} quivers"]
        for group in payload["delta_collisions"]:
            state = "unresolved" if group in payload["unresolved"] else "resolved"
            lines.append(f"Δ-collision {', '.join(group)}: {state}")
        return "\n".join(lines)
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


# --------- komendy ----------

def _dispatch(args: argparse.Namespace, service: CoqService) -> Dict[str, Any]:
    verb = args.verb
    if verb == "collide":
        if args.trees is not None:
            sources = corpus.trees(args.trees)
            names = [s.name for s in sources]
        else:
            if len(args.quivers) < 2:
                raise ParseError("collide needs at least two quivers or --trees N")
            sources = [service.load(ref) for ref in args.quivers]
            names = list(args.quivers)
        return service.collide(sources, names, args.k, not args.no_frobenius)

    source = service.load(args.quiver)
    coq = service.coq_of(source, args.order)
    handlers: Dict[str, Callable[[], Dict[str, Any]]] = {
        "mutate": lambda: service.mutate(source, args.at),
        "invariants": lambda: service.invariants(coq, args.k, not args.no_frobenius, args.cap),
        "alexander": lambda: service.alexander(coq),
        "lattice": lambda: service.lattice(coq, args.k, args.cap),
        "check-proper": lambda: service.check_proper(coq, args.vertex, args.cap),
        "proper-mutate": lambda: service.proper_mutate(coq, args.vertex),
        "find-order": lambda: service.find_order(source.quiver, args.targets),
        "candidate-order": lambda: service.candidate_order(source.quiver, args.exhaustive, args.cap),
        "wiggle-path": lambda: service.wiggle_path(source.quiver, coq.ordering.arrangement, args.to),
        "braid": lambda: service.braid(coq, args.word),
        "orbit": lambda: service.orbit(coq),
        "explore": lambda: (
            service.explore_proper(coq, args.limits, args.dot) if args.proper
            else service.explore(source.quiver, args.limits, args.dot)
        ),
        "forkless": lambda: service.forkless(
            source.quiver, args.limits, service.load(args.contains).quiver if args.contains else None
        ),
        "verify-tp": lambda: service.verify_tp(coq, args.budget),
    }
    return handlers[verb]()


def run(argv: Optional[Sequence[str]] = None, service: Optional[CoqService] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        configure_cli_logging(args.log_level or Config.LOG_LEVEL)
        payload = _dispatch(args, service or CoqService())
    except CoqError as exc:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(_human(args.verb, payload))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
