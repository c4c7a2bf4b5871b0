"""
Command-line front end.

Exit codes: 0 on success (whatever the answer), 2 on input errors, 3 when two
computations that must agree do not.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from . import __version__
from .edge_ideals import binomial_edge_ideal, decide_toric, equivalence_report, toric_ideal_of_graph
from .errors import GraphFormatError, InternalInconsistencyError
from .graph_core import Graph, parse_graph
from .poly_engine import (
    MonomialOrder,
    OrderKind,
    format_binomial,
    ideal_equal,
    reduced_groebner_basis,
    saturate_all,
    t_variable_names,
    xy_variable_names,
)
from .sweep import SAMPLE_MAX_N, resolve_sweep_cap, run_sample, run_sweep
from .utils import get_backend_info

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INCONSISTENT = 3

CLI_MAX_VERTICES = 64


class InputError(Exception):
    """Anything wrong with what the user passed in."""


def _emit(payload: Dict[str, Any], as_json: bool, text: Callable[[Dict[str, Any]], List[str]]) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(text(payload)))


def _load_graph(path: str) -> Graph:
    try:
        content = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    try:
        g = parse_graph(content)
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from exc
    if g.n > CLI_MAX_VERTICES:
        raise InputError(f"{path}: {g.n} vertices exceed the limit of {CLI_MAX_VERTICES}")
    return g


def _fmt_bool(value: Optional[bool]) -> str:
    return "-" if value is None else str(value).lower()


def _ideal_lines(payload: Dict[str, Any]) -> List[str]:
    return payload["generators"] or ["(zero ideal)"]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    report = decide_toric(g, verify=args.verify, order=args.order)
    payload = report.to_dict()
    if args.equivalences:
        payload["equivalences"] = equivalence_report(g).to_dict()

    def text(p: Dict[str, Any]) -> List[str]:
        lines = [
            f"n: {p['n']}",
            "components: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in p["components"]),
            f"is_toric: {_fmt_bool(p['is_toric'])}",
        ]
        w = p["witness"]
        lines.append(f"witness: k={w['k']} i={w['i']} j={w['j']}" if w else "witness: -")
        lines.append(f"verified: {_fmt_bool(p['verified'])}")
        for block in p["decomposition"] or []:
            component = "{" + ",".join(map(str, block["component"])) + "}"
            lines.append(f"block {component}: " + ("; ".join(block["generators"]) or "(zero ideal)"))
        if "equivalences" in p:
            for key, value in sorted(p["equivalences"].items()):
                if isinstance(value, dict):
                    value = f"{_fmt_bool(value['value'])} ({value['note']})"
                else:
                    value = _fmt_bool(value)
                lines.append(f"{key}: {value}")
        return lines

    _emit(payload, args.json, text)
    return EXIT_OK


def cmd_gb(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    j = binomial_edge_ideal(g)
    order = MonomialOrder.of(args.order, j.num_vars)
    names = xy_variable_names(g.n)
    payload = {
        "n": g.n,
        "order": order.kind.value,
        "generators": [format_binomial(f, names) for f in reduced_groebner_basis(j, order)],
    }
    _emit(payload, args.json, _ideal_lines)
    return EXIT_OK


def cmd_saturate(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    j = binomial_edge_ideal(g)
    saturated = saturate_all(j)
    names = xy_variable_names(g.n)
    payload = {
        "n": g.n,
        "generators": [format_binomial(f, names) for f in saturated.generators],
        "equals_input": ideal_equal(saturated, j),
    }
    _emit(payload, args.json, lambda p: _ideal_lines(p) + [f"equals_input: {_fmt_bool(p['equals_input'])}"])
    return EXIT_OK


def cmd_equal(args: argparse.Namespace) -> int:
    first = _load_graph(args.first)
    second = _load_graph(args.second)
    if first.n != second.n:
        raise InputError(f"Graphs have {first.n} and {second.n} vertices; ideals live in different rings")
    j1, j2 = binomial_edge_ideal(first), binomial_edge_ideal(second)
    payload = {"n": first.n, "equal": ideal_equal(j1, j2, MonomialOrder.of(args.order, j1.num_vars))}
    _emit(payload, args.json, lambda p: [f"equal: {_fmt_bool(p['equal'])}"])
    return EXIT_OK


def cmd_toric_graph(args: argparse.Namespace) -> int:
    g = _load_graph(args.path)
    ideal = toric_ideal_of_graph(g)
    names = t_variable_names(g.num_edges)
    payload = {
        "n": g.n,
        "edge_variables": {name: list(edge) for name, edge in zip(names, g.sorted_edges)},
        "generators": [format_binomial(f, names) for f in ideal.generators],
    }

    def text(p: Dict[str, Any]) -> List[str]:
        legend = [f"{name} = {{{u},{v}}}" for name, (u, v) in zip(names, g.sorted_edges)]
        return legend + _ideal_lines(p)

    _emit(payload, args.json, text)
    return EXIT_OK


def _summary_text(p: Dict[str, Any]) -> List[str]:
    lines = []
    for level in p.get("levels", []):
        lines.append(
            f"n={level['n']}: graphs={level['graphs_checked']} toric={level['toric_count']} "
            f"expected={level['expected_toric_count']}"
        )
    if "levels" not in p:
        lines.append(f"n={p['n']}: graphs={p['graphs_checked']} toric={p['toric_count']} seed={p['seed']}")
    lines.append(f"mismatches: {len(p['mismatches'])}")
    for m in p["mismatches"]:
        lines.append(f"  n={m['n']} mask={m['mask']} is_toric={m['is_toric']} verified={m['verified']}")
    if "wall_time" in p:
        lines.append(f"wall_time: {p['wall_time']}s")
    return lines


def cmd_sweep(args: argparse.Namespace) -> int:
    cap = resolve_sweep_cap()
    if not 1 <= args.max_n <= cap:
        raise InputError(f"--max-n must lie in 1..{cap}, got {args.max_n}")
    summary = run_sweep(args.max_n, jobs=args.jobs)
    _emit(summary.to_dict(include_wall_time=args.wall_time), args.json, _summary_text)
    return EXIT_OK if summary.ok else EXIT_INCONSISTENT


def cmd_sample(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= SAMPLE_MAX_N:
        raise InputError(f"--n must lie in 1..{SAMPLE_MAX_N}, got {args.n}")
    summary = run_sample(args.n, args.count, seed=args.seed, jobs=args.jobs)
    _emit(summary.to_dict(include_wall_time=args.wall_time), args.json, _summary_text)
    return EXIT_OK if summary.ok else EXIT_INCONSISTENT


def cmd_info(args: argparse.Namespace) -> int:
    payload = dict(get_backend_info(), version=__version__)
    _emit(payload, args.json, lambda p: [f"{key}: {p[key]}" for key in sorted(p)])
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beitoric",
        description="Decide and verify toricness of binomial edge ideals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="logging level for messages on stderr (default: WARNING)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace], int], help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON (keys sorted)")
        p.set_defaults(handler=handler)
        return p

    def add_order(p: argparse.ArgumentParser) -> None:
        p.add_argument("--order", choices=[k.value for k in OrderKind], default=OrderKind.GREVLEX.value)

    p = add("check", cmd_check, "decide whether J_G is toric")
    p.add_argument("path")
    p.add_argument("--verify", action="store_true", help="confirm the decision by saturation")
    p.add_argument("--equivalences", action="store_true", help="evaluate all equivalent conditions")
    add_order(p)

    p = add("gb", cmd_gb, "print the reduced Groebner basis of J_G")
    p.add_argument("path")
    add_order(p)

    p = add("saturate", cmd_saturate, "print the saturation of J_G by all variables")
    p.add_argument("path")

    p = add("equal", cmd_equal, "compare the binomial edge ideals of two graphs")
    p.add_argument("first")
    p.add_argument("second")
    add_order(p)

    p = add("toric-graph", cmd_toric_graph, "print the toric ideal of a graph in edge variables")
    p.add_argument("path")

    p = add("sweep", cmd_sweep, "check every labeled graph up to --max-n vertices")
    p.add_argument("--max-n", type=_positive_int, default=4)
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--wall-time", action="store_true", help="include the wall time in the output")

    p = add("sample", cmd_sample, "check random graphs on --n vertices")
    p.add_argument("--n", type=_positive_int, default=6)
    p.add_argument("--count", type=_positive_int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--wall-time", action="store_true", help="include the wall time in the output")

    add("info", cmd_info, "show versions of the arithmetic backends")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InternalInconsistencyError as exc:
        logger.error(f"Internal inconsistency: {exc}")
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
