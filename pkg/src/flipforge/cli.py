"""Command-line front-end.

Subcommands wrap the library one-to-one and stay deterministic: identical
flags produce byte-identical JSON and CSV. Exit codes: 0 success or verdict
pass, 1 verdict fail, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .analysis import bounds_table, bounds_to_csv, search_sumfree_inverse_closed, verify_flip
from .construct import ColouredConnectingSet, cartesian_product, cayley_build, pack_cayley, strong_product
from .ecgraph import EdgeColouredGraph
from .group import format_elements, parse_group_text
from .pipelines import (
    DEFAULT_MATERIALIZE_LIMIT,
    VerificationError,
    _make_gaps_plan,
    build_br,
    colour_merge,
    plan_br,
)
from .setalg import GroupSubset

MATERIALIZE_LIMIT_ENV = "FLIPFORGE_MATERIALIZE_LIMIT"


def _dump_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON in {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError(f"expected a JSON object in {path}")
    return data


def _load_graph(path: str) -> EdgeColouredGraph:
    return EdgeColouredGraph.from_json_dict(_load_json(path))


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _format_vector(values: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _materialize_limit(flag_value: Optional[int]) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(MATERIALIZE_LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{MATERIALIZE_LIMIT_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_MATERIALIZE_LIMIT


def _parse_class_flag(spec_text: str, flag: str) -> tuple[int, list]:
    """Parse ``colour=e;e;...`` where an element is ``r`` or ``r1,r2,...``."""
    head, sep, tail = spec_text.partition("=")
    if not sep or not head.strip() or not tail.strip():
        raise ValueError(f"{flag} expects 'colour=elem;elem;...', got {spec_text!r}")
    try:
        colour = int(head)
    except ValueError:
        raise ValueError(f"{flag} colour must be an integer, got {head!r}") from None
    elements: list = []
    for token in tail.split(";"):
        token = token.strip()
        if not token:
            continue
        if "," in token:
            elements.append(tuple(int(p) for p in token.split(",")))
        else:
            elements.append(int(token))
    if not elements:
        raise ValueError(f"{flag} has no elements in {spec_text!r}")
    return colour, elements


def _emit_graph(graph: EdgeColouredGraph, out: Optional[str], dot: Optional[str]) -> None:
    _write_text(out, _dump_json(graph.to_json_dict()))
    if dot is not None:
        _write_text(dot, graph.to_dot())


def _cmd_construct_br(args: argparse.Namespace) -> int:
    plan = plan_br(args.b, args.r)
    graph, report = build_br(plan)
    if args.plan_out:
        _write_text(args.plan_out, _dump_json(plan.to_json_dict()))
    if args.out:
        _emit_graph(graph, args.out, args.dot)
    elif args.dot:
        _write_text(args.dot, graph.to_dot())
    print(f"order {graph.vertex_count}")
    if args.verify:
        print(f"deg={_format_vector(report.colour_degrees)}")
        print(f"e={_format_vector(report.uniform_e_chain)}")
        print("PASS" if report.passed else "FAIL")
        return 0 if report.passed else 1
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    graph = _load_graph(args.infile)
    expected = _int_list(args.sequence, "--sequence") if args.sequence else None
    report = verify_flip(graph, expected=expected)
    sys.stdout.write(_dump_json(report.to_json_dict()))
    return 0 if report.passed else 1


def _cmd_product(args: argparse.Namespace) -> int:
    left = _load_graph(args.left)
    right = _load_graph(args.right)
    build = strong_product if args.kind == "strong" else cartesian_product
    _emit_graph(build(left, right), args.out, args.dot)
    return 0


def _cmd_cayley(args: argparse.Namespace) -> int:
    spec = parse_group_text(args.group)
    classes: dict[int, GroupSubset] = {}
    for class_text in args.colour_class:
        colour, elements = _parse_class_flag(class_text, "--class")
        if colour in classes:
            raise ValueError(f"--class repeats colour {colour}")
        classes[colour] = GroupSubset.of(spec, elements)
    ccs = ColouredConnectingSet.of(spec, classes, args.colours)
    _emit_graph(cayley_build(ccs), args.out, args.dot)
    return 0


def _cmd_pack(args: argparse.Namespace) -> int:
    first = ColouredConnectingSet.from_json_dict(_load_json(args.first))
    second = ColouredConnectingSet.from_json_dict(_load_json(args.second))
    _emit_graph(pack_cayley(first, second), args.out, args.dot)
    return 0


def _cmd_merge(args: argparse.Namespace) -> int:
    graph = _load_graph(args.infile)
    parts = []
    for chunk in args.partition.split("|"):
        chunk = chunk.strip()
        if chunk:
            parts.append(_int_list(chunk, "--partition"))
    _emit_graph(colour_merge(graph, parts), args.out, args.dot)
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    rows = bounds_table(_int_list(args.b, "--b"))
    if args.format != "csv":
        raise ValueError(f"unsupported format {args.format!r}")
    _write_text(args.out, bounds_to_csv(rows))
    return 0


def _cmd_gaps_plan(args: argparse.Namespace) -> int:
    q, k = args.q, args.k
    prefix_order = None
    if args.from_br:
        if args.prefix_e or args.prefix_deg:
            raise ValueError("--from-br and --prefix-e/--prefix-deg are mutually exclusive")
        br = _int_list(args.from_br, "--from-br")
        if len(br) != 2:
            raise ValueError(f"--from-br expects 'b,r', got {args.from_br!r}")
        if q != 2:
            raise ValueError("--from-br supplies a two-colour prefix, so --q must be 2")
        graph, report = build_br(plan_br(br[0], br[1]))
        prefix_e = report.uniform_e_chain
        prefix_deg = report.colour_degrees
        prefix_order = graph.vertex_count
    else:
        if not (args.prefix_e and args.prefix_deg):
            raise ValueError("need either --from-br or both --prefix-e and --prefix-deg")
        prefix_e = _int_list(args.prefix_e, "--prefix-e")
        prefix_deg = _int_list(args.prefix_deg, "--prefix-deg")

    plan = _make_gaps_plan(q, k, prefix_e, prefix_deg, args.t, prefix_order, enforce=False)
    _write_text(args.out, _dump_json(plan.to_json_dict()))

    limit = _materialize_limit(args.materialize_limit)
    if plan.order_estimate > limit:
        print(f"materialization skipped: estimated order {plan.order_estimate} > limit {limit}")
    else:
        print(f"materialization feasible: estimated order {plan.order_estimate} <= limit {limit}")

    problems = []
    if q <= 1 or 4 * q >= k:
        problems.append(f"q={q} outside 1 < q < k/4 for k={k}")
    if plan.gap_slack <= 0:
        problems.append(f"gap condition fails with slack {plan.gap_slack}")
    if plan.t < plan.t_min:
        problems.append(f"t={plan.t} below minimum {plan.t_min}")
    if plan.first_chain_violation is not None:
        kind, colour = plan.first_chain_violation
        problems.append(f"predicted {kind} chain breaks between colours {colour} and {colour + 1}")
    if problems:
        for problem in problems:
            print(f"plan invalid: {problem}")
        return 1
    print("plan valid")
    return 0


def _cmd_search_sumfree(args: argparse.Namespace) -> int:
    spec = parse_group_text(args.group)
    result = search_sumfree_inverse_closed(spec, mode=args.mode, budget=args.budget)
    sys.stdout.write(_dump_json({
        "group": spec.to_text(),
        "subset": format_elements(result.subset.elements),
        "size": result.size,
        "mode": result.mode,
        "optimal": result.optimal,
        "budget_exhausted": result.budget_exhausted,
        "examined": result.examined,
    }))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flipforge",
        description="Build, verify and tabulate flip-coloured graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct-br", help="two-colour Cayley construction for degrees (b, r)")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", help="graph JSON path ('-' for stdout)")
    p.add_argument("--plan-out", dest="plan_out", help="plan JSON path")
    p.add_argument("--dot", help="DOT export path")
    p.add_argument("--verify", action="store_true", help="print the verified profile")
    p.set_defaults(func=_cmd_construct_br)

    p = sub.add_parser("verify", help="run the flip verifier on a graph JSON file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--sequence", help="expected degree sequence, e.g. 4,5")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("product", help="coloured strong or Cartesian product")
    p.add_argument("--kind", choices=("strong", "cartesian"), required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("cayley", help="Cayley graph from colour classes")
    p.add_argument("--group", required=True, help="e.g. z:40 or z:2,28")
    p.add_argument("--class", dest="colour_class", action="append", required=True,
                   metavar="SPEC", help="colour=elem;elem;... (residues comma-separated)")
    p.add_argument("--colours", type=int, help="total colour count (default: largest class colour)")
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=_cmd_cayley)

    p = sub.add_parser("pack", help="pack two connecting-set JSON files into one Cayley graph")
    p.add_argument("--first", required=True)
    p.add_argument("--second", required=True)
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=_cmd_pack)

    p = sub.add_parser("merge", help="merge colour classes of a graph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--partition", required=True, help="parts separated by '|', e.g. 1,2|3")
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=_cmd_merge)

    p = sub.add_parser("bounds", help="order-bound table rows for given b values")
    p.add_argument("--b", required=True, help="comma-separated b values")
    p.add_argument("--format", default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("gaps-plan", help="plan the amplified construction and certify its chains")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--from-br", dest="from_br", help="b,r: build the two-colour prefix and use its profile")
    p.add_argument("--prefix-e", dest="prefix_e", help="closed counts on colours 1..q")
    p.add_argument("--prefix-deg", dest="prefix_deg", help="degrees on colours 1..q")
    p.add_argument("--t", type=int, help="matching multiplicity override")
    p.add_argument("--materialize-limit", dest="materialize_limit", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gaps_plan)

    p = sub.add_parser("search-sumfree", help="search sum-free inverse-closed subsets")
    p.add_argument("--group", required=True)
    p.add_argument("--mode", choices=("exhaustive", "greedy"), default="exhaustive")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_search_sumfree)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
