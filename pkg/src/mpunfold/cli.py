"""Command line interface.

JSON on stdout for machine consumption (human tables behind --pretty),
structured JSON errors on stderr.  Exit codes: 0 success, 1 reachability
query answered "unreachable" (or verification found mismatches), 2 usage or
input error, 3 cap exceeded.  The default exploration cap is 10^6 states;
the MPU_CAP environment variable overrides it, an explicit --cap wins.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .expr import BnetParseError, format_expr
from .network import infer_regulatory_graph, parse_bnet_file, print_bnet
from .oracle import RandomNetSpec, check_equivalence, random_network
from .reach import (
    DEFAULT_CAP,
    CapExceeded,
    attractors,
    export_dot,
    fixed_points,
    mp_boolean_projection,
    reachable_set,
    reaches,
)
from .semantics import (
    async_successors,
    general_successors,
    mp_successors,
    sync_successor,
)
from .unfold import MODES, UnfoldSpec, unfold

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _emit_error(kind: str, message: str) -> None:
    print(
        json.dumps({"error": {"type": kind, "message": message}}, separators=(",", ":")),
        file=sys.stderr,
    )


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("MPU_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"MPU_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP


def _write_or_print(text: str, out: str | None, summary: dict | None = None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit(summary or {"output": out})


def _unfold_spec(args) -> UnfoldSpec:
    components = None
    if args.components:
        components = tuple(
            name.strip() for name in args.components.split(",") if name.strip()
        )
    return UnfoldSpec(components=components, mode=args.mode)


def _cmd_show(net, args) -> int:
    if args.pretty:
        width = max(len(n) for n in net.names)
        for name, rule in net.components():
            print(f"{name:<{width}}  <-  {format_expr(rule, net.names)}")
    else:
        _emit(
            {
                "n": net.n,
                "components": [
                    {"name": name, "rule": format_expr(rule, net.names)}
                    for name, rule in net.components()
                ],
            }
        )
    return EXIT_OK


def _cmd_fixpoints(net, args) -> int:
    points = fixed_points(net)
    if args.pretty:
        for s in points:
            print(s)
    else:
        _emit(points)
    return EXIT_OK


_SUCCESSORS = {
    "sync": lambda net, s: [sync_successor(net, s)],
    "async": async_successors,
    "general": general_successors,
    "mp": mp_successors,
}


def _cmd_succ(net, args) -> int:
    _emit(_SUCCESSORS[args.semantics](net, args.state))
    return EXIT_OK


def _cmd_unfold(net, args) -> int:
    spec = _unfold_spec(args)
    ext = unfold(net, spec)
    text = print_bnet(ext)
    _write_or_print(text, args.output, {"components": ext.n, "output": args.output})
    return EXIT_OK


def _cmd_reach(net, args) -> int:
    result = reaches(net, args.semantics, args.from_state, args.to, cap=_cap(args))
    _emit(
        {
            "verdict": result.verdict,
            "states_explored": result.states_explored,
            "witness": result.witness,
        }
    )
    if result.verdict == "reachable":
        return EXIT_OK
    if result.verdict == "unreachable":
        return EXIT_NEGATIVE
    return EXIT_CAP


def _stg_json(stg) -> dict:
    return {
        "semantics": stg.semantics,
        "roots": list(stg.roots),
        "nodes": stg.nodes,
        "edges": [
            {"source": e.source, "target": e.target, "tag": e.tag} for e in stg.edges
        ],
        "cap": stg.cap,
        "cap_exceeded": stg.cap_exceeded,
    }


def _cmd_stg(net, args) -> int:
    if args.project_boolean:
        if args.semantics != "mp":
            raise ValueError("--project-boolean applies to --semantics mp only")
        stg = mp_boolean_projection(net, args.from_state, cap=_cap(args))
    else:
        stg = reachable_set(net, args.semantics, args.from_state, cap=_cap(args))
    if args.format == "dot":
        _write_or_print(export_dot(stg), args.output)
    else:
        text = json.dumps(_stg_json(stg), separators=(",", ":")) + "\n"
        _write_or_print(text, args.output)
    return EXIT_CAP if stg.cap_exceeded else EXIT_OK


def _cmd_attractors(net, args) -> int:
    roots = args.roots.split(",") if args.roots else None
    found = attractors(net, args.semantics, cap=_cap(args), roots=roots)
    _emit([{"states": list(a.states), "kind": a.kind} for a in found])
    return EXIT_OK


def _cmd_reggraph(net, args) -> int:
    graph = infer_regulatory_graph(net)
    if args.format == "dot":
        _write_or_print(export_dot(graph), args.output)
    else:
        text = (
            json.dumps(
                {
                    "nodes": list(graph.nodes),
                    "edges": [
                        {"source": e.source, "target": e.target, "sign": e.sign}
                        for e in graph.edges
                    ],
                },
                separators=(",", ":"),
            )
            + "\n"
        )
        _write_or_print(text, args.output)
    return EXIT_OK


def _cmd_verify(net, args) -> int:
    reports = [check_equivalence(net, mode=args.mode, label="model")]
    for seed in range(args.seeds):
        spec = RandomNetSpec(n=args.n, seed=seed)
        reports.append(
            check_equivalence(random_network(spec), mode=args.mode, label=f"seed-{seed}")
        )
    _emit([r.as_dict() for r in reports])
    return EXIT_OK if all(r.ok for r in reports) else EXIT_NEGATIVE


def _build_parser() -> _Parser:
    parser = _Parser(prog="mpunfold", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("model", help="path to a .bnet file")
        p.set_defaults(func=func)
        return p

    p = add("show", _cmd_show, "print the parsed network")
    p.add_argument("--pretty", action="store_true")

    p = add("fixpoints", _cmd_fixpoints, "list all fixed points")
    p.add_argument("--pretty", action="store_true")

    p = add("succ", _cmd_succ, "successors of one state")
    p.add_argument("--state", required=True)
    p.add_argument(
        "--semantics", required=True, choices=("sync", "async", "general", "mp")
    )

    p = add("unfold", _cmd_unfold, "emit the unfolded network as .bnet")
    p.add_argument("--components", help="comma-separated names (default: all)")
    p.add_argument("--mode", choices=MODES, default="exact")
    p.add_argument("-o", "--output")

    p = add("reach", _cmd_reach, "decide reachability of a target pattern")
    p.add_argument("--from", dest="from_state", required=True)
    p.add_argument("--to", required=True, help="target pattern, * wildcards allowed")
    p.add_argument(
        "--semantics", required=True, choices=("sync", "async", "general", "mp")
    )
    p.add_argument("--cap", type=int)

    p = add("stg", _cmd_stg, "explicit state transition graph from a state")
    p.add_argument("--from", dest="from_state", required=True)
    p.add_argument(
        "--semantics", required=True, choices=("sync", "async", "general", "mp")
    )
    p.add_argument("--project-boolean", action="store_true")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--cap", type=int)
    p.add_argument("-o", "--output")

    p = add("attractors", _cmd_attractors, "terminal SCCs of the explicit graph")
    p.add_argument("--semantics", required=True, choices=("sync", "async", "general"))
    p.add_argument("--roots", help="comma-separated start states (default: all states)")
    p.add_argument("--cap", type=int)

    p = add("reggraph", _cmd_reggraph, "signed regulatory graph")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("-o", "--output")

    p = add("verify", _cmd_verify, "check mp vs unfolded-async reachability")
    p.add_argument("--seeds", type=int, default=0, help="also check K random nets")
    p.add_argument("--n", type=int, default=3, help="size of the random nets")
    p.add_argument("--mode", choices=MODES, default="exact")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        _emit_error("usage", str(err))
        return EXIT_USAGE
    except SystemExit as err:  # --help
        return 0 if err.code in (0, None) else EXIT_USAGE
    try:
        net = parse_bnet_file(args.model)
        return args.func(net, args)
    except BnetParseError as err:
        _emit_error("parse-error", f"{args.model}: {err}")
        return EXIT_USAGE
    except CapExceeded as err:
        _emit_error("cap-exceeded", str(err))
        return EXIT_CAP
    except (ValueError, KeyError) as err:
        _emit_error("invalid-input", str(err))
        return EXIT_USAGE
    except OSError as err:
        _emit_error("io-error", str(err))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
