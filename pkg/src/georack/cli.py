"""Command-line frontend.

Subcommands: validate, delays, srgs, eval, design, sweep, oracle.
Exit codes: 0 success, 1 validation error, 2 infeasible instance,
3 oversized oracle input, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import optimizer
from .exceptions import InfeasibleInstanceError, OracleSizeError, ValidationError
from .failures import catalog_for, disconnection_matrix
from .metrics import Placement, evaluate
from .oracle import oracle_solve
from .topology import DEFAULT_SPEED_MPS, delay_matrix, load_topology

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INFEASIBLE = 2
EXIT_ORACLE_SIZE = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def emit_pareto_csv(points: list[optimizer.ParetoPoint], path: str | Path) -> None:
    """Write the sweep output; byte-identical across repeated runs."""
    if not points:
        raise ValidationError("no Pareto points to emit")
    lines = ["beta,survivability,latency_ms,normalized_latency,active_sites"]
    for p in points:
        lines.append(",".join([
            _fmt(p.beta), _fmt(p.survivability), _fmt(p.latency_ms),
            _fmt(p.normalized_latency), str(p.active_sites),
        ]))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--topology", required=True, help="topology JSON file")
    p.add_argument("--speed", type=float, default=DEFAULT_SPEED_MPS,
                   help="propagation speed in m/s (default 2e8)")


def _add_design_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--racks", type=int, default=1024)
    p.add_argument("--capacity", type=int, default=None,
                   help="uniform per-site capacity override")
    p.add_argument("--gap", type=float, default=0.0)
    p.add_argument("--budget-nodes", type=int,
                   default=optimizer.DEFAULT_NODE_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None, help="write placement JSON here")


def build_parser() -> _Parser:
    parser = _Parser(prog="georack",
                     description="Geo-distributed data center rack placement design")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("validate", help="validate a topology file"))

    p = sub.add_parser("delays", help="print the all-pairs delay matrix as CSV")
    _add_common(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("srgs", help="dump the SRG accessibility matrix as CSV")
    _add_common(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("eval", help="evaluate a placement's metrics")
    _add_common(p)
    p.add_argument("--placement", required=True, help='JSON {"racks": {site: count}}')
    p.add_argument("--racks", type=int, default=None,
                   help="total racks (default: sum of the placement)")

    p = sub.add_parser("design", help="solve the placement program for one beta")
    _add_common(p)
    p.add_argument("--beta", type=float, required=True)
    _add_design_flags(p)

    p = sub.add_parser("sweep", help="trace the Pareto frontier over a beta grid")
    _add_common(p)
    p.add_argument("--beta-start", type=float, default=0.0)
    p.add_argument("--beta-end", type=float, default=1.0)
    p.add_argument("--beta-step", type=float, default=0.05)
    p.add_argument("--racks", type=int, default=1024)
    p.add_argument("--capacity", type=int, default=None)
    p.add_argument("--gap", type=float, default=0.0)
    p.add_argument("--budget-nodes", type=int,
                   default=optimizer.DEFAULT_NODE_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", required=True, help="Pareto CSV output path")

    p = sub.add_parser("oracle", help="brute-force solve a small instance")
    _add_common(p)
    p.add_argument("--beta", type=float, required=True)
    _add_design_flags(p)
    return parser


def _load_placement(path: str, n_sites: int) -> Placement:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "racks" not in data:
        raise ValidationError('placement file must be {"racks": {site: count}}')
    x = [0] * n_sites
    for key, count in data["racks"].items():
        i = int(key)
        if not 0 <= i < n_sites:
            raise ValidationError(f"placement references unknown site {i}")
        x[i] = int(count)
    return Placement(tuple(x))


def _placement_json(res: optimizer.DesignResult) -> dict:
    return {"racks": {str(i): v for i, v in enumerate(res.x) if v > 0}}


def _print_result(res: optimizer.DesignResult, out: str | None) -> None:
    doc = _placement_json(res)
    doc["result"] = {
        "beta": res.beta,
        "survivability": res.survivability,
        "latency_ms": res.latency_ms,
        "normalized_latency": res.normalized_latency,
        "objective": res.objective,
        "active_sites": res.n_active,
        "status": res.status,
        "gap": res.gap,
        "nodes_explored": res.nodes_explored,
    }
    text = json.dumps(doc, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    print(text)
    print(f"beta={_fmt(res.beta)} s={_fmt(res.survivability)} "
          f"l={_fmt(res.latency_ms)}ms active={res.n_active} status={res.status}")


def _matrix_csv(header: list[str], rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(str(c) for c in row) for row in rows]
    return "\n".join(lines) + "\n"


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    t = load_topology(args.topology)

    if args.command == "validate":
        print(f"ok: {t.n_sites} sites, {len(t.links)} links, "
              f"{sum(1 for s in t.sites if s.gateway)} gateways")
        return EXIT_OK

    if args.command == "delays":
        d = delay_matrix(t, args.speed)
        header = ["site"] + [str(s.id) for s in t.sites]
        rows = [[i] + [_fmt(v) for v in d.delays[i]] for i in range(t.n_sites)]
        _write_or_print(_matrix_csv(header, rows), args.out)
        print(f"l_max={_fmt(d.l_max)}ms", file=sys.stderr)
        return EXIT_OK

    if args.command == "srgs":
        cat = catalog_for(t)
        m = disconnection_matrix(t, cat)
        header = ["srg"] + [str(s.id) for s in t.sites]
        rows = [[f.id] + list(m[f.id]) for f in cat]
        _write_or_print(_matrix_csv(header, rows), args.out)
        return EXIT_OK

    if args.command == "eval":
        p = _load_placement(args.placement, t.n_sites)
        racks = args.racks if args.racks is not None else p.total
        d = delay_matrix(t, args.speed)
        m = disconnection_matrix(t, catalog_for(t))
        report = evaluate(p, m, d, racks)
        print(json.dumps({
            "survivability": report.survivability,
            "latency_ms": report.latency_ms,
            "normalized_latency": report.normalized_latency,
            "worst_srg": report.worst_srg,
            "worst_pair": list(report.worst_pair) if report.worst_pair else None,
        }, indent=2, sort_keys=True))
        print(f"{_fmt(report.survivability)},{_fmt(report.latency_ms)},"
              f"{_fmt(report.normalized_latency)}")
        return EXIT_OK

    if args.command in ("design", "oracle"):
        inst = optimizer.build_instance(t, racks=args.racks,
                                        capacity=args.capacity,
                                        speed_mps=args.speed)
        if args.command == "design":
            res = optimizer.solve(inst, args.beta, gap=args.gap,
                                  node_budget=args.budget_nodes,
                                  threads=args.threads)
        else:
            res = oracle_solve(inst, args.beta)
        _print_result(res, args.out)
        return EXIT_OK

    if args.command == "sweep":
        inst = optimizer.build_instance(t, racks=args.racks,
                                        capacity=args.capacity,
                                        speed_mps=args.speed)
        points = optimizer.sweep(inst, args.beta_start, args.beta_end,
                                 args.beta_step, gap=args.gap,
                                 node_budget=args.budget_nodes,
                                 threads=args.threads)
        emit_pareto_csv(points, args.out)
        bounded = [p.beta for p in points if p.status != "certified-optimal"]
        if bounded:
            print(f"gap-bounded at beta={bounded}", file=sys.stderr)
        print(f"wrote {len(points)} points to {args.out}")
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except InfeasibleInstanceError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OracleSizeError as exc:
        print(f"oracle refused: {exc}", file=sys.stderr)
        return EXIT_ORACLE_SIZE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
