"""Command-line surface: graph generation, entropy reports, purification
verification, exhaustive scans, and the documented-findings tables.

Exit codes: 0 ok, 2 usage or parse failure, 3 precondition failure
(disconnected input, isolated vertex), 4 construction-identity failure,
5 scan violation. Output is byte-deterministic for a fixed invocation:
floats print with 17 significant digits and every container has a fixed
order; no timestamps or environment lookups.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import bounds, qstate
from .entropy import renyi, von_neumann
from .graph import (
    FAMILIES,
    DisconnectedGraphError,
    EdgeListError,
    from_edge_list,
    to_edge_list,
)
from .laplacian import IsolatedVertexError, doubled_incidence, symmetric
from .linalg import DEFAULT_TOL, RANK_EPS, clamp_spectrum, jacobi_eigen
from .qstate import rho_V

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_IDENTITY = 4
EXIT_VIOLATION = 5


@dataclass(frozen=True)
class RunConfig:
    base: str = "e"
    tol_eig: float = DEFAULT_TOL
    rank_eps: float = RANK_EPS
    fmt: str = "text"
    threads: int = 1

    def __post_init__(self):
        if self.base not in ("e", "2"):
            raise ValueError(f"base must be 'e' or '2', got {self.base!r}")
        if self.tol_eig <= 0 or self.rank_eps <= 0:
            raise ValueError("tolerances must be positive")

    @property
    def scale(self) -> float:
        """Divisor applied to every entropy: 1 for nats, log 2 for bits."""
        return math.log(2.0) if self.base == "2" else 1.0


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_p(p: float) -> str:
    return str(int(p)) if float(p).is_integer() else repr(float(p))


def render_json(obj) -> str:
    """Deterministic JSON: insertion-ordered keys, 17-significant-digit
    floats (the stock encoder prints shortest-round-trip instead)."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {render_json(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(render_json(v) for v in obj) + "]"
    raise TypeError(f"cannot render {type(obj).__name__}")


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return fmt_float(v)
    if isinstance(v, (list, tuple, np.ndarray)):
        return " ".join(_csv_cell(x) for x in v)
    return str(v)


def render_csv(rows: list[dict]) -> str:
    """One header line from the first row's keys, then one line per row."""
    if not rows:
        return ""
    keys = list(rows[0].keys())
    lines = [",".join(keys)]
    lines.extend(",".join(_csv_cell(r[k]) for k in keys) for r in rows)
    return "\n".join(lines) + "\n"


def _render_text(pairs: list[tuple[str, object]]) -> str:
    return "".join(f"{k} {_csv_cell(v)}\n" for k, v in pairs)


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return from_edge_list(text)


def _add_config_args(p: argparse.ArgumentParser, fmts=("text", "json", "csv")) -> None:
    p.add_argument("--format", choices=fmts, default="text")
    p.add_argument("--base", choices=["e", "2"], default="e")
    p.add_argument("--tol-eig", type=float, default=DEFAULT_TOL)
    p.add_argument("--rank-eps", type=float, default=RANK_EPS)


def _config(args, threads: int = 1) -> RunConfig:
    return RunConfig(
        base=args.base,
        tol_eig=args.tol_eig,
        rank_eps=args.rank_eps,
        fmt=args.format,
        threads=threads,
    )


_FAMILY_ARITY = {"complete": 1, "complete_bipartite": 2, "star": 1, "cycle": 1}


def cmd_gen(args) -> int:
    arity = _FAMILY_ARITY[args.family]
    if len(args.params) != arity:
        print(f"error: {args.family} takes {arity} parameter(s)", file=sys.stderr)
        return EXIT_USAGE
    g = FAMILIES[args.family](*args.params)
    sys.stdout.write(to_edge_list(g))
    return EXIT_OK


def cmd_entropy(args) -> int:
    cfg = _config(args)
    g = _read_graph(args.path)
    spectrum = clamp_spectrum(jacobi_eigen(rho_V(g), tol=cfg.tol_eig))
    vn = von_neumann(spectrum) / cfg.scale
    h2 = renyi(spectrum, 2.0) / cfg.scale
    orders = args.p if args.p else [2.0]
    ren = {_fmt_p(p): renyi(spectrum, p, rank_eps=cfg.rank_eps) / cfg.scale
           for p in sorted(set(orders))}
    report = {
        "n": g.n,
        "m": g.m,
        "degrees": g.degrees(),
        "spectrum": list(spectrum),
        "vn": vn,
        "renyi": ren,
        "structural": vn - h2,
        "base": cfg.base,
    }
    if cfg.fmt == "json":
        sys.stdout.write(render_json(report) + "\n")
        return EXIT_OK
    flat = {k: v for k, v in report.items() if k != "renyi"}
    for key, val in report["renyi"].items():
        flat[f"renyi_{key}"] = val
    if cfg.fmt == "csv":
        sys.stdout.write(render_csv([flat]))
    else:
        sys.stdout.write(_render_text(list(flat.items())))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args)
    g = _read_graph(args.path)
    rep = qstate.verify_purification(g, eig_tol=cfg.tol_eig, rank_eps=cfg.rank_eps)
    sbar = doubled_incidence(g)
    sbar_residual = float(np.abs(sbar @ sbar.T - 2.0 * symmetric(g)).max())
    sbar_ok = sbar_residual < 1e-12
    report = {
        "n": g.n,
        "m": g.m,
        "vertex_trace_matches": rep.vertex_trace_matches,
        "vertex_trace_residual": rep.vertex_trace_residual,
        "doubled_incidence_matches": sbar_ok,
        "doubled_incidence_residual": sbar_residual,
        "arc_trace_isospectral": rep.arc_trace_isospectral,
        "bipartite": rep.bipartite,
        "arc_trace_spectrum": list(rep.arc_trace_spectrum),
        "signless_spectrum": list(rep.signless_spectrum),
    }
    if cfg.fmt == "json":
        sys.stdout.write(render_json(report) + "\n")
    else:
        sys.stdout.write(_render_text(list(report.items())))
    # The arc-side spectral flag is informational; only the two exact
    # construction identities gate the exit code.
    if not (rep.vertex_trace_matches and sbar_ok):
        return EXIT_IDENTITY
    return EXIT_OK


def _scan_report(result: bounds.ScanResult) -> dict:
    return {
        "n": result.n,
        "p_grid": list(result.p_grid),
        "graph_count": result.graph_count,
        "min_vn": result.min_vn,
        "argmin_vn": result.argmin_vn,
        "max_vn": result.max_vn,
        "argmax_vn": result.argmax_vn,
        "min_renyi2": result.min_renyi2,
        "argmin_renyi2": result.argmin_renyi2,
        "violations": [
            {
                "bitmask": v.bitmask,
                "name": v.name,
                "lhs": v.lhs,
                "rhs": v.rhs,
                "margin": v.margin,
            }
            for v in result.violations
        ],
        "informational": {
            "pointwise_neighbor_violations": result.pointwise_neighbor_violations,
            "graphs_with_pointwise_violation": result.graphs_with_pointwise_violation,
            "boundary_ties": result.boundary_ties,
        },
    }


def cmd_scan(args) -> int:
    cfg = _config(args, threads=args.threads)
    result = bounds.scan(args.n, tuple(args.p), threads=cfg.threads, large=args.large)
    report = _scan_report(result)
    for key in ("min_vn", "max_vn", "min_renyi2"):
        report[key] = report[key] / cfg.scale
    if cfg.fmt == "json":
        sys.stdout.write(render_json(report) + "\n")
    elif cfg.fmt == "csv":
        flat = {k: v for k, v in report.items() if k not in ("violations", "informational")}
        flat["violation_count"] = len(report["violations"])
        flat.update(report["informational"])
        sys.stdout.write(render_csv([flat]))
    else:
        pairs = [(k, v) for k, v in report.items() if k not in ("violations", "informational")]
        pairs.append(("violation_count", len(report["violations"])))
        pairs.extend(report["informational"].items())
        sys.stdout.write(_render_text(pairs))
        for v in report["violations"]:
            sys.stdout.write(
                f"violation {v['bitmask']} {v['name']} "
                f"{fmt_float(v['lhs'])} {fmt_float(v['rhs'])} {fmt_float(v['margin'])}\n"
            )
    return EXIT_VIOLATION if result.violations else EXIT_OK


def cmd_findings(args) -> int:
    purification = qstate.purification_survey(args.max_n)
    neighbor = bounds.neighbor_sum_table(args.max_n)
    if args.format == "json":
        sys.stdout.write(
            render_json(
                {
                    "max_n": args.max_n,
                    "purification": purification,
                    "neighbor_sum": neighbor,
                }
            )
            + "\n"
        )
        return EXIT_OK
    out = ["arc-reduction spectrum vs signless Laplacian (per n):"]
    out.append("n graphs bipartite isospectral mismatches")
    for row in purification:
        out.append(
            f"{row['n']} {row['graphs']} {row['bipartite']} "
            f"{row['isospectral']} {len(row['mismatches'])}"
        )
    clean = all(not row["mismatches"] for row in purification)
    out.append(
        "spectral agreement coincides exactly with bipartiteness"
        if clean
        else "spectral agreement does NOT reduce to bipartiteness"
    )
    out.append("")
    out.append("neighbor inverse-degree sum bound (per n):")
    out.append("n graphs graphs_with_pointwise_violation pointwise_violations aggregate_violations")
    for row in neighbor:
        out.append(
            f"{row['n']} {row['graphs']} {row['graphs_with_pointwise_violation']} "
            f"{row['pointwise_violations']} {row['aggregate_violations']}"
        )
    if any(r["pointwise_violations"] for r in neighbor):
        out.append("pointwise form fails on some vertices; aggregate form never fails")
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphent",
        description="Graph entropies from normalized-Laplacian density matrices.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("gen", help="emit an edge-list document for a named family")
    gen.add_argument("family", choices=sorted(FAMILIES))
    gen.add_argument("params", type=int, nargs="+")
    gen.set_defaults(fn=cmd_gen)

    ent = sub.add_parser("entropy", help="entropy report for one graph")
    ent.add_argument("path", help="edge-list file, or - for standard input")
    ent.add_argument("--p", type=float, action="append", help="extra orders (repeatable)")
    _add_config_args(ent)
    ent.set_defaults(fn=cmd_entropy)

    ver = sub.add_parser("verify", help="check the partial-trace and incidence identities")
    ver.add_argument("path", help="edge-list file, or - for standard input")
    _add_config_args(ver, fmts=("text", "json"))
    ver.set_defaults(fn=cmd_verify)

    scn = sub.add_parser("scan", help="exhaustive bound checks over all connected graphs")
    scn.add_argument("n", type=int)
    scn.add_argument("--p", type=float, nargs="+", default=[1.0, 2.0, 3.0])
    scn.add_argument("--threads", type=int, default=1)
    scn.add_argument("--large", action="store_true", help="allow n=7 (about 2.1M candidates)")
    _add_config_args(scn)
    scn.set_defaults(fn=cmd_scan)

    fnd = sub.add_parser("findings", help="documented-findings tables (informational)")
    fnd.add_argument("--max-n", type=int, default=6)
    fnd.add_argument("--format", choices=["text", "json"], default="text")
    fnd.set_defaults(fn=cmd_findings)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except EdgeListError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DisconnectedGraphError, IsolatedVertexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
