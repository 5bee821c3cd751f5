"""Command-line front end.

Subcommands: centrality, stationary, hitting, generate, rose-oracle, compare,
scaling, simulate.  Global flags can also be set through environment variables
with the ``NBWALK_`` prefix (e.g. ``NBWALK_TOL``).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

import numpy as np

from . import __version__
from .errors import InvalidParamsError, NbwalkError
from .graph import parse_edge_list
from .hitting import eq26_audit, hitting_linear, hitting_spectral, hub_node
from .models import (
    RoseSpec, gen_ba, gen_er, gen_ws, loglog_slope, make_rose, rose4_oracle, scaling_table,
)
from .nbcentrality import nb_centrality
from .simulate import SimConfig, simulate_hitting, simulate_stationary
from .walks import (
    WalkKind, adjacency_leading_eigvec, detailed_balance_residual, ipr,
    stationary_closed, stationary_generic, transition,
)

ENV_PREFIX = "NBWALK_"


def _env(name, default):
    return os.environ.get(ENV_PREFIX + name, default)


def _fmt(x):
    """Round-trip-exact text for a float."""
    return format(float(x), ".17g")


def _listify(arr):
    return [float(v) for v in np.asarray(arr).ravel()]


def build_parser():
    parser = argparse.ArgumentParser(prog="nbwalk", description=__doc__)
    parser.add_argument("--tol", type=float, default=float(_env("TOL", "1e-12")))
    parser.add_argument("--threads", type=int, default=int(_env("THREADS", "1")),
                        help="accepted for interface stability; results are thread-independent")
    parser.add_argument("--seed", type=int, default=int(_env("SEED", "0")))
    parser.add_argument("--format", choices=["json", "csv"], default=_env("FORMAT", "json"))
    parser.add_argument("-o", "--output", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_arg(p):
        p.add_argument("graph_file")
        p.add_argument("--index-base", type=int, choices=[0, 1], default=0)
        p.add_argument("--delimiter", choices=["whitespace", "comma"], default="whitespace")

    p = sub.add_parser("centrality", help="kappa, non-backtracking and eigenvector centralities")
    add_graph_arg(p)

    p = sub.add_parser("stationary", help="stationary distributions per walk kind")
    add_graph_arg(p)
    p.add_argument("--walk", choices=["turw", "merw", "nbcrw", "all"], default="all")
    p.add_argument("--check", action="store_true",
                   help="cross-check with the linear solve and detailed balance")

    p = sub.add_parser("hitting", help="hitting-time reports")
    add_graph_arg(p)
    p.add_argument("--walk", choices=["turw", "merw", "nbcrw", "all"], default="all")
    p.add_argument("--method", choices=["spectral", "linear", "both"], default="spectral")
    p.add_argument("--target", default="global",
                   help="'hub', 'global', or a node id; comma-separated combinations allowed")
    p.add_argument("--full-matrix", action="store_true",
                   help="emit the full pairwise matrix even above 500 nodes")
    p.add_argument("--verbatim-eq26", action="store_true",
                   help="audit the printed pairwise-formula prefactor against the oracle")

    p = sub.add_parser("generate", help="write a seeded model graph as an edge list")
    p.add_argument("--model", choices=["rose", "er", "ba", "ws"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--m", type=int, help="rose petal count")
    p.add_argument("--l", type=int, default=4, help="rose cycle length")
    p.add_argument("--m-attach", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--beta", type=float)

    p = sub.add_parser("rose-oracle", help="closed-form reference values for rose graphs")
    p.add_argument("m", type=int)
    p.add_argument("--walk", choices=["turw", "merw", "nbcrw", "all"], default="all")

    p = sub.add_parser("compare", help="per-kind summary table for one graph")
    add_graph_arg(p)

    p = sub.add_parser("scaling", help="global mean hitting time vs size from closed forms")
    p.add_argument("--kind", choices=["turw", "merw", "nbcrw"], required=True)
    p.add_argument("--m-range", default="10:1000")
    p.add_argument("--points", type=int, default=40)

    p = sub.add_parser("simulate", help="Monte Carlo cross-check")
    add_graph_arg(p)
    p.add_argument("--walk", choices=["turw", "merw", "nbcrw"], required=True)
    p.add_argument("--mode", choices=["stationary", "hitting"], required=True)
    p.add_argument("--source", type=int, default=None)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--max-steps", type=int, default=1_000_000)
    p.add_argument("--burn-in", type=int, default=1000)
    return parser


def _load_graph(args):
    with open(args.graph_file, "rb") as fh:
        raw = fh.read()
    delimiter = "," if args.delimiter == "comma" else None
    g = parse_edge_list(raw.decode(), index_base=args.index_base, delimiter=delimiter)
    return g, hashlib.sha256(raw).hexdigest()


def _walk_kinds(value):
    return list(WalkKind) if value == "all" else [WalkKind(value)]


def cmd_centrality(args):
    g, digest = _load_graph(args)
    nc = nb_centrality(g, tol=args.tol)
    _, psi1 = adjacency_leading_eigvec(g, tol=args.tol)
    return {
        "kappa": nc.kappa,
        "x": _listify(nc.x),
        "y": _listify(nc.y),
        "residual": nc.residual,
        "eigenvector_centrality": _listify(psi1),
        "degrees": [int(d) for d in g.degrees],
    }, digest, None


def cmd_stationary(args):
    g, digest = _load_graph(args)
    reports = []
    for kind in _walk_kinds(args.walk):
        sd = stationary_closed(kind, g, tol=args.tol)
        entry = {
            "kind": kind.value,
            "pi": _listify(sd.pi),
            "ipr": ipr(sd.pi),
            "method": sd.method,
        }
        if args.check:
            p = transition(kind, g, tol=args.tol)
            generic = stationary_generic(p, tol=args.tol)
            entry["check"] = {
                "closed_vs_linear_max_gap": float(np.max(np.abs(sd.pi - generic.pi))),
                "detailed_balance_residual": detailed_balance_residual(sd.pi, p),
            }
        reports.append(entry)
    rows = [["kind", "node", "pi"]]
    for entry in reports:
        for node, value in zip(g.labels, entry["pi"]):
            rows.append([entry["kind"], node, _fmt(value)])
    return {"reports": reports}, digest, rows


def cmd_hitting(args):
    g, digest = _load_graph(args)
    targets = [t.strip() for t in str(args.target).split(",") if t.strip()]
    reports = []
    for kind in _walk_kinds(args.walk):
        entry = {"kind": kind.value, "method": args.method}
        spectral = linear = None
        if args.method in ("spectral", "both"):
            spectral = hitting_spectral(kind, g, tol=args.tol)
        if args.method in ("linear", "both"):
            linear = hitting_linear(transition(kind, g, tol=args.tol))
        main = spectral if spectral is not None else linear
        entry["t_global"] = main.t_global
        entry["t_partial"] = _listify(main.t_partial)
        if g.n <= 500 or args.full_matrix:
            entry["t_matrix"] = [_listify(row) for row in main.t]
        if spectral is not None and linear is not None:
            entry["spectral_vs_linear_max_gap"] = float(np.max(np.abs(spectral.t - linear.t)))
        for tgt in targets:
            if tgt == "hub":
                h = hub_node(g)
                entry["hub_node"] = h
                entry["t_hub"] = float(main.t_partial[h])
            elif tgt == "global":
                pass  # t_global always present
            else:
                node = int(tgt)
                entry[f"t_partial_{node}"] = float(main.t_partial[node])
        if kind is WalkKind.NBCRW and args.verbatim_eq26:
            audit = eq26_audit(g, tol=args.tol)
            entry["eq26_audit"] = {
                "t_verbatim": [_listify(r) for r in audit["t_verbatim"]],
                "t_consistent": [_listify(r) for r in audit["t_consistent"]],
                "max_gap_consistent_vs_linear": audit["max_gap_consistent_vs_linear"],
                "max_gap_verbatim_vs_linear": audit["max_gap_verbatim_vs_linear"],
                "note": audit["note"],
            }
        reports.append(entry)
    rows = [["kind", "node", "t_partial"]]
    for entry in reports:
        for node, value in zip(g.labels, entry["t_partial"]):
            rows.append([entry["kind"], node, _fmt(value)])
    return {"reports": reports}, digest, rows


def _generate_graph(args):
    model = args.model
    if model == "rose":
        if args.m is None:
            raise InvalidParamsError("rose model needs --m")
        g = make_rose(RoseSpec(m=args.m, l=args.l))
        params = {"m": args.m, "l": args.l}
    elif model == "er":
        if args.n is None or args.p is None:
            raise InvalidParamsError("er model needs --n and --p")
        g = gen_er(args.n, args.p, args.seed)
        params = {"n": args.n, "p": args.p}
    elif model == "ba":
        if args.n is None or args.m_attach is None:
            raise InvalidParamsError("ba model needs --n and --m-attach")
        g = gen_ba(args.n, args.m_attach, args.seed)
        params = {"n": args.n, "m_attach": args.m_attach}
    else:
        if args.n is None or args.k is None or args.beta is None:
            raise InvalidParamsError("ws model needs --n, --k and --beta")
        g = gen_ws(args.n, args.k, args.beta, args.seed)
        params = {"n": args.n, "k": args.k, "beta": args.beta}
    return g, params


def cmd_generate(args):
    g, params = _generate_graph(args)
    lines = [f"# model={args.model} " + " ".join(f"{k}={v}" for k, v in params.items())
             + f" seed={args.seed} nbwalk={__version__}"]
    lines.append(f"%N {g.n}")
    lines += [f"{u} {v}" for (u, v) in g.edges]
    return {"edge_list": "\n".join(lines) + "\n", "n": g.n, "edges": g.num_edges}, None, None


def cmd_rose_oracle(args):
    oracle = rose4_oracle(args.m)
    kinds = _walk_kinds(args.walk)
    payload = {
        "m": oracle.m,
        "n": 3 * oracle.m + 1,
        "kappa1": oracle.kappa1,
        "x_hub": oracle.x_hub,
        "x_int": oracle.x_int,
        "x_per": oracle.x_per,
        "walks": {
            kind.value: {
                "pi_hub": oracle.pi[kind][0],
                "pi_int": oracle.pi[kind][1],
                "pi_per": oracle.pi[kind][2],
                "t_hub": oracle.t_hub[kind],
                "t_global": oracle.t_global[kind],
                "t_class": oracle.t_class[kind],
            }
            for kind in kinds
        },
    }
    return payload, None, None


def cmd_compare(args):
    g, digest = _load_graph(args)
    hub = hub_node(g)
    rows = [["kind", "n", "ipr", "pi_hub", "t_hub", "t_global", "method"]]
    entries = []
    for kind in WalkKind:
        sd = stationary_closed(kind, g, tol=args.tol)
        report = hitting_spectral(kind, g, tol=args.tol)
        entry = {
            "kind": kind.value,
            "n": g.n,
            "ipr": ipr(sd.pi),
            "pi_hub": float(sd.pi[hub]),
            "t_hub": float(report.t_partial[hub]),
            "t_global": report.t_global,
            "method": report.method,
        }
        entries.append(entry)
        rows.append([entry["kind"], g.n, _fmt(entry["ipr"]), _fmt(entry["pi_hub"]),
                     _fmt(entry["t_hub"]), _fmt(entry["t_global"]), entry["method"]])
    return {"hub_node": hub, "rows": entries}, digest, rows


def cmd_scaling(args):
    try:
        lo, hi = (int(v) for v in args.m_range.split(":"))
    except ValueError:
        raise InvalidParamsError(f"bad --m-range {args.m_range!r}; expected LO:HI")
    if not (2 <= lo < hi):
        raise InvalidParamsError("m range must satisfy 2 <= LO < HI")
    ms = np.unique(np.geomspace(lo, hi, num=args.points).astype(int))
    rows_data = scaling_table(args.kind, ms.tolist())
    slope = loglog_slope(rows_data)
    rows = [["m", "n", "t_global"]]
    entries = []
    for m, (n, t) in zip(ms.tolist(), rows_data):
        entries.append({"m": m, "n": n, "t_global": t})
        rows.append([m, n, _fmt(t)])
    return {"kind": args.kind, "slope": slope, "rows": entries}, None, rows


def cmd_simulate(args):
    g, digest = _load_graph(args)
    p = transition(args.walk, g, tol=args.tol)
    cfg = SimConfig(seed=args.seed, trials=args.trials, max_steps=args.max_steps,
                    burn_in=args.burn_in)
    if args.mode == "stationary":
        result = simulate_stationary(p, cfg)
    else:
        if args.source is None or args.target is None:
            raise InvalidParamsError("hitting mode needs --source and --target")
        result = simulate_hitting(p, args.source, args.target, cfg)
    payload = {
        "mode": result.mode,
        "walk": args.walk,
        "estimates": _listify(result.estimates),
        "standard_errors": _listify(result.standard_errors),
        "samples": result.samples,
        "truncated": result.truncated,
        "truncated_fraction": result.truncated_fraction,
        "rng": result.rng,
    }
    if result.mode == "hitting":
        payload["estimate_excluding_truncated"] = result.estimate_excluding_truncated
        payload["estimate_cap_bound"] = result.estimate_cap_bound
    return payload, digest, None


COMMANDS = {
    "centrality": cmd_centrality,
    "stationary": cmd_stationary,
    "hitting": cmd_hitting,
    "generate": cmd_generate,
    "rose-oracle": cmd_rose_oracle,
    "compare": cmd_compare,
    "scaling": cmd_scaling,
    "simulate": cmd_simulate,
}


def _manifest(args, digest, elapsed):
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("output",)}
    return {
        "command": args.command,
        "params": params,
        "input_digest": digest,
        "seed": args.seed,
        "version": __version__,
        "timing_s": elapsed,
    }


def _write_output(args, payload, rows, manifest):
    if args.command == "generate":
        text = payload["edge_list"]
    elif args.format == "csv" and rows is not None:
        header = "# manifest: " + json.dumps(manifest, sort_keys=True) + "\n"
        body = "\n".join(",".join(str(c) for c in row) for row in rows)
        text = header + body + "\n"
    else:
        payload = dict(payload)
        payload["manifest"] = manifest
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        payload, digest, rows = COMMANDS[args.command](args)
    except NbwalkError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return exc.exit_code
    except OSError as exc:
        sys.stderr.write(json.dumps({"error": "parse_error", "message": str(exc)}) + "\n")
        return 1
    elapsed = time.perf_counter() - start
    _write_output(args, payload, rows, _manifest(args, digest, elapsed))
    return 0


if __name__ == "__main__":
    sys.exit(main())
