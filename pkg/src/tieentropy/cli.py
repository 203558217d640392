"""Command-line front end.

Summary lines go to stdout as ``key=value`` pairs. Every run writes its
resolved configuration next to its main output as ``<output>.run.json``.

Exit codes: 0 success, 1 usage or validation error, 2 I/O error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import experiments as ex
from . import io
from .generators import GenParams, TuneParams, gen_cnnr, generate, tune_clustering
from .graph import GraphError, avg_clustering

log = logging.getLogger("tieentropy")

EXIT_USAGE, EXIT_IO, EXIT_INTERNAL = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _summary(**kv) -> None:
    for k, v in kv.items():
        if isinstance(v, float):
            v = f"{v:.6g}"
        print(f"{k}={v}")


def _echo_config(args, out) -> None:
    cfg = {k: (str(v) if isinstance(v, Path) else v) for k, v in vars(args).items() if k != "func"}
    log.info("config %s", json.dumps(cfg, sort_keys=True))
    if out is not None and not args.no_run_log:
        Path(f"{out}.run.json").write_text(json.dumps(cfg, sort_keys=True, indent=2) + "\n")


def _gen_params(args) -> GenParams:
    return GenParams(
        args.model, args.n, m=args.m or 0, K=args.k or 0, p=args.p, u=args.u, r=args.r,
        seed=args.seed,
    )


def cmd_generate(args) -> None:
    params = _gen_params(args)
    params.validate()
    _echo_config(args, args.out)
    if params.model == "cnnr":
        g = gen_cnnr(params, random_move=args.random_move)
    else:
        g = generate(params)
    io.save_edge_list(g, args.out)
    c = avg_clustering(g)
    meta = {
        "model": params.model,
        "label": params.label(),
        "params": {"N": params.N, "m": params.m, "K": params.K, "p": params.p, "u": params.u,
                   "r": params.r},
        "seed": params.seed, "nodes": g.node_count, "edges": g.edge_count, "clustering": c,
    }
    Path(f"{args.out}.meta.json").write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")
    _summary(nodes=g.node_count, edges=g.edge_count, clustering=c)


def cmd_load_check(args) -> None:
    manifest = io.load_manifest(args.manifest)
    _echo_config(args, args.save)
    entry = None
    if args.dataset:
        if args.dataset not in manifest:
            raise UsageError(f"unknown dataset {args.dataset!r}; known: {', '.join(manifest)}")
        entry = manifest[args.dataset]
        path = args.input or io.dataset_path(args.dataset, manifest)
        if path is None:
            raise FileNotFoundError(f"{args.dataset} not found under {io.data_dir()}")
        fmt = entry.fmt
    elif args.input:
        path, fmt = args.input, args.format
    else:
        raise UsageError("give --dataset or --input")
    g, _ = io.load_edge_list(path, fmt)
    out = {"nodes": g.node_count, "edges": g.edge_count}
    if entry is not None:
        out["matches_manifest"] = int(io.check_counts(g, entry))
    if args.save:
        io.save_edge_list(g, args.save)
    _summary(**out)


def _read_input(args):
    if not Path(args.input).exists():
        raise FileNotFoundError(args.input)
    return io.read_graph(args.input)


def cmd_sweep(args) -> None:
    g = _read_input(args)
    if g.edge_count == 0:
        raise UsageError("graph has no edges")
    _echo_config(args, args.out)
    if args.sample < 1.0:
        sweep = _sampled_sweep(g, args.sample, args.seed)
    else:
        sweep = ex.edge_sweep(g, workers=args.workers)
    buckets = ex.aggregate_sweep(sweep)
    io.write_sweep_csv(sweep, args.out)
    agg_path = args.aggregate or f"{Path(args.out).with_suffix('')}.aggregate.csv"
    io.write_aggregate_csv(buckets, agg_path)
    rep = ex.positiveness(g, sweep=sweep)
    _summary(
        edges=len(sweep), tau=rep.tau, positive=rep.positive_count, clustering=rep.clustering,
        slope=ex.mean_slope(buckets),
    )


def _sampled_sweep(g, fraction: float, seed: int) -> ex.Sweep:
    from .entropy import delta_on_remove

    if not 0.0 < fraction <= 1.0:
        raise UsageError("--sample must lie in (0, 1]")
    e = g.edge_array()
    rng = np.random.default_rng(seed)
    k = max(1, int(round(fraction * len(e))))
    pick = np.sort(rng.choice(len(e), size=k, replace=False))
    cache: dict = {}
    rows = [delta_on_remove(g, int(a), int(b), cache) for a, b in e[pick]]
    return ex.Sweep(
        e[pick, 0], e[pick, 1],
        np.array([r.c_ij for r in rows], dtype=np.int64),
        np.array([r.delta_pair for r in rows]),
    )


def cmd_curve(args) -> None:
    _echo_config(args, args.out)
    knob = args.knob
    if not knob:
        raise UsageError("knob list is empty")
    rows = []
    if args.model == "sw":
        if args.k is None:
            raise UsageError("--k is required for sw")
        for p in knob:
            params = GenParams("sw", args.n, K=args.k, p=p, seed=args.seed)
            params.validate()
            rep = ex.positiveness(generate(params), args.workers)
            rows.append((p, rep.clustering, rep.tau))
    elif args.model == "ba":
        if args.m is None:
            raise UsageError("--m is required for ba")
        base = generate(GenParams("ba", args.n, m=args.m, seed=args.seed))
        for target in knob:
            res = tune_clustering(
                base, TuneParams(target, args.max_swaps, args.tolerance), seed=args.seed
            )
            rep = ex.positiveness(res.graph, args.workers)
            rows.append((target, rep.clustering, rep.tau))
    else:
        raise UsageError("curve supports --model sw (knob = p) or ba (knob = target clustering)")
    rows.sort(key=lambda r: r[1])
    io.write_curve_csv(rows, args.out)
    _summary(points=len(rows))


def cmd_cdf(args) -> None:
    g = _read_input(args)
    if g.edge_count == 0:
        raise UsageError("graph has no edges")
    _echo_config(args, args.out)
    cdf = ex.strength_cdf(g)
    io.write_cdf_csv(cdf, args.out)
    _summary(edges=g.edge_count, clustering=avg_clustering(g), weak_fraction=ex.cdf_at(cdf, 0.1))


def cmd_tune(args) -> None:
    g = _read_input(args)
    _echo_config(args, args.out)
    res = tune_clustering(g, TuneParams(args.target, args.max_swaps, args.tolerance), seed=args.seed)
    if sorted(res.graph.degrees()) != sorted(g.degrees()):
        raise AssertionError("degree sequence changed during tuning")
    io.save_edge_list(res.graph, args.out)
    _summary(
        clustering=res.clustering, accepted=res.accepted, attempted=res.attempted,
        converged=int(res.converged),
    )


def cmd_plot(args) -> None:
    from .plot import plot

    _echo_config(args, args.out)
    for f in args.input:
        if not Path(f).exists():
            raise FileNotFoundError(f)
    plot(args.kind, args.input, args.out, args.labels)
    _summary(svg=args.out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tieentropy", description="Entropy gain of social ties.")
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("--no-run-log", action="store_true", help="skip the <output>.run.json file")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def model_args(sp, required_model=True):
        sp.add_argument("--model", choices=["ba", "sw", "cnnr"], required=required_model)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--m", type=int)
        sp.add_argument("--k", type=int)
        sp.add_argument("--p", type=float, default=0.0)
        sp.add_argument("--u", type=float, default=0.0)
        sp.add_argument("--r", type=float, default=0.0)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("generate", help="write a synthetic network")
    model_args(sp)
    sp.add_argument("--random-move", choices=["rewire", "add"], default="rewire")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("load-check", help="load an edge list and report its size")
    sp.add_argument("--dataset")
    sp.add_argument("--input")
    sp.add_argument("--format", choices=["snap_tsv", "csv_pairs"], default="snap_tsv")
    sp.add_argument("--manifest")
    sp.add_argument("--save", help="write the normalized graph here")
    sp.set_defaults(func=cmd_load_check)

    sp = sub.add_parser("sweep", help="entropy gain of every tie")
    sp.add_argument("--input", required=True)
    sp.add_argument("--out", required=True, help="per-edge CSV")
    sp.add_argument("--aggregate", help="per-c_ij CSV (default: <out>.aggregate.csv)")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--sample", type=float, default=1.0, help="fraction of ties to evaluate")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("curve", help="positiveness against clustering")
    sp.add_argument("--model", choices=["sw", "ba"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--knob", type=float, nargs="+", required=True,
                    help="p values (sw) or target clusterings (ba)")
    sp.add_argument("--tolerance", type=float, default=0.005)
    sp.add_argument("--max-swaps", type=int, default=500_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("cdf", help="tie-strength CDF")
    sp.add_argument("--input", required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_cdf)

    sp = sub.add_parser("tune", help="rewire toward a target clustering, keeping degrees")
    sp.add_argument("--input", required=True)
    sp.add_argument("--target", type=float, required=True)
    sp.add_argument("--tolerance", type=float, default=0.01)
    sp.add_argument("--max-swaps", type=int, default=500_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_tune)

    sp = sub.add_parser("plot", help="render CSV results as SVG")
    sp.add_argument("--kind", choices=["sweep", "curve", "cdf"], required=True)
    sp.add_argument("--input", nargs="+", required=True)
    sp.add_argument("--labels", nargs="+")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        args.func(args)
    except (UsageError, GraphError, io.SchemaError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, io.FormatError) as e:
        print(f"io error: {e}", file=sys.stderr)
        return EXIT_IO
    except Exception as e:  # noqa: BLE001
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
