"""Command-line pipeline: generate -> linegraph -> spectrum / metrics / fit.

Reports are JSON, distributions CSV, graphs plain edge lists. Exit code 1
signals a processing error, 2 a usage error.
"""
from __future__ import annotations

import argparse
import io
import json
import logging
import os
import sys
from contextlib import contextmanager
from pathlib import Path

from . import generator, hypercore, ingest, linegraph, metrics, spectral

log = logging.getLogger("hyperlap")


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
        return
    p = Path(path)
    buf = io.StringIO()
    yield buf
    # written in one go so a failure mid-command leaves no partial file
    with open(p, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(buf.getvalue())


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("HYPERLAP_THREADS")
    return max(1, int(env)) if env else 1


def _load_hypergraph(path):
    h, skipped = ingest.load_memberships(path)
    if skipped:
        log.warning("%s: %d malformed line(s) skipped", path, skipped)
    return h


def _load_graph(args):
    if getattr(args, "hypergraph", None) and not args.input:
        h = _load_hypergraph(args.hypergraph)
        return ingest.project_social_graph(h), h
    with ingest.open_text(args.input) as fh:
        g = linegraph.read_edge_list(fh)
    h = _load_hypergraph(args.hypergraph) if getattr(args, "hypergraph", None) else None
    return g, h


def cmd_generate(args) -> int:
    if args.seed_file:
        cfg = generator.load_config(
            args.seed_file, steps=args.steps, rng_seed=args.rng_seed, max_retries=args.max_retries
        )
    else:
        cfg = generator.config_from_mapping(
            {
                k: v
                for k, v in dict(
                    steps=args.steps, rng_seed=args.rng_seed, max_retries=args.max_retries
                ).items()
                if v is not None
            }
        )
    h = generator.grow(cfg)
    manifest = {
        "config": cfg.to_dict(),
        "rng": "numpy PCG64",
        "node_count": h.node_count,
        "link_count": h.link_count,
        "k_max": hypercore.k_max(h),
        "linear": hypercore.is_linear(h),
        "depth_histogram": {str(k): v for k, v in generator.degree_histogram(h, "link").items()},
    }
    with _output(args.out) as out:
        hypercore.write_hgm_csv(h, out)
    manifest_path = args.manifest or (None if args.out in (None, "-") else f"{args.out}.manifest.json")
    if manifest_path:
        with _output(manifest_path) as out:
            out.write(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    else:
        print(json.dumps(manifest, indent=2, sort_keys=True), file=sys.stderr)
    return 0


def cmd_ingest(args) -> int:
    h, skipped = ingest.load_memberships(args.input)
    summary = {
        "node_count": h.node_count,
        "link_count": h.link_count,
        "skipped_lines": skipped,
        "k_max": hypercore.k_max(h),
        "linear": hypercore.is_linear(h),
        "uniform_k": hypercore.is_k_uniform(h),
    }
    if args.out:
        with _output(args.out) as out:
            hypercore.write_hgm_csv(h, out)
    if args.hist_out:
        with _output(args.hist_out) as out:
            metrics.write_histogram_csv(generator.degree_histogram(h, args.side), out)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


def cmd_linegraph(args) -> int:
    h = _load_hypergraph(args.input)
    g = linegraph.line_graph(h)
    with _output(args.out) as out:
        linegraph.write_edge_list(g, out)
    return 0


def cmd_spectrum(args) -> int:
    h = _load_hypergraph(args.input)
    report = spectral.verify_bound(h, tol=args.tol)
    with _output(args.out) as out:
        out.write(report.to_json() + "\n")
    return 0


def cmd_metrics(args) -> int:
    g, h = _load_graph(args)
    report = metrics.full_report(g, h, paths=metrics.PathMode.parse(args.paths), threads=_threads(args))
    with _output(args.out) as out:
        out.write(report.to_json() + "\n")
    return 0


def cmd_fit(args) -> int:
    if args.input:
        with ingest.open_text(args.input) as fh:
            hist = metrics.read_histogram_csv(fh)
    elif args.hypergraph:
        hist = generator.degree_histogram(_load_hypergraph(args.hypergraph), args.side)
    elif args.edges:
        with ingest.open_text(args.edges) as fh:
            hist = metrics.graph_degree_histogram(linegraph.read_edge_list(fh))
    else:
        raise ValueError("one of --in, --hypergraph, --edges is required")
    alpha, beta = metrics.fit_power_law(hist)
    if args.csv_out:
        with _output(args.csv_out) as out:
            metrics.write_histogram_csv(hist, out)
    with _output(args.out) as out:
        out.write(json.dumps({"alpha": alpha, "beta": beta, "support": len(hist)}, indent=2, sort_keys=True) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="bound on internal parallelism (env HYPERLAP_THREADS)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="hyperlap", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="grow a hypergraph by preferential attachment")
    g.add_argument("--steps", type=int, default=None)
    g.add_argument("--rng-seed", type=int, default=None)
    g.add_argument("--max-retries", type=int, default=None)
    g.add_argument("--seed-file", help="JSON or key=value GrowthConfig (seed_links, element, ...)")
    g.add_argument("--out", help="HGM-CSV output (default stdout)")
    g.add_argument("--manifest", help="manifest path (default OUT.manifest.json)")
    g.set_defaults(func=cmd_generate)

    i = sub.add_parser("ingest", parents=[common], help="load memberships and summarize")
    i.add_argument("--in", dest="input", required=True)
    i.add_argument("--out", help="canonical HGM-CSV export")
    i.add_argument("--hist-out", help="degree histogram CSV")
    i.add_argument("--side", choices=["node", "link"], default="node")
    i.set_defaults(func=cmd_ingest)

    lg = sub.add_parser("linegraph", parents=[common], help="line graph edge list of a hypergraph")
    lg.add_argument("--in", dest="input", required=True)
    lg.add_argument("--out")
    lg.set_defaults(func=cmd_linegraph)

    s = sub.add_parser("spectrum", parents=[common], help="check lambda_min >= -k_max")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--tol", type=float, default=1e-9)
    s.add_argument("--out")
    s.set_defaults(func=cmd_spectrum)

    m = sub.add_parser("metrics", parents=[common], help="clustering, assortativity, path length, fits")
    m.add_argument("--in", dest="input", help="edge list")
    m.add_argument("--hypergraph", help="HGM-CSV; adds the community-size fit")
    m.add_argument("--paths", default="exact", help="'exact' or 'sample:COUNT[:SEED]'")
    m.add_argument("--out")
    m.set_defaults(func=cmd_metrics)

    f = sub.add_parser("fit", parents=[common], help="log-log power-law fit of a histogram")
    f.add_argument("--in", dest="input", help="histogram CSV k,count[,probability]")
    f.add_argument("--hypergraph", help="fit a hypergraph degree histogram instead")
    f.add_argument("--side", choices=["node", "link"], default="node")
    f.add_argument("--edges", help="fit a graph degree histogram instead")
    f.add_argument("--csv-out", help="write k,count,probability plot data")
    f.add_argument("--out")
    f.set_defaults(func=cmd_fit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.command == "metrics" and not (args.input or args.hypergraph):
        parser.error("metrics needs --in or --hypergraph")
    try:
        return args.func(args)
    except (ValueError, OSError, generator.GrowthError, KeyError) as exc:
        print(f"hyperlap {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
