"""Command line entry points: build, serve, cluster, report."""

from __future__ import annotations

import argparse
import os
import sys

from .catalog import build_catalog, load_catalog, recluster, save_catalog
from .cluster import KMeansConfig, load_label_config
from .errors import ChartLabError
from .ingest import load_column_maps
from .server import ServerConfig


def _env(name: str, default: str | None = None) -> str | None:
    return os.environ.get(f"CHARTLAB_{name}", default)


def _add_build_inputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--billboard", help="chart CSV path")
    parser.add_argument("--spotify", help="audio-feature CSV path")
    parser.add_argument("--columns", help="INI file remapping CSV column names")
    parser.add_argument("--labels", help="cluster label config JSON")
    parser.add_argument("--k", type=int, default=5, help="number of clusters (default 5)")
    parser.add_argument("--seed", type=int, default=42, help="clustering seed (default 42)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chartlab")
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="run the pipeline and write a catalog JSON")
    _add_build_inputs(build)
    build.add_argument("--out", required=True, help="output catalog path")

    cluster = commands.add_parser("cluster", help="re-cluster an existing catalog")
    cluster.add_argument("--catalog", required=True)
    cluster.add_argument("--k", type=int, default=5)
    cluster.add_argument("--seed", type=int, default=42)
    cluster.add_argument("--labels")
    cluster.add_argument("--out", required=True)

    serve = commands.add_parser("serve", help="serve the JSON API and static assets")
    _add_build_inputs(serve)
    serve.add_argument("--catalog", default=_env("CATALOG"),
                       help="prebuilt catalog path (or set CHARTLAB_CATALOG)")
    serve.add_argument("--survey", default=_env("SURVEY"),
                       help="survey definition JSON (default: generated from the catalog)")
    serve.add_argument("--static", default=_env("STATIC"),
                       help="static asset directory served at / (or CHARTLAB_STATIC)")
    serve.add_argument("--host", default=_env("HOST", "127.0.0.1"))
    serve.add_argument("--port", type=int, default=int(_env("PORT", "8000") or "8000"))

    report = commands.add_parser("report", help="print the pipeline counts of a catalog")
    report.add_argument("--catalog", required=True)
    return parser


def _print_report(report, out=None) -> None:
    out = out or sys.stdout
    lines = [
        ("billboard rows parsed", report.billboard_rows),
        ("billboard rows skipped", report.billboard_skipped),
        ("spotify rows parsed", report.spotify_rows),
        ("spotify rows rejected", report.spotify_rejected),
        ("distinct chart songs", report.chart_songs),
        ("unmatched chart songs", report.unmatched_chart_songs),
        ("matched candidates", report.matched_candidates),
        ("duplicates removed", report.duplicates_removed),
        ("songs total", report.songs_total),
    ]
    for label, value in lines:
        print(f"{label}: {value}", file=out)


def _run_build(args: argparse.Namespace) -> int:
    if not args.billboard or not args.spotify:
        print("build requires --billboard and --spotify", file=sys.stderr)
        return 2
    billboard_columns = spotify_columns = None
    if args.columns:
        billboard_columns, spotify_columns = load_column_maps(args.columns)
    labels = load_label_config(args.labels) if args.labels else None
    with open(args.billboard, encoding="utf-8", newline="") as bb, \
            open(args.spotify, encoding="utf-8", newline="") as sp:
        catalog = build_catalog(
            bb, sp,
            billboard_columns=billboard_columns,
            spotify_columns=spotify_columns,
            kmeans_config=KMeansConfig(k=args.k, seed=args.seed),
            label_config=labels,
        )
    save_catalog(catalog, args.out)
    _print_report(catalog.report)
    print(f"catalog written to {args.out}")
    return 0


def _run_cluster(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog)
    labels = load_label_config(args.labels) if args.labels else None
    updated = recluster(catalog, KMeansConfig(k=args.k, seed=args.seed), labels)
    save_catalog(updated, args.out)
    print(f"re-clustered catalog written to {args.out} "
          f"(k={args.k}, seed={args.seed}, inertia={updated.clustering.inertia:.6f})")
    return 0


def _run_serve(args: argparse.Namespace) -> int:
    from . import server

    try:
        config = ServerConfig(
            host=args.host,
            port=args.port,
            catalog_path=args.catalog,
            billboard_path=args.billboard,
            spotify_path=args.spotify,
            columns_path=args.columns,
            survey_path=args.survey,
            labels_path=args.labels,
            static_dir=args.static,
            k=args.k,
            seed=args.seed,
        )
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    server.run(config)
    return 0


def _run_report(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog)
    _print_report(catalog.report)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "build": _run_build,
        "cluster": _run_cluster,
        "serve": _run_serve,
        "report": _run_report,
    }
    try:
        return handlers[args.command](args)
    except (ChartLabError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
