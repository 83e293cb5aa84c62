"""Command line surface: generate, ingest, project, validate, cluster.

Matrices travel as headerless CSV (n rows of n comma-separated values,
written with 17 significant digits so float64 round-trips exactly).
Reports are JSON with an embedded run manifest; per-pair validation
records are CSV for external plotting.  Exit codes: 0 success, 1 usage,
2 data error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .core import DissimilarityError, NumericalError, as_matrix, validate_matrix
from .datagen import (
    DEFAULT_ALPHA,
    BallSpec,
    SimplexSpec,
    gen_balls,
    gen_simplex,
    graph_hops,
    parse_edge_list,
)
from .evaluate import (
    DEFAULT_RESTARTS,
    kmeans_projected,
    relative_error_stats,
    validate_power_residual,
    validate_pq_bound,
)
from .pipeline import METHODS, report_dict, run_projection, summary_dict
from .projection import DEFAULT_DIM_CONSTANT, DEFAULT_EPSILON, ProjectionConfig
from .pqspace import embed_pq

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures on exit code 1 (2 means bad data here)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_matrix(path: str) -> np.ndarray:
    """Load a headerless CSV matrix."""
    try:
        return np.loadtxt(path, delimiter=",", ndmin=2)
    except OSError as exc:
        raise DissimilarityError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise DissimilarityError(f"cannot parse {path} as a CSV matrix: {exc}") from exc


def write_matrix(path: str | None, D) -> None:
    """Write a matrix as CSV; 17 significant digits round-trip float64."""
    target = sys.stdout if path is None or path == "-" else path
    np.savetxt(target, as_matrix(D), delimiter=",", fmt="%.17g")


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _manifest(command: str, inputs: list[str], args, started: float) -> dict:
    config = {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in ("func", "command", "kind")
    }
    return {
        "command": command,
        "inputs": inputs,
        "config": config,
        "version": __version__,
        "duration_s": round(time.monotonic() - started, 6),
    }


def cmd_gen_simplex(args) -> int:
    D = gen_simplex(SimplexSpec(n=args.n, alpha=args.alpha, seed=args.seed))
    write_matrix(args.out, D)
    return EXIT_OK


def cmd_gen_ball(args) -> int:
    spec = BallSpec(
        n=args.n,
        dim=args.dim,
        radius_min=args.rmin,
        radius_max=args.rmax,
        seed=args.seed,
    )
    write_matrix(args.out, gen_balls(spec))
    return EXIT_OK


def cmd_ingest_graph(args) -> int:
    try:
        with open(args.edges) as fh:
            edges = parse_edge_list(fh)
    except OSError as exc:
        raise DissimilarityError(f"cannot read {args.edges}: {exc}") from exc
    write_matrix(args.out, graph_hops(edges))
    return EXIT_OK


def _run_from_args(args):
    config = ProjectionConfig(
        epsilon=args.epsilon, dim_constant=args.const, seed=args.seed
    )
    D = validate_matrix(read_matrix(args.matrix))
    return run_projection(
        D, args.method, config, radius_override=args.radius_override
    )


def cmd_project(args) -> int:
    started = time.monotonic()
    result = _run_from_args(args)
    report = {"manifest": _manifest("project", [args.matrix], args, started)}
    report.update(report_dict(result))
    _write_text(args.out_report, json.dumps(report, indent=2) + "\n")
    if args.out_matrix:
        write_matrix(args.out_matrix, result.reconstructed)
    return EXIT_OK


def _pair_rows(method, A, Dhat, pq_check, power_check, epsilon):
    """Per-pair plot records; returns (header, list of row strings)."""
    iu = np.triu_indices(A.shape[0], 1)
    d = A[iu]
    dh = np.asarray(Dhat)[iu]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = dh / d
    num = "%.10g"

    def fmt(*values):
        return ",".join(
            num % v if isinstance(v, float) else str(v) for v in values
        )

    rows = []
    if method == "jl-pq":
        header = "i,j,dissimilarity,reconstructed,ratio,factor,band_lower,band_upper,violated"
        for t in range(d.size):
            rows.append(
                fmt(
                    int(iu[0][t]),
                    int(iu[1][t]),
                    float(d[t]),
                    float(dh[t]),
                    float(ratio[t]),
                    float(pq_check.factor[t]),
                    float(pq_check.lower[t]),
                    float(pq_check.upper[t]),
                    int(pq_check.violated[t]),
                )
            )
    elif method == "jl-power":
        header = "i,j,dissimilarity,reconstructed,ratio,residual,bound,violated"
        for t in range(d.size):
            rows.append(
                fmt(
                    int(iu[0][t]),
                    int(iu[1][t]),
                    float(d[t]),
                    float(dh[t]),
                    float(ratio[t]),
                    float(power_check.residuals[t]),
                    float(power_check.bound),
                    int(power_check.residuals[t] > power_check.bound),
                )
            )
    else:
        header = "i,j,dissimilarity,reconstructed,ratio,band_lower,band_upper,violated"
        half = epsilon * np.abs(d)
        for t in range(d.size):
            rows.append(
                fmt(
                    int(iu[0][t]),
                    int(iu[1][t]),
                    float(d[t]),
                    float(dh[t]),
                    float(ratio[t]),
                    float(d[t] - half[t]),
                    float(d[t] + half[t]),
                    int(abs(dh[t] - d[t]) > half[t]),
                )
            )
    return header, rows


def cmd_validate(args) -> int:
    started = time.monotonic()
    result = _run_from_args(args)
    D = result.matrix
    if args.identity_debug:
        # bypass the projection: score the matrix against itself so the
        # whole reporting path can be checked for spurious violations
        Dhat = D.entries
        stats = relative_error_stats(D, Dhat)
        pq_check = power_check = None
        if args.method == "jl-pq":
            pq_check = validate_pq_bound(D, result.embedding, Dhat, args.epsilon)
        elif args.method == "jl-power":
            power_check = validate_power_residual(
                D, result.representation.radius, Dhat, args.epsilon
            )
    else:
        Dhat = result.reconstructed
        stats = result.stats
        pq_check = result.pq_check
        power_check = result.power_check
    header, rows = _pair_rows(
        args.method, D.entries, Dhat, pq_check, power_check, args.epsilon
    )
    if args.sample is not None:
        if args.sample < 1:
            raise DissimilarityError(f"--sample must be >= 1, got {args.sample}")
        if args.sample < len(rows):
            rng = np.random.default_rng(args.seed)
            picked = np.sort(
                rng.choice(len(rows), size=args.sample, replace=False)
            )
            rows = [rows[i] for i in picked]
    _write_text(args.out_csv, "\n".join([header] + rows) + "\n")
    radius = None
    if result.representation is not None:
        radius = result.representation.radius
    report = {"manifest": _manifest("validate", [args.matrix], args, started)}
    report.update(
        summary_dict(
            args.method,
            D.n,
            result.out_dim,
            result.config,
            stats,
            pq_check,
            power_check,
            radius,
        )
    )
    _write_text(args.out_report, json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def cmd_kmeans(args) -> int:
    started = time.monotonic()
    config = ProjectionConfig(
        epsilon=args.epsilon, dim_constant=args.const, seed=args.seed
    )
    D = validate_matrix(read_matrix(args.matrix))
    result = run_projection(D, args.method, config)
    if args.method == "jl-pq":
        coords = np.hstack(
            [result.projected.pos_coords, result.projected.neg_coords]
        )
    elif args.method == "jl-power":
        coords = result.projected.centers
    else:
        coords = result.projected
    original = kmeans_projected(
        D,
        embed_pq(result.decomposition).pos_coords,
        args.k,
        seed=args.seed,
        restarts=args.restarts,
    )
    projected = kmeans_projected(
        D, coords, args.k, seed=args.seed, restarts=args.restarts
    )
    ratio = None
    if original.cost != 0.0:
        ratio = projected.cost / original.cost
    report = {
        "manifest": _manifest("kmeans", [args.matrix], args, started),
        "method": args.method,
        "n": D.n,
        "k": args.k,
        "seed": args.seed,
        "restarts": args.restarts,
        "original_cost": original.cost,
        "projected_cost": projected.cost,
        "cost_ratio": ratio,
    }
    _write_text(args.out_report, json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def _add_projection_flags(parser) -> None:
    parser.add_argument(
        "--method", choices=METHODS, default="jl-pq", help="projection route"
    )
    parser.add_argument(
        "--epsilon", type=float, default=DEFAULT_EPSILON,
        help="distortion budget in (0, 1)",
    )
    parser.add_argument(
        "--const", type=float, default=DEFAULT_DIM_CONSTANT,
        help="dimension constant c in ceil(c log2(n) / eps^2)",
    )
    parser.add_argument("--seed", type=int, default=0, help="projection seed")
    parser.add_argument(
        "--radius-override", type=float, default=None,
        help="replace the minimal power radius (jl-power only); values below "
        "the minimum make the shifted matrix non-Euclidean and fail",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="dissimjl",
        description="Random projection for arbitrary dissimilarity matrices.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    gen = sub.add_parser("gen", help="generate a synthetic dissimilarity matrix")
    kinds = gen.add_subparsers(dest="kind", required=True, metavar="kind")
    simplex = kinds.add_parser("simplex", help="simplex with a dominant negative block")
    simplex.add_argument("--n", type=int, required=True, help="number of points")
    simplex.add_argument(
        "--alpha", type=float, default=DEFAULT_ALPHA,
        help="weight of the negative block; 0 gives a Euclidean simplex",
    )
    simplex.add_argument("--seed", type=int, default=0)
    simplex.add_argument("--out", default=None, help="CSV path (default stdout)")
    simplex.set_defaults(func=cmd_gen_simplex)
    ball = kinds.add_parser("ball", help="clamped gap distances between random balls")
    ball.add_argument("--n", type=int, required=True, help="number of balls")
    ball.add_argument("--dim", type=int, default=10, help="center dimension")
    ball.add_argument("--rmin", type=float, default=0.5, help="smallest radius")
    ball.add_argument("--rmax", type=float, default=2.0, help="largest radius")
    ball.add_argument("--seed", type=int, default=0)
    ball.add_argument("--out", default=None, help="CSV path (default stdout)")
    ball.set_defaults(func=cmd_gen_ball)

    ingest = sub.add_parser(
        "ingest-graph", help="hop-count matrix from an edge list"
    )
    ingest.add_argument("edges", help="edge list file, one 'u v' pair per line")
    ingest.add_argument("--out", default=None, help="CSV path (default stdout)")
    ingest.set_defaults(func=cmd_ingest_graph)

    project = sub.add_parser(
        "project", help="project a matrix and report reconstruction quality"
    )
    project.add_argument("matrix", help="input CSV matrix")
    _add_projection_flags(project)
    project.add_argument("--out-report", default=None, help="JSON path (default stdout)")
    project.add_argument("--out-matrix", default=None, help="reconstructed CSV path")
    project.set_defaults(func=cmd_project)

    validate = sub.add_parser(
        "validate", help="per-pair bound records for plotting, plus a summary"
    )
    validate.add_argument("matrix", help="input CSV matrix")
    _add_projection_flags(validate)
    validate.add_argument(
        "--sample", type=int, default=None,
        help="emit exactly this many pair rows, sampled with the run seed",
    )
    validate.add_argument(
        "--identity-debug", action="store_true",
        help="score the matrix against itself (pipeline check, zero violations)",
    )
    validate.add_argument("--out-csv", default=None, help="pair CSV path (default stdout)")
    validate.add_argument("--out-report", default=None, help="JSON path (default stdout)")
    validate.set_defaults(func=cmd_validate)

    kmeans = sub.add_parser(
        "kmeans", help="cluster on projected coordinates, score relationally"
    )
    kmeans.add_argument("matrix", help="input CSV matrix")
    kmeans.add_argument("--k", type=int, required=True, help="cluster count")
    kmeans.add_argument(
        "--method", choices=METHODS, default="jl-pq", help="projection route"
    )
    kmeans.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    kmeans.add_argument("--const", type=float, default=DEFAULT_DIM_CONSTANT)
    kmeans.add_argument("--seed", type=int, default=0)
    kmeans.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    kmeans.add_argument("--out-report", default=None, help="JSON path (default stdout)")
    kmeans.set_defaults(func=cmd_kmeans)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DissimilarityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def run() -> None:
    sys.exit(main(sys.argv[1:]))
