"""Command-line front end.

Subcommands::

    multifiedler seriate --family cycle --n 5 --method graphical
    multifiedler seriate --input data.csv --format json --out result.json
    multifiedler lines   --family cycle --n 5 --svg lines.svg
    multifiedler bench   [--extended] [--montecarlo]

Exit codes: 0 success, 1 I/O or parse failure, 2 disconnected graph,
3 explosion guard, 4 unsupported multiplicity, 5 a bench row failed.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
import time
from typing import IO

import numpy as np

from . import __version__
from .enumeration import (
    build_line_arrangement,
    default_tau,
    graphical_method,
    monte_carlo_method,
    seriate,
)
from .errors import (
    DisconnectedGraph,
    ExplosionGuard,
    SeriationError,
    UnsupportedMultiplicity,
)
from .graphs import FAMILIES, gen_family, similarity
from .io import read_data_matrix, write_json_with_permutations, write_permutations_csv
from .linalg import fiedler_space, laplacian
from .oracles import TABLE_COUNTS, modified_star_count, petersen_lower_bound

log = logging.getLogger("multifiedler")

EXIT_IO = 1
EXIT_DISCONNECTED = 2
EXIT_EXPLOSION = 3
EXIT_MULTIPLICITY = 4
EXIT_BENCH = 5


class _Parser(argparse.ArgumentParser):
    # parse failures share the I/O exit status so that 2 stays "disconnected"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _positive_float(s: str) -> float:
    x = float(s)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return x


def _positive_int(s: str) -> int:
    x = int(s)
    if x < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return x


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=FAMILIES)
    src.add_argument("--input", metavar="PATH", help="dense CSV or Matrix Market (.mtx) data matrix")
    p.add_argument("--n", type=int, help="family size parameter")
    p.add_argument("--skip", type=int, default=1, help="GPG skip (petersen only)")
    p.add_argument("--no-header", action="store_true", help="CSV input has no header row")
    p.add_argument("--tau", type=_positive_float, default=None)
    p.add_argument("--cluster-tol", type=_positive_float, default=1e-8)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multifiedler", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("seriate", help="list the admissible orderings of the units")
    _add_input(s)
    s.add_argument("--method", choices=("auto", "graphical", "montecarlo", "oracle"), default="auto")
    s.add_argument("--samples", type=_positive_int, default=1000)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--count-only", action="store_true")

    ln = sub.add_parser("lines", help="export the line arrangement of a double Fiedler value")
    _add_input(ln)
    ln.add_argument("--points", type=_positive_int, default=21, help="samples per line")
    ln.add_argument("--svg", metavar="PATH", default=None)

    b = sub.add_parser("bench", help="reproduce the case-study count tables")
    b.add_argument("--extended", action="store_true", help="include GPG(9,1)")
    b.add_argument("--montecarlo", action="store_true", help="also run Monte Carlo")
    b.add_argument("--samples", type=_positive_int, default=5000)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--format", choices=("text", "csv", "json"), default="text")
    b.add_argument("--out", metavar="PATH", default=None)
    return parser


@contextlib.contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _load(args):
    """Return (data matrix, description) for the input options."""
    if args.family is not None:
        if args.n is None:
            raise ValueError("--family requires --n")
        desc = {"family": args.family, "n": args.n}
        if args.family == "petersen":
            desc["skip"] = args.skip
        return gen_family(args.family, args.n, args.skip), desc
    A = read_data_matrix(args.input, header=False if args.no_header else None)
    return A, {"input": args.input}


def _fiedler(args):
    A, desc = _load(args)
    fs = fiedler_space(laplacian(similarity(A)), cluster_tol=args.cluster_tol)
    return fs, desc


def cmd_seriate(args) -> int:
    fs, desc = _fiedler(args)
    warnings = []
    if fs.multiplicity > 2 and args.method in ("auto", "montecarlo"):
        warnings.append(
            f"Fiedler multiplicity {fs.multiplicity} > 2: only Monte Carlo is available; "
            "the result may be incomplete"
        )
        log.warning(warnings[-1])
    pset, method = seriate(
        fs, args.method, tau=args.tau, samples=args.samples, seed=args.seed
    )
    tau = args.tau
    if method in ("graphical", "oracle") and tau is None:
        tau = default_tau(fs.basis[:, 0], fs.basis[:, 1])
    perms = None if args.count_only else iter(pset)
    with _output(args.out) as fh:
        if args.format == "csv":
            if perms is None:
                fh.write(f"{len(pset)}\n")
            else:
                write_permutations_csv(perms, fh)
        else:
            doc = {
                **desc,
                "fiedler_value": fs.value,
                "multiplicity": fs.multiplicity,
                "method": method,
                "count": len(pset),
                "seed": args.seed if method == "montecarlo" else None,
                "samples": args.samples if method == "montecarlo" else None,
                "tolerances": {"tau": tau, "cluster_tol": args.cluster_tol},
                "warnings": warnings,
            }
            write_json_with_permutations(doc, perms, fh)
    return 0


def _svg(arr, lo: float, hi: float) -> str:
    W, H, pad = 640, 400, 30
    gam = np.array([lo, hi])
    vals = arr.v[:, None] + arr.w[:, None] * gam[None, :]
    ymin, ymax = float(vals.min()), float(vals.max())
    if ymax == ymin:
        ymax = ymin + 1.0

    def sx(g):
        return pad + (g - lo) / (hi - lo) * (W - 2 * pad)

    def sy(y):
        return H - pad - (y - ymin) / (ymax - ymin) * (H - 2 * pad)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        f'<rect width="{W}" height="{H}" fill="white"/>',
    ]
    phi = arr.abscissae
    for g in phi:
        out.append(
            f'<line x1="{sx(g):.2f}" y1="{pad}" x2="{sx(g):.2f}" y2="{H - pad}" '
            'stroke="gray" stroke-dasharray="4,3"/>'
        )
    for a, b in zip(phi[:-1], phi[1:]):
        out.append(f'<circle cx="{sx(0.5 * (a + b)):.2f}" cy="{H - pad}" r="3" fill="red"/>')
    for i in range(arr.n):
        y0, y1 = vals[i]
        out.append(
            f'<line x1="{sx(lo):.2f}" y1="{sy(y0):.2f}" x2="{sx(hi):.2f}" y2="{sy(y1):.2f}" '
            'stroke="black"/>'
        )
        out.append(f'<text x="{sx(hi) + 3:.2f}" y="{sy(y1) + 4:.2f}" font-size="11">{i + 1}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_lines(args) -> int:
    fs, desc = _fiedler(args)
    if fs.multiplicity != 2:
        raise UnsupportedMultiplicity(
            f"the line arrangement needs a double Fiedler value, got multiplicity {fs.multiplicity}"
        )
    arr = build_line_arrangement(fs.basis[:, 0], fs.basis[:, 1], args.tau)
    lo, hi = float(arr.abscissae[0] - 1.0), float(arr.abscissae[-1] + 1.0)
    grid = np.linspace(lo, hi, args.points)
    with _output(args.out) as fh:
        if args.format == "csv":
            fh.write("record,index,x,y\n")
            for i in range(arr.n):
                fh.write(f"line,{i + 1},{float(arr.w[i])!r},{float(arr.v[i])!r}\n")
            for g, k in arr.table():
                fh.write(f"abscissa,{k},{float(g)!r},\n")
            for i in range(arr.n):
                for g in grid:
                    fh.write(f"point,{i + 1},{float(g)!r},{float(arr.v[i] + g * arr.w[i])!r}\n")
        else:
            doc = {
                **desc,
                "fiedler_value": fs.value,
                "tau": arr.tau,
                "lines": [
                    {"index": i + 1, "slope": float(arr.w[i]), "intercept": float(arr.v[i])}
                    for i in range(arr.n)
                ],
                "abscissae": [{"gamma": float(g), "multiplicity": int(k)} for g, k in arr.table()],
                "points": {
                    "gamma": grid.tolist(),
                    "values": (arr.v[:, None] + arr.w[:, None] * grid[None, :]).tolist(),
                },
            }
            fh.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(_svg(arr, lo, hi))
    return 0


BENCH_ROWS = [("modified_star", n) for n in range(5, 11)] + [
    ("cycle", n) for n in range(4, 11)
] + [("petersen", n) for n in range(5, 9)]


def run_bench(extended: bool = False, montecarlo: bool = False, samples: int = 5000, seed=0):
    """Run the graphical method on every table row; returns a list of row dicts."""
    rows = BENCH_ROWS + ([("petersen", 9)] if extended else [])
    report = []
    for family, n in rows:
        t0 = time.perf_counter()
        fs = fiedler_space(laplacian(similarity(gen_family(family, n))))
        found = len(graphical_method(fs.basis[:, 0], fs.basis[:, 1]))
        elapsed = time.perf_counter() - t0
        expected = TABLE_COUNTS[family][n]
        row = {
            "family": family,
            "n": n,
            "multiplicity": fs.multiplicity,
            "found": found,
            "expected": expected,
            "status": "PASS" if found == expected else "FAIL",
            "seconds": round(elapsed, 4),
            "extended": (family, n) not in BENCH_ROWS,
        }
        if family == "modified_star":
            row["formula"] = modified_star_count(n)
            if found != row["formula"]:
                row["status"] = "FAIL"
        elif family == "petersen":
            row["formula"] = petersen_lower_bound(n)
        if montecarlo:
            t0 = time.perf_counter()
            row["montecarlo"] = len(monte_carlo_method(fs.basis, samples, seed))
            row["montecarlo_seconds"] = round(time.perf_counter() - t0, 4)
        log.info("%s n=%d found=%d expected=%d %s", family, n, found, expected, row["status"])
        report.append(row)
    return report


def _print_bench(report, fmt: str, fh: IO[str]) -> None:
    if fmt == "json":
        fh.write(json.dumps(report, indent=2) + "\n")
        return
    cols = ["family", "n", "found", "expected", "formula", "montecarlo", "status", "seconds"]
    if fmt == "csv":
        fh.write(",".join(cols) + "\n")
        for r in report:
            fh.write(",".join(str(r.get(c, "")) for c in cols) + "\n")
        return
    fh.write(f"{'family':<14}{'n':>3}{'found':>10}{'expected':>10}{'formula':>10}"
             f"{'MC':>8}  status  seconds\n")
    for r in report:
        fh.write(
            f"{r['family']:<14}{r['n']:>3}{r['found']:>10}{r['expected']:>10}"
            f"{str(r.get('formula', '')):>10}{str(r.get('montecarlo', '')):>8}"
            f"  {r['status']:<6}  {r['seconds']:.3f}\n"
        )


def cmd_bench(args) -> int:
    report = run_bench(args.extended, args.montecarlo, args.samples, args.seed)
    with _output(args.out) as fh:
        _print_bench(report, args.format, fh)
    failed = [r for r in report if r["status"] != "PASS" and not r["extended"]]
    return EXIT_BENCH if failed else 0


COMMANDS = {"seriate": cmd_seriate, "lines": cmd_lines, "bench": cmd_bench}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except DisconnectedGraph as exc:
        log.error("%s", exc)
        return EXIT_DISCONNECTED
    except ExplosionGuard as exc:
        log.error("%s", exc)
        return EXIT_EXPLOSION
    except UnsupportedMultiplicity as exc:
        log.error("%s", exc)
        return EXIT_MULTIPLICITY
    except (OSError, ValueError, SeriationError) as exc:
        log.error("%s", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
