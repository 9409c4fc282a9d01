"""Command-line entry point: ``qcg8 <command> [flags]``.

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.  Relative
output paths are resolved against ``$QCG8_OUT_DIR`` when it is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .bounds import (
    bound_set,
    ccs_class_bound,
    gnuplot_figure_data,
    min_p_upper_bound,
    scan_feasible,
    search_floor,
    search_min_p,
    special_small_p,
)
from .constructions import ExponentMatrix, exponent_matrix, select_construction
from .errors import QCG8Error
from .girth import cycle_sum, girth_upper8
from .pcm import expand, export_alist, graph_girth_bfs, import_alist, recover_exponents
from .sim import SimConfig, run_ber
from .triples import report_to_csv, table_report

SCHEMA_VERSION = 1
OUT_DIR_ENV = "QCG8_OUT_DIR"


def _out_path(name):
    p = Path(name)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _emit(doc):
    print(json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2))


def _load_exponents(path):
    text = Path(path).read_text()
    if Path(path).suffix.lower() == ".json" or text.lstrip().startswith("{"):
        return ExponentMatrix.from_json(text)
    return ExponentMatrix.from_csv(text)


def _row_weights(text):
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise ValueError(text)
        return list(range(lo, hi + 1))
    return [int(text)]


def _snr_list(text):
    return [float(x) for x in text.split(",") if x.strip()]


def cmd_construct(args):
    ms = select_construction(args.col_weight, args.row_weight)
    E = exponent_matrix(ms)
    header = {"J": ms.J, "L": ms.L, "family": ms.family, "kind": ms.id.kind,
              "entries": list(ms.entries)}
    if args.out:
        out = _out_path(args.out)
        out.write_text(E.to_csv())
        side = out.with_suffix(".json")
        side.write_text(E.to_json())
        _emit({**header, "csv": str(out), "json": str(side)})
    else:
        _emit({**header, "matrix": E.values.tolist()})


def _exponents_from_args(args):
    if args.e:
        return _load_exponents(args.e)
    if args.col_weight is None or args.row_weight is None:
        raise QCG8Error("need --col-weight and --row-weight, or --e FILE")
    return exponent_matrix(select_construction(args.col_weight, args.row_weight))


def cmd_verify(args):
    E = _exponents_from_args(args)
    rep = girth_upper8(E, args.p)
    doc = {"family": E.family, "J": int(E.J), "L": int(E.num_columns), "P": args.p,
           **rep.to_dict()}
    doc.pop("circulant_size")
    if rep.witness:
        doc["cycle_sum"] = cycle_sum(E, rep.witness)
    if args.bfs:
        doc["bfs_girth"] = graph_girth_bfs(expand(E, args.p), 10)
    _emit(doc)


def cmd_certify(args):
    ms = select_construction(args.col_weight, args.row_weight)
    text = report_to_csv(table_report(ms, args.p))
    if args.out:
        _out_path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_bounds(args):
    _emit(bound_set(args.col_weight, args.row_weight).to_dict())


def cmd_scan(args):
    Ls = args.row_weight
    if len(Ls) > 1 and (args.start is not None or args.stop is not None):
        raise QCG8Error("--from/--to apply to a single row weight only")
    scans, bounds = [], []
    for L in Ls:
        ms = select_construction(args.col_weight, L)
        start = args.start if args.start is not None else search_floor(args.col_weight, L)
        stop = args.stop if args.stop is not None else ccs_class_bound(ms) - 1
        scans.append(scan_feasible(args.col_weight, L, start, stop, jobs=args.jobs))
        bounds.append(bound_set(args.col_weight, L))
    if len(scans) == 1:
        text = scans[0].to_csv(feasible_only=args.feasible_only)
    else:
        rows = ["L,P,girth"]
        for s in scans:
            rows += [f"{s.L},{line}" for line in
                     s.to_csv(feasible_only=args.feasible_only).splitlines()[1:]]
        text = "\n".join(rows) + "\n"
    if args.out:
        _out_path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.gnuplot:
        _out_path(args.gnuplot).write_text(gnuplot_figure_data(scans, bounds))
    if args.plot:
        from .plotting import plot_feasible_sizes
        plot_feasible_sizes(scans, bounds, _out_path(args.plot))


def cmd_search_min(args):
    J, L = args.col_weight, args.row_weight
    P = search_min_p(J, L)
    E = exponent_matrix(select_construction(J, L))
    rep = girth_upper8(E, P)
    _emit({"J": J, "L": L, "family": E.family, "P": P,
           "search_range": [search_floor(J, L), min_p_upper_bound(J, L)],
           "special_p": special_small_p(J, L).P,
           "verification": {**rep.to_dict(), "cycle_sum": cycle_sum(E, rep.witness)}})


def cmd_export(args):
    E = _exponents_from_args(args)
    H = expand(E, args.p)
    out = _out_path(args.out)
    out.write_text(export_alist(H))
    rep = girth_upper8(E, args.p)
    meta = {"schema_version": SCHEMA_VERSION, "J": int(E.J), "L": int(E.num_columns),
            "P": args.p, "family": E.family, "girth": rep.to_dict()["girth"]}
    side = out.with_name(out.name + ".json")
    side.write_text(json.dumps(meta, indent=2) + "\n")
    _emit({**meta, "alist": str(out), "metadata": str(side)})


def cmd_simulate(args):
    H = import_alist(Path(args.alist).read_text())
    side = Path(args.alist + ".json")
    meta = json.loads(side.read_text()) if side.is_file() else {}
    P = args.p or meta.get("P")
    if P:
        H = recover_exponents(H, P, family=meta.get("family"))
    cfg = SimConfig(tuple(args.snr), max_iterations=args.max_iter,
                    normalization_factor=args.alpha, target_frame_errors=args.target_errors,
                    max_frames=args.max_frames, seed=args.seed)
    res = run_ber(H, cfg, jobs=args.jobs)
    if args.out:
        _out_path(args.out).write_text(res.to_csv())
    else:
        sys.stdout.write(res.to_csv())
    if args.gnuplot:
        _out_path(args.gnuplot).write_text(res.to_gnuplot())
    if args.plot:
        from .plotting import plot_error_rates
        plot_error_rates(res, _out_path(args.plot), label=Path(args.alist).stem)


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _circulant(text):
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"circulant size must be >= 2, got {v}")
    return v


def build_parser():
    parser = argparse.ArgumentParser(prog="qcg8", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def code_flags(p, required=True, multi=False):
        p.add_argument("--col-weight", type=int, required=required, metavar="J")
        p.add_argument("--row-weight", type=_row_weights if multi else int,
                       required=required, metavar="L")

    p = sub.add_parser("construct", help="exponent matrix of the selected construction")
    code_flags(p)
    p.add_argument("--out", help="CSV file; a JSON sidecar is written next to it")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="girth (up to 8) at one circulant size")
    code_flags(p, required=False)
    p.add_argument("--p", type=_circulant, required=True)
    p.add_argument("--e", help="exponent matrix file (CSV or JSON) instead of a construction")
    p.add_argument("--bfs", action="store_true", help="also run the expanded-graph BFS oracle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="row-triple GCD table")
    code_flags(p)
    p.add_argument("--p", type=_circulant, help="circulant size (default: CCS bound)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("bounds", help="circulant-size landmarks as JSON")
    code_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("scan", help="girth at every P of a range")
    code_flags(p, multi=True)
    p.add_argument("--from", dest="start", type=_circulant)
    p.add_argument("--to", dest="stop", type=_circulant)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--feasible-only", action="store_true")
    p.add_argument("--out")
    p.add_argument("--gnuplot", help="figure data file (points and bound curves)")
    p.add_argument("--plot", help="render the figure to this image file")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("search-min", help="smallest girth-8 P of the construction")
    code_flags(p)
    p.set_defaults(func=cmd_search_min)

    p = sub.add_parser("export", help="write the lifted parity-check matrix")
    code_flags(p, required=False)
    p.add_argument("--e")
    p.add_argument("--p", type=_circulant, required=True)
    p.add_argument("--format", choices=["alist"], default="alist")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("simulate", help="min-sum BER/FER over BPSK-AWGN")
    p.add_argument("--alist", required=True)
    p.add_argument("--snr", type=_snr_list, required=True, help="comma-separated Eb/N0 in dB")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-frames", type=_positive, default=10_000)
    p.add_argument("--target-errors", type=_positive, default=100)
    p.add_argument("--max-iter", type=_positive, default=50)
    p.add_argument("--alpha", type=float, default=0.75)
    p.add_argument("--p", type=_circulant, help="circulant size, to recover QC metadata")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out")
    p.add_argument("--gnuplot")
    p.add_argument("--plot")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "e", None) and not Path(args.e).is_file():
        parser.error(f"--e: no such file {args.e!r}")
    if getattr(args, "alist", None) and not Path(args.alist).is_file():
        parser.error(f"--alist: no such file {args.alist!r}")
    if args.command == "simulate" and not args.snr:
        parser.error("--snr: at least one value required")
    try:
        args.func(args)
    except QCG8Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
