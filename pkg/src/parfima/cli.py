"""Command line front end.

Five subcommands expose the library over files and pipes:

* ``coeffs``    filter coefficient tables (single-season or periodic)
* ``check``     invertibility/causality classification as JSON
* ``simulate``  sample paths, optionally with recovered innovations
* ``acf``       empirical or closed-form periodic autocovariance
* ``converge``  truncation diagnostics, single set or canned grids

Output is CSV (default) or JSON on stdout, or a file via ``--out``;
writing a file also drops a ``<out>.meta.json`` sidecar recording every
resolved argument, enough to reproduce the run exactly.  Nothing is
ever read from stdin, no timestamps are embedded, and floats are
written at full ``repr`` precision, so identical invocations produce
identical bytes.

Errors exit with status 1 and a single machine-parsable stderr line of
the form ``error: <Type>: <message>``; usage mistakes exit with the
argparse status 2.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import __version__
from .convergence import (
    DEFAULT_FLOOR,
    DEFAULT_GROWTH,
    DEFAULT_TAU,
    TABLE_CHECKPOINTS,
    TABLE_GRIDS,
    classify_convergence,
    delta_table,
)
from .covariance import asymptotic_periodic_acf, empirical_periodic_acvf
from .errors import ParameterError, ParfimaError
from .fracdiff import SeriesKind, ar_coefficients, ma_coefficients
from .params import SeasonalParams, classify_region
from .representation import (
    IndexingMode,
    periodic_ar_coefficients,
    periodic_ma_coefficients,
)
from .simulate import DEFAULT_TRUNCATION, recover_innovations, simulate_path

_MODES = {"backward": IndexingMode.BACKWARD, "paper": IndexingMode.FORWARD}


def _float_list(text):
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma-separated decimal numbers, got %r" % text
        )
    if not values:
        raise argparse.ArgumentTypeError("expected at least one value")
    return values


def _int_list(text):
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma-separated integers, got %r" % text
        )
    return values


def _build_params(args):
    p = args.p if args.p is not None else len(args.d)
    return SeasonalParams(p=p, d=args.d, sigma=args.sigma)


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj):
    return json.dumps(obj, indent=2) + "\n"


def _emit(text, out_path, meta=None):
    """Write the payload to stdout or to a file plus metadata sidecar."""
    if out_path is None:
        sys.stdout.write(text)
        return
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    if meta is not None:
        with open(out_path + ".meta.json", "w", encoding="utf-8", newline="") as fh:
            fh.write(_json_text(meta))


def _meta(command, **resolved):
    return {
        "command": command,
        "package": "parfima",
        "version": __version__,
        "arguments": resolved,
    }


def _season_header(p):
    return ["season_%d" % i for i in range(1, p + 1)]


# ---------------------------------------------------------------------------
# coeffs


def _cmd_coeffs(args):
    kind = SeriesKind(args.kind)
    mode = _MODES[args.mode]
    if kind in (SeriesKind.AR, SeriesKind.MA):
        if len(args.d) != 1:
            raise ParameterError(
                "kind %r takes exactly one d value, got %d"
                % (kind.value, len(args.d))
            )
        d = args.d[0]
        series = (ar_coefficients if kind is SeriesKind.AR else ma_coefficients)(
            d, args.n
        )
        values = series.values
        meta = _meta(
            "coeffs", kind=kind.value, d=[d], n=args.n, format=args.format
        )
        if args.format == "json":
            payload = {
                "kind": kind.value,
                "d": [d],
                "lags": list(range(args.n + 1)),
                "values": [float(v) for v in values],
            }
            text = _json_text(payload)
        else:
            rows = [(j, repr(float(values[j]))) for j in range(args.n + 1)]
            text = _csv_text(["j", "value"], rows)
        _emit(text, args.out, meta)
        return 0

    params = _build_params(args)
    builder = (
        periodic_ar_coefficients
        if kind is SeriesKind.PERIODIC_AR
        else periodic_ma_coefficients
    )
    table = np.vstack(
        [builder(params, i, args.n, mode=mode).values for i in range(1, params.p + 1)]
    )
    meta = _meta(
        "coeffs",
        kind=kind.value,
        p=params.p,
        d=list(params.d),
        sigma=list(params.sigma),
        n=args.n,
        mode=args.mode,
        format=args.format,
    )
    if args.format == "json":
        payload = {
            "kind": kind.value,
            "p": params.p,
            "d": list(params.d),
            "mode": mode.value,
            "lags": list(range(args.n + 1)),
            "series": [
                {"season": i + 1, "values": [float(v) for v in table[i]]}
                for i in range(params.p)
            ],
        }
        text = _json_text(payload)
    else:
        rows = [
            [j] + [repr(float(table[i, j])) for i in range(params.p)]
            for j in range(args.n + 1)
        ]
        text = _csv_text(["j"] + _season_header(params.p), rows)
    _emit(text, args.out, meta)
    return 0


# ---------------------------------------------------------------------------
# check


def _cmd_check(args):
    params = _build_params(args)
    report = classify_region(params)
    payload = {
        "p": params.p,
        "d": list(params.d),
        "sigma": list(params.sigma),
    }
    payload.update(report.to_dict())
    meta = _meta("check", p=params.p, d=list(params.d), sigma=list(params.sigma))
    _emit(_json_text(payload), args.out, meta)
    return 0


# ---------------------------------------------------------------------------
# simulate


def _simulate_season_column(params, start_season, n):
    t = np.arange(1, n + 1)
    return (start_season - 1 + t - 1) % params.p + 1


def _cmd_simulate(args):
    params = _build_params(args)
    path = simulate_path(
        params,
        args.n,
        truncation=args.truncation,
        burn_in=args.burn_in,
        seed=args.seed,
        mode=_MODES[args.mode],
        start_season=args.start_season,
    )
    recovered = None
    if args.filter_length is not None:
        recovered = recover_innovations(path, args.filter_length)
    seasons = _simulate_season_column(params, path.start_season, args.n)
    meta = _meta(
        "simulate",
        p=params.p,
        d=list(params.d),
        sigma=list(params.sigma),
        n=args.n,
        truncation=path.truncation,
        burn_in=path.burn_in,
        seed=args.seed,
        mode=args.mode,
        start_season=path.start_season,
        filter_length=args.filter_length,
        format=args.format,
    )
    k = args.filter_length
    if args.format == "json":
        payload = {
            "meta": meta,
            "t": list(range(1, args.n + 1)),
            "season": [int(s) for s in seasons],
            "x": [float(v) for v in path.values],
            "epsilon": [float(v) for v in path.innovations],
        }
        if recovered is not None:
            payload["epsilon_recovered"] = [None] * k + [float(v) for v in recovered]
        text = _json_text(payload)
    else:
        header = ["t", "season", "x", "epsilon"]
        if recovered is not None:
            header.append("epsilon_recovered")
        rows = []
        for q in range(args.n):
            row = [
                q + 1,
                int(seasons[q]),
                repr(float(path.values[q])),
                repr(float(path.innovations[q])),
            ]
            if recovered is not None:
                row.append("" if q < k else repr(float(recovered[q - k])))
            rows.append(row)
        text = _csv_text(header, rows)
    _emit(text, args.out, meta)
    return 0


# ---------------------------------------------------------------------------
# acf


def _read_path_csv(filename):
    """Load a simulate-format CSV, returning (x, p, start_season)."""
    with open(filename, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParameterError("path file %r is empty" % filename)
        try:
            season_col = header.index("season")
            x_col = header.index("x")
        except ValueError:
            raise ParameterError(
                "path file %r must have 'season' and 'x' columns, got %r"
                % (filename, header)
            )
        seasons = []
        x = []
        for row in reader:
            if not row:
                continue
            seasons.append(int(row[season_col]))
            x.append(float(row[x_col]))
    if not x:
        raise ParameterError("path file %r has no data rows" % filename)
    return np.asarray(x), max(seasons), seasons[0]


def _cmd_acf(args):
    if args.asymptotic:
        params = _build_params(args)
        table = asymptotic_periodic_acf(params, args.n)
        meta = _meta(
            "acf",
            asymptotic=True,
            p=params.p,
            d=list(params.d),
            sigma=list(params.sigma),
            n=args.n,
            format=args.format,
        )
    else:
        if args.path is None:
            raise ParameterError(
                "empirical acf needs --path FILE (or pass --asymptotic)"
            )
        x, p, start = _read_path_csv(args.path)
        if args.p is not None and args.p != p:
            raise ParameterError(
                "--p %d contradicts the %d seasons found in %r"
                % (args.p, p, args.path)
            )
        table = empirical_periodic_acvf(
            x, args.n, center=args.center, p=p, start_season=start
        )
        meta = _meta(
            "acf",
            asymptotic=False,
            path=args.path,
            p=p,
            start_season=start,
            n=args.n,
            center=args.center,
            format=args.format,
        )
    if args.format == "json":
        payload = {
            "source": table.source.value,
            "p": table.p,
            "lags": [int(h) for h in table.lags],
            "series": [
                {"season": i, "values": [float(v) for v in table.season(i)]}
                for i in range(1, table.p + 1)
            ],
        }
        text = _json_text(payload)
    else:
        rows = [
            [int(h)] + [repr(float(table.values[i, col])) for i in range(table.p)]
            for col, h in enumerate(table.lags)
        ]
        text = _csv_text(["h"] + _season_header(table.p), rows)
    _emit(text, args.out, meta)
    return 0


# ---------------------------------------------------------------------------
# converge


def _converge_rows(label, report):
    rows = []
    verdict = report.verdict.value
    for col, n in enumerate(report.checkpoints):
        for i in range(1, report.params.p + 1):
            rows.append(
                [
                    n,
                    label,
                    i,
                    repr(float(report.deltas[i - 1, col])),
                    repr(float(report.partial_sums[i - 1, col])),
                    verdict,
                ]
            )
    return rows


def _cmd_converge(args):
    checkpoints = args.N if args.N is not None else TABLE_CHECKPOINTS
    mode = _MODES[args.mode]
    if args.table is not None:
        pairs = TABLE_GRIDS[args.table]
        param_sets = [SeasonalParams(p=2, d=pair) for pair in pairs]
    else:
        if args.d is None:
            raise ParameterError("converge needs --d (or a canned --table)")
        param_sets = [_build_params(args)]
    reports = []
    for params in param_sets:
        report = delta_table(params, checkpoints, mode=mode)
        classify_convergence(
            report, tau=args.tau, floor=args.floor, growth=args.growth
        )
        reports.append(report)
    meta = _meta(
        "converge",
        table=args.table,
        d=None if args.d is None else list(args.d),
        checkpoints=list(checkpoints),
        mode=args.mode,
        tau=args.tau,
        floor=args.floor,
        growth=args.growth,
        format=args.format,
    )
    if args.format == "json":
        payload = {
            "table": args.table,
            "checkpoints": list(checkpoints),
            "reports": [r.to_dict() for r in reports],
        }
        text = _json_text(payload)
    else:
        rows = []
        for report in reports:
            label = ",".join(repr(float(v)) for v in report.params.d)
            rows.extend(_converge_rows(label, report))
        header = ["N", "d_spec", "season", "delta", "partial_abs_sum", "verdict"]
        text = _csv_text(header, rows)
    _emit(text, args.out, meta)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_model_flags(sub, need_d=True):
    sub.add_argument("--p", type=int, default=None, help="period (default: len of --d)")
    sub.add_argument(
        "--d",
        type=_float_list,
        required=need_d,
        default=None,
        help="comma-separated memory parameters, one per season",
    )
    sub.add_argument(
        "--sigma",
        type=_float_list,
        default=None,
        help="comma-separated innovation scales (default: all 1)",
    )


def _add_output_flags(sub, formats=("csv", "json")):
    if formats:
        sub.add_argument(
            "--format", choices=formats, default=formats[0], help="output format"
        )
    sub.add_argument("--out", default=None, help="write here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="parfima",
        description="Periodic fractionally differenced models: coefficients, "
        "regions, simulation, autocovariance, convergence.",
    )
    parser.add_argument("--version", action="version", version="parfima " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    coeffs = sub.add_parser("coeffs", help="filter coefficient tables")
    coeffs.add_argument(
        "--kind",
        choices=[k.value for k in SeriesKind],
        default=SeriesKind.PERIODIC_AR.value,
        help="coefficient family",
    )
    _add_model_flags(coeffs)
    coeffs.add_argument("--n", type=int, required=True, help="largest lag to compute")
    coeffs.add_argument(
        "--mode",
        choices=sorted(_MODES),
        default="backward",
        help="season-indexing convention for the periodic kinds",
    )
    _add_output_flags(coeffs)
    coeffs.set_defaults(func=_cmd_coeffs)

    check = sub.add_parser("check", help="classify invertibility and causality")
    _add_model_flags(check)
    _add_output_flags(check, formats=())
    check.set_defaults(func=_cmd_check)

    simulate = sub.add_parser("simulate", help="simulate a sample path")
    _add_model_flags(simulate)
    simulate.add_argument("--n", type=int, required=True, help="path length")
    simulate.add_argument(
        "--truncation",
        type=int,
        default=DEFAULT_TRUNCATION,
        help="moving-average cutoff M",
    )
    simulate.add_argument(
        "--burn-in", type=int, default=None, help="extra pre-sample innovations"
    )
    simulate.add_argument("--seed", type=int, default=None, help="generator seed")
    simulate.add_argument(
        "--mode", choices=sorted(_MODES), default="backward",
        help="season-indexing convention",
    )
    simulate.add_argument(
        "--start-season", type=int, default=1, help="season of the first observation"
    )
    simulate.add_argument(
        "--filter-length",
        type=int,
        default=None,
        help="also recover innovations with this AR cutoff K "
        "(adds an epsilon_recovered column)",
    )
    _add_output_flags(simulate)
    simulate.set_defaults(func=_cmd_simulate)

    acf = sub.add_parser("acf", help="periodic autocovariance tables")
    acf.add_argument(
        "--path", default=None, help="simulate-format CSV to estimate from"
    )
    acf.add_argument(
        "--asymptotic",
        action="store_true",
        help="closed-form table from --p/--d instead of a file",
    )
    acf.add_argument(
        "--center", action="store_true", help="subtract per-season sample means"
    )
    _add_model_flags(acf, need_d=False)
    acf.add_argument("--n", type=int, required=True, help="largest lag")
    _add_output_flags(acf)
    acf.set_defaults(func=_cmd_acf)

    converge = sub.add_parser("converge", help="truncation convergence diagnostics")
    _add_model_flags(converge, need_d=False)
    converge.add_argument(
        "--N",
        type=_int_list,
        default=None,
        help="comma-separated truncation checkpoints (default: %s)"
        % (",".join(str(c) for c in TABLE_CHECKPOINTS)),
    )
    converge.add_argument(
        "--table",
        type=int,
        choices=sorted(TABLE_GRIDS),
        default=None,
        help="run a canned period-2 demonstration grid",
    )
    converge.add_argument(
        "--mode", choices=sorted(_MODES), default="backward",
        help="season-indexing convention",
    )
    converge.add_argument(
        "--tau", type=float, default=DEFAULT_TAU, help="gap decay factor for CONVERGENT"
    )
    converge.add_argument(
        "--floor", type=float, default=DEFAULT_FLOOR, help="gap level for DIVERGENT"
    )
    converge.add_argument(
        "--growth",
        type=float,
        default=DEFAULT_GROWTH,
        help="partial-sum growth factor for DIVERGENT",
    )
    _add_output_flags(converge)
    converge.set_defaults(func=_cmd_converge)

    return parser


def _glue_list_values(argv, flags=("--d", "--sigma", "--N")):
    """Rewrite ``--d -0.6,1.49`` as ``--d=-0.6,1.49``.

    argparse reads a following token that starts with ``-`` as an option
    string, so comma lists with a leading negative number need the
    ``=`` form; gluing it on here lets both spellings work.
    """
    out = []
    it = iter(argv)
    for token in it:
        if token in flags:
            value = next(it, None)
            out.append(token if value is None else token + "=" + value)
        else:
            out.append(token)
    return out


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_glue_list_values(argv))
    try:
        return args.func(args)
    except ParfimaError as exc:
        message = " ".join(str(exc).split())
        sys.stderr.write("error: %s: %s\n" % (type(exc).__name__, message))
        return 1
    except OSError as exc:
        message = " ".join(str(exc).split())
        sys.stderr.write("error: %s: %s\n" % (type(exc).__name__, message))
        return 1


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
