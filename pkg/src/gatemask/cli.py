"""Command-line front end: analyze, sweep, compare, work.

Exit codes: 0 on success, 2 for usage or domain errors (argparse uses 2 as
well), 3 when a closed form and the enumeration oracle disagree -- that
combination is never valid output, it means a bug in one of them.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import metrics as _metrics
from .boolfn import (
    BoolExpr,
    GateFamily,
    GateKind,
    arity_problem,
    free_vars,
    make_gate,
    parse_expr,
)
from .metrics import MetricKind, format_decimal, percent_reduction, work_estimate

CSV_HEADER = "family,n,metric,numerator,denominator,value,source"

_GATE_TOKENS = {kind.value: kind for kind in GateKind}
_METRIC_ORDER = (MetricKind.GEMNIF, MetricKind.GEMFIC)


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation; identical configs must render identical output."""

    command: str
    gate: GateKind | None = None
    expr: str | None = None
    families: tuple[GateKind, ...] = ()
    n_values: tuple[int, ...] = ()
    metric: str = "both"
    method: str = "both"
    fmt: str = "table"
    precision: int = 4
    out: str | None = None
    plot: str | None = None


@dataclass(frozen=True)
class SweepRow:
    family: str
    n: int
    metric: str
    numerator: int
    denominator: int
    value: str
    source: str


def parse_n_range(text: str) -> tuple[int, ...]:
    """Parse '5' or '3..7' into an inclusive tuple of arities."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ValueError(f"bad n range {text!r}; expected an integer or lo..hi")
    if lo > hi:
        raise ValueError(f"bad n range {text!r}; lower bound exceeds upper bound")
    if lo < 1 or hi > 16:
        raise ValueError(f"n range {text!r} outside the supported range 1..16")
    return tuple(range(lo, hi + 1))


def parse_families(text: str) -> tuple[GateKind, ...]:
    """Parse 'all' or a comma list of gate tokens into canonical order."""
    if text.strip().lower() == "all":
        return tuple(GateKind)
    wanted = set()
    for token in text.split(","):
        token = token.strip().lower()
        if token not in _GATE_TOKENS:
            raise ValueError(
                f"unknown gate family {token!r}; expected one of "
                f"{', '.join(_GATE_TOKENS)} or 'all'"
            )
        wanted.add(_GATE_TOKENS[token])
    return tuple(kind for kind in GateKind if kind in wanted)


def _selected_metrics(metric: str) -> tuple[MetricKind, ...]:
    if metric == "both":
        return _METRIC_ORDER
    return (MetricKind(metric),)


def _family_row(family: GateFamily, metric: MetricKind, method: str,
                precision: int) -> SweepRow:
    closed = _metrics.closed_form(family, metric) if method != "oracle" else None
    oracle = None
    if method != "closed":
        oracle = _metrics.oracle_value(make_gate(family), metric)
    if method == "closed":
        chosen, source = closed, "closed-form"
    elif method == "oracle":
        chosen, source = oracle, "oracle"
    else:
        chosen = oracle
        source = "both(agree)" if closed == oracle else "both(DISAGREE)"
    return SweepRow(
        family=family.kind.value,
        n=family.arity,
        metric=metric.value,
        numerator=chosen.numerator,
        denominator=chosen.denominator,
        value=format_decimal(chosen, precision),
        source=source,
    )


def run_sweep(config: RunConfig) -> tuple[list[SweepRow], list[str]]:
    """Evaluate every legal (family, n, metric) cell; illegal cells are skipped."""
    rows: list[SweepRow] = []
    notes: list[str] = []
    for kind in config.families:
        for n in config.n_values:
            problem = arity_problem(kind, n)
            if problem is not None:
                notes.append(f"note: skipped {kind.value} n={n} ({problem})")
                continue
            family = GateFamily(kind, n)
            for metric in _selected_metrics(config.metric):
                rows.append(
                    _family_row(family, metric, config.method, config.precision)
                )
    return rows, notes


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for row in rows:
        writer.writerow(
            [row.family, row.n, row.metric, row.numerator, row.denominator,
             row.value, row.source]
        )
    return buf.getvalue()


def csv_to_rows(text: str) -> list[SweepRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != CSV_HEADER.split(","):
        raise ValueError(f"unexpected CSV header {header!r}")
    return [
        SweepRow(rec[0], int(rec[1]), rec[2], int(rec[3]), int(rec[4]),
                 rec[5], rec[6])
        for rec in reader
        if rec
    ]


def rows_to_json(rows: list[SweepRow]) -> str:
    payload = [
        {
            "family": row.family,
            "n": row.n,
            "metric": row.metric,
            "numerator": row.numerator,
            "denominator": row.denominator,
            "value": row.value,
            "source": row.source,
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def rows_to_table(rows: list[SweepRow]) -> str:
    headers = CSV_HEADER.split(",")
    cells = [
        [row.family, str(row.n), row.metric, str(row.numerator),
         str(row.denominator), row.value, row.source]
        for row in rows
    ]
    widths = [
        max(len(headers[i]), *(len(rec[i]) for rec in cells)) if cells
        else len(headers[i])
        for i in range(len(headers))
    ]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for rec in cells:
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(rec)).rstrip())
    return "\n".join(lines) + "\n"


_RENDERERS = {"csv": rows_to_csv, "json": rows_to_json, "table": rows_to_table}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def cmd_analyze(config: RunConfig) -> int:
    if (config.gate is None) == (config.expr is None):
        print("error: analyze needs exactly one of --gate or --expr",
              file=sys.stderr)
        return 2
    source: GateFamily | BoolExpr
    if config.gate is not None:
        if not config.n_values:
            print("error: --gate requires --n", file=sys.stderr)
            return 2
        source = GateFamily(config.gate, config.n_values[0])
    else:
        if config.method == "closed":
            print("error: expressions have no closed form; use --method oracle",
                  file=sys.stderr)
            return 2
        source = parse_expr(config.expr)

    n = (config.n_values[0] if config.gate is not None
         else len(free_vars(source)))
    rows: list[SweepRow] = []
    lines: list[str] = []
    disagree = False
    for metric in _selected_metrics(config.metric):
        rep = _metrics.report(source, metric, config.precision)
        if config.method == "closed":
            chosen, source_tag = rep.closed, "closed-form"
        elif config.method == "oracle" or rep.closed is None:
            chosen, source_tag = rep.oracle, "oracle"
        else:
            chosen = rep.oracle
            source_tag = "both(agree)" if rep.agree else "both(DISAGREE)"
            disagree = disagree or not rep.agree
        rows.append(
            SweepRow(
                family=config.gate.value if config.gate is not None else config.expr,
                n=n,
                metric=metric.value,
                numerator=chosen.numerator,
                denominator=chosen.denominator,
                value=format_decimal(chosen, config.precision),
                source=source_tag,
            )
        )
        if source_tag == "both(DISAGREE)":
            lines.append(
                f"{metric.value}: closed {rep.closed.numerator}/"
                f"{rep.closed.denominator} != oracle {rep.oracle.numerator}/"
                f"{rep.oracle.denominator} (DISAGREE)"
            )
        else:
            label = {"both(agree)": "agree", "oracle": "oracle",
                     "closed-form": "closed-form"}[source_tag]
            lines.append(
                f"{metric.value}: {chosen.numerator}/{chosen.denominator} = "
                f"{format_decimal(chosen, config.precision)} ({label})"
            )

    if config.fmt == "table":
        _emit(f"{rows[0].family} n={rows[0].n}\n" + "".join(f"{l}\n" for l in lines),
              config.out)
    else:
        _emit(_RENDERERS[config.fmt](rows), config.out)
    if disagree:
        print("error: closed form and oracle disagree; this is a bug",
              file=sys.stderr)
        return 3
    return 0


def cmd_sweep(config: RunConfig) -> int:
    rows, notes = run_sweep(config)
    for note in notes:
        print(note, file=sys.stderr)
    if not rows:
        print("error: sweep produced no rows (all cells skipped)", file=sys.stderr)
        return 2
    _emit(_RENDERERS[config.fmt](rows), config.out)
    if config.plot is not None:
        from .plotting import render_sweep_figure

        render_sweep_figure(rows, config.plot)
        print(f"note: figure written to {config.plot}", file=sys.stderr)
    if any(row.source == "both(DISAGREE)" for row in rows):
        print("error: closed form and oracle disagree; this is a bug",
              file=sys.stderr)
        return 3
    return 0


def cmd_compare(config: RunConfig) -> int:
    n_lo, n_hi = config.n_values
    lines: list[str] = []
    for metric in _selected_metrics(config.metric):
        values: list[Fraction] = []
        for n in (n_lo, n_hi):
            family = GateFamily(config.gate, n)
            rep = _metrics.report(family, metric, config.precision)
            if rep.agree is False:
                print("error: closed form and oracle disagree; this is a bug",
                      file=sys.stderr)
                return 3
            values.append(rep.oracle)
        reduction = percent_reduction(values[0], values[1])
        gate = config.gate.value
        lines.append(
            f"{metric.value}: {gate}(n={n_lo}) = {values[0].numerator}/"
            f"{values[0].denominator} = {format_decimal(values[0], config.precision)}"
            f" -> {gate}(n={n_hi}) = {values[1].numerator}/{values[1].denominator}"
            f" = {format_decimal(values[1], config.precision)}"
            f"; reduction {format_decimal(reduction, 1)}%"
        )
    _emit("".join(f"{l}\n" for l in lines), config.out)
    return 0


def cmd_work(config: RunConfig) -> int:
    est = work_estimate(config.n_values[0])
    _emit(
        f"n={est.n} pairs={est.faulty_pattern_pairs} "
        f"gemnif_approx={est.gemnif_weighted_work} "
        f"gemnif_exact={est.exact_fault_count}\n",
        config.out,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gatemask",
        description="Exact logical-masking metrics for gates and Boolean functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_method=True, with_format=True):
        p.add_argument("--metric", choices=["gemnif", "gemfic", "both"],
                       default="both")
        if with_method:
            p.add_argument("--method", choices=["closed", "oracle", "both"],
                           default="both")
        if with_format:
            p.add_argument("--format", dest="fmt",
                           choices=["table", "csv", "json"], default="table")
        p.add_argument("--precision", type=int, default=4,
                       help="decimal places in rendered values (default 4)")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p_analyze = sub.add_parser("analyze", help="one gate instance or expression")
    p_analyze.add_argument("--gate", choices=sorted(_GATE_TOKENS))
    p_analyze.add_argument("--n", type=int, help="fan-in for --gate")
    p_analyze.add_argument("--expr", help='expression text, e.g. "A&B | B&C | A&C"')
    add_common(p_analyze)

    p_sweep = sub.add_parser("sweep", help="families over a fan-in range")
    p_sweep.add_argument("--families", default="all",
                         help="comma list of gate tokens, or 'all' (default)")
    p_sweep.add_argument("--n", default="1..7",
                         help="fan-in range lo..hi or single value (default 1..7)")
    p_sweep.add_argument("--plot",
                         help="also render a metric-vs-fan-in figure to this path")
    add_common(p_sweep)

    p_compare = sub.add_parser("compare", help="one family at two fan-ins")
    p_compare.add_argument("--gate", choices=sorted(_GATE_TOKENS), required=True)
    p_compare.add_argument("--n", type=int, nargs=2, required=True,
                           metavar=("LO", "HI"))
    add_common(p_compare, with_method=False, with_format=False)

    p_work = sub.add_parser("work", help="enumeration cost for a fan-in")
    p_work.add_argument("--n", type=int, required=True)
    p_work.add_argument("--out", help="write output to this path instead of stdout")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "sweep":
        return RunConfig(
            command="sweep",
            families=parse_families(args.families),
            n_values=parse_n_range(args.n),
            metric=args.metric,
            method=args.method,
            fmt=args.fmt,
            precision=args.precision,
            out=args.out,
            plot=args.plot,
        )
    if args.command == "analyze":
        return RunConfig(
            command="analyze",
            gate=_GATE_TOKENS[args.gate] if args.gate else None,
            expr=args.expr,
            n_values=(args.n,) if args.n is not None else (),
            metric=args.metric,
            method=args.method,
            fmt=args.fmt,
            precision=args.precision,
            out=args.out,
        )
    if args.command == "compare":
        return RunConfig(
            command="compare",
            gate=_GATE_TOKENS[args.gate],
            n_values=tuple(args.n),
            metric=args.metric,
            precision=args.precision,
            out=args.out,
        )
    return RunConfig(command="work", n_values=(args.n,), out=args.out)


_COMMANDS = {
    "analyze": cmd_analyze,
    "sweep": cmd_sweep,
    "compare": cmd_compare,
    "work": cmd_work,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        return _COMMANDS[config.command](config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
