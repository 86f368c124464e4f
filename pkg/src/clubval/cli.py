"""Command-line interface.

Subcommands: fit (regression report from a club CSV), select (variable
subset search), apply (valuation table), premiums (acquisition premium
summary), plot (scatter SVG). Settings resolve in the order flags, then
the VALUATE_FX_RATE environment variable (exchange rate only), then a
key=value config file given with --config, then built-in defaults.

Exit codes: 0 on success, 1 on data errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .dataset import (
    ClubRecord,
    FxRate,
    bundled_european_reference,
    bundled_jleague_dataset,
    bundled_transactions,
    parse_club_csv,
    predictor_value,
)
from .errors import ClubValError, DomainError, IoError
from .regression import DesignMatrix, ResponseVector, fit_through_origin
from .report import (
    RenderSpec,
    ScatterSeries,
    emit_scatter,
    render_premium_table,
    render_regression_table,
    render_selection_table,
    render_valuation_table,
    write_document,
)
from .selection import CandidateSet, exhaustive_subsets, stepwise
from .valuation import (
    FORMULA_1,
    FORMULA_2,
    aggregate,
    premium_ranges,
    premiums_by_case,
    valuate_all,
)

DEFAULT_FX = 150.0
DEFAULT_STAKE = 0.51
ENV_FX = "VALUATE_FX_RATE"

CORE_PREDICTORS = ("sns_followers_m", "revenue_meur", "player_market_value_meur")


def _load_config(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read config {path}: {exc}") from exc
    config: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DomainError(f"{path}:{line_no}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        config[key.strip()] = value.strip()
    return config


def _positive_float(text: str, origin: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise DomainError(f"{origin} must be a number, got {text!r}") from None
    if value <= 0:
        raise DomainError(f"{origin} must be positive, got {value}")
    return value


def _resolve_settings(args: argparse.Namespace) -> tuple[FxRate, float]:
    config = _load_config(args.config) if getattr(args, "config", None) else {}

    fx_value = getattr(args, "fx_rate", None)
    if fx_value is None and os.environ.get(ENV_FX):
        fx_value = _positive_float(os.environ[ENV_FX], ENV_FX)
    if fx_value is None and "fx_rate" in config:
        fx_value = _positive_float(config["fx_rate"], "config fx_rate")
    if fx_value is None:
        fx_value = DEFAULT_FX

    stake = getattr(args, "stake", None)
    if stake is None and "stake" in config:
        stake = _positive_float(config["stake"], "config stake")
    if stake is None:
        stake = DEFAULT_STAKE
    if not (0.0 < stake <= 1.0):
        raise DomainError(f"stake must lie in (0, 1], got {stake}")

    return FxRate(fx_value), stake


def _resolve_format(args: argparse.Namespace, default: str = "text") -> str:
    if getattr(args, "format", None):
        return args.format
    if getattr(args, "config", None):
        config = _load_config(args.config)
        if "format" in config:
            return config["format"]
    return default


def _load_records(args: argparse.Namespace) -> list[ClubRecord]:
    if getattr(args, "input", None):
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot read {args.input}: {exc}") from exc
        records = parse_club_csv(text)
        if not records:
            raise DomainError(f"{args.input} contains no club rows")
        return records
    return bundled_jleague_dataset()


def _predictor_columns(
    records: list[ClubRecord], variable_ids: tuple[str, ...]
) -> list[tuple[str, np.ndarray]]:
    return [
        (vid, np.array([predictor_value(r, vid) for r in records]))
        for vid in variable_ids
    ]


def _split_ids(text: str) -> tuple[str, ...]:
    ids = tuple(part.strip() for part in text.split(",") if part.strip())
    if not ids:
        raise DomainError(f"no variable ids in {text!r}")
    return ids


def _cmd_fit(args: argparse.Namespace) -> int:
    records = _load_records(args)
    predictors = _split_ids(args.predictors)
    columns = _predictor_columns(records, predictors)
    response = ResponseVector(
        args.response,
        np.array([predictor_value(r, args.response) for r in records]),
    )
    fit = fit_through_origin(DesignMatrix.from_columns(columns), response)
    spec = RenderSpec(format=_resolve_format(args))
    write_document(render_regression_table(fit, spec), args.out)
    return 0


def _cmd_select(args: argparse.Namespace) -> int:
    records = _load_records(args)
    if args.candidates:
        candidate_ids = _split_ids(args.candidates)
    else:
        candidate_ids = tuple(
            vid for vid in CORE_PREDICTORS if vid != args.response
        )
    response = ResponseVector(
        args.response,
        np.array([predictor_value(r, args.response) for r in records]),
    )
    cands = CandidateSet.from_columns(
        _predictor_columns(records, candidate_ids), response
    )
    if args.method == "stepwise":
        report = stepwise(cands, alpha_in=args.alpha_in, alpha_out=args.alpha_out)
    else:
        max_size = args.max_size or len(candidate_ids)
        report = exhaustive_subsets(cands, max_size, alpha=args.alpha_in)
    spec = RenderSpec(format=_resolve_format(args))
    write_document(render_selection_table(report, spec), args.out)
    return 0


def _cmd_apply(args: argparse.Namespace) -> int:
    if not args.input and not args.bundled:
        print("error: apply needs --input FILE or --bundled jleague", file=sys.stderr)
        return 2
    records = _load_records(args)
    results = valuate_all(records, FORMULA_1, FORMULA_2)
    aggregates = aggregate(results, records)
    spec = RenderSpec(format=_resolve_format(args))
    write_document(
        render_valuation_table(results, records, aggregates, spec), args.out
    )
    return 0


def _cmd_premiums(args: argparse.Namespace) -> int:
    fx, stake = _resolve_settings(args)
    records = _load_records(args)
    results = valuate_all(records, FORMULA_1, FORMULA_2)
    cases = bundled_transactions()
    premiums = premiums_by_case(cases, results, fx, stake=stake)
    ranges = premium_ranges(cases, results, fx, stake=stake)
    spec = RenderSpec(format=_resolve_format(args))
    write_document(render_premium_table(premiums, ranges, spec), args.out)
    return 0


def _cmd_plot(args: argparse.Namespace) -> int:
    series: list[ScatterSeries] = []
    if args.bundled in ("jleague", "combined") or args.input:
        records = _load_records(args)
        results = valuate_all(records, FORMULA_1, FORMULA_2)
        label = "J.League" if not args.input else "Clubs"
        series.append(
            ScatterSeries(
                label=label,
                points=tuple((r.fv1, r.fv2, r.club) for r in results),
            )
        )
    if args.bundled in ("european", "combined") and not args.input:
        series.append(
            ScatterSeries(
                label="European reference",
                points=tuple(
                    (ref.fv1, ref.fv2, ref.club)
                    for ref in bundled_european_reference()
                ),
            )
        )
    spec = RenderSpec(format="svg", scale=args.scale)
    doc = emit_scatter(series, spec, guide_line=not args.no_guide)
    write_document(doc, args.out)
    return 0


def _add_common(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument(
        "--input", help="club CSV file (default: the bundled J.League table)"
    )
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--config", help="key=value settings file")
    if formats:
        parser.add_argument(
            "--format", choices=formats, help="output format (default: text)"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clubval",
        description="Football club firm-value estimation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    tabular = ("text", "csv", "md")

    p_fit = sub.add_parser("fit", help="through-origin regression report")
    _add_common(p_fit, tabular)
    p_fit.add_argument("--response", required=True, help="response variable id")
    p_fit.add_argument(
        "--predictors", required=True, help="comma-separated predictor ids"
    )
    p_fit.set_defaults(handler=_cmd_fit)

    p_sel = sub.add_parser("select", help="explanatory-variable subset search")
    _add_common(p_sel, tabular)
    p_sel.add_argument("--response", required=True)
    p_sel.add_argument("--candidates", help="comma-separated candidate ids")
    p_sel.add_argument(
        "--method", choices=("exhaustive", "stepwise"), default="exhaustive"
    )
    p_sel.add_argument("--max-size", type=int, default=None)
    p_sel.add_argument("--alpha-in", type=float, default=0.05)
    p_sel.add_argument("--alpha-out", type=float, default=0.10)
    p_sel.set_defaults(handler=_cmd_select)

    p_apply = sub.add_parser("apply", help="valuation table for club records")
    _add_common(p_apply, tabular)
    p_apply.add_argument(
        "--bundled", choices=("jleague",), help="use a bundled dataset"
    )
    p_apply.set_defaults(handler=_cmd_apply)

    p_prem = sub.add_parser("premiums", help="acquisition premium summary")
    _add_common(p_prem, tabular)
    p_prem.add_argument("--fx-rate", type=float, default=None, help="yen per euro")
    p_prem.add_argument("--stake", type=float, default=None, help="stake fraction")
    p_prem.set_defaults(handler=_cmd_premiums)

    p_plot = sub.add_parser("plot", help="scatter figure as SVG")
    _add_common(p_plot, ())
    p_plot.add_argument(
        "--bundled",
        choices=("jleague", "european", "combined"),
        default="combined",
    )
    p_plot.add_argument("--scale", choices=("linear", "log10"), default="log10")
    p_plot.add_argument(
        "--no-guide", action="store_true", help="omit the y = x guide line"
    )
    p_plot.set_defaults(handler=_cmd_plot)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.handler(args)
    except ClubValError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
