"""Apply the two published firm-value formulae to club records.

FV1 combines SNS followers (millions) with revenue; FV2 combines SNS
followers with player market value. Both are through-origin linear
models whose coefficients live in the bundled reference tables, so the
constants here and the published inference block share one source.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from . import reference_data
from .dataset import ClubRecord, FxRate, TransactionCase, eur_to_yen, predictor_value
from .errors import (
    DegenerateRatio,
    DimensionMismatch,
    DomainError,
    EmptyInput,
    MissingPrice,
)


@dataclass(frozen=True)
class ValuationModel:
    """A named linear through-origin formula.

    terms maps predictor ids to coefficients in millions of euros per
    predictor unit; there is no intercept term.
    """

    name: str
    terms: tuple[tuple[str, float], ...]
    provenance: str = ""

    def __post_init__(self) -> None:
        if not self.terms:
            raise DomainError(f"{self.name}: a model needs at least one term")
        for vid, coef in self.terms:
            if not math.isfinite(coef):
                raise DomainError(f"{self.name}: coefficient for {vid} not finite")

    @property
    def variable_ids(self) -> tuple[str, ...]:
        return tuple(vid for vid, _ in self.terms)


def _model_from_published(name: str) -> ValuationModel:
    rows = reference_data.PUBLISHED_FIT_STATISTICS[name]["rows"]
    return ValuationModel(
        name=name,
        terms=tuple((vid, coef) for vid, coef, _se, _t, _p in rows),
        provenance="through-origin fit of enterprise value on "
        + " and ".join(vid for vid, *_ in rows),
    )


FORMULA_1 = _model_from_published("Formula 1")
FORMULA_2 = _model_from_published("Formula 2")


@dataclass(frozen=True)
class ValuationResult:
    """Per-club firm values and their ratio (fv1/fv2 in percent)."""

    club: str
    fv1: float
    fv2: float
    ratio_pct: float


@dataclass(frozen=True)
class PremiumResult:
    """Model-implied value of an acquisition stake against the price paid.

    premium is a fraction: 6.03 means the implied value was 603 percent
    above the actual transaction price.
    """

    club: str
    model_name: str
    implied_stake_value_myen: float
    premium: float


@dataclass(frozen=True)
class AggregateRow:
    """Mean and median summary of a valuation table.

    Ratio aggregation is ambiguous, so both readings are carried:
    mean_of_ratios_pct averages the per-club fv1/fv2 percentages, while
    ratio_of_means_pct divides mean fv1 by mean fv2. The rendered
    Average row uses mean-of-ratios, which matches the reported 342.0
    percent on the bundled data (ratio-of-means gives 350.2).
    """

    mean_sns: float
    median_sns: float
    mean_revenue: float
    median_revenue: float
    mean_pmv: float
    median_pmv: float
    mean_fv1: float
    median_fv1: float
    mean_fv2: float
    median_fv2: float
    mean_of_ratios_pct: float
    median_of_ratios_pct: float
    ratio_of_means_pct: float


def apply_model(model: ValuationModel, record: ClubRecord) -> float:
    """Evaluate a model on one club: sum of coefficient times predictor."""
    return sum(
        coef * predictor_value(record, vid) for vid, coef in model.terms
    )


def valuate(
    record: ClubRecord,
    f1: ValuationModel = FORMULA_1,
    f2: ValuationModel = FORMULA_2,
) -> ValuationResult:
    """Both firm values and their percentage ratio for one club."""
    fv1 = apply_model(f1, record)
    fv2 = apply_model(f2, record)
    if fv2 == 0.0:
        raise DegenerateRatio(
            f"{record.name}: fv2 is zero, ratio undefined"
        )
    return ValuationResult(
        club=record.name, fv1=fv1, fv2=fv2, ratio_pct=100.0 * fv1 / fv2
    )


def valuate_all(
    records: list[ClubRecord],
    f1: ValuationModel = FORMULA_1,
    f2: ValuationModel = FORMULA_2,
) -> list[ValuationResult]:
    return [valuate(r, f1, f2) for r in records]


def aggregate(
    results: list[ValuationResult], records: list[ClubRecord]
) -> AggregateRow:
    """Mean and median rows over a valuation table.

    results and records must correspond pairwise (same clubs, same
    order). Medians use the middle element for odd counts and the
    midpoint of the two middle elements for even counts.
    """
    if not results or not records:
        raise EmptyInput("aggregate needs at least one club")
    if len(results) != len(records):
        raise DimensionMismatch(
            f"{len(results)} results for {len(records)} records"
        )
    for res, rec in zip(results, records):
        if res.club != rec.name:
            raise DimensionMismatch(
                f"result for {res.club!r} paired with record {rec.name!r}"
            )

    sns = [float(r.sns_followers) for r in records]
    revenue = [r.revenue_meur for r in records]
    pmv = [r.player_market_value_meur for r in records]
    fv1 = [r.fv1 for r in results]
    fv2 = [r.fv2 for r in results]
    ratios = [r.ratio_pct for r in results]
    mean_fv1 = statistics.fmean(fv1)
    mean_fv2 = statistics.fmean(fv2)
    if mean_fv2 == 0.0:
        raise DegenerateRatio("mean fv2 is zero, ratio-of-means undefined")

    return AggregateRow(
        mean_sns=statistics.fmean(sns),
        median_sns=statistics.median(sns),
        mean_revenue=statistics.fmean(revenue),
        median_revenue=statistics.median(revenue),
        mean_pmv=statistics.fmean(pmv),
        median_pmv=statistics.median(pmv),
        mean_fv1=mean_fv1,
        median_fv1=statistics.median(fv1),
        mean_fv2=mean_fv2,
        median_fv2=statistics.median(fv2),
        mean_of_ratios_pct=statistics.fmean(ratios),
        median_of_ratios_pct=statistics.median(ratios),
        ratio_of_means_pct=100.0 * mean_fv1 / mean_fv2,
    )


def transaction_premium(
    case: TransactionCase,
    fv_meur: float,
    fx: FxRate,
    stake: float = 0.51,
    model_name: str = "",
) -> PremiumResult:
    """Premium of the model-implied stake value over the actual price.

    The implied value of the stake is fv times the exchange rate times
    the stake fraction, in millions of yen; the premium is that value
    divided by the disclosed price, minus one.
    """
    if case.price_for_51pct_myen is None:
        raise MissingPrice(f"{case.club}: no disclosed transaction price")
    if fv_meur <= 0:
        raise DomainError(f"{case.club}: firm value must be positive, got {fv_meur}")
    if not (0.0 < stake <= 1.0):
        raise DomainError(f"stake must lie in (0, 1], got {stake}")
    implied = eur_to_yen(fv_meur, fx) * stake
    return PremiumResult(
        club=case.club,
        model_name=model_name,
        implied_stake_value_myen=implied,
        premium=implied / case.price_for_51pct_myen - 1.0,
    )


def premiums_by_case(
    cases: list[TransactionCase],
    results: list[ValuationResult],
    fx: FxRate,
    stake: float = 0.51,
) -> list[PremiumResult]:
    """Per-case premiums under both models, skipping undisclosed prices.

    Cases are matched to valuation results by club name; a case whose
    club has no valuation is ignored.
    """
    by_club = {r.club: r for r in results}
    out: list[PremiumResult] = []
    for case in cases:
        if case.price_for_51pct_myen is None:
            continue
        result = by_club.get(case.club)
        if result is None:
            continue
        for model_name, fv in (("Formula 1", result.fv1), ("Formula 2", result.fv2)):
            out.append(
                transaction_premium(case, fv, fx, stake=stake, model_name=model_name)
            )
    return out


def premium_ranges(
    cases: list[TransactionCase],
    results: list[ValuationResult],
    fx: FxRate,
    stake: float = 0.51,
) -> dict[str, tuple[float, float]]:
    """Per-model (min, max) premium over the cases with disclosed prices."""
    premiums = premiums_by_case(cases, results, fx, stake=stake)
    if not premiums:
        raise EmptyInput("no case with a disclosed price matched a valuation")
    ranges: dict[str, tuple[float, float]] = {}
    for model_name in ("Formula 1", "Formula 2"):
        values = [p.premium for p in premiums if p.model_name == model_name]
        if values:
            ranges[model_name] = (min(values), max(values))
    return ranges
