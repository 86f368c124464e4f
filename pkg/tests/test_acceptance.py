"""End-to-end acceptance gate.

Each test checks one acceptance criterion and emits a single PASS or
FAIL line in the terminal summary via the record_criterion fixture.
Tolerances are stated inline next to each check. Published reference
values come from the tables bundled in clubval.reference_data; every
other expectation is recomputed here through an independent route
(exact literals, quadrature, or the textbook matrix formulas in
tests/oracles.py).
"""

import math
import statistics
import xml.etree.ElementTree as ET

import numpy as np

from clubval.cli import run_cli
from clubval.dataset import (
    FxRate,
    bundled_european_reference,
    bundled_jleague_dataset,
    bundled_jleague_reported_values,
    bundled_transactions,
    published_fit_statistics,
)
from clubval.regression import DesignMatrix, ResponseVector, fit_through_origin
from clubval.selection import CandidateSet, exhaustive_subsets, stepwise
from clubval.special import t_two_sided_p
from clubval.valuation import aggregate, premium_ranges, valuate_all
from oracles import t_two_sided_quad, textbook_fit

# Residual degrees of freedom of the published fits, determined by a
# brute-force consistency search over the printed t statistics and
# p-values (scripts/dof_consistency_search.py): 35 is the only value
# for which every pair agrees to the last printed digit.
CONSISTENT_DOF = 35

# Marker count for the combined scatter: 60 bundled domestic clubs
# plus 37 bundled European reference clubs.
EXPECTED_MARKERS = 97


def test_criterion_1_firm_value_reproduction(record_criterion):
    records = bundled_jleague_dataset()
    reported = bundled_jleague_reported_values()
    results = valuate_all(records)
    failures = []
    for rec, res in zip(records, results):
        fv1_ref, fv2_ref, ratio_ref = reported[rec.name]
        if abs(res.fv1 - fv1_ref) > 0.05:
            failures.append(f"{rec.name}: fv1 {res.fv1:.4f} vs {fv1_ref}")
        if abs(res.fv2 - fv2_ref) > 0.05:
            failures.append(f"{rec.name}: fv2 {res.fv2:.4f} vs {fv2_ref}")
        if abs(res.ratio_pct - ratio_ref) > 1.5:
            failures.append(f"{rec.name}: ratio {res.ratio_pct:.2f} vs {ratio_ref}")
    anchors = {
        "Urawa Reds": (161.39, 40.64),
        "Kashima Antlers": (122.14, 30.79),
    }
    for name, (fv1_ref, fv2_ref) in anchors.items():
        if reported[name][:2] != (fv1_ref, fv2_ref):
            failures.append(f"{name}: bundled values {reported[name][:2]}")
    if reported["Vissel Kobe"][1] != 38.53:
        failures.append(f"Vissel Kobe: bundled fv2 {reported['Vissel Kobe'][1]}")
    record_criterion(1, "firm value reproduction", failures)


def test_criterion_2_valuation_aggregates(record_criterion):
    records = bundled_jleague_dataset()
    results = valuate_all(records)
    agg = aggregate(results, records)
    failures = []
    if abs(agg.mean_sns - 257_583) > 1.0:
        failures.append(f"mean sns {agg.mean_sns:.2f}")
    if abs(agg.mean_fv1 - 46.0) > 0.1:
        failures.append(f"mean fv1 {agg.mean_fv1:.3f}")
    if abs(agg.mean_fv2 - 13.1) > 0.1:
        failures.append(f"mean fv2 {agg.mean_fv2:.3f}")
    if abs(agg.median_fv1 - 33.8) > 0.1:
        failures.append(f"median fv1 {agg.median_fv1:.3f}")
    if abs(agg.median_fv2 - 9.9) > 0.1:
        failures.append(f"median fv2 {agg.median_fv2:.3f}")
    mean_of_ratios_hit = abs(agg.mean_of_ratios_pct - 342.0) <= 1.0
    ratio_of_means_hit = abs(agg.ratio_of_means_pct - 342.0) <= 1.0
    if mean_of_ratios_hit == ratio_of_means_hit:
        failures.append(
            "expected exactly one aggregation to match 342.0%, got "
            f"mean-of-ratios {agg.mean_of_ratios_pct:.2f} and "
            f"ratio-of-means {agg.ratio_of_means_pct:.2f}"
        )
    if not mean_of_ratios_hit:
        failures.append(
            "the per-club mean of ratios should be the matching aggregation"
        )
    record_criterion(2, "valuation aggregates", failures)


def test_criterion_3_transaction_premiums(record_criterion):
    records = bundled_jleague_dataset()
    results = valuate_all(records)
    cases = bundled_transactions()
    by_name = {r.name: r for r in records}
    failures = []

    # Per-case oracle from first principles: firm value rebuilt with
    # explicit coefficient literals, then fv * 150 * 0.51 / price - 1.
    oracle = {"Formula 1": [], "Formula 2": []}
    for case in cases:
        if case.price_for_51pct_myen is None:
            continue
        rec = by_name[case.club]
        sns_m = rec.sns_followers / 1_000_000
        fv1 = 3.7233 * sns_m + 2.9233 * rec.revenue_meur
        fv2 = 5.7754 * sns_m + 1.2599 * rec.player_market_value_meur
        for model, fv in (("Formula 1", fv1), ("Formula 2", fv2)):
            oracle[model].append(
                fv * 150.0 * 0.51 / case.price_for_51pct_myen - 1.0
            )

    ranges = premium_ranges(cases, results, FxRate(150.0), stake=0.51)
    for model, values in oracle.items():
        lo, hi = ranges[model]
        if abs(lo - min(values)) > 0.02:
            failures.append(f"{model}: min {lo:.4f} vs oracle {min(values):.4f}")
        if abs(hi - max(values)) > 0.02:
            failures.append(f"{model}: max {hi:.4f} vs oracle {max(values):.4f}")

    spans = {"Formula 1": (3.04, 6.03), "Formula 2": (0.65, 0.77)}
    for model, (lo_ref, hi_ref) in spans.items():
        lo, hi = ranges[model]
        if abs(lo - lo_ref) > 0.02 or abs(hi - hi_ref) > 0.02:
            failures.append(
                f"{model}: span ({lo:.4f}, {hi:.4f}) vs ({lo_ref}, {hi_ref})"
            )

    if len(oracle["Formula 1"]) != 3:
        failures.append(
            f"expected 3 cases with disclosed prices, got {len(oracle['Formula 1'])}"
        )
    record_criterion(3, "transaction premiums", failures)


def test_criterion_4_published_inference_consistency(record_criterion):
    failures = []
    for name, block in published_fit_statistics().items():
        if abs(block["multiple_r"] - math.sqrt(block["r_squared"])) > 0.0005:
            failures.append(
                f"{name}: multiple R {block['multiple_r']} vs "
                f"sqrt(R2) {math.sqrt(block['r_squared']):.5f}"
            )
        for vid, coef, se, t, p in block["rows"]:
            if abs(coef / se - t) > 0.01:
                failures.append(f"{name}/{vid}: coef/se {coef / se:.4f} vs t {t}")
            # One unit of the last printed significant digit (three
            # significant digits in every printed p-value).
            unit = 10.0 ** (math.floor(math.log10(p)) - 2)
            ours = t_two_sided_p(t, CONSISTENT_DOF)
            if abs(ours - p) > unit:
                failures.append(f"{name}/{vid}: p {ours:.4e} vs printed {p}")
    record_criterion(4, "published inference consistency", failures)


def test_criterion_5_regression_oracle_sweep(record_criterion):
    rng = np.random.default_rng(20260818)
    failures = []
    keys = (
        "coefficients",
        "standard_errors",
        "t_stats",
        "p_values",
        "r_squared",
        "adjusted_r_squared",
    )
    for trial in range(200):
        n = int(rng.integers(10, 121))
        k = int(rng.integers(1, 4))
        x = rng.normal(0.0, 1.0, (n, k)) * rng.uniform(0.5, 4.0, k)
        beta = rng.normal(0.0, 2.0, k)
        y = x @ beta + rng.normal(0.0, rng.uniform(0.1, 2.0), n)
        design = DesignMatrix.from_columns(
            [(f"x{j}", x[:, j]) for j in range(k)]
        )
        fit = fit_through_origin(design, ResponseVector("y", y))
        ref = textbook_fit(x, y)
        got = {
            "coefficients": fit.coefficients,
            "standard_errors": fit.standard_errors,
            "t_stats": fit.t_stats,
            "p_values": fit.p_values,
            "r_squared": fit.r_squared,
            "adjusted_r_squared": fit.adjusted_r_squared,
        }
        for key in keys:
            if not np.allclose(got[key], ref[key], rtol=1e-9, atol=0.0):
                failures.append(f"trial {trial}: {key} mismatch")
        scale = max(1.0, float(np.max(np.abs(x.T @ y))))
        ortho = float(np.max(np.abs(x.T @ np.asarray(fit.residuals))))
        if ortho > 1e-9 * scale:
            failures.append(f"trial {trial}: residual orthogonality {ortho:.3e}")

        if trial < 5:
            # Scale equivariance spot checks. Multiplying one predictor
            # column by c divides its coefficient by c; multiplying the
            # response by c multiplies every coefficient by c. The
            # dimensionless outputs stay put.
            c = 3.5
            x_scaled = x.copy()
            x_scaled[:, 0] *= c
            fit_x = fit_through_origin(
                DesignMatrix.from_columns(
                    [(f"x{j}", x_scaled[:, j]) for j in range(k)]
                ),
                ResponseVector("y", y),
            )
            if not math.isclose(
                fit_x.coefficients[0], fit.coefficients[0] / c, rel_tol=1e-9
            ):
                failures.append(f"trial {trial}: predictor scaling broke coef")
            if not np.allclose(fit_x.t_stats, fit.t_stats, rtol=1e-9):
                failures.append(f"trial {trial}: predictor scaling moved t")
            fit_y = fit_through_origin(design, ResponseVector("y", c * y))
            if not np.allclose(
                fit_y.coefficients,
                c * np.asarray(fit.coefficients),
                rtol=1e-9,
            ):
                failures.append(f"trial {trial}: response scaling broke coefs")
            if not math.isclose(
                fit_y.r_squared, fit.r_squared, rel_tol=1e-9
            ):
                failures.append(f"trial {trial}: response scaling moved R2")
    record_criterion(5, "regression oracle sweep", failures)


def test_criterion_6_tail_probability_accuracy(record_criterion):
    failures = []
    for dof in (1, 2, 5, 35, 100):
        for t in np.linspace(0.0, 15.0, 16):
            ours = t_two_sided_p(float(t), dof)
            ref = t_two_sided_quad(float(t), dof)
            if abs(ours - ref) > 1e-10:
                failures.append(
                    f"dof {dof}, t {t:.1f}: {ours:.14e} vs {ref:.14e}"
                )
    if abs(t_two_sided_p(1.0, 1) - 0.5) > 1e-12:
        failures.append(f"p(1, dof=1) = {t_two_sided_p(1.0, 1):.15f}")
    for t in (0.0, 0.25, 1.0, 2.0, 7.5, 15.0):
        closed = 1.0 - t / math.sqrt(t * t + 2.0)
        if abs(t_two_sided_p(t, 2) - closed) > 1e-12:
            failures.append(f"dof 2 closed form at t {t}")
    record_criterion(6, "tail probability accuracy", failures)


def test_criterion_7_subset_selection(record_criterion):
    failures = []
    rng = np.random.default_rng(424)
    n = 40
    x1 = rng.normal(0.0, 1.0, n)
    x2 = rng.normal(0.0, 1.0, n)
    x3 = rng.normal(0.0, 1.0, n)
    y = 3.0 * x1 + 2.0 * x2 + 0.4 * rng.normal(0.0, 1.0, n)
    cands = CandidateSet.from_columns(
        [("x1", x1), ("x2", x2), ("x3", x3)], ResponseVector("y", y)
    )
    ex = exhaustive_subsets(cands, max_size=3)
    if ex.best.variable_ids != ("x1", "x2"):
        failures.append(f"exhaustive best {ex.best.variable_ids}")
    st = stepwise(cands)
    if not st.converged:
        failures.append("stepwise did not converge")
    if st.best is None or st.best.variable_ids != ("x1", "x2"):
        best = None if st.best is None else st.best.variable_ids
        failures.append(f"stepwise best {best}")

    wide = CandidateSet.from_columns(
        [(f"c{j}", rng.normal(0.0, 1.0, n)) for j in range(6)],
        ResponseVector("y", y),
    )
    report = exhaustive_subsets(wide, max_size=2)
    fitted = len(report.ranked_models) + len(report.skipped)
    if fitted != 21:
        failures.append(f"6 candidates at max size 2 fit {fitted} subsets")
    if report.skipped:
        failures.append(f"unexpected skips {report.skipped}")
    record_criterion(7, "subset selection", failures)


def test_criterion_8_cross_market_contrast(record_criterion):
    records = bundled_jleague_dataset()
    results = valuate_all(records)
    failures = []
    mean_fv1 = statistics.fmean(r.fv1 for r in results)
    mean_fv2 = statistics.fmean(r.fv2 for r in results)
    if mean_fv1 / mean_fv2 < 3.0:
        failures.append(f"domestic mean fv1/fv2 {mean_fv1 / mean_fv2:.3f}")
    europe = bundled_european_reference()
    eu_ratio = statistics.fmean(e.fv1 for e in europe) / statistics.fmean(
        e.fv2 for e in europe
    )
    if not 1.0 <= eu_ratio <= 1.5:
        failures.append(f"European mean fv1/fv2 {eu_ratio:.3f}")
    top_fv1 = max(results, key=lambda r: r.fv1).club
    top_fv2 = max(results, key=lambda r: r.fv2).club
    if top_fv1 != "Urawa Reds":
        failures.append(f"fv1 argmax {top_fv1}")
    if top_fv2 != "Urawa Reds":
        failures.append(f"fv2 argmax {top_fv2}")
    record_criterion(8, "cross market contrast", failures)


def test_criterion_9_deterministic_rendering(record_criterion, capsys, tmp_path):
    failures = []
    code_first = run_cli(["apply", "--bundled", "jleague"])
    out_first = capsys.readouterr().out
    code_second = run_cli(["apply", "--bundled", "jleague"])
    out_second = capsys.readouterr().out
    if code_first != 0 or code_second != 0:
        failures.append(f"apply exit codes {code_first}, {code_second}")
    if out_first != out_second:
        failures.append("apply output differs between runs")

    target = tmp_path / "combined.svg"
    code_plot = run_cli(["plot", "--bundled", "combined", "--out", str(target)])
    capsys.readouterr()
    if code_plot != 0:
        failures.append(f"plot exit code {code_plot}")
    else:
        try:
            root = ET.fromstring(target.read_text(encoding="utf-8"))
        except ET.ParseError as exc:
            failures.append(f"scatter SVG is not well-formed XML: {exc}")
        else:
            markers = [
                el
                for el in root.iter()
                if "marker" in el.get("class", "").split()
            ]
            if len(markers) != EXPECTED_MARKERS:
                failures.append(
                    f"{len(markers)} markers, expected {EXPECTED_MARKERS}"
                )
    record_criterion(9, "deterministic rendering", failures)
