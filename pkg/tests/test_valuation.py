import statistics

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clubval.dataset import (
    ClubRecord,
    FxRate,
    TransactionCase,
    TransactionPattern,
    bundled_european_reference,
    bundled_jleague_dataset,
    bundled_jleague_reported_values,
    bundled_transactions,
)
from clubval.errors import (
    DegenerateRatio,
    DomainError,
    EmptyInput,
    MissingPredictor,
    MissingPrice,
)
from clubval.valuation import (
    FORMULA_1,
    FORMULA_2,
    ValuationModel,
    aggregate,
    apply_model,
    premium_ranges,
    premiums_by_case,
    transaction_premium,
    valuate,
    valuate_all,
)


def _record(name="X", league="J1", sns=0, rev=0.0, pmv=0.0):
    return ClubRecord(name, league, sns, rev, pmv)


class TestApplyModel:
    def test_urawa_formula_1(self):
        rec = _record("Urawa Reds", sns=807_734, rev=54.18, pmv=28.55)
        assert apply_model(FORMULA_1, rec) == pytest.approx(161.39, abs=0.05)

    def test_kashima_formula_2(self):
        rec = _record("Kashima Antlers", sns=792_968, rev=40.77, pmv=20.80)
        assert apply_model(FORMULA_2, rec) == pytest.approx(30.79, abs=0.05)

    def test_zero_record_gives_zero(self):
        rec = _record()
        assert apply_model(FORMULA_1, rec) == 0.0
        assert apply_model(FORMULA_2, rec) == 0.0

    def test_missing_predictor(self):
        model = ValuationModel("M", (("broadcasting_meur", 1.0),))
        with pytest.raises(MissingPredictor):
            apply_model(model, _record())

    def test_model_needs_terms(self):
        with pytest.raises(DomainError):
            ValuationModel("empty", ())

    @given(st.integers(min_value=0, max_value=50))
    def test_linearity(self, a):
        base = _record(sns=400_000, rev=20.0, pmv=10.0)
        scaled = _record(sns=400_000 * a, rev=20.0 * a, pmv=10.0 * a)
        for model in (FORMULA_1, FORMULA_2):
            assert apply_model(model, scaled) == pytest.approx(
                a * apply_model(model, base), rel=1e-12, abs=1e-12
            )

    def test_monotonicity(self):
        lo = _record(sns=100_000, rev=5.0, pmv=3.0)
        for bumped in (
            _record(sns=100_001, rev=5.0, pmv=3.0),
            _record(sns=100_000, rev=5.1, pmv=3.0),
        ):
            assert apply_model(FORMULA_1, bumped) > apply_model(FORMULA_1, lo)
        assert apply_model(
            FORMULA_2, _record(sns=100_000, rev=5.0, pmv=3.1)
        ) > apply_model(FORMULA_2, lo)


class TestValuate:
    def test_iwaki_extreme_ratio(self):
        rec = _record("Iwaki FC", sns=87_485, rev=5.13, pmv=0.65)
        result = valuate(rec)
        assert result.ratio_pct == pytest.approx(1157.8, abs=1.5)

    def test_shonan_fv2(self):
        rec = _record("Shonan Bellmare", sns=311_333, rev=16.51, pmv=15.03)
        assert valuate(rec).fv2 == pytest.approx(20.73, abs=0.05)

    def test_equal_models_give_ratio_100(self):
        model = ValuationModel("same", (("revenue_meur", 2.0),))
        result = valuate(_record(rev=5.0), model, model)
        assert result.ratio_pct == pytest.approx(100.0, abs=1e-12)

    def test_zero_fv2_is_degenerate(self):
        with pytest.raises(DegenerateRatio):
            valuate(_record(sns=0, rev=10.0, pmv=0.0))


class TestFullTableReproduction:
    def test_all_clubs_match_reported_values(self):
        records = bundled_jleague_dataset()
        reported = bundled_jleague_reported_values()
        results = valuate_all(records)
        for res in results:
            fv1, fv2, ratio = reported[res.club]
            assert res.fv1 == pytest.approx(fv1, abs=0.05), res.club
            assert res.fv2 == pytest.approx(fv2, abs=0.05), res.club
            assert res.ratio_pct == pytest.approx(ratio, abs=1.5), res.club

    def test_urawa_is_argmax_of_both(self):
        results = valuate_all(bundled_jleague_dataset())
        assert max(results, key=lambda r: r.fv1).club == "Urawa Reds"
        assert max(results, key=lambda r: r.fv2).club == "Urawa Reds"

    def test_fv1_exceeds_three_times_fv2_on_average(self):
        results = valuate_all(bundled_jleague_dataset())
        mean_fv1 = statistics.fmean(r.fv1 for r in results)
        mean_fv2 = statistics.fmean(r.fv2 for r in results)
        assert mean_fv1 / mean_fv2 >= 3.0

    def test_european_reference_ratio_near_parity(self):
        refs = bundled_european_reference()
        ratio = statistics.fmean(r.fv1 for r in refs) / statistics.fmean(
            r.fv2 for r in refs
        )
        assert 1.0 <= ratio <= 1.5


class TestAggregate:
    def test_bundled_aggregates(self):
        records = bundled_jleague_dataset()
        results = valuate_all(records)
        agg = aggregate(results, records)
        assert agg.mean_sns == pytest.approx(257_583, abs=1.0)
        assert agg.mean_fv1 == pytest.approx(46.0, abs=0.1)
        assert agg.mean_fv2 == pytest.approx(13.1, abs=0.1)
        assert agg.median_fv1 == pytest.approx(33.8, abs=0.1)
        assert agg.median_fv2 == pytest.approx(9.9, abs=0.1)

    def test_ratio_aggregation_method(self):
        # Exactly one of the two candidate aggregations reproduces the
        # reported 342.0 percent: the mean of per-club ratios does, the
        # ratio of mean firm values does not.
        records = bundled_jleague_dataset()
        results = valuate_all(records)
        agg = aggregate(results, records)
        mean_of_ratios_ok = abs(agg.mean_of_ratios_pct - 342.0) <= 1.0
        ratio_of_means_ok = abs(agg.ratio_of_means_pct - 342.0) <= 1.0
        assert mean_of_ratios_ok and not ratio_of_means_ok

    def test_singleton(self):
        records = [_record("Solo", sns=500_000, rev=10.0, pmv=5.0)]
        results = valuate_all(records)
        agg = aggregate(results, records)
        assert agg.mean_fv1 == agg.median_fv1 == results[0].fv1
        assert agg.mean_of_ratios_pct == results[0].ratio_pct

    def test_even_count_median_is_midpoint(self):
        records = [
            _record("A", sns=100_000, rev=1.0, pmv=1.0),
            _record("B", sns=200_000, rev=2.0, pmv=2.0),
        ]
        results = valuate_all(records)
        agg = aggregate(results, records)
        assert agg.median_sns == 150_000
        assert agg.median_fv1 == pytest.approx(
            (results[0].fv1 + results[1].fv1) / 2, rel=1e-15
        )

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            aggregate([], [])

    def test_mismatched_pairing_rejected(self):
        records = [_record("A", sns=1000, rev=1.0, pmv=1.0)]
        results = valuate_all([_record("B", sns=1000, rev=1.0, pmv=1.0)])
        with pytest.raises(Exception):
            aggregate(results, records)


class TestPremiums:
    def test_kashima_formula_2(self):
        case = next(
            c for c in bundled_transactions() if c.club == "Kashima Antlers"
        )
        result = transaction_premium(case, 30.79, FxRate(150.0), model_name="Formula 2")
        assert result.premium == pytest.approx(30.79 * 150 * 0.51 / 1330 - 1, abs=1e-12)
        assert result.premium == pytest.approx(0.77, abs=0.02)

    def test_machida_formula_1(self):
        case = next(
            c for c in bundled_transactions() if c.club == "FC Machida Zelvia"
        )
        result = transaction_premium(case, 37.75, FxRate(150.0), model_name="Formula 1")
        assert result.premium == pytest.approx(3.04, abs=0.02)

    def test_exact_price_gives_zero_premium(self):
        case = TransactionCase(
            club="Even Deal",
            pattern=TransactionPattern.SHARE_TRANSFER,
            par_value_kyen=None,
            stock_price_kyen=None,
            price_for_51pct_myen=765.0,
            method_label="test",
        )
        # fv of 10 m EUR at 150 yen/EUR and a 51 percent stake is 765 m JPY.
        result = transaction_premium(case, 10.0, FxRate(150.0))
        assert result.premium == pytest.approx(0.0, abs=1e-12)

    def test_missing_price_rejected(self):
        sagan = next(c for c in bundled_transactions() if c.club == "Sagan Tosu")
        with pytest.raises(MissingPrice):
            transaction_premium(sagan, 12.69, FxRate(150.0))

    def test_ranges_on_bundled_data(self):
        records = bundled_jleague_dataset()
        results = valuate_all(records)
        ranges = premium_ranges(bundled_transactions(), results, FxRate(150.0))
        low1, high1 = ranges["Formula 1"]
        low2, high2 = ranges["Formula 2"]
        assert low1 == pytest.approx(3.04, abs=0.02)
        assert high1 == pytest.approx(6.03, abs=0.02)
        assert low2 == pytest.approx(0.65, abs=0.02)
        assert high2 == pytest.approx(0.77, abs=0.02)

    def test_sagan_tosu_is_excluded(self):
        records = bundled_jleague_dataset()
        results = valuate_all(records)
        premiums = premiums_by_case(bundled_transactions(), results, FxRate(150.0))
        assert {p.club for p in premiums} == {
            "FC Tokyo",
            "FC Machida Zelvia",
            "Kashima Antlers",
        }

    def test_single_case_min_equals_max(self):
        records = bundled_jleague_dataset()
        results = valuate_all(records)
        case = next(c for c in bundled_transactions() if c.club == "FC Tokyo")
        ranges = premium_ranges([case], results, FxRate(150.0))
        for low, high in ranges.values():
            assert low == high

    def test_no_priced_cases_is_empty_input(self):
        records = bundled_jleague_dataset()
        results = valuate_all(records)
        sagan = [c for c in bundled_transactions() if c.club == "Sagan Tosu"]
        with pytest.raises(EmptyInput):
            premium_ranges(sagan, results, FxRate(150.0))

    def test_stake_bounds(self):
        case = next(c for c in bundled_transactions() if c.club == "FC Tokyo")
        with pytest.raises(DomainError):
            transaction_premium(case, 10.0, FxRate(150.0), stake=0.0)
        with pytest.raises(DomainError):
            transaction_premium(case, 10.0, FxRate(150.0), stake=1.5)
