import json
import math

import pytest

import benfordkit as bk


def test_expected_laws():
    bl1 = bk.expected("bl1")
    assert len(bl1) == 9
    assert bl1[0] == pytest.approx(math.log10(2))
    assert sum(bl1) == pytest.approx(1.0, abs=1e-12)
    assert bk.bins("bl12")[0] == 10 and len(bk.bins("BL12")) == 90
    with pytest.raises(bk.ConfigError):
        bk.expected("bl9")
    with pytest.raises(bk.DomainError):
        bk.expected_probability("bl1", 0)


def test_digit_extraction():
    assert bk.first_digit("-0.00345") == 3
    assert bk.second_digit("7") == 0
    assert bk.first_two("1.97e12") == 19
    assert bk.significand("-4560") == pytest.approx(-4.56)
    assert isinstance(bk.parse_decimal("0.000"), bk.Zero)
    assert isinstance(bk.parse_decimal("n/a"), bk.NonNumeric)
    value = bk.parse_decimal("120.50")
    assert (value.sign, value.digits, value.exponent) == (1, "1205", 2)
    with pytest.raises(ValueError):
        bk.first_digit("0")


def test_tally_and_test():
    tally = bk.tally(["1", "12", "0", "x", "250", "-3"], "bl1")
    assert tally.counts[0] == 2 and tally.n_included == 4
    assert tally.n_excluded_zero == 1 and tally.n_excluded_nonnumeric == 1
    published = bk.tally_from_counts("bl1", [2035, 1262, 785, 701, 508, 436, 416, 332, 293])
    result = bk.run_test(published)
    assert result.chi2 == pytest.approx(16.5706, abs=0.01)
    assert result.mad_paper == pytest.approx(0.04103, abs=5e-4)
    assert result.chi2_reject
    assert result.conformity_sum == "nonconforming"
    assert bk.chi_square_critical(8) == pytest.approx(15.507, abs=1e-3)
    assert bk.classify(0.006, "bl1") == "close"


def test_synthetic_samples():
    sample = bk.sample_benford(20000, seed=5)
    assert sample == bk.sample_benford(20000, seed=5)
    report = bk.analyze(sample, laws=["bl1"])
    assert report.records[0].test.conformity == "close"
    manipulated = bk.sample_benford(10000, seed=5, inject_rounding=1.0)
    assert bk.tally(manipulated, "bl2").count(9) == 0
    assert bk.inject_rounding(["1.97", "4.2"], 1.0, 3) == ["2", "4.2"]


def test_panel_and_json():
    csv_text = "company,year,variable,value\n" + "".join(
        f"C{i},2010,PI,{(-1) ** i * (i * 37 % 900 + 5)}\nC{i},2010,TA,{i * 53 % 999 + 1}\n" for i in range(1, 80)
    )
    report = bk.analyze_panel(csv_text, variables="PI:split,TA", ratios="PI/TA", laws=["bl1", "bl2"])
    labels = [r.label for r in report.records[::2]]
    assert labels == ["PI", "PI(-)", "PI(+)", "TA", "PI/TA"]
    doc = json.loads(report.render("json"))
    assert len(doc["slices"]) == 10
    back = bk.parse_report_json(report.render("json"))
    assert [r.test.chi2 for r in back.records] == [r.test.chi2 for r in report.records]
    with pytest.raises(bk.ConfigError):
        bk.analyze_panel(csv_text, variables="XX")
    with pytest.raises(bk.IngestionError):
        bk.analyze_panel("company,year,variable,value\nA,2010,PI,12x\n")


def test_summary_stats():
    stats = bk.summary_stats(["1", "2", "3"])
    assert stats["mean"] == pytest.approx(2.0)
    assert stats["stdev"] == pytest.approx(1.0)
    assert stats["excess_kurtosis"] == pytest.approx(-1.5)
    with pytest.raises(bk.DegenerateInputError):
        bk.summary_stats(["5"])
