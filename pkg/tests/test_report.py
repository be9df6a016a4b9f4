import json

import pytest
from hypothesis import given, strategies as st

from heisenweyl.params import OneParam
from heisenweyl.report import Entry, VerificationReport, run_check
from heisenweyl.suites import SUITES, SuiteConfig, run_suite, tasks_for

names = st.text(alphabet="abcxyz -^0123", min_size=1, max_size=12)


@st.composite
def entries(draw):
    passed = draw(st.booleans())
    return Entry(
        suite=draw(st.sampled_from(SUITES)),
        check=draw(names),
        anchor=draw(names),
        params=draw(st.dictionaries(st.sampled_from("nmkrs"), st.integers(-9, 9), max_size=3)),
        passed=passed,
        witness=None if passed else draw(names),
        micros=draw(st.integers(0, 10**6)),
    )


@given(st.lists(entries(), max_size=8))
def test_report_roundtrip(items):
    report = VerificationReport("all", items)
    back = VerificationReport.from_jsonl(report.to_jsonl(), suite="all")
    assert back.summary() == report.summary()
    assert back.entries == report.entries


def test_record_fields():
    e = Entry("numbers", "recurrence", "anchor", {"n": 3}, False, "w", 12)
    rec = json.loads(e.to_json())
    assert set(rec) == {"suite", "check", "anchor", "params", "status", "witness", "micros"}
    assert rec["status"] == "fail"
    with pytest.raises(ValueError):
        Entry.from_record(dict(rec, status="maybe"))


def test_run_check_records_witness_only_on_failure():
    ok = run_check("s", "c", "a", {}, lambda: True)
    bad = run_check("s", "c", "a", {}, lambda: (False, "zyx"))
    assert ok.passed and ok.witness is None
    assert not bad.passed and bad.witness == "zyx"
    assert bad.line().startswith("FAIL s/c")


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig("nonsense")
    with pytest.raises(ValueError):
        SuiteConfig("fock", degree=0)
    with pytest.raises(ValueError):
        SuiteConfig("oscillator", matrix=2)
    with pytest.raises(ValueError):
        run_suite(SuiteConfig("oscillator", mode=OneParam(2, 3)))


def test_defaults_match_acceptance_bounds():
    cfg = SuiteConfig("all")
    assert (cfg.number_range, cfg.qnumber_range, cfg.ident_range) == (100, 50, 30)
    assert (cfg.vira, cfg.vira_module, cfg.window, cfg.module_window, cfg.matrix) == (8, 5, 12, 20, 64)
    assert set(SUITES) >= {"identities", "diamond", "center", "morphisms", "gwa", "virasoro",
                           "fock", "oscillator", "bmodule", "inner"}


def test_parallel_run_is_order_stable():
    cfg = SuiteConfig("identities", ident_range=8)
    serial = run_suite(cfg)
    parallel = run_suite(cfg, jobs=2)
    strip = lambda r: [(e.check, e.params, e.passed) for e in r.entries]  # noqa: E731
    assert strip(serial) == strip(parallel)


def test_diamond_suite_reports_zyx():
    report = run_suite(SuiteConfig("diamond", pprime="p"))
    assert not report.all_passed()
    assert "z*y*x" in report.entries[0].witness
    assert run_suite(SuiteConfig("diamond")).all_passed()


def test_every_suite_expands():
    for name in SUITES:
        assert tasks_for(SuiteConfig(name))
