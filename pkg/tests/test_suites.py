import json

import pytest

from orposets import SUITE_IDS, run_suite
from orposets.suites import SuiteReport

# instance counts at genus 2 are exhaustive and therefore frozen
GENUS2_INSTANCES = {
    "lm0": 158,
    "lmO1": 150,
    "lmfree": 115,
    "F1-LmO": 58,
    "degor": 103,
    "quoto-poo": 161,
    "rkBP": 77,
    "ftriv": 324,
    "fupr": 4158,
    "fprop": 6552,
    "fthm": 816,
    "fdiag-bricor": 108,
    "rkSg": 6,
    "Bgq": 22,
    "propOg": 25,
    "cOP": 29,
    "exclm": 246,
    "remark-0e1": 44,
    "noinjdeg": 20,
}


def test_suite_ids_are_complete():
    assert set(GENUS2_INSTANCES) == set(SUITE_IDS)
    assert len(SUITE_IDS) == 19


@pytest.mark.parametrize("suite", SUITE_IDS)
def test_each_suite_is_green_at_genus_two(suite):
    report = run_suite(suite, 2)
    assert report.failures == []
    assert report.instances == GENUS2_INSTANCES[suite]
    assert report.passes == report.instances


def test_all_suites_merged():
    report = run_suite("all", 2)
    assert report.suite == "all"
    assert report.instances == sum(GENUS2_INSTANCES.values()) == 13172
    assert report.failures == []
    assert len(report.findings) == 7


def test_expected_findings_at_genus_two():
    report = run_suite("all", 2)
    text = "\n".join(report.findings)
    # biorienting one edge of a totally cyclic pair is onto but not injective
    assert (
        "biorienting maps 18 pairs onto 12 of 12 rooted orientations" in text
    )
    assert "++- and -+- both give *+- at edge 0" in text
    # the same divisor appears for distinct removal sets
    assert (
        "divisor (0, 0) is shared by inequivalent classes over removals "
        "[(0,), (1,), (2,)]" in text
    )
    # merged findings carry their suite id
    assert all(
        line.startswith(("remark-0e1:", "noinjdeg:"))
        for line in report.findings
    )


def test_report_schema():
    report = run_suite("degor", 2)
    payload = json.loads(report.to_json())
    assert set(payload) == {
        "suite",
        "instances",
        "failures",
        "elapsed_ms",
        "findings",
    }
    assert payload["suite"] == "degor"
    assert payload["instances"] == 103
    assert payload["failures"] == []
    assert isinstance(payload["elapsed_ms"], int)


def test_failures_count_against_passes():
    report = SuiteReport(
        suite="x",
        instances=3,
        failures=[("s", "i", "w")],
        findings=[],
        elapsed_ms=1,
    )
    assert report.passes == 2


def test_bad_arguments_raise():
    with pytest.raises(ValueError):
        run_suite("no-such-suite", 2)
    with pytest.raises(ValueError):
        run_suite("degor", 1)
    with pytest.raises(ValueError):
        run_suite("degor", 2, b="2")


def test_threads_do_not_change_the_outcome():
    seq = run_suite("all", 2)
    par = run_suite("all", 2, threads=4)
    assert par.instances == seq.instances
    assert par.failures == seq.failures
    assert par.findings == seq.findings


def test_b_flag_selects_the_orientation_kind():
    # degor sweeps each selected b, so the counts add up
    zero = run_suite("degor", 2, b=0)
    one = run_suite("degor", 2, b=1)
    assert zero.instances + one.instances == 103
    assert zero.failures == one.failures == []
    # lm0 is a statement about 0-orientations only; the flag is irrelevant
    assert run_suite("lm0", 2, b=1).instances == 158


def test_genus_three_sampled_runs_are_deterministic():
    first = run_suite("degor", 3)
    second = run_suite("degor", 3)
    assert first.failures == []
    assert first.instances == second.instances
    assert first.findings == second.findings
