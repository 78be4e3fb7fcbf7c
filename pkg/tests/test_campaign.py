from noetherlab.campaign import SUITES, RunConfig, emit_report, run_campaign
from noetherlab.errors import NoetherError

import pytest


def test_every_registered_suite_passes_briefly():
    config = RunConfig(seed=5, trials=4)
    names = sorted(n for n in SUITES if n != "selftest-mutation")
    report = run_campaign(config, names)
    failing = {n: r for n, r in report["suites"].items() if r["failures"]}
    assert not failing, failing
    assert report["all_passed"]


def test_reports_are_byte_identical_across_runs():
    config = RunConfig(seed=11, trials=6, bounds={"maxPoints": 8})
    names = ["prop43-equivalence", "lattice-laws"]
    a = emit_report(run_campaign(config, names))
    b = emit_report(run_campaign(config, names))
    assert a == b


def test_reports_are_stable_across_parallelism(tmp_path):
    config = RunConfig(seed=11, trials=6)
    names = ["adjacency-laws", "coloring-constructions"]
    serial = emit_report(run_campaign(config, names, jobs=1))
    parallel = emit_report(run_campaign(config, names, jobs=2), str(tmp_path / "r.json"))
    assert serial == parallel
    assert (tmp_path / "r.json").read_text() == parallel


def test_different_seeds_differ():
    names = ["selftest-mutation"]
    a = run_campaign(RunConfig(seed=1, trials=20), names)
    b = run_campaign(RunConfig(seed=2, trials=20), names)
    fa = a["suites"]["selftest-mutation"]["failures"]
    fb = b["suites"]["selftest-mutation"]["failures"]
    assert fa > 0 and fb > 0  # the corrupted checker must surface failures
    assert a["suites"] != b["suites"] or fa != fb


def test_mutation_fixture_reports_counterexamples():
    report = run_campaign(RunConfig(seed=1, trials=20), ["selftest-mutation"])
    suite = report["suites"]["selftest-mutation"]
    assert suite["failures"] > 0
    assert not report["all_passed"]
    assert suite["counterexamples"][0]["detail"]["note"] == "deliberate mutation fixture"


def test_unknown_suite_rejected():
    with pytest.raises(NoetherError):
        run_campaign(RunConfig(seed=0, trials=1), ["no-such-suite"])
