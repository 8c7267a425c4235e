import pytest

from picardtorus.verify import SUITES, run_verify_suite, suite_invariance, suite_oracle_g2


@pytest.mark.parametrize("name", ["bounds", "theorems", "decomposition"])
def test_suite_passes(name):
    ok, results = run_verify_suite(name)
    assert ok, [r.to_json() for r in results if not r.passed]
    assert results


def test_suite_names():
    assert set(SUITES) == {"oracle-g2", "invariance", "bounds", "theorems", "decomposition"}


def test_small_oracle_and_invariance_runs():
    assert all(r.passed for r in suite_oracle_g2(count=16))
    results = list(suite_invariance(transforms=2))
    assert len(results) == 10 * 3 and all(r.passed for r in results)


def test_check_lines_have_the_report_fields():
    r = next(iter(suite_oracle_g2(count=1)))
    assert set(r.to_json()) == {"suite", "check", "instance", "expected", "got", "pass"}
