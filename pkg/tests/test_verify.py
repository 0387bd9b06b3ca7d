from bouncepaths.closed_forms import Slope
from bouncepaths.series import Series
from bouncepaths.verify import (
    SUITES,
    CheckResult,
    _series_equal,
    coprime_slopes,
    suite_base_counts,
    suite_bounce_free,
    suite_catalan_slope,
    suite_fuss_catalan,
    suite_reference_series,
    suite_ring,
)


def test_coprime_slopes():
    slopes = coprime_slopes(4)
    assert Slope(1, 1) in slopes
    assert Slope(1, 3) in slopes and Slope(3, 1) in slopes
    assert len(slopes) == 5  # (1,1), (1,2), (2,1), (1,3), (3,1)
    assert slopes == coprime_slopes(4)  # fixed order


def test_series_equal_reports_first_mismatch():
    result = _series_equal("demo", Series((0, 1, 5)), Series((0, 1, 7)), context="s")
    assert not result.passed
    assert "k=2" in result.detail
    assert "expected=7" in result.detail and "actual=5" in result.detail
    assert "FAIL" in str(result)


def test_check_result_str():
    assert str(CheckResult("fine", True)) == "PASS  fine"


def test_reference_series_suite():
    assert all(r.passed for r in suite_reference_series())


def test_base_counts_single_slope():
    results = suite_base_counts(alpha=3, beta=4, order=8)
    assert len(results) == 2
    assert all(r.passed for r in results)


def test_fuss_catalan_suite():
    assert all(r.passed for r in suite_fuss_catalan(alpha_max=3, order=8))


def test_bounce_free_suite_small():
    results = suite_bounce_free(order=8, max_slope_sum=4)
    assert results
    assert all(r.passed for r in results)


def test_catalan_slope_suite():
    assert all(r.passed for r in suite_catalan_slope(order=10))


def test_ring_suite_detects_count():
    results = suite_ring(count=10, seed=1)
    assert results[0].passed
    assert "10" in results[0].name


def test_registry_is_complete():
    assert set(SUITES) == {
        "reference-series",
        "ring",
        "base-counts",
        "fuss-catalan",
        "bounce-free",
        "oracle-vs-table",
        "specializations",
        "table-dual",
        "beta1",
        "catalan-slope",
        "total-bounces",
        "syt",
        "crosses",
    }
