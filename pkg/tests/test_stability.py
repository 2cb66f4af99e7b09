import pytest

from cuplength.bounds import deficit
from cuplength.stability import (
    SharpnessThreshold,
    StabilityReport,
    check_sharp_exactness,
    kprop_check,
    longest_run,
    lprop_bound,
    s_formula,
    s_scan,
    sharp_threshold,
    stable_deficit,
    z3_characterization,
    zcl_three_pow,
)


def test_s_formula_values():
    assert s_formula(6) == StabilityReport(n=6, s=7, stable_value=0, branch="ceiling-max")
    assert s_formula(50).s == 5
    assert s_formula(29).s == 15
    for v in range(1, 12):
        assert s_formula((1 << v) - 1) == StabilityReport(
            n=(1 << v) - 1, s=2, stable_value=(1 << v) - 1, branch="power-case"
        )
        assert s_formula(1 << v).s == 3
    assert s_formula(10).branch == "empty-Sprime"
    assert s_formula(0) == StabilityReport(n=0, s=2, stable_value=0, branch="power-case")


def test_s_scan_values():
    assert s_scan(12, 64) == 5
    assert s_scan(14, 64) == 15
    assert s_scan(0, 64) == 2


def test_s_scan_guards():
    with pytest.raises(ValueError):
        s_scan(6, 1)
    with pytest.raises(RuntimeError):
        s_scan(6, 4)  # stabilizes only at k=7
    # default k_max sizes itself off the formula, so large s still scans
    assert s_scan(126) == 127


def test_stability_report_invariant_sample():
    for n in (0, 5, 6, 12, 14, 26, 29, 30, 50, 126, 187):
        rep = s_formula(n)
        assert rep.s >= 2
        assert rep.stable_value == stable_deficit(n)
        assert deficit(rep.s, n) == rep.stable_value
        if rep.s > 2:
            assert deficit(rep.s - 1, n) > rep.stable_value


def test_sharp_threshold_values():
    assert sharp_threshold(6) == SharpnessThreshold(n=6, threshold=7)
    assert sharp_threshold(10).threshold == 3
    assert sharp_threshold(7).threshold is None
    assert sharp_threshold(12).threshold == 5


def test_sharp_threshold_marks_exact_boundary():
    for n in (2, 6, 10, 12, 22, 44, 102):
        thr = sharp_threshold(n).threshold
        assert deficit(thr, n) == 0
        assert deficit(thr - 1, n) > 0
    assert check_sharp_exactness(6)
    assert check_sharp_exactness(7)  # odd: never sharp


def test_longest_run_and_lprop():
    assert longest_run(0) == 0
    assert longest_run(6) == 2
    assert longest_run(10) == 1
    assert longest_run(28) == 3
    assert lprop_bound(6) == 7
    assert lprop_bound(10) == 3
    assert lprop_bound(28) == 15
    with pytest.raises(ValueError):
        lprop_bound(7)


def test_kprop_check():
    assert kprop_check(10, 3) is True
    assert kprop_check(6, 4) is False
    assert kprop_check(5, 3) is False
    with pytest.raises(ValueError):
        kprop_check(10, 5)
    with pytest.raises(ValueError):
        kprop_check(10, 2)


def test_zcl_three_pow():
    assert zcl_three_pow(6, 1) == 35
    assert zcl_three_pow(7, 1) == 42
    assert zcl_three_pow(5, 2) == 60
    assert zcl_three_pow(4, 3) == 3 * 31
    with pytest.raises(ValueError):
        zcl_three_pow(1, 2)
    with pytest.raises(ValueError):
        zcl_three_pow(3, 0)


def test_z3_characterization_values():
    assert z3_characterization(5) == 14
    assert z3_characterization(1) == 2
    assert z3_characterization(0) == 0


def test_degenerate_zero():
    # every k >= 2 is sharp at n = 0, below what the threshold formula
    # (always >= 3) can express; keep the corner pinned down
    assert deficit(2, 0) == 0
    assert sharp_threshold(0).threshold == 3
    assert lprop_bound(0) == 1
    assert s_formula(0).s == 2
