from fractions import Fraction

import pytest

from lrctower import (
    bmq_bound,
    bt_bound,
    btv_line,
    gs_line,
    regimes,
    rpdv_bound,
    singleton_lrc,
    tb_bound,
    wz_bound,
)
from lrctower.bounds import is_prime_power, regimes_csv, tradeoff_csv
from lrctower.errors import DenominatorZero, NotAPrimePower, RegimeViolation


def test_frozen_examples():
    assert singleton_lrc(18, 8, 2) == 8
    assert singleton_lrc(6, 2, 2) == 5
    assert singleton_lrc(10, 4, 7) == 10 - 4 + 1  # r >= k: classical Singleton
    assert tb_bound(18, 8, 2, 2) == 7
    assert wz_bound(18, 8, 2, 2) == 7
    assert wz_bound(6, 3, 1, 1) == 2
    assert rpdv_bound(18, 8, 2, 2) == 5
    assert rpdv_bound(120, 40, 2, 2) == 43
    assert bt_bound(18, 8, [2, 2]) == 7
    assert bmq_bound(18, 8, [2, 2]) == 9
    assert bmq_bound(18, 8, [2, 1]) == 8


def grid_points():
    pts = []
    for n in range(3, 55):
        for k in range(1, n):
            for r in range(1, 9):
                pts.append((n, k, r))
    assert len(pts) >= 10**4
    return pts


def test_availability_one_collapse_identities():
    for n, k, r in grid_points():
        s = singleton_lrc(n, k, r)
        assert tb_bound(n, k, r, 1) == s
        assert wz_bound(n, k, r, 1) == s
        assert bt_bound(n, k, [r]) == s
        # the multi-locality bound is weaker at availability 1 (denominator
        # 1 + r instead of r); it never dips below the Singleton-type value
        assert bmq_bound(n, k, [r]) >= s


def test_bounds_monotone_in_k():
    for n in (12, 18, 30):
        for r in (1, 2, 3):
            for t in (1, 2, 3):
                prev = None
                for k in range(1, n):
                    vals = (
                        singleton_lrc(n, k, r),
                        tb_bound(n, k, r, t),
                        wz_bound(n, k, r, t),
                        rpdv_bound(n, k, r, t),
                        bt_bound(n, k, [r] * t),
                        bmq_bound(n, k, [r] * t),
                    )
                    if prev is not None:
                        assert all(v <= p for v, p in zip(vals, prev))
                    prev = vals


def test_constructed_code_respects_upper_bounds(golden_code):
    from lrctower import brute_force_distance

    d = brute_force_distance(golden_code)
    n, k = golden_code.params.n, golden_code.params.k
    r1, r2 = golden_code.params.r1, golden_code.params.r2
    assert d <= singleton_lrc(n, k, max(r1, r2))
    assert d <= tb_bound(n, k, max(r1, r2), 2)
    assert d <= wz_bound(n, k, max(r1, r2), 2)
    assert d <= rpdv_bound(n, k, max(r1, r2), 2)
    assert d <= bt_bound(n, k, sorted([r1, r2]))
    assert d <= bmq_bound(n, k, [r1, r2])


def test_bt_requires_sorted_localities():
    with pytest.raises(ValueError):
        bt_bound(18, 8, [2, 1])


def test_tradeoff_lines():
    ln = gs_line(8, 3, 1, "thm35")
    assert ln.intercept == Fraction(48, 63) == Fraction(16, 21)
    assert ln.slope == Fraction(8, 2)
    assert not ln.vacuous

    ln2 = btv_line(8, 2, 3)
    assert ln2.intercept == Fraction(6, 7) - Fraction(3, 63) == Fraction(17, 21)

    ln3 = gs_line(3, 2, 1, "thm33")
    assert ln3.intercept == Fraction(-1, 6) and ln3.vacuous

    ln4 = btv_line(4, 4, 1)
    assert ln4.slope == Fraction(10, 4)


def test_tradeoff_errors():
    with pytest.raises(DenominatorZero):
        gs_line(4, 1, 1, "thm34")
    with pytest.raises(DenominatorZero):
        gs_line(4, 1, 1, "thm35")
    with pytest.raises(RegimeViolation):
        btv_line(8, 3, 1)  # 4 does not divide 9
    with pytest.raises(RegimeViolation):
        gs_line(8, 2, 2, "thm33")
    with pytest.raises(RegimeViolation):
        gs_line(5, 3, 3, "thm35")


def test_intercepts_increase_along_ell():
    prev_gs = prev_btv = None
    for ell in (8, 16, 32, 64):
        cur = gs_line(ell, 3, 1, "thm35").intercept
        if prev_gs is not None:
            assert cur > prev_gs
        prev_gs = cur
        cur = btv_line(ell, 3, 1, check=False).intercept
        if prev_btv is not None:
            assert cur > prev_btv
        prev_btv = cur
        assert cur < Fraction(ell - 2, ell - 1)


def test_regime_tables_spot_checks():
    r3 = regimes(3)
    assert any(r.theorem == "thm33" and (r.r1, r.r2) == (2, 1) for r in r3)
    r4 = regimes(4)
    row = next(r for r in r4 if r.theorem == "thm34.2" and (r.r1, r.r2) == (1, 1))
    assert not row.line_defined
    r5 = regimes(5)
    assert any(r.theorem == "thm35.1" and (r.r1, r.r2) == (1, 2) for r in r5)
    with pytest.raises(NotAPrimePower):
        regimes(6)


def test_prime_power_decomposition():
    assert is_prime_power(8) == (2, 3)
    assert is_prime_power(9) == (3, 2)
    assert is_prime_power(7) == (7, 1)
    assert is_prime_power(6) is None
    assert is_prime_power(1) is None


def test_csv_emission():
    lines = [gs_line(8, 3, 1, "thm35"), btv_line(8, 2, 3)]
    text = tradeoff_csv(lines)
    rows = text.strip().split("\n")
    assert rows[0] == "ell,r1,r2,theorem,slope_num,slope_den,intercept_num,intercept_den,vacuous"
    assert rows[1] == "8,3,1,thm35,4,1,16,21,False"
    text2 = regimes_csv(regimes(3))
    assert text2.startswith("ell,r1,r2,theorem,line_defined\n")
    assert "3,2,1,thm33,True" in text2
