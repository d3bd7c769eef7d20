"""Singleton-type distance bounds and asymptotic rate/distance trade-off lines.

The six upper bounds on the minimum distance of an [n, k, d] code with
availability t and localities (r_1, ..., r_t):

    singleton:  d <= n - k - ceil(k/r) + 2                      (t = 1)
    tb:         d <= n - sum_{i=0}^{t} floor((k-1)/r^i)          (equal r)
    wz:         d <= n - k - ceil(((k-1)t+1)/((r-1)t+1)) + 2     (equal r)
    rpdv:       d <= n - k - ceil(kt/r) + t + 1                  (equal r)
    bt:         d <= n - k + 1 - sum_i floor((k-1)/prod tail)    (sorted r_i)
    bmq:        d <= n - k - ceil(((k-1)t+1)/(1+sum r_i)) + 2

Trade-off lines live in the (relative distance, rate) plane; all constants
are exact fractions.  Lines whose intercept is not positive are returned
with a ``vacuous`` flag instead of being rejected.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DenominatorZero, NotAPrimePower, RegimeViolation
from .field import is_prime

REGIME_CAP = 64

# regime tokens accepted by gs_line and emitted by regimes()
BTV = "btv"
THM33 = "thm33"
THM34 = "thm34"
THM35 = "thm35"


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_nkr(n: int, k: int, r: int, t: int = 1):
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if r < 1:
        raise ValueError("locality must be >= 1")
    if t < 1:
        raise ValueError("availability must be >= 1")


def singleton_lrc(n: int, k: int, r: int) -> int:
    """Singleton-type bound for a single recovery set."""
    _check_nkr(n, k, r)
    return n - k - _ceil_div(k, r) + 2


def tb_bound(n: int, k: int, r: int, t: int) -> int:
    _check_nkr(n, k, r, t)
    return n - sum((k - 1) // r**i for i in range(t + 1))


def wz_bound(n: int, k: int, r: int, t: int) -> int:
    _check_nkr(n, k, r, t)
    return n - k - _ceil_div((k - 1) * t + 1, (r - 1) * t + 1) + 2


def rpdv_bound(n: int, k: int, r: int, t: int) -> int:
    _check_nkr(n, k, r, t)
    return n - k - _ceil_div(k * t, r) + t + 1


def bt_bound(n: int, k: int, localities: list[int]) -> int:
    """Bound for ascending localities r_1 <= ... <= r_t."""
    rs = list(localities)
    if not rs:
        raise ValueError("need at least one locality")
    if rs != sorted(rs):
        raise ValueError("localities must be sorted ascending")
    _check_nkr(n, k, rs[0], len(rs))
    t = len(rs)
    total = 0
    for i in range(1, t + 1):
        prod = 1
        for j in range(t - i, t):
            prod *= rs[j]
        total += (k - 1) // prod
    return n - k + 1 - total


def bmq_bound(n: int, k: int, localities: list[int]) -> int:
    rs = list(localities)
    if not rs:
        raise ValueError("need at least one locality")
    _check_nkr(n, k, min(rs), len(rs))
    t = len(rs)
    return n - k - _ceil_div((k - 1) * t + 1, 1 + sum(rs)) + 2


@dataclass(frozen=True)
class TradeoffLine:
    """Line  delta + slope * R >= intercept  in the (delta, R) plane."""

    ell: int
    r1: int
    r2: int
    family: str
    slope: Fraction
    intercept: Fraction
    vacuous: bool

    def csv_row(self) -> list:
        return [
            self.ell, self.r1, self.r2, self.family,
            self.slope.numerator, self.slope.denominator,
            self.intercept.numerator, self.intercept.denominator,
            self.vacuous,
        ]


TRADEOFF_CSV_HEADER = [
    "ell", "r1", "r2", "theorem",
    "slope_num", "slope_den", "intercept_num", "intercept_den", "vacuous",
]


def is_prime_power(n: int) -> tuple[int, int] | None:
    """(p, w) with n = p^w, or None."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            return (n, 1)
        if n % p:
            continue
        if not is_prime(p):
            return None
        w = 0
        m = n
        while m % p == 0:
            m //= p
            w += 1
        return (p, w) if m == 1 else None
    return None


def btv_line(ell: int, r1: int, r2: int, check: bool = True) -> TradeoffLine:
    """Direct-product line on the xz-tower: slope (r1+1)(r2+1)/(r1 r2),
    intercept (l-2)/(l-1) - (r1+r2-2)/(q-1)."""
    if check:
        if (ell + 1) % (r1 + 1) != 0:
            raise RegimeViolation(f"(r1+1)={r1 + 1} must divide l+1={ell + 1}")
        if ell % (r2 + 1) != 0:
            raise RegimeViolation(f"(r2+1)={r2 + 1} must divide l={ell}")
    q = ell * ell
    slope = Fraction((r1 + 1) * (r2 + 1), r1 * r2)
    intercept = Fraction(ell - 2, ell - 1) - Fraction(r1 + r2 - 2, q - 1)
    return TradeoffLine(ell, r1, r2, BTV, slope, intercept, intercept <= 0)


def _gs_conditions(ell: int, r1: int, r2: int, family: str) -> None:
    a, b = r1 + 1, r2 + 1
    if family == THM33:
        if ell % a != 0:
            raise RegimeViolation(f"{family}: (r1+1)={a} must divide l={ell}")
        if gcd(r1, ell - 1) % b != 0:
            raise RegimeViolation(
                f"{family}: (r2+1)={b} must divide gcd(r1, l-1)={gcd(r1, ell - 1)}"
            )
        return
    if family == THM34:
        case1 = (ell - 1) % a == 0 and (ell - 1) % b == 0 and gcd(a, b) == 1
        case2 = ell % a == 0 and ell % b == 0 and a * b <= ell
        if not (case1 or case2):
            raise RegimeViolation(
                f"{family}: need either (r_i+1) | l-1 with coprime orders, "
                f"or (r_i+1) | l with (r1+1)(r2+1) <= l"
            )
        return
    if family == THM35:
        case1 = (ell + 1) % a == 0 and (ell + 1) % b == 0 and gcd(a, b) == 1
        case2 = ell % a == 0 and ell % b == 0 and a * b <= ell
        if not (case1 or case2):
            raise RegimeViolation(
                f"{family}: need either (r_i+1) | l+1 with coprime orders, "
                f"or (r_i+1) | l with (r1+1)(r2+1) <= l"
            )
        return
    raise ValueError(f"unknown line family {family!r}")


def gs_line(ell: int, r1: int, r2: int, family: str, check: bool = True) -> TradeoffLine:
    """Tower construction line: slope (r1+1)(r2+1)/(r1 r2 - 1), intercept
    (l-2)/(l-1) - (r1+r2)/(q-c) - (r1-r2)^2 / ((q-c)(r1 r2 - 1)) with
    c = l on the y-tower families and c = 1 on the xz-tower family."""
    if r1 * r2 == 1:
        raise DenominatorZero("trade-off line undefined at r1 = r2 = 1")
    if check:
        _gs_conditions(ell, r1, r2, family)
    c = 1 if family == THM35 else ell
    q = ell * ell
    slope = Fraction((r1 + 1) * (r2 + 1), r1 * r2 - 1)
    intercept = (
        Fraction(ell - 2, ell - 1)
        - Fraction(r1 + r2, q - c)
        - Fraction(1, q - c) * Fraction((r1 - r2) ** 2, r1 * r2 - 1)
    )
    return TradeoffLine(ell, r1, r2, family, slope, intercept, intercept <= 0)


@dataclass(frozen=True)
class RegimeRow:
    ell: int
    r1: int
    r2: int
    theorem: str
    line_defined: bool


REGIME_CSV_HEADER = ["ell", "r1", "r2", "theorem", "line_defined"]


def regimes(ell: int) -> list[RegimeRow]:
    """All admissible locality pairs per family, for one l.

    Rows where the trade-off line is undefined (r1 = r2 = 1) are kept and
    footnoted via ``line_defined``.
    """
    if is_prime_power(ell) is None:
        raise NotAPrimePower(f"{ell} is not a prime power")
    if ell > REGIME_CAP:
        raise ValueError(f"l capped at {REGIME_CAP}")
    rows = []
    for r1 in range(1, ell + 1):
        for r2 in range(1, ell + 1):
            a, b = r1 + 1, r2 + 1
            defined = r1 * r2 > 1
            if (ell + 1) % a == 0 and ell % b == 0 and gcd(a, b) == 1:
                rows.append(RegimeRow(ell, r1, r2, BTV, True))
            if ell % a == 0 and b >= 2 and gcd(r1, ell - 1) % b == 0:
                rows.append(RegimeRow(ell, r1, r2, f"{THM33}", defined))
            if (ell - 1) % a == 0 and (ell - 1) % b == 0 and gcd(a, b) == 1:
                rows.append(RegimeRow(ell, r1, r2, f"{THM34}.1", defined))
            if ell % a == 0 and ell % b == 0 and a * b <= ell:
                rows.append(RegimeRow(ell, r1, r2, f"{THM34}.2", defined))
            if (ell + 1) % a == 0 and (ell + 1) % b == 0 and gcd(a, b) == 1:
                rows.append(RegimeRow(ell, r1, r2, f"{THM35}.1", defined))
            if ell % a == 0 and ell % b == 0 and a * b <= ell:
                rows.append(RegimeRow(ell, r1, r2, f"{THM35}.2", defined))
    return rows


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def tradeoff_csv(lines: list[TradeoffLine]) -> str:
    return _csv_text(TRADEOFF_CSV_HEADER, [ln.csv_row() for ln in lines])


def regimes_csv(rows: list[RegimeRow]) -> str:
    return _csv_text(
        REGIME_CSV_HEADER,
        [[r.ell, r.r1, r.r2, r.theorem, r.line_defined] for r in rows],
    )
