"""Stabilization and sharpness of the cup-length deficit.

For fixed n the deficit g_k(n) = k*n - zcl_k(n) is non-increasing in k
and eventually constant at 2^(nu(n+1)) - 1.  s(n) is the first k where
that happens.  The other helpers answer when the bound is sharp
(zcl = k*n) and give closed forms for two special families.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binexp import _check_nat, nu, odd_binom, s_prime_set, s_set, z_i
from .bounds import deficit, zcl


@dataclass(frozen=True)
class StabilityReport:
    """s(n) together with the stable deficit and which case produced it.

    branch is "power-case" when n+1 is a power of two, "empty-Sprime"
    when no block of ones stays clear of digit 0, and "ceiling-max"
    otherwise.
    """

    n: int
    s: int
    stable_value: int
    branch: str


@dataclass(frozen=True)
class SharpnessThreshold:
    """Least k with zcl_k(n) = k*n, or None when no such k exists (odd n)."""

    n: int
    threshold: int | None


def _ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


def stable_deficit(n: int) -> int:
    """Eventual value of g_k(n) for large k: 2^(nu(n+1)) - 1."""
    _check_nat(n)
    return (1 << nu(n + 1)) - 1


def s_formula(n: int) -> StabilityReport:
    """Closed form for s(n), the first k at which g_k(n) stabilizes.

    Three mutually exclusive cases, tested in order: n+1 a power of two
    gives s = 2; otherwise an empty s_prime_set gives s = 3; otherwise
    s is the max over i in s_prime_set(n) of
    ceil((2^(i+1) - 2^(nu(n+1))) / z_i(n)).  For i in s_prime_set the
    divisor z_i(n) is at least 1, so the ceiling is well defined.

    n = 0 falls under the 2-power case (s = 2); that extrapolation is
    confirmed against s_scan in the test suite.
    """
    _check_nat(n)
    stable = stable_deficit(n)
    if (n + 1) & n == 0:
        return StabilityReport(n=n, s=2, stable_value=stable, branch="power-case")
    sp = s_prime_set(n)
    if not sp:
        return StabilityReport(n=n, s=3, stable_value=stable, branch="empty-Sprime")
    pow_nu = 1 << nu(n + 1)
    s = max(_ceil_div((1 << (i + 1)) - pow_nu, z_i(n, i)) for i in sp)
    return StabilityReport(n=n, s=s, stable_value=stable, branch="ceiling-max")


def s_scan(n: int, k_max: int | None = None) -> int:
    """s(n) straight from the definition: scan k = 2, 3, ... until the
    deficit from module bounds equals the stable value.

    k_max bounds the scan so a wrong formula cannot loop forever; when
    omitted it defaults to max(64, twice the s_formula prediction).
    Raises RuntimeError if no k <= k_max stabilizes.
    """
    _check_nat(n)
    if k_max is None:
        k_max = max(64, 2 * s_formula(n).s)
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    stable = stable_deficit(n)
    for k in range(2, k_max + 1):
        if deficit(k, n) == stable:
            return k
    raise RuntimeError(
        f"g_k({n}) did not reach {stable} for any k <= {k_max}; "
        "either k_max is too small or a formula is wrong"
    )


def sharp_threshold(n: int) -> SharpnessThreshold:
    """Least k making the bound sharp, for even n; None for odd n.

    For even n the value is max{3, ceil((2^(i+1) - 1) / z_i(n))} over
    the block tops i in s_set(n); even n guarantees z_i(n) >= 1 there.
    n = 0 is degenerate (zcl_k(0) = 0 = k*0 for every k) yet the
    formula still reports 3; callers comparing against actual
    sharpness should treat n = 0 separately.
    """
    _check_nat(n)
    if n % 2 == 1:
        return SharpnessThreshold(n=n, threshold=None)
    best = 3
    for i in s_set(n):
        best = max(best, _ceil_div((1 << (i + 1)) - 1, z_i(n, i)))
    return SharpnessThreshold(n=n, threshold=best)


def longest_run(n: int) -> int:
    """Length of the longest run of consecutive ones in binary n."""
    _check_nat(n)
    length = 0
    m = n
    while m:
        m &= m >> 1
        length += 1
    return length


def lprop_bound(n: int) -> int:
    """Simple sharpness bound 2^(l+1) - 1 for even n, l = longest_run(n).

    Every k at or above this value has zcl_k(n) = k*n.  It is coarser
    than sharp_threshold but needs only the longest run of ones.
    """
    _check_nat(n)
    if n % 2 == 1:
        raise ValueError(f"lprop_bound needs even n, got {n}")
    return (1 << (longest_run(n) + 1)) - 1


def kprop_check(n: int, k: int) -> bool:
    """Sharpness predicate for k in {3, 4}: n even with no two adjacent
    ones in binary.  Equals (zcl_k(n) = k*n) on that k range."""
    _check_nat(n)
    if k not in (3, 4):
        raise ValueError(f"kprop_check is stated only for k in {{3, 4}}, got {k}")
    return n % 2 == 0 and n & (n >> 1) == 0


def zcl_three_pow(k: int, e: int) -> int:
    """Closed form for zcl_k at n = 3 * 2^e, for k >= 2 and e >= 1.

    Equals (k-1)*(2^(e+2) - 1) when (e = 1 and k <= 6) or
    (e >= 2 and k <= 4), and the sharp value 3*k*2^e otherwise.
    """
    _check_nat(e, "e")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    if (e == 1 and k <= 6) or (e >= 2 and k <= 4):
        return (k - 1) * ((1 << (e + 2)) - 1)
    return 3 * k * (1 << e)


def z3_characterization(n: int) -> int:
    """zcl_3(n) as a binomial-parity extremum: the largest even z <= 3n
    with C(z+1, n) odd.

    Scans even z downward from 3n, so each call costs O(n) parity
    checks at worst.  Raises if no admissible z exists; that never
    happens in practice, and agreement with zcl(3, n) is swept in the
    test suite.
    """
    _check_nat(n)
    start = 3 * n if n % 2 == 0 else 3 * n - 1
    for z in range(start, -1, -2):
        if odd_binom(z + 1, n):
            return z
    raise RuntimeError(f"no even z <= {3 * n} with C(z+1, {n}) odd")


def check_sharp_exactness(n: int, k_max: int = 128, k_min: int = 3) -> bool:
    """True when, for even n and every k in [k_min, k_max], zcl_k(n) = k*n
    holds exactly for k >= sharp_threshold(n).

    The default k_min is 3 because the threshold formula never reports
    below 3; n = 0 is sharp already at k = 2, which the formula cannot
    express.
    """
    thr = sharp_threshold(n).threshold
    if thr is None:
        return all(zcl(k, n).zcl < k * n for k in range(k_min, k_max + 1))
    return all(
        (zcl(k, n).zcl == k * n) == (k >= thr) for k in range(k_min, k_max + 1)
    )
