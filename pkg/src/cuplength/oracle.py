"""Definition-level brute force, kept independent of the closed formulas.

These oracles recompute the same quantities as `bounds` straight from
definitions: subset-sum maxima by dynamic programming, the height
maximum by enumerating digit submasks, the cup length by a knapsack
over general exponents, and (smallest of all) literal multiplication
in the truncated polynomial ring over GF(2).  None of them share logic
with the formulas they check, which is the whole point.

Each oracle refuses inputs beyond its configured range instead of
silently truncating; the caps live in one OracleLimits record.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .binexp import TwoPowerMultiset, _check_nat, z_mask


class OracleRangeError(ValueError):
    """Input exceeds the configured brute-force range."""


@dataclass(frozen=True)
class OracleLimits:
    """Range caps for the brute-force oracles.

    The defaults keep every oracle comfortably inside desk-scale
    runtime and memory; raise them deliberately if you need more.
    """

    phi_n_max: int = 1 << 20
    hti_n_max: int = 1 << 16
    hti_k_max: int = 8
    knapsack_n_max: int = 64
    knapsack_k_max: int = 8
    poly_cell_max: int = 6561  # (n+1)^k cells, default covers n=8, k=4


DEFAULT_LIMITS = OracleLimits()


@dataclass(frozen=True)
class SumReachability:
    """Dense table of achievable subset sums of a multiset, capped at n.

    mask has bit c set exactly when some sub-multiset sums to c <= n.
    Bit 0 (the empty sum) is always set.
    """

    n: int
    mask: int

    @classmethod
    def compute(cls, s: TwoPowerMultiset, n: int) -> "SumReachability":
        full = (1 << (n + 1)) - 1
        reach = 1
        for v in s.elements():
            if v > n:
                continue
            reach |= (reach << v) & full
        return cls(n=n, mask=reach)

    def contains(self, c: int) -> bool:
        return 0 <= c <= self.n and (self.mask >> c) & 1 == 1

    def maximum(self) -> int:
        """Largest achievable sum <= n."""
        return self.mask.bit_length() - 1


def phi(s: TwoPowerMultiset, n: int, *, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Maximum subset sum of s not exceeding n.

    Dynamic programming over the full set of achievable sums.  A greedy
    walk over the 2-powers would probably also work, but the oracle
    must not rely on the same structure the formulas exploit.
    """
    _check_nat(n)
    if n > limits.phi_n_max:
        raise OracleRangeError(f"phi cap is n <= {limits.phi_n_max}, got {n}")
    return SumReachability.compute(s, n).maximum()


def phi_table(
    s: TwoPowerMultiset, n_max: int, *, limits: OracleLimits = DEFAULT_LIMITS
) -> list[int]:
    """phi(s, n) for every n in [0, n_max], from one reachability pass.

    All elements are positive, so a subset summing to c <= n keeps all
    its partial sums under the cap as well; one table at cap n_max
    therefore answers every smaller cap.  Entry n is the largest set
    bit at or below n.
    """
    _check_nat(n_max, "n_max")
    if n_max > limits.phi_n_max:
        raise OracleRangeError(f"phi cap is n <= {limits.phi_n_max}, got {n_max}")
    mask = SumReachability.compute(s, n_max).mask
    out = [0] * (n_max + 1)
    best = 0
    for n in range(n_max + 1):
        if (mask >> n) & 1:
            best = n
        out[n] = best
    return out


def m_oracle(j: int, n: int, *, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """phi over j copies of the zero-digit 2-powers of n; checks m_recursive."""
    _check_nat(n)
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return phi(z_mask(n).times(j), n, limits=limits)


def _submasks(m: int) -> list[int]:
    """All binary submasks of m, including 0 and m itself."""
    subs = []
    b = m
    while True:
        subs.append(b)
        if b == 0:
            return subs
        b = (b - 1) & m


def hti_oracle(k: int, n: int, *, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Height maximum by enumeration: the largest b_1 + ... + b_(k-1) <= n
    where each b_i uses only the zero digits of n.

    C(n + b, n) is odd exactly when b's one digits sit inside n's zero
    digits (adding b to n then carries nowhere), so this maximizes a sum
    of k-1 submasks of the zero-digit mask subject to the cap.  Done as
    k-1 rounds of reachability union over all submasks.
    """
    _check_nat(n)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n > limits.hti_n_max or k > limits.hti_k_max:
        raise OracleRangeError(
            f"hti cap is n <= {limits.hti_n_max}, k <= {limits.hti_k_max}, "
            f"got n={n}, k={k}"
        )
    zeros = ((1 << n.bit_length()) - 1) & ~n if n else 0
    full = (1 << (n + 1)) - 1
    subs = _submasks(zeros)
    reach = 1
    for _ in range(k - 1):
        nxt = 0
        for b in subs:
            nxt |= (reach << b) & full
        reach = nxt
    return reach.bit_length() - 1


def min_excess(a: int, n: int) -> int:
    """Smallest a - c over binary submasks c of a with c <= n.

    By Lucas, C(a, c) is odd exactly for submasks c, so this is the
    least degree wasted when (x + y)^a must contribute a monomial with
    x-exponent at most n.  For a <= 2n a feasible c always exists
    (drop bits from the top until the remainder fits); the sentinel
    a + 1 is asserted unreachable rather than returned.
    """
    _check_nat(a, "a")
    _check_nat(n)
    if a > 2 * n:
        raise ValueError(f"min_excess expects a <= 2n, got a={a}, n={n}")
    best = a + 1
    for c in _submasks(a):
        if c <= n:
            best = min(best, a - c)
    assert best <= a, "no submask of a fits under n; unreachable for a <= 2n"
    return best


def zcl_knapsack_oracle(
    k: int, n: int, *, limits: OracleLimits = DEFAULT_LIMITS
) -> int:
    """Cup length from the definition, as a knapsack over exponents.

    The product of (x_i + x_k)^(a_i) for i < k is nonzero in the
    truncated ring iff each factor can land a monomial x_i^(c_i)
    x_k^(a_i - c_i) with c_i <= n and the x_k exponents summing to at
    most n.  Distinct choices of (c_1, ..., c_(k-1)) give distinct
    monomials, so coefficients never cancel and feasibility splits per
    factor: item weight min_excess(a_i, n), capacity n, k-1 items with
    values a_i <= 2n, maximize the total value.
    """
    _check_nat(n)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n > limits.knapsack_n_max or k > limits.knapsack_k_max:
        raise OracleRangeError(
            f"knapsack cap is n <= {limits.knapsack_n_max}, "
            f"k <= {limits.knapsack_k_max}, got n={n}, k={k}"
        )
    weights = [min_excess(a, n) for a in range(2 * n + 1)]
    # dp[w] = best exponent total using weight budget exactly w; -1 unreachable
    dp = [-1] * (n + 1)
    dp[0] = 0
    for _ in range(k - 1):
        nxt = [-1] * (n + 1)
        for cap in range(n + 1):
            if dp[cap] < 0:
                continue
            for a in range(2 * n + 1):
                cap2 = cap + weights[a]
                if cap2 <= n and dp[cap] + a > nxt[cap2]:
                    nxt[cap2] = dp[cap] + a
        dp = nxt
    return max(dp)


@lru_cache(maxsize=None)
def _ring_masks(k: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Strides and multiply-safe masks for the k-variable ring truncated
    at degree n.

    Exponent tuples are packed in mixed radix n+1: variable i (1-based)
    has stride (n+1)^(i-1).  The i-th mask keeps exactly the cells
    whose i-th digit is < n, i.e. the terms that survive another
    multiplication by x_i.
    """
    strides = tuple((n + 1) ** (i - 1) for i in range(1, k + 1))
    cells = (n + 1) ** k
    masks = []
    for i in range(1, k + 1):
        unit = (1 << (n * strides[i - 1])) - 1
        block = strides[i - 1] * (n + 1)
        m = 0
        for base in range(0, cells, block):
            m |= unit << base
        masks.append(m)
    return strides, tuple(masks)


@dataclass(frozen=True)
class TruncPoly:
    """Polynomial over GF(2) in k variables, truncated at x_i^(n+1) = 0.

    Coefficients live in one big integer: bit (n+1)^0*c_1 + ... +
    (n+1)^(k-1)*c_k holds the coefficient of x_1^(c_1)...x_k^(c_k).
    """

    k: int
    n: int
    bits: int

    @classmethod
    def one(cls, k: int, n: int) -> "TruncPoly":
        return cls(k=k, n=n, bits=1)

    def is_zero(self) -> bool:
        return self.bits == 0

    def times_zero_divisor(self, i: int) -> "TruncPoly":
        """Product with (x_i + x_k), for 1 <= i <= k.

        Each summand first drops the terms that would overflow
        (digit already n), then bumps one digit; XOR adds over GF(2)
        so equal monomials genuinely cancel.
        """
        if not 1 <= i <= self.k:
            raise ValueError(f"variable index {i} out of range 1..{self.k}")
        strides, masks = _ring_masks(self.k, self.n)
        by_xi = (self.bits & masks[i - 1]) << strides[i - 1]
        by_xk = (self.bits & masks[self.k - 1]) << strides[self.k - 1]
        return TruncPoly(k=self.k, n=self.n, bits=by_xi ^ by_xk)


def zcl_poly_oracle(k: int, n: int, *, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Cup length by literal ring arithmetic, no combinatorial shortcuts.

    Searches all exponent tuples (a_1, ..., a_(k-1)) with a_i <= 2n,
    multiplying factors in ascending variable order and pruning as soon
    as the running product vanishes (it can never come back).  Slowest
    oracle, used only at tiny sizes.
    """
    _check_nat(n)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if (n + 1) ** k > limits.poly_cell_max:
        raise OracleRangeError(
            f"poly cap is (n+1)^k <= {limits.poly_cell_max}, "
            f"got {(n + 1) ** k} for n={n}, k={k}"
        )
    best = 0

    def search(i: int, poly: TruncPoly, total: int) -> None:
        nonlocal best
        if i == k:
            if total > best:
                best = total
            return
        cur = poly
        a = 0
        while True:
            search(i + 1, cur, total + a)
            if a == 2 * n:
                return
            cur = cur.times_zero_divisor(i)
            a += 1
            if cur.is_zero():
                return

    search(1, TruncPoly.one(k, n), 0)
    return best


def phi_step_inequality_check(
    m: int, s: TwoPowerMultiset, n: int, *, limits: OracleLimits = DEFAULT_LIMITS
) -> bool:
    """Whether phi(Z(m-1) + s, n) <= phi(Z(m) + s, n) + 1, both sides by phi.

    This single-step comparison is the load-bearing inequality behind
    the deficit recursion; the verify module sweeps it over a grid.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    left = phi(z_mask(m - 1).combine(s), n, limits=limits)
    right = phi(z_mask(m).combine(s), n, limits=limits)
    return left <= right + 1
