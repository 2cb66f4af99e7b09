"""Binary-expansion primitives.

Everything downstream is driven by the base-2 digits of n: 2-adic
valuations, maximal blocks of consecutive ones, and the gap quantities
measured from the top of each block.  This module also provides the
multiset-of-2-powers container used by the subset-sum oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def _check_nat(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{name} must be >= 0, got {n}")


def nu(n: int) -> int:
    """2-adic valuation of n, i.e. the exponent of the largest power of
    2 dividing n.  Undefined for n = 0."""
    _check_nat(n)
    if n == 0:
        raise ValueError("nu(0) is undefined")
    return (n & -n).bit_length() - 1


def lg(n: int) -> int:
    """Floor of log2(n), with the convention lg(0) = -1."""
    _check_nat(n)
    return n.bit_length() - 1


def digit(n: int, j: int) -> int:
    """Binary digit of n at position j (positions beyond the top are 0)."""
    _check_nat(n)
    _check_nat(j, "j")
    return (n >> j) & 1


def digits(n: int) -> tuple[int, ...]:
    """Binary digits of n, least significant first.  Empty for n = 0."""
    _check_nat(n)
    return tuple((n >> j) & 1 for j in range(n.bit_length()))


def z_i(n: int, i: int) -> int:
    """Distance from n to the next multiple of 2^(i+1), minus one.

    Written out: 2^(i+1) - 1 - (n mod 2^(i+1)).  This is the amount of
    room left in the bottom i+1 digits of n before they would all carry.
    """
    _check_nat(n)
    _check_nat(i, "i")
    block = 1 << (i + 1)
    return block - 1 - (n % block)


def s_set(n: int) -> set[int]:
    """Positions i where a maximal block of consecutive ones in n ends.

    A position i qualifies when digits i and i-1 are both 1 and digit
    i+1 is 0, so each block of length >= 2 contributes its top position.
    """
    _check_nat(n)
    out = set()
    for i in range(1, n.bit_length()):
        if (n >> (i - 1)) & 3 == 3 and (n >> (i + 1)) & 1 == 0:
            out.add(i)
    return out


def s_prime_set(n: int) -> set[int]:
    """Subset of s_set(n) whose blocks do not reach digit position 0.

    Equivalently, drop the block top i from s_set(n) when digits
    i, i-1, ..., 0 are all ones.
    """
    return {i for i in s_set(n) if n & ((1 << (i + 1)) - 1) != (1 << (i + 1)) - 1}


def odd_binom(a: int, b: int) -> bool:
    """True when the binomial coefficient C(a, b) is odd.

    By Lucas' theorem mod 2 this happens exactly when every binary digit
    of b is <= the corresponding digit of a, i.e. b is a submask of a.
    """
    _check_nat(a, "a")
    _check_nat(b, "b")
    if b > a:
        return False
    return a & b == b


@dataclass(frozen=True)
class TwoPowerMultiset:
    """Finite multiset of powers of two, stored as (exponent, count) pairs.

    The pairs are kept sorted by exponent with all counts positive, so
    equal multisets compare and hash equal.
    """

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = -1
        for exp, cnt in self.counts:
            _check_nat(exp, "exponent")
            if cnt <= 0:
                raise ValueError(f"count for exponent {exp} must be > 0")
            if exp <= last:
                raise ValueError("exponents must be strictly increasing")
            last = exp

    @classmethod
    def from_counts(cls, pairs: Iterable[tuple[int, int]]) -> "TwoPowerMultiset":
        """Build from (exponent, count) pairs; counts merge and zeros drop."""
        acc: dict[int, int] = {}
        for exp, cnt in pairs:
            acc[exp] = acc.get(exp, 0) + cnt
        return cls(tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "TwoPowerMultiset":
        """Build from an iterable of exponents, one count each per entry."""
        return cls.from_counts((e, 1) for e in exps)

    def total(self) -> int:
        """Sum of all elements, counted with multiplicity."""
        return sum(cnt << exp for exp, cnt in self.counts)

    def times(self, j: int) -> "TwoPowerMultiset":
        """Multiset with every multiplicity scaled by j >= 0."""
        _check_nat(j, "j")
        if j == 0:
            return EMPTY_MULTISET
        return TwoPowerMultiset(tuple((e, c * j) for e, c in self.counts))

    def combine(self, other: "TwoPowerMultiset") -> "TwoPowerMultiset":
        """Multiset union: multiplicities add."""
        return TwoPowerMultiset.from_counts(self.counts + other.counts)

    def elements(self) -> Iterator[int]:
        """All elements (as integer values 2^exp), smallest first."""
        for exp, cnt in self.counts:
            for _ in range(cnt):
                yield 1 << exp

    def __len__(self) -> int:
        return sum(cnt for _, cnt in self.counts)


EMPTY_MULTISET = TwoPowerMultiset(())


def z_mask(m: int) -> TwoPowerMultiset:
    """Multiset of the 2-powers at the zero digits of m below its top bit.

    For m = 0 the multiset is empty.
    """
    _check_nat(m, "m")
    if m == 0:
        return EMPTY_MULTISET
    zeros = ((1 << lg(m)) - 1) & ~m
    return TwoPowerMultiset.from_exponents(
        j for j in range(zeros.bit_length()) if (zeros >> j) & 1
    )


def p_mask(m: int) -> TwoPowerMultiset:
    """Multiset of the 2-powers at the one digits of m."""
    _check_nat(m, "m")
    return TwoPowerMultiset.from_exponents(
        j for j in range(m.bit_length()) if (m >> j) & 1
    )
