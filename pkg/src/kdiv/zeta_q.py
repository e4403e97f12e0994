"""Bernoulli numbers, zeta of Q at negative integers and the invariants w_n(Q)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Mapping

from .errors import HypothesisViolation
from .exact_core import LPower, is_prime, lval_int, require_prime

__all__ = ["WnInvariant", "bernoulli", "zeta_q_neg", "wn_q", "wn_ql"]


@lru_cache(maxsize=None)
def _bernoulli_table(m: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, B_0 = 1
    table = [Fraction(1)]
    for k in range(1, m + 1):
        if k > 1 and k % 2 == 1:
            table.append(Fraction(0))
            continue
        s = sum((comb(k + 1, j) * table[j] for j in range(k)), Fraction(0))
        table.append(-s / (k + 1))
    return tuple(table)


def bernoulli(m: int) -> Fraction:
    """B_m with the convention B_1 = -1/2."""
    if m < 0:
        raise HypothesisViolation("m must be >= 0")
    # Cache in steps of 32 so nearby queries share one table.
    return _bernoulli_table(-(-m // 32) * 32 if m else 0)[m]


def zeta_q_neg(n: int) -> Fraction:
    """zeta(-n) = -B_{n+1}/(n+1) for n >= 1."""
    if n < 1:
        raise HypothesisViolation("n must be >= 1")
    return -bernoulli(n + 1) / (n + 1)


@dataclass(frozen=True)
class WnInvariant:
    n: int
    factors: Mapping[int, int] = field(hash=False)

    @property
    def value(self) -> int:
        return prod(l**e for l, e in self.factors.items())

    def exponent(self, l: int) -> int:
        return self.factors.get(l, 0)

    def __str__(self) -> str:
        parts = " * ".join(f"{l}^{e}" if e > 1 else str(l) for l, e in sorted(self.factors.items()))
        return f"{self.value} = {parts}"


def _wn_l_exponent(n: int, l: int) -> int:
    if l == 2:
        return 1 if n % 2 else 2 + lval_int(n, 2)
    if n % (l - 1):
        return 0
    return 1 + lval_int(n, l)


def wn_q(n: int) -> WnInvariant:
    """w_n(Q): the largest N such that the exponent of (Z/N)^x divides n."""
    if n < 1:
        raise HypothesisViolation("n must be >= 1")
    factors = {}
    for l in range(2, n + 2):
        if is_prime(l):
            e = _wn_l_exponent(n, l)
            if e:
                factors[l] = e
    return WnInvariant(n, dict(sorted(factors.items())))


def wn_ql(n: int, l: int) -> LPower:
    """The l-part of w_n(Q_l) for odd l; equals the l-part of w_n(Q)."""
    if n < 1:
        raise HypothesisViolation("n must be >= 1")
    require_prime(l)
    if l == 2:
        raise HypothesisViolation("wn_ql is only defined for odd l")
    return LPower(l, _wn_l_exponent(n, l))
