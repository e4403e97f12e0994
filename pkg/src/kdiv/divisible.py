"""Orders of the l-parts D(n)_l of the divisible elements in K_2n.

Three order formulas are provided: the totally real number field formula
(instantiated at Q, or fed with caller-supplied data), the function field
formula in terms of the Weil zeta function, and its closed form for a
supersingular elliptic curve over F_p.  ``h_orders`` gives the orders of
H^i(X, W^{n+1}) and ``moore_quotient`` the right-hand side of the order
identity that follows from the Moore sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Mapping, NamedTuple, Sequence

from .curve_ff import WeilZeta, zeta_f_at, zeta_x_at
from .errors import CharacteristicClash, HypothesisViolation, NegativeValuation
from .exact_core import LPower, as_rat, linv_abs, lval_int, require_prime
from .zeta_q import wn_q, wn_ql, zeta_q_neg

__all__ = [
    "RATIONAL_FIELD",
    "FUNCTION_FIELD",
    "SUPERSINGULAR",
    "DivisibleOrder",
    "HOrders",
    "dnl_q",
    "dnl_q_supplied",
    "dnl_ff",
    "dnl_ss",
    "h_orders",
    "moore_quotient",
]

RATIONAL_FIELD = "rational-field"
FUNCTION_FIELD = "function-field"
SUPERSINGULAR = "supersingular-closed-form"


@dataclass(frozen=True)
class DivisibleOrder:
    context: str
    n: int
    l: int
    order: LPower
    inputs_echo: Mapping[str, Fraction] = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self) -> None:
        if self.order.l != self.l:
            raise ValueError(f"order is a power of {self.order.l}, expected {self.l}")


class HOrders(NamedTuple):
    h0: LPower
    h1: LPower
    h2: LPower


def _check_odd_n_odd_l(n: int, l: int) -> None:
    require_prime(l)
    if n < 1 or n % 2 == 0:
        raise HypothesisViolation(f"the formula needs n odd and positive, got n = {n}")
    if l == 2:
        raise HypothesisViolation("the formula needs l > 2")


def _check_char(q: int, l: int) -> None:
    require_prime(l)
    if q % l == 0:
        raise CharacteristicClash(f"l = {l} divides q = {q}")


def dnl_q_supplied(
    n: int, l: int, wnp1: int, zeta_val: Fraction | int, local_wn: int
) -> DivisibleOrder:
    """|D(n)_l| for a totally real field from w_{n+1}(F), zeta_F(-n) and prod_{v|l} w_n(F_v)."""
    _check_odd_n_odd_l(n, l)
    zeta_val = as_rat(zeta_val)
    if wnp1 == 0 or zeta_val == 0 or local_wn == 0:
        raise HypothesisViolation("w_{n+1}(F), zeta_F(-n) and the local factor must be nonzero")
    quotient = wnp1 * zeta_val / local_wn
    echo = {
        "w_{n+1}(F)": Fraction(wnp1),
        "zeta_F(-n)": zeta_val,
        "prod_{v|l} w_n(F_v)": Fraction(local_wn),
        "quotient": quotient,
    }
    return DivisibleOrder(RATIONAL_FIELD, n, l, linv_abs(quotient, l), echo)


def dnl_q(n: int, l: int) -> DivisibleOrder:
    """|D(n)_l| for F = Q, n odd, l odd."""
    _check_odd_n_odd_l(n, l)
    return dnl_q_supplied(n, l, wn_q(n + 1).value, zeta_q_neg(n), wn_ql(n, l).value)


def dnl_ff(z: WeilZeta, n: int, l: int) -> DivisibleOrder:
    """|D(n)_l| for the function field of ``z`` with one place at infinity of norm q.

    |w_n(F) w_{n+1}(F) zeta_F(-n) / w_n(F_inf)|_l^{-1} with w_k = q^k - 1.
    """
    if n < 1:
        raise HypothesisViolation("n must be >= 1")
    _check_char(z.q, l)
    q = z.q
    w_n = q**n - 1
    w_n1 = q ** (n + 1) - 1
    w_inf = q**n - 1
    zf = zeta_f_at(z, n)
    total = w_n * w_n1 * zf / w_inf
    echo = {
        "w_n(F)": Fraction(w_n),
        "w_{n+1}(F)": Fraction(w_n1),
        "zeta_X(-n)": zeta_x_at(z, n),
        "zeta_F(-n)": zf,
        "w_n(F_inf)": Fraction(w_inf),
        "quotient": total,
    }
    return DivisibleOrder(FUNCTION_FIELD, n, l, linv_abs(total, l), echo)


def dnl_ss(p: int, n: int, l: int) -> DivisibleOrder:
    """|1 + p^{1+2n}|_l^{-1} / |1 - p^n|_l^{-1} for a supersingular curve over F_p."""
    require_prime(p)
    if p < 5:
        raise HypothesisViolation(f"p = {p} must be >= 5")
    if n < 1:
        raise HypothesisViolation("n must be >= 1")
    _check_char(p, l)
    num = 1 + p ** (1 + 2 * n)
    den = p**n - 1
    e = lval_int(num, l) - lval_int(den, l)
    if e < 0:
        raise NegativeValuation(f"v_{l}(1 + p^(2n+1)) < v_{l}(p^n - 1) for p = {p}, n = {n}")
    echo = {"1 + p^(1+2n)": Fraction(num), "1 - p^n": Fraction(-den)}
    return DivisibleOrder(SUPERSINGULAR, n, l, LPower(l, e), echo)


def h_orders(z: WeilZeta, n: int, l: int) -> HOrders:
    """Orders of H^0, H^1, H^2 of X with coefficients W^{n+1} (l-parts)."""
    if z.genus != 1:
        raise HypothesisViolation("h_orders needs a genus-1 zeta")
    if n < 1:
        raise HypothesisViolation("n must be >= 1")
    _check_char(z.q, l)
    q = z.q
    h0 = linv_abs(q ** (n + 1) - 1, l)
    h2 = linv_abs(q**n - 1, l)
    h1 = linv_abs((q ** (n + 1) - 1) * (q**n - 1) * zeta_x_at(z, n), l)
    return HOrders(h0, h1, h2)


def moore_quotient(local_wn: Sequence[int], global_wn: int, l: int) -> LPower:
    """|prod_{v in S} w_n(F_v) / w_n(F)|_l^{-1}."""
    if not local_wn or any(w == 0 for w in local_wn) or global_wn == 0:
        raise HypothesisViolation("all w_n entries must be nonzero and S nonempty")
    return linv_abs(Fraction(prod(local_wn), global_wn), l)
