"""Elliptic curves y^2 = x^3 + Ax + B over F_p and their Weil zeta functions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import HypothesisViolation, InvalidCurve, PoleEvaluation
from .exact_core import is_prime, require_prime

__all__ = [
    "CurveFp",
    "WeilZeta",
    "FAMILIES",
    "count_points",
    "trace",
    "is_supersingular",
    "family_supersingular",
    "family_curve",
    "weil_zeta",
    "rational_function_field",
    "zeta_x_at",
    "zeta_f_at",
    "point_counts_ext",
]


@dataclass(frozen=True)
class CurveFp:
    p: int
    A: int
    B: int

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p < 5:
            raise InvalidCurve(f"p = {self.p} must be a prime >= 5")
        object.__setattr__(self, "A", self.A % self.p)
        object.__setattr__(self, "B", self.B % self.p)
        if (4 * self.A**3 + 27 * self.B**2) % self.p == 0:
            raise InvalidCurve(f"y^2 = x^3 + {self.A}x + {self.B} is singular mod {self.p}")

    def __str__(self) -> str:
        return f"y^2 = x^3 + {self.A}x + {self.B} over F_{self.p}"


@dataclass(frozen=True)
class WeilZeta:
    """Numerator data of Z(X, t) for a curve over F_q.

    Genus 1: (1 - a t + q t^2) / ((1 - t)(1 - q t)).  Genus 0: 1 / ((1 - t)(1 - q t)).
    """

    q: int
    a: int = 0
    genus: int = 1

    def __post_init__(self) -> None:
        if self.q < 2:
            raise HypothesisViolation(f"q = {self.q} is not a prime power")
        if self.genus not in (0, 1):
            raise HypothesisViolation(f"genus {self.genus} is not supported")
        if self.genus == 1 and self.a * self.a > 4 * self.q:
            raise HypothesisViolation(f"trace {self.a} violates the Hasse bound for q = {self.q}")
        if self.genus == 0 and self.a != 0:
            raise HypothesisViolation("genus-0 zeta carries no trace")


def _legendre(r: int, p: int) -> int:
    r %= p
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def count_points(curve: CurveFp) -> int:
    """|E(F_p)| including the point at infinity, by enumerating x."""
    p, A, B = curve.p, curve.A, curve.B
    return 1 + sum(1 + _legendre(x * x * x + A * x + B, p) for x in range(p))


def trace(curve: CurveFp) -> int:
    return 1 + curve.p - count_points(curve)


def is_supersingular(curve: CurveFp) -> bool:
    # a = 0 mod p together with |a| <= 2 sqrt(p) forces a = 0 once p >= 5
    return trace(curve) == 0


FAMILIES = {"x3+1": (0, 1), "x3+x": (1, 0)}


def _family_key(family: str) -> str:
    key = family.replace(" ", "").replace("^", "").replace("³", "3").replace("y2=", "")
    if key not in FAMILIES:
        raise HypothesisViolation(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    return key


def family_curve(family: str, p: int) -> CurveFp:
    A, B = FAMILIES[_family_key(family)]
    return CurveFp(p, A, B)


def family_supersingular(family: str, p: int) -> bool:
    """Congruence criterion for the two CM families, without point counting."""
    key = _family_key(family)
    if not is_prime(p) or p < 5:
        raise HypothesisViolation(f"p = {p} must be a prime >= 5")
    if key == "x3+1":
        return p % 3 == 2
    return p % 4 == 3


def weil_zeta(curve: CurveFp) -> WeilZeta:
    return WeilZeta(q=curve.p, a=trace(curve), genus=1)


def rational_function_field(p: int) -> WeilZeta:
    """Zeta data of the projective line, i.e. of the field F_p(x)."""
    require_prime(p)
    return WeilZeta(q=p, a=0, genus=0)


def zeta_x_at(z: WeilZeta, n: int) -> Fraction:
    """zeta_X(-n) = Z(X, q^n)."""
    if n < 1:
        raise HypothesisViolation("n must be >= 1")
    q = z.q
    t = q**n
    den = (1 - t) * (1 - q * t)
    if den == 0:
        raise PoleEvaluation(f"Z(X, t) has a pole at t = {t}")
    num = 1 - z.a * t + q * t * t if z.genus == 1 else 1
    return Fraction(num, den)


def zeta_f_at(z: WeilZeta, n: int) -> Fraction:
    """zeta_F(-n): zeta_X(-n) times the Euler factor (1 - q^n) of the single place at infinity."""
    return zeta_x_at(z, n) * (1 - z.q**n)


def point_counts_ext(z: WeilZeta, k: int) -> int:
    """N_k = |E(F_{q^k})| from the Frobenius trace recurrence."""
    if z.genus != 1:
        raise HypothesisViolation("point_counts_ext needs a genus-1 zeta")
    if k < 1:
        raise HypothesisViolation("k must be >= 1")
    a_prev, a_k = 2, z.a  # a_0 = 2 makes a_2 = a^2 - 2q fall out of the recurrence
    for _ in range(k - 1):
        a_prev, a_k = a_k, z.a * a_k - z.q * a_prev
    return z.q**k + 1 - a_k


def hasse_bound(p: int) -> int:
    """Largest integer a with a^2 <= 4p."""
    return isqrt(4 * p)
