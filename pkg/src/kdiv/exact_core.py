"""Exact rationals, l-adic valuation and deterministic primality.

``Rat`` is :class:`fractions.Fraction`: always reduced, positive denominator,
and ``0`` is stored as ``0/1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import NegativeValuation, NotPrime, ZeroInput

Rat = Fraction
RatLike = Union[int, Fraction]

__all__ = [
    "Rat",
    "LPower",
    "as_rat",
    "is_prime",
    "require_prime",
    "lval",
    "lval_int",
    "linv_abs",
    "prime_to_l_part",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Strong-pseudoprime tests to all of _SMALL_PRIMES are conclusive below this bound.
_MR_BOUND = 3_317_044_064_679_887_385_961_981
_EXTRA_BASES = _SMALL_PRIMES + (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def as_rat(x: RatLike | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class LPower:
    """A non-negative power ``l**exponent`` of a prime, with its value."""

    l: int
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise NegativeValuation(f"exponent {self.exponent} < 0 for l = {self.l}")
        require_prime(self.l)

    @property
    def value(self) -> int:
        return self.l**self.exponent

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LPower):
            return (self.l, self.exponent) == (other.l, other.exponent)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.l, self.exponent))

    def __str__(self) -> str:
        return f"{self.l}^{self.exponent}"


def _miller_rabin(m: int, bases: tuple[int, ...]) -> bool:
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def is_prime(m: int) -> bool:
    """Deterministic primality test.

    Miller-Rabin over the first thirteen prime bases is a proof below
    ~3.3e24, which covers every input this package is meant for.  Larger
    inputs get the same fixed bases plus the primes up to 97: still
    deterministic and reproducible, but no longer a proof.
    """
    if m < 2:
        return False
    for q in _SMALL_PRIMES:
        if m % q == 0:
            return m == q
    if m < _MR_BOUND:
        return _miller_rabin(m, _SMALL_PRIMES)
    return _miller_rabin(m, _EXTRA_BASES)


def require_prime(l: int) -> int:
    if not isinstance(l, int) or isinstance(l, bool) or not is_prime(l):
        raise NotPrime(f"{l!r} is not prime")
    return l


def lval_int(m: int, l: int) -> int:
    """v_l(m) for a nonzero integer ``m``; ``l`` is not checked for primality."""
    if m == 0:
        raise ZeroInput("valuation of 0 is undefined")
    m = abs(m)
    v = 0
    while m % l == 0:
        m //= l
        v += 1
    return v


def lval(x: RatLike, l: int) -> int:
    """l-adic valuation of a nonzero rational; the sign of ``x`` is ignored."""
    x = as_rat(x)
    if x == 0:
        raise ZeroInput("valuation of 0 is undefined")
    require_prime(l)
    return lval_int(x.numerator, l) - lval_int(x.denominator, l)


def linv_abs(x: RatLike, l: int) -> LPower:
    """The l-part ``|x|_l^{-1} = l**v_l(x)``, which must be an integer power."""
    v = lval(x, l)
    if v < 0:
        raise NegativeValuation(f"v_{l}({x}) = {v} is negative")
    return LPower(l, v)


def prime_to_l_part(x: RatLike, l: int) -> Fraction:
    """|x| with every factor of l removed from numerator and denominator."""
    x = abs(as_rat(x))
    return x / Fraction(l) ** lval(x, l)
