"""Splitting criteria and homology-kernel criteria with audited hypotheses.

A :class:`Verdict` separates structural preconditions from substantive
hypotheses.  If a structural precondition fails the criterion says nothing
and ``holds`` is ``None`` ("not applicable"), never ``False``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .curve_ff import WeilZeta
from .divisible import dnl_ff
from .errors import CharacteristicClash, HypothesisViolation
from .exact_core import linv_abs, lval, lval_int, require_prime
from .zeta_q import wn_q, zeta_q_neg

__all__ = [
    "Hypothesis",
    "Verdict",
    "split_verdict_q",
    "split_verdict_ff",
    "homology_kernel_q",
    "homology_kernel_ss",
]

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Hypothesis:
    name: str
    satisfied: bool
    witness: str
    structural: bool = False


@dataclass(frozen=True)
class Verdict:
    hypotheses: tuple[Hypothesis, ...]
    conclusion: str

    @property
    def applicable(self) -> bool:
        return all(h.satisfied for h in self.hypotheses if h.structural)

    @property
    def holds(self) -> bool | None:
        if not self.applicable:
            return None
        return all(h.satisfied for h in self.hypotheses)

    @property
    def status(self) -> str:
        if self.holds is None:
            return NOT_APPLICABLE
        return HOLDS if self.holds else FAILS

    def with_hypothesis(self, index: int, satisfied: bool) -> Verdict:
        """Copy with one hypothesis flipped; used to audit monotonicity."""
        hyps = list(self.hypotheses)
        h = hyps[index]
        hyps[index] = Hypothesis(h.name, satisfied, h.witness, h.structural)
        return Verdict(tuple(hyps), self.conclusion)


def _verdict(hyps: Iterable[Hypothesis], conclusion: str) -> Verdict:
    return Verdict(tuple(hyps), conclusion)


def split_verdict_q(n: int, l: int) -> Verdict:
    """0 -> K_2n(Z)_l -> K_2n(Q)_l -> (+)_p K_{2n-1}(F_p)_l -> 0 splits iff |w_{n+1}(Q) zeta(-n)|_l^{-1} = 1."""
    require_prime(l)
    if n < 1 or n % 2 == 0 or l == 2:
        raise HypothesisViolation(f"splitting over Q is characterised for n odd and l > 2, got n = {n}, l = {l}")
    x = wn_q(n + 1).value * zeta_q_neg(n)
    part = linv_abs(x, l)
    return _verdict(
        [Hypothesis("l-part trivial", part.exponent == 0, f"w_{n + 1}(Q) zeta(-{n}) = {x}, l-part {part}")],
        f"K_{2 * n}(Q)_{l} = K_{2 * n}(Z)_{l} (+) (+)_p K_{2 * n - 1}(F_p)_{l} (localization sequence splits)",
    )


def split_verdict_ff(z: WeilZeta, n: int, l: int) -> Verdict:
    """Splitting of K_2n(F)_l -> (+)_v K_{2n-1}(k_v)_l for a function field, iff D(n)_l = 0."""
    if z.q % l == 0:
        raise CharacteristicClash(f"l = {l} divides q = {z.q}")
    d = dnl_ff(z, n, l)
    return _verdict(
        [Hypothesis("D(n)_l = 0", d.order.exponent == 0, f"|D({n})_{l}| = {d.order}")],
        f"K_{2 * n}(F)_{l} -> (+)_v K_{2 * n - 1}(k_v)_{l} splits",
    )


def homology_kernel_q(n: int, l: int) -> Verdict:
    """Sufficient condition for Z/l inside ker H_2n(GL(Z), Z/l) -> H_2n(GL(Q), Z/l)."""
    require_prime(l)
    hyps = [
        Hypothesis("H1: n odd", n >= 1 and n % 2 == 1, f"n = {n}", structural=True),
        Hypothesis("H2: l > n + 1", l > n + 1, f"l = {l}, n + 1 = {n + 1}", structural=True),
    ]
    if n >= 1 and n % 2 == 1:
        x = wn_q(n + 1).value * zeta_q_neg(n)
        v = lval(x, l)
        hyps.append(Hypothesis("H3: l || w_{n+1}(Q) zeta(-n)", v == 1, f"w_{n + 1}(Q) zeta(-{n}) = {x}, v_{l} = {v}"))
    else:
        hyps.append(Hypothesis("H3: l || w_{n+1}(Q) zeta(-n)", False, "not evaluated for even n"))
    return _verdict(
        hyps,
        f"ker(H_{2 * n}(GL(Z), Z/{l}) -> H_{2 * n}(GL(Q), Z/{l})) contains a subgroup isomorphic to Z/{l}",
    )


def homology_kernel_ss(p: int, n: int, l: int) -> Verdict:
    """Sufficient condition for Z/l inside the kernel on H_2n for F = F_p(E), E supersingular.

    The condition "l does not divide (p+1)(2n+1)/l" is read as
    v_l(p+1) + v_l(2n+1) = 1.
    """
    require_prime(p)
    require_prime(l)
    if p < 5:
        raise HypothesisViolation(f"p = {p} must be >= 5")
    if l == p:
        raise CharacteristicClash(f"l = {l} equals the characteristic")
    h3 = (p + 1) % l == 0
    hyps = [
        Hypothesis("H1: n odd", n >= 1 and n % 2 == 1, f"n = {n}", structural=True),
        Hypothesis("H2: l > n + 1", l > n + 1, f"l = {l}, n + 1 = {n + 1}", structural=True),
        Hypothesis("H3: p = -1 mod l", h3, f"p mod l = {p % l}"),
    ]
    if h3:
        v = lval_int(p + 1, l) + lval_int(2 * n + 1, l)
        hyps.append(
            Hypothesis(
                "H4: l does not divide (p+1)(2n+1)/l",
                v == 1,
                f"read as v_l(p+1) + v_l(2n+1) = 1; here v_{l}(({p + 1})({2 * n + 1})) = {v}",
            )
        )
    else:
        hyps.append(
            Hypothesis("H4: l does not divide (p+1)(2n+1)/l", False, f"l does not divide p + 1 = {p + 1}; quotient undefined")
        )
    return _verdict(
        hyps,
        f"ker(H_{2 * n}(GL(O_F), Z/{l}) -> H_{2 * n}(GL(F), Z/{l})) contains a subgroup "
        f"isomorphic to Z/{l}, F = F_{p}(E)",
    )
