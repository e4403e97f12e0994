"""Reproduction report for every worked numeric example."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .curve_ff import CurveFp, count_points, is_supersingular, rational_function_field, trace, weil_zeta
from .divisible import dnl_ff, dnl_q, dnl_ss
from .exact_core import is_prime
from .obstructions import homology_kernel_q, homology_kernel_ss, split_verdict_q
from .zeta_q import wn_q, zeta_q_neg

__all__ = ["ReportEntry", "Report", "verify_paper"]


@dataclass(frozen=True)
class ReportEntry:
    claim_id: str
    paper_anchor: str
    computed: str
    expected: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "paper_anchor": self.paper_anchor,
            "computed": self.computed,
            "expected": self.expected,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class Report:
    entries: tuple[ReportEntry, ...]

    @property
    def passed(self) -> int:
        return sum(e.passed for e in self.entries)

    @property
    def failed(self) -> int:
        return len(self.entries) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "entries": [e.to_dict() for e in self.entries],
            "summary": {"total": str(len(self.entries)), "pass": str(self.passed), "fail": str(self.failed)},
        }


def _check(claim_id: str, anchor: str, compute: Callable[[], object], expected: object) -> ReportEntry:
    try:
        computed = compute()
    except Exception as exc:  # a crash is a failed entry, not a crashed report
        return ReportEntry(claim_id, anchor, f"error: {type(exc).__name__}: {exc}", str(expected), False)
    return ReportEntry(claim_id, anchor, str(computed), str(expected), computed == expected)


def _q_split_all(n: int, bound: int) -> str:
    x = wn_q(n + 1).value * zeta_q_neg(n)
    bad = [l for l in range(3, bound + 1, 2) if is_prime(l) and not split_verdict_q(n, l).holds]
    return f"w_{n + 1}(Q) zeta(-{n}) = {x}; non-split primes <= {bound}: {bad or 'none'}"


def _rational_ff_vanishing() -> str:
    bad = []
    for p in (5, 7, 29):
        z = rational_function_field(p)
        ls = [l for l in range(3, 100, 2) if is_prime(l) and l != p][:10]
        for n in range(1, 21):
            for l in ls:
                if dnl_ff(z, n, l).order.exponent != 0:
                    bad.append((p, n, l))
    return f"nontrivial D(n)_l: {bad or 'none'}"


def verify_paper() -> Report:
    e29 = CurveFp(29, 0, 1)
    e41 = CurveFp(41, 0, 1)
    e19 = CurveFp(19, 1, 0)
    entries = [
        _check("ex-691", r"w_{12} (\Q) \zeta_{\Q} (-11) = 2 \times 691",
               lambda: wn_q(12).value * zeta_q_neg(11), 2 * 691),
        _check("ex-691-dnl", r"w_{12} (\Q) \zeta_{\Q} (-11) = 2 \times 691",
               lambda: dnl_q(11, 691).order.value, 691),
        _check("ex-3617", r"w_{16} (\Q) \zeta_{\Q} (-15) = 2 \times 3617",
               lambda: wn_q(16).value * zeta_q_neg(15), 2 * 3617),
        _check("ex-3617-dnl", r"w_{16} (\Q) \zeta_{\Q} (-15) = 2 \times 3617",
               lambda: dnl_q(15, 3617).order.value, 3617),
        _check("ex-p29-count", r"is supersingular iff $p \equiv 2 \mod 3$",
               lambda: (count_points(e29), trace(e29), is_supersingular(e29)), (30, 0, True)),
        _check("ex-p29-dnl", r"that $5 \,\, || \,\, |D (n)_5|.$",
               lambda: (dnl_ff(weil_zeta(e29), 3, 5).order.value, dnl_ss(29, 3, 5).order.value), (5, 5)),
        _check("ex-p29-homology", r"H_{6} (GL(\mathcal{O}_{\F_{29} (E)}), \, \Z / 5)",
               lambda: homology_kernel_ss(29, 3, 5).status, "holds"),
        _check("ex-p41-dnl", r"that $7 \,\, || \,\, |D (n)_7|.$",
               lambda: (trace(e41), dnl_ss(41, 5, 7).order.value), (0, 7)),
        _check("ex-p41-homology", r"H_{10} (GL(\mathcal{O}_{\F_{41}(E)}), \, \Z / 7)",
               lambda: homology_kernel_ss(41, 5, 7).status, "holds"),
        _check("ex-p19", r"is supersingular iff $p \equiv 3 \mod 4,$",
               lambda: (trace(e19), dnl_ss(19, 3, 5).order.value), (0, 5)),
        _check("ex-p19-homology", r"H_{6} (GL(\mathcal{O}_{\F_{19}(E)}), \, \Z / 5)",
               lambda: homology_kernel_ss(19, 3, 5).status, "holds"),
        _check("ff-rational-split", r"In particular $D(n) = div K_{2n}\, (\F_p (x)) = 0.$",
               _rational_ff_vanishing, "nontrivial D(n)_l: none"),
        _check("hom-q-691", r"H_{22} (GL(\Z), \, \Z / 691)",
               lambda: homology_kernel_q(11, 691).status, "holds"),
        _check("hom-q-3617", r"H_{30} (GL(\Z), \, \Z / 3617)",
               lambda: homology_kernel_q(15, 3617).status, "holds"),
        _check("hom-q-na", r"Assume that $l > n + 1 $ is such that",
               lambda: homology_kernel_q(11, 5).status, "not-applicable"),
    ]
    for n, sign in ((3, 2), (5, -2), (7, 2), (9, -2)):
        entries.append(
            _check(f"q-split-n{n}", r"for $n = 3, 5, 7, 9$ and $l > 2.$",
                   lambda n=n: _q_split_all(n, 10_000),
                   f"w_{n + 1}(Q) zeta(-{n}) = {sign}; non-split primes <= 10000: none")
        )
    return Report(tuple(sorted(entries, key=lambda e: e.claim_id)))
