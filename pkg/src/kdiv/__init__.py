"""Exact order formulas for divisible elements in K_2n of Q and of elliptic function fields."""
from .curve_ff import (
    CurveFp,
    WeilZeta,
    count_points,
    family_supersingular,
    is_supersingular,
    point_counts_ext,
    rational_function_field,
    trace,
    weil_zeta,
    zeta_f_at,
    zeta_x_at,
)
from .divisible import DivisibleOrder, dnl_ff, dnl_q, dnl_q_supplied, dnl_ss, h_orders, moore_quotient
from .errors import (
    CharacteristicClash,
    HypothesisViolation,
    KdivError,
    NegativeValuation,
    NotPrime,
    PoleEvaluation,
    ZeroInput,
)
from .exact_core import LPower, Rat, is_prime, linv_abs, lval
from .obstructions import Verdict, homology_kernel_q, homology_kernel_ss, split_verdict_ff, split_verdict_q
from .zeta_q import WnInvariant, bernoulli, wn_q, wn_ql, zeta_q_neg

__version__ = "0.1.0"
