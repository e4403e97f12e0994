import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kdiv import (
    WeilZeta,
    dnl_q,
    dnl_ss,
    homology_kernel_q,
    homology_kernel_ss,
    rational_function_field,
    split_verdict_ff,
    split_verdict_q,
)
from kdiv.curve_ff import family_supersingular
from kdiv.errors import CharacteristicClash, HypothesisViolation
from kdiv.obstructions import Verdict

from oracles import primes_between


def test_split_verdict_q_examples():
    assert split_verdict_q(3, 5).holds is True
    assert split_verdict_q(11, 691).holds is False
    assert split_verdict_q(15, 3617).holds is False
    assert split_verdict_q(11, 5).status == "holds"
    with pytest.raises(HypothesisViolation):
        split_verdict_q(4, 5)
    with pytest.raises(HypothesisViolation):
        split_verdict_q(3, 2)


def test_split_verdict_ff_examples():
    assert split_verdict_ff(WeilZeta(29, 0), 3, 5).holds is False
    assert split_verdict_ff(rational_function_field(29), 3, 5).holds is True
    # |D(2)_5| = 5 for the supersingular curve over F_29
    assert split_verdict_ff(WeilZeta(29, 0), 2, 5).holds is False
    assert split_verdict_ff(WeilZeta(29, 0), 1, 7).holds is True
    with pytest.raises(CharacteristicClash):
        split_verdict_ff(WeilZeta(29, 0), 3, 29)


def test_homology_kernel_q_examples():
    v = homology_kernel_q(11, 691)
    assert v.holds is True
    assert "H_22(GL(Z), Z/691)" in v.conclusion and "contains" in v.conclusion
    v = homology_kernel_q(15, 3617)
    assert v.holds is True and "H_30" in v.conclusion
    v = homology_kernel_q(11, 5)
    assert v.holds is None and v.status == "not-applicable"
    assert [h.satisfied for h in v.hypotheses[:2]] == [True, False]
    # applicable, but 7 does not divide w_4(Q) zeta(-3) = 2
    assert homology_kernel_q(3, 7).status == "fails"
    assert homology_kernel_q(4, 11).status == "not-applicable"


@pytest.mark.parametrize("p, n, l, group", [(29, 3, 5, "H_6"), (41, 5, 7, "H_10"), (19, 3, 5, "H_6")])
def test_homology_kernel_ss_examples(p, n, l, group):
    v = homology_kernel_ss(p, n, l)
    assert v.holds is True
    assert v.conclusion.startswith(f"ker({group}(GL(O_F)")
    assert f"F_{p}(E)" in v.conclusion
    assert "v_l(p+1) + v_l(2n+1) = 1" in v.hypotheses[3].witness


def test_homology_kernel_ss_failures():
    # 41 = -1 mod 7 but 7 | 2n + 1 for n = 3
    assert homology_kernel_ss(41, 3, 7).status == "fails"
    # 5^2 | 24 + 1 = p + 1 for p = 149
    assert homology_kernel_ss(149, 1, 5).status == "fails"
    assert homology_kernel_ss(29, 3, 7).status == "fails"  # 7 does not divide 30
    assert homology_kernel_ss(29, 4, 7).status == "not-applicable"
    assert homology_kernel_ss(29, 5, 5).status == "not-applicable"  # l <= n + 1
    with pytest.raises(CharacteristicClash):
        homology_kernel_ss(29, 3, 29)


def _cor3_cases():
    for p in primes_between(5, 100):
        if family_supersingular("x3+1", p) or family_supersingular("x3+x", p):
            for n in range(1, 10, 2):
                for l in primes_between(2, 14):
                    if l != p:
                        yield p, n, l


def test_homology_kernel_ss_implies_exact_order_l():
    cases = list(_cor3_cases())
    assert len(cases) >= 100
    hits = 0
    for p, n, l in cases:
        if homology_kernel_ss(p, n, l).holds:
            hits += 1
            assert dnl_ss(p, n, l).order.exponent == 1, (p, n, l)
    assert hits > 0


def test_split_q_matches_dnl_q():
    for n in range(1, 20, 2):
        for l in primes_between(3, 4001):
            assert split_verdict_q(n, l).holds == (dnl_q(n, l).order == 1), (n, l)


verdicts = st.one_of(
    st.tuples(st.integers(1, 25), st.sampled_from(primes_between(2, 4000))).map(lambda t: homology_kernel_q(*t)),
    st.tuples(
        st.sampled_from(primes_between(5, 200)),
        st.integers(1, 12),
        st.sampled_from(primes_between(2, 40)),
    )
    .filter(lambda t: t[0] != t[2])
    .map(lambda t: homology_kernel_ss(*t)),
)


@settings(max_examples=300)
@given(verdicts, st.data())
def test_verdict_monotone_in_hypotheses(v: Verdict, data):
    satisfied = [i for i, h in enumerate(v.hypotheses) if h.satisfied]
    if not satisfied:
        assert v.holds is not True
        return
    i = data.draw(st.sampled_from(satisfied))
    flipped = v.with_hypothesis(i, False)
    assert flipped.holds is not True
    if v.applicable and not v.hypotheses[i].structural:
        assert flipped.holds is False


@settings(max_examples=200)
@given(verdicts)
def test_verdict_holds_only_if_every_hypothesis_satisfied(v: Verdict):
    if v.holds:
        assert all(h.satisfied for h in v.hypotheses)
    if not v.applicable:
        assert v.holds is None
