from fractions import Fraction
import json
import random

import pytest

from glambda.exactcore import (
    HPoly, LAMBDA, LambdaScalar, QuasiPolynomial, annihilator, exp_linear, one_minus_exp_minus_2t,
)
from glambda.quasifinite import (
    WeightError, WindowError, build_window, check_annihilation, cocycle, correction_series,
    expected_cocycle, glinf_window, hw_numerator, hw_series, minimal_parabolic,
    parabolic_generator, random_gauge, random_theta, t_operator, trace_weight, weight_from_qp,
    window_rows_json,
)
from glambda.traceform import trace_series, trace_zero_series

HP = HPoly.gen()
L = LAMBDA
T = HPoly((0, 1), "t")


def test_parabolic_generator_examples():
    p = HP * HP + L
    assert parabolic_generator(p, 1) == p
    assert parabolic_generator(HP, 2) == HP * (HP + 2)
    assert parabolic_generator(HP - 1, 3) == (HP - 1) * (HP + 1) * (HP + 3)
    assert parabolic_generator(p, 4).degree() == 8
    with pytest.raises(ValueError):
        parabolic_generator(HP, 0)


def test_weight_from_qp_examples():
    r = QuasiPolynomial([(L - 1, 1), (L - 3, -1)])
    assert weight_from_qp(r, 12).F == exp_linear(L - 1, 12)
    r = QuasiPolynomial([(L - 1, 1), (-L - 1, -1)])
    assert weight_from_qp(r, 6).F.coeffs[0] == L
    with pytest.raises(WeightError, match="nonvanishing at zero"):
        weight_from_qp(QuasiPolynomial([(0, 1)]), 5)


def test_check_annihilation_examples():
    assert check_annihilation(QuasiPolynomial.exp(L - 1))
    assert check_annihilation(QuasiPolynomial.exp(-L - 1))
    assert check_annihilation(QuasiPolynomial([(-1, T)]), lam=0)
    assert not check_annihilation(QuasiPolynomial([(-1, T)]))
    assert not check_annihilation(QuasiPolynomial.exp(2))
    # a parabolic factor can kill an extra exponent
    r = QuasiPolynomial([(L - 1, 1), (L - 3, -1)])
    assert not check_annihilation(r)
    assert check_annihilation(r, HPoly((-(L - 3), 1)))


def test_t_operator():
    x = HPoly.gen("x")
    assert t_operator() == (HPoly.const(L * L, "x") - (x + 1) * (x + 1)).scale(Fraction(1, 4))


def test_trace_weight():
    n = 16
    w = trace_weight("nonzero", n)
    assert w.F == trace_series(n)
    assert w.F.coeffs[0] == L
    assert w.F.coeffs[2] == L * (L * L - 1) / 6
    assert w.consistent()
    z = trace_weight("zero", n)
    assert z.R == QuasiPolynomial([(-1, T.scale(2))])
    assert z.F == trace_zero_series(n)
    assert z.F.coeffs[0] == 1
    with pytest.raises(ValueError):
        trace_weight("other")


def test_hw_series_examples():
    w = hw_series("ii", {0: 1}, order=10)
    assert w.F == exp_linear(L - 1, 10)
    s = Fraction(2, 7)
    w = hw_series("i", {}, s=s, c=1, order=10)
    want = weight_from_qp(QuasiPolynomial([(s, -1), (-L - 1, 1)]), 10).F
    assert w.F == want
    for kind in ("ii", "iii", "iv", "v"):
        assert all(c == 0 for c in hw_series(kind, {}, order=6).F.coeffs)
    assert all(c == 0 for c in hw_series("i", {}, s=s, c=0, order=6).F.coeffs)


def test_hw_series_kinds_exponents():
    theta = {0: 1}
    assert hw_numerator("ii", theta).exponents() == sorted([L - 1, L - 3], key=lambda x: x.sort_key())
    assert set(hw_numerator("iii", theta).exponents()) == {-L - 1, -L - 3}
    assert set(hw_numerator("iv", theta).exponents()) == {L + 1, L + 3}
    assert set(hw_numerator("v", theta).exponents()) == {1 - L, 3 - L}
    assert set(hw_numerator("i", theta, s=5).exponents()) == {LambdaScalar.const(5), LambdaScalar.const(3)}


def test_hw_series_errors():
    with pytest.raises(WeightError):
        hw_series("ii", [1, 2, 3])
    with pytest.raises(ValueError):
        hw_series("vi", {0: 1})
    with pytest.raises(ValueError):
        hw_series("i", {0: 1})


def test_weight_series_invariant_and_annihilation():
    rng = random.Random(7)
    for _ in range(10):
        theta = random_theta(rng)
        s = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        for kind in ("i", "ii", "iii", "iv", "v"):
            r = hw_numerator(kind, theta, s, rng.randint(-2, 2))
            w = weight_from_qp(r, 10)
            assert w.F * one_minus_exp_minus_2t(10) == r.to_series(10)
            p = minimal_parabolic(r)
            assert check_annihilation(r, p)
            # the minimal annihilator divides T * P
            q, rem = (t_operator() * p.with_var("x")).divmod(annihilator(r))
            assert rem.is_zero()


def test_minimal_parabolic_trivial_for_trace():
    r = trace_weight("nonzero", 4).R
    assert minimal_parabolic(r) == HPoly.const(1, "x")
    r0 = trace_weight("zero", 4).R
    assert minimal_parabolic(r0, 0) == HPoly.const(1, "x")


# --- window

def test_window_structure():
    w = build_window(None, None, 5)
    comm = (w.X @ w.Y - w.Y @ w.X)
    for i in range(-4, 5):
        assert comm.entries.get((i, i)) == w.H.entries[(i, i)]
    assert all(i == j for i, j in w.H.entries)


def test_window_examples():
    rows = glinf_window(3, 0, window=4, k_max=2)["rows"]
    assert rows[0]["cocycle"] == HPoly.const(2, "s")
    assert rows[0]["cocycle_printed_j"] == HPoly.const(-4, "s")
    sym = glinf_window(None, None, window=14, k_max=10)["rows"]
    s = HPoly.gen("s")
    assert sym[1]["cocycle"] == expected_cocycle(0) * s
    assert all(r["match"] for r in sym)
    deg = glinf_window(Fraction(9, 2), Fraction(7, 2), window=12, k_max=10)["rows"]
    assert all(r["cocycle"].is_zero() and r["match"] for r in deg)


def test_window_printed_j_factor():
    for r in glinf_window(None, None, window=8, k_max=6)["rows"]:
        assert r["cocycle_printed_j"] == r["expected"].scale(-2)


def test_window_too_small():
    with pytest.raises(WindowError, match="insufficient window"):
        glinf_window(None, None, window=5, k_max=4)


def test_window_gauge_invariance():
    rng = random.Random(11)
    base = [r["cocycle"] for r in glinf_window(None, None, 14, 10)["rows"]]
    for _ in range(5):
        g = random_gauge(rng, 14)
        assert [r["cocycle"] for r in glinf_window(None, None, 14, 10, gauge=g)["rows"]] == base


def test_window_json_and_correction_series():
    rep = glinf_window(3, 0, window=4, k_max=1)
    doc = json.loads(window_rows_json(rep))
    assert doc[0] == {"lambda": "3", "s": "0", "k": 0, "cocycle": "2", "expected": "2", "match": True}
    cs = rep["correction_series"]
    assert cs == correction_series(3, 0)
    assert cs.coeffs[0] == 2  # (s + lambda + 1)/2 at t = 0
    sym = glinf_window(None, None, 4, 1)
    assert "correction_series" not in sym
    assert json.loads(window_rows_json(sym))[0]["lambda"] == "symbolic"
