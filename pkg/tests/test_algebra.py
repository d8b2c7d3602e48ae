from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from glambda.algebra import (
    ONE, AlgebraElement, H, MatrixRealization, X, Y, ad_pow, bracket, casimir_apply,
    grading_holds, mul, p_n, pn_reduce, specialize,
)
from glambda.checks import random_element
from glambda.exactcore import HPoly, LAMBDA, LambdaScalar, PoleError, t_poly
from glambda.orthopoly import f

HP = HPoly.gen()
L = LAMBDA

elements = st.integers(0, 2 ** 32).map(lambda s: random_element(random.Random(s)))


def test_basic_products():
    assert mul(X, Y) == AlgebraElement.of_h(t_poly(0))
    assert mul(Y, X) == AlgebraElement.of_h(t_poly(1))
    assert mul(H, X) == AlgebraElement.term(1, HP + 2)
    assert mul(X, H) == AlgebraElement.term(1, HP)
    assert mul(Y, H) == AlgebraElement.term(-1, HP + 2)


def test_brackets():
    assert bracket(X, Y) == H
    assert bracket(H, X) == X.scale(2)
    assert bracket(H, Y) == Y.scale(-2)
    u = X + H.scale(3) + Y
    assert bracket(u, u).is_zero()


def test_ad_pow_examples():
    assert ad_pow(Y, 0, X) == X
    assert ad_pow(Y, 1, X) == -H
    assert ad_pow(Y, 2, X) == Y.scale(-2)
    assert ad_pow(Y, 3, X).is_zero()
    with pytest.raises(ValueError):
        ad_pow(Y, -1, X)


def test_casimir_examples():
    assert casimir_apply(ONE).is_zero()
    assert casimir_apply(X) == X.scale(4)
    # central element itself commutes with everything
    omega = (mul(Y, X).scale(2) + mul(H, H).scale(Fraction(1, 2)) + H)
    assert omega == AlgebraElement.scalar((L * L - 1) / 2)


def test_casimir_eigenvalues():
    for k in range(9):
        for l in range(-k, k + 1):
            elem = ad_pow(Y, k - l, AlgebraElement({k: 1}))
            assert casimir_apply(elem) == elem.scale(2 * k * (k + 1))


def test_y_power_x_power():
    for l in range(11):
        want = HPoly.const(1)
        for j in range(1, l + 1):
            want = want * t_poly(j)
        yl = AlgebraElement({-l: 1}) if l else ONE
        xl = AlgebraElement({l: 1}) if l else ONE
        assert mul(yl, xl) == AlgebraElement.of_h(want)


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_jacobi(u, v, w):
    total = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))
    assert total.is_zero()


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_associativity(u, v, w):
    assert mul(mul(u, v), w) == mul(u, mul(v, w))


@settings(max_examples=40, deadline=None)
@given(elements, elements)
def test_antisymmetry_and_bilinearity(u, v):
    assert bracket(u, v) == -bracket(v, u)
    assert mul(u + v, v) == mul(u, v) + mul(v, v)


@settings(max_examples=30, deadline=None)
@given(elements)
def test_grading(u):
    assert grading_holds(u)


def test_specialize_examples():
    assert specialize(H, 3) == MatrixRealization([[2, 0, 0], [0, 0, 0], [0, 0, -2]])
    x2 = specialize(X, 2)
    assert x2 == MatrixRealization([[0, 1], [0, 0]])
    for n in range(1, 8):
        assert specialize(AlgebraElement({n: 1}), n).is_zero()
    # XY -> E_11 and YX -> E_22 at n = 2
    assert specialize(mul(X, Y), 2) == MatrixRealization([[1, 0], [0, 0]])
    assert specialize(mul(Y, X), 2) == MatrixRealization([[0, 0], [0, 1]])


def test_specialize_commutator_relations():
    for n in range(1, 7):
        x, y, h = specialize(X, n), specialize(Y, n), specialize(H, n)
        assert x @ y - y @ x == h
        assert h @ x - x @ h == x + x


def test_specialize_pole():
    u = AlgebraElement.scalar(1 / (L - 3))
    with pytest.raises(PoleError, match="pole at integer lambda"):
        specialize(u, 3)
    assert specialize(u, 4) == MatrixRealization([[1 if i == j else 0 for j in range(4)] for i in range(4)])


def test_specialize_rejects_nonpositive():
    with pytest.raises(ValueError):
        specialize(X, 0)


def test_ad_chain_matches_matrices():
    """(ad Y)^{k-l} X^k computed in gl(n) equals the specialized symbolic element."""
    for n in range(2, 6):
        x, y = specialize(X, n), specialize(Y, n)
        for k in range(n):
            m = MatrixRealization([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])
            for _ in range(k):
                m = x @ m
            for p in range(2 * k + 1):
                l = k - p
                assert specialize(AlgebraElement({l: f(k, l)}), n) == m
                m = y @ m - m @ y


def test_pn_reduce_examples():
    for n in range(1, 6):
        assert pn_reduce(p_n(n), n).is_zero()
    assert pn_reduce(HP * HP, 2) == HPoly.const(1)
    g = HP ** 5 - HP.scale(3) + 7
    for n in range(1, 6):
        r = pn_reduce(g, n)
        assert r.degree() < n
        for i in range(1, n + 1):
            a = n - 2 * i + 1
            assert r.evaluate(a, n) == g.evaluate(a, n)


def test_pn_reduce_needs_specialized_lambda():
    with pytest.raises(ValueError):
        pn_reduce(t_poly(1), 3)


def test_element_arithmetic_surface():
    assert (X + 1) - X == ONE
    assert X * 2 == X.scale(2)
    assert X ** 2 == AlgebraElement({2: 1})
    assert str(X) == "X" and str(Y) == "Y"
    assert AlgebraElement({3: 0}).is_zero()
