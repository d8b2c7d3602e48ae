"""Hahn/Chebyshev polynomials f_kl of gl(lambda) and the identities they obey.

Three independent constructions are provided:

* :func:`f_ad`    -- read off from ``(ad Y)^{k-l}(X^k) = X^l f_kl``,
* :func:`f_nabla` -- ``nabla^{k-l}(T_1...T_k) / (T_1...T_l)``,
* :func:`f_hahn`  -- the terminating 3F2 sum.

The ``check_*`` functions verify the orthogonality, norm, difference
equation and Casimir identities exactly; :func:`conjecture_scan` explores
the infinite dual-orthogonality sums numerically or in exact rationals.
"""

from __future__ import annotations

import csv
import io
from contextlib import nullcontext
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

import mpmath

from . import algebra
from .algebra import X, Y, ad_pow
from .exactcore import (
    HPoly, LAMBDA, LambdaScalar, alpha, difference, pochhammer, t_poly, t_product,
)
from .traceform import limit_over_lambda, trace_h


class NormalizationError(ArithmeticError):
    """f_ad produced an element that is not concentrated in one degree."""


class DivisibilityError(ArithmeticError):
    pass


class DegenerateNorm(ZeroDivisionError):
    pass


WITH_LAMBDA = "with_lambda"
WITHOUT_LAMBDA = "without_lambda"


@dataclass(frozen=True)
class OrthoPoly:
    k: int
    l: int
    poly: HPoly

    def __post_init__(self):
        if self.poly.degree() != self.k - abs(self.l):
            raise ValueError(
                f"f_{self.k},{self.l} has degree {self.poly.degree()}, "
                f"expected {self.k - abs(self.l)}")


def _check_kl(k, l, allow_negative=False):
    lo = -k if allow_negative else 0
    if k < 0 or not lo <= l <= k:
        raise ValueError(f"need {lo} <= l <= k, got k={k}, l={l}")


# --- three routes ------------------------------------------------------------

@lru_cache(maxsize=None)
def _x_power(k: int):
    return algebra.AlgebraElement({k: 1}) if k else algebra.ONE


@lru_cache(maxsize=None)
def _ad_chain(k: int):
    """[(ad Y)^p (X^k) for p = 0 .. 2k]."""
    chain = [_x_power(k)]
    for _ in range(2 * k):
        chain.append(algebra.bracket(Y, chain[-1]))
    return tuple(chain)


def f_ad(k: int, l: int) -> OrthoPoly:
    _check_kl(k, l, allow_negative=True)
    elem = _ad_chain(k)[k - l]
    if elem.degrees() != [l]:
        raise NormalizationError(
            f"(ad Y)^{k - l}(X^{k}) has degrees {elem.degrees()}, expected [{l}]")
    return OrthoPoly(k, l, elem[l])


def f_nabla(k: int, l: int) -> OrthoPoly:
    _check_kl(k, l)
    g = t_product(1, k)
    for _ in range(k - l):
        g = difference(g, "backward")
    if l:
        q, r = g.divmod(t_product(1, l))
        if r:
            raise DivisibilityError("divisibility failure")
        g = q
    return OrthoPoly(k, l, g)


def f_hahn(k: int, l: int) -> OrthoPoly:
    _check_kl(k, l)
    z = HPoly((Fraction(1, 2) * (1 - LAMBDA), Fraction(-1, 2)))  # (1 - lambda - H)/2
    total = HPoly()
    for i in range(k - l + 1):
        num = pochhammer(LambdaScalar.const(l - k), i) * pochhammer(LambdaScalar.const(l + k + 1), i)
        den = (pochhammer(LambdaScalar.const(l + 1), i)
               * pochhammer(l + 1 - LAMBDA, i) * factorial(i))
        total = total + pochhammer(z, i).scale(num / den)
    norm = LambdaScalar.const(1)
    t0 = t_poly(0)
    for m in range(l + 1, k + 1):
        norm = norm * t0(alpha(m))
    return OrthoPoly(k, l, total.scale(norm))


@lru_cache(maxsize=None)
def f(k: int, l: int) -> HPoly:
    """The polynomial f_kl (difference-operator route; mirrored for l < 0)."""
    _check_kl(k, l, allow_negative=True)
    if l >= 0:
        return f_nabla(k, l).poly
    return f(k, -l).scale(mirror_factor(k, -l))


def mirror_factor(k: int, l: int) -> Fraction:
    """f_{k,-l} = (-1)^l (k+l)!/(k-l)! f_kl."""
    return Fraction((-1) ** l * factorial(k + l), factorial(k - l))


def weight(l: int) -> HPoly:
    """T_1(H)...T_l(H); 1 for l = 0."""
    return t_product(1, l)


# --- forms and norms ---------------------------------------------------------

def inner(f_: HPoly, g: HPoly, l: int, per_unit: bool = False) -> LambdaScalar:
    """<f, g>_l = tr(f g T_1...T_l)."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    return trace_h(f_ * g * weight(l), per_unit)


def _norm_prefactor(k, l):
    return (Fraction(factorial(k - l), factorial(k + l))
            * Fraction(factorial(k) ** 2, 2 * k + 1))


def c_norm(k: int, l: int, include_lambda: bool = True) -> LambdaScalar:
    """Squared norm of f_kl for lambda != 0.

    ``include_lambda=False`` drops the overall lambda factor, giving the
    shorter normalization that appears alongside the infinite dual sums.
    """
    _check_kl(k, l)
    out = LambdaScalar.const(_norm_prefactor(k, l))
    if include_lambda:
        out = out * LAMBDA
    for j in range(1, k + 1):
        out = out * (LAMBDA * LAMBDA - j * j)
    return out


def c_norm_zero(k: int, l: int) -> Fraction:
    """lambda = 0 norm: (-1)^k (k-l)!/(k+l)! (k!)^4/(2k+1)."""
    _check_kl(k, l)
    return (-1) ** k * Fraction(factorial(k - l), factorial(k + l)) * Fraction(
        factorial(k) ** 4, 2 * k + 1)


def norm_limit_zero(k: int, l: int) -> LambdaScalar:
    """lim_{lambda->0} <f_kl, f_kl>_l / lambda computed from the trace."""
    return limit_over_lambda(inner(f(k, l), f(k, l), l))


# --- identity checks ---------------------------------------------------------

def diffeq_residual(k: int, l: int, poly: HPoly | None = None) -> HPoly:
    """T_0 nabla delta f - (l+1)(H+l) delta f + (k-l)(k+l+1) f."""
    _check_kl(k, l)
    p = f(k, l) if poly is None else poly
    dp = difference(p, "forward")
    return (t_poly(0) * difference(dp, "backward")
            - HPoly((l, 1)) * dp.scale(l + 1)
            + p.scale((k - l) * (k + l + 1)))


def check_diffeq(k: int, l: int) -> bool:
    return diffeq_residual(k, l).is_zero()


def gram_matrix(k_max: int, l: int):
    """[[<f_kl, f_k'l>_l for k' in l..k_max] for k in l..k_max]."""
    if l < 0 or l > k_max:
        raise ValueError("need 0 <= l <= k_max")
    ks = range(l, k_max + 1)
    return [[inner(f(a, l), f(b, l), l) for b in ks] for a in ks]


def check_gram(k_max: int, l: int) -> bool:
    g = gram_matrix(k_max, l)
    for a, row in enumerate(g):
        for b, val in enumerate(row):
            want = c_norm(l + a, l) if a == b else LambdaScalar.const(0)
            if val != want:
                return False
    return True


def gram_matrix_at(n: int, l: int = 0):
    """Gram matrix of f_ln .. f_{n-1,l} at lambda = n, exact rationals."""
    return [[x.evaluate(n) for x in row] for row in gram_matrix(n - 1, l)]


def _weight_value(l, i, lam):
    """T_1...T_l at alpha_i: prod_m (i - m)(lam - i + m)."""
    out = 1
    for m in range(1, l + 1):
        out = out * (i - m) * (lam - i + m)
    return out


def dual_sum(n: int, l: int, i: int, j: int) -> Fraction:
    """sum_{k=l}^{n-1} f_kl(a_i) f_kl(a_j) W_l(a_i) / c_kl at lambda = n."""
    acc = Fraction(0)
    ai, aj = n - 2 * i + 1, n - 2 * j + 1
    w = weight(l).evaluate(ai, n)
    for k in range(l, n):
        c = c_norm(k, l).evaluate(n)
        if c == 0:
            raise DegenerateNorm("degenerate norm")
        p = f(k, l)
        acc += p.evaluate(ai, n) * p.evaluate(aj, n) * w / c
    return acc


def check_dual(n: int, l: int) -> bool:
    if n < 1 or not 0 <= l < n:
        raise ValueError("need 0 <= l < n")
    return all(
        dual_sum(n, l, i, j) == (1 if i == j else 0)
        for i in range(l + 1, n + 1) for j in range(l + 1, n + 1))


def casimir_polynomial(n: int) -> HPoly:
    """Left side of the quadratic Casimir identity at lambda = n, plus H."""
    if n < 1:
        raise ValueError("n must be positive")
    total = HPoly.gen()
    for k in range(n):
        for l in range(k + 1):
            c = c_norm(k, l).evaluate(n)
            if c == 0:
                raise DegenerateNorm("degenerate norm")
            p = f(k, l).at_lambda(n)
            term = p * p * weight(l).at_lambda(n)
            total = total + term.scale((1 if l == 0 else 2) / c)
        total = total - Fraction(2 * k + 1, n)
    return total


def check_casimir(n: int) -> bool:
    return algebra.pn_reduce(casimir_polynomial(n), n).is_zero()


def check_routes(k: int, l: int) -> bool:
    a = f_ad(k, l).poly
    return a == f_nabla(k, l).poly == f_hahn(k, l).poly


def check_mirror(k: int, l: int) -> bool:
    return f_ad(k, -l).poly == f_ad(k, l).poly.scale(mirror_factor(k, l))


def check_eigen(k: int, l: int) -> bool:
    """X^l f_kl is an Omega eigenvector with eigenvalue 2k(k+1)."""
    u = _ad_chain(k)[k - l]
    return algebra.casimir_apply(u) == u.scale(2 * k * (k + 1))


# --- the conjecture explorer -------------------------------------------------

def hahn_value(k: int, l: int, lam, h):
    """f_kl(h) at a numeric lambda via the terminating 3F2 sum.

    Works for any field elements (Fraction, mpf).  Requires the lower
    parameter (l + 1 - lam)_i to be nonzero.
    """
    z = (1 - lam - h) / 2
    term = 1
    total = 1
    for i in range(k - l):
        den = (l + 1 + i) * (l + 1 - lam + i) * (i + 1)
        term = term * (l - k + i) * (l + k + 1 + i) * (z + i) / den
        total = total + term
    for m in range(l + 1, k + 1):
        total = total * m * (lam - m)
    return total


def norm_value(k: int, l: int, lam, include_lambda: bool = True):
    pre = _norm_prefactor(k, l)
    out = lam if include_lambda else 1
    for j in range(1, k + 1):
        out = out * (lam * lam - j * j)
    if isinstance(out, (int, Fraction)):
        return pre * out
    return out * pre.numerator / pre.denominator


@dataclass
class ResidualRow:
    lam: object
    l: int
    i: int
    j: int
    k_max: int
    partial_sum: object
    target: object
    residual: object


@dataclass
class ResidualTable:
    """Partial sums of a dual-orthogonality identity against its target."""

    lam: object
    identity: str = "dual"
    normalization: str = WITH_LAMBDA
    precision: int | None = None
    rows: list = field(default_factory=list)

    HEADER = ("lambda", "l", "i", "j", "k_max", "partial_sum", "target", "residual")

    def sort(self):
        self.rows.sort(key=lambda r: (r.k_max, r.l, r.i, r.j))

    def fmt(self, x) -> str:
        if isinstance(x, int):
            return str(x)
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        return mpmath.nstr(x, self.precision or 15)

    def as_records(self):
        return [
            [self.fmt(r.lam), str(r.l), str(r.i), str(r.j), str(r.k_max),
             self.fmt(r.partial_sum), self.fmt(r.target), self.fmt(r.residual)]
            for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.HEADER)
        w.writerows(self.as_records())
        return buf.getvalue()


def _parse_lambda(lam, precision):
    if precision is None:
        if isinstance(lam, (int, Fraction)):
            return Fraction(lam)
        if isinstance(lam, str):
            return Fraction(lam)
        raise TypeError("exact scans need an int, Fraction or 'p/q' lambda")
    if isinstance(lam, Fraction):
        return mpmath.mpf(lam.numerator) / lam.denominator
    return mpmath.mpf(lam)


def conjecture_scan(lam, l: int = 0, index_set=None, k_max_schedule=(5, 10, 20, 40),
                    normalization: str = WITH_LAMBDA, precision: int | None = None,
                    identity: str = "dual") -> ResidualTable:
    """Partial sums of the infinite dual-orthogonality identities.

    ``identity="dual"``: S_K(i, j) = sum_{k=l}^K f_kl(a_i) f_kl(a_j) W_l(a_i)/c_kl
    against delta_ij, for (i, j) in ``index_set`` (all indices > l).

    ``identity="casimir"``: S_K(i) = sum_{k=0}^K (f_k0(a_i)^2/c_k0
    + 2 sum_{l'=1}^k f_kl'(a_i)^2 W_l'(a_i)/c_kl' - (2k+1)/lambda) against
    -a_i; rows carry j = i and l = 0.

    Exact when ``precision`` is None, otherwise mpmath at that many digits.
    """
    if normalization not in (WITH_LAMBDA, WITHOUT_LAMBDA):
        raise ValueError(f"unknown normalization {normalization!r}")
    if identity not in ("dual", "casimir"):
        raise ValueError(f"unknown identity {identity!r}")
    if l < 0:
        raise ValueError("l must be nonnegative")
    schedule = sorted(set(int(k) for k in k_max_schedule))
    if not schedule or schedule[0] < 0:
        raise ValueError("k_max schedule must be nonempty and nonnegative")
    if identity == "casimir":
        l = 0
    if index_set is None:
        index_set = [(i, j) for i in range(l + 1, l + 4) for j in range(l + 1, l + 4)]
    index_set = sorted(set((int(i), int(j)) for i, j in index_set))
    for i, j in index_set:
        if i <= l or j <= l:
            raise ValueError("indices must exceed l")
    if identity == "casimir":
        index_set = sorted(set((i, i) for i, _ in index_set))

    ctx = mpmath.workdps(precision) if precision else nullcontext()
    with ctx:
        x = _parse_lambda(lam, precision)
        include = normalization == WITH_LAMBDA
        table = ResidualTable(lam=x, identity=identity, normalization=normalization,
                              precision=precision)
        top = schedule[-1]
        if identity == "dual":
            for i, j in index_set:
                ai, aj = x - 2 * i + 1, x - 2 * j + 1
                w = _weight_value(l, i, x)
                acc = 0
                target = 1 if i == j else 0
                for k in range(l, top + 1):
                    c = norm_value(k, l, x, include)
                    if c == 0:
                        raise DegenerateNorm("degenerate norm")
                    acc = acc + hahn_value(k, l, x, ai) * hahn_value(k, l, x, aj) * w / c
                    if k in schedule:
                        table.rows.append(ResidualRow(x, l, i, j, k, acc, target,
                                                      abs(acc - target)))
                for k in schedule:
                    if k < l:
                        table.rows.append(ResidualRow(x, l, i, j, k, 0, target,
                                                      abs(0 - target)))
        else:
            for i, _ in index_set:
                ai = x - 2 * i + 1
                acc = 0
                target = -ai
                for k in range(top + 1):
                    for lp in range(k + 1):
                        c = norm_value(k, lp, x, include)
                        if c == 0:
                            raise DegenerateNorm("degenerate norm")
                        v = hahn_value(k, lp, x, ai)
                        acc = acc + (1 if lp == 0 else 2) * v * v * _weight_value(lp, i, x) / c
                    acc = acc - (2 * k + 1) / x
                    if k in schedule:
                        table.rows.append(ResidualRow(x, 0, i, i, k, acc, target,
                                                      abs(acc - target)))
        table.sort()
        return table
