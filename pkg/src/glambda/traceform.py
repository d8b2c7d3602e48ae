"""The invariant trace on gl(lambda) and the form <u, v> = tr(uv).

On the Cartan part the trace is the polynomial-in-lambda extension of
``f -> sum_{i=1}^n f(n - 2i + 1)``.  Moments ``tr(H^m)`` are obtained by
exact interpolation through integer sizes n = 1 .. m + 2.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from threading import Lock

from .algebra import AlgebraElement, mul
from .exactcore import (
    DEFAULT_ORDER, HPoly, LAMBDA, LambdaScalar, TruncatedSeries, exp_linear,
)


def _interpolate(xs, ys):
    """Newton interpolation over Q; returns coefficients lowest degree first."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)]
    for k in range(n - 1, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= c * xs[k]
        nxt[0] += coef[k]
        poly = nxt
    return poly


def power_sum(m: int, n: int) -> int:
    """sum_{i=1}^n (n - 2i + 1)^m."""
    return sum((n - 2 * i + 1) ** m for i in range(1, n + 1))


class TraceTable:
    """Lazily extended table of tr(H^m) as odd polynomials in lambda."""

    def __init__(self):
        self.moments: list[LambdaScalar] = []
        self._lock = Lock()

    def moment(self, m: int) -> LambdaScalar:
        if m >= len(self.moments):
            with self._lock:
                while len(self.moments) <= m:
                    self.moments.append(self._compute(len(self.moments)))
        return self.moments[m]

    @staticmethod
    def _compute(m: int) -> LambdaScalar:
        xs = list(range(1, m + 3))
        ys = [power_sum(m, n) for n in xs]
        val = LambdaScalar.poly(_interpolate(xs, ys))
        if not val.is_odd():
            raise ArithmeticError(f"tr(H^{m}) interpolant is not odd in lambda")
        if m % 2 and val:
            raise ArithmeticError(f"tr(H^{m}) should vanish")
        if m % 2 == 0 and val.degree() != m + 1:
            raise ArithmeticError(f"tr(H^{m}) has wrong degree")
        return val


TRACE_TABLE = TraceTable()


def trace_h(f: HPoly, per_unit: bool = False) -> LambdaScalar:
    """tr f(H).  With ``per_unit`` the trace is divided by lambda (tr(1) = 1)."""
    acc = LambdaScalar.const(0)
    for m, c in enumerate(HPoly.coerce(f).coeffs):
        if c and m % 2 == 0:
            acc = acc + c * TRACE_TABLE.moment(m)
    if per_unit:
        acc = acc / LAMBDA
    return acc


def trace(u: AlgebraElement, per_unit: bool = False) -> LambdaScalar:
    """Trace of an algebra element; only the degree-0 part contributes."""
    return trace_h(u[0], per_unit)


def form(u: AlgebraElement, v: AlgebraElement, per_unit: bool = False) -> LambdaScalar:
    """<u, v> = tr(uv)."""
    return trace(mul(u, v), per_unit)


def trace_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(e^{lambda t} - e^{-lambda t}) / (e^t - e^{-t}) through t^order."""
    if order < 1:
        raise ValueError("order must be at least 1")
    n = order + 1
    num = exp_linear(LAMBDA, n) - exp_linear(-LAMBDA, n)
    den = exp_linear(1, n) - exp_linear(-1, n)
    return num / den


def trace_zero_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """2t / (e^t - e^{-t}): the lambda = 0 trace, normalized by tr(1) = 1."""
    if order < 1:
        raise ValueError("order must be at least 1")
    n = order + 1
    num = TruncatedSeries([0, 2], n)
    den = exp_linear(1, n) - exp_linear(-1, n)
    return num / den


def moment_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """sum_m tr(H^m) t^m / m! built from the interpolated table."""
    return TruncatedSeries(
        [TRACE_TABLE.moment(m) / factorial(m) for m in range(order + 1)], order)


def limit_over_lambda(x: LambdaScalar) -> LambdaScalar:
    """lim_{lambda -> 0} x / lambda for x a polynomial vanishing at 0."""
    q = x / LAMBDA
    return q.at(0)
