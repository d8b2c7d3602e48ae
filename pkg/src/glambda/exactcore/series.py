"""Truncated formal power series in t over Q(lambda)."""

from __future__ import annotations

from math import factorial

from .scalar import LambdaScalar

DEFAULT_ORDER = 24

_ZERO = LambdaScalar.const(0)
_ONE = LambdaScalar.const(1)


class NonUnitSeries(ArithmeticError):
    pass


class TruncatedSeries:
    """Coefficients of t^0 .. t^order; everything beyond is discarded."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [LambdaScalar.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        coeffs = coeffs[: order + 1] + [_ZERO] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls([], order)

    @classmethod
    def one(cls, order=DEFAULT_ORDER):
        return cls([_ONE], order)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + TruncatedSeries([other], self.order)
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = LambdaScalar.coerce(other)
            return TruncatedSeries([a * c for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = [_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order + 1 if zero)."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return self.order + 1

    def reciprocal(self) -> "TruncatedSeries":
        a0 = self.coeffs[0]
        if not a0:
            raise NonUnitSeries("non-unit series")
        inv0 = a0.inverse()
        out = [inv0]
        for m in range(1, self.order + 1):
            acc = _ZERO
            for j in range(1, m + 1):
                a = self.coeffs[j]
                if a:
                    acc = acc + a * out[m - j]
            out.append(-acc * inv0)
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other):
        """Quotient, cancelling a common power of t first.

        If the divisor has valuation v > 0 the numerator must vanish to the
        same order and the result has order ``self.order - v``.
        """
        if not isinstance(other, TruncatedSeries):
            c = LambdaScalar.coerce(other).inverse()
            return self * c
        self._check(other)
        v = other.valuation()
        if v > other.order:
            raise NonUnitSeries("non-unit series")
        if v:
            if any(self.coeffs[j] for j in range(v)):
                raise NonUnitSeries("non-unit series")
            num = self.drop_low(v)
            den = other.drop_low(v)
        else:
            num, den = self, other
        return num * den.reciprocal()

    def drop_low(self, v: int) -> "TruncatedSeries":
        """Divide by t^v, discarding the v lowest coefficients."""
        return TruncatedSeries(self.coeffs[v:], self.order - v)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def derivative(self) -> "TruncatedSeries":
        return TruncatedSeries(
            [self.coeffs[j] * j for j in range(1, self.order + 1)], self.order - 1)

    def map_coeffs(self, fn) -> "TruncatedSeries":
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order)

    def at_lambda(self, x) -> "TruncatedSeries":
        return self.map_coeffs(lambda c: c.at(x))

    def moments(self):
        """Recover theta(H^m) = m! * coefficient of t^m."""
        return [c * factorial(m) for m, c in enumerate(self.coeffs)]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:4])
        more = ", ..." if self.order >= 4 else ""
        return f"TruncatedSeries([{shown}{more}], order={self.order})"


def exp_linear(c, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """e^{c t}."""
    c = LambdaScalar.coerce(c)
    out = [_ONE]
    for j in range(1, order + 1):
        out.append(out[-1] * c / j)
    return TruncatedSeries(out, order)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    return a.reciprocal()


def one_minus_exp_minus_2t(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """1 - e^{-2t}, the denominator of every weight generating function."""
    return TruncatedSeries.one(order) - exp_linear(-2, order)
