"""Quasi-polynomials sum_i p_i(t) e^{s_i t} with exact exponents."""

from __future__ import annotations

from .poly import HPoly
from .scalar import LambdaScalar
from .series import DEFAULT_ORDER, TruncatedSeries, exp_linear


def _tpoly(p) -> HPoly:
    if isinstance(p, HPoly):
        return p.with_var("t")
    return HPoly.const(p, "t")


class QuasiPolynomial:
    """Finite sum of p(t) e^{s t}; exponents distinct, polynomials nonzero."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc: dict[LambdaScalar, HPoly] = {}
        for s, p in terms:
            s = LambdaScalar.coerce(s)
            p = _tpoly(p)
            acc[s] = acc[s] + p if s in acc else p
        items = [(s, p) for s, p in acc.items() if p]
        items.sort(key=lambda sp: sp[0].sort_key())
        self.terms = tuple(items)

    @classmethod
    def exp(cls, s, coeff=1) -> "QuasiPolynomial":
        """coeff * e^{s t}."""
        return cls([(s, coeff)])

    @classmethod
    def zero(cls):
        return cls()

    def exponents(self):
        return [s for s, _ in self.terms]

    def coefficient(self, s) -> HPoly:
        s = LambdaScalar.coerce(s)
        for e, p in self.terms:
            if e == s:
                return p
        return HPoly((), "t")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        return QuasiPolynomial(self.terms + other.terms)

    def __neg__(self):
        return QuasiPolynomial([(s, -p) for s, p in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QuasiPolynomial):
            return QuasiPolynomial(
                [(s1 + s2, p1 * p2) for s1, p1 in self.terms for s2, p2 in other.terms])
        if isinstance(other, HPoly):
            other = _tpoly(other)
            return QuasiPolynomial([(s, p * other) for s, p in self.terms])
        c = LambdaScalar.coerce(other)
        return QuasiPolynomial([(s, p.scale(c)) for s, p in self.terms])

    __rmul__ = __mul__

    def scale_exp(self, s) -> "QuasiPolynomial":
        """Multiply by e^{s t}."""
        s = LambdaScalar.coerce(s)
        return QuasiPolynomial([(e + s, p) for e, p in self.terms])

    def derive(self) -> "QuasiPolynomial":
        """(p e^{st})' = (p' + s p) e^{st}."""
        return QuasiPolynomial([(s, p.derivative() + p.scale(s)) for s, p in self.terms])

    def apply_operator(self, op: HPoly) -> "QuasiPolynomial":
        """Apply op(d/dt), op a polynomial with constant coefficients."""
        out = QuasiPolynomial()
        power = self
        for c in op.coeffs:
            if c:
                out = out + power * c
            power = power.derive()
        return out

    def value_at_zero(self) -> LambdaScalar:
        acc = LambdaScalar.const(0)
        for _, p in self.terms:
            acc = acc + p[0]
        return acc

    def to_series(self, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        out = TruncatedSeries.zero(order)
        for s, p in self.terms:
            out = out + exp_linear(s, order) * TruncatedSeries(p.coeffs[: order + 1], order)
        return out

    def at_lambda(self, x) -> "QuasiPolynomial":
        return QuasiPolynomial([(s.at(x), p.at_lambda(x)) for s, p in self.terms])

    def __eq__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for s, p in self.terms:
            ps = str(p)
            if ps != "1":
                ps = f"({ps})*"
            else:
                ps = ""
            parts.append(f"{ps}e^(({s})t)")
        return " + ".join(parts)

    def __repr__(self):
        return f"QuasiPolynomial({self})"


def qp_add(a: QuasiPolynomial, b: QuasiPolynomial) -> QuasiPolynomial:
    return a + b


def qp_scale_exp(a: QuasiPolynomial, s) -> QuasiPolynomial:
    return a.scale_exp(s)


def qp_derive(a: QuasiPolynomial) -> QuasiPolynomial:
    return a.derive()


def qp_to_series(a: QuasiPolynomial, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return a.to_series(order)


def annihilator(r: QuasiPolynomial) -> HPoly:
    """Minimal constant-coefficient operator killing r, as a polynomial in x = d/dt."""
    out = HPoly.const(1, "x")
    for s, p in r.terms:
        root = HPoly((-s, 1), "x")
        out = out * root ** (p.degree() + 1)
    return out


def root_multiplicity(op: HPoly, s) -> int:
    """Multiplicity of s as a root of op."""
    s = LambdaScalar.coerce(s)
    if op.is_zero():
        raise ValueError("zero operator")
    m = 0
    q = op
    while q.degree() >= 0 and not q(s):
        q = q.derivative()
        m += 1
    return m


__all__ = [
    "QuasiPolynomial", "qp_add", "qp_scale_exp", "qp_derive", "qp_to_series",
    "annihilator", "root_multiplicity",
]
