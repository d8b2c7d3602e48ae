"""Highest weights of quasi-finite gl(lambda)-modules.

A weight theta on C[H] is encoded by F(t) = sum theta(H^k) t^k / k!.  For
quasi-finite modules F = R(t) / (1 - e^{-2t}) with R a quasi-polynomial
vanishing at t = 0.  This module builds such series, checks the
differential equation that characterizes them, and verifies the central
correction of the gl(infinity) embedding on a finite window of indices.
"""

from __future__ import annotations

import json
import random
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from .exactcore import (
    DEFAULT_ORDER, HPoly, LAMBDA, LambdaScalar, QuasiPolynomial, TruncatedSeries,
    annihilator, one_minus_exp_minus_2t, root_multiplicity,
)
from .traceform import trace_series, trace_zero_series


class WeightError(ValueError):
    pass


class WindowError(ValueError):
    pass


@dataclass(frozen=True)
class WeightSeries:
    R: QuasiPolynomial
    F: TruncatedSeries

    def consistent(self) -> bool:
        """F (1 - e^{-2t}) equals the expansion of R through the order of F."""
        n = self.F.order
        return self.F * one_minus_exp_minus_2t(n) == self.R.to_series(n)


def parabolic_generator(p: HPoly, k: int) -> HPoly:
    """P(H) P(H+2) ... P(H+2k-2)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = p
    for j in range(1, k):
        out = out * p.shift(2 * j)
    return out


def weight_from_qp(r: QuasiPolynomial, order: int = DEFAULT_ORDER) -> WeightSeries:
    """F = R / (1 - e^{-2t}) through t^order."""
    if r.value_at_zero():
        raise WeightError("nonvanishing at zero")
    n = order + 1
    f = r.to_series(n) / one_minus_exp_minus_2t(n)
    return WeightSeries(r, f)


def t_operator(lam=None) -> HPoly:
    """T(x) = (lambda^2 - (x+1)^2)/4 as a polynomial in x = d/dt."""
    lam = LAMBDA if lam is None else LambdaScalar.coerce(lam)
    x1 = HPoly((1, 1), "x")
    return (HPoly.const(lam * lam, "x") - x1 * x1).scale(Fraction(1, 4))


def check_annihilation(r: QuasiPolynomial, p: HPoly | None = None, lam=None) -> bool:
    """T(d/dt) P(d/dt) R == 0 exactly.  ``lam`` fixes lambda (default symbolic)."""
    op = t_operator(lam)
    if p is not None:
        op = op * p.with_var("x")
    if lam is not None:
        r = r.at_lambda(lam)
    return r.apply_operator(op).is_zero()


def minimal_parabolic(r: QuasiPolynomial, lam=None) -> HPoly:
    """Smallest P with T(d/dt) P(d/dt) R = 0: the annihilator of R with T's roots removed."""
    if lam is not None:
        r = r.at_lambda(lam)
    t_op = t_operator(lam)
    out = HPoly.const(1, "x")
    for s, p in r.terms:
        need = p.degree() + 1 - root_multiplicity(t_op, s)
        for _ in range(max(need, 0)):
            out = out * HPoly((-s, 1), "x")
    return out


def trace_weight(mode: str = "nonzero", order: int = DEFAULT_ORDER) -> WeightSeries:
    """The trace as a highest weight: mode 'nonzero' (tr 1 = lambda) or 'zero' (lambda = 0, tr 1 = 1)."""
    if mode == "nonzero":
        r = QuasiPolynomial([(LAMBDA - 1, 1), (-LAMBDA - 1, -1)])
        ws = weight_from_qp(r, order)
        if ws.F != trace_series(order):
            raise ArithmeticError("trace weight disagrees with the trace series")
        return ws
    if mode == "zero":
        r = QuasiPolynomial([(-1, HPoly((0, 2), "t"))])
        ws = weight_from_qp(r, order)
        if ws.F != trace_zero_series(order):
            raise ArithmeticError("lambda = 0 trace weight disagrees with its series")
        return ws
    raise ValueError(f"unknown mode {mode!r}")


_HW_EXPONENT = {
    # exponent of e^{(...)t} attached to theta_i - theta_{i-1}
    "ii": lambda i, s: LAMBDA - 2 * i - 1,
    "iii": lambda i, s: -LAMBDA - 2 * i - 1,
    "iv": lambda i, s: LAMBDA + 2 * i + 1,
    "v": lambda i, s: 1 - LAMBDA + 2 * i,
    "i": lambda i, s: s - 2 * i,
}


def hw_numerator(kind: str, theta: Mapping, s=None, c=0) -> QuasiPolynomial:
    """Numerator R(t) of the highest-weight series (truncation order m = 0)."""
    if kind not in _HW_EXPONENT:
        raise ValueError(f"unknown kind {kind!r}")
    if not isinstance(theta, Mapping):
        raise WeightError("theta must be a finitely supported mapping i -> value")
    theta = {int(i): LambdaScalar.coerce(v) for i, v in theta.items() if v}
    if kind == "i":
        if s is None:
            raise ValueError("kind i needs the parameter s")
        s = LambdaScalar.coerce(s)
    support = set(theta) | {i + 1 for i in theta}
    terms = []
    zero = LambdaScalar.const(0)
    for i in sorted(support):
        diff = theta.get(i, zero) - theta.get(i - 1, zero)
        if diff:
            terms.append((_HW_EXPONENT[kind](i, s), diff))
    r = QuasiPolynomial(terms)
    c = LambdaScalar.coerce(c)
    if kind == "i" and c:
        r = r - QuasiPolynomial([(s, c), (-LAMBDA - 1, -c)])
    return r


def hw_series(kind: str, theta: Mapping, s=None, c=0, order: int = DEFAULT_ORDER) -> WeightSeries:
    return weight_from_qp(hw_numerator(kind, theta, s, c), order)


def random_theta(rng: random.Random, width: int = 4, spread: int = 3):
    """Random finitely supported weight with small integer coordinates."""
    lo = rng.randint(-spread, spread)
    return {i: rng.randint(-5, 5) for i in range(lo, lo + rng.randint(1, width))}


# --- the gl(infinity) window ---------------------------------------------------

class _Sparse:
    """Sparse square matrix over C(lambda)[s], indexed by window positions."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    def __matmul__(self, other):
        by_row: dict = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                out[key] = out[key] + a * b if key in out else a * b
        return _Sparse(out)

    def __sub__(self, other):
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out[key] - v if key in out else -v
        return _Sparse(out)

    def trace(self):
        acc = HPoly((), "s")
        for (i, j), v in self.entries.items():
            if i == j:
                acc = acc + v
        return acc

    def conjugate_diag(self, d: dict):
        """D M D^{-1} for diagonal D."""
        return _Sparse({(i, j): v.scale(Fraction(d[i]) / d[j])
                        for (i, j), v in self.entries.items()})


@dataclass
class WindowRealization:
    indices: range
    lam: object
    s: object
    X: _Sparse
    H: _Sparse
    Y: _Sparse
    J: _Sparse


def _spoly(x) -> HPoly:
    if isinstance(x, HPoly):
        return x
    return HPoly.const(x, "s")


def build_window(lam=None, s=None, window: int = 14) -> WindowRealization:
    """Triangular-gauge Harish-Chandra module on v_{-N} .. v_N.

    X v_i = u_i v_{i+1}, u_i = (lambda - s - 2i - 1)(lambda + s + 2i + 1)/4,
    Y v_i = v_{i-1}, H v_i = (s + 2i) v_i.  Entries live in Q(lambda)[s];
    ``lam``/``s`` of None keep the symbol.
    """
    lam_ = LAMBDA if lam is None else LambdaScalar.coerce(lam)
    sp = HPoly.gen("s") if s is None else HPoly.const(s, "s")
    idx = range(-window, window + 1)
    xs, hs, ys, js = {}, {}, {}, {}
    for i in idx:
        g = sp + 2 * i
        hs[(i, i)] = g
        js[(i, i)] = _spoly(1 if i <= 0 else -1)
        if i + 1 in idx:
            a = g + 1
            xs[(i + 1, i)] = (HPoly.const(lam_ * lam_, "s") - a * a).scale(Fraction(1, 4))
        if i - 1 in idx:
            ys[(i - 1, i)] = _spoly(1)
    return WindowRealization(idx, lam, s, _Sparse(xs), _Sparse(hs), _Sparse(ys), _Sparse(js))


def cocycle(a: _Sparse, b: _Sparse, j: _Sparse) -> HPoly:
    """tr([J, A] B)."""
    return ((j @ a - a @ j) @ b).trace()


def expected_cocycle(k: int, lam=None, s=None) -> HPoly:
    """T(s) s^k with T(s) = (lambda^2 - (s+1)^2)/4."""
    lam_ = LAMBDA if lam is None else LambdaScalar.coerce(lam)
    sp = HPoly.gen("s") if s is None else HPoly.const(s, "s")
    t = (HPoly.const(lam_ * lam_, "s") - (sp + 1) * (sp + 1)).scale(Fraction(1, 4))
    return t * sp ** k


def correction_series(lam=None, s=None, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(e^{st} - e^{-(lambda+1)t}) / (1 - e^{-2t}); s must be a scalar."""
    lam_ = LAMBDA if lam is None else LambdaScalar.coerce(lam)
    if s is None:
        raise ValueError("the correction series needs a scalar s")
    r = QuasiPolynomial([(s, 1), (-lam_ - 1, -1)])
    return weight_from_qp(r, order).F


def glinf_window(lam=None, s=None, window: int = 14, k_max: int = 10,
                 gauge=None, order: int = DEFAULT_ORDER):
    """Evaluate the gl(infinity) cocycle on images of X and H^k Y.

    Returns one row per k with the cocycle computed from the printed
    J = sum_{i<=0} E_ii - sum_{i>0} E_ii (``cocycle_printed_j``) and the
    normalized value c = -tr([J, A] B)/2 = tr([P, A] B), P = sum_{i>0} E_ii
    (``cocycle``), compared against T(s) s^k.  ``gauge`` is an optional
    mapping i -> nonzero rational used to conjugate X, H, Y.
    """
    if window < k_max + 2:
        raise WindowError("insufficient window")
    w = build_window(lam, s, window)
    xm, hm, ym = w.X, w.H, w.Y
    if gauge is not None:
        xm, hm, ym = (m.conjugate_diag(gauge) for m in (xm, hm, ym))
    rows = []
    b = ym
    for k in range(k_max + 1):
        raw = cocycle(xm, b, w.J)
        value = raw.scale(Fraction(-1, 2))
        want = expected_cocycle(k, lam, s)
        rows.append({
            "lambda": _jsonable(lam), "s": _jsonable(s), "k": k,
            "cocycle": value, "cocycle_printed_j": raw, "expected": want,
            "match": value == want,
        })
        b = hm @ b
    report = {"rows": rows}
    if s is not None:
        report["correction_series"] = correction_series(lam, s, order)
    return report


def random_gauge(rng: random.Random, window: int):
    out = {}
    for i in range(-window, window + 1):
        v = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        out[i] = v if rng.random() < 0.5 else -v
    return out


def _jsonable(x):
    if x is None:
        return "symbolic"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return str(x)


def window_rows_json(report) -> str:
    """Serialize window rows as a JSON list of {lambda, s, k, cocycle, expected, match}."""
    out = []
    for r in report["rows"]:
        out.append({
            "lambda": r["lambda"], "s": r["s"], "k": r["k"],
            "cocycle": str(r["cocycle"]), "expected": str(r["expected"]),
            "match": bool(r["match"]),
        })
    return json.dumps(out, indent=2)


__all__ = [
    "WeightError", "WindowError", "WeightSeries", "WindowRealization",
    "parabolic_generator", "weight_from_qp", "t_operator", "check_annihilation",
    "minimal_parabolic", "annihilator", "trace_weight", "hw_numerator", "hw_series",
    "random_theta", "build_window", "cocycle", "expected_cocycle", "correction_series",
    "glinf_window", "random_gauge", "window_rows_json",
]
