"""Normal-form arithmetic in A_lambda = U(sl(2))/(Omega - (lambda^2 - 1)/2).

Every element is stored as a finite sum over integer degrees d of

* ``X^d f_d(H)``  for d > 0,
* ``f_0(H)``      for d = 0,
* ``f_d(H) Y^-d`` for d < 0,

using the relations ``f(H) X = X f(H+2)``, ``Y f(H) = f(H+2) Y``,
``XY = (lambda^2 - (H-1)^2)/4`` and ``YX = (lambda^2 - (H+1)^2)/4``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exactcore import HPoly, LambdaScalar, PoleError, t_poly


class AlgebraElement:
    """Finitely supported graded element of A_lambda in normal form."""

    __slots__ = ("components",)

    def __init__(self, components=None):
        comps = {}
        for d, f in (components or {}).items():
            f = HPoly.coerce(f)
            if f:
                comps[int(d)] = f
        self.components = comps

    @classmethod
    def _raw(cls, comps):
        obj = cls.__new__(cls)
        obj.components = comps
        return obj

    @classmethod
    def scalar(cls, c) -> "AlgebraElement":
        return cls({0: HPoly.const(c)})

    @classmethod
    def of_h(cls, f: HPoly) -> "AlgebraElement":
        return cls({0: f})

    @classmethod
    def term(cls, d: int, f) -> "AlgebraElement":
        return cls({d: f})

    def __getitem__(self, d: int) -> HPoly:
        return self.components.get(d, HPoly())

    def degrees(self):
        return sorted(self.components)

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self):
        return bool(self.components)

    def is_homogeneous(self) -> bool:
        return len(self.components) <= 1

    # -- linear structure
    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                other = AlgebraElement.scalar(other)
            except TypeError:
                return NotImplemented
        out = dict(self.components)
        for d, f in other.components.items():
            g = out[d] + f if d in out else f
            if g:
                out[d] = g
            else:
                out.pop(d, None)
        return AlgebraElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw({d: -f for d, f in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "AlgebraElement":
        c = LambdaScalar.coerce(c)
        if not c:
            return AlgebraElement()
        return AlgebraElement._raw({d: f.scale(c) for d, f in self.components.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, HPoly):
            return mul(self, AlgebraElement.of_h(other))
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, HPoly):
            return mul(AlgebraElement.of_h(other), self)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = AlgebraElement.scalar(1)
        for _ in range(e):
            out = mul(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                other = AlgebraElement.scalar(other)
            except TypeError:
                return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(tuple(sorted(self.components.items())))

    def __str__(self):
        if not self.components:
            return "0"
        parts = []
        for d in sorted(self.components, reverse=True):
            f = self.components[d]
            if d > 0:
                mono = "X" if d == 1 else f"X^{d}"
                parts.append(mono if f == 1 else f"{mono}*({f})")
            elif d == 0:
                parts.append(f"({f})")
            else:
                mono = "Y" if d == -1 else f"Y^{-d}"
                parts.append(mono if f == 1 else f"({f})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgebraElement({self})"


X = AlgebraElement({1: 1})
Y = AlgebraElement({-1: 1})
H = AlgebraElement({0: HPoly.gen()})
ONE = AlgebraElement.scalar(1)


@lru_cache(maxsize=None)
def _xy_power(m: int) -> HPoly:
    """X^m Y^m = T_0(H) T_0(H-2) ... T_0(H-2m+2) = T_0 T_{-1} ... T_{1-m}."""
    out = HPoly.const(1)
    for j in range(m):
        out = out * t_poly(-j)
    return out


@lru_cache(maxsize=None)
def _yx_power(m: int) -> HPoly:
    """Y^m X^m = T_1(H) ... T_m(H)."""
    out = HPoly.const(1)
    for j in range(1, m + 1):
        out = out * t_poly(j)
    return out


def _mul_terms(a: int, f: HPoly, b: int, g: HPoly):
    """Product of two homogeneous terms, returned as (degree, poly)."""
    if a >= 0 and b >= 0:
        # X^a f . X^b g = X^{a+b} f(H+2b) g
        return a + b, f.shift(2 * b) * g
    if a <= 0 and b <= 0:
        # f Y^m . g Y^p = f g(H+2m) Y^{m+p}
        return a + b, f * g.shift(-2 * a)
    if a > 0:
        # X^a (f g) Y^m
        m = -b
        h = f * g
        if a >= m:
            return a - m, h.shift(-2 * m) * _xy_power(m)
        return a - m, h.shift(-2 * a) * _xy_power(a)
    # f Y^m . X^b g
    m = -a
    if m >= b:
        # f Y^{m-b} (Y^b X^b) g = f (Q_b g)(H + 2(m-b)) Y^{m-b}
        return a + b, f * (_yx_power(b) * g).shift(2 * (m - b))
    # f (Y^m X^m) X^{b-m} g = X^{b-m} (f Q_m)(H + 2(b-m)) g
    return a + b, (f * _yx_power(m)).shift(2 * (b - m)) * g


def mul(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Associative product in normal form."""
    out: dict[int, HPoly] = {}
    for a, f in u.components.items():
        for b, g in v.components.items():
            d, h = _mul_terms(a, f, b, g)
            out[d] = out[d] + h if d in out else h
    return AlgebraElement._raw({d: h for d, h in out.items() if h})


def bracket(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    return mul(u, v) - mul(v, u)


def ad_pow(y: AlgebraElement, p: int, x: AlgebraElement) -> AlgebraElement:
    """(ad y)^p (x)."""
    if p < 0:
        raise ValueError("ad power must be nonnegative")
    for _ in range(p):
        x = bracket(y, x)
    return x


def casimir_apply(u: AlgebraElement) -> AlgebraElement:
    """Adjoint action of Omega = 2YX + H^2/2 + H."""
    adh = bracket(H, u)
    return (bracket(Y, bracket(X, u)).scale(2)
            + bracket(H, adh).scale(Fraction(1, 2)) + adh)


def grading_holds(u: AlgebraElement) -> bool:
    """Each degree-d component is an ad-H eigenvector with eigenvalue 2d."""
    return all(
        bracket(H, AlgebraElement.term(d, f)) == AlgebraElement.term(d, f.scale(2 * d))
        for d, f in u.components.items())


# --- integer-lambda matrix oracle ------------------------------------------

class MatrixRealization:
    """n x n matrix of exact rationals (numpy object array of Fraction)."""

    __slots__ = ("size", "entries")

    def __init__(self, entries):
        arr = np.array(entries, dtype=object)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError("expected a nonempty square matrix")
        self.entries = arr
        self.size = arr.shape[0]

    @classmethod
    def zeros(cls, n):
        return cls([[Fraction(0)] * n for _ in range(n)])

    def __matmul__(self, other):
        return MatrixRealization(self.entries.dot(other.entries))

    def __add__(self, other):
        return MatrixRealization(self.entries + other.entries)

    def __sub__(self, other):
        return MatrixRealization(self.entries - other.entries)

    def trace(self) -> Fraction:
        return sum((self.entries[i, i] for i in range(self.size)), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries.flat)

    def __eq__(self, other):
        if not isinstance(other, MatrixRealization):
            return NotImplemented
        return self.size == other.size and all(
            a == b for a, b in zip(self.entries.flat, other.entries.flat))

    def __repr__(self):
        rows = ["[" + ", ".join(str(x) for x in row) + "]" for row in self.entries]
        return "MatrixRealization([" + ", ".join(rows) + "])"


def _principal(n: int):
    x = MatrixRealization.zeros(n)
    y = MatrixRealization.zeros(n)
    for i in range(1, n):
        x.entries[i - 1, i] = Fraction(i * (n - i))
        y.entries[i, i - 1] = Fraction(1)
    return x, y


def specialize(u: AlgebraElement, n: int) -> MatrixRealization:
    """Image of u in gl(n) under the principal embedding with lambda = n."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    xm, ym = _principal(n)
    out = MatrixRealization.zeros(n)
    for d, f in u.components.items():
        try:
            diag = [f.evaluate(n - 2 * i + 1, n) for i in range(1, n + 1)]
        except PoleError as exc:
            raise PoleError("pole at integer lambda") from exc
        fm = MatrixRealization.zeros(n)
        for i, val in enumerate(diag):
            fm.entries[i, i] = Fraction(val)
        if d > 0:
            term = fm
            for _ in range(d):
                term = xm @ term
        elif d < 0:
            term = fm
            for _ in range(-d):
                term = term @ ym
        else:
            term = fm
        out = out + term
    return out


def p_n(n: int) -> HPoly:
    """P_n(H) = prod_{i=1}^n (H - n + 2i - 1)."""
    out = HPoly.const(1)
    for i in range(1, n + 1):
        out = out * HPoly((2 * i - 1 - n, 1))
    return out


def pn_reduce(f: HPoly, n: int) -> HPoly:
    """Remainder of a lambda-free polynomial modulo P_n(H)."""
    if not f.is_lambda_free():
        raise ValueError("specialize lambda before reducing modulo P_n")
    return f.divmod(p_n(n))[1]
