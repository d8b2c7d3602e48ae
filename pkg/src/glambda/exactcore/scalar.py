"""The field Q(lambda) of rational functions in one symbol.

Polynomials in lambda are stored as tuples of ``Fraction`` coefficients,
lowest degree first, with no trailing zeros (the zero polynomial is ``()``).
A :class:`LambdaScalar` is a reduced quotient of two such tuples whose
denominator is monic, so equal field elements have identical storage.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

ONE: tuple = (Fraction(1),)


class PoleError(ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


# --- dense polynomial helpers over Q ---------------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _psub(a, b):
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _pmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return _pscale(b, a[0])
    if len(b) == 1:
        return _pscale(a, b[0])
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pscale(a, r):
    if not r:
        return ()
    return tuple(x * r for x in a)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(rem) <= db:
        return (), _trim(rem)
    quo = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        q = rem[k + db] / lead
        quo[k] = q
        if q:
            for j, y in enumerate(b):
                rem[k + j] -= q * y
    return _trim(quo), _trim(rem[:db])


def _monic(a):
    if not a or a[-1] == 1:
        return a
    lead = a[-1]
    return tuple(x / lead for x in a)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _monic(a)


def _peval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _fmt_poly(c, var):
    if not c:
        return "0"
    parts = []
    for d in range(len(c) - 1, -1, -1):
        x = c[d]
        if not x:
            continue
        sign = "-" if x < 0 else "+"
        mag = abs(x)
        if d == 0:
            body = str(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


# --- the field --------------------------------------------------------------

class LambdaScalar:
    """An element of Q(lambda) in canonical reduced form."""

    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator=(), denominator=ONE, *, _canonical=False):
        num = _trim(_as_fraction(x) for x in numerator)
        den = _trim(_as_fraction(x) for x in denominator)
        if not den:
            raise ZeroDivisionError("zero denominator in LambdaScalar")
        if not _canonical:
            if not num:
                den = ONE
            elif den != ONE:
                g = _pgcd(num, den)
                if g != ONE:
                    num = _pdivmod(num, g)[0]
                    den = _pdivmod(den, g)[0]
                lead = den[-1]
                if lead != 1:
                    num = tuple(x / lead for x in num)
                    den = tuple(x / lead for x in den)
        self.numerator = num
        self.denominator = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den=ONE):
        obj = cls.__new__(cls)
        obj.numerator = num
        obj.denominator = den
        obj._hash = None
        return obj

    @classmethod
    def const(cls, x) -> "LambdaScalar":
        x = _as_fraction(x)
        return cls._raw((x,) if x else ())

    @classmethod
    def lam(cls) -> "LambdaScalar":
        """The transcendental generator lambda."""
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def poly(cls, coeffs) -> "LambdaScalar":
        """Polynomial in lambda from coefficients, lowest degree first."""
        return cls._raw(_trim(_as_fraction(x) for x in coeffs))

    # -- predicates
    def is_zero(self) -> bool:
        return not self.numerator

    def is_polynomial(self) -> bool:
        return self.denominator == ONE

    def is_constant(self) -> bool:
        return self.denominator == ONE and len(self.numerator) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on lambda")
        return self.numerator[0] if self.numerator else Fraction(0)

    def degree(self) -> int:
        """Degree of the numerator minus degree of the denominator."""
        if not self.numerator:
            return -1
        return len(self.numerator) - len(self.denominator)

    def __bool__(self):
        return bool(self.numerator)

    # -- coercion
    @staticmethod
    def coerce(x) -> "LambdaScalar":
        if isinstance(x, LambdaScalar):
            return x
        return LambdaScalar.const(x)

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, LambdaScalar):
            try:
                other = LambdaScalar.const(other)
            except TypeError:
                return NotImplemented
        if self.denominator == ONE and other.denominator == ONE:
            return LambdaScalar._raw(_padd(self.numerator, other.numerator))
        if not other.numerator:
            return self
        if not self.numerator:
            return other
        if self.denominator == other.denominator:
            return LambdaScalar(_padd(self.numerator, other.numerator), self.denominator)
        num = _padd(_pmul(self.numerator, other.denominator),
                    _pmul(other.numerator, self.denominator))
        return LambdaScalar(num, _pmul(self.denominator, other.denominator))

    __radd__ = __add__

    def __neg__(self):
        return LambdaScalar._raw(tuple(-x for x in self.numerator), self.denominator)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, LambdaScalar):
            try:
                other = LambdaScalar.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LambdaScalar):
            try:
                other = LambdaScalar.const(other)
            except TypeError:
                return NotImplemented
        if self.denominator == ONE and other.denominator == ONE:
            return LambdaScalar._raw(_pmul(self.numerator, other.numerator))
        if not self.numerator or not other.numerator:
            return LambdaScalar._raw(())
        return LambdaScalar(_pmul(self.numerator, other.numerator),
                            _pmul(self.denominator, other.denominator))

    __rmul__ = __mul__

    def inverse(self) -> "LambdaScalar":
        if not self.numerator:
            raise ZeroDivisionError("inverse of zero in Q(lambda)")
        num, den = self.denominator, self.numerator
        lead = den[-1]
        if lead != 1:
            num = tuple(x / lead for x in num)
            den = tuple(x / lead for x in den)
        return LambdaScalar._raw(num, den)

    def __truediv__(self, other):
        if not isinstance(other, LambdaScalar):
            try:
                other = LambdaScalar.const(other)
            except TypeError:
                return NotImplemented
        if other.is_constant():
            c = other.constant_value()
            if not c:
                raise ZeroDivisionError("division by zero in Q(lambda)")
            return LambdaScalar._raw(tuple(x / c for x in self.numerator), self.denominator)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return LambdaScalar.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = LambdaScalar.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparison
    def __eq__(self, other):
        if not isinstance(other, LambdaScalar):
            try:
                other = LambdaScalar.const(other)
            except TypeError:
                return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def sort_key(self):
        return (len(self.denominator), self.denominator, len(self.numerator), self.numerator)

    # -- evaluation
    def evaluate(self, x):
        """Substitute lambda = x (int, Fraction, or any ring element)."""
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            d = _peval(self.denominator, x)
            if d == 0:
                raise PoleError(f"pole at lambda = {x}")
            return _peval(self.numerator, x) / d
        d = _peval(self.denominator, x)
        return _peval(self.numerator, x) / d

    def at(self, x) -> "LambdaScalar":
        """Specialize lambda = x, returning a constant LambdaScalar."""
        return LambdaScalar.const(self.evaluate(x))

    def derivative(self) -> "LambdaScalar":
        def d(p):
            return _trim(i * p[i] for i in range(1, len(p)))
        num = _psub(_pmul(d(self.numerator), self.denominator),
                    _pmul(self.numerator, d(self.denominator)))
        return LambdaScalar(num, _pmul(self.denominator, self.denominator))

    def is_odd(self) -> bool:
        """True iff this is a polynomial in lambda with only odd powers."""
        return self.is_polynomial() and all(
            c == 0 for i, c in enumerate(self.numerator) if i % 2 == 0)

    # -- display
    def __str__(self):
        num = _fmt_poly(self.numerator, "λ")
        if self.denominator == ONE:
            return num
        den = _fmt_poly(self.denominator, "λ")
        if len(self.numerator) > 1:
            num = f"({num})"
        return f"{num}/({den})"

    def __repr__(self):
        return f"LambdaScalar({self})"


LAMBDA = LambdaScalar.lam()
