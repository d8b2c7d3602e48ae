"""Dense univariate polynomials over Q(lambda).

The same class serves for polynomials in the Cartan generator H and for
polynomials in the series variable t; ``var`` only affects printing.
"""

from __future__ import annotations

from .scalar import LambdaScalar, LAMBDA

_ZERO = LambdaScalar.const(0)
_ONE = LambdaScalar.const(1)


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class HPoly:
    """Polynomial with LambdaScalar coefficients, index = degree."""

    __slots__ = ("coeffs", "var", "_hash")

    def __init__(self, coeffs=(), var: str = "H"):
        self.coeffs = _trim(LambdaScalar.coerce(c) for c in coeffs)
        self.var = var
        self._hash = None

    @classmethod
    def _raw(cls, coeffs, var="H"):
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.var = var
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c, var="H") -> "HPoly":
        return cls((c,), var)

    @classmethod
    def gen(cls, var="H") -> "HPoly":
        return cls._raw((_ZERO, _ONE), var)

    @classmethod
    def coerce(cls, x, var="H") -> "HPoly":
        if isinstance(x, HPoly):
            return x
        return cls.const(x, var)

    # -- structure
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self) -> LambdaScalar:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __getitem__(self, d: int) -> LambdaScalar:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else _ZERO

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- ring operations
    def __add__(self, other):
        if not isinstance(other, HPoly):
            try:
                other = HPoly.const(other, self.var)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return HPoly._raw(_trim(out), self.var)

    __radd__ = __add__

    def __neg__(self):
        return HPoly._raw(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        if not isinstance(other, HPoly):
            try:
                other = HPoly.const(other, self.var)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, HPoly):
            try:
                c = LambdaScalar.coerce(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return HPoly._raw((), self.var)
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return HPoly._raw(_trim(out), self.var)

    __rmul__ = __mul__

    def scale(self, c) -> "HPoly":
        c = LambdaScalar.coerce(c)
        if not c:
            return HPoly._raw((), self.var)
        return HPoly._raw(tuple(x * c for x in self.coeffs), self.var)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = HPoly.const(1, self.var)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "HPoly"):
        """Euclidean division over Q(lambda): returns (quotient, remainder)."""
        other = HPoly.coerce(other, self.var)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        inv_lead = other.coeffs[-1].inverse()
        if len(rem) <= db:
            return HPoly._raw((), self.var), self
        quo = [_ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] * inv_lead
            quo[k] = q
            if q:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - q * y
        return HPoly._raw(_trim(quo), self.var), HPoly._raw(_trim(rem[:db]), self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    # -- calculus and substitution
    def __call__(self, x):
        """Horner evaluation; x may be a scalar, Fraction, int or HPoly."""
        if isinstance(x, HPoly):
            acc = HPoly._raw((), x.var)
            for c in reversed(self.coeffs):
                acc = acc * x + HPoly._raw((c,) if c else (), x.var)
            return acc
        x = LambdaScalar.coerce(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c) -> "HPoly":
        """f(H + c)."""
        c = LambdaScalar.coerce(c)
        if not c or len(self.coeffs) <= 1:
            return self
        # Horner in the basis (H + c)
        out = []
        for a in reversed(self.coeffs):
            nxt = [_ZERO] * (len(out) + 1)
            for i, x in enumerate(out):
                nxt[i + 1] = nxt[i + 1] + x
                nxt[i] = nxt[i] + x * c
            nxt[0] = nxt[0] + a
            out = nxt
        return HPoly._raw(_trim(out), self.var)

    def derivative(self) -> "HPoly":
        return HPoly._raw(
            _trim(self.coeffs[i] * i for i in range(1, len(self.coeffs))), self.var)

    def map_coeffs(self, fn) -> "HPoly":
        return HPoly(tuple(fn(c) for c in self.coeffs), self.var)

    def at_lambda(self, n) -> "HPoly":
        """Specialize lambda = n in every coefficient."""
        return HPoly(tuple(c.at(n) for c in self.coeffs), self.var)

    def evaluate(self, h, lam):
        """Numeric value at H = h, lambda = lam (exact if both are exact)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * h + c.evaluate(lam)
        return acc

    def is_lambda_free(self) -> bool:
        return all(c.is_constant() for c in self.coeffs)

    def with_var(self, var: str) -> "HPoly":
        return HPoly._raw(self.coeffs, var)

    # -- comparison / display
    def __eq__(self, other):
        if not isinstance(other, HPoly):
            try:
                other = HPoly.const(other, self.var)
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mono = "" if d == 0 else (self.var if d == 1 else f"{self.var}^{d}")
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                if " " in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"HPoly({self})"


H = HPoly.gen("H")


def shift(f: HPoly, c) -> HPoly:
    """Return f(H + c)."""
    return f.shift(c)


def difference(f: HPoly, direction: str = "forward") -> HPoly:
    """Step-2 differences: forward f(H+2)-f(H), backward f(H)-f(H-2)."""
    if direction == "forward":
        return f.shift(2) - f
    if direction == "backward":
        return f - f.shift(-2)
    raise ValueError(f"unknown direction {direction!r}")


def t_poly(i: int) -> HPoly:
    """T_i(H) = (lambda^2 - (H + 2i - 1)^2)/4; negative i allowed."""
    a = HPoly((2 * i - 1, 1))
    return (HPoly.const(LAMBDA * LAMBDA) - a * a).scale(LambdaScalar.const(1) / 4)


def t_product(lo: int, hi: int) -> HPoly:
    """T_lo(H) T_{lo+1}(H) ... T_hi(H); empty product is 1."""
    out = HPoly.const(1)
    for i in range(lo, hi + 1):
        out = out * t_poly(i)
    return out


def alpha(i: int) -> LambdaScalar:
    """Spectrum point lambda - 2i + 1."""
    return LAMBDA + (1 - 2 * i)


def eval_alpha(f: HPoly, i: int) -> LambdaScalar:
    """Evaluate f at H = lambda - 2i + 1."""
    if i < 1:
        raise ValueError("alpha index starts at 1")
    return f(alpha(i))


def pochhammer(a, i: int):
    """Rising factorial a(a+1)...(a+i-1) for a scalar or an HPoly."""
    if i < 0:
        raise ValueError("pochhammer length must be nonnegative")
    if isinstance(a, HPoly):
        out = HPoly.const(1, a.var)
        for j in range(i):
            out = out * (a + j)
        return out
    a = LambdaScalar.coerce(a)
    out = LambdaScalar.const(1)
    for j in range(i):
        out = out * (a + j)
    return out
