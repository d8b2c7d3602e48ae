"""Exact computations in the Lie algebra gl(lambda) of complex-size matrices.

Subpackages and modules:

* ``exactcore``   -- Q(lambda) scalars, polynomials, truncated series, quasi-polynomials
* ``algebra``     -- normal forms in U(sl(2)) / (Omega - (lambda^2-1)/2) and the matrix oracle
* ``traceform``   -- the trace, its generating function and the invariant form
* ``orthopoly``   -- the polynomials f_kl, their identities and the dual-sum explorer
* ``quasifinite`` -- highest-weight series and the gl(infinity) cocycle window
* ``modchar``     -- characteristic polynomials and q-characters of V^nu
* ``checks``      -- verification suites used by ``glambda verify``
"""

from .algebra import AlgebraElement, H, ONE, X, Y, ad_pow, bracket, casimir_apply, mul, specialize
from .exactcore import LAMBDA, HPoly, LambdaScalar, QuasiPolynomial, TruncatedSeries
from .orthopoly import c_norm, f, f_ad, f_hahn, f_nabla, inner
from .traceform import form, trace, trace_h, trace_series

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "H", "ONE", "X", "Y", "ad_pow", "bracket", "casimir_apply", "mul",
    "specialize", "LAMBDA", "HPoly", "LambdaScalar", "QuasiPolynomial", "TruncatedSeries",
    "c_norm", "f", "f_ad", "f_hahn", "f_nabla", "inner", "form", "trace", "trace_h",
    "trace_series",
]
