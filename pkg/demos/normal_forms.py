"""Normal forms in A_lambda and the principal embedding.

Run: python3 demos/normal_forms.py
"""
from glambda import H, X, Y, LAMBDA, bracket, mul, specialize, trace

# XY and YX reduce to polynomials in H
print("XY =", mul(X, Y))
print("YX =", mul(Y, X))
print("[X, Y] =", bracket(X, Y))

# a product with mixed degrees
u = mul(mul(X, H), Y)
print("X H Y =", u)

# at lambda = 3 the algebra maps onto 3x3 matrices
m = specialize(u, 3)
print("as a 3x3 matrix:\n", m)
print("matrix trace:", m.trace(), " trace form at lambda=3:", trace(u).evaluate(3))
print("trace(H^2) =", trace(mul(H, H)), " (lambda =", LAMBDA, "symbolic)")
