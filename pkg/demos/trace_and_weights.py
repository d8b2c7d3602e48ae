"""Trace generating function and quasi-finite weight series."""
from glambda.quasifinite import hw_series, minimal_parabolic, check_annihilation, trace_weight

w = trace_weight("nonzero", 6)
print("trace series F(t):")
for m, c in enumerate(w.F.coeffs):
    print(f"  t^{m}: {c}")
print("numerator R =", w.R, " consistent:", w.consistent())

z = trace_weight("zero", 6)
print("\nlambda = 0 series:", [str(c) for c in z.F.coeffs])

# a highest-weight family with a couple of nonzero parameters
hw = hw_series("ii", {0: 1, 2: -3}, order=6)
p = minimal_parabolic(hw.R)
print("\nkind ii numerator:", hw.R)
print("minimal parabolic factor:", p, " annihilates:", check_annihilation(hw.R, p))
