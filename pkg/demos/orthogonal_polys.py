"""The f_{k,l} family: three constructions, norms and the Gram matrix."""
from glambda import c_norm, f, f_ad, f_hahn, f_nabla, inner
from glambda.orthopoly import gram_matrix_at

for k in range(4):
    print(f"f_{k},0 =", f(k, 0))

k, l = 4, 1
same = f_ad(k, l).poly == f_nabla(k, l).poly == f_hahn(k, l).poly
print(f"\nroutes agree for (k, l) = ({k}, {l}):", same)

print("<f_2,0, f_2,0> =", inner(f(2, 0), f(2, 0), 0))
print("closed form    =", c_norm(2, 0))

# at lambda = 4 only k < 4 survives; the Gram matrix is diagonal
for row in gram_matrix_at(4, 0):
    print(" ".join(f"{str(v):>8}" for v in row))
