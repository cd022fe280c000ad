"""
Generator matrix and tridiagonal continuant
===========================================

Powers of ``U = [[0, 1], [-2**k, 2**k + 1]]`` carry consecutive terms;
determinants of the tridiagonal ``V_n`` reproduce ``M_{n+1}^(k)``.
"""
from homersenne import matrix as mx

k = 2
for n in range(1, 5):
    p = mx.mat_power(mx.mat_u(k), n)
    print(f"U^{n} = {p.rows()}  det={p.det()}  trace={p.trace()}")

# %%
spec = mx.TridiagonalSpec(3, 6)
print("diagonal:", spec.diagonal())
print("leading minors:", mx.tridiag_minors(spec))
for report in mx.tridiag_spectral_checks(spec):
    print(report)
