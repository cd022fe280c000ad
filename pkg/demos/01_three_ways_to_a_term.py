"""
Three (and a half) ways to compute a higher-order Mersenne number
=================================================================

``M_n^(k)`` is the base-``2**k`` repunit ``1 + 2**k + ... + (2**k)**(n-1)``.
This script computes it by the linear recurrence, the closed form, the
Mersenne quotient ``M_{kn} / M_k`` and the 2x2 matrix power, and prints the
first rows of the familiar table.
"""
import time

from homersenne import hom_closed, hom_quotient, hom_recurrence, hom_stream, hom_via_matrix
from homersenne.matrix import mat_u, power_with_count

# %%
# The first six terms for k = 1..5; k = 1 is the classical Mersenne sequence.
print("n " + "".join(f"{'k=' + str(k):>10}" for k in range(1, 6)))
columns = {k: hom_stream(k, 6) for k in range(1, 6)}
for n in range(6):
    print(f"{n} " + "".join(f"{columns[k][n]:>10}" for k in range(1, 6)))

# %%
# All four evaluation routes agree.
k, n = 7, 40
values = {
    "recurrence": hom_recurrence(k, n),
    "closed form": hom_closed(k, n),
    "M_kn / M_k": hom_quotient(k, n),
    "U**n entry": hom_via_matrix(k, n),
}
for name, value in values.items():
    print(f"{name:>12}: {value}")
assert len(set(values.values())) == 1

# %%
# The matrix route needs only O(log n) products, so n = 2**20 is cheap.
n = 2**20
start = time.perf_counter()
power, products = power_with_count(mat_u(1), n)
print(f"U**(2**20) for k=1: {products} matrix products, {time.perf_counter() - start:.2f}s")
print(f"M_(2**20) has {power.a12.bit_length()} bits")
