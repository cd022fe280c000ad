"""
Generating functions, expanded exactly
======================================

Rational OGFs are expanded with the convolution recurrence; the EGFs are
compared coefficient by coefficient as fractions.
"""
from homersenne import genfun as gf

for k in (1, 2, 3):
    f = gf.hom_ogf(k)
    print(f"k={k}: x / {list(f.denominator)} -> {[int(c) for c in gf.expand_rational(f, 8)]}")

# %%
# The OGF denominator factors as (x - 1)(2**k x - 1).
k = 4
print(gf.poly_mul([-1, 1], [-1, 2**k]), list(gf.hom_ogf(k).denominator))

# %%
for k in (1, 2, 3):
    f = gf.bt_ogf(k)
    print(f"bt k={k}: x / {list(f.denominator)} -> {[int(c) for c in gf.expand_rational(f, 7)]}")

# %%
# EGF coefficients M_n / n! against (exp(2**k x) - exp(x)) / (2**k - 1).
for report in gf.egf_check(2, 5):
    print(report)
