"""
Checking the classical identities
=================================

Every check returns an ``IdentityReport`` carrying both sides as exact
fractions.  The Vajda identity is the interesting case: the brute-force
oracle picks the one reading of it that actually holds.
"""
from collections import Counter

from homersenne import identities as idn

# %%
# A few reports, printed verbatim.
for report in (
    idn.catalan(2, 3, 1),
    idn.cassini(3, 3),
    idn.docagne(3, 3, 1),
    idn.honsberger(2, 2, 1),
):
    print(report)

# %%
# Vajda: brute-force every sign / side / offset convention on a small grid.
rows = idn.vajda_oracle(k_max=3, n_max=4)
for conv in idn.VAJDA_CONVENTIONS:
    ok = sum(row[conv.key][2] for row in rows)
    print(f"{conv.key:<20} holds on {ok:>3}/{len(rows)} cells")
resolved = idn.resolve_vajda_convention()
print("resolved:", resolved.key)

# %%
# The printed form only survives when m = 0.
print(idn.vajda(1, 1, 1, 1, convention=idn.PRINTED_VAJDA))
print(idn.vajda(1, 1, 1, 1))

# %%
# Which Jacobsthal parity cases come up for k, n <= 6?
cases = Counter(
    report.name
    for k in range(1, 7)
    for n in range(7)
    for report in idn.jacobsthal_relation(k, n)
    if report.holds
)
for name, count in sorted(cases.items()):
    print(f"{name:<36}{count}")

# %%
# The ratio of consecutive terms approaches 2**k; the gap is exact.
for n in (1, 2, 5, 10, 40):
    gap = idn.limiting_ratio_gap(1, n)
    print(f"n={n:>2}  gap={gap}  ~ {float(gap):.3e}")
