"""
The binomial transform b_{k,n}
==============================

``b_{k,n} = sum_i C(n, i) M_i^(k)`` obeys its own second-order recurrence
with characteristic roots ``m_k = 2**k + 1`` and ``2``.
"""
from homersenne import transforms as tr

for k in range(1, 6):
    seq = tr.bt_recurrence(k, 7)
    direct = [tr.bt_definition(k, n) for n in range(7)]
    closed = [tr.bt_closed(k, n) for n in range(7)]
    assert list(seq) == direct == closed
    print(f"B_{k}: {list(seq)}")

# %%
# Sums over the base sequence, checked in closed form.
for report in (
    tr.partial_sum(3, 4),
    tr.partial_sum_even(1, 3),
    tr.partial_sum_odd(2, 1),
    tr.binomial_sum(1, 4),
    tr.alternating_binomial_sum(2, 3),
):
    print(report)

# %%
# The binomial sum of M^(k) over row s-1 of Pascal's triangle is b_{k,s-1}.
print([int(tr.binomial_sum(2, s).lhs) for s in range(1, 7)])
