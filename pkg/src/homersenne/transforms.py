"""Partial sums, binomial sums and the binomial transform ``b_{k,n}``.

Binomial coefficients come from Pascal-row iteration (additions only), never
from factorial quotients.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .report import IdentityReport
from .sequences import (
    check_index,
    check_order,
    exact_div,
    hom_closed,
    hom_quotient,
    mersenne,
    mersenne_lucas,
)

__all__ = [
    "pascal_rows",
    "pascal_row",
    "partial_sum",
    "partial_sum_even",
    "partial_sum_odd",
    "binomial_sum",
    "alternating_binomial_sum",
    "BinomialTransformSeq",
    "bt_definition",
    "bt_recurrence",
    "bt_closed",
    "bt_shift_identity",
]


def pascal_rows() -> Iterator[list[int]]:
    """Yield ``[C(n, 0), ..., C(n, n)]`` for ``n = 0, 1, 2, ...``."""
    row = [1]
    while True:
        yield row
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]


def pascal_row(n: int) -> list[int]:
    check_index(n)
    return next(islice(pascal_rows(), n, None))


def partial_sum(k: int, n: int) -> IdentityReport:
    """``sum_{i=1}^n M_i^(k) = (2**k M_n^(k) - n) / M_k``."""
    check_order(k)
    check_index(n, minimum=1)
    lhs = sum(hom_closed(k, i) for i in range(1, n + 1))
    rhs = exact_div((1 << k) * hom_quotient(k, n) - n, mersenne(k))
    return IdentityReport.compare("partial_sum", {"k": k, "n": n}, lhs, rhs)


def partial_sum_even(k: int, n: int) -> IdentityReport:
    """``sum_{i=1}^n M_{2i}^(k) = (2**(2k) M_n^(2k) - n) / M_k``."""
    check_order(k)
    check_index(n, minimum=1)
    lhs = sum(hom_closed(k, 2 * i) for i in range(1, n + 1))
    rhs = exact_div((1 << 2 * k) * hom_quotient(2 * k, n) - n, mersenne(k))
    return IdentityReport.compare("partial_sum_even", {"k": k, "n": n}, lhs, rhs)


def partial_sum_odd(k: int, n: int) -> IdentityReport:
    """``sum_{i=0}^n M_{2i+1}^(k) = (2**k M_{n+1}^(2k) - n - 1) / M_k``."""
    check_order(k)
    check_index(n)
    lhs = sum(hom_closed(k, 2 * i + 1) for i in range(n + 1))
    rhs = exact_div((1 << k) * hom_quotient(2 * k, n + 1) - n - 1, mersenne(k))
    return IdentityReport.compare("partial_sum_odd", {"k": k, "n": n}, lhs, rhs)


def binomial_sum(k: int, s: int) -> IdentityReport:
    """``sum_{n<s} C(s-1, n) M_n^(k) = ((1 + 2**k)**(s-1) - 2**(s-1)) / (2**k - 1)``."""
    check_order(k)
    check_index(s, "s", minimum=1)
    row = pascal_row(s - 1)
    lhs = sum(c * hom_closed(k, i) for i, c in enumerate(row))
    q = 1 << k
    rhs = exact_div((1 + q) ** (s - 1) - 2 ** (s - 1), q - 1)
    return IdentityReport.compare("binomial_sum", {"k": k, "s": s}, lhs, rhs)


def alternating_binomial_sum(k: int, s: int) -> IdentityReport:
    """``sum_{n<s} (-1)**n C(s-1, n) M_n^(k) = (-1)**(s-1) M_k**(s-2)`` for ``s >= 2``.

    At ``s = 1`` the left side is ``M_0 = 0`` while the right side would be
    ``1 / M_k``, so that case is rejected.
    """
    check_order(k)
    check_index(s, "s", minimum=2)
    row = pascal_row(s - 1)
    lhs = sum((-1) ** i * c * hom_closed(k, i) for i, c in enumerate(row))
    rhs = (-1) ** (s - 1) * mersenne(k) ** (s - 2)
    return IdentityReport.compare("alternating_binomial_sum", {"k": k, "s": s}, lhs, rhs)


@dataclass(frozen=True)
class BinomialTransformSeq:
    """Prefix ``b_{k,0}, ..., b_{k,len-1}`` of the binomial transform of ``M^(k)``."""

    k: int
    terms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __iter__(self):
        return iter(self.terms)


def bt_definition(k: int, n: int) -> int:
    """``b_{k,n} = sum_{i<=n} C(n, i) M_i^(k)``, summed directly."""
    check_order(k)
    check_index(n)
    return sum(c * hom_closed(k, i) for i, c in enumerate(pascal_row(n)))


def bt_recurrence(k: int, count: int) -> BinomialTransformSeq:
    """First ``count`` terms from ``b_{n+1} = (2 + m_k) b_n - 2 m_k b_{n-1}``, ``b_0 = 0, b_1 = 1``."""
    check_order(k)
    check_index(count, "count")
    mk = mersenne_lucas(k)
    terms = []
    a, b = 0, 1
    for _ in range(count):
        terms.append(a)
        a, b = b, (2 + mk) * b - 2 * mk * a
    return BinomialTransformSeq(k, tuple(terms))


def bt_closed(k: int, n: int) -> int:
    """``b_{k,n} = (m_k**n - 2**n) / (2**k - 1)``."""
    check_order(k)
    check_index(n)
    return exact_div(mersenne_lucas(k) ** n - (1 << n), (1 << k) - 1)


def bt_shift_identity(k: int, n: int) -> list[IdentityReport]:
    """Check ``b_{k,n+1} = sum C(n,i) (M_{i+1} + M_i)`` and the difference form
    ``b_{k,n+1} - b_{k,n} = sum C(n,i) M_{i+1}``.

    Returns two reports, lemma first.
    """
    check_order(k)
    check_index(n)
    row = pascal_row(n)
    params = {"k": k, "n": n}
    b_next, b_here = bt_definition(k, n + 1), bt_definition(k, n)
    lemma = sum(c * (hom_quotient(k, i + 1) + hom_quotient(k, i)) for i, c in enumerate(row))
    diff = sum(c * hom_quotient(k, i + 1) for i, c in enumerate(row))
    return [
        IdentityReport.compare("bt_shift_lemma", params, b_next, lemma),
        IdentityReport.compare("bt_shift_difference", params, b_next - b_here, diff),
    ]

