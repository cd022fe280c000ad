"""Exact verification of the classical identities for (higher-order) Mersenne numbers.

Each check evaluates the left-hand side from sequence values
(:func:`~homersenne.sequences.hom_closed`, :func:`~homersenne.sequences.mersenne`)
and the right-hand side from the stated closed form.  Where the closed form
refers back to a sequence term it is taken from
:func:`~homersenne.sequences.hom_quotient`, a separate evaluation route, so
that one faulty routine cannot confirm itself.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .report import IdentityReport
from .sequences import (
    check_index,
    check_order,
    hoj,
    hojl,
    hom_closed,
    hom_quotient,
    mersenne,
    mersenne_lucas,
)

__all__ = [
    "check_index_shift",
    "check_index_addition",
    "check_multiples",
    "catalan",
    "cassini",
    "docagne",
    "VajdaConvention",
    "VAJDA_CONVENTIONS",
    "vajda_oracle",
    "resolve_vajda_convention",
    "vajda",
    "honsberger",
    "jacobsthal_relation",
    "square_sum_product_relations",
    "limiting_ratio_gap",
]


def check_index_shift(k: int, n: int, alpha: int) -> IdentityReport:
    """``M_{k(n+1)+alpha} = 2**k M_{kn+alpha} + M_k`` for ``0 <= alpha < k``."""
    check_order(k)
    check_index(n)
    check_index(alpha, "alpha")
    if alpha >= k:
        raise ValueError(f"alpha must be < k, got alpha={alpha}, k={k}")
    lhs = mersenne(k * (n + 1) + alpha)
    rhs = (1 << k) * mersenne(k * n + alpha) + mersenne(k)
    return IdentityReport.compare("index_shift", {"k": k, "n": n, "alpha": alpha}, lhs, rhs)


def check_index_addition(n: int, m: int) -> IdentityReport:
    """``M_{n+m} = 2**n M_m + M_n``."""
    check_index(n)
    check_index(m, "m")
    lhs = mersenne(n + m)
    rhs = (1 << n) * mersenne(m) + mersenne(n)
    return IdentityReport.compare("index_addition", {"n": n, "m": m}, lhs, rhs)


def check_multiples(k: int) -> list[IdentityReport]:
    """Factorisations of ``M_{2k}``, ``M_{3k}`` and ``M_{4k}`` through ``M_k`` and ``m_k``."""
    check_order(k)
    Mk, mk = mersenne(k), mersenne_lucas(k)
    q = 1 << k
    return [
        IdentityReport.compare("multiple_2k", {"k": k}, mersenne(2 * k), Mk * mk),
        IdentityReport.compare("multiple_3k", {"k": k}, mersenne(3 * k), Mk * (q * mk + 1)),
        IdentityReport.compare(
            "multiple_4k", {"k": k}, mersenne(4 * k), Mk * mk * mersenne_lucas(2 * k)
        ),
    ]


def catalan(k: int, n: int, r: int) -> IdentityReport:
    """``M_{n-r} M_{n+r} - M_n**2 = -(2**k)**(n-r) M_r**2`` for ``n >= r``."""
    check_order(k)
    check_index(n)
    check_index(r, "r")
    if n < r:
        raise ValueError(f"catalan requires n >= r, got n={n}, r={r}")
    lhs = hom_closed(k, n - r) * hom_closed(k, n + r) - hom_closed(k, n) ** 2
    rhs = -((1 << k) ** (n - r)) * hom_quotient(k, r) ** 2
    return IdentityReport.compare("catalan", {"k": k, "n": n, "r": r}, lhs, rhs)


def cassini(k: int, n: int) -> IdentityReport:
    """``M_{n-1} M_{n+1} - M_n**2 = -(2**k)**(n-1)`` for ``n >= 1``."""
    check_order(k)
    check_index(n, minimum=1)
    lhs = hom_closed(k, n - 1) * hom_closed(k, n + 1) - hom_closed(k, n) ** 2
    rhs = -((1 << k) ** (n - 1))
    return IdentityReport.compare("cassini", {"k": k, "n": n}, lhs, rhs)


def docagne(k: int, m: int, n: int) -> IdentityReport:
    """``M_{n+1} M_m - M_n M_{m+1} = (2**k)**n M_{m-n}`` for ``m > n``."""
    check_order(k)
    check_index(m, "m")
    check_index(n)
    if m <= n:
        raise ValueError(f"docagne requires m > n, got m={m}, n={n}")
    lhs = hom_closed(k, n + 1) * hom_closed(k, m) - hom_closed(k, n) * hom_closed(k, m + 1)
    rhs = (1 << k) ** n * hom_quotient(k, m - n)
    return IdentityReport.compare("docagne", {"k": k, "m": m, "n": n}, lhs, rhs)


# Vajda --------------------------------------------------------------------


@dataclass(frozen=True)
class VajdaConvention:
    """One reading of the Vajda identity.

    ``swapped`` negates the left side (``M_n M_{n+m+r} - M_{n+m} M_{n+r}``);
    the right side is ``sign * (2**k)**n * ((2**k)**r + offset) / (2**k - 1) * M_m``.
    The printed statement is ``swapped=False, sign=-1, offset=+1``.
    """

    key: str
    swapped: bool
    sign: int
    offset: int

    def sides(self, k: int, n: int, m: int, r: int) -> tuple[int, Fraction]:
        lhs = hom_closed(k, n + m) * hom_closed(k, n + r) - hom_closed(k, n) * hom_closed(
            k, n + m + r
        )
        if self.swapped:
            lhs = -lhs
        q = 1 << k
        rhs = self.sign * q**n * Fraction(q**r + self.offset, q - 1) * hom_quotient(k, m)
        return lhs, rhs


VAJDA_CONVENTIONS: tuple[VajdaConvention, ...] = tuple(
    VajdaConvention(
        f"{'swapped' if sw else 'standard'}/{'-' if s < 0 else '+'}/q^r{'+' if o > 0 else '-'}1",
        sw,
        s,
        o,
    )
    for sw, s, o in itertools.product((False, True), (-1, 1), (1, -1))
)
PRINTED_VAJDA = VAJDA_CONVENTIONS[0]


def vajda_oracle(k_max: int = 3, n_max: int = 4) -> list[dict]:
    """Brute-force every convention over ``k <= k_max`` and ``n, m, r <= n_max``.

    Returns one row per grid cell with the left side and, per convention,
    the right side and whether it matched.
    """
    rows = []
    for k in range(1, k_max + 1):
        for n, m, r in itertools.product(range(n_max + 1), repeat=3):
            row = {"k": k, "n": n, "m": m, "r": r}
            for conv in VAJDA_CONVENTIONS:
                lhs, rhs = conv.sides(k, n, m, r)
                row[conv.key] = (lhs, rhs, lhs == rhs)
            rows.append(row)
    return rows


@lru_cache(maxsize=None)
def resolve_vajda_convention(k_max: int = 3, n_max: int = 4) -> VajdaConvention:
    """First convention (in declaration order) that holds on every oracle cell."""
    rows = vajda_oracle(k_max, n_max)
    for conv in VAJDA_CONVENTIONS:
        if all(row[conv.key][2] for row in rows):
            return conv
    raise ArithmeticError("no Vajda convention holds on the oracle grid")


def vajda(
    k: int, n: int, m: int, r: int, convention: VajdaConvention | None = None
) -> IdentityReport:
    """Vajda's identity under ``convention`` (default: the oracle-resolved one).

    The resolved form is ``M_{n+m} M_{n+r} - M_n M_{n+m+r} = (2**k)**n M_m M_r``;
    the statement with ``(2**k)**r + 1`` and a leading minus only holds when
    ``m == 0``.  Pass ``convention=PRINTED_VAJDA`` to check it as printed.
    """
    check_order(k)
    for name, value in (("n", n), ("m", m), ("r", r)):
        check_index(value, name)
    conv = convention or resolve_vajda_convention()
    lhs, rhs = conv.sides(k, n, m, r)
    # lhs is an integer, so equality also certifies that rhs is integral
    return IdentityReport.compare(
        f"vajda[{conv.key}]", {"k": k, "n": n, "m": m, "r": r}, lhs, rhs
    )


def honsberger(k: int, p: int, n: int) -> IdentityReport:
    """``M_{p-1} M_n + M_p M_{n+1}`` against its closed form in ``m_k`` and ``m_{2k}``."""
    check_order(k)
    check_index(p, "p", minimum=1)
    check_index(n)
    q = 1 << k
    lhs = hom_closed(k, p - 1) * hom_closed(k, n) + hom_closed(k, p) * hom_closed(k, n + 1)
    num = q ** (p + n - 1) * mersenne_lucas(2 * k) - (q ** (p - 1) + q**n) * mersenne_lucas(k) + 2
    rhs = Fraction(num, (q - 1) ** 2)
    return IdentityReport.compare("honsberger", {"k": k, "p": p, "n": n}, lhs, rhs)


def jacobsthal_relation(k: int, n: int) -> list[IdentityReport]:
    """Parity-dependent link between ``M_n^(k)`` and ``J_n^(k)``/``j_n^(k)``, plus
    ``M_n^(2k) = J_n^(k) j_n^(k)``."""
    check_order(k)
    check_index(n)
    q = 1 << k
    params = {"k": k, "n": n}
    lhs = hom_closed(k, n)
    if k % 2 == 0:
        case, rhs = "k_even", Fraction(hoj(k, n))
    elif n % 2 == 0:
        case, rhs = "n_even_k_odd", Fraction(q + 1, q - 1) * hoj(k, n)
    else:
        case, rhs = "n_odd_k_odd", hojl(k, n)
    return [
        IdentityReport.compare(f"jacobsthal_relation[{case}]", params, lhs, rhs),
        IdentityReport.compare(
            "jacobsthal_product", params, hom_closed(2 * k, n), hoj(k, n) * hojl(k, n)
        ),
    ]


def square_sum_product_relations(k: int, n: int) -> list[IdentityReport]:
    """The square, sum and product relations between ``M_n^(k)`` and ``J_n^(k)``.

    Always three reports: the square relation, then whichever sum and
    product case applies to the parities of ``n`` and ``k``.
    """
    check_order(k)
    check_index(n)
    q = 1 << k
    params = {"k": k, "n": n}
    M = hom_closed(k, n)
    J = hoj(k, n)
    k_even = k % 2 == 0
    n_par = "n_even" if n % 2 == 0 else "n_odd"
    k_par = "k_even" if k_even else "k_odd"

    square = IdentityReport.compare(
        "square",
        params,
        M * M,
        Fraction(hom_quotient(k, 2 * n) - 2 * hom_quotient(k, n), q - 1),
    )
    if k_even:
        sum_rhs = Fraction(2 * J)
        prod_rhs = Fraction(J * J)
    elif n % 2 == 0:
        sum_rhs = Fraction(2 * q, q - 1) * J
        prod_rhs = Fraction(q + 1, q - 1) * J * J
    else:
        sum_rhs = Fraction(2 * (q ** (n + 1) - 1), 4**k - 1)
        prod_rhs = Fraction(hom_quotient(2 * k, n))
    return [
        square,
        IdentityReport.compare(f"sum[{n_par},{k_par}]", params, M + J, sum_rhs),
        IdentityReport.compare(f"product[{n_par},{k_par}]", params, M * J, prod_rhs),
    ]


def limiting_ratio_gap(k: int, n: int) -> Fraction:
    """``M_{n+1}^(k) / M_n^(k) - 2**k`` as an exact fraction (``n >= 1``).

    Equal to ``(2**k - 1) / ((2**k)**n - 1)``, so it tends to zero.
    """
    check_order(k)
    check_index(n, minimum=1)
    return Fraction(hom_closed(k, n + 1), hom_closed(k, n)) - (1 << k)
