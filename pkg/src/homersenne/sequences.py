"""Mersenne-type sequences in exact integer arithmetic.

Higher-order Mersenne numbers are the base-``2**k`` repunits

    M_n^(k) = M_{kn} / M_k = ((2**k)**n - 1) / (2**k - 1)

and satisfy ``M_{n+2} = (2**k + 1) M_{n+1} - 2**k M_n`` with ``M_0 = 0``,
``M_1 = 1``.  Three independent evaluation routes are provided
(:func:`hom_recurrence`, :func:`hom_closed`, :func:`hom_quotient`) so that
callers can cross-check them; :mod:`homersenne.matrix` adds a fourth.
"""
from __future__ import annotations

from fractions import Fraction

__all__ = [
    "exact_div",
    "mersenne",
    "mersenne_lucas",
    "hom_recurrence",
    "hom_closed",
    "hom_quotient",
    "hom_stream",
    "hoj",
    "hojl",
    "cofactor",
]


def check_order(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"order k must be an int, got {type(k).__name__}")
    if k < 1:
        raise ValueError(f"order k must be >= 1, got {k}")


def check_index(n: int, name: str = "n", minimum: int = 0) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")


def exact_div(a: int, b: int) -> int:
    """Return ``a // b``, raising :class:`ArithmeticError` if ``b`` does not divide ``a``.

    Every division routed through here is one the underlying theorem proves
    exact, so a remainder means a bug rather than bad input.
    """
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact division: {a} / {b} leaves remainder {r}")
    return q


def mersenne(n: int) -> int:
    """``M_n = 2**n - 1``."""
    check_index(n)
    return (1 << n) - 1


def mersenne_lucas(n: int) -> int:
    """``m_n = 2**n + 1``."""
    check_index(n)
    return (1 << n) + 1


def hom_recurrence(k: int, n: int) -> int:
    """``M_n^(k)`` by iterating the second-order recurrence (linear in ``n``)."""
    check_order(k)
    check_index(n)
    q = 1 << k
    a, b = 0, 1
    for _ in range(n):
        a, b = b, (q + 1) * b - q * a
    return a


def hom_closed(k: int, n: int) -> int:
    """``M_n^(k)`` from the Binet form ``((2**k)**n - 1) / (2**k - 1)``."""
    check_order(k)
    check_index(n)
    q = 1 << k
    return exact_div(q**n - 1, q - 1)


def hom_quotient(k: int, n: int) -> int:
    """``M_n^(k)`` as the Mersenne quotient ``M_{kn} / M_k``.

    ``n = 0`` gives ``M_0 / M_k = 0``.
    """
    check_order(k)
    check_index(n)
    return exact_div(mersenne(k * n), mersenne(k))


def hom_stream(k: int, count: int) -> list[int]:
    """First ``count`` terms ``M_0^(k), ..., M_{count-1}^(k)`` in one pass."""
    check_order(k)
    check_index(count, "count")
    q = 1 << k
    terms = []
    a, b = 0, 1
    for _ in range(count):
        terms.append(a)
        a, b = b, (q + 1) * b - q * a
    return terms


def hoj(k: int, n: int) -> int:
    """Higher-order Jacobsthal number ``((2**k)**n - s**n) / (2**k - s)`` with ``s = (-1)**k``."""
    check_order(k)
    check_index(n)
    q = 1 << k
    s = -1 if k % 2 else 1
    return exact_div(q**n - s**n, q - s)


def hojl(k: int, n: int) -> Fraction:
    """Higher-order Jacobsthal-Lucas number ``((2**k)**n + s**n) / (2**k + s)``, ``s = (-1)**k``.

    The quotient is returned as a :class:`~fractions.Fraction` because it is
    not always integral: for ``k >= 2`` and even ``n`` the numerator is
    ``2 mod (2**k + s)`` (e.g. ``hojl(2, 0) == Fraction(2, 5)``).  It is an
    integer whenever ``k == 1`` or ``n`` is odd.
    """
    check_order(k)
    check_index(n)
    q = 1 << k
    s = -1 if k % 2 else 1
    return Fraction(q**n + s**n, q + s)


def cofactor(k: int, n: int) -> int:
    """Geometric sum ``X(k, n) = sum_{i<n} (2**k)**i`` with ``M_k * X(k, n) == M_{kn}``.

    Only defined for ``n >= 1``.
    """
    check_order(k)
    check_index(n, minimum=1)
    q = 1 << k
    total = 0
    term = 1
    for _ in range(n):
        total += term
        term *= q
    return total
