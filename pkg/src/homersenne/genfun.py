"""Ordinary and exponential generating functions, expanded exactly.

Polynomials are dense coefficient sequences in ascending powers of ``x``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .report import IdentityReport
from .sequences import check_index, check_order, hom_closed, mersenne_lucas
from .transforms import bt_recurrence

__all__ = [
    "RationalFunction",
    "poly_mul",
    "expand_rational",
    "exp_series",
    "hom_ogf",
    "bt_ogf",
    "egf_check",
    "bt_egf_check",
]


@dataclass(frozen=True)
class RationalFunction:
    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")


def poly_mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def expand_rational(f: RationalFunction, count: int) -> list[Fraction]:
    """First ``count`` Taylor coefficients of ``f`` at ``x = 0``.

    Uses ``c_n = (p_n - sum_{j>=1} q_j c_{n-j}) / q_0``, which follows from
    ``q * c = p`` coefficientwise.
    """
    check_index(count, "count")
    p, q = f.numerator, f.denominator
    q0 = Fraction(q[0])
    coeffs: list[Fraction] = []
    for n in range(count):
        acc = Fraction(p[n]) if n < len(p) else Fraction(0)
        for j in range(1, min(n, len(q) - 1) + 1):
            acc -= q[j] * coeffs[n - j]
        coeffs.append(acc / q0)
    return coeffs


def exp_series(a, count: int) -> list[Fraction]:
    """Coefficients of ``exp(a x)``, built as ``c_n = c_{n-1} * a / n``."""
    check_index(count, "count")
    coeffs = []
    c = Fraction(1)
    for n in range(count):
        if n:
            c = c * a / n
        coeffs.append(c)
    return coeffs


def hom_ogf(k: int) -> RationalFunction:
    """``x / (1 - (2**k + 1) x + 2**k x**2)``, the OGF of ``M_n^(k)``."""
    check_order(k)
    q = 1 << k
    return RationalFunction((0, 1), (1, -(q + 1), q))


def bt_ogf(k: int) -> RationalFunction:
    """``x / (1 - (2 + m_k) x + 2 m_k x**2)``, the OGF of ``b_{k,n}``."""
    check_order(k)
    mk = mersenne_lucas(k)
    return RationalFunction((0, 1), (1, -(2 + mk), 2 * mk))


def _egf_reports(name, k, terms, fast, slow, scale) -> list[IdentityReport]:
    # coefficient of x^n: terms[n] / n!  versus  (fast_n - slow_n) / scale
    reports = []
    fact = 1
    for n, t in enumerate(terms):
        if n:
            fact *= n
        reports.append(
            IdentityReport.compare(
                name, {"k": k, "n": n}, Fraction(t, fact), (fast[n] - slow[n]) / scale
            )
        )
    return reports


def egf_check(k: int, count: int) -> list[IdentityReport]:
    """Compare ``M_n^(k) / n!`` with the ``x**n`` coefficient of
    ``(exp(2**k x) - exp(x)) / (2**k - 1)`` for ``n < count``."""
    check_order(k)
    q = 1 << k
    terms = [hom_closed(k, n) for n in range(count)]
    return _egf_reports("egf", k, terms, exp_series(q, count), exp_series(1, count), q - 1)


def bt_egf_check(k: int, count: int) -> list[IdentityReport]:
    """Compare ``b_{k,n} / n!`` with the ``x**n`` coefficient of
    ``(exp(m_k x) - exp(2 x)) / (2**k - 1)`` for ``n < count``."""
    check_order(k)
    q = 1 << k
    terms = bt_recurrence(k, count).terms
    return _egf_reports(
        "bt_egf", k, terms, exp_series(mersenne_lucas(k), count), exp_series(2, count), q - 1
    )
