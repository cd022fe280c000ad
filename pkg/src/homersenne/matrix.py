"""Generator matrix ``U`` and the tridiagonal continuant ``V_n``.

``U = [[0, 1], [-2**k, 2**k + 1]]`` has

    U**n = [[-2**k M_{n-1}, M_n], [-2**k M_n, M_{n+1}]]

so ``M_n^(k)`` can be read off after ``O(log n)`` 2x2 products.  ``V_n`` is
the ``n x n`` tridiagonal matrix with first row ``(M_2, M_1)``, diagonal
``2**k + 1``, sub-diagonal ``2**k`` and super-diagonal ``1``; its determinant
is ``M_{n+1}^(k)``.  ``V_n`` is never stored densely here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .report import IdentityReport
from .sequences import check_index, check_order, hom_closed, hom_quotient

__all__ = [
    "Matrix2",
    "mat_u",
    "mat_power",
    "power_with_count",
    "hom_via_matrix",
    "u_power_checks",
    "TridiagonalSpec",
    "tridiag_det",
    "tridiag_minors",
    "tridiag_spectral_checks",
]


@dataclass(frozen=True)
class Matrix2:
    a11: int
    a12: int
    a21: int
    a22: int

    @classmethod
    def identity(cls) -> Matrix2:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: Matrix2) -> Matrix2:
        a, b, c, d = self.a11, self.a12, self.a21, self.a22
        e, f, g, h = other.a11, other.a12, other.a21, other.a22
        return Matrix2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> int:
        return self.a11 + self.a22

    def rows(self) -> list[list[int]]:
        return [[self.a11, self.a12], [self.a21, self.a22]]


def mat_u(k: int) -> Matrix2:
    check_order(k)
    q = 1 << k
    return Matrix2(0, 1, -q, q + 1)


def power_with_count(m: Matrix2, n: int) -> tuple[Matrix2, int]:
    """``m**n`` by left-to-right binary exponentiation, plus the number of 2x2 products used.

    ``n = 0`` gives the identity with zero products; otherwise the count is at
    most ``2 * floor(log2(n))``.
    """
    check_index(n)
    if n == 0:
        return Matrix2.identity(), 0
    result = m
    products = 0
    for bit in bin(n)[3:]:
        result = result @ result
        products += 1
        if bit == "1":
            result = result @ m
            products += 1
    return result, products


def mat_power(m: Matrix2, n: int) -> Matrix2:
    return power_with_count(m, n)[0]


def hom_via_matrix(k: int, n: int) -> int:
    """``M_n^(k)`` as the upper-right entry of ``U**n`` (``n >= 1``)."""
    check_order(k)
    check_index(n, minimum=1)
    return mat_power(mat_u(k), n).a12


def u_power_checks(k: int, n: int) -> list[IdentityReport]:
    """Determinant, trace and all four entries of ``U**n`` against their closed forms."""
    check_order(k)
    check_index(n, minimum=1)
    q = 1 << k
    p = mat_power(mat_u(k), n)
    params = {"k": k, "n": n}
    expected = {
        "u_power_a11": -q * hom_closed(k, n - 1),
        "u_power_a12": hom_closed(k, n),
        "u_power_a21": -q * hom_closed(k, n),
        "u_power_a22": hom_closed(k, n + 1),
    }
    reports = [
        IdentityReport.compare("u_power_det", params, p.det(), 1 << (k * n)),
        IdentityReport.compare("u_power_trace", params, p.trace(), 1 + (1 << (k * n))),
    ]
    for name, value in expected.items():
        reports.append(IdentityReport.compare(name, params, getattr(p, name[-3:]), value))
    return reports


@dataclass(frozen=True)
class TridiagonalSpec:
    """Parameters of ``V_n``; the entries are generated on demand."""

    k: int
    n: int

    def __post_init__(self):
        check_order(self.k)
        check_index(self.n, minimum=1)

    def diagonal(self) -> list[int]:
        q = 1 << self.k
        # the leading entry is M_2^(k), which also equals 2**k + 1
        return [hom_quotient(self.k, 2)] + [q + 1] * (self.n - 1)

    def super_diagonal(self) -> list[int]:
        return [hom_quotient(self.k, 1)] + [1] * (self.n - 2) if self.n > 1 else []

    def sub_diagonal(self) -> list[int]:
        return [1 << self.k] * (self.n - 1)

    def trace(self) -> int:
        return sum(self.diagonal())


def tridiag_minors(spec: TridiagonalSpec) -> list[int]:
    """Leading principal minors ``det(V_1), ..., det(V_n)`` by the continuant recurrence.

    ``det(V_j) = a_j det(V_{j-1}) - c_{j-1} b_{j-1} det(V_{j-2})`` with
    ``det(V_0) = 1``.
    """
    diag, sup, sub = spec.diagonal(), spec.super_diagonal(), spec.sub_diagonal()
    minors = []
    prev, cur = 1, diag[0]
    minors.append(cur)
    for j in range(1, spec.n):
        prev, cur = cur, diag[j] * cur - sub[j - 1] * sup[j - 1] * prev
        minors.append(cur)
    return minors


def tridiag_det(spec: TridiagonalSpec) -> int:
    """``det(V_n)``, equal to ``M_{n+1}^(k)``."""
    return tridiag_minors(spec)[-1]


def tridiag_spectral_checks(spec: TridiagonalSpec) -> list[IdentityReport]:
    """Consequences of the eigenvalue relation for ``V_n``.

    The eigenvalue product is ``det(V_n) = M_{n+1}^(k)``, the eigenvalue sum
    is ``trace(V_n) = n (2**k + 1)``, and every leading principal minor is
    positive (reported as the count of positive minors against ``n``).
    """
    k, n = spec.k, spec.n
    params = {"k": k, "n": n}
    minors = tridiag_minors(spec)
    return [
        IdentityReport.compare("tridiag_det", params, minors[-1], hom_closed(k, n + 1)),
        IdentityReport.compare("tridiag_trace", params, spec.trace(), n * ((1 << k) + 1)),
        IdentityReport.compare(
            "tridiag_minors_positive", params, sum(1 for d in minors if d > 0), n
        ),
    ]
