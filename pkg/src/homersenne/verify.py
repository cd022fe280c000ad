"""Grid sweeps over every identity check in the package."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import genfun, identities, matrix, transforms
from .report import IdentityReport
from .sequences import hom_closed, hom_quotient, hom_recurrence, hom_stream

__all__ = ["AUX_MAX", "IDENTITIES", "VerifyConfig", "IdentityTally", "sweep", "run_verification"]

# cap on the secondary indices (r, m, alpha, p) of each sweep
AUX_MAX = 16

Sweep = Callable[[int, int], Iterator[IdentityReport]]


def _ks(k_max):
    return range(1, k_max + 1)


def _hom_paths(k_max, n_max):
    for k in _ks(k_max):
        for n in range(n_max + 1):
            ref = hom_closed(k, n)
            p = {"k": k, "n": n}
            yield IdentityReport.compare("hom_recurrence", p, hom_recurrence(k, n), ref)
            yield IdentityReport.compare("hom_quotient", p, hom_quotient(k, n), ref)
            if n >= 1:
                yield IdentityReport.compare("hom_via_matrix", p, matrix.hom_via_matrix(k, n), ref)


def _index_shift(k_max, n_max):
    for k in _ks(k_max):
        for n in range(n_max + 1):
            for alpha in range(min(k, AUX_MAX + 1)):
                yield identities.check_index_shift(k, n, alpha)


def _index_addition(k_max, n_max):
    for n in range(n_max + 1):
        for m in range(min(n_max, AUX_MAX) + 1):
            yield identities.check_index_addition(n, m)


def _multiples(k_max, n_max):
    for k in _ks(k_max):
        yield from identities.check_multiples(k)


def _catalan(k_max, n_max):
    for k in _ks(k_max):
        for n in range(n_max + 1):
            for r in range(min(n, AUX_MAX) + 1):
                yield identities.catalan(k, n, r)


def _cassini(k_max, n_max):
    for k in _ks(k_max):
        for n in range(1, n_max + 1):
            yield identities.cassini(k, n)


def _docagne(k_max, n_max):
    for k in _ks(k_max):
        for n in range(n_max + 1):
            for m in range(n + 1, n + min(n_max, AUX_MAX) + 1):
                yield identities.docagne(k, m, n)


def _vajda(k_max, n_max):
    top = min(n_max, AUX_MAX)
    for k in _ks(k_max):
        for n in range(top + 1):
            for m in range(top + 1):
                for r in range(top + 1):
                    yield identities.vajda(k, n, m, r)


def _honsberger(k_max, n_max):
    for k in _ks(k_max):
        for p in range(1, min(n_max, AUX_MAX) + 1):
            for n in range(n_max + 1):
                yield identities.honsberger(k, p, n)


def _per_kn(fn, n_min=0, n_offset=0):
    def sweep(k_max, n_max):
        for k in _ks(k_max):
            for n in range(n_min, n_max + 1 - n_offset):
                out = fn(k, n)
                if isinstance(out, list):
                    yield from out
                else:
                    yield out

    return sweep


def _limiting_ratio(k, n):
    q = 1 << k
    return IdentityReport.compare(
        "limiting_ratio_gap",
        {"k": k, "n": n},
        identities.limiting_ratio_gap(k, n),
        Fraction(q - 1, q**n - 1),
    )


def _binomial_sum_vs_transform(k, s):
    return IdentityReport.compare(
        "binomial_sum_vs_transform",
        {"k": k, "s": s},
        transforms.binomial_sum(k, s).lhs,
        transforms.bt_definition(k, s - 1),
    )


def _bt_paths(k_max, n_max):
    for k in _ks(k_max):
        rec = transforms.bt_recurrence(k, n_max + 1)
        for n in range(n_max + 1):
            p = {"k": k, "n": n}
            ref = transforms.bt_definition(k, n)
            yield IdentityReport.compare("bt_recurrence", p, rec[n], ref)
            yield IdentityReport.compare("bt_closed", p, transforms.bt_closed(k, n), ref)


def _ogf(k_max, n_max):
    for k in _ks(k_max):
        coeffs = genfun.expand_rational(genfun.hom_ogf(k), n_max + 1)
        for n, (c, t) in enumerate(zip(coeffs, hom_stream(k, n_max + 1))):
            yield IdentityReport.compare("ogf", {"k": k, "n": n}, c, t)


def _bt_ogf(k_max, n_max):
    for k in _ks(k_max):
        coeffs = genfun.expand_rational(genfun.bt_ogf(k), n_max + 1)
        for n, (c, t) in enumerate(zip(coeffs, transforms.bt_recurrence(k, n_max + 1))):
            yield IdentityReport.compare("bt_ogf", {"k": k, "n": n}, c, t)


def _egf(fn):
    def sweep(k_max, n_max):
        for k in _ks(k_max):
            yield from fn(k, n_max + 1)

    return sweep


def _tridiag(k_max, n_max):
    for k in _ks(k_max):
        for n in range(1, n_max + 1):
            yield from matrix.tridiag_spectral_checks(matrix.TridiagonalSpec(k, n))


IDENTITIES: dict[str, Sweep] = {
    "hom_paths": _hom_paths,
    "index_shift": _index_shift,
    "index_addition": _index_addition,
    "multiples": _multiples,
    "catalan": _catalan,
    "cassini": _cassini,
    "docagne": _docagne,
    "vajda": _vajda,
    "honsberger": _honsberger,
    "jacobsthal_relation": _per_kn(identities.jacobsthal_relation),
    "square_sum_product": _per_kn(identities.square_sum_product_relations),
    "limiting_ratio": _per_kn(_limiting_ratio, n_min=1),
    "partial_sum": _per_kn(transforms.partial_sum, n_min=1),
    "partial_sum_even": _per_kn(transforms.partial_sum_even, n_min=1),
    "partial_sum_odd": _per_kn(transforms.partial_sum_odd),
    "binomial_sum": _per_kn(transforms.binomial_sum, n_min=1),
    "alternating_binomial_sum": _per_kn(transforms.alternating_binomial_sum, n_min=2),
    "binomial_sum_vs_transform": _per_kn(_binomial_sum_vs_transform, n_min=1),
    "bt_paths": _bt_paths,
    "bt_shift": _per_kn(transforms.bt_shift_identity, n_offset=1),
    "ogf": _ogf,
    "bt_ogf": _bt_ogf,
    "egf": _egf(genfun.egf_check),
    "bt_egf": _egf(genfun.bt_egf_check),
    "u_power": _per_kn(matrix.u_power_checks, n_min=1),
    "tridiag": _tridiag,
}


@dataclass(frozen=True)
class VerifyConfig:
    identity_set: tuple[str, ...] = tuple(IDENTITIES)
    k_max: int = 8
    n_max: int = 64
    fail_fast: bool = False

    def __post_init__(self):
        if self.k_max < 1:
            raise ValueError(f"k_max must be >= 1, got {self.k_max}")
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        unknown = [name for name in self.identity_set if name not in IDENTITIES]
        if unknown:
            raise ValueError(f"unknown identities: {', '.join(unknown)}")


@dataclass
class IdentityTally:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[IdentityReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def sweep(name: str, k_max: int, n_max: int) -> Iterator[IdentityReport]:
    return IDENTITIES[name](k_max, n_max)


def run_verification(config: VerifyConfig) -> list[IdentityTally]:
    """Run the selected sweeps in registry order.

    With ``fail_fast`` the run stops after the first failing report; the
    tallies collected so far are returned.
    """
    tallies = []
    for name in IDENTITIES:
        if name not in config.identity_set:
            continue
        tally = IdentityTally(name)
        tallies.append(tally)
        for report in sweep(name, config.k_max, config.n_max):
            tally.total += 1
            if report.holds:
                tally.passed += 1
            else:
                tally.failures.append(report)
                if config.fail_fast:
                    return tallies
    return tallies
