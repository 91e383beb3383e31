"""Coded caching: exact rates, zero-error scheme simulation, verification."""

from fractions import Fraction

from . import _core
from ._core import (
    GranularityError,
    binomial,
    coded_decode,
    coded_delivery,
    coded_placement,
    generate_library,
    subsets,
    trace,
)

__all__ = [
    "GranularityError",
    "binomial",
    "subsets",
    "generate_library",
    "coded_placement",
    "coded_delivery",
    "coded_decode",
    "achievable_rate",
    "rate_uncoded",
    "cutset_bound",
    "exact_tradeoff_2x2",
    "gap_ratio",
    "verify",
    "tradeoff",
    "gap_scan",
    "trace",
]


def _q(pair):
    return Fraction(*pair)


def _m(memory):
    m = Fraction(memory)
    return (m.numerator, m.denominator)


def achievable_rate(files, users, memory):
    return _q(_core.achievable_rate(files, users, _m(memory)))


def rate_uncoded(files, users, memory):
    return _q(_core.rate_uncoded(files, users, _m(memory)))


def cutset_bound(files, users, memory):
    return _q(_core.cutset_bound(files, users, _m(memory)))


def exact_tradeoff_2x2(memory):
    return _q(_core.exact_tradeoff_2x2(_m(memory)))


def gap_ratio(files, users, memory):
    r = _core.gap_ratio(files, users, _m(memory))
    return None if r is None else _q(r)


def verify(files, users, memory, file_bits=0, seed=1, samples=None, scheme="auto", threads=0):
    """Place once, deliver and decode every demand. Returns a dict; rates are Fractions."""
    report = _core.verify(files, users, _m(memory), file_bits, seed, samples or 0, scheme, threads)
    for key in ("analytic_rate", "achievable_rate", "analytic_bits", "padding_overhead"):
        report[key] = _q(report[key])
    return report


def tradeoff(files, users, grid=None, exact_2x2=False):
    """Rows of (M, R_coded, R_uncoded, R_cutset[, R_exact]) as Fractions."""
    rows = _core.tradeoff(files, users, grid or 4 * users + 1, exact_2x2)
    return [tuple(_q(v) for v in row) for row in rows]


def gap_scan(max_files, max_users, grid=0):
    report = _core.gap_scan(max_files, max_users, grid)
    report["max_ratio"] = _q(report["max_ratio"])
    report["arg_memory"] = _q(report["arg_memory"])
    return report
