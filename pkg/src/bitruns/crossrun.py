"""Correlation between the longest 0-run and the longest 1-run.

The product sum over a class comes from the two-run families f_{i,j}
(strings with no run of i ones and no run of j zeros) via

    sum_{i,j >= 1} i j (f_{i+1,j+1} - f_{i,j+1} - f_{i+1,j} + f_{i,j}),

whose z^n coefficient is the sum of R1 * R0 over class strings of
length n.  Truncating both indices at n + 1 is exact through z^n.
Closed two-run families exist for the unconstrained and multus classes;
the exhaustive oracle covers the rest at small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .catalog import cross_gf
from .ensembles import (
    DEFAULT_ORACLE_BOUND,
    StringClass,
    enumerate_joint,
    oracle_moment,
)
from .errors import DegenerateVariance
from .moments import _counts_cached, _numerator_cached
from .render import signed_sqrt_ratio
from .series import TruncatedSeries


def cross_numerator(string_class: StringClass, order: int) -> TruncatedSeries:
    """Series whose z^n coefficient sums R0 * R1 over the class."""
    acc = TruncatedSeries.zero(order)

    @lru_cache(maxsize=None)
    def f(i: int, j: int) -> TruncatedSeries:
        return cross_gf(string_class, i, j).expand(order)

    for i in range(1, order + 2):
        for j in range(1, order + 2):
            term = f(i + 1, j + 1) - f(i, j + 1) - f(i + 1, j) + f(i, j)
            acc = acc + term.scale(i * j)
    return acc


@lru_cache(maxsize=None)
def _cross_numerator_cached(string_class: StringClass, order: int) -> TruncatedSeries:
    return cross_numerator(string_class, order)


def cross_moment(n: int, string_class: StringClass) -> Fraction:
    """Exact E[R0 * R1] over class strings of length n."""
    return Fraction(
        _cross_numerator_cached(string_class, n)[n],
        _counts_cached(string_class, n)[n],
    )


@dataclass(frozen=True)
class CrossReport:
    """Exact joint moments of the two longest runs plus their correlation
    rendered to 6 places."""

    n: int
    string_class: StringClass
    mean_r0: Fraction
    mean_r1: Fraction
    var_r0: Fraction
    var_r1: Fraction
    mean_product: Fraction
    covariance: Fraction
    rho: str


def _assemble(n, string_class, er0, er1, er0sq, er1sq, er0r1) -> CrossReport:
    v0 = er0sq - er0 * er0
    v1 = er1sq - er1 * er1
    if v0 == 0 or v1 == 0:
        raise DegenerateVariance(
            f"zero run-length variance at n={n} for {string_class}"
        )
    cov = er0r1 - er0 * er1
    return CrossReport(
        n=n,
        string_class=string_class,
        mean_r0=er0,
        mean_r1=er1,
        var_r0=v0,
        var_r1=v1,
        mean_product=er0r1,
        covariance=cov,
        rho=signed_sqrt_ratio(cov, v0 * v1),
    )


def cross_report_table(ns: Sequence[int], string_class: StringClass) -> list:
    """CrossReports for several lengths from one set of series expansions."""
    order = max(ns)
    xnum = _cross_numerator_cached(string_class, order)
    counts = _counts_cached(string_class, order)
    num = {
        (bit, m): _numerator_cached(string_class, bit, m, order)
        for bit in (0, 1)
        for m in (1, 2)
    }
    out = []
    for n in ns:
        d = counts[n]
        out.append(
            _assemble(
                n,
                string_class,
                Fraction(num[(0, 1)][n], d),
                Fraction(num[(1, 1)][n], d),
                Fraction(num[(0, 2)][n], d),
                Fraction(num[(1, 2)][n], d),
                Fraction(xnum[n], d),
            )
        )
    return out


def cross_report(n: int, string_class: StringClass) -> CrossReport:
    return cross_report_table([n], string_class)[0]


def cross_report_oracle(
    n: int,
    string_class: StringClass,
    bound: int = DEFAULT_ORACLE_BOUND,
) -> CrossReport:
    """Same report by exhaustive enumeration; works for every class."""
    dist = enumerate_joint(n, string_class, bound)
    return _assemble(
        n,
        string_class,
        oracle_moment(dist, "R0"),
        oracle_moment(dist, "R1"),
        oracle_moment(dist, "R0^2"),
        oracle_moment(dist, "R1^2"),
        oracle_moment(dist, "R0*R1"),
    )
