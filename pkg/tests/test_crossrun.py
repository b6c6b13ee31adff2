from fractions import Fraction

import pytest

from bitruns.crossrun import (
    cross_moment,
    cross_numerator,
    cross_report,
    cross_report_oracle,
    cross_report_table,
)
from bitruns.ensembles import StringClass, enumerate_joint
from bitruns.errors import DegenerateVariance, UnsupportedClass


@pytest.mark.parametrize("cls", [StringClass.UNCONSTRAINED, StringClass.MULTUS])
def test_cross_moment_matches_oracle(cls):
    for n in range(1, 11):
        dist = enumerate_joint(n, cls)
        if dist.total == 0:
            continue
        want = Fraction(
            sum(c * r0 * r1 for (r0, r1, _), c in dist.counts), dist.total
        )
        assert cross_moment(n, cls) == want, (cls, n)


def test_cross_numerator_unsupported_class():
    with pytest.raises(UnsupportedClass):
        cross_numerator(StringClass.PERSOLUS, 5)


def test_cross_report_consistency():
    r = cross_report(12, StringClass.UNCONSTRAINED)
    o = cross_report_oracle(12, StringClass.UNCONSTRAINED)
    assert (r.mean_r0, r.mean_r1) == (o.mean_r0, o.mean_r1)
    assert (r.var_r0, r.var_r1) == (o.var_r0, o.var_r1)
    assert r.covariance == o.covariance
    assert r.rho == o.rho


def test_cross_report_symmetry_unconstrained():
    r = cross_report(9, StringClass.UNCONSTRAINED)
    assert r.mean_r0 == r.mean_r1
    assert r.var_r0 == r.var_r1


def test_cross_report_table_alignment():
    table = cross_report_table([5, 10], StringClass.MULTUS)
    assert [r.n for r in table] == [5, 10]
    assert table[1].rho == cross_report(10, StringClass.MULTUS).rho


def test_cross_report_oracle_any_class():
    r = cross_report_oracle(8, StringClass.BIMULTUS)
    assert r.covariance == r.mean_product - r.mean_r0 * r.mean_r1
    assert r.rho.startswith("-")  # negatively correlated


def test_degenerate_variance():
    with pytest.raises(DegenerateVariance):
        cross_report(0, StringClass.UNCONSTRAINED)
