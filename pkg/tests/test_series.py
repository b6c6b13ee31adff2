import pytest

from bitruns.errors import NonUnitConstantTerm
from bitruns.series import (
    RationalGF,
    TruncatedSeries,
    gf_expand,
    monomial,
    poly,
    poly_add,
    poly_mul,
    poly_scale,
)


def test_poly_normalizes_trailing_zeros():
    assert poly([1, 2, 0, 0]) == (1, 2)
    assert poly([0, 0]) == (0,)


def test_monomial():
    assert monomial(3) == (0, 0, 0, 1)
    assert monomial(0, 5) == (5,)


def test_poly_arithmetic():
    assert poly_add((1, 2), (0, 1, 4)) == (1, 3, 4)
    assert poly_scale((1, -2), 3) == (3, -6)
    assert poly_mul((1, 1), (1, -1)) == (1, 0, -1)
    assert poly_add((1, 1), (-1, -1)) == (0,)


def test_series_requires_constant_term():
    with pytest.raises(ValueError):
        TruncatedSeries([])


def test_series_order_and_indexing():
    s = TruncatedSeries([1, 2, 3])
    assert s.order == 2
    assert s[1] == 2
    assert s == TruncatedSeries((1, 2, 3))


def test_series_arithmetic_takes_min_order():
    a = TruncatedSeries([1, 1, 1, 1])
    b = TruncatedSeries([1, 2, 3])
    assert (a + b).coeffs == (2, 3, 4)
    assert (a - b).coeffs == (0, -1, -2)
    assert a.scale(2).coeffs == (2, 2, 2, 2)


def test_series_product_is_cauchy():
    geom = TruncatedSeries([1] * 5)
    sq = geom * geom
    assert sq.coeffs == (1, 2, 3, 4, 5)


def test_truncate():
    s = TruncatedSeries([1, 2, 3])
    assert s.truncate(1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        s.truncate(5)


def test_from_poly_pads():
    assert TruncatedSeries.from_poly((1, 2), 4).coeffs == (1, 2, 0, 0, 0)


def test_gf_expand_fibonacci():
    gf = RationalGF((1,), (1, -1, -1))
    assert gf.expand(8).coeffs == (1, 1, 2, 3, 5, 8, 13, 21, 34)


def test_gf_expand_negative_unit_denominator():
    assert gf_expand(RationalGF((-1,), (-1, 2)), 4).coeffs == (1, 2, 4, 8, 16)


def test_gf_expand_requires_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        RationalGF((1,), (2, -1)).expand(3)


def test_gf_zero_denominator_constant_rejected():
    with pytest.raises(ValueError):
        RationalGF((1,), (0, 1))
