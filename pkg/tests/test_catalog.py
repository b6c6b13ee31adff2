import pytest

from bitruns.catalog import (
    CROSS_MIN_CLOSED,
    bitsum_triple,
    count_gf,
    cross_gf,
    defined_families,
    run_family,
)
from bitruns.ensembles import StringClass, enumerate_joint
from bitruns.errors import UndefinedFamily, UnsupportedClass


def test_count_gf_prefixes():
    assert count_gf(StringClass.UNCONSTRAINED).expand(5).coeffs == (1, 2, 4, 8, 16, 32)
    assert count_gf(StringClass.SOLUS).expand(7).coeffs == (1, 2, 3, 5, 8, 13, 21, 34)
    assert count_gf(StringClass.MULTUS).expand(7).coeffs == (1, 1, 2, 4, 7, 12, 21, 37)
    assert count_gf(StringClass.BIMULTUS).expand(7).coeffs == (0, 0, 2, 2, 4, 6, 10, 16)
    assert count_gf(StringClass.PERSOLUS).expand(7).coeffs == (0, 1, 1, 3, 4, 5, 8, 12)


def test_bitsum_triples_match_oracle():
    for cls in (StringClass.BIMULTUS, StringClass.PERSOLUS):
        t = bitsum_triple(cls)
        a, b, c = t.a.expand(9), t.b.expand(9), t.c.expand(9)
        d = count_gf(cls).expand(9)
        for n in range(1, 10):
            dist = enumerate_joint(n, cls)
            wa = sum(cnt * s for (_, _, s), cnt in dist.counts)
            wb = sum(cnt * s * s for (_, _, s), cnt in dist.counts)
            assert a[n] == wa
            assert b[n] == wb
            assert c[n] == d[n] * wb - wa * wa


def test_bitsum_triple_unsupported():
    with pytest.raises(UnsupportedClass):
        bitsum_triple(StringClass.SOLUS)


def test_defined_families():
    fams = defined_families()
    assert len(fams) == 8
    assert (StringClass.SOLUS, 1) not in fams
    assert (StringClass.PERSOLUS, 1) not in fams


def test_run_family_undefined():
    with pytest.raises(UndefinedFamily):
        run_family(StringClass.SOLUS, 1)
    with pytest.raises(UndefinedFamily):
        run_family(StringClass.PERSOLUS, 1)


def test_hk_counts_no_long_runs():
    """H_k expansions count class strings whose longest bit-run is < k."""
    for cls, bit in defined_families():
        fam = run_family(cls, bit)
        for k in range(fam.min_valid_k, 7):
            series = fam.hk(k).expand(9)
            for n in range(max(fam.valid_from_n, 1), 10):
                want = sum(
                    cnt
                    for key, cnt in enumerate_joint(n, cls).counts
                    if key[bit] < k
                )
                assert series[n] == want, (cls, bit, k, n)


def test_h_is_count_gf_limit():
    # for large k the no-k-run constraint is vacuous at small n
    for cls, bit in defined_families():
        fam = run_family(cls, bit)
        assert fam.hk(12).expand(9).coeffs == fam.H.expand(9).coeffs


def test_cross_gf_counts():
    for cls in (StringClass.UNCONSTRAINED, StringClass.MULTUS):
        start = 0 if cls is StringClass.UNCONSTRAINED else 1
        for i in range(1, 6):
            for j in range(1, 6):
                series = cross_gf(cls, i, j).expand(8)
                for n in range(start, 9):
                    want = sum(
                        cnt
                        for (r0, r1, _), cnt in enumerate_joint(n, cls).counts
                        if r1 < i and r0 < j
                    )
                    assert series[n] == want, (cls, i, j, n)


def test_cross_gf_min_closed_metadata():
    assert CROSS_MIN_CLOSED[StringClass.UNCONSTRAINED] == 1
    assert CROSS_MIN_CLOSED[StringClass.MULTUS] == 2


def test_cross_gf_rejects_bad_input():
    with pytest.raises(ValueError):
        cross_gf(StringClass.UNCONSTRAINED, 0, 1)
    with pytest.raises(UnsupportedClass):
        cross_gf(StringClass.BIMULTUS, 2, 2)
