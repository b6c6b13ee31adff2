from fractions import Fraction

import pytest

from bitruns.catalog import defined_families
from bitruns.ensembles import StringClass, enumerate_joint
from bitruns.errors import EmptyEnsemble, UnsupportedMoment
from bitruns.moments import (
    moment_weight,
    run_moment,
    run_variance_report,
)


def test_moment_weight_telescopes():
    for m in range(1, 5):
        for k in range(1, 8):
            assert moment_weight(m, k) == k**m - (k - 1) ** m


def test_moment_weight_out_of_range():
    with pytest.raises(UnsupportedMoment):
        moment_weight(5, 1)
    with pytest.raises(UnsupportedMoment):
        moment_weight(0, 1)


def test_run_moment_matches_oracle():
    for cls, bit in defined_families():
        for n in range(1, 9):
            dist = enumerate_joint(n, cls)
            if dist.total == 0:
                continue
            for m in (1, 2, 3, 4):
                want = Fraction(
                    sum(cnt * key[bit] ** m for key, cnt in dist.counts),
                    dist.total,
                )
                assert run_moment(n, cls, bit, m) == want, (cls, bit, n, m)


def test_run_moment_known_value():
    # mean longest 1-run over the 4 strings of length 2: (0+1+1+2)/4
    assert run_moment(2, StringClass.UNCONSTRAINED, 1, 1) == 1


def test_run_moment_empty_ensemble():
    with pytest.raises(EmptyEnsemble):
        run_moment(1, StringClass.BIMULTUS, 0, 1)


def test_run_moment_negative_length():
    with pytest.raises(ValueError):
        run_moment(-1, StringClass.SOLUS, 0, 1)


def test_run_variance_report():
    r = run_variance_report(10, StringClass.SOLUS, 0)
    assert r.variance == r.second_moment - r.mean * r.mean
    assert r.mean == run_moment(10, StringClass.SOLUS, 0, 1)
    assert r.fourth_moment == run_moment(10, StringClass.SOLUS, 0, 4)
    assert r.variance > 0
