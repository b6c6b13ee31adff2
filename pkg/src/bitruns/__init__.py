"""Exact run-length and bitsum statistics of constrained bitstrings.

Five ensembles of 0/1 strings are supported: unconstrained strings,
strings with no two adjacent 1s (solus), strings where every 1 has an
adjacent 1 (multus), the two-sided variant where every 0 also has an
adjacent 0 (bimultus), and isolated 1s with clumped 0s (persolus).
The package computes, exactly over the rationals:

* ensemble counts and bitsum statistics from rational generating
  functions;
* moments of the longest run of a designated bit;
* correlations between the two longest runs and between the longest
  zero run and the bitsum;
* few-ones counts with piecewise polynomial closed forms;
* conjectured asymptotes and limit constants at 50-digit precision.

Every closed-form pipeline is verifiable against exhaustive enumeration
via :mod:`bitruns.verify` or ``bitruns verify`` on the command line.
"""

from .asymptotics import (
    density_limits,
    finite_vs_asymptote,
    growth_constant,
    mean_asymptote,
    variance_limit,
)
from .catalog import bitsum_triple, count_gf, cross_gf, run_family
from .crossrun import cross_moment, cross_report, cross_report_oracle, cross_report_table
from .ensembles import (
    JointDistribution,
    RunStats,
    StringClass,
    class_member,
    enumerate_joint,
    oracle_moment,
    run_stats,
    to_composition,
)
from .errors import BitrunsError
from .jointdp import (
    fewones_closed_form,
    fewones_count,
    fewones_peak,
    joint_rs_report,
    joint_table,
    rs_numerator_approx,
)
from .moments import run_moment, run_variance_report
from .series import RationalGF, TruncatedSeries
from .verify import run_checks

__version__ = "1.0.0"

__all__ = [
    "BitrunsError",
    "JointDistribution",
    "RationalGF",
    "RunStats",
    "StringClass",
    "TruncatedSeries",
    "bitsum_triple",
    "class_member",
    "count_gf",
    "cross_gf",
    "cross_moment",
    "cross_report",
    "cross_report_oracle",
    "cross_report_table",
    "density_limits",
    "enumerate_joint",
    "fewones_closed_form",
    "fewones_count",
    "fewones_peak",
    "finite_vs_asymptote",
    "growth_constant",
    "joint_rs_report",
    "joint_table",
    "mean_asymptote",
    "oracle_moment",
    "rs_numerator_approx",
    "run_family",
    "run_moment",
    "run_stats",
    "run_variance_report",
    "run_checks",
    "to_composition",
    "variance_limit",
    "__version__",
]
