"""Cross-checks of every closed-form pipeline against brute force.

Each check compares a generating-function or dynamic-programming result
with exhaustive enumeration over all 2^n strings, for every length up to
a bound.  Checks return named results with the first counterexample, so
a failure pinpoints the formula and index at fault.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .catalog import bitsum_triple, count_gf, cross_gf, defined_families, run_family
from .crossrun import cross_moment
from .ensembles import (
    StringClass,
    enumerate_joint,
    oracle_moment,
    iter_strings,
    run_stats,
    to_composition,
)
from .jointdp import joint_table
from .moments import run_moment

#: classes whose closed forms set the z^0 coefficient to 0 even though
#: the empty string is a member; comparisons start at n = 1 there.
_SKIP_EMPTY = {StringClass.MULTUS, StringClass.BIMULTUS, StringClass.PERSOLUS}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        status = "ok" if self.passed else "FAIL"
        return f"{self.name}: {status}" + (f" ({self.detail})" if self.detail else "")


def _first_n(string_class: StringClass) -> int:
    return 1 if string_class in _SKIP_EMPTY else 0


def check_counts(nmax: int) -> list:
    out = []
    for cls in StringClass:
        series = count_gf(cls).expand(nmax)
        bad = ""
        for n in range(_first_n(cls), nmax + 1):
            want = enumerate_joint(n, cls).total
            if series[n] != want:
                bad = f"n={n}: series {series[n]} != count {want}"
                break
        out.append(CheckResult(f"counts/{cls}", not bad, bad))
    return out


def check_bitsums(nmax: int) -> list:
    out = []
    for cls in (StringClass.BIMULTUS, StringClass.PERSOLUS):
        triple = bitsum_triple(cls)
        a = triple.a.expand(nmax)
        b = triple.b.expand(nmax)
        c = triple.c.expand(nmax)
        bad = ""
        for n in range(1, nmax + 1):
            dist = enumerate_joint(n, cls)
            wa = sum(cnt * s for (_, _, s), cnt in dist.counts)
            wb = sum(cnt * s * s for (_, _, s), cnt in dist.counts)
            wc = dist.total * wb - wa * wa
            if (a[n], b[n], c[n]) != (wa, wb, wc):
                bad = f"n={n}: ({a[n]},{b[n]},{c[n]}) != ({wa},{wb},{wc})"
                break
        out.append(CheckResult(f"bitsums/{cls}", not bad, bad))
    return out


def check_run_moments(nmax: int) -> list:
    out = []
    for cls, bit in defined_families():
        fam = run_family(cls, bit)
        bad = ""
        for n in range(max(1, fam.valid_from_n), nmax + 1):
            dist = enumerate_joint(n, cls)
            if dist.total == 0:
                continue
            for m in (1, 2, 3, 4):
                want = Fraction(
                    sum(cnt * key[bit] ** m for key, cnt in dist.counts),
                    dist.total,
                )
                got = run_moment(n, cls, bit, m)
                if got != want:
                    bad = f"n={n} m={m}: {got} != {want}"
                    break
            if bad:
                break
        out.append(CheckResult(f"run-moments/{cls}/bit{bit}", not bad, bad))
    return out


def check_cross_run(nmax: int) -> list:
    out = []
    for cls in (StringClass.UNCONSTRAINED, StringClass.MULTUS):
        bad = ""
        # two-run family coefficients
        for i in range(1, 7):
            for j in range(1, 7):
                series = cross_gf(cls, i, j).expand(nmax)
                for n in range(_first_n(cls), nmax + 1):
                    want = sum(
                        cnt
                        for (r0, r1, _), cnt in enumerate_joint(n, cls).counts
                        if r1 < i and r0 < j
                    )
                    if series[n] != want:
                        bad = f"f_{{{i},{j}}} n={n}: {series[n]} != {want}"
                        break
                if bad:
                    break
            if bad:
                break
        # product moments
        if not bad:
            for n in range(1, nmax + 1):
                dist = enumerate_joint(n, cls)
                if dist.total == 0:
                    continue
                want = oracle_moment(dist, "R0*R1")
                got = cross_moment(n, cls)
                if got != want:
                    bad = f"E(R0 R1) n={n}: {got} != {want}"
                    break
        out.append(CheckResult(f"cross-run/{cls}", not bad, bad))
    return out


def check_joint_dp(nmax: int) -> list:
    out = []
    for cls in (StringClass.UNCONSTRAINED, StringClass.SOLUS):
        bad = ""
        for n in range(nmax + 1):
            table = joint_table(n, cls)
            want: dict = {}
            for (r0, _, s), cnt in enumerate_joint(n, cls).counts:
                key = (n - s, r0)
                want[key] = want.get(key, 0) + cnt
            for x in range(n + 1):
                for y in range(x + 1):
                    if table.count(x, y) != want.get((x, y), 0):
                        bad = (
                            f"n={n} x={x} y={y}: "
                            f"{table.count(x, y)} != {want.get((x, y), 0)}"
                        )
                        break
                if bad:
                    break
            if bad:
                break
        out.append(CheckResult(f"joint-dp/{cls}", not bad, bad))
    return out


def check_compositions(nmax: int) -> list:
    bad = ""
    for n in range(nmax + 1):
        seen = set()
        for bits in iter_strings(n):
            parts = tuple(to_composition(bits))
            r0, _, s = run_stats(bits)
            if sum(parts) != n + 1:
                bad = f"n={n} {bits}: parts sum {sum(parts)} != {n + 1}"
            elif len(parts) != s + 1:
                bad = f"n={n} {bits}: {len(parts)} parts != bitsum+1 {s + 1}"
            elif max(parts) != r0 + 1:
                bad = f"n={n} {bits}: max part {max(parts)} != r0+1 {r0 + 1}"
            elif parts in seen:
                bad = f"n={n}: duplicate composition {parts}"
            if bad:
                break
            seen.add(parts)
        if not bad and len(seen) != 2**n:
            bad = f"n={n}: {len(seen)} compositions != {2**n}"
        if bad:
            break
    return [CheckResult("compositions", not bad, bad)]


_SCOPES = {
    "counts": check_counts,
    "bitsums": check_bitsums,
    "run-moments": check_run_moments,
    "cross-run": check_cross_run,
    "joint-dp": check_joint_dp,
    "compositions": check_compositions,
}


def available_scopes() -> Sequence[str]:
    return tuple(_SCOPES) + ("all",)


def run_checks(scope: str = "all", nmax: int = 10) -> list:
    """Run one named check suite, or every suite for scope 'all'."""
    if scope == "all":
        out = []
        for fn in _SCOPES.values():
            out.extend(fn(nmax))
        return out
    try:
        fn = _SCOPES[scope]
    except KeyError:
        raise ValueError(
            f"unknown scope {scope!r}; choose from {', '.join(available_scopes())}"
        ) from None
    return fn(nmax)
