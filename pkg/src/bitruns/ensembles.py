"""Bitstring ensembles, per-string statistics and the exhaustive oracle.

The five ensembles:

* unconstrained: every 0/1 string
* solus:     no two adjacent 1s
* multus:    every 1 has an adjacent 1
* bimultus:  every 1 has an adjacent 1 and every 0 has an adjacent 0
* persolus:  no two adjacent 1s and every 0 has an adjacent 0

Everything here is brute force on purpose: this module is the ground
truth that the generating-function and dynamic-programming pipelines are
checked against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .errors import EmptyEnsemble, OracleBoundExceeded

#: Largest n enumerate_joint accepts by default (2^24 strings).
DEFAULT_ORACLE_BOUND = 24


class StringClass(enum.Enum):
    UNCONSTRAINED = "unconstrained"
    SOLUS = "solus"
    MULTUS = "multus"
    BIMULTUS = "bimultus"
    PERSOLUS = "persolus"

    @classmethod
    def from_name(cls, name: str) -> "StringClass":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown string class {name!r}") from None

    def __str__(self) -> str:
        return self.value


class RunStats(NamedTuple):
    r0: int  # longest run of 0s
    r1: int  # longest run of 1s
    s: int   # bitsum (number of 1s)


def _ones_isolated_ok(v: int, n: int) -> bool:
    # solus: no two adjacent 1s
    return v & (v >> 1) == 0


def _ones_clumped_ok(v: int, n: int) -> bool:
    # multus: no isolated 1 bit
    return v & ~((v << 1) | (v >> 1)) == 0


def _zeros_clumped_ok(v: int, n: int) -> bool:
    mask = (1 << n) - 1
    c = ~v & mask
    return c & ~((c << 1) | (c >> 1)) & mask == 0


def class_member(bits: Sequence[int], string_class: StringClass) -> bool:
    """True iff the 0/1 sequence belongs to the class.  The empty string
    satisfies every predicate vacuously."""
    n = len(bits)
    v = 0
    for i, b in enumerate(bits):
        if b:
            v |= 1 << i
    return _int_member(v, n, string_class)


def _int_member(v: int, n: int, string_class: StringClass) -> bool:
    if string_class is StringClass.UNCONSTRAINED:
        return True
    if string_class is StringClass.SOLUS:
        return _ones_isolated_ok(v, n)
    if string_class is StringClass.MULTUS:
        return _ones_clumped_ok(v, n)
    if string_class is StringClass.BIMULTUS:
        return _ones_clumped_ok(v, n) and _zeros_clumped_ok(v, n)
    return _ones_isolated_ok(v, n) and _zeros_clumped_ok(v, n)


def run_stats(bits: Sequence[int]) -> RunStats:
    """Longest 0-run, longest 1-run and bitsum of the sequence."""
    r0 = r1 = s = 0
    cur = -1
    run = 0
    for b in bits:
        run = run + 1 if b == cur else 1
        cur = b
        if b:
            s += 1
            if run > r1:
                r1 = run
        elif run > r0:
            r0 = run
    return RunStats(r0, r1, s)


def _longest_one_run(v: int) -> int:
    r = 0
    while v:
        v &= v >> 1
        r += 1
    return r


def _int_run_stats(v: int, n: int) -> RunStats:
    mask = (1 << n) - 1
    return RunStats(
        _longest_one_run(~v & mask),
        _longest_one_run(v),
        bin(v).count("1"),
    )


@dataclass(frozen=True)
class JointDistribution:
    """Exact counts of (r0, r1, s) triples over all class strings of length n."""

    n: int
    string_class: StringClass
    counts: tuple  # ((r0, r1, s), count) pairs, sorted
    total: int

    def count(self, r0: int, r1: int, s: int) -> int:
        return dict(self.counts).get((r0, r1, s), 0)


def enumerate_joint(
    n: int,
    string_class: StringClass,
    bound: int = DEFAULT_ORACLE_BOUND,
) -> JointDistribution:
    """Enumerate all 2^n candidates and tally (r0, r1, s) for class members."""
    if n > bound:
        raise OracleBoundExceeded(f"n={n} exceeds the oracle bound {bound}")
    acc: dict = {}
    for v in range(1 << n):
        if _int_member(v, n, string_class):
            key = _int_run_stats(v, n)
            acc[key] = acc.get(key, 0) + 1
    counts = tuple(sorted(acc.items()))
    return JointDistribution(n, string_class, counts, sum(acc.values()))


#: Statistics oracle_moment understands, as functions of (r0, r1, s).
MOMENT_EXPRS = {
    "R0": lambda r0, r1, s: r0,
    "R1": lambda r0, r1, s: r1,
    "S": lambda r0, r1, s: s,
    "R0^2": lambda r0, r1, s: r0 * r0,
    "R1^2": lambda r0, r1, s: r1 * r1,
    "S^2": lambda r0, r1, s: s * s,
    "R0*R1": lambda r0, r1, s: r0 * r1,
    "R0*S": lambda r0, r1, s: r0 * s,
}


def oracle_moment(dist: JointDistribution, expr: str) -> Fraction:
    """Exact expectation of expr under the uniform distribution on the class."""
    if dist.total == 0:
        raise EmptyEnsemble(
            f"no {dist.string_class} strings of length {dist.n}"
        )
    f = MOMENT_EXPRS[expr]
    num = sum(f(*key) * c for key, c in dist.counts)
    return Fraction(num, dist.total)


def to_composition(bits: Sequence[int]) -> list:
    """Waiting-time composition of the string with a 1 appended.

    Parts are the gaps between successive 1s (each part is one plus the
    number of 0s preceding that 1).  Parts sum to len(bits)+1, the number
    of parts is the bitsum of the appended string, and the largest part
    is the longest 0-run plus one.
    """
    parts = []
    gap = 0
    for b in list(bits) + [1]:
        gap += 1
        if b:
            parts.append(gap)
            gap = 0
    return parts


def iter_strings(n: int) -> Iterator[tuple]:
    """All 0/1 tuples of length n, in integer order (bit i = position i)."""
    for v in range(1 << n):
        yield tuple((v >> i) & 1 for i in range(n))
