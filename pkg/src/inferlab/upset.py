"""Exact algebra of ultimately periodic subsets of the naturals.

A set is described by a finite prefix bit string P and a nonempty period bit
string Q: membership of x is P[x] for x < |P| and Q[(x - |P|) mod |Q|]
otherwise. Every such set has a unique canonical form (shortest period,
then shortest prefix); all constructors normalize, so two UPSet values
denote the same subset iff they are equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable


class Relation(Enum):
    EQUAL = "equal"
    PROPER_SUBSET = "proper_subset"
    PROPER_SUPERSET = "proper_superset"
    INCOMPARABLE = "incomparable"


_BITS = frozenset("01")


def _minimal_period(q: str) -> str:
    # The period lengths of a purely periodic infinite word are closed under
    # gcd, so the minimal one divides |q|; scan divisors in increasing order.
    n = len(q)
    for d in range(1, n):
        if n % d == 0 and all(q[i] == q[i % d] for i in range(n)):
            return q[:d]
    return q


@dataclass(frozen=True)
class UPSet:
    """Canonical ultimately periodic subset of the naturals."""

    prefix: str
    period: str

    def __post_init__(self):
        if not isinstance(self.prefix, str) or not isinstance(self.period, str):
            raise ValueError("prefix and period must be bit strings")
        if not self.period:
            raise ValueError("period must be nonempty")
        if not (set(self.prefix) <= _BITS and set(self.period) <= _BITS):
            raise ValueError(
                f"bit strings over 0/1 expected, got {self.prefix!r}|{self.period!r}"
            )
        p, q = self.prefix, _minimal_period(self.period)
        # Dropping the last prefix bit is sound iff it matches the bit the
        # period would produce there, i.e. the period's last bit once the
        # period is rotated right. Rotation keeps the minimal period length.
        while p and p[-1] == q[-1]:
            p, q = p[:-1], q[-1] + q[:-1]
        object.__setattr__(self, "prefix", p)
        object.__setattr__(self, "period", q)

    def member(self, x: int) -> bool:
        if x < 0:
            raise ValueError("naturals only")
        if x < len(self.prefix):
            return self.prefix[x] == "1"
        return self.period[(x - len(self.prefix)) % len(self.period)] == "1"

    def __contains__(self, x: int) -> bool:
        return self.member(x)

    def is_finite(self) -> bool:
        return "1" not in self.period

    def is_cofinite(self) -> bool:
        return "0" not in self.period

    def __str__(self) -> str:
        return f"{self.prefix}|{self.period}"

    def __repr__(self) -> str:
        return f"UPSet({str(self)!r})"


EMPTY = UPSet("", "0")
NATURALS = UPSet("", "1")


def normalize(prefix: str, period: str) -> UPSet:
    """Canonical form of a raw prefix/period description."""
    return UPSet(prefix, period)


def parse(text: str) -> UPSet:
    """Parse the P|Q notation, e.g. '|10' (evens) or '10|1' (all but 1)."""
    if text.count("|") != 1:
        raise ValueError(f"expected exactly one '|' in {text!r}")
    prefix, period = text.split("|")
    return UPSet(prefix, period)


def member(u: UPSet, x: int) -> bool:
    return u.member(x)


def bounded_elements(u: UPSet, bound: int) -> tuple[int, ...]:
    """All members x <= bound, increasing."""
    return tuple(x for x in range(bound + 1) if u.member(x))


def min_element(u: UPSet) -> int | None:
    """Smallest member, or None for the empty set."""
    for x in range(len(u.prefix) + len(u.period)):
        if u.member(x):
            return x
    return None


def from_elements(xs: Iterable[int]) -> UPSet:
    """The finite set with exactly the given elements."""
    elems = set(xs)
    if not elems:
        return EMPTY
    if min(elems) < 0:
        raise ValueError("naturals only")
    top = max(elems)
    bits = "".join("1" if x in elems else "0" for x in range(top + 1))
    return UPSet(bits, "0")


def _aligned_bound(a: UPSet, b: UPSet) -> tuple[int, int]:
    n = max(len(a.prefix), len(b.prefix))
    return n, math.lcm(len(a.period), len(b.period))


@lru_cache(maxsize=None)
def relate(a: UPSet, b: UPSet) -> Relation:
    """Exact subset relation between two sets.

    After the longer prefix both membership sequences are periodic with the
    lcm of the periods, so one full common cycle decides the comparison.
    """
    n, cycle = _aligned_bound(a, b)
    a_extra = b_extra = False
    for x in range(n + cycle):
        ma, mb = a.member(x), b.member(x)
        a_extra = a_extra or (ma and not mb)
        b_extra = b_extra or (mb and not ma)
    if a_extra and b_extra:
        return Relation.INCOMPARABLE
    if a_extra:
        return Relation.PROPER_SUPERSET
    if b_extra:
        return Relation.PROPER_SUBSET
    return Relation.EQUAL


def is_subset(a: UPSet, b: UPSet) -> bool:
    return relate(a, b) in (Relation.EQUAL, Relation.PROPER_SUBSET)


def _pointwise(a: UPSet, b: UPSet, op) -> UPSet:
    n, cycle = _aligned_bound(a, b)
    bits = "".join(
        "1" if op(a.member(x), b.member(x)) else "0" for x in range(n + cycle)
    )
    return UPSet(bits[:n], bits[n:])


@lru_cache(maxsize=None)
def union(a: UPSet, b: UPSet) -> UPSet:
    return _pointwise(a, b, lambda x, y: x or y)


@lru_cache(maxsize=None)
def intersection(a: UPSet, b: UPSet) -> UPSet:
    return _pointwise(a, b, lambda x, y: x and y)


@lru_cache(maxsize=None)
def difference(a: UPSet, b: UPSet) -> UPSet:
    return _pointwise(a, b, lambda x, y: x and not y)


@lru_cache(maxsize=None)
def complement(a: UPSet) -> UPSet:
    flip = str.maketrans("01", "10")
    return UPSet(a.prefix.translate(flip), a.period.translate(flip))


_COMBINE_OPS = {"union": union, "intersection": intersection, "difference": difference}


def combine(kind: str, a: UPSet, b: UPSet) -> UPSet:
    try:
        op = _COMBINE_OPS[kind]
    except KeyError:
        raise ValueError(f"unknown combine kind {kind!r}") from None
    return op(a, b)
