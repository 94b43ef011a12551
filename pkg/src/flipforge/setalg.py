"""Subset algebra over finite Abelian groups: sumsets, inverses, sum-freeness.

Also hosts the interval disjointness checker used by the two-colour
construction: given intervals A0 < B0 inside (n/8, n/4) and B1 inside B0,
the symmetrised sets A and B satisfy (A+B) and A disjoint, plus two further
disjointness facts involving the involution n/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .group import ElementLike, GroupElement, GroupSpec, cyclic


@dataclass(frozen=True)
class GroupSubset:
    """Immutable subset of a fixed group."""

    spec: GroupSpec
    elements: frozenset[GroupElement]

    @staticmethod
    def of(spec: GroupSpec, items: Iterable[ElementLike]) -> "GroupSubset":
        return GroupSubset(spec, frozenset(spec.element(x) for x in items))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: ElementLike) -> bool:
        return self.spec.element(item) in self.elements

    def sorted_elements(self) -> list[GroupElement]:
        return sorted(self.elements)

    def union(self, other: "GroupSubset") -> "GroupSubset":
        _check_same_spec(self, other)
        return GroupSubset(self.spec, self.elements | other.elements)

    def intersection(self, other: "GroupSubset") -> "GroupSubset":
        _check_same_spec(self, other)
        return GroupSubset(self.spec, self.elements & other.elements)

    def is_disjoint(self, other: "GroupSubset") -> bool:
        _check_same_spec(self, other)
        return not (self.elements & other.elements)

    def contains_identity(self) -> bool:
        return self.spec.identity in self.elements


def _check_same_spec(a: GroupSubset, b: GroupSubset) -> None:
    if a.spec != b.spec:
        raise ValueError(f"subsets live in different groups: {a.spec} vs {b.spec}")


def sumset(a: GroupSubset, b: GroupSubset) -> GroupSubset:
    """All pairwise sums x + y for x in a, y in b."""
    _check_same_spec(a, b)
    spec = a.spec
    out = {spec.add(x, y) for x in a.elements for y in b.elements}
    return GroupSubset(spec, frozenset(out))


def inverses(a: GroupSubset) -> GroupSubset:
    return GroupSubset(a.spec, frozenset(a.spec.neg(x) for x in a.elements))


def is_sum_free(a: GroupSubset) -> bool:
    """No x, y, z in the set with x + y = z (x = y allowed)."""
    return a.is_disjoint(sumset(a, a))


def is_inverse_closed(a: GroupSubset) -> bool:
    return a.elements == inverses(a).elements


def set_less(a: GroupSubset, b: GroupSubset) -> bool:
    """Strict elementwise order over a single cyclic factor: every x < every y."""
    _check_same_spec(a, b)
    if len(a.spec.factors) != 1:
        raise ValueError("set_less is defined for single cyclic factor groups only")
    return all(x[0] < y[0] for x in a.elements for y in b.elements)


@dataclass(frozen=True)
class ResidueInterval:
    """Integer interval {lo, ..., hi} of residues mod n, 0 <= lo <= hi < n."""

    n: int
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        if not (0 <= self.lo <= self.hi < self.n):
            raise ValueError(f"interval needs 0 <= lo <= hi < n, got lo={self.lo} hi={self.hi} n={self.n}")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def to_json_dict(self) -> dict:
        return {"n": self.n, "lo": self.lo, "hi": self.hi}


def interval_elements(interval: ResidueInterval) -> GroupSubset:
    spec = cyclic(interval.n)
    return GroupSubset.of(spec, range(interval.lo, interval.hi + 1))


def doubled(a: GroupSubset) -> GroupSubset:
    """The sumset a + a."""
    return sumset(a, a)


@dataclass(frozen=True)
class IntervalSumsetReport:
    """Outcome of the interval disjointness check.

    half_plus_b_avoids_a is None when the min(B1) >= 3n/16 hypothesis is not
    met, in which case that clause is not asserted.
    """

    n: int
    a_set: GroupSubset
    b_set: GroupSubset
    ab_avoids_a: bool
    half_shift_avoids_a: bool
    b1_hypothesis_met: bool
    half_plus_b_avoids_a: Optional[bool]

    @property
    def all_asserted_hold(self) -> bool:
        if not (self.ab_avoids_a and self.half_shift_avoids_a):
            return False
        if self.b1_hypothesis_met:
            return bool(self.half_plus_b_avoids_a)
        return True

    def to_json_dict(self) -> dict:
        from .group import format_elements
        return {
            "n": self.n,
            "a_set": format_elements(self.a_set.elements),
            "b_set": format_elements(self.b_set.elements),
            "ab_avoids_a": self.ab_avoids_a,
            "half_shift_avoids_a": self.half_shift_avoids_a,
            "b1_hypothesis_met": self.b1_hypothesis_met,
            "half_plus_b_avoids_a": self.half_plus_b_avoids_a,
        }


def interval_sumset_check(
    n: int,
    a0: ResidueInterval,
    b0: ResidueInterval,
    b1: ResidueInterval,
) -> IntervalSumsetReport:
    """Build A = A0 u A0^-1 and B = B0 u B0^-1 u 2B1 u 2B1^-1, then test disjointness.

    Preconditions: n divisible by 8 (so the open interval (n/8, n/4) has integer
    endpoints, both excluded); A0 and B0 non-empty disjoint sub-intervals of that
    open interval with A0 entirely below B0; B1 a sub-interval of B0.
    Every reported boolean is computed by direct sumset evaluation.
    """
    if n % 8 != 0:
        raise ValueError(f"modulus must be divisible by 8, got {n}")
    for name, iv in (("A0", a0), ("B0", b0), ("B1", b1)):
        if iv.n != n:
            raise ValueError(f"{name} has modulus {iv.n}, expected {n}")
    eighth = n // 8
    quarter = n // 4
    for name, iv in (("A0", a0), ("B0", b0)):
        if iv.lo <= eighth or iv.hi >= quarter:
            raise ValueError(f"{name} must lie strictly inside (n/8, n/4) = ({eighth}, {quarter})")
    if a0.hi >= b0.lo:
        raise ValueError(f"A0 must lie entirely below B0, got A0 hi {a0.hi} >= B0 lo {b0.lo}")
    if not (b0.lo <= b1.lo and b1.hi <= b0.hi):
        raise ValueError(f"B1 must be a sub-interval of B0, got [{b1.lo},{b1.hi}] vs [{b0.lo},{b0.hi}]")

    spec = cyclic(n)
    a_base = interval_elements(a0)
    b_base = interval_elements(b0)
    b1_base = interval_elements(b1)
    a_set = a_base.union(inverses(a_base))
    two_b1 = doubled(b1_base)
    b_set = b_base.union(inverses(b_base)).union(two_b1).union(inverses(two_b1))

    half = GroupSubset.of(spec, [n // 2])
    ab_avoids_a = sumset(a_set, b_set).is_disjoint(a_set)
    half_shift_avoids_a = sumset(a_set, half).is_disjoint(a_set)
    hypothesis = 16 * b1.lo >= 3 * n
    half_plus_b = sumset(half, b_set).is_disjoint(a_set) if hypothesis else None

    return IntervalSumsetReport(
        n=n,
        a_set=a_set,
        b_set=b_set,
        ab_avoids_a=ab_avoids_a,
        half_shift_avoids_a=half_shift_avoids_a,
        b1_hypothesis_met=hypothesis,
        half_plus_b_avoids_a=half_plus_b,
    )
