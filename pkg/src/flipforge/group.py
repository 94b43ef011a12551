"""Finite Abelian groups given as direct products of cyclic factors.

Elements are tuples of residues, one per factor, always stored reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

GroupElement = tuple[int, ...]
ElementLike = Union[int, Sequence[int]]

DEFAULT_ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class GroupSpec:
    """Direct product of cyclic groups Z_{n1} x ... x Z_{nk}."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("group needs at least one cyclic factor")
        for n in self.factors:
            if not isinstance(n, int) or n < 2:
                raise ValueError(f"cyclic factor must be an integer >= 2, got {n!r}")

    @property
    def order(self) -> int:
        total = 1
        for n in self.factors:
            total *= n
        return total

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.factors)

    def element(self, value: ElementLike) -> GroupElement:
        """Coerce an int (single factor only) or residue sequence, reducing mod factors."""
        if isinstance(value, int):
            if len(self.factors) != 1:
                raise ValueError(f"bare integer element needs a single factor group, this one has {len(self.factors)}")
            return (value % self.factors[0],)
        residues = tuple(value)
        if len(residues) != len(self.factors):
            raise ValueError(f"element length {len(residues)} does not match {len(self.factors)} factors")
        return tuple(x % n for x, n in zip(residues, self.factors))

    def add(self, x: ElementLike, y: ElementLike) -> GroupElement:
        a = self.element(x)
        b = self.element(y)
        return tuple((p + q) % n for p, q, n in zip(a, b, self.factors))

    def neg(self, x: ElementLike) -> GroupElement:
        a = self.element(x)
        return tuple((-p) % n for p, n in zip(a, self.factors))

    def sub(self, x: ElementLike, y: ElementLike) -> GroupElement:
        return self.add(x, self.neg(y))

    def is_involution(self, x: ElementLike) -> bool:
        """True when x is its own inverse and not the identity."""
        a = self.element(x)
        return a != self.identity and self.add(a, a) == self.identity

    def elements(self, limit: int = DEFAULT_ENUMERATION_LIMIT) -> Iterator[GroupElement]:
        """Enumerate all elements in lexicographic order, identity first."""
        if self.order > limit:
            raise ValueError(f"group order {self.order} exceeds enumeration limit {limit}")
        def rec(prefix: GroupElement, rest: tuple[int, ...]) -> Iterator[GroupElement]:
            if not rest:
                yield prefix
                return
            for v in range(rest[0]):
                yield from rec(prefix + (v,), rest[1:])
        yield from rec((), self.factors)

    def element_index(self, limit: int = DEFAULT_ENUMERATION_LIMIT) -> dict[GroupElement, int]:
        """Map each element to its position in enumeration order."""
        return {g: i for i, g in enumerate(self.elements(limit))}

    def to_text(self) -> str:
        return "z:" + ",".join(str(n) for n in self.factors)

    def __str__(self) -> str:
        return self.to_text()


def cyclic(n: int) -> GroupSpec:
    return GroupSpec((n,))


def parse_group_text(text: str) -> GroupSpec:
    """Parse forms like ``z:40``, ``z:2,28`` and the alias ``z2xz:28``."""
    body = text.strip().lower()
    if body.startswith("z2xz:"):
        tail = body[len("z2xz:"):]
        if not tail.isdigit():
            raise ValueError(f"malformed group spec {text!r}")
        return GroupSpec((2, int(tail)))
    if body.startswith("z:"):
        tail = body[len("z:"):]
        parts = tail.split(",")
        try:
            factors = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"malformed group spec {text!r}") from None
        return GroupSpec(factors)
    raise ValueError(f"malformed group spec {text!r}, expected 'z:n', 'z:a,b,...' or 'z2xz:n'")


def format_elements(elements: Iterable[GroupElement]) -> list[list[int]]:
    """Serialize elements as sorted integer arrays."""
    return [list(e) for e in sorted(elements)]
