"""Flip verification, order bounds, and sum-free connecting-set search.

A graph is flip-coloured for (a_1, ..., a_k) when it is colour-regular with
strictly increasing colour degrees while the closed per-colour edge counts
e_1[v] > e_2[v] > ... > e_k[v] decrease strictly at every vertex.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .ecgraph import EdgeColouredGraph
from .group import GroupSpec
from .setalg import GroupSubset, is_sum_free

VIOLATION_JSON_CAP = 20


@dataclass(frozen=True)
class FlipReport:
    """Verdict plus the evidence gathered while checking the flip conditions.

    e_chain is the shared closed-count vector when it is uniform across
    vertices, otherwise the full per-vertex matrix. Violations pair a vertex
    (None for graph-level facts) with a reason tag.
    """

    verdict: str
    colour_degrees: Optional[tuple[int, ...]]
    e_chain: Union[tuple[int, ...], tuple[tuple[int, ...], ...], None]
    violations: tuple[tuple[Optional[int], str], ...]

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def uniform_e_chain(self) -> Optional[tuple[int, ...]]:
        if self.e_chain and isinstance(self.e_chain[0], int):
            return self.e_chain  # type: ignore[return-value]
        return None

    def to_json_dict(self) -> dict:
        chain: object
        if self.e_chain is None:
            chain = None
        elif self.uniform_e_chain is not None:
            chain = list(self.e_chain)
        else:
            chain = [list(row) for row in self.e_chain]
        return {
            "verdict": self.verdict,
            "colour_degrees": None if self.colour_degrees is None else list(self.colour_degrees),
            "e_chain": chain,
            "violations": [[v, reason] for v, reason in self.violations[:VIOLATION_JSON_CAP]],
            "violation_count": len(self.violations),
        }


def verify_flip(
    g: EdgeColouredGraph,
    expected: Optional[Sequence[int]] = None,
) -> FlipReport:
    """Brute-force flip check: colour regularity, increasing degrees, strict chains."""
    if expected is not None and len(expected) != g.colour_count:
        raise ValueError(
            f"expected degree vector has length {len(expected)}, graph has {g.colour_count} colours")
    violations: list[tuple[Optional[int], str]] = []

    degrees = [g.degree_vector(v) for v in range(g.vertex_count)]
    base = degrees[0] if degrees else tuple([0] * g.colour_count)
    regular = True
    for v, d in enumerate(degrees):
        if d != base:
            regular = False
            violations.append((v, "not-regular"))
    if regular and any(base[i] >= base[i + 1] for i in range(len(base) - 1)):
        violations.append((None, "degrees-not-increasing"))
    if regular and expected is not None and base != tuple(expected):
        violations.append((None, "degrees-not-expected"))

    chains = []
    uniform = True
    for v in range(g.vertex_count):
        e = g.vertex_profile(v).e_closed
        chains.append(e)
        if e != chains[0]:
            uniform = False
        if any(e[i] <= e[i + 1] for i in range(len(e) - 1)):
            violations.append((v, "chain-not-strict"))

    e_chain: Union[tuple[int, ...], tuple[tuple[int, ...], ...], None]
    if not chains:
        e_chain = None
    elif uniform:
        e_chain = chains[0]
    else:
        e_chain = tuple(chains)
    return FlipReport(
        verdict="pass" if not violations else "fail",
        colour_degrees=base if regular else None,
        e_chain=e_chain,
        violations=tuple(violations),
    )


def old_bound(b: int, r: int) -> int:
    """Order bound from the classification of small difference r - b."""
    if b < 3:
        raise ValueError(f"b >= 3 required, got b={b}")
    if r <= b:
        raise ValueError(f"r > b required, got b={b} r={r}")
    cap = b * (b + 1) // 2 - 1
    if r > cap:
        raise ValueError(f"r <= b(b+1)/2 - 1 = {cap} required, got r={r}")
    s = (5 + math.isqrt(1 + 8 * (r - b))) // 2
    return 2 * (r + b + 1 - s) * s


def parity_factor(b: int, r: int) -> int:
    """1 unless both colour degrees are odd, then 2."""
    return max(1, (b % 2) + (r % 2))


def new_bound_cap(b: int) -> int:
    """Exclusive upper limit on r for the two-colour Cayley construction."""
    return b + 2 * ((b + 2) // 6) ** 2


def check_br_range(b: int, r: int) -> None:
    if b < 4:
        raise ValueError(f"b >= 4 required, got b={b}")
    if r <= b:
        raise ValueError(f"r > b required, got b={b} r={r}")
    cap = new_bound_cap(b)
    if r >= cap:
        raise ValueError(f"r < b + 2*floor((b+2)/6)^2 = {cap} required, got r={r}")


def new_bound(b: int, r: int) -> int:
    """Order of the two-colour Cayley construction for degrees (b, r)."""
    check_br_range(b, r)
    base = 2 + r // 2 + (b + 2) // 2 - 2 * ((b + 2) // 6)
    return 8 * parity_factor(b, r) * base


def qk_bounds(k: int, literal_lower: bool = False) -> tuple[int, int]:
    """(lower, exclusive upper) bounds on the largest feasible preserved prefix q(k).

    literal_lower=True reproduces the degenerate min form of the lower bound
    instead of the max form used everywhere else in this package.
    """
    if k < 4:
        raise ValueError(f"k >= 4 required, got k={k}")
    ceil_quarter = -(-k // 4)
    lower = min(1, ceil_quarter - 1) if literal_lower else max(1, ceil_quarter - 1)
    if k % 3 == 0:
        upper = k // 3
    else:
        upper = -(-k // 2)
    return lower, upper


@dataclass(frozen=True)
class BoundRow:
    b: int
    r: int
    old: Optional[int]
    new: Optional[int]


def bounds_table(b_values: Sequence[int]) -> list[BoundRow]:
    """One row per (b, r) with r running over the two-colour construction's range.

    For b >= 4 the rows cover b < r < b + 2*floor((b+2)/6)^2, where both
    bounds are defined.  b = 3 falls back to the classical range with the
    new-bound cell left empty, since the construction needs b >= 4.
    """
    rows = []
    for b in b_values:
        if b < 3:
            raise ValueError(f"b >= 3 required in bounds table, got b={b}")
        old_hi = b * (b + 1) // 2 - 1
        r_hi = new_bound_cap(b) - 1 if b >= 4 else old_hi
        for r in range(b + 1, r_hi + 1):
            old = old_bound(b, r) if r <= old_hi else None
            new = new_bound(b, r) if b >= 4 else None
            rows.append(BoundRow(b, r, old, new))
    return rows


def bounds_to_csv(rows: Sequence[BoundRow]) -> str:
    """CSV with header b,r,old_bound,new_bound; absent values are empty cells."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["b", "r", "old_bound", "new_bound"])
    for row in rows:
        writer.writerow([
            row.b,
            row.r,
            "" if row.old is None else row.old,
            "" if row.new is None else row.new,
        ])
    return buf.getvalue()


EXHAUSTIVE_ORDER_CAP = 24


@dataclass(frozen=True)
class SearchResult:
    """Largest sum-free inverse-closed subset found, with search provenance."""

    subset: GroupSubset
    size: int
    mode: str
    optimal: bool
    budget_exhausted: bool
    examined: int


def _atoms(spec: GroupSpec) -> list[tuple]:
    """Inverse-closed building blocks {x, -x}, involutions as singletons."""
    atoms = []
    seen = set()
    for x in spec.elements():
        if x == spec.identity or x in seen:
            continue
        neg = spec.neg(x)
        seen.add(x)
        seen.add(neg)
        atoms.append((x,) if neg == x else (x, neg))
    return atoms


def _sum_free(spec: GroupSpec, members: frozenset) -> bool:
    for x in members:
        for y in members:
            if spec.add(x, y) in members:
                return False
    return True


def search_sumfree_inverse_closed(
    spec: GroupSpec,
    mode: str = "exhaustive",
    budget: Optional[int] = None,
) -> SearchResult:
    """Search for a maximum (exhaustive) or maximal (greedy) sum-free inverse-closed subset.

    Candidates are unions of atoms {x, -x}, which keeps every candidate
    inverse-closed by construction. Atom order is deterministic, so repeated
    runs return identical subsets.
    """
    if mode not in ("exhaustive", "greedy"):
        raise ValueError(f"mode must be 'exhaustive' or 'greedy', got {mode!r}")
    atoms = _atoms(spec)
    if mode == "exhaustive":
        if spec.order > EXHAUSTIVE_ORDER_CAP:
            raise ValueError(
                f"exhaustive mode needs group order <= {EXHAUSTIVE_ORDER_CAP}, got {spec.order}")
        best: frozenset = frozenset()
        examined = 0
        for mask in range(1 << len(atoms)):
            if budget is not None and examined >= budget:
                raise ValueError(f"exhaustive search budget {budget} exceeded after {examined} candidates")
            examined += 1
            members = frozenset(
                x for i, atom in enumerate(atoms) if mask >> i & 1 for x in atom)
            if len(members) > len(best) and _sum_free(spec, members):
                best = members
        return SearchResult(
            subset=GroupSubset(spec, best),
            size=len(best),
            mode=mode,
            optimal=True,
            budget_exhausted=False,
            examined=examined,
        )

    members: frozenset = frozenset()
    examined = 0
    exhausted = False
    for atom in atoms:
        if budget is not None and examined >= budget:
            exhausted = True
            break
        examined += 1
        candidate = members | frozenset(atom)
        if _sum_free(spec, candidate):
            members = candidate
    return SearchResult(
        subset=GroupSubset(spec, members),
        size=len(members),
        mode=mode,
        optimal=False,
        budget_exhausted=exhausted,
        examined=examined,
    )


def assert_sum_free(subset: GroupSubset, label: str) -> None:
    """Raise with a clear message when a set that must be sum-free is not."""
    if not is_sum_free(subset):
        raise ValueError(f"{label} is not sum-free")
