"""Graph constructions: Cayley graphs, coloured products, connecting-set packing.

Colour handling in the strong product follows the convention that an edge
between (u, v) and (u', v') inherits the colour of {v, v'} when u = u', and
the colour of {u, u'} in the first factor otherwise (in particular on the
diagonal pairs where both coordinates move).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .ecgraph import EdgeColouredGraph
from .group import DEFAULT_ENUMERATION_LIMIT, GroupSpec, format_elements, parse_group_text
from .setalg import GroupSubset, inverses, is_inverse_closed, sumset


@dataclass(frozen=True)
class ColouredConnectingSet:
    """Disjoint inverse-closed identity-free connecting classes, one per colour."""

    spec: GroupSpec
    classes: tuple[tuple[int, GroupSubset], ...]
    colour_count: int

    @staticmethod
    def of(
        spec: GroupSpec,
        classes: Mapping[int, GroupSubset],
        colour_count: Optional[int] = None,
    ) -> "ColouredConnectingSet":
        if not classes:
            raise ValueError("connecting set needs at least one colour class")
        items = tuple(sorted(classes.items()))
        for colour, subset in items:
            if not isinstance(colour, int) or colour < 1:
                raise ValueError(f"colour must be a positive integer, got {colour!r}")
            if subset.spec != spec:
                raise ValueError(f"class {colour} lives in {subset.spec}, expected {spec}")
            if subset.contains_identity():
                raise ValueError(f"class {colour} contains the identity")
            if not is_inverse_closed(subset):
                raise ValueError(f"class {colour} is not inverse-closed")
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                if not items[i][1].is_disjoint(items[j][1]):
                    raise ValueError(
                        f"classes {items[i][0]} and {items[j][0]} overlap")
        top = max(c for c, _ in items)
        if colour_count is None:
            colour_count = top
        if colour_count < top:
            raise ValueError(f"colour count {colour_count} below largest class colour {top}")
        return ColouredConnectingSet(spec, items, colour_count)

    def classes_dict(self) -> dict[int, GroupSubset]:
        return dict(self.classes)

    def union_elements(self) -> GroupSubset:
        out = frozenset()
        for _, subset in self.classes:
            out = out | subset.elements
        return GroupSubset(self.spec, out)

    def to_json_dict(self) -> dict:
        return {
            "group": self.spec.to_text(),
            "colour_count": self.colour_count,
            "classes": {
                str(colour): format_elements(subset.elements)
                for colour, subset in self.classes
            },
        }

    @staticmethod
    def from_json_dict(data: dict) -> "ColouredConnectingSet":
        try:
            spec = parse_group_text(data["group"])
            raw = data["classes"]
            colour_count = data.get("colour_count")
            classes = {
                int(colour): GroupSubset.of(spec, [tuple(e) for e in elems])
                for colour, elems in raw.items()
            }
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed connecting set JSON: {exc}") from None
        return ColouredConnectingSet.of(spec, classes, colour_count)


def cayley_build(
    ccs: ColouredConnectingSet,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> EdgeColouredGraph:
    """Cayley graph on the whole group, one edge {g, g+s} per connecting element."""
    spec = ccs.spec
    index = spec.element_index(limit)
    edges = set()
    for colour, subset in ccs.classes:
        for s in subset.sorted_elements():
            for g, gi in index.items():
                hi = index[spec.add(g, s)]
                if gi < hi:
                    edges.add((gi, hi, colour))
                else:
                    edges.add((hi, gi, colour))
    return EdgeColouredGraph(spec.order, ccs.colour_count, edges)


def merge_connecting_sets(
    first: ColouredConnectingSet, second: ColouredConnectingSet
) -> ColouredConnectingSet:
    """Union the colour classes of two connecting sets over the same group.

    All classes across both inputs must be pairwise disjoint, otherwise the
    packed graph would need two colours on one edge.
    """
    if first.spec != second.spec:
        raise ValueError(f"connecting sets live in different groups: {first.spec} vs {second.spec}")
    a = first.union_elements()
    b = second.union_elements()
    if not a.is_disjoint(b):
        overlap = sorted(a.intersection(b).elements)[:4]
        raise ValueError(f"packing undefined, classes overlap at {overlap}")
    merged: dict[int, GroupSubset] = dict(first.classes)
    for colour, subset in second.classes:
        if colour in merged:
            merged[colour] = merged[colour].union(subset)
        else:
            merged[colour] = subset
    return ColouredConnectingSet.of(
        first.spec, merged, max(first.colour_count, second.colour_count))


def pack_cayley(
    first: ColouredConnectingSet,
    second: ColouredConnectingSet,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> EdgeColouredGraph:
    """Cayley graph of the merged connecting sets."""
    return cayley_build(merge_connecting_sets(first, second), limit)


def _product_shell(g: EdgeColouredGraph, h: EdgeColouredGraph) -> None:
    if g.colour_count != h.colour_count:
        raise ValueError(
            f"factors must share a colour count, got {g.colour_count} and {h.colour_count}")


def product_vertex(g: EdgeColouredGraph, h: EdgeColouredGraph, u: int, v: int) -> int:
    """Row-major index of the product vertex (u, v)."""
    return u * h.vertex_count + v


def strong_product(g: EdgeColouredGraph, h: EdgeColouredGraph) -> EdgeColouredGraph:
    """Strong product; moved-first-coordinate edges take the first factor's colour."""
    _product_shell(g, h)
    nh = h.vertex_count
    edges = []
    for u in range(g.vertex_count):
        base = u * nh
        for v, v2, c in h.edges:
            edges.append((base + v, base + v2, c))
    for u, u2, c in g.edges:
        for v in range(nh):
            edges.append((u * nh + v, u2 * nh + v, c))
        for v, v2, _ in h.edges:
            edges.append((u * nh + v, u2 * nh + v2, c))
            edges.append((u * nh + v2, u2 * nh + v, c))
    return EdgeColouredGraph(g.vertex_count * nh, g.colour_count, edges)


def cartesian_product(g: EdgeColouredGraph, h: EdgeColouredGraph) -> EdgeColouredGraph:
    """Cartesian product; edges move in exactly one coordinate."""
    _product_shell(g, h)
    nh = h.vertex_count
    edges = []
    for u in range(g.vertex_count):
        base = u * nh
        for v, v2, c in h.edges:
            edges.append((base + v, base + v2, c))
    for u, u2, c in g.edges:
        for v in range(nh):
            edges.append((u * nh + v, u2 * nh + v, c))
    return EdgeColouredGraph(g.vertex_count * nh, g.colour_count, edges)


@dataclass(frozen=True)
class PackingDeltaReport:
    """Exact closed-count difference at the identity of a two-set packing.

    delta_direct counts e_1 - e_2 in the packed graph. delta_formula evaluates
    the factor-side expression (e1_blue_closed - e2_red_closed) plus
    (red_edges_in_blue_nbhd - blue_edges_in_red_nbhd). The two must agree.
    """

    spec: GroupSpec
    blue: GroupSubset
    red: GroupSubset
    packed: EdgeColouredGraph
    delta_direct: int
    delta_formula: int
    e1_blue_closed: int
    e2_red_closed: int
    red_edges_in_blue_nbhd: int
    blue_edges_in_red_nbhd: int
    product_condition: bool
    dominance: bool
    flip_at_identity: bool

    @property
    def identity_holds(self) -> bool:
        return self.delta_direct == self.delta_formula

    def to_json_dict(self) -> dict:
        return {
            "group": self.spec.to_text(),
            "blue": format_elements(self.blue.elements),
            "red": format_elements(self.red.elements),
            "delta_direct": self.delta_direct,
            "delta_formula": self.delta_formula,
            "e1_blue_closed": self.e1_blue_closed,
            "e2_red_closed": self.e2_red_closed,
            "red_edges_in_blue_nbhd": self.red_edges_in_blue_nbhd,
            "blue_edges_in_red_nbhd": self.blue_edges_in_red_nbhd,
            "product_condition": self.product_condition,
            "dominance": self.dominance,
            "flip_at_identity": self.flip_at_identity,
        }


def packing_delta(
    spec: GroupSpec,
    blue: GroupSubset,
    red: GroupSubset,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> PackingDeltaReport:
    """Pack blue as colour 1 and red as colour 2, then audit e_1 - e_2 at identity."""
    blue_only = ColouredConnectingSet.of(spec, {1: blue}, colour_count=2)
    red_only = ColouredConnectingSet.of(spec, {2: red}, colour_count=2)
    g_blue = cayley_build(blue_only, limit)
    h_red = cayley_build(red_only, limit)
    packed = pack_cayley(blue_only, red_only, limit)

    # identity element is vertex 0 in enumeration order
    packed_profile = packed.vertex_profile(0)
    delta_direct = packed_profile.e_closed[0] - packed_profile.e_closed[1]

    e1_blue = g_blue.vertex_profile(0).e_closed[0]
    e2_red = h_red.vertex_profile(0).e_closed[1]
    red_in_blue = h_red.count_coloured_edges(g_blue.closed_neighbourhood(0), 2)
    blue_in_red = g_blue.count_coloured_edges(h_red.closed_neighbourhood(0), 1)
    delta_formula = (e1_blue - e2_red) + (red_in_blue - blue_in_red)

    product_condition = sumset(red, blue).is_disjoint(red)
    return PackingDeltaReport(
        spec=spec,
        blue=blue,
        red=red,
        packed=packed,
        delta_direct=delta_direct,
        delta_formula=delta_formula,
        e1_blue_closed=e1_blue,
        e2_red_closed=e2_red,
        red_edges_in_blue_nbhd=red_in_blue,
        blue_edges_in_red_nbhd=blue_in_red,
        product_condition=product_condition,
        dominance=e1_blue > e2_red,
        flip_at_identity=packed_profile.e_closed[0] > packed_profile.e_closed[1],
    )


@dataclass(frozen=True)
class MatchingColourPlan:
    """Colour assignment for the perfect matchings of a balanced complete bipartite graph."""

    part_size: int
    colour_count: int
    assignments: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.part_size < 1:
            raise ValueError(f"part size must be >= 1, got {self.part_size}")
        if len(self.assignments) != self.part_size:
            raise ValueError(
                f"need exactly {self.part_size} matching assignments, got {len(self.assignments)}")
        for c in self.assignments:
            if not (1 <= c <= self.colour_count):
                raise ValueError(f"matching colour {c} outside 1..{self.colour_count}")

    def to_json_dict(self) -> dict:
        return {
            "part_size": self.part_size,
            "colour_count": self.colour_count,
            "assignments": list(self.assignments),
        }


def bipartite_matching_graph(plan: MatchingColourPlan) -> EdgeColouredGraph:
    """K_{p,p} decomposed into cyclic-shift matchings, matching d coloured plan.assignments[d].

    Parts are {0..p-1} and {p..2p-1}; matching d joins i to p + ((i + d) mod p).
    The graph is bipartite, hence triangle-free, so every closed count equals
    the matching count of its colour.
    """
    p = plan.part_size
    edges = []
    for d, colour in enumerate(plan.assignments):
        for i in range(p):
            edges.append((i, p + (i + d) % p, colour))
    return EdgeColouredGraph(2 * p, plan.colour_count, edges)
