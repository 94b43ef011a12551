"""Edge-coloured simple graphs with per-vertex colour profiles.

Vertices are 0-based integers, colours are 1-based. A profile records, for
each colour j, the degree deg_j(v) and the number of colour-j edges induced
by the closed and open neighbourhoods of v.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int, int]

DOT_PALETTE = (
    "blue", "red", "green3", "orange", "purple",
    "brown", "cyan3", "magenta", "olive", "teal",
)


@dataclass(frozen=True)
class VertexColourProfile:
    vertex: int
    deg: tuple[int, ...]
    e_closed: tuple[int, ...]
    e_open: tuple[int, ...]


class EdgeColouredGraph:
    """Immutable simple graph whose edges each carry one colour in 1..k."""

    __slots__ = ("vertex_count", "colour_count", "edges", "_pair", "_adj")

    def __init__(self, vertex_count: int, colour_count: int, edges: Iterable[Edge]):
        if vertex_count < 0:
            raise ValueError(f"vertex count must be >= 0, got {vertex_count}")
        if colour_count < 1:
            raise ValueError(f"colour count must be >= 1, got {colour_count}")
        pair: dict[tuple[int, int], int] = {}
        for item in edges:
            u, v, c = item
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge endpoint out of range: {item}")
            if u == v:
                raise ValueError(f"loop edges are not allowed: {item}")
            if not (1 <= c <= colour_count):
                raise ValueError(f"colour {c} outside 1..{colour_count}: {item}")
            key = (u, v) if u < v else (v, u)
            seen = pair.get(key)
            if seen is not None and seen != c:
                raise ValueError(f"vertex pair {key} carries two colours: {seen} and {c}")
            pair[key] = c
        self.vertex_count = vertex_count
        self.colour_count = colour_count
        self.edges = tuple(sorted((u, v, c) for (u, v), c in pair.items()))
        self._pair = pair
        adj: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for (u, v), c in pair.items():
            adj[u].append((v, c))
            adj[v].append((u, c))
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def __setattr__(self, name, value):
        if hasattr(self, "_adj"):
            raise AttributeError("graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColouredGraph):
            return NotImplemented
        return (self.vertex_count, self.colour_count, self.edges) == (
            other.vertex_count, other.colour_count, other.edges)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.colour_count, self.edges))

    def __repr__(self) -> str:
        return (f"EdgeColouredGraph(vertices={self.vertex_count}, "
                f"colours={self.colour_count}, edges={len(self.edges)})")

    def neighbours(self, v: int) -> tuple[tuple[int, int], ...]:
        """Sorted (neighbour, colour) pairs of v."""
        self._check_vertex(v)
        return self._adj[v]

    def edge_colour(self, u: int, v: int):
        key = (u, v) if u < v else (v, u)
        return self._pair.get(key)

    def closed_neighbourhood(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset([v] + [w for w, _ in self._adj[v]])

    def count_coloured_edges(self, vertices: Iterable[int], colour: int) -> int:
        """Number of colour-j edges with both endpoints in the given set."""
        if not (1 <= colour <= self.colour_count):
            raise ValueError(f"colour {colour} outside 1..{self.colour_count}")
        s = set(vertices)
        for v in s:
            self._check_vertex(v)
        return sum(1 for u, v, c in self.edges if c == colour and u in s and v in s)

    def degree_vector(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        deg = [0] * self.colour_count
        for _, c in self._adj[v]:
            deg[c - 1] += 1
        return tuple(deg)

    def vertex_profile(self, v: int) -> VertexColourProfile:
        """Profile of v via pair scans over its neighbourhood."""
        self._check_vertex(v)
        nbrs = [w for w, _ in self._adj[v]]
        deg = [0] * self.colour_count
        for _, c in self._adj[v]:
            deg[c - 1] += 1
        open_counts = [0] * self.colour_count
        pair = self._pair
        for i in range(len(nbrs)):
            a = nbrs[i]
            for j in range(i + 1, len(nbrs)):
                b = nbrs[j]
                c = pair.get((a, b) if a < b else (b, a))
                if c is not None:
                    open_counts[c - 1] += 1
        closed = [o + d for o, d in zip(open_counts, deg)]
        return VertexColourProfile(v, tuple(deg), tuple(closed), tuple(open_counts))

    def profile_by_edge_scan(self, v: int) -> VertexColourProfile:
        """Same profile computed independently by scanning the full edge list."""
        self._check_vertex(v)
        nb = self.closed_neighbourhood(v)
        deg = [0] * self.colour_count
        closed = [0] * self.colour_count
        open_counts = [0] * self.colour_count
        for u, w, c in self.edges:
            if u in nb and w in nb:
                closed[c - 1] += 1
                if u != v and w != v:
                    open_counts[c - 1] += 1
                else:
                    deg[c - 1] += 1
        return VertexColourProfile(v, tuple(deg), tuple(closed), tuple(open_counts))

    def is_colour_regular(self, a: Sequence[int]) -> bool:
        """True when deg_j(v) = a_j for every vertex v and colour j."""
        if len(a) != self.colour_count:
            raise ValueError(f"expected {self.colour_count} colour degrees, got {len(a)}")
        target = tuple(a)
        return all(self.degree_vector(v) == target for v in range(self.vertex_count))

    def with_colour_count(self, colour_count: int) -> "EdgeColouredGraph":
        """Same edges, wider colour range."""
        if colour_count < self.colour_count:
            raise ValueError(f"cannot shrink colour count {self.colour_count} to {colour_count}")
        return EdgeColouredGraph(self.vertex_count, colour_count, self.edges)

    def relabelled(self, perm: Sequence[int]) -> "EdgeColouredGraph":
        """Apply a vertex permutation (perm[v] is the new name of v)."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("relabelling must be a permutation of all vertices")
        return EdgeColouredGraph(
            self.vertex_count, self.colour_count,
            [(perm[u], perm[v], c) for u, v, c in self.edges])

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise ValueError(f"vertex {v} outside 0..{self.vertex_count - 1}")

    def to_json_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "colours": self.colour_count,
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @staticmethod
    def from_json_dict(data: dict) -> "EdgeColouredGraph":
        try:
            vertices = data["vertices"]
            colours = data["colours"]
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from None
        for e in edges:
            if len(e) != 3:
                raise ValueError(f"malformed edge entry {e!r}")
        return EdgeColouredGraph(vertices, colours, edges)

    @staticmethod
    def from_json(text: str) -> "EdgeColouredGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from None
        return EdgeColouredGraph.from_json_dict(data)

    def to_dot(self, name: str = "G") -> str:
        """GraphViz text, one edge per line, colour drawn from a fixed palette."""
        lines = [f"graph {name} {{"]
        for u, v, c in self.edges:
            colour = DOT_PALETTE[(c - 1) % len(DOT_PALETTE)]
            lines.append(f'  {u} -- {v} [color="{colour}", label="{c}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
