"""Graphs, digraphs, tournaments, and edge colorings as bitsets.

Vertices are 0-based integers.  Adjacency lives in one Python int per
vertex (bit v of adj[u] is set iff {u,v} is an edge), so the
neighborhood intersection needed by the clique search is a single `&`.
All types are immutable after construction and every function is pure.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "SimpleGraph",
    "Digraph",
    "Tournament",
    "EdgeColoring",
    "complete_graph",
    "complement",
    "complete_multipartite",
    "find_clique",
    "has_clique",
    "find_independent_set",
    "has_independent_set",
    "max_edges_without_clique_oracle",
    "random_tournament",
    "all_tournaments",
]


class SimpleGraph:
    """Undirected simple graph: no loops, no parallel edges."""

    __slots__ = ("vertex_count", "edges", "adj")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        canon: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u}, {v}) not allowed in a simple graph")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            canon.add((u, v) if u < v else (v, u))
        adj = [0] * vertex_count
        for u, v in canon:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.vertex_count: int = vertex_count
        self.edges: frozenset[tuple[int, int]] = frozenset(canon)
        self.adj: tuple[int, ...] = tuple(adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph({self.vertex_count}, {self.edge_count} edges)"


class Digraph:
    """Directed graph; loops allowed, no parallel arcs."""

    __slots__ = ("vertex_count", "arcs", "out_adj", "in_adj")

    def __init__(self, vertex_count: int, arcs: Iterable[tuple[int, int]] = ()) -> None:
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        canon: set[tuple[int, int]] = set()
        for u, v in arcs:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"arc ({u}, {v}) out of range for {vertex_count} vertices")
            canon.add((u, v))
        out_adj = [0] * vertex_count
        in_adj = [0] * vertex_count
        for u, v in canon:
            out_adj[u] |= 1 << v
            in_adj[v] |= 1 << u
        self.vertex_count: int = vertex_count
        self.arcs: frozenset[tuple[int, int]] = frozenset(canon)
        self.out_adj: tuple[int, ...] = tuple(out_adj)
        self.in_adj: tuple[int, ...] = tuple(in_adj)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def out_degree(self, u: int) -> int:
        return self.out_adj[u].bit_count()

    def in_degree(self, u: int) -> int:
        return self.in_adj[u].bit_count()

    def loops(self) -> frozenset[int]:
        return frozenset(u for u, v in self.arcs if u == v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph({self.vertex_count}, {self.arc_count} arcs)"


class Tournament:
    """Orientation of a complete graph.

    Wraps a Digraph and checks the defining invariant: no loops, and
    exactly one of (u,v), (v,u) present for every pair u != v (hence
    exactly C(n,2) arcs).
    """

    __slots__ = ("digraph",)

    def __init__(self, digraph: Digraph) -> None:
        n = digraph.vertex_count
        if digraph.arc_count != n * (n - 1) // 2:
            raise ValueError("tournament needs exactly one arc per vertex pair")
        for u, v in digraph.arcs:
            if u == v:
                raise ValueError(f"tournament cannot contain the loop ({u}, {u})")
            if (v, u) in digraph.arcs:
                raise ValueError(f"both orientations of {{{u}, {v}}} present")
        self.digraph: Digraph = digraph

    @classmethod
    def from_arcs(cls, vertex_count: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
        return cls(Digraph(vertex_count, arcs))

    @property
    def vertex_count(self) -> int:
        return self.digraph.vertex_count

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return self.digraph.arcs

    def has_arc(self, u: int, v: int) -> bool:
        return self.digraph.has_arc(u, v)

    def __repr__(self) -> str:
        return f"Tournament({self.vertex_count} vertices)"


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


class EdgeColoring:
    """Total coloring of the edges of K_n with colors 0..color_count-1.

    Colors are stored flat, indexed by the lexicographic rank of the
    pair (u,v) with u < v: (0,1), (0,2), ..., (0,n-1), (1,2), ...
    """

    __slots__ = ("vertex_count", "color_count", "colors")

    def __init__(self, vertex_count: int, color_count: int, colors: Iterable[int]) -> None:
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        if color_count < 1:
            raise ValueError("color_count must be positive")
        flat = tuple(colors)
        if len(flat) != _pair_count(vertex_count):
            raise ValueError(
                f"need {_pair_count(vertex_count)} colors for K_{vertex_count}, got {len(flat)}"
            )
        for c in flat:
            if not 0 <= c < color_count:
                raise ValueError(f"color {c} outside 0..{color_count - 1}")
        self.vertex_count: int = vertex_count
        self.color_count: int = color_count
        self.colors: tuple[int, ...] = flat

    def pair_index(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("pairs are between distinct vertices")
        if u > v:
            u, v = v, u
        if not 0 <= u < v < self.vertex_count:
            raise ValueError(f"pair ({u}, {v}) out of range")
        return u * (2 * self.vertex_count - u - 1) // 2 + (v - u - 1)

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.pair_index(u, v)]

    def color_class(self, color: int) -> SimpleGraph:
        """The spanning subgraph formed by the edges of one color."""
        if not 0 <= color < self.color_count:
            raise ValueError(f"color {color} outside 0..{self.color_count - 1}")
        n = self.vertex_count
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if self.colors[self.pair_index(u, v)] == color
        ]
        return SimpleGraph(n, edges)

    @classmethod
    def from_function(cls, vertex_count: int, color_count: int, fn) -> EdgeColoring:
        """Build from a callable fn(u, v) -> color over pairs u < v."""
        colors = [
            fn(u, v) for u in range(vertex_count) for v in range(u + 1, vertex_count)
        ]
        return cls(vertex_count, color_count, colors)

    @classmethod
    def from_graph(cls, g: SimpleGraph) -> EdgeColoring:
        """2-coloring of K_n: color 0 for edges of g, color 1 for the rest."""
        return cls.from_function(
            g.vertex_count, 2, lambda u, v: 0 if g.has_edge(u, v) else 1
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self.color_count == other.color_count
            and self.colors == other.colors
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.color_count, self.colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(K_{self.vertex_count}, {self.color_count} colors)"


def complete_graph(n: int) -> SimpleGraph:
    """K_n: every pair of distinct vertices joined."""
    return SimpleGraph(n, itertools.combinations(range(n), 2))


def complement(g: SimpleGraph) -> SimpleGraph:
    """Edges become non-edges and vice versa; together they tile K_n."""
    n = g.vertex_count
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)
    ]
    return SimpleGraph(n, edges)


def complete_multipartite(part_sizes: list[int]) -> SimpleGraph:
    """Vertices split into parts; edges exactly between different parts.

    Parts are laid out in the given order: part 0 gets vertices
    0..sizes[0]-1, and so on.
    """
    if not part_sizes:
        raise ValueError("no parts")
    for s in part_sizes:
        if s < 1:
            raise ValueError("every part size must be >= 1")
    bounds = [0]
    for s in part_sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for a in range(len(part_sizes)):
        for b in range(a + 1, len(part_sizes)):
            for u in range(bounds[a], bounds[a + 1]):
                for v in range(bounds[b], bounds[b + 1]):
                    edges.append((u, v))
    return SimpleGraph(n, edges)


def find_clique(g: SimpleGraph, size: int) -> tuple[int, ...] | None:
    """Lexicographically smallest clique of the given size, or None.

    Recursive search over candidate bitsets with neighborhood-
    intersection pruning.  Candidates always stay above the last chosen
    vertex and are tried in ascending order, so the first complete
    clique found is the lexicographically smallest one.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    adj = g.adj

    def extend(chosen: tuple[int, ...], cand: int, need: int) -> tuple[int, ...] | None:
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if need == 1:
                return chosen + (v,)
            found = extend(chosen + (v,), cand & adj[v], need - 1)
            if found is not None:
                return found
        return None

    return extend((), (1 << g.vertex_count) - 1, size)


def has_clique(g: SimpleGraph, size: int) -> bool:
    return find_clique(g, size) is not None


def find_independent_set(g: SimpleGraph, size: int) -> tuple[int, ...] | None:
    """Dual of find_clique: a clique of the complement."""
    return find_clique(complement(g), size)


def has_independent_set(g: SimpleGraph, size: int) -> bool:
    return find_independent_set(g, size) is not None


def _popcount_u32(a: np.ndarray) -> np.ndarray:
    # SWAR bit count on uint32 lanes
    a = a - ((a >> 1) & np.uint32(0x55555555))
    a = (a & np.uint32(0x33333333)) + ((a >> 2) & np.uint32(0x33333333))
    a = (a + (a >> 4)) & np.uint32(0x0F0F0F0F)
    return (a * np.uint32(0x01010101)) >> 24


def max_edges_without_clique_oracle(n: int, k: int) -> int:
    """Exact maximum edge count of an n-vertex graph containing no K_{k+1}.

    Brute force over all 2^C(n,2) labeled graphs, each encoded as an
    edge bitmask.  A graph is bad iff its mask covers the edge mask of
    some (k+1)-vertex subset; the covering tests run vectorized so the
    n=7 worst case (2^21 graphs) stays under a second.
    """
    if n > 7:
        raise ValueError("oracle limit: n must be <= 7")
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    bad = np.zeros(masks.shape, dtype=bool)
    for subset in itertools.combinations(range(n), k + 1):
        smask = np.uint32(0)
        for p in itertools.combinations(subset, 2):
            smask |= np.uint32(1 << index[p])
        bad |= (masks & smask) == smask
    good = masks[~bad]
    if good.size == 0:  # cannot happen: the empty graph is always good
        raise AssertionError("no clique-free graph found")
    return int(_popcount_u32(good).max())


def random_tournament(n: int, rng: random.Random) -> Tournament:
    """Uniformly random orientation of K_n."""
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.getrandbits(1) else (v, u))
    return Tournament.from_arcs(n, arcs)


def all_tournaments(n: int) -> Iterator[Tournament]:
    """Every orientation of K_n, in bitmask order (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        arcs = [
            (u, v) if mask >> i & 1 else (v, u) for i, (u, v) in enumerate(pairs)
        ]
        yield Tournament.from_arcs(n, arcs)
