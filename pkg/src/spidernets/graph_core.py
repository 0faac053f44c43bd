"""Undirected simple graphs with brute-force network indicators.

Everything here is computed directly from the adjacency structure (BFS for
all distances), so results can serve as ground truth for the analytic
formulas in ``closed_form``.  Density and mean distance are exact fractions,
never floats, so cross-checks are exact equality.  All functions are pure
and safe to call concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: node count plus a sorted neighbor tuple per node."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])


@dataclass(frozen=True)
class IndicatorArrays:
    """Every brute-force indicator of a connected graph in one record."""

    delta: tuple[int, ...]
    gamma: tuple[int, ...]
    alpha: tuple[int, ...]
    density: Fraction
    diameter: int
    h_index: int
    neighboring_index: int
    total_distance: int


def build_graph(n: int, edges) -> Graph:
    """Build a simple graph from unordered node pairs.

    Duplicate pairs collapse to a single edge.  Raises ValueError for
    out-of-range node ids or self-loops.
    """
    if n < 0:
        raise ValueError(f"node count must be non-negative, got {n}")
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for {n} nodes")
        if u == v:
            raise ValueError(f"self-loop at node {u} is not allowed")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in neighbor_sets))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Geodesic distances from one node; UNREACHABLE marks disconnected nodes."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    """True when every node is reachable from node 0 (vacuously for n <= 1)."""
    if g.n <= 1:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def all_pairs_distances(g: Graph) -> list[list[int]]:
    """n x n matrix of BFS distances with UNREACHABLE markers."""
    return [bfs_distances(g, u) for u in range(g.n)]


def degree_array(g: Graph) -> tuple[int, ...]:
    """Node degrees sorted non-increasing."""
    return tuple(sorted((len(nbrs) for nbrs in g.adjacency), reverse=True))


def gamma_array(g: Graph) -> tuple[int, ...]:
    """Per node, own degree plus the degrees of all neighbors, sorted non-increasing."""
    values = [
        len(nbrs) + sum(len(g.adjacency[v]) for v in nbrs) for nbrs in g.adjacency
    ]
    return tuple(sorted(values, reverse=True))


def neighboring_index(g: Graph) -> int:
    """Sum of all gamma values."""
    return sum(gamma_array(g))


def alpha_array(g: Graph) -> tuple[int, ...]:
    """Frequency of each distance value over unordered node pairs.

    Entry at index j-1 counts the pairs at distance j, for j in 1..n-1.
    Requires a connected graph; a single node yields the empty array.
    """
    if g.n <= 1:
        return ()
    counts = [0] * (g.n - 1)
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            d = dist[v]
            if d == UNREACHABLE:
                raise ValueError("distance frequencies need a connected graph")
            counts[d - 1] += 1
    return tuple(counts)


def diameter(g: Graph) -> int:
    """Largest geodesic distance; 0 for a single node."""
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    for u in range(g.n):
        dist = bfs_distances(g, u)
        if UNREACHABLE in dist:
            raise ValueError("diameter needs a connected graph")
        best = max(best, max(dist))
    return best


def density(g: Graph) -> Fraction:
    """Edges present over the n(n-1)/2 possible, as an exact fraction."""
    if g.n <= 1:
        raise ValueError("density needs at least 2 nodes")
    return Fraction(2 * g.num_edges, g.n * (g.n - 1))


def h_index(values) -> int:
    """Largest h such that at least h entries are >= h.

    Input must be sorted non-increasing with non-negative entries; the empty
    array has h-index 0.
    """
    values = tuple(values)
    for a, b in zip(values, values[1:]):
        if a < b:
            raise ValueError("h-index input must be sorted non-increasing")
    if values and values[-1] < 0:
        raise ValueError("h-index input must be non-negative")
    h = 0
    for rank, value in enumerate(values, start=1):
        if value >= rank:
            h = rank
        else:
            break
    return h


def total_distance(g: Graph) -> int:
    """Sum of geodesic distances over unordered node pairs."""
    if g.n <= 1:
        return 0
    total = 0
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if dist[v] == UNREACHABLE:
                raise ValueError("total distance needs a connected graph")
            total += dist[v]
    return total


def mean_distance(g: Graph) -> Fraction:
    """Average distance over unordered node pairs, exact."""
    if g.n <= 1:
        raise ValueError("mean distance needs at least 2 nodes")
    return Fraction(total_distance(g), g.n * (g.n - 1) // 2)


def all_indicators(g: Graph) -> IndicatorArrays:
    """Compute the full indicator record for a connected graph with n >= 2."""
    delta = degree_array(g)
    gamma = gamma_array(g)
    return IndicatorArrays(
        delta=delta,
        gamma=gamma,
        alpha=alpha_array(g),
        density=density(g),
        diameter=diameter(g),
        h_index=h_index(delta),
        neighboring_index=sum(gamma),
        total_distance=total_distance(g),
    )
