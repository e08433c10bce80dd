"""Immutable simple graphs and the exact eccentricity-based index machinery.

Values of the index are exact rationals (`fractions.Fraction`); floating
point is used only for display elsewhere.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    "AugeccError",
    "InvalidGraphError",
    "PreconditionError",
    "ExactRational",
    "Graph",
    "EccProfile",
    "IndexKind",
    "Matching",
    "build_graph",
    "eccentricities",
    "neighbor_degree_product",
    "index_value",
    "diametric_path_farthest_branch",
    "tree_perfect_matching",
    "is_tree",
    "is_path_graph",
]

# All index values are exact; Fraction already guarantees a reduced
# numerator/denominator pair with positive denominator.
ExactRational = Fraction


class AugeccError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidGraphError(AugeccError):
    """Raised when a graph cannot be built or parsed."""


class PreconditionError(AugeccError):
    """Raised when an operation's precondition is not met."""


class Graph:
    """Immutable simple undirected graph with vertices 0..n-1.

    Adjacency lists are stored as sorted tuples, so two equal graphs have
    identical adjacency structures byte for byte.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        self.n = len(adjacency)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    # -- basic accessors -------------------------------------------------

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex u renamed to perm[u]."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u in range(self.n):
            adj[perm[u]] = [perm[v] for v in self._adj[u]]
        return Graph(adj)

    def with_edges(
        self,
        removed: Iterable[tuple[int, int]] = (),
        added: Iterable[tuple[int, int]] = (),
    ) -> "Graph":
        """Copy of the graph with some edges deleted and others inserted."""
        adj = [set(nbrs) for nbrs in self._adj]
        for u, v in removed:
            adj[u].discard(v)
            adj[v].discard(u)
        for u, v in added:
            adj[u].add(v)
            adj[v].add(u)
        return Graph(adj)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class EccProfile:
    """Per-vertex eccentricities with the derived diameter and center."""

    ecc: tuple[int, ...]
    diameter: int
    center: tuple[int, ...]

    @property
    def radius(self) -> int:
        return min(self.ecc)


class IndexKind(Enum):
    """Which eccentricity exponent the index uses: 1 or 2."""

    AUGMENTED = 1
    SUPER_AUGMENTED = 2


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges."""

    edges: tuple[tuple[int, int], ...]

    def covers(self, n: int) -> bool:
        return 2 * len(self.edges) == n


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and build the graph.

    Rejects out-of-range vertex ids, self-loops and duplicate edges
    (either orientation counts as the same edge).
    """
    if n < 1:
        raise InvalidGraphError(f"vertex count must be positive, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise InvalidGraphError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise InvalidGraphError(f"duplicate edge ({u},{v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(adj)


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n == 1 or min(_bfs_distances(g, 0)) >= 0


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.n - 1 and is_connected(g)


def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(u) <= 2 for u in range(g.n))


def eccentricities(g: Graph) -> EccProfile:
    """Eccentricity of every vertex by BFS from each vertex.

    Raises `PreconditionError` on disconnected input.
    """
    ecc = []
    for u in range(g.n):
        dist = _bfs_distances(g, u)
        far = max(dist)
        if min(dist) < 0:
            raise PreconditionError("graph is disconnected")
        ecc.append(far)
    diameter = max(ecc)
    radius = min(ecc)
    center = tuple(u for u in range(g.n) if ecc[u] == radius)
    return EccProfile(ecc=tuple(ecc), diameter=diameter, center=center)


def neighbor_degree_product(g: Graph, u: int) -> int:
    """Product of the degrees of all neighbors of u (1 for empty product)."""
    if not (0 <= u < g.n):
        raise InvalidGraphError(f"vertex {u} out of range")
    prod = 1
    for v in g.neighbors(u):
        prod *= g.degree(v)
    return prod


def index_value(g: Graph, kind: IndexKind = IndexKind.AUGMENTED) -> Fraction:
    """Exact value of the (super-)augmented eccentric connectivity index.

    Sums M(u) / eps(u)^e over all vertices, where M(u) is the neighbor
    degree product, eps(u) the eccentricity and e = 1 (augmented) or
    2 (super augmented).
    """
    if g.n < 2:
        raise PreconditionError("index undefined for n < 2 (eccentricity 0)")
    profile = eccentricities(g)
    exp = kind.value
    total = Fraction(0)
    for u in range(g.n):
        total += Fraction(neighbor_degree_product(g, u), profile.ecc[u] ** exp)
    return total


def _tree_path(g: Graph, a: int, b: int) -> list[int]:
    """The unique a-b path in a tree, as a vertex list."""
    parent = [-1] * g.n
    parent[a] = a
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for v in g.neighbors(u):
            if parent[v] < 0:
                parent[v] = u
                queue.append(v)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def diametric_path_farthest_branch(t: Graph) -> list[int]:
    """Diametric path whose first branching vertex is as late as possible.

    Considers every diametric path in both orientations, maximizes the
    index of the first vertex of degree >= 3, and breaks ties by the
    lexicographically smallest vertex sequence.  For a path graph the
    path itself is returned (no branching vertex exists).
    """
    if not is_tree(t):
        raise PreconditionError("diametric path selection requires a tree")
    if t.n == 1:
        return [0]
    dist = [_bfs_distances(t, u) for u in range(t.n)]
    diameter = max(max(row) for row in dist)
    if is_path_graph(t):
        ends = [u for u in range(t.n) if t.degree(u) <= 1]
        path = _tree_path(t, min(ends), max(ends))
        return path if path <= path[::-1] else path[::-1]
    best: tuple[int, list[int]] | None = None
    for a in range(t.n):
        for b in range(t.n):
            if a == b or dist[a][b] != diameter:
                continue
            path = _tree_path(t, a, b)
            first_branch = next(
                i for i, v in enumerate(path) if t.degree(v) >= 3
            )
            # maximize branch index, then prefer the smaller sequence
            if (
                best is None
                or first_branch > best[0]
                or (first_branch == best[0] and path < best[1])
            ):
                best = (first_branch, path)
    assert best is not None
    return best[1]


def tree_perfect_matching(t: Graph) -> Matching | None:
    """The unique perfect matching of a tree, or None if there is none.

    Leaf stripping: a leaf must be matched to its support vertex; matching
    them and deleting both either cascades to a perfect matching or gets
    stuck, in which case none exists.
    """
    if not is_tree(t):
        raise PreconditionError("perfect matching detection requires a tree")
    n = t.n
    if n % 2 == 1:
        return None
    if n == 0:
        return Matching(())
    deg = [t.degree(u) for u in range(n)]
    alive = [True] * n
    leaves = deque(u for u in range(n) if deg[u] == 1)
    matched: list[tuple[int, int]] = []
    removed = 0
    while leaves:
        leaf = leaves.popleft()
        if not alive[leaf]:
            continue
        support = next((v for v in t.neighbors(leaf) if alive[v]), None)
        if support is None:
            return None  # two leaves competed for the same support
        matched.append((min(leaf, support), max(leaf, support)))
        alive[leaf] = alive[support] = False
        removed += 2
        for v in t.neighbors(support):
            if alive[v]:
                deg[v] -= 1
                if deg[v] == 1:
                    leaves.append(v)
    if removed != n:
        return None
    return Matching(tuple(sorted(matched)))
