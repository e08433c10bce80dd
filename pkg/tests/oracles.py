"""Independent oracles the tests check the package against.

Everything here deliberately avoids the code paths under test: Prufer
sequences are decoded with a heap-based algorithm, isomorphism classes
are identified by an interned AHU labeling rooted via leaf stripping,
the index is recomputed through networkx, matchings come from a
backtracking search, and class completeness from the labeled-tree count
identity sum(n!/|Aut(T)|) = n^(n-2).
"""

from __future__ import annotations

import heapq
import itertools
from fractions import Fraction
from math import factorial

import networkx as nx

from augecc.graphs import Graph

# ---------------------------------------------------------------------------
# independent index evaluation
# ---------------------------------------------------------------------------

def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def nx_index_value(g: Graph, exponent: int = 1) -> Fraction:
    """Index recomputed with networkx eccentricities and plain products."""
    G = to_nx(g)
    ecc = nx.eccentricity(G)
    total = Fraction(0)
    for u in range(g.n):
        prod = 1
        for v in G.neighbors(u):
            prod *= G.degree(v)
        total += Fraction(prod, ecc[u] ** exponent)
    return total


# ---------------------------------------------------------------------------
# independent Prufer decoding (heap variant)
# ---------------------------------------------------------------------------

def heap_prufer_decode(seq: tuple[int, ...]) -> list[tuple[int, int]]:
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [u for u in range(n) if degree[u] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((a, b))
    return edges


# ---------------------------------------------------------------------------
# interned AHU labels: equal labels within one labeler <=> isomorphic trees
# ---------------------------------------------------------------------------

class TreeLabeler:
    """Maps trees (as adjacency lists) to small interned integer labels.

    Labels are only meaningful relative to one labeler instance, which is
    all set-comparison tests need.
    """

    def __init__(self) -> None:
        self._intern: dict[tuple, int] = {}

    def _label(self, key: tuple) -> int:
        got = self._intern.get(key)
        if got is None:
            got = len(self._intern)
            self._intern[key] = got
        return got

    def label_tree(self, adj: list[list[int]]) -> int:
        n = len(adj)
        if n == 1:
            return self._label(("single",))
        # centers by leaf stripping
        degree = [len(a) for a in adj]
        layer = [u for u in range(n) if degree[u] == 1]
        remaining = n
        removed = [False] * n
        while remaining > 2:
            nxt = []
            for u in layer:
                removed[u] = True
            remaining -= len(layer)
            for u in layer:
                for v in adj[u]:
                    if not removed[v]:
                        degree[v] -= 1
                        if degree[v] == 1:
                            nxt.append(v)
            layer = nxt
        centers = [u for u in range(n) if not removed[u]]

        def rooted(root: int, parent: int) -> int:
            kids = sorted(
                rooted(w, root) for w in adj[root] if w != parent
            )
            return self._label(tuple(kids))

        if len(centers) == 1:
            return self._label(("c1", rooted(centers[0], -1)))
        c1, c2 = centers
        pair = sorted((rooted(c1, c2), rooted(c2, c1)))
        return self._label(("c2", pair[0], pair[1]))

    def label_graph(self, g: Graph) -> int:
        return self.label_tree([list(nbrs) for nbrs in g.adjacency])


def prufer_exhaustion_labels(n: int, labeler: TreeLabeler) -> set[int]:
    """Labels of every labeled tree on n vertices, by exhausting all
    n^(n-2) Prufer sequences; the set size is the free-tree count."""
    if n == 1:
        return {labeler.label_tree([[]])}
    if n == 2:
        return {labeler.label_tree([[1], [0]])}
    labels = set()
    rng = range(n)
    for seq in itertools.product(rng, repeat=n - 2):
        adj: list[list[int]] = [[] for _ in rng]
        for u, v in heap_prufer_decode(seq):
            adj[u].append(v)
            adj[v].append(u)
        labels.add(labeler.label_tree(adj))
    return labels


def increasing_tree_exhaustion_labels(n: int, labeler: TreeLabeler) -> set[int]:
    """Labels of every tree reachable as a parent array with p[i] < i.

    Rooting any tree anywhere and numbering parents before children gives
    such an array, so all (n-1)! arrays cover every isomorphism class;
    much smaller than the n^(n-2) Prufer space."""
    if n == 1:
        return {labeler.label_tree([[]])}
    labels = set()
    choices = [range(i) for i in range(1, n)]
    for parents in itertools.product(*choices):
        adj: list[list[int]] = [[] for _ in range(n)]
        for child, parent in enumerate(parents, start=1):
            adj[parent].append(child)
            adj[child].append(parent)
        labels.add(labeler.label_tree(adj))
    return labels


# ---------------------------------------------------------------------------
# matchings by backtracking
# ---------------------------------------------------------------------------

def brute_force_perfect_matching(g: Graph) -> bool:
    """Backtracking search over all matchings for one covering every vertex."""
    n = g.n
    if n % 2 == 1:
        return False
    edges = list(g.edges())

    def extend(used: int, start: int) -> bool:
        if used == (1 << n) - 1:
            return True
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not (used >> u & 1) and not (used >> v & 1):
                if extend(used | 1 << u | 1 << v, i + 1):
                    return True
        return False

    return extend(0, 0)


# ---------------------------------------------------------------------------
# automorphism counting and the labeled-tree identity
# ---------------------------------------------------------------------------

def _rooted_code_and_aut(g: Graph, root: int, parent: int) -> tuple[tuple, int]:
    kids = sorted(
        (_rooted_code_and_aut(g, w, root) for w in g.neighbors(root) if w != parent),
        reverse=True,
    )
    aut = 1
    run = 1
    for i, (code, kid_aut) in enumerate(kids):
        aut *= kid_aut
        if i > 0 and code == kids[i - 1][0]:
            run += 1
            aut *= run  # builds m! across a group of m identical codes
        else:
            run = 1
    seq = [0]
    for code, _ in kids:
        seq.extend(lev + 1 for lev in code)
    return tuple(seq), aut


def tree_automorphism_count(g: Graph) -> int:
    """Order of the automorphism group of a tree (center decomposition)."""
    if g.n == 1:
        return 1
    if g.n == 2:
        return 2
    ecc = nx.eccentricity(to_nx(g))
    radius = min(ecc.values())
    center = [u for u in range(g.n) if ecc[u] == radius]
    if len(center) == 1:
        return _rooted_code_and_aut(g, center[0], -1)[1]
    c1, c2 = center
    code1, a1 = _rooted_code_and_aut(g, c1, c2)
    code2, a2 = _rooted_code_and_aut(g, c2, c1)
    return a1 * a2 * (2 if code1 == code2 else 1)


def labeled_tree_count_identity(trees: list[Graph], n: int) -> tuple[int, int]:
    """(sum of n!/|Aut(T)| over the given trees, n^(n-2)).

    Equality certifies that the list holds every isomorphism class
    exactly once, because the per-class labeled counts must exhaust all
    Prufer sequences."""
    total = sum(factorial(n) // tree_automorphism_count(t) for t in trees)
    return total, n ** max(n - 2, 0)
