"""Isomorphism-free tree generation, canonical codes and graph streams.

Free trees are generated through canonical level sequences with the
classical constant-amortized-time successor rule (Wright-Richmond-
Odlyzko-McKay on top of the Beyer-Hedetniemi rooted-tree successor).
A level sequence lists vertex depths in preorder; the canonical
representative of a rooted tree is its lexicographically largest level
sequence, and a free tree is kept only in the rooting where the first
root subtree is no taller / no larger / no later than the rest.

Canonical codes for arbitrary trees are center-rooted level sequences;
a bicentral tree is coded by splitting at its central edge and joining
the two half codes, larger half first.
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .graphs import Graph, PreconditionError, eccentricities, is_tree, tree_perfect_matching

__all__ = [
    "CanonicalCode",
    "free_trees",
    "free_tree_level_sequences",
    "canonical_code",
    "pm_trees",
    "random_tree",
    "prufer_decode",
    "connected_labeled_graphs",
    "graph_from_level_sequence",
    "MAX_FREE_TREE_N",
    "MAX_LABELED_GRAPH_N",
]

CanonicalCode = tuple[int, ...]

MAX_FREE_TREE_N = 22
MAX_LABELED_GRAPH_N = 7


# ---------------------------------------------------------------------------
# free-tree generation
# ---------------------------------------------------------------------------

def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor of a canonical rooted level sequence.

    `p` forces the change to happen at or before that position; by default
    the rightmost entry above level 1 is used.  Returns None after the
    star (all-ones) sequence.
    """
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    nxt = list(seq)
    width = p - q
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - width]
    return nxt


def _split_first_subtree(seq: Sequence[int]) -> tuple[list[int], list[int]]:
    """Split off the first root subtree (re-rooted at level 0) from the rest."""
    m = len(seq)
    ones = 0
    for i, lev in enumerate(seq):
        if lev == 1:
            ones += 1
            if ones == 2:
                m = i
                break
    left = [seq[i] - 1 for i in range(1, m)]
    rest = [0] + list(seq[m:])
    return left, rest


def _is_free_canonical(seq: Sequence[int]) -> bool:
    left, rest = _split_first_subtree(seq)
    if not left:
        return len(seq) <= 2
    h_left, h_rest = max(left), max(rest)
    if h_left > h_rest:
        return False
    if h_left == h_rest:
        if len(left) > len(rest):
            return False
        if len(left) == len(rest) and left > rest:
            return False
    return True


def _skip_to_free_canonical(seq: list[int] | None) -> list[int] | None:
    """Advance to the next valid free-tree sequence (including `seq` itself)."""
    while seq is not None and not _is_free_canonical(seq):
        left, _ = _split_first_subtree(seq)
        p = len(left)
        nxt = _next_rooted(seq, p)
        if nxt is not None and seq[p] > 2:
            # Largest valid continuation keeping the shrunk first subtree:
            # end with a path one level taller than that subtree.
            new_left, _ = _split_first_subtree(nxt)
            tail = list(range(1, max(new_left) + 2))
            nxt[len(nxt) - len(tail):] = tail
        seq = nxt
    return seq


def free_tree_level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequence of every free tree on n vertices, once each."""
    if not (1 <= n <= MAX_FREE_TREE_N):
        raise ValueError(f"free-tree generation supports 1 <= n <= {MAX_FREE_TREE_N}")
    if n == 1:
        yield [0]
        return
    if n == 2:
        yield [0, 1]
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _skip_to_free_canonical(seq)
        if seq is None:
            return
        yield list(seq)
        seq = _next_rooted(seq)


def graph_from_level_sequence(seq: Sequence[int]) -> Graph:
    """Tree whose preorder depth sequence is `seq` (vertex i = i-th entry)."""
    adj: list[list[int]] = [[] for _ in seq]
    stack: list[int] = []
    for i, lev in enumerate(seq):
        while stack and seq[stack[-1]] >= lev:
            stack.pop()
        if stack:
            parent = stack[-1]
            adj[parent].append(i)
            adj[i].append(parent)
        stack.append(i)
    return Graph(adj)


def free_trees(n: int) -> Iterator[Graph]:
    """Every unlabeled tree on n vertices exactly once, deterministic order."""
    for seq in free_tree_level_sequences(n):
        yield graph_from_level_sequence(seq)


def pm_trees(n: int) -> Iterator[Graph]:
    """Free trees on n vertices that admit a perfect matching (n even)."""
    if n % 2 == 1:
        raise ValueError(f"perfect matchings need even n, got {n}")
    for t in free_trees(n):
        if tree_perfect_matching(t) is not None:
            yield t


# ---------------------------------------------------------------------------
# canonical codes
# ---------------------------------------------------------------------------

def _rooted_code(g: Graph, root: int, parent: int) -> tuple[int, ...]:
    kids = sorted(
        (_rooted_code(g, w, root) for w in g.neighbors(root) if w != parent),
        reverse=True,
    )
    seq = [0]
    for kid in kids:
        seq.extend(lev + 1 for lev in kid)
    return tuple(seq)


def canonical_code(t: Graph) -> CanonicalCode:
    """Isomorphism-invariant code: equal codes iff isomorphic trees.

    Unicentral trees are rooted at their center; bicentral trees are coded
    as the two central-edge halves, lexicographically larger half first.
    """
    if not is_tree(t):
        raise PreconditionError("canonical codes are defined for trees")
    center = eccentricities(t).center
    if len(center) == 1:
        return _rooted_code(t, center[0], -1)
    c1, c2 = center
    half1 = _rooted_code(t, c1, c2)
    half2 = _rooted_code(t, c2, c1)
    if half1 < half2:
        half1, half2 = half2, half1
    return half1 + half2


# ---------------------------------------------------------------------------
# labeled trees via Prufer sequences
# ---------------------------------------------------------------------------

def prufer_decode(code: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of the labeled tree on len(code)+2 vertices with this sequence."""
    n = len(code) + 2
    degree = [1] * n
    for v in code:
        degree[v] += 1
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for v in code:
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree (random Prufer sequence), fixed by seed."""
    if n < 2:
        raise ValueError(f"random trees need n >= 2, got {n}")
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in prufer_decode(code):
        adj[u].append(v)
        adj[v].append(u)
    return Graph(adj)


# ---------------------------------------------------------------------------
# labeled connected graphs (small n, exhaustive)
# ---------------------------------------------------------------------------

def _edge_positions(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def _connected_mask(nbr: list[int], n: int) -> bool:
    full = (1 << n) - 1
    reach = 1
    frontier = 1
    while frontier:
        grown = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            grown |= nbr[v]
        frontier = grown & ~reach
        reach |= frontier
    return reach == full


def labeled_graph_masks(n: int) -> Iterator[list[int]]:
    """Adjacency bitmasks of every connected labeled graph on n vertices."""
    if not (2 <= n <= MAX_LABELED_GRAPH_N):
        raise ValueError(
            f"labeled-graph enumeration supports 2 <= n <= {MAX_LABELED_GRAPH_N}"
        )
    positions = _edge_positions(n)
    m = len(positions)
    # a spanning-connected graph needs at least n-1 edges; still cheapest
    # to scan every subset at these sizes
    for mask in range(1 << m):
        nbr = [0] * n
        rest = mask
        while rest:
            bit = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            u, v = positions[bit]
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        if _connected_mask(nbr, n):
            yield nbr


def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on n vertices (no isomorphism reduction)."""
    for nbr in labeled_graph_masks(n):
        adj = []
        for u in range(n):
            mask = nbr[u]
            row = []
            while mask:
                v = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                row.append(v)
            adj.append(row)
        yield Graph(adj)
