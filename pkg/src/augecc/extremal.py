"""Exhaustive extremal scans over graph classes and claim verification.

Scans keep exact rational extremes (internally as integers over a fixed
common denominator, the lcm of the possible eccentricity powers) and
collect every attainer up to isomorphism.  Claims are judged by
canonical-code equality with the predicted families, never by value
coincidence.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm

from .enumeration import (
    MAX_LABELED_GRAPH_N,
    CanonicalCode,
    canonical_code,
    free_trees,
    labeled_graph_masks,
    pm_trees,
)
from .families import (
    FamilyKind,
    balanced_tree,
    closed_form_value,
    max_tree_central_degree,
    path_graph,
    star_graph,
)
from .graphs import Graph, IndexKind, index_value, tree_perfect_matching

__all__ = [
    "GraphClass",
    "ExtremalReport",
    "Claim",
    "ClaimVerdict",
    "scan",
    "verify_claims",
    "crossover_table",
    "CrossoverRow",
    "p2_profile",
    "P2Row",
    "super_augmented_survey",
    "SuperAugmentedRow",
    "canonical_graph_code",
]


class GraphClass(Enum):
    ALL_TREES = "trees"
    PM_TREES = "pm-trees"
    CONNECTED_GRAPHS = "graphs"


@dataclass(frozen=True)
class ExtremalReport:
    graph_class: GraphClass
    n: int
    kind: IndexKind
    count: int
    min_value: Fraction
    max_value: Fraction
    min_attainers: tuple[CanonicalCode, ...]
    max_attainers: tuple[CanonicalCode, ...]


class Claim(Enum):
    COR_PATH = "CorPath"
    TM_MAX_TREES = "TmMaxTrees"
    COR_MAX_MATCH = "CorMaxMatch"
    PROP_MAX_GRAPHS = "PropMaxGraphs"
    PROP_MIN_GRAPHS = "PropMinGraphs"
    CROSSOVER = "CrossoverLemma"


@dataclass(frozen=True)
class ClaimVerdict:
    claim: Claim
    n: int
    passed: bool
    detail: str
    witness: CanonicalCode | None = None


# ---------------------------------------------------------------------------
# fast exact evaluation helpers
# ---------------------------------------------------------------------------

def _tree_adjacency(g: Graph) -> tuple[tuple[int, ...], ...]:
    return g.adjacency


def _tree_eccentricities(adj) -> list[int]:
    """All eccentricities of a tree from three BFS passes.

    In a tree every vertex's farthest vertex is an endpoint of some
    diametric path, so ecc(v) = max(dist(v, e1), dist(v, e2)) for the two
    endpoints found by the classic double sweep.
    """
    n = len(adj)
    if n == 1:
        return [0]

    def bfs(src: int) -> list[int]:
        dist = [-1] * n
        dist[src] = 0
        stack = [src]
        while stack:
            nxt = []
            for u in stack:
                du = dist[u] + 1
                for v in adj[u]:
                    if dist[v] < 0:
                        dist[v] = du
                        nxt.append(v)
            stack = nxt
        return dist

    d0 = bfs(0)
    e1 = d0.index(max(d0))
    d1 = bfs(e1)
    e2 = d1.index(max(d1))
    d2 = bfs(e2)
    return [max(a, b) for a, b in zip(d1, d2)]


def _scaled_tree_index(adj, ecc, inv) -> int:
    """Index value scaled by the common denominator baked into `inv`."""
    deg = [len(nbrs) for nbrs in adj]
    total = 0
    for u, nbrs in enumerate(adj):
        prod = 1
        for v in nbrs:
            prod *= deg[v]
        total += prod * inv[ecc[u]]
    return total


def _inverse_table(n: int, kind: IndexKind) -> tuple[int, list[int]]:
    """Common denominator and per-eccentricity multipliers for scaled sums."""
    top = max(n - 1, 1)
    scale = lcm(*range(1, top + 1)) ** kind.value
    inv = [0] * (top + 1)
    for e in range(1, top + 1):
        inv[e] = scale // e**kind.value
    return scale, inv


class _Extremes:
    """Running exact min/max with all attaining graphs."""

    __slots__ = ("min_num", "max_num", "min_graphs", "max_graphs", "count")

    def __init__(self) -> None:
        self.min_num: int | None = None
        self.max_num: int | None = None
        self.min_graphs: list = []
        self.max_graphs: list = []
        self.count = 0

    def offer(self, num: int, payload) -> None:
        self.count += 1
        if self.min_num is None or num < self.min_num:
            self.min_num = num
            self.min_graphs = [payload]
        elif num == self.min_num:
            self.min_graphs.append(payload)
        if self.max_num is None or num > self.max_num:
            self.max_num = num
            self.max_graphs = [payload]
        elif num == self.max_num:
            self.max_graphs.append(payload)

    def merge(self, other: "_Extremes") -> None:
        self.count += other.count
        if other.min_num is not None:
            if self.min_num is None or other.min_num < self.min_num:
                self.min_num = other.min_num
                self.min_graphs = list(other.min_graphs)
            elif other.min_num == self.min_num:
                self.min_graphs.extend(other.min_graphs)
        if other.max_num is not None:
            if self.max_num is None or other.max_num > self.max_num:
                self.max_num = other.max_num
                self.max_graphs = list(other.max_graphs)
            elif other.max_num == self.max_num:
                self.max_graphs.extend(other.max_graphs)


def _tree_stream(graph_class: GraphClass, n: int):
    if graph_class is GraphClass.ALL_TREES:
        return free_trees(n)
    if graph_class is GraphClass.PM_TREES:
        return pm_trees(n)
    raise ValueError(f"not a tree class: {graph_class}")


def _scan_trees_part(
    graph_class: GraphClass, n: int, kind: IndexKind, stride: int, offset: int
) -> _Extremes:
    _, inv = _inverse_table(n, kind)
    ext = _Extremes()
    for i, g in enumerate(_tree_stream(graph_class, n)):
        if stride > 1 and i % stride != offset:
            continue
        adj = _tree_adjacency(g)
        ecc = _tree_eccentricities(adj)
        ext.offer(_scaled_tree_index(adj, ecc, inv), g)
    return ext


def _scan_graphs_part(
    n: int, kind: IndexKind, stride: int, offset: int
) -> _Extremes:
    _, inv = _inverse_table(n, kind)
    ext = _Extremes()
    for i, nbr in enumerate(labeled_graph_masks(n)):
        if stride > 1 and i % stride != offset:
            continue
        deg = [m.bit_count() for m in nbr]
        total = 0
        full = (1 << n) - 1
        for u in range(n):
            mask = nbr[u]
            prod = 1
            while mask:
                v = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                prod *= deg[v]
            # eccentricity of u by frontier expansion over bitmasks
            seen = 1 << u
            frontier = seen
            ecc = 0
            while seen != full:
                grown = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    grown |= nbr[v]
                frontier = grown & ~seen
                seen |= frontier
                ecc += 1
            total += prod * inv[max(ecc, 1)]
        ext.offer(total, tuple(nbr))
    return ext


def _masks_to_graph(nbr: tuple[int, ...]) -> Graph:
    n = len(nbr)
    return Graph(
        [[v for v in range(n) if nbr[u] >> v & 1] for u in range(n)]
    )


def canonical_graph_code(g: Graph) -> CanonicalCode:
    """Brute-force canonical form for small graphs (n <= 7): the
    lexicographically smallest upper-triangle bit tuple over all vertex
    relabelings, prefixed by n.  Trees use `canonical_code` instead."""
    if g.n > MAX_LABELED_GRAPH_N:
        raise ValueError("brute-force canonical form is limited to n <= 7")
    pairs = [(u, v) for v in range(1, g.n) for u in range(v)]
    best = None
    for perm in itertools.permutations(range(g.n)):
        bits = tuple(
            1 if g.has_edge(perm[u], perm[v]) else 0 for u, v in pairs
        )
        if best is None or bits < best:
            best = bits
    return (g.n,) + (best or ())


_CLASS_LIMITS = {
    GraphClass.ALL_TREES: 22,
    GraphClass.PM_TREES: 22,
    GraphClass.CONNECTED_GRAPHS: MAX_LABELED_GRAPH_N,
}


def scan(
    graph_class: GraphClass,
    n: int,
    kind: IndexKind = IndexKind.AUGMENTED,
    threads: int = 1,
) -> ExtremalReport:
    """Exact min/max of the index over a whole class, with all attainers.

    Attainers are reported as canonical codes, deduplicated up to
    isomorphism.  `threads` > 1 splits the generator round-robin across
    worker processes; results are identical for any thread count.
    """
    if n < 2 or n > _CLASS_LIMITS[graph_class]:
        raise ValueError(f"{graph_class.value} scan limited to 2 <= n <= "
                         f"{_CLASS_LIMITS[graph_class]}, got {n}")
    if graph_class is GraphClass.PM_TREES and n % 2 == 1:
        raise ValueError("perfect-matching scans need even n")
    is_trees = graph_class is not GraphClass.CONNECTED_GRAPHS
    scale, _ = _inverse_table(n, kind)
    if threads > 1:
        parts = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(
                    _scan_trees_part, graph_class, n, kind, threads, off
                )
                if is_trees
                else pool.submit(_scan_graphs_part, n, kind, threads, off)
                for off in range(threads)
            ]
            parts = [f.result() for f in futures]
        ext = _Extremes()
        for part in parts:
            ext.merge(part)
    elif is_trees:
        ext = _scan_trees_part(graph_class, n, kind, 1, 0)
    else:
        ext = _scan_graphs_part(n, kind, 1, 0)
    assert ext.min_num is not None and ext.max_num is not None

    def codes(graphs) -> tuple[CanonicalCode, ...]:
        if is_trees:
            return tuple(sorted({canonical_code(g) for g in graphs}))
        return tuple(
            sorted({canonical_graph_code(_masks_to_graph(nbr)) for nbr in graphs})
        )

    return ExtremalReport(
        graph_class=graph_class,
        n=n,
        kind=kind,
        count=ext.count,
        min_value=Fraction(ext.min_num, scale),
        max_value=Fraction(ext.max_num, scale),
        min_attainers=codes(ext.min_graphs),
        max_attainers=codes(ext.max_graphs),
    )


# ---------------------------------------------------------------------------
# claim verification
# ---------------------------------------------------------------------------

def _expected_max_tree(n: int) -> Graph:
    if n <= 15:
        return star_graph(n)
    return balanced_tree(n, max_tree_central_degree(n))


def _check_unique(
    claim: Claim,
    n: int,
    observed: tuple[CanonicalCode, ...],
    expected: CanonicalCode,
    what: str,
) -> ClaimVerdict:
    if observed == (expected,):
        return ClaimVerdict(claim, n, True, f"unique {what} matches prediction")
    others = [c for c in observed if c != expected]
    if expected in observed:
        return ClaimVerdict(
            claim, n, False,
            f"{what} shared by {len(observed)} non-isomorphic graphs",
            witness=others[0],
        )
    return ClaimVerdict(
        claim, n, False, f"{what} attained by an unpredicted graph",
        witness=observed[0],
    )


def verify_claims(
    n_min: int,
    n_max: int,
    classes: set[GraphClass] | None = None,
    threads: int = 1,
) -> list[ClaimVerdict]:
    """Check every extremal claim on each n in range, per graph class.

    Tree classes check the extremal-tree statements, the graph class the
    complete-graph / path propositions; the crossover lemma rides along
    whenever trees are scanned (it needs no scan).
    """
    if classes is None:
        classes = set(GraphClass)
    verdicts: list[ClaimVerdict] = []
    if GraphClass.ALL_TREES in classes:
        for n in range(max(n_min, 4), n_max + 1):
            report = scan(GraphClass.ALL_TREES, n, threads=threads)
            verdicts.append(
                _check_unique(
                    Claim.COR_PATH, n, report.min_attainers,
                    canonical_code(path_graph(n)), "minimum",
                )
            )
            verdicts.append(
                _check_unique(
                    Claim.TM_MAX_TREES, n, report.max_attainers,
                    canonical_code(_expected_max_tree(n)), "maximum",
                )
            )
        verdicts.extend(crossover_verdicts(8, max(n_max, 40)))
    if GraphClass.PM_TREES in classes:
        start = max(n_min, 6)
        for n in range(start + start % 2, n_max + 1, 2):
            report = scan(GraphClass.PM_TREES, n, threads=threads)
            verdict = _check_unique(
                Claim.COR_MAX_MATCH, n, report.max_attainers,
                canonical_code(balanced_tree(n, n // 2)), "maximum",
            )
            if verdict.passed:
                verdict = _check_unique(
                    Claim.COR_MAX_MATCH, n, report.min_attainers,
                    canonical_code(path_graph(n)), "minimum",
                )
            if verdict.passed:
                verdict = ClaimVerdict(
                    Claim.COR_MAX_MATCH, n, True,
                    "unique maximum and minimum match prediction",
                )
            verdicts.append(verdict)
    if GraphClass.CONNECTED_GRAPHS in classes:
        for n in range(max(n_min, 3), min(n_max, MAX_LABELED_GRAPH_N) + 1):
            report = scan(GraphClass.CONNECTED_GRAPHS, n, threads=threads)
            verdicts.append(
                _check_unique(
                    Claim.PROP_MAX_GRAPHS, n, report.max_attainers,
                    canonical_graph_code(
                        _masks_to_graph(
                            tuple(((1 << n) - 1) ^ (1 << u) for u in range(n))
                        )
                    ),
                    "maximum",
                )
            )
            verdicts.append(
                _check_unique(
                    Claim.PROP_MIN_GRAPHS, n, report.min_attainers,
                    canonical_graph_code(path_graph(n)), "minimum",
                )
            )
    return verdicts


# ---------------------------------------------------------------------------
# crossover table and p = 2 profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossoverRow:
    n: int
    star_value: Fraction
    balanced_value: Fraction

    @property
    def larger(self) -> str:
        if self.balanced_value > self.star_value:
            return "tb"
        if self.star_value > self.balanced_value:
            return "star"
        return "equal"


def crossover_table(n_min: int, n_max: int) -> list[CrossoverRow]:
    """Exact star vs balanced-tree values; the sign flips for good at n=16.

    Values come from the closed forms (with the corrected n = 3k-1
    constant) and are cross-checked against direct evaluation.
    """
    if n_min < 8:
        raise ValueError("crossover table needs n >= 8 (balanced-tree closed form)")
    rows = []
    for n in range(n_min, n_max + 1):
        star = closed_form_value(FamilyKind.STAR, n)
        tb = closed_form_value(FamilyKind.DEGREE_BALANCED, n)
        direct = index_value(balanced_tree(n, max_tree_central_degree(n)))
        if tb != direct:
            raise AssertionError(
                f"closed form {tb} disagrees with direct value {direct} at n={n}"
            )
        rows.append(CrossoverRow(n=n, star_value=star, balanced_value=tb))
    return rows


def crossover_verdicts(n_min: int, n_max: int) -> list[ClaimVerdict]:
    verdicts = []
    for row in crossover_table(n_min, n_max):
        expected = "tb" if row.n >= 16 else "star"
        verdicts.append(
            ClaimVerdict(
                Claim.CROSSOVER,
                row.n,
                row.larger == expected,
                f"star {row.star_value} vs tb {row.balanced_value}: "
                f"{row.larger} larger",
            )
        )
    return verdicts


@dataclass(frozen=True)
class P2Row:
    n: int
    t: int
    k: int
    formula_value: Fraction
    direct_value: Fraction

    @property
    def agrees(self) -> bool:
        return self.formula_value == self.direct_value


def p2_profile(n: int) -> list[P2Row]:
    """Index of the balanced trees with neighbor degrees <= 2 as f(t).

    t counts the degree-2 center-neighbors of the tree with central
    degree k = n-t-1; f(t) = 2^(t-1) + (n-t-1)^2/3 + t/2 must equal the
    direct evaluation, and the maximum over t sits at an end of the range.
    """
    if n < 7:
        raise ValueError(f"p=2 profile needs n >= 7, got {n}")
    rows = []
    for t in range(2, (n - 1) // 2 + 1):
        k = n - t - 1
        formula = 2 ** (t - 1) + Fraction(k * k, 3) + Fraction(t, 2)
        direct = index_value(balanced_tree(n, k))
        rows.append(P2Row(n=n, t=t, k=k, formula_value=formula, direct_value=direct))
    return rows


# ---------------------------------------------------------------------------
# super augmented exploration (conjecture, informational)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuperAugmentedRow:
    graph_class: GraphClass
    n: int
    min_is_path: bool
    max_as_conjectured: bool
    max_attainers: tuple[CanonicalCode, ...]

    @property
    def analogous(self) -> bool:
        return self.min_is_path and self.max_as_conjectured


def super_augmented_survey(n_max: int = 14, threads: int = 1) -> list[SuperAugmentedRow]:
    """Scan the super augmented index and record whether the extremal
    pattern of the augmented index repeats (informational, per n)."""
    rows = []
    for n in range(4, n_max + 1):
        report = scan(GraphClass.ALL_TREES, n, IndexKind.SUPER_AUGMENTED, threads)
        conjectured = {canonical_code(star_graph(n))}
        if n >= 8:
            conjectured.add(
                canonical_code(balanced_tree(n, max_tree_central_degree(n)))
            )
        rows.append(
            SuperAugmentedRow(
                graph_class=GraphClass.ALL_TREES,
                n=n,
                min_is_path=report.min_attainers
                == (canonical_code(path_graph(n)),),
                max_as_conjectured=set(report.max_attainers) <= conjectured,
                max_attainers=report.max_attainers,
            )
        )
    for n in range(6, n_max + 1, 2):
        report = scan(GraphClass.PM_TREES, n, IndexKind.SUPER_AUGMENTED, threads)
        rows.append(
            SuperAugmentedRow(
                graph_class=GraphClass.PM_TREES,
                n=n,
                min_is_path=report.min_attainers
                == (canonical_code(path_graph(n)),),
                max_as_conjectured=report.max_attainers
                == (canonical_code(balanced_tree(n, n // 2)),),
                max_attainers=report.max_attainers,
            )
        )
    return rows
