"""Extremal graph families and their exact closed-form index values.

Constructors use a canonical vertex numbering (center first, its
neighbors next, pendants last) so emitted graphs are reproducible byte
for byte.

The closed form for the degree-balanced family with central degree
ceil((n-1)/3) splits on n mod 3.  For n = 3k-1 the published constant
term (-1/2) disagrees with direct evaluation (already at n=8: direct
computation gives 23/2, the printed form 13); the corrected constant -2
is used here, and the printed variant stays available for audit via
``as_printed=True``.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .graphs import Graph, InvalidGraphError, build_graph

__all__ = [
    "FamilyKind",
    "BalanceClass",
    "HarmonicCache",
    "harmonic",
    "make_family",
    "path_graph",
    "star_graph",
    "complete_graph",
    "balanced_tree",
    "max_tree_central_degree",
    "closed_form_value",
    "balance_class",
]


class FamilyKind(Enum):
    PATH = "path"
    STAR = "star"
    COMPLETE = "complete"
    DEGREE_BALANCED = "tb"


class BalanceClass(Enum):
    BALANCED = "balanced"
    ALMOST_PERFECT = "almost-perfect"
    PERFECT = "perfect"


HarmonicCache = dict[int, Fraction]


def harmonic(i: int, cache: HarmonicCache | None = None) -> Fraction:
    """Exact i-th harmonic number, extending `cache` if given."""
    if i < 1:
        raise ValueError(f"harmonic number undefined for i={i}")
    if cache is None:
        cache = {}
    cache.setdefault(1, Fraction(1))
    known = max(k for k in cache if k <= i)
    value = cache[known]
    for j in range(known + 1, i + 1):
        value += Fraction(1, j)
        cache[j] = value
    return cache[i]


def path_graph(n: int) -> Graph:
    if n < 2:
        raise InvalidGraphError(f"path needs n >= 2, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError(f"star needs n >= 3, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise InvalidGraphError(f"complete graph needs n >= 2, got {n}")
    return build_graph(n, [(u, v) for v in range(1, n) for u in range(v)])


def _tb_pendant_counts(n: int, k: int) -> list[int]:
    """Pendants per center-neighbor, spread at most one, larger counts first."""
    pendants = n - 1 - k
    q, r = divmod(pendants, k)
    return [q + 1] * r + [q] * (k - r)


def balanced_tree(n: int, k: int) -> Graph:
    """Diameter-4 tree whose center has degree k and whose center-neighbor
    degrees differ by at most one.  Vertex 0 is the center, 1..k its
    neighbors, the rest pendants grouped by neighbor."""
    if k < 3 or k > n - 1:
        raise InvalidGraphError(f"balanced tree needs 3 <= k <= n-1, got k={k}, n={n}")
    if n - 1 - k < 2:
        raise InvalidGraphError(
            f"balanced tree on n={n} with k={k} has fewer than 2 pendants "
            "(diameter would drop below 4)"
        )
    counts = _tb_pendant_counts(n, k)
    if sum(1 for c in counts if c >= 1) < 2:
        raise InvalidGraphError(
            f"balanced tree on n={n} with k={k} has fewer than two non-leaf "
            "center-neighbors (diameter would drop below 4)"
        )
    edges = [(0, i) for i in range(1, k + 1)]
    nxt = k + 1
    for i, c in enumerate(counts, start=1):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(n, edges)


def max_tree_central_degree(n: int) -> int:
    """Central degree ceil((n-1)/3) of the maximal-index balanced family."""
    return -((n - 1) // -3)


def make_family(kind: FamilyKind, n: int, k: int | None = None) -> Graph:
    if kind is FamilyKind.PATH:
        return path_graph(n)
    if kind is FamilyKind.STAR:
        return star_graph(n)
    if kind is FamilyKind.COMPLETE:
        return complete_graph(n)
    if kind is FamilyKind.DEGREE_BALANCED:
        if k is None:
            raise InvalidGraphError("degree-balanced family needs the central degree k")
        return balanced_tree(n, k)
    raise InvalidGraphError(f"unknown family kind: {kind!r}")


def balance_class(n: int, k: int) -> BalanceClass:
    """Classify the balance of the tree built by `balanced_tree(n, k)`."""
    balanced_tree(n, k)  # validates (n, k)
    pendants = n - 1 - k
    q, r = divmod(pendants, k)
    if r == 0:
        return BalanceClass.PERFECT
    p = q + 2  # larger neighbor degree
    if k == -((n - 1) // -p):
        return BalanceClass.ALMOST_PERFECT
    return BalanceClass.BALANCED


def _path_value(n: int) -> Fraction:
    cache: HarmonicCache = {}
    if n % 2 == 0:
        return (
            8 * (harmonic(n - 1, cache) - harmonic((n - 2) // 2, cache))
            - Fraction(4, n - 1)
            - Fraction(4, n - 2)
        )
    return (
        8 * (harmonic(n - 1, cache) - harmonic((n - 3) // 2, cache))
        - Fraction(12, n - 1)
        - Fraction(4, n - 2)
    )


def _tb_third_value(n: int, as_printed: bool) -> Fraction:
    k = max_tree_central_degree(n)
    if n == 3 * k + 1:
        return Fraction(3**k, 2) + Fraction(k * k, 3) + Fraction(3 * k, 2)
    if n == 3 * k:
        return 3 ** (k - 1) + Fraction(k * k, 3) + Fraction(3 * k, 2) - 1
    # n = 3k - 1; the printed constant -1/2 is refuted by direct evaluation
    tail = Fraction(-1, 2) if as_printed else Fraction(-2)
    return 2 * 3 ** (k - 2) + Fraction(k * k, 3) + Fraction(3 * k, 2) + tail


def closed_form_value(
    kind: FamilyKind,
    n: int,
    k: int | None = None,
    *,
    as_printed: bool = False,
) -> Fraction:
    """Closed-form index value for the family, on its validity range only.

    For the degree-balanced kind, k selects between the two families with
    known closed forms: ceil((n-1)/3) (maximal trees) and n/2 (maximal
    perfect-matching trees).  `as_printed` switches the n = 3k-1 branch
    to the published constant for audit purposes.
    """
    if kind is FamilyKind.PATH:
        if n < 5:
            raise ValueError(f"path closed form needs n >= 5, got {n}")
        return _path_value(n)
    if kind is FamilyKind.STAR:
        if n < 4:
            raise ValueError(f"star closed form needs n >= 4, got {n}")
        return 1 + Fraction((n - 1) ** 2, 2)
    if kind is FamilyKind.COMPLETE:
        if n < 2:
            raise ValueError(f"complete-graph closed form needs n >= 2, got {n}")
        return Fraction(n * (n - 1) ** (n - 1))
    if kind is FamilyKind.DEGREE_BALANCED:
        if k is not None and n >= 6 and n % 2 == 0 and k == n // 2:
            return 2 ** (n // 2 - 2) + Fraction(n * n + 3 * n - 6, 12)
        if k is None or k == max_tree_central_degree(n):
            if n < 8:
                raise ValueError(
                    f"TB(n, ceil((n-1)/3)) closed form needs n >= 8, got {n}"
                )
            return _tb_third_value(n, as_printed)
        raise ValueError(
            f"no closed form for central degree k={k} at n={n} "
            "(known: ceil((n-1)/3) and n/2)"
        )
    raise ValueError(f"unknown family kind: {kind!r}")
