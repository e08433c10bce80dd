"""Index-monotone local tree transformations and their reduction drivers.

Each rule rewires a tree on a fixed vertex set and is guaranteed (and
machine-checked in the test suite over full enumerations) to move the
augmented index strictly in its declared direction:

* path-min        decreases the index, increases the diameter
* star-max        increases the index (diameter >= 5 trees)
* balance-shift   increases the index (diameter-4, unbalanced neighbors)
* deg-reduce-path increases the index (diameter-4, balanced, degree >= 4)
* p3-rebalance    increases the index (balanced trees with neighbor degree 3)
* pm-shift        increases the index, preserves a perfect matching

Reduction drivers iterate the rules to the extremal fixed points: a path
(decreasing), a star / balanced-tree fixed point (increasing), and the
unique diameter-4 perfect-matching tree (pm-increasing).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .graphs import (
    Graph,
    IndexKind,
    PreconditionError,
    diametric_path_farthest_branch,
    eccentricities,
    index_value,
    is_path_graph,
    is_tree,
    neighbor_degree_product,
    tree_perfect_matching,
)

__all__ = [
    "TransformRule",
    "Direction",
    "TraceStep",
    "TreeTrace",
    "apply_path_min",
    "apply_star_max",
    "apply_balance",
    "apply_deg_reduce_path",
    "apply_p3_rebalance",
    "apply_pm_shift",
    "apply_rule",
    "reduce_tree",
]


class TransformRule(Enum):
    PATH_MIN = "pathmin"
    STAR_MAX = "starmax"
    BALANCE_SHIFT = "balance"
    DEG_REDUCE_PATH = "degreduce"
    P3_REBALANCE = "p3"
    PM_SHIFT = "pmshift"


class Direction(Enum):
    DECREASING = "decreasing"
    INCREASING = "increasing"
    PM_INCREASING = "pm-increasing"


@dataclass(frozen=True)
class TraceStep:
    graph: Graph
    value: Fraction
    rule: TransformRule


@dataclass(frozen=True)
class TreeTrace:
    start: Graph
    start_value: Fraction
    direction: Direction
    steps: tuple[TraceStep, ...]

    @property
    def final(self) -> Graph:
        return self.steps[-1].graph if self.steps else self.start

    @property
    def final_value(self) -> Fraction:
        return self.steps[-1].value if self.steps else self.start_value


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise PreconditionError("transformation rules require a tree")


def apply_path_min(t: Graph) -> Graph:
    """Move all off-path neighbors of the first-branch vertex to the path end.

    On a diametric path chosen with the first branching vertex as late as
    possible, the pivot is that vertex v_i, except that for i = 1 with
    D > 2 and deg(v_2) > 2 the pivot moves to v_2.  All pivot neighbors
    off the path are re-attached at v_0.  The index strictly decreases
    and the diameter strictly increases.
    """
    _require_tree(t)
    if is_path_graph(t):
        raise PreconditionError("tree is already a path")
    path = diametric_path_farthest_branch(t)
    diameter = len(path) - 1
    i = next(j for j, v in enumerate(path) if t.degree(v) >= 3)
    if diameter > 2 and i == 1 and t.degree(path[i + 1]) > 2:
        u = path[i + 1]
    else:
        u = path[i]
    on_path = set(path)
    moved = [w for w in t.neighbors(u) if w not in on_path]
    v0 = path[0]
    return t.with_edges(
        removed=[(u, w) for w in moved],
        added=[(v0, w) for w in moved],
    )


def _oriented_for_star_max(t: Graph, path: list[int]) -> list[int]:
    """Orientation with M(v_2)/deg(v_1) <= M(v_D-2)/deg(v_D-1).

    One of the two orientations always satisfies the inequality; on ties
    the path is kept as selected.
    """
    lo = Fraction(neighbor_degree_product(t, path[2]), t.degree(path[1]))
    hi = Fraction(neighbor_degree_product(t, path[-3]), t.degree(path[-2]))
    return path if lo <= hi else path[::-1]


def apply_star_max(t: Graph) -> Graph:
    """Move every pendant neighbor of v_1 (v_0 included) to v_{D-1}.

    Requires diameter >= 5.  The index strictly increases and no vertex
    eccentricity grows.
    """
    _require_tree(t)
    path = diametric_path_farthest_branch(t)
    if len(path) - 1 < 5:
        raise PreconditionError("star-max needs diameter >= 5")
    path = _oriented_for_star_max(t, path)
    v1, target = path[1], path[-2]
    pendants = [w for w in t.neighbors(v1) if t.degree(w) == 1]
    return t.with_edges(
        removed=[(v1, w) for w in pendants],
        added=[(target, w) for w in pendants],
    )


def _center_of_diameter4(t: Graph) -> int:
    profile = eccentricities(t)
    if profile.diameter != 4:
        raise PreconditionError("rule needs a tree of diameter 4")
    return profile.center[0]


def _sorted_center_neighbors(t: Graph, center: int) -> list[int]:
    return sorted(t.neighbors(center), key=lambda v: (t.degree(v), v))


def apply_balance(t: Graph) -> Graph:
    """Move one pendant from the largest to the smallest center-neighbor.

    Requires diameter 4, at least three non-leaf center-neighbors and a
    neighbor degree spread of at least 2.  The index strictly increases
    and eccentricities stay unchanged.
    """
    _require_tree(t)
    center = _center_of_diameter4(t)
    nbrs = _sorted_center_neighbors(t, center)
    if sum(1 for v in nbrs if t.degree(v) >= 2) < 3:
        raise PreconditionError("balance shift needs >= 3 non-leaf center-neighbors")
    low, high = nbrs[0], nbrs[-1]
    if t.degree(high) - t.degree(low) < 2:
        raise PreconditionError("balance shift needs neighbor degree spread >= 2")
    pendant = next(
        w for w in t.neighbors(high) if w != center and t.degree(w) == 1
    )
    return t.with_edges(removed=[(high, pendant)], added=[(low, pendant)])


def apply_deg_reduce_path(t: Graph) -> Graph:
    """Trade two pendants of the largest center-neighbor for a pendant path.

    Requires diameter 4, at least three non-leaf center-neighbors,
    neighbor degree spread <= 1 and largest neighbor degree >= 4.  Two
    pendants x, y of that neighbor become the chain center-x-y; the index
    strictly increases and the center degree grows by one.
    """
    _require_tree(t)
    center = _center_of_diameter4(t)
    nbrs = _sorted_center_neighbors(t, center)
    if sum(1 for v in nbrs if t.degree(v) >= 2) < 3:
        raise PreconditionError("degree reduction needs >= 3 non-leaf center-neighbors")
    low, high = nbrs[0], nbrs[-1]
    if t.degree(high) - t.degree(low) > 1:
        raise PreconditionError(
            "degree reduction needs neighbor degree spread <= 1 "
            "(unbalanced trees take the balance shift)"
        )
    if t.degree(high) < 4:
        raise PreconditionError("degree reduction needs a center-neighbor of degree >= 4")
    x, y = [
        w for w in t.neighbors(high) if w != center and t.degree(w) == 1
    ][:2]
    return t.with_edges(
        removed=[(high, x), (high, y)],
        added=[(center, x), (x, y)],
    )


def apply_p3_rebalance(t: Graph) -> Graph:
    """Shrink the center degree of a balanced tree with neighbor degree 3.

    Requires t to be the degree-balanced tree with p = 3 and central
    degree above ceil((n-1)/3), i.e. with at least three degree-2
    center-neighbors v_1, v_2, v_3.  The edges center-v_1 and v_1-w_1
    (w_1 the pendant of v_1) are replaced by v_2-v_1 and v_3-w_1.
    """
    _require_tree(t)
    center = _center_of_diameter4(t)
    nbrs = _sorted_center_neighbors(t, center)
    degrees = [t.degree(v) for v in nbrs]
    if not all(d in (2, 3) for d in degrees) or degrees[-1] != 3:
        raise PreconditionError(
            "p3 rebalance needs a degree-balanced tree with neighbor degrees 2 and 3"
        )
    two_sided = [v for v in nbrs if t.degree(v) == 2]
    if len(two_sided) < 3:
        raise PreconditionError(
            "p3 rebalance needs >= 3 degree-2 center-neighbors "
            "(tree already has minimal central degree)"
        )
    v1, v2, v3 = two_sided[:3]
    w1 = next(w for w in t.neighbors(v1) if w != center)
    return t.with_edges(
        removed=[(center, v1), (v1, w1)],
        added=[(v2, v1), (v3, w1)],
    )


def apply_pm_shift(t: Graph) -> Graph:
    """Move the degree-2 neighbors of v_2 (other than v_3) over to v_3.

    Requires a perfect matching and diameter >= 5.  The result keeps a
    perfect matching, the index strictly increases and the diameter does
    not increase.
    """
    _require_tree(t)
    if tree_perfect_matching(t) is None:
        raise PreconditionError("pm shift needs a tree with a perfect matching")
    path = diametric_path_farthest_branch(t)
    if len(path) - 1 < 5:
        raise PreconditionError("pm shift needs diameter >= 5")
    v2, v3 = path[2], path[3]
    moved = [w for w in t.neighbors(v2) if w != v3 and t.degree(w) == 2]
    out = t.with_edges(
        removed=[(v2, w) for w in moved],
        added=[(v3, w) for w in moved],
    )
    if tree_perfect_matching(out) is None:
        raise AssertionError("pm shift lost the perfect matching")
    return out


_RULES = {
    TransformRule.PATH_MIN: apply_path_min,
    TransformRule.STAR_MAX: apply_star_max,
    TransformRule.BALANCE_SHIFT: apply_balance,
    TransformRule.DEG_REDUCE_PATH: apply_deg_reduce_path,
    TransformRule.P3_REBALANCE: apply_p3_rebalance,
    TransformRule.PM_SHIFT: apply_pm_shift,
}


def apply_rule(t: Graph, rule: TransformRule) -> Graph:
    return _RULES[rule](t)


_INCREASING_PRIORITY = (
    TransformRule.STAR_MAX,
    TransformRule.BALANCE_SHIFT,
    TransformRule.DEG_REDUCE_PATH,
    TransformRule.P3_REBALANCE,
)


def _next_rule(t: Graph, direction: Direction) -> TransformRule | None:
    if direction is Direction.DECREASING:
        return None if is_path_graph(t) else TransformRule.PATH_MIN
    if direction is Direction.PM_INCREASING:
        diameter = eccentricities(t).diameter
        return TransformRule.PM_SHIFT if diameter >= 5 else None
    for rule in _INCREASING_PRIORITY:
        try:
            _RULES[rule](t)
        except PreconditionError:
            continue
        return rule
    return None


def reduce_tree(t: Graph, direction: Direction) -> TreeTrace:
    """Iterate the rules of one direction until none applies.

    Decreasing traces end at the path; pm-increasing traces (which require
    a perfect matching) end at the unique diameter-4 matched tree;
    increasing traces end at a star or a degree-balanced fixed point.
    The recorded index values are checked to be strictly monotone.
    """
    _require_tree(t)
    if direction is Direction.PM_INCREASING and tree_perfect_matching(t) is None:
        raise PreconditionError("pm-increasing reduction needs a perfect matching")
    steps: list[TraceStep] = []
    current = t
    value = index_value(current)
    start_value = value
    limit = max(16, t.n**3)  # safety net; strict monotonicity forces termination
    for _ in range(limit):
        rule = _next_rule(current, direction)
        if rule is None:
            break
        current = _RULES[rule](current)
        new_value = index_value(current)
        if direction is Direction.DECREASING:
            if not new_value < value:
                raise AssertionError(f"{rule.value} failed to decrease the index")
        elif not new_value > value:
            raise AssertionError(f"{rule.value} failed to increase the index")
        steps.append(TraceStep(graph=current, value=new_value, rule=rule))
        value = new_value
    else:
        raise AssertionError("reduction did not terminate within the step limit")
    return TreeTrace(
        start=t, start_value=start_value, direction=direction, steps=tuple(steps)
    )
