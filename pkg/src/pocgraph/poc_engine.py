"""Properly ordered coloring: validity checking, greedy constructions, and the
orientation <-> coloring correspondences.

A coloring c of a weighted graph is a POC when, across every edge uv:

* w(u) > w(v) implies c(u) > c(v), and
* w(u) = w(v) implies c(u) != c(v).

An acyclic orientation is *good* when every arc runs from a weakly heavier
tail to a weakly lighter head. Good acyclic orientations and POCs translate
into each other with the longest directed path bounding the palette.
"""

from __future__ import annotations

import graphlib

from .graph_core import (
    Coloring,
    Orientation,
    WeightedGraph,
    induced_subgraph,
    normalize_weights,
)


def first_violation(g: WeightedGraph, c: Coloring) -> tuple[int, int] | None:
    """First edge (in sorted order) breaking the POC conditions, or None."""
    if len(c.colors) != g.n:
        raise ValueError(f"coloring has {len(c.colors)} entries, graph has {g.n}")
    for u, v in g.graph.sorted_edges():
        wu, wv = g.weight(u), g.weight(v)
        cu, cv = c.color(u), c.color(v)
        if wu > wv and not cu > cv:
            return (u, v)
        if wv > wu and not cv > cu:
            return (u, v)
        if wu == wv and cu == cv:
            return (u, v)
    return None


def is_valid_poc(g: WeightedGraph, c: Coloring) -> bool:
    return first_violation(g, c) is None


def _weight_order(g: WeightedGraph) -> list[int]:
    """Vertices in non-decreasing weight order, equal weights by ascending id."""
    return sorted(range(1, g.n + 1), key=lambda v: (g.weight(v), v))


def greedy_poc(g: WeightedGraph) -> Coloring:
    """Weight-ordered greedy coloring (CLI algo ``f``).

    Processes vertices by non-decreasing weight (ties by ascending id); each
    vertex gets one more than the largest color among its already-processed
    neighbors, or color 1 if there are none. Always yields a valid POC, and
    never uses more colors than the order of a longest path in the graph.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    colors = [0] * (g.n + 1)
    for v in _weight_order(g):
        prev = [colors[u] for u in g.graph.neighbors(v) if colors[u]]
        colors[v] = max(prev) + 1 if prev else 1
    body = tuple(colors[1:])
    return Coloring(body, max(body))


def layered_stack_coloring(g: WeightedGraph) -> Coloring:
    """Stacked per-weight-class coloring.

    Weights are rank-normalized to 1..t; each class subgraph gets an optimal
    proper coloring, and the color blocks are stacked in weight order so the
    result is a POC with at most t * chi(G) colors.
    """
    from . import oracles  # local import: oracles depends on this module

    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    g = normalize_weights(g)
    colors = [0] * (g.n + 1)
    offset = 0
    for value in range(1, max(g.weights) + 1):
        members = [v for v in range(1, g.n + 1) if g.weight(v) == value]
        sub, idmap = induced_subgraph(g.graph, members)
        sub_coloring = oracles.proper_coloring_exact(sub)
        for v in members:
            colors[v] = offset + sub_coloring.color(idmap[v])
        offset += sub_coloring.palette
    body = tuple(colors[1:])
    return Coloring(body, offset)


def build_good_orientation(g: WeightedGraph) -> Orientation:
    """Canonical good acyclic orientation: heavier -> lighter across weights,
    lower id -> higher id inside a weight class."""
    arcs = set()
    for u, v in g.graph.edges:  # u < v by normalization
        wu, wv = g.weight(u), g.weight(v)
        if wu > wv:
            arcs.add((u, v))
        elif wv > wu:
            arcs.add((v, u))
        else:
            arcs.add((u, v))
    return Orientation(g.graph, frozenset(arcs))


def is_good_acyclic(g: WeightedGraph, d: Orientation) -> bool:
    """True iff d has no directed cycle and w(tail) >= w(head) on every arc."""
    if d.graph != g.graph:
        raise ValueError("orientation does not match the graph")
    if any(g.weight(t) < g.weight(h) for t, h in d.arcs):
        return False
    ts = graphlib.TopologicalSorter({v: [] for v in range(1, g.n + 1)})
    for t, h in d.arcs:
        ts.add(h, t)
    try:
        ts.prepare()
    except graphlib.CycleError:
        return False
    return True


def _dag_longest_path(n: int, arcs: frozenset[tuple[int, int]] | set[tuple[int, int]]) -> int:
    """Vertices on a longest directed path, by DP over a topological order."""
    ts = graphlib.TopologicalSorter({v: [] for v in range(1, n + 1)})
    preds: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for t, h in arcs:
        ts.add(h, t)
        preds[h].append(t)
    order = list(ts.static_order())  # raises graphlib.CycleError on a cycle
    depth = {v: 1 for v in range(1, n + 1)}
    for v in order:
        for p in preds[v]:
            if depth[p] + 1 > depth[v]:
                depth[v] = depth[p] + 1
    return max(depth.values()) if depth else 0


def dag_longest_path(d: Orientation) -> int:
    """Number of vertices of a longest directed path in an acyclic orientation.

    Raises graphlib.CycleError when the orientation contains a directed cycle.
    """
    return _dag_longest_path(d.graph.n, d.arcs)


def greedy_poc_from_orientation(g: WeightedGraph, d: Orientation) -> Coloring:
    """Greedy coloring along a good acyclic orientation (CLI algo ``fprime``).

    Vertices are processed by non-decreasing weight; inside a weight class the
    order follows the class-restricted arcs (heads before tails) so that every
    out-neighbor is colored first. Each vertex gets one more than the largest
    color among its processed out-neighbors, or 1 if it has none. The palette
    never exceeds the longest directed path of d.

    Raises ValueError when d is not a good acyclic orientation of g.
    """
    if not is_good_acyclic(g, d):
        raise ValueError("orientation is not good acyclic for this weighting")
    order: list[int] = []
    for value in sorted(set(g.weights)):
        members = [v for v in range(1, g.n + 1) if g.weight(v) == value]
        member_set = set(members)
        # heads before tails inside the class, smallest id first among ready ones
        ts = graphlib.TopologicalSorter({v: [] for v in members})
        for t, h in d.arcs:
            if t in member_set and h in member_set:
                ts.add(t, h)
        ts.prepare()
        while ts.is_active():
            ready = sorted(ts.get_ready())
            order.extend(ready)
            ts.done(*ready)
    colors = [0] * (g.n + 1)
    for v in order:
        prev = [colors[u] for u in d.out_neighbors[v] if colors[u]]
        colors[v] = max(prev) + 1 if prev else 1
    body = tuple(colors[1:])
    return Coloring(body, max(body))


def orientation_from_coloring(g: WeightedGraph, c: Coloring) -> Orientation:
    """Orient every edge from the larger color to the smaller one.

    Requires c to be a valid POC; the result is good and acyclic, and its
    longest directed path has at most c.palette vertices.
    """
    violation = first_violation(g, c)
    if violation is not None:
        raise ValueError(f"coloring is not a valid POC (edge {violation})")
    arcs = set()
    for u, v in g.graph.edges:
        if c.color(u) > c.color(v):
            arcs.add((u, v))
        else:  # colors differ on every edge of a POC
            arcs.add((v, u))
    return Orientation(g.graph, frozenset(arcs))
