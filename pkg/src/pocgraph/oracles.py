"""Exact oracles: every coloring/path quantity computed by independent
exhaustive or branch-and-bound search.

These are the ground truth the rest of the package is checked against.
``chi_poc_exact`` (backtracking over colorings) and ``ell_prime_exact``
(enumeration of good acyclic orientations) are deliberately implemented as
two unrelated searches so that their agreement is a meaningful
cross-validation.

Every search respects a cap from :class:`OracleCaps`; exceeding a cap raises
:class:`CapExceeded` instead of silently approximating.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, fields
from functools import lru_cache
from typing import Iterator

from .graph_core import Coloring, Graph, Orientation, WeightedGraph, normalize_weights
from .poc_engine import _dag_longest_path


@dataclass(frozen=True)
class OracleCaps:
    """Search-size limits. Values are instance counts / vertex counts, not timeouts."""

    longest_path_n: int = 20
    chi_poc_n: int = 12
    ell_prime_intra_edges: int = 24
    f_n: int = 8
    chi_poc_t_n: int = 8
    enum_pocs_n: int = 10
    mocs_product: int = 1_000_000
    h_weightings: int = 1_000_000


DEFAULT_CAPS = OracleCaps()

_CAP_NAMES = tuple(f.name for f in fields(OracleCaps))


class CapExceeded(RuntimeError):
    """An oracle was asked for a search larger than its configured cap."""

    def __init__(self, cap: str, limit: int, actual: int):
        self.cap = cap
        self.limit = limit
        self.actual = actual
        super().__init__(f"cap {cap}={limit} exceeded (instance needs {actual})")


def caps_with_overrides(spec: str, base: OracleCaps = DEFAULT_CAPS) -> OracleCaps:
    """Apply 'name=value,name=value' overrides (the POC_CAPS syntax) to a cap set."""
    values = {f.name: getattr(base, f.name) for f in fields(OracleCaps)}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        if not sep or name not in _CAP_NAMES:
            raise ValueError(f"unknown cap override {item!r} (known: {', '.join(_CAP_NAMES)})")
        values[name] = int(value)
    return OracleCaps(**values)


# ---------------------------------------------------------------------------
# Weak orderings (ordered set partitions) - the canonical weight functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeakOrdering:
    """Ordered partition of 1..n into nonempty blocks; block index = weight."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for blk in self.blocks:
            if not blk:
                raise ValueError("empty block in weak ordering")
            seen.update(blk)
        n = sum(len(b) for b in self.blocks)
        if seen != set(range(1, n + 1)):
            raise ValueError("blocks must partition 1..n")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def weights(self) -> tuple[int, ...]:
        w = [0] * self.n
        for value, blk in enumerate(self.blocks, start=1):
            for v in blk:
                w[v - 1] = value
        return tuple(w)


def _ordered_partitions(
    items: tuple[int, ...], max_blocks: int | None
) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not items:
        yield ()
        return
    if max_blocks is not None and max_blocks <= 0:
        return
    rest_max = None if max_blocks is None else max_blocks - 1
    # blocks are position-distinguishable, so the first block is any nonempty subset
    for size in range(1, len(items) + 1):
        for block in itertools.combinations(items, size):
            chosen = set(block)
            rest = tuple(x for x in items if x not in chosen)
            for others in _ordered_partitions(rest, rest_max):
                yield (block,) + others


def weak_orderings(n: int, max_blocks: int | None = None) -> Iterator[WeakOrdering]:
    """All ordered set partitions of 1..n (optionally with at most max_blocks blocks)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for blocks in _ordered_partitions(tuple(range(1, n + 1)), max_blocks):
        yield WeakOrdering(blocks)


# ---------------------------------------------------------------------------
# Chromatic number (branch and bound)
# ---------------------------------------------------------------------------


def _greedy_clique(g: Graph) -> list[int]:
    order = sorted(range(1, g.n + 1), key=lambda v: (-g.degree(v), v))
    clique: list[int] = []
    for v in order:
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def _dsatur_coloring(g: Graph) -> list[int]:
    """Greedy upper bound; returns colors indexed by vertex id (index 0 unused)."""
    colors = [0] * (g.n + 1)
    saturation: list[set[int]] = [set() for _ in range(g.n + 1)]
    uncolored = set(range(1, g.n + 1))
    while uncolored:
        v = max(uncolored, key=lambda u: (len(saturation[u]), g.degree(u), -u))
        c = 1
        while c in saturation[v]:
            c += 1
        colors[v] = c
        for u in g.neighbors(v):
            saturation[u].add(c)
        uncolored.remove(v)
    return colors


def _k_coloring(g: Graph, k: int) -> list[int] | None:
    """Proper coloring with at most k colors via backtracking, or None."""
    order = sorted(range(1, g.n + 1), key=lambda v: (-g.degree(v), v))
    colors = [0] * (g.n + 1)

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[u] for u in g.neighbors(v) if colors[u]}
        for c in range(1, min(k, used + 1) + 1):  # first use of color c: c = used+1
            if c in taken:
                continue
            colors[v] = c
            if assign(i + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    return colors if assign(0, 0) else None


def proper_coloring_exact(g: Graph) -> Coloring:
    """An optimal proper coloring (palette = chromatic number)."""
    if g.n == 0:
        return Coloring((), 0)
    lower = len(_greedy_clique(g))
    greedy = _dsatur_coloring(g)
    upper = max(greedy[1:])
    for k in range(lower, upper):
        result = _k_coloring(g, k)
        if result is not None:
            return Coloring(tuple(result[1:]), k)
    return Coloring(tuple(greedy[1:]), upper)


def chromatic_number(g: Graph) -> int:
    return proper_coloring_exact(g).palette


# ---------------------------------------------------------------------------
# Longest paths
# ---------------------------------------------------------------------------


def longest_path_exact(g: Graph, caps: OracleCaps = DEFAULT_CAPS) -> int:
    """Number of vertices of a longest simple path, by subset dynamic programming.

    State: dp[mask] = bitmask of endpoints v such that some simple path visits
    exactly the vertices of mask and ends at v.
    """
    if g.n > caps.longest_path_n:
        raise CapExceeded("longest_path_n", caps.longest_path_n, g.n)
    n = g.n
    if n == 0:
        return 0
    adj = [0] * n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    dp = [0] * (1 << n)
    for v in range(n):
        dp[1 << v] = 1 << v
    best = 1
    for mask in range(1, 1 << n):
        ends = dp[mask]
        if not ends:
            continue
        size = mask.bit_count()
        if size > best:
            best = size
        while ends:
            vbit = ends & -ends
            ends ^= vbit
            ext = adj[vbit.bit_length() - 1] & ~mask
            while ext:
                ubit = ext & -ext
                ext ^= ubit
                dp[mask | ubit] |= ubit
    return best


def longest_path_witness(g: Graph, caps: OracleCaps = DEFAULT_CAPS) -> tuple[int, ...]:
    """An actual longest simple path, reconstructed from the subset DP."""
    if g.n > caps.longest_path_n:
        raise CapExceeded("longest_path_n", caps.longest_path_n, g.n)
    n = g.n
    if n == 0:
        return ()
    adj = [0] * n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    dp = [0] * (1 << n)
    for v in range(n):
        dp[1 << v] = 1 << v
    best_mask, best_end = 1, 0
    for mask in range(1, 1 << n):
        ends = dp[mask]
        if not ends:
            continue
        if mask.bit_count() > best_mask.bit_count():
            best_mask, best_end = mask, (ends & -ends).bit_length() - 1
        scan = ends
        while scan:
            vbit = scan & -scan
            scan ^= vbit
            ext = adj[vbit.bit_length() - 1] & ~mask
            while ext:
                ubit = ext & -ext
                ext ^= ubit
                dp[mask | ubit] |= ubit
    path = [best_end]
    mask = best_mask
    while mask.bit_count() > 1:
        rest = mask ^ (1 << path[-1])
        prev = dp[rest] & adj[path[-1]]
        assert prev, "DP state has no predecessor"
        path.append((prev & -prev).bit_length() - 1)
        mask = rest
    return tuple(v + 1 for v in reversed(path))


def has_hamiltonian_path(g: Graph) -> bool:
    """Direct depth-first search for a Hamiltonian path (independent of
    longest_path_exact, which uses subset DP)."""
    n = g.n
    if n <= 1:
        return True
    if g.m < n - 1:
        return False
    adj = g.adjacency
    visited = set()

    def extend(v: int) -> bool:
        if len(visited) == n:
            return True
        for u in sorted(adj[v] - visited):
            visited.add(u)
            if extend(u):
                return True
            visited.remove(u)
        return False

    for start in range(1, n + 1):
        visited = {start}
        if extend(start):
            return True
    return False


# ---------------------------------------------------------------------------
# chi_POC by backtracking
# ---------------------------------------------------------------------------


def _increasing_chain_bounds(g: WeightedGraph) -> tuple[list[int], list[int]]:
    """Per-vertex longest strictly-weight-increasing path ending at / starting
    at each vertex (counting the vertex itself). Colors must strictly increase
    along such paths, which yields hard per-vertex color bounds."""
    n = g.n
    w = g.weights
    adj = g.graph.adjacency
    by_weight = sorted(range(1, n + 1), key=lambda v: w[v - 1])
    ending = [1] * (n + 1)
    for v in by_weight:
        for u in adj[v]:
            if w[u - 1] < w[v - 1] and ending[u] + 1 > ending[v]:
                ending[v] = ending[u] + 1
    starting = [1] * (n + 1)
    for v in reversed(by_weight):
        for u in adj[v]:
            if w[u - 1] > w[v - 1] and starting[u] + 1 > starting[v]:
                starting[v] = starting[u] + 1
    return ending, starting


def chi_poc_exact(
    g: WeightedGraph, caps: OracleCaps = DEFAULT_CAPS
) -> tuple[int, Coloring]:
    """Minimum POC palette size plus a witness coloring.

    Tries palette sizes upward from a lower bound (longest forced increasing
    chain, clique size), backtracking over color assignments in non-decreasing
    weight order with per-vertex color windows from the chain bounds.
    """
    if g.n > caps.chi_poc_n:
        raise CapExceeded("chi_poc_n", caps.chi_poc_n, g.n)
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    gn = normalize_weights(g)
    n = gn.n
    w = gn.weights
    adj = gn.graph.adjacency
    order = sorted(range(1, n + 1), key=lambda v: (w[v - 1], -gn.graph.degree(v), v))
    ending, starting = _increasing_chain_bounds(gn)
    lower = max(max(ending[1:]), len(_greedy_clique(gn.graph)))

    colors = [0] * (n + 1)

    def assign(i: int, theta: int) -> bool:
        if i == n:
            return True
        v = order[i]
        lo = ending[v]
        hi = theta - starting[v] + 1
        taken = set()
        for u in adj[v]:
            cu = colors[u]
            if not cu:
                continue
            if w[u - 1] < w[v - 1]:
                if cu >= lo:
                    lo = cu + 1
            else:  # equal weight: heavier neighbors are never colored yet
                taken.add(cu)
        for c in range(lo, hi + 1):
            if c in taken:
                continue
            colors[v] = c
            if assign(i + 1, theta):
                return True
        colors[v] = 0
        return False

    for theta in range(lower, n + 1):
        if assign(0, theta):
            return theta, Coloring(tuple(colors[1:]), theta)
    raise AssertionError("ranking the vertices by weight is always a POC with n colors")


# ---------------------------------------------------------------------------
# ell' by enumeration of good acyclic orientations
# ---------------------------------------------------------------------------


def _acyclic_class_orientations(
    members: list[int], intra: list[tuple[int, int]]
) -> list[tuple[tuple[int, int], ...]]:
    """All acyclic orientations of one equal-weight class subgraph."""
    if not intra:
        return [()]
    if 2 ** len(intra) <= math.factorial(len(members)):
        found: list[tuple[tuple[int, int], ...]] = []
        for bits in range(1 << len(intra)):
            arcs = tuple(
                (u, v) if not bits >> i & 1 else (v, u)
                for i, (u, v) in enumerate(intra)
            )
            if _class_is_acyclic(members, arcs):
                found.append(arcs)
        return found
    # dense class: every acyclic orientation is induced by some linear order
    seen: set[tuple[tuple[int, int], ...]] = set()
    for perm in itertools.permutations(members):
        pos = {v: i for i, v in enumerate(perm)}
        arcs = tuple((u, v) if pos[u] < pos[v] else (v, u) for u, v in intra)
        seen.add(arcs)
    return sorted(seen)


def _class_is_acyclic(members: list[int], arcs: tuple[tuple[int, int], ...]) -> bool:
    out: dict[int, list[int]] = {v: [] for v in members}
    indeg = {v: 0 for v in members}
    for t, h in arcs:
        out[t].append(h)
        indeg[h] += 1
    queue = [v for v in members if indeg[v] == 0]
    done = 0
    while queue:
        v = queue.pop()
        done += 1
        for u in out[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                queue.append(u)
    return done == len(members)


def ell_prime_orientation(
    g: WeightedGraph, caps: OracleCaps = DEFAULT_CAPS
) -> tuple[int, Orientation]:
    """Minimum over good acyclic orientations of the longest directed path,
    with a witness orientation.

    Arcs between different weights are forced heavier -> lighter; equal-weight
    edges range over all orientations whose restriction to each weight class
    is acyclic (a good orientation can only have directed cycles inside one
    class, so this is exactly the good acyclic family).
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    gn = normalize_weights(g)
    n = gn.n
    w = gn.weights
    forced: list[tuple[int, int]] = []
    intra_by_class: dict[int, list[tuple[int, int]]] = {}
    for u, v in gn.graph.sorted_edges():
        if w[u - 1] > w[v - 1]:
            forced.append((u, v))
        elif w[v - 1] > w[u - 1]:
            forced.append((v, u))
        else:
            intra_by_class.setdefault(w[u - 1], []).append((u, v))
    total_intra = sum(len(e) for e in intra_by_class.values())
    if total_intra > caps.ell_prime_intra_edges:
        raise CapExceeded("ell_prime_intra_edges", caps.ell_prime_intra_edges, total_intra)

    floor = _dag_longest_path(n, set(forced))  # forced arcs appear in every candidate
    options = []
    for _, intra in sorted(intra_by_class.items()):
        members = sorted({x for e in intra for x in e})
        options.append(_acyclic_class_orientations(members, intra))

    best: int | None = None
    best_arcs: tuple[tuple[int, int], ...] = ()
    for combo in itertools.product(*options):
        arcs = set(forced)
        for group in combo:
            arcs.update(group)
        value = _dag_longest_path(n, arcs)
        if best is None or value < best:
            best = value
            best_arcs = tuple(sorted(arcs))
            if best == floor:
                break
    assert best is not None
    return best, Orientation(gn.graph, frozenset(best_arcs))


def ell_prime_exact(g: WeightedGraph, caps: OracleCaps = DEFAULT_CAPS) -> int:
    return ell_prime_orientation(g, caps)[0]


# ---------------------------------------------------------------------------
# Aggregates over weight functions
# ---------------------------------------------------------------------------


def _worst_weighting(
    g: Graph, orderings, caps: OracleCaps
) -> tuple[int, tuple[int, ...]]:
    best = 0
    best_weights: tuple[int, ...] = ()
    for wo in orderings:
        weights = wo.weights()
        value, _ = chi_poc_exact(WeightedGraph(g, weights), caps)
        if value > best:
            best, best_weights = value, weights
            if best == g.n:  # the trivial ceiling: no weighting needs more
                break
    return best, best_weights


def f_argmax(g: Graph, caps: OracleCaps = DEFAULT_CAPS) -> tuple[int, tuple[int, ...]]:
    """Worst-case POC palette over all weight functions, plus a weighting
    attaining it.

    By rank normalization it suffices to range over weak orderings of the
    vertex set.
    """
    if g.n > caps.f_n:
        raise CapExceeded("f_n", caps.f_n, g.n)
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    return _worst_weighting(g, weak_orderings(g.n), caps)


def f_exact(g: Graph, caps: OracleCaps = DEFAULT_CAPS) -> int:
    return f_argmax(g, caps)[0]


def chi_poc_t_argmax(
    g: Graph,
    t: int,
    caps: OracleCaps = DEFAULT_CAPS,
    surjective_only: bool = False,
) -> tuple[int, tuple[int, ...]]:
    """Worst-case POC palette over weightings with at most t distinct values,
    plus a weighting attaining it.

    With surjective_only=True the weighting must use exactly t values
    (requires t <= n); the default reading allows fewer, which is what makes
    the quantity monotone in t.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if g.n > caps.chi_poc_t_n:
        raise CapExceeded("chi_poc_t_n", caps.chi_poc_t_n, g.n)
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if surjective_only and t > g.n:
        raise ValueError(f"no surjective weighting with {t} values on {g.n} vertices")
    orderings = weak_orderings(g.n, max_blocks=min(t, g.n))
    if surjective_only:
        orderings = (wo for wo in orderings if len(wo.blocks) == t)
    return _worst_weighting(g, orderings, caps)


def chi_poc_t(
    g: Graph,
    t: int,
    caps: OracleCaps = DEFAULT_CAPS,
    surjective_only: bool = False,
) -> int:
    return chi_poc_t_argmax(g, t, caps, surjective_only)[0]


# ---------------------------------------------------------------------------
# POC enumeration at a fixed palette
# ---------------------------------------------------------------------------


def iter_pocs(
    g: WeightedGraph, theta: int, caps: OracleCaps = DEFAULT_CAPS
) -> Iterator[Coloring]:
    """All valid POCs c: V -> {1..theta}, counted as functions, in
    lexicographic order of the color tuple."""
    if g.n > caps.enum_pocs_n:
        raise CapExceeded("enum_pocs_n", caps.enum_pocs_n, g.n)
    if not (1 <= theta <= g.n):
        raise ValueError(f"theta must be in 1..{g.n}, got {theta}")
    n = g.n
    w = g.weights
    adj = g.graph.adjacency
    colors = [0] * (n + 1)

    def assign(v: int) -> Iterator[Coloring]:
        if v > n:
            yield Coloring(tuple(colors[1:]), theta)
            return
        for c in range(1, theta + 1):
            ok = True
            for u in adj[v]:
                cu = colors[u]
                if not cu:
                    continue
                if w[u - 1] > w[v - 1]:
                    ok = cu > c
                elif w[u - 1] < w[v - 1]:
                    ok = cu < c
                else:
                    ok = cu != c
                if not ok:
                    break
            if ok:
                colors[v] = c
                yield from assign(v + 1)
                colors[v] = 0

    return assign(1)


def enumerate_pocs(g: WeightedGraph, theta: int, caps: OracleCaps = DEFAULT_CAPS) -> int:
    """Number of valid POCs using colors from {1..theta} (palette fixed)."""
    return sum(1 for _ in iter_pocs(g, theta, caps))


# ---------------------------------------------------------------------------
# Exhaustive small-graph families
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _canonical_masks(n: int) -> tuple[int, ...]:
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        table = tuple(
            index[(perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])]
            for u, v in pairs
        )
        tables.append(table)
    tables = tables[1:]  # drop the identity
    masks = []
    for mask in range(1 << len(pairs)):
        bits = []
        m = mask
        while m:
            bits.append((m & -m).bit_length() - 1)
            m &= m - 1
        minimal = True
        for table in tables:
            img = 0
            for b in bits:
                img |= 1 << table[b]
            if img < mask:
                minimal = False
                break
        if minimal:
            masks.append(mask)
    return tuple(masks)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All graphs on n vertices, one labeled representative per isomorphism
    class (the representative with the lexicographically least edge mask).

    Exhaustive over all 2^(n(n-1)/2) edge sets, so desk scale only (n <= 7).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in _canonical_masks(n):
        edges = frozenset(
            (u + 1, v + 1) for i, (u, v) in enumerate(pairs) if mask >> i & 1
        )
        yield Graph(n, edges)
