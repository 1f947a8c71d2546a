"""Subhypergraph embedding search and guaranteed embedding procedures.

``embed`` is an exhaustive backtracking search over injective vertex
maps; ``greedy_tree_embed`` and ``expansion_embed`` are the two
non-backtracking procedures whose preconditions guarantee success.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .core import (
    Edge,
    Hypergraph,
    _kernel_petals,
    _pack_disjoint,
    kernel_degree,
    min_shadow_degree,
)
from .trees import TreeCertificate, _is_tight, verify_certificate

FOUND = "found"
NONE = "none"
BUDGET = "budget"


class BudgetExceeded(RuntimeError):
    """Raised by operations whose node budget ran out mid-search."""


@dataclass(frozen=True)
class EmbedResult:
    status: str
    map: Optional[dict[int, int]]
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} nodes exhausted")


def _verify_map(
    h_edges: Sequence[frozenset[int]],
    f_set: set[frozenset[int]],
    amap: Mapping[int, int],
) -> None:
    values = list(amap.values())
    assert len(values) == len(set(values)), "embedding map must be injective"
    for e in h_edges:
        assert frozenset(amap[v] for v in e) in f_set, "edge image missing from host"


def _is_uniform_matching(h_edges: Sequence[frozenset[int]]) -> bool:
    sizes = {len(e) for e in h_edges}
    if len(sizes) != 1:
        return False
    total = len({v for e in h_edges for v in e})
    return total == next(iter(sizes)) * len(h_edges)


def _backtrack_embed(
    h_edges: list[frozenset[int]],
    f_edges: list[frozenset[int]],
    initial: Optional[dict[int, int]],
    budget: _Budget,
) -> Optional[dict[int, int]]:
    """Exhaustive injective-map search; None only after exhausting it.

    The next variable is the unassigned vertex lying in the most-mapped
    edge, ties broken by descending degree then id; candidate targets
    ascend.  Pruning: every pattern edge must keep some host edge that
    contains its mapped part and avoids all other used targets.
    """
    if not h_edges:
        return dict(initial or {})
    f_set = set(f_edges)
    h_support = sorted({v for e in h_edges for v in e})
    if not {len(e) for e in h_edges} <= {len(e) for e in f_edges}:
        return None
    deg_h = {v: sum(1 for e in h_edges if v in e) for v in h_support}
    f_support = sorted({v for e in f_edges for v in e})
    deg_f = {v: sum(1 for e in f_edges if v in e) for v in f_support}
    edges_of = {v: [i for i, e in enumerate(h_edges) if v in e] for v in h_support}

    assignment: dict[int, int] = dict(initial or {})
    assert set(assignment) <= set(h_support), "initial map must live on the pattern"
    used: set[int] = set(assignment.values())
    if len(used) != len(assignment):
        return None

    def edge_feasible(idx: int) -> bool:
        e = h_edges[idx]
        mapped = frozenset(assignment[v] for v in e if v in assignment)
        if len(mapped) == len(e):
            return mapped in f_set
        blocked = used - mapped
        return any(mapped <= fe and not (fe - mapped) & blocked for fe in f_edges)

    def all_feasible() -> bool:
        return all(edge_feasible(i) for i in range(len(h_edges)))

    if not all_feasible():
        return None

    def pick_next() -> int:
        best_v, best_key = -1, None
        for v in h_support:
            if v in assignment:
                continue
            most_mapped = max(
                sum(1 for u in h_edges[i] if u in assignment) for i in edges_of[v]
            )
            key = (-most_mapped, -deg_h[v], v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        return best_v

    def candidates(v: int) -> list[int]:
        idx = max(
            edges_of[v], key=lambda i: sum(1 for u in h_edges[i] if u in assignment)
        )
        e = h_edges[idx]
        mapped = frozenset(assignment[u] for u in e if u in assignment)
        if not mapped:
            pool = set(f_support)
        else:
            blocked = used - mapped
            pool = set()
            for fe in f_edges:
                if mapped <= fe and not (fe - mapped) & blocked:
                    pool |= fe - mapped
        return sorted(w for w in pool if w not in used and deg_f.get(w, 0) >= deg_h[v])

    def dfs() -> Optional[dict[int, int]]:
        if len(assignment) == len(h_support):
            return dict(assignment)
        v = pick_next()
        for target in candidates(v):
            budget.tick()
            assignment[v] = target
            used.add(target)
            if all_feasible():
                found = dfs()
                if found is not None:
                    return found
            del assignment[v]
            used.discard(target)
        return None

    return dfs()


def embed(pattern: Hypergraph, host: Hypergraph, budget: Optional[int] = None) -> EmbedResult:
    """Search for an injective vertex map sending every edge to a host edge.

    Budget exhaustion is its own result status, never conflated with a
    completed negative search.  Patterns that are uniform matchings run
    through a direct disjoint-edge packing.
    """
    h_edges = list(dict.fromkeys(pattern.edge_sets))
    f_edges = list(dict.fromkeys(host.edge_sets))
    tracker = _Budget(budget)

    if h_edges and _is_uniform_matching(h_edges):
        r = len(h_edges[0])
        pool = [fe for fe in f_edges if len(fe) == r]
        size, picked = _pack_disjoint(pool, len(h_edges))
        if size < len(h_edges):
            return EmbedResult(NONE, None, tracker.nodes)
        amap: dict[int, int] = {}
        for he, idx in zip(h_edges, picked):
            for a, b in zip(sorted(he), sorted(pool[idx])):
                amap[a] = b
        _verify_map(h_edges, set(f_edges), amap)
        return EmbedResult(FOUND, amap, tracker.nodes)

    try:
        amap = _backtrack_embed(h_edges, f_edges, None, tracker)
    except BudgetExceeded:
        return EmbedResult(BUDGET, None, tracker.nodes)
    if amap is None:
        return EmbedResult(NONE, None, tracker.nodes)
    _verify_map(h_edges, set(f_edges), amap)
    return EmbedResult(FOUND, amap, tracker.nodes)


def is_free(host: Hypergraph, pattern: Hypergraph) -> bool:
    """True when an exhaustive search finds no copy of ``pattern``."""
    return embed(pattern, host).status == NONE


def contains_anchored(
    pattern: Hypergraph,
    family: Sequence[frozenset[int]],
    anchor: frozenset[int],
    budget: Optional[int] = None,
) -> bool:
    """Does ``family + anchor`` contain the pattern with an edge on ``anchor``?

    Any new copy created by adding one edge must use that edge, so this
    is the incremental forbidden-subgraph check.  A budget, when given,
    raises BudgetExceeded instead of returning a wrong answer.
    """
    h_edges = list(dict.fromkeys(pattern.edge_sets))
    if not h_edges:
        return True
    tracker = _Budget(budget)

    if _is_uniform_matching(h_edges):
        r = len(h_edges[0])
        if len(anchor) != r:
            return False
        pool = [fe for fe in family if len(fe) == r and not fe & anchor]
        size, _ = _pack_disjoint(pool, len(h_edges) - 1)
        return size >= len(h_edges) - 1

    f_edges = list(dict.fromkeys(family)) + [anchor]
    anchor_list = sorted(anchor)
    for root in h_edges:
        if len(root) != len(anchor):
            continue
        root_list = sorted(root)
        for image in itertools.permutations(anchor_list):
            tracker.tick()
            found = _backtrack_embed(
                h_edges, f_edges, dict(zip(root_list, image)), tracker
            )
            if found is not None:
                return True
    return False


# -- guaranteed procedures ---------------------------------------------------


def greedy_tree_embed(
    tree: Hypergraph,
    cert: TreeCertificate,
    host: Hypergraph,
    start_map: Mapping[int, int],
) -> dict[int, int]:
    """Extend a first-edge placement along a tight ordering, no backtracking.

    Requires the host's minimum (r-1)-shadow degree to reach the tree's
    vertex count minus r-1; under that bound an eligible extension vertex
    always exists and the smallest one is taken.
    """
    r = tree.require_uniform()
    if r < 2 or host.uniform_r != r:
        raise ValueError("host and tree must share the same uniformity (r >= 2)")
    ok, _ = verify_certificate(tree, cert)
    if not ok:
        raise ValueError("invalid tree certificate")
    if not _is_tight(tree, cert.order, cert.parent):
        raise ValueError("greedy embedding requires a tight certificate")
    size = len(tree.support())
    if host.m == 0 or min_shadow_degree(host, r - 1) < size - r + 1:
        raise ValueError("host shadow degree too small for guaranteed embedding")
    sets = tree.edge_sets
    first = sets[cert.order[0]]
    amap = dict(start_map)
    if set(amap) != set(first):
        raise ValueError("starting map must cover exactly the first edge")
    if len(set(amap.values())) != len(amap):
        raise ValueError("starting map must be injective")
    f_set = set(host.edge_sets)
    if frozenset(amap.values()) not in f_set:
        raise ValueError("starting map must send the first edge onto a host edge")
    used = set(amap.values())
    seen = set(first)
    for i in range(1, tree.m):
        e = sets[cert.order[i]]
        fresh = e - seen
        assert len(fresh) == 1, "tight ordering adds one vertex per edge"
        u = next(iter(fresh))
        overlap_img = frozenset(amap[v] for v in e - fresh)
        extension = min(
            (
                next(iter(fe - overlap_img))
                for fe in host.edge_sets
                if overlap_img <= fe and not (fe - overlap_img) & used
            ),
            default=None,
        )
        assert extension is not None, "degree precondition guarantees an extension"
        amap[u] = extension
        used.add(extension)
        seen |= e
    _verify_map(list(sets), f_set, amap)
    return amap


def expansion_embed(
    expanded: Hypergraph,
    degree_one: Iterable[int],
    host: Hypergraph,
    kernel_map: Mapping[int, int],
) -> dict[int, int]:
    """Embed an expansion whose reduced edges all have large kernel degree.

    Each reduced edge image is grown to a host edge whose petal avoids
    everything placed so far; with kernel degree at least the vertex
    count of the pattern such an edge always exists.
    """
    r = expanded.require_uniform()
    if host.uniform_r != r:
        raise ValueError("host and expansion must share the same uniformity")
    s_verts = frozenset(degree_one)
    support = expanded.support()
    if not s_verts <= support:
        raise ValueError("degree-1 set must consist of covered vertices")
    deg = Counter(v for e in expanded.edges for v in e)
    if any(deg[v] != 1 for v in s_verts):
        raise ValueError("every designated expansion vertex must have degree 1")
    kept = support - s_verts
    amap = dict(kernel_map)
    if set(amap) != set(kept):
        raise ValueError("kernel map must cover exactly the non-expansion vertices")
    if len(set(amap.values())) != len(amap):
        raise ValueError("kernel map must be injective")
    size = len(support)
    kernels = []
    for e in expanded.edge_sets:
        d = e - s_verts
        img = frozenset(amap[v] for v in d)
        if kernel_degree(host, img, size) < size:
            raise ValueError(f"kernel degree below {size} for reduced edge {sorted(d)}")
        kernels.append((e, img))
    used = set(amap.values())
    for e, img in kernels:
        slots = sorted(e & s_verts)
        fe = min(
            (fe for fe in host.edge_sets if img <= fe and not (fe - img) & used),
            key=sorted,
            default=None,
        )
        assert fe is not None, "kernel degree precondition guarantees an extension"
        petal = sorted(fe - img)
        assert len(petal) == len(slots)
        for a, b in zip(slots, petal):
            amap[a] = b
        used |= set(petal)
    _verify_map(list(expanded.edge_sets), set(host.edge_sets), amap)
    return amap


def find_sunflower(
    hg: Hypergraph, kernel: Iterable[int], petals: int
) -> Optional[list[Edge]]:
    """``petals`` edges pairwise intersecting exactly in ``kernel``, or None."""
    if petals < 1:
        raise ValueError("a sunflower needs at least one petal")
    d = frozenset(kernel)
    petal_map = _kernel_petals(hg, d)
    pool = list(petal_map)
    size, picked = _pack_disjoint(pool, petals)
    if size < petals:
        return None
    return sorted(hg.edges[petal_map[pool[i]]] for i in picked)
