"""Independent brute-force oracles and generators shared by the tests.

Everything here recomputes expected values from definitions, by plain
enumeration, so library results are checked against a second route.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Optional

from hgx import Hypergraph, TreeCertificate


def brute_shadow(edges: Iterable[Iterable[int]], p: int) -> set[tuple[int, ...]]:
    out: set[tuple[int, ...]] = set()
    for e in edges:
        out.update(itertools.combinations(sorted(set(e)), p))
    return out


def brute_min_covers(hg: Hypergraph) -> tuple[int, list[frozenset[int]]]:
    support = sorted(hg.support())
    if not hg.edges:
        return 0, [frozenset()]
    for size in range(len(support) + 1):
        hits = [
            frozenset(c)
            for c in itertools.combinations(support, size)
            if all(set(c) & set(e) for e in hg.edges)
        ]
        if hits:
            return size, hits
    raise AssertionError("a cover always exists when no edge is empty")


def brute_min_crosscuts(hg: Hypergraph) -> tuple[Optional[int], list[frozenset[int]]]:
    support = sorted(hg.support())
    if not hg.edges:
        return 0, [frozenset()]
    for size in range(len(support) + 1):
        hits = [
            frozenset(c)
            for c in itertools.combinations(support, size)
            if all(len(set(c) & set(e)) == 1 for e in hg.edges)
        ]
        if hits:
            return size, hits
    return None, []


def brute_embeds(pattern: Hypergraph, host: Hypergraph) -> bool:
    """All injective maps, no pruning. Feasible for tiny instances only."""
    h_support = sorted(pattern.support())
    f_support = sorted(host.support())
    if not h_support:
        return True
    if len(h_support) > len(f_support):
        return False
    f_set = set(host.edge_sets)
    for image in itertools.permutations(f_support, len(h_support)):
        amap = dict(zip(h_support, image))
        if all(frozenset(amap[v] for v in e) in f_set for e in pattern.edge_sets):
            return True
    return False


def brute_turan(n: int, r: int, pattern: Hypergraph) -> int:
    """Scan every subfamily of the r-set universe. Tiny universes only."""
    universe = list(itertools.combinations(range(n), r))
    assert len(universe) <= 16, "keep the exhaustive scan tractable"
    best = 0
    for bits in range(1 << len(universe)):
        fam = [universe[i] for i in range(len(universe)) if bits >> i & 1]
        if len(fam) <= best:
            continue
        if not brute_embeds(pattern, Hypergraph(n, fam, uniform_r=r)):
            best = len(fam)
    return best


def brute_contains_anchored(
    pattern: Hypergraph, family: list[frozenset[int]], anchor: frozenset[int]
) -> bool:
    """Copy of the pattern in family + anchor with an edge landing on anchor."""
    edges = list(dict.fromkeys(list(family) + [anchor]))
    host = Hypergraph(
        max((v + 1 for e in edges for v in e), default=0),
        [sorted(e) for e in edges],
    )
    h_support = sorted(pattern.support())
    f_support = sorted(host.support())
    if len(h_support) > len(f_support):
        return False
    f_set = set(host.edge_sets)
    for image in itertools.permutations(f_support, len(h_support)):
        amap = dict(zip(h_support, image))
        images = [frozenset(amap[v] for v in e) for e in pattern.edge_sets]
        if all(i in f_set for i in images) and anchor in images:
            return True
    return False


def brute_kernel_degree(hg: Hypergraph, kernel: Iterable[int], cap: int) -> int:
    d = frozenset(kernel)
    candidates = [e for e in hg.edge_sets if d < e]
    best = 0
    for size in range(min(cap, len(candidates)), 0, -1):
        for combo in itertools.combinations(candidates, size):
            if all(a & b == d for a, b in itertools.combinations(combo, 2)):
                return size
    return best


def random_tree(
    rng: random.Random, r: int, max_edges: int, tight: bool = False
) -> tuple[Hypergraph, TreeCertificate]:
    """Random tree built by its defining ordering, certificate included.

    Each new edge picks a parent, keeps a subset of it (all of size r-1
    when tight), and fills up with fresh vertices.
    """
    m = rng.randint(1, max_edges)
    edges: list[list[int]] = [list(range(r))]
    parent: dict[int, int] = {}
    fresh = r
    for i in range(1, m):
        p = rng.randrange(i)
        keep = r - 1 if tight else rng.randint(0, r - 1)
        overlap = rng.sample(edges[p], keep)
        new = list(range(fresh, fresh + r - keep))
        fresh += r - keep
        edges.append(sorted(overlap + new))
        parent[i] = p
    hg = Hypergraph(fresh, edges, uniform_r=r)
    cert = TreeCertificate(tuple(range(m)), parent, tight=tight)
    return hg, cert


def random_hypergraph(
    rng: random.Random, n: int, r: int, m: int
) -> Hypergraph:
    universe = list(itertools.combinations(range(n), r))
    rng.shuffle(universe)
    return Hypergraph(n, sorted(universe[: min(m, len(universe))]), uniform_r=r)


def all_tight_trees(r: int, max_vertices: int) -> list[Hypergraph]:
    """Every tight r-tree with at most ``max_vertices`` vertices, grown by
    the one-new-vertex rule, deduplicated by labelled edge set."""
    seen: set[frozenset[frozenset[int]]] = set()
    out: list[Hypergraph] = []

    def grow(edges: list[tuple[int, ...]], used: int) -> None:
        key = frozenset(frozenset(e) for e in edges)
        if key in seen:
            return
        seen.add(key)
        out.append(Hypergraph(used, list(edges), uniform_r=r))
        if used >= max_vertices:
            return
        for base in list(edges):
            for drop in base:
                overlap = tuple(v for v in base if v != drop)
                new_edge = tuple(sorted(overlap + (used,)))
                if new_edge in edges:
                    continue
                grow(edges + [new_edge], used + 1)

    grow([tuple(range(r))], r)
    return out
