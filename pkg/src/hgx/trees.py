"""Hypergraph-tree recognition and transformation.

A tree certificate is an edge ordering plus a parent map witnessing the
running-intersection property: every edge meets the union of its
predecessors inside its parent edge.  Recognition is GYO-style ear
removal with an exhaustive fallback; all transformation outputs are
re-verified before they are returned.

Certificate positions are 0-based: ``order`` is a permutation of edge
indices and ``parent`` maps every position ``i >= 1`` to a position
``alpha(i) < i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .core import Edge, Hypergraph, _infer_r, remove
from .covers import is_crosscut


@dataclass(frozen=True)
class TreeCertificate:
    order: tuple[int, ...]
    parent: Mapping[int, int]
    tight: bool = False

    def to_json_obj(self) -> dict:
        return {
            "order": list(self.order),
            "parent": {str(i): p for i, p in sorted(self.parent.items())},
            "tight": self.tight,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TreeCertificate":
        try:
            order = tuple(int(i) for i in obj["order"])
            parent = {int(k): int(v) for k, v in obj["parent"].items()}
            tight = bool(obj["tight"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed certificate JSON: {exc}") from exc
        return cls(order, parent, tight)


def _check_shape(hg: Hypergraph, cert: TreeCertificate) -> None:
    m = hg.m
    if sorted(cert.order) != list(range(m)):
        raise ValueError("certificate order is not a permutation of the edges")
    if set(cert.parent) != set(range(1, m)):
        raise ValueError("certificate parent map must cover positions 1..m-1")
    for i, p in cert.parent.items():
        if not 0 <= p < i:
            raise ValueError(f"parent of position {i} must be an earlier position")


def _is_tight(hg: Hypergraph, order: Sequence[int], parent: Mapping[int, int]) -> bool:
    if hg.uniform_r is None:
        return False
    r = hg.uniform_r
    sets = hg.edge_sets
    order = list(order)
    return all(
        len(sets[order[i]] & sets[order[parent[i]]]) == r - 1
        for i in range(1, len(order))
    )


def verify_certificate(hg: Hypergraph, cert: TreeCertificate) -> tuple[bool, dict]:
    """Check the running-intersection condition position by position.

    The report also records, for every position, that each freshly
    introduced vertex appears here first and shares no edge with the
    parent-only vertices; those facts must hold whenever the certificate
    is valid.
    """
    _check_shape(hg, cert)
    sets = hg.edge_sets
    seen: set[int] = set()
    valid = True
    positions = []
    for i, oi in enumerate(cert.order):
        e = sets[oi]
        if i == 0:
            seen |= e
            continue
        pe = sets[cert.order[cert.parent[i]]]
        holds = (e & seen) <= pe
        valid = valid and holds
        new_vertices = sorted(e - pe)
        first_edge_ok = {str(x): x not in seen for x in new_vertices}
        separation_ok = {
            f"{x},{y}": not any(x in s and y in s for s in sets)
            for x in new_vertices
            for y in sorted(pe - e)
        }
        positions.append(
            {
                "position": i,
                "edge": sorted(e),
                "parent": cert.parent[i],
                "holds": holds,
                "new_vertices": new_vertices,
                "first_edge_ok": first_edge_ok,
                "separation_ok": separation_ok,
            }
        )
        seen |= e
    return valid, {"valid": valid, "positions": positions}


def _assert_valid(hg: Hypergraph, cert: TreeCertificate) -> None:
    ok, _ = verify_certificate(hg, cert)
    if not ok:
        raise ValueError("invalid tree certificate")


# -- recognition ----------------------------------------------------------


def _removal_order(
    dist: list[frozenset[int]], root_pos: Optional[int]
) -> Optional[tuple[list[int], dict[int, int]]]:
    """Ear-removal ordering of distinct edges, or None.

    Removes, step by step, an edge whose intersection with the union of
    the others lies inside one remaining edge; the reversed removal
    sequence is the ordering.  Greedy removal picks the highest index,
    so the final ordering prefers low indices; a memoised exhaustive
    search backs the greedy phase up, which matters for rooted queries.
    """
    k = len(dist)
    if k == 0:
        return [], {}

    def cover_for(remaining: frozenset[int], i: int) -> Optional[int]:
        others = remaining - {i}
        union: set[int] = set()
        for j in others:
            union |= dist[j]
        shared = dist[i] & union
        for j in sorted(others):
            if shared <= dist[j]:
                return j
        return None

    removal: list[tuple[int, int]] = []
    remaining = frozenset(range(k))
    while len(remaining) > 1:
        pick = None
        for i in sorted(remaining, reverse=True):
            if root_pos is not None and i == root_pos:
                continue
            cov = cover_for(remaining, i)
            if cov is not None:
                pick = (i, cov)
                break
        if pick is None:
            break
        removal.append(pick)
        remaining = remaining - {pick[0]}

    if len(remaining) > 1:
        failed: set[frozenset[int]] = set()

        def solve(rem: frozenset[int]) -> Optional[list[tuple[int, int]]]:
            if len(rem) == 1:
                only = next(iter(rem))
                return [] if root_pos is None or only == root_pos else None
            if rem in failed:
                return None
            for i in sorted(rem, reverse=True):
                if root_pos is not None and i == root_pos:
                    continue
                cov = cover_for(rem, i)
                if cov is None:
                    continue
                sub = solve(rem - {i})
                if sub is not None:
                    return [(i, cov)] + sub
            failed.add(rem)
            return None

        seq = solve(frozenset(range(k)))
        if seq is None:
            return None
        removal = seq
        remaining = frozenset(range(k)) - {i for i, _ in seq}

    last = next(iter(remaining))
    order = [last] + [i for i, _ in reversed(removal)]
    pos_of = {e: idx for idx, e in enumerate(order)}
    parent = {pos_of[i]: pos_of[cov] for i, cov in removal}
    return order, parent


def _tight_order(
    dist: list[frozenset[int]], root_pos: Optional[int]
) -> Optional[tuple[list[int], dict[int, int]]]:
    """Backtracking search for a tight ordering of distinct uniform edges.

    Prunes on the one-new-vertex rule and memoises failed used-edge sets;
    whether a partial ordering extends depends only on that set.
    """
    k = len(dist)
    if k == 0:
        return [], {}
    if len({len(e) for e in dist}) != 1:
        return None
    failed: set[frozenset[int]] = set()
    order: list[int] = []
    parent: dict[int, int] = {}

    def dfs(union: frozenset[int]) -> bool:
        if len(order) == k:
            return True
        used = frozenset(order)
        if used in failed:
            return False
        for i in range(k):
            if i in used:
                continue
            if len(dist[i] - union) != 1:
                continue
            overlap = dist[i] & union
            par = next((p for p in range(len(order)) if overlap <= dist[order[p]]), None)
            if par is None:
                continue
            parent[len(order)] = par
            order.append(i)
            if dfs(union | dist[i]):
                return True
            order.pop()
            del parent[len(order)]
        failed.add(used)
        return False

    for start in [root_pos] if root_pos is not None else range(k):
        order.clear()
        parent.clear()
        order.append(start)
        if dfs(dist[start]):
            return list(order), dict(parent)
    return None


def find_tree_ordering(
    hg: Hypergraph, root: Optional[int] = None, require_tight: bool = False
) -> Optional[TreeCertificate]:
    """Tree-defining ordering of the edges, or None when there is none.

    Duplicate edges are ordered after their first copies (first copies
    carry the structure).  With ``root`` given, only orderings whose
    first edge is the rooted one are accepted; with ``require_tight``
    only tight certificates are returned.  ``None`` is an answer, not an
    error.
    """
    if root is not None and not 0 <= root < hg.m:
        raise ValueError("root edge index out of range")
    sets = hg.edge_sets
    first_of: dict[frozenset[int], int] = {}
    dup_positions: list[int] = []
    for idx, s in enumerate(sets):
        if s in first_of:
            dup_positions.append(idx)
        else:
            first_of[s] = idx
    dist_sets = list(first_of)
    dist_orig = list(first_of.values())
    root_pos = dist_sets.index(sets[root]) if root is not None else None

    if require_tight:
        if dup_positions:
            return None
        found = _tight_order(dist_sets, root_pos)
        if found is None:
            return None
        order_pos, parent = found
        cert = TreeCertificate(
            tuple(dist_orig[p] for p in order_pos), dict(parent), tight=True
        )
        _assert_valid(hg, cert)
        return cert

    found = _removal_order(dist_sets, root_pos)
    if found is None:
        return None
    order_pos, parent = found
    order = [dist_orig[p] for p in order_pos]
    parent = dict(parent)
    place_of = {dist_orig[p]: i for i, p in enumerate(order_pos)}
    for d in dup_positions:
        parent[len(order)] = place_of[first_of[sets[d]]]
        order.append(d)
    cert = TreeCertificate(tuple(order), parent, tight=_is_tight(hg, order, parent))
    _assert_valid(hg, cert)
    return cert


# -- tight completion ------------------------------------------------------


def tighten(hg: Hypergraph, cert: TreeCertificate) -> tuple[Hypergraph, TreeCertificate]:
    """Complete a tree into a tight tree on the same vertices.

    Each edge whose overlap with its parent is short is reached by a
    chain of intermediate edges swapping one vertex at a time (swapped-in
    vertices ascending).  The input's first edge stays first; duplicates
    arising along the way are dropped.
    """
    r = hg.require_uniform()
    _assert_valid(hg, cert)
    if hg.m == 0:
        return hg, cert
    sets = hg.edge_sets
    first = sets[cert.order[0]]
    new_edges: list[Edge] = [tuple(sorted(first))]
    pos_of: dict[frozenset[int], int] = {first: 0}
    parent: dict[int, int] = {}
    union = set(first)
    for i in range(1, hg.m):
        e = sets[cert.order[i]]
        pe = sets[cert.order[cert.parent[i]]]
        overlap = e & union
        news = sorted(e - overlap)
        olds = sorted(pe - overlap)
        prev_pos = pos_of[pe]
        cur = set(pe)
        for t, v in enumerate(news):
            cur.discard(olds[t])
            cur.add(v)
            fs = frozenset(cur)
            if fs in pos_of:
                prev_pos = pos_of[fs]
                continue
            pos = len(new_edges)
            new_edges.append(tuple(sorted(fs)))
            pos_of[fs] = pos
            parent[pos] = prev_pos
            prev_pos = pos
        union |= e
    out = Hypergraph(hg.n, new_edges, uniform_r=r)
    cert_out = TreeCertificate(tuple(range(out.m)), parent, tight=True)
    _assert_valid(out, cert_out)
    assert _is_tight(out, cert_out.order, cert_out.parent)
    assert all(s in pos_of for s in sets)
    return out, cert_out


# -- colourings -------------------------------------------------------------


def r_partition(hg: Hypergraph, cert: TreeCertificate) -> list[frozenset[int]]:
    """Colour classes meeting every edge exactly once.

    The first edge is coloured in ascending vertex order and colours are
    propagated along the ordering; for tight trees the result is unique
    up to permuting classes.
    """
    r = hg.require_uniform()
    _assert_valid(hg, cert)
    colour: dict[int, int] = {}
    sets = hg.edge_sets
    if hg.m:
        for c, v in enumerate(sorted(sets[cert.order[0]])):
            colour[v] = c
    for i in range(1, hg.m):
        e = sets[cert.order[i]]
        used = {colour[v] for v in e if v in colour}
        fresh = sorted(v for v in e if v not in colour)
        missing = sorted(set(range(r)) - used)
        assert len(used) == len(e) - len(fresh), "colour clash on a valid certificate"
        assert len(missing) == len(fresh)
        for v, c in zip(fresh, missing):
            colour[v] = c
    return [frozenset(v for v, c in colour.items() if c == k) for k in range(r)]


# -- compression and hosting --------------------------------------------------


def compress(
    hg: Hypergraph, cert: TreeCertificate, pos: int, x: int, y: int
) -> tuple[Hypergraph, TreeCertificate]:
    """Replace ``x`` by ``y`` in every edge containing ``x``.

    ``x`` must be a fresh vertex of the edge at ``pos`` and ``y`` a
    parent-only vertex there.  The same order and parent map certify the
    result; duplicate edges may arise and are retained.
    """
    _assert_valid(hg, cert)
    if not 1 <= pos < hg.m:
        raise ValueError("compression position must have a parent")
    e = hg.edge_sets[cert.order[pos]]
    pe = hg.edge_sets[cert.order[cert.parent[pos]]]
    if x not in e or x in pe:
        raise ValueError(f"vertex {x} is not a fresh vertex of the edge at {pos}")
    if y not in pe or y in e:
        raise ValueError(f"vertex {y} is not a parent-only vertex at {pos}")
    assert not any(x in s and y in s for s in hg.edge_sets), "x,y share an edge"
    new_edges = [
        sorted((set(s) - {x}) | {y}) if x in s else sorted(s) for s in hg.edge_sets
    ]
    out = Hypergraph(hg.n, new_edges, uniform_r=hg.uniform_r, allow_multi=True)
    cert_out = TreeCertificate(
        cert.order, dict(cert.parent), tight=_is_tight(out, cert.order, cert.parent)
    )
    _assert_valid(out, cert_out)
    return out, cert_out


def _dedupe_certified(
    hg: Hypergraph, cert: TreeCertificate
) -> tuple[Hypergraph, TreeCertificate]:
    """Simple hypergraph (first copies, in certificate order) plus certificate."""
    sets = hg.edge_sets
    new_edges: list[Edge] = []
    pos_of: dict[frozenset[int], int] = {}
    parent: dict[int, int] = {}
    for i, oi in enumerate(cert.order):
        s = sets[oi]
        if s in pos_of:
            continue
        p = len(new_edges)
        new_edges.append(tuple(sorted(s)))
        pos_of[s] = p
        if p:
            parent[p] = pos_of[sets[cert.order[cert.parent[i]]]]
    out = Hypergraph(hg.n, new_edges, uniform_r=hg.uniform_r)
    cert_out = TreeCertificate(
        tuple(range(out.m)), parent, tight=_is_tight(out, range(out.m), parent)
    )
    _assert_valid(out, cert_out)
    return out, cert_out


def host_tree(
    sub: Hypergraph, tree: Hypergraph, cert: TreeCertificate
) -> tuple[Hypergraph, TreeCertificate]:
    """Smallest hosting tree: compress ``tree`` down to the vertices of ``sub``.

    Every vertex outside ``sub`` is folded onto the same-colour vertex of
    the parent of its first edge, so the result still contains ``sub``
    verbatim and lives on exactly its vertex set.
    """
    tree_sets = set(tree.edge_sets)
    if any(s not in tree_sets for s in sub.edge_sets):
        raise ValueError("the hosted hypergraph must be a subgraph of the tree")
    if sub.m == 0:
        raise ValueError("hosting an empty hypergraph is undefined")
    _assert_valid(tree, cert)
    root = tree.edges.index(sub.edges[0])
    rooted = find_tree_ordering(tree, root=root)
    assert rooted is not None, "a certified tree admits a rooted ordering"
    cur, cur_cert = tree, rooted
    target = sub.support()
    while True:
        extra = sorted(cur.support() - target)
        if not extra:
            break
        x = extra[0]
        classes = r_partition(cur, cur_cert)
        colour_of_x = next(k for k, cl in enumerate(classes) if x in cl)
        sets = cur.edge_sets
        pos = next(p for p in range(cur.m) if x in sets[cur_cert.order[p]])
        assert pos >= 1, "the root edge lies inside the hosted subgraph"
        pe = sets[cur_cert.order[cur_cert.parent[pos]]]
        y = next(v for v in pe if v in classes[colour_of_x])
        cur, cur_cert = compress(cur, cur_cert, pos, x, y)
    out, out_cert = _dedupe_certified(cur, cur_cert)
    assert out.support() == target
    out_sets = set(out.edge_sets)
    assert all(s in out_sets for s in sub.edge_sets)
    return out, out_cert


# -- substructure ----------------------------------------------------------------


def subtree_at(
    hg: Hypergraph, cert: TreeCertificate, x: int
) -> tuple[Hypergraph, TreeCertificate]:
    """Edges through ``x`` in inherited order; inherited parents certify it."""
    _assert_valid(hg, cert)
    if not 0 <= x < hg.n:
        raise ValueError(f"vertex {x} out of range")
    sets = hg.edge_sets
    positions = [i for i in range(hg.m) if x in sets[cert.order[i]]]
    edges = [hg.edges[cert.order[i]] for i in positions]
    out = Hypergraph(hg.n, edges, uniform_r=hg.uniform_r, allow_multi=hg.allow_multi)
    index_of = {p: k for k, p in enumerate(positions)}
    parent: dict[int, int] = {}
    for k, i in enumerate(positions):
        if k == 0:
            continue
        p = cert.parent[i]
        assert p in index_of, "parent of a non-first edge through x contains x"
        parent[k] = index_of[p]
    cert_out = TreeCertificate(
        tuple(range(out.m)), parent, tight=_is_tight(out, range(out.m), parent)
    )
    _assert_valid(out, cert_out)
    return out, cert_out


@dataclass(frozen=True)
class LimbDetachment:
    w: int
    limb: Hypergraph
    limb_cert: TreeCertificate
    rest: Hypergraph
    rest_cert: TreeCertificate
    limb_edge: Edge
    anchor_edge: Edge


def detach_limb(
    hg: Hypergraph, cert: TreeCertificate, crosscut: Iterable[int]
) -> LimbDetachment:
    """Split a tree at the cross-cut vertex covered last by the ordering.

    Returns the limb (edges through that vertex), the remaining tree with
    its induced certificate, a starting edge of the limb and the edge of
    the rest meeting the limb in exactly their shared vertices.
    """
    _assert_valid(hg, cert)
    s = frozenset(crosscut)
    if len(s) < 2:
        raise ValueError("limb detachment needs a cross-cut with at least 2 vertices")
    if not is_crosscut(hg, s):
        raise ValueError("the given set is not a cross-cut")
    if not s <= hg.support():
        raise ValueError("cross-cut vertices must be covered by edges")
    sets = hg.edge_sets
    first_cover = {
        v: next(i for i in range(hg.m) if v in sets[cert.order[i]]) for v in s
    }
    w = max(s, key=lambda v: first_cover[v])
    limb, limb_cert = subtree_at(hg, cert, w)
    positions = [i for i in range(hg.m) if w not in sets[cert.order[i]]]
    rest_edges = [hg.edges[cert.order[i]] for i in positions]
    rest = Hypergraph(hg.n, rest_edges, uniform_r=hg.uniform_r, allow_multi=hg.allow_multi)
    index_of = {p: k for k, p in enumerate(positions)}
    parent: dict[int, int] = {}
    for k, i in enumerate(positions):
        if k == 0:
            continue
        p = cert.parent[i]
        assert p in index_of, "parent of a rest edge stays in the rest"
        parent[k] = index_of[p]
    rest_cert = TreeCertificate(
        tuple(range(rest.m)), parent, tight=_is_tight(rest, range(rest.m), parent)
    )
    _assert_valid(rest, rest_cert)
    k0 = first_cover[w]
    assert k0 >= 1, "a 2+ cross-cut cannot be covered entirely by the first edge"
    limb_edge = hg.edges[cert.order[k0]]
    anchor_edge = hg.edges[cert.order[cert.parent[k0]]]
    assert limb.support() & rest.support() == frozenset(limb_edge) & frozenset(anchor_edge)
    return LimbDetachment(w, limb, limb_cert, rest, rest_cert, limb_edge, anchor_edge)


# -- traces of certified trees ----------------------------------------------------


def trace_certified(
    hg: Hypergraph, cert: TreeCertificate, keep: Iterable[int]
) -> tuple[Hypergraph, TreeCertificate]:
    """Trace of a certified tree, with the induced certificate.

    Empty traces are dropped and duplicates collapse onto their first
    copies; an edge whose traced parent vanished became disjoint from all
    of its predecessors, so any earlier edge may serve as its parent.
    """
    _assert_valid(hg, cert)
    keep_set = frozenset(keep)
    sets = hg.edge_sets
    new_edges: list[Edge] = []
    pos_of: dict[frozenset[int], int] = {}
    parent: dict[int, int] = {}
    for i, oi in enumerate(cert.order):
        s = sets[oi] & keep_set
        if not s or s in pos_of:
            continue
        p = len(new_edges)
        new_edges.append(tuple(sorted(s)))
        pos_of[s] = p
        if p == 0:
            continue
        ps = sets[cert.order[cert.parent[i]]] & keep_set
        parent[p] = pos_of[ps] if ps and ps in pos_of else 0
    out = Hypergraph(hg.n, new_edges, uniform_r=_infer_r(new_edges))
    cert_out = TreeCertificate(
        tuple(range(out.m)), parent, tight=_is_tight(out, range(out.m), parent)
    )
    _assert_valid(out, cert_out)
    return out, cert_out


def remove_certified(
    hg: Hypergraph, cert: TreeCertificate, drop: Iterable[int]
) -> tuple[Hypergraph, TreeCertificate]:
    return trace_certified(hg, cert, set(range(hg.n)) - set(drop))


# -- cross-cut deletion -------------------------------------------------------------


def delete_crosscut(
    sub: Hypergraph, tree: Hypergraph, cert: TreeCertificate, crosscut: Iterable[int]
) -> tuple[Hypergraph, TreeCertificate]:
    """Delete a cross-cut of ``sub`` and re-host the remainder in an (r-1)-tree.

    Extends the cross-cut by one degree-1 vertex per untouched tree edge,
    traces, rounds short edges back to size r-1 with fresh vertices, and
    compresses the result down to the vertices of ``sub`` minus the cut.
    Fails when some untouched tree edge has no degree-1 vertex.
    """
    r = tree.require_uniform()
    tree_sets = set(tree.edge_sets)
    if any(s not in tree_sets for s in sub.edge_sets):
        raise ValueError("the covered hypergraph must be a subgraph of the tree")
    s = frozenset(crosscut)
    if not is_crosscut(sub, s):
        raise ValueError("the given set is not a cross-cut of the subgraph")
    _assert_valid(tree, cert)

    deg = Counter(v for e in tree.edges for v in e)
    picks: set[int] = set()
    for e in tree.edge_sets:
        if e & s:
            continue
        degree_one = sorted(v for v in e if deg[v] == 1)
        if not degree_one:
            raise ValueError(
                "a tree edge disjoint from the cross-cut has no degree-1 vertex"
            )
        picks.add(degree_one[0])

    reduced = remove(sub, s)
    if reduced.m == 0:
        return Hypergraph(sub.n, (), uniform_r=r - 1), TreeCertificate((), {})

    traced, traced_cert = remove_certified(tree, cert, s | picks)
    fresh = tree.n
    rounded_edges: list[list[int]] = []
    for e in traced.edges:
        e2 = list(e)
        while len(e2) < r - 1:
            e2.append(fresh)
            fresh += 1
        rounded_edges.append(e2)
    rounded = Hypergraph(fresh, rounded_edges, uniform_r=r - 1)
    rounded_cert = TreeCertificate(
        traced_cert.order,
        dict(traced_cert.parent),
        tight=_is_tight(rounded, traced_cert.order, traced_cert.parent),
    )
    _assert_valid(rounded, rounded_cert)

    widened = Hypergraph(fresh, reduced.edges, uniform_r=r - 1)
    hosted, hosted_cert = host_tree(widened, rounded, rounded_cert)
    out = Hypergraph(sub.n, hosted.edges, uniform_r=r - 1)
    return out, hosted_cert


# -- reductions and expansions --------------------------------------------------------


@dataclass
class ExpansionMap:
    """A reduced base plus per-edge copy counts.

    Expanding adds k fresh vertices to every copy, with disjoint fresh
    sets across copies, reversing a k-reduction up to relabelling of the
    expansion vertices.  ``deleted`` records which vertices the reduction
    removed from each original edge.
    """

    base: Hypergraph
    k: int
    multiplicity: dict[Edge, int]
    deleted: tuple[Edge, ...] = ()

    def expanded_r(self) -> int:
        return self.base.require_uniform() + self.k


def is_k_reducible(hg: Hypergraph, k: int) -> bool:
    """True when every edge has at least k vertices of degree 1."""
    r = hg.require_uniform()
    if not 1 <= k <= r - 1:
        raise ValueError(f"reduction order must lie in 1..{r - 1}")
    deg = Counter(v for e in hg.edges for v in e)
    return all(sum(1 for v in e if deg[v] == 1) >= k for e in hg.edges)


def k_reduce(hg: Hypergraph, k: int) -> ExpansionMap:
    """Delete the k lowest-id degree-1 vertices from every edge."""
    if not is_k_reducible(hg, k):
        raise ValueError(f"hypergraph is not {k}-reducible")
    r = hg.require_uniform()
    deg = Counter(v for e in hg.edges for v in e)
    reduced: list[Edge] = []
    deleted: list[Edge] = []
    for e in hg.edges:
        gone = tuple(sorted(v for v in e if deg[v] == 1)[:k])
        deleted.append(gone)
        reduced.append(tuple(v for v in e if v not in gone))
    mult = Counter(reduced)
    base = Hypergraph(hg.n, list(dict.fromkeys(reduced)), uniform_r=r - k)
    return ExpansionMap(base, k, dict(mult), tuple(deleted))


def expand(exp: ExpansionMap) -> Hypergraph:
    """Rebuild the r-graph with fresh, pairwise-disjoint expansion vertices."""
    if exp.k < 1:
        raise ValueError("expansion order must be positive")
    fresh = exp.base.n
    edges: list[list[int]] = []
    for e in exp.base.edges:
        copies = exp.multiplicity.get(e, 1)
        if copies < 1:
            raise ValueError("multiplicities must be positive")
        for _ in range(copies):
            extra = list(range(fresh, fresh + exp.k))
            fresh += exp.k
            edges.append(list(e) + extra)
    return Hypergraph(fresh, edges, uniform_r=exp.expanded_r())
