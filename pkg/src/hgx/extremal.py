"""Extremal constructions, bound formulas, and the exact Turan oracle.

The two lower-bound constructions (all r-sets meeting a t-set; all
r-sets meeting it exactly once) come with closed-form sizes that are
asserted at generation time.  The oracle maximises an H-free family by
include/exclude branch and bound over the colex-ordered edge universe,
checking new copies anchored at the edge just added.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .core import Edge, Hypergraph, degree, kernel_degree, shadow
from .covers import sigma, tau
from .embedding import contains_anchored, is_free
from .trees import find_tree_ordering

log = logging.getLogger(__name__)


def _comb(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


# -- constructions ----------------------------------------------------------


def gen_S(n: int, r: int, t: int) -> Hypergraph:
    """All r-sets of [n] meeting {0..t-1}; size C(n,r) - C(n-t,r)."""
    if not (0 <= t <= n and 1 <= r <= n):
        raise ValueError("need 0 <= t <= n and 1 <= r <= n")
    marked = set(range(t))
    edges = [c for c in itertools.combinations(range(n), r) if marked & set(c)]
    out = Hypergraph(n, edges, uniform_r=r)
    assert out.m == _comb(n, r) - _comb(n - t, r)
    return out


def gen_C(n: int, r: int, t: int) -> Hypergraph:
    """All r-sets of [n] meeting {0..t-1} in exactly one vertex; size t*C(n-t,r-1)."""
    if not (0 <= t <= n and 1 <= r <= n):
        raise ValueError("need 0 <= t <= n and 1 <= r <= n")
    edges = [
        tuple(sorted((i,) + rest))
        for i in range(t)
        for rest in itertools.combinations(range(t, n), r - 1)
    ]
    out = Hypergraph(n, edges, uniform_r=r)
    assert out.m == t * _comb(n - t, r - 1)
    return out


def _matching(s: int, r: int) -> Hypergraph:
    if s < 0 or r < 1:
        raise ValueError("matching needs s >= 0 and r >= 1")
    return Hypergraph(s * r, [range(i * r, (i + 1) * r) for i in range(s)], uniform_r=r)


def _linear_star(p: int, r: int) -> Hypergraph:
    if p < 1 or r < 2:
        raise ValueError("linear star needs p >= 1 petals and r >= 2")
    edges = [[0] + list(range(1 + i * (r - 1), 1 + (i + 1) * (r - 1))) for i in range(p)]
    return Hypergraph(1 + p * (r - 1), edges, uniform_r=r)


def _linear_cycle(m: int, r: int = 3) -> Hypergraph:
    # spine a_0..a_{m-1} first, then the r-2 private vertices of each edge
    if m < 2 or r < 2:
        raise ValueError("linear cycle needs m >= 2 edges and r >= 2")
    edges = []
    for i in range(m):
        extras = range(m + i * (r - 2), m + (i + 1) * (r - 2))
        edges.append([i, (i + 1) % m, *extras])
    return Hypergraph(m + m * (r - 2), edges, uniform_r=r)


def _linear_path(m: int, r: int = 3) -> Hypergraph:
    if m < 1 or r < 2:
        raise ValueError("linear path needs m >= 1 edges and r >= 2")
    edges = []
    for i in range(m):
        extras = range(m + 1 + i * (r - 2), m + 1 + (i + 1) * (r - 2))
        edges.append([i, i + 1, *extras])
    return Hypergraph(m + 1 + m * (r - 2), edges, uniform_r=r)


def _tight_path(v: int, r: int) -> Hypergraph:
    if r < 1 or v < r:
        raise ValueError("tight path needs v >= r >= 1")
    return Hypergraph(v, [range(i, i + r) for i in range(v - r + 1)], uniform_r=r)


def _k_pp(p: int, s: int) -> Hypergraph:
    if p < 1 or s < 1:
        raise ValueError("complete p-partite graph needs p, s >= 1")
    parts = [range(i * s, (i + 1) * s) for i in range(p)]
    return Hypergraph(p * s, list(itertools.product(*parts)), uniform_r=p)


def _ex511() -> Hypergraph:
    # two hub vertices labelled 1 and 2; the degree-2 path is 3,4,5,6 and
    # the six private tip vertices are 0 and 7..11
    edges = [
        [1, 3, 4, 0],
        [1, 4, 5, 7],
        [1, 5, 6, 8],
        [2, 3, 4, 9],
        [2, 4, 5, 10],
        [2, 5, 6, 11],
    ]
    return Hypergraph(12, edges, uniform_r=4)


def _fur() -> Hypergraph:
    return Hypergraph(6, [[0, 1, 2], [0, 1, 3], [2, 4, 5], [3, 4, 5]], uniform_r=3)


_FAMILIES = {
    "matching": _matching,
    "linear_star": _linear_star,
    "linear_cycle": _linear_cycle,
    "linear_path": _linear_path,
    "tight_path": _tight_path,
    "k_pp": _k_pp,
    "ex511": _ex511,
    "fur": _fur,
}


def gen_standard(name: str, **params) -> Hypergraph:
    """Standard forbidden-graph fixtures under canonical 0-based labels.

    Kernel/spine vertices come first in every family except ``ex511``,
    whose two degree-3 hub vertices sit at ids 1 and 2.
    """
    try:
        builder = _FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {sorted(_FAMILIES)}") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for family {name!r}: {exc}") from exc


# -- bound formulas -----------------------------------------------------------


def bound_tau_lower(pattern: Hypergraph, n: int) -> int:
    """Sum of C(n-i, r-1) for i = 1..tau-1."""
    r = pattern.require_uniform()
    t, _ = tau(pattern)
    return sum(_comb(n - i, r - 1) for i in range(1, t))


def bound_sigma_lower(pattern: Hypergraph, n: int) -> int:
    """(sigma-1) * C(n-sigma+1, r-1); needs a finite cross-cut number."""
    r = pattern.require_uniform()
    s, _ = sigma(pattern)
    if s == float("inf"):
        raise ValueError("pattern has no cross-cut")
    s = int(s)
    return (s - 1) * _comb(n - s + 1, r - 1)


def critical_formula(n: int, r: int, sig: int) -> int:
    """C(n,r) - C(n-sigma+1,r)."""
    if sig < 1:
        raise ValueError("cross-cut number must be positive")
    return _comb(n, r) - _comb(n - sig + 1, r)


def phi_star_matching(p: int) -> int:
    """Max 2-graph size avoiding both a p-star and a p-matching (display only)."""
    if p < 2:
        raise ValueError("needs p >= 2")
    return p * (p - 1) if p % 2 else (p - 1) ** 2 + (p - 2) // 2


def stability_exponent(r: int, sig: int) -> float:
    """Error exponent 1/((r-2)(sigma+1)+1) quoted in reports (display only)."""
    return 1.0 / ((r - 2) * (sig + 1) + 1)


# -- the exact oracle ----------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Hypergraph
    nodes: int
    certified: bool


def _colex_universe(n: int, r: int) -> list[frozenset[int]]:
    out = []
    for top in range(r - 1, n):
        for rest in itertools.combinations(range(top), r - 1):
            out.append(frozenset(rest + (top,)))
    return out


class _OracleStop(Exception):
    pass


def turan_oracle(
    n: int, r: int, pattern: Hypergraph, budget: Optional[int] = None
) -> OracleResult:
    """Exact maximum size of a pattern-free r-graph on n vertices.

    Include/exclude branch and bound over the colex edge universe, seeded
    with the larger of the two lower-bound constructions.  A new copy of
    the pattern must use the edge just added, so the forbidden-subgraph
    check is anchored there.  When the node budget runs out the best
    family so far is returned with ``certified=False``.
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    if pattern.uniform_r != r:
        raise ValueError("pattern must be r-uniform for the requested r")
    if pattern.m == 0:
        raise ValueError("the empty pattern is contained in every hypergraph")

    seeds = []
    t_cov, _ = tau(pattern)
    if n >= r:
        seeds.append(gen_S(n, r, min(t_cov - 1, n)))
        s_cut, _ = sigma(pattern)
        if s_cut != float("inf"):
            seeds.append(gen_C(n, r, min(int(s_cut) - 1, n)))
    seed = max(seeds, key=lambda g: g.m, default=Hypergraph(n, (), uniform_r=r))
    if not is_free(seed, pattern):
        raise RuntimeError("lower-bound seed contains the pattern; construction bug")

    universe = _colex_universe(n, r)
    total = len(universe)
    best_edges = list(seed.edge_sets)
    best = len(best_edges)
    current: list[frozenset[int]] = []
    nodes = 0

    def dfs(idx: int) -> None:
        nonlocal nodes, best, best_edges
        nodes += 1
        if budget is not None and nodes > budget:
            raise _OracleStop
        if len(current) + (total - idx) <= best or idx == total:
            return
        e = universe[idx]
        if not contains_anchored(pattern, current, e):
            current.append(e)
            if len(current) > best:
                best = len(current)
                best_edges = list(current)
            dfs(idx + 1)
            current.pop()
        dfs(idx + 1)

    certified = True
    try:
        dfs(0)
    except _OracleStop:
        certified = False

    witness = Hypergraph(n, sorted(tuple(sorted(e)) for e in best_edges), uniform_r=r)
    if certified:
        assert witness.m == best
        assert is_free(witness, pattern), "oracle witness failed the freeness recheck"
    return OracleResult(value=best, witness=witness, nodes=nodes, certified=certified)


# -- certified checks -----------------------------------------------------------


def certify_construction_free(pattern: Hypergraph, n: int, which: str) -> bool:
    """Verify the lower-bound construction avoids the pattern.

    A False return means the construction machinery itself is broken and
    is logged as an error.
    """
    r = pattern.require_uniform()
    if which == "S":
        t_cov, _ = tau(pattern)
        family = gen_S(n, r, min(t_cov - 1, n))
    elif which == "C":
        s_cut, _ = sigma(pattern)
        if s_cut == float("inf"):
            raise ValueError("the exact-intersection construction needs finite sigma")
        family = gen_C(n, r, min(int(s_cut) - 1, n))
    else:
        raise ValueError("construction must be 'S' or 'C'")
    ok = is_free(family, pattern)
    if not ok:
        log.error(
            "construction %s(n=%d, r=%d) unexpectedly contains the pattern", which, n, r
        )
    return ok


class TreeShadowBound(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def tree_shadow_bound_check(host: Hypergraph, tree: Hypergraph) -> TreeShadowBound:
    """|F| <= (p - r) * |(r-1)-shadow(F)| for F free of a p-vertex r-tree."""
    r = tree.require_uniform()
    if host.uniform_r != r:
        raise ValueError("host and tree must share the same uniformity")
    if find_tree_ordering(tree) is None:
        raise ValueError("the forbidden pattern is not a hypergraph tree")
    if not is_free(host, tree):
        raise ValueError("the bound is only claimed for hosts avoiding the tree")
    p = len(tree.support())
    lhs = host.m
    rhs = (p - r) * (shadow(host, r - 1).m if host.m else 0)
    return TreeShadowBound(lhs, rhs, lhs <= rhs)


class MissingVsNonM(NamedTuple):
    uncovered: int
    bound: int
    holds: bool


def missing_vs_nonm_check(
    graph: Hypergraph, pattern: Hypergraph, budget: Optional[int] = None
) -> MissingVsNonM:
    """|G_0| <= (m-1) * |complement(G)| where G_0 collects the edges of G
    lying in no copy of the m-edge pattern inside G."""
    m = pattern.m
    if m < 2:
        raise ValueError("the count needs a pattern with at least 2 edges")
    r = pattern.require_uniform()
    if graph.uniform_r != r or not graph.is_simple():
        raise ValueError("the graph must be simple and share the pattern uniformity")
    sets = list(graph.edge_sets)
    uncovered = 0
    for i, e in enumerate(sets):
        rest = sets[:i] + sets[i + 1 :]
        if not contains_anchored(pattern, rest, e, budget=budget):
            uncovered += 1
    missing = _comb(graph.n, r) - graph.m
    bound = (m - 1) * missing
    return MissingVsNonM(uncovered, bound, uncovered <= bound)


# -- homogeneous and centralized families ------------------------------------------


Pattern = frozenset  # of frozenset[int]: class-index sets


def _validate_partition(
    family: Hypergraph, partition: Sequence[Iterable[int]]
) -> tuple[tuple[frozenset[int], ...], dict[int, int]]:
    r = family.require_uniform()
    classes = tuple(frozenset(c) for c in partition)
    if len(classes) != r:
        raise ValueError(f"partition must have exactly r={r} classes")
    class_of: dict[int, int] = {}
    for k, cl in enumerate(classes):
        for v in cl:
            if v in class_of:
                raise ValueError(f"vertex {v} appears in two classes")
            class_of[v] = k
    return classes, class_of


def _normalise_pattern(r: int, pattern: Iterable[Iterable[int]]) -> Pattern:
    out = set()
    for index_set in pattern:
        s = frozenset(index_set)
        if not s <= frozenset(range(r)) or len(s) == r:
            raise ValueError("pattern members must be proper subsets of the classes")
        out.add(s)
    return frozenset(out)


def _projection(e: frozenset[int], class_of: Mapping[int, int], idx: frozenset[int]) -> frozenset[int]:
    return frozenset(v for v in e if class_of.get(v) in idx)


@dataclass(frozen=True)
class HomogeneityReport:
    partition: tuple[frozenset[int], ...]
    pattern: Pattern
    threshold: int
    r_partite_ok: bool
    kernel_ok: bool
    forbidden_ok: bool
    closed_ok: bool
    failures: tuple[str, ...]

    @property
    def homogeneous(self) -> bool:
        return self.r_partite_ok and self.kernel_ok and self.forbidden_ok and self.closed_ok


def homogeneous_check(
    family: Hypergraph,
    partition: Sequence[Iterable[int]],
    pattern: Iterable[Iterable[int]],
    threshold: int,
) -> HomogeneityReport:
    """Verify the three homogeneity conditions for a candidate pattern.

    (1) the partition makes the family r-partite; (2) projections onto
    pattern members have kernel degree >= threshold, and no two edges
    intersect exactly in a projection outside the pattern; (3) the
    pattern is closed under intersection.
    """
    classes, class_of = _validate_partition(family, partition)
    r = family.require_uniform()
    pat = _normalise_pattern(r, pattern)
    failures: list[str] = []

    sets = list(dict.fromkeys(family.edge_sets))
    r_partite = all(
        len(e) == r and all(v in class_of for v in e) and len({class_of[v] for v in e}) == r
        for e in sets
    )
    if not r_partite:
        failures.append("family is not r-partite under the given partition")

    kernel_ok = True
    forbidden_ok = True
    if r_partite:
        for e in sets:
            for idx in pat:
                if kernel_degree(family, _projection(e, class_of, idx), threshold) < threshold:
                    kernel_ok = False
                    failures.append(
                        f"kernel degree below threshold at projection {sorted(idx)} of {sorted(e)}"
                    )
                    break
            if not kernel_ok:
                break
        for a, b in itertools.combinations(sets, 2):
            occurring = frozenset(class_of[v] for v in a & b)
            if occurring not in pat:
                forbidden_ok = False
                failures.append(
                    f"edges {sorted(a)} and {sorted(b)} meet in pattern {sorted(occurring)}"
                )
                break

    closed_ok = all(a & b in pat for a in pat for b in pat)
    if not closed_ok:
        failures.append("pattern is not closed under intersection")

    return HomogeneityReport(
        partition=classes,
        pattern=pat,
        threshold=threshold,
        r_partite_ok=r_partite,
        kernel_ok=kernel_ok,
        forbidden_ok=forbidden_ok,
        closed_ok=closed_ok,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class Classification:
    case: Optional[int]
    cases: tuple[int, ...]
    central_class: Optional[int]
    central: Optional[dict[Edge, int]]
    small_bound: int


def classify(
    family: Hypergraph,
    partition: Sequence[Iterable[int]],
    pattern: Iterable[Iterable[int]],
    threshold: int,
) -> Classification:
    """Which structural case a homogeneous family falls into.

    (1) small: |F| <= C(n, r-2); (2) two classes a,b with every pattern
    avoiding both present; (3) a central class i: removing an edge's
    i-vertex leaves a set lying in that edge only, while every proper
    projection through i keeps kernel degree >= threshold.
    """
    classes, class_of = _validate_partition(family, partition)
    r = family.require_uniform()
    pat = _normalise_pattern(r, pattern)
    sets = list(dict.fromkeys(family.edge_sets))
    cases: list[int] = []

    small_bound = _comb(family.n, r - 2)
    if family.m <= small_bound:
        cases.append(1)

    def all_subsets_in_pattern(rest: tuple[int, ...]) -> bool:
        return all(
            frozenset(s) in pat
            for k in range(len(rest) + 1)
            for s in itertools.combinations(rest, k)
        )

    if any(
        all_subsets_in_pattern(tuple(sorted(set(range(r)) - {a, b})))
        for a, b in itertools.combinations(range(r), 2)
    ):
        cases.append(2)

    central_class = None
    central: Optional[dict[Edge, int]] = None
    for i in range(r):
        through_i = [
            frozenset(s)
            for k in range(1, r)
            for s in itertools.combinations(range(r), k)
            if i in s
        ]
        witness: dict[Edge, int] = {}
        good = True
        for e in sets:
            spoke = _projection(e, class_of, frozenset([i]))
            if len(spoke) != 1 or degree(family, e - spoke) != 1:
                good = False
                break
            if any(
                kernel_degree(family, _projection(e, class_of, idx), threshold) < threshold
                for idx in through_i
            ):
                good = False
                break
            witness[tuple(sorted(e))] = next(iter(spoke))
        if good and sets:
            central_class = i
            central = witness
            cases.append(3)
            break

    return Classification(
        case=min(cases) if cases else None,
        cases=tuple(sorted(set(cases))),
        central_class=central_class,
        central=central,
        small_bound=small_bound,
    )


def centralized_check(
    family: Hypergraph, threshold: int, central: Mapping[Edge, int]
) -> bool:
    """Every proper subset through the designated central vertex of each
    edge must have kernel degree >= threshold."""
    if threshold < 1:
        raise ValueError("threshold must be positive")
    for e in family.edges:
        if e not in central:
            raise ValueError(f"no central element designated for edge {e}")
        c = central[e]
        if c not in e:
            raise ValueError(f"central element {c} does not lie in edge {e}")
        others = [v for v in e if v != c]
        for k in range(len(others) + 1):
            for extra in itertools.combinations(others, k):
                d = frozenset((c,) + extra)
                if len(d) == len(e):
                    continue
                if kernel_degree(family, d, threshold) < threshold:
                    return False
    return True


def _closure(pattern: set[frozenset[int]]) -> set[frozenset[int]]:
    out = set(pattern)
    while True:
        extra = {a & b for a in out for b in out} - out
        if not extra:
            return out
        out |= extra


def homogeneous_extract(
    family: Hypergraph, threshold: int, tries: int = 20, seed: int = 0
) -> tuple[Hypergraph, tuple[frozenset[int], ...], Pattern]:
    """Best-effort extraction of a homogeneous subfamily.

    Randomised greedy: sample r-partitions, keep the transversal edges,
    and delete edges until every occurring intersection pattern (closed
    up) has kernel degree >= threshold.  Returns the largest survivor
    over all tries; the output always passes ``homogeneous_check`` but
    carries no size guarantee.
    """
    r = family.require_uniform()
    rng = random.Random(seed)
    support = sorted(family.support())
    best: tuple[int, Optional[tuple]] = (-1, None)

    for _ in range(max(1, tries)):
        assignment = {v: rng.randrange(r) for v in support}
        classes = tuple(
            frozenset(v for v in support if assignment[v] == k) for k in range(r)
        )
        survivors = [
            e for e in dict.fromkeys(family.edge_sets)
            if len({assignment[v] for v in e}) == r
        ]
        while True:
            sub = Hypergraph(family.n, [sorted(e) for e in survivors], uniform_r=r)
            occurring = {
                frozenset(assignment[v] for v in a & b)
                for a, b in itertools.combinations(survivors, 2)
            }
            pat = _closure(occurring) if occurring else set()
            bad: dict[frozenset[int], int] = {}
            for e in survivors:
                for idx in pat:
                    proj = frozenset(v for v in e if assignment[v] in idx)
                    if kernel_degree(sub, proj, threshold) < threshold:
                        bad[e] = bad.get(e, 0) + 1
            if not bad:
                break
            worst = max(bad.items(), key=lambda kv: (kv[1], sorted(kv[0])))
            survivors.remove(worst[0])
        if len(survivors) > best[0]:
            best = (len(survivors), (survivors, classes, frozenset(pat)))

    assert best[1] is not None
    survivors, classes, pat = best[1]
    out = Hypergraph(family.n, sorted(tuple(sorted(e)) for e in survivors), uniform_r=r)
    report = homogeneous_check(out, classes, pat, threshold)
    assert report.homogeneous, "extraction invariant: output must verify"
    return out, classes, pat
