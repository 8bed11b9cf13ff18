"""Exhaustive small-graph enumeration and brute-force extremal search.

One representative per isomorphism class is generated level by level:
every n-vertex representative is extended by a new vertex with each of
the 2^n possible neighbourhoods, children are deduplicated by canonical
code.  Any induced-hereditary pruning predicate may be applied during
generation (every free graph on n+1 vertices arises from a free graph on
n vertices by deleting a vertex), which is what makes the constrained
searches cheap.  Correctness of the generator is cross-checked against
labeled-graph deduplication for n <= 6 in the test suite.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

from .graphs import Graph, add_vertex, canonical_code, graph6_encode, is_connected
from .counting import (
    PatternSpec,
    as_pattern,
    count_cliques,
    count_embeddings,
    count_subgraph_copies,
)
from .freeness import ConstraintSet, check_constraints, passes_constraints

DEFAULT_ENUM_CAP = 8
MAX_ENUM_CAP = 9


class CompositionError(ValueError):
    """Target u-clique count not reachable from the given components."""


@dataclass(frozen=True)
class SearchOutcome:
    objective: int
    argmax: tuple[str, ...]  # graph6, all optima up to isomorphism
    search_space_size: int
    constraints: ConstraintSet
    fixed: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()


def _levels(
    n_max: int, keep: Optional[Callable[[Graph], bool]] = None
) -> Iterator[tuple[int, list[Graph]]]:
    """Yield (n, representatives) for n = 0..n_max under a hereditary keep."""
    reps = [Graph(0, ())]
    yield 0, reps
    for k in range(n_max):
        children: dict[bytes, Graph] = {}
        for g in reps:
            for mask in range(1 << k):
                child = add_vertex(g, mask)
                if keep is not None and not keep(child):
                    continue
                code = canonical_code(child)
                if code not in children:
                    children[code] = child
        reps = [children[c] for c in sorted(children)]
        yield k + 1, reps


def _keep_from_constraints(cs: Optional[ConstraintSet]) -> Optional[Callable[[Graph], bool]]:
    if cs is None:
        return None

    def keep(g: Graph) -> bool:
        return passes_constraints(g, cs)

    return keep


def enumerate_graphs(
    n: int, prune: Optional[ConstraintSet] = None, cap: int = DEFAULT_ENUM_CAP
) -> Iterator[Graph]:
    """One representative per isomorphism class on exactly n vertices.

    ``prune`` restricts to graphs passing the freeness constraints (a
    hereditary property, applied during generation).  The default cap is
    8; 9 is allowed but warned about (274668 classes unpruned).
    """
    if cap > MAX_ENUM_CAP:
        raise ValueError(f"enumeration cap {cap} exceeds hard limit {MAX_ENUM_CAP}")
    if n > cap:
        raise ValueError(f"n={n} exceeds enumeration cap {cap}")
    if n > DEFAULT_ENUM_CAP:
        warnings.warn(f"enumerating all graphs on {n} vertices; this is slow")
    for level, reps in _levels(n, _keep_from_constraints(prune)):
        if level == n:
            yield from reps
            return


@lru_cache(maxsize=4)
def nonisomorphic_graphs_upto(n_max: int) -> tuple[tuple[Graph, ...], ...]:
    """Cached unpruned representatives for every n <= n_max."""
    out = []
    for _, reps in _levels(n_max):
        out.append(tuple(reps))
    return tuple(out)


def _verify_outcome(
    outcome_graphs: Sequence[Graph], h: PatternSpec, cs: ConstraintSet, value: int
) -> None:
    """Re-verify every argmax: constraints pass and an independent recount
    (raw embedding count over the automorphism count) agrees."""
    aut = h.aut_count
    for g in outcome_graphs:
        assert check_constraints(g, cs).passes
        recount, rem = divmod(count_embeddings(h.pattern, g), aut)
        assert rem == 0 and recount == value


def brute_extremal(
    n: int, h: Graph | PatternSpec, cs: ConstraintSet, cap: int = DEFAULT_ENUM_CAP
) -> SearchOutcome:
    """Exact max of N(H, G) over free graphs on exactly n vertices."""
    spec = as_pattern(h)
    best = 0
    argmax: list[Graph] = []
    examined = 0
    for g in enumerate_graphs(n, prune=cs, cap=cap):
        examined += 1
        val = count_subgraph_copies(spec, g)
        if val > best:
            best, argmax = val, [g]
        elif val == best:
            argmax.append(g)
    _verify_outcome(argmax, spec, cs, best)
    return SearchOutcome(
        best,
        tuple(sorted(graph6_encode(g) for g in argmax)),
        examined,
        cs,
        {"n": n},
    )


def brute_extremal_u(
    p: int,
    u: int,
    h: Graph | PatternSpec,
    cs: ConstraintSet,
    n_cap: Optional[int] = None,
    cap: int = DEFAULT_ENUM_CAP,
) -> SearchOutcome:
    """Exact max of N(H, G) over free graphs with k^u(G) = p, n <= n_cap.

    For u = 1 the clique count pins the vertex count, so this reduces to
    ``brute_extremal``.  For u >= 2 a graph with p u-cliques and no
    isolated vertices has at most u*p vertices, and isolated vertices
    change neither k^u nor N(H, .) when H contains K_u, so a finite
    vertex cap loses nothing at this scale; the reasoning is recorded in
    the outcome notes.
    """
    if u < 1:
        raise ValueError("u must be at least 1")
    spec = as_pattern(h)
    notes: list[str] = []
    if u == 1:
        if n_cap is not None and n_cap != p:
            raise ValueError("for u=1 the vertex count is fixed at p")
        inner = brute_extremal(p, spec, cs, cap=cap)
        return SearchOutcome(
            inner.objective,
            inner.argmax,
            inner.search_space_size,
            cs,
            {"u": u, "p": p},
            inner.notes,
        )
    if n_cap is None:
        n_cap = min(u * p, DEFAULT_ENUM_CAP) if p else DEFAULT_ENUM_CAP
    if n_cap > cap:
        raise ValueError(f"n_cap {n_cap} exceeds enumeration cap {cap}")
    notes.append(
        f"vertex cap {n_cap}: a graph with {p} cliques of size {u} and no "
        f"isolated vertices has at most {u * p} vertices, and isolated "
        f"vertices change neither the clique count nor the copy count"
    )
    base_keep = _keep_from_constraints(cs)

    def keep(g: Graph) -> bool:
        if count_cliques(g, u) > p:
            return False
        return base_keep(g) if base_keep else True

    best = 0
    argmax: list[Graph] = []
    examined = 0
    for level, reps in _levels(n_cap, keep):
        if level == 0:
            continue
        for g in reps:
            if count_cliques(g, u) != p:
                continue
            examined += 1
            val = count_subgraph_copies(spec, g)
            if val > best:
                best, argmax = val, [g]
            elif val == best:
                argmax.append(g)
    # padded variants (extra isolated vertices) are distinct isomorphism
    # classes and are reported as separate optima
    _verify_outcome(argmax, spec, cs, best)
    return SearchOutcome(
        best,
        tuple(sorted(graph6_encode(g) for g in argmax)),
        examined,
        cs,
        {"u": u, "p": p},
        tuple(notes),
    )


def best_composition(
    components: Sequence[Graph], h: Graph | PatternSpec, p: int, u: int
) -> Graph:
    """Disjoint multiset of the given connected components with total
    u-clique count exactly p maximizing the total copy count, by dynamic
    programming over p (unbounded knapsack).
    """
    spec = as_pattern(h)
    if p < 0:
        raise ValueError("p must be nonnegative")
    items = []
    for comp in components:
        if not is_connected(comp):
            raise ValueError("components must be connected")
        w = count_cliques(comp, u)
        v = count_subgraph_copies(spec, comp)
        if w == 0:
            continue  # cannot contribute u-cliques; useless as filler
        items.append((comp, w, v))
    if not any(w > 0 for _, w, _ in items):
        raise CompositionError("no component contains a u-clique")
    NEG = -1
    value = [NEG] * (p + 1)
    choice = [-1] * (p + 1)
    value[0] = 0
    for j in range(1, p + 1):
        for idx, (_, w, v) in enumerate(items):
            if w <= j and value[j - w] != NEG and value[j - w] + v > value[j]:
                value[j] = value[j - w] + v
                choice[j] = idx
    if value[p] == NEG:
        raise CompositionError(f"no multiset of components reaches k^u = {p}")
    counts = [0] * len(items)
    j = p
    while j > 0:
        idx = choice[j]
        counts[idx] += 1
        j -= items[idx][1]
    from .graphs import disjoint_union

    return disjoint_union(
        [(items[i][0], counts[i]) for i in range(len(items)) if counts[i]]
    )
