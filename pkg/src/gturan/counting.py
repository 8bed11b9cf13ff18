"""Exact counting of cliques, subgraph copies, rooted copies, and
dominating-vertex structure.

Copies are always counted as subgraphs: a copy of H in G is a pair
(vertex set, edge set) with the edge set contained in G and the pair
isomorphic to H.  Induced counting is deliberately not offered.  The fast
path counts injective edge-preserving embeddings by backtracking over a
connectivity-aware vertex order with bitmask candidate pruning, then
divides by the automorphism count; a slow subset-enumeration oracle lives
in the test tree only.

All counts are Python ints (arbitrary precision); densities elsewhere use
``fractions.Fraction``.  No floating point enters any count or comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .graphs import (
    Graph,
    canonical_code,
    common_neighborhood,
    connected_components,
    delete_vertices,
    induced_subgraph,
    iter_bits,
)


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------


def count_cliques(g: Graph, t: int) -> int:
    """Number of t-vertex cliques; k^0 = 1, k^1 = n, k^2 = edge count."""
    if t < 0:
        raise ValueError("clique size must be nonnegative")
    if t == 0:
        return 1
    if t == 1:
        return g.n
    adj = g.adj

    def rec(cand: int, depth: int) -> int:
        if depth == 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            total += rec(cand & adj[v], depth - 1)
        return total

    return rec(g.vertex_mask, t)


def enumerate_cliques(g: Graph, t: int) -> Iterator[int]:
    """Yield each t-clique once as a vertex mask, in ascending mask order."""
    if t < 1:
        raise ValueError("clique size must be positive")
    adj = g.adj

    def rec(chosen: int, cand: int, depth: int) -> Iterator[int]:
        if depth == 0:
            yield chosen
            return
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            yield from rec(chosen | low, cand & adj[v], depth - 1)

    yield from rec(0, g.vertex_mask, t)


def has_clique(g: Graph, k: int) -> bool:
    """Early-exit decision: does g contain a clique on k vertices?"""
    if k <= 0:
        return True
    if k == 1:
        return g.n > 0
    adj = g.adj

    def rec(cand: int, depth: int) -> bool:
        if depth == 0:
            return True
        while cand:
            if cand.bit_count() < depth:
                return False
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if rec(cand & adj[v], depth - 1):
                return True
        return False

    return rec(g.vertex_mask, k)


def clique_number(g: Graph) -> int:
    """Size of a largest clique, exact branch and bound."""
    best = 0
    adj = g.adj

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            expand(size + 1, cand & adj[v])

    for comp in connected_components(g):
        sub = comp
        expand(0, sub)
    return best


def max_clique_containing(g: Graph, c: int) -> int:
    """Size of a largest clique of G containing the clique ``c``."""
    if not is_clique(g, c):
        raise ValueError("given vertex set is not a clique")
    rest = common_neighborhood(g, c)
    return c.bit_count() + clique_number(induced_subgraph(g, rest))


def is_clique(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if mask & ~g.adj[v] & ~(1 << v):
            return False
    return True


# ---------------------------------------------------------------------------
# embedding engine
# ---------------------------------------------------------------------------


def _search_order(h: Graph) -> tuple[list[int], list[list[int]]]:
    """Pattern vertex order (greedy: most placed neighbours, then degree)
    plus, per position, the earlier positions adjacent in the pattern."""
    n = h.n
    order: list[int] = []
    placed = 0
    for _ in range(n):
        best_v = -1
        best_key = None
        for v in range(n):
            if placed >> v & 1:
                continue
            key = ((h.adj[v] & placed).bit_count(), h.degree(v), -v)
            if best_key is None or key > best_key:
                best_key, best_v = key, v
        order.append(best_v)
        placed |= 1 << best_v
    back = []
    for i, v in enumerate(order):
        back.append([j for j in range(i) if h.has_edge(v, order[j])])
    return order, back


def count_embeddings(h: Graph, g: Graph, induced: bool = False) -> int:
    """Injective edge-preserving maps from h into g.

    With ``induced`` non-edges must also be preserved, which on h = g
    counts automorphisms.
    """
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    order, back = _search_order(h)
    non_back = None
    co_adj = None
    if induced:
        non_back = [
            [j for j in range(i) if not h.has_edge(v, order[j])]
            for i, v in enumerate(order)
        ]
        full = g.vertex_mask
        co_adj = [(full ^ row) & ~(1 << i) for i, row in enumerate(g.adj)]
    images = [0] * h.n
    gmask = g.vertex_mask
    adj = g.adj

    def rec(i: int, used: int) -> int:
        if i == h.n:
            return 1
        cand = gmask & ~used
        for j in back[i]:
            cand &= adj[images[j]]
        if induced:
            for j in non_back[i]:  # type: ignore[index]
                cand &= co_adj[images[j]]  # type: ignore[index]
        total = 0
        for v in iter_bits(cand):
            images[i] = v
            total += rec(i + 1, used | (1 << v))
        return total

    return rec(0, 0)


@lru_cache(maxsize=4096)
def automorphism_count(h: Graph) -> int:
    """Order of the automorphism group, exact."""
    return count_embeddings(h, h, induced=True)


def _is_complete(h: Graph) -> bool:
    return all(row.bit_count() == h.n - 1 for row in h.adj)


# ---------------------------------------------------------------------------
# pattern specification
# ---------------------------------------------------------------------------


def dominating_vertices(h: Graph) -> int:
    """Bitmask of vertices adjacent to all other vertices."""
    return sum(1 << i for i, row in enumerate(h.adj) if row.bit_count() == h.n - 1)


def delete_dominating(h: Graph, u: int) -> Graph:
    """Delete u dominating vertices (the lexicographically least ones).

    The result is independent of the choice; ``pattern_spec`` asserts
    this over every choice via canonical codes.
    """
    dom = dominating_vertices(h)
    if u < 0 or dom.bit_count() < u:
        raise ValueError(f"graph has {dom.bit_count()} dominating vertices, need {u}")
    drop = 0
    for v in iter_bits(dom):
        if u == 0:
            break
        drop |= 1 << v
        u -= 1
    return delete_vertices(h, drop)


@dataclass(frozen=True)
class PatternSpec:
    """A pattern graph with its dominating structure precomputed."""

    pattern: Graph
    dom_mask: int
    dom_count: int
    aut_count: int
    derived: tuple[Graph, ...]  # derived[u-1] = pattern with u dominating vertices deleted

    def down(self, u: int) -> Graph:
        if u == 0:
            return self.pattern
        if not 1 <= u <= self.dom_count:
            raise ValueError(f"u={u} exceeds dominating count {self.dom_count}")
        return self.derived[u - 1]


@lru_cache(maxsize=1024)
def pattern_spec(h: Graph) -> PatternSpec:
    from itertools import combinations

    dom = dominating_vertices(h)
    dcount = dom.bit_count()
    dom_vertices = list(iter_bits(dom))
    # the dominating set must induce a clique
    assert is_clique(h, dom)
    derived = []
    for u in range(1, dcount + 1):
        choices = [
            delete_vertices(h, sum(1 << v for v in pick))
            for pick in combinations(dom_vertices, u)
        ]
        codes = {canonical_code(c) for c in choices}
        if len(codes) != 1:
            raise AssertionError("dominating-vertex deletion is choice-dependent")
        derived.append(delete_dominating(h, u))
    return PatternSpec(h, dom, dcount, automorphism_count(h), tuple(derived))


def as_pattern(h: Graph | PatternSpec) -> PatternSpec:
    return h if isinstance(h, PatternSpec) else pattern_spec(h)


# ---------------------------------------------------------------------------
# copy counting
# ---------------------------------------------------------------------------


def count_subgraph_copies(h: Graph | PatternSpec, g: Graph) -> int:
    """Number of subgraphs of g isomorphic to h (vertex+edge sets).

    Equals the injective edge-preserving map count divided by |Aut(h)|;
    complete patterns short-circuit to the clique counter.
    """
    spec = as_pattern(h)
    p = spec.pattern
    if _is_complete(p):
        return count_cliques(g, p.n)
    total = count_embeddings(p, g)
    copies, rem = divmod(total, spec.aut_count)
    assert rem == 0, "embedding count not divisible by automorphism count"
    return copies


def enumerate_copies(
    h: Graph | PatternSpec, g: Graph
) -> list[tuple[int, frozenset[tuple[int, int]]]]:
    """All copies of h in g as (vertex mask, edge set) pairs.

    Deterministic order: sorted by vertex mask, then edge set.  Each copy
    is found |Aut(h)| times by the embedding search; duplicates collapse.
    """
    spec = as_pattern(h)
    p = spec.pattern
    if _is_complete(p) and p.n >= 1:
        out = []
        for mask in enumerate_cliques(g, p.n):
            vs = list(iter_bits(mask))
            edges = frozenset(
                (vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))
            )
            out.append((mask, edges))
        return out
    if p.n == 0:
        return [(0, frozenset())]
    order, back = _search_order(p)
    images = [0] * p.n
    found: set[tuple[int, frozenset[tuple[int, int]]]] = set()
    gmask = g.vertex_mask
    adj = g.adj

    def rec(i: int, used: int) -> None:
        if i == p.n:
            mask = used
            edges = []
            for a in range(p.n):
                for b in range(a + 1, p.n):
                    if p.has_edge(order[a], order[b]):
                        x, y = images[a], images[b]
                        edges.append((x, y) if x < y else (y, x))
            found.add((mask, frozenset(edges)))
            return
        cand = gmask & ~used
        for j in back[i]:
            cand &= adj[images[j]]
        for v in iter_bits(cand):
            images[i] = v
            rec(i + 1, used | (1 << v))

    rec(0, 0)
    return sorted(found, key=lambda c: (c[0], sorted(c[1])))


def count_copies_rooted(h: Graph | PatternSpec, g: Graph, c: int, u: int) -> int:
    """Copies of h in g in which every vertex of the u-clique c dominates.

    Computed through the exact identity with the derived pattern: the
    copies through c correspond bijectively to copies of the u-fold
    dominating-deletion of h inside the common neighbourhood of c.
    """
    spec = as_pattern(h)
    if c.bit_count() != u:
        raise ValueError("root set size does not match u")
    if u > spec.dom_count:
        raise ValueError(f"pattern has {spec.dom_count} dominating vertices, need {u}")
    if not is_clique(g, c):
        raise ValueError("root set is not a clique")
    inner = induced_subgraph(g, common_neighborhood(g, c))
    return count_subgraph_copies(spec.down(u), inner)


def copies_through(h: Graph | PatternSpec, g: Graph, s: int) -> int:
    """Copies of h in g containing at least one vertex of s."""
    if s & ~g.vertex_mask:
        raise ValueError("vertex set not contained in the graph")
    total = count_subgraph_copies(h, g)
    if s == 0:
        return 0
    return total - count_subgraph_copies(h, delete_vertices(g, s))


def turan_clique_count(r: int, n: int, s: int) -> int:
    """Closed form for k^s(T_r(n)), with n = a*r + b and 0 <= b < r:

        sum_i C(b, i) * C(r-b, s-i) * (a+1)^i * a^(s-i)

    (choose i parts of size a+1 and s-i of size a, one vertex from each).
    """
    if r < 1:
        raise ValueError("part count must be at least 1")
    if s < 0:
        raise ValueError("clique size must be nonnegative")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    a, b = divmod(n, r)
    total = 0
    for i in range(min(b, s) + 1):
        total += comb(b, i) * comb(r - b, s - i) * (a + 1) ** i * a ** (s - i)
    return total


