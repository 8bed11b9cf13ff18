"""Forbidden-subgraph checks: cliques, stars, and complete split graphs.

``check_constraints`` is the fast path used everywhere: a graph is
(u, delta, omega)-free iff its clique number is at most omega and every
u-clique has at most delta common neighbours.  For u=1 the second half is
exactly "maximum degree <= delta" (no K_{1,delta+1}); for u=2 it forbids
K_{1,1,delta+1}.  The generic subgraph search exists as a cross-check and
for arbitrary forbidden graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph, common_neighborhood, iter_bits, set_of
from .counting import (
    clique_number,
    count_embeddings,
    enumerate_cliques,
    has_clique,
    _search_order,
)


@dataclass(frozen=True)
class ConstraintSet:
    """Freeness parameters; ``delta`` / ``omega`` may be None (unconstrained)."""

    u: int = 1
    delta: Optional[int] = None
    omega: Optional[int] = None

    def __post_init__(self) -> None:
        if self.u < 1:
            raise ValueError("u must be at least 1")
        if self.delta is not None and self.delta < 0:
            raise ValueError("delta must be nonnegative")
        if self.omega is not None and self.omega < 1:
            raise ValueError("omega must be at least 1")


@dataclass(frozen=True)
class Violation:
    kind: str  # "clique" or "split"
    vertices: int  # witness vertex mask

    def vertex_list(self) -> tuple[int, ...]:
        return set_of(self.vertices)


@dataclass(frozen=True)
class FreenessReport:
    clique_number: int
    max_degree: int
    max_common_neighborhood_by_u: dict[int, int] = field(default_factory=dict)
    violations: tuple[Violation, ...] = ()

    @property
    def passes(self) -> bool:
        return not self.violations


def contains_subgraph(g: Graph, f: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Decide whether f is a (not necessarily induced) subgraph of g.

    Returns the decision plus an embedding witness mapping vertex i of f
    to witness[i], or None.
    """
    if f.n == 0:
        return True, ()
    if f.n > g.n or f.edge_count > g.edge_count:
        return False, None
    order, back = _search_order(f)
    images = [0] * f.n
    gmask = g.vertex_mask
    adj = g.adj

    def rec(i: int, used: int) -> bool:
        if i == f.n:
            return True
        cand = gmask & ~used
        for j in back[i]:
            cand &= adj[images[j]]
        for v in iter_bits(cand):
            images[i] = v
            if rec(i + 1, used | (1 << v)):
                return True
        return False

    if rec(0, 0):
        witness = [0] * f.n
        for pos, v in enumerate(order):
            witness[v] = images[pos]
        return True, tuple(witness)
    return False, None


def passes_constraints(g: Graph, cs: ConstraintSet) -> bool:
    """Decision-only fast path (no report fields): used as the pruning
    predicate inside enumeration loops."""
    if cs.omega is not None and has_clique(g, cs.omega + 1):
        return False
    if cs.delta is not None:
        if cs.u == 1:
            return all(row.bit_count() <= cs.delta for row in g.adj)
        for c in enumerate_cliques(g, cs.u):
            if common_neighborhood(g, c).bit_count() > cs.delta:
                return False
    return True


def check_constraints(g: Graph, cs: ConstraintSet) -> FreenessReport:
    """Freeness report for the family {K_u v I_{delta+1}, K_{omega+1}}.

    Violation witnesses are deterministic: the lexicographically least
    (omega+1)-clique, and the least u-clique with an oversized common
    neighbourhood together with its delta+1 least common neighbours.
    """
    omega_g = clique_number(g)
    max_deg = max((g.degree(v) for v in range(g.n)), default=0)
    by_u: dict[int, int] = {}
    violations: list[Violation] = []

    for uu in range(1, cs.u + 1):
        best = 0
        for c in enumerate_cliques(g, uu):
            best = max(best, common_neighborhood(g, c).bit_count())
        by_u[uu] = best

    if cs.omega is not None and omega_g > cs.omega:
        witness = next(enumerate_cliques(g, cs.omega + 1))
        violations.append(Violation("clique", witness))

    if cs.delta is not None:
        for c in enumerate_cliques(g, cs.u):
            nb = common_neighborhood(g, c)
            if nb.bit_count() > cs.delta:
                extra = 0
                for v in iter_bits(nb):
                    extra |= 1 << v
                    if extra.bit_count() == cs.delta + 1:
                        break
                violations.append(Violation("split", c | extra))
                break

    return FreenessReport(omega_g, max_deg, by_u, tuple(violations))


def count_forbidden_embeddings(g: Graph, f: Graph) -> int:
    """Cross-check helper: raw embedding count of a forbidden graph."""
    return count_embeddings(f, g)
