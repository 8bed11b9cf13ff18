"""Exact-rational density bounds.

The central quantity is the limiting copies-per-u-clique density of
{K_u v I_{delta+1}, K_{omega+1}}-free graphs.  It is bracketed by an
exact rational sandwich:

    lower = density of H in the lower-bound graph L = T_omega(a*omega+b),
    upper = N(H with u dominating vertices deleted, T_{omega-u}(delta))
            / C(dom(H), u),

with equality exactly when omega-u divides delta.  Off the divisibility
case only the interval is reported, never a single number: the limit is
not known there.  All densities are ``fractions.Fraction``; equality
flags are decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .graphs import Graph, graph6_encode
from .families import ParamTriple, lower_bound_graph, turan
from .counting import (
    PatternSpec,
    as_pattern,
    count_cliques,
    count_subgraph_copies,
)
from .freeness import ConstraintSet, check_constraints

Density = Fraction


def copy_density(h: Graph | PatternSpec, g: Graph, u: int) -> Fraction:
    """Copies of h per u-clique of g, exact."""
    ku = count_cliques(g, u)
    if ku == 0:
        raise ValueError("graph has no u-cliques; density undefined")
    return Fraction(count_subgraph_copies(h, g), ku)


@dataclass(frozen=True)
class BoundsReport:
    params: ParamTriple
    lower: Fraction
    upper: Fraction
    divisible: bool
    equal: bool
    ratio: Optional[Fraction]  # lower/upper, None when upper == 0
    lb_graph: Graph

    def __post_init__(self) -> None:
        assert self.lower <= self.upper
        if self.divisible:
            assert self.equal
        if self.equal:
            assert self.lower == self.upper


def bounds_report(h: Graph | PatternSpec, params: ParamTriple) -> BoundsReport:
    """Exact lower/upper sandwich on the limiting density for (h, params)."""
    spec = as_pattern(h)
    if spec.dom_count < params.u:
        raise ValueError(
            f"pattern has {spec.dom_count} dominating vertices, need {params.u}"
        )
    lb = lower_bound_graph(params)
    lower = copy_density(spec, lb, params.u)
    reduced = spec.down(params.u)
    upper = Fraction(
        count_subgraph_copies(reduced, turan(params.omega - params.u, params.delta)),
        comb(spec.dom_count, params.u),
    )
    divisible = params.b == 0
    equal = lower == upper
    ratio = None if upper == 0 else lower / upper
    return BoundsReport(params, lower, upper, divisible, equal, ratio, lb)


def turan_threshold_bound(h: Graph) -> int:
    """Certified upper bound 300 * v(H)^9 on the clique-number threshold
    beyond which Turán graphs are exactly extremal for counting H."""
    return 300 * h.n**9


@dataclass(frozen=True)
class EmpiricalGoodness:
    """Outcome of a desk-scale exhaustive check that Turán graphs maximize
    H-counts among K_{omega+1}-free graphs.  A pass is evidence, not proof;
    ``vacuous`` marks the zero-count regime where a pass carries no
    information (the Turán graph hosts no copy of H at the largest size)."""

    passed: bool
    vacuous: bool
    rows: tuple[tuple[int, int, int], ...]  # (n, exhaustive max, Turán count)
    witness: Optional[str] = None  # graph6 of a beating graph on failure


def empirical_turan_goodness(
    h: Graph | PatternSpec, omega: int, n_max: int, cap: int = 8
) -> EmpiricalGoodness:
    """Exhaustively verify max N(H, G) over K_{omega+1}-free G equals the
    Turán count for every n <= n_max."""
    from .search import enumerate_graphs

    if n_max > cap:
        raise ValueError(f"n_max {n_max} exceeds search cap {cap}")
    spec = as_pattern(h)
    rows = []
    passed = True
    witness = None
    cs = ConstraintSet(u=1, delta=None, omega=omega)
    for n in range(1, n_max + 1):
        t_count = count_subgraph_copies(spec, turan(omega, n))
        best = 0
        best_g = None
        for g in enumerate_graphs(n, prune=cs, cap=cap):
            c = count_subgraph_copies(spec, g)
            if c > best:
                best, best_g = c, g
        rows.append((n, best, t_count))
        if best != t_count:
            passed = False
            if witness is None and best_g is not None:
                witness = graph6_encode(best_g)
    vacuous = count_subgraph_copies(spec, turan(omega, n_max)) == 0
    return EmpiricalGoodness(passed, vacuous, tuple(rows), witness)


def ratio_diagnostic(
    h: Graph | PatternSpec, r: int, n: int, u: int
) -> tuple[Fraction, Fraction]:
    """Exact pair (count ratio, telescoped floor):

        N(H, T_r(n-u)) / N(H, T_r(n))   and   prod_i (1 - v(H)/(n-i)).

    The ratio lies in [floor, 1] whenever r is at or above the Turán
    threshold of H; finite stand-in for the limit-equals-1 statements.
    """
    spec = as_pattern(h)
    denom = count_subgraph_copies(spec, turan(r, n))
    if denom == 0:
        raise ValueError("pattern count in T_r(n) is zero; ratio undefined")
    if n - u + 1 <= 0:
        raise ValueError("n - u must be positive")
    num = count_subgraph_copies(spec, turan(r, n - u))
    bound = Fraction(1)
    for i in range(u):
        bound *= Fraction(n - i - spec.pattern.n, n - i)
    return Fraction(num, denom), bound


@dataclass(frozen=True)
class StarProblemBounds:
    """Both sides of the open star-forbidden sandwich; conjectural only,
    the two sides are not claimed to coincide."""

    lower: Fraction
    upper: Fraction


def star_problem_bounds(
    h: Graph | PatternSpec, u: int, delta: int, omega: int
) -> StarProblemBounds:
    spec = as_pattern(h)
    if spec.dom_count < u:
        raise ValueError("pattern has too few dominating vertices")
    if not delta >= omega >= u + 1:
        raise ValueError("need delta >= omega >= u + 1")
    host = turan(omega, delta + delta // (omega - 1))
    lower = copy_density(spec, host, u)
    upper = Fraction(
        count_subgraph_copies(spec.down(u), turan(omega - u, delta - u + 1)),
        comb(spec.dom_count, u),
    )
    return StarProblemBounds(lower, upper)


def freeness_for(params: ParamTriple) -> ConstraintSet:
    return ConstraintSet(u=params.u, delta=params.delta, omega=params.omega)


def verify_lower_bound_freeness(params: ParamTriple) -> bool:
    """The lower-bound graph really is {K_u v I_{delta+1}, K_{omega+1}}-free."""
    return check_constraints(lower_bound_graph(params), freeness_for(params)).passes
