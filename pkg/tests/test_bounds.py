from fractions import Fraction

import pytest

from gturan.graphs import complete_graph, cycle_graph, path_graph
from gturan.families import ParamTriple, complete_split, turan
from gturan.counting import count_subgraph_copies, pattern_spec
from gturan.bounds import (
    bounds_report,
    copy_density,
    empirical_turan_goodness,
    ratio_diagnostic,
    star_problem_bounds,
    turan_threshold_bound,
    verify_lower_bound_freeness,
)

K2 = complete_graph(2)
K3 = complete_graph(3)
K4 = complete_graph(4)
BOOK = complete_split(2, 2)


class TestCopyDensity:
    def test_examples(self):
        assert copy_density(K3, K3, 1) == Fraction(1, 3)
        assert copy_density(K3, turan(4, 6), 1) == 2
        # one triangle subgraph over three edges
        assert copy_density(K3, K3, 2) == Fraction(1, 3)

    def test_zero_clique_count_rejected(self):
        with pytest.raises(ValueError):
            copy_density(K3, cycle_graph(4), 3)


class TestBoundsReport:
    def test_divisible_example(self):
        rep = bounds_report(K3, ParamTriple(1, 6, 4))
        assert rep.lower == rep.upper == 4
        assert rep.divisible and rep.equal
        assert rep.ratio == 1

    def test_non_divisible_example(self):
        rep = bounds_report(K3, ParamTriple(1, 5, 4))
        assert rep.lower == 2
        assert rep.upper == Fraction(8, 3)
        assert not rep.divisible and not rep.equal
        assert rep.ratio == Fraction(3, 4)

    def test_k2_example(self):
        rep = bounds_report(K2, ParamTriple(1, 4, 2))
        assert rep.lower == rep.upper == 2
        assert rep.equal

    def test_zero_counts_stay_consistent(self):
        # triangles never fit in bipartite hosts; both sides collapse to 0
        rep = bounds_report(K3, ParamTriple(1, 4, 2))
        assert rep.lower == rep.upper == 0
        assert rep.equal and rep.ratio is None

    def test_too_few_dominating_vertices(self):
        with pytest.raises(ValueError):
            bounds_report(path_graph(3), ParamTriple(2, 4, 3))

    def test_grid_sandwich_and_divisibility(self):
        for h in (K3, K4, BOOK):
            spec = pattern_spec(h)
            for u in range(1, min(spec.dom_count, 2) + 1):
                for omega in range(u + 1, 6):
                    for delta in range(omega, 12):
                        rep = bounds_report(spec, ParamTriple(u, delta, omega))
                        assert rep.lower <= rep.upper
                        if rep.divisible:
                            assert rep.equal

    def test_monotone_floor_from_shifted_host(self):
        # lower/upper is at least the shifted-host count ratio
        for u in (1, 2):
            for omega in (u + 2, u + 3):
                for delta in range(omega, 14):
                    params = ParamTriple(u, delta, omega)
                    spec = pattern_spec(K3) if u == 1 else pattern_spec(K4)
                    rep = bounds_report(spec, params)
                    reduced = spec.down(u)
                    denom = count_subgraph_copies(reduced, turan(omega - u, delta))
                    if denom == 0 or rep.upper == 0:
                        continue
                    shifted = Fraction(
                        count_subgraph_copies(reduced, turan(omega - u, delta - u)),
                        denom,
                    )
                    assert rep.lower / rep.upper >= shifted

    def test_lower_bound_graph_always_free(self):
        for u in (1, 2):
            for omega in range(u + 1, 6):
                for delta in range(omega, 10):
                    assert verify_lower_bound_freeness(ParamTriple(u, delta, omega))


class TestThresholdBound:
    def test_values(self):
        assert turan_threshold_bound(complete_graph(1)) == 300
        assert turan_threshold_bound(K2) == 153600
        assert turan_threshold_bound(cycle_graph(4)) == 78643200


class TestEmpiricalGoodness:
    def test_triangle_free_case_passes_vacuously(self):
        out = empirical_turan_goodness(K3, 2, 6)
        assert out.passed and out.vacuous

    def test_triangle_with_room_passes(self):
        out = empirical_turan_goodness(K3, 3, 7)
        assert out.passed and not out.vacuous
        assert out.rows[-1] == (7, 12, 12)

    def test_path_at_tiny_omega_is_vacuous(self):
        # with omega=1 every comparison graph is edgeless: the equality
        # 0 = 0 holds for all n, but the run carries no evidence
        out = empirical_turan_goodness(path_graph(3), 1, 4)
        assert out.passed and out.vacuous

    def test_path_at_omega_two(self):
        out = empirical_turan_goodness(path_graph(3), 2, 6)
        assert out.passed and not out.vacuous

    def test_failure_carries_witness(self):
        # stars prefer the star, not the Turán graph, once counts are positive:
        # K_{1,3} in K_3-free graphs on 4 vertices: the star itself has one
        # copy, T_2(4)=C_4 has none... actually C_4 hosts no K_{1,3}? It does
        # not (max degree 2).  So the exhaustive max beats the Turán count.
        star = complete_split(1, 3)
        out = empirical_turan_goodness(star, 2, 4)
        assert not out.passed
        assert out.witness is not None

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            empirical_turan_goodness(K3, 3, 9)


class TestRatioDiagnostic:
    def test_examples(self):
        assert ratio_diagnostic(K3, 3, 6, 1) == (Fraction(1, 2), Fraction(1, 2))
        assert ratio_diagnostic(K2, 2, 4, 1) == (Fraction(1, 2), Fraction(1, 2))
        ratio, floor = ratio_diagnostic(K3, 3, 9, 2)
        assert ratio == Fraction(12, 27)
        assert floor == Fraction(5, 12)
        assert floor <= ratio <= 1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ValueError):
            ratio_diagnostic(K3, 2, 6, 1)

    def test_bracketing_on_grid(self):
        for t in (3, 4):
            h = complete_graph(t)
            for r in range(t, 7):
                for n in range(t + 1, 15):
                    for u in (1, 2):
                        ratio, floor = ratio_diagnostic(h, r, n, u)
                        assert floor <= ratio <= 1


def test_star_problem_bounds_are_reported_not_asserted():
    out = star_problem_bounds(BOOK, 2, 6, 4)
    assert out.lower >= 0 and out.upper >= 0
    # the two sides need not coincide; just confirm both computed exactly
    assert isinstance(out.lower, Fraction) and isinstance(out.upper, Fraction)
