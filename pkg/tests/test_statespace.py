"""First-order systems: pencil construction, connectivity criterion, generators."""

import random

import pytest

from structctrl import (
    CONTROLLABLE,
    UNCONTROLLABLE,
    PolyPattern,
    StateSpacePattern,
    analyze,
    analyze_statespace,
    build_graph,
    connected_components,
    controllability_pencil,
    controller_canonical,
    gilbert_form,
    kalman_controllable,
    remove_redundant_edges,
    siso_interconnection,
)

from fixture_patterns import chain_ss, integrator_ss, random_statespace, relay_ss, shared_drive_ss

SEEDS = (0, 1, 2, 3, 4)


class TestPencil:
    def test_shared_drive(self):
        pencil = controllability_pencil(shared_drive_ss())
        assert pencil == PolyPattern(
            3, 4, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (0, 1): 0, (2, 1): 0, (1, 3): 0}
        )

    def test_integrator(self):
        assert controllability_pencil(integrator_ss()) == PolyPattern(1, 2, {(0, 0): 1, (0, 1): 0})

    def test_relay(self):
        pencil = controllability_pencil(relay_ss())
        assert pencil == PolyPattern(
            3, 4, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (0, 1): 0, (2, 0): 0, (1, 3): 0}
        )

    def test_diagonal_a_entries_fold_into_derivative_term(self):
        ss = StateSpacePattern(2, 1, frozenset({(0, 0), (0, 1)}), frozenset({(1, 0)}))
        pencil = controllability_pencil(ss)
        assert pencil.entries[(0, 0)] == 1
        assert pencil.entries[(0, 1)] == 0

    def test_no_inputs(self):
        ss = StateSpacePattern(2, 0, frozenset({(0, 1)}), frozenset())
        assert controllability_pencil(ss).cols == 2


class TestAnalyzeStatespace:
    def test_relay_controllable(self):
        rep = analyze_statespace(relay_ss())
        assert rep.base.verdict == CONTROLLABLE
        assert rep.state_connectivity == (True, True, True)
        assert rep.base.redundant_edges == ()

    def test_chain_controllable(self):
        rep = analyze_statespace(chain_ss())
        assert rep.base.verdict == CONTROLLABLE
        assert rep.state_connectivity == (True, True, True)

    def test_detached_state(self):
        ss = StateSpacePattern(2, 1, frozenset(), frozenset({(0, 0)}))
        rep = analyze_statespace(ss)
        assert rep.base.verdict == UNCONTROLLABLE
        assert rep.state_connectivity == (True, False)
        comp = rep.base.components[rep.base.witness.component]
        assert comp.rows == (1,) and comp.cols == (1,)
        assert rep.base.witness.weight == 1  # the derivative (parallel) edge

    def test_no_inputs_uncontrollable(self):
        ss = StateSpacePattern(2, 0, frozenset({(0, 1), (1, 0)}), frozenset())
        rep = analyze_statespace(ss)
        assert rep.base.verdict == UNCONTROLLABLE
        assert rep.state_connectivity == (False, False)

    def test_verdict_iff_all_states_connected(self):
        rng = random.Random(31)
        for _ in range(120):
            rep = analyze_statespace(random_statespace(rng))
            assert rep.controllable == all(rep.state_connectivity)


class TestGenerators:
    def test_controller_canonical_shape(self):
        ss = controller_canonical(3)
        assert ss.a_entries == frozenset({(0, 1), (1, 2), (2, 0), (2, 1), (2, 2)})
        assert ss.b_entries == frozenset({(2, 0)})

    def test_controller_canonical_order_one(self):
        ss = controller_canonical(1)
        assert ss.a_entries == frozenset({(0, 0)})
        assert ss.b_entries == frozenset({(0, 0)})

    def test_controller_canonical_analysis(self):
        rep = analyze_statespace(controller_canonical(2))
        assert rep.base.verdict == CONTROLLABLE
        assert rep.base.redundant_edges == ()

    def test_controller_canonical_rejects_zero(self):
        with pytest.raises(ValueError):
            controller_canonical(0)

    def test_gilbert_shape(self):
        ss = gilbert_form(3)
        assert ss.a_entries == frozenset({(0, 0), (1, 1), (2, 2), (0, 1)})
        assert ss.b_entries == frozenset({(1, 0)})

    def test_gilbert_three_states_uncontrollable(self):
        # state 3 has no path to the input: its component is the lone pair
        # (equation 3, state 3) joined by the weight-1 derivative edge
        rep = analyze_statespace(gilbert_form(3))
        assert rep.base.verdict == UNCONTROLLABLE
        assert rep.state_connectivity == (True, True, False)
        assert kalman_controllable(gilbert_form(3), SEEDS) is False

    def test_gilbert_two_states_controllable(self):
        ss = gilbert_form(2)
        assert ss.a_entries == frozenset({(0, 0), (1, 1), (0, 1)})
        rep = analyze_statespace(ss)
        assert rep.base.verdict == CONTROLLABLE
        assert kalman_controllable(ss, SEEDS) is True

    def test_gilbert_rejects_small(self):
        with pytest.raises(ValueError):
            gilbert_form(1)


class TestInterconnections:
    def test_series_shape(self):
        assert siso_interconnection("series", 2, 3) == PolyPattern(
            2, 3, {(0, 0): 1, (0, 1): 2, (1, 1): 2, (1, 2): 3}
        )

    def test_feedback_shape(self):
        assert siso_interconnection("feedback", 1, 1) == PolyPattern(
            3, 4, {(0, 1): 0, (0, 2): 0, (0, 3): 0, (1, 0): 1, (1, 1): 0, (2, 0): 0, (2, 2): 1}
        )

    def test_parallel_shape(self):
        p = siso_interconnection("parallel", 2, 2)
        assert p.rows == 3 and p.cols == 4
        assert p.entries[(0, 0)] == 2 and p.entries[(0, 2)] == 1
        assert p.entries[(2, 3)] == 0

    @pytest.mark.parametrize("kind", ["series", "parallel", "feedback"])
    @pytest.mark.parametrize("orders", [(1, 1), (2, 3), (4, 2)])
    def test_always_controllable_no_redundancy(self, kind, orders):
        report = analyze(siso_interconnection(kind, *orders))
        assert report.verdict == CONTROLLABLE
        assert report.redundant_edges == ()

    def test_bad_kind(self):
        with pytest.raises(ValueError, match="kind"):
            siso_interconnection("cascade", 1, 1)

    def test_bad_orders(self):
        with pytest.raises(ValueError):
            siso_interconnection("series", 0, 1)


class TestStructuralProperties:
    def test_parallel_edges_survive_reduction(self):
        rng = random.Random(55)
        for _ in range(80):
            ss = random_statespace(rng)
            rg = remove_redundant_edges(build_graph(controllability_pencil(ss)))
            for i in range(ss.n):
                assert rg.graph.has_edge(i, i), "derivative edge was removed"

    def test_component_input_count(self):
        # per component of the reduced pencil graph, the column surplus
        # equals the number of input vertices it contains
        rng = random.Random(56)
        for _ in range(80):
            ss = random_statespace(rng)
            rg = remove_redundant_edges(build_graph(controllability_pencil(ss)))
            for comp in connected_components(rg):
                inputs = sum(1 for c in comp.c_vertices if c >= ss.n)
                assert len(comp.c_vertices) - len(comp.r_vertices) == inputs
