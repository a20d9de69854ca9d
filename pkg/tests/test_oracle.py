"""The naive route must agree with the fast route everywhere it is defined."""

import helpers
from groupoid_spectrum.corpus import enumerate_validated_simple, random_corpus
from groupoid_spectrum.digraph import entry_free_cycles, reach_closure
from groupoid_spectrum.oracle import (
    enumerate_eventual_paths,
    naive_entries,
    naive_reach_sets,
    naive_shift_classes,
    naive_simple_cycles,
    oracle_suite,
)

FIXTURES = [
    helpers.graph_single_loop(),
    helpers.graph_two_loops_funnel(),
    helpers.graph_loop_with_entry(),
    helpers.graph_three_cycle(),
    helpers.graph_common_ancestor(),
]


def sample():
    yield from enumerate_validated_simple(3, 9)
    yield from random_corpus(120, seed=23, max_vertices=6)


class TestNaivePieces:
    def test_cycles_match_kernel(self):
        for g in list(sample()) + FIXTURES:
            fast = {c.edge_ids() for c in entry_free_cycles(g).cycles}
            assert naive_simple_cycles(g) == fast

    def test_entries_match_kernel(self):
        for g in list(sample()) + FIXTURES:
            fast = {(c.edge_ids(), e.id) for c, e in entry_free_cycles(g).entries}
            assert naive_entries(g) == fast

    def test_reach_matches_both_routes(self):
        for g in list(sample()) + FIXTURES:
            naive = naive_reach_sets(g)
            brute = helpers.brute_reach(g)
            closure = reach_closure(g)
            for v in g.vertices:
                assert naive[v] == brute[v] == frozenset(closure.reach_set(v))


class TestPathEnumeration:
    def test_funnel_paths(self):
        paths = enumerate_eventual_paths(helpers.graph_two_loops_funnel(), 3)
        blobs = sorted((p.to_json()["prefix"], p.to_json()["cycle"]) for p in paths)
        assert blobs == [([], ["La"]), ([], ["Lb"]), (["f"], ["La"]), (["g"], ["Lb"])]

    def test_funnel_shift_classes(self):
        paths = enumerate_eventual_paths(helpers.graph_two_loops_funnel(), 3)
        classes = naive_shift_classes(paths)
        assert sorted(len(cls) for cls in classes) == [2, 2]

    def test_three_cycle_rotations_collapse(self):
        paths = enumerate_eventual_paths(helpers.graph_three_cycle(), 0)
        assert len(paths) == 3  # one presentation per rotation
        assert len(naive_shift_classes(paths)) == 1

    def test_prefix_budget_is_respected(self):
        for budget in range(4):
            paths = enumerate_eventual_paths(helpers.graph_two_loops_funnel(), budget)
            assert all(len(p.prefix) <= budget for p in paths)


class TestSuite:
    def test_fixture_agreement(self):
        for g in FIXTURES:
            report = oracle_suite(g, max_prefix=3)
            assert report.all_agree, report.details

    def test_funnel_details(self):
        report = oracle_suite(helpers.graph_two_loops_funnel(), max_prefix=3)
        assert report.details["paths_enumerated"] == 4
        assert report.details["shift_classes"] == 2
        assert report.orbit_count_agrees
        assert report.condition_b_agrees

    def test_entry_graph_skips_path_stage(self):
        report = oracle_suite(helpers.graph_loop_with_entry(), max_prefix=3)
        assert report.condition_a_agrees and report.entries_agree
        assert report.orbit_count_agrees is None
        assert report.condition_b_agrees is None

    def test_sample_agreement_at_increasing_budgets(self):
        for g in sample():
            for budget in (0, 2):
                report = oracle_suite(g, max_prefix=budget)
                assert report.all_agree, (g, budget, report.details)
