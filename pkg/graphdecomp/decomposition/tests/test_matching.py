from itertools import combinations

import networkx as nx
from django.test import SimpleTestCase, tag
from hypothesis import given, settings

from ...graph.enumeration import all_graphs
from ...graph.exceptions import BudgetExceeded, ContractViolation, GraphDomainError
from ...graph.tests import TestGraphMixin
from ...graph.tests.strategies import graphs
from ...graph.undirected import UndirectedGraph
from ...graph.vertexset import VertexSet
from ..base import ARC_SEED, CONNECTED_SEED, INTERVAL, Decomposition
from ..matching import (
    Matching,
    arc_seed_decomposition,
    component_seed,
    connected_seed_decomposition,
    decomposition_from_matching,
    greatest_matching,
    is_maximal,
    matching_from_decomposition,
    maximal_matchings,
)


def _maximal_matchings_by_subsets(graph):
    """Every maximal matching, by testing every subset of edges."""
    edges = graph.sorted_edges()
    result = set()
    for size in range(len(edges) + 1):
        for chosen in combinations(edges, size):
            vertices = [v for edge in chosen for v in edge]
            if len(vertices) != len(set(vertices)):
                continue
            if all(a in vertices or b in vertices for a, b in edges):
                result.add(frozenset(chosen))
    return result


def _check_correspondence(testcase, g):
    expected = _maximal_matchings_by_subsets(g)
    found = list(maximal_matchings(g))
    testcase.assertEqual({m.edges for m in found}, expected)
    for matching in found:
        d = decomposition_from_matching(g, matching)
        testcase.assertTrue(g.is_completely_disconnected(d.leftover))
        testcase.assertTrue(g.is_completely_disconnected(d.boundary()))
        testcase.assertEqual(matching_from_decomposition(d), matching)
    d = arc_seed_decomposition(g).validate()
    testcase.assertTrue(is_maximal(g, matching_from_decomposition(d))[0])


class TestMatching(TestGraphMixin, SimpleTestCase):
    def test_matching_validation(self):
        with self.assertRaises(GraphDomainError):
            Matching([(0, 1), (1, 2)])
        with self.assertRaises(GraphDomainError):
            Matching([(1, 1)])
        self.assertEqual(Matching([(1, 0), (0, 1)]).edges, {(0, 1)})
        with self.assertRaises(GraphDomainError):
            Matching.for_graph(self._p4(), [("a", "c")])

    def test_connected_seed_k2(self):
        d = connected_seed_decomposition(self._path_graph(2)).validate()
        self.assertEqual(d.kind, CONNECTED_SEED)
        self.assertEqual(d.seeds, (VertexSet([0, 1]),))
        self.assertEqual(d.leftover, VertexSet())

    def test_connected_seed_star(self):
        g = self._star(3)
        d = connected_seed_decomposition(g).validate()
        self.assertEqual(len(d.seeds), 1)
        self.assertIn(0, d.seeds[0])
        self.assertEqual(d.components[0], g.vertices())

    def test_connected_seed_single_vertex(self):
        g = UndirectedGraph(1)
        d = connected_seed_decomposition(g).validate()
        self.assertEqual(d.seeds, ())
        self.assertEqual(d.leftover, VertexSet([0]))

    def test_connected_seed_component_strategy(self):
        g = UndirectedGraph(5, [(0, 1), (1, 2), (3, 4)])
        d = connected_seed_decomposition(g, component_seed).validate()
        self.assertEqual(d.seeds, (VertexSet([0, 1, 2]), VertexSet([3, 4])))

    def test_disconnected_graph(self):
        g = UndirectedGraph(6, [(4, 5), (0, 1), (1, 2)])
        d = connected_seed_decomposition(g).validate()
        self.assertEqual(d.partition(), {frozenset("012"), frozenset("45")})
        self.assertEqual(d.leftover, VertexSet([3]))

    def test_arc_seed_p4(self):
        g = self._p4()
        d = arc_seed_decomposition(g).validate()
        self.assertEqual(d.kind, ARC_SEED)
        self.assertEqual(d.partition(), {frozenset("ab"), frozenset("cd")})
        self.assertEqual(d.leftover, VertexSet())

    def test_arc_seed_p4_preferred(self):
        g = self._p4()
        d = arc_seed_decomposition(g, preferred=[("b", "c")]).validate()
        self.assertEqual(d.partition(), {frozenset("abcd")})
        with self.assertRaises(GraphDomainError):
            arc_seed_decomposition(g, preferred=[("a", "c")])

    def test_arc_seed_triangle(self):
        g = self._complete_graph(3)
        d = arc_seed_decomposition(g).validate()
        self.assertEqual(d.seeds, (VertexSet([0, 1]),))
        self.assertEqual(d.components, (g.vertices(),))

    def test_decomposition_from_matching(self):
        g = self._p4()
        one = Matching.for_graph(g, [("b", "c")])
        decomposition = decomposition_from_matching(g, one)
        self.assertEqual(decomposition.partition(), {frozenset("abcd")})
        two = Matching.for_graph(g, [("a", "b"), ("c", "d")])
        self.assertEqual(len(decomposition_from_matching(g, two)), 2)

    def test_decomposition_from_non_maximal_matching(self):
        g = self._p4()
        with self.assertRaises(ContractViolation) as context:
            decomposition_from_matching(g, Matching.for_graph(g, [("a", "b")]))
        self.assertEqual(context.exception.witness, (2, 3))

    def test_matching_from_decomposition(self):
        g = self._path_graph(2)
        d = arc_seed_decomposition(g)
        self.assertEqual(matching_from_decomposition(d), Matching([(0, 1)]))
        interval = Decomposition(g, INTERVAL, [], [])
        with self.assertRaises(GraphDomainError):
            matching_from_decomposition(interval)

    def test_is_maximal(self):
        g = self._p4()
        self.assertEqual(is_maximal(g, Matching([(0, 1), (2, 3)])), (True, None))
        self.assertEqual(is_maximal(g, Matching()), (False, (0, 1)))
        self.assertEqual(is_maximal(g, Matching([(1, 2)])), (True, None))

    def test_greatest_matching(self):
        self.assertEqual(len(greatest_matching(self._p4())), 2)
        self.assertEqual(len(greatest_matching(self._complete_graph(3))), 1)
        self.assertEqual(len(greatest_matching(self._complete_graph(4))), 2)
        self.assertEqual(len(greatest_matching(UndirectedGraph(0))), 0)
        with self.assertRaises(BudgetExceeded):
            greatest_matching(self._complete_graph(4), budget=3)

    def test_maximal_is_not_greatest(self):
        g = self._p4()
        sizes = {len(m) for m in maximal_matchings(g)}
        self.assertEqual(sizes, {1, 2})

    def test_correspondence_exhaustive(self):
        for p in range(1, 6):
            for g in all_graphs(p):
                if g.is_connected():
                    _check_correspondence(self, g)

    @tag("acceptance")
    def test_correspondence_p6(self):
        for g in all_graphs(6):
            if g.is_connected():
                _check_correspondence(self, g)

    @given(graphs(max_vertices=12))
    @settings(deadline=None)
    def test_theorem_random(self, g):
        for kind in (connected_seed_decomposition, arc_seed_decomposition):
            d = kind(g).validate()
            self.assertTrue(g.is_completely_disconnected(d.leftover))
        matching = matching_from_decomposition(arc_seed_decomposition(g))
        decomposition_from_matching(g, matching)

    @given(graphs(max_vertices=10))
    @settings(deadline=None)
    def test_greatest_matching_matches_networkx(self, g):
        matching = greatest_matching(g)
        matching.check_edges(g)
        expected = len(nx.max_weight_matching(g.to_networkx(), maxcardinality=True))
        self.assertEqual(len(matching), expected)
