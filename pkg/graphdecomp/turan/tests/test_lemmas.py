from unittest.mock import patch

from django.test import SimpleTestCase, tag
from hypothesis import given, settings

from ...graph.exceptions import BudgetExceeded, GraphDomainError
from ...graph.paths import longest_paths
from ...graph.tests import TestGraphMixin
from ..exceptions import PreconditionError
from ..extremal import extremal_construction
from ..lemmas import (
    check_component_additivity,
    check_maximal_path_degrees,
    check_path_degree_lemma,
    check_premaximal_lemmas,
    check_short_path_prop,
    check_vertex_exchange_lemma,
    half_up,
    lemma_suite,
    volume_bound_check,
)
from . import bowtie_free_graphs, disjoint_union


class TestLemmasMixin(TestGraphMixin):
    def _fan(self):
        """The path a-b-c with x adjacent to all three."""
        return self._create_graph(
            [("a", "b"), ("b", "c"), ("x", "a"), ("x", "b"), ("x", "c")]
        )


class TestPathDegreeLemma(TestLemmasMixin, SimpleTestCase):
    def test_half_up(self):
        self.assertEqual([half_up(n) for n in range(1, 7)], [1, 1, 2, 2, 3, 3])

    def test_single_edge(self):
        g = self._complete_graph(3)
        report = check_path_degree_lemma(g, [0, 1], 2)
        self.assertTrue(report.ok)
        self.assertEqual(report.details["degree"], 2)
        self.assertTrue(report.details["equality"])

    def test_equality_case(self):
        report = check_path_degree_lemma(self._fan(), ["a", "b", "c"], "x")
        self.assertTrue(report.ok)
        self.assertEqual(
            report.details, {"length": 3, "degree": 3, "bound": 3, "equality": True}
        )

    def test_below_bound(self):
        g = self._create_graph([("a", "b"), ("b", "c"), ("c", "d"), ("x", "b")])
        report = check_path_degree_lemma(g, ["a", "b", "c", "d"], "x")
        self.assertTrue(report.ok)
        self.assertFalse(report.details["equality"])

    def test_bowtie_precondition(self):
        g = self._bowtie()
        with self.assertRaises(PreconditionError) as context:
            check_path_degree_lemma(g, [1, 2], 3)
        self.assertEqual(context.exception.witness.center.index, 0)

    def test_invalid_arguments(self):
        g = self._fan()
        with self.assertRaises(GraphDomainError):
            check_path_degree_lemma(g, ["a", "b"], "a")
        with self.assertRaises(GraphDomainError):
            check_path_degree_lemma(g, ["a", "c"], "x")
        with self.assertRaises(GraphDomainError):
            check_path_degree_lemma(g, [], "x")

    def test_extremal_construction(self):
        g = extremal_construction(6)
        report = check_maximal_path_degrees(g)
        self.assertTrue(report.ok)
        self.assertEqual(report.details["length"], 6)
        for path in longest_paths(g.induced_subgraph([0, 1, 2, 3])).maximal_paths():
            for x in (4, 5):
                with self.subTest(path=path, x=x):
                    self.assertTrue(check_path_degree_lemma(g, path, x).ok)

    @given(bowtie_free_graphs(max_vertices=8))
    @settings(deadline=None)
    def test_random_graphs(self, g):
        self.assertTrue(check_maximal_path_degrees(g).ok)


class TestPremaximalLemmas(TestLemmasMixin, SimpleTestCase):
    def test_p4(self):
        report = check_premaximal_lemmas(self._p4())
        self.assertTrue(report.ok)
        self.assertEqual(report.details, {"length": 3, "paths": 2})

    def test_single_edge(self):
        self.assertTrue(check_premaximal_lemmas(self._path_graph(2)).ok)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            check_premaximal_lemmas(self._create_graph([("a", "b")], vertices=["c"]))
        with self.assertRaises(PreconditionError):
            check_premaximal_lemmas(self._create_graph(vertices=["a"]))
        with self.assertRaises(PreconditionError):
            check_premaximal_lemmas(self._bowtie())

    def test_fan(self):
        self.assertTrue(check_premaximal_lemmas(self._fan()).ok)

    @given(bowtie_free_graphs(min_vertices=2, max_vertices=8))
    @settings(deadline=None)
    def test_random_graphs(self, g):
        self.assertTrue(check_premaximal_lemmas(g).ok)


class TestShortPathProp(TestLemmasMixin, SimpleTestCase):
    def test_star(self):
        report = check_short_path_prop(self._star(4))
        self.assertTrue(report.applicable)
        self.assertTrue(report.ok)
        self.assertEqual(report.details, {"p": 5, "q": 4, "longest_path": 3})

    def test_triangle(self):
        report = check_short_path_prop(self._complete_graph(3))
        self.assertTrue(report.applicable)
        self.assertTrue(report.ok)

    def test_p4_not_applicable(self):
        report = check_short_path_prop(self._p4())
        self.assertFalse(report.applicable)
        self.assertTrue(report.ok)

    def test_disconnected(self):
        with self.assertRaises(PreconditionError):
            check_short_path_prop(self._create_graph(vertices=["a", "b"]))


class TestVolumeBound(TestLemmasMixin, SimpleTestCase):
    def test_extremal_constructions_are_tight(self):
        for p in range(5, 10):
            with self.subTest(p=p):
                report = volume_bound_check(extremal_construction(p))
                self.assertTrue(report.applicable)
                self.assertTrue(report.ok)
                self.assertEqual(report.details["q"], report.details["bound"])

    def test_k4_exempt(self):
        report = volume_bound_check(self._complete_graph(4))
        self.assertFalse(report.applicable)
        self.assertEqual(report.reason, "K4 is exempt")
        self.assertEqual(report.details["q"], 6)

    def test_bowtie(self):
        report = volume_bound_check(self._bowtie())
        self.assertFalse(report.applicable)
        self.assertEqual(report.details["bowtie"]["center"], "0")

    @given(bowtie_free_graphs(max_vertices=9, connected=False))
    @settings(deadline=None)
    def test_random_graphs(self, g):
        report = volume_bound_check(g)
        self.assertTrue(report.ok)

    @tag("acceptance")
    @given(bowtie_free_graphs(max_vertices=10, connected=False))
    @settings(deadline=None, max_examples=10000)
    def test_random_graphs_sample(self, g):
        report = volume_bound_check(g)
        self.assertTrue(report.ok)
        if report.applicable:
            p, q = g.volume()
            self.assertLessEqual(4 * q, p * p + 4)


class TestComponentAdditivity(TestLemmasMixin, SimpleTestCase):
    def test_two_triangles(self):
        g = disjoint_union(self._complete_graph(3), self._complete_graph(3))
        report = check_component_additivity(g)
        self.assertTrue(report.applicable)
        self.assertTrue(report.ok)
        self.assertEqual(report.details["volumes"], [[3, 3], [3, 3]])

    def test_connected(self):
        self.assertFalse(check_component_additivity(self._p4()).applicable)

    def test_component_over_bound(self):
        g = disjoint_union(self._complete_graph(4), self._path_graph(1))
        report = check_component_additivity(g)
        self.assertFalse(report.applicable)

    @given(bowtie_free_graphs(max_vertices=6), bowtie_free_graphs(max_vertices=6))
    @settings(deadline=None)
    def test_random_pairs(self, first, second):
        report = check_component_additivity(disjoint_union(first, second))
        self.assertTrue(report.ok)


class TestVertexExchangeLemma(TestLemmasMixin, SimpleTestCase):
    def test_fan(self):
        report = check_vertex_exchange_lemma(self._fan(), ["a", "b", "c"], "x")
        self.assertTrue(report.applicable)
        self.assertTrue(report.ok)
        self.assertEqual(report.details["exchangeable"], ["a", "c"])

    def test_not_applicable(self):
        g = self._fan()
        self.assertFalse(check_vertex_exchange_lemma(g, ["a", "b"], "x").applicable)
        g = self._create_graph([("a", "b"), ("b", "c"), ("c", "d"), ("x", "a")])
        report = check_vertex_exchange_lemma(g, ["a", "b", "c"], "x")
        self.assertFalse(report.applicable)

    def test_k4_precondition(self):
        with self.assertRaises(PreconditionError):
            check_vertex_exchange_lemma(self._complete_graph(4), [0, 1, 2], 3)

    @given(bowtie_free_graphs(min_vertices=4, max_vertices=8, k4_free=True))
    @settings(deadline=None)
    def test_random_graphs(self, g):
        longest = longest_paths(g)
        for path in longest.maximal_paths():
            for x in g.vertices() - path.as_set():
                self.assertTrue(check_vertex_exchange_lemma(g, path, x).ok)


class TestLemmaSuite(TestLemmasMixin, SimpleTestCase):
    def test_connected(self):
        names = [report.name for report in lemma_suite(self._p4())]
        self.assertEqual(
            names,
            [
                "volume-bound",
                "component-additivity",
                "path-degree",
                "premaximal",
                "short-path",
            ],
        )

    def test_bowtie(self):
        reports = lemma_suite(self._bowtie())
        self.assertEqual(len(reports), 2)
        self.assertTrue(all(report.ok for report in reports))

    def test_as_dict(self):
        data = lemma_suite(self._p4())[0].as_dict()
        self.assertEqual(
            sorted(data),
            ["applicable", "details", "name", "ok", "reason", "violations"],
        )

    def test_vertex_budget_reaches_every_path_search(self):
        g = self._path_graph(16)
        with self.assertRaises(BudgetExceeded):
            lemma_suite(g)
        reports = lemma_suite(g, budget=20)
        self.assertEqual(reports[-1].name, "short-path")
        self.assertFalse(reports[-1].applicable)
        self.assertEqual(reports[-1].details["longest_path"], 16)
        self.assertTrue(all(report.ok for report in reports))
        self.assertFalse(check_short_path_prop(g, budget=20).applicable)

    def test_time_budget(self):
        with patch("graphdecomp.graph.paths.DEADLINE_EVERY", 1), patch(
            "graphdecomp.turan.lemmas.get_deadline", return_value=0
        ) as get_deadline:
            with self.assertRaisesMessage(BudgetExceeded, "time budget"):
                lemma_suite(self._p4(), seconds=5)
        get_deadline.assert_called_once_with(5)


@tag("acceptance")
class TestLemmasAcceptance(SimpleTestCase):
    @given(bowtie_free_graphs(min_vertices=2, max_vertices=10))
    @settings(deadline=None, max_examples=1000)
    def test_random_graphs(self, g):
        self.assertTrue(check_maximal_path_degrees(g).ok)
        self.assertTrue(check_premaximal_lemmas(g).ok)
