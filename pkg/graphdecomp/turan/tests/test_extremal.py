from django.test import SimpleTestCase, tag
from jsonschema import validate

from ...graph.exceptions import BudgetExceeded, GraphDomainError
from ...graph.tests import TestGraphMixin
from ..bowtie import find_bowtie
from ..extremal import (
    CONSTRUCTION,
    extremal_construction,
    extremal_report,
    formula_bound,
    is_k4,
    k3_extremal_check,
    turan_k3_bound,
)
from ..schema import extremal_report_schema


class TestExtremal(TestGraphMixin, SimpleTestCase):
    def test_bounds(self):
        self.assertEqual(formula_bound(5), 7)
        self.assertEqual(formula_bound(6), 10)
        self.assertEqual(formula_bound(7), 13)
        self.assertEqual(turan_k3_bound(4), 4)
        self.assertEqual(turan_k3_bound(5), 6)
        self.assertEqual(turan_k3_bound(6), 9)

    def test_invalid_vertex_count(self):
        for p in (1, 0, -3, 2.5, True):
            with self.subTest(p=p), self.assertRaises(GraphDomainError):
                extremal_construction(p)

    def test_construction_p5(self):
        g = extremal_construction(5)
        self.assertEqual(g.edge_count(), 7)
        # K2,3 on {0, 1} and {2, 3, 4} plus the edge 2-3
        self.assertTrue(g.has_edge(2, 3))
        self.assertFalse(g.has_edge(0, 1))
        self.assertIsNone(find_bowtie(g))

    def test_construction_p6(self):
        self.assertEqual(extremal_construction(6).edge_count(), 10)

    def test_construction_sizes(self):
        for p in range(3, 65):
            with self.subTest(p=p):
                g = extremal_construction(p)
                self.assertEqual(g.edge_count(), p * p // 4 + 1)
                self.assertIsNone(find_bowtie(g))

    def test_construction_p2(self):
        with self.assertLogs("graphdecomp.turan.extremal", "WARNING"):
            g = extremal_construction(2)
        self.assertEqual(g.sorted_edges(), [(0, 1)])

    def test_is_k4(self):
        self.assertTrue(is_k4(self._complete_graph(4)))
        self.assertFalse(is_k4(self._complete_graph(5)))
        self.assertFalse(is_k4(self._star(3)))

    def test_extremal_report(self):
        report = extremal_report(5)
        data = report.as_dict()
        validate(data, extremal_report_schema)
        self.assertEqual(data["method"], CONSTRUCTION)
        self.assertEqual(data["oracle_bound"], 7)
        self.assertEqual(len(data["witness_edges"]), 7)
        self.assertTrue(data["formula_matches"])
        self.assertIsNone(data["refuted_edge_count"])

    def test_extremal_report_k4(self):
        report = extremal_report(4)
        self.assertEqual(report.oracle_bound, 6)
        self.assertEqual(report.formula_bound, 5)
        self.assertFalse(report.formula_matches)
        self.assertTrue(is_k4(report.witness_graph))

    def test_extremal_report_p2(self):
        report = extremal_report(2)
        self.assertEqual(report.oracle_bound, 1)
        self.assertFalse(report.formula_matches)

    def test_k3_check(self):
        for p in range(2, 7):
            with self.subTest(p=p):
                report = k3_extremal_check(p)
                self.assertTrue(report.ok)
                self.assertEqual(report.bound, p * p // 4)

    def test_k3_check_p6_counts(self):
        report = k3_extremal_check(6)
        # every one of the C(15, 10) graphs has a triangle
        self.assertEqual(report.graphs_checked, 3003)

    def test_k3_check_budget(self):
        with self.assertRaises(BudgetExceeded):
            k3_extremal_check(7)
        self.assertTrue(k3_extremal_check(3, budget=3).ok)


@tag("acceptance")
class TestExtremalAcceptance(SimpleTestCase):
    def test_k3_check_p7(self):
        self.assertTrue(k3_extremal_check(7, budget=7).ok)
