"""Extremal numbers for the bowtie and the triangle.

ex(p, H) is the largest number of edges of an H-free graph on p vertices.
For p > 4 it equals ⌊p²/4⌋ + 1, attained by K_{⌊p/2⌋,⌈p/2⌉} plus one edge
inside a partite set. K₄ beats the formula at p = 4, and for p ≤ 4 no
graph contains a bowtie at all.
"""
import logging
import time
from math import comb

from ..graph.enumeration import edge_index, graphs_with_edges
from ..graph.exceptions import ContractViolation, GraphDomainError
from ..graph.undirected import UndirectedGraph
from ..utils import check_deadline, check_vertex_budget, get_deadline, timed
from .bowtie import find_bowtie, has_triangle_mask
from .oracle import search_bowtie_free

logger = logging.getLogger(__name__)

CONSTRUCTION = "construction"
EXHAUSTIVE = "exhaustive"


def _check_vertex_count(p):
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise GraphDomainError(f"p must be an integer of at least 2, got {p!r}")


def formula_bound(p):
    """⌊p²/4⌋ + 1"""
    _check_vertex_count(p)
    return p * p // 4 + 1


def turan_k3_bound(p):
    """ex(p, K₃) = ⌊p²/4⌋"""
    _check_vertex_count(p)
    return p * p // 4


def is_k4(graph):
    return graph.vertex_count == 4 and graph.edge_count() == 6


def complete_graph(p):
    return UndirectedGraph(p, edge_index(p))


def complete_bipartite(first, second):
    p = first + second
    return UndirectedGraph(p, [(a, b) for a in range(first) for b in range(first, p)])


def extremal_construction(p):
    """K_{⌊p/2⌋,⌈p/2⌉} plus one edge inside the larger partite set."""
    _check_vertex_count(p)
    half = p // 2
    edges = [(a, b) for a in range(half) for b in range(half, p)]
    if p - half >= 2:
        edges.append((half, half + 1))
    else:
        logger.warning(
            "p=2 leaves no room for an edge inside a partite set, returning K2"
        )
    graph = UndirectedGraph(p, edges)
    witness = find_bowtie(graph)
    if witness is not None:
        raise ContractViolation("the construction contains a bowtie", witness=witness)
    return graph


def best_known_graph(p):
    """The largest bowtie-free graph known without searching.

    Below 5 vertices there is no room for a bowtie, so that is K_p.
    """
    if p < 5:
        return complete_graph(p)
    return extremal_construction(p)


class ExtremalReport(object):
    def __init__(self, p, oracle_bound, witness_graph, method, refuted_edge_count=None):
        self.p = p
        self.formula_bound = formula_bound(p)
        self.oracle_bound = oracle_bound
        self.witness_graph = witness_graph
        self.method = method
        # the edge count at which every graph was found to contain a bowtie
        self.refuted_edge_count = refuted_edge_count
        self.graphs_checked = 0

    def __repr__(self):
        return (
            f"<ExtremalReport p={self.p} formula={self.formula_bound} "
            f"bound={self.oracle_bound} method={self.method}>"
        )

    @property
    def formula_matches(self):
        return self.oracle_bound == self.formula_bound

    def witness_edges(self):
        graph = self.witness_graph
        return [[graph.label(a), graph.label(b)] for a, b in graph.sorted_edges()]

    def as_dict(self):
        return {
            "p": self.p,
            "formula_bound": self.formula_bound,
            "oracle_bound": self.oracle_bound,
            "formula_matches": self.formula_matches,
            "method": self.method,
            "refuted_edge_count": self.refuted_edge_count,
            "witness_edges": self.witness_edges(),
        }


def extremal_report(p):
    """Reports the best known bowtie-free graph without any search.

    The bound is a lower bound only; ``ex_oracle`` proves it tight.
    """
    graph = best_known_graph(p)
    return ExtremalReport(p, graph.edge_count(), graph, CONSTRUCTION)


@timed
def ex_oracle(p, budget=None, seconds=None):
    """Computes ex(p, H) exactly by exhaustive search.

    Starting from the best known graph, the edge count m is raised while
    some m-edge graph is bowtie-free. Deleting an edge keeps a graph
    bowtie-free, so once every m-edge graph contains a bowtie so does
    every larger graph, and ex(p, H) = m - 1.
    """
    _check_vertex_count(p)
    pairs = comb(p, 2)
    check_vertex_budget(
        "ex_oracle", p, budget, work=comb(pairs, min(formula_bound(p) + 1, pairs))
    )
    deadline = get_deadline(seconds)
    witness = best_known_graph(p)
    edge_count = witness.edge_count() + 1
    checked = 0
    refuted = None
    while edge_count <= pairs:
        edges, count = search_bowtie_free(p, edge_count, deadline)
        checked += count
        if edges is None:
            refuted = edge_count
            break
        witness = UndirectedGraph(p, [tuple(edge) for edge in edges])
        logger.info(f"bowtie-free graph on {p} vertices with {edge_count} edges found")
        edge_count += 1
    report = ExtremalReport(p, witness.edge_count(), witness, EXHAUSTIVE, refuted)
    report.graphs_checked = checked
    logger.info(f"ex({p}, H) = {report.oracle_bound}, {checked} graphs checked")
    return report


class K3Report(object):
    def __init__(self, p, bound, counterexample, bipartite_free, graphs_checked):
        self.p = p
        self.bound = bound
        self.counterexample = counterexample
        self.bipartite_triangle_free = bipartite_free
        self.graphs_checked = graphs_checked

    @property
    def ok(self):
        return self.counterexample is None and self.bipartite_triangle_free


def k3_extremal_check(p, budget=None, seconds=None):
    """Checks ex(p, K₃) = ⌊p²/4⌋ by brute force.

    Every graph with ⌊p²/4⌋ + 1 edges must contain a triangle, and
    K_{⌊p/2⌋,⌈p/2⌉} must not.
    """
    bound = turan_k3_bound(p)
    edge_count = bound + 1
    pairs = comb(p, 2)
    check_vertex_budget("k3_check", p, budget, work=comb(pairs, min(edge_count, pairs)))
    deadline = get_deadline(seconds)
    bipartite = complete_bipartite(p // 2, p - p // 2)
    bipartite_free = not has_triangle_mask(bipartite.adjacency())
    counterexample = None
    checked = 0
    if edge_count <= pairs:
        start = time.time()
        for graph in graphs_with_edges(p, edge_count):
            checked += 1
            if not checked % 1024:
                check_deadline(deadline, "K3 check")
            if not has_triangle_mask(graph.adjacency()):
                counterexample = graph
                break
        logger.info(
            f"K3 check for p={p}: {checked} graphs in {time.time() - start:.2f}s"
        )
    return K3Report(p, bound, counterexample, bipartite_free, checked)
