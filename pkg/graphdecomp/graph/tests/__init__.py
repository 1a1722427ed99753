from ..digraph import Digraph
from ..undirected import UndirectedGraph


class TestGraphMixin(object):
    """Fixture builders shared by the test suites of every app."""

    def _create_digraph(self, arcs=(), vertices=()):
        return Digraph.from_labeled_arcs(arcs, vertices=vertices)

    def _create_graph(self, edges=(), vertices=()):
        return UndirectedGraph.from_labeled_edges(edges, vertices=vertices)

    def _chain(self, *labels):
        """Directed chain ``labels[0] -> labels[1] -> ...``"""
        return self._create_digraph(zip(labels, labels[1:]), vertices=labels)

    def _path_graph(self, count):
        return UndirectedGraph(count, [(i, i + 1) for i in range(count - 1)])

    def _complete_graph(self, count):
        return UndirectedGraph(
            count, [(a, b) for a in range(count) for b in range(a + 1, count)]
        )

    def _star(self, leaves):
        return UndirectedGraph(leaves + 1, [(0, leaf) for leaf in range(1, leaves + 1)])

    def _complete_bipartite(self, first, second):
        return UndirectedGraph(
            first + second,
            [(a, first + b) for a in range(first) for b in range(second)],
        )

    def _bowtie(self):
        return UndirectedGraph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])

    def _p4(self):
        return self._create_graph([("a", "b"), ("b", "c"), ("c", "d")])
