import networkx as nx

from .base import BaseGraph, reach
from .exceptions import GraphDomainError
from .vertexset import VertexSet


class UndirectedGraph(BaseGraph):
    """A finite undirected graph without loops.

    Edges are stored as sorted index pairs ``(a, b)`` with ``a < b``; the
    neighbourhood D(v) plays the role of both D⁻(v) and D⁺(v).
    """

    directed = False

    def __init__(self, vertex_count, edges=(), labels=None):
        super().__init__(vertex_count, labels=labels)
        adjacency = [0] * vertex_count
        edge_set = set()
        for edge in edges:
            try:
                a, b = edge
            except (TypeError, ValueError):
                raise GraphDomainError(f"invalid edge {edge!r}") from None
            a, b = self.resolve(a), self.resolve(b)
            if a == b:
                raise GraphDomainError(
                    f'loop at vertex "{self.labels[a]}": '
                    "undirected graphs have no loops"
                )
            edge_set.add((a, b) if a < b else (b, a))
            adjacency[a] |= 1 << b
            adjacency[b] |= 1 << a
        self.edges = frozenset(edge_set)
        self._adjacency = adjacency

    @classmethod
    def from_labeled_edges(cls, edges, vertices=()):
        labels = {}
        for label in vertices:
            labels.setdefault(str(label), len(labels))
        indexed = []
        for a, b in edges:
            a = labels.setdefault(str(a), len(labels))
            b = labels.setdefault(str(b), len(labels))
            indexed.append((a, b))
        return cls(len(labels), indexed, labels=list(labels))

    @classmethod
    def from_adjacency(cls, adjacency, labels=None):
        """Builds a graph from symmetric neighbourhood bitmasks."""
        edges = [
            (a, b)
            for a, mask in enumerate(adjacency)
            for b in VertexSet.from_mask(mask)
            if a < b
        ]
        return cls(len(adjacency), edges, labels=labels)

    def _edge_key(self):
        return self.edges

    def in_mask(self, index):
        return self._adjacency[index]

    out_mask = in_mask

    def adjacency(self):
        return list(self._adjacency)

    def neighbors(self, vertex):
        """D(v)"""
        return self.in_set(vertex)

    def degree(self, vertex):
        return self.in_mask(self.resolve(vertex)).bit_count()

    def has_edge(self, a, b):
        a, b = self.resolve(a), self.resolve(b)
        return bool(self._adjacency[a] >> b & 1)

    def edge_count(self):
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def induced_subgraph(self, subset):
        return self._induced(subset, self.edges)

    def relabeled(self, permutation):
        return self._relabeled(permutation, self.edges)

    def is_connected_subset(self, subset):
        subset = self.check_subset(subset)
        if len(subset) <= 1:
            return True
        return reach(self._adjacency, subset.min(), subset.mask) == subset.mask

    def is_connected(self):
        """True if the graph has at most one connected component."""
        return self.is_connected_subset(self.vertices())

    def connected_components(self):
        """Returns the connected components ordered by their smallest vertex."""
        remaining = self.vertices().mask
        components = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            component = reach(self._adjacency, start, remaining)
            components.append(VertexSet.from_mask(component))
            remaining &= ~component
        return components

    def degree_between(self, first, second):
        """d(U₁, U₂): the number of edges joining two disjoint vertex sets."""
        first = self.check_subset(first)
        second = self.check_subset(second)
        if not first.isdisjoint(second):
            raise GraphDomainError(
                f"vertex sets must be disjoint, both contain {sorted(first & second)}"
            )
        return sum(
            (self._adjacency[index] & second.mask).bit_count() for index in first
        )

    def to_networkx(self):
        graph = nx.Graph()
        for index, label in enumerate(self.labels):
            graph.add_node(index, label=label)
        graph.add_edges_from(self.edges)
        return graph
