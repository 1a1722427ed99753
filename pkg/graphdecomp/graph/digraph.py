import networkx as nx

from .base import BaseGraph, reach
from .exceptions import GraphDomainError


class Digraph(BaseGraph):
    """A finite digraph G = (V, E) with E ⊆ V × V; loops are allowed.

    The input and output neighbourhoods of every vertex are kept as
    bitmasks, so a loop ``(v, v)`` shows up in both ``in_set(v)`` and
    ``out_set(v)``.
    """

    directed = True

    def __init__(self, vertex_count, arcs=(), labels=None):
        super().__init__(vertex_count, labels=labels)
        in_masks = [0] * vertex_count
        out_masks = [0] * vertex_count
        arc_set = set()
        for arc in arcs:
            try:
                tail, head = arc
            except (TypeError, ValueError):
                raise GraphDomainError(f"invalid arc {arc!r}") from None
            tail, head = self.resolve(tail), self.resolve(head)
            arc_set.add((tail, head))
            out_masks[tail] |= 1 << head
            in_masks[head] |= 1 << tail
        self.arcs = frozenset(arc_set)
        self._in = in_masks
        self._out = out_masks

    @classmethod
    def from_labeled_arcs(cls, arcs, vertices=()):
        """Builds a digraph from label pairs, interning labels in order of
        first appearance (declared ``vertices`` first)."""
        labels = {}
        for label in vertices:
            labels.setdefault(str(label), len(labels))
        indexed = []
        for tail, head in arcs:
            tail = labels.setdefault(str(tail), len(labels))
            head = labels.setdefault(str(head), len(labels))
            indexed.append((tail, head))
        return cls(len(labels), indexed, labels=list(labels))

    def _edge_key(self):
        return self.arcs

    def in_mask(self, index):
        return self._in[index]

    def out_mask(self, index):
        return self._out[index]

    def in_degree(self, vertex):
        return self.in_mask(self.resolve(vertex)).bit_count()

    def out_degree(self, vertex):
        return self.out_mask(self.resolve(vertex)).bit_count()

    def has_arc(self, tail, head):
        return (self.resolve(tail), self.resolve(head)) in self.arcs

    def edge_count(self):
        return len(self.arcs)

    def sorted_arcs(self):
        return sorted(self.arcs)

    def induced_subgraph(self, subset):
        """G[U] with dense indices; ``parent_indices`` maps back to ``self``."""
        return self._induced(subset, self.arcs)

    def relabeled(self, permutation):
        """Returns the isomorphic digraph where vertex ``i`` becomes
        ``permutation[i]``; labels travel with their vertices."""
        return self._relabeled(permutation, self.arcs)

    def is_connected_subset(self, subset):
        """True if every ordered pair of ``subset`` is joined by a directed
        path inside G[subset].

        This is strong connectivity. The empty set and singletons count as
        connected.
        """
        subset = self.check_subset(subset)
        if len(subset) <= 1:
            return True
        start = subset.min()
        return (
            reach(self._out, start, subset.mask) == subset.mask
            and reach(self._in, start, subset.mask) == subset.mask
        )

    def to_networkx(self):
        graph = nx.DiGraph()
        for index, label in enumerate(self.labels):
            graph.add_node(index, label=label)
        graph.add_edges_from(self.arcs)
        return graph
