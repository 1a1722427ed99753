from collections import namedtuple

from .exceptions import GraphDomainError
from .vertexset import VertexSet, iter_bits

VertexId = namedtuple("VertexId", "index label")
Volume = namedtuple("Volume", "p q")


def reach(masks, start, allowed):
    """Returns the mask of vertices reachable from ``start`` inside ``allowed``.

    ``masks[v]`` is the neighbourhood of ``v`` to follow (outputs for
    forward reachability, inputs for backward reachability).
    """
    seen = frontier = 1 << start
    while frontier:
        following = 0
        for vertex in iter_bits(frontier):
            following |= masks[vertex]
        frontier = following & allowed & ~seen
        seen |= frontier
    return seen


class BaseGraph(object):
    """Common behaviour of finite graphs with dense integer vertex ids.

    Vertices are the indices ``0 .. p - 1``; every vertex also has a string
    label (its index by default) used when reading and writing graphs.
    Graphs are immutable once built.
    """

    directed = None

    def __init__(self, vertex_count, labels=None):
        if not isinstance(vertex_count, int) or vertex_count < 0:
            raise GraphDomainError(
                f"vertex count must be a nonnegative integer, got {vertex_count!r}"
            )
        if labels is None:
            labels = [str(index) for index in range(vertex_count)]
        labels = tuple(str(label) for label in labels)
        if len(labels) != vertex_count:
            raise GraphDomainError(
                f"expected {vertex_count} labels, got {len(labels)}"
            )
        index = {label: position for position, label in enumerate(labels)}
        if len(index) != vertex_count:
            raise GraphDomainError("vertex labels must be unique")
        self.vertex_count = vertex_count
        self.labels = labels
        self._index = index
        # set on induced subgraphs: position i maps to parent_indices[i]
        self.parent_indices = None

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self.labels == other.labels and self._edge_key() == other._edge_key()

    def __hash__(self):
        return hash((type(self).__name__, self.labels, self._edge_key()))

    def __repr__(self):
        return "<{0} p={1} q={2}>".format(
            self.__class__.__name__, *self.volume()
        )

    def _edge_key(self):
        raise NotImplementedError

    def _check_index(self, index):
        if not 0 <= index < self.vertex_count:
            raise GraphDomainError(
                f"vertex {index} is not in a graph with {self.vertex_count} vertices"
            )
        return index

    def resolve(self, vertex):
        """Returns the index of ``vertex``, given as an index or as a label."""
        if isinstance(vertex, VertexId):
            vertex = vertex.index
        if isinstance(vertex, bool):
            raise GraphDomainError(f"invalid vertex {vertex!r}")
        if isinstance(vertex, int):
            return self._check_index(vertex)
        if isinstance(vertex, str):
            try:
                return self._index[vertex]
            except KeyError:
                raise GraphDomainError(f'unknown vertex "{vertex}"') from None
        raise GraphDomainError(f"invalid vertex {vertex!r}")

    def label(self, index):
        return self.labels[self._check_index(index)]

    def vertex(self, vertex):
        index = self.resolve(vertex)
        return VertexId(index, self.labels[index])

    def vertex_ids(self):
        for index, label in enumerate(self.labels):
            yield VertexId(index, label)

    def vertices(self):
        return VertexSet.full(self.vertex_count)

    def vertex_set(self, vertices=()):
        """Builds a ``VertexSet`` from vertex indices or labels."""
        return VertexSet(self.resolve(vertex) for vertex in vertices)

    def check_subset(self, subset, name="vertex set"):
        """Returns ``subset`` as a ``VertexSet`` after checking it fits the graph."""
        if not isinstance(subset, VertexSet):
            subset = self.vertex_set(subset)
        if subset.mask >> self.vertex_count:
            outside = [index for index in subset if index >= self.vertex_count]
            raise GraphDomainError(
                f"{name} contains vertices outside the graph: {outside}"
            )
        return subset

    def labels_of(self, subset):
        return [self.labels[index] for index in self.check_subset(subset)]

    def in_mask(self, index):
        raise NotImplementedError

    def out_mask(self, index):
        raise NotImplementedError

    def in_set(self, vertex):
        """D⁻(v): the inputs of ``vertex``.

        A loop puts the vertex in its own inputs.
        """
        return VertexSet.from_mask(self.in_mask(self.resolve(vertex)))

    def out_set(self, vertex):
        """D⁺(v): the outputs of ``vertex``."""
        return VertexSet.from_mask(self.out_mask(self.resolve(vertex)))

    def degrees(self):
        """Returns the lists of in-degrees and out-degrees indexed by vertex."""
        indices = range(self.vertex_count)
        return (
            [self.in_mask(index).bit_count() for index in indices],
            [self.out_mask(index).bit_count() for index in indices],
        )

    def edge_count(self):
        raise NotImplementedError

    def volume(self):
        return Volume(self.vertex_count, self.edge_count())

    def is_completely_disconnected(self, subset):
        """True if the subgraph generated by ``subset`` has no arcs."""
        subset = self.check_subset(subset)
        return not any(self.out_mask(index) & subset.mask for index in subset)

    def lift(self, subset):
        """Maps a vertex set of an induced subgraph back to its parent graph."""
        subset = self.check_subset(subset)
        if self.parent_indices is None:
            return subset
        return VertexSet(self.parent_indices[index] for index in subset)

    def _induced(self, subset, pairs):
        subset = self.check_subset(subset)
        indices = list(subset)
        position = {index: new for new, index in enumerate(indices)}
        graph = self.__class__(
            len(indices),
            [
                (position[a], position[b])
                for a, b in pairs
                if a in position and b in position
            ],
            labels=[self.labels[index] for index in indices],
        )
        graph.parent_indices = tuple(indices)
        return graph

    def _relabeled(self, permutation, pairs):
        permutation = list(permutation)
        if sorted(permutation) != list(range(self.vertex_count)):
            raise GraphDomainError("permutation must rearrange all vertex indices")
        labels = [None] * self.vertex_count
        for old, new in enumerate(permutation):
            labels[new] = self.labels[old]
        return self.__class__(
            self.vertex_count,
            [(permutation[a], permutation[b]) for a, b in pairs],
            labels=labels,
        )
