"""Jets: the layer structure of an interval once its heading is removed.

A partition W₁, …, W_n is a jet when no arc goes from a layer to the same
or an earlier layer, and every vertex of W_j (j ≥ 2) ends a directed path
that visits W₁, …, W_(j-1) in order.
"""
from collections import namedtuple
from itertools import combinations

from ..graph.digraph import Digraph
from ..graph.exceptions import ContractViolation, GraphDomainError
from ..graph.vertexset import VertexSet
from .inflation import hyperinflate
from .intervals import region_of

NO_BACKWARD_ARCS = "no-backward-arcs"
FORWARD_PATH = "forward-path"

JetViolation = namedtuple("JetViolation", "condition witness")


class Jet(object):
    def __init__(self, layers):
        layers = tuple(
            layer if isinstance(layer, VertexSet) else VertexSet(layer)
            for layer in layers
        )
        if not all(layers):
            raise GraphDomainError("jet layers must be nonempty")
        for first, second in combinations(layers, 2):
            if not first.isdisjoint(second):
                raise GraphDomainError(
                    f"jet layers must be disjoint, {sorted(first & second)} repeats"
                )
        self.layers = layers

    def __repr__(self):
        return f"Jet({[sorted(layer) for layer in self.layers]})"

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return self.layers == other.layers

    def __hash__(self):
        return hash(self.layers)

    def __len__(self):
        return len(self.layers)

    def __iter__(self):
        return iter(self.layers)

    def vertices(self):
        return VertexSet().union(*self.layers)

    @classmethod
    def from_labels(cls, graph, layers):
        return cls(graph.vertex_set(layer) for layer in layers)


def jet_layers(graph, region, heading):
    """Splits ``region`` minus ``heading`` into the layers
    Inf^i{x} \\ Inf^(i-1){x}, which form a jet."""
    heading = graph.resolve(heading)
    if heading not in region.headings:
        raise GraphDomainError(
            f'vertex "{graph.label(heading)}" is not a heading of {region!r}'
        )
    return Jet(hyperinflate(graph, VertexSet([heading])).increments())


def verify_jet(graph, jet):
    """Returns ``(True, None)`` or ``(False, JetViolation)``.

    Only arcs between jet vertices are taken into account. The witness of a
    backward arc is the ``(tail, head)`` pair, the witness of a vertex
    without a forward path is its index.
    """
    graph.check_subset(jet.vertices(), name="jet")
    earlier = 0
    for layer in jet.layers:
        earlier |= layer.mask
        for tail in layer:
            backward = graph.out_mask(tail) & earlier
            if backward:
                head = (backward & -backward).bit_length() - 1
                return False, JetViolation(NO_BACKWARD_ARCS, (tail, head))
    reached = jet.layers[0].mask if jet.layers else 0
    for layer in jet.layers[1:]:
        current = 0
        for vertex in layer:
            if graph.in_mask(vertex) & reached:
                current |= 1 << vertex
            else:
                return False, JetViolation(FORWARD_PATH, vertex)
        reached = current
    return True, None


def jet_to_interval(graph, jet, back_arcs=(), loop=False, heading_label="x"):
    """Adds a heading x in front of the jet, which turns it into an interval.

    ``graph`` carries the jet arcs and its vertices must be exactly the jet
    vertices. The result keeps their indices and appends x as the last
    vertex, with arcs from x to every vertex of W₁, arcs back to x from the
    ``back_arcs`` vertices (taken from W₂ onwards) and optionally a loop.
    """
    if jet.vertices() != graph.vertices():
        raise GraphDomainError("the jet layers must partition the graph vertices")
    ok, violation = verify_jet(graph, jet)
    if not ok:
        raise ContractViolation(f"not a jet: {violation.condition}", witness=violation)
    if heading_label in graph.labels:
        raise GraphDomainError(f'heading label "{heading_label}" is already in use')
    back_arcs = graph.vertex_set(back_arcs)
    allowed = VertexSet().union(*jet.layers[1:])
    if not back_arcs <= allowed:
        raise GraphDomainError(
            f"arcs back to the heading must leave the second layer or later, "
            f"got {graph.labels_of(back_arcs - allowed)}"
        )
    heading = graph.vertex_count
    arcs = set(graph.arcs)
    if jet.layers:
        arcs.update((heading, vertex) for vertex in jet.layers[0])
    arcs.update((vertex, heading) for vertex in back_arcs)
    if loop:
        arcs.add((heading, heading))
    result = Digraph(heading + 1, arcs, labels=graph.labels + (heading_label,))
    if region_of(result, heading).vertices != result.vertices():
        raise ContractViolation(
            "the heading does not span the constructed graph", witness=heading
        )
    return result
