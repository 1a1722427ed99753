from itertools import combinations

from ..graph.exceptions import ContractViolation
from ..graph.vertexset import EMPTY, VertexSet
from .inflation import hull, inflate

INTERVAL = "interval"
CONNECTED_SEED = "connected-seed"
ARC_SEED = "arc-seed"
KINDS = (INTERVAL, CONNECTED_SEED, ARC_SEED)


class Decomposition(object):
    """A partition of the vertices into hyperinflation components.

    ``seeds[i]`` is the set whose hyperinflation is ``components[i]``.
    Decompositions of undirected graphs also keep ``leftover``, the
    completely disconnected set of vertices no component absorbed.
    ``headings`` is filled for interval decompositions only.
    """

    def __init__(self, graph, kind, components, seeds, leftover=EMPTY, headings=None):
        if kind not in KINDS:
            raise ValueError(f'unknown decomposition kind "{kind}"')
        self.graph = graph
        self.kind = kind
        self.components = tuple(components)
        self.seeds = tuple(seeds)
        self.leftover = leftover
        self.headings = tuple(headings) if headings is not None else None

    def __repr__(self):
        return (
            f"<Decomposition kind={self.kind} components={len(self.components)} "
            f"leftover={len(self.leftover)}>"
        )

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def partition(self):
        """The components as a set of frozensets of labels."""
        return {frozenset(self.graph.labels_of(c)) for c in self.components}

    def boundary(self):
        """(⊔ (Inf V_i \\ V_i)) ∪ U"""
        result = self.leftover
        for seed, component in zip(self.seeds, self.components):
            result = result | (component - seed)
        return result

    def validate(self):
        """Raises ``ContractViolation`` unless the decomposition is consistent."""
        graph = self.graph
        if len(self.seeds) != len(self.components):
            raise ContractViolation("every component needs exactly one seed")
        for first, second in combinations(self.components, 2):
            if not first.isdisjoint(second):
                raise ContractViolation(
                    "components are not disjoint", witness=first & second
                )
        covered = self.leftover.union(*self.components)
        if covered != graph.vertices():
            raise ContractViolation(
                "components do not cover the vertex set",
                witness=graph.vertices() - covered,
            )
        for seed, component in zip(self.seeds, self.components):
            if hull(graph, seed) != component:
                raise ContractViolation(
                    "component is not the hyperinflation of its seed", witness=seed
                )
            if inflate(graph, component) != component:
                raise ContractViolation("component is not stable", witness=component)
        if not graph.directed:
            if not self.leftover.isdisjoint(VertexSet().union(*self.components)):
                raise ContractViolation("leftover overlaps a component")
            if not graph.is_completely_disconnected(self.leftover):
                raise ContractViolation(
                    "leftover is not completely disconnected", witness=self.leftover
                )
            if not graph.is_completely_disconnected(self.boundary()):
                raise ContractViolation(
                    "absorbed vertices and leftover are not completely disconnected",
                    witness=self.boundary(),
                )
        return self
