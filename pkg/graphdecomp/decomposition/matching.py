"""Decompositions of undirected graphs and maximal matchings.

On undirected graphs Inf already is its own fixpoint. Seeding the
decomposition process with non-singleton connected sets, as long as the
uncovered vertices still span an edge, gives V = (⊔ Inf V_i) ⊔ U with U
completely disconnected. When every seed is an edge the seeds form a
maximal matching, and every maximal matching arises this way.

Graphs that are not connected are processed one connected component at a
time, in the order of their smallest vertex.
"""
import logging
from itertools import combinations

from ..graph.exceptions import ContractViolation, GraphDomainError
from ..graph.vertexset import EMPTY, VertexSet
from ..utils import check_vertex_budget
from .base import ARC_SEED, CONNECTED_SEED, Decomposition
from .inflation import inflate

logger = logging.getLogger(__name__)


class Matching(object):
    """A set of pairwise vertex-disjoint edges, stored as sorted index pairs."""

    def __init__(self, edges=()):
        normalized = set()
        used = 0
        for a, b in edges:
            if a == b:
                raise GraphDomainError(f"a matching edge needs two vertices, got {a}")
            edge = (a, b) if a < b else (b, a)
            if edge in normalized:
                continue
            bits = 1 << a | 1 << b
            if used & bits:
                raise GraphDomainError(
                    f"matching edges must not share vertices: {edge}"
                )
            used |= bits
            normalized.add(edge)
        self.edges = frozenset(normalized)
        self._mask = used

    def __repr__(self):
        return f"Matching({sorted(self.edges)})"

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def vertices(self):
        return VertexSet.from_mask(self._mask)

    @classmethod
    def for_graph(cls, graph, edges):
        """Builds a matching from vertex indices or labels, checking every
        pair is an edge of ``graph``."""
        matching = cls((graph.resolve(a), graph.resolve(b)) for a, b in edges)
        matching.check_edges(graph)
        return matching

    def check_edges(self, graph):
        for a, b in self:
            if not graph.has_edge(a, b):
                raise GraphDomainError(
                    f'"{graph.label(a)} {graph.label(b)}" is not an edge of {graph!r}'
                )


def is_maximal(graph, matching):
    """Returns ``(True, None)`` or ``(False, edge)`` where ``edge`` could
    be added to ``matching``."""
    matching.check_edges(graph)
    used = matching.vertices()
    for edge in graph.sorted_edges():
        if edge[0] not in used and edge[1] not in used:
            return False, edge
    return True, None


def smallest_edge(graph, remaining):
    """Seeds with the lexicographically smallest edge inside ``remaining``."""
    for a, b in graph.sorted_edges():
        if a in remaining and b in remaining:
            return VertexSet([a, b])
    return None


def component_seed(graph, remaining):
    """Seeds with the first connected component of G[remaining] that has an edge."""
    subgraph = graph.induced_subgraph(remaining)
    for component in subgraph.connected_components():
        if len(component) > 1:
            return subgraph.lift(component)
    return None


class PreferredEdges(object):
    """Uses the listed edges first, skipping those already covered."""

    def __init__(self, edges, fallback=smallest_edge):
        self.edges = list(edges)
        self.fallback = fallback

    def __call__(self, graph, remaining):
        for a, b in self.edges:
            if a in remaining and b in remaining:
                return VertexSet([a, b])
        return self.fallback(graph, remaining)


def _seeded(graph, kind, strategy):
    seeds = []
    components = []
    covered = EMPTY
    for part in graph.connected_components():
        while True:
            remaining = part - covered
            seed = strategy(graph, remaining)
            if seed is None:
                break
            seed = graph.check_subset(seed, name="seed")
            if len(seed) < 2 or not seed <= remaining:
                raise ContractViolation(
                    f"seed {graph.labels_of(seed)} is not a non-singleton subset of "
                    f"the uncovered vertices {graph.labels_of(remaining)}",
                    witness=seed,
                )
            if kind == ARC_SEED and not graph.has_edge(*seed):
                raise ContractViolation(
                    f"seed {graph.labels_of(seed)} is not an edge", witness=seed
                )
            if not graph.is_connected_subset(seed):
                raise ContractViolation(
                    f"seed {graph.labels_of(seed)} is not connected", witness=seed
                )
            component = inflate(graph, seed)
            if not component.isdisjoint(covered):
                raise ContractViolation(
                    f"inflation of {graph.labels_of(seed)} meets an earlier component",
                    witness=component & covered,
                )
            seeds.append(seed)
            components.append(component)
            covered = covered | component
    leftover = graph.vertices() - covered
    logger.debug(
        f"{kind} decomposition of {graph!r}: {len(components)} components, "
        f"{len(leftover)} leftover vertices"
    )
    return Decomposition(graph, kind, components, seeds, leftover=leftover)


def connected_seed_decomposition(graph, strategy=smallest_edge):
    """V = (⊔ Inf V_i) ⊔ U with non-singleton connected seeds V_i.

    ``strategy(graph, remaining)`` returns the next seed inside
    ``remaining`` or ``None`` once ``remaining`` spans no edge.
    """
    return _seeded(graph, CONNECTED_SEED, strategy)


def arc_seed_decomposition(graph, preferred=()):
    """The decomposition seeded by single edges, ``preferred`` ones first."""
    preferred = [(graph.resolve(a), graph.resolve(b)) for a, b in preferred]
    for a, b in preferred:
        if not graph.has_edge(a, b):
            raise GraphDomainError(
                f'"{graph.label(a)} {graph.label(b)}" is not an edge of {graph!r}'
            )
    strategy = PreferredEdges(preferred) if preferred else smallest_edge
    return _seeded(graph, ARC_SEED, strategy)


def decomposition_from_matching(graph, matching):
    maximal, extendable = is_maximal(graph, matching)
    if not maximal:
        raise ContractViolation(
            f"{matching!r} is not maximal, it can be extended by "
            f'"{graph.label(extendable[0])} {graph.label(extendable[1])}"',
            witness=extendable,
        )
    seeds = [VertexSet(edge) for edge in matching]
    components = [inflate(graph, seed) for seed in seeds]
    for first, second in combinations(components, 2):
        if not first.isdisjoint(second):
            raise ContractViolation(
                "inflations of matching edges overlap", witness=first & second
            )
    leftover = graph.vertices() - VertexSet().union(*components)
    decomposition = Decomposition(graph, ARC_SEED, components, seeds, leftover=leftover)
    return decomposition.validate()


def matching_from_decomposition(decomposition):
    if decomposition.kind != ARC_SEED:
        raise GraphDomainError(
            f"only {ARC_SEED} decompositions come from a matching, "
            f'got "{decomposition.kind}"'
        )
    graph = decomposition.graph
    matching = Matching.for_graph(graph, (tuple(seed) for seed in decomposition.seeds))
    maximal, extendable = is_maximal(graph, matching)
    if not maximal:
        raise ContractViolation(
            f"seeds of {decomposition!r} do not form a maximal matching",
            witness=extendable,
        )
    return matching


def greatest_matching(graph, budget=None):
    """A matching of maximum size, by branch and bound.

    Exponential, so it is kept for cross-checking small cases only.
    """
    check_vertex_budget("greatest_matching", graph.vertex_count, budget)
    adjacency = graph.adjacency()
    best = []

    def search(free, chosen):
        nonlocal best
        if len(chosen) + free.bit_count() // 2 <= len(best):
            return
        # the lowest free vertex that still has a free neighbour
        while free:
            vertex = (free & -free).bit_length() - 1
            if adjacency[vertex] & free:
                break
            free &= ~(1 << vertex)
        if not free:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        rest = free & ~(1 << vertex)
        for other in VertexSet.from_mask(adjacency[vertex] & rest):
            chosen.append((vertex, other))
            search(rest & ~(1 << other), chosen)
            chosen.pop()
        search(rest, chosen)

    search(graph.vertices().mask, [])
    return Matching(best)


def maximal_matchings(graph):
    """Yields every maximal matching of ``graph`` by subset search."""
    edges = graph.sorted_edges()

    def extend(position, used, chosen):
        if position == len(edges):
            if all(used >> a & 1 or used >> b & 1 for a, b in edges):
                yield Matching(chosen)
            return
        a, b = edges[position]
        if not used >> a & 1 and not used >> b & 1:
            chosen.append((a, b))
            yield from extend(position + 1, used | 1 << a | 1 << b, chosen)
            chosen.pop()
        yield from extend(position + 1, used, chosen)

    yield from extend(0, 0, [])
