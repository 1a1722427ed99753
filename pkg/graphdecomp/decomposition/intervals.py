"""Regions, intervals and the seeded decomposition process.

A region is the hyperinflation of a single vertex, any such vertex being a
heading of it. Two regions are either disjoint or nested, so the maximal
regions (intervals) partition the vertex set, and that partition is the
unique interval decomposition.
"""
import logging

from ..graph.exceptions import ContractViolation, GraphDomainError
from ..graph.vertexset import EMPTY, VertexSet
from .base import CONNECTED_SEED, INTERVAL, Decomposition
from .inflation import hull, hyperinflate_mask, input_masks

logger = logging.getLogger(__name__)


class Region(object):
    def __init__(self, vertices, headings):
        self.vertices = vertices
        self.headings = headings

    def __repr__(self):
        return f"Region({sorted(self.vertices)}, headings={sorted(self.headings)})"

    def __eq__(self, other):
        if not isinstance(other, Region):
            return NotImplemented
        return self.vertices == other.vertices and self.headings == other.headings

    def __hash__(self):
        return hash((self.vertices, self.headings))


def singleton_hulls(graph):
    """Returns the mask of Inf^∞{v} for every vertex v."""
    masks = input_masks(graph)
    return [
        hyperinflate_mask(masks, 1 << vertex) for vertex in range(graph.vertex_count)
    ]


def _headings(hulls, mask):
    return VertexSet(vertex for vertex, other in enumerate(hulls) if other == mask)


def region_of(graph, vertex):
    index = graph.resolve(vertex)
    hulls = singleton_hulls(graph)
    mask = hulls[index]
    return Region(VertexSet.from_mask(mask), _headings(hulls, mask))


def interval_decomposition(graph):
    """The unique decomposition of ``graph`` into intervals.

    Components are ordered by their smallest vertex; each is seeded by its
    smallest heading.
    """
    hulls = singleton_hulls(graph)
    intervals = set()
    for mask in hulls:
        # maximal: no other region strictly contains it
        if not any(other != mask and not mask & ~other for other in hulls):
            intervals.add(mask)
    components = sorted(
        (VertexSet.from_mask(mask) for mask in intervals), key=lambda c: c.min()
    )
    headings = [_headings(hulls, component.mask) for component in components]
    seeds = [VertexSet([heads.min()]) for heads in headings]
    return Decomposition(graph, INTERVAL, components, seeds, headings=headings)


def _check_region(graph, region):
    vertices = graph.check_subset(region.vertices, name="region")
    hulls = singleton_hulls(graph)
    headings = _headings(hulls, vertices.mask)
    if not headings or headings != region.headings:
        raise GraphDomainError(f"{region!r} is not a region of {graph!r}")
    return vertices


def unique_heading_witness(graph, region):
    """Looks for a vertex y outside the region with an arc into it.

    Such an arc can only enter at the heading, which is then unique.
    Returns the pair ``(y, x)`` of ``VertexId`` or ``None`` when no arc
    enters the region from outside.
    """
    vertices = _check_region(graph, region)
    for outside in graph.vertices() - vertices:
        entries = graph.out_set(outside) & vertices
        if not entries:
            continue
        if len(entries) != 1 or region.headings != entries:
            raise ContractViolation(
                f"vertex {graph.label(outside)} enters {region!r} at {sorted(entries)}",
                witness=(outside, entries),
            )
        return graph.vertex(outside), graph.vertex(entries.min())
    return None


def smallest_vertex(graph, remaining):
    """Default seed strategy: the smallest remaining vertex as a singleton."""
    return VertexSet([remaining.min()])


class SeedListStrategy(object):
    """Uses the given seeds in order, then falls back to ``fallback``."""

    def __init__(self, seeds, fallback=smallest_vertex):
        self.seeds = list(seeds)
        self.fallback = fallback

    def __call__(self, graph, remaining):
        if self.seeds:
            return graph.check_subset(self.seeds.pop(0), name="seed")
        return self.fallback(graph, remaining)


def seeded_decomposition(graph, strategy=smallest_vertex):
    """Builds a decomposition from connected seeds picked by ``strategy``.

    ``strategy(graph, remaining)`` must return a nonempty connected subset
    of the vertices no component covers yet. When the hyperinflation of a
    new seed meets earlier components it contains all of them, and they are
    replaced by it; otherwise it is appended.
    """
    vertices = graph.vertices()
    seeds = []
    components = []
    covered = EMPTY
    while covered != vertices:
        remaining = vertices - covered
        seed = graph.check_subset(strategy(graph, remaining), name="seed")
        if not seed or not seed <= remaining:
            raise ContractViolation(
                f"seed {graph.labels_of(seed)} is not a nonempty subset of the "
                f"uncovered vertices {graph.labels_of(remaining)}",
                witness=seed,
            )
        if not graph.is_connected_subset(seed):
            raise ContractViolation(
                f"seed {graph.labels_of(seed)} is not connected", witness=seed
            )
        component = hull(graph, seed)
        overlapping = [i for i, other in enumerate(components) if other & component]
        for i in overlapping:
            if not components[i] <= component:
                raise ContractViolation(
                    "hyperinflation of a connected seed meets a component "
                    "without containing it",
                    witness=components[i],
                )
        if overlapping:
            logger.debug(
                f"seed {graph.labels_of(seed)} replaces {len(overlapping)} components"
            )
            position = overlapping[0]
            seeds = [s for i, s in enumerate(seeds) if i not in overlapping]
            components = [c for i, c in enumerate(components) if i not in overlapping]
            seeds.insert(position, seed)
            components.insert(position, component)
        else:
            seeds.append(seed)
            components.append(component)
        grown = covered | component
        # the seed is uncovered, so every round strictly grows the covered set
        assert grown > covered
        covered = grown
    return Decomposition(graph, CONNECTED_SEED, components, seeds)
