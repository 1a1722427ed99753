"""Bowtie search.

The bowtie H is two triangles sharing exactly one vertex, its center. A
graph contains H as a subgraph (not necessarily induced) iff some vertex
lies on two triangles that meet only in it.

The mask functions take the adjacency bitmasks of an undirected graph and
import nothing from the settings, so they can run in worker processes.
"""
from collections import namedtuple
from itertools import combinations

from ..graph.vertexset import iter_bits

BowtieWitness = namedtuple("BowtieWitness", "center triangle1 triangle2")


def find_bowtie_mask(adjacency):
    """Returns ``(center, (a, b), (c, d))`` as indices, or ``None``."""
    for center, neighbours in enumerate(adjacency):
        if neighbours.bit_count() < 4:
            continue
        triangles = [
            (a, b)
            for a in iter_bits(neighbours)
            for b in iter_bits(adjacency[a] & neighbours & ~((2 << a) - 1))
        ]
        for first, second in combinations(triangles, 2):
            if first[0] not in second and first[1] not in second:
                return center, first, second
    return None


def has_triangle_mask(adjacency):
    return any(
        adjacency[a] & adjacency[b]
        for a, neighbours in enumerate(adjacency)
        for b in iter_bits(neighbours)
        if a < b
    )


def has_k4_mask(adjacency):
    for a, neighbours in enumerate(adjacency):
        for b in iter_bits(neighbours & ~((2 << a) - 1)):
            common = adjacency[a] & adjacency[b] & ~((2 << b) - 1)
            for c in iter_bits(common):
                if adjacency[c] & common:
                    return True
    return False


def find_bowtie(graph):
    """Returns a ``BowtieWitness`` of ``VertexId``, or ``None`` if the graph
    is bowtie-free."""
    found = find_bowtie_mask(graph.adjacency())
    if found is None:
        return None
    center, first, second = found
    return BowtieWitness(
        graph.vertex(center),
        tuple(graph.vertex(v) for v in first),
        tuple(graph.vertex(v) for v in second),
    )


def is_bowtie_free(graph):
    return find_bowtie_mask(graph.adjacency()) is None


def witness_to_dict(witness):
    return {
        "center": witness.center.label,
        "triangles": [
            [vertex.label for vertex in witness.triangle1],
            [vertex.label for vertex in witness.triangle2],
        ],
    }
