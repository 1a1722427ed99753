"""Labeled enumeration of small graphs.

Graphs are enumerated without isomorphism reduction: every arc (or edge)
subset of a fixed vertex set is produced exactly once.
"""
from itertools import combinations, product
from math import comb

from .digraph import Digraph
from .exceptions import GraphDomainError
from .undirected import UndirectedGraph


def edge_index(vertex_count):
    """All vertex pairs ``(a, b)`` with ``a < b`` in lexicographic order."""
    return list(combinations(range(vertex_count), 2))


def arc_index(vertex_count, loops=True):
    return [
        (tail, head)
        for tail, head in product(range(vertex_count), repeat=2)
        if loops or tail != head
    ]


def _subsets(items):
    for mask in range(1 << len(items)):
        yield [item for position, item in enumerate(items) if mask >> position & 1]


def all_digraphs(vertex_count, loops=True):
    """Yields every digraph on ``vertex_count`` labeled vertices.

    That is 2^(p²) digraphs with loops and 2^(p(p-1)) without.
    """
    for arcs in _subsets(arc_index(vertex_count, loops=loops)):
        yield Digraph(vertex_count, arcs)


def all_graphs(vertex_count):
    for edges in _subsets(edge_index(vertex_count)):
        yield UndirectedGraph(vertex_count, edges)


def adjacency_from_edges(vertex_count, edges):
    adjacency = [0] * vertex_count
    for a, b in edges:
        adjacency[a] |= 1 << b
        adjacency[b] |= 1 << a
    return adjacency


def count_graphs_with_edges(vertex_count, edge_count):
    return comb(comb(vertex_count, 2), edge_count)


def graphs_with_edges(vertex_count, edge_count):
    """Yields every graph on ``vertex_count`` vertices with exactly
    ``edge_count`` edges, in lexicographic order of their edge lists."""
    pairs = edge_index(vertex_count)
    if not 0 <= edge_count <= len(pairs):
        raise GraphDomainError(
            f"a graph on {vertex_count} vertices has between 0 and "
            f"{len(pairs)} edges, got {edge_count}"
        )
    for edges in combinations(pairs, edge_count):
        yield UndirectedGraph(vertex_count, edges)
