"""Chunked enumeration of m-edge graphs for the extremal oracle.

Graphs on ``p`` labeled vertices with ``m`` edges are enumerated as
combinations of the lexicographically ordered vertex pairs. Chunk ``i``
holds the combinations whose first pair is pair ``i``, so chunks are
independent and, taken in order, enumerate the combinations in
lexicographic order.
"""
import time
from itertools import combinations

from ..graph.enumeration import edge_index
from ..graph.exceptions import BudgetExceeded
from .bowtie import find_bowtie_mask

DEADLINE_EVERY = 1024


def chunk_indices(vertex_count, edge_count):
    pairs = len(edge_index(vertex_count))
    return list(range(pairs - edge_count + 1))


def search_chunk(vertex_count, edge_count, first, deadline=None):
    """Looks for a bowtie-free graph in chunk ``first``.

    Returns ``(edges, checked)`` where ``edges`` is the first bowtie-free
    edge list in lexicographic order or ``None``, and ``checked`` the number
    of graphs looked at.
    """
    pairs = edge_index(vertex_count)
    a, b = pairs[first]
    base = [0] * vertex_count
    base[a] |= 1 << b
    base[b] |= 1 << a
    checked = 0
    for rest in combinations(pairs[first + 1 :], edge_count - 1):
        checked += 1
        if deadline is not None and not checked % DEADLINE_EVERY:
            if time.time() > deadline:
                raise BudgetExceeded(
                    f"bowtie search for p={vertex_count}, m={edge_count} "
                    "exceeded the time budget"
                )
        adjacency = list(base)
        for c, d in rest:
            adjacency[c] |= 1 << d
            adjacency[d] |= 1 << c
        if find_bowtie_mask(adjacency) is None:
            return [[a, b], *([c, d] for c, d in rest)], checked
    return None, checked
