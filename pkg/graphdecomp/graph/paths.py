import logging

from ..utils import check_deadline, check_vertex_budget
from .exceptions import GraphDomainError
from .vertexset import VertexSet, iter_bits

logger = logging.getLogger(__name__)

# nodes of the search tree between two deadline checks
DEADLINE_EVERY = 1024


class Path(tuple):
    """A sequence of different vertices v₁, …, v_l.

    Adjacency of consecutive vertices depends on the carrier graph and is
    checked by ``is_path_in``.
    """

    def __new__(cls, vertices=()):
        path = super().__new__(cls, vertices)
        if len(set(path)) != len(path):
            raise GraphDomainError(f"path vertices must be distinct: {list(path)}")
        return path

    def __repr__(self):
        return f"Path({list(self)})"

    def as_set(self):
        return VertexSet(self)

    def is_path_in(self, graph):
        if not self:
            return True
        graph.check_subset(self.as_set(), name="path")
        return all(
            graph.out_mask(tail) >> head & 1 for tail, head in zip(self, self[1:])
        )

    def truncated(self):
        """The path without its last vertex."""
        return Path(self[:-1])


def _max_length(masks, vertex_count, deadline=None):
    best = 1
    nodes = 0

    def extend(vertex, visited, length):
        nonlocal best, nodes
        nodes += 1
        if not nodes % DEADLINE_EVERY:
            check_deadline(deadline, "longest path search")
        if length > best:
            best = length
        if best == vertex_count:
            return True
        for following in iter_bits(masks[vertex] & ~visited):
            if extend(following, visited | 1 << following, length + 1):
                return True
        return False

    for start in range(vertex_count):
        if extend(start, 1 << start, 1):
            break
    return best


def _paths_of_length(masks, vertex_count, length, deadline=None):
    nodes = 0

    def extend(path, visited):
        nonlocal nodes
        nodes += 1
        if not nodes % DEADLINE_EVERY:
            check_deadline(deadline, "maximal path enumeration")
        if len(path) == length:
            yield Path(path)
            return
        for following in iter_bits(masks[path[-1]] & ~visited):
            path.append(following)
            yield from extend(path, visited | 1 << following)
            path.pop()

    for start in range(vertex_count):
        yield from extend([start], 1 << start)


class LongestPaths(object):
    """Result of the exhaustive longest path search.

    ``length`` counts vertices, so the path a-b-c-d has length 4. Paths are
    oriented: a maximal path and its reversal are both listed, since each
    orientation gives a different premaximal path.
    """

    def __init__(self, graph, length, deadline=None):
        self.graph = graph
        self.length = length
        self.deadline = deadline

    def __repr__(self):
        return f"<LongestPaths length={self.length}>"

    def maximal_paths(self):
        if not self.length:
            return
        count = self.graph.vertex_count
        masks = [self.graph.out_mask(index) for index in range(count)]
        yield from _paths_of_length(masks, count, self.length, self.deadline)

    def premaximal_paths(self):
        """Maximal paths with their last vertex removed, without repetitions."""
        seen = set()
        for path in self.maximal_paths():
            premaximal = path.truncated()
            if premaximal and premaximal not in seen:
                seen.add(premaximal)
                yield premaximal


def longest_paths(graph, budget=None, deadline=None):
    """Finds the maximum path length of ``graph`` by exhaustive DFS.

    The search is exponential, so graphs with more vertices than the
    ``longest_path`` budget are refused with ``BudgetExceeded``, as is a
    search (or a later ``maximal_paths`` enumeration) still running past
    the wall clock ``deadline``.
    """
    vertex_count = graph.vertex_count
    check_vertex_budget("longest_path", vertex_count, budget)
    if not vertex_count:
        return LongestPaths(graph, 0, deadline)
    masks = [graph.out_mask(index) for index in range(vertex_count)]
    length = _max_length(masks, vertex_count, deadline)
    logger.debug(f"longest path of {graph!r} has {length} vertices")
    return LongestPaths(graph, length, deadline)
