from itertools import combinations

from hypothesis import strategies as st

from ...graph.enumeration import edge_index
from ...graph.undirected import UndirectedGraph
from ..bowtie import find_bowtie_mask, has_k4_mask

_SPLITS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def has_bowtie_by_subsets(graph):
    """Looks for the six bowtie edges on every 5-vertex subset."""
    for chosen in combinations(range(graph.vertex_count), 5):
        for center in chosen:
            rest = [vertex for vertex in chosen if vertex != center]
            for (a, b), (c, d) in _SPLITS:
                pairs = [
                    (center, rest[a]),
                    (center, rest[b]),
                    (rest[a], rest[b]),
                    (center, rest[c]),
                    (center, rest[d]),
                    (rest[c], rest[d]),
                ]
                if all(graph.has_edge(x, y) for x, y in pairs):
                    return True
    return False


@st.composite
def bowtie_free_graphs(
    draw, min_vertices=1, max_vertices=8, connected=True, k4_free=False
):
    """Random H-free graphs: a random spanning tree (when connected) and then
    random edges in random order, skipping those that would close a bowtie."""
    count = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    adjacency = [0] * count

    def add(a, b):
        adjacency[a] |= 1 << b
        adjacency[b] |= 1 << a

    def remove(a, b):
        adjacency[a] &= ~(1 << b)
        adjacency[b] &= ~(1 << a)

    if connected:
        for vertex in range(1, count):
            add(draw(st.integers(min_value=0, max_value=vertex - 1)), vertex)
    pairs = draw(st.permutations(edge_index(count)))
    limit = draw(st.integers(min_value=0, max_value=len(pairs)))
    for a, b in pairs[:limit]:
        if adjacency[a] >> b & 1:
            continue
        add(a, b)
        if find_bowtie_mask(adjacency) is not None:
            remove(a, b)
        elif k4_free and has_k4_mask(adjacency):
            remove(a, b)
    return UndirectedGraph.from_adjacency(adjacency)


def disjoint_union(first, second):
    offset = first.vertex_count
    return UndirectedGraph(
        offset + second.vertex_count,
        [*first.edges, *((a + offset, b + offset) for a, b in second.edges)],
    )
