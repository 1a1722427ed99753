"""The inflation operator and its fixpoint.

Inf U adds to U every vertex whose inputs are nonempty and lie in U. The
hyperinflation Inf^∞ U iterates Inf until nothing changes; on finite
graphs it is the hull, the smallest stable superset of U. For undirected
graphs D(v) plays the role of D⁻(v) and a single step already reaches the
fixpoint.

Every set that is the hyperinflation of something is stable, and every
stable set is its own hyperinflation, so on finite graphs the two notions
coincide. That equivalence is derived, not stated as a definition.
"""
from ..graph.vertexset import VertexSet, iter_bits


def input_masks(graph):
    return [graph.in_mask(index) for index in range(graph.vertex_count)]


def inflate_mask(masks, mask):
    """``inflate`` on raw bitmasks, ``masks[v]`` being the inputs of ``v``."""
    result = mask
    outside = ((1 << len(masks)) - 1) & ~mask
    for vertex in iter_bits(outside):
        inputs = masks[vertex]
        if inputs and not inputs & ~mask:
            result |= 1 << vertex
    return result


def hyperinflate_mask(masks, mask):
    while True:
        inflated = inflate_mask(masks, mask)
        if inflated == mask:
            return mask
        mask = inflated


def inflate(graph, subset):
    """Inf U = U ∪ {v : ∅ ≠ D⁻(v) ⊆ U}"""
    subset = graph.check_subset(subset)
    return VertexSet.from_mask(inflate_mask(input_masks(graph), subset.mask))


def inflate_n(graph, subset, steps):
    if not isinstance(steps, int) or steps < 0:
        raise ValueError(f"steps must be a nonnegative integer, got {steps!r}")
    subset = graph.check_subset(subset)
    masks = input_masks(graph)
    mask = subset.mask
    for _ in range(steps):
        inflated = inflate_mask(masks, mask)
        if inflated == mask:
            break
        mask = inflated
    return VertexSet.from_mask(mask)


class InflationTrace(object):
    """The layers U = Inf⁰U ⊂ Inf¹U ⊂ … ⊂ Inf^k U of a hyperinflation.

    Layers grow strictly and the last one is stable.
    """

    def __init__(self, layers):
        self.layers = tuple(layers)

    def __repr__(self):
        return f"<InflationTrace steps={self.steps} result={self.result!r}>"

    def __len__(self):
        return len(self.layers)

    def __iter__(self):
        return iter(self.layers)

    @property
    def initial(self):
        return self.layers[0]

    @property
    def result(self):
        return self.layers[-1]

    @property
    def steps(self):
        return len(self.layers) - 1

    def increments(self):
        """Yields Inf^i U \\ Inf^(i-1) U for i = 1 .. k."""
        for previous, layer in zip(self.layers, self.layers[1:]):
            yield layer - previous


def hyperinflate(graph, subset):
    subset = graph.check_subset(subset)
    masks = input_masks(graph)
    layers = [subset]
    while True:
        inflated = VertexSet.from_mask(inflate_mask(masks, layers[-1].mask))
        if inflated == layers[-1]:
            return InflationTrace(layers)
        layers.append(inflated)


def hull(graph, subset):
    subset = graph.check_subset(subset)
    return VertexSet.from_mask(hyperinflate_mask(input_masks(graph), subset.mask))


def is_stable(graph, subset):
    return inflate(graph, subset) == graph.check_subset(subset)


def is_hyperinflation(graph, subset):
    """Returns a set whose hyperinflation is ``subset``, or ``None``.

    Only stable sets have one. The witness is found greedily, trying to drop
    vertices in descending index order, so it is minimal (no vertex can be
    removed) but not necessarily of minimum size.
    """
    subset = graph.check_subset(subset)
    masks = input_masks(graph)
    if inflate_mask(masks, subset.mask) != subset.mask:
        return None
    witness = subset.mask
    for vertex in sorted(subset, reverse=True):
        candidate = witness & ~(1 << vertex)
        if hyperinflate_mask(masks, candidate) == subset.mask:
            witness = candidate
    return VertexSet.from_mask(witness)


def is_connected_hyperinflation_pair(graph, first, second):
    """Checks the connected hyperinflation theorem on one pair of sets.

    When ``first`` is connected, the two hyperinflations meet and the
    hyperinflation of ``first`` misses ``second``, then it lies inside the
    hyperinflation of ``second``. Returns ``None`` when the hypotheses do
    not hold, otherwise whether the conclusion does.
    """
    first = graph.check_subset(first)
    second = graph.check_subset(second)
    first_hull = hull(graph, first)
    second_hull = hull(graph, second)
    if (
        not graph.is_connected_subset(first)
        or first_hull.isdisjoint(second_hull)
        or not first_hull.isdisjoint(second)
    ):
        return None
    return first_hull <= second_hull
