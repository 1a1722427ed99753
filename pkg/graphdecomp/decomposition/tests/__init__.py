from hypothesis import strategies as st

from ...graph.digraph import Digraph
from ..jets import Jet


@st.composite
def jets(draw, max_layers=5, max_width=3):
    """Random jets with their carrier digraph.

    Every vertex of a later layer gets one arc from the layer before it,
    then random forward arcs are added on top.
    """
    widths = draw(
        st.lists(
            st.integers(min_value=1, max_value=max_width),
            min_size=1,
            max_size=max_layers,
        )
    )
    layers = []
    start = 0
    for width in widths:
        layers.append(list(range(start, start + width)))
        start += width
    arcs = set()
    for previous, layer in zip(layers, layers[1:]):
        for vertex in layer:
            arcs.add((draw(st.sampled_from(previous)), vertex))
    forward = [
        (tail, head)
        for i, earlier in enumerate(layers)
        for later in layers[i + 1 :]
        for tail in earlier
        for head in later
    ]
    if forward:
        arcs.update(draw(st.lists(st.sampled_from(forward), max_size=6)))
    graph = Digraph(start, arcs)
    later = [vertex for layer in layers[1:] for vertex in layer]
    back_arcs = draw(st.lists(st.sampled_from(later), unique=True)) if later else []
    loop = draw(st.booleans())
    return graph, Jet(layers), back_arcs, loop
