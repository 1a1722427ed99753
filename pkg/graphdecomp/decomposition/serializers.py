"""Converts decompositions and friends to JSON-ready dicts.

Vertices are written as labels; label arrays are sorted so reports are
deterministic for a given input.
"""
from .base import INTERVAL
from .inflation import inflate, is_hyperinflation
from .intervals import Region
from .jets import jet_layers


def _labels(graph, subset):
    return sorted(graph.labels_of(subset))


def _edge(graph, edge):
    return sorted(graph.label(vertex) for vertex in edge)


def decomposition_to_dict(decomposition):
    graph = decomposition.graph
    components = []
    for position, component in enumerate(decomposition.components):
        item = {
            "vertices": _labels(graph, component),
            "seed": _labels(graph, decomposition.seeds[position]),
        }
        if decomposition.kind == INTERVAL:
            headings = decomposition.headings[position]
            region = Region(component, headings)
            layers = jet_layers(graph, region, headings.min())
            item["headings"] = _labels(graph, headings)
            item["jet_layers"] = [_labels(graph, layer) for layer in layers]
        components.append(item)
    components.sort(key=lambda item: item["vertices"])
    return {
        "kind": decomposition.kind,
        "directed": graph.directed,
        "components": components,
        "leftover": _labels(graph, decomposition.leftover),
    }


def matching_to_dict(graph, matching, maximal, extendable=None, decomposition=None):
    data = {
        "matching": sorted(_edge(graph, edge) for edge in matching),
        "maximal": maximal,
    }
    if not maximal:
        data["extendable_by"] = _edge(graph, extendable)
    if decomposition is not None:
        data["decomposition"] = decomposition_to_dict(decomposition)
    return data


def trace_to_dict(graph, trace):
    # a minimal set with the same hyperinflation
    seed = is_hyperinflation(graph, trace.result)
    return {
        "input": _labels(graph, trace.initial),
        "inflation": _labels(graph, inflate(graph, trace.initial)),
        "layers": [_labels(graph, layer) for layer in trace.layers],
        "steps": trace.steps,
        "hyperinflation": _labels(graph, trace.result),
        "stable": trace.steps == 0,
        "minimal_seed": _labels(graph, seed),
    }


def jet_check_to_dict(graph, jet, ok, violation):
    data = {
        "layers": [_labels(graph, layer) for layer in jet.layers],
        "jet": ok,
    }
    if violation is not None:
        witness = violation.witness
        if isinstance(witness, tuple):
            witness = [graph.label(witness[0]), graph.label(witness[1])]
        else:
            witness = [graph.label(witness)]
        data["violation"] = {"condition": violation.condition, "witness": witness}
    return data
