# JSON reports written by the graphdecomp command
_labels = {"type": "array", "items": {"type": "string"}}
_edges = {
    "type": "array",
    "items": {
        "type": "array",
        "items": {"type": "string"},
        "minItems": 2,
        "maxItems": 2,
    },
}

decomposition_schema = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Decomposition",
    "type": "object",
    "additionalProperties": False,
    "required": ["kind", "components", "leftover"],
    "properties": {
        "kind": {"type": "string", "enum": ["interval", "connected-seed", "arc-seed"]},
        "directed": {"type": "boolean"},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["vertices", "seed"],
                "properties": {
                    "vertices": _labels,
                    "seed": _labels,
                    "headings": _labels,
                    "jet_layers": {"type": "array", "items": _labels},
                },
            },
        },
        "leftover": _labels,
    },
}

matching_schema = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Matching",
    "type": "object",
    "additionalProperties": False,
    "required": ["matching", "maximal"],
    "properties": {
        "matching": _edges,
        "maximal": {"type": "boolean"},
        "extendable_by": {"type": ["array", "null"], "items": {"type": "string"}},
        "decomposition": decomposition_schema,
    },
}

trace_schema = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Inflation trace",
    "type": "object",
    "additionalProperties": False,
    "required": ["input", "inflation", "layers", "steps", "hyperinflation", "stable"],
    "properties": {
        "input": _labels,
        "inflation": _labels,
        "layers": {"type": "array", "items": _labels, "minItems": 1},
        "steps": {"type": "integer", "minimum": 0},
        "hyperinflation": _labels,
        "stable": {"type": "boolean"},
        "minimal_seed": _labels,
    },
}

jet_check_schema = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Jet check",
    "type": "object",
    "additionalProperties": False,
    "required": ["layers", "jet"],
    "properties": {
        "layers": {"type": "array", "items": _labels},
        "jet": {"type": "boolean"},
        "violation": {
            "type": "object",
            "additionalProperties": False,
            "required": ["condition", "witness"],
            "properties": {
                "condition": {
                    "type": "string",
                    "enum": ["no-backward-arcs", "forward-path"],
                },
                "witness": _labels,
            },
        },
    },
}
