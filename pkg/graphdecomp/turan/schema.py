# JSON reports of the turan commands
_pair = {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}

bowtie_schema = {
    "type": "object",
    "additionalProperties": False,
    "required": ["center", "triangles"],
    "properties": {
        "center": {"type": "string"},
        "triangles": {
            "type": "array",
            "items": _pair,
            "minItems": 2,
            "maxItems": 2,
        },
    },
}

extremal_report_schema = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Extremal report",
    "type": "object",
    "additionalProperties": False,
    "required": [
        "p",
        "formula_bound",
        "oracle_bound",
        "formula_matches",
        "method",
        "witness_edges",
    ],
    "properties": {
        "p": {"type": "integer", "minimum": 2},
        "formula_bound": {"type": "integer"},
        "oracle_bound": {"type": "integer", "minimum": 0},
        "formula_matches": {"type": "boolean"},
        "method": {"type": "string", "enum": ["construction", "exhaustive"]},
        "refuted_edge_count": {"type": ["integer", "null"]},
        "witness_edges": {"type": "array", "items": _pair},
    },
}

lemma_report_schema = {
    "type": "object",
    "additionalProperties": False,
    "required": ["name", "applicable", "ok", "violations"],
    "properties": {
        "name": {"type": "string"},
        "applicable": {"type": "boolean"},
        "reason": {"type": ["string", "null"]},
        "ok": {"type": "boolean"},
        "details": {"type": "object"},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["condition"],
                "properties": {"condition": {"type": "string"}},
            },
        },
    },
}

turan_check_schema = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Bowtie check",
    "type": "object",
    "additionalProperties": False,
    "required": ["p", "q", "formula_bound", "bowtie", "k4", "within_bound", "lemmas"],
    "properties": {
        "p": {"type": "integer", "minimum": 0},
        "q": {"type": "integer", "minimum": 0},
        "formula_bound": {"type": "integer"},
        "bowtie": {"oneOf": [{"type": "null"}, bowtie_schema]},
        "k4": {"type": "boolean"},
        "within_bound": {"type": "boolean"},
        "lemmas": {"type": "array", "items": lemma_report_schema},
    },
}
