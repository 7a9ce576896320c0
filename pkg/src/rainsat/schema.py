"""Published JSON schema for command-line reports.

Every report carries the command name, the effective configuration
(including the seed and the named random generator), and a timestamp;
command-specific payloads ride alongside. Verdict strings and search
outcome shapes are pinned so downstream tooling can rely on them.
"""

SEARCH_OUTCOME_SCHEMA = {
    "type": "object",
    "required": ["verdict", "nodes", "ms"],
    "properties": {
        "verdict": {"enum": ["found", "none-exists", "budget-exceeded"]},
        "nodes": {"type": "integer", "minimum": 0},
        "ms": {"type": "number", "minimum": 0},
        "witness": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
}

SATURATION_SCHEMA = {
    "type": "object",
    "required": ["verdict", "condition1", "per_nonedge"],
    "properties": {
        "verdict": {
            "enum": ["saturated", "not-rainbow-free-colorable", "missed-edge", "inconclusive"]
        },
        "condition1": SEARCH_OUTCOME_SCHEMA,
        "per_nonedge": {
            "type": "object",
            "additionalProperties": SEARCH_OUTCOME_SCHEMA,
        },
        "missed_edge": {"type": "array", "items": {"type": "integer"}},
        "inconclusive_edges": {"type": "array"},
    },
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "config", "timestamp"],
    "properties": {
        "command": {"type": "string"},
        "timestamp": {"type": "number"},
        "config": {
            "type": "object",
            "required": ["seed", "rng", "budget", "jobs"],
            "properties": {
                "seed": {"type": "integer"},
                "rng": {"type": "string"},
                "jobs": {"type": "integer", "minimum": 1},
                "budget": {
                    "type": "object",
                    "required": ["max_nodes", "max_ms"],
                    "properties": {
                        "max_nodes": {"type": ["integer", "null"]},
                        "max_ms": {"type": ["number", "null"]},
                    },
                },
            },
        },
        "verdict": {"type": "string"},
        "search": SEARCH_OUTCOME_SCHEMA,
        "saturation": SATURATION_SCHEMA,
        "cache_hit": {"type": "boolean"},
        "graph6": {"type": "string"},
        "edge_count": {"type": "integer"},
        "count": {"type": "integer"},
        "exhaustive": {"type": "boolean"},
        "violations": {"type": "array"},
    },
    "additionalProperties": True,
}
