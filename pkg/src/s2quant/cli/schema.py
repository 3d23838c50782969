"""JSON schema of the reports written by ``--format json``."""

REPORT_SCHEMA_VERSION = 1

STEP_SCHEMA = {
    "type": "object",
    "required": ["desc", "anchor", "verdict", "detail"],
    "additionalProperties": False,
    "properties": {
        "desc": {"type": "string"},
        "anchor": {"type": "string"},
        "verdict": {"enum": ["pass", "fail"]},
        "detail": {"type": "string"},
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["version", "command", "params", "steps", "verdict"],
    "additionalProperties": False,
    "properties": {
        "version": {"const": REPORT_SCHEMA_VERSION},
        "command": {"type": "string"},
        "params": {"type": "object"},
        "steps": {"type": "array", "items": STEP_SCHEMA},
        "verdict": {"enum": ["pass", "fail", "error"]},
        # command output (bracket text, decomposition, coefficient table, ...)
        "result": {},
    },
}
