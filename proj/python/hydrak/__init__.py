"""Verification of the Hydra-k partial fields H2 to H5."""

import json

from ._hydrak import (
    ExprError,
    SpecError,
    domain,
    field_names,
    fundamentals,
    gf5_image,
    is_fundamental,
    report_stage_names,
    spec_fingerprint,
    spec_text,
    u25_tuple_count,
)
from ._hydrak import genesis_json as _genesis_json
from ._hydrak import report_json as _report_json
from ._hydrak import run as _run


def report(field, stages=None, workers=1):
    """Stage-by-stage report for one field as a dict."""
    return json.loads(_report_json(field, list(stages or []), workers))


def genesis():
    """Genesis check for H3 as a dict."""
    return json.loads(_genesis_json())


def run(command, field="all", workers=1, prime_start=None):
    """Runs a CLI command; returns (exit_code, parsed JSON document)."""
    code, out = _run(command, field, True, workers, prime_start)
    return code, json.loads(out)


__all__ = [
    "ExprError",
    "SpecError",
    "domain",
    "field_names",
    "fundamentals",
    "genesis",
    "gf5_image",
    "is_fundamental",
    "report",
    "report_stage_names",
    "run",
    "spec_fingerprint",
    "spec_text",
    "u25_tuple_count",
]
