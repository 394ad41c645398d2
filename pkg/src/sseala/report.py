"""Canonical check records and deterministic report serialization.

Reports must be byte-identical across runs and worker counts, so records
carry no timestamps and all scalars are rendered as reduced fraction
strings. Key order is fixed by insertion order and preserved by the JSON
encoder. Timing, when anyone wants it, goes to stderr and never into the
report payload.
"""

from __future__ import annotations

import json

from . import __version__
from .sampling import RNG_NAME
from .scalars import Q, qstr

_STATUSES = ("pass", "fail", "skip")


def jsonable(x):
    """Recursively rewrite values into JSON-safe, canonical form."""
    if isinstance(x, bool) or isinstance(x, int) or isinstance(x, str) or x is None:
        return x
    if isinstance(x, Q):
        return qstr(x)
    if isinstance(x, float):
        raise TypeError("floats are banned from reports")
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    return str(x)


def record(suite: str, check: str, status: str, value=None, annotation=None,
           counterexample=None, reason=None) -> dict:
    assert status in _STATUSES
    assert status != "fail" or counterexample is not None, "failures must carry a counterexample"
    out = {"suite": suite, "check": check, "status": status}
    if value is not None:
        out["value"] = jsonable(value)
    if annotation is not None:
        out["annotation"] = annotation
    if counterexample is not None:
        out["counterexample"] = jsonable(counterexample)
    if reason is not None:
        out["reason"] = reason
    return out


def summarize(records: list[dict]) -> dict:
    return {s: sum(1 for r in records if r["status"] == s) for s in _STATUSES}


def make_report(config: dict, records: list[dict]) -> dict:
    return {
        "tool": {"name": "sseala", "version": __version__, "rng": RNG_NAME},
        "config": jsonable(config),
        "checks": records,
        "summary": summarize(records),
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def render_text(report: dict) -> str:
    lines = [f"sseala {report['tool']['version']}"]
    cfg = report.get("config", {})
    if cfg:
        lines.append("config: " + ", ".join(f"{k}={v}" for k, v in cfg.items()))
    for rec in report["checks"]:
        mark = rec["status"].upper()
        line = f"{mark:4s} {rec['suite']}/{rec['check']}"
        if "value" in rec:
            line += f"  value={json.dumps(rec['value'])}"
        if "annotation" in rec:
            line += f"  [{rec['annotation']}]"
        if "counterexample" in rec:
            line += f"  counterexample={json.dumps(rec['counterexample'])}"
        if "reason" in rec:
            line += f"  ({rec['reason']})"
        lines.append(line)
    s = report["summary"]
    lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skip']} skip")
    return "\n".join(lines) + "\n"
