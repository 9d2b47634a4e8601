"""Deterministic report documents for invariant computations.

Reports carry no timestamps or host data, so the same input, verb,
options and engine version give byte-identical output. Structured form
is JSON with sorted keys; text form is a short human summary of the
same document.
"""

from __future__ import annotations

import hashlib
import json

from .groebner import Verdict
from .invariants.certificates import RankCertificate
from .invariants.fekete import FeketeReport
from .invariants.values import Decision, InvariantValue
from .io import tensor_to_json
from .tensor import Restriction, Tensor

ENGINE_VERSION = "0.1.0"


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def certificate_to_json(cert):
    if cert is None:
        return None
    if isinstance(cert, RankCertificate):
        return {"type": "decomposition", "terms": cert.to_json()}
    if isinstance(cert, Restriction):
        return {"type": "restriction",
                "maps": [[[str(v) for v in row] for row in phi.matrix] for phi in cert.maps]}
    raise TypeError(f"unknown certificate {type(cert).__name__}")


def value_to_json(v: InvariantValue):
    return {
        "kind": v.kind,
        "status": v.status,
        "value": v.value,
        "lo": v.lo,
        "hi": v.hi,
        "steps": v.steps,
        "certificate": certificate_to_json(v.certificate),
    }


def decision_to_json(d: Decision, r: int):
    return {
        "r": r,
        "verdict": str(d.verdict),
        "how": d.how,
        "steps": d.steps,
        "certificate": certificate_to_json(d.certificate),
    }


def _root(x):
    return None if x is None else round(x, 12)


def fekete_to_json(rep: FeketeReport):
    return {
        "kind": rep.kind,
        "bound_side": rep.bound_side,
        "running_bound": _root(rep.running_bound),
        "entries": [
            {
                "n": e.n,
                "value": value_to_json(e.value),
                "root_lo": _root(e.root_lo),
                "root_hi": _root(e.root_hi),
                "running": _root(e.running),
            }
            for e in rep.entries
        ],
    }


def result_to_json(result, **extra):
    """Dispatch on the result type; ``extra`` is merged in (e.g. ``r`` for decisions)."""
    if isinstance(result, InvariantValue):
        return value_to_json(result)
    if isinstance(result, Decision):
        return decision_to_json(result, extra["r"])
    if isinstance(result, FeketeReport):
        return fekete_to_json(result)
    if isinstance(result, Tensor):
        return tensor_to_json(result)
    return result


def is_complete(payload) -> bool:
    """False when anything in the payload carries an unknown status or verdict."""
    if isinstance(payload, dict):
        if payload.get("status") == "unknown" or payload.get("verdict") == str(Verdict.UNKNOWN):
            return False
        return all(is_complete(v) for v in payload.values())
    if isinstance(payload, list):
        return all(is_complete(v) for v in payload)
    return True


def make_report(verb, input_digest, options, result=None, steps=0, error=None):
    doc = {
        "engine_version": ENGINE_VERSION,
        "verb": verb,
        "input_digest": input_digest,
        "options": options,
        "steps_used": steps,
    }
    if error is not None:
        doc["status"] = "error"
        doc["error"] = error
    else:
        doc["status"] = "complete" if is_complete(result) else "unknown"
        doc["result"] = result
    return doc


def render_structured(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _text_value(v):
    if v["status"] == "exact":
        return f"{v['kind']} = {v['value']}"
    return f"{v['kind']} in [{v['lo']}, {v['hi']}] (unknown)"


def render_text(doc) -> str:
    lines = [f"algtensor {doc['engine_version']}  {doc['verb']}  {doc['input_digest']}"]
    opts = ", ".join(f"{k}={v}" for k, v in sorted(doc["options"].items()))
    if opts:
        lines.append(f"options: {opts}")
    if doc["status"] == "error":
        lines.append(f"error: {doc['error']['type']}: {doc['error']['message']}")
        return "\n".join(lines) + "\n"
    res = doc["result"]
    verb = doc["verb"]
    if verb in ("rank", "subrank", "georank") and "verdict" in res:
        lines.append(f"{verb} <= {res['r']}: {res['verdict']} ({res['how']})" if verb == "rank"
                     else f"{verb} >= {res['r']}: {res['verdict']} ({res['how']})")
    elif verb in ("rank", "subrank", "georank"):
        lines.append(_text_value(res))
        if res.get("certificate"):
            lines.append(f"certificate: {res['certificate']['type']}")
    elif verb == "relideal":
        if res.get("status") == "unknown":
            lines.append("relation ideal: unknown (budget exhausted)")
        else:
            lines.append(f"relation ideal in {', '.join(res['variables'])}:")
            lines.extend(f"  {g}" for g in res["basis"])
    elif verb == "fekete":
        lines.append(f"kind: {res['kind']}  running {res['bound_side'] or 'value'}: {res['running_bound']}")
        for e in res["entries"]:
            lines.append(f"  n={e['n']}: {_text_value(e['value'])}, root in [{e['root_lo']}, {e['root_hi']}]"
                         + (f", running {e['running']}" if e["running"] is not None else ""))
    elif verb in ("conjugate", "boxpow"):
        lines.append(f"tensor dims {res['dims']}, {len(res['entries'])} nonzero entries")
        for e in res["entries"][:20]:
            lines.append(f"  {e['index']}: {e['value']}")
        if len(res["entries"]) > 20:
            lines.append("  ...")
    elif verb == "info":
        for k in sorted(res):
            lines.append(f"{k}: {res[k]}")
    lines.append(f"steps used: {doc['steps_used']}  status: {doc['status']}")
    return "\n".join(lines) + "\n"
