"""Command-line front end: ``algtensor VERB TENSOR_FILE [options]``.

Verbs: rank, subrank, georank, relideal, fekete, conjugate, boxpow, info.

Exit codes
    0  the result is complete (exact values, decided verdicts)
    3  the result contains Unknown (a budget ran out); rerun with a larger --budget
    1  the input or the engine raised an error (the report says which)
    2  usage error (bad flags or arguments)
"""

from __future__ import annotations

import argparse
import sys

from .errors import AlgTensorError
from .groebner import DEFAULT_BUDGET, Unknown
from .invariants import (
    fekete_estimate,
    flattening_rank,
    geometric_rank,
    rank_bounds,
    rank_decision,
    relation_basis_strings,
    relation_ideal,
    subrank_bounds,
    subrank_decision,
)
from .io import atomic_write, parse_tensor_text
from .numberfield import automorphisms
from .report import digest, make_report, render_structured, render_text, result_to_json
from .tensor import box_power, conjugate_tensor

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3

VERBS = ("rank", "subrank", "georank", "relideal", "fekete", "conjugate", "boxpow", "info")


def build_parser():
    p = argparse.ArgumentParser(prog="algtensor", description="Exact tensor invariants over number fields.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("tensor", help="tensor file (JSON, 1-based indices)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help=f"Groebner step budget (S-pair reductions), default {DEFAULT_BUDGET}")
    p.add_argument("-n", "--n-max", type=int, default=None, help="power for boxpow / largest power for fekete")
    p.add_argument("-r", type=int, default=None, help="decide a single r instead of computing bounds")
    p.add_argument("--kind", choices=("rank", "subrank", "geometric_rank"), default="subrank",
                   help="invariant for fekete (default subrank)")
    p.add_argument("--automorphism", type=int, default=None,
                   help="1-based index into the automorphism list for conjugate (default: first non-identity)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--output", default=None, help="write the report here (atomically) instead of stdout")
    return p


def _options(args):
    opts = {"budget": args.budget}
    if args.verb in ("rank", "subrank") and args.r is not None:
        opts["r"] = args.r
    if args.verb in ("fekete", "boxpow"):
        opts["n_max"] = args.n_max
    if args.verb == "fekete":
        opts["kind"] = args.kind
    if args.verb == "conjugate" and args.automorphism is not None:
        opts["automorphism"] = args.automorphism
    return opts


def _info(T):
    F = T.field
    out = {
        "order": T.order,
        "dims": list(T.dims),
        "field": str(F),
        "nonzero_entries": len(T.nonzero_entries()),
    }
    if T.order >= 2:
        out["flattening_ranks"] = [flattening_rank(T, [m]) for m in range(1, T.order + 1)]
    out["automorphisms"] = [str(s) for s in automorphisms(F)]
    return out


def run(args):
    """Dispatch one command. Returns (result payload, steps used)."""
    with open(args.tensor, "rb") as fh:
        raw = fh.read()
    T = parse_tensor_text(raw.decode("utf-8"))
    verb = args.verb
    if verb == "rank":
        if args.r is not None:
            d = rank_decision(T, args.r, args.budget)
            return result_to_json(d, r=args.r), d.steps
        v = rank_bounds(T, args.budget)
        return result_to_json(v), v.steps
    if verb == "subrank":
        if args.r is not None:
            d = subrank_decision(T, args.r, args.budget)
            return result_to_json(d, r=args.r), d.steps
        v = subrank_bounds(T, args.budget)
        return result_to_json(v), v.steps
    if verb == "georank":
        v = geometric_rank(T, args.budget)
        return result_to_json(v), v.steps
    if verb == "relideal":
        I = relation_ideal(T, args.budget)
        if isinstance(I, Unknown):
            return {"status": "unknown", "reason": I.reason}, I.steps
        return {"variables": list(I.ring.names), "basis": relation_basis_strings(I)}, 0
    if verb == "fekete":
        rep = fekete_estimate(args.kind, T, args.n_max or 1, args.budget)
        return result_to_json(rep), sum(e.value.steps for e in rep.entries)
    if verb == "conjugate":
        auts = automorphisms(T.field)
        if args.automorphism is None:
            sigma = next((s for s in auts if not s.is_identity), auts[0])
        else:
            if not 1 <= args.automorphism <= len(auts):
                raise AlgTensorError(f"automorphism index must lie in 1..{len(auts)}")
            sigma = auts[args.automorphism - 1]
        out = result_to_json(conjugate_tensor(sigma, T))
        out["automorphism"] = str(sigma)
        return out, 0
    if verb == "boxpow":
        return result_to_json(box_power(T, args.n_max if args.n_max is not None else 1)), 0
    return _info(T), 0


def _input_digest(path):
    try:
        with open(path, "rb") as fh:
            return digest(fh.read())
    except OSError:
        return None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget <= 0:
        parser.error("--budget must be positive")
    if args.n_max is not None and args.n_max < (0 if args.verb == "boxpow" else 1):
        parser.error("-n/--n-max is out of range")
    if args.verb == "fekete" and args.n_max is None:
        parser.error("fekete needs -n/--n-max")
    opts = _options(args)
    try:
        payload, steps = run(args)
        doc = make_report(args.verb, _input_digest(args.tensor), opts, payload, steps)
    except Exception as exc:  # surfaced verbatim in the report
        doc = make_report(args.verb, _input_digest(args.tensor), opts,
                          error={"type": type(exc).__name__, "message": str(exc)})
    text = render_structured(doc) if args.format == "structured" else render_text(doc)
    if args.output:
        atomic_write(args.output, text)
    else:
        sys.stdout.write(text)
    return {"complete": EXIT_OK, "unknown": EXIT_UNKNOWN}.get(doc["status"], EXIT_ERROR)


if __name__ == "__main__":
    sys.exit(main())
