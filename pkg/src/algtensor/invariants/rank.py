"""Tensor rank: flattening lower bounds, decisions over C, and two-sided bounds."""

from __future__ import annotations

from ..errors import SizeCapExceeded
from ..groebner import DEFAULT_BUDGET, Verdict
from ..linalg import rank as matrix_rank
from ..tensor import Tensor, flatten
from .certificates import search_rank_certificate, trivial_rank_certificate
from .systems import VARIABLE_CAP, decide_charts, rank_charts, raw_variable_count
from .values import Decision, InvariantValue


def flattening_rank(T: Tensor, left_modes) -> int:
    return matrix_rank(flatten(T, left_modes))


def flattening_lower_bound(T: Tensor) -> int:
    """Max flattening rank over the single-mode splits (0 for order-one tensors)."""
    if T.order == 1:
        return 0 if T.is_zero() else 1
    return max(flattening_rank(T, [m]) for m in range(1, T.order + 1))


def _cheap_rank_decision(T: Tensor, r: int):
    """Exact arguments that need no Groebner basis; None when they are silent."""
    if flattening_lower_bound(T) > r:
        return Decision(Verdict.INFEASIBLE, how="flattening")
    trivial = trivial_rank_certificate(T)
    if trivial.length <= r:
        return Decision(Verdict.FEASIBLE, trivial, how="fibres")
    cert = search_rank_certificate(T, r)
    if cert is not None:
        return Decision(Verdict.FEASIBLE, cert, how="certificate search")
    return None


def rank_decision(T: Tensor, r: int, budget: int = DEFAULT_BUDGET,
                  variable_cap: int = VARIABLE_CAP) -> Decision:
    """Decide whether T has rank <= r over C.

    Cheap exact arguments go first (flattening bound, the trivial fibre
    decomposition, a small rational certificate search); only then is the
    chart-split decomposition system handed to the Groebner engine.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    cheap = _cheap_rank_decision(T, r)
    if cheap is not None:
        return cheap
    if raw_variable_count(T, r) > variable_cap:
        raise SizeCapExceeded(
            f"rank system has {raw_variable_count(T, r)} variables (cap {variable_cap})")
    verdict, steps, _ = decide_charts(rank_charts(T, r), budget)
    cert = None
    if verdict is Verdict.FEASIBLE:
        cert = search_rank_certificate(T, r, height=2)
    return Decision(verdict, cert, steps, how="groebner")


def rank_bounds(T: Tensor, budget: int = DEFAULT_BUDGET,
                variable_cap: int = VARIABLE_CAP) -> InvariantValue:
    """Two-sided rank bounds, tightened by decisions.

    Feasibility is monotone in r, so three passes suffice. First the
    cheap arguments walk down from the trivial upper bound. Then full
    decisions climb from the flattening bound, since small r give small
    systems and a Feasible answer there closes the gap at once. Whatever
    budget is left goes to full decisions walking down from ``hi``, which
    helps when the small r run out of budget. ``budget`` is shared.
    """
    lo = flattening_lower_bound(T)
    best = trivial_rank_certificate(T)
    hi = best.length
    steps = 0

    def decide(r):
        nonlocal steps
        if budget - steps <= 0:
            return None
        try:
            dec = rank_decision(T, r, budget - steps, variable_cap)
        except SizeCapExceeded:
            return None
        steps += dec.steps
        return dec

    r = hi - 1
    while r >= lo:
        dec = _cheap_rank_decision(T, r)
        if dec is None or not dec.feasible:
            break
        hi, best = r, dec.certificate
        r -= 1
    r = lo
    while r < hi:
        dec = decide(r)
        if dec is None or dec.verdict is Verdict.UNKNOWN:
            break
        if dec.feasible:
            hi = r
            if dec.certificate is not None:
                best = dec.certificate
            break
        lo = r + 1
        r += 1
    r = hi - 1
    while r >= lo:
        dec = decide(r)
        if dec is None or dec.verdict is Verdict.UNKNOWN:
            break
        if dec.infeasible:
            lo = r + 1
            break
        hi = r
        if dec.certificate is not None:
            best = dec.certificate
        r -= 1
    cert = best if best.length == hi else None
    return InvariantValue("rank", lo, hi, steps, cert)
