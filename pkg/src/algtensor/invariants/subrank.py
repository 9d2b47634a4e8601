"""Subrank: decisions over C and two-sided bounds."""

from __future__ import annotations

from ..errors import SizeCapExceeded
from ..groebner import DEFAULT_BUDGET, Verdict
from ..tensor import Tensor
from .certificates import search_subrank_certificate, zero_restriction
from .rank import flattening_rank
from .systems import VARIABLE_CAP, decide_charts, raw_variable_count, subrank_charts
from .values import Decision, InvariantValue


def subrank_upper_bound(T: Tensor) -> int:
    """Min single-mode flattening rank: restrictions never raise flattening rank."""
    if T.order == 1:
        return 0 if T.is_zero() else 1
    return min(flattening_rank(T, [m]) for m in range(1, T.order + 1))


def subrank_decision(T: Tensor, r: int, budget: int = DEFAULT_BUDGET,
                     variable_cap: int = VARIABLE_CAP) -> Decision:
    """Decide whether linear maps carry T onto the unit tensor <r> over C."""
    if not 0 <= r <= min(T.dims):
        raise ValueError(f"r must lie in [0, {min(T.dims)}]")
    if r == 0:
        return Decision(Verdict.FEASIBLE, zero_restriction(T, 0), how="trivial")
    if r > subrank_upper_bound(T):
        return Decision(Verdict.INFEASIBLE, how="flattening")
    cert = search_subrank_certificate(T, r)
    if cert is not None:
        return Decision(Verdict.FEASIBLE, cert, how="certificate search")
    if raw_variable_count(T, r) > variable_cap:
        raise SizeCapExceeded(
            f"subrank system has {raw_variable_count(T, r)} variables (cap {variable_cap})")
    verdict, steps, _ = decide_charts(subrank_charts(T, r), budget)
    cert = None
    if verdict is Verdict.FEASIBLE:
        cert = search_subrank_certificate(T, r, height=2)
    return Decision(verdict, cert, steps, how="groebner")


def subrank_bounds(T: Tensor, budget: int = DEFAULT_BUDGET,
                   variable_cap: int = VARIABLE_CAP) -> InvariantValue:
    """Two-sided subrank bounds from an ascending run of decisions.

    Feasibility is monotone in r (project <r> onto <r-1>), so the first
    Infeasible r caps the value at r - 1. An Unknown r does not stop the
    scan: a larger r may still be refuted and lower the upper bound.
    """
    hi = subrank_upper_bound(T)
    lo = 0
    cert = zero_restriction(T, 0)
    steps = 0
    for r in range(1, hi + 1):
        if budget - steps <= 0:
            break
        try:
            dec = subrank_decision(T, r, budget - steps, variable_cap)
        except SizeCapExceeded:
            break
        steps += dec.steps
        if dec.verdict is Verdict.FEASIBLE:
            lo, cert = r, dec.certificate
        elif dec.verdict is Verdict.INFEASIBLE:
            hi = r - 1
            break
    return InvariantValue("subrank", lo, hi, steps, cert)
