"""Finite-n estimates of asymptotic ranks along vertical tensor powers.

For a sub-multiplicative invariant (rank) every value f(T^n)^(1/n)
bounds the limit from above, and for a super-multiplicative one
(subrank) from below; this is Fekete's lemma. We also propagate the
same multiplicativity between powers: certificates for T^k and T^(n-k)
combine, via Kronecker products, into a certificate for T^n. Geometric
rank gets per-power values only, with no monotone claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import SizeCapExceeded
from ..groebner import DEFAULT_BUDGET
from ..tensor import BOX_SIZE_CAP, LinearMap, Restriction, Tensor, box_power
from .certificates import RankCertificate
from .geometric import geometric_rank
from .rank import rank_bounds
from .subrank import subrank_bounds
from .values import KINDS, InvariantValue


def nth_root(value: int, n: int) -> float:
    """value ** (1/n), exact whenever value is a perfect n-th power."""
    if value <= 0:
        return 0.0
    k = round(value ** (1.0 / n))
    for c in (k - 1, k, k + 1):
        if c > 0 and c ** n == value:
            return float(c)
    return value ** (1.0 / n)


def box_rank_certificate(C1: RankCertificate, C2: RankCertificate) -> RankCertificate:
    """Decomposition of T1 [x] T2 from decompositions of T1 and T2."""
    terms = []
    for t1 in C1.terms:
        for t2 in C2.terms:
            terms.append(tuple(tuple(np.multiply.outer(np.array(u, dtype=object),
                                                       np.array(v, dtype=object)).reshape(-1))
                               for u, v in zip(t1, t2)))
    return RankCertificate(tuple(terms))


def box_restriction(R1: Restriction, R2: Restriction) -> Restriction:
    """Maps phi_m (x) psi_m; they carry T1 [x] T2 onto <r1> [x] <r2> = <r1 r2>."""
    return Restriction(tuple(LinearMap(np.kron(a.matrix, b.matrix)) for a, b in zip(R1.maps, R2.maps)))


@dataclass(frozen=True)
class FeketeEntry:
    n: int
    value: InvariantValue
    root_lo: float
    root_hi: float
    running: float | None


@dataclass(frozen=True)
class FeketeReport:
    kind: str
    entries: tuple
    bound_side: str | None  # "upper" for rank, "lower" for subrank

    @property
    def running_bound(self):
        return self.entries[-1].running if self.entries else None

    def running_sequence(self):
        return [e.running for e in self.entries]


def _combine(kind, values, n):
    """Best bound for T^n implied by multiplicativity over splits n = k + (n - k)."""
    best = None
    for k in range(1, n // 2 + 1):
        a, b = values[k], values[n - k]
        if kind == "subrank" and a.certificate is not None and b.certificate is not None:
            cand = (a.lo * b.lo, box_restriction(a.certificate, b.certificate))
            if best is None or cand[0] > best[0]:
                best = cand
        if kind == "rank" and a.certificate is not None and b.certificate is not None:
            cand = (a.hi * b.hi, box_rank_certificate(a.certificate, b.certificate))
            if best is None or cand[0] < best[0]:
                best = cand
    return best


def fekete_estimate(kind: str, T: Tensor, n_max: int, budget: int = DEFAULT_BUDGET) -> FeketeReport:
    """Values of the invariant on T, T^[x]2, ..., T^[x]n_max and their n-th roots.

    ``budget`` applies to each power separately.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown invariant kind {kind!r}")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if math.prod(T.dims) ** n_max > BOX_SIZE_CAP:
        raise SizeCapExceeded(f"T^[x]{n_max} exceeds the size cap of {BOX_SIZE_CAP} entries")
    powers = {n: box_power(T, n) for n in range(1, n_max + 1)}
    values = {}
    entries = []
    running = None
    for n in range(1, n_max + 1):
        P = powers[n]
        if kind == "rank":
            v = rank_bounds(P, budget)
        elif kind == "subrank":
            v = subrank_bounds(P, budget)
        else:
            v = geometric_rank(P, budget)
        if n > 1 and kind != "geometric_rank":
            combo = _combine(kind, values, n)
            if combo is not None:
                bound, cert = combo
                if kind == "subrank" and bound > v.lo:
                    v = InvariantValue(kind, bound, max(v.hi, bound), v.steps, cert)
                elif kind == "rank" and bound < v.hi:
                    v = InvariantValue(kind, min(v.lo, bound), bound, v.steps, cert)
        values[n] = v
        lo_root, hi_root = nth_root(v.lo, n), nth_root(v.hi, n)
        if kind == "rank":
            running = hi_root if running is None else min(running, hi_root)
        elif kind == "subrank":
            running = lo_root if running is None else max(running, lo_root)
        entries.append(FeketeEntry(n, v, lo_root, hi_root, running))
    side = {"rank": "upper", "subrank": "lower"}.get(kind)
    return FeketeReport(kind, tuple(entries), side)
