"""Buchberger's algorithm and the ideal computations built on it.

The engine is deliberately plain: normal pair selection, the
Gebauer-Moeller installation of both Buchberger criteria, and a budget
counted in S-polynomial reductions so results do not depend on the
machine. Reduced bases are unique for a given ideal and order, and we
print them sorted by leading monomial (ascending), which makes string
comparison a valid ideal-equality test.
"""

from __future__ import annotations

import enum
import heapq
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import GREVLEX, Ideal, MonomialOrder, Polynomial, Ring, block

DEFAULT_BUDGET = 200_000


class Verdict(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Unknown:
    """Returned instead of a result when the step budget runs out."""

    reason: str
    partial: tuple = ()
    steps: int = 0

    def __bool__(self):
        return False


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    order: MonomialOrder
    basis: tuple
    reduced: bool = True
    steps: int = 0

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    def is_unit(self) -> bool:
        """True when 1 is in the ideal (empty variety)."""
        return len(self.basis) == 1 and self.basis[0].is_constant() and not self.basis[0].is_zero()

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def strings(self):
        return [g.to_string(self.order) for g in self.basis]

    def __str__(self):
        return "{" + ", ".join(self.strings()) + "}"


# ---------------------------------------------------------------------------
# internal engine on raw dicts {exponent tuple: Fraction}
# ---------------------------------------------------------------------------

def _divides(a, b):
    return all(map(operator.le, a, b))


def _lcm(a, b):
    return tuple(map(max, a, b))


def _coprime(a, b):
    return not any(map(min, a, b))


class _Engine:
    def __init__(self, order: MonomialOrder):
        self.order = order
        self._keys = {}
        self._nkeys = {}
        self.steps = 0

    def key(self, m):
        k = self._keys.get(m)
        if k is None:
            k = self._keys[m] = self.order.key(m)
        return k

    def lm(self, p):
        return max(p, key=self.key)

    def make_monic(self, p):
        lm = self.lm(p)
        c = p[lm]
        if c != 1:
            p = {m: v / c for m, v in p.items()}
        return lm, p

    def _sub_multiple(self, p, c, shift, g):
        for m, v in g.items():
            mm = tuple(map(operator.add, m, shift))
            w = p.get(mm, 0) - c * v
            if w:
                p[mm] = w
            else:
                p.pop(mm, None)

    def nkey(self, m):
        """Negated order key: a min-heap on it pops the largest monomial first."""
        k = self._nkeys.get(m)
        if k is None:
            k = self._nkeys[m] = tuple(-x for x in self.key(m))
        return k

    def reduce(self, p, reducers, full=True):
        """Reduce ``p`` (consumed) by the monic (lm, poly) pairs in ``reducers``.

        Terms wait in a heap keyed by the order, so each step finds the
        leading term without rescanning ``p``. Reduction only creates
        monomials below the current one, so popped terms never come back.
        """
        rem = {}
        heap = [(self.nkey(m), m) for m in p]
        heapq.heapify(heap)
        while heap:
            _, lm = heapq.heappop(heap)
            c = p.get(lm)
            if c is None:
                continue
            for glm, g in reducers:
                if _divides(glm, lm):
                    shift = tuple(map(operator.sub, lm, glm))
                    for m, v in g.items():
                        mm = tuple(map(operator.add, m, shift))
                        old = p.get(mm)
                        if old is None:
                            p[mm] = -c * v
                            heapq.heappush(heap, (self.nkey(mm), mm))
                        else:
                            w = old - c * v
                            if w:
                                p[mm] = w
                            else:
                                del p[mm]
                    break
            else:
                if not full:
                    p.update(rem)
                    return p
                rem[lm] = p.pop(lm)
        return rem

    def spoly(self, f, g):
        (flm, fp), (glm, gp) = f, g
        l = _lcm(flm, glm)
        out = {}
        sf = tuple(map(operator.sub, l, flm))
        for m, v in fp.items():
            out[tuple(map(operator.add, m, sf))] = v
        self._sub_multiple(out, Fraction(1), tuple(map(operator.sub, l, glm)), gp)
        return out


def _buchberger(polys, order, budget):
    """Core loop. Returns (basis as list of monic dicts, steps, complete flag)."""
    eng = _Engine(order)
    nvars = None
    items = []  # all (lm, poly) ever added, indexed
    G = []      # indices of the current (minimal) basis
    pairs = []  # (lcm, i, j)

    def unit(n):
        return [{(0,) * n: Fraction(1)}]

    def update(h):
        hlm = items[h][0]
        lcms = {g: _lcm(hlm, items[g][0]) for g in G}
        C = list(G)
        D = []
        while C:
            g1 = C.pop(0)
            l1 = lcms[g1]
            if _coprime(hlm, items[g1][0]):
                D.append(g1)
                continue
            dominated = any(_divides(lcms[g2], l1) for g2 in C) or \
                any(_divides(lcms[g2], l1) for g2 in D)
            if not dominated:
                D.append(g1)
        new_pairs = [(lcms[g], g, h) for g in D if not _coprime(hlm, items[g][0])]
        kept = []
        for l, i, j in pairs:
            if _divides(hlm, l) and _lcm(items[i][0], hlm) != l and _lcm(items[j][0], hlm) != l:
                continue
            kept.append((l, i, j))
        pairs[:] = kept + new_pairs
        G[:] = [g for g in G if not _divides(hlm, items[g][0])] + [h]

    def add(p):
        lm, p = eng.make_monic(p)
        items.append((lm, p))
        update(len(items) - 1)
        return not any(lm)

    seeds = [dict(p) for p in polys if p]
    if not seeds:
        return [], 0, True
    nvars = len(next(iter(seeds[0])))
    seeds.sort(key=lambda p: eng.key(eng.lm(p)))
    for p in seeds:
        p = eng.reduce(p, [items[g] for g in G])
        if p:
            if add(p):
                return unit(nvars), eng.steps, True

    while pairs:
        if eng.steps >= budget:
            return [items[g][1] for g in G], eng.steps, False
        best = min(range(len(pairs)), key=lambda t: (eng.key(pairs[t][0]), pairs[t][1], pairs[t][2]))
        _, i, j = pairs.pop(best)
        eng.steps += 1
        s = eng.spoly(items[i], items[j])
        h = eng.reduce(s, [items[g] for g in G], full=True)
        if h and add(h):
            return unit(nvars), eng.steps, True

    # interreduce the minimal basis into the reduced one
    basis = [items[g] for g in G]
    reduced = []
    for idx, (lm, p) in enumerate(basis):
        others = [b for k, b in enumerate(basis) if k != idx]
        tail = dict(p)
        lc = tail.pop(lm)
        tail = eng.reduce(tail, others, full=True)
        tail[lm] = lc
        reduced.append(eng.make_monic(tail))
    reduced.sort(key=lambda b: eng.key(b[0]))
    return [p for _, p in reduced], eng.steps, True


def _to_polys(ring, dicts):
    return tuple(Polynomial._raw(ring, d) for d in dicts)


def groebner(I: Ideal, order: MonomialOrder = GREVLEX, budget: int = DEFAULT_BUDGET):
    """Reduced Groebner basis of ``I``, or :class:`Unknown` when the budget runs out.

    The run stops as soon as a nonzero constant appears; the basis is then {1}.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    basis, steps, complete = _buchberger([g.terms for g in I.generators], order, budget)
    if not complete:
        return Unknown("budget exhausted", _to_polys(I.ring, basis), steps)
    return GroebnerBasis(I, order, _to_polys(I.ring, basis), True, steps)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    eng = _Engine(G.order)
    reducers = [(g.leading_monomial(G.order), g.terms) for g in G.basis if g]
    return Polynomial._raw(p.ring, eng.reduce(dict(p.terms), reducers))


def ideal_dimension(G: GroebnerBasis):
    """Krull dimension of V(I) over C; None for the empty variety.

    Computed as the largest set of variables no leading monomial is
    supported in (an independent set modulo the leading-term ideal).
    """
    if G.is_unit():
        return None
    n = G.ring.nvars
    supports = set()
    for m in G.leading_monomials():
        supports.add(sum(1 << i for i, e in enumerate(m) if e))
    # a support contained in another is redundant for the independence test
    supports = sorted(supports)
    minimal = [s for s in supports if not any(t != s and t & s == t for t in supports)]
    best = 0

    def search(i, chosen, size):
        nonlocal best
        if size + (n - i) <= best:
            return
        if i == n:
            best = size
            return
        trial = chosen | (1 << i)
        if not any(s & trial == s for s in minimal):
            search(i + 1, trial, size + 1)
        search(i + 1, chosen, size)

    search(0, 0, 0)
    return best


def is_feasible(I: Ideal, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Weak Nullstellensatz test: V(I) over C is empty iff 1 is in I."""
    G = groebner(I, GREVLEX, budget)
    if isinstance(G, Unknown):
        return Verdict.UNKNOWN
    return Verdict.INFEASIBLE if G.is_unit() else Verdict.FEASIBLE


def eliminate(I: Ideal, drop: Sequence[str], budget: int = DEFAULT_BUDGET):
    """Generators of ``I`` intersected with Q[remaining variables].

    Uses a two-block order with the dropped variables in the first block;
    the returned generators are the reduced grevlex basis of the
    elimination ideal. Returns :class:`Unknown` on budget exhaustion.
    """
    names = I.ring.names
    drop = [n for n in names if n in set(drop)]
    keep = [n for n in names if n not in drop]
    work_ring = Ring(tuple(drop + keep))
    position = {n: k for k, n in enumerate(work_ring.names)}
    mapping = [position[n] for n in names]
    moved = Ideal(work_ring, tuple(g.rename(work_ring, mapping) for g in I.generators))
    G = groebner(moved, block(len(drop)) if drop else GREVLEX, budget)
    if isinstance(G, Unknown):
        return G
    out_ring = Ring(tuple(keep))
    kept = []
    for g in G.basis:
        if all(not any(m[: len(drop)]) for m in g.terms):
            kept.append(Polynomial._raw(out_ring, {m[len(drop):]: c for m, c in g.terms.items()}))
    if not kept:
        kept = [out_ring.zero()]
    return Ideal(out_ring, tuple(kept))
