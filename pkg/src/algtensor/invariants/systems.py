"""Polynomial systems for rank and subrank decisions, split into affine charts.

Both systems are invariant under rescaling: in a decomposition
``T = sum_i v_i1 x ... x v_id`` each term may move scalars between its
factors, and for a restriction onto <r> each slot i may rescale row i of
every map with product one. We fix the gauge by making the first nonzero
coordinate of every factor in modes 1..d-1 equal to 1 (one chart per
choice of pivot positions). Terms (resp. diagonal slots) may also be
permuted, so only sorted chart tuples are visited. The union of the
charts covers every solution up to these symmetries, hence

    feasible  <=>  some chart is feasible.

Irrational entries are encoded by adjoining the field generator as a
ring variable constrained by its minimal polynomial. The resulting
variety is the union of the systems for all conjugates of T; by
algebraicity of rank and subrank those are all feasible or all
infeasible together, so the verdict is the one for T itself.
"""

from __future__ import annotations

import itertools


from ..groebner import Unknown, Verdict, groebner
from ..poly import GREVLEX, Ideal, Polynomial, Ring
from ..tensor import Tensor, minpoly_in

VARIABLE_CAP = 36


def _vector_slots(prefix, n, pivot):
    """Entries of a chart vector: 0 before the pivot, 1 at it, variables after."""
    slots = []
    names = []
    for j in range(n):
        if pivot is None:
            names.append(f"{prefix}_{j + 1}")
            slots.append(names[-1])
        elif j < pivot:
            slots.append(0)
        elif j == pivot:
            slots.append(1)
        else:
            names.append(f"{prefix}_{j + 1}")
            slots.append(names[-1])
    return slots, names


class _Builder:
    def __init__(self, names, field):
        self.adjoin = not field.is_rational
        names = list(names)
        if self.adjoin:
            names.append(field.generator_name)
        self.ring = Ring(tuple(names))
        self.index = {n: k for k, n in enumerate(names)}
        self.gen = len(names) - 1 if self.adjoin else None
        self.field = field

    def add_product(self, terms, slots, value, sign=1):
        """Add ``sign * value * prod(slots)`` where slots are 0, 1 or variable names."""
        exps = [0] * self.ring.nvars
        for s in slots:
            if s == 0:
                return
            if s != 1:
                exps[self.index[s]] += 1
        for k, c in enumerate(value.coeffs):
            if c:
                e = list(exps)
                if k:
                    e[self.gen] += k
                e = tuple(e)
                w = terms.get(e, 0) + sign * c
                if w:
                    terms[e] = w
                else:
                    terms.pop(e, None)

    def finish(self, equations):
        polys = [Polynomial._raw(self.ring, t) for t in equations]
        if self.adjoin:
            polys.append(minpoly_in(self.field, self.ring, self.gen))
        return Ideal(self.ring, tuple(polys))


def rank_charts(T: Tensor, r: int):
    """Yield (chart description, Ideal) for 'T has a decomposition with r terms'."""
    dims = T.dims
    d = T.order
    per_term = list(itertools.product(*(range(n) for n in dims[:-1])))
    for chart in itertools.combinations_with_replacement(per_term, r):
        factors = []  # factors[i][m] = slots
        names = []
        for i, pivots in enumerate(chart):
            vecs = []
            for m in range(d):
                slots, nm = _vector_slots(f"v{i + 1}_{m + 1}", dims[m], pivots[m] if m < d - 1 else None)
                vecs.append(slots)
                names.extend(nm)
            factors.append(vecs)
        b = _Builder(names, T.field)
        equations = []
        for J in itertools.product(*(range(n) for n in dims)):
            terms = {}
            for i in range(r):
                b.add_product(terms, [factors[i][m][J[m]] for m in range(d)], T.field.one)
            tj = T.data[J]
            if not tj.is_zero():
                b.add_product(terms, [], tj, sign=-1)
            if terms:
                equations.append(terms)
        yield chart, b.finish(equations)


def subrank_charts(T: Tensor, r: int):
    """Yield (chart description, Ideal) for '(phi_1 x ... x phi_d) T = <r>'."""
    dims = T.dims
    d = T.order
    per_row = list(itertools.product(*(range(n) for n in dims[:-1])))
    nonzero = T.nonzero_entries()
    for chart in itertools.combinations_with_replacement(per_row, r):
        maps = [[None] * r for _ in range(d)]  # maps[m][i] = slots of row i
        names = []
        for i, pivots in enumerate(chart):
            for m in range(d):
                slots, nm = _vector_slots(f"p{m + 1}_{i + 1}", dims[m], pivots[m] if m < d - 1 else None)
                maps[m][i] = slots
                names.extend(nm)
        b = _Builder(names, T.field)
        equations = []
        for I in itertools.product(range(r), repeat=d):
            terms = {}
            for J, tj in nonzero:
                b.add_product(terms, [maps[m][I[m]][J[m]] for m in range(d)], tj)
            if len(set(I)) == 1:
                b.add_product(terms, [], T.field.one, sign=-1)
            equations.append(terms)
        yield chart, b.finish(equations)


def raw_variable_count(T: Tensor, r: int) -> int:
    """Unknowns of the un-normalized system: r * sum(n_m), plus the adjoined generator."""
    return r * sum(T.dims) + (0 if T.field.is_rational else 1)


def decide_charts(charts, budget: int):
    """Run feasibility on each chart. Returns (Verdict, steps used, feasible chart or None).

    Infeasible needs every chart infeasible; the first feasible chart wins.
    """
    used = 0
    unknown = False
    for chart, ideal in charts:
        if any(g.is_constant() and not g.is_zero() for g in ideal.generators):
            continue
        remaining = budget - used
        if remaining <= 0:
            return Verdict.UNKNOWN, used, None
        G = groebner(ideal, GREVLEX, remaining)
        if isinstance(G, Unknown):
            used += G.steps
            unknown = True
            return Verdict.UNKNOWN, used, None
        used += G.steps
        if not G.is_unit():
            return Verdict.FEASIBLE, used, chart
    return (Verdict.UNKNOWN if unknown else Verdict.INFEASIBLE), used, None
