"""The ideal I(T) of polynomial relations over Q among the entries of T."""

from __future__ import annotations

import itertools

from ..groebner import DEFAULT_BUDGET, Unknown, eliminate, groebner
from ..poly import GREVLEX, Ideal, Polynomial, Ring
from ..tensor import Tensor, minpoly_in


def entry_variable_names(dims):
    """x followed by the 1-based index; underscores separate indices once any dim exceeds 9."""
    sep = "_" if max(dims) > 9 else ""
    return [("x" + sep + sep.join(str(i + 1) for i in idx)) if sep else
            "x" + "".join(str(i + 1) for i in idx)
            for idx in itertools.product(*(range(n) for n in dims))]


def relation_ideal(T: Tensor, budget: int = DEFAULT_BUDGET):
    """Reduced grevlex basis of I(T) in Q[x_idx], entries in row-major order.

    The generator ``a`` of the field is eliminated from
    ``<x_idx - p_idx(a), minpoly(a)>``; for rational tensors this is just
    ``<x_idx - t_idx>``. Because the reduced basis is unique, two tensors
    have the same relation ideal iff :func:`relation_basis_strings` agree.
    Returns :class:`~algtensor.groebner.Unknown` on budget exhaustion.
    """
    names = entry_variable_names(T.dims)
    F = T.field
    gen = F.generator_name
    while gen in names:
        gen = "_" + gen
    ring = Ring(tuple([gen] + names) if not F.is_rational else tuple(names))
    shift = 0 if F.is_rational else 1
    gens = []
    for k, v in enumerate(T.data.flat):
        terms = {}
        x = [0] * ring.nvars
        x[shift + k] = 1
        terms[tuple(x)] = 1
        for deg, c in enumerate(v.coeffs):
            if c:
                e = [0] * ring.nvars
                if deg:
                    e[0] = deg
                e = tuple(e)
                terms[e] = terms.get(e, 0) - c
        gens.append(Polynomial(ring, terms))
    if F.is_rational:
        G = groebner(Ideal(ring, tuple(gens)), GREVLEX, budget)
        if isinstance(G, Unknown):
            return G
        return Ideal(ring, G.basis)
    gens.append(minpoly_in(F, ring, 0))
    return eliminate(Ideal(ring, tuple(gens)), [gen], budget)


def relation_basis_strings(I: Ideal):
    """Canonical text of a reduced basis, for byte-level comparison."""
    return [g.to_string(GREVLEX) for g in I.generators]
