"""Geometric rank: codimension of X(T) = {(x_1..x_{d-1}) : T(x_1, ..., x_{d-1}, .) = 0}."""

from __future__ import annotations

from ..groebner import DEFAULT_BUDGET, Unknown, groebner, ideal_dimension
from ..poly import GREVLEX
from ..tensor import Tensor, multilinear_system
from .values import InvariantValue


def geometric_rank(T: Tensor, budget: int = DEFAULT_BUDGET) -> InvariantValue:
    """sum_{m<d} n_m minus dim X(T), with X(T) taken as an affine cone.

    For entries outside Q the field generator ``a`` is adjoined as an
    extra variable together with its minimal polynomial. The variety of
    that system in (x, a)-space is the disjoint union, over the complex
    embeddings of the field, of X(T^tau) x {tau(a)}. Geometric rank is
    invariant under field automorphisms and each embedding extends to one
    of C, so every piece has the dimension of X(T); the finitely many
    values of ``a`` add nothing. Hence dim of the adjoined variety is dim
    X(T), and one Groebner computation over Q suffices.
    """
    if T.order < 2:
        raise ValueError("geometric rank needs order d >= 2")
    total = sum(T.dims[:-1])
    if T.is_zero():
        return InvariantValue("geometric_rank", 0, 0)
    G = groebner(multilinear_system(T), GREVLEX, budget)
    if isinstance(G, Unknown):
        return InvariantValue("geometric_rank", 0, total, G.steps)
    dim = ideal_dimension(G)
    # X(T) always contains the origin, so the dimension is never None here
    value = total - dim
    return InvariantValue("geometric_rank", value, value, G.steps)
