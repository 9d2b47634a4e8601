"""Exact d-way tensors over a number field.

Entries are :class:`~algtensor.numberfield.AlgebraicNumber` objects kept in a
read-only numpy object array, so reshapes and transposes are numpy's while
every product and sum stays exact.

Index convention for the vertical (box) product: in mode m the pair
``(i, k)`` with ``i`` indexing T and ``k`` indexing S becomes the merged
index ``i * dims_S[m] + k`` (row-major pairing, 0-based internally).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BadModeSet, FieldMismatch, OrderMismatch, ShapeMismatch, SizeCapExceeded
from .numberfield import QQ, AlgebraicNumber, FieldAutomorphism, NumberField, apply_automorphism
from .poly import Ideal, Polynomial, Ring

BOX_SIZE_CAP = 10 ** 6


def _frozen(arr):
    arr.flags.writeable = False
    return arr


def _join_fields(F, G):
    if F == G:
        return F
    if G.is_rational:
        return F
    if F.is_rational:
        return G
    raise FieldMismatch(f"tensors over different fields: {F} and {G}")


class Tensor:
    """Immutable dense tensor with explicit dims and coefficient field."""

    __slots__ = ("field", "data")

    def __init__(self, data, field: NumberField = QQ):
        arr = np.array(data, dtype=object)
        if arr.ndim == 0:
            raise ShapeMismatch("a tensor needs order d >= 1")
        if any(n < 1 for n in arr.shape):
            raise ShapeMismatch(f"dimensions must be positive, got {arr.shape}")
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            if isinstance(v, AlgebraicNumber):
                out[idx] = field.coerce(v)
            else:
                out[idx] = field(v)
        self.field = field
        self.data = _frozen(out)

    @classmethod
    def _wrap(cls, arr, field):
        t = cls.__new__(cls)
        t.field = field
        t.data = _frozen(arr)
        return t

    @classmethod
    def zeros(cls, dims: Sequence[int], field: NumberField = QQ):
        arr = np.empty(tuple(dims), dtype=object)
        arr.fill(field.zero)
        return cls._wrap(arr, field)

    @classmethod
    def from_entries(cls, dims, entries, field: NumberField = QQ):
        """Build from a sparse ``{index tuple (0-based): value}`` mapping."""
        arr = np.empty(tuple(dims), dtype=object)
        arr.fill(field.zero)
        for idx, v in entries.items():
            arr[tuple(idx)] = field.coerce(v) if isinstance(v, AlgebraicNumber) else field(v)
        return cls._wrap(arr, field)

    @property
    def dims(self):
        return self.data.shape

    @property
    def order(self):
        return self.data.ndim

    @property
    def size(self):
        return self.data.size

    def __getitem__(self, idx):
        return self.data[idx]

    def nonzero_entries(self):
        """(index, value) pairs of the nonzero entries in row-major order."""
        return [(idx, v) for idx, v in np.ndenumerate(self.data) if not v.is_zero()]

    def is_zero(self):
        return all(v.is_zero() for v in self.data.flat)

    def with_field(self, field: NumberField):
        if field == self.field:
            return self
        return Tensor._wrap(np.vectorize(field.coerce, otypes=[object])(self.data), field)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.dims == other.dims and all(a == b for a, b in zip(self.data.flat, other.data.flat))

    def __hash__(self):
        return hash((self.dims, tuple(self.data.flat)))

    def __repr__(self):
        nz = ", ".join(f"{tuple(i + 1 for i in idx)}: {v}" for idx, v in self.nonzero_entries()[:8])
        more = " ..." if len(self.nonzero_entries()) > 8 else ""
        return f"Tensor(dims={self.dims}, {{{nz}{more}}})"


@dataclass(frozen=True)
class LinearMap:
    """An r x n matrix of field elements (rows = target coordinates)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=object)
        if m.ndim != 2:
            raise ShapeMismatch("a linear map is a 2-d matrix")
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def rows(self):
        return self.matrix.shape[0]

    @property
    def cols(self):
        return self.matrix.shape[1]


@dataclass(frozen=True)
class Restriction:
    """The tuple of maps phi_1, ..., phi_d applied mode by mode."""

    maps: tuple

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(m if isinstance(m, LinearMap) else LinearMap(m)
                                               for m in self.maps))


def unit_tensor(r: int, d: int, field: NumberField = QQ) -> Tensor:
    """The diagonal tensor <r> = sum_i e_i x ... x e_i of order d."""
    if r < 1 or d < 1:
        raise ValueError("unit_tensor needs r >= 1 and d >= 1")
    arr = np.empty((r,) * d, dtype=object)
    arr.fill(field.zero)
    for i in range(r):
        arr[(i,) * d] = field.one
    return Tensor._wrap(arr, field)


def box_product(T: Tensor, S: Tensor) -> Tensor:
    if T.order != S.order:
        raise OrderMismatch(f"box product of order {T.order} and order {S.order} tensors")
    field = _join_fields(T.field, S.field)
    d = T.order
    outer = np.multiply.outer(T.data, S.data)
    # interleave axes (t_1, s_1, t_2, s_2, ...) then merge each pair
    perm = [ax for m in range(d) for ax in (m, d + m)]
    dims = tuple(a * b for a, b in zip(T.dims, S.dims))
    merged = outer.transpose(perm).reshape(dims)
    if field != T.field or field != S.field:
        merged = np.vectorize(field.coerce, otypes=[object])(merged)
    return Tensor._wrap(np.array(merged, dtype=object), field)


def box_power(T: Tensor, n: int, size_cap: int = BOX_SIZE_CAP) -> Tensor:
    if n < 0:
        raise ValueError("box_power needs n >= 0")
    total = math.prod(T.dims) ** n
    if total > size_cap:
        raise SizeCapExceeded(f"T^[x]{n} would have {total} entries (cap {size_cap})")
    result = Tensor._wrap(np.full((1,) * T.order, T.field.one, dtype=object), T.field)
    for _ in range(n):
        result = box_product(result, T)
    return result


def _check_modes(d, modes):
    modes = sorted(set(modes))
    if not modes or len(modes) >= d or modes[0] < 1 or modes[-1] > d:
        raise BadModeSet(f"left modes {modes} must be a proper nonempty subset of 1..{d}")
    return modes


def flatten(T: Tensor, left_modes: Sequence[int]) -> np.ndarray:
    """Matrix with rows indexed by the merged ``left_modes`` (1-based), columns by the rest."""
    left = [m - 1 for m in _check_modes(T.order, left_modes)]
    right = [m for m in range(T.order) if m not in left]
    rows = math.prod(T.dims[m] for m in left)
    return np.ascontiguousarray(T.data.transpose(left + right)).reshape(rows, -1)


def restrict(T: Tensor, R: Restriction) -> Tensor:
    """Apply phi_1 x ... x phi_d to T."""
    if len(R.maps) != T.order:
        raise ShapeMismatch(f"{len(R.maps)} maps for an order-{T.order} tensor")
    field = T.field
    for phi in R.maps:
        for v in phi.matrix.flat:
            if isinstance(v, AlgebraicNumber):
                field = _join_fields(field, v.field)
    arr = T.data
    for m, phi in enumerate(R.maps):
        if phi.cols != T.dims[m]:
            raise ShapeMismatch(f"map {m + 1} has {phi.cols} columns, mode has dimension {T.dims[m]}")
        if phi.rows == 0:
            shape = list(arr.shape)
            shape[m] = 0
            return _empty_tensor(shape, field)
        mat = np.vectorize(lambda v: field(v) if not isinstance(v, AlgebraicNumber) else field.coerce(v),
                           otypes=[object])(phi.matrix)
        arr = np.moveaxis(np.tensordot(mat, arr, axes=([1], [m])), 0, m)
    arr = np.vectorize(field.coerce, otypes=[object])(arr)
    return Tensor._wrap(np.array(arr, dtype=object), field)


def _empty_tensor(shape, field):
    t = Tensor.__new__(Tensor)
    t.field = field
    t.data = _frozen(np.empty(shape, dtype=object))
    return t


def conjugate_tensor(sigma: FieldAutomorphism, T: Tensor) -> Tensor:
    if T.field != sigma.field and not T.field.is_rational:
        raise FieldMismatch(f"automorphism of {sigma.field} applied to a tensor over {T.field}")
    out = np.vectorize(lambda v: apply_automorphism(sigma, v), otypes=[object])(T.data)
    return Tensor._wrap(out, sigma.field)


def dual_variable_names(dims: Sequence[int]):
    """Names x{m}_{j} (1-based) of the coordinates on V_1^* x ... x V_{d-1}^*."""
    return [f"x{m + 1}_{j + 1}" for m in range(len(dims) - 1) for j in range(dims[m])]


def field_as_polynomial(a: AlgebraicNumber, ring: Ring, gen_index: int | None) -> Polynomial:
    """The power-basis polynomial of ``a`` in the ring variable standing for the generator."""
    terms = {}
    for k, c in enumerate(a.coeffs):
        if c:
            exps = [0] * ring.nvars
            if k:
                exps[gen_index] = k
            terms[tuple(exps)] = c
    return Polynomial(ring, terms)


def minpoly_in(field: NumberField, ring: Ring, gen_index: int) -> Polynomial:
    terms = {}
    for k, c in enumerate(field.minpoly):
        if c:
            exps = [0] * ring.nvars
            exps[gen_index] = k
            terms[tuple(exps)] = c
    return Polynomial(ring, terms)


def multilinear_system(T: Tensor) -> Ideal:
    """The n_d forms T(x_1, ..., x_{d-1}, e_k) cutting out X(T).

    For an irrational field the generator is adjoined as the last ring
    variable (named like the field generator) together with its minimal
    polynomial as an extra generator.
    """
    if T.order < 2:
        raise ValueError("multilinear_system needs order d >= 2")
    dims = T.dims
    names = dual_variable_names(dims)
    adjoin = not T.field.is_rational
    if adjoin:
        names.append(T.field.generator_name)
    ring = Ring(tuple(names))
    offsets = list(itertools.accumulate([0] + list(dims[:-1])))
    gen_index = len(names) - 1 if adjoin else None
    gens = []
    for k in range(dims[-1]):
        terms = {}
        for idx, v in np.ndenumerate(T.data[..., k]):
            if v.is_zero():
                continue
            base = [0] * ring.nvars
            for m, i in enumerate(idx):
                base[offsets[m] + i] += 1
            for deg, c in enumerate(v.coeffs):
                if c:
                    exps = list(base)
                    if deg:
                        exps[gen_index] += deg
                    exps = tuple(exps)
                    terms[exps] = terms.get(exps, 0) + c
        gens.append(Polynomial(ring, terms))
    if adjoin:
        gens.append(minpoly_in(T.field, ring, gen_index))
    return Ideal(ring, tuple(gens))
