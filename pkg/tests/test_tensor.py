"""Tensors, vertical products, flattenings, restrictions and conjugation."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from algtensor import (
    QQ,
    LinearMap,
    Restriction,
    Tensor,
    automorphisms,
    box_power,
    box_product,
    conjugate_tensor,
    flatten,
    multilinear_system,
    nf_create,
    restrict,
    unit_tensor,
)
from algtensor.errors import BadModeSet, FieldMismatch, OrderMismatch, ShapeMismatch, SizeCapExceeded
from algtensor.linalg import rank as matrix_rank


SQRT2 = nf_create([-2, 0, 1])


def random_tensor(rng, dims, field=QQ, density=0.6):
    entries = {}
    for idx in itertools.product(*(range(n) for n in dims)):
        if rng.random() < density:
            coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(field.degree)]
            entries[idx] = field.element(coeffs)
    return Tensor.from_entries(dims, entries, field)


def random_map(rng, rows, cols, field=QQ):
    return LinearMap(np.array([[field.element([rng.randint(-2, 2) for _ in range(field.degree)])
                                for _ in range(cols)] for _ in range(rows)], dtype=object))


def as_ints(M):
    return [[int(v.to_rational()) for v in row] for row in M]


seeds = st.integers(0, 10**6)


# -- examples ----------------------------------------------------------------

def test_unit_tensor_examples():
    assert unit_tensor(1, 3) == Tensor([[[1]]])
    U = unit_tensor(2, 3)
    assert [idx for idx, _ in U.nonzero_entries()] == [(0, 0, 0), (1, 1, 1)]
    assert as_ints(unit_tensor(3, 2).data) == np.eye(3, dtype=int).tolist()
    with pytest.raises(ValueError):
        unit_tensor(0, 3)


def test_box_product_examples(W):
    assert box_product(unit_tensor(2, 3), unit_tensor(3, 3)) == unit_tensor(6, 3)
    assert box_product(unit_tensor(2, 3), unit_tensor(3, 3)).dims == (6, 6, 6)
    assert box_product(W, unit_tensor(1, 3)) == W
    with pytest.raises(OrderMismatch):
        box_product(W, unit_tensor(2, 2))


def test_box_product_index_convention():
    rng = random.Random(3)
    T, S = random_tensor(rng, (2, 3, 2)), random_tensor(rng, (3, 2, 2))
    P = box_product(T, S)
    for i in itertools.product(*(range(n) for n in T.dims)):
        for k in itertools.product(*(range(n) for n in S.dims)):
            merged = tuple(a * s + b for a, b, s in zip(i, k, S.dims))
            assert P[merged] == T[i] * S[k]


def test_box_power_examples(W):
    assert box_power(W, 1) == W
    assert box_power(unit_tensor(2, 3), 3) == unit_tensor(8, 3)
    W2 = box_power(W, 2)
    assert W2.dims == (4, 4, 4) and len(W2.nonzero_entries()) == 9
    assert box_power(W, 0) == Tensor([[[1]]])
    with pytest.raises(SizeCapExceeded):
        box_power(W, 7)
    assert box_power(W, 6).dims == (64, 64, 64)


def test_box_field_mismatch():
    G = nf_create([1, 0, 1], "i")
    with pytest.raises(FieldMismatch):
        box_product(Tensor([[[SQRT2.gen]]], SQRT2), Tensor([[[G.gen]]], G))
    mixed = box_product(Tensor([[[SQRT2.gen]]], SQRT2), Tensor([[[2]]]))
    assert mixed.field == SQRT2 and mixed[0, 0, 0] == 2 * SQRT2.gen


def test_flatten_examples(W):
    assert as_ints(flatten(unit_tensor(2, 3), [1])) == [[1, 0, 0, 0], [0, 0, 0, 1]]
    assert as_ints(flatten(W, [1])) == [[0, 1, 1, 0], [1, 0, 0, 0]]
    M = Tensor([[1, 2], [3, 4]])
    assert as_ints(flatten(M, [1])) == [[1, 2], [3, 4]]
    for bad in ([], [1, 2, 3], [0], [4]):
        with pytest.raises(BadModeSet):
            flatten(W, bad)


def test_restrict_examples(W):
    U = unit_tensor(2, 3)
    first = Restriction([LinearMap(np.array([[QQ.one, QQ.zero]], dtype=object))] * 3)
    assert restrict(U, first) == unit_tensor(1, 3)
    ident = Restriction([LinearMap(unit_tensor(2, 2).data)] * 3)
    assert restrict(W, ident) == W
    zero = Restriction([LinearMap(np.array([[QQ.zero] * 2] * 2, dtype=object))] * 3)
    assert restrict(W, zero).is_zero()
    with pytest.raises(ShapeMismatch):
        restrict(W, Restriction([LinearMap(unit_tensor(3, 2).data)] * 3))


def test_conjugate_examples():
    sigma = automorphisms(SQRT2)[1]
    D = Tensor([[1, 0], [0, SQRT2.gen]], SQRT2)
    assert conjugate_tensor(sigma, D) == Tensor([[1, 0], [0, -SQRT2.gen]], SQRT2)
    assert conjugate_tensor(automorphisms(SQRT2)[0], D) == D
    G = nf_create([1, 0, 1], "i")
    with pytest.raises(FieldMismatch):
        conjugate_tensor(automorphisms(G)[1], D)


def test_multilinear_system_examples(W):
    assert {g.to_string() for g in multilinear_system(W).generators} == \
        {"x1_1*x2_1", "x1_2*x2_1 + x1_1*x2_2"}
    assert [g.to_string() for g in multilinear_system(unit_tensor(2, 3)).generators] == \
        ["x1_1*x2_1", "x1_2*x2_2"]
    assert all(g.is_zero() for g in multilinear_system(Tensor.zeros((2, 2, 2))).generators)
    for r in range(1, 5):
        gens = multilinear_system(unit_tensor(r, 3)).generators
        assert [g.to_string() for g in gens] == [f"x1_{i}*x2_{i}" for i in range(1, r + 1)]


def test_multilinear_system_adjoins_generator():
    T = Tensor([[[SQRT2.gen, 0]]], SQRT2)
    I = multilinear_system(T)
    assert I.ring.names[-1] == "a"
    assert [g.to_string() for g in I.generators] == ["x1_1*x2_1*a", "0", "a^2 - 2"]


def test_tensor_is_immutable(W):
    with pytest.raises(ValueError):
        W.data[0, 0, 0] = QQ.one


# -- properties --------------------------------------------------------------

@given(seeds)
def test_box_product_associative(seed):
    rng = random.Random(seed)
    A, B, C = (random_tensor(rng, tuple(rng.randint(1, 2) for _ in range(3))) for _ in range(3))
    assert box_product(box_product(A, B), C) == box_product(A, box_product(B, C))


@given(seeds, st.integers(0, 2), st.integers(0, 2))
def test_box_power_additive(seed, m, n):
    rng = random.Random(seed)
    T = random_tensor(rng, (2, 1, 2))
    assert box_power(T, m + n) == box_product(box_power(T, m), box_power(T, n))


@given(seeds)
def test_flattening_rank_invariant_under_invertible_maps(seed):
    rng = random.Random(seed)
    dims = tuple(rng.randint(1, 3) for _ in range(3))
    T = random_tensor(rng, dims)
    maps = []
    for n in dims:
        while True:
            M = random_map(rng, n, n)
            if matrix_rank(M.matrix) == n:
                break
        maps.append(M)
    S = restrict(T, Restriction(maps))
    for modes in ([1], [2], [3], [1, 2]):
        assert matrix_rank(flatten(S, modes)) == matrix_rank(flatten(T, modes))


@given(seeds)
def test_conjugation_commutes(seed):
    rng = random.Random(seed)
    sigma = automorphisms(SQRT2)[1]
    T = random_tensor(rng, (2, 2, 2), SQRT2)
    S = random_tensor(rng, (2, 2, 2), SQRT2)
    c = lambda X: conjugate_tensor(sigma, X)
    assert c(box_product(T, S)) == box_product(c(T), c(S))
    maps = [random_map(rng, 2, 2, SQRT2) for _ in range(3)]
    conj_maps = [LinearMap(np.vectorize(sigma, otypes=[object])(m.matrix)) for m in maps]
    assert c(restrict(T, Restriction(maps))) == restrict(c(T), Restriction(conj_maps))
    F1 = np.vectorize(sigma, otypes=[object])(flatten(T, [1]))
    assert all(a == b for a, b in zip(F1.flat, flatten(c(T), [1]).flat))
    assert c(c(T)) == T
