"""Rank, subrank, geometric rank, relation ideals, Fekete estimates and gap thresholds."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algtensor import (
    QQ,
    LinearMap,
    Restriction,
    Tensor,
    Verdict,
    automorphisms,
    box_product,
    conjugate_tensor,
    unit_tensor,
)
from algtensor.errors import BadModeSet, ShapeMismatch, SizeCapExceeded
from algtensor.invariants import (
    RankCertificate,
    binary_entropy,
    fekete_estimate,
    flattening_rank,
    gap_threshold,
    geometric_rank,
    nth_root,
    rank_bounds,
    rank_decision,
    relation_basis_strings,
    relation_ideal,
    subrank_bounds,
    subrank_decision,
    verify_rank_certificate,
    verify_subrank_certificate,
)

from conftest import make_W
from oracles import decomposition_residual, restriction_residual

W_NUMERIC = np.zeros((2, 2, 2), dtype=complex)
W_NUMERIC[0, 0, 1] = W_NUMERIC[0, 1, 0] = W_NUMERIC[1, 0, 0] = 1


def vec(*xs, field=QQ):
    return tuple(field(x) for x in xs)


def identity_restriction(r, d=3):
    return Restriction(tuple(LinearMap(np.array([[QQ(int(i == j)) for j in range(r)] for i in range(r)],
                                                dtype=object)) for _ in range(d)))


def small_tensors(max_dim=2, values=(-1, 0, 1, 2)):
    @st.composite
    def build(draw):
        dims = tuple(draw(st.integers(1, max_dim)) for _ in range(3))
        entries = {idx: draw(st.sampled_from(values)) for idx in itertools.product(*(range(n) for n in dims))}
        return Tensor.from_entries(dims, entries)
    return build()


# flattening rank

@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_flattening_rank_unit(r):
    U = unit_tensor(r, 3)
    assert [flattening_rank(U, [m]) for m in (1, 2, 3)] == [r, r, r]


def test_flattening_rank_W(W):
    assert flattening_rank(W, [1]) == 2
    assert [flattening_rank(W, [m]) for m in (1, 2, 3)] == [2, 2, 2]


def test_flattening_rank_zero():
    assert flattening_rank(Tensor.zeros((2, 3, 2)), [2]) == 0


def test_flattening_rank_bad_modes(W):
    with pytest.raises(BadModeSet):
        flattening_rank(W, [1, 2, 3])
    with pytest.raises(BadModeSet):
        flattening_rank(W, [])


# rank decisions and certificates

def test_rank_decision_unit2(unit2):
    d = rank_decision(unit2, 2)
    assert d.verdict is Verdict.FEASIBLE
    assert d.certificate is not None and d.certificate.length == 2
    assert verify_rank_certificate(unit2, d.certificate)


def test_rank_decision_unit2_below(unit2):
    assert rank_decision(unit2, 1).verdict is Verdict.INFEASIBLE


def test_rank_decision_W_two_infeasible(W):
    d = rank_decision(W, 2)
    assert d.verdict is Verdict.INFEASIBLE
    assert d.how == "groebner"


def test_rank_W_numeric_oracle():
    # bounded search: 2 terms stay far from zero residual while 3 terms reach it
    two = decomposition_residual(W_NUMERIC, 2)
    three = decomposition_residual(W_NUMERIC, 3)
    assert three < 1e-9
    assert two > 1e-5


def test_rank_decision_rejects_negative(W):
    with pytest.raises(ValueError):
        rank_decision(W, -1)


def test_rank_decision_size_cap(W):
    with pytest.raises(SizeCapExceeded):
        rank_decision(W, 2, variable_cap=5)


def test_verify_rank_certificate_W(W):
    e1, e2 = vec(1, 0), vec(0, 1)
    C = RankCertificate(((e1, e1, e2), (e1, e2, e1), (e2, e1, e1)))
    assert verify_rank_certificate(W, C)


def test_verify_rank_certificate_unit2(unit2):
    e1, e2 = vec(1, 0), vec(0, 1)
    assert verify_rank_certificate(unit2, RankCertificate(((e1, e1, e1), (e2, e2, e2))))


def test_verify_rank_certificate_shape(W):
    with pytest.raises(ShapeMismatch):
        verify_rank_certificate(W, RankCertificate(((vec(1, 0, 0), vec(1, 0), vec(1, 0)),)))


small_q = st.fractions(min_value=-3, max_value=3, max_denominator=3)
vec2 = st.tuples(small_q, small_q).map(lambda t: vec(*t))


@given(st.lists(st.tuples(vec2, vec2, vec2), min_size=2, max_size=2))
def test_W_has_no_two_term_certificate(terms):
    assert not verify_rank_certificate(make_W(), RankCertificate(tuple(terms)))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_rank_bounds_unit(r):
    v = rank_bounds(unit_tensor(r, 3))
    assert v.exact and v.value == r


def test_rank_bounds_W(W):
    v = rank_bounds(W)
    assert (v.lo, v.hi) == (3, 3)
    assert v.certificate is not None and verify_rank_certificate(W, v.certificate)


def test_rank_bounds_zero():
    v = rank_bounds(Tensor.zeros((2, 2, 2)))
    assert v.exact and v.value == 0


def test_rank_bounds_matrix_is_matrix_rank():
    M = Tensor.from_entries((3, 3), {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 4, (2, 2): 5})
    v = rank_bounds(M)
    assert v.exact and v.value == 2


def test_rank_bounds_irrational_W(sqrt2):
    a = sqrt2.gen
    T = Tensor.from_entries((2, 2, 2), {(0, 0, 1): a, (0, 1, 0): 1, (1, 0, 0): 1}, sqrt2)
    v = rank_bounds(T)
    assert v.exact and v.value == 3


# subrank

@pytest.mark.parametrize("r", [1, 2, 3])
def test_subrank_decision_unit(r):
    d = subrank_decision(unit_tensor(r, 3), r)
    assert d.verdict is Verdict.FEASIBLE
    assert verify_subrank_certificate(unit_tensor(r, 3), d.certificate, r)


def test_subrank_decision_W_one(W):
    d = subrank_decision(W, 1)
    assert d.verdict is Verdict.FEASIBLE
    assert verify_subrank_certificate(W, d.certificate, 1)


def test_subrank_decision_W_two(W):
    d = subrank_decision(W, 2)
    assert d.verdict is Verdict.INFEASIBLE
    assert d.how == "groebner"


def test_subrank_W_numeric_oracle():
    assert restriction_residual(W_NUMERIC, 1) < 1e-9
    assert restriction_residual(W_NUMERIC, 2) > 1e-3


def test_subrank_decision_range(W):
    with pytest.raises(ValueError):
        subrank_decision(W, 3)
    with pytest.raises(ValueError):
        subrank_decision(W, -1)


def test_subrank_decision_size_cap():
    with pytest.raises(SizeCapExceeded):
        subrank_decision(make_W(), 2, variable_cap=4)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_verify_subrank_identity(r):
    assert verify_subrank_certificate(unit_tensor(r, 3), identity_restriction(r), r)


def test_verify_subrank_W_explicit(W):
    row = lambda *xs: LinearMap(np.array([vec(*xs)], dtype=object))
    R = Restriction((row(1, 0), row(1, 0), row(0, 1)))
    assert verify_subrank_certificate(W, R, 1)


def test_verify_subrank_zero_maps(W):
    R = Restriction(tuple(LinearMap(np.array([vec(0, 0)], dtype=object)) for _ in range(3)))
    assert not verify_subrank_certificate(W, R, 1)


def test_verify_subrank_shape(W):
    with pytest.raises(ShapeMismatch):
        verify_subrank_certificate(W, identity_restriction(2), 1)


def test_subrank_bounds_W(W):
    v = subrank_bounds(W)
    assert v.exact and v.value == 1


# geometric rank

@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_geometric_rank_unit(r):
    v = geometric_rank(unit_tensor(r, 3))
    assert v.exact and v.value == r


def test_geometric_rank_W(W):
    v = geometric_rank(W)
    assert v.exact and v.value == 2


def test_geometric_rank_zero():
    for dims in [(2, 2, 2), (3, 1, 2), (2, 3)]:
        v = geometric_rank(Tensor.zeros(dims))
        assert v.exact and v.value == 0


def test_geometric_rank_matrix():
    M = Tensor.from_entries((3, 3), {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 4, (2, 2): 5})
    assert geometric_rank(M).value == 2


def test_geometric_rank_irrational(sqrt2, gauss):
    for F in (sqrt2, gauss):
        a = F.gen
        T = Tensor.from_entries((2, 2, 2), {(0, 0, 1): a, (0, 1, 0): 1 + a, (1, 0, 0): 1}, F)
        assert geometric_rank(T).value == 2
        assert geometric_rank(unit_tensor(2, 3, F)).value == 2


def test_geometric_rank_budget_unknown():
    T = Tensor.from_entries((3, 3, 3), {idx: (sum(idx) % 3) - 1 + idx[0] for idx in
                                        itertools.product(range(3), repeat=3)})
    v = geometric_rank(T, budget=1)
    assert not v.exact and (v.lo, v.hi) == (0, 6)


def test_geometric_rank_order_one():
    with pytest.raises(ValueError):
        geometric_rank(Tensor.from_entries((2,), {(0,): 1}))


# relation ideals

def test_relation_ideal_sqrt2(sqrt2):
    T = Tensor.from_entries((1, 1, 1), {(0, 0, 0): sqrt2.gen}, sqrt2)
    assert relation_basis_strings(relation_ideal(T)) == ["x111^2 - 2"]


def test_relation_ideal_rational(W):
    assert sorted(relation_basis_strings(relation_ideal(W))) == [
        "x111", "x112 - 1", "x121 - 1", "x122", "x211 - 1", "x212", "x221", "x222"]


def test_relation_ideal_conjugates_agree(sqrt2, gauss):
    for F in (sqrt2, gauss):
        a = F.gen
        P = Tensor.from_entries((1, 1, 1), {(0, 0, 0): a}, F)
        Q = Tensor.from_entries((1, 1, 1), {(0, 0, 0): -a}, F)
        assert relation_basis_strings(relation_ideal(P)) == relation_basis_strings(relation_ideal(Q))


def test_relation_ideal_distinguishes_non_conjugates(sqrt2):
    a = sqrt2.gen
    P = Tensor.from_entries((1, 1, 2), {(0, 0, 0): a, (0, 0, 1): a}, sqrt2)
    Q = Tensor.from_entries((1, 1, 2), {(0, 0, 0): a, (0, 0, 1): -a}, sqrt2)
    assert relation_basis_strings(relation_ideal(P)) != relation_basis_strings(relation_ideal(Q))


def test_relation_ideal_vanishes_on_tensor(sqrt2):
    a = sqrt2.gen
    T = Tensor.from_entries((1, 2, 2), {(0, 0, 0): a, (0, 0, 1): 1 + a, (0, 1, 1): Fraction(1, 2)}, sqrt2)
    I = relation_ideal(T)
    point = [complex(v.evaluate_at(math.sqrt(2))) for v in T.data.flat]
    for g in I.generators:
        assert abs(g.evaluate(point)) < 1e-9


# Fekete estimates and thresholds

def test_fekete_rank_unit2():
    rep = fekete_estimate("rank", unit_tensor(2, 3), 3)
    assert [e.value.value for e in rep.entries] == [2, 4, 8]
    assert all(e.root_lo == 2.0 and e.root_hi == 2.0 for e in rep.entries)
    assert rep.running_bound == 2.0 and rep.bound_side == "upper"


def test_fekete_subrank_unit3():
    rep = fekete_estimate("subrank", unit_tensor(3, 3), 2)
    assert all(e.root_lo == 3.0 and e.root_hi == 3.0 for e in rep.entries)
    assert rep.bound_side == "lower"


def test_fekete_subrank_W_n1():
    rep = fekete_estimate("subrank", make_W(), 1)
    assert rep.entries[0].value.exact and rep.entries[0].value.value == 1
    assert rep.running_bound == 1.0


def test_fekete_geometric_no_monotone_claim(W):
    rep = fekete_estimate("geometric_rank", W, 1)
    assert rep.bound_side is None and rep.running_bound is None
    assert rep.entries[0].value.value == 2


def test_fekete_running_monotone():
    T = Tensor.from_entries((2, 2, 2), {(0, 0, 0): 1, (1, 1, 1): 1, (0, 1, 1): 1})
    rep = fekete_estimate("rank", T, 2, budget=300)
    seq = rep.running_sequence()
    assert all(b <= a for a, b in zip(seq, seq[1:]))


def test_fekete_errors(W):
    with pytest.raises(ValueError):
        fekete_estimate("slice_rank", W, 2)
    with pytest.raises(ValueError):
        fekete_estimate("rank", W, 0)
    with pytest.raises(SizeCapExceeded):
        fekete_estimate("rank", W, 7)


def test_nth_root_exact():
    assert nth_root(8, 3) == 2.0
    assert nth_root(3 ** 10, 10) == 3.0
    assert nth_root(0, 2) == 0.0
    assert abs(nth_root(3, 2) - math.sqrt(3)) < 1e-15


def test_gap_threshold_examples():
    assert gap_threshold(2) == (1.0, 2.0)
    h3, t3 = gap_threshold(3)
    assert abs(h3 - 0.918295834054) < 1e-12 and abs(t3 - 1.889881574842) < 1e-12
    assert abs(t3 - 3 / 2 ** (2 / 3)) < 1e-12
    h4, t4 = gap_threshold(4)
    assert abs(h4 - 0.811278124459) < 1e-12 and abs(t4 - 1.754765350603) < 1e-12


@given(st.integers(2, 50))
def test_gap_threshold_closed_form(d):
    # 2^h(1/d) = d / (d-1)^((d-1)/d)
    _, t = gap_threshold(d)
    assert math.isclose(t, d / (d - 1) ** ((d - 1) / d), rel_tol=1e-13)
    assert 1 < t <= 2


def test_gap_threshold_rejects_small():
    with pytest.raises(ValueError):
        gap_threshold(1)
    with pytest.raises(ValueError):
        binary_entropy(1.5)


# properties

@settings(max_examples=25)
@given(small_tensors())
def test_order_bounds(T):
    budget = 300
    r = rank_bounds(T, budget)
    s = subrank_bounds(T, budget)
    g = geometric_rank(T, budget)
    assert max(flattening_rank(T, [m]) for m in (1, 2, 3)) <= r.hi
    assert s.hi <= min(T.dims)
    if g.exact:
        assert g.value <= sum(T.dims[:-1])
    if r.certificate is not None:
        assert verify_rank_certificate(T, r.certificate)
    if s.certificate is not None:
        assert verify_subrank_certificate(T, s.certificate, s.lo)
    if s.exact and g.exact:
        assert s.value <= g.value
    if r.exact and g.exact:
        assert g.value <= r.value


@settings(max_examples=10)
@given(small_tensors(), small_tensors())
def test_multiplicativity(T, S):
    budget = 200
    P = box_product(T, S)
    rT, rS, rP = rank_bounds(T, budget), rank_bounds(S, budget), rank_bounds(P, budget)
    assert rP.hi <= rT.hi * rS.hi
    sT, sS, sP = subrank_bounds(T, budget), subrank_bounds(S, budget), subrank_bounds(P, budget)
    # hi is proven, and the true subrank of P is at least lo(T) lo(S)
    assert sP.hi >= sT.lo * sS.lo
    if sP.exact:
        assert sP.value >= sT.lo * sS.lo


@settings(max_examples=10)
@given(small_tensors(values=(-1, 0, 1)), st.integers(0, 3))
def test_algebraicity_random(T, k):
    # scale entries by powers of sqrt 2 and compare with the conjugate
    from algtensor import nf_create
    F = nf_create([-2, 0, 1])
    a = F.gen
    S = Tensor.from_entries(T.dims, {idx: F(v.coeffs[0]) * (a ** ((sum(idx) + k) % 2)) + (k - 1)
                                     for idx, v in T.nonzero_entries()}, F)
    sigma = automorphisms(F)[1]
    C = conjugate_tensor(sigma, S)
    for f in (lambda X: geometric_rank(X, 300), lambda X: rank_bounds(X, 200),
              lambda X: subrank_bounds(X, 200)):
        u, v = f(S), f(C)
        assert max(u.lo, v.lo) <= min(u.hi, v.hi)
        if u.exact and v.exact:
            assert u.value == v.value
