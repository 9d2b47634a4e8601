"""Rank decompositions and subrank restrictions: replay checks and searches.

Searches are exact but incomplete. They enumerate chart-normalized
vectors with small rational entries for modes 1..d-1 and solve the
remaining mode, which enters linearly, with exact Gaussian elimination.
A found certificate proves feasibility; not finding one proves nothing.

Most candidates are inconsistent, so each linear system is first
screened in floating point at one complex embedding of the field;
only systems passing the screen are solved exactly and replayed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import ShapeMismatch
from ..linalg import solve_many
from ..tensor import LinearMap, Restriction, Tensor, restrict, unit_tensor

SEARCH_CAP = 4000
SCREEN_TOL = 1e-8


def _embedding(F):
    """Numeric value of each field element at a fixed root of the minimal polynomial."""
    if F.is_rational:
        return lambda v: complex(v.coeffs[0])
    roots = sorted(np.roots([float(c) for c in reversed(F.minpoly)]), key=lambda z: (round(z.real, 9), z.imag))
    root = complex(roots[-1])
    return lambda v: v.evaluate_at(root)


def _numeric_consistent(A, B):
    """Float screen: does A X = B look solvable? False negatives only cost a missed certificate."""
    X, *_ = np.linalg.lstsq(A, B, rcond=None)
    return np.linalg.norm(A @ X - B) <= SCREEN_TOL * (1.0 + np.linalg.norm(B))


@dataclass(frozen=True)
class RankCertificate:
    """``terms[i][m]`` is the mode-m factor vector of term i."""

    terms: tuple

    @property
    def length(self):
        return len(self.terms)

    def to_json(self):
        return [[[str(v) for v in vec] for vec in term] for term in self.terms]


def _outer(vectors):
    out = np.array(vectors[0], dtype=object)
    for v in vectors[1:]:
        out = np.multiply.outer(out, np.array(v, dtype=object))
    return out


def verify_rank_certificate(T: Tensor, C: RankCertificate) -> bool:
    """True iff the factor outer products sum exactly to T."""
    total = np.empty(T.dims, dtype=object)
    total.fill(T.field.zero)
    for term in C.terms:
        if len(term) != T.order or any(len(v) != n for v, n in zip(term, T.dims)):
            raise ShapeMismatch(f"certificate term shapes {[len(v) for v in term]} do not match {T.dims}")
        total = total + _outer(list(term))
    return all(a == b for a, b in zip(total.flat, T.data.flat))


def verify_subrank_certificate(T: Tensor, R: Restriction, r: int) -> bool:
    """True iff restricting T by R gives exactly the unit tensor <r>."""
    if len(R.maps) != T.order:
        raise ShapeMismatch(f"{len(R.maps)} maps for an order-{T.order} tensor")
    for phi, n in zip(R.maps, T.dims):
        if phi.rows != r or phi.cols != n:
            raise ShapeMismatch(f"map of shape {phi.matrix.shape}, expected ({r}, {n})")
    if r == 0:
        return True
    return restrict(T, R) == unit_tensor(r, T.order, T.field)


def trivial_rank_certificate(T: Tensor) -> RankCertificate:
    """Decomposition by nonzero fibres along the mode with the fewest of them."""
    best = None
    F = T.field
    for m in range(T.order):
        moved = np.moveaxis(T.data, m, -1)
        terms = []
        for idx in itertools.product(*(range(n) for n in moved.shape[:-1])):
            fibre = moved[idx]
            if any(not v.is_zero() for v in fibre):
                others = []
                for k, n in enumerate(T.dims):
                    if k == m:
                        continue
                    pos = idx[len(others)]
                    others.append(tuple(F.one if j == pos else F.zero for j in range(n)))
                term = others[:m] + [tuple(fibre)] + others[m:]
                terms.append(tuple(term))
        if best is None or len(terms) < len(best):
            best = terms
    return RankCertificate(tuple(best))


def _small_rationals(height):
    vals = {Fraction(0)}
    for p in range(1, height + 1):
        for q in range(1, height + 1):
            vals.add(Fraction(p, q))
            vals.add(Fraction(-p, q))
    return sorted(vals, key=lambda v: (abs(v.numerator) + v.denominator, v < 0, abs(v)))


def chart_vectors(n, height=1):
    """Vectors with first nonzero entry 1 and other entries of bounded height."""
    vals = _small_rationals(height)
    out = []
    for pivot in range(n):
        for tail in itertools.product(vals, repeat=n - pivot - 1):
            out.append(tuple([Fraction(0)] * pivot + [Fraction(1)] + list(tail)))
    out.sort(key=lambda v: (sum(1 for x in v if x), v.index(1), [abs(x) for x in v]))
    return out


def search_rank_certificate(T: Tensor, r: int, height: int = 1, cap: int = SEARCH_CAP):
    """Look for a length-r decomposition; modes 1..d-1 from small vectors, mode d solved.

    Heads (the factors in modes 1..d-1) are distinct: a decomposition
    with a repeated head merges into a shorter one, which pads back to
    length r with a zero last factor.
    """
    F = T.field
    d = T.order
    if r == 0:
        return RankCertificate(()) if T.is_zero() else None
    if d == 1:
        return RankCertificate(((tuple(T.data),),) + tuple(
            ((tuple(F.zero for _ in range(T.dims[0])),),) for _ in range(r - 1)))
    pools = [chart_vectors(n, height) for n in T.dims[:-1]]
    head = list(itertools.product(*pools))
    rows = math.prod(T.dims[:-1])
    target = np.ascontiguousarray(T.data).reshape(rows, T.dims[-1])
    rhs = [list(target[:, k]) for k in range(T.dims[-1])]
    num = _embedding(F)
    B = np.array([[num(v) for v in row] for row in target], dtype=complex)
    columns = {}

    def column(t):
        if t not in columns:
            col = list(_outer(list(head[t])).reshape(-1))
            columns[t] = (col, np.array([complex(v) for v in col]))
        return columns[t]

    for tried, combo in enumerate(itertools.combinations(range(len(head)), min(r, len(head)))):
        if tried >= cap:
            return None
        pairs = [column(t) for t in combo]
        if not _numeric_consistent(np.stack([p[1] for p in pairs], axis=1), B):
            continue
        cols = [p[0] for p in pairs]
        A = [[c[row] for c in cols] for row in range(rows)]
        last = solve_many(A, rhs)
        if last is None:
            continue
        terms = []
        for i, t in enumerate(combo):
            vecs = [tuple(F(v) for v in vec) for vec in head[t]]
            vecs.append(tuple(_in_field(F, last[k][i]) for k in range(T.dims[-1])))
            terms.append(tuple(vecs))
        zero_head = tuple(tuple(F.zero for _ in range(n)) for n in T.dims)
        terms += [zero_head] * (r - len(terms))
        cert = RankCertificate(tuple(terms))
        if verify_rank_certificate(T, cert):
            return cert
    return None


def _in_field(F, v):
    return F.coerce(v) if hasattr(v, "field") else F(v)


def _diagonal_search(T: Tensor, r: int, node_cap: int = 200_000):
    """Find r support entries forming a diagonal subtensor (a 'free diagonal')."""
    support = [idx for idx, _ in T.nonzero_entries()]
    d = T.order
    in_support = set(support)
    nodes = 0

    def consistent(chosen, coords):
        # every support entry inside the chosen coordinate box must be a chosen entry
        boxes = [sorted(c) for c in coords]
        chosen_set = set(chosen)
        for cell in itertools.product(*boxes):
            if cell in in_support and cell not in chosen_set:
                return False
        return True

    def extend(start, chosen, coords):
        nonlocal nodes
        if len(chosen) == r:
            return list(chosen)
        for k in range(start, len(support)):
            nodes += 1
            if nodes > node_cap:
                return None
            J = support[k]
            if any(J[m] in coords[m] for m in range(d)):
                continue
            new_coords = [coords[m] | {J[m]} for m in range(d)]
            if not consistent(chosen + [J], new_coords):
                continue
            found = extend(k + 1, chosen + [J], new_coords)
            if found is not None:
                return found
        return None

    return extend(0, [], [frozenset()] * d)


def _restriction_from_diagonal(T: Tensor, entries):
    F = T.field
    r = len(entries)
    maps = []
    for m in range(T.order):
        mat = np.empty((r, T.dims[m]), dtype=object)
        mat.fill(F.zero)
        for i, J in enumerate(entries):
            mat[i, J[m]] = F.one if m < T.order - 1 else T.data[J].inv()
        maps.append(LinearMap(mat))
    return Restriction(tuple(maps))


def zero_restriction(T: Tensor, r: int) -> Restriction:
    F = T.field
    maps = []
    for n in T.dims:
        mat = np.empty((r, n), dtype=object)
        mat.fill(F.zero)
        maps.append(LinearMap(mat))
    return Restriction(tuple(maps))


def search_subrank_certificate(T: Tensor, r: int, height: int = 1, cap: int = SEARCH_CAP):
    """Look for maps carrying T onto <r>: free diagonals first, then a linear search.

    The linear search takes the rows of maps 1..d-1 from small chart
    vectors (rows of one map must be distinct, else two diagonal slots
    coincide) and solves for map d.
    """
    if r == 0:
        return zero_restriction(T, 0)
    diag = _diagonal_search(T, r)
    if diag is not None:
        R = _restriction_from_diagonal(T, diag)
        if verify_subrank_certificate(T, R, r):
            return R
    F = T.field
    d = T.order
    if d == 1:
        return None
    pools = [chart_vectors(n, height) for n in T.dims[:-1]]
    # slots may be permuted, so map 1's rows are an unordered set
    choices = [itertools.combinations(range(len(pools[0])), r)]
    choices += [itertools.permutations(range(len(pool)), r) for pool in pools[1:]]
    contracted = {}
    num = _embedding(F)

    def contraction(ids):
        # T contracted with one pool vector in each of modes 1..d-1
        if ids not in contracted:
            arr = T.data
            for m, j in enumerate(ids):
                vec = np.array([F(v) for v in pools[m][j]], dtype=object)
                arr = np.tensordot(vec, arr, axes=([0], [0]))
            contracted[ids] = (list(arr), np.array([num(v) for v in arr], dtype=complex))
        return contracted[ids]

    slots = list(itertools.product(range(r), repeat=d - 1))
    rhs = [[F.one if len(set(I)) == 1 and I[0] == i else F.zero for I in slots] for i in range(r)]
    B = np.array([[complex(v.coeffs[0]) for v in col] for col in rhs], dtype=complex).T
    for tried, heads in enumerate(itertools.product(*choices)):
        if tried >= cap:
            return None
        rows = [contraction(tuple(heads[m][I[m]] for m in range(d - 1))) for I in slots]
        if not _numeric_consistent(np.stack([row[1] for row in rows]), B):
            continue
        A = [row[0] for row in rows]
        last = solve_many(A, rhs)
        if last is None:
            continue
        maps = [LinearMap(np.array([[F(v) for v in pools[m][j]] for j in heads[m]], dtype=object))
                for m in range(d - 1)]
        maps.append(LinearMap(np.array([[_in_field(F, v) for v in row] for row in last], dtype=object)))
        R = Restriction(tuple(maps))
        if verify_subrank_certificate(T, R, r):
            return R
    return None
