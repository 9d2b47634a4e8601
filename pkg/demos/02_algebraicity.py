# Conjugate tensors share every algebraic invariant
#
# Applying a field automorphism to all entries of a tensor cannot change
# its rank, subrank or geometric rank, since each is defined by polynomial
# conditions with rational coefficients. Over Q(sqrt 2) the automorphism
# sends sqrt 2 to -sqrt 2; we check the invariants on both sides and
# compare the ideals of rational relations among the entries.

from algtensor import Tensor, automorphisms, conjugate_tensor, nf_create
from algtensor.invariants import (
    flattening_rank,
    geometric_rank,
    rank_bounds,
    relation_basis_strings,
    relation_ideal,
    subrank_bounds,
)

F = nf_create([-2, 0, 1])  # Q(a) with a^2 = 2
a = F.gen
T = Tensor.from_entries((2, 2, 2), {(0, 0, 0): 1, (0, 1, 1): a, (1, 0, 1): 1 + a, (1, 1, 0): -1}, F)

sigma = [s for s in automorphisms(F) if not s.is_identity][0]
S = conjugate_tensor(sigma, T)
print("sigma:", sigma)
print("T  =", T)
print("sT =", S)

for X, name in ((T, "T"), (S, "sT")):
    print(name, [flattening_rank(X, [m]) for m in (1, 2, 3)],
          geometric_rank(X), rank_bounds(X, 2000), subrank_bounds(X, 2000), sep="  ")

# The relation ideal I(T) collects all polynomials over Q vanishing at the
# entries of T. Eliminating a from <x_idx - t_idx(a), a^2 - 2> computes it,
# and the reduced basis is unique, so comparing strings compares ideals.

I, J = relation_ideal(T), relation_ideal(S)
for g in relation_basis_strings(I):
    print("   ", g)
print("I(T) == I(sT):", relation_basis_strings(I) == relation_basis_strings(J))

# A scalar example makes the point plainly: sqrt 2 and -sqrt 2 both satisfy
# exactly the relations generated by x^2 - 2.

for v in (a, -a):
    one = Tensor.from_entries((1, 1, 1), {(0, 0, 0): v}, F)
    print(v, "->", relation_basis_strings(relation_ideal(one)))
