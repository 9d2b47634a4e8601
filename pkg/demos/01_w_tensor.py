# The W tensor: three ranks that disagree
#
# W = e1 e1 e2 + e1 e2 e1 + e2 e1 e1 is the smallest tensor whose rank,
# subrank and geometric rank all differ. This walk-through computes each
# one exactly and shows the certificates behind the answers.

from algtensor import Tensor
from algtensor.invariants import (
    flattening_rank,
    geometric_rank,
    rank_bounds,
    rank_decision,
    subrank_bounds,
    subrank_decision,
    verify_rank_certificate,
    verify_subrank_certificate,
)

W = Tensor.from_entries((2, 2, 2), {(0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1})
print(W)

# Flattening W along any single mode gives a 2 x 4 matrix of rank 2, so
# no decomposition into fewer than two simple tensors exists.

print("flattening ranks:", [flattening_rank(W, [m]) for m in (1, 2, 3)])

# Two terms are not enough either. Over C the rank-2 decomposition system
# has no solution, and the Groebner engine proves it: the reduced basis of
# every affine chart is {1}.

d = rank_decision(W, 2)
print("rank <= 2:", d.verdict, "via", d.how, "in", d.steps, "steps")

# rank_bounds combines the flattening bound with decisions. The upper
# bound comes with a decomposition that replays exactly.

r = rank_bounds(W)
print(r)
for term in r.certificate.terms:
    print("   ", " x ".join("(" + ", ".join(str(v) for v in vec) + ")" for vec in term))
print("certificate replays:", verify_rank_certificate(W, r.certificate))

# Subrank asks the opposite question: how large a unit tensor <r> can W be
# mapped onto? One is easy. Two is impossible over C.

print("subrank >= 2:", subrank_decision(W, 2).verdict)
s = subrank_bounds(W)
print(s, "| restriction replays:", verify_subrank_certificate(W, s.certificate, s.value))

# Geometric rank is the codimension of X(W) = {(x, y) : W(x, y, .) = 0},
# here cut out by x1*y1 and x1*y2 + x2*y1. It is two-dimensional in C^4.

print(geometric_rank(W))
