# Asymptotic subrank of W from two tensor powers
#
# The subrank of W is 1, yet W x W (the vertical tensor square, a 4 x 4 x 4
# tensor) already has subrank 2, so the asymptotic subrank of W is at least
# sqrt 2. Super-multiplicativity makes every n-th root a lower bound.
# For 3-tensors the possible small values of asymptotic subrank are 0, 1
# and then nothing below 2^h(1/3), where h is the binary entropy.

from algtensor import Tensor, box_power, unit_tensor
from algtensor.invariants import binary_entropy, fekete_estimate, gap_threshold, verify_subrank_certificate

W = Tensor.from_entries((2, 2, 2), {(0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1})

rep = fekete_estimate("subrank", W, 2)
for e in rep.entries:
    print(f"n={e.n}: {e.value}   n-th root in [{e.root_lo:.6f}, {e.root_hi:.6f}]   running lower bound {e.running:.6f}")

# The witness for n = 2 is a restriction of W x W onto <2>; it replays.

square = rep.entries[-1].value
print("witness replays:", verify_subrank_certificate(box_power(W, 2), square.certificate, square.lo))

# Compare with the gap value. sqrt 2 = 1.414... lies below 2^h(1/3) = 1.8899,
# which is consistent with W's known asymptotic subrank of exactly 2^h(1/3).

h, threshold = gap_threshold(3)
print(f"h(1/3) = {h:.12f}, 2^h(1/3) = {threshold:.12f} (= 3 / 2^(2/3) = {3 / 2 ** (2 / 3):.12f})")
for d in (2, 3, 4, 5):
    print(d, binary_entropy(1 / d), gap_threshold(d)[1])

# For the unit tensor the estimate is exact at every power.

print([e.root_hi for e in fekete_estimate("rank", unit_tensor(2, 3), 3).entries])
