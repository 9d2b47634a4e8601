"""The binary entropy function and the third asymptotic-subrank gap value."""

from __future__ import annotations

import math


def binary_entropy(p: float) -> float:
    """h(p) = -p log2 p - (1 - p) log2 (1 - p) on [0, 1], with h(0) = h(1) = 0."""
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if p in (0, 1):
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def gap_threshold(d: int):
    """Return (h(1/d), 2**h(1/d)); asymptotic subranks of d-tensors below the latter are 0 or 1.

    Double precision gives about 15 significant digits for both values.
    """
    if d < 2:
        raise ValueError("gap_threshold needs d >= 2")
    h = binary_entropy(1 / d)
    return h, 2.0 ** h
