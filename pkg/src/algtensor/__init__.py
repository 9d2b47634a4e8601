"""Exact tensor invariants over number fields.

Rank, subrank and geometric rank of d-way tensors with entries in a
number field Q(a), decided exactly with a Buchberger engine, together
with field automorphisms, relation ideals and Fekete estimates along
vertical tensor powers.
"""

from .errors import *  # noqa: F401,F403
from .groebner import (
    DEFAULT_BUDGET,
    GroebnerBasis,
    Unknown,
    Verdict,
    eliminate,
    groebner,
    ideal_dimension,
    is_feasible,
    normal_form,
)
from .numberfield import (
    QQ,
    AlgebraicNumber,
    FieldAutomorphism,
    NumberField,
    apply_automorphism,
    automorphisms,
    nf_create,
)
from .poly import GREVLEX, LEX, Ideal, MonomialOrder, Polynomial, Ring, block  # noqa: F401
from .tensor import (
    LinearMap,
    Restriction,
    Tensor,
    box_power,
    box_product,
    conjugate_tensor,
    flatten,
    multilinear_system,
    restrict,
    unit_tensor,
)

__version__ = "0.1.0"
