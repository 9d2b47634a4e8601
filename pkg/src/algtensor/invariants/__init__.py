"""Rank, subrank and geometric rank, their certificates, and asymptotic estimates."""

from .certificates import (
    RankCertificate,
    search_rank_certificate,
    search_subrank_certificate,
    verify_rank_certificate,
    verify_subrank_certificate,
)
from .fekete import FeketeEntry, FeketeReport, fekete_estimate, nth_root
from .gaps import binary_entropy, gap_threshold
from .geometric import geometric_rank
from .rank import flattening_lower_bound, flattening_rank, rank_bounds, rank_decision
from .relations import entry_variable_names, relation_basis_strings, relation_ideal
from .subrank import subrank_bounds, subrank_decision, subrank_upper_bound
from .values import Decision, InvariantValue

__all__ = [
    "Decision",
    "FeketeEntry",
    "FeketeReport",
    "InvariantValue",
    "RankCertificate",
    "binary_entropy",
    "entry_variable_names",
    "fekete_estimate",
    "flattening_lower_bound",
    "flattening_rank",
    "gap_threshold",
    "geometric_rank",
    "nth_root",
    "rank_bounds",
    "rank_decision",
    "relation_basis_strings",
    "relation_ideal",
    "search_rank_certificate",
    "search_subrank_certificate",
    "subrank_bounds",
    "subrank_decision",
    "subrank_upper_bound",
    "verify_rank_certificate",
    "verify_subrank_certificate",
]
