"""Coset leaders, leader codewords and trial sets of linear codes over GF(p^m)."""

from .code import LinearCode, ResourceBoundError, FixtureError, covering_radius
from .errormodel import error_partition, extract_trial_set, gradient_decode, is_trial_set
from .galois import GaloisField
from .leadercw import leader_codewords
from .leaderset import build_list, canonical_leaders, coset_leaders
from .verify import verify_code
from .wordspace import WeightCompatibleOrder, WordSpace

__all__ = [
    "GaloisField", "WordSpace", "WeightCompatibleOrder", "LinearCode",
    "ResourceBoundError", "FixtureError", "covering_radius",
    "build_list", "coset_leaders", "canonical_leaders", "leader_codewords",
    "error_partition", "is_trial_set", "extract_trial_set", "gradient_decode",
    "verify_code",
]
