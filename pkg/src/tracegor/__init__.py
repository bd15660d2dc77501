"""Gorenstein-type classification of graded affine semigroup rings via canonical trace ideals."""

from .canonical import a_invariant, canonical_module, min_degree_dim, user_canonical
from .errors import InputError, ResourceBoundError, TraceGorError
from .harness import (CampaignConfig, CampaignReport, TheoremInstance, check_theorem, exhaustive_numerical,
                      random_normal_2d, random_numerical, run_campaign)
from .invariants import ClassificationReport, HVectorReport, classify, h_vector, hilbert_function
from .lattice import SimplicialCone, parallelepiped_points
from .modules import (MonomialModule, inverse_module, minimize_generators, module_membership, multiply_modules,
                      trace_module)
from .numerical import NumericalSemigroup, apery_set, numerical_profile
from .results import TheoremInstanceResult
from .ringspec import RingSpec, load_ring_spec
from .semigroup import (AffineSemigroupRing, Grading, Limits, Verdict, hilbert_basis_2d, is_normal, membership,
                        minimal_semigroup_generators, new_ring, radical_test)
from .veronese import okokok_check, veronese_module, veronese_ring

__version__ = "0.1.0"

__all__ = [
    "AffineSemigroupRing", "CampaignConfig", "CampaignReport", "ClassificationReport", "Grading", "HVectorReport",
    "InputError", "Limits", "MonomialModule", "NumericalSemigroup", "ResourceBoundError", "RingSpec",
    "SimplicialCone", "TheoremInstance", "TheoremInstanceResult", "TraceGorError", "Verdict", "a_invariant",
    "apery_set", "canonical_module", "check_theorem", "classify", "exhaustive_numerical", "h_vector",
    "hilbert_basis_2d", "hilbert_function", "inverse_module", "is_normal", "load_ring_spec", "membership",
    "min_degree_dim", "minimal_semigroup_generators", "minimize_generators", "module_membership",
    "multiply_modules", "new_ring", "numerical_profile", "okokok_check", "parallelepiped_points", "radical_test",
    "random_normal_2d", "random_numerical", "run_campaign", "trace_module", "user_canonical", "veronese_module",
    "veronese_ring",
]
