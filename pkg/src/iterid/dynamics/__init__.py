"""Evaluation of words in groups and iterated-identity dynamics."""

from .evaluate import ArityError, VerbalMap, evaluate
from .orbit import (BUDGET_EXHAUSTED, ENTERS_CYCLE, REACHES_IDENTITY, OrbitReport,
                    verbal_orbit)
from .stype import ValueSetTrace, check_s_identity
from .structure import (NilpotentClassification, ReturnTimes, SolvabilityMismatch,
                        SolvabilityResult, check_u_equivariance, check_u_homomorphism,
                        classify_nilpotent, radical, return_times, solvability_by_word)
from .verdict import (EXHAUSTIVE, FAILS, HOLDS, INCONCLUSIVE, SAMPLED, DepthReport,
                      IdentityVerdict, check_e_identity, depth_e, exponent_sum_certificate,
                      sample_tuple)

__all__ = [
    "ArityError", "BUDGET_EXHAUSTED", "DepthReport", "ENTERS_CYCLE", "EXHAUSTIVE", "FAILS",
    "HOLDS", "INCONCLUSIVE", "IdentityVerdict", "NilpotentClassification", "OrbitReport",
    "REACHES_IDENTITY", "ReturnTimes", "SAMPLED", "SolvabilityMismatch", "SolvabilityResult",
    "ValueSetTrace", "VerbalMap", "check_e_identity", "check_s_identity",
    "check_u_equivariance", "check_u_homomorphism", "classify_nilpotent", "depth_e",
    "evaluate", "exponent_sum_certificate", "radical", "return_times", "sample_tuple",
    "solvability_by_word", "verbal_orbit",
]
