"""Strategy-proofness checks, approximation ratios, adversarial search and certificates."""

from limloc.verify.certificates import CertificateResult, RatioAtLeast, SPViolation, Theorem, certify_lower_bound
from limloc.verify.families import Family, families_for
from limloc.verify.ratio import INF, RatioWitness, approximation_ratio, format_ratio, measure_ratio
from limloc.verify.search import SearchConfig, adversarial_search, random_instances
from limloc.verify.strategyproof import SPWitness, check_strategy_proof, misreport_candidates

__all__ = [
    "INF",
    "CertificateResult",
    "Family",
    "RatioAtLeast",
    "RatioWitness",
    "SPViolation",
    "SPWitness",
    "SearchConfig",
    "Theorem",
    "adversarial_search",
    "approximation_ratio",
    "certify_lower_bound",
    "check_strategy_proof",
    "families_for",
    "format_ratio",
    "measure_ratio",
    "misreport_candidates",
    "random_instances",
]
