"""
GALLAIKIT Transversal

精确最小命中集、τ(M,G) 与 Gal(G)
"""

from gallaikit.transversal.hitting import (
    HittingCertificate,
    HittingInstance,
    HittingResult,
    hits_all,
    min_hitting_set,
)
from gallaikit.transversal.tau import (
    IntersectionCheck,
    TauResult,
    gallai,
    is_pairwise_intersecting,
    is_transversal,
    tau,
    tau_of_family,
)

__all__ = [
    "HittingInstance",
    "HittingCertificate",
    "HittingResult",
    "hits_all",
    "min_hitting_set",
    "IntersectionCheck",
    "TauResult",
    "tau",
    "tau_of_family",
    "gallai",
    "is_pairwise_intersecting",
    "is_transversal",
]
