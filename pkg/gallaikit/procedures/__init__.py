"""
GALLAIKIT Proof Procedures

构造性论证中各引理与断言的可执行形式，每一步返回证书或带原因编码的失败
"""

from gallaikit.procedures.assembly import TransversalBuild, build_transversal
from gallaikit.procedures.certificates import (
    Inequality,
    Pretransversal,
    ProcedureCertificate,
    TraceRecord,
)
from gallaikit.procedures.cycles import base_cycle, enlarge_cycle, inner_path_stats, shrink_cycle
from gallaikit.procedures.intersection import (
    IntersectionMultigraph,
    Prop1Report,
    coarse_connectivity_bound,
    intersection_multigraph,
    prop1_bound,
    verify_prop1,
)
from gallaikit.procedures.lemmas import reroute_choice, shorten_cycle
from gallaikit.procedures.pretransversal import extend_pretransversal, pretransversal_union

__all__ = [
    "Inequality",
    "Pretransversal",
    "ProcedureCertificate",
    "TraceRecord",
    "reroute_choice",
    "shorten_cycle",
    "extend_pretransversal",
    "pretransversal_union",
    "base_cycle",
    "enlarge_cycle",
    "inner_path_stats",
    "shrink_cycle",
    "build_transversal",
    "TransversalBuild",
    "IntersectionMultigraph",
    "intersection_multigraph",
    "prop1_bound",
    "coarse_connectivity_bound",
    "verify_prop1",
    "Prop1Report",
]
