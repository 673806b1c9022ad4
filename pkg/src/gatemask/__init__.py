"""Exact logical-masking metrics for logic gates and small Boolean functions."""

from .boolfn import (
    MAX_INPUTS,
    BoolExpr,
    ExprSyntaxError,
    GateFamily,
    GateKind,
    OnOffSets,
    TruthTable,
    compile_expr,
    free_vars,
    hamming,
    make_gate,
    on_off_sets,
    parse_expr,
    unparse,
)
from .faultmodel import (
    DistanceBin,
    FaultProfile,
    gemfic_oracle,
    gemnif_oracle,
    profile,
)
from .metrics import (
    MetricKind,
    MetricReport,
    WorkEstimate,
    format_decimal,
    gemfic_closed,
    gemnif_closed,
    percent_reduction,
    report,
    work_estimate,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_INPUTS",
    "BoolExpr",
    "DistanceBin",
    "ExprSyntaxError",
    "FaultProfile",
    "GateFamily",
    "GateKind",
    "MetricKind",
    "MetricReport",
    "OnOffSets",
    "TruthTable",
    "WorkEstimate",
    "compile_expr",
    "format_decimal",
    "free_vars",
    "gemfic_closed",
    "gemfic_oracle",
    "gemnif_closed",
    "gemnif_oracle",
    "hamming",
    "make_gate",
    "on_off_sets",
    "parse_expr",
    "percent_reduction",
    "profile",
    "report",
    "unparse",
    "work_estimate",
]
