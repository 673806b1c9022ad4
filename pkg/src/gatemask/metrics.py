"""Closed-form masking metrics per gate family, cross-checks, and work sizing.

The closed forms are algebraic shortcuts for what the enumeration oracle
computes; ``report`` always runs the oracle and flags any mismatch, since a
mismatch can only mean a bug on one side.

For an n-input gate the totals underlying both metrics are:

  faulty pattern pairs   2^n * (2^n - 1)
  injected bit-faults    2^n * sum_{k=1..n} C(n,k)*k  =  n * 2^(2n-1)
  output errors          2 * |ON| * |OFF|

which yields, family by family:

  inverter                      GEMNIF = GEMFIC = 1
  and/nand/or/nor (singleton)   GEMNIF = 2(2^n - 1) / (n * 2^(2n-1))
                                GEMFIC = 2^(1-n)
  xor/xnor/maj/min (equal sets) GEMNIF = 2^(2n-1) / (n * 2^(2n-1)) = 1/n
                                GEMFIC = 2^(n-1) / (2^n - 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from . import faultmodel
from .boolfn import (
    EQUIVALENT_KINDS,
    MAX_INPUTS,
    BoolExpr,
    GateFamily,
    GateKind,
    TruthTable,
    compile_expr,
    make_gate,
    unparse,
)


class MetricKind(Enum):
    GEMNIF = "gemnif"
    GEMFIC = "gemfic"


def format_decimal(value: Fraction | int, places: int = 4) -> str:
    """Fixed-point rendering, rounding halves away from zero."""
    if places < 0:
        raise ValueError("places must be >= 0")
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10**places
    whole, rest = divmod(scaled.numerator, scaled.denominator)
    if 2 * rest >= scaled.denominator:
        whole += 1
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole // 10**places}.{whole % 10**places:0{places}d}"


def _bitfault_denominator(n: int) -> int:
    # Written as the defining sum rather than n * 2^(2n-1) on purpose.
    return (1 << n) * sum(comb(n, k) * k for k in range(1, n + 1))


def gemnif_closed(family: GateFamily) -> Fraction:
    """Closed-form GEMNIF for a gate family."""
    n = family.arity
    if family.kind is GateKind.NOT:
        return Fraction(1)
    if family.kind in EQUIVALENT_KINDS:
        return Fraction(1 << (2 * n - 1), _bitfault_denominator(n))
    return Fraction(2 * ((1 << n) - 1), _bitfault_denominator(n))


def gemfic_closed(family: GateFamily) -> Fraction:
    """Closed-form GEMFIC for a gate family."""
    n = family.arity
    if family.kind is GateKind.NOT:
        return Fraction(1)
    pattern_pairs = (1 << n) * ((1 << n) - 1)
    if family.kind in EQUIVALENT_KINDS:
        return Fraction(1 << (2 * n - 1), pattern_pairs)
    return Fraction(2 * ((1 << n) - 1), pattern_pairs)


def closed_form(family: GateFamily, metric: MetricKind) -> Fraction:
    if metric is MetricKind.GEMNIF:
        return gemnif_closed(family)
    return gemfic_closed(family)


def oracle_value(table: TruthTable, metric: MetricKind) -> Fraction:
    if metric is MetricKind.GEMNIF:
        return faultmodel.gemnif_oracle(table)
    return faultmodel.gemfic_oracle(table)


@dataclass(frozen=True)
class MetricReport:
    """Oracle and (when available) closed-form values for one function."""

    descriptor: str
    metric: MetricKind
    oracle: Fraction
    closed: Fraction | None
    agree: bool | None
    decimal: str


def report(
    source: GateFamily | BoolExpr, metric: MetricKind, precision: int = 4
) -> MetricReport:
    """Evaluate one metric; the oracle always runs, the closed form when known.

    ``agree`` is None for plain expressions, which have no family formula.
    """
    if isinstance(source, GateFamily):
        table = make_gate(source)
        closed = closed_form(source, metric)
        descriptor = source.describe()
    else:
        table = compile_expr(source)
        closed = None
        descriptor = unparse(source)
    oracle = oracle_value(table, metric)
    agree = None if closed is None else closed == oracle
    return MetricReport(descriptor, metric, oracle, closed, agree,
                        format_decimal(oracle, precision))


def percent_reduction(old: Fraction, new: Fraction) -> Fraction:
    """Exact percentage drop from old to new; render with format_decimal(x, 1)."""
    if old <= 0:
        raise ValueError("reduction is undefined for a non-positive baseline")
    return 100 * (old - new) / old


@dataclass(frozen=True)
class WorkEstimate:
    """Enumeration cost figures for an n-input function.

    ``gemnif_weighted_work`` scales the pair count by (n+1)/2 faults per
    pair, a deliberately rough average; ``exact_fault_count`` is the true
    total, which the weighted figure overshoots for every n > 1.
    """

    n: int
    faulty_pattern_pairs: int
    gemnif_weighted_work: int
    exact_fault_count: int


def work_estimate(n: int) -> WorkEstimate:
    if not 1 <= n <= MAX_INPUTS:
        raise ValueError(f"n must be within 1..{MAX_INPUTS}, got {n}")
    pairs = (1 << n) * ((1 << n) - 1)
    return WorkEstimate(
        n=n,
        faulty_pattern_pairs=pairs,
        gemnif_weighted_work=pairs * (n + 1) // 2,
        exact_fault_count=n << (2 * n - 1),
    )
