"""Brute-force fault-pair enumeration and the two exact masking metrics.

Every ordered pair (applied pattern p, faulty pattern q) with p != q is one
fault event: the pair injects hamming(p, q) simultaneous input bit-faults and
produces an output error exactly when f(p) != f(q).  Two ratios summarize a
function's masking behaviour, both held as exact fractions:

  GEMNIF  = output errors / total injected bit-faults
          = #{(p,q) : f(p) != f(q)} / sum over all pairs of hamming(p, q)
  GEMFIC  = output errors / total faulty patterns
          = #{(p,q) : f(p) != f(q)} / (2^n * (2^n - 1))

``profile`` walks the pairs in a plain Python double loop and keeps the full
per-pattern, per-distance breakdown; it is the readable reference.  The
oracle functions enumerate the same pair set in vectorized blocks of applied
patterns so that property suites can afford thousands of runs, and the test
suite pins them against ``profile`` across many functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .boolfn import TruthTable, hamming


@dataclass(frozen=True)
class DistanceBin:
    """Faulty patterns at one Hamming distance from an applied pattern."""

    distance: int
    faulty_patterns: int
    output_errors: int


@dataclass(frozen=True)
class FaultProfile:
    """Complete fault-pair census of one truth table.

    ``per_pattern[p][k-1]`` describes the faulty patterns at Hamming
    distance k from applied pattern p.
    """

    n: int
    per_pattern: tuple[tuple[DistanceBin, ...], ...]
    total_faulty_patterns: int
    total_fault_count: int
    total_output_errors: int


def profile(table: TruthTable) -> FaultProfile:
    """Literal double loop over all ordered pattern pairs."""
    n = table.n_inputs
    size = table.size
    out = table.outputs
    counts = [[0] * (n + 1) for _ in range(size)]
    errors = [[0] * (n + 1) for _ in range(size)]
    total_pairs = 0
    total_faults = 0
    total_errors = 0
    for p in range(size):
        fp = out[p]
        for q in range(size):
            if p == q:
                continue
            k = hamming(p, q)
            counts[p][k] += 1
            total_pairs += 1
            total_faults += k
            if out[q] != fp:
                errors[p][k] += 1
                total_errors += 1
    per_pattern = tuple(
        tuple(DistanceBin(k, counts[p][k], errors[p][k]) for k in range(1, n + 1))
        for p in range(size)
    )
    return FaultProfile(n, per_pattern, total_pairs, total_faults, total_errors)


# Cap on the number of matrix cells materialized per block; keeps the n=16
# case (2^32 ordered pairs) within a few tens of MB.
_BLOCK_CELLS = 1 << 24


@lru_cache(maxsize=4096)
def _pair_totals(table: TruthTable) -> tuple[int, int]:
    """(output errors, injected bit-faults) over all ordered pairs.

    Enumerates the full 2^n x 2^n pair grid block by block; the p == q
    diagonal contributes zero faults and zero errors, so it needs no mask.
    """
    size = table.size
    out = np.fromiter(table.outputs, np.uint8, size)
    pc = np.fromiter((p.bit_count() for p in range(size)), np.uint8, size)
    # Pattern indices fit uint16 at the n = 16 cap.
    patterns = np.arange(size, dtype=np.uint16)
    block = max(1, _BLOCK_CELLS // size)
    errors = 0
    faults = 0
    for start in range(0, size, block):
        stop = min(start + block, size)
        xo = patterns[start:stop, None] ^ patterns[None, :]
        faults += int(pc[xo].sum(dtype=np.int64))
        errors += int((out[start:stop, None] != out[None, :]).sum(dtype=np.int64))
    return errors, faults


def gemnif_oracle(table: TruthTable) -> Fraction:
    """Output errors per injected input bit-fault, by exhaustive enumeration."""
    errors, faults = _pair_totals(table)
    return Fraction(errors, faults)


def gemfic_oracle(table: TruthTable) -> Fraction:
    """Output errors per faulty input pattern, by exhaustive enumeration."""
    errors, _ = _pair_totals(table)
    return Fraction(errors, table.size * (table.size - 1))
