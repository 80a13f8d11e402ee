"""Overall-constraint-length reduction and error trellises for LDPC convolutional codes."""

from .poly import (
    BitSymbolSequence,
    Gf2Poly,
    Gf2PolyMatrix,
    convolve_syndrome,
    format_poly,
    overall_constraint_length,
    parse_poly,
    reciprocal_rows,
    shift_line,
)
from .qc import TANNER_155, ExponentMatrix, QcMatrix, canonical_row_patterns, unwrap
from .reduction import ReducedMatrix, ShiftLedger, apply_ledger, double_reduce, reciprocal_then_reduce, reduce
from .search import delta_filter, histogram, sweep

__version__ = "0.1.0"
