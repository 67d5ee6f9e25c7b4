"""Exact counting and generating functions for diagonally symmetric
alternating sign matrices (DSASMs), their odd-diagonal relatives (OSASMs),
and diagonally symmetric permutation matrices (DSPMs).

The package computes everything through Pfaffians of explicit triangular
arrays, checked at small sizes against direct enumeration and against a
six-vertex-model partition function.
"""

__version__ = "0.1.0"

from .exact import (  # noqa: F401
    BiSeries,
    Cyclo12,
    LaurentPoly,
    MultiPoly,
    RatFunc,
    ZETA12,
    binom,
    pconst,
    pvar,
    series_of_ratfunc,
)
from .pfaffian import (  # noqa: F401
    TriArray,
    check_identity,
    det,
    leading_pfaffians,
    pf_definition,
    pf_eliminate,
)
from .kernels import (  # noqa: F401
    EntryTable,
    count_table,
    entry_count,
    entry_dspm,
    entry_recur_table,
    entry_reform,
    entry_rs,
    kernel_ratfunc,
    oracle_entry,
)
from .genfun import (  # noqa: F401
    ASM_CLASSES,
    GenFunResult,
    RELATION_IDS,
    asm_class_count,
    asm_mi_genfun_det,
    check_relation,
    dsasm_count,
    dspm_x,
    osasm_count,
    osasm_x,
    osasm_x1,
    x_general_sym,
    x_general_t1,
    x_product_det,
    x_rs1,
    x_rst,
)
