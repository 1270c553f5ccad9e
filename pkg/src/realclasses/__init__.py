"""Real, strongly real, and zeta-real conjugacy classes of the finite
linear groups GL_n(q), SL_n(q), PGL_n(q), PSL_n(q), and SL_n(q)/Y.

Closed-form counts live in :mod:`realclasses.counts`; the label calculus
(class invariants as sequences of constant-term-1 polynomials) in
:mod:`realclasses.labels`; brute-force matrix-group verification in
:mod:`realclasses.oracle`; the command line in :mod:`realclasses.cli`.
"""

from .counts import (
    CountReport,
    count,
    genfun_real_gl,
    real_gl,
    real_pgl,
    real_psl,
    real_sl,
    real_slq,
    section13_table,
    strongly_real_gl,
    strongly_real_pgl,
    strongly_real_psl,
    strongly_real_sl,
    strongly_real_slq,
    verify_counts,
    zeta_real_gl,
    zeta_real_sl,
)
from .errors import BudgetExceeded
from .fields import canonical_nonsquare, constrained_nonsquare, make_field
from .oracle import enumerate_group, matrix_to_label, verify_group

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CountReport",
    "canonical_nonsquare",
    "constrained_nonsquare",
    "count",
    "enumerate_group",
    "genfun_real_gl",
    "make_field",
    "matrix_to_label",
    "real_gl",
    "real_pgl",
    "real_psl",
    "real_sl",
    "real_slq",
    "section13_table",
    "strongly_real_gl",
    "strongly_real_pgl",
    "strongly_real_psl",
    "strongly_real_sl",
    "strongly_real_slq",
    "verify_counts",
    "verify_group",
    "zeta_real_gl",
    "zeta_real_sl",
    "__version__",
]
