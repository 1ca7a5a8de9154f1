"""Schatten p-norms and numerical checks of Schatten-norm inequalities.

The public surface is re-exported here; see the submodules for details:

- :mod:`.linalg` dense complex linear algebra (Jacobi eigensolver)
- :mod:`.schatten` norms and quasi-norms
- :mod:`.ineq` inequality checks and reports
- :mod:`.gen` seeded generators of admissible instances
- :mod:`.campaign` batch verification
- :mod:`.tightness` hill-climbing search for near-extremal instances
"""

from .campaign import verify
from .errors import (
    DomainError,
    InequalityViolation,
    ParameterError,
    ParseError,
    PreconditionError,
    SchattenLabError,
    ShapeError,
)
from .gen import GenConfig
from .ineq import (
    Case,
    CheckReport,
    Constraint,
    OperatorTuple,
    Orientation,
    Sign,
    Verdict,
    check_cor1,
    check_cor2,
    check_lemma,
    check_lorch_identity,
    check_orth_th1,
    check_orth_th2,
    check_parallelogram,
    check_reverse_triangle_positive,
    check_scalar_power,
    check_th1,
    check_th2,
    check_triangle,
    run_case,
)
from .linalg import (
    adjoint,
    gram,
    hermitian_eigenvalues,
    matmul,
    psd_sqrt,
    singular_values,
    trace_inner,
)
from .schatten import PExponent, hilbert_schmidt_norm, schatten_norm, schatten_norm_psd
from .tightness import SearchConfig, optimize_ratio, ratio, sweep

__version__ = "0.1.0"

__all__ = [
    "adjoint",
    "Case",
    "check_cor1",
    "check_cor2",
    "check_lemma",
    "check_lorch_identity",
    "check_orth_th1",
    "check_orth_th2",
    "check_parallelogram",
    "check_reverse_triangle_positive",
    "check_scalar_power",
    "check_th1",
    "check_th2",
    "check_triangle",
    "CheckReport",
    "Constraint",
    "DomainError",
    "GenConfig",
    "gram",
    "hermitian_eigenvalues",
    "hilbert_schmidt_norm",
    "InequalityViolation",
    "matmul",
    "OperatorTuple",
    "optimize_ratio",
    "Orientation",
    "ParameterError",
    "ParseError",
    "PExponent",
    "PreconditionError",
    "psd_sqrt",
    "ratio",
    "run_case",
    "schatten_norm",
    "schatten_norm_psd",
    "SchattenLabError",
    "SearchConfig",
    "ShapeError",
    "Sign",
    "singular_values",
    "sweep",
    "trace_inner",
    "Verdict",
    "verify",
]
