"""Exact-arithmetic toolkit for finite-dimensional non-associative algebras.

Algebras are given by rational structure constants. The package classifies
idempotents as primitive two-sided axes, computes two-sided eigenspace
decompositions, checks the Z2 x Z2 fusion grading, builds the three Miyamoto
involutions of an axis, closes subalgebras generated by elements, and runs
the full identity suite for configurations generated by two axes.

Scalars cross the boundary as reduced rational strings ("p/q" or "p");
elements and matrices are (nested) lists of such strings, so everything is
exact. Use `fractions.Fraction(s)` to turn results into Python numbers.
"""

from axial._core import (
    AlgebraTable,
    AxisProfile,
    InputError,
    algebra_from_json,
    apply_map,
    axis_orbit,
    check_fusion,
    classify_axis,
    decompose,
    dim2_algebra,
    eigenspace,
    find_axes,
    find_idempotents,
    is_automorphism,
    is_idempotent,
    left_operator,
    line3_matsuo,
    load_algebra,
    matrix_unit_algebra,
    matsuo_algebra,
    minimal_polynomial,
    right_operator,
    save_algebra,
    subalgebra_closure,
    sym4_matsuo,
    tau_delta,
    tau_diag,
    tau_lambda,
    two_sided_eigenspace,
    verify_axes,
    verify_pair,
    verify_random,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraTable",
    "AxisProfile",
    "InputError",
    "algebra_from_json",
    "apply_map",
    "axis_orbit",
    "check_fusion",
    "classify_axis",
    "decompose",
    "dim2_algebra",
    "eigenspace",
    "find_axes",
    "find_idempotents",
    "is_automorphism",
    "is_idempotent",
    "left_operator",
    "line3_matsuo",
    "load_algebra",
    "matrix_unit_algebra",
    "matsuo_algebra",
    "minimal_polynomial",
    "right_operator",
    "save_algebra",
    "subalgebra_closure",
    "sym4_matsuo",
    "tau_delta",
    "tau_diag",
    "tau_lambda",
    "two_sided_eigenspace",
    "verify_axes",
    "verify_pair",
    "verify_random",
]
