"""Exact homological algebra for 2-periodic complexes of finitely
generated free modules over the local ring k[x] localized at (x):
Smith normal forms with certificates, minimal models, classification of
indecomposables, and Auslander-Reiten triangles and quivers.
"""

from .artheory import (
    ARReport,
    LARReport,
    QuiverGraph,
    QuiverResult,
    ar_triangle,
    build_quiver,
    quiver_dot,
    serre_functor,
    serre_length_check,
    shift_triangle,
    socle_map,
    translate,
    verify_left_ar,
    verify_right_ar,
    verify_triangle,
)
from .classify import (
    DecomposeResult,
    IndecompLabel,
    IndecompMultiset,
    assemble,
    decompose,
    finite_length_cohomology,
    is_homotopy_iso,
    k_complex,
    label,
    model_complex,
)
from .complexes import (
    ChainMap2,
    ComplexViolation,
    HomModule,
    Homotopy2,
    Triangle,
    TwoPeriodicComplex,
    add_maps,
    cohomology,
    compose,
    cone,
    delta_iso,
    direct_sum,
    dual,
    hom_module,
    homc,
    homotopic,
    identity_map,
    is_null_homotopic,
    make_complex,
    negate_map,
    scale_map,
    shift,
    shift_map,
    strict_triangle,
    sub_maps,
    sum_map,
    tensor2,
    validate_complex,
    zero_complex,
    zero_map,
)
from .errors import (
    CompositeNotZeroError,
    DimensionMismatchError,
    FieldMismatchError,
    InvalidChainMapError,
    NonUnitError,
    NotAComplexError,
    NotDivisibleError,
    NotFiniteLengthError,
    NotInvertibleError,
    NotMinimalError,
    NotTrivialError,
    ParseError,
    PeriodicaError,
    ValidationError,
)
from .fields import FieldSpec
from .localring import (
    LocalElem,
    elem,
    format_element,
    from_int,
    inverse,
    one,
    parse_element,
    unit_part,
    valuation,
    x_power,
    x_shift,
    zero,
)
from .matrix import RMatrix, block, block_diag, commutation_matrix, kron
from .minimal import (
    SplitResult,
    TrivialSummand,
    TrivialType,
    is_minimal,
    reduce,
    trivial_complex,
    trivial_contraction,
)
from .smith import (
    SmithForm,
    SubquotientModule,
    homology_invariants,
    invert,
    is_invertible,
    matrix_rank,
    smith_normal_form,
    solve_over_ring,
)
from .strictify import (
    QuasiPeriodicData,
    ambient_differential,
    strictify,
    window_chain_map,
)

__version__ = "0.1.0"
