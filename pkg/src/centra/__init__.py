"""Exact canonical forms and their commuting algebras over small fields."""

from .algebra import (
    Field,
    Poly,
    PrimeField,
    QQ,
    RationalField,
    RationalFunctionField,
    Scalar,
    field_from_name,
    is_irreducible,
    is_separable,
    poly_gcd,
    prime_field,
    rational_function_field,
)
from .canonical import (
    CanonicalSpec,
    E_KIND,
    FIRST_KIND,
    SegreData,
    companion_matrix,
    conjugate_partition,
    corner_matrix,
    dn_split,
    jordan_block,
    jordan_form,
    make_spec,
    normalize_partition,
    segre_indexing,
    weyr_characteristic,
    weyr_form,
    weyr_permutation,
)
from .centralizers import (
    AffineFamily,
    CentralizerBasis,
    ParamSlot,
    block_centralizer_basis,
    centralizer_dimension,
    companion_centralizer_basis,
    companion_centralizer_element,
    direct_sum_dimension,
    from_last_row,
    is_automorphism,
    jordan_centralizer_basis,
    last_row_toeplitz,
    sample_element,
    solve_corner_coupling,
    weyr_centralizer_basis,
    weyr_centralizer_basis_direct,
    weyr_determinant,
    weyr_layout,
)
from .commutant import (
    commutant_basis,
    commutant_dimension,
    commutes,
    sylvester_system,
)
from .errors import (
    BadPermutationError,
    BothZeroError,
    CentraError,
    DegreeZeroError,
    DivisionByZeroError,
    FieldMismatchError,
    FormulaMismatchError,
    IrreducibilityUnsupportedError,
    LengthMismatchError,
    NoSolutionError,
    NonPositivePartError,
    NonSeparableFirstKindError,
    NotCoprimeError,
    NotInCentralizerError,
    NotMonicError,
    NotMultipleOfSError,
    NotSortedDescendingError,
    NotSquareError,
    ParseError,
    ReducibleError,
    ShapeMismatchError,
    SingularMatrixError,
    TooLargeError,
)
from .matrices import (
    BlockLayout,
    Matrix,
    assemble_blocks,
    block_permutation_matrix,
    conjugate_by_block_permutation,
    extract_blocks,
    matrix_from_json_obj,
    matrix_from_text,
    matrix_to_json_obj,
    matrix_to_text,
    poly_at_matrix,
)

__version__ = "0.1.0"
