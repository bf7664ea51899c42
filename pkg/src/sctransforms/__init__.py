"""Matrices diagonalized by the DFT, DCT and DST, built from supercharacters on Z/nZ."""

from .circulant import (
    CirculantElement,
    circulant_eigenvalues,
    circulant_matrix,
    circulant_membership,
    circulant_multiply,
    circulant_shift_basis,
    circulant_solve,
)
from .dct import (
    DctElement,
    dct_basis,
    dct_eigenvalues,
    dct_general,
    dct_is_generator,
    dct_membership,
    dct_multiply,
    dct_solve,
)
from .dst import (
    DstElementS,
    DstElementT,
    cross_sum_check,
    dst_convert,
    dst_eigenvalues,
    dst_membership,
    dst_s_basis,
    dst_s_general,
    dst_solve,
    dst_t_basis,
    dst_t_general,
)
from .errors import (
    DimensionMismatch,
    EvenModulus,
    IndexOutOfRange,
    ModulusMismatch,
    NonUnitGenerator,
    NotInAlgebra,
    SingularConversion,
    SingularElement,
    TransformAlgebraError,
)
from .documents import MatrixDocument
from .exact import ExactQuadratic
from .groups import (
    CyclicGroup,
    OrbitPartition,
    StructureConstants,
    SupercharacterTable,
    UnitSubgroup,
    generic_basis_matrix,
    make_unit_subgroup,
    orbit_partition,
    structure_constants,
    supercharacter_table,
    unitary_matrix,
)
from .oracle import (
    SuiteReport,
    diagonalization_residual,
    exhaustive_structure_constants,
    run_suite,
)
from .transforms import (
    TransformMatrix,
    apply_dft,
    dct_matrix,
    dft_matrix,
    dst_matrix,
    embed_even,
    embed_odd,
)

__version__ = "0.1.0"
