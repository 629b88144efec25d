"""Symplectic self-orthogonal, dual-containing and LCD codes from the
Plotkin sum construction, for Python 3.9+."""

__version__ = "1.0.0"

from .additive import (
    AdditiveCode,
    additive_min_distance,
    alternating_form,
    is_additive_so,
    is_trh_acd,
    phi_code,
    phi_vec,
)
from .appendix import APPENDIX_PERMUTATIONS, appendix_permutations
from .code import (
    LinearCode,
    code_from_generator,
    dual_euclidean,
    is_euclidean_lcd,
    is_euclidean_so,
    is_subcode,
    min_hamming_distance,
)
from .config import WorkbenchOptions
from .errors import ProblemDetails, WorkbenchError
from .families import (
    Construction,
    GrmSpec,
    GrsSpec,
    corollary_selfdual,
    grm_code,
    grs_code,
    hyperoval_code,
    nested_mds_pair,
    theorem3_codes,
    theorem4_hyperoval_codes,
    theorem4_mds_codes,
    theorem6_selfdual,
    theorem7_codes,
)
from .gf import FieldSpec, field_new, field_of_order
from .lcdsearch import (
    Permutation,
    apply_permutation,
    build_theorem9_codes,
    search_lcd_permutation,
    theorem9_check,
)
from .matrixfile import format_matrix, parse_matrix, read_matrix, write_matrix
from .models import (
    CodeReport,
    DistanceClaim,
    LcdSearchReport,
    SearchConfig,
    Table1Report,
)
from .plotkin import CodeParameters, plotkin_sum, plotkin_symplectic_dual
from .serialization import (
    CodeReportSchema,
    DistanceClaimSchema,
    LcdSearchReportSchema,
    ProblemDetailsSchema,
    SearchConfigSchema,
    Table1ReportSchema,
)
from .symplectic import (
    bounded_symplectic_weight_search,
    dual_symplectic,
    is_symplectic_dc,
    is_symplectic_lcd,
    is_symplectic_selfdual,
    is_symplectic_so,
    min_symplectic_distance,
    symplectic_inner,
    symplectic_weight,
)
from .workbench import Workbench, WorkbenchBuilder
