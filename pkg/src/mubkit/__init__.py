"""mubkit: construct and certify full sets of mutually unbiased bases.

For N = p^r (p prime) the package builds the N + 1 unbiased bases of C^N
from Galois field arithmetic, stores them exactly as integer root-of-unity
exponents, and certifies unbiasedness either with exact cyclotomic integer
arithmetic or numerically against a tolerance.
"""

__version__ = "0.1.0"

from .construct import (
    CharacterVector,
    ExponentMatrix,
    MubSet,
    assemble_mub_set,
    build_route,
    build_route_char2,
    build_route_q,
    build_route_tensor,
    build_route_trace,
    character_vector,
    q_vector,
    row_labels,
)
from .cyclotomic import CyclotomicInt, norm_certificates, roots_of_unity
from .errors import (
    CapacityError,
    DomainError,
    MubkitError,
    ParseError,
    StructuralError,
    UnsupportedRouteError,
)
from .gf import GaloisField, Prime
from .mubfile import read_mub_file, write_csv, write_mub_file
from .poly import (
    Poly,
    element_order,
    find_factor,
    is_irreducible,
    is_primitive,
    least_primitive_root,
    search_primitive,
)
from .verify import (
    MultiplicityTable,
    PairFailure,
    VerificationReport,
    omega_exponents,
    r_exponents,
    rep_multiplicities_joint,
    rep_multiplicities_omega,
    rep_multiplicities_r,
    verify_mub,
)

__all__ = [
    "CapacityError",
    "CharacterVector",
    "CyclotomicInt",
    "DomainError",
    "ExponentMatrix",
    "GaloisField",
    "MubSet",
    "MubkitError",
    "MultiplicityTable",
    "PairFailure",
    "ParseError",
    "Poly",
    "Prime",
    "StructuralError",
    "UnsupportedRouteError",
    "VerificationReport",
    "assemble_mub_set",
    "build_route",
    "build_route_char2",
    "build_route_q",
    "build_route_tensor",
    "build_route_trace",
    "character_vector",
    "element_order",
    "find_factor",
    "is_irreducible",
    "is_primitive",
    "least_primitive_root",
    "norm_certificates",
    "omega_exponents",
    "q_vector",
    "r_exponents",
    "read_mub_file",
    "rep_multiplicities_joint",
    "rep_multiplicities_omega",
    "rep_multiplicities_r",
    "roots_of_unity",
    "row_labels",
    "search_primitive",
    "verify_mub",
    "write_csv",
    "write_mub_file",
    "__version__",
]
