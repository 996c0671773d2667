"""Exact-arithmetic engines for embedding tensors on Hom-Lie algebras.

Everything computes over the rationals with ``fractions.Fraction``: finite
dimensional Hom-Lie and Hom-Leibniz algebras, their representations,
embedding tensors, the attached cochain complexes and cohomology, the
Maurer-Cartan characterizations, infinitesimal deformations, and a
truncated strongly homotopy layer.  Structures round-trip through a JSON
schema (see :mod:`homtensor.io`) and the ``homtensor`` command line drives
the validators over structure files.
"""

from .linalg import format_rational, parse_rational
from .structures import (
    EmbeddingTensor,
    HomLeibnizAlgebra,
    HomLeibnizRep,
    HomLieAlgebra,
    HomLieRep,
    HomSpace,
    IllDefinedStructure,
    QuotientTriple,
    ValidationReport,
    adjoint_leibniz_rep,
    adjoint_rep,
    bracket_ideal,
    identity_tensor,
    induced_hom_leibniz,
    induced_leibniz_rep,
    quotient_triple,
    validate_embedding_tensor,
    validate_hom_lie,
    validate_hom_leibniz,
    validate_leibniz_rep,
    validate_representation,
    yau_twist,
    yau_twist_leibniz,
)
from .cochains import (
    Cochain,
    RouteMismatch,
    balavoine_bracket,
    derived_bracket,
    phi_map,
    tensor_cochain,
)
from .complexes import (
    ComplexError,
    LeibnizComplex,
    PairComplex,
    PairingMap,
    SubspaceClosureError,
    TensorComplex,
    TripleCoefficientComplex,
    TripleComplex,
    TripleRepresentation,
    adjoint_triple_rep,
    delta_triple,
    les_exactness_check,
    make_complex,
    semidirect_triple,
    validate_triple_rep,
)
from .deformation import (
    check_equivalence_tensor,
    check_equivalence_triple,
    check_inf_deformation_tensor,
    check_inf_deformation_triple,
    classify_h1_T,
    classify_h2_hllt,
    find_equivalence_witness_tensor,
    find_equivalence_witness_triple,
    tensor_mc_residual,
)
from .homotopy import (
    DEFAULT_ARITY_CAP,
    GradedCochainBundle,
    GradedSpace,
    HLInfty,
    HLInftyRep,
    HLeibInfty,
    RepCochainBundle,
    SumCarrier,
    TwistedOps,
    VData,
    VElem,
    adjoint_infty_rep,
    encode_cochain,
    encode_embedding,
    encode_hom_leibniz,
    encode_hom_lie,
    encode_hom_lie_rep,
    graded_balavoine,
    hemi_carrier,
    hemi_semidirect_infty,
    hllt_mc_check,
    homotopy_mc_check,
    induced_hleib_infty,
    koszul_sign,
    maurer_cartan_residual,
    maurer_cartan_terms,
    triple_theta,
    triple_vdata,
    twist_by_mc,
    validate_hl_infty,
    validate_hl_infty_rep,
    validate_hleib_infty,
    voronov_lk,
)
from .io import (
    FORMAT_VERSION,
    StructureFile,
    StructureFileError,
    dumps_canonical,
    parse_structure,
    parse_structure_dict,
    serialize_structure,
    write_structure,
)

__version__ = "0.1.0"
