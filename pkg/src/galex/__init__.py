"""Exact-arithmetic toolkit for structures on M x G built from a central
homomorphism: axiom certification, chain complexes, cocycle construction,
and integer homology."""

from .algebra import (
    CentralHom,
    CoeffHom,
    FiniteAbelianGroup,
    FiniteGroup,
    GModule,
    MultilinearMap,
    abelian_group,
    check_g_invariance,
    cyclic_group,
    identity_central_hom,
    scalar_power_action,
    scalar_product_map,
    symmetric_group,
    trivial_central_hom,
    validate_central_hom,
    validate_coeff_hom,
    validate_gmodule,
    validate_group,
    validate_multilinear,
    zero_coeff_hom,
)
from .biquandle import (
    AxiomReport,
    GAlexanderStructure,
    XSetSpec,
    build_g_alexander,
    self_under_x_set,
    trivial_x_set,
    verify_biquandle,
    verify_mcb,
    verify_x_set,
)
from .chains import REGIME_TRIVIAL, REGIME_XSET, ChainSystem, ChainVector
from .cocycles import (
    Cochain,
    VARIANTS,
    build_phi_biquandle,
    build_phi_mcb,
    cross_check,
    explicit_formula,
    is_coboundary,
    serialize_cochain,
    verify_cocycle,
)
from .homology import (
    boundary_matrix,
    cohomology_dim_field,
    cohomology_dim_snf,
    homology,
)
from .linalg import (
    HomologyResult,
    LatticeBasis,
    homology_from_matrices,
    homology_mod_q,
    lattice_equal,
    rank_mod_p,
    smith_normal_form,
    solve_mod,
)
from .maps import (
    PROJ_BOUNDARY_SIGN,
    gamma,
    gamma_chain,
    gamma_inv,
    gamma_inv_chain,
    proj,
    proj_chain,
    psi,
    psi_chain,
    psi_lambda,
    psi_lambda_chain,
    verify_chain_map,
    verify_gamma_degenerate_spans,
)

__version__ = "0.1.0"
