//! Exact equivariant cohomology of the subcanonical divisor `L` on
//! Beauville-type surfaces `S = (C x C) / (Z/n)^2`, where `C` is the degree
//! `n` Fermat curve and `K_S = (n - 3) L`.
//!
//! The crate counts invariant character pairs to get `h^i(S, mL)`, searches
//! for surfaces with `H^1(mL) != 0` (so that `R(S, L)` fails to be
//! Cohen-Macaulay), emits checkable certificates and analyzes the graded
//! cones over multiples of `L`. Everything is exact integer arithmetic.

pub mod arithmetic;
pub mod characters;
pub mod cones;
pub mod error;
pub mod fermat;
pub mod search;
pub mod surface;

pub use arithmetic::{canonicalize, inv3, inverse, is_unit, Modulus, Residue};
pub use characters::{
    monomial_character, standard_to_v, v_to_standard, CharacterStd, CharacterV, Monomial,
};
pub use cones::{
    canonical_cover_report, cm_verdict, cone_report, dualizing_order, hilbert_function,
    three_cones_report, CanonicalCoverReport, CmVerdict, ConeReport, ThreeCones,
};
pub use error::{Error, Result};
pub use fermat::{genus, h0_eigenbasis, h1_characters, EigenBasis};
pub use search::{
    beauville5_report, exhaustive_search, find_witness, find_witness_exhaustive,
    verify_certificate, Beauville5Report, Certificate, SearchReport, Strategy, Verification,
};
pub use surface::{
    cohomology_row, cohomology_table, diagonal_hom, h0_surface, h1_dimension, h1_surface,
    is_free_action, psi_standard_matrix, seven_unit_conditions, sigma_set, surface_numerics,
    CohomRow, Direction, GroupHom, Mat2, SurfaceConfig, SurfaceNumerics,
};
