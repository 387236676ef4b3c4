//! Minimal left Gröbner bases for the annihilator ideals of simple
//! highest-weight modules in types A and C.
//!
//! The crate builds the positive-root combinatorics, a Chevalley basis from
//! matrix realizations, exact PBW arithmetic in the universal enveloping
//! algebra under a homogeneous monomial order, the lattice-polytope point
//! and violator enumeration, the straightening construction of the basis,
//! and an explicit-module oracle that double-checks every result against
//! honest matrix representations.

pub mod chevalley;
pub mod error;
pub mod export;
pub mod fflv;
pub mod groebner;
pub mod module_oracle;
pub mod par;
pub mod roots;
pub mod uea;

pub use error::{Error, Result};
pub use export::{render_element, render_monomial};
pub use fflv::{enumerate_dyck_paths, fflv_points, minimal_violators, DyckPath, Sink, Violator};
pub use groebner::{
    base_root, build_groebner_basis, build_groebner_basis_with, is_reduced, left_reduce,
    partial_operator_a, run_full_verify, standard_monomials, straighten, straighten_search,
    verify_degenerate, verify_degenerate_with, verify_groebner, verify_groebner_with,
    verify_minimal, BasisElement, FullVerifyReport, GroebnerBasis, OracleMode, Provenance,
    VerifyReport,
};
pub use module_oracle::{
    annihilates_hw, build_module, check_representation, fflv_independent, ExplicitModule,
};
pub use roots::{
    positive_roots, ChainEnd, DominantWeight, LieKind, PositiveRoot, RootCmp, RootSystem,
};
pub use uea::{
    compare_monomials, Algebra, Letter, PBWMonomial, ProductKind, RewriteStrategy, UEAElement,
};
