//! Exact construction of graded Lie algebras from pentads of Cartan type and
//! from square Cartan-like matrices.
//!
//! All arithmetic is over the rationals. The central object is the minimal
//! graded Lie algebra attached to a local Lie algebra `G₋₁ ⊕ G₀ ⊕ G₁`, built
//! degree by degree in [`graded`]. The other modules produce local algebras:
//! [`pentad`] from pentads `(r, n; A, D, Γ)`, [`contragredient`] from a
//! matrix `C`, and [`sl2fd`] from finite index sets of the `sl₂` universal
//! algebra. [`realize`] builds pentads whose algebras are Kac-Moody and
//! contragredient algebras.

pub mod contragredient;
pub mod error;
pub mod exactq;
pub mod fixtures;
pub mod graded;
pub mod local;
pub mod pentad;
pub mod realize;
pub mod sl2fd;

pub use error::{Error, Result};
pub use exactq::{format_rational, parse_rational, q, qf, QMatrix, QVector, Rational};
pub use graded::{expand, expand_with_limit, DimensionTable, GradedAlgebra, GradedElement};
pub use local::{local_hom_check, HomCheck, LocalKernel, LocalLieAlgebra, LocalMap, MismatchReport};
pub use pentad::{CartanPentad, PentadFile, StructureSummary};
pub use contragredient::{center_closed_form, contragredient_local, reduced_local};
pub use realize::{
    complete_to_invertible, derived_realization, realize_full_km, realize_invertible, realize_symmetrizable, symmetrize,
    RealizationCertificate, RealizationMode,
};
pub use sl2fd::{
    compare_report, compare_with_reduced, ctilde_entry, ctilde_minor, dtilde_entry, phi_map, sl2fd_local, sl2fd_pentad,
    Comparison, FDIndex, FDIndexSet,
};
