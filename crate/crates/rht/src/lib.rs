//! Exact-arithmetic computer algebra for rational homotopy theory of nilmanifolds
//! and Sasakian-type models.
//!
//! Everything is computed over Q or Q(i) with arbitrary-precision integers; there is
//! no floating point anywhere. The major pieces:
//!
//! - [`scalar`], [`linalg`]: exact scalars, sparse matrices, RREF, subspaces, quotients.
//! - [`gca`], [`fdga`], [`dga`]: free graded-commutative differential algebras with
//!   Koszul signs, finite-dimensional DGAs, and the common trait the rest works over.
//! - [`lie`], [`cohomology`]: Lie algebras, Chevalley-Eilenberg complexes, cohomology
//!   with canonical representatives, cup products.
//! - [`tower`]: canonical Sullivan 1-minimal tower construction.
//! - [`formality`]: 1-formality verdicts, Massey triple products, quadratic
//!   presentations, Heisenberg recognition.
//! - [`malcev`]: dualizing towers back to nilpotent Lie algebra towers.
//! - [`hodge`]: filtrations, Deligne splittings, spectral sequences to E2, mixed-Hodge
//!   diagram axioms, del-delbar and Bott-Chern checks, bigraded towers.
//! - [`sasaki`]: basic-cohomology rings, the associated (2n+1)-dimensional models,
//!   and the end-to-end pipeline.
//! - [`dsl`], [`cli`]: the text input language and the `rht` command-line driver.
//!
//! See the crate examples for a guided tour, one runnable example per capability:
//!
//! ```text
//! cargo run -p rht --example betti_numbers      # CE complexes and cohomology
//! cargo run -p rht --example one_minimal_tower  # Sullivan 1-minimal towers
//! cargo run -p rht --example formality_verdicts # 1-formality + quadratic presentations
//! cargo run -p rht --example massey_products    # Massey triple products
//! cargo run -p rht --example malcev_tower       # towers of nilpotent Lie algebras
//! cargo run -p rht --example mixed_hodge        # Deligne splittings, spectral sequences
//! cargo run -p rht --example bott_chern         # bicomplex checks
//! cargo run -p rht --example sasaki_pipeline    # the full Sasakian pipeline
//! cargo run -p rht --example dsl_tour           # parsing and printing the input language
//! ```

pub mod cli;
pub mod cohomology;
pub mod dga;
pub mod dsl;
pub mod error;
pub mod fdga;
pub mod formality;
pub mod gca;
pub mod hodge;
pub mod lie;
pub mod linalg;
pub mod malcev;
pub mod sasaki;
pub mod scalar;
pub mod tower;

pub use error::{Error, Result};
pub use scalar::Scalar;
