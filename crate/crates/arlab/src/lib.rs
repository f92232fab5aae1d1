//! arlab: an exact symbolic workbench for relation types of ideals and
//! strong uniform Artin-Rees numbers on desk-scale polynomial and quotient
//! rings.
//!
//! The crate is organized bottom-up:
//!
//! - [`field`], [`monomial`], [`poly`], [`parse`]: exact coefficients and
//!   sparse polynomial arithmetic.
//! - [`groebner`]: reduced Groebner bases (Buchberger with Gebauer-Moeller
//!   pair elimination), normal forms, membership.
//! - [`ideal`], [`graded`]: ideal arithmetic in polynomial and quotient
//!   rings and graded invariants (Hilbert functions, length, minimal
//!   generators, multiplicity, Krull dimension).
//! - [`rees`]: Rees defining ideals, effective-relations tests, and exact
//!   relation type computations with independent colon-chain oracles.
//! - [`artin_rees`]: strong uniform Artin-Rees numbers for cyclic-module
//!   pairs and executable checkers for the inequalities relating them to
//!   relation types, multiplicities and primary decompositions.
//! - [`spec_file`], [`suite`], [`cli`]: JSON ring fixtures, the bundled
//!   verification suites, and the `arlab` command line.
//!
//! ## Examples
//!
//! The `examples/` directory is the guided tour, one runnable program per
//! capability:
//!
//! ```text
//! examples/
//! ├── groebner_basics.rs      bases, normal forms, membership
//! ├── ideal_calculus.rs       ∩, colon, eliminate, saturate
//! ├── graded_invariants.rs    Hilbert functions, mu, e(A), dim
//! ├── relation_type.rs        Rees ideals and rt on the model rings
//! ├── colon_chain_oracles.rs  the two colon-chain routes to rt
//! ├── artin_rees_numbers.rs   s, the AR identity, the sandwich
//! ├── brt_bound.rs            brt from a primary decomposition
//! ├── wang_growth.rs          the s_k growth table
//! └── verify_paper.rs         the full bundled suite
//! ```
//!
//! ```bash
//! cargo run --release --example relation_type
//! cargo run --release --example wang_growth
//! ```
//!
//! The `arlab` binary exposes the same operations over JSON ring files;
//! `arlab verify-paper` runs the full bundled suite.

pub mod artin_rees;
pub mod cli;
pub mod error;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rees;
pub mod report;
pub mod ring;
pub mod spec_file;
pub mod suite;

pub use error::{Error, Result};
pub use field::{Coeff, Field};
pub use groebner::{groebner_basis, normal_form, GroebnerBasis};
pub use ideal::IdealHandle;
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::RingPresentation;
