//! Exact determinants of cubic 3-index matrices of order 1 to 3.
//!
//! An order-`n` cubic matrix holds entries `a_ijk` with `i` (horizontal
//! layer), `j` (vertical page) and `k` (vertical layer) in `1..=n`. This
//! crate evaluates its determinant four independent ways and checks that
//! they agree:
//!
//! * the literal closed forms ([`det_closed`]),
//! * the double-permutation signed sum ([`det_permutation`]),
//! * one-level Laplace expansion along any layer of any axis ([`expand`]),
//! * fully recursive Laplace evaluation ([`det_laplace`]).
//!
//! ```
//! use cubedet_core::{det_closed, expand, parse_text, Axis, Scalar};
//!
//! let a = parse_text("2\n4 -3\n-1 5\n\n-2 4\n-7 3\n").unwrap();
//! assert_eq!(det_closed(&a).unwrap(), Scalar::from_int(-3));
//! assert_eq!(expand(&a, Axis::VerticalPage, 2).unwrap().total, Scalar::from_int(-3));
//! ```
//!
//! All arithmetic is exact over checked 64-bit rationals.

pub mod core3d;
pub mod determinant;
pub mod error;
pub mod examples;
pub mod io;
pub mod laplace;
pub mod scalar;
pub mod verify;

pub use core3d::{Axis, CubicMatrix, Dim3, Index3, MAX_ORDER};
pub use determinant::{
    closed_form_terms, det_closed, det_permutation, perm_terms, sign_definitional, sign_expansion,
    signed_terms, Sign, SignedTerm, TermTemplate,
};
pub use error::{Error, Location, Result};
pub use io::{parse_auto, parse_json, parse_text, serialize_json, serialize_text};
pub use laplace::{
    cofactor, det_laplace, expand, expand_all, minor, Cofactor, ExpansionTrace, SignConvention, TraceTerm,
};
pub use scalar::Scalar;
pub use verify::{batch_verify, cross_check, random_cubic, BatchSummary, GenSpec, VerifyReport};
