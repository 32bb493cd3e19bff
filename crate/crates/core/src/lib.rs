//! Exact algebra for differential analysis of vectorial Boolean functions
//! over binary fields.
//!
//! The crate provides, in dependency order:
//!
//! * [`field`]: GF(2^m) in polynomial basis and its cubic extension
//!   F_{q^3} = F_q[u]/(g), with the Galois machinery (Frobenius, relative
//!   trace and norm, the symmetric forms q1, q4, q5).
//! * [`poly`]: sparse trivariate and univariate polynomial arithmetic,
//!   exact division, the elementary-symmetric basis with Newton's
//!   recursion, and the text grammar used by the CLI.
//! * [`phi`]: the surface polynomials phi_i and phi_f, divisibility
//!   reports, and the symbolic identities they satisfy.
//! * [`apn`]: brute-force differential uniformity, the performance kernel.
//! * [`criteria`]: exponent classification and the Rodier divisor
//!   condition over F_{q^3}.
//! * [`ccz`]: linearized permutations, their inverses, and the
//!   decomposition f = g(L(x)) exhibiting CCZ-equivalence to x^e + S(x).
//! * [`geometry`]: affine point counts on curves and surfaces with
//!   Weil-band evidence verdicts.
//!
//! All arithmetic is exact; every scalar lives in an explicit field
//! context and cross-context operations are hard errors.

pub mod apn;
pub mod ccz;
pub mod criteria;
pub mod error;
pub mod field;
pub mod geometry;
mod linalg;
pub mod phi;
pub mod poly;

pub use error::Error;
pub use field::ext::{form_q1, form_q4, form_q5, ExtCtx, Xfe};
pub use field::{Embedding, Fe, FieldCtx};
pub use poly::vbf::Vbf;
pub use poly::{Coeff, Mono, SymPoly, TriPoly};
