//! Balanced, sparsest generator matrices for cyclic Reed-Solomon codes.
//!
//! For n = q - 1 and k with k(n - k + 1)/n integral, [`GeneratorSet`]
//! builds a generator matrix of RS[n, k] over GF(q) in which every row has
//! exactly n - k + 1 nonzero entries and every column exactly
//! k(n - k + 1)/n. The resulting code is the ordinary RS code, so it is MDS
//! and decodes with standard bounded-distance decoders.
//!
//! ```
//! use balanced_rs::{CodeProfile, Gf, GeneratorSet};
//!
//! let field = Gf::builder(7, 1).alpha(3).build().unwrap();
//! let set = GeneratorSet::build(CodeProfile::new(field, 4).unwrap()).unwrap();
//! assert_eq!(set.generator().to_canonical()[0], vec![4, 6, 3, 0, 0, 0]);
//! ```
//!
//! Polynomial, matrix and decoding code is generic over [`Field`]; the
//! aliases below fix it to the table-backed [`Gf`].

pub mod balanced;
pub mod format;
pub mod gf;
pub mod mask;
pub mod matrix;
pub mod poly;
pub mod rscode;

pub use balanced::{ConstructionError, GeneratorSet, VerificationReport};
pub use format::{FormatError, MatrixFile, ProfileFile};
pub use gf::{Backend, Field, FieldElement, FieldSpec, Gf, GfError};
pub use mask::{MaskError, MaskMatrix, MaskParams, MaskRow, SelectorVector};
pub use matrix::{Matrix, MatrixError};
pub use poly::{Poly, PolyError};
pub use rscode::{CodeError, CodeProfile, Decoded, DecoderKind, ReedSolomon};

/// Polynomial over a [`Gf`].
pub type Polynomial = Poly<Gf>;
/// Matrix over a [`Gf`].
pub type GfMatrix = Matrix<Gf>;
/// Code profile over a [`Gf`].
pub type Profile = CodeProfile<Gf>;
/// Reed-Solomon codec over a [`Gf`].
pub type RsCode = ReedSolomon<Gf>;
/// Balanced generator over a [`Gf`].
pub type BalancedCode = GeneratorSet<Gf>;
