//! JSON-facing documents for code profiles and generator matrices.
//!
//! Elements are written as canonical integers and matrices row-major, so a
//! profile for GF(7) with α = 3 and k = 4 reads
//!
//! ```json
//! {"p": 7, "m": 1, "modulus": null, "alpha": 3, "n": 6, "k": 4}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::balanced::{ConstructionError, GeneratorSet};
use crate::gf::{Gf, GfError};
use crate::matrix::{Matrix, MatrixError};
use crate::rscode::{CodeError, CodeProfile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("invalid field: {0}")]
    Field(#[from] GfError),
    #[error("invalid code: {0}")]
    Code(#[from] CodeError),
    #[error("invalid matrix: {0}")]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileFile {
    pub p: u64,
    pub m: usize,
    /// Low-to-high coefficients of the modulus; `null` for prime fields.
    pub modulus: Option<Vec<u64>>,
    pub alpha: u64,
    pub n: usize,
    pub k: usize,
}

impl ProfileFile {
    pub fn from_profile(profile: &CodeProfile<Gf>) -> Self {
        let spec = profile.field().spec();
        ProfileFile {
            p: spec.p,
            m: spec.m,
            modulus: spec.modulus.clone(),
            alpha: spec.alpha,
            n: profile.n(),
            k: profile.k(),
        }
    }

    /// Rebuilds the field and profile; n must equal p^m - 1.
    pub fn to_profile(&self) -> Result<CodeProfile<Gf>, FormatError> {
        let mut builder = Gf::builder(self.p, self.m).alpha(self.alpha);
        if let Some(m) = &self.modulus {
            builder = builder.modulus(m.clone());
        }
        let field = builder.build()?;
        Ok(CodeProfile::with_length(field, self.n, self.k)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub profile: ProfileFile,
    #[serde(rename = "P")]
    pub transform: Vec<Vec<u64>>,
    #[serde(rename = "G")]
    pub generator: Vec<Vec<u64>>,
}

impl MatrixFile {
    pub fn from_set(set: &GeneratorSet<Gf>) -> Self {
        MatrixFile {
            profile: ProfileFile::from_profile(set.profile()),
            transform: set.transform().to_canonical(),
            generator: set.generator().to_canonical(),
        }
    }

    /// Loads the stored matrices without verifying them.
    pub fn to_set(&self) -> Result<GeneratorSet<Gf>, FormatError> {
        let profile = self.profile.to_profile()?;
        let field = profile.field().clone();
        let transform = Matrix::from_canonical(field.clone(), &self.transform)?;
        let generator = Matrix::from_canonical(field, &self.generator)?;
        Ok(GeneratorSet::from_parts(profile, transform, generator)?)
    }
}
