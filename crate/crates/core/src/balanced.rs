//! Balanced, sparsest generator matrices for cyclic RS codes.
//!
//! With d = n - k + 1 and b = k d / n integral, the selector from
//! [`crate::mask`] picks mask rows j_1 < ... < j_k. Row l of the transform
//! matrix P holds the coefficients of
//!
//! ```text
//! p^(j)(x) = p(α^{-(d-j)} x),   p(x) = (x - 1)(x - α)...(x - α^{k-2})
//! ```
//!
//! which vanishes exactly at α^{d-j}, ..., α^{d-j+k-2}, the zero columns of
//! mask j. The generator is G = P · G_RS: every row has weight d, every
//! column has weight b, and since P is invertible G spans RS[n, k].

use thiserror::Error;

use crate::gf::Field;
use crate::mask::{self, MaskError, MaskMatrix, MaskParams, MaskRow, SelectorVector};
use crate::matrix::{Matrix, MatrixError};
use crate::poly::{Poly, PolyError};
use crate::rscode::{CodeError, CodeProfile, DecoderKind, ReedSolomon};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Mask(#[from] MaskError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("construction produced a matrix violating {0}")]
    VerificationFailure(String),
    #[error("shift {0} appears twice modulo q - 1")]
    DuplicateShift(usize),
    #[error("shift list has {found} entries, expected k = {expected}")]
    ShiftCount { expected: usize, found: usize },
}

/// p(x) = Π_{i=0}^{k-2} (x - α^i).
pub fn base_polynomial<F: Field>(profile: &CodeProfile<F>) -> Poly<F> {
    let f = profile.field();
    let roots: Vec<F::Elem> = (0..profile.k() as i64 - 1)
        .map(|i| f.alpha_pow(i))
        .collect();
    Poly::from_roots(f.clone(), &roots)
}

/// p(α^{-(d-j)} x), the row polynomial for mask j.
pub fn shifted_polynomial<F: Field>(profile: &CodeProfile<F>, j: usize) -> Poly<F> {
    let f = profile.field();
    let scale = f.alpha_pow(j as i64 - profile.d() as i64);
    base_polynomial(profile)
        .scale_argument(scale)
        .expect("powers of α are nonzero")
}

/// Transform matrix whose rows are the coefficients of p(α^{-(d-j)} x)
/// for each shift j, padded to length k.
pub fn transform_matrix<F: Field>(profile: &CodeProfile<F>, shifts: &[usize]) -> Matrix<F> {
    let rows = shifts
        .iter()
        .map(|&j| shifted_polynomial(profile, j).padded(profile.k()))
        .collect();
    Matrix::from_rows(profile.field().clone(), rows).expect("rows have length k")
}

/// Every row has weight n - k + 1.
pub fn verify_sparsest<F: Field>(g: &Matrix<F>) -> bool {
    sparsest_violation(g).is_none()
}

/// First row whose weight differs from n - k + 1.
pub fn sparsest_violation<F: Field>(g: &Matrix<F>) -> Option<usize> {
    if g.rows() == 0 || g.rows() > g.cols() {
        return Some(0);
    }
    let d = g.cols() - g.rows() + 1;
    g.row_weights().iter().position(|&w| w != d)
}

/// Every column has weight k (n - k + 1) / n.
pub fn verify_balanced_columns<F: Field>(g: &Matrix<F>) -> bool {
    balance_violation(g).is_none()
}

/// First column whose weight differs from k (n - k + 1) / n. Column 0 is
/// reported when that quantity is not an integer.
pub fn balance_violation<F: Field>(g: &Matrix<F>) -> Option<usize> {
    let (k, n) = (g.rows(), g.cols());
    if k == 0 || k > n || (k * (n - k + 1)) % n != 0 {
        return Some(0);
    }
    let b = k * (n - k + 1) / n;
    g.column_weights().iter().position(|&w| w != b)
}

pub fn verify_rank<F: Field>(g: &Matrix<F>) -> usize {
    g.rank()
}

/// Zero pattern of G equals the masks bit for bit.
pub fn verify_support_match<F: Field>(g: &Matrix<F>, masks: &[MaskRow]) -> bool {
    support_violation(g, masks).is_none()
}

/// First (row, column) where the zero pattern of G and the mask disagree.
pub fn support_violation<F: Field>(g: &Matrix<F>, masks: &[MaskRow]) -> Option<(usize, usize)> {
    if masks.len() != g.rows() {
        return Some((masks.len().min(g.rows()), 0));
    }
    let f = g.field();
    for (l, mask) in masks.iter().enumerate() {
        if mask.bits.len() != g.cols() {
            return Some((l, 0));
        }
        for (j, (&bit, &v)) in mask.bits.iter().zip(g.row(l)).enumerate() {
            if (bit == 1) == f.is_zero(v) {
                return Some((l, j));
            }
        }
    }
    None
}

/// Builds P from arbitrary shifts and reports whether it is nonsingular.
pub fn lemma1_independence_check<F: Field>(
    profile: &CodeProfile<F>,
    shifts: &[usize],
) -> Result<bool, ConstructionError> {
    if shifts.len() != profile.k() {
        return Err(ConstructionError::ShiftCount {
            expected: profile.k(),
            found: shifts.len(),
        });
    }
    let n = profile.n();
    let mut seen = vec![false; n];
    for &j in shifts {
        if std::mem::replace(&mut seen[j % n], true) {
            return Err(ConstructionError::DuplicateShift(j));
        }
    }
    Ok(transform_matrix(profile, shifts).rank() == profile.k())
}

/// The balanced generator together with everything used to build it.
#[derive(Debug, Clone)]
pub struct GeneratorSet<F: Field> {
    code: ReedSolomon<F>,
    params: MaskParams,
    selector: SelectorVector,
    masks: Vec<MaskRow>,
    transform: Matrix<F>,
    generator: Matrix<F>,
    transform_inv: Matrix<F>,
}

impl<F: Field> GeneratorSet<F> {
    /// Runs the full construction and verifies every structural property
    /// before returning.
    pub fn build(profile: CodeProfile<F>) -> Result<Self, ConstructionError> {
        let params = MaskParams::new(profile.n(), profile.k())?;
        let selector = SelectorVector::solve(&params);
        let report = mask::verify_balance(&selector, &MaskMatrix::circulant(&params), &params)?;
        if !report.balanced {
            return Err(ConstructionError::VerificationFailure(format!(
                "selector balance at column {:?}",
                report.witness
            )));
        }
        let masks = mask::select_masks(&selector, &params)?;
        let code = ReedSolomon::new(profile);
        let transform = transform_matrix(code.profile(), selector.support());
        let generator = transform.mul(&code.vandermonde_generator())?;
        let transform_inv = transform
            .inverse()
            .map_err(|_| ConstructionError::VerificationFailure("invertibility of P".into()))?;
        let set = GeneratorSet {
            code,
            params,
            selector,
            masks,
            transform,
            generator,
            transform_inv,
        };
        set.verify()?;
        Ok(set)
    }

    /// Rebuilds a set around a stored generator and transform, e.g. one read
    /// from disk, without checking them. Call [`GeneratorSet::verify`] or
    /// [`GeneratorSet::report`] afterwards.
    pub fn from_parts(
        profile: CodeProfile<F>,
        transform: Matrix<F>,
        generator: Matrix<F>,
    ) -> Result<Self, ConstructionError> {
        let (n, k) = (profile.n(), profile.k());
        if transform.rows() != k || transform.cols() != k {
            return Err(MatrixError::DimensionMismatch(format!(
                "P is {}x{}, expected {k}x{k}",
                transform.rows(),
                transform.cols()
            ))
            .into());
        }
        if generator.rows() != k || generator.cols() != n {
            return Err(MatrixError::DimensionMismatch(format!(
                "G is {}x{}, expected {k}x{n}",
                generator.rows(),
                generator.cols()
            ))
            .into());
        }
        let params = MaskParams::new(n, k)?;
        let selector = SelectorVector::solve(&params);
        let masks = mask::select_masks(&selector, &params)?;
        let transform_inv = transform
            .inverse()
            .unwrap_or_else(|_| Matrix::zeros(profile.field().clone(), k, k));
        Ok(GeneratorSet {
            code: ReedSolomon::new(profile),
            params,
            selector,
            masks,
            transform,
            generator,
            transform_inv,
        })
    }

    /// Property-by-property verification results.
    pub fn report(&self) -> VerificationReport {
        let g = &self.generator;
        let non_codewords: Vec<usize> = g
            .row_iter()
            .enumerate()
            .filter(|(_, row)| !self.code.is_codeword(row))
            .map(|(i, _)| i)
            .collect();
        let product_matches = self
            .transform
            .mul(&self.code.vandermonde_generator())
            .is_ok_and(|pg| pg == *g);
        VerificationReport {
            sparsest: sparsest_violation(g),
            balanced: balance_violation(g),
            rank: verify_rank(g),
            k: self.params.k,
            support: support_violation(g, &self.masks),
            non_codewords,
            product_matches,
        }
    }

    pub fn verify(&self) -> Result<(), ConstructionError> {
        match self.report().first_failure() {
            None => Ok(()),
            Some(what) => Err(ConstructionError::VerificationFailure(what)),
        }
    }

    pub fn profile(&self) -> &CodeProfile<F> {
        self.code.profile()
    }

    pub fn code(&self) -> &ReedSolomon<F> {
        &self.code
    }

    pub fn params(&self) -> &MaskParams {
        &self.params
    }

    pub fn selector(&self) -> &SelectorVector {
        &self.selector
    }

    pub fn masks(&self) -> &[MaskRow] {
        &self.masks
    }

    /// The k x k matrix P.
    pub fn transform(&self) -> &Matrix<F> {
        &self.transform
    }

    /// The balanced generator G = P · G_RS.
    pub fn generator(&self) -> &Matrix<F> {
        &self.generator
    }

    pub fn transform_inverse(&self) -> &Matrix<F> {
        &self.transform_inv
    }

    /// u · G
    pub fn encode(&self, message: &[F::Elem]) -> Result<Vec<F::Elem>, CodeError> {
        crate::rscode::encode(message, &self.generator)
    }

    /// Maps RS message coefficients m = u · P back to u.
    pub fn message_from_coefficients(&self, coeffs: &[F::Elem]) -> Result<Vec<F::Elem>, CodeError> {
        Ok(self.transform_inv.left_mul(coeffs)?)
    }

    /// Bounded-distance decoding followed by P-inversion.
    pub fn decode(
        &self,
        received: &[F::Elem],
        kind: DecoderKind,
    ) -> Result<Vec<F::Elem>, CodeError> {
        let decoded = self.code.decode_with(received, kind)?;
        self.message_from_coefficients(&decoded.message)
    }

    /// Erasure decoding followed by P-inversion.
    pub fn decode_erasures(&self, received: &[Option<F::Elem>]) -> Result<Vec<F::Elem>, CodeError> {
        let poly = self.code.erasure_decode(received)?;
        self.message_from_coefficients(&poly.padded(self.params.k))
    }
}

/// Outcome of every structural check on a generator. `None` means the
/// property holds; otherwise the witness row or column is given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub sparsest: Option<usize>,
    pub balanced: Option<usize>,
    pub rank: usize,
    pub k: usize,
    pub support: Option<(usize, usize)>,
    pub non_codewords: Vec<usize>,
    /// Whether the stored G equals P · G_RS.
    pub product_matches: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<String> {
        if let Some(r) = self.sparsest {
            return Some(format!("row weight n - k + 1 (row {r})"));
        }
        if let Some(c) = self.balanced {
            return Some(format!("column weight k(n - k + 1)/n (column {c})"));
        }
        if self.rank != self.k {
            return Some(format!("rank {} != k = {}", self.rank, self.k));
        }
        if let Some((r, c)) = self.support {
            return Some(format!("mask support (row {r}, column {c})"));
        }
        if let Some(r) = self.non_codewords.first() {
            return Some(format!("code membership (row {r})"));
        }
        if !self.product_matches {
            return Some("G = P · G_RS".into());
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;

    fn gf7_profile(k: usize) -> CodeProfile<Gf> {
        CodeProfile::new(Gf::builder(7, 1).alpha(3).build().unwrap(), k).unwrap()
    }

    #[test]
    fn base_polynomial_examples() {
        assert_eq!(
            base_polynomial(&gf7_profile(4)).to_canonical(),
            vec![1, 4, 1, 1]
        );
        let p = base_polynomial(&gf7_profile(1));
        assert_eq!(p.to_canonical(), vec![1]);
        let g11 = CodeProfile::new(Gf::prime(11).unwrap(), 5).unwrap();
        let p = base_polynomial(&g11);
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.count_nonzero(), 5);
    }

    #[test]
    fn shifted_polynomial_examples() {
        let prof = gf7_profile(4);
        assert_eq!(
            shifted_polynomial(&prof, 0).to_canonical(),
            vec![1, 3, 1, 6]
        );
        assert_eq!(
            shifted_polynomial(&prof, 1).to_canonical(),
            vec![1, 2, 2, 1]
        );
        assert_eq!(
            shifted_polynomial(&prof, 3).to_canonical(),
            vec![1, 4, 1, 1]
        );
        assert_eq!(
            shifted_polynomial(&prof, 4).to_canonical(),
            vec![1, 5, 2, 6]
        );
        assert_eq!(shifted_polynomial(&prof, prof.d()), base_polynomial(&prof));
    }

    #[test]
    fn shifted_polynomial_roots_match_mask_zeros() {
        let prof = gf7_profile(4);
        let f = prof.field().clone();
        let params = MaskParams::new(6, 4).unwrap();
        for j in 0..6 {
            let p = shifted_polynomial(&prof, j);
            let mut zeros: Vec<usize> = (0..6)
                .filter(|&e| f.is_zero(p.eval(f.alpha_pow(e as i64))))
                .collect();
            let mut expected = params.zero_set(j);
            zeros.sort();
            expected.sort();
            assert_eq!(zeros, expected, "j={j}");
        }
    }

    #[test]
    fn gf7_generator_set() {
        let set = GeneratorSet::build(gf7_profile(4)).unwrap();
        assert_eq!(set.selector().support(), &[0, 1, 3, 4]);
        assert_eq!(
            set.transform().to_canonical(),
            vec![
                vec![1, 3, 1, 6],
                vec![1, 2, 2, 1],
                vec![1, 4, 1, 1],
                vec![1, 5, 2, 6]
            ]
        );
        assert_eq!(
            set.generator().to_canonical(),
            vec![
                vec![4, 6, 3, 0, 0, 0],
                vec![6, 3, 0, 0, 0, 4],
                vec![0, 0, 0, 4, 6, 3],
                vec![0, 0, 4, 6, 3, 0],
            ]
        );
        assert!(set.report().passed());
    }

    #[test]
    fn full_dimension_is_weighted_permutation() {
        let set = GeneratorSet::build(gf7_profile(6)).unwrap();
        let g = set.generator();
        assert_eq!(g.row_weights(), vec![1; 6]);
        assert_eq!(g.column_weights(), vec![1; 6]);
        assert_eq!(g.rank(), 6);
    }

    #[test]
    fn gf11_k5() {
        let set =
            GeneratorSet::build(CodeProfile::new(Gf::prime(11).unwrap(), 5).unwrap()).unwrap();
        let g = set.generator();
        assert_eq!(g.row_weights(), vec![6; 5]);
        assert_eq!(g.column_weights(), vec![3; 10]);
        assert_eq!(verify_rank(g), 5);
    }

    #[test]
    fn gf16_k6() {
        let set =
            GeneratorSet::build(CodeProfile::new(Gf::with_order(16).unwrap(), 6).unwrap()).unwrap();
        let g = set.generator();
        assert!(verify_sparsest(g) && verify_balanced_columns(g));
        assert_eq!(g.row_weights(), vec![10; 6]);
        assert_eq!(g.column_weights(), vec![4; 15]);
    }

    #[test]
    fn gf13_k4_support() {
        let set =
            GeneratorSet::build(CodeProfile::new(Gf::prime(13).unwrap(), 4).unwrap()).unwrap();
        assert_eq!(set.params().b, 3);
        assert!(verify_support_match(set.generator(), set.masks()));
    }

    #[test]
    fn vandermonde_is_not_sparsest() {
        let code = ReedSolomon::new(gf7_profile(4));
        let g = code.vandermonde_generator();
        assert!(!verify_sparsest(&g));
        assert!(!verify_balanced_columns(&g));
        assert_eq!(verify_rank(&g), 4);
    }

    #[test]
    fn rank_of_zero_matrix() {
        let f = Gf::prime(7).unwrap();
        assert_eq!(verify_rank(&Matrix::zeros(f, 4, 6)), 0);
    }

    #[test]
    fn single_row_support() {
        let set = GeneratorSet::build(gf7_profile(1)).unwrap();
        assert_eq!(set.masks()[0].bits, vec![1; 6]);
        assert!(verify_support_match(set.generator(), set.masks()));
        assert_eq!(set.generator().row_weights(), vec![6]);
    }

    #[test]
    fn inadmissible_rejected() {
        assert!(matches!(
            GeneratorSet::build(gf7_profile(2)),
            Err(ConstructionError::Mask(
                MaskError::NonIntegralBalance { .. }
            ))
        ));
    }

    #[test]
    fn independence_checks() {
        let prof = gf7_profile(4);
        assert!(lemma1_independence_check(&prof, &[0, 1, 3, 4]).unwrap());
        assert!(lemma1_independence_check(&prof, &[0, 1, 2, 3]).unwrap());
        assert_eq!(
            lemma1_independence_check(&prof, &[0, 1, 7, 4]),
            Err(ConstructionError::DuplicateShift(7))
        );
        // duplicated row ⇒ singular P
        assert_eq!(transform_matrix(&prof, &[0, 1, 1, 4]).rank(), 3);
    }

    #[test]
    fn corrupted_generator_fails_report() {
        let set = GeneratorSet::build(gf7_profile(4)).unwrap();
        let mut g = set.generator().clone();
        g.set(0, 0, g.field().zero());
        let broken =
            GeneratorSet::from_parts(set.profile().clone(), set.transform().clone(), g).unwrap();
        let r = broken.report();
        assert_eq!(r.sparsest, Some(0));
        assert_eq!(r.non_codewords, vec![0]);
        assert_eq!(r.support, Some((0, 0)));
        assert!(!r.product_matches);
    }

    #[test]
    fn balanced_round_trip() {
        let set = GeneratorSet::build(gf7_profile(4)).unwrap();
        let f = set.profile().field().clone();
        let u: Vec<_> = [2u64, 0, 5, 1]
            .iter()
            .map(|&v| f.element(v).unwrap())
            .collect();
        let mut c = set.encode(&u).unwrap();
        assert!(set.code().is_codeword(&c));
        c[3] = f.add(c[3], f.one());
        assert_eq!(set.decode(&c, DecoderKind::Syndrome).unwrap(), u);
        assert_eq!(set.decode(&c, DecoderKind::Gao).unwrap(), u);
        let rx: Vec<_> = set
            .encode(&u)
            .unwrap()
            .into_iter()
            .enumerate()
            .map(|(j, v)| (j % 3 != 0).then_some(v))
            .collect();
        assert_eq!(set.decode_erasures(&rx).unwrap(), u);
    }
}
