//! Cyclic Reed-Solomon codes RS[n, k] with n = q - 1.
//!
//! A message polynomial m(x) of degree below k is evaluated at the defining
//! set {1, α, ..., α^{n-1}}. Because the evaluation points are every nonzero
//! field element, the codeword polynomial c(x) = Σ c_j x^j vanishes at
//! α^1, ..., α^{n-k}, which is what the syndrome decoder relies on.

use thiserror::Error;

use crate::gf::{Field, GfError};
use crate::matrix::{Matrix, MatrixError};
use crate::poly::{Poly, PolyError};

/// Exhaustive enumeration budget for [`min_distance_oracle`].
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("dimension k = {k} out of range for n = {n}")]
    BadDimension { n: usize, k: usize },
    #[error("length {n} is not q - 1 = {expected}")]
    NotCyclic { n: usize, expected: u64 },
    #[error("expected {expected} symbols, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{available} unerased symbols, at least {needed} required")]
    TooManyErasures { available: usize, needed: usize },
    #[error("unerased symbol at position {position} disagrees with the interpolant")]
    Inconsistent { position: usize },
    #[error("decoding failed: {0}")]
    DecodeFailure(&'static str),
    #[error("exhaustive enumeration of {0} messages exceeds the budget")]
    TooLarge(u128),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Field, length and dimension of a cyclic RS code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeProfile<F: Field> {
    field: F,
    n: usize,
    k: usize,
}

impl<F: Field> CodeProfile<F> {
    /// RS[q-1, k] over `field`.
    pub fn new(field: F, k: usize) -> Result<Self, CodeError> {
        let n = (field.order() - 1) as usize;
        Self::with_length(field, n, k)
    }

    /// Like [`CodeProfile::new`] but with an explicit length, which must
    /// equal q - 1.
    pub fn with_length(field: F, n: usize, k: usize) -> Result<Self, CodeError> {
        let expected = field.order() - 1;
        if n as u64 != expected {
            return Err(CodeError::NotCyclic { n, expected });
        }
        if k == 0 || k > n {
            return Err(CodeError::BadDimension { n, k });
        }
        Ok(CodeProfile { field, n, k })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum distance n - k + 1.
    pub fn d(&self) -> usize {
        self.n - self.k + 1
    }

    /// k d / n when it is an integer.
    pub fn balance(&self) -> Option<usize> {
        let num = self.k * self.d();
        num.is_multiple_of(self.n).then_some(num / self.n)
    }

    /// Error-correction radius ⌊(n - k) / 2⌋.
    pub fn correctable(&self) -> usize {
        (self.n - self.k) / 2
    }
}

/// Which bounded-distance decoder to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecoderKind {
    /// Berlekamp-Massey, Chien search and Forney.
    #[default]
    Syndrome,
    /// Gao's interpolation and partial extended Euclid.
    Gao,
}

/// Result of error decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded<E> {
    /// Message coefficients m_0..m_{k-1}.
    pub message: Vec<E>,
    pub codeword: Vec<E>,
    /// (position, magnitude) for every corrected symbol, by position.
    pub errors: Vec<(usize, E)>,
}

/// Encoder and decoders for one [`CodeProfile`].
#[derive(Debug, Clone)]
pub struct ReedSolomon<F: Field> {
    profile: CodeProfile<F>,
    // α^j for j in 0..n
    points: Vec<F::Elem>,
}

impl<F: Field> ReedSolomon<F> {
    pub fn new(profile: CodeProfile<F>) -> Self {
        let f = profile.field();
        let mut points = Vec::with_capacity(profile.n);
        let alpha = f.primitive();
        let mut x = f.one();
        for _ in 0..profile.n {
            points.push(x);
            x = f.mul(x, alpha);
        }
        ReedSolomon { profile, points }
    }

    pub fn profile(&self) -> &CodeProfile<F> {
        &self.profile
    }

    pub fn field(&self) -> &F {
        &self.profile.field
    }

    /// Evaluation points 1, α, ..., α^{n-1}.
    pub fn points(&self) -> &[F::Elem] {
        &self.points
    }

    /// α^e with the exponent reduced mod n.
    fn alpha_pow(&self, e: i64) -> F::Elem {
        self.points[e.rem_euclid(self.profile.n as i64) as usize]
    }

    /// The k x n Vandermonde matrix with entry (i, j) = α^{ij}.
    pub fn vandermonde_generator(&self) -> Matrix<F> {
        let (n, k) = (self.profile.n, self.profile.k);
        let rows = (0..k)
            .map(|i| (0..n).map(|j| self.alpha_pow((i * j) as i64)).collect())
            .collect();
        Matrix::from_rows(self.field().clone(), rows).expect("rows have equal length")
    }

    /// Evaluates a message polynomial at the defining set.
    pub fn evaluate(&self, message: &Poly<F>) -> Vec<F::Elem> {
        self.points.iter().map(|&x| message.eval(x)).collect()
    }

    /// Encodes message coefficients m_0..m_{k-1}; same as m · G_RS.
    pub fn encode(&self, message: &[F::Elem]) -> Result<Vec<F::Elem>, CodeError> {
        if message.len() != self.profile.k {
            return Err(CodeError::LengthMismatch {
                expected: self.profile.k,
                found: message.len(),
            });
        }
        Ok(self.evaluate(&Poly::new(self.field().clone(), message.to_vec())))
    }

    /// Coefficients of the unique polynomial of degree below n through
    /// (α^j, word_j): m_i = n^{-1} Σ_j word_j α^{-ij}.
    pub fn interpolate_coefficients(&self, word: &[F::Elem], count: usize) -> Vec<F::Elem> {
        let f = self.field();
        let n = self.profile.n;
        let n_inv = f.inv(f.from_int(n as i64)).expect("q - 1 is a unit mod p");
        let word_poly = Poly::new(f.clone(), word.to_vec());
        (0..count)
            .map(|i| f.mul(n_inv, word_poly.eval(self.alpha_pow(-(i as i64)))))
            .collect()
    }

    /// Whether `word` is the evaluation of a polynomial of degree below k.
    pub fn is_codeword(&self, word: &[F::Elem]) -> bool {
        word.len() == self.profile.n
            && self
                .syndromes(word)
                .iter()
                .all(|&s| self.field().is_zero(s))
    }

    /// S_l = word(α^l) for l = 1..=n-k.
    pub fn syndromes(&self, word: &[F::Elem]) -> Vec<F::Elem> {
        let poly = Poly::new(self.field().clone(), word.to_vec());
        (1..=self.profile.n - self.profile.k)
            .map(|l| poly.eval(self.alpha_pow(l as i64)))
            .collect()
    }

    /// Recovers m(x) from any k unerased symbols. Interpolates through the
    /// lowest-indexed k survivors and checks the rest against the result.
    pub fn erasure_decode(&self, received: &[Option<F::Elem>]) -> Result<Poly<F>, CodeError> {
        self.check_length(received.len())?;
        let survivors: Vec<(usize, F::Elem)> = received
            .iter()
            .enumerate()
            .filter_map(|(j, s)| s.map(|v| (j, v)))
            .collect();
        let k = self.profile.k;
        if survivors.len() < k {
            return Err(CodeError::TooManyErasures {
                available: survivors.len(),
                needed: k,
            });
        }
        let points: Vec<_> = survivors[..k]
            .iter()
            .map(|&(j, v)| (self.points[j], v))
            .collect();
        let message = Poly::interpolate(self.field().clone(), &points)?;
        for &(j, v) in &survivors[k..] {
            if message.eval(self.points[j]) != v {
                return Err(CodeError::Inconsistent { position: j });
            }
        }
        Ok(message)
    }

    /// Bounded-distance decoding with the default (syndrome) decoder.
    pub fn error_decode(&self, received: &[F::Elem]) -> Result<Decoded<F::Elem>, CodeError> {
        self.decode_with(received, DecoderKind::Syndrome)
    }

    pub fn decode_with(
        &self,
        received: &[F::Elem],
        kind: DecoderKind,
    ) -> Result<Decoded<F::Elem>, CodeError> {
        self.check_length(received.len())?;
        let codeword = match kind {
            DecoderKind::Syndrome => self.correct_syndrome(received)?,
            DecoderKind::Gao => self.correct_gao(received)?,
        };
        let f = self.field();
        let errors: Vec<(usize, F::Elem)> = received
            .iter()
            .zip(&codeword)
            .enumerate()
            .filter(|(_, (r, c))| r != c)
            .map(|(j, (&r, &c))| (j, f.sub(r, c)))
            .collect();
        if errors.len() > self.profile.correctable() {
            return Err(CodeError::DecodeFailure(
                "correction exceeds the decoding radius",
            ));
        }
        let message = self.interpolate_coefficients(&codeword, self.profile.k);
        Ok(Decoded {
            message,
            codeword,
            errors,
        })
    }

    fn correct_syndrome(&self, received: &[F::Elem]) -> Result<Vec<F::Elem>, CodeError> {
        let f = self.field();
        let syndromes = self.syndromes(received);
        if syndromes.iter().all(|&s| f.is_zero(s)) {
            return Ok(received.to_vec());
        }
        let locator = berlekamp_massey(f, &syndromes);
        let errors = locator.degree().unwrap_or(0);
        if errors > self.profile.correctable() {
            return Err(CodeError::DecodeFailure(
                "locator degree exceeds the decoding radius",
            ));
        }

        // Chien search: position j is in error iff Λ(α^{-j}) = 0.
        let positions: Vec<usize> = (0..self.profile.n)
            .filter(|&j| f.is_zero(locator.eval(self.alpha_pow(-(j as i64)))))
            .collect();
        if positions.len() != errors {
            return Err(CodeError::DecodeFailure(
                "locator does not split over the defining set",
            ));
        }

        // Forney: e_j = -Ω(X^{-1}) / Λ'(X^{-1}) with X = α^j and
        // Ω = S(x) Λ(x) mod x^{n-k}.
        let syndrome_poly = Poly::new(f.clone(), syndromes.clone());
        let mut omega = syndrome_poly.mul(&locator)?.into_coeffs();
        omega.truncate(syndromes.len());
        let omega = Poly::new(f.clone(), omega);
        let d_locator = locator.derivative();
        let mut corrected = received.to_vec();
        for &j in &positions {
            let x_inv = self.alpha_pow(-(j as i64));
            let denom = d_locator.eval(x_inv);
            if f.is_zero(denom) {
                return Err(CodeError::DecodeFailure("repeated error locator root"));
            }
            let magnitude = f.neg(f.div(omega.eval(x_inv), denom)?);
            corrected[j] = f.sub(corrected[j], magnitude);
        }
        if !self.is_codeword(&corrected) {
            return Err(CodeError::DecodeFailure("corrected word is not a codeword"));
        }
        Ok(corrected)
    }

    fn correct_gao(&self, received: &[F::Elem]) -> Result<Vec<F::Elem>, CodeError> {
        let f = self.field();
        let (n, k) = (self.profile.n, self.profile.k);
        // g0 = x^n - 1 = Π (x - α^j)
        let mut g0 = vec![f.zero(); n + 1];
        g0[0] = f.neg(f.one());
        g0[n] = f.one();
        let g0 = Poly::new(f.clone(), g0);
        let g1 = Poly::new(f.clone(), self.interpolate_coefficients(received, n));

        // partial extended Euclid until deg r < (n + k) / 2
        let stop = (n + k).div_ceil(2);
        let (mut r0, mut r1) = (g0, g1);
        let (mut v0, mut v1) = (Poly::zero(f.clone()), Poly::one(f.clone()));
        while r1.degree().is_some_and(|d| d >= stop) {
            let (quot, rem) = r0.div_rem(&r1)?;
            let v2 = v0.sub(&quot.mul(&v1)?)?;
            (r0, r1) = (r1, rem);
            (v0, v1) = (v1, v2);
        }
        let (message, rem) = r1.div_rem(&v1)?;
        if !rem.is_zero() || message.degree().is_some_and(|d| d >= k) {
            return Err(CodeError::DecodeFailure(
                "error locator does not divide the interpolant",
            ));
        }
        Ok(self.evaluate(&message))
    }

    fn check_length(&self, len: usize) -> Result<(), CodeError> {
        if len != self.profile.n {
            return Err(CodeError::LengthMismatch {
                expected: self.profile.n,
                found: len,
            });
        }
        Ok(())
    }

    /// Minimum weight over the nonzero codewords, by enumeration.
    pub fn min_distance_oracle(&self) -> Result<usize, CodeError> {
        min_distance_oracle(&self.vandermonde_generator())
    }
}

/// Berlekamp-Massey over syndromes S_1, S_2, ...; returns the connection
/// polynomial Λ(x) with Λ(0) = 1.
pub fn berlekamp_massey<F: Field>(f: &F, syndromes: &[F::Elem]) -> Poly<F> {
    let mut c = vec![f.one()];
    let mut b = vec![f.one()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last = f.one();
    for i in 0..syndromes.len() {
        let mut delta = syndromes[i];
        for j in 1..=len.min(c.len() - 1) {
            delta = f.add(delta, f.mul(c[j], syndromes[i - j]));
        }
        if f.is_zero(delta) {
            shift += 1;
            continue;
        }
        let coef = f.div(delta, last).expect("last discrepancy is nonzero");
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, f.zero());
        }
        for (j, &bj) in b.iter().enumerate() {
            c[j + shift] = f.sub(c[j + shift], f.mul(coef, bj));
        }
        if 2 * len <= i {
            len = i + 1 - len;
            b = prev;
            last = delta;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    Poly::new(f.clone(), c)
}

/// m · G.
pub fn encode<F: Field>(
    message: &[F::Elem],
    generator: &Matrix<F>,
) -> Result<Vec<F::Elem>, CodeError> {
    generator
        .left_mul(message)
        .map_err(|_| CodeError::LengthMismatch {
            expected: generator.rows(),
            found: message.len(),
        })
}

/// Minimum nonzero weight in the row space of `generator`, by enumerating
/// all q^k combinations.
pub fn min_distance_oracle<F: Field>(generator: &Matrix<F>) -> Result<usize, CodeError> {
    let f = generator.field();
    let q = f.order();
    let k = generator.rows();
    let total = (q as u128).pow(k as u32);
    if total > ENUMERATION_LIMIT as u128 {
        return Err(CodeError::TooLarge(total));
    }
    let elems = f.elements();
    let mut digits = vec![0usize; k];
    let mut word = vec![f.zero(); generator.cols()];
    let mut best = usize::MAX;
    for _ in 1..total {
        // odometer step; the codeword changes by (new - old) * row i
        for i in 0..k {
            let old = elems[digits[i]];
            digits[i] = (digits[i] + 1) % q as usize;
            let delta = f.sub(elems[digits[i]], old);
            for (w, &g) in word.iter_mut().zip(generator.row(i)) {
                *w = f.add(*w, f.mul(delta, g));
            }
            if digits[i] != 0 {
                break;
            }
        }
        let weight = word.iter().filter(|&&w| !f.is_zero(w)).count();
        best = best.min(weight);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;
    use rand::{Rng, SeedableRng};

    fn gf7() -> Gf {
        Gf::builder(7, 1).alpha(3).build().unwrap()
    }

    fn rs(k: usize) -> ReedSolomon<Gf> {
        ReedSolomon::new(CodeProfile::new(gf7(), k).unwrap())
    }

    fn els(f: &Gf, v: &[u64]) -> Vec<crate::FieldElement> {
        v.iter().map(|&x| f.element(x).unwrap()).collect()
    }

    #[test]
    fn profile_checks() {
        let f = gf7();
        assert!(matches!(
            CodeProfile::with_length(f.clone(), 5, 2),
            Err(CodeError::NotCyclic { .. })
        ));
        assert!(matches!(
            CodeProfile::new(f.clone(), 0),
            Err(CodeError::BadDimension { .. })
        ));
        let p = CodeProfile::new(f, 4).unwrap();
        assert_eq!(
            (p.n(), p.d(), p.balance(), p.correctable()),
            (6, 3, Some(2), 1)
        );
    }

    #[test]
    fn vandermonde_rows() {
        let code = rs(4);
        let g = code.vandermonde_generator();
        assert_eq!(g.to_canonical()[0], vec![1; 6]);
        // powers of 3 mod 7
        let powers: Vec<u64> = (0..6).map(|j| 3u64.pow(j) % 7).collect();
        assert_eq!(g.to_canonical()[1], powers);
        assert_eq!(powers, vec![1, 3, 2, 6, 4, 5]);
    }

    #[test]
    fn encode_examples() {
        let code = rs(4);
        let f = code.field().clone();
        let g = code.vandermonde_generator();
        let e0 = els(&f, &[1, 0, 0, 0]);
        assert_eq!(encode(&e0, &g).unwrap(), vec![f.one(); 6]);
        let t = els(&f, &[1, 4, 1, 1]);
        let c: Vec<u64> = encode(&t, &g)
            .unwrap()
            .iter()
            .map(|x| x.value() as u64)
            .collect();
        assert_eq!(c, vec![0, 0, 0, 4, 6, 3]);
        assert_eq!(code.encode(&t).unwrap(), encode(&t, &g).unwrap());
        assert!(matches!(
            encode(&t[..3], &g),
            Err(CodeError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn codeword_membership() {
        let code = rs(4);
        let f = code.field().clone();
        let row = els(&f, &[0, 0, 0, 4, 6, 3]);
        assert!(code.is_codeword(&row));
        assert!(code.is_codeword(&[f.zero(); 6]));
        let mut bad = row.clone();
        bad[1] = f.one();
        assert!(!code.is_codeword(&bad));
        assert!(!code.is_codeword(&row[..5]));
    }

    #[test]
    fn erasure_decoding() {
        let code = rs(4);
        let f = code.field().clone();
        let row = els(&f, &[4, 6, 3, 0, 0, 0]);
        let mut rx: Vec<_> = row.iter().copied().map(Some).collect();
        rx[4] = None;
        rx[5] = None;
        let msg = code.erasure_decode(&rx).unwrap();
        assert_eq!(msg.to_canonical(), vec![1, 3, 1, 6]);
        // erasing all three zeros leaves k - 1 survivors
        rx[3] = None;
        assert_eq!(
            code.erasure_decode(&rx),
            Err(CodeError::TooManyErasures {
                available: 3,
                needed: 4
            })
        );
    }

    #[test]
    fn erasure_errors() {
        let code = rs(4);
        let f = code.field().clone();
        let row = els(&f, &[4, 6, 3, 0, 0, 0]);
        let mut rx: Vec<_> = row.iter().copied().map(Some).collect();
        rx[0] = None;
        rx[1] = None;
        rx[2] = None;
        assert_eq!(
            code.erasure_decode(&rx),
            Err(CodeError::TooManyErasures {
                available: 3,
                needed: 4
            })
        );
        let mut rx: Vec<_> = row.iter().copied().map(Some).collect();
        rx[5] = Some(f.one());
        assert_eq!(
            code.erasure_decode(&rx),
            Err(CodeError::Inconsistent { position: 5 })
        );
    }

    #[test]
    fn erasure_round_trip_without_erasures() {
        let code = rs(3);
        let f = code.field().clone();
        let m = els(&f, &[2, 5, 1]);
        let c = code.encode(&m).unwrap();
        let rx: Vec<_> = c.into_iter().map(Some).collect();
        assert_eq!(code.erasure_decode(&rx).unwrap().padded(3), m);
    }

    #[test]
    fn min_distance_small_codes() {
        assert_eq!(rs(4).min_distance_oracle().unwrap(), 3);
        assert_eq!(rs(3).min_distance_oracle().unwrap(), 4);
        assert_eq!(rs(6).min_distance_oracle().unwrap(), 1);
        let big = ReedSolomon::new(CodeProfile::new(Gf::with_order(256).unwrap(), 4).unwrap());
        assert!(matches!(
            big.min_distance_oracle(),
            Err(CodeError::TooLarge(_))
        ));
    }

    #[test]
    fn singleton_bound_met_for_enumerable_profiles() {
        for q in [3u64, 4, 5, 7, 8, 9] {
            let f = Gf::with_order(q).unwrap();
            for k in 1..q as usize {
                let code = ReedSolomon::new(CodeProfile::new(f.clone(), k).unwrap());
                if (q as u128).pow(k as u32) > 100_000 {
                    continue;
                }
                assert_eq!(
                    code.min_distance_oracle().unwrap(),
                    code.profile().d(),
                    "q={q} k={k}"
                );
            }
        }
    }

    #[test]
    fn codeword_polynomial_vanishes_on_consecutive_powers() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (q, k) in [(7u64, 4usize), (16, 6), (27, 9), (256, 205)] {
            let f = Gf::with_order(q).unwrap();
            let code = ReedSolomon::new(CodeProfile::new(f.clone(), k).unwrap());
            for _ in 0..20 {
                let m: Vec<_> = (0..k)
                    .map(|_| f.element(rng.gen_range(0..q)).unwrap())
                    .collect();
                let c = Poly::new(f.clone(), code.encode(&m).unwrap());
                for l in 1..=(code.profile().n() - k) as i64 {
                    assert_eq!(c.eval(f.alpha_pow(l)), f.zero());
                }
            }
        }
    }

    #[test]
    fn cyclic_shift_stays_in_code() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let f = Gf::with_order(16).unwrap();
        let code = ReedSolomon::new(CodeProfile::new(f.clone(), 6).unwrap());
        for _ in 0..50 {
            let m: Vec<_> = (0..6)
                .map(|_| f.element(rng.gen_range(0..16)).unwrap())
                .collect();
            let mut c = code.encode(&m).unwrap();
            c.rotate_left(rng.gen_range(0..15));
            assert!(code.is_codeword(&c));
        }
    }

    #[test]
    fn interpolation_inverts_encoding() {
        let f = Gf::with_order(9).unwrap();
        let code = ReedSolomon::new(CodeProfile::new(f.clone(), 5).unwrap());
        let m = els(&f, &[1, 8, 0, 3, 7]);
        let c = code.encode(&m).unwrap();
        assert_eq!(code.interpolate_coefficients(&c, 5), m);
    }

    #[test]
    fn single_error_recovery_both_decoders() {
        let code = rs(4);
        let f = code.field().clone();
        let m = els(&f, &[3, 0, 6, 1]);
        let c = code.encode(&m).unwrap();
        let mut r = c.clone();
        r[2] = f.add(r[2], f.element(5).unwrap());
        for kind in [DecoderKind::Syndrome, DecoderKind::Gao] {
            let d = code.decode_with(&r, kind).unwrap();
            assert_eq!(d.message, m);
            assert_eq!(d.codeword, c);
            assert_eq!(d.errors, vec![(2, f.element(5).unwrap())]);
        }
        let clean = code.error_decode(&c).unwrap();
        assert_eq!(clean.message, m);
        assert!(clean.errors.is_empty());
    }

    #[test]
    fn beyond_radius_never_panics() {
        // push a codeword two symbols toward another one at distance 3
        let code = rs(4);
        let f = code.field().clone();
        let a = code.encode(&els(&f, &[0, 0, 0, 0])).unwrap();
        let b = code.encode(&els(&f, &[1, 4, 1, 1])).unwrap(); // weight 3
        let mut r = a.clone();
        let support: Vec<usize> = (0..6).filter(|&j| b[j] != f.zero()).collect();
        r[support[0]] = b[support[0]];
        r[support[1]] = b[support[1]];
        for kind in [DecoderKind::Syndrome, DecoderKind::Gao] {
            match code.decode_with(&r, kind) {
                Ok(d) => assert_ne!(d.codeword, a),
                Err(CodeError::DecodeFailure(_)) => {}
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    #[test]
    fn decoders_agree_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for (q, k) in [(11u64, 5usize), (16, 6), (13, 4), (9, 2)] {
            let f = Gf::with_order(q).unwrap();
            let code = ReedSolomon::new(CodeProfile::new(f.clone(), k).unwrap());
            let n = code.profile().n();
            for _ in 0..300 {
                let m: Vec<_> = (0..k)
                    .map(|_| f.element(rng.gen_range(0..q)).unwrap())
                    .collect();
                let c = code.encode(&m).unwrap();
                let mut r = c.clone();
                let weight = rng.gen_range(0..=code.profile().correctable() + 2);
                for _ in 0..weight {
                    let j = rng.gen_range(0..n);
                    r[j] = f.element(rng.gen_range(0..q)).unwrap();
                }
                let s = code.decode_with(&r, DecoderKind::Syndrome);
                let g = code.decode_with(&r, DecoderKind::Gao);
                match (&s, &g) {
                    (Ok(a), Ok(b)) => assert_eq!(a, b),
                    (Err(_), Err(_)) => {}
                    _ => panic!("decoders disagree: {s:?} vs {g:?}"),
                }
                if weight <= code.profile().correctable() {
                    assert_eq!(s.unwrap().message, m);
                }
            }
        }
    }

    #[test]
    fn full_length_code_has_no_redundancy() {
        let code = rs(6);
        let f = code.field().clone();
        let r = els(&f, &[1, 2, 3, 4, 5, 6]);
        for kind in [DecoderKind::Syndrome, DecoderKind::Gao] {
            let d = code.decode_with(&r, kind).unwrap();
            assert_eq!(d.codeword, r);
        }
    }

    #[test]
    fn berlekamp_massey_finds_known_locator() {
        let f = Gf::with_order(16).unwrap();
        // two errors at positions 3 and 9 with magnitudes 5 and 12
        let e = [(3i64, 5u64), (9, 12)];
        let syn: Vec<_> = (1..=6)
            .map(|l| {
                e.iter().fold(f.zero(), |acc, &(pos, mag)| {
                    f.add(acc, f.mul(f.element(mag).unwrap(), f.alpha_pow(pos * l)))
                })
            })
            .collect();
        let lambda = berlekamp_massey(&f, &syn);
        let expected = Poly::new(f.clone(), vec![f.one(), f.neg(f.alpha_pow(3))])
            .mul(&Poly::new(f.clone(), vec![f.one(), f.neg(f.alpha_pow(9))]))
            .unwrap();
        assert_eq!(lambda, expected);
    }
}
