//! Circulant mask matrices and balanced row selection.
//!
//! Row `i` of the circulant `A` is the zero/one mask of a candidate
//! generator row: zeros at columns `{d-i, ..., d-i+k-2} mod n`, ones on the
//! remaining `d` cyclically consecutive columns. A selector `v` picks `k`
//! rows so that every column of the stacked masks holds exactly
//! `b = k d / n` ones. Everything here is integer combinatorics; no field
//! is involved.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaskError {
    #[error("parameters out of range: n = {n}, k = {k} (need 1 <= k <= n)")]
    BadRange { n: usize, k: usize },
    #[error("row index {i} out of range for n = {n}")]
    BadRow { n: usize, i: usize },
    #[error("k(n-k+1)/n = {numerator}/{n} is not an integer")]
    NonIntegralBalance { numerator: usize, n: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed mask grid: {0}")]
    Parse(String),
}

/// Derived quantities for an admissible pair `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskParams {
    pub n: usize,
    pub k: usize,
    /// Minimum distance n - k + 1; also the weight of every mask.
    pub d: usize,
    /// Column weight k d / n.
    pub b: usize,
    /// gcd(k, n)
    pub g: usize,
    pub beta_k: usize,
    pub beta_d: usize,
    pub beta_n: usize,
    /// Number of (1^β_k 0^β_d) blocks inside the first d positions.
    pub m_rep: usize,
}

impl MaskParams {
    pub fn new(n: usize, k: usize) -> Result<Self, MaskError> {
        if k == 0 || k > n {
            return Err(MaskError::BadRange { n, k });
        }
        let d = n - k + 1;
        let numerator = k * d;
        if !numerator.is_multiple_of(n) {
            return Err(MaskError::NonIntegralBalance { numerator, n });
        }
        let b = numerator / n;
        let g = gcd(k, n);
        let beta_k = k / g;
        let beta_d = (d - 1) / g;
        let beta_n = beta_k + beta_d;
        debug_assert_eq!(beta_n * g, n);
        // integrality of b forces β_n | d
        assert_eq!(d % beta_n, 0, "β_n must divide d when b is integral");
        Ok(MaskParams {
            n,
            k,
            d,
            b,
            g,
            beta_k,
            beta_d,
            beta_n,
            m_rep: d / beta_n,
        })
    }

    /// Columns where mask `i` is zero, in increasing offset order from d - i.
    pub fn zero_set(&self, i: usize) -> Vec<usize> {
        (0..self.k - 1)
            .map(|t| (self.d + t + self.n - i % self.n) % self.n)
            .collect()
    }
}

/// Whether k(n-k+1)/n is an integer.
pub fn is_admissible(n: usize, k: usize) -> bool {
    k >= 1 && k <= n && (k * (n - k + 1)).is_multiple_of(n)
}

/// All admissible dimensions for length n, ascending.
pub fn admissible_dimensions(n: usize) -> Vec<usize> {
    (1..=n).filter(|&k| is_admissible(n, k)).collect()
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One row of the circulant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskRow {
    pub index: usize,
    pub zero_set: Vec<usize>,
    pub bits: Vec<u8>,
}

impl MaskRow {
    pub fn new(params: &MaskParams, i: usize) -> Result<Self, MaskError> {
        if i >= params.n {
            return Err(MaskError::BadRow { n: params.n, i });
        }
        let zero_set = params.zero_set(i);
        let mut bits = vec![1u8; params.n];
        for &z in &zero_set {
            bits[z] = 0;
        }
        Ok(MaskRow {
            index: i,
            zero_set,
            bits,
        })
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }
}

/// A 0/1 matrix of masks, one row per line when printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskMatrix {
    cols: usize,
    rows: Vec<Vec<u8>>,
}

impl MaskMatrix {
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self, MaskError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MaskError::DimensionMismatch("ragged mask rows".into()));
        }
        if rows.iter().flatten().any(|&b| b > 1) {
            return Err(MaskError::Parse("entries must be 0 or 1".into()));
        }
        Ok(MaskMatrix { cols, rows })
    }

    /// The full n x n circulant.
    pub fn circulant(params: &MaskParams) -> Self {
        let rows = (0..params.n)
            .map(|i| MaskRow::new(params, i).expect("index below n").bits)
            .collect();
        MaskMatrix {
            cols: params.n,
            rows,
        }
    }

    /// Stacks the given mask rows.
    pub fn stack(masks: &[MaskRow]) -> Self {
        let rows: Vec<Vec<u8>> = masks.iter().map(|m| m.bits.clone()).collect();
        let cols = rows.first().map_or(0, Vec::len);
        MaskMatrix { cols, rows }
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows.len() == self.cols
            && (0..self.cols).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn column_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.cols];
        for r in &self.rows {
            for (s, &b) in sums.iter_mut().zip(r) {
                *s += b as usize;
            }
        }
        sums
    }

    /// One row per line, digits separated by single spaces.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(u8::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`MaskMatrix::to_ascii`]. Spaces are optional.
    pub fn from_ascii(text: &str) -> Result<Self, MaskError> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        other => Err(MaskError::Parse(format!("unexpected {other:?}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows)
    }
}

impl fmt::Display for MaskMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// 0/1 vector choosing rows of the circulant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectorVector {
    bits: Vec<u8>,
    support: Vec<usize>,
}

impl SelectorVector {
    pub fn from_bits(bits: Vec<u8>) -> Result<Self, MaskError> {
        if bits.iter().any(|&b| b > 1) {
            return Err(MaskError::Parse("selector entries must be 0 or 1".into()));
        }
        let support = bits
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b == 1)
            .map(|(i, _)| i)
            .collect();
        Ok(SelectorVector { bits, support })
    }

    /// The periodic solution (1^β_k 0^β_d) repeated g times.
    pub fn solve(params: &MaskParams) -> Self {
        let bits = if params.k == params.n {
            vec![1; params.n]
        } else if params.k == 1 {
            let mut e0 = vec![0; params.n];
            e0[0] = 1;
            e0
        } else {
            (0..params.n)
                .map(|i| u8::from(i % params.beta_n < params.beta_k))
                .collect()
        };
        Self::from_bits(bits).expect("bits are 0/1")
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Selected row indices, ascending.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }
}

/// Outcome of a balance check, with column sums for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    pub column_sums: Vec<usize>,
    /// First column whose sum differs from b.
    pub witness: Option<usize>,
}

/// Checks vA = b·1 over the integers.
pub fn verify_balance(
    v: &SelectorVector,
    a: &MaskMatrix,
    params: &MaskParams,
) -> Result<BalanceReport, MaskError> {
    if v.bits.len() != a.n_rows() || a.n_cols() != params.n {
        return Err(MaskError::DimensionMismatch(format!(
            "selector of length {} against a {}x{} mask matrix with n = {}",
            v.bits.len(),
            a.n_rows(),
            a.n_cols(),
            params.n
        )));
    }
    let mut column_sums = vec![0usize; a.n_cols()];
    for &j in &v.support {
        for (s, &bit) in column_sums.iter_mut().zip(&a.rows[j]) {
            *s += bit as usize;
        }
    }
    let witness = column_sums.iter().position(|&s| s != params.b);
    Ok(BalanceReport {
        balanced: witness.is_none(),
        column_sums,
        witness,
    })
}

/// The masks picked by `v`, in increasing row order.
pub fn select_masks(v: &SelectorVector, params: &MaskParams) -> Result<Vec<MaskRow>, MaskError> {
    v.support.iter().map(|&j| MaskRow::new(params, j)).collect()
}
