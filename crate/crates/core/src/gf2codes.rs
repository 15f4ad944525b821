//! Binary-matrix view of incidence structures.
//!
//! Rank and Gram rank are computed over GF(2) by word-packed elimination;
//! the Gram matrix rank is additionally computed over the rationals by
//! fraction-free integer elimination, since rank bounds for coverings live
//! in real arithmetic while code dimensions live in GF(2). Minimum
//! distance is found by exhaustive codeword enumeration over a reduced
//! basis, which is all the catalogued instances need.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::incidence::{
    binomial, t_level_profile_with_cap, IncidenceStructure, DEFAULT_ENUMERATION_CAP,
};

/// Dimension cap for exhaustive minimum-distance enumeration.
pub const DEFAULT_DIM_CAP: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    DimensionTooLarge { dim: usize, cap: usize },
    BadParameters { reason: &'static str },
    ParityViolation { v: u64, t: u64 },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::DimensionTooLarge { dim, cap } => {
                write!(f, "code dimension {dim} exceeds the enumeration cap {cap}")
            }
            CodeError::BadParameters { reason } => write!(f, "bad parameters: {reason}"),
            CodeError::ParityViolation { v, t } => {
                write!(f, "v*t = {v}*{t} is odd, pair counts are not integral")
            }
        }
    }
}

impl core::error::Error for CodeError {}

/// Dense GF(2) matrix with 64-bit packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = (cols + 63) / 64;
        BitMatrix { rows, cols, wpr, data: vec![0; rows * wpr] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.wpr + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let w = &mut self.data[r * self.wpr + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    pub fn row_weight(&self, r: usize) -> u64 {
        self.row(r).iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Inner product of two rows over GF(2).
    pub fn row_dot(&self, a: usize, b: usize) -> bool {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x & y).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// New matrix with an all-ones column prepended.
    pub fn with_ones_column(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            m.set(r, 0, true);
            for c in 0..self.cols {
                if self.get(r, c) {
                    m.set(r, c + 1, true);
                }
            }
        }
        m
    }

    /// M·Mᵀ over GF(2).
    pub fn gram_gf2(&self) -> BitMatrix {
        let mut g = BitMatrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = self.row_dot(i, j);
                g.set(i, j, v);
                g.set(j, i, v);
            }
        }
        g
    }

    /// M·Mᵀ over the integers (entry = size of row intersection).
    pub fn gram_integer(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.rows)
                    .map(|j| {
                        self.row(i)
                            .iter()
                            .zip(self.row(j))
                            .map(|(x, y)| (x & y).count_ones() as u64)
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }
}

/// v×b incidence matrix: rows points, columns blocks in block order.
pub fn incidence_matrix(s: &IncidenceStructure) -> BitMatrix {
    let mut m = BitMatrix::zeros(s.v(), s.b());
    for (j, block) in s.blocks().iter().enumerate() {
        for &p in block {
            m.set(p as usize, j, true);
        }
    }
    m
}

/// Rank over GF(2) by row elimination on packed words.
pub fn rank_gf2(m: &BitMatrix) -> usize {
    let mut rows: Vec<Vec<u64>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for c in 0..m.cols {
        let (w, b) = (c / 64, c % 64);
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[w] >> b & 1 == 1 {
                row.iter_mut().zip(&pivot_row).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of M·Mᵀ over GF(2).
pub fn gram_rank_gf2(m: &BitMatrix) -> usize {
    rank_gf2(&m.gram_gf2())
}

/// Rank of M·Mᵀ over the rationals (fraction-free integer elimination).
pub fn gram_rank_rational(m: &BitMatrix) -> usize {
    let gram = m.gram_integer();
    let int_rows: Vec<Vec<BigInt>> = gram
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    rational_rank(int_rows)
}

/// Exact rank of an integer matrix by Bareiss elimination.
pub fn rational_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let num = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Self-orthogonality report for a symmetric development-style structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfOrthReport {
    pub symmetric: bool,
    pub block_size: Option<u64>,
    /// 2-levels of the structure (empty when not computable).
    pub levels: Vec<u64>,
    /// k ≡ μ₁ ≡ ⋯ ≡ μ_s (mod 2).
    pub parity_precondition: bool,
    /// Whether the all-ones column extension was used (k odd).
    pub extended: bool,
    pub self_orthogonal: bool,
    /// Rows with odd inner product ((i,i) marks an odd-weight row).
    pub counterexample_rows: Option<(usize, usize)>,
}

/// Checks the parity precondition k ≡ μᵢ (mod 2) and tests whether the
/// row space of A (k even) or of the ones-extended A (k odd) is
/// self-orthogonal; failures carry a witness pair of rows.
pub fn self_orthogonality_report(s: &IncidenceStructure) -> SelfOrthReport {
    let symmetric = s.is_symmetric();
    let block_size = s.uniform_block_size().map(|k| k as u64);
    let levels: Vec<u64> = match t_level_profile_with_cap(s, 2, DEFAULT_ENUMERATION_CAP) {
        Ok(p) => p.level_values(),
        Err(_) => Vec::new(),
    };
    let parity_precondition = match block_size {
        Some(k) if !levels.is_empty() => levels.iter().all(|&mu| mu % 2 == k % 2),
        _ => false,
    };
    let extended = matches!(block_size, Some(k) if k % 2 == 1);
    let a = incidence_matrix(s);
    let g = if extended { a.with_ones_column() } else { a };
    let mut counterexample = None;
    'outer: for i in 0..g.rows() {
        if g.row_weight(i) % 2 == 1 {
            counterexample = Some((i, i));
            break;
        }
        for j in i + 1..g.rows() {
            if g.row_dot(i, j) {
                counterexample = Some((i, j));
                break 'outer;
            }
        }
    }
    SelfOrthReport {
        symmetric,
        block_size,
        levels,
        parity_precondition,
        extended,
        self_orthogonal: counterexample.is_none(),
        counterexample_rows: counterexample,
    }
}

/// Minimum Hamming weight over all nonzero codewords of the row space,
/// enumerated Gray-code style over a reduced basis.
pub fn min_distance(m: &BitMatrix, dim_cap: usize) -> Result<u64, CodeError> {
    // reduce to an independent basis
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for r in 0..m.rows {
        let mut cur = m.row(r).to_vec();
        for (b, &p) in basis.iter().zip(&pivots) {
            if cur[p / 64] >> (p % 64) & 1 == 1 {
                cur.iter_mut().zip(b).for_each(|(x, y)| *x ^= y);
            }
        }
        if let Some(p) = first_set_bit(&cur) {
            basis.push(cur);
            pivots.push(p);
        }
    }
    let dim = basis.len();
    if dim == 0 {
        return Err(CodeError::BadParameters { reason: "zero code has no minimum distance" });
    }
    if dim > dim_cap {
        return Err(CodeError::DimensionTooLarge { dim, cap: dim_cap });
    }
    let words = m.wpr;
    let mut cw = vec![0u64; words];
    let mut best = u64::MAX;
    for i in 1u64..1u64 << dim {
        let flip = i.trailing_zeros() as usize;
        cw.iter_mut().zip(&basis[flip]).for_each(|(x, y)| *x ^= y);
        let w: u64 = cw.iter().map(|x| x.count_ones() as u64).sum();
        best = best.min(w);
    }
    Ok(best)
}

fn first_set_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Lower bound on the dual minimum distance of a self-orthogonal two-level
/// development code: the least integer d with
/// d ≥ ((μ₂+k) + √((μ₂+k)² + 4μ₂(μ₂−μ₁)vt)) / (2μ₂),
/// decided by integer square-root bracketing.
pub fn dual_distance_lower_bound(
    k: u64,
    mu1: u64,
    mu2: u64,
    v: u64,
    t: u64,
) -> Result<u64, CodeError> {
    if mu2 == 0 {
        return Err(CodeError::BadParameters { reason: "mu2 must be positive" });
    }
    if mu2 < mu1 {
        return Err(CodeError::BadParameters { reason: "need mu1 <= mu2" });
    }
    let b = (mu2 + k) as u128;
    let disc = b * b + 4 * mu2 as u128 * (mu2 - mu1) as u128 * v as u128 * t as u128;
    let s = isqrt_u128(disc);
    // smallest n with 2*mu2*n - b >= sqrt(disc), decided exactly
    let two_mu2 = 2 * mu2 as u128;
    let mut n = (b + s) / two_mu2;
    while n * two_mu2 < b || (n * two_mu2 - b) * (n * two_mu2 - b) < disc {
        n += 1;
    }
    Ok(n as u64)
}

fn isqrt_u128(n: u128) -> u128 {
    n.isqrt()
}

/// Pair counts of a two-level development: (vt/2, v(v−1−t)/2), whose sum
/// is C(v,2).
pub fn pair_level_counts(v: u64, t: u64) -> Result<(u64, u64), CodeError> {
    if t > v.saturating_sub(1) {
        return Err(CodeError::BadParameters { reason: "need t <= v-1" });
    }
    if v * t % 2 != 0 {
        return Err(CodeError::ParityViolation { v, t });
    }
    let low = v * t / 2;
    let high = v * (v - 1 - t) / 2;
    debug_assert_eq!((low + high) as u128, binomial(v, 2));
    Ok((low, high))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::{FieldContext, Group};
    use crate::incidence::development;

    fn fano() -> IncidenceStructure {
        development(&Group::cyclic(7).unwrap(), &[1, 2, 4]).unwrap()
    }

    fn dev_qr13() -> IncidenceStructure {
        let d = FieldContext::new(13, 2).unwrap().cyclotomic_class(0).unwrap().to_vec();
        development(&Group::cyclic(13).unwrap(), &d).unwrap()
    }

    #[test]
    fn fano_matrix_shape() {
        let a = incidence_matrix(&fano());
        assert_eq!((a.rows(), a.cols()), (7, 7));
        for r in 0..7 {
            assert_eq!(a.row_weight(r), 3);
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_gf2(&incidence_matrix(&fano())), 4);
        assert_eq!(rank_gf2(&BitMatrix::identity(9)), 9);
        assert_eq!(rank_gf2(&incidence_matrix(&dev_qr13())), 12);
        assert_eq!(rank_gf2(&BitMatrix::zeros(3, 5)), 0);
    }

    #[test]
    fn gram_ranks() {
        let fano_a = incidence_matrix(&fano());
        // AA^T = 2I + J mod 2 = J, rank 1
        assert_eq!(gram_rank_gf2(&fano_a), 1);
        assert_eq!(gram_rank_gf2(&BitMatrix::zeros(4, 4)), 0);
        let a13 = incidence_matrix(&dev_qr13());
        assert_eq!(gram_rank_gf2(&a13), 12);
        assert_eq!(gram_rank_rational(&a13), 13);
    }

    #[test]
    fn gram_entries_match_levels() {
        // integer Gram of a development: k on the diagonal, the level of
        // the point pair off it
        let s = dev_qr13();
        let a = incidence_matrix(&s);
        let g = a.gram_integer();
        for i in 0..13 {
            assert_eq!(g[i][i], 6);
            for j in 0..13 {
                if i != j {
                    assert!(g[i][j] == 2 || g[i][j] == 3);
                }
            }
        }
    }

    #[test]
    fn paley_symmetry() {
        assert!(incidence_matrix(&dev_qr13()).is_symmetric());
        let d11 = FieldContext::new(11, 2).unwrap().cyclotomic_class(0).unwrap().to_vec();
        let s11 = development(&Group::cyclic(11).unwrap(), &d11).unwrap();
        assert!(!incidence_matrix(&s11).is_symmetric());
    }

    #[test]
    fn fano_extended_code() {
        let r = self_orthogonality_report(&fano());
        assert!(r.symmetric);
        assert!(r.parity_precondition); // k = 3, lambda = 1, both odd
        assert!(r.extended);
        assert!(r.self_orthogonal);
        let ext = incidence_matrix(&fano()).with_ones_column();
        assert_eq!(rank_gf2(&ext), 4);
        assert_eq!(min_distance(&ext, DEFAULT_DIM_CAP).unwrap(), 4);
        assert_eq!(min_distance(&incidence_matrix(&fano()), DEFAULT_DIM_CAP).unwrap(), 3);
    }

    #[test]
    fn qr13_precondition_fails() {
        // k = 6 even but levels {2, 3} have mixed parity
        let r = self_orthogonality_report(&dev_qr13());
        assert!(!r.parity_precondition);
        assert!(!r.extended);
    }

    #[test]
    fn zero_structure_trivial_report() {
        let s = IncidenceStructure::new(3, vec![]).unwrap();
        let r = self_orthogonality_report(&s);
        assert!(!r.parity_precondition);
        assert!(r.self_orthogonal);
    }

    #[test]
    fn min_distance_identity() {
        assert_eq!(min_distance(&BitMatrix::identity(3), 28).unwrap(), 1);
        let mut wide = BitMatrix::zeros(2, 40);
        for c in 0..40 {
            wide.set(0, c, true);
        }
        wide.set(1, 0, true);
        assert_eq!(min_distance(&wide, 28).unwrap(), 1);
        assert!(matches!(
            min_distance(&BitMatrix::identity(40), 28),
            Err(CodeError::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn dual_distance_bound_values() {
        // design case: discriminant collapses, (k+lambda)/lambda
        assert_eq!(dual_distance_lower_bound(3, 1, 1, 7, 0).unwrap(), 4);
        // synthetic two-level case: ceil((7+sqrt(489))/4) = 8
        assert_eq!(dual_distance_lower_bound(5, 1, 2, 11, 5).unwrap(), 8);
        assert!(dual_distance_lower_bound(5, 1, 0, 11, 5).is_err());
    }

    #[test]
    fn pair_counts() {
        assert_eq!(pair_level_counts(13, 6).unwrap(), (39, 39));
        assert_eq!(pair_level_counts(11, 0).unwrap(), (0, 55));
        assert!(matches!(
            pair_level_counts(11, 5),
            Err(CodeError::ParityViolation { .. })
        ));
    }

    #[test]
    fn rank_dominates_gram_rank() {
        for s in [fano(), dev_qr13()] {
            let a = incidence_matrix(&s);
            assert!(rank_gf2(&a) >= gram_rank_gf2(&a));
        }
    }
}
