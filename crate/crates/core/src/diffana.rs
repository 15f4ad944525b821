//! Difference-function analysis of subsets of finite abelian groups.
//!
//! For D ⊆ G the difference function is d(w) = |D ∩ (D + w)|, the number
//! of times w occurs in the multiset {x − y : x, y ∈ D}. Collecting d(w)
//! over all nonzero w yields the difference levels μ₁ < ⋯ < μ_s with their
//! classes T_i, classifying D as a difference set (s = 1), an almost
//! difference set (s = 2, μ₂ = μ₁ + 1), or a general multi-level subset.
//! The level/count data always satisfies Σ μᵢ·tᵢ = k(k−1).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::groupalg::{is_prime, Group};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiffError {
    ElementNotInGroup { element: u64, order: u64 },
    EmptyOrFullSubset,
    DuplicateElement { element: u64 },
    NotPrime { p: u64 },
    /// The base subset is not a (v,k,1) difference set.
    NotPlanarDifferenceSet,
}

impl fmt::Display for DiffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffError::ElementNotInGroup { element, order } => {
                write!(f, "element {element} outside group of order {order}")
            }
            DiffError::EmptyOrFullSubset => write!(f, "subset must be proper and nonempty"),
            DiffError::DuplicateElement { element } => {
                write!(f, "duplicate element {element} in subset")
            }
            DiffError::NotPrime { p } => write!(f, "{p} is not prime"),
            DiffError::NotPlanarDifferenceSet => {
                write!(f, "subset is not a difference set with lambda = 1")
            }
        }
    }
}

impl core::error::Error for DiffError {}

/// Classification of a subset by its difference levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// One level: a (v, k, λ) difference set.
    DifferenceSet { lambda: u64 },
    /// Two levels μ, μ+1: a (v, k, λ, t) almost difference set where t
    /// elements of G∖{0} occur λ times.
    AlmostDifferenceSet { v: u64, k: u64, lambda: u64, t: u64 },
    /// s ≥ 2 levels not of almost-difference form; carries the full list.
    MultiLevel { levels: Vec<u64> },
}

/// Difference levels of a subset with their classes and classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceProfile {
    pub v: u64,
    pub k: u64,
    /// Sorted distinct values of d(w) over nonzero w (level 0 included when
    /// some element never occurs as a difference).
    pub levels: Vec<u64>,
    /// classes[i] = T_i, the sorted elements at level `levels[i]`.
    pub classes: Vec<Vec<u64>>,
    pub classification: Classification,
}

impl DifferenceProfile {
    /// Class sizes t_i.
    pub fn class_counts(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.len() as u64).collect()
    }

    /// Σ μᵢ·tᵢ, which always equals k(k−1).
    pub fn weighted_sum(&self) -> u64 {
        self.levels
            .iter()
            .zip(&self.classes)
            .map(|(&mu, t)| mu * t.len() as u64)
            .sum()
    }

    pub fn is_difference_set(&self) -> bool {
        matches!(self.classification, Classification::DifferenceSet { .. })
    }

    pub fn is_almost_difference_set(&self) -> bool {
        matches!(self.classification, Classification::AlmostDifferenceSet { .. })
    }
}

fn bitmap_of(group: &Group, subset: &[u64]) -> Result<Vec<u64>, DiffError> {
    let order = group.order();
    let mut bits = vec![0u64; ((order + 63) / 64) as usize];
    for &x in subset {
        if x >= order {
            return Err(DiffError::ElementNotInGroup { element: x, order });
        }
        let (w, b) = ((x / 64) as usize, x % 64);
        if bits[w] >> b & 1 == 1 {
            return Err(DiffError::DuplicateElement { element: x });
        }
        bits[w] |= 1 << b;
    }
    Ok(bits)
}

#[inline]
fn bit(bits: &[u64], x: u64) -> bool {
    bits[(x / 64) as usize] >> (x % 64) & 1 == 1
}

/// d(w) = |D ∩ (D + w)|.
pub fn difference_function(group: &Group, subset: &[u64], w: u64) -> Result<u64, DiffError> {
    if w >= group.order() {
        return Err(DiffError::ElementNotInGroup { element: w, order: group.order() });
    }
    let bits = bitmap_of(group, subset)?;
    Ok(subset
        .iter()
        .filter(|&&x| bit(&bits, group.sub(x, w)))
        .count() as u64)
}

/// Full difference profile of a proper nonempty subset.
pub fn difference_profile(group: &Group, subset: &[u64]) -> Result<DifferenceProfile, DiffError> {
    let v = group.order();
    let k = subset.len() as u64;
    if k == 0 || k >= v {
        return Err(DiffError::EmptyOrFullSubset);
    }
    let bits = bitmap_of(group, subset)?;
    // per-level classes, keyed by d(w)
    let mut by_level: Vec<(u64, Vec<u64>)> = Vec::new();
    for w in 1..v {
        let d = subset
            .iter()
            .filter(|&&x| bit(&bits, group.sub(x, w)))
            .count() as u64;
        match by_level.binary_search_by_key(&d, |(mu, _)| *mu) {
            Ok(pos) => by_level[pos].1.push(w),
            Err(pos) => by_level.insert(pos, (d, vec![w])),
        }
    }
    let levels: Vec<u64> = by_level.iter().map(|(mu, _)| *mu).collect();
    let classes: Vec<Vec<u64>> = by_level.into_iter().map(|(_, c)| c).collect();
    let classification = match levels.as_slice() {
        [mu] => Classification::DifferenceSet { lambda: *mu },
        [mu1, mu2] if *mu2 == mu1 + 1 => Classification::AlmostDifferenceSet {
            v,
            k,
            lambda: *mu1,
            t: classes[0].len() as u64,
        },
        _ => Classification::MultiLevel { levels: levels.clone() },
    };
    let profile = DifferenceProfile { v, k, levels, classes, classification };
    debug_assert_eq!(profile.weighted_sum(), k * (k - 1));
    Ok(profile)
}

/// True iff D = −D.
pub fn is_paley_type(group: &Group, subset: &[u64]) -> bool {
    let bits = match bitmap_of(group, subset) {
        Ok(b) => b,
        Err(_) => return false,
    };
    subset.iter().all(|&x| bit(&bits, group.neg(x)))
}

/// Number of pairs of consecutive quadratic residues and consecutive
/// non-residues mod p, from the closed formulas and re-verified by direct
/// counting.
pub fn consecutive_residue_counts(p: u64) -> Result<(u64, u64), DiffError> {
    if !is_prime(p) || p == 2 {
        return Err(DiffError::NotPrime { p });
    }
    let sign: i64 = if (p - 1) / 2 % 2 == 0 { 1 } else { -1 };
    let n = ((p as i64 - 4 - sign) / 4) as u64;
    let n_prime = ((p as i64 - 2 + sign) / 4) as u64;
    let mut is_qr = vec![false; p as usize];
    for x in 1..p {
        is_qr[(x * x % p) as usize] = true;
    }
    let mut direct = 0;
    let mut direct_prime = 0;
    for r in 1..p - 1 {
        let (a, b) = (is_qr[r as usize], is_qr[(r + 1) as usize]);
        if a && b {
            direct += 1;
        }
        if !a && !b {
            direct_prime += 1;
        }
    }
    debug_assert_eq!((n, n_prime), (direct, direct_prime));
    Ok((direct, direct_prime))
}

/// All a₀ ∈ G∖D with 2a₀ not a sum of two distinct members of D, given a
/// planar ((v,k,1)) difference set D. Each candidate is re-profiled and
/// kept only when every difference of D ∪ {a₀} has multiplicity 1 or 2.
pub fn planar_extension_candidates(group: &Group, subset: &[u64]) -> Result<Vec<u64>, DiffError> {
    let profile = difference_profile(group, subset)?;
    if profile.classification != (Classification::DifferenceSet { lambda: 1 }) {
        return Err(DiffError::NotPlanarDifferenceSet);
    }
    let bits = bitmap_of(group, subset)?;
    let order = group.order();
    let mut sums = vec![false; order as usize];
    for (i, &a) in subset.iter().enumerate() {
        for &b in &subset[i + 1..] {
            sums[group.add(a, b) as usize] = true;
        }
    }
    let mut out = Vec::new();
    for a0 in 0..order {
        if bit(&bits, a0) || sums[group.add(a0, a0) as usize] {
            continue;
        }
        let mut extended = subset.to_vec();
        extended.push(a0);
        let p = difference_profile(group, &extended)?;
        if p.levels.iter().all(|&mu| mu == 1 || mu == 2) {
            out.push(a0);
        }
    }
    Ok(out)
}

/// Hypotheses of the ℤ₂ × G lifting theorem, each checked independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftHypotheses {
    /// Every (1, τ) occurs as a difference of the lifted subset.
    pub odd_layer_covered: bool,
    /// No (1, τ) occurs more than twice.
    pub odd_layer_multiplicity_at_most_2: bool,
    /// Exactly one adjoined element lies in D.
    pub exactly_one_adjoined_in_base: bool,
    /// No 2aᵢ equals aⱼ + aₗ for distinct j, l ≠ i.
    pub no_adjoined_double_collision: bool,
    /// Some difference of the lifted subset has multiplicity exactly 1.
    pub some_multiplicity_one: bool,
}

impl LiftHypotheses {
    pub fn all_hold(&self) -> bool {
        self.odd_layer_covered
            && self.odd_layer_multiplicity_at_most_2
            && self.exactly_one_adjoined_in_base
            && self.no_adjoined_double_collision
            && self.some_multiplicity_one
    }
}

/// The lift κ(D) ∪ {1} × {a₀,…} of a planar difference set into ℤ₂ × G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z2Lift {
    /// |G| for the base group.
    pub base_order: u64,
    pub adjoined: Vec<u64>,
    /// Element indices of the lifted subset in ℤ₂ × G
    /// (index = bit·|G| + base index).
    pub subset: Vec<u64>,
    pub hypotheses: LiftHypotheses,
}

impl Z2Lift {
    pub fn describe(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let n = self.base_order;
        let _ = write!(s, "kappa(D) U {{");
        for (i, a) in self.adjoined.iter().enumerate() {
            if i > 0 {
                let _ = write!(s, ", ");
            }
            let _ = write!(s, "(1,{a})");
        }
        let _ = write!(s, "}} in Z2 x G, |G| = {n}");
        s
    }
}

/// Builds κ(D) ∪ ({1} × adjoined) in ℤ₂ × G, returns its full difference
/// profile and the per-hypothesis report of the lifting theorem. The base
/// subset must be a planar difference set; the hypotheses themselves are
/// reported, never enforced.
pub fn lift_to_z2(
    group: &Group,
    subset: &[u64],
    adjoined: &[u64],
) -> Result<(Z2Lift, DifferenceProfile), DiffError> {
    let profile = difference_profile(group, subset)?;
    if profile.classification != (Classification::DifferenceSet { lambda: 1 }) {
        return Err(DiffError::NotPlanarDifferenceSet);
    }
    let n = group.order();
    for &a in adjoined {
        if a >= n {
            return Err(DiffError::ElementNotInGroup { element: a, order: n });
        }
    }
    let product = Group::product2(group.clone());
    let mut lifted: Vec<u64> = subset.to_vec();
    lifted.extend(adjoined.iter().map(|&a| n + a));
    lifted.sort_unstable();
    let lifted_profile = difference_profile(&product, &lifted)?;

    // multiplicities of the odd-layer differences (1, τ)
    let base_bits = bitmap_of(group, subset)?;
    let mut odd_mult = vec![0u64; n as usize];
    for &d in subset {
        for &a in adjoined {
            odd_mult[group.sub(d, a) as usize] += 1;
            odd_mult[group.sub(a, d) as usize] += 1;
        }
    }
    let in_base = adjoined.iter().filter(|&&a| bit(&base_bits, a)).count();
    let mut collision = false;
    for (i, &ai) in adjoined.iter().enumerate() {
        let twice = group.add(ai, ai);
        for (j, &aj) in adjoined.iter().enumerate() {
            for (l, &al) in adjoined.iter().enumerate() {
                if j < l && j != i && l != i && group.add(aj, al) == twice {
                    collision = true;
                }
            }
        }
    }
    let hypotheses = LiftHypotheses {
        odd_layer_covered: odd_mult.iter().all(|&m| m >= 1),
        odd_layer_multiplicity_at_most_2: odd_mult.iter().all(|&m| m <= 2),
        exactly_one_adjoined_in_base: in_base == 1,
        no_adjoined_double_collision: !collision,
        some_multiplicity_one: lifted_profile.levels.contains(&1),
    };
    let lift = Z2Lift {
        base_order: n,
        adjoined: adjoined.to_vec(),
        subset: lifted,
        hypotheses,
    };
    Ok((lift, lifted_profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::FieldContext;

    fn qr(p: u64) -> Vec<u64> {
        FieldContext::new(p, 2).unwrap().cyclotomic_class(0).unwrap().to_vec()
    }

    #[test]
    fn difference_function_values() {
        let z13 = Group::cyclic(13).unwrap();
        let d = qr(13);
        assert_eq!(difference_function(&z13, &d, 0).unwrap(), 6);
        assert_eq!(difference_function(&z13, &d, 1).unwrap(), 2);
        let z7 = Group::cyclic(7).unwrap();
        assert_eq!(difference_function(&z7, &[1, 2, 4], 3).unwrap(), 1);
    }

    #[test]
    fn qr13_is_ads() {
        let z13 = Group::cyclic(13).unwrap();
        let p = difference_profile(&z13, &qr(13)).unwrap();
        assert_eq!(
            p.classification,
            Classification::AlmostDifferenceSet { v: 13, k: 6, lambda: 2, t: 6 }
        );
    }

    #[test]
    fn singer_is_planar() {
        let z7 = Group::cyclic(7).unwrap();
        let p = difference_profile(&z7, &[1, 2, 4]).unwrap();
        assert_eq!(p.classification, Classification::DifferenceSet { lambda: 1 });
    }

    #[test]
    fn two_level_with_zero() {
        let z5 = Group::cyclic(5).unwrap();
        let p = difference_profile(&z5, &[1, 4]).unwrap();
        assert_eq!(p.levels, &[0, 1]);
        assert_eq!(
            p.classification,
            Classification::AlmostDifferenceSet { v: 5, k: 2, lambda: 0, t: 2 }
        );
    }

    #[test]
    fn eq1_holds() {
        let z13 = Group::cyclic(13).unwrap();
        for d in [vec![0, 1, 2], vec![1, 3, 4, 9], qr(13)] {
            let p = difference_profile(&z13, &d).unwrap();
            assert_eq!(p.weighted_sum(), p.k * (p.k - 1));
            let total: u64 = p.class_counts().iter().sum();
            assert_eq!(total, 12);
        }
    }

    #[test]
    fn empty_and_full_rejected() {
        let z5 = Group::cyclic(5).unwrap();
        assert!(difference_profile(&z5, &[]).is_err());
        assert!(difference_profile(&z5, &[0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn paley_type() {
        let z13 = Group::cyclic(13).unwrap();
        assert!(is_paley_type(&z13, &qr(13)));
        let z11 = Group::cyclic(11).unwrap();
        assert!(!is_paley_type(&z11, &qr(11)));
        let z7 = Group::cyclic(7).unwrap();
        assert!(!is_paley_type(&z7, &[1, 2, 4]));
    }

    #[test]
    fn consecutive_residues() {
        assert_eq!(consecutive_residue_counts(13).unwrap().0, 2);
        assert_eq!(consecutive_residue_counts(11).unwrap().0, 2);
        assert_eq!(consecutive_residue_counts(5).unwrap().0, 0);
        assert!(consecutive_residue_counts(9).is_err());
    }

    #[test]
    fn planar_extensions() {
        let z7 = Group::cyclic(7).unwrap();
        assert_eq!(planar_extension_candidates(&z7, &[1, 2, 4]).unwrap(), &[0]);
        let z13 = Group::cyclic(13).unwrap();
        let c = planar_extension_candidates(&z13, &[0, 1, 5, 11]).unwrap();
        assert_eq!(c, &[2, 4, 10]);
        // 3 fails the doubling condition: 2*3 = 6 = 2 + 4
        assert!(!c.contains(&3));
        // non-planar input rejected
        assert!(planar_extension_candidates(&z13, &qr(13)).is_err());
    }

    #[test]
    fn lift_z7_singer() {
        let z7 = Group::cyclic(7).unwrap();
        let (lift, p) = lift_to_z2(&z7, &[1, 2, 4], &[0]).unwrap();
        assert_eq!(
            p.classification,
            Classification::AlmostDifferenceSet { v: 14, k: 4, lambda: 0, t: 1 }
        );
        // a0 = 0 is not in D, so the covering and membership hypotheses fail
        assert!(!lift.hypotheses.odd_layer_covered);
        assert!(!lift.hypotheses.exactly_one_adjoined_in_base);
        assert!(lift.hypotheses.some_multiplicity_one);
    }

    #[test]
    fn lift_z13_singer() {
        let z13 = Group::cyclic(13).unwrap();
        let (_, p) = lift_to_z2(&z13, &[0, 1, 5, 11], &[10]).unwrap();
        assert_eq!(
            p.classification,
            Classification::AlmostDifferenceSet { v: 26, k: 5, lambda: 0, t: 5 }
        );
    }

    #[test]
    fn lift_z21_singer() {
        let z21 = Group::cyclic(21).unwrap();
        let (lift, p) = lift_to_z2(&z21, &[0, 3, 13, 15, 20], &[9, 13, 16]).unwrap();
        // all hypotheses hold here, and the profile is a lambda = 1 ADS;
        // counting forces t = 26 (Σ μᵢtᵢ = 56 with levels {1, 2} on 41
        // nonzero elements), not the catalogued 16
        assert!(lift.hypotheses.all_hold());
        assert_eq!(
            p.classification,
            Classification::AlmostDifferenceSet { v: 42, k: 8, lambda: 1, t: 26 }
        );
    }

    #[test]
    fn translate_invariance() {
        let z13 = Group::cyclic(13).unwrap();
        let d = qr(13);
        let p0 = difference_profile(&z13, &d).unwrap();
        for g in 1..13 {
            let mut t: Vec<u64> = d.iter().map(|&x| (x + g) % 13).collect();
            t.sort_unstable();
            let p = difference_profile(&z13, &t).unwrap();
            assert_eq!(p.levels, p0.levels);
            assert_eq!(p.class_counts(), p0.class_counts());
        }
    }
}
