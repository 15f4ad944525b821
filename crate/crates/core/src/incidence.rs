//! Incidence structures and exhaustive t-level verification.
//!
//! Blocks form an ordered multiset: several constructions union
//! developments that may collide, and verification must count such
//! collisions with multiplicity. Level profiles are computed by brute
//! force over all C(v,t) point subsets using per-point block bitmaps, so
//! a verdict is never inferred from a formula it is meant to check.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::groupalg::Group;

/// Default limit on subset–block containment tests in one profile run.
pub const DEFAULT_ENUMERATION_CAP: u64 = 100_000_000;

/// Display label used for an adjoined point.
pub const INFINITY_LABEL: &str = "inf";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IncError {
    EmptyOrFullSubset,
    PointOutOfRange { point: u32, v: usize },
    BlockNotSorted { block: usize },
    CapExceeded { required: u64, cap: u64 },
    /// t = 0 or t not below the minimum block size.
    DegenerateT { t: usize, min_block: usize },
    PointNotFound { point: u32 },
    IndexOutOfRange { index: usize, count: usize },
    EmptyBlock { block: usize },
    BadParameters { reason: &'static str },
}

impl fmt::Display for IncError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IncError::EmptyOrFullSubset => write!(f, "subset must be proper and nonempty"),
            IncError::PointOutOfRange { point, v } => {
                write!(f, "point {point} outside 0..{v}")
            }
            IncError::BlockNotSorted { block } => {
                write!(f, "block {block} is not strictly sorted")
            }
            IncError::CapExceeded { required, cap } => {
                write!(f, "enumeration needs {required} containment tests, cap is {cap}")
            }
            IncError::DegenerateT { t, min_block } => {
                write!(f, "t = {t} must satisfy 1 <= t < minimum block size {min_block}")
            }
            IncError::PointNotFound { point } => write!(f, "point {point} not present"),
            IncError::IndexOutOfRange { index, count } => {
                write!(f, "block index {index} outside 0..{count}")
            }
            IncError::EmptyBlock { block } => {
                write!(f, "operation would produce an empty block (index {block})")
            }
            IncError::BadParameters { reason } => write!(f, "bad parameters: {reason}"),
        }
    }
}

impl core::error::Error for IncError {}

/// Points 0..v with an ordered multiset of blocks (strictly sorted point
/// lists; duplicates across blocks allowed and counted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    labels: Option<Vec<String>>,
    blocks: Vec<Vec<u32>>,
}

impl IncidenceStructure {
    pub fn new(v: usize, blocks: Vec<Vec<u32>>) -> Result<Self, IncError> {
        for (bi, block) in blocks.iter().enumerate() {
            for pair in block.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(IncError::BlockNotSorted { block: bi });
                }
            }
            if let Some(&last) = block.last() {
                if last as usize >= v {
                    return Err(IncError::PointOutOfRange { point: last, v });
                }
            }
        }
        Ok(IncidenceStructure { v, labels: None, blocks })
    }

    pub fn with_labels(
        v: usize,
        labels: Vec<String>,
        blocks: Vec<Vec<u32>>,
    ) -> Result<Self, IncError> {
        if labels.len() != v {
            return Err(IncError::BadParameters { reason: "label count must equal v" });
        }
        let mut s = Self::new(v, blocks)?;
        s.labels = Some(labels);
        Ok(s)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, p: u32) -> String {
        match &self.labels {
            Some(ls) => ls[p as usize].clone(),
            None => p.to_string(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.v == self.blocks.len()
    }

    pub fn min_block_size(&self) -> Option<usize> {
        self.blocks.iter().map(|b| b.len()).min()
    }

    /// Block size when uniform.
    pub fn uniform_block_size(&self) -> Option<usize> {
        let mut sizes = self.blocks.iter().map(|b| b.len());
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// Blocks as a lexicographically sorted list (multiset canonical form).
    pub fn canonical_blocks(&self) -> Vec<Vec<u32>> {
        let mut bs = self.blocks.clone();
        bs.sort();
        bs
    }

    /// Multiset equality of blocks.
    pub fn same_blocks(&self, other: &IncidenceStructure) -> bool {
        self.v == other.v && self.canonical_blocks() == other.canonical_blocks()
    }

    /// Number of blocks containing each point.
    pub fn replication_numbers(&self) -> Vec<u64> {
        let mut reps = vec![0u64; self.v];
        for block in &self.blocks {
            for &p in block {
                reps[p as usize] += 1;
            }
        }
        reps
    }

    /// Per-point bitmaps over block indices.
    fn point_block_bitmaps(&self) -> (Vec<u64>, usize) {
        let words = (self.blocks.len() + 63) / 64;
        let mut maps = vec![0u64; self.v * words];
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                maps[p as usize * words + j / 64] |= 1 << (j % 64);
            }
        }
        (maps, words)
    }
}

/// Blocks {D + g : g ∈ G} in group-element order, points = group elements.
pub fn development(group: &Group, subset: &[u64]) -> Result<IncidenceStructure, IncError> {
    let v = group.order();
    if subset.is_empty() || subset.len() as u64 >= v {
        return Err(IncError::EmptyOrFullSubset);
    }
    for &x in subset {
        if x >= v {
            return Err(IncError::PointOutOfRange { point: x as u32, v: v as usize });
        }
    }
    let mut blocks = Vec::with_capacity(v as usize);
    for g in 0..v {
        let mut block: Vec<u32> = subset.iter().map(|&d| group.add(d, g) as u32).collect();
        block.sort_unstable();
        blocks.push(block);
    }
    IncidenceStructure::new(v as usize, blocks)
}

/// Verdict of a level profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    TDesign { lambda: u64 },
    TAdesign { lambda: u64 },
    MultiLevel { levels: Vec<u64> },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::TDesign { lambda } => write!(f, "design (lambda = {lambda})"),
            Verdict::TAdesign { lambda } => {
                write!(f, "adesign (levels {{{}, {}}})", lambda, lambda + 1)
            }
            Verdict::MultiLevel { levels } => {
                write!(f, "multi-level (")?;
                for (i, l) in levels.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{l}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Exact t-level data: every C(v,t) subset counted once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProfile {
    pub t: usize,
    /// level value → number of t-subsets at that level.
    pub levels: BTreeMap<u64, u64>,
    /// one witness t-subset per level (the lexicographically first).
    pub witnesses: BTreeMap<u64, Vec<u32>>,
    pub verdict: Verdict,
}

impl LevelProfile {
    pub fn level_values(&self) -> Vec<u64> {
        self.levels.keys().copied().collect()
    }

    pub fn total_subsets(&self) -> u64 {
        self.levels.values().sum()
    }

    /// (μ₁, μ₂, t₁-count, t₂-count) when the profile has exactly 2 levels.
    pub fn two_levels(&self) -> Option<(u64, u64, u64, u64)> {
        if self.levels.len() != 2 {
            return None;
        }
        let mut it = self.levels.iter();
        let (&m1, &c1) = it.next().unwrap();
        let (&m2, &c2) = it.next().unwrap();
        Some((m1, m2, c1, c2))
    }
}

/// Partial profile over a rank range of t-subsets; merge ranges in any
/// order to reproduce the sequential result exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialProfile {
    pub levels: BTreeMap<u64, u64>,
    /// level → (rank, subset) of the lowest-ranked witness seen.
    pub witnesses: BTreeMap<u64, (u64, Vec<u32>)>,
}

impl PartialProfile {
    pub fn merge(&mut self, other: PartialProfile) {
        for (level, count) in other.levels {
            *self.levels.entry(level).or_insert(0) += count;
        }
        for (level, (rank, subset)) in other.witnesses {
            match self.witnesses.get(&level) {
                Some((r, _)) if *r <= rank => {}
                _ => {
                    self.witnesses.insert(level, (rank, subset));
                }
            }
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Lexicographically `rank`-th t-subset of 0..v.
fn unrank_combination(v: usize, t: usize, mut rank: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(t);
    let mut x = 0u64;
    for pos in 0..t {
        loop {
            let c = binomial((v as u64) - 1 - x, (t - 1 - pos) as u64) as u64;
            if rank < c {
                out.push(x as u32);
                x += 1;
                break;
            }
            rank -= c;
            x += 1;
        }
    }
    out
}

fn validate_t(s: &IncidenceStructure, t: usize) -> Result<(), IncError> {
    let min_block = s.min_block_size().unwrap_or(0);
    if t == 0 || t >= min_block {
        return Err(IncError::DegenerateT { t, min_block });
    }
    Ok(())
}

/// Profile of the t-subsets with lexicographic ranks in [start, end).
pub fn t_level_profile_range(
    s: &IncidenceStructure,
    t: usize,
    start: u64,
    end: u64,
) -> Result<PartialProfile, IncError> {
    validate_t(s, t)?;
    let total = binomial(s.v as u64, t as u64);
    let end = end.min(total as u64);
    let mut partial = PartialProfile::default();
    if start >= end {
        return Ok(partial);
    }
    let (maps, words) = s.point_block_bitmaps();
    let row = |p: u32| -> &[u64] { &maps[p as usize * words..(p as usize + 1) * words] };

    let mut comb = unrank_combination(s.v, t, start);
    // prefix[i] = AND of rows comb[0..=i]
    let mut prefix = vec![vec![0u64; words]; t];
    let recompute = |prefix: &mut Vec<Vec<u64>>, comb: &[u32], from: usize| {
        for i in from..comb.len() {
            let r = &maps[comb[i] as usize * words..(comb[i] as usize + 1) * words];
            if i == 0 {
                prefix[0].copy_from_slice(r);
            } else {
                let (lo, hi) = prefix.split_at_mut(i);
                hi[0]
                    .iter_mut()
                    .zip(lo[i - 1].iter().zip(r))
                    .for_each(|(dst, (a, b))| *dst = a & b);
            }
        }
    };
    recompute(&mut prefix, &comb, 0);
    let _ = row; // rows are accessed through `maps` in `recompute`

    for rank in start..end {
        let count: u64 = prefix[t - 1].iter().map(|w| w.count_ones() as u64).sum();
        *partial.levels.entry(count).or_insert(0) += 1;
        partial
            .witnesses
            .entry(count)
            .or_insert_with(|| (rank, comb.clone()));

        if rank + 1 == end {
            break;
        }
        // lexicographic successor
        let mut i = t;
        loop {
            i -= 1;
            if (comb[i] as usize) < s.v - (t - i) {
                comb[i] += 1;
                for j in i + 1..t {
                    comb[j] = comb[j - 1] + 1;
                }
                recompute(&mut prefix, &comb, i);
                break;
            }
        }
    }
    Ok(partial)
}

fn finish_profile(t: usize, partial: PartialProfile) -> LevelProfile {
    let verdict = verdict_of(&partial.levels);
    LevelProfile {
        t,
        witnesses: partial
            .witnesses
            .into_iter()
            .map(|(l, (_, w))| (l, w))
            .collect(),
        levels: partial.levels,
        verdict,
    }
}

fn verdict_of(levels: &BTreeMap<u64, u64>) -> Verdict {
    let vals: Vec<u64> = levels.keys().copied().collect();
    match vals.as_slice() {
        [l] => Verdict::TDesign { lambda: *l },
        [l1, l2] if *l2 == l1 + 1 => Verdict::TAdesign { lambda: *l1 },
        _ => Verdict::MultiLevel { levels: vals },
    }
}

/// Exact t-level profile by exhaustive enumeration under the given cap on
/// subset–block containment tests.
pub fn t_level_profile_with_cap(
    s: &IncidenceStructure,
    t: usize,
    cap: u64,
) -> Result<LevelProfile, IncError> {
    validate_t(s, t)?;
    let tests = binomial(s.v as u64, t as u64).saturating_mul(s.b().max(1) as u128);
    if tests > cap as u128 {
        return Err(IncError::CapExceeded {
            required: tests.min(u64::MAX as u128) as u64,
            cap,
        });
    }
    let total = binomial(s.v as u64, t as u64) as u64;
    let partial = t_level_profile_range(s, t, 0, total)?;
    let profile = finish_profile(t, partial);
    debug_assert_eq!(profile.total_subsets() as u128, binomial(s.v as u64, t as u64));
    Ok(profile)
}

pub fn t_level_profile(s: &IncidenceStructure, t: usize) -> Result<LevelProfile, IncError> {
    t_level_profile_with_cap(s, t, DEFAULT_ENUMERATION_CAP)
}

/// Merges range profiles (however produced) into a full profile. The
/// caller is responsible for covering each rank exactly once.
pub fn merge_partials(t: usize, parts: Vec<PartialProfile>) -> LevelProfile {
    let mut acc = PartialProfile::default();
    for p in parts {
        acc.merge(p);
    }
    finish_profile(t, acc)
}

/// Points and blocks interchanged.
pub fn dual(s: &IncidenceStructure) -> IncidenceStructure {
    let mut blocks = vec![Vec::new(); s.v()];
    for (j, block) in s.blocks().iter().enumerate() {
        for &p in block {
            blocks[p as usize].push(j as u32);
        }
    }
    IncidenceStructure { v: s.b(), labels: None, blocks }
}

/// Deletes p, keeping only blocks through p (with p removed); remaining
/// points are reindexed downward and labels preserved.
pub fn contraction(s: &IncidenceStructure, p: u32) -> Result<IncidenceStructure, IncError> {
    if p as usize >= s.v() {
        return Err(IncError::PointNotFound { point: p });
    }
    let relabel = |x: u32| if x > p { x - 1 } else { x };
    let blocks: Vec<Vec<u32>> = s
        .blocks()
        .iter()
        .filter(|b| b.binary_search(&p).is_ok())
        .map(|b| b.iter().filter(|&&x| x != p).map(|&x| relabel(x)).collect())
        .collect();
    let labels = s.labels.as_ref().map(|ls| {
        ls.iter()
            .enumerate()
            .filter(|(i, _)| *i != p as usize)
            .map(|(_, l)| l.clone())
            .collect()
    });
    Ok(IncidenceStructure { v: s.v() - 1, labels, blocks })
}

/// Every block replaced by its complement in the point set. Rejects a full
/// block, whose complement would be empty.
pub fn complement_blocks(s: &IncidenceStructure) -> Result<IncidenceStructure, IncError> {
    let mut blocks = Vec::with_capacity(s.b());
    for (bi, block) in s.blocks().iter().enumerate() {
        if block.len() == s.v() {
            return Err(IncError::EmptyBlock { block: bi });
        }
        let mut comp = Vec::with_capacity(s.v() - block.len());
        let mut it = block.iter().peekable();
        for p in 0..s.v() as u32 {
            if it.peek() == Some(&&p) {
                it.next();
            } else {
                comp.push(p);
            }
        }
        blocks.push(comp);
    }
    Ok(IncidenceStructure { v: s.v(), labels: s.labels.clone(), blocks })
}

/// Appends a new highest point (labelled "inf") to the named blocks.
pub fn adjoin_point(
    s: &IncidenceStructure,
    block_indices: &[usize],
) -> Result<IncidenceStructure, IncError> {
    let newpt = s.v() as u32;
    let mut blocks = s.blocks().to_vec();
    for &i in block_indices {
        if i >= blocks.len() {
            return Err(IncError::IndexOutOfRange { index: i, count: blocks.len() });
        }
        blocks[i].push(newpt);
    }
    let mut labels = match &s.labels {
        Some(ls) => ls.clone(),
        None => (0..s.v()).map(|i| i.to_string()).collect(),
    };
    labels.push(INFINITY_LABEL.to_string());
    IncidenceStructure::with_labels(s.v() + 1, labels, blocks)
}

/// Sorted multisets of replication numbers and pairwise block
/// intersection sizes.
pub fn replication_and_intersection_numbers(
    s: &IncidenceStructure,
) -> (Vec<u64>, Vec<u64>) {
    let mut reps = s.replication_numbers();
    reps.sort_unstable();
    let mut inters = Vec::with_capacity(s.b() * s.b().saturating_sub(1) / 2);
    for i in 0..s.b() {
        for j in i + 1..s.b() {
            inters.push(sorted_intersection_size(&s.blocks[i], &s.blocks[j]));
        }
    }
    inters.sort_unstable();
    (reps, inters)
}

fn sorted_intersection_size(a: &[u32], b: &[u32]) -> u64 {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Indices of blocks B whose ℤ_v development {B+g} equals the block
/// multiset of `s` (duplicate base blocks reported once).
pub fn development_base_blocks(s: &IncidenceStructure) -> Vec<usize> {
    let canonical = s.canonical_blocks();
    let mut seen: Vec<&[u32]> = Vec::new();
    let mut out = Vec::new();
    let v = s.v() as u32;
    for (i, base) in s.blocks().iter().enumerate() {
        if seen.iter().any(|b| *b == base.as_slice()) {
            continue;
        }
        seen.push(base);
        let mut translates: Vec<Vec<u32>> = (0..v)
            .map(|g| {
                let mut t: Vec<u32> = base.iter().map(|&x| (x + g) % v).collect();
                t.sort_unstable();
                t
            })
            .collect();
        translates.sort();
        if translates == canonical {
            out.push(i);
        }
    }
    out
}

/// Exact nonnegative rational, used for bound parameters λ that arise as
/// formula values like (q−13)/16.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Self, IncError> {
        if den == 0 {
            return Err(IncError::BadParameters { reason: "zero denominator" });
        }
        let g = gcd(num.max(1), den);
        Ok(Ratio { num: num / g, den: den / g })
    }

    pub fn integer(n: u64) -> Self {
        Ratio { num: n, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    fn times_int(&self, n: u64) -> Option<u64> {
        let prod = self.num as u128 * n as u128;
        if prod % self.den as u128 == 0 {
            Some((prod / self.den as u128) as u64)
        } else {
            None
        }
    }
}

impl From<u64> for Ratio {
    fn from(n: u64) -> Self {
        Ratio::integer(n)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Outcome of a packing or covering bound computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundOutcome {
    /// r₁ resp. r₂ in λ(v−1) = r(k−1) ∓ d.
    pub r: u64,
    /// d₁ resp. d₂, with 0 ≤ d < k−1.
    pub d: u64,
    /// Whether d < r − λ, the hypothesis under which the bound holds.
    pub applicable: bool,
    /// ⌊v(r₂−1)/(k−1)⌋ on block counts, resp. ⌈v(r₁+1)/(k+1)⌉ on Gram rank.
    pub bound: Option<u64>,
}

fn bound_parameters(v: u64, k: u64, lambda: Ratio) -> Result<u64, IncError> {
    if k < 3 || k >= v {
        return Err(IncError::BadParameters { reason: "need 3 <= k < v" });
    }
    lambda
        .times_int(v - 1)
        .ok_or(IncError::BadParameters { reason: "lambda*(v-1) must be an integer" })
}

fn applicable(d: u64, r: u64, lambda: Ratio) -> bool {
    // d + lambda < r, in exact arithmetic
    (d as u128) * (lambda.den as u128) + (lambda.num as u128)
        < (r as u128) * (lambda.den as u128)
}

/// Block-count bound for (v,k,λ)-packings: with λ(v−1) = r₂(k−1) + d₂ and
/// 0 ≤ d₂ < k−1, if d₂ < r₂ − λ then b ≤ ⌊v(r₂−1)/(k−1)⌋.
pub fn packing_bound(v: u64, k: u64, lambda: Ratio) -> Result<BoundOutcome, IncError> {
    let n = bound_parameters(v, k, lambda)?;
    let r = n / (k - 1);
    let d = n - r * (k - 1);
    let ok = applicable(d, r, lambda);
    let bound = ok.then(|| v * (r.saturating_sub(1)) / (k - 1));
    Ok(BoundOutcome { r, d, applicable: ok, bound })
}

/// Gram-rank bound for (v,k,λ)-coverings: with λ(v−1) = r₁(k−1) − d₁ and
/// 0 ≤ d₁ < k−1, if d₁ < r₁ − λ then rank(M Mᵀ) ≥ ⌈v(r₁+1)/(k+1)⌉.
pub fn covering_rank_bound(v: u64, k: u64, lambda: Ratio) -> Result<BoundOutcome, IncError> {
    let n = bound_parameters(v, k, lambda)?;
    let r = n.div_ceil(k - 1);
    let d = r * (k - 1) - n;
    let ok = applicable(d, r, lambda);
    let bound = ok.then(|| (v * (r + 1)).div_ceil(k + 1));
    Ok(BoundOutcome { r, d, applicable: ok, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::FieldContext;

    fn fano() -> IncidenceStructure {
        development(&Group::cyclic(7).unwrap(), &[1, 2, 4]).unwrap()
    }

    #[test]
    fn fano_is_2_design() {
        let p = t_level_profile(&fano(), 2).unwrap();
        assert_eq!(p.verdict, Verdict::TDesign { lambda: 1 });
        assert_eq!(p.levels.get(&1), Some(&21));
    }

    #[test]
    fn dev_qr13_levels() {
        let d = FieldContext::new(13, 2).unwrap().cyclotomic_class(0).unwrap().to_vec();
        let s = development(&Group::cyclic(13).unwrap(), &d).unwrap();
        let p = t_level_profile(&s, 2).unwrap();
        assert_eq!(p.verdict, Verdict::TAdesign { lambda: 2 });
        assert_eq!(p.levels.get(&2), Some(&39));
        assert_eq!(p.levels.get(&3), Some(&39));
    }

    #[test]
    fn development_of_pair() {
        let s = development(&Group::cyclic(5).unwrap(), &[0, 1]).unwrap();
        assert_eq!(s.b(), 5);
        assert!(development(&Group::cyclic(5).unwrap(), &[]).is_err());
        assert!(development(&Group::cyclic(5).unwrap(), &[0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn dual_involution_and_single_block() {
        let s = fano();
        assert!(dual(&dual(&s)).same_blocks(&s));
        let one = IncidenceStructure::new(1, vec![vec![0]]).unwrap();
        assert!(dual(&one).same_blocks(&one));
    }

    #[test]
    fn contraction_basics() {
        let s = fano();
        let c = contraction(&s, 0).unwrap();
        assert_eq!(c.v(), 6);
        assert_eq!(c.b(), 3);
        assert!(c.blocks().iter().all(|b| b.len() == 2));
        let tiny = IncidenceStructure::new(2, vec![vec![0, 1]]).unwrap();
        let ct = contraction(&tiny, 0).unwrap();
        assert_eq!(ct.blocks(), &[vec![0]]);
        assert!(contraction(&tiny, 5).is_err());
    }

    #[test]
    fn complement_involution() {
        let s = fano();
        let c = complement_blocks(&s).unwrap();
        assert!(c.blocks().iter().all(|b| b.len() == 4));
        assert!(complement_blocks(&c).unwrap().same_blocks(&s));
        let full = IncidenceStructure::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(complement_blocks(&full), Err(IncError::EmptyBlock { .. })));
    }

    #[test]
    fn adjoin_and_labels() {
        let s = fano();
        let a = adjoin_point(&s, &[0, 1, 2]).unwrap();
        assert_eq!(a.v(), 8);
        assert_eq!(a.label_of(7), INFINITY_LABEL);
        assert_eq!(a.blocks()[0].len(), 4);
        assert_eq!(a.blocks()[3].len(), 3);
        let iso = adjoin_point(&s, &[]).unwrap();
        assert_eq!(iso.v(), 8);
        assert_eq!(iso.blocks(), s.blocks());
        assert!(adjoin_point(&s, &[99]).is_err());
    }

    #[test]
    fn replications_and_intersections() {
        let (reps, inters) = replication_and_intersection_numbers(&fano());
        assert_eq!(reps, vec![3; 7]);
        assert_eq!(inters, vec![1; 21]);
        let one = IncidenceStructure::new(2, vec![vec![0, 1]]).unwrap();
        assert!(replication_and_intersection_numbers(&one).1.is_empty());
    }

    #[test]
    fn packing_examples() {
        let b = packing_bound(7, 3, Ratio::integer(1)).unwrap();
        assert_eq!((b.r, b.d, b.applicable, b.bound), (3, 0, true, Some(7)));
        let b = packing_bound(7, 4, Ratio::integer(3)).unwrap();
        assert_eq!((b.r, b.d, b.applicable, b.bound), (6, 0, true, Some(11)));
        let b = packing_bound(13, 6, Ratio::integer(2)).unwrap();
        assert_eq!((b.r, b.d, b.applicable, b.bound), (4, 4, false, None));
        assert!(packing_bound(5, 5, Ratio::integer(1)).is_err());
    }

    #[test]
    fn covering_examples() {
        let b = covering_rank_bound(13, 6, Ratio::integer(2)).unwrap();
        assert_eq!((b.r, b.d, b.applicable, b.bound), (5, 1, true, Some(12)));
        let b = covering_rank_bound(49, 12, Ratio::new(36, 16).unwrap()).unwrap();
        assert_eq!((b.r, b.d, b.applicable, b.bound), (10, 2, true, Some(42)));
        let b = covering_rank_bound(49, 13, Ratio::new(44, 16).unwrap()).unwrap();
        assert_eq!((b.r, b.d, b.applicable, b.bound), (11, 0, true, Some(42)));
    }

    #[test]
    fn degenerate_t_rejected() {
        let s = fano();
        assert!(matches!(
            t_level_profile(&s, 3),
            Err(IncError::DegenerateT { .. })
        ));
        assert!(matches!(
            t_level_profile(&s, 0),
            Err(IncError::DegenerateT { .. })
        ));
    }

    #[test]
    fn cap_enforced() {
        let s = fano();
        assert!(matches!(
            t_level_profile_with_cap(&s, 2, 10),
            Err(IncError::CapExceeded { .. })
        ));
    }

    #[test]
    fn chunked_profile_matches_sequential() {
        let s = fano();
        let total = binomial(7, 2) as u64;
        let mut parts = Vec::new();
        let mut at = 0;
        for step in [5u64, 7, 9] {
            parts.push(t_level_profile_range(&s, 2, at, (at + step).min(total)).unwrap());
            at += step;
        }
        let merged = merge_partials(2, parts);
        let seq = t_level_profile(&s, 2).unwrap();
        assert_eq!(merged, seq);
    }

    #[test]
    fn development_base_detection() {
        let s = fano();
        let bases = development_base_blocks(&s);
        // every block of a development regenerates it
        assert_eq!(bases.len(), 7);
        let skew = IncidenceStructure::new(5, vec![vec![0, 1], vec![0, 2]]).unwrap();
        assert!(development_base_blocks(&skew).is_empty());
    }

    #[test]
    fn witnesses_are_lexicographically_first() {
        let d = FieldContext::new(13, 2).unwrap().cyclotomic_class(0).unwrap().to_vec();
        let s = development(&Group::cyclic(13).unwrap(), &d).unwrap();
        let p = t_level_profile(&s, 2).unwrap();
        for (level, w) in &p.witnesses {
            // recompute the level of the witness directly
            let count = s
                .blocks()
                .iter()
                .filter(|b| w.iter().all(|x| b.binary_search(x).is_ok()))
                .count() as u64;
            assert_eq!(count, *level);
        }
        // {0,1}: first pair lexicographically; its level is a witness level
        assert!(p.witnesses.values().any(|w| w == &vec![0, 1]));
    }
}
