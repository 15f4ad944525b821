//! Cyclotomic classes and cyclotomic numbers.
//!
//! For a primitive element α of GF(q) and a divisor e of q−1, the classes
//! are D_i = α^i⟨α^e⟩. The cyclotomic number (i,j) counts the solutions of
//! x + 1 ∈ D_j with x ∈ D_i; this is the convention under which the
//! classical order-2 and order-4 tables hold, e.g. (0,1) = (q+1)/4 when
//! q ≡ 3 (mod 4).

use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use super::GroupError;

/// GF(q) together with a fixed primitive element and the order-e classes.
#[derive(Debug, Clone)]
pub struct FieldContext {
    field: Field,
    alpha: u64,
    e: u64,
    f: u64,
    classes: Vec<Vec<u64>>,
    /// class index of each nonzero element; `u32::MAX` sentinel for zero.
    class_of: Vec<u32>,
}

impl FieldContext {
    /// Builds the order-e cyclotomy of GF(q) with the canonical α.
    pub fn new(q: u64, e: u64) -> Result<Self, GroupError> {
        let field = Field::from_order(q)?;
        if e == 0 || (q - 1) % e != 0 {
            return Err(GroupError::UnsupportedOrder { e });
        }
        let alpha = field.primitive_element();
        let f = (q - 1) / e;
        let mut classes = vec![Vec::with_capacity(f as usize); e as usize];
        let mut class_of = vec![u32::MAX; q as usize];
        let mut x = 1u64;
        for z in 0..q - 1 {
            let i = (z % e) as usize;
            classes[i].push(x);
            class_of[x as usize] = i as u32;
            x = field.mul(x, alpha);
        }
        for c in classes.iter_mut() {
            c.sort_unstable();
        }
        Ok(FieldContext { field, alpha, e, f, classes, class_of })
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    /// Class size f = (q−1)/e.
    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// D_i as a sorted list of element indices.
    pub fn cyclotomic_class(&self, i: u64) -> Result<&[u64], GroupError> {
        self.classes
            .get(i as usize)
            .map(|c| c.as_slice())
            .ok_or(GroupError::IndexOutOfRange { index: i, e: self.e })
    }

    /// Class index of a nonzero element, `None` for zero.
    pub fn class_of(&self, x: u64) -> Option<u64> {
        match self.class_of[x as usize] {
            u32::MAX => None,
            i => Some(i as u64),
        }
    }

    /// Cyclotomic number (i,j): the number of x ∈ D_i with x + 1 ∈ D_j.
    pub fn cyclotomic_number(&self, i: u64, j: u64) -> Result<u64, GroupError> {
        if i >= self.e {
            return Err(GroupError::IndexOutOfRange { index: i, e: self.e });
        }
        if j >= self.e {
            return Err(GroupError::IndexOutOfRange { index: j, e: self.e });
        }
        let mut count = 0;
        for &x in &self.classes[i as usize] {
            let y = self.field.add(x, 1);
            if y != 0 && self.class_of[y as usize] == j as u32 {
                count += 1;
            }
        }
        Ok(count)
    }

    /// The union of classes D_i for i in `indices` (sorted, deduplicated).
    pub fn class_union(&self, indices: &[u64]) -> Result<Vec<u64>, GroupError> {
        let mut out = Vec::new();
        for &i in indices {
            out.extend_from_slice(self.cyclotomic_class(i)?);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// A representation q = x² + 4y² with x ≡ 1 (mod 4), the sign of y pinned
/// so that the order-4 closed forms reproduce the enumerated numbers for
/// the chosen α.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuarticDecomposition {
    pub q: u64,
    pub x: i64,
    pub y: i64,
}

impl QuarticDecomposition {
    /// Pins (x, y) against the enumerated order-4 numbers of `ctx`.
    ///
    /// Candidates (x, ±y) with q = x² + 4y² and x ≡ 1 (mod 4) are tried in
    /// ascending |x|; the first whose full 4×4 closed-form table equals the
    /// enumerated table is returned.
    pub fn pin(ctx: &FieldContext) -> Result<Self, GroupError> {
        let q = ctx.q();
        if ctx.e() != 4 {
            return Err(GroupError::UnsupportedOrder { e: ctx.e() });
        }
        if q % 4 != 1 {
            return Err(GroupError::NoDecomposition { q });
        }
        let mut enumerated = [[0u64; 4]; 4];
        for (i, row) in enumerated.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = ctx.cyclotomic_number(i as u64, j as u64)?;
            }
        }
        let f_even = ctx.f() % 2 == 0;
        for (x, y) in quartic_candidates(q) {
            let dec = QuarticDecomposition { q, x, y };
            let matches = (0..4).all(|i| {
                (0..4).all(|j| dec.closed_form_checked(f_even, i, j) == Some(enumerated[i as usize][j as usize]))
            });
            if matches {
                return Ok(dec);
            }
        }
        Err(GroupError::NoDecomposition { q })
    }

    /// Closed-form (i,j)₄, or `None` when the table value is not a
    /// nonnegative integer (which disqualifies a candidate (x, y)).
    fn closed_form_checked(&self, f_even: bool, i: u64, j: u64) -> Option<u64> {
        let q = self.q as i64;
        let (x, y) = (self.x, self.y);
        let key = (i % 4, j % 4);
        let numerator = if !f_even {
            match key {
                (0, 0) | (2, 2) | (2, 0) => q - 7 + 2 * x,
                (0, 1) | (1, 3) | (3, 2) => q + 1 + 2 * x - 8 * y,
                (1, 2) | (0, 3) | (3, 1) => q + 1 + 2 * x + 8 * y,
                (0, 2) => q + 1 - 6 * x,
                _ => q - 3 - 2 * x,
            }
        } else {
            match key {
                (0, 0) => q - 11 - 6 * x,
                (0, 1) | (1, 0) | (3, 3) => q - 3 + 2 * x + 8 * y,
                (0, 2) | (2, 0) | (2, 2) => q - 3 + 2 * x,
                (0, 3) | (3, 0) | (1, 1) => q - 3 + 2 * x - 8 * y,
                _ => q + 1 - 2 * x,
            }
        };
        if numerator < 0 || numerator % 16 != 0 {
            None
        } else {
            Some((numerator / 16) as u64)
        }
    }

    /// Closed-form order-4 cyclotomic number (i,j) under this pinning.
    pub fn closed_form(&self, i: u64, j: u64) -> u64 {
        let f_even = ((self.q - 1) / 4) % 2 == 0;
        self.closed_form_checked(f_even, i, j)
            .expect("pinned decomposition always yields integral table entries")
    }
}

/// All (x, y) with q = x² + 4y², x ≡ 1 (mod 4), in ascending |x| and with
/// +y before −y.
fn quartic_candidates(q: u64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut x = 1i64;
    while (x * x) as u64 <= q {
        let rest = q as i64 - x * x;
        if rest % 4 == 0 {
            let y2 = rest / 4;
            let y = integer_sqrt(y2);
            if y * y == y2 {
                for sx in [x, -x] {
                    if sx.rem_euclid(4) == 1 {
                        if y == 0 {
                            out.push((sx, 0));
                        } else {
                            out.push((sx, y));
                            out.push((sx, -y));
                        }
                    }
                }
            }
        }
        x += 2;
    }
    out
}

fn integer_sqrt(n: i64) -> i64 {
    if n < 0 {
        -1
    } else {
        (n as u64).isqrt() as i64
    }
}

/// Quartic decomposition of q pinned against the canonical order-4 context.
pub fn quartic_decomposition(q: u64) -> Result<QuarticDecomposition, GroupError> {
    let ctx = FieldContext::new(q, 4)?;
    QuarticDecomposition::pin(&ctx)
}

/// Closed-form cyclotomic numbers of order 2 and 4.
///
/// Order 2: (0,0) = (q−5)/4 and the rest (q−1)/4 when q ≡ 1 (mod 4);
/// (0,1) = (q+1)/4 and the rest (q−3)/4 when q ≡ 3 (mod 4). Order 4 uses
/// the five-value tables selected by the parity of f = (q−1)/4 with the
/// pinned (x, y).
pub fn cyclotomic_number_closed_form(q: u64, e: u64, i: u64, j: u64) -> Result<u64, GroupError> {
    match e {
        2 => {
            if q % 2 == 0 {
                return Err(GroupError::UnsupportedOrder { e });
            }
            if i >= 2 || j >= 2 {
                return Err(GroupError::IndexOutOfRange { index: i.max(j), e });
            }
            let v = if q % 4 == 1 {
                match (i, j) {
                    (0, 0) => (q - 5) / 4,
                    _ => (q - 1) / 4,
                }
            } else {
                match (i, j) {
                    (0, 1) => (q + 1) / 4,
                    _ => (q - 3) / 4,
                }
            };
            Ok(v)
        }
        4 => {
            if q % 4 != 1 {
                return Err(GroupError::NoDecomposition { q });
            }
            if i >= 4 || j >= 4 {
                return Err(GroupError::IndexOutOfRange { index: i.max(j), e });
            }
            let dec = quartic_decomposition(q)?;
            Ok(dec.closed_form(i, j))
        }
        _ => Err(GroupError::UnsupportedOrder { e }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_residue_classes() {
        let ctx = FieldContext::new(13, 2).unwrap();
        assert_eq!(ctx.cyclotomic_class(0).unwrap(), &[1, 3, 4, 9, 10, 12]);
        let ctx = FieldContext::new(11, 2).unwrap();
        assert_eq!(ctx.cyclotomic_class(0).unwrap(), &[1, 3, 4, 5, 9]);
    }

    #[test]
    fn singleton_classes_at_full_order() {
        let ctx = FieldContext::new(13, 12).unwrap();
        assert_eq!(ctx.cyclotomic_class(0).unwrap(), &[1]);
        assert!(ctx.cyclotomic_class(12).is_err());
    }

    #[test]
    fn order_two_numbers() {
        let ctx = FieldContext::new(13, 2).unwrap();
        assert_eq!(ctx.cyclotomic_number(0, 0).unwrap(), 2);
        let ctx = FieldContext::new(11, 2).unwrap();
        assert_eq!(ctx.cyclotomic_number(0, 1).unwrap(), 3);
    }

    #[test]
    fn order_four_numbers_q13() {
        let ctx = FieldContext::new(13, 4).unwrap();
        assert_eq!(ctx.cyclotomic_number(0, 0).unwrap(), 0);
        let dec = QuarticDecomposition::pin(&ctx).unwrap();
        assert_eq!(dec.x, -3);
        assert_eq!(dec.y.abs(), 1);
        assert_eq!(cyclotomic_number_closed_form(13, 4, 0, 2).unwrap(), 2);
    }

    #[test]
    fn closed_form_order_two() {
        assert_eq!(cyclotomic_number_closed_form(13, 2, 0, 1).unwrap(), 3);
        assert_eq!(cyclotomic_number_closed_form(11, 2, 0, 1).unwrap(), 3);
        assert_eq!(cyclotomic_number_closed_form(11, 2, 1, 0).unwrap(), 2);
    }

    #[test]
    fn quartic_pinning_examples() {
        assert_eq!(cyclotomic_number_closed_form(17, 4, 0, 0).unwrap(), 0);
        let d17 = quartic_decomposition(17).unwrap();
        assert_eq!(d17.x, 1);
        assert_eq!(d17.y.abs(), 2);
        let d29 = quartic_decomposition(29).unwrap();
        assert_eq!(d29.x, 5);
        assert_eq!(d29.y.abs(), 1);
    }

    #[test]
    fn gf9_classes() {
        let ctx = FieldContext::new(9, 4).unwrap();
        assert_eq!(ctx.cyclotomic_class(0).unwrap(), &[1, 2]);
        assert_eq!(ctx.cyclotomic_class(1).unwrap(), &[3, 6]);
        assert_eq!(ctx.cyclotomic_class(2).unwrap(), &[5, 7]);
        assert_eq!(ctx.cyclotomic_class(3).unwrap(), &[4, 8]);
    }

    #[test]
    fn classes_partition_nonzero() {
        for q in [9u64, 13, 25, 27] {
            for e in [2u64, 4] {
                if (q - 1) % e != 0 {
                    continue;
                }
                let ctx = FieldContext::new(q, e).unwrap();
                let mut seen = alloc::vec![false; q as usize];
                for i in 0..e {
                    let c = ctx.cyclotomic_class(i).unwrap();
                    assert_eq!(c.len() as u64, (q - 1) / e);
                    for &x in c {
                        assert!(!seen[x as usize]);
                        seen[x as usize] = true;
                    }
                }
                assert!(seen[1..].iter().all(|&b| b));
                assert!(!seen[0]);
            }
        }
    }

    #[test]
    fn reflection_identity() {
        // (h,k) = (e−h, k−h) for every enumerated number
        for q in [11u64, 13, 17, 9, 27] {
            for e in [2u64, 4] {
                if (q - 1) % e != 0 {
                    continue;
                }
                let ctx = FieldContext::new(q, e).unwrap();
                for h in 0..e {
                    for k in 0..e {
                        let lhs = ctx.cyclotomic_number(h, k).unwrap();
                        let rhs = ctx
                            .cyclotomic_number((e - h) % e, (k + e - h) % e)
                            .unwrap();
                        assert_eq!(lhs, rhs, "q={q} e={e} ({h},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn row_sums_count_class_members() {
        // Σ_j (i,j) = f − [−1 ∈ D_i]
        for q in [11u64, 13, 17, 9] {
            let ctx = FieldContext::new(q, 2).unwrap();
            let minus_one = ctx.field().neg(1);
            for i in 0..2 {
                let sum: u64 = (0..2).map(|j| ctx.cyclotomic_number(i, j).unwrap()).sum();
                let adj = u64::from(ctx.class_of(minus_one) == Some(i));
                assert_eq!(sum, ctx.f() - adj);
            }
        }
    }
}
