//! GF(p^m) arithmetic for small prime powers.
//!
//! Elements are indexed by the base-p digit encoding of their coefficient
//! vector: the element c₀ + c₁x + ⋯ + c_{m−1}x^{m−1} has index
//! c₀ + c₁p + ⋯ + c_{m−1}p^{m−1}. Index 0 is the zero element and index 1
//! is the multiplicative identity in every field.

use alloc::vec;
use alloc::vec::Vec;

use super::GroupError;

/// Upper bound on field sizes; keeps every enumeration in this crate fast.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut fs = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            fs.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        fs.push(n);
    }
    fs
}

/// Splits a prime power into (p, m), or `None` when q is not one.
pub fn split_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = 0;
            let mut t = q;
            while t % p == 0 {
                t /= p;
                m += 1;
            }
            return if t == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// The field GF(p^m) with a fixed monic irreducible modulus.
///
/// The modulus is chosen canonically: the monic degree-m polynomial with
/// the smallest digit-encoded low coefficients that is irreducible and has
/// x primitive, falling back to the smallest irreducible when no modulus
/// makes x primitive. This makes element indexing, the primitive element,
/// and every cyclotomic class labelling reproducible across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u64,
    m: u32,
    q: u64,
    /// Low coefficients (c₀,…,c_{m−1}) of the monic modulus x^m + Σ cᵢ xⁱ.
    /// Empty for prime fields.
    modulus: Vec<u64>,
}

impl Field {
    /// Builds GF(p^m), validating a caller-supplied modulus or searching
    /// for the canonical one.
    pub fn new(p: u64, m: u32, modulus: Option<Vec<u64>>) -> Result<Self, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NonPrimeModulus { p });
        }
        if m == 0 {
            return Err(GroupError::InvalidOrder);
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q.checked_mul(p).ok_or(GroupError::FieldTooLarge { q: u64::MAX })?;
            if q > MAX_FIELD_ORDER {
                return Err(GroupError::FieldTooLarge { q });
            }
        }
        if m == 1 {
            return Ok(Field { p, m, q, modulus: Vec::new() });
        }
        let modulus = match modulus {
            Some(low) => {
                if low.len() != m as usize || low.iter().any(|&c| c >= p) {
                    return Err(GroupError::ReducibleModulus);
                }
                if !is_irreducible(p, &low) {
                    return Err(GroupError::ReducibleModulus);
                }
                low
            }
            None => canonical_modulus(p, m, q)?,
        };
        Ok(Field { p, m, q, modulus })
    }

    pub fn from_order(q: u64) -> Result<Self, GroupError> {
        let (p, m) = split_prime_power(q).ok_or(GroupError::NotPrimePower { q })?;
        Field::new(p, m, None)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Low coefficients of the modulus (empty for prime fields).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, mut i: u64) -> Vec<u64> {
        let mut cs = vec![0; self.m as usize];
        for c in cs.iter_mut() {
            *c = i % self.p;
            i /= self.p;
        }
        cs
    }

    fn index(&self, cs: &[u64]) -> u64 {
        let mut i = 0;
        for &c in cs.iter().rev() {
            i = i * self.p + c;
        }
        i
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.index(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.q);
        if self.m == 1 {
            return (self.p - a) % self.p;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.index(&neg)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.m == 1 {
            return (a * b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c != 0 {
                prod[d] = 0;
                for (k, &mk) in self.modulus.iter().enumerate() {
                    let cell = &mut prod[d - m + k];
                    *cell = (*cell + (self.p - c) * mk) % self.p;
                }
            }
        }
        self.index(&prod[..m])
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64, GroupError> {
        if a == 0 {
            return Err(GroupError::ZeroInverse);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// True iff the multiplicative order of `a` is exactly q−1.
    pub fn is_primitive(&self, a: u64) -> bool {
        if a == 0 {
            return false;
        }
        let n = self.q - 1;
        if self.pow(a, n) != 1 {
            return false;
        }
        prime_factors(n).into_iter().all(|r| self.pow(a, n / r) != 1)
    }

    /// Smallest element index of multiplicative order q−1.
    pub fn primitive_element(&self) -> u64 {
        if self.q == 2 {
            return 1;
        }
        (2..self.q)
            .find(|&a| self.is_primitive(a))
            .expect("every finite field has a primitive element")
    }
}

/// Trial division by every monic polynomial of degree 1..=m/2.
/// `low` holds the low coefficients of a monic degree-m candidate.
fn is_irreducible(p: u64, low: &[u64]) -> bool {
    let m = low.len();
    let mut cand: Vec<u64> = low.to_vec();
    cand.push(1);
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        for t in 0..count {
            let mut div = vec![0u64; d + 1];
            let mut tt = t;
            for c in div.iter_mut().take(d) {
                *c = tt % p;
                tt /= p;
            }
            div[d] = 1;
            let mut rem = cand.clone();
            for k in (d..=m).rev() {
                let c = rem[k];
                if c != 0 {
                    for (j, &dj) in div.iter().enumerate() {
                        let cell = &mut rem[k - d + j];
                        *cell = (*cell + (p - c) * dj) % p;
                    }
                }
            }
            if rem[..d].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// First irreducible (by digit encoding of the low coefficients) with x
/// primitive; falls back to the first irreducible.
fn canonical_modulus(p: u64, m: u32, q: u64) -> Result<Vec<u64>, GroupError> {
    let mut first_irr: Option<Vec<u64>> = None;
    for t in 0..q {
        let mut low = vec![0u64; m as usize];
        let mut tt = t;
        for c in low.iter_mut() {
            *c = tt % p;
            tt /= p;
        }
        if !is_irreducible(p, &low) {
            continue;
        }
        let probe = Field { p, m, q, modulus: low.clone() };
        // x has index p in the digit encoding
        if probe.is_primitive(p) {
            return Ok(low);
        }
        if first_irr.is_none() {
            first_irr = Some(low);
        }
    }
    first_irr.ok_or(GroupError::ReducibleModulus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::from_order(7).unwrap();
        assert_eq!(f.add(3, 5), 1);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.neg(2), 5);
        assert_eq!(f.inv(3).unwrap(), 5);
    }

    #[test]
    fn gf9_canonical_modulus_and_alpha() {
        // x^2 + x + 2 is the first irreducible over GF(3) with x primitive.
        let f = Field::from_order(9).unwrap();
        assert_eq!(f.modulus(), &[2, 1]);
        assert_eq!(f.primitive_element(), 3); // the class of x
        // x^4 = 2 in this field
        assert_eq!(f.pow(3, 4), 2);
    }

    #[test]
    fn gf27_and_gf25_canonical_data() {
        let f27 = Field::from_order(27).unwrap();
        assert_eq!(f27.modulus(), &[1, 2, 0]);
        assert_eq!(f27.primitive_element(), 3);
        let f25 = Field::from_order(25).unwrap();
        assert_eq!(f25.modulus(), &[2, 1]);
        assert_eq!(f25.primitive_element(), 5);
    }

    #[test]
    fn field_axioms_small() {
        for q in [4u64, 8, 9, 25, 27] {
            let f = Field::from_order(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
        }
    }

    #[test]
    fn supplied_reducible_modulus_rejected() {
        // x^2 + 2 = x^2 - 1 = (x-1)(x+1) over GF(3)
        assert!(matches!(
            Field::new(3, 2, Some(vec![2, 0])),
            Err(GroupError::ReducibleModulus)
        ));
        // x^2 + 1 is irreducible over GF(3)
        assert!(Field::new(3, 2, Some(vec![1, 0])).is_ok());
    }

    #[test]
    fn non_prime_rejected() {
        assert!(matches!(Field::new(6, 1, None), Err(GroupError::NonPrimeModulus { .. })));
        assert!(matches!(Field::from_order(12), Err(GroupError::NotPrimePower { .. })));
    }
}
