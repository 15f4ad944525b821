//! Finite abelian groups, small finite fields and cyclotomy.
//!
//! Three group shapes cover every construction in this crate: the cyclic
//! group ℤₙ, the additive group of GF(p^m), and ℤ₂ × G for one of the
//! former. Elements are always addressed through a canonical index in
//! 0..order: the residue for ℤₙ, the base-p digit encoding for fields,
//! and `bit·|G| + inner` for ℤ₂ × G.

mod cyclotomy;
mod field;

pub use cyclotomy::{
    cyclotomic_number_closed_form, FieldContext, QuarticDecomposition,
};
pub use field::{split_prime_power, Field, MAX_FIELD_ORDER};

pub(crate) use field::is_prime;

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by group and field construction and by cyclotomy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// The characteristic passed for a field is not prime.
    NonPrimeModulus { p: u64 },
    /// A supplied modulus polynomial is not irreducible (or malformed).
    ReducibleModulus,
    /// Requested order is not a prime power.
    NotPrimePower { q: u64 },
    /// Order outside the supported range (2 ≤ q ≤ 2^20).
    FieldTooLarge { q: u64 },
    /// Group order below 2 or a zero-degree extension.
    InvalidOrder,
    /// Multiplicative inverse of zero.
    ZeroInverse,
    /// Cyclotomic class or number index outside 0..e.
    IndexOutOfRange { index: u64, e: u64 },
    /// `e` does not divide q−1, or no closed form is known for this order.
    UnsupportedOrder { e: u64 },
    /// q has no representation matching the quartic closed forms.
    NoDecomposition { q: u64 },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::NonPrimeModulus { p } => write!(f, "{p} is not prime"),
            GroupError::ReducibleModulus => write!(f, "modulus polynomial is reducible"),
            GroupError::NotPrimePower { q } => write!(f, "{q} is not a prime power"),
            GroupError::FieldTooLarge { q } => {
                write!(f, "field order {q} exceeds the supported bound 2^20")
            }
            GroupError::InvalidOrder => write!(f, "group order must be at least 2"),
            GroupError::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
            GroupError::IndexOutOfRange { index, e } => {
                write!(f, "class index {index} out of range for order {e}")
            }
            GroupError::UnsupportedOrder { e } => write!(f, "unsupported cyclotomy order {e}"),
            GroupError::NoDecomposition { q } => {
                write!(f, "{q} admits no quartic decomposition x^2 + 4y^2 matching enumeration")
            }
        }
    }
}

impl core::error::Error for GroupError {}

/// Declarative description of a supported group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// ℤₙ under addition mod n.
    CyclicZ(u64),
    /// The additive group of GF(p^m). `modulus` optionally pins the monic
    /// irreducible (low coefficients c₀..c_{m−1}); `None` selects the
    /// canonical one.
    FieldAdditive { p: u64, m: u32, modulus: Option<Vec<u64>> },
    /// ℤ₂ × G for an inner group G.
    Product2(Box<GroupSpec>),
}

impl GroupSpec {
    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::CyclicZ(n) => *n,
            GroupSpec::FieldAdditive { p, m, .. } => p.pow(*m),
            GroupSpec::Product2(inner) => 2 * inner.order(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum GroupKind {
    Cyclic,
    Field(Field),
    Product2(Box<Group>),
}

/// A concrete group with canonical element indexing 0..order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: u64,
    kind: GroupKind,
}

/// Builds a group from its specification.
pub fn make_group(spec: &GroupSpec) -> Result<Group, GroupError> {
    match spec {
        GroupSpec::CyclicZ(n) => {
            if *n < 2 {
                return Err(GroupError::InvalidOrder);
            }
            Ok(Group { order: *n, kind: GroupKind::Cyclic })
        }
        GroupSpec::FieldAdditive { p, m, modulus } => {
            let field = Field::new(*p, *m, modulus.clone())?;
            Ok(Group { order: field.order(), kind: GroupKind::Field(field) })
        }
        GroupSpec::Product2(inner) => {
            let g = make_group(inner)?;
            Ok(Group { order: 2 * g.order(), kind: GroupKind::Product2(Box::new(g)) })
        }
    }
}

impl Group {
    pub fn cyclic(n: u64) -> Result<Group, GroupError> {
        make_group(&GroupSpec::CyclicZ(n))
    }

    pub fn field_additive(q: u64) -> Result<Group, GroupError> {
        let field = Field::from_order(q)?;
        Ok(Group { order: q, kind: GroupKind::Field(field) })
    }

    pub fn product2(inner: Group) -> Group {
        Group { order: 2 * inner.order, kind: GroupKind::Product2(Box::new(inner)) }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.order && b < self.order);
        match &self.kind {
            GroupKind::Cyclic => (a + b) % self.order,
            GroupKind::Field(f) => f.add(a, b),
            GroupKind::Product2(inner) => {
                let n = inner.order();
                let (ba, xa) = (a / n, a % n);
                let (bb, xb) = (b / n, b % n);
                ((ba + bb) % 2) * n + inner.add(xa, xb)
            }
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.order);
        match &self.kind {
            GroupKind::Cyclic => (self.order - a) % self.order,
            GroupKind::Field(f) => f.neg(a),
            GroupKind::Product2(inner) => {
                let n = inner.order();
                (a / n) * n + inner.neg(a % n)
            }
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    /// Field structure, when this group is the additive group of a field.
    pub fn field(&self) -> Option<&Field> {
        match &self.kind {
            GroupKind::Field(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_cyclic_z(&self) -> bool {
        matches!(self.kind, GroupKind::Cyclic)
    }

    pub fn inner(&self) -> Option<&Group> {
        match &self.kind {
            GroupKind::Product2(g) => Some(g),
            _ => None,
        }
    }
}

/// Smallest element index of GF(q) with multiplicative order q−1.
pub fn find_primitive_element(q: u64) -> Result<u64, GroupError> {
    if q > MAX_FIELD_ORDER {
        return Err(GroupError::FieldTooLarge { q });
    }
    let field = Field::from_order(q)?;
    Ok(field.primitive_element())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::boxed::Box;

    #[test]
    fn cyclic_add() {
        let g = Group::cyclic(7).unwrap();
        assert_eq!(g.add(3, 5), 1);
        assert_eq!(g.neg(0), 0);
        assert_eq!(g.sub(2, 5), 4);
    }

    #[test]
    fn orders_from_spec() {
        assert_eq!(
            make_group(&GroupSpec::FieldAdditive { p: 3, m: 2, modulus: None })
                .unwrap()
                .order(),
            9
        );
        assert_eq!(
            make_group(&GroupSpec::Product2(Box::new(GroupSpec::CyclicZ(7))))
                .unwrap()
                .order(),
            14
        );
    }

    #[test]
    fn product2_indexing() {
        let g = Group::product2(Group::cyclic(7).unwrap());
        // (1,3) + (1,6) = (0,2)
        assert_eq!(g.add(7 + 3, 7 + 6), 2);
        // -(1,3) = (1,4)
        assert_eq!(g.neg(7 + 3), 7 + 4);
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(find_primitive_element(11).unwrap(), 2);
        assert_eq!(find_primitive_element(7).unwrap(), 3);
        assert_eq!(find_primitive_element(13).unwrap(), 2);
        assert_eq!(find_primitive_element(9).unwrap(), 3);
        assert!(matches!(
            find_primitive_element((1 << 20) + 1),
            Err(GroupError::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn tiny_orders_rejected() {
        assert!(make_group(&GroupSpec::CyclicZ(1)).is_err());
    }
}
