//! Principal ideals, ideal membership tests, simplicity and the kernel.

use crate::error::{Error, Result};
use crate::semigroup::OrderedSemigroup;
use crate::subset::ElementSubset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Left,
    Right,
    TwoSided,
    Bi,
}

impl IdealKind {
    pub const ALL: [IdealKind; 4] = [IdealKind::Left, IdealKind::Right, IdealKind::TwoSided, IdealKind::Bi];
}

/// Which flavour of simplicity [`is_simple`] decides. `T` is left and right simple together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Simplicity {
    Left,
    Right,
    TwoSided,
    T,
}

/// `L(a) = (a ∪ Sa]`, `R(a) = (a ∪ aS]`, `I(a) = (a ∪ Sa ∪ aS ∪ SaS]`, `B(a) = (a ∪ aSa]`.
pub fn principal_ideal(s: &OrderedSemigroup, a: usize, kind: IdealKind) -> ElementSubset {
    let mut gen = s.singleton(a);
    match kind {
        IdealKind::Left => gen = gen.union(&s.left_multiples(a)),
        IdealKind::Right => gen = gen.union(&s.right_multiples(a)),
        IdealKind::TwoSided => {
            gen = gen
                .union(&s.left_multiples(a))
                .union(&s.right_multiples(a))
                .union(&s.two_sided_multiples(a))
        }
        IdealKind::Bi => gen = gen.union(&s.sandwich(a, a)),
    }
    s.downset(&gen)
}

/// Whether `a` is a nonempty, downward closed subset absorbing multiplication
/// on the sides `kind` demands.
///
/// For [`IdealKind::Bi`] the absorption condition is `ASA ⊆ A`, without
/// requiring `A` to be a subsemigroup, so that `B(a)` is the least bi-ideal
/// containing `a`.
pub fn is_ideal(s: &OrderedSemigroup, a: &ElementSubset, kind: IdealKind) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    if s.downset(a) != *a {
        return Ok(false);
    }
    let all = s.all();
    let absorbs = match kind {
        IdealKind::Left => s.subset_product(&all, a).is_subset(a),
        IdealKind::Right => s.subset_product(a, &all).is_subset(a),
        IdealKind::TwoSided => s.subset_product(&all, a).is_subset(a) && s.subset_product(a, &all).is_subset(a),
        IdealKind::Bi => s.subset_product(&s.subset_product(a, &all), a).is_subset(a),
    };
    Ok(absorbs)
}

/// Decided through principal ideals: every ideal contains a principal one, so
/// `S` has no proper ideal of a kind iff every principal ideal of that kind is `S`.
pub fn is_simple(s: &OrderedSemigroup, kind: Simplicity) -> bool {
    let all_full = |k| s.elements().all(|a| principal_ideal(s, a, k).is_full());
    match kind {
        Simplicity::Left => all_full(IdealKind::Left),
        Simplicity::Right => all_full(IdealKind::Right),
        Simplicity::TwoSided => all_full(IdealKind::TwoSided),
        Simplicity::T => all_full(IdealKind::Left) && all_full(IdealKind::Right),
    }
}

/// The least two-sided ideal: the intersection of all principal two-sided ideals.
pub fn kernel(s: &OrderedSemigroup) -> ElementSubset {
    s.elements().fold(s.all(), |acc, a| {
        acc.intersection(&principal_ideal(s, a, IdealKind::TwoSided))
    })
}

/// Largest order [`all_ideals`] will scan.
pub const IDEAL_SCAN_LIMIT: usize = 20;

/// Every subset passing [`is_ideal`] for `kind`, in increasing mask order.
pub fn all_ideals(s: &OrderedSemigroup, kind: IdealKind) -> Result<Vec<ElementSubset>> {
    let n = s.order();
    if n > IDEAL_SCAN_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: IDEAL_SCAN_LIMIT,
            what: "ideal scan",
        });
    }
    let mut out = Vec::new();
    for bits in 1u64..(1u64 << n) {
        let cand = ElementSubset::from_bits(n, bits);
        if is_ideal(s, &cand, kind)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// A subsemigroup viewed as an ordered semigroup in its own right, with the
/// index translation back to the parent.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub semigroup: OrderedSemigroup,
    /// `to_parent[i]` is the parent index of restricted element `i`.
    pub to_parent: Vec<usize>,
    /// Inverse of `to_parent`; `None` outside the subset.
    pub from_parent: Vec<Option<usize>>,
}

impl Restriction {
    /// Maps a subset of the restricted structure into the parent.
    pub fn lift(&self, sub: &ElementSubset) -> ElementSubset {
        ElementSubset::from_elements(self.from_parent.len(), sub.iter().map(|i| self.to_parent[i]))
    }
}

/// The induced ordered semigroup on `k`, keeping the ambient order.
pub fn restrict(s: &OrderedSemigroup, k: &ElementSubset) -> Result<Restriction> {
    if k.is_empty() {
        return Err(Error::EmptySubset);
    }
    let to_parent = k.to_vec();
    let mut from_parent = vec![None; s.order()];
    for (i, &p) in to_parent.iter().enumerate() {
        from_parent[p] = Some(i);
    }
    let m = to_parent.len();
    let mut table = vec![0u8; m * m];
    let mut below = vec![0u64; m];
    for (i, &a) in to_parent.iter().enumerate() {
        for (j, &b) in to_parent.iter().enumerate() {
            let ab = s.mul(a, b);
            match from_parent[ab] {
                Some(idx) => table[i * m + j] = idx as u8,
                None => return Err(Error::NotClosed(a, b)),
            }
            if s.leq(a, b) {
                below[j] |= 1 << i;
            }
        }
    }
    Ok(Restriction {
        semigroup: OrderedSemigroup::from_raw(m, table, below),
        to_parent,
        from_parent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;

    #[test]
    fn principal_ideal_examples() {
        let lz = lz2();
        assert_eq!(principal_ideal(&lz, 0, IdealKind::Left).to_vec(), vec![0, 1]);
        assert_eq!(principal_ideal(&lz, 0, IdealKind::Right).to_vec(), vec![0]);
        assert_eq!(principal_ideal(&n2(), 1, IdealKind::TwoSided).to_vec(), vec![0, 1]);
        let t = t1();
        for kind in IdealKind::ALL {
            assert_eq!(principal_ideal(&t, 0, kind).to_vec(), vec![0]);
        }
    }

    #[test]
    fn is_ideal_examples() {
        let sl = sl2();
        assert!(is_ideal(&sl, &sl.singleton(0), IdealKind::TwoSided).unwrap());
        let lz = lz2();
        assert!(is_ideal(&lz, &lz.singleton(0), IdealKind::Right).unwrap());
        assert!(!is_ideal(&lz, &lz.singleton(0), IdealKind::Left).unwrap());
        for (_, s) in crate::semigroup::fixtures::all() {
            for kind in IdealKind::ALL {
                assert!(is_ideal(&s, &s.all(), kind).unwrap());
            }
        }
        assert!(matches!(
            is_ideal(&lz, &lz.empty(), IdealKind::Left),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn not_downward_closed_is_not_an_ideal() {
        // (a] = {0, a} in N2
        let n = n2();
        assert!(!is_ideal(&n, &n.singleton(1), IdealKind::TwoSided).unwrap());
    }

    #[test]
    fn simplicity_examples() {
        let lz = lz2();
        assert!(is_simple(&lz, Simplicity::Left));
        assert!(!is_simple(&lz, Simplicity::Right));
        assert!(is_simple(&lz, Simplicity::TwoSided));
        assert!(!is_simple(&sl2(), Simplicity::TwoSided));
        assert!(is_simple(&t1(), Simplicity::T));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&n2()).to_vec(), vec![0]);
        assert_eq!(kernel(&lz2()).to_vec(), vec![0, 1]);
        assert_eq!(kernel(&sl2()).to_vec(), vec![0]);
    }

    #[test]
    fn restrict_examples() {
        let n = n2();
        let r = restrict(&n, &n.singleton(0)).unwrap();
        assert_eq!(r.semigroup, t1());
        assert_eq!(r.to_parent, vec![0]);

        let lz = lz2();
        assert_eq!(restrict(&lz, &lz.singleton(0)).unwrap().semigroup, t1());

        let sl = sl2();
        let r = restrict(&sl, &sl.all()).unwrap();
        assert_eq!(r.semigroup, sl);
        assert_eq!(r.from_parent, vec![Some(0), Some(1)]);
    }

    #[test]
    fn restrict_rejects_unclosed() {
        // {a} in N2: a·a = 0 leaves the subset
        let n = n2();
        assert!(matches!(restrict(&n, &n.singleton(1)), Err(Error::NotClosed(1, 1))));
        assert!(matches!(restrict(&n, &n.empty()), Err(Error::EmptySubset)));
    }
}
