//! Green's relations, their starred variants, divisibility and the
//! Archimedean conditions.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{principal_ideal, IdealKind};
use crate::regularity::pi_witness;
use crate::semigroup::OrderedSemigroup;
use crate::subset::ElementSubset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Green {
    L,
    R,
    J,
    H,
}

impl Green {
    pub const ALL: [Green; 4] = [Green::L, Green::R, Green::J, Green::H];
}

/// Tag for an [`EquivalenceRelation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Plain(Green),
    Star(Green),
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationKind::Plain(g) => write!(f, "{g:?}"),
            RelationKind::Star(g) => write!(f, "{g:?}*"),
        }
    }
}

/// An equivalence relation on the elements, stored as the class of each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceRelation {
    kind: RelationKind,
    class: Vec<ElementSubset>,
}

impl EquivalenceRelation {
    /// Builds the relation `a ~ b ⇔ key(a) == key(b)`.
    fn from_key<K: PartialEq>(kind: RelationKind, n: usize, key: impl Fn(usize) -> K) -> Self {
        let keys: Vec<K> = (0..n).map(key).collect();
        let class = (0..n)
            .map(|a| ElementSubset::from_elements(n, (0..n).filter(|&b| keys[a] == keys[b])))
            .collect();
        EquivalenceRelation { kind, class }
    }

    pub fn kind(&self) -> RelationKind {
        self.kind
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class[a].contains(b)
    }

    pub fn class_of(&self, a: usize) -> ElementSubset {
        self.class[a]
    }

    /// Distinct classes ordered by least member.
    pub fn classes(&self) -> Vec<ElementSubset> {
        let mut out: Vec<ElementSubset> = Vec::new();
        for (a, c) in self.class.iter().enumerate() {
            if c.first() == Some(a) {
                out.push(*c);
            }
        }
        out
    }

    pub fn is_universal(&self) -> bool {
        self.class.iter().all(|c| c.is_full())
    }

    /// Whether every two members of `set` are related.
    pub fn relates_all(&self, set: &ElementSubset) -> bool {
        set.iter().all(|a| set.is_subset(&self.class[a]))
    }

    /// Pointwise conjunction.
    pub fn meet(&self, other: &Self, kind: RelationKind) -> Self {
        EquivalenceRelation {
            kind,
            class: self
                .class
                .iter()
                .zip(&other.class)
                .map(|(a, b)| a.intersection(b))
                .collect(),
        }
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.class.iter().zip(&other.class).all(|(a, b)| a.is_subset(b))
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let n = self.class.len();
        (0..n).map(|a| (0..n).map(|b| self.related(a, b)).collect()).collect()
    }
}

/// `a L b ⇔ L(a) = L(b)` and likewise for `R`, `J`; `H = L ∩ R`.
pub fn green(s: &OrderedSemigroup, which: Green) -> EquivalenceRelation {
    let n = s.order();
    let by = |kind| EquivalenceRelation::from_key(RelationKind::Plain(which), n, |a| principal_ideal(s, a, kind));
    match which {
        Green::L => by(IdealKind::Left),
        Green::R => by(IdealKind::Right),
        Green::J => by(IdealKind::TwoSided),
        Green::H => green(s, Green::L).meet(&green(s, Green::R), RelationKind::Plain(Green::H)),
    }
}

/// The starred relation: `a ~* b ⇔ a^m ~ b^k` for the least `m`, `k` making
/// `a^m`, `b^k` regular. Only defined on pi-regular structures.
pub fn green_star(s: &OrderedSemigroup, which: Green) -> Result<EquivalenceRelation> {
    let mut reg_power = Vec::with_capacity(s.order());
    for a in s.elements() {
        match pi_witness(s, a) {
            Some(m) => reg_power.push(s.power(a, m)),
            None => return Err(Error::NotPiRegular(a)),
        }
    }
    let kind = RelationKind::Star(which);
    if which == Green::H {
        let l = green_star(s, Green::L)?;
        let r = green_star(s, Green::R)?;
        return Ok(l.meet(&r, kind));
    }
    let base = green(s, which);
    Ok(EquivalenceRelation::from_key(kind, s.order(), |a| {
        base.class_of(reg_power[a])
    }))
}

/// Entry `a` holds `{ b : a | b }`, computed in `S¹`.
pub fn divisibility(s: &OrderedSemigroup) -> Vec<ElementSubset> {
    let ext = s.adjoin_identity();
    let m = ext.monoid();
    let s1 = m.all();
    (0..s.order())
        .map(|a| {
            let xay = m.subset_product(&m.subset_product(&s1, &m.singleton(a)), &s1);
            let below = m.downset(&xay);
            ElementSubset::from_bits(s.order(), below.bits())
        })
        .collect()
}

/// `a | b ⇔ b ≤ xay` for some `x, y ∈ S¹`.
pub fn divides(s: &OrderedSemigroup, a: usize, b: usize) -> bool {
    divisibility(s)[a].contains(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Archimedean {
    /// `b^m ∈ (SaS]`
    TwoSided,
    /// `b^m ∈ (Sa]`
    L,
    /// `b^m ∈ (aS]`
    R,
    /// `b^m ∈ (aSa]`
    T,
}

/// The closed set a power of `b` must reach for the given flavour.
pub fn archimedean_target(s: &OrderedSemigroup, a: usize, flavor: Archimedean) -> ElementSubset {
    let gen = match flavor {
        Archimedean::TwoSided => s.two_sided_multiples(a),
        Archimedean::L => s.left_multiples(a),
        Archimedean::R => s.right_multiples(a),
        Archimedean::T => s.sandwich(a, a),
    };
    s.downset(&gen)
}

/// For all `a, b` some `b^m` (with `m ≤ n`) lies in the flavour's target for `a`.
pub fn is_archimedean(s: &OrderedSemigroup, flavor: Archimedean) -> bool {
    let targets: Vec<ElementSubset> = s.elements().map(|a| archimedean_target(s, a, flavor)).collect();
    s.elements().all(|b| {
        let powers = s.power_profile(b).powers;
        targets.iter().all(|t| t.intersects(&powers))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;

    #[test]
    fn green_examples() {
        let lz = lz2();
        assert!(green(&lz, Green::L).is_universal());
        assert_eq!(green(&lz, Green::R).classes().len(), 2);
        assert_eq!(green(&lz, Green::H).classes().len(), 2);
        assert!(!green(&n2(), Green::J).related(1, 0));
        let t = t1();
        for g in Green::ALL {
            assert!(green(&t, g).is_universal());
        }
    }

    #[test]
    fn green_star_examples() {
        assert!(green_star(&n2(), Green::L).unwrap().related(1, 0));
        let sl = sl2();
        assert_eq!(
            green_star(&sl, Green::L).unwrap().matrix(),
            green(&sl, Green::L).matrix()
        );
        let r = green_star(&lz2(), Green::R).unwrap();
        assert_eq!(r.classes().len(), 2);
        assert_eq!(r.kind().to_string(), "R*");
    }

    #[test]
    fn finite_structures_always_have_a_regular_power() {
        // some power of each element is idempotent, hence regular, so the
        // NotPiRegular path is unreachable for finite inputs
        let s = OrderedSemigroup::from_pairs(vec![vec![0, 0], vec![0, 0]], &[(0, 0), (1, 1), (1, 0)]).unwrap();
        assert!(green_star(&s, Green::L).is_ok());
    }

    #[test]
    fn divides_examples() {
        for (_, s) in crate::semigroup::fixtures::all() {
            for a in s.elements() {
                assert!(divides(&s, a, a));
            }
        }
        assert!(divides(&n2(), 1, 0));
        assert!(!divides(&sl2(), 0, 1));
    }

    #[test]
    fn archimedean_examples() {
        let lz = lz2();
        assert!(is_archimedean(&lz, Archimedean::L));
        assert!(!is_archimedean(&lz, Archimedean::R));
        assert!(!is_archimedean(&lz, Archimedean::T));
        assert!(is_archimedean(&lz, Archimedean::TwoSided));
        assert!(is_archimedean(&n2(), Archimedean::T));
        assert!(!is_archimedean(&sl2(), Archimedean::TwoSided));
    }
}
