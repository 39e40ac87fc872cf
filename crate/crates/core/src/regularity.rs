//! Regular elements, ordered inverses and idempotents, pi-regularity, and the
//! (right/left/two-sided) pi-inverse properties.
//!
//! Existential exponents are searched over `1..=n`. Every distinct power of an
//! element already occurs there, so nothing is lost by the bound.

use crate::relations::{green, EquivalenceRelation, Green};
use crate::semigroup::OrderedSemigroup;
use crate::subset::ElementSubset;

/// `a ∈ (aSa]`
pub fn is_regular(s: &OrderedSemigroup, a: usize) -> bool {
    s.downset(&s.sandwich(a, a)).contains(a)
}

pub fn regular_set(s: &OrderedSemigroup) -> ElementSubset {
    s.subset(s.elements().filter(|&a| is_regular(s, a)))
}

/// `E≤(S) = { e : e ≤ e² }`
pub fn ordered_idempotents(s: &OrderedSemigroup) -> ElementSubset {
    s.subset(s.elements().filter(|&e| s.leq(e, s.mul(e, e))))
}

/// `V≤(a) = { b : a ≤ aba and b ≤ bab }`
pub fn inverses(s: &OrderedSemigroup, a: usize) -> ElementSubset {
    s.subset(s.elements().filter(|&b| {
        let ab = s.mul(a, b);
        s.leq(a, s.mul(ab, a)) && s.leq(b, s.mul(s.mul(b, a), b))
    }))
}

/// Least `m` with `a^m ∈ (a^m S a^m]`, i.e. the least regular power.
pub fn pi_witness(s: &OrderedSemigroup, a: usize) -> Option<usize> {
    s.powers(a).into_iter().position(|p| is_regular(s, p)).map(|i| i + 1)
}

/// Least `m` with `a^m ∈ (S a^{2m} S]`.
pub fn intra_witness(s: &OrderedSemigroup, a: usize) -> Option<usize> {
    (1..=s.order()).find(|&m| {
        let am = s.power(a, m);
        let a2m = s.mul(am, am);
        s.downset(&s.two_sided_multiples(a2m)).contains(am)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementRegularity {
    pub is_regular: bool,
    pub pi_witness: Option<usize>,
    pub intra_witness: Option<usize>,
}

/// Per-element regularity data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityProfile {
    pub elements: Vec<ElementRegularity>,
}

pub fn profile(s: &OrderedSemigroup) -> RegularityProfile {
    RegularityProfile {
        elements: s
            .elements()
            .map(|a| ElementRegularity {
                is_regular: is_regular(s, a),
                pi_witness: pi_witness(s, a),
                intra_witness: intra_witness(s, a),
            })
            .collect(),
    }
}

/// `πReg≤(S)`: elements with a regular power.
pub fn pi_regular_set(s: &OrderedSemigroup) -> ElementSubset {
    s.subset(s.elements().filter(|&a| pi_witness(s, a).is_some()))
}

/// `ΠIntra≤(S)`
pub fn pi_intra_set(s: &OrderedSemigroup) -> ElementSubset {
    s.subset(s.elements().filter(|&a| intra_witness(s, a).is_some()))
}

pub fn is_pi_regular(s: &OrderedSemigroup) -> bool {
    pi_regular_set(s).is_full()
}

pub fn is_intra_pi_regular(s: &OrderedSemigroup) -> bool {
    pi_intra_set(s).is_full()
}

/// How `RV≤(S)`-style set builders treat elements without inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RvReading {
    /// Membership requires `V≤(a) ≠ ∅`.
    #[default]
    Nonempty,
    /// Elements with no inverses belong vacuously.
    Vacuous,
}

fn inverses_related(s: &OrderedSemigroup, a: usize, rel: &EquivalenceRelation, reading: RvReading) -> bool {
    let inv = inverses(s, a);
    if inv.is_empty() {
        return reading == RvReading::Vacuous;
    }
    rel.relates_all(&inv)
}

/// Least `m` such that `V≤(a^m)` is nonempty and pairwise `rel`-related.
pub fn related_inverse_exponent(s: &OrderedSemigroup, a: usize, rel: &EquivalenceRelation) -> Option<usize> {
    s.powers(a)
        .into_iter()
        .position(|p| inverses_related(s, p, rel, RvReading::Nonempty))
        .map(|i| i + 1)
}

/// `RV≤(S)`: elements whose inverses are pairwise `R`-related.
pub fn rv_set(s: &OrderedSemigroup) -> ElementSubset {
    rv_set_with(s, RvReading::Nonempty)
}

pub fn rv_set_with(s: &OrderedSemigroup, reading: RvReading) -> ElementSubset {
    let r = green(s, Green::R);
    s.subset(s.elements().filter(|&a| inverses_related(s, a, &r, reading)))
}

/// `ΠRV≤(S)`: elements with a power whose inverses are pairwise `R`-related.
pub fn pi_rv_set(s: &OrderedSemigroup) -> ElementSubset {
    pi_rv_set_with(s, RvReading::Nonempty)
}

pub fn pi_rv_set_with(s: &OrderedSemigroup, reading: RvReading) -> ElementSubset {
    let r = green(s, Green::R);
    s.subset(
        s.elements()
            .filter(|&a| s.powers(a).into_iter().any(|p| inverses_related(s, p, &r, reading))),
    )
}

fn every_element_has_related_inverse_power(s: &OrderedSemigroup, which: Green) -> bool {
    let rel = green(s, which);
    is_pi_regular(s) && s.elements().all(|a| related_inverse_exponent(s, a, &rel).is_some())
}

/// pi-regular, and each element has a power whose (nonempty) inverse set is pairwise `R`-related.
pub fn is_right_pi_inverse(s: &OrderedSemigroup) -> bool {
    every_element_has_related_inverse_power(s, Green::R)
}

/// As [`is_right_pi_inverse`] with `L` in place of `R`.
pub fn is_left_pi_inverse(s: &OrderedSemigroup) -> bool {
    every_element_has_related_inverse_power(s, Green::L)
}

/// As [`is_right_pi_inverse`] with `H = L ∩ R` in place of `R`.
pub fn is_pi_inverse(s: &OrderedSemigroup) -> bool {
    every_element_has_related_inverse_power(s, Green::H)
}

/// Every element regular and `RV≤(S) = S`.
pub fn is_right_inverse(s: &OrderedSemigroup) -> bool {
    regular_set(s).is_full() && rv_set(s).is_full()
}
