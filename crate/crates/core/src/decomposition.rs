//! Nil-extensions and complete semilattice decompositions.
//!
//! A type predicate is always evaluated on the restricted ordered semigroup
//! (kernel or congruence class with the inherited order), so closures such as
//! `(A]` are taken inside that subsemigroup.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{is_ideal, is_simple, kernel, restrict, IdealKind, Simplicity};
use crate::regularity;
use crate::relations::{is_archimedean, Archimedean};
use crate::semigroup::OrderedSemigroup;
use crate::subset::ElementSubset;

/// Outcome of [`is_nil_extension`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilExtension {
    pub holds: bool,
    /// Least `m` with `a^m ∈ K`, per element.
    pub exponents: Vec<Option<usize>>,
}

/// `K` is a two-sided ideal and every element has a power inside it.
pub fn is_nil_extension(s: &OrderedSemigroup, k: &ElementSubset) -> NilExtension {
    let exponents: Vec<Option<usize>> = s
        .elements()
        .map(|a| s.powers(a).iter().position(|&p| k.contains(p)).map(|i| i + 1))
        .collect();
    let ideal = !k.is_empty() && is_ideal(s, k, IdealKind::TwoSided).unwrap_or(false);
    NilExtension {
        holds: ideal && exponents.iter().all(Option::is_some),
        exponents,
    }
}

/// A named, total decision procedure over ordered semigroups ("type τ").
pub struct TypePredicate<'a> {
    name: String,
    test: Box<dyn Fn(&OrderedSemigroup) -> bool + Send + Sync + 'a>,
}

impl<'a> TypePredicate<'a> {
    pub fn new(name: impl Into<String>, test: impl Fn(&OrderedSemigroup) -> bool + Send + Sync + 'a) -> Self {
        TypePredicate {
            name: name.into(),
            test: Box::new(test),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn holds(&self, s: &OrderedSemigroup) -> bool {
        (self.test)(s)
    }

    pub fn and(self, other: TypePredicate<'a>) -> TypePredicate<'a> {
        let name = format!("{} & {}", self.name, other.name);
        TypePredicate::new(name, move |s| self.holds(s) && other.holds(s))
    }

    pub fn simple() -> Self {
        TypePredicate::new("simple", |s| is_simple(s, Simplicity::TwoSided))
    }

    pub fn left_simple() -> Self {
        TypePredicate::new("left-simple", |s| is_simple(s, Simplicity::Left))
    }

    pub fn t_simple() -> Self {
        TypePredicate::new("t-simple", |s| is_simple(s, Simplicity::T))
    }

    pub fn right_pi_inverse() -> Self {
        TypePredicate::new("right-pi-inverse", regularity::is_right_pi_inverse)
    }

    pub fn pi_inverse() -> Self {
        TypePredicate::new("pi-inverse", regularity::is_pi_inverse)
    }

    pub fn right_inverse() -> Self {
        TypePredicate::new("right-inverse", regularity::is_right_inverse)
    }

    pub fn archimedean() -> Self {
        TypePredicate::new("archimedean", |s| is_archimedean(s, Archimedean::TwoSided))
    }

    pub fn l_archimedean() -> Self {
        TypePredicate::new("l-archimedean", |s| is_archimedean(s, Archimedean::L))
    }

    /// "nil-extension of a τ ordered semigroup", decided on the kernel.
    pub fn nil_extension_of(inner: TypePredicate<'a>) -> Self {
        let name = format!("nil-ext-of({})", inner.name);
        TypePredicate::new(name, move |s| nil_extension_of_type(s, &inner).is_ok())
    }
}

impl fmt::Debug for TypePredicate<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("TypePredicate").field(&self.name).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum NilExtensionNotFound {
    #[error("some element has no power in the kernel")]
    KernelNotNil,
    #[error("the kernel is not of the requested type")]
    TypeFails,
}

/// Finds `K` such that `S` is a nil-extension of `K` and `K` (as an ordered
/// semigroup) has type `τ`.
///
/// Only the kernel is tried. For types implying left, right or two-sided
/// simplicity nothing is lost: such an ideal contains the kernel as an ideal
/// of itself, so it is the kernel. For other types this decides "nil-extension
/// of a τ kernel"; use [`nil_extension_of_type_any_ideal`] to scan every ideal.
pub fn nil_extension_of_type(
    s: &OrderedSemigroup,
    tau: &TypePredicate<'_>,
) -> std::result::Result<ElementSubset, NilExtensionNotFound> {
    let k = kernel(s);
    if !is_nil_extension(s, &k).holds {
        return Err(NilExtensionNotFound::KernelNotNil);
    }
    let r = restrict(s, &k).expect("the kernel is an ideal, hence closed");
    if tau.holds(&r.semigroup) {
        Ok(k)
    } else {
        Err(NilExtensionNotFound::TypeFails)
    }
}

/// Like [`nil_extension_of_type`] but tries every two-sided ideal, smallest
/// mask first.
pub fn nil_extension_of_type_any_ideal(s: &OrderedSemigroup, tau: &TypePredicate<'_>) -> Result<Option<ElementSubset>> {
    Ok(crate::ideals::all_ideals(s, IdealKind::TwoSided)?
        .into_iter()
        .find(|k| is_nil_extension(s, k).holds && tau.holds(&restrict(s, k).expect("ideals are closed").semigroup)))
}

/// A partition of `0..n` as a restricted growth string: `labels[0] = 0` and
/// each label is at most one more than every label before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// Normalises arbitrary labels into restricted growth form.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let out = labels
            .iter()
            .map(|&l| match map.iter().find(|(k, _)| *k == l) {
                Some(&(_, v)) => v,
                None => {
                    map.push((l, map.len()));
                    map.len() - 1
                }
            })
            .collect();
        Partition { labels: out }
    }

    pub fn from_classes(n: usize, classes: &[ElementSubset]) -> Self {
        let mut labels = vec![usize::MAX; n];
        for (i, c) in classes.iter().enumerate() {
            for a in c {
                labels[a] = i;
            }
        }
        assert!(
            labels.iter().all(|&l| l != usize::MAX),
            "classes must cover every element"
        );
        Self::from_labels(&labels)
    }

    pub fn discrete(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    #[inline]
    pub fn class_index(&self, a: usize) -> usize {
        self.labels[a]
    }

    #[inline]
    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn class_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    /// Classes in label order (equivalently, by least member).
    pub fn classes(&self) -> Vec<ElementSubset> {
        let n = self.labels.len();
        (0..self.class_count())
            .map(|c| ElementSubset::from_elements(n, (0..n).filter(|&a| self.labels[a] == c)))
            .collect()
    }

    /// Whether `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        let n = self.labels.len();
        (0..n).all(|a| (0..n).all(|b| !self.same_class(a, b) || other.same_class(a, b)))
    }

    /// Every partition of `0..n`, in lexicographic order of the growth string.
    pub fn all(n: usize) -> AllPartitions {
        AllPartitions {
            current: if n == 0 { None } else { Some(vec![0; n]) },
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.classes().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

pub struct AllPartitions {
    current: Option<Vec<usize>>,
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { labels: cur.clone() };
        let mut next = cur;
        let n = next.len();
        // bump the rightmost position that may grow, reset everything after it
        let mut i = n;
        while i > 1 {
            i -= 1;
            let max_before = next[..i].iter().copied().max().unwrap_or(0);
            if next[i] <= max_before {
                next[i] += 1;
                for x in next.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                self.current = Some(next);
                return Some(out);
            }
        }
        Some(out)
    }
}

/// `a ρ b ⇒ ca ρ cb ∧ ac ρ bc`
pub fn is_congruence(s: &OrderedSemigroup, p: &Partition) -> bool {
    for a in s.elements() {
        for b in a + 1..s.order() {
            if !p.same_class(a, b) {
                continue;
            }
            for c in s.elements() {
                if !p.same_class(s.mul(c, a), s.mul(c, b)) || !p.same_class(s.mul(a, c), s.mul(b, c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Congruence-style check: a congruence with `a ρ a²`, `ab ρ ba`, and `a ≤ b ⇒ a ρ ab`.
pub fn is_complete_semilattice_congruence(s: &OrderedSemigroup, p: &Partition) -> bool {
    if !is_congruence(s, p) {
        return false;
    }
    for a in s.elements() {
        if !p.same_class(a, s.mul(a, a)) {
            return false;
        }
        for b in s.elements() {
            if !p.same_class(s.mul(a, b), s.mul(b, a)) {
                return false;
            }
            if s.leq(a, b) && !p.same_class(a, s.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Family-style check: the classes `S_α` satisfy `S_α S_β ⊆ S_{αβ}` for a
/// semilattice product on class indices, and `S_β ∩ (S_α] ≠ ∅ ⇒ β ⪯ α`
/// where `β ⪯ α ⇔ β = βα`. Disjointness and covering hold by construction.
pub fn satisfies_semilattice_family(s: &OrderedSemigroup, p: &Partition) -> bool {
    let classes = p.classes();
    let k = classes.len();
    let mut product = vec![vec![usize::MAX; k]; k];
    for (al, ca) in classes.iter().enumerate() {
        for (be, cb) in classes.iter().enumerate() {
            let prod = s.subset_product(ca, cb);
            let targets: Vec<usize> = prod.iter().map(|x| p.class_index(x)).collect();
            match targets.split_first() {
                Some((&t, rest)) if rest.iter().all(|&r| r == t) => product[al][be] = t,
                _ => return false,
            }
        }
    }
    for al in 0..k {
        if product[al][al] != al {
            return false;
        }
        for be in 0..k {
            if product[al][be] != product[be][al] {
                return false;
            }
            for ga in 0..k {
                if product[product[al][be]][ga] != product[al][product[be][ga]] {
                    return false;
                }
            }
        }
    }
    for (al, ca) in classes.iter().enumerate() {
        let down = s.downset(ca);
        for (be, cb) in classes.iter().enumerate() {
            if cb.intersects(&down) && product[be][al] != be {
                return false;
            }
        }
    }
    true
}

/// A complete semilattice congruence with its quotient semilattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruencePartition {
    partition: Partition,
    classes: Vec<ElementSubset>,
    class_product: Vec<Vec<usize>>,
}

impl CongruencePartition {
    /// `None` unless `p` is a complete semilattice congruence on `s`.
    pub fn new(s: &OrderedSemigroup, p: Partition) -> Option<Self> {
        if !is_complete_semilattice_congruence(s, &p) {
            return None;
        }
        let classes = p.classes();
        let class_product = classes
            .iter()
            .map(|ca| {
                classes
                    .iter()
                    .map(|cb| p.class_index(s.mul(ca.first().unwrap(), cb.first().unwrap())))
                    .collect()
            })
            .collect();
        Some(CongruencePartition {
            partition: p,
            classes,
            class_product,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn classes(&self) -> &[ElementSubset] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.partition.class_index(a)
    }

    pub fn class_product(&self, alpha: usize, beta: usize) -> usize {
        self.class_product[alpha][beta]
    }

    /// `α ⪯ β ⇔ α = αβ`
    pub fn class_leq(&self, alpha: usize, beta: usize) -> bool {
        self.class_product[alpha][beta] == alpha
    }
}

impl fmt::Display for CongruencePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.partition, f)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns whether two distinct classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The least complete semilattice congruence: closes the seed pairs
/// `(a, a²)`, `(ab, ba)` and `(a, ab)` for `a ≤ b` under multiplication on
/// both sides.
pub fn least_complete_semilattice_congruence(s: &OrderedSemigroup) -> CongruencePartition {
    let mut uf = UnionFind::new(s.order());
    let mut queue: Vec<(usize, usize)> = Vec::new();
    let merge = |uf: &mut UnionFind, queue: &mut Vec<(usize, usize)>, a: usize, b: usize| {
        if uf.union(a, b) {
            queue.push((a, b));
        }
    };
    for a in s.elements() {
        merge(&mut uf, &mut queue, a, s.mul(a, a));
        for b in s.elements() {
            merge(&mut uf, &mut queue, s.mul(a, b), s.mul(b, a));
            if s.leq(a, b) {
                merge(&mut uf, &mut queue, a, s.mul(a, b));
            }
        }
    }
    // Each merged pair (a, b) generates (ca, cb) and (ac, bc); the relation
    // generated by the merged pairs is then closed under multiplication.
    while let Some((a, b)) = queue.pop() {
        for c in s.elements() {
            merge(&mut uf, &mut queue, s.mul(c, a), s.mul(c, b));
            merge(&mut uf, &mut queue, s.mul(a, c), s.mul(b, c));
        }
    }
    let labels: Vec<usize> = s.elements().map(|a| uf.find(a)).collect();
    CongruencePartition::new(s, Partition::from_labels(&labels))
        .expect("closure yields a complete semilattice congruence")
}

/// Largest order for which partitions are scanned exhaustively (Bell(6) = 203).
pub const PARTITION_SCAN_LIMIT: usize = 6;

/// Every complete semilattice congruence, in growth-string order.
pub fn all_complete_semilattice_congruences(s: &OrderedSemigroup) -> Result<Vec<CongruencePartition>> {
    if s.order() > PARTITION_SCAN_LIMIT {
        return Err(Error::OrderTooLarge {
            order: s.order(),
            limit: PARTITION_SCAN_LIMIT,
            what: "partition scan",
        });
    }
    Ok(Partition::all(s.order())
        .filter_map(|p| CongruencePartition::new(s, p))
        .collect())
}

fn classes_have_type(s: &OrderedSemigroup, c: &CongruencePartition, tau: &TypePredicate<'_>) -> bool {
    c.classes().iter().all(|class| {
        let r = restrict(s, class).expect("congruence classes are subsemigroups");
        tau.holds(&r.semigroup)
    })
}

/// Some complete semilattice congruence has every class of type `τ`; returns it.
///
/// Tries the least congruence first, then scans all of them.
pub fn is_complete_semilattice_of(
    s: &OrderedSemigroup,
    tau: &TypePredicate<'_>,
) -> Result<Option<CongruencePartition>> {
    let least = least_complete_semilattice_congruence(s);
    if classes_have_type(s, &least, tau) {
        return Ok(Some(least));
    }
    Ok(all_complete_semilattice_congruences(s)?
        .into_iter()
        .find(|c| classes_have_type(s, c, tau)))
}

/// The fast path of [`is_complete_semilattice_of`] alone, usable at any order.
/// A `false` here is only "false for the least congruence".
pub fn is_complete_semilattice_of_least(s: &OrderedSemigroup, tau: &TypePredicate<'_>) -> Option<CongruencePartition> {
    let least = least_complete_semilattice_congruence(s);
    classes_have_type(s, &least, tau).then_some(least)
}
