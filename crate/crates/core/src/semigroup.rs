//! The finite ordered semigroup itself: axiom validation, the canonical JSON
//! file format, and the element/subset primitives every other module uses.
//!
//! Elements are the dense indices `0..n`. The order is stored as one
//! down-set mask per element, so `(A]` is an OR over the members of `A`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, OrderAxiom, Result, Side, Violation};
use crate::subset::{ElementSubset, MAX_ORDER};

/// A finite semigroup with a compatible partial order.
///
/// Immutable once constructed; every constructor either validates the axioms
/// or is crate-private and only used on structures already known valid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedSemigroup {
    order: usize,
    table: Vec<u8>,
    /// `below[b]` holds every `x` with `x ≤ b`.
    below: Vec<u64>,
}

impl OrderedSemigroup {
    /// Validates a Cayley table and order matrix.
    ///
    /// Shape problems (ragged rows, entries out of range) are reported as
    /// [`Error::Malformed`]; axiom failures as [`Error::Invalid`] with every
    /// violation found.
    pub fn new(table: Vec<Vec<usize>>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = table.len();
        check_shape(n, &table, &leq)?;
        let flat: Vec<u8> = table.iter().flatten().map(|&v| v as u8).collect();
        let mut below = vec![0u64; n];
        for (i, row) in leq.iter().enumerate() {
            for (j, &le) in row.iter().enumerate() {
                if le {
                    below[j] |= 1 << i;
                }
            }
        }
        let s = OrderedSemigroup {
            order: n,
            table: flat,
            below,
        };
        let violations = s.violations();
        if violations.is_empty() {
            Ok(s)
        } else {
            Err(Error::Invalid(violations))
        }
    }

    /// Same as [`OrderedSemigroup::new`] with the order given as `(i, j)` pairs meaning `i ≤ j`.
    pub fn from_pairs(table: Vec<Vec<usize>>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = table.len();
        let mut leq = vec![vec![false; n]; n];
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::Malformed(format!("order pair ({i},{j}) out of range 0..{n}")));
            }
            leq[i][j] = true;
        }
        Self::new(table, leq)
    }

    /// A semigroup with the discrete (equality) order.
    pub fn discrete(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let leq = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        Self::new(table, leq)
    }

    pub(crate) fn from_raw(order: usize, table: Vec<u8>, below: Vec<u64>) -> Self {
        let s = OrderedSemigroup { order, table, below };
        debug_assert!(s.violations().is_empty(), "from_raw on an invalid structure");
        s
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b] >> a & 1 == 1
    }

    /// `{ x : x ≤ b }`.
    #[inline]
    pub fn below(&self, b: usize) -> ElementSubset {
        ElementSubset::from_bits(self.order, self.below[b])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The whole carrier as a subset.
    pub fn all(&self) -> ElementSubset {
        ElementSubset::full(self.order)
    }

    pub fn empty(&self) -> ElementSubset {
        ElementSubset::empty(self.order)
    }

    pub fn singleton(&self, a: usize) -> ElementSubset {
        ElementSubset::singleton(self.order, a)
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, elems: I) -> ElementSubset {
        ElementSubset::from_elements(self.order, elems)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.leq(i, j)).collect())
            .collect()
    }

    /// All pairs `(i, j)` with `i ≤ j`, reflexive ones included, in row-major order.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.elements() {
            for j in self.elements() {
                if self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Every violated axiom, in the order associativity, partial order, compatibility.
    pub fn violations(&self) -> Vec<Violation> {
        let n = self.order;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        out.push(Violation::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            if !self.leq(i, i) {
                out.push(Violation::NotPartialOrder {
                    axiom: OrderAxiom::Reflexive,
                    i,
                    j: i,
                    k: None,
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.leq(i, j) && self.leq(j, i) {
                    out.push(Violation::NotPartialOrder {
                        axiom: OrderAxiom::Antisymmetric,
                        i,
                        j,
                        k: None,
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        out.push(Violation::NotPartialOrder {
                            axiom: OrderAxiom::Transitive,
                            i,
                            j,
                            k: Some(k),
                        });
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                for x in 0..n {
                    if !self.leq(self.mul(x, a), self.mul(x, b)) {
                        out.push(Violation::NotCompatible {
                            a,
                            b,
                            x,
                            side: Side::Left,
                        });
                    }
                    if !self.leq(self.mul(a, x), self.mul(b, x)) {
                        out.push(Violation::NotCompatible {
                            a,
                            b,
                            x,
                            side: Side::Right,
                        });
                    }
                }
            }
        }
        out
    }

    /// `(A] = { x : x ≤ a for some a ∈ A }`.
    pub fn downset(&self, a: &ElementSubset) -> ElementSubset {
        let bits = a.iter().fold(0u64, |acc, x| acc | self.below[x]);
        ElementSubset::from_bits(self.order, bits)
    }

    /// `AB = { a·b : a ∈ A, b ∈ B }`.
    pub fn subset_product(&self, a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
        let mut out = self.empty();
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `Sa`
    pub fn left_multiples(&self, a: usize) -> ElementSubset {
        self.subset(self.elements().map(|x| self.mul(x, a)))
    }

    /// `aS`
    pub fn right_multiples(&self, a: usize) -> ElementSubset {
        self.subset(self.elements().map(|x| self.mul(a, x)))
    }

    /// `aSb`
    pub fn sandwich(&self, a: usize, b: usize) -> ElementSubset {
        self.subset(self.elements().map(|x| self.mul(self.mul(a, x), b)))
    }

    /// `SaS`
    pub fn two_sided_multiples(&self, a: usize) -> ElementSubset {
        let mut out = self.empty();
        for x in self.elements() {
            let xa = self.mul(x, a);
            for y in self.elements() {
                out.insert(self.mul(xa, y));
            }
        }
        out
    }

    /// `a^m` for `m ≥ 1`.
    pub fn power(&self, a: usize, m: usize) -> usize {
        assert!(m >= 1, "powers start at 1 in a semigroup");
        let mut p = a;
        for _ in 1..m {
            p = self.mul(p, a);
        }
        p
    }

    /// `[a^1, a^2, ..., a^n]`, enough to contain every distinct power of `a`.
    pub fn powers(&self, a: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.order);
        let mut p = a;
        for _ in 0..self.order {
            out.push(p);
            p = self.mul(p, a);
        }
        out
    }

    /// Index and period of the monogenic subsemigroup generated by `a`.
    pub fn power_profile(&self, a: usize) -> PowerProfile {
        // first_seen[x] = exponent at which x first appeared
        let mut first_seen = vec![0usize; self.order];
        let mut distinct = self.empty();
        let mut p = a;
        let mut m = 1;
        loop {
            if distinct.contains(p) {
                let index = first_seen[p];
                return PowerProfile {
                    index,
                    period: m - index,
                    powers: distinct,
                };
            }
            distinct.insert(p);
            first_seen[p] = m;
            p = self.mul(p, a);
            m += 1;
        }
    }

    /// The monoid `S¹` obtained by adjoining a fresh identity.
    pub fn adjoin_identity(&self) -> MonoidExtension {
        let n = self.order;
        assert!(n < MAX_ORDER, "cannot adjoin an identity at order {n}");
        let one = n;
        let m = n + 1;
        let mut table = vec![0u8; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = if a == one {
                    b as u8
                } else if b == one {
                    a as u8
                } else {
                    self.mul(a, b) as u8
                };
            }
        }
        let mut below = self.below.clone();
        below.push(1 << one);
        MonoidExtension {
            base: self.clone(),
            extended: OrderedSemigroup::from_raw(m, table, below),
        }
    }

    /// Relabels elements: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> OrderedSemigroup {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut table = vec![0u8; n * n];
        let mut below = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u8;
                if self.leq(i, j) {
                    below[perm[j]] |= 1 << perm[i];
                }
            }
        }
        OrderedSemigroup { order: n, table, below }
    }

    /// Parses the canonical JSON structure format and validates it.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: StructureFile = serde_json::from_str(text)?;
        file.into_semigroup()
    }

    /// The canonical JSON structure format, compact, keys in the order `order`, `table`, `leq`.
    pub fn to_json(&self) -> String {
        let file = StructureFile {
            order: self.order as i64,
            table: self
                .table
                .chunks(self.order)
                .map(|r| r.iter().map(|&v| v as i64).collect())
                .collect(),
            leq: self
                .leq_pairs()
                .into_iter()
                .map(|(i, j)| [i as i64, j as i64])
                .collect(),
        };
        serde_json::to_string(&file).expect("structure serialization cannot fail")
    }
}

impl std::fmt::Debug for OrderedSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_json())
    }
}

fn check_shape(n: usize, table: &[Vec<usize>], leq: &[Vec<bool>]) -> Result<()> {
    if n == 0 {
        return Err(Error::Malformed("order must be at least 1".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::Malformed(format!(
            "order {n} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!(
                "table row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::Malformed(format!(
                "table[{i}][{j}] = {v} is out of range 0..{n}"
            )));
        }
    }
    if leq.len() != n || leq.iter().any(|r| r.len() != n) {
        return Err(Error::Malformed(format!("order matrix must be {n}x{n}")));
    }
    Ok(())
}

/// Result of [`OrderedSemigroup::power_profile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerProfile {
    /// Least `i` such that `a^i = a^(i+p)` for some `p ≥ 1`.
    pub index: usize,
    /// Least such `p`.
    pub period: usize,
    /// `{a, a^2, ...}`.
    pub powers: ElementSubset,
}

/// `S¹`: the base structure with an adjoined identity comparable only to itself.
#[derive(Debug, Clone)]
pub struct MonoidExtension {
    base: OrderedSemigroup,
    extended: OrderedSemigroup,
}

impl MonoidExtension {
    pub fn base(&self) -> &OrderedSemigroup {
        &self.base
    }

    pub fn monoid(&self) -> &OrderedSemigroup {
        &self.extended
    }

    /// Index of the adjoined identity in [`MonoidExtension::monoid`].
    pub fn identity(&self) -> usize {
        self.base.order()
    }
}

/// On-disk form: `{"order": n, "table": [[..]], "leq": [[i,j], ..]}`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub order: i64,
    pub table: Vec<Vec<i64>>,
    pub leq: Vec<[i64; 2]>,
}

impl StructureFile {
    /// Range checks come first; only a well-shaped structure reaches axiom validation.
    pub fn into_semigroup(self) -> Result<OrderedSemigroup> {
        let n = self.order;
        if n < 1 || n as usize > MAX_ORDER {
            return Err(Error::Malformed(format!("order {n} outside 1..={MAX_ORDER}")));
        }
        let n = n as usize;
        if self.table.len() != n {
            return Err(Error::Malformed(format!(
                "table has {} rows, expected {n}",
                self.table.len()
            )));
        }
        let in_range = |v: i64| v >= 0 && (v as usize) < n;
        let mut table = Vec::with_capacity(n);
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "table row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((j, v)) = row.iter().enumerate().find(|(_, &v)| !in_range(v)) {
                return Err(Error::Malformed(format!(
                    "table[{i}][{j}] = {v} is out of range 0..{n}"
                )));
            }
            table.push(row.iter().map(|&v| v as usize).collect());
        }
        let mut leq = vec![vec![false; n]; n];
        for &[i, j] in &self.leq {
            if !in_range(i) || !in_range(j) {
                return Err(Error::Malformed(format!("order pair [{i},{j}] out of range 0..{n}")));
            }
            leq[i as usize][j as usize] = true;
        }
        OrderedSemigroup::new(table, leq)
    }
}

/// The named structures used throughout the docs and tests.
pub mod fixtures {
    use super::OrderedSemigroup;

    /// Trivial semigroup `{e}`.
    pub fn t1() -> OrderedSemigroup {
        OrderedSemigroup::discrete(vec![vec![0]]).unwrap()
    }

    /// Left-zero semigroup on `{a=0, b=1}` (`xy = x`), discrete order.
    pub fn lz2() -> OrderedSemigroup {
        OrderedSemigroup::discrete(vec![vec![0, 0], vec![1, 1]]).unwrap()
    }

    /// Right-zero semigroup on `{a=0, b=1}` (`xy = y`), discrete order.
    pub fn rz2() -> OrderedSemigroup {
        OrderedSemigroup::discrete(vec![vec![0, 1], vec![0, 1]]).unwrap()
    }

    /// Null semigroup on `{0, a=1}` (all products 0) with `0 ≤ a`.
    pub fn n2() -> OrderedSemigroup {
        OrderedSemigroup::from_pairs(vec![vec![0, 0], vec![0, 0]], &[(0, 0), (1, 1), (0, 1)]).unwrap()
    }

    /// Two-element chain `0 ≤ 1` under meet.
    pub fn sl2() -> OrderedSemigroup {
        OrderedSemigroup::from_pairs(vec![vec![0, 0], vec![0, 1]], &[(0, 0), (1, 1), (0, 1)]).unwrap()
    }

    /// `(name, structure)` for every fixture.
    pub fn all() -> Vec<(&'static str, OrderedSemigroup)> {
        vec![
            ("T1", t1()),
            ("LZ2", lz2()),
            ("RZ2", rz2()),
            ("N2", n2()),
            ("SL2", sl2()),
        ]
    }
}
