//! Exhaustive generation of ordered semigroups of small order.
//!
//! Tables are produced by cell-by-cell backtracking that rejects a partial
//! table as soon as a fully determined associativity triple fails. For each
//! table the compatible partial orders are produced by growing the discrete
//! order one comparable pair at a time, closing under transitivity and
//! compatibility after every addition.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::OrderedSemigroup;

/// Largest order the enumerators accept.
pub const MAX_ENUMERATION_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dedup {
    /// Every labelled structure.
    #[default]
    Raw,
    /// One representative (the canonical form) per isomorphism class.
    Iso,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_ENUMERATION_ORDER,
            what: "enumeration",
        });
    }
    Ok(())
}

/// An associative Cayley table, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<u8>,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b] as usize
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }
}

/// Pull-based backtracking over associative tables in lexicographic order.
#[derive(Debug, Clone)]
pub struct TableEnumerator {
    n: usize,
    cells: Vec<u8>,
    /// Cells `0..fixed` are never revisited.
    fixed: usize,
    started: bool,
    done: bool,
}

impl TableEnumerator {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_prefix(n, &[])
    }

    /// Only tables whose first cells equal `prefix`.
    pub fn with_prefix(n: usize, prefix: &[u8]) -> Result<Self> {
        check_order(n)?;
        if prefix.len() > n * n || prefix.iter().any(|&v| v as usize >= n) {
            return Err(Error::Malformed(format!(
                "invalid table prefix {prefix:?} for order {n}"
            )));
        }
        Ok(TableEnumerator {
            n,
            cells: prefix.to_vec(),
            fixed: prefix.len(),
            started: false,
            done: false,
        })
    }

    /// Continues after the complete table `last`.
    fn resume_after(n: usize, last: &[u8]) -> Result<Self> {
        let mut e = Self::new(n)?;
        if last.len() != n * n || last.iter().any(|&v| v as usize >= n) {
            return Err(Error::Malformed("checkpoint table has the wrong shape".into()));
        }
        e.cells = last.to_vec();
        e.started = true;
        Ok(e)
    }

    /// Checks every associativity triple whose last-assigned cell is `pos`.
    fn consistent_at(&self, pos: usize) -> bool {
        let n = self.n;
        let len = self.cells.len();
        let cell = |a: usize, b: usize| -> Option<usize> {
            let idx = a * n + b;
            (idx < len).then_some(idx)
        };
        for x in 0..n {
            for y in 0..n {
                let Some(c_xy) = cell(x, y) else { continue };
                let xy = self.cells[c_xy] as usize;
                for z in 0..n {
                    let Some(c_yz) = cell(y, z) else { continue };
                    let yz = self.cells[c_yz] as usize;
                    let (Some(c_l), Some(c_r)) = (cell(xy, z), cell(x, yz)) else {
                        continue;
                    };
                    if c_xy.max(c_yz).max(c_l).max(c_r) != pos {
                        continue;
                    }
                    if self.cells[c_l] != self.cells[c_r] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn prefix_consistent(&self) -> bool {
        (0..self.cells.len()).all(|p| {
            let trimmed = TableEnumerator {
                cells: self.cells[..=p].to_vec(),
                ..self.clone()
            };
            trimmed.consistent_at(p)
        })
    }
}

impl Iterator for TableEnumerator {
    type Item = CayleyTable;

    fn next(&mut self) -> Option<CayleyTable> {
        if self.done {
            return None;
        }
        let total = self.n * self.n;
        let mut bump = self.started;
        if !self.started {
            self.started = true;
            if !self.prefix_consistent() {
                self.done = true;
                return None;
            }
            if self.cells.len() == total {
                return Some(CayleyTable {
                    n: self.n,
                    cells: self.cells.clone(),
                });
            }
        }
        loop {
            if bump {
                loop {
                    if self.cells.len() <= self.fixed {
                        self.done = true;
                        return None;
                    }
                    let last = self.cells.last_mut().unwrap();
                    if (*last as usize) + 1 < self.n {
                        *last += 1;
                        break;
                    }
                    self.cells.pop();
                }
                if !self.consistent_at(self.cells.len() - 1) {
                    continue;
                }
            }
            if self.cells.len() == total {
                return Some(CayleyTable {
                    n: self.n,
                    cells: self.cells.clone(),
                });
            }
            self.cells.push(0);
            bump = !self.consistent_at(self.cells.len() - 1);
        }
    }
}

/// Every associative table of order `n`, each exactly once.
pub fn enumerate_tables(n: usize) -> Result<TableEnumerator> {
    TableEnumerator::new(n)
}

/// A partial order as down-set masks: bit `i` of `below[j]` means `i ≤ j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderMatrix {
    below: Vec<u64>,
}

impl OrderMatrix {
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.below.len();
        (0..n).map(|i| (0..n).map(|j| self.leq(i, j)).collect()).collect()
    }

    /// Number of strict comparabilities.
    pub fn strict_pairs(&self) -> usize {
        self.below.iter().map(|b| b.count_ones() as usize).sum::<usize>() - self.below.len()
    }
}

/// Closes `below` under transitivity and two-sided compatibility.
fn close(table: &CayleyTable, below: &mut [u64]) {
    let n = table.order();
    loop {
        let mut changed = false;
        for j in 0..n {
            for i in 0..n {
                if below[j] >> i & 1 == 1 && below[i] | below[j] != below[j] {
                    below[j] |= below[i];
                    changed = true;
                }
            }
        }
        for b in 0..n {
            for a in 0..n {
                if a == b || below[b] >> a & 1 == 0 {
                    continue;
                }
                for x in 0..n {
                    for (lo, hi) in [(table.get(x, a), table.get(x, b)), (table.get(a, x), table.get(b, x))] {
                        if below[hi] >> lo & 1 == 0 {
                            below[hi] |= 1 << lo;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return;
        }
    }
}

fn extend_orders(
    table: &CayleyTable,
    pairs: &[(usize, usize)],
    below: &[u64],
    forbidden: &mut [u64],
    out: &mut Vec<OrderMatrix>,
) {
    let Some((&(i, j), rest)) = pairs.split_first() else {
        out.push(OrderMatrix { below: below.to_vec() });
        return;
    };
    if below[j] >> i & 1 == 1 {
        extend_orders(table, rest, below, forbidden, out);
        return;
    }
    forbidden[j] |= 1 << i;
    extend_orders(table, rest, below, forbidden, out);
    forbidden[j] &= !(1u64 << i);

    let mut grown = below.to_vec();
    grown[j] |= 1 << i;
    close(table, &mut grown);
    let n = table.order();
    let antisymmetric = (0..n).all(|a| (0..n).all(|b| a == b || grown[b] >> a & 1 == 0 || grown[a] >> b & 1 == 0));
    let respects_forbidden = grown.iter().zip(forbidden.iter()).all(|(g, f)| g & f == 0);
    if antisymmetric && respects_forbidden {
        extend_orders(table, rest, &grown, forbidden, out);
    }
}

/// Every partial order compatible with `table`, each exactly once, the
/// discrete order first.
pub fn enumerate_compatible_orders(table: &CayleyTable) -> Vec<OrderMatrix> {
    let n = table.order();
    let pairs: Vec<(usize, usize)> = (0..n).cartesian_product(0..n).filter(|(i, j)| i != j).collect();
    let discrete: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    let mut forbidden = vec![0u64; n];
    let mut out = Vec::new();
    extend_orders(table, &pairs, &discrete, &mut forbidden, &mut out);
    out
}

/// Resumable position of an [`OrderedSemigroupEnumerator`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationCursor {
    pub order: usize,
    pub dedup: Dedup,
    /// Cells of the table currently being expanded (empty before the first table).
    pub prefix_stack: Vec<u8>,
    /// Orders of that table already consumed.
    pub orders_consumed: usize,
    pub emitted: u64,
}

/// Streams ordered semigroups: tables in lexicographic order, and for each
/// table its compatible orders.
pub struct OrderedSemigroupEnumerator {
    n: usize,
    dedup: Dedup,
    tables: TableEnumerator,
    current: Option<(CayleyTable, Vec<OrderMatrix>)>,
    next_order: usize,
    emitted: u64,
}

impl OrderedSemigroupEnumerator {
    pub fn new(n: usize, dedup: Dedup) -> Result<Self> {
        Self::with_prefix(n, dedup, &[])
    }

    /// Restricts the table search to tables starting with `prefix`.
    pub fn with_prefix(n: usize, dedup: Dedup, prefix: &[u8]) -> Result<Self> {
        Ok(OrderedSemigroupEnumerator {
            n,
            dedup,
            tables: TableEnumerator::with_prefix(n, prefix)?,
            current: None,
            next_order: 0,
            emitted: 0,
        })
    }

    pub fn resume(cursor: &EnumerationCursor) -> Result<Self> {
        if cursor.prefix_stack.is_empty() {
            let mut e = Self::new(cursor.order, cursor.dedup)?;
            e.emitted = cursor.emitted;
            return Ok(e);
        }
        let tables = TableEnumerator::resume_after(cursor.order, &cursor.prefix_stack)?;
        let table = CayleyTable {
            n: cursor.order,
            cells: cursor.prefix_stack.clone(),
        };
        let orders = enumerate_compatible_orders(&table);
        if cursor.orders_consumed > orders.len() {
            return Err(Error::Malformed("checkpoint order index out of range".into()));
        }
        Ok(OrderedSemigroupEnumerator {
            n: cursor.order,
            dedup: cursor.dedup,
            tables,
            current: Some((table, orders)),
            next_order: cursor.orders_consumed,
            emitted: cursor.emitted,
        })
    }

    pub fn cursor(&self) -> EnumerationCursor {
        EnumerationCursor {
            order: self.n,
            dedup: self.dedup,
            prefix_stack: self.current.as_ref().map(|(t, _)| t.cells.clone()).unwrap_or_default(),
            orders_consumed: self.next_order,
            emitted: self.emitted,
        }
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }
}

impl Iterator for OrderedSemigroupEnumerator {
    type Item = OrderedSemigroup;

    fn next(&mut self) -> Option<OrderedSemigroup> {
        loop {
            if let Some((table, orders)) = &self.current {
                while self.next_order < orders.len() {
                    let o = &orders[self.next_order];
                    self.next_order += 1;
                    let s = OrderedSemigroup::from_raw(self.n, table.cells.clone(), o.below.clone());
                    if self.dedup == Dedup::Iso && canonical_form(&s) != s {
                        continue;
                    }
                    self.emitted += 1;
                    return Some(s);
                }
            }
            let table = self.tables.next()?;
            let orders = enumerate_compatible_orders(&table);
            self.current = Some((table, orders));
            self.next_order = 0;
        }
    }
}

pub fn enumerate_ordered_semigroups(n: usize, dedup: Dedup) -> Result<OrderedSemigroupEnumerator> {
    OrderedSemigroupEnumerator::new(n, dedup)
}

/// Every possible first row of an order-`n` table; each is a disjoint slice
/// of the search space.
pub fn first_row_prefixes(n: usize) -> Vec<Vec<u8>> {
    (0..n).map(|_| 0..n as u8).multi_cartesian_product().collect()
}

fn encoding(s: &OrderedSemigroup, perm: &[usize], buf: &mut Vec<u8>) {
    let n = s.order();
    buf.clear();
    buf.resize(n * n * 2, 0);
    for i in 0..n {
        for j in 0..n {
            buf[perm[i] * n + perm[j]] = perm[s.mul(i, j)] as u8;
            buf[n * n + perm[i] * n + perm[j]] = s.leq(i, j) as u8;
        }
    }
}

/// The relabelling with the lexicographically least (table, order) encoding.
pub fn canonical_form(s: &OrderedSemigroup) -> OrderedSemigroup {
    let n = s.order();
    let identity: Vec<usize> = (0..n).collect();
    let mut best_perm = identity.clone();
    let mut best = Vec::new();
    encoding(s, &identity, &mut best);
    let mut buf = Vec::new();
    for perm in (0..n).permutations(n) {
        encoding(s, &perm, &mut buf);
        if buf < best {
            std::mem::swap(&mut best, &mut buf);
            best_perm = perm;
        }
    }
    s.relabel(&best_perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;

    #[test]
    fn table_counts() {
        assert_eq!(enumerate_tables(1).unwrap().count(), 1);
        assert_eq!(enumerate_tables(2).unwrap().count(), 8);
        assert_eq!(enumerate_tables(3).unwrap().count(), 113);
    }

    #[test]
    fn order_limit() {
        assert!(matches!(enumerate_tables(6), Err(Error::OrderTooLarge { .. })));
        assert!(enumerate_tables(0).is_err());
    }

    #[test]
    fn prefixes_partition_the_search() {
        let total: usize = first_row_prefixes(3)
            .iter()
            .map(|p| TableEnumerator::with_prefix(3, p).unwrap().count())
            .sum();
        assert_eq!(total, 113);
    }

    #[test]
    fn lz2_orders() {
        let table = CayleyTable {
            n: 2,
            cells: vec![0, 0, 1, 1],
        };
        let orders = enumerate_compatible_orders(&table);
        assert_eq!(orders.len(), 3);
        assert_eq!(orders[0].strict_pairs(), 0);
    }

    #[test]
    fn sl2_orders_include_the_chain() {
        let table = CayleyTable {
            n: 2,
            cells: vec![0, 0, 0, 1],
        };
        let orders = enumerate_compatible_orders(&table);
        assert!(orders.iter().any(|o| o.leq(0, 1)));
        assert_eq!(orders[0].strict_pairs(), 0);
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_form(&t1()), t1());
        let lz = lz2();
        assert_eq!(canonical_form(&lz.relabel(&[1, 0])), canonical_form(&lz));
        assert_ne!(canonical_form(&lz), canonical_form(&rz2()));
    }

    #[test]
    fn iso_counts_of_plain_semigroups() {
        // semigroups up to isomorphism: 1, 5, 24
        for (n, expected) in [(1, 1), (2, 5), (3, 24)] {
            let count = enumerate_ordered_semigroups(n, Dedup::Iso)
                .unwrap()
                .filter(|s| s.leq_pairs().len() == n)
                .count();
            assert_eq!(count, expected, "order {n}");
        }
    }

    #[test]
    fn cursor_resume_continues_the_stream() {
        let all: Vec<OrderedSemigroup> = enumerate_ordered_semigroups(3, Dedup::Raw).unwrap().collect();
        for cut in [0, 1, 7, 100, all.len()] {
            let mut e = enumerate_ordered_semigroups(3, Dedup::Raw).unwrap();
            let head: Vec<_> = e.by_ref().take(cut).collect();
            let cursor = e.cursor();
            let json = serde_json::to_string(&cursor).unwrap();
            let back: EnumerationCursor = serde_json::from_str(&json).unwrap();
            let tail: Vec<_> = OrderedSemigroupEnumerator::resume(&back).unwrap().collect();
            assert_eq!(head.len() + tail.len(), all.len(), "cut {cut}");
            assert_eq!([head, tail].concat(), all);
        }
    }
}
