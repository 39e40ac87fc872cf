//! Definition-level oracles over plain vectors. Nothing here calls the
//! library's deciders; only the structure's table and order are read.
#![allow(dead_code)]

use ordsemi::OrderedSemigroup;

pub type Set = Vec<bool>;

#[derive(Clone, Debug)]
pub struct Naive {
    pub n: usize,
    pub t: Vec<Vec<usize>>,
    pub le: Vec<Vec<bool>>,
}

/// Axiom check by plain triple loops.
pub fn naive_valid(t: &[Vec<usize>], le: &[Vec<bool>]) -> bool {
    let n = t.len();
    for i in 0..n {
        if !le[i][i] {
            return false;
        }
        for j in 0..n {
            if i != j && le[i][j] && le[j][i] {
                return false;
            }
            for k in 0..n {
                if t[t[i][j]][k] != t[i][t[j][k]] {
                    return false;
                }
                if le[i][j] && le[j][k] && !le[i][k] {
                    return false;
                }
                if le[i][j] && (!le[t[k][i]][t[k][j]] || !le[t[i][k]][t[j][k]]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn associative(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| t[t[i][j]][k] == t[i][t[j][k]])))
}

/// Every associative `n × n` table, by scanning all `n^(n²)` of them.
pub fn all_associative_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut t = vec![vec![0; n]; n];
        for k in 0..cells {
            t[k / n][k % n] = c % n;
            c /= n;
        }
        if associative(&t) {
            out.push(t);
        }
    }
    out
}

/// Every reflexive relation on `n` points as a matrix.
pub fn all_reflexive_relations(n: usize) -> Vec<Vec<Vec<bool>>> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    (0..1u32 << off.len())
        .map(|mask| {
            let mut le = vec![vec![false; n]; n];
            for (i, row) in le.iter_mut().enumerate() {
                row[i] = true;
            }
            for (b, &(i, j)) in off.iter().enumerate() {
                le[i][j] = mask >> b & 1 == 1;
            }
            le
        })
        .collect()
}

pub fn naive_ordered_semigroup_count(n: usize) -> usize {
    let rels = all_reflexive_relations(n);
    all_associative_tables(n)
        .iter()
        .map(|t| rels.iter().filter(|le| naive_valid(t, le)).count())
        .sum()
}

impl Naive {
    pub fn of(s: &OrderedSemigroup) -> Naive {
        Naive {
            n: s.order(),
            t: s.table_rows(),
            le: s.leq_matrix(),
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.t[a][b]
    }

    pub fn full(&self) -> Set {
        vec![true; self.n]
    }

    pub fn single(&self, a: usize) -> Set {
        (0..self.n).map(|x| x == a).collect()
    }

    pub fn members(set: &Set) -> Vec<usize> {
        set.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
    }

    pub fn down(&self, a: &Set) -> Set {
        (0..self.n)
            .map(|x| (0..self.n).any(|y| a[y] && self.le[x][y]))
            .collect()
    }

    pub fn prod(&self, a: &Set, b: &Set) -> Set {
        let mut out = vec![false; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                if a[x] && b[y] {
                    out[self.t[x][y]] = true;
                }
            }
        }
        out
    }

    pub fn union(a: &Set, b: &Set) -> Set {
        a.iter().zip(b).map(|(x, y)| *x || *y).collect()
    }

    pub fn subset(a: &Set, b: &Set) -> bool {
        a.iter().zip(b).all(|(x, y)| !*x || *y)
    }

    pub fn left_principal(&self, a: usize) -> Set {
        let s = self.full();
        self.down(&Self::union(&self.single(a), &self.prod(&s, &self.single(a))))
    }

    pub fn right_principal(&self, a: usize) -> Set {
        let s = self.full();
        self.down(&Self::union(&self.single(a), &self.prod(&self.single(a), &s)))
    }

    pub fn two_sided_principal(&self, a: usize) -> Set {
        let s = self.full();
        let sa = self.prod(&s, &self.single(a));
        let as_ = self.prod(&self.single(a), &s);
        let sas = self.prod(&sa, &s);
        self.down(&Self::union(
            &Self::union(&self.single(a), &sa),
            &Self::union(&as_, &sas),
        ))
    }

    /// All nonempty subsets as boolean vectors.
    pub fn subsets(&self) -> Vec<Set> {
        (1u32..1 << self.n)
            .map(|m| (0..self.n).map(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    pub fn is_left_ideal(&self, a: &Set) -> bool {
        Self::subset(&self.prod(&self.full(), a), a) && self.down(a) == *a
    }

    pub fn is_right_ideal(&self, a: &Set) -> bool {
        Self::subset(&self.prod(a, &self.full()), a) && self.down(a) == *a
    }

    pub fn is_two_sided_ideal(&self, a: &Set) -> bool {
        self.is_left_ideal(a) && self.is_right_ideal(a)
    }

    /// No proper subset passes `pred`, by scanning every subset.
    fn no_proper(&self, pred: impl Fn(&Set) -> bool) -> bool {
        self.subsets().iter().all(|a| !pred(a) || a.iter().all(|&x| x))
    }

    pub fn left_simple(&self) -> bool {
        self.no_proper(|a| self.is_left_ideal(a))
    }

    pub fn right_simple(&self) -> bool {
        self.no_proper(|a| self.is_right_ideal(a))
    }

    pub fn simple(&self) -> bool {
        self.no_proper(|a| self.is_two_sided_ideal(a))
    }

    pub fn t_simple(&self) -> bool {
        self.left_simple() && self.right_simple()
    }

    pub fn pow(&self, a: usize, m: usize) -> usize {
        (1..m).fold(a, |acc, _| self.t[acc][a])
    }

    pub fn regular(&self, a: usize) -> bool {
        (0..self.n).any(|x| self.le[a][self.t[self.t[a][x]][a]])
    }

    pub fn inverses(&self, a: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&b| self.le[a][self.t[self.t[a][b]][a]] && self.le[b][self.t[self.t[b][a]][b]])
            .collect()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.le[e][self.t[e][e]]).collect()
    }

    pub fn l_rel(&self, a: usize, b: usize) -> bool {
        self.left_principal(a) == self.left_principal(b)
    }

    pub fn r_rel(&self, a: usize, b: usize) -> bool {
        self.right_principal(a) == self.right_principal(b)
    }

    pub fn j_rel(&self, a: usize, b: usize) -> bool {
        self.two_sided_principal(a) == self.two_sided_principal(b)
    }

    pub fn h_rel(&self, a: usize, b: usize) -> bool {
        self.l_rel(a, b) && self.r_rel(a, b)
    }

    pub fn least_regular_power(&self, a: usize) -> usize {
        (1..=self.n)
            .map(|m| self.pow(a, m))
            .find(|&p| self.regular(p))
            .expect("finite")
    }

    pub fn star(&self, rel: impl Fn(usize, usize) -> bool, a: usize, b: usize) -> bool {
        rel(self.least_regular_power(a), self.least_regular_power(b))
    }

    pub fn pi_regular(&self) -> bool {
        (0..self.n).all(|a| (1..=self.n).any(|m| self.regular(self.pow(a, m))))
    }

    fn pairwise(&self, set: &[usize], rel: &impl Fn(usize, usize) -> bool) -> bool {
        set.iter().all(|&x| set.iter().all(|&y| rel(x, y)))
    }

    fn related_inverse_power(&self, rel: impl Fn(usize, usize) -> bool) -> bool {
        self.pi_regular()
            && (0..self.n).all(|a| {
                (1..=self.n).any(|m| {
                    let v = self.inverses(self.pow(a, m));
                    !v.is_empty() && self.pairwise(&v, &rel)
                })
            })
    }

    pub fn right_pi_inverse(&self) -> bool {
        self.related_inverse_power(|x, y| self.r_rel(x, y))
    }

    pub fn left_pi_inverse(&self) -> bool {
        self.related_inverse_power(|x, y| self.l_rel(x, y))
    }

    pub fn pi_inverse(&self) -> bool {
        self.related_inverse_power(|x, y| self.h_rel(x, y))
    }

    pub fn rv(&self) -> Set {
        (0..self.n)
            .map(|a| {
                let v = self.inverses(a);
                !v.is_empty() && self.pairwise(&v, &|x, y| self.r_rel(x, y))
            })
            .collect()
    }

    pub fn right_inverse(&self) -> bool {
        (0..self.n).all(|a| self.regular(a)) && self.rv().iter().all(|&b| b)
    }

    /// `which`: 't' two-sided, 'l', 'r', 'T' for t-Archimedean.
    pub fn archimedean(&self, which: char) -> bool {
        let s = self.full();
        (0..self.n).all(|a| {
            let single = self.single(a);
            let gen = match which {
                't' => self.prod(&self.prod(&s, &single), &s),
                'l' => self.prod(&s, &single),
                'r' => self.prod(&single, &s),
                'T' => self.prod(&self.prod(&single, &s), &single),
                _ => unreachable!(),
            };
            let target = self.down(&gen);
            (0..self.n).all(|b| (1..=self.n).any(|m| target[self.pow(b, m)]))
        })
    }

    /// The induced structure on a multiplicatively closed subset.
    pub fn restrict(&self, k: &Set) -> Naive {
        let idx = Self::members(k);
        let pos = |x: usize| idx.iter().position(|&y| y == x).expect("closed");
        Naive {
            n: idx.len(),
            t: idx
                .iter()
                .map(|&a| idx.iter().map(|&b| pos(self.t[a][b])).collect())
                .collect(),
            le: idx
                .iter()
                .map(|&a| idx.iter().map(|&b| self.le[a][b]).collect())
                .collect(),
        }
    }

    /// Some two-sided ideal `K` with every element having a power in `K`
    /// and `K` satisfying `tau`, by scanning every subset.
    pub fn nil_extension_of(&self, tau: impl Fn(&Naive) -> bool) -> bool {
        self.subsets().iter().any(|k| {
            self.is_two_sided_ideal(k)
                && (0..self.n).all(|a| (1..=self.n).any(|m| k[self.pow(a, m)]))
                && tau(&self.restrict(k))
        })
    }
}
