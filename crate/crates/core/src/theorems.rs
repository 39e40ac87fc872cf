//! Characterization statements checked structure by structure.
//!
//! Each catalog entry evaluates every one of its conditions (no
//! short-circuiting) and then checks the claimed logical shape: a list of
//! equivalent conditions, or conditions that must hold outright.
//! Statements quantified over ideals or congruences get one group of
//! conditions per ideal or congruence, labelled `(i)@{0,1}` and so on.

use std::fmt;

use serde::Serialize;

use crate::decomposition::{
    all_complete_semilattice_congruences, is_complete_semilattice_of, is_nil_extension, nil_extension_of_type,
    nil_extension_of_type_any_ideal, CongruencePartition, TypePredicate, PARTITION_SCAN_LIMIT,
};
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, restrict, IdealKind, IDEAL_SCAN_LIMIT};
use crate::regularity::{self, RvReading};
use crate::relations::{divisibility, green, green_star, is_archimedean, Archimedean, EquivalenceRelation, Green};
use crate::semigroup::OrderedSemigroup;
use crate::subset::ElementSubset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremInfo {
    pub id: &'static str,
    pub summary: &'static str,
    /// Restated for ordered semigroups from a statement about a different class.
    pub adapted: bool,
}

const fn info(id: &'static str, summary: &'static str) -> TheoremInfo {
    TheoremInfo {
        id,
        summary,
        adapted: false,
    }
}

pub const CATALOG: &[TheoremInfo] = &[
    info(
        "thm-500",
        "right pi-inverse iff e L* f implies e R* f on ordered idempotents",
    ),
    info(
        "thm-15",
        "right pi-inverse iff some power of each element has pairwise R-related inverses",
    ),
    info(
        "thm-74",
        "eight characterizations of nil-extensions of left simple pi-inverse semigroups",
    ),
    info(
        "cor-76",
        "nil-extension of simple pi-inverse iff pi-inverse with J*-related idempotents",
    ),
    info(
        "lem-cao",
        "nilpotent Rees quotient iff every element has a power in the ideal",
    ),
    info("lem-ne51", "a|c implies a²|c iff a|c and b|c imply ab|c, for c in RV"),
    info(
        "thm-ne511",
        "RV, right inverse and right pi-inverse decompose over complete semilattice congruences",
    ),
    info(
        "lem-ne53",
        "RV and the L-classes meeting it lie in every nil-extension ideal",
    ),
    info(
        "thm-1005",
        "nine characterizations of nil-extensions of left simple right pi-inverse semigroups",
    ),
    info(
        "cor-simple",
        "five characterizations of nil-extensions of simple right pi-inverse semigroups",
    ),
    info(
        "cor-rinv-nilext",
        "nil-extension of a right inverse semigroup iff four RV closure conditions",
    ),
    info(
        "cor-1114",
        "complete semilattices of nil-extensions of simple right pi-inverse semigroups",
    ),
    info(
        "cor-leftsimple",
        "complete semilattices of nil-extensions of left simple right pi-inverse semigroups",
    ),
    TheoremInfo {
        id: "thm-774-adapted",
        summary: "t-Archimedean with an intra-pi-regular element iff nil-extension of a t-simple semigroup",
        adapted: true,
    },
];

pub fn lookup(id: &str) -> Result<&'static TheoremInfo> {
    CATALOG
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Knobs shared by every check.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub rv_reading: RvReading,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: String,
    pub description: String,
    pub value: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// The logical shape a theorem asserts about its conditions (by index).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Equivalent(Vec<usize>),
    Holds(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Counterexample => "COUNTEREXAMPLE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub adapted: bool,
    pub conditions: Vec<Condition>,
    pub claims: Vec<Claim>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

impl TheoremReport {
    pub fn is_consistent(&self) -> bool {
        self.verdict == Verdict::Consistent
    }

    pub fn condition(&self, label: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.label == label)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.adapted { " [ADAPTED]" } else { "" };
        writeln!(f, "{}{}: {}", self.theorem_id, tag, self.verdict)?;
        for c in &self.conditions {
            write!(f, "  {:<14} {:<5} {}", c.label, c.value, c.description)?;
            if let Some(w) = &c.witness {
                write!(f, " [{w}]")?;
            }
            writeln!(f)?;
        }
        if let Some(v) = &self.violation {
            writeln!(f, "  violation: {v}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Builder {
    conditions: Vec<Condition>,
    claims: Vec<Claim>,
}

impl Builder {
    fn cond(
        &mut self,
        label: impl Into<String>,
        description: impl Into<String>,
        value: bool,
        witness: Option<String>,
    ) -> usize {
        self.conditions.push(Condition {
            label: label.into(),
            description: description.into(),
            value,
            witness,
        });
        self.conditions.len() - 1
    }

    fn equivalent(&mut self, ids: Vec<usize>) {
        self.claims.push(Claim::Equivalent(ids));
    }

    fn holds(&mut self, id: usize) {
        self.claims.push(Claim::Holds(id));
    }

    fn finish(self, info: &TheoremInfo) -> TheoremReport {
        let mut broken = Vec::new();
        for claim in &self.claims {
            match claim {
                Claim::Equivalent(ids) => {
                    let first = self.conditions[ids[0]].value;
                    if ids.iter().any(|&i| self.conditions[i].value != first) {
                        let parts: Vec<String> = ids
                            .iter()
                            .map(|&i| format!("{}={}", self.conditions[i].label, self.conditions[i].value))
                            .collect();
                        broken.push(format!("not equivalent: {}", parts.join(", ")));
                    }
                }
                Claim::Holds(i) => {
                    if !self.conditions[*i].value {
                        broken.push(format!("{} fails", self.conditions[*i].label));
                    }
                }
            }
        }
        let verdict = if broken.is_empty() {
            Verdict::Consistent
        } else {
            Verdict::Counterexample
        };
        let violation = (!broken.is_empty()).then(|| {
            let joined = broken.join("; ");
            if info.adapted {
                format!("adaptation-mismatch: {joined}")
            } else {
                joined
            }
        });
        TheoremReport {
            theorem_id: info.id.to_string(),
            adapted: info.adapted,
            conditions: self.conditions,
            claims: self.claims,
            verdict,
            violation,
        }
    }
}

const ROMAN: [&str; 9] = ["(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)", "(viii)", "(ix)"];

/// First pair of `set` that `rel` does not relate.
fn unrelated_pair(rel: &EquivalenceRelation, set: &ElementSubset) -> Option<(usize, usize)> {
    set.iter()
        .flat_map(|a| set.iter().map(move |b| (a, b)))
        .find(|&(a, b)| !rel.related(a, b))
}

fn all_related(rel: &EquivalenceRelation, set: &ElementSubset) -> (bool, Option<String>) {
    match unrelated_pair(rel, set) {
        None => (true, None),
        Some((a, b)) => (false, Some(format!("{a} and {b} unrelated under {}", rel.kind()))),
    }
}

fn nil_ext(s: &OrderedSemigroup, tau: &TypePredicate<'_>) -> (bool, Option<String>) {
    match nil_extension_of_type(s, tau) {
        Ok(k) => (true, Some(format!("K = {k}"))),
        Err(e) => (false, Some(e.to_string())),
    }
}

fn csl(s: &OrderedSemigroup, tau: &TypePredicate<'_>) -> Result<(bool, Option<String>)> {
    Ok(match is_complete_semilattice_of(s, tau)? {
        Some(c) => (true, Some(format!("classes {c}"))),
        None => (false, None),
    })
}

fn require_partition_scan(s: &OrderedSemigroup, id: &str) -> Result<()> {
    if s.order() > PARTITION_SCAN_LIMIT {
        return Err(Error::PreconditionUnmet {
            id: id.to_string(),
            detail: format!(
                "order {} exceeds the partition scan limit {PARTITION_SCAN_LIMIT}",
                s.order()
            ),
        });
    }
    Ok(())
}

fn require_ideal_scan(s: &OrderedSemigroup, id: &str) -> Result<()> {
    if s.order() > IDEAL_SCAN_LIMIT {
        return Err(Error::PreconditionUnmet {
            id: id.to_string(),
            detail: format!("order {} exceeds the ideal scan limit {IDEAL_SCAN_LIMIT}", s.order()),
        });
    }
    Ok(())
}

/// Evaluates one catalog entry with default options.
pub fn check(s: &OrderedSemigroup, id: &str) -> Result<TheoremReport> {
    check_with(s, id, &CheckOptions::default())
}

pub fn check_with(s: &OrderedSemigroup, id: &str, opts: &CheckOptions) -> Result<TheoremReport> {
    let info = lookup(id)?;
    let mut b = Builder::default();
    match info.id {
        "thm-500" => thm_500(s, &mut b)?,
        "thm-15" => thm_15(s, &mut b),
        "thm-74" => thm_74(s, &mut b)?,
        "cor-76" => cor_76(s, &mut b)?,
        "lem-cao" => lem_cao(s, &mut b)?,
        "lem-ne51" => lem_ne51(s, &mut b, opts),
        "thm-ne511" => thm_ne511(s, &mut b, opts)?,
        "lem-ne53" => lem_ne53(s, &mut b, opts)?,
        "thm-1005" => thm_1005(s, &mut b)?,
        "cor-simple" => cor_simple(s, &mut b)?,
        "cor-rinv-nilext" => cor_rinv_nilext(s, &mut b, opts)?,
        "cor-1114" => cor_1114(s, &mut b, opts, false)?,
        "cor-leftsimple" => cor_1114(s, &mut b, opts, true)?,
        "thm-774-adapted" => thm_774_adapted(s, &mut b),
        _ => unreachable!("catalog and dispatch disagree on {}", info.id),
    }
    Ok(b.finish(info))
}

/// Every catalog entry whose preconditions `s` meets, in catalog order.
pub fn check_all(s: &OrderedSemigroup) -> Vec<TheoremReport> {
    check_all_with(s, &CheckOptions::default())
}

pub fn check_all_with(s: &OrderedSemigroup, opts: &CheckOptions) -> Vec<TheoremReport> {
    CATALOG
        .iter()
        .filter_map(|t| match check_with(s, t.id, opts) {
            Ok(r) => Some(r),
            Err(Error::PreconditionUnmet { .. }) => None,
            Err(e) => panic!("{}: {e}", t.id),
        })
        .collect()
}

fn thm_500(s: &OrderedSemigroup, b: &mut Builder) -> Result<()> {
    if !regularity::is_pi_regular(s) {
        return Err(Error::PreconditionUnmet {
            id: "thm-500".into(),
            detail: "not pi-regular".into(),
        });
    }
    let i = b.cond("(i)", "right pi-inverse", regularity::is_right_pi_inverse(s), None);
    let l = green_star(s, Green::L)?;
    let r = green_star(s, Green::R)?;
    let e = regularity::ordered_idempotents(s);
    let bad = e
        .iter()
        .flat_map(|x| e.iter().map(move |y| (x, y)))
        .find(|&(x, y)| l.related(x, y) && !r.related(x, y));
    let ii = b.cond(
        "(ii)",
        "e L* f implies e R* f for ordered idempotents",
        bad.is_none(),
        bad.map(|(x, y)| format!("{x} L* {y} but not R*")),
    );
    b.equivalent(vec![i, ii]);
    Ok(())
}

fn thm_15(s: &OrderedSemigroup, b: &mut Builder) {
    let i = b.cond("(i)", "right pi-inverse", regularity::is_right_pi_inverse(s), None);
    let r = green(s, Green::R);
    let stuck = s.elements().find(|&a| {
        !s.powers(a).into_iter().any(|p| {
            let inv = regularity::inverses(s, p);
            !inv.is_empty() && unrelated_pair(&r, &inv).is_none()
        })
    });
    let ii = b.cond(
        "(ii)",
        "each element has a power whose nonempty inverse set is pairwise R-related",
        stuck.is_none(),
        stuck.map(|a| format!("no suitable power of {a}")),
    );
    b.equivalent(vec![i, ii]);
}

fn thm_74(s: &OrderedSemigroup, b: &mut Builder) -> Result<()> {
    let pi = regularity::is_pi_inverse(s);
    let pireg = regularity::is_pi_regular(s);
    let e = regularity::ordered_idempotents(s);
    let all = s.all();
    let l = green_star(s, Green::L)?;
    let h = green_star(s, Green::H)?;
    let mut ids = Vec::new();
    let (v, w) = nil_ext(s, &TypePredicate::left_simple().and(TypePredicate::pi_inverse()));
    ids.push(b.cond(ROMAN[0], "nil-extension of a left simple pi-inverse semigroup", v, w));
    ids.push(b.cond(
        ROMAN[1],
        "pi-inverse and l-Archimedean",
        pi && is_archimedean(s, Archimedean::L),
        None,
    ));
    let (v, w) = all_related(&l, &all);
    ids.push(b.cond(ROMAN[2], "pi-inverse and a L* b for all a, b", pi && v, w));
    let (v, w) = all_related(&l, &e);
    ids.push(b.cond(ROMAN[3], "pi-inverse and e L* f for ordered idempotents", pi && v, w));
    let (v, w) = all_related(&h, &e);
    ids.push(b.cond(ROMAN[4], "pi-regular and e H* f for ordered idempotents", pireg && v, w));
    let (v, w) = all_related(&h, &all);
    ids.push(b.cond(ROMAN[5], "pi-regular and a H* b for all a, b", pireg && v, w));
    ids.push(b.cond(
        ROMAN[6],
        "pi-inverse and t-Archimedean",
        pi && is_archimedean(s, Archimedean::T),
        None,
    ));
    let (v, w) = nil_ext(s, &TypePredicate::t_simple().and(TypePredicate::pi_inverse()));
    ids.push(b.cond(ROMAN[7], "nil-extension of a t-simple pi-inverse semigroup", v, w));
    b.equivalent(ids);
    Ok(())
}

fn cor_76(s: &OrderedSemigroup, b: &mut Builder) -> Result<()> {
    let (v, w) = nil_ext(s, &TypePredicate::simple().and(TypePredicate::pi_inverse()));
    let i = b.cond("(i)", "nil-extension of a simple pi-inverse semigroup", v, w);
    let j = green_star(s, Green::J)?;
    let (v, w) = all_related(&j, &regularity::ordered_idempotents(s));
    let ii = b.cond(
        "(ii)",
        "pi-inverse and e J* f for ordered idempotents",
        regularity::is_pi_inverse(s) && v,
        w,
    );
    b.equivalent(vec![i, ii]);
    Ok(())
}

/// Least `k` with `S^k ⊆ ideal`, if the chain of products ever gets there.
fn nilpotency_index(s: &OrderedSemigroup, ideal: &ElementSubset) -> Option<usize> {
    let all = s.all();
    let mut power = all;
    for k in 1..=s.order() + 1 {
        if power.is_subset(ideal) {
            return Some(k);
        }
        let next = s.subset_product(&power, &all);
        if next == power {
            return None;
        }
        power = next;
    }
    None
}

fn lem_cao(s: &OrderedSemigroup, b: &mut Builder) -> Result<()> {
    require_ideal_scan(s, "lem-cao")?;
    for ideal in all_ideals(s, IdealKind::TwoSided)? {
        let k = nilpotency_index(s, &ideal);
        let i = b.cond(
            format!("(i)@{ideal}"),
            "the Rees quotient by the ideal is nilpotent",
            k.is_some(),
            k.map(|k| format!("S^{k} inside")),
        );
        let ne = is_nil_extension(s, &ideal);
        let stuck = ne.exponents.iter().position(Option::is_none);
        let ii = b.cond(
            format!("(ii)@{ideal}"),
            "every element has a power in the ideal",
            stuck.is_none(),
            stuck.map(|a| format!("no power of {a} inside")),
        );
        b.equivalent(vec![i, ii]);
    }
    Ok(())
}

fn lem_ne51(s: &OrderedSemigroup, b: &mut Builder, opts: &CheckOptions) {
    let rv = regularity::rv_set_with(s, opts.rv_reading);
    let div = divisibility(s);
    let divides = |a: usize, c: usize| div[a].contains(c);
    let bad_i = rv
        .iter()
        .flat_map(|c| s.elements().map(move |a| (a, c)))
        .find(|&(a, c)| divides(a, c) && !divides(s.mul(a, a), c));
    let i = b.cond(
        "(i)",
        "a|c implies a²|c for c in RV",
        bad_i.is_none(),
        bad_i.map(|(a, c)| format!("a={a}, c={c}")),
    );
    let bad_ii = rv
        .iter()
        .flat_map(|c| s.elements().flat_map(move |a| s.elements().map(move |x| (a, x, c))))
        .find(|&(a, x, c)| divides(a, c) && divides(x, c) && !divides(s.mul(a, x), c));
    let ii = b.cond(
        "(ii)",
        "a|c and b|c imply ab|c for c in RV",
        bad_ii.is_none(),
        bad_ii.map(|(a, x, c)| format!("a={a}, b={x}, c={c}")),
    );
    b.equivalent(vec![i, ii]);
}

fn class_structures(s: &OrderedSemigroup, c: &CongruencePartition) -> Vec<crate::ideals::Restriction> {
    c.classes()
        .iter()
        .map(|class| restrict(s, class).expect("congruence classes are subsemigroups"))
        .collect()
}

fn thm_ne511(s: &OrderedSemigroup, b: &mut Builder, opts: &CheckOptions) -> Result<()> {
    require_partition_scan(s, "thm-ne511")?;
    let rv = regularity::rv_set_with(s, opts.rv_reading);
    let rinv = regularity::is_right_inverse(s);
    let rpi = regularity::is_right_pi_inverse(s);
    for c in all_complete_semilattice_congruences(s)? {
        let parts = class_structures(s, &c);
        let union = parts.iter().fold(s.empty(), |acc, r| {
            acc.union(&r.lift(&regularity::rv_set_with(&r.semigroup, opts.rv_reading)))
        });
        let i = b.cond(
            format!("(i)@{c}"),
            "RV(S) is the union of the RV sets of the classes",
            union == rv,
            Some(format!("RV(S) = {rv}, union = {union}")),
        );
        b.holds(i);
        let ii_s = b.cond(format!("(ii)@{c}:S"), "S is right inverse", rinv, None);
        let ii_c = b.cond(
            format!("(ii)@{c}:classes"),
            "every class is right inverse",
            parts.iter().all(|r| regularity::is_right_inverse(&r.semigroup)),
            None,
        );
        b.equivalent(vec![ii_s, ii_c]);
        let iii_s = b.cond(format!("(iii)@{c}:S"), "S is right pi-inverse", rpi, None);
        let iii_c = b.cond(
            format!("(iii)@{c}:classes"),
            "every class is right pi-inverse",
            parts.iter().all(|r| regularity::is_right_pi_inverse(&r.semigroup)),
            None,
        );
        b.equivalent(vec![iii_s, iii_c]);
    }
    Ok(())
}

fn lem_ne53(s: &OrderedSemigroup, b: &mut Builder, opts: &CheckOptions) -> Result<()> {
    require_ideal_scan(s, "lem-ne53")?;
    if regularity::regular_set(s).is_empty() {
        return Err(Error::PreconditionUnmet {
            id: "lem-ne53".into(),
            detail: "no regular elements".into(),
        });
    }
    let rv = regularity::rv_set_with(s, opts.rv_reading);
    let l = green(s, Green::L);
    for k in all_ideals(s, IdealKind::TwoSided)? {
        if !is_nil_extension(s, &k).holds {
            continue;
        }
        let outside = rv.difference(&k);
        let i = b.cond(
            format!("(i)@{k}"),
            "RV is inside the ideal",
            outside.is_empty(),
            outside.first().map(|a| format!("{a} outside")),
        );
        b.holds(i);
        let leaking = rv.iter().find(|&a| !l.class_of(a).is_subset(&k));
        let ii = b.cond(
            format!("(ii)@{k}"),
            "L-classes meeting RV are inside the ideal",
            leaking.is_none(),
            leaking.map(|a| format!("L-class of {a} leaves the ideal")),
        );
        b.holds(ii);
    }
    Ok(())
}

fn thm_1005(s: &OrderedSemigroup, b: &mut Builder) -> Result<()> {
    let rpi = regularity::is_right_pi_inverse(s);
    let pi = regularity::is_pi_inverse(s);
    let pireg = regularity::is_pi_regular(s);
    let e = regularity::ordered_idempotents(s);
    let all = s.all();
    let l = green_star(s, Green::L)?;
    let h = green_star(s, Green::H)?;
    let t_arch = is_archimedean(s, Archimedean::T);
    let mut ids = Vec::new();
    let (v, w) = nil_ext(s, &TypePredicate::left_simple().and(TypePredicate::right_pi_inverse()));
    ids.push(b.cond(
        ROMAN[0],
        "nil-extension of a left simple right pi-inverse semigroup",
        v,
        w,
    ));
    ids.push(b.cond(
        ROMAN[1],
        "right pi-inverse and l-Archimedean",
        rpi && is_archimedean(s, Archimedean::L),
        None,
    ));
    let (v, w) = all_related(&l, &all);
    ids.push(b.cond(ROMAN[2], "right pi-inverse and a L* b for all a, b", rpi && v, w));
    let (v, w) = all_related(&l, &e);
    ids.push(b.cond(
        ROMAN[3],
        "right pi-inverse and e L* f for ordered idempotents",
        rpi && v,
        w,
    ));
    let (v, w) = all_related(&h, &e);
    ids.push(b.cond(ROMAN[4], "pi-regular and e H* f for ordered idempotents", pireg && v, w));
    let (v, w) = all_related(&h, &all);
    ids.push(b.cond(ROMAN[5], "pi-regular and a H* b for all a, b", pireg && v, w));
    ids.push(b.cond(ROMAN[6], "pi-inverse and t-Archimedean", pi && t_arch, None));
    ids.push(b.cond(ROMAN[7], "right pi-inverse and t-Archimedean", rpi && t_arch, None));
    let (v, w) = nil_ext(s, &TypePredicate::t_simple().and(TypePredicate::right_pi_inverse()));
    ids.push(b.cond(ROMAN[8], "nil-extension of a t-simple right pi-inverse semigroup", v, w));
    b.equivalent(ids);
    Ok(())
}

fn cor_simple(s: &OrderedSemigroup, b: &mut Builder) -> Result<()> {
    let rpi = regularity::is_right_pi_inverse(s);
    let j = green_star(s, Green::J)?;
    let mut ids = Vec::new();
    let (v, w) = nil_ext(s, &TypePredicate::simple().and(TypePredicate::right_pi_inverse()));
    ids.push(b.cond(ROMAN[0], "nil-extension of a simple right pi-inverse semigroup", v, w));
    let (v, w) = all_related(&j, &regularity::ordered_idempotents(s));
    ids.push(b.cond(
        ROMAN[1],
        "right pi-inverse and e J* f for ordered idempotents",
        rpi && v,
        w,
    ));
    let (v, w) = all_related(&j, &s.all());
    ids.push(b.cond(ROMAN[2], "right pi-inverse and a J* b for all a, b", rpi && v, w));
    let stuck = s
        .elements()
        .flat_map(|a| s.elements().map(move |x| (a, x)))
        .find(|&(a, x)| {
            let target = s.downset(&s.two_sided_multiples(x));
            !s.powers(a).into_iter().any(|p| target.contains(p))
        });
    ids.push(b.cond(
        ROMAN[3],
        "right pi-inverse and every a has a power in (SbS] for every b",
        rpi && stuck.is_none(),
        stuck.map(|(a, x)| format!("no power of {a} in (S{x}S]")),
    ));
    ids.push(b.cond(
        ROMAN[4],
        "right pi-inverse and Archimedean",
        rpi && is_archimedean(s, Archimedean::TwoSided),
        None,
    ));
    b.equivalent(ids);
    Ok(())
}

fn cor_rinv_nilext(s: &OrderedSemigroup, b: &mut Builder, opts: &CheckOptions) -> Result<()> {
    require_ideal_scan(s, "cor-rinv-nilext")?;
    let k = nil_extension_of_type_any_ideal(s, &TypePredicate::right_inverse())?;
    let lhs = b.cond(
        "lhs",
        "nil-extension of a right inverse semigroup",
        k.is_some(),
        k.map(|k| format!("K = {k}")),
    );
    let rv = regularity::rv_set_with(s, opts.rv_reading);
    let rpi = regularity::is_right_pi_inverse(s);
    b.cond("(i)", "right pi-inverse", rpi, None);
    let closure = |rel: &dyn Fn(usize, usize) -> bool| {
        s.elements()
            .flat_map(|a| rv.iter().map(move |x| (a, x)))
            .find(|&(a, x)| rel(a, x) && !rv.contains(a))
    };
    let failures = [
        (
            "(ii)",
            "a ≤ ba with b in RV implies a in RV",
            closure(&|a, x| s.leq(a, s.mul(x, a))),
        ),
        (
            "(iii)",
            "a ≤ ab with b in RV implies a in RV",
            closure(&|a, x| s.leq(a, s.mul(a, x))),
        ),
        (
            "(iv)",
            "a ≤ b with b in RV implies a in RV",
            closure(&|a, x| s.leq(a, x)),
        ),
    ];
    let mut conj = rpi;
    for (label, description, bad) in failures {
        conj &= bad.is_none();
        b.cond(
            label,
            description,
            bad.is_none(),
            bad.map(|(a, x)| format!("a={a}, b={x}")),
        );
    }
    let rhs = b.cond("rhs", "(i) through (iv) together", conj, None);
    b.equivalent(vec![lhs, rhs]);
    Ok(())
}

fn cor_1114(s: &OrderedSemigroup, b: &mut Builder, opts: &CheckOptions, left: bool) -> Result<()> {
    require_partition_scan(s, if left { "cor-leftsimple" } else { "cor-1114" })?;
    let (base, base_name, arch, arch_name) = if left {
        (
            TypePredicate::left_simple as fn() -> TypePredicate<'static>,
            "left simple",
            Archimedean::L,
            "l-Archimedean",
        )
    } else {
        (
            TypePredicate::simple as fn() -> TypePredicate<'static>,
            "simple",
            Archimedean::TwoSided,
            "Archimedean",
        )
    };
    let (v, w) = csl(
        s,
        &TypePredicate::nil_extension_of(base().and(TypePredicate::right_pi_inverse())),
    )?;
    let i = b.cond(
        "(i)",
        format!("complete semilattice of nil-extensions of {base_name} right pi-inverse semigroups"),
        v,
        w,
    );
    let (v, w) = csl(s, &TypePredicate::nil_extension_of(base()))?;
    let intra = regularity::pi_intra_set(s);
    let pirv = regularity::pi_rv_set_with(s, opts.rv_reading);
    let ii = b.cond(
        "(ii)",
        format!("complete semilattice of nil-extensions of {base_name} semigroups and ΠIntra = ΠRV"),
        v && intra == pirv,
        Some(format!(
            "ΠIntra = {intra}, ΠRV = {pirv}{}",
            w.map(|w| format!(", {w}")).unwrap_or_default()
        )),
    );
    let (v, w) = csl(s, &TypePredicate::new(arch_name, move |x| is_archimedean(x, arch)))?;
    let iii = b.cond(
        "(iii)",
        format!("right pi-inverse and complete semilattice of {arch_name} semigroups"),
        regularity::is_right_pi_inverse(s) && v,
        w,
    );
    b.equivalent(vec![i, ii, iii]);
    Ok(())
}

fn thm_774_adapted(s: &OrderedSemigroup, b: &mut Builder) {
    let (v, w) = nil_ext(s, &TypePredicate::t_simple());
    let i = b.cond("(i)", "nil-extension of a t-simple semigroup", v, w);
    let intra = regularity::pi_intra_set(s);
    let ii = b.cond(
        "(ii)",
        "t-Archimedean with ΠIntra nonempty",
        is_archimedean(s, Archimedean::T) && !intra.is_empty(),
        None,
    );
    b.equivalent(vec![i, ii]);
}
