//! The full property report behind `ordsemi analyze`.

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::decomposition::least_complete_semilattice_congruence;
use crate::expr::Atom;
use crate::ideals::kernel;
use crate::regularity::{self, RvReading};
use crate::relations::{green, green_star, Green};
use crate::semigroup::OrderedSemigroup;
use crate::subset::ElementSubset;
use crate::theorems::{check_with, CheckOptions, TheoremReport, CATALOG};

fn elems(set: &ElementSubset) -> Value {
    json!(set.to_vec())
}

fn classes(list: &[ElementSubset]) -> Value {
    Value::Array(list.iter().map(elems).collect())
}

/// Catalog reports computed on the current rayon pool, in catalog order.
pub fn theorem_reports(s: &OrderedSemigroup, opts: &CheckOptions) -> Vec<TheoremReport> {
    CATALOG
        .par_iter()
        .filter_map(|t| check_with(s, t.id, opts).ok())
        .collect()
}

/// Everything `analyze` prints, as JSON with sorted keys.
pub fn analyze(s: &OrderedSemigroup, reading: RvReading) -> Value {
    let opts = CheckOptions { rv_reading: reading };
    let atoms: Map<String, Value> = Atom::ALL
        .iter()
        .map(|a| (a.keyword().to_string(), Value::Bool(a.holds(s))))
        .collect();
    let mut plain = Map::new();
    let mut starred = Map::new();
    for g in Green::ALL {
        plain.insert(format!("{g:?}"), classes(&green(s, g).classes()));
        let star = green_star(s, g).expect("finite structures are pi-regular");
        starred.insert(format!("{g:?}*"), classes(&star.classes()));
    }
    let profile = regularity::profile(s);
    let elements: Vec<Value> = profile
        .elements
        .iter()
        .enumerate()
        .map(|(a, e)| {
            json!({
                "element": a,
                "regular": e.is_regular,
                "pi_witness": e.pi_witness,
                "intra_witness": e.intra_witness,
                "inverses": elems(&regularity::inverses(s, a)),
            })
        })
        .collect();
    let least = least_complete_semilattice_congruence(s);
    let reports = theorem_reports(s, &opts);
    json!({
        "structure": serde_json::from_str::<Value>(&s.to_json()).expect("own json"),
        "atoms": atoms,
        "green": plain,
        "green_star": starred,
        "kernel": elems(&kernel(s)),
        "least_complete_semilattice_congruence": classes(least.classes()),
        "sets": {
            "regular": elems(&regularity::regular_set(s)),
            "ordered_idempotents": elems(&regularity::ordered_idempotents(s)),
            "pi_regular": elems(&regularity::pi_regular_set(s)),
            "pi_intra": elems(&regularity::pi_intra_set(s)),
            "rv": elems(&regularity::rv_set_with(s, reading)),
            "pi_rv": elems(&regularity::pi_rv_set_with(s, reading)),
        },
        "elements": elements,
        "theorems": serde_json::to_value(&reports).expect("reports serialize"),
    })
}
