//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::io::Write as _;
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

use common::Naive;
use ordsemi::decomposition::{
    all_complete_semilattice_congruences, is_complete_semilattice_congruence, least_complete_semilattice_congruence,
    satisfies_semilattice_family, Partition,
};
use ordsemi::enumeration::{canonical_form, enumerate_ordered_semigroups, enumerate_tables, Dedup};
use ordsemi::{fixtures, OrderedSemigroup};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ordsemi"))
}

fn run(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let out = bin().args(args).output().expect("spawn ordsemi");
    (out, start.elapsed())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn write_fixture(dir: &Path, name: &str, s: &OrderedSemigroup) -> String {
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, s.to_json()).unwrap();
    path.to_str().unwrap().to_string()
}

fn naive_intra_pi_regular(o: &Naive) -> bool {
    (0..o.n).all(|a| {
        (1..=o.n).any(|m| {
            let am = o.pow(a, m);
            let a2m = o.pow(a, 2 * m);
            (0..o.n).any(|x| (0..o.n).any(|y| o.le[am][o.t[o.t[x][a2m]][y]]))
        })
    })
}

fn naive_atom(o: &Naive, keyword: &str) -> bool {
    match keyword {
        "simple" => o.simple(),
        "left-simple" => o.left_simple(),
        "t-simple" => o.t_simple(),
        "regular" => (0..o.n).all(|a| o.regular(a)),
        "pi-regular" => o.pi_regular(),
        "intra-pi-regular" => naive_intra_pi_regular(o),
        "right-inverse" => o.right_inverse(),
        "right-pi-inverse" => o.right_pi_inverse(),
        "left-pi-inverse" => o.left_pi_inverse(),
        "pi-inverse" => o.pi_inverse(),
        "archimedean" => o.archimedean('t'),
        "l-archimedean" => o.archimedean('l'),
        "r-archimedean" => o.archimedean('r'),
        "t-archimedean" => o.archimedean('T'),
        other => panic!("no oracle for {other}"),
    }
}

fn expected_literals(name: &str) -> &'static [(&'static str, bool)] {
    match name {
        "T1" => &[
            ("simple", true),
            ("left-simple", true),
            ("t-simple", true),
            ("regular", true),
            ("right-inverse", true),
            ("pi-inverse", true),
            ("archimedean", true),
            ("t-archimedean", true),
        ],
        "LZ2" => &[
            ("left-simple", true),
            ("right-pi-inverse", false),
            ("l-archimedean", true),
            ("t-archimedean", false),
        ],
        "RZ2" => &[("right-pi-inverse", true), ("pi-inverse", false)],
        "N2" => &[
            ("right-pi-inverse", true),
            ("l-archimedean", true),
            ("t-archimedean", true),
        ],
        "SL2" => &[("simple", false), ("archimedean", false)],
        _ => &[],
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (name, s) in fixtures::all() {
        let path = write_fixture(dir.path(), name, &s);
        let (out, _) = run(&["analyze", &path, "--json"]);
        ensure(out.status.success(), || {
            format!("analyze {name} exited {:?}", out.status.code())
        })?;
        let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let oracle = Naive::of(&s);
        for (k, v) in report["atoms"].as_object().ok_or("no atoms")? {
            let want = naive_atom(&oracle, k);
            ensure(v.as_bool() == Some(want), || {
                format!("{name} {k}: report {v}, oracle {want}")
            })?;
        }
        for &(k, want) in expected_literals(name) {
            ensure(report["atoms"][k].as_bool() == Some(want), || {
                format!("{name} {k} expected {want}")
            })?;
        }
        let thm = report["theorems"]
            .as_array()
            .and_then(|ts| ts.iter().find(|t| t["theorem_id"] == "thm-1005"))
            .ok_or("thm-1005 missing")?;
        let values: Vec<bool> = thm["conditions"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["value"].as_bool().unwrap())
            .collect();
        ensure(values.len() == 9, || format!("{name}: {} conditions", values.len()))?;
        if name == "N2" || name == "T1" {
            ensure(values.iter().all(|&v| v), || {
                format!("{name}: thm-1005 conditions {values:?}")
            })?;
        }
        if name == "RZ2" || name == "SL2" {
            ensure(values.iter().all(|&v| !v), || {
                format!("{name}: thm-1005 conditions {values:?}")
            })?;
        }
    }
    // analyze spawns one process per fixture; the budget is per fixture
    let per = start.elapsed() / 5;
    ensure(per < Duration::from_secs(1), || format!("{per:?} per fixture"))?;
    Ok(format!("5 fixtures match oracle and literals, {per:.0?} each"))
}

fn criterion_2() -> Check {
    let mut notes = Vec::new();
    for order in ["2", "3"] {
        let (out, t) = run(&["verify", "--order", order, "--all"]);
        ensure(out.status.success(), || {
            format!(
                "order {order} exited {:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stdout)
            )
        })?;
        notes.push(format!("order {order} in {t:.1?}"));
    }
    Ok(notes.join(", "))
}

fn criterion_3() -> Check {
    let (out, t) = run(&["verify", "--order", "4", "--theorem", "thm-1005"]);
    ensure(out.status.success(), || format!("exited {:?}", out.status.code()))?;
    Ok(format!("full raw order-4 sweep in {t:.1?}"))
}

fn criterion_4() -> Check {
    let known = [1usize, 8, 113];
    for n in 1..=3 {
        let ours = enumerate_tables(n).map_err(|e| e.to_string())?.count();
        let naive = common::all_associative_tables(n).len();
        ensure(ours == naive && ours == known[n - 1], || {
            format!("n={n}: {ours} vs naive {naive}")
        })?;
        let ordered = enumerate_ordered_semigroups(n, Dedup::Raw)
            .map_err(|e| e.to_string())?
            .count();
        let naive_ordered = common::naive_ordered_semigroup_count(n);
        ensure(ordered == naive_ordered, || {
            format!("n={n}: ordered {ordered} vs naive {naive_ordered}")
        })?;
    }
    Ok("tables 1/8/113, ordered counts equal naive filter".into())
}

fn criterion_5() -> Check {
    let (out, t) = run(&[
        "search",
        "--order",
        "2",
        "--where",
        "right-pi-inverse & !pi-inverse",
        "--first",
    ]);
    ensure(out.status.success(), || format!("exited {:?}", out.status.code()))?;
    let found = OrderedSemigroup::from_json(String::from_utf8_lossy(&out.stdout).trim()).map_err(|e| e.to_string())?;
    ensure(canonical_form(&found) == canonical_form(&fixtures::rz2()), || {
        format!("found {found:?}")
    })?;
    ensure(t < Duration::from_secs(1), || format!("took {t:?}"))?;
    Ok(format!("RZ2 up to isomorphism in {t:.0?}"))
}

fn structures_up_to_three() -> Vec<OrderedSemigroup> {
    (1..=3)
        .flat_map(|n| enumerate_ordered_semigroups(n, Dedup::Raw).unwrap())
        .collect()
}

fn criterion_6() -> Check {
    let all = structures_up_to_three();
    let select = |f: &dyn Fn(&Naive) -> bool| -> BTreeSet<usize> {
        all.iter()
            .enumerate()
            .filter(|(_, s)| f(&Naive::of(s)))
            .map(|(i, _)| i)
            .collect()
    };
    let ii = select(&|o| o.right_pi_inverse() && o.archimedean('l'));
    let vii = select(&|o| o.pi_inverse() && o.archimedean('T'));
    let viii = select(&|o| o.right_pi_inverse() && o.archimedean('T'));
    ensure(ii == viii, || format!("l-arch {} vs t-arch {}", ii.len(), viii.len()))?;
    ensure(vii == viii, || {
        format!("pi-inverse {} vs right-pi-inverse {}", vii.len(), viii.len())
    })?;
    let lib = |text: &str| -> BTreeSet<usize> {
        let e = text.parse().unwrap();
        all.iter()
            .enumerate()
            .filter(|(_, s)| ordsemi::expr::evaluate(s, &e).unwrap())
            .map(|(i, _)| i)
            .collect()
    };
    ensure(lib("right-pi-inverse & l-archimedean") == ii, || {
        "library l-arch set disagrees with oracle".into()
    })?;
    ensure(lib("pi-inverse & t-archimedean") == vii, || {
        "library pi-inverse set disagrees with oracle".into()
    })?;
    ensure(lib("right-pi-inverse & t-archimedean") == viii, || {
        "library t-arch set disagrees with oracle".into()
    })?;
    Ok(format!("{} structures, {} in each set", all.len(), viii.len()))
}

fn criterion_7() -> Check {
    let mut partitions = 0usize;
    for s in structures_up_to_three() {
        let least = least_complete_semilattice_congruence(&s);
        for p in Partition::all(s.order()) {
            partitions += 1;
            let a = is_complete_semilattice_congruence(&s, &p);
            let b = satisfies_semilattice_family(&s, &p);
            ensure(a == b, || format!("{s:?} {:?}: congruence {a}, family {b}", p.labels()))?;
        }
        for c in all_complete_semilattice_congruences(&s).map_err(|e| e.to_string())? {
            ensure(least.partition().refines(c.partition()), || {
                format!("{s:?}: least not below {:?}", c.classes())
            })?;
        }
    }
    Ok(format!("{partitions} structure-partition pairs agree"))
}

fn criterion_8() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut runs = vec![
        vec!["verify", "--order", "3", "--all", "--json"],
        vec!["verify", "--order", "3", "--all"],
    ];
    let paths: Vec<String> = fixtures::all()
        .iter()
        .map(|(n, s)| write_fixture(dir.path(), n, s))
        .collect();
    for p in &paths {
        runs.push(vec!["analyze", p, "--json"]);
        runs.push(vec!["analyze", p]);
    }
    for args in &runs {
        let outputs: Vec<Vec<u8>> = ["1", "4"]
            .iter()
            .map(|j| {
                let mut a = args.clone();
                a.extend(["--jobs", j]);
                run(&a).0.stdout
            })
            .collect();
        ensure(!outputs[0].is_empty() && outputs[0] == outputs[1], || {
            format!("{args:?} differs")
        })?;
    }
    Ok(format!("{} invocations identical under --jobs 1 and 4", runs.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("fixture truth table", criterion_1),
        ("exhaustive verify, orders 2 and 3", criterion_2),
        ("order-4 sweep of thm-1005", criterion_3),
        ("enumeration counts", criterion_4),
        ("separation witness", criterion_5),
        ("archimedean variants coincide up to order 3", criterion_6),
        ("dual semilattice checkers", criterion_7),
        ("determinism across worker counts", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(note) => println!("criterion {}: PASS  {name}  ({note})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}  ({why})", i + 1);
            }
        }
        std::io::stdout().flush().ok();
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
