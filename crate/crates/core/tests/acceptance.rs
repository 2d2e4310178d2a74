//! Acceptance suite: one line per criterion, non-zero exit on any failure.

mod common;

use std::time::Instant;

use matroid_union::axioms::{is_matroid, SetSystem};
use matroid_union::catalog::{catalog, same_ground_pairs};
use matroid_union::infinitary::demos::{demo_growth_chain, demo_window_monotone, Demo};
use matroid_union::infinitary::family::{
    nearly_finitary_gap, Component, Copies, Gap, GapVerdict, Kind, SymbolicFamily,
};
use matroid_union::infinitary::ladder::ladder_demo;
use matroid_union::packing::{
    cover_independent, covering_condition, minor_rank_identity_check, pack_bases, tree_pack, Graph,
};
use matroid_union::union::{
    apply_chain, augment, cochain_augment, reachability, union_membership, validate_chain, Augmentation,
    CochainAugmentation, Representation,
};
use matroid_union::{Matroid, Subset};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rep_of(m1: &Matroid, m2: &Matroid, x: Subset) -> Representation {
    let (a, b) = common::split(m1, m2, x).expect("member of the union family");
    Representation::new(a, b)
}

/// Finite union: the paired family is a matroid and membership matches brute force.
fn criterion_1() -> Outcome {
    let pairs = same_ground_pairs(7);
    ensure!(pairs.len() >= 200, "only {} pairs", pairs.len());
    let mut subsets = 0usize;
    for (a, b) in &pairs {
        let (m1, m2) = (&a.matroid, &b.matroid);
        let family = SetSystem::union_family(m1, m2).map_err(|e| e.to_string())?;
        let report = is_matroid(&family);
        ensure!(report.passed(), "{} v {}: {:?}", a.name, b.name, report.witness());
        for x in common::subsets(m1.len()) {
            subsets += 1;
            let got = union_membership(m1, m2, x).map_err(|e| e.to_string())?;
            let expect = common::split(m1, m2, x).is_some();
            ensure!(got.is_some() == expect, "{} v {}: membership of {x:?}", a.name, b.name);
            ensure!(family.contains(x) == expect, "{} v {}: family of {x:?}", a.name, b.name);
            if let Some(r) = got {
                ensure!(
                    r.is_valid(m1, m2) && r.set() == x,
                    "{} v {}: bad representation",
                    a.name,
                    b.name
                );
            }
        }
    }
    Ok(format!("{} pairs, {subsets} subsets", pairs.len()))
}

/// Chains from every reachability set validate and re-certify after application.
fn criterion_2() -> Outcome {
    let pairs = same_ground_pairs(7);
    let (mut sets, mut chains) = (0usize, 0usize);
    for (a, b) in &pairs {
        let (m1, m2) = (&a.matroid, &b.matroid);
        for x in common::maximal(&common::union_family(m1, m2))
            .into_iter()
            .chain(std::iter::once(m1.all()))
        {
            let Some(rep) = union_membership(m1, m2, x).map_err(|e| e.to_string())? else {
                continue;
            };
            for t in x {
                let reach = reachability(m1, m2, &rep, t).map_err(|e| e.to_string())?;
                sets += 1;
                ensure!(
                    reach.property_two_violation(m1).is_none(),
                    "{} v {}: property (2)",
                    a.name,
                    b.name
                );
                for (&y, ch) in &reach.chains {
                    chains += 1;
                    validate_chain(m1, m2, ch, &rep).map_err(|e| format!("{} v {}: {e}", a.name, b.name))?;
                    let out = apply_chain(m1, m2, ch, &rep).map_err(|e| e.to_string())?;
                    let both = rep.first.contains(t) && rep.second.contains(t);
                    let expect = if ch.is_empty() || both {
                        x.with(y)
                    } else {
                        x.with(y).without(t)
                    };
                    ensure!(
                        out.set() == expect,
                        "{} v {}: chain {:?} gave {:?}",
                        a.name,
                        b.name,
                        ch.nodes,
                        out
                    );
                    ensure!(
                        union_membership(m1, m2, out.set())
                            .map_err(|e| e.to_string())?
                            .is_some(),
                        "{} v {}: result not re-certified",
                        a.name,
                        b.name
                    );
                }
            }
        }
    }
    Ok(format!(
        "{} pairs, {sets} reachability sets, {chains} chains",
        pairs.len()
    ))
}

/// Exchange (I3′) and cochain augmentation, exhaustively on small grounds.
fn criterion_3() -> Outcome {
    let pairs = same_ground_pairs(6);
    let (mut aug, mut co) = (0usize, 0usize);
    for (a, b) in &pairs {
        let (m1, m2) = (&a.matroid, &b.matroid);
        let family = common::union_family(m1, m2);
        let maxes = common::maximal(&family);
        for &bset in &maxes {
            let brep = rep_of(m1, m2, bset);
            for &iset in &family {
                let irep = rep_of(m1, m2, iset);
                for x in iset - bset {
                    aug += 1;
                    match augment(m1, m2, &brep, &irep, x).map_err(|e| e.to_string())? {
                        Augmentation::Exchanged { y, rep } => {
                            ensure!((bset - iset).contains(y), "{} v {}: y outside B \\ I", a.name, b.name);
                            ensure!(
                                rep.is_valid(m1, m2) && rep.set() == iset.with(y).without(x),
                                "{} v {}: augment gave {rep:?}",
                                a.name,
                                b.name
                            );
                        }
                        Augmentation::NotMaximal { .. } => {
                            return Err(format!("{} v {}: maximal B reported non-maximal", a.name, b.name));
                        }
                    }
                }
            }
        }
        for &iset in &family {
            let irep = rep_of(m1, m2, iset);
            for &jset in &maxes {
                for y in jset - iset {
                    co += 1;
                    match cochain_augment(m1, m2, &irep, jset, y).map_err(|e| e.to_string())? {
                        CochainAugmentation::Independent(rep) => {
                            ensure!(
                                rep.is_valid(m1, m2) && rep.set() == iset.with(y),
                                "{} v {}: cochain",
                                a.name,
                                b.name
                            );
                        }
                        CochainAugmentation::Exchanged { x, rep } => {
                            ensure!((iset - jset).contains(x), "{} v {}: x outside I \\ J", a.name, b.name);
                            ensure!(
                                rep.is_valid(m1, m2) && rep.set() == iset.with(y).without(x),
                                "{} v {}: cochain gave {rep:?}",
                                a.name,
                                b.name
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} pairs, {aug} augmentations, {co} cochain augmentations",
        pairs.len()
    ))
}

/// `|I \ B| <= |B \ I|` for independent `I` and bases `B`.
fn criterion_4() -> Outcome {
    let mut checks = 0usize;
    let cat = catalog(8);
    for e in &cat {
        let ind = common::independent_sets(&e.matroid);
        for b in common::bases(&e.matroid) {
            for &i in &ind {
                checks += 1;
                ensure!((i - b).len() <= (b - i).len(), "{}: I={i:?} B={b:?}", e.name);
            }
        }
    }
    Ok(format!("{} matroids, {checks} pairs (I, B)", cat.len()))
}

/// `M[k]` is a matroid equal to the rank-(r-k) truncation.
fn criterion_5() -> Outcome {
    let mut count = 0usize;
    for e in catalog(7) {
        let r = common::rank(&e.matroid, e.matroid.all());
        for k in 0..=3.min(r) {
            let mk = e.matroid.mk(k).map_err(|err| err.to_string())?;
            let family = SetSystem::from_matroid(&mk).map_err(|err| err.to_string())?;
            ensure!(is_matroid(&family).passed(), "{}[{k}] is not a matroid", e.name);
            for x in common::subsets(e.matroid.len()) {
                let expect = e.matroid.is_independent(x) && x.len() + k <= r;
                ensure!(mk.is_independent(x) == expect, "{}[{k}] at {x:?}", e.name);
            }
            count += 1;
        }
    }
    Ok(format!("{count} pairs (M, k)"))
}

/// Packing and covering verdicts against brute force, the dual form, and the minor identity.
fn criterion_6() -> Outcome {
    let (mut runs, mut identities) = (0usize, 0usize);
    for e in catalog(6) {
        let m = &e.matroid;
        for k in 1..=3 {
            runs += 1;
            let p = pack_bases(m, k).map_err(|err| err.to_string())?;
            ensure!(
                p.packable == common::disjoint_bases(m, k),
                "{} k={k}: packing verdict",
                e.name
            );
            ensure!(p.certified(m), "{} k={k}: packing certificate", e.name);
            if k >= 2 {
                let dual = m.dual();
                let all = common::subsets(m.len()).all(|x| common::in_i_nkc(&dual, k, k - 1, x));
                ensure!(all == p.packable, "{} k={k}: brute dual form", e.name);
                ensure!(p.dual_check == Some(p.packable), "{} k={k}: dual cross-check", e.name);
            }
            let c = cover_independent(m, k).map_err(|err| err.to_string())?;
            let brute = common::coverable(m, k);
            ensure!(c.coverable == brute, "{} k={k}: covering verdict", e.name);
            let cond = covering_condition(m, k).map_err(|err| err.to_string())?;
            ensure!(cond.is_none() == brute, "{} k={k}: covering rank condition", e.name);
            ensure!(c.certified(m), "{} k={k}: covering certificate", e.name);
        }
        for y in common::subsets(m.len()) {
            for z in y.subsets() {
                identities += 1;
                ensure!(
                    minor_rank_identity_check(m, y, z).map_err(|err| err.to_string())?,
                    "{}: identity at Y={y:?} Z={z:?}",
                    e.name
                );
                let left = common::rank(m, m.all()) - common::rank(m, m.all() - z);
                ensure!(
                    left == m.relative_rank(m.all(), m.all() - z).unwrap(),
                    "{}: relative rank",
                    e.name
                );
            }
        }
    }
    Ok(format!("{runs} packing/covering runs, {identities} identities"))
}

/// Certified growth chains of 10 steps, and window monotonicity up to window 8.
fn criterion_7() -> Outcome {
    let demos = [
        Demo::Claim32,
        Demo::Obs46a { k: 1 },
        Demo::Obs46b,
        Demo::Prop22 { tag: "c".into() },
    ];
    for d in &demos {
        let chain = demo_growth_chain(d, 1, 10).map_err(|e| e.to_string())?;
        ensure!(chain.steps.len() == 11, "{}: {} sets", d.name(), chain.steps.len());
        ensure!(
            chain.certify().map_err(|e| e.to_string())?,
            "{}: chain not certified",
            d.name()
        );
        ensure!(
            chain.steps.iter().all(|s| s.saturated_dependent != Some(false)),
            "{}: saturated set in the union",
            d.name()
        );
        for w in 1..8 {
            ensure!(
                demo_window_monotone(d, w).map_err(|e| e.to_string())?,
                "{}: window {w}",
                d.name()
            );
        }
    }
    Ok("claim32, obs46a, obs46b, prop22: 10 strict steps each; windows 1..8 monotone".into())
}

/// The doubled ladder: nested unions of disjoint base pairs.
fn criterion_8() -> Outcome {
    for n in 2..=4 {
        let r = ladder_demo(n).map_err(|e| e.to_string())?;
        ensure!(r.certified(), "n={n}: not certified");
        ensure!(
            r.ground.names(r.difference) == ["r1b"],
            "n={n}: difference {:?}",
            r.ground.names(r.difference)
        );
        let low = r.bases[0] | r.bases[1];
        let high = r.bases[2] | r.bases[3];
        ensure!(low.is_subset(&high) && high.len() == low.len() + 1, "n={n}: inclusion");
    }
    Ok("rungs 2, 3, 4: B1 ∪ B2 + r1b = B3 ∪ B4".into())
}

/// Gap values for one and for infinitely many infinite circuits.
fn criterion_9() -> Outcome {
    let comp = |copies| Component {
        kind: Kind::InfiniteCircuit,
        tag: "c".into(),
        copies,
        k: None,
        matroid: None,
    };
    let one = SymbolicFamily::new("C", vec![comp(Copies::Finite(1))]).map_err(|e| e.to_string())?;
    let r = nearly_finitary_gap(&one, 2..=8).map_err(|e| e.to_string())?;
    ensure!(
        r.total == Gap::Finite(1) && r.verdict == GapVerdict::NearlyFinitary,
        "single circuit: {r:?}"
    );
    ensure!(r.components.iter().all(|c| c.stable), "single circuit unstable");
    let many = SymbolicFamily::new("N", vec![comp(Copies::Infinite)]).map_err(|e| e.to_string())?;
    let r = nearly_finitary_gap(&many, 2..=8).map_err(|e| e.to_string())?;
    ensure!(
        r.total == Gap::Infinite && r.verdict == GapVerdict::NotNearlyFinitary,
        "sum: {r:?}"
    );
    ensure!(
        r.components.iter().all(|c| c.per_copy == 1 && c.stable),
        "sum: per-component {r:?}"
    );
    Ok("single circuit total 1; countable sum total inf; stable on windows 2..8".into())
}

fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Graph {
    Graph {
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        edges: edges
            .iter()
            .map(|(e, u, v)| (e.to_string(), u.to_string(), v.to_string()))
            .collect(),
    }
}

/// Spanning-tree packing on K4 and a tree with one chord.
fn criterion_10() -> Outcome {
    let k4 = graph(
        &["1", "2", "3", "4"],
        &[
            ("a", "1", "2"),
            ("b", "1", "3"),
            ("c", "1", "4"),
            ("d", "2", "3"),
            ("e", "2", "4"),
            ("f", "3", "4"),
        ],
    );
    let r = tree_pack(&k4, 2).map_err(|e| e.to_string())?;
    let m = k4.matroid().map_err(|e| e.to_string())?;
    ensure!(r.packable && r.bases.len() == 2 && r.certified(&m), "K4: {r:?}");
    ensure!(common::disjoint_bases(&m, 2), "K4 brute force");
    let chord = graph(
        &["1", "2", "3", "4", "5", "6"],
        &[
            ("a", "1", "2"),
            ("b", "2", "3"),
            ("c", "3", "4"),
            ("d", "4", "5"),
            ("e", "5", "6"),
            ("f", "1", "4"),
        ],
    );
    let cm = chord.matroid().map_err(|e| e.to_string())?;
    for k in 1..=2 {
        let r = tree_pack(&chord, k).map_err(|e| e.to_string())?;
        ensure!(r.packable == common::disjoint_bases(&cm, k), "tree+chord k={k}");
        ensure!(r.certified(&cm), "tree+chord k={k} certificate");
        ensure!(r.packable == (k == 1), "tree+chord k={k} verdict");
    }
    Ok("K4 k=2 packs; tree+chord packs for k=1 only".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("finite union is a matroid; membership exact", criterion_1),
        ("exchange chains sound", criterion_2),
        ("augmentation and cochain augmentation", criterion_3),
        ("symmetric difference bound", criterion_4),
        ("M[k] is the truncation", criterion_5),
        ("packing and covering equivalences", criterion_6),
        ("growth chains and window monotonicity", criterion_7),
        ("doubled ladder", criterion_8),
        ("nearly finitary gap", criterion_9),
        ("spanning tree packing", criterion_10),
    ];
    let filter: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if filter.is_some_and(|f| f != id) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name} ({detail}) [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {why} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
