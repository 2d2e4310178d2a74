use std::path::Path;

use matroid_union::axioms::{check_matroid, is_matroid_with, CheckOptions, NamedRepresentation};
use matroid_union::infinitary::demos::{demo_growth_chain, demo_window_monotone, Demo};
use matroid_union::infinitary::family::{finitarization_matches, GapVerdict};
use matroid_union::infinitary::{finitarize, ladder_demo, make_mk, nearly_finitary_gap};
use matroid_union::packing::{cover_independent, pack_bases_with, tree_pack, YSweep};
use matroid_union::union::{reachability, union_base, union_membership};
use matroid_union::{Matroid, Representation};
use serde_json::json;

use crate::load::{self, AxiomInput};
use crate::report::Outcome;

/// Everything that ends a run with exit code 2.
pub type Failure = Box<dyn std::error::Error>;

/// Bytes of every input file, in argument order.
pub type Inputs = Vec<Vec<u8>>;

fn same_ground(a: &Matroid, b: &Matroid) -> Result<(), Failure> {
    if a.ground() != b.ground() {
        return Err("--a and --b must list the same ground set in the same order".into());
    }
    Ok(())
}

pub fn check_axioms(path: &Path, opts: &CheckOptions) -> Result<(Outcome, Inputs), Failure> {
    let input = load::axiom_input(path)?;
    let (report, g, n) = match &input.value {
        AxiomInput::Matroid(m) => (check_matroid(m, opts)?, m.ground_arc(), m.len()),
        AxiomInput::System(s) => (is_matroid_with(s, opts), s.ground_arc(), s.ground().len()),
    };
    let passed = report.passed();
    let labels: Vec<String> = report
        .verdicts()
        .iter()
        .map(|(k, v)| format!("{k}={}", v.label()))
        .collect();
    let mut out = Outcome::new(passed, report.to_json(&g), format!("axioms: {}", labels.join(" ")));
    if n > opts.exhaustive_limit {
        out = out.seeded(opts.seed);
    }
    Ok((out, vec![input.bytes]))
}

fn pair(a: &Path, b: &Path) -> Result<(Matroid, Matroid, Inputs), Failure> {
    let (m1, m2) = (load::matroid(a)?, load::matroid(b)?);
    same_ground(&m1.value, &m2.value)?;
    Ok((m1.value, m2.value, vec![m1.bytes, m2.bytes]))
}

pub fn union(a: &Path, b: &Path, set: &str) -> Result<(Outcome, Inputs), Failure> {
    let (m1, m2, mut inputs) = pair(a, b)?;
    let g = m1.ground_arc();
    let x = load::id_list(&g, set, "--set")?;
    inputs.push(set.as_bytes().to_vec());
    let rep = union_membership(&m1, &m2, x)?;
    let payload = json!({
        "member": rep.is_some(),
        "rep": rep.map(|r| NamedRepresentation::new(&g, &r)),
    });
    let summary = format!(
        "{{{}}} {} the union",
        g.names(x).join(","),
        if rep.is_some() { "is in" } else { "is not in" }
    );
    Ok((Outcome::new(rep.is_some(), payload, summary), inputs))
}

pub fn union_base_cmd(a: &Path, b: &Path, within: Option<&str>) -> Result<(Outcome, Inputs), Failure> {
    let (m1, m2, mut inputs) = pair(a, b)?;
    let g = m1.ground_arc();
    let w = match within {
        Some(s) => {
            inputs.push(s.as_bytes().to_vec());
            load::id_list(&g, s, "--within")?
        }
        None => g.all(),
    };
    let rep = union_base(&m1, &m2, w)?;
    let payload = json!({
        "size": rep.set().len(),
        "set": g.names(rep.set()),
        "rep": NamedRepresentation::new(&g, &rep),
    });
    let summary = format!(
        "union base of size {}: {{{}}}",
        rep.set().len(),
        g.names(rep.set()).join(",")
    );
    Ok((Outcome::new(true, payload, summary), inputs))
}

pub fn chain(a: &Path, b: &Path, i1: &str, i2: &str, x: &str) -> Result<(Outcome, Inputs), Failure> {
    let (m1, m2, mut inputs) = pair(a, b)?;
    let g = m1.ground_arc();
    let rep = Representation::new(load::id_list(&g, i1, "--i1")?, load::id_list(&g, i2, "--i2")?);
    let t = g.position(x).ok_or_else(|| format!("--x: unknown element {x:?}"))?;
    for s in [i1, i2, x] {
        inputs.push(s.as_bytes().to_vec());
    }
    let reach = reachability(&m1, &m2, &rep, t)?;
    let violation = reach.property_two_violation(&m1);
    let mut payload = reach.to_json(&g);
    payload["property_two"] = json!(violation.is_none());
    let summary = format!(
        "{} elements reach {x}: {{{}}}",
        reach.members.len(),
        g.names(reach.members).join(",")
    );
    Ok((Outcome::new(violation.is_none(), payload, summary), inputs))
}

/// Exhaustive up to `max_y` elements, otherwise `samples` seeded random sets.
pub fn pack(path: &Path, k: usize, max_y: usize, samples: usize, seed: u64) -> Result<(Outcome, Inputs), Failure> {
    let m = load::matroid(path)?;
    let sweep = if m.value.len() <= max_y {
        YSweep::Exhaustive
    } else {
        YSweep::Sampled { samples, seed }
    };
    let r = pack_bases_with(&m.value, k, sweep)?;
    let mut payload = r.to_json(m.value.ground());
    payload["certified"] = json!(r.certified(&m.value));
    let summary = if r.packable {
        format!("{k} disjoint bases found")
    } else {
        format!("no {k} disjoint bases")
    };
    let mut out = Outcome::new(r.packable, payload, summary);
    if sweep != YSweep::Exhaustive {
        out = out.seeded(seed);
    }
    Ok((out, vec![m.bytes]))
}

pub fn cover(path: &Path, k: usize) -> Result<(Outcome, Inputs), Failure> {
    let m = load::matroid(path)?;
    let r = cover_independent(&m.value, k)?;
    let mut payload = r.to_json(m.value.ground());
    payload["certified"] = json!(r.certified(&m.value));
    let summary = if r.coverable {
        format!("covered by {k} independent sets")
    } else {
        format!("not coverable by {k} independent sets")
    };
    Ok((Outcome::new(r.coverable, payload, summary), vec![m.bytes]))
}

pub fn trees(path: &Path, k: usize) -> Result<(Outcome, Inputs), Failure> {
    let g = load::graph(path)?;
    if !g.value.is_connected() {
        let payload = json!({"k": k, "verdict": "disconnected"});
        return Ok((
            Outcome::new(false, payload, "graph is disconnected; no spanning trees"),
            vec![g.bytes],
        ));
    }
    let m = g.value.matroid()?;
    let r = tree_pack(&g.value, k)?;
    let mut payload = r.to_json(m.ground());
    payload["certified"] = json!(r.certified(&m));
    let summary = if r.packable {
        format!("{k} edge-disjoint spanning trees found")
    } else {
        format!("no {k} edge-disjoint spanning trees")
    };
    Ok((Outcome::new(r.packable, payload, summary), vec![g.bytes]))
}

pub fn finitarize_cmd(path: &Path, windows: usize) -> Result<(Outcome, Inputs), Failure> {
    let f = load::family(path)?;
    let fin = finitarize(&f.value);
    let mut matches = true;
    for n in 1..=windows {
        matches &= finitarization_matches(&f.value, n)?;
    }
    let payload = json!({
        "family": fin,
        "windows_checked": windows,
        "matches_windows": matches,
    });
    let summary = format!(
        "{} -> {} (windows 1..={windows} {})",
        f.value.name,
        fin.name,
        if matches { "agree" } else { "disagree" }
    );
    Ok((Outcome::new(matches, payload, summary), vec![f.bytes]))
}

pub fn gap(path: &Path, from: usize, to: usize) -> Result<(Outcome, Inputs), Failure> {
    if from < 1 || from > to {
        return Err("--from must be at least 1 and at most --to".into());
    }
    let f = load::family(path)?;
    let r = nearly_finitary_gap(&f.value, from..=to)?;
    let nearly = r.verdict == GapVerdict::NearlyFinitary;
    let plain = |v: serde_json::Value| v.as_str().map(String::from).unwrap_or_else(|| v.to_string());
    let summary = format!(
        "{}: gap {} ({})",
        r.family,
        plain(serde_json::to_value(r.total)?),
        plain(serde_json::to_value(r.verdict)?)
    );
    Ok((Outcome::new(nearly, r.to_json(), summary), vec![f.bytes]))
}

pub fn mk(path: &Path, k: usize, opts: &CheckOptions) -> Result<(Outcome, Inputs), Failure> {
    let m = load::matroid(path)?;
    let mk = make_mk(&m.value, k)?;
    let report = check_matroid(&mk, opts)?;
    let payload = json!({
        "descriptor": mk.descriptor(),
        "rank": mk.full_rank(),
        "axioms": report.to_json(mk.ground()),
    });
    let summary = format!(
        "M[{k}] has rank {}; axioms {}",
        mk.full_rank(),
        if report.passed() { "pass" } else { "fail" }
    );
    let mut out = Outcome::new(report.passed(), payload, summary);
    if mk.len() > opts.exhaustive_limit {
        out = out.seeded(opts.seed);
    }
    Ok((out, vec![m.bytes]))
}

pub struct DemoArgs<'a> {
    pub name: &'a str,
    pub window: usize,
    pub steps: usize,
    pub countable_analog: bool,
    pub family: Option<&'a Path>,
}

pub fn demo(args: &DemoArgs) -> Result<(Outcome, Inputs), Failure> {
    let mut inputs =
        vec![format!("{} {} {} {}", args.name, args.window, args.steps, args.countable_analog).into_bytes()];
    if args.name == "ladder" {
        let r = ladder_demo(args.window)?;
        let summary = format!(
            "ladder on {} rungs: B3 ∪ B4 = B1 ∪ B2 + {{{}}}",
            r.rungs,
            r.ground.names(r.difference).join(",")
        );
        return Ok((Outcome::new(r.certified(), r.to_json(), summary), inputs));
    }
    let d = match (args.name, args.family) {
        ("prop22", Some(p)) => {
            let f = load::family(p)?;
            inputs.push(f.bytes);
            Demo::prop22(Some(&f.value))?
        }
        (_, Some(_)) => return Err("--family only applies to prop22".into()),
        (name, None) => Demo::parse(name, args.countable_analog)?,
    };
    if args.window == 0 {
        return Err("--window must be at least 1".into());
    }
    let chain = demo_growth_chain(&d, args.window, args.steps)?;
    let certified = chain.certify()?;
    let monotone = demo_window_monotone(&d, args.window)?;
    let mut payload = chain.to_json();
    payload["certified"] = json!(certified);
    payload["window_monotone"] = json!(monotone);
    let sizes: Vec<String> = chain.steps.iter().map(|s| s.set.len().to_string()).collect();
    let summary = format!(
        "{}: {} certified steps from window {}, set sizes {}",
        d.name(),
        args.steps,
        args.window,
        sizes.join(" < ")
    );
    Ok((Outcome::new(certified && monotone, payload, summary), inputs))
}
