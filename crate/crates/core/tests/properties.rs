mod common;

use matroid_union::axioms::{is_matroid, SetSystem};
use matroid_union::union::{k_fold_union, union_base, union_membership};
use matroid_union::{Descriptor, Matroid, Subset};
use proptest::prelude::*;

fn graphic(edges: &[(u8, u8)]) -> Matroid {
    let vertices: Vec<String> = (0..5).map(|v| format!("v{v}")).collect();
    let edges: Vec<(String, String, String)> = edges
        .iter()
        .enumerate()
        .map(|(i, (u, v))| (format!("e{i}"), format!("v{u}"), format!("v{v}")))
        .collect();
    Matroid::graphic(&vertices, &edges).unwrap()
}

fn edge_lists() -> impl Strategy<Value = Vec<(u8, u8)>> {
    prop::collection::vec((0u8..5, 0u8..5), 1..=8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn membership_matches_split(a in edge_lists(), shift in 0usize..3) {
        let m1 = graphic(&a);
        // A second graph on the same edge names: rotate endpoints.
        let b: Vec<(u8, u8)> = a.iter().map(|&(u, v)| ((u + shift as u8) % 5, v)).collect();
        let m2 = graphic(&b);
        for x in common::subsets(m1.len()) {
            let got = union_membership(&m1, &m2, x).unwrap();
            prop_assert_eq!(got.is_some(), common::split(&m1, &m2, x).is_some());
            if let Some(r) = got {
                prop_assert!(r.is_valid(&m1, &m2));
                prop_assert_eq!(r.set(), x);
            }
        }
    }

    #[test]
    fn union_base_is_largest(a in edge_lists()) {
        let m = graphic(&a);
        let dual = m.dual();
        let base = union_base(&m, &dual, m.all()).unwrap();
        let largest = common::union_family(&m, &dual).iter().map(|s| s.len()).max().unwrap();
        prop_assert_eq!(base.set().len(), largest);
        prop_assert!(base.is_valid(&m, &dual));
    }

    #[test]
    fn three_fold_union(a in edge_lists()) {
        let m = graphic(&a);
        let ms = vec![m.clone(), m.clone(), m.clone()];
        for x in common::subsets(m.len()).step_by(3) {
            let got = k_fold_union(&ms, x).unwrap();
            prop_assert_eq!(got.is_some(), common::in_i_nkc(&m, 3, 1, x));
            if let Some(parts) = got {
                prop_assert_eq!(parts.iter().fold(Subset::EMPTY, |acc, p| acc | *p), x);
                prop_assert!(parts.iter().all(|p| m.is_independent(*p)));
            }
        }
    }

    #[test]
    fn dual_rank_formula(a in edge_lists()) {
        let m = graphic(&a);
        let d = m.dual();
        let r = common::rank(&m, m.all());
        for x in common::subsets(m.len()) {
            prop_assert_eq!(d.rank(x) + r, x.len() + common::rank(&m, m.all() - x));
        }
    }

    #[test]
    fn descriptor_round_trip(a in edge_lists(), k in 0usize..3) {
        let m = graphic(&a).mk(k.min(graphic(&a).full_rank())).unwrap();
        let text = serde_json::to_string(m.descriptor()).unwrap();
        let d: Descriptor = serde_json::from_str(&text).unwrap();
        let back = Matroid::from_descriptor(&d).unwrap();
        for x in common::subsets(m.len()) {
            prop_assert_eq!(back.is_independent(x), m.is_independent(x));
        }
    }

    #[test]
    fn random_families_get_confirmed_witnesses(bits in prop::collection::vec(any::<bool>(), 32)) {
        let g = matroid_union::matroid::ground(&["a", "b", "c", "d", "e"]);
        let members: Vec<Subset> = (0..32u64).filter(|i| bits[*i as usize]).map(Subset::from_bits).collect();
        let s = SetSystem::new(g, members.clone()).unwrap();
        let report = is_matroid(&s);
        let brute = brute_is_matroid(&members);
        prop_assert_eq!(report.passed(), brute);
        if let Some(w) = report.witness() {
            prop_assert!(w.confirms(|x| members.contains(&x), Subset::from_bits(31)));
        }
    }
}

fn brute_is_matroid(family: &[Subset]) -> bool {
    let has = |x: &Subset| family.contains(x);
    if !has(&Subset::EMPTY) {
        return false;
    }
    if !family.iter().all(|a| a.subsets().all(|s| has(&s))) {
        return false;
    }
    family.iter().all(|i| {
        family
            .iter()
            .filter(|j| j.len() > i.len())
            .all(|j| (*j - *i).iter().any(|y| has(&i.with(y))))
    })
}

#[test]
fn non_closed_family_is_rejected() {
    let g = matroid_union::matroid::ground(&["a", "b", "c"]);
    let s = SetSystem::from_ids(g, &[vec![], vec!["a"], vec!["b"], vec!["a", "c"]]).unwrap();
    let report = is_matroid(&s);
    assert!(!report.passed());
    assert_eq!(report.witness().unwrap().axiom(), "I2");
}

#[test]
fn ladder_union_grows_by_one() {
    let r = matroid_union::infinitary::ladder::ladder_demo(6).unwrap();
    assert!(r.certified());
    assert_eq!((r.bases[2] | r.bases[3]).len(), (r.bases[0] | r.bases[1]).len() + 1);
}

/// Whether `nodes` is a chain starting on `first`, from the link conditions alone.
fn brute_chain(ms: [&Matroid; 2], sides: [Subset; 2], first: usize, nodes: &[usize]) -> bool {
    nodes.windows(2).enumerate().all(|(i, w)| {
        let s = (first + i) % 2;
        let (m, base) = (ms[s], sides[s]);
        let (yi, yj) = (w[0], w[1]);
        base.contains(yj)
            && !base.contains(yi)
            && !m.is_independent(base.with(yi))
            && m.is_independent(base.with(yi).without(yj))
    })
}

#[test]
fn some_shortest_chain_needs_four_links() {
    let cat = matroid_union::catalog::catalog(5);
    let find = |name: &str| cat.iter().find(|e| e.name == name).unwrap().matroid.clone();
    let (m1, m2) = (find("M(diamond)"), find("M(diamond)*"));
    let rep = matroid_union::Representation::new(Subset::from_indices([0, 2, 4]), Subset::from_indices([1, 3]));
    assert!(rep.is_valid(&m1, &m2));
    let (y, x) = (2, 0);
    let reach = matroid_union::union::reachability(&m1, &m2, &rep, x).unwrap();
    assert_eq!(reach.chains[&y].len(), 4);

    let ms = [&m1, &m2];
    let sides = [rep.first, rep.second];
    let mut shortest = None;
    'search: for links in 1..=4 {
        let mut stack = vec![vec![y]];
        while let Some(path) = stack.pop() {
            if path.len() == links + 1 {
                if path[links] == x && (0..2).any(|f| brute_chain(ms, sides, f, &path)) {
                    shortest = Some(links);
                    break 'search;
                }
                continue;
            }
            for e in 0..m1.len() {
                if !path.contains(&e) {
                    let mut next = path.clone();
                    next.push(e);
                    stack.push(next);
                }
            }
        }
    }
    assert_eq!(shortest, Some(4));
}
