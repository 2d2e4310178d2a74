//! A fixed catalog of small matroids on the canonical ground sets `e0..e{n-1}`.

use crate::matroid::{Descriptor, Matroid};

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub matroid: Matroid,
}

fn ids(n: usize, offset: usize) -> Vec<String> {
    (offset..offset + n).map(|i| format!("e{i}")).collect()
}

/// Small graphs as edge lists over vertices `0..`; edges are named in order.
fn graphs() -> Vec<(&'static str, Vec<(usize, usize)>)> {
    vec![
        ("bridge", vec![(0, 1)]),
        ("loop", vec![(0, 0)]),
        ("path3", vec![(0, 1), (1, 2)]),
        ("digon", vec![(0, 1), (0, 1)]),
        ("edge+loop", vec![(0, 1), (1, 1)]),
        ("triangle", vec![(0, 1), (1, 2), (2, 0)]),
        ("path4", vec![(0, 1), (1, 2), (2, 3)]),
        ("star3", vec![(0, 1), (0, 2), (0, 3)]),
        ("trigon", vec![(0, 1), (0, 1), (0, 1)]),
        ("digon+pendant", vec![(0, 1), (0, 1), (1, 2)]),
        ("square", vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
        ("triangle+pendant", vec![(0, 1), (1, 2), (2, 0), (2, 3)]),
        ("two-digons", vec![(0, 1), (0, 1), (2, 3), (2, 3)]),
        ("triangle+loop", vec![(0, 1), (1, 2), (2, 0), (1, 1)]),
        ("diamond", vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        ("pentagon", vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        ("square+pendant", vec![(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]),
        ("bowtie-half", vec![(0, 1), (1, 2), (2, 0), (2, 3), (2, 3)]),
    ]
}

fn graphic(edges: &[(usize, usize)], offset: usize) -> Descriptor {
    let vmax = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    Descriptor::Graphic {
        vertices: (0..=vmax).map(|v| format!("v{v}")).collect(),
        edges: edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (format!("e{}", i + offset), format!("v{u}"), format!("v{v}")))
            .collect(),
    }
}

/// Base descriptors before duals and sums, on `e0..`.
fn base(max_n: usize) -> Vec<(String, usize, Descriptor)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 0..=3.min(n) {
            out.push((format!("U{k},{n}"), n, Descriptor::Uniform { k, ground: ids(n, 0) }));
        }
    }
    for (name, edges) in graphs() {
        if edges.len() <= max_n {
            out.push((format!("M({name})"), edges.len(), graphic(&edges, 0)));
        }
    }
    out
}

fn shift(d: &Descriptor, offset: usize) -> Descriptor {
    d.relabeled(&|id| {
        let i: usize = id[1..].parse().expect("canonical id");
        format!("e{}", i + offset)
    })
}

/// Uniform matroids with `k <= 3`, graphic matroids on at most 5 edges, their
/// duals, and direct sums of two small summands, all with at most `max_n` elements.
pub fn catalog(max_n: usize) -> Vec<Entry> {
    let bases = base(max_n);
    let mut out: Vec<(String, Descriptor)> = Vec::new();
    for (name, _, d) in &bases {
        out.push((name.clone(), d.clone()));
        out.push((
            format!("{name}*"),
            Descriptor::Dual {
                of: Box::new(d.clone()),
            },
        ));
    }
    let small: Vec<&(String, usize, Descriptor)> = bases
        .iter()
        .filter(|(name, n, _)| *n <= 3 && (name.starts_with('U') || name == "M(triangle)"))
        .collect();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            if a.1 + b.1 <= max_n && a.1 >= 2 && b.1 >= 2 {
                out.push((
                    format!("{}+{}", a.0, b.0),
                    Descriptor::Sum {
                        parts: vec![a.2.clone(), shift(&b.2, a.1)],
                    },
                ));
            }
        }
    }
    out.into_iter()
        .map(|(name, d)| Entry {
            matroid: Matroid::from_descriptor(&d).expect("catalog descriptors are valid"),
            name,
        })
        .collect()
}

/// Unordered pairs (with repetition) of catalog entries on the same ground set.
pub fn same_ground_pairs(max_n: usize) -> Vec<(Entry, Entry)> {
    let c = catalog(max_n);
    let mut out = Vec::new();
    for (i, a) in c.iter().enumerate() {
        for b in &c[i..] {
            if a.matroid.ground() == b.matroid.ground() {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}
