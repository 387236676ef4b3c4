//! Lattice polytopes from chains in the positive-root poset.
//!
//! For each row `i` of the root array and each admissible sink the module
//! stores the saturated chains ("Dyck paths") of the interval from `α_i` to
//! the sink root.  Summing a candidate exponent vector along every stored
//! path and comparing against weight-derived bounds carves out a lattice
//! polytope whose point count equals the Weyl dimension; the minimal
//! lattice points just outside the polytope drive the basis construction.

use std::collections::BTreeSet;

use crate::roots::{ChainEnd, DominantWeight, RootSystem};

/// Endpoint descriptor of a stored interval: either the simple root
/// `α_j`, or — in type C — the doubled root `2e_k` heading the sub-system
/// in rows `k..n`.  Payloads are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Sink {
    Simple(usize),
    SubCHighest(usize),
}

impl Sink {
    /// Canonical index of the root the sink names.
    pub fn root_index(self, rs: &RootSystem) -> usize {
        match self {
            Sink::Simple(j) => rs.simple_root_index(j),
            Sink::SubCHighest(k) => rs.index_of_segment(k, ChainEnd::Barred(k)),
        }
    }

    pub fn label(self) -> String {
        match self {
            Sink::Simple(j) => format!("simple {j}"),
            Sink::SubCHighest(k) => format!("doubled {k}"),
        }
    }
}

/// A saturated chain from `α_i` to a sink root, stored as canonical root
/// indices in chain order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyckPath {
    pub source_row: usize,
    pub sink: Sink,
    pub roots: Vec<usize>,
}

/// Sinks admissible for row `i`, in increasing chain position of the sink
/// root's endpoint.
fn sinks_for_row(rs: &RootSystem, i: usize) -> Vec<Sink> {
    let n = rs.rank;
    let mut sinks: Vec<Sink> = (i..=n).map(Sink::Simple).collect();
    if rs.kind == crate::roots::LieKind::C {
        // Chain position of the barred endpoint 2n−k decreases in k, so
        // larger k comes first.
        for k in (i..n).rev() {
            sinks.push(Sink::SubCHighest(k));
        }
    }
    sinks
}

/// `b` covers `a` inside the interval when nothing sits strictly between.
fn covers(rs: &RootSystem, interval: &[usize], a: usize, b: usize) -> bool {
    if a == b || !rs.is_leq(a, b) {
        return false;
    }
    !interval
        .iter()
        .any(|&z| z != a && z != b && rs.is_leq(a, z) && rs.is_leq(z, b))
}

/// All saturated chains of one interval, by depth-first extension; at each
/// step the next roots are tried by increasing chain position of their
/// endpoint, then increasing start.
fn chains(rs: &RootSystem, source: usize, sink: usize) -> Vec<Vec<usize>> {
    let interval: Vec<usize> = (0..rs.num_roots())
        .filter(|&x| rs.is_leq(source, x) && rs.is_leq(x, sink))
        .collect();
    let mut out = Vec::new();
    let mut stack = vec![source];
    extend_chains(rs, &interval, sink, &mut stack, &mut out);
    out
}

fn extend_chains(
    rs: &RootSystem,
    interval: &[usize],
    sink: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *stack.last().unwrap();
    if last == sink {
        out.push(stack.clone());
        return;
    }
    let mut next: Vec<usize> = interval
        .iter()
        .copied()
        .filter(|&z| covers(rs, interval, last, z))
        .collect();
    next.sort_by_key(|&z| {
        let r = rs.root(z);
        (rs.chain_pos(r.end), r.start)
    });
    for z in next {
        stack.push(z);
        extend_chains(rs, interval, sink, stack, out);
        stack.pop();
    }
}

/// Every stored path, ordered by source row, then sink, then chain order.
pub fn enumerate_dyck_paths(rs: &RootSystem) -> Vec<DyckPath> {
    let mut out = Vec::new();
    for i in 1..=rs.rank {
        let source = rs.simple_root_index(i);
        for sink in sinks_for_row(rs, i) {
            let sink_idx = sink.root_index(rs);
            for roots in chains(rs, source, sink_idx) {
                out.push(DyckPath {
                    source_row: i,
                    sink,
                    roots,
                });
            }
        }
    }
    out
}

/// The weight budget of a path: `m_i + … + m_j` for a simple sink `α_j`,
/// and the full tail `λ_i = m_i + … + m_n` for a doubled sink.
pub fn path_bound(lambda: &DominantWeight, path: &DyckPath) -> u64 {
    match path.sink {
        Sink::Simple(j) => lambda.m_sum(path.source_row, j) as u64,
        Sink::SubCHighest(_) => lambda.lambda(path.source_row) as u64,
    }
}

/// All nonnegative integer vectors whose sum along every stored path stays
/// within that path's budget, in ascending lexicographic order over the
/// canonical root layout.
pub fn fflv_points(rs: &RootSystem, lambda: &DominantWeight) -> Vec<Vec<u32>> {
    let paths = enumerate_dyck_paths(rs);
    let nf = rs.num_roots();
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for (p, path) in paths.iter().enumerate() {
        for &r in &path.roots {
            through[r].push(p);
        }
    }
    assert!(
        through.iter().all(|v| !v.is_empty()),
        "every root must lie on a stored path"
    );
    let mut remaining: Vec<i64> = paths.iter().map(|p| path_bound(lambda, p) as i64).collect();
    let mut point = vec![0u32; nf];
    let mut out = Vec::new();
    point_dfs(0, &through, &mut remaining, &mut point, &mut out);
    out
}

fn point_dfs(
    r: usize,
    through: &[Vec<usize>],
    remaining: &mut Vec<i64>,
    point: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if r == through.len() {
        out.push(point.clone());
        return;
    }
    let cap = through[r]
        .iter()
        .map(|&p| remaining[p])
        .min()
        .expect("root lies on a path");
    for v in 0..=cap {
        point[r] = v as u32;
        for &p in &through[r] {
            remaining[p] -= v;
        }
        point_dfs(r + 1, through, remaining, point, out);
        for &p in &through[r] {
            remaining[p] += v;
        }
    }
    point[r] = 0;
}

/// A minimal lattice point outside the polytope, together with the row and
/// sink whose budget it exceeds by exactly one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violator {
    pub exponents: Vec<u32>,
    pub source_row: usize,
    pub sink: Sink,
    pub degree: u64,
}

fn support(s: &[u32]) -> Vec<usize> {
    (0..s.len()).filter(|&r| s[r] > 0).collect()
}

/// The two-sided minimality test: on paths containing the whole support
/// the total may exceed the budget by at most one; on every other path the
/// partial sum must stay within budget.  This matches the brute-force
/// definition (every properly smaller vector lies inside the polytope).
fn is_minimal_outside(s: &[u32], degree: u64, paths: &[DyckPath], bounds: &[u64]) -> bool {
    let supp = support(s);
    paths.iter().zip(bounds).all(|(q, &bq)| {
        let in_path: u64 = q.roots.iter().map(|&r| s[r] as u64).sum();
        if supp.iter().all(|r| q.roots.contains(r)) {
            degree <= bq + 1
        } else {
            in_path <= bq
        }
    })
}

/// Minimal points outside the polytope.  Each is found by overshooting one
/// stored path's budget by exactly one; vectors are deduplicated with the
/// first row/sink attribution kept.
pub fn minimal_violators(rs: &RootSystem, lambda: &DominantWeight) -> Vec<Violator> {
    let paths = enumerate_dyck_paths(rs);
    let bounds: Vec<u64> = paths.iter().map(|p| path_bound(lambda, p)).collect();
    let nf = rs.num_roots();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Vec::new();
    for path in &paths {
        let target = path_bound(lambda, path) + 1;
        let mut s = vec![0u32; nf];
        composition_dfs(&path.roots, 0, target, &mut s, &mut |s| {
            if !seen.insert(s.to_vec()) {
                return;
            }
            if is_minimal_outside(s, target, &paths, &bounds) {
                out.push(Violator {
                    exponents: s.to_vec(),
                    source_row: path.source_row,
                    sink: path.sink,
                    degree: target,
                });
            }
        });
    }
    out
}

fn composition_dfs(
    roots: &[usize],
    pos: usize,
    left: u64,
    s: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if pos == roots.len() {
        if left == 0 {
            emit(s);
        }
        return;
    }
    if pos + 1 == roots.len() {
        s[roots[pos]] = left as u32;
        emit(s);
        s[roots[pos]] = 0;
        return;
    }
    for v in 0..=left {
        s[roots[pos]] = v as u32;
        composition_dfs(roots, pos + 1, left - v, s, emit);
        s[roots[pos]] = 0;
    }
}
