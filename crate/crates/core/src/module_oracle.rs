//! Explicit matrix models of the highest-weight modules.
//!
//! The ambient space is a tensor product of full exterior powers of the
//! vector representation — one factor `Λ^i` per unit of `m_i` — and the
//! module itself is the cyclic span of the tensor of top wedge vectors
//! under the lowering operators.  Everything is integer matrices and exact
//! fraction-free elimination, so the annihilation and independence checks
//! are honest second opinions, sharing nothing with the enveloping-algebra
//! arithmetic except the Chevalley matrices themselves.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::chevalley::Matrix;
use crate::error::{Error, Result};
use crate::fflv::fflv_points;
use crate::roots::DominantWeight;
use crate::uea::{Algebra, Letter, UEAElement};

/// Largest ambient tensor dimension the oracle will build.
pub const AMBIENT_BUDGET: usize = 10_000;

/// Column-sparse integer matrix: `cols[j]` lists the nonzero
/// `(row, value)` entries of column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub dim: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMat {
    pub fn zero(dim: usize) -> Self {
        SparseMat {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    fn from_column_maps(dim: usize, maps: Vec<BTreeMap<u32, i64>>) -> Self {
        SparseMat {
            dim,
            cols: maps
                .into_iter()
                .map(|m| m.into_iter().filter(|&(_, v)| v != 0).collect())
                .collect(),
        }
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn apply_int(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.dim];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(r, val) in &self.cols[j] {
                out[r as usize] += x * BigInt::from(val);
            }
        }
        out
    }

    /// Matrix product `self · other`, both square of the same dimension.
    pub fn compose(&self, other: &Self) -> Self {
        let mut maps: Vec<BTreeMap<u32, i64>> = vec![BTreeMap::new(); self.dim];
        for j in 0..self.dim {
            for &(mid, v1) in &other.cols[j] {
                for &(r, v2) in &self.cols[mid as usize] {
                    *maps[j].entry(r).or_insert(0) += v1 * v2;
                }
            }
        }
        SparseMat::from_column_maps(self.dim, maps)
    }

    pub fn entries(&self) -> BTreeMap<(u32, u32), i64> {
        let mut out = BTreeMap::new();
        for (j, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out.insert((r, j as u32), v);
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, col)| col.iter().all(|&(r, _)| r as usize == j))
    }
}

/// Exact row-echelon accumulator over the integers (fraction-free;
/// rows are content-normalized with positive leading entry).
struct IntEchelon {
    rows: BTreeMap<usize, Vec<BigInt>>,
}

impl IntEchelon {
    fn new() -> Self {
        IntEchelon {
            rows: BTreeMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; if a residue survives it is
    /// normalized and inserted.  Returns the inserted row's copy.
    fn insert(&mut self, mut v: Vec<BigInt>) -> Option<Vec<BigInt>> {
        loop {
            let lead = v.iter().position(|x| !x.is_zero())?;
            match self.rows.get(&lead) {
                None => {
                    normalize_row(&mut v);
                    self.rows.insert(lead, v.clone());
                    return Some(v);
                }
                Some(row) => {
                    let a = row[lead].clone();
                    let b = v[lead].clone();
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = &*x * &a - y * &b;
                    }
                }
            }
        }
    }
}

fn normalize_row(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = v
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    if lead_negative {
        g = -g;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// A concrete realization of one highest-weight module: sparse action
/// matrices for every Chevalley generator on the ambient tensor space,
/// with the highest vector at index 0.
#[derive(Debug)]
pub struct ExplicitModule {
    pub ambient_dim: usize,
    pub span_dim: u64,
    e_mats: Vec<SparseMat>,
    h_mats: Vec<SparseMat>,
    f_mats: Vec<SparseMat>,
}

impl ExplicitModule {
    pub fn letter_mat(&self, l: Letter) -> &SparseMat {
        match l {
            Letter::E(r) => &self.e_mats[r],
            Letter::H(k) => &self.h_mats[k],
            Letter::F(r) => &self.f_mats[r],
        }
    }

    pub fn highest_vector(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.ambient_dim];
        v[0] = BigInt::one();
        v
    }

    /// Applies the ordered product `f^s` (largest root leftmost) to the
    /// highest vector.
    pub fn apply_f_point(&self, s: &[u32]) -> Vec<BigInt> {
        let mut v = self.highest_vector();
        for r in (0..s.len()).rev() {
            for _ in 0..s[r] {
                v = self.f_mats[r].apply_int(&v);
            }
        }
        v
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let mut out: u128 = 1;
    for t in 0..k {
        out = out * (n - t) as u128 / (t + 1) as u128;
    }
    out as usize
}

fn subsets_lex(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur: Vec<u8> = (0..k as u8).collect();
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // Advance to the next k-subset of {0..n-1} in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (cur[i] as usize) < n - k + i {
                cur[i] += 1;
                for t in i + 1..k {
                    cur[t] = cur[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lifts an `N×N` matrix to `Λ^k` by the derivation rule.
fn wedge_lift(x: &Matrix, subsets: &[Vec<u8>], index: &BTreeMap<Vec<u8>, usize>) -> SparseMat {
    let dim = subsets.len();
    let mut maps: Vec<BTreeMap<u32, i64>> = vec![BTreeMap::new(); dim];
    for (j, base) in subsets.iter().enumerate() {
        for (t, &c) in base.iter().enumerate() {
            for r in 0..x.n {
                let val = x.get(r, c as usize);
                if val == 0 {
                    continue;
                }
                let r = r as u8;
                if r == c {
                    *maps[j].entry(j as u32).or_insert(0) += val;
                    continue;
                }
                if base.contains(&r) {
                    continue;
                }
                let mut replaced = base.clone();
                replaced[t] = r;
                // Sorting the single displaced entry back costs one sign
                // per transposition.
                let mut target = replaced.clone();
                target.sort_unstable();
                let moved = target.iter().position(|&z| z == r).unwrap();
                let sign = if (moved as i64 - t as i64) % 2 == 0 {
                    1
                } else {
                    -1
                };
                let row = index[&target] as u32;
                *maps[j].entry(row).or_insert(0) += sign * val;
            }
        }
    }
    SparseMat::from_column_maps(dim, maps)
}

/// Lifts per-factor matrices to the tensor product by the Leibniz rule.
fn tensor_lift(factor_mats: &[SparseMat], dims: &[usize]) -> SparseMat {
    let ambient: usize = dims.iter().product();
    let mut maps: Vec<BTreeMap<u32, i64>> = vec![BTreeMap::new(); ambient];
    let mut strides = vec![1usize; dims.len()];
    for q in (0..dims.len().saturating_sub(1)).rev() {
        strides[q] = strides[q + 1] * dims[q + 1];
    }
    for col in 0..ambient {
        let digits: Vec<usize> = strides
            .iter()
            .zip(dims)
            .map(|(&st, &d)| col / st % d)
            .collect();
        for q in 0..dims.len() {
            for &(r, v) in factor_mats[q].column(digits[q]) {
                let row = col as i64 + (r as i64 - digits[q] as i64) * strides[q] as i64;
                *maps[col].entry(row as u32).or_insert(0) += v;
            }
        }
    }
    SparseMat::from_column_maps(ambient, maps)
}

/// Builds the module for a dominant weight, or reports the ambient
/// dimension that blew the budget.
pub fn build_module(alg: &Algebra, lambda: &DominantWeight) -> Result<ExplicitModule> {
    let n = alg.rank;
    let big_n = alg.kind.matrix_dim(n);
    let mut wedge_degrees = Vec::new();
    for i in 1..=n {
        for _ in 0..lambda.m_at(i) {
            wedge_degrees.push(i);
        }
    }
    let mut ambient: u128 = 1;
    for &k in &wedge_degrees {
        ambient *= binomial(big_n, k) as u128;
    }
    if ambient > AMBIENT_BUDGET as u128 {
        return Err(Error::ResourceBudget {
            dim: ambient as usize,
            budget: AMBIENT_BUDGET,
        });
    }
    let ambient = ambient as usize;

    let mut per_factor_subsets = Vec::new();
    for &k in &wedge_degrees {
        let subsets = subsets_lex(big_n, k);
        let index: BTreeMap<Vec<u8>, usize> = subsets
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        per_factor_subsets.push((subsets, index));
    }
    let dims: Vec<usize> = per_factor_subsets.iter().map(|(s, _)| s.len()).collect();

    let lift = |x: &Matrix| -> SparseMat {
        if wedge_degrees.is_empty() {
            return SparseMat::zero(1);
        }
        let factor_mats: Vec<SparseMat> = per_factor_subsets
            .iter()
            .map(|(subsets, index)| wedge_lift(x, subsets, index))
            .collect();
        tensor_lift(&factor_mats, &dims)
    };

    let nf = alg.num_roots();
    let e_mats: Vec<SparseMat> = (0..nf).map(|r| lift(alg.lie.e_mat(r))).collect();
    let f_mats: Vec<SparseMat> = (0..nf).map(|r| lift(alg.lie.f_mat(r))).collect();
    let h_mats: Vec<SparseMat> = (0..n).map(|k| lift(alg.lie.h_mat(k))).collect();

    let module = ExplicitModule {
        ambient_dim: ambient,
        span_dim: 0,
        e_mats,
        h_mats,
        f_mats,
    };

    // Highest-weight sanity: e's kill the top vector, h's scale it by m.
    let hw = module.highest_vector();
    for e in &module.e_mats {
        assert!(e.apply_int(&hw).iter().all(|x| x.is_zero()));
    }
    for (k, h) in module.h_mats.iter().enumerate() {
        let hv = h.apply_int(&hw);
        assert_eq!(hv[0], BigInt::from(lambda.m_at(k + 1)));
        assert!(hv[1..].iter().all(|x| x.is_zero()));
    }

    // The cyclic span under the lowering operators is the whole simple
    // module; its dimension must equal the Weyl formula value.
    let mut echelon = IntEchelon::new();
    let mut queue = vec![echelon.insert(hw).expect("highest vector is nonzero")];
    while let Some(v) = queue.pop() {
        for f in &module.f_mats {
            let image = f.apply_int(&v);
            if let Some(inserted) = echelon.insert(image) {
                queue.push(inserted);
            }
        }
    }
    let span_dim = echelon.rank() as u64;
    assert_eq!(
        span_dim,
        alg.rs.weyl_dim(lambda),
        "cyclic span dimension must match the Weyl formula"
    );

    Ok(ExplicitModule { span_dim, ..module })
}

/// True iff the element kills the highest vector; each PBW word is applied
/// letterwise from the right.
pub fn annihilates_hw(module: &ExplicitModule, alg: &Algebra, x: &UEAElement) -> bool {
    let mut acc = vec![BigRational::zero(); module.ambient_dim];
    for (m, c) in x.terms() {
        let mut v = module.highest_vector();
        for &l in alg.letters_of(m).iter().rev() {
            v = module.letter_mat(l).apply_int(&v);
        }
        for (a, b) in acc.iter_mut().zip(v) {
            if !b.is_zero() {
                *a += c * BigRational::from_integer(b);
            }
        }
    }
    acc.iter().all(|x| x.is_zero())
}

/// True iff the ordered monomials over the polytope points span a space of
/// exactly the Weyl dimension.
pub fn fflv_independent(module: &ExplicitModule, alg: &Algebra, lambda: &DominantWeight) -> bool {
    let points = fflv_points(&alg.rs, lambda);
    let mut echelon = IntEchelon::new();
    for s in &points {
        echelon.insert(module.apply_f_point(s));
    }
    echelon.rank() as u64 == alg.rs.weyl_dim(lambda)
}

/// Exhaustive check that the lifted matrices represent the bracket table:
/// `ρ([x,y]) = ρ(x)ρ(y) − ρ(y)ρ(x)` over all pairs of basis elements.
pub fn check_representation(module: &ExplicitModule, alg: &Algebra) -> bool {
    let dim = alg.lie.dim();
    let mat_of = |idx: usize| -> &SparseMat {
        let nf = alg.num_roots();
        if idx < nf {
            &module.e_mats[idx]
        } else if idx < nf + alg.rank {
            &module.h_mats[idx - nf]
        } else {
            &module.f_mats[idx - nf - alg.rank]
        }
    };
    for i in 0..dim {
        for j in 0..dim {
            let lhs = {
                let a = mat_of(i).compose(mat_of(j));
                let b = mat_of(j).compose(mat_of(i));
                let mut entries = a.entries();
                for (key, v) in b.entries() {
                    *entries.entry(key).or_insert(0) -= v;
                }
                entries.retain(|_, v| *v != 0);
                entries
            };
            let mut rhs: BTreeMap<(u32, u32), i64> = BTreeMap::new();
            for &(k, c) in alg.lie.bracket_basis(i, j) {
                for (key, v) in mat_of(k).entries() {
                    *rhs.entry(key).or_insert(0) += c * v;
                }
            }
            rhs.retain(|_, v| *v != 0);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
