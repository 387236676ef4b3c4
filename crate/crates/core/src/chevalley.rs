//! Chevalley bases of `sl_{n+1}` and `sp_{2n}` from explicit matrix
//! realizations.
//!
//! Simple root vectors are the usual elementary-matrix generators; the
//! remaining negative root vectors are produced by the left-nested
//! recursion `f_{i,X} = [f_i, f_{i+1,X}]`, long type-C root vectors by the
//! halved bracket of the two short roots meeting at the diagonal, and every
//! positive root vector is the transpose of its negative partner.  With
//! that normalization `[e_α, f_α]` is exactly the coroot element for every
//! root, which the constructor checks against the combinatorial coroot
//! expansions.
//!
//! All brackets of basis elements are precomputed into an integer structure
//! table; the constants are asserted to lie in `{0, ±1, ±2}`.

use crate::error::Result;
use crate::roots::{ChainEnd, LieKind, PositiveRoot, RootSystem};
use std::collections::BTreeMap;

/// Dense integer matrix, row-major; ambient sizes here are at most `2n ≤ 8`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub n: usize,
    a: Vec<i64>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            a: vec![0; n * n],
        }
    }

    /// Elementary matrix with a single 1 in the given row and column (0-based).
    pub fn unit(n: usize, row: usize, col: usize) -> Self {
        let mut m = Matrix::zero(n);
        m.set(row, col, 1);
        m
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.a[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: i64) {
        self.a[row * self.n + col] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zero(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Matrix {
            n: self.n,
            a: self.a.iter().map(|x| x * k).collect(),
        }
    }

    /// Exact division by a scalar; panics on a remainder.
    pub fn scale_div(&self, k: i64) -> Self {
        Matrix {
            n: self.n,
            a: self
                .a
                .iter()
                .map(|x| {
                    assert_eq!(x % k, 0, "matrix entries must divide exactly");
                    x / k
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Matrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let v = self.get(r, k);
                if v == 0 {
                    continue;
                }
                for c in 0..n {
                    let w = other.get(k, c);
                    if w != 0 {
                        out.set(r, c, out.get(r, c) + v * w);
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| r == c || self.get(r, c) == 0))
    }
}

/// Sparse integer linear combination of Chevalley basis elements, keyed by
/// flat basis index.
pub type LieElement = BTreeMap<usize, i64>;

/// The Chevalley basis with its complete integer bracket table.
///
/// Flat basis indexing: `e`-vectors by canonical root index, then
/// `h_1 … h_n`, then `f`-vectors by canonical root index.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub rank: usize,
    pub num_roots: usize,
    pub matrix_dim: usize,
    e_mats: Vec<Matrix>,
    h_mats: Vec<Matrix>,
    f_mats: Vec<Matrix>,
    bracket_table: Vec<Vec<Vec<(usize, i64)>>>,
    weights: Vec<Vec<i64>>,
}

impl LieAlgebra {
    pub fn dim(&self) -> usize {
        2 * self.num_roots + self.rank
    }

    pub fn idx_e(&self, root: usize) -> usize {
        root
    }

    pub fn idx_h(&self, k: usize) -> usize {
        self.num_roots + k
    }

    pub fn idx_f(&self, root: usize) -> usize {
        self.num_roots + self.rank + root
    }

    pub fn e_mat(&self, root: usize) -> &Matrix {
        &self.e_mats[root]
    }

    pub fn h_mat(&self, k: usize) -> &Matrix {
        &self.h_mats[k]
    }

    pub fn f_mat(&self, root: usize) -> &Matrix {
        &self.f_mats[root]
    }

    pub fn basis_mat(&self, idx: usize) -> &Matrix {
        if idx < self.num_roots {
            &self.e_mats[idx]
        } else if idx < self.num_roots + self.rank {
            &self.h_mats[idx - self.num_roots]
        } else {
            &self.f_mats[idx - self.num_roots - self.rank]
        }
    }

    /// Weight of a basis vector in Euclidean coordinates (zero for Cartan).
    pub fn basis_weight(&self, idx: usize) -> &[i64] {
        &self.weights[idx]
    }

    /// Bracket of two basis elements as a sparse integer combination.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.bracket_table[i][j]
    }

    /// Bilinear bracket of two integer combinations of basis elements.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::new();
        for (&i, &ci) in x {
            for (&j, &cj) in y {
                for &(k, c) in self.bracket_basis(i, j) {
                    let entry = out.entry(k).or_insert(0);
                    *entry += ci * cj * c;
                    if *entry == 0 {
                        out.remove(&k);
                    }
                }
            }
        }
        out
    }
}

/// Builds the Chevalley basis and bracket table for the given root system.
pub fn build_lie_algebra(rs: &RootSystem) -> Result<LieAlgebra> {
    let n = rs.rank;
    let nf = rs.num_roots();
    let dim = rs.kind.matrix_dim(n);

    let f_mats = build_f_matrices(rs, dim);
    let e_mats: Vec<Matrix> = f_mats.iter().map(Matrix::transpose).collect();
    let h_mats: Vec<Matrix> = (0..n)
        .map(|k| {
            let i = rs.simple_root_index(k + 1);
            e_mats[i].commutator(&f_mats[i])
        })
        .collect();

    for m in f_mats.iter().chain(&e_mats).chain(&h_mats) {
        assert!(!m.is_zero(), "basis matrices are nonzero");
        match rs.kind {
            LieKind::A => assert_eq!(m.trace(), 0, "sl matrices are traceless"),
            LieKind::C => assert!(in_sp(m, n), "matrices satisfy the symplectic relation"),
        }
    }

    // Coroot cross-check: the matrix bracket [e_α, f_α] must reproduce the
    // combinatorial coroot expansion over h_1 … h_n for every root.
    for idx in 0..nf {
        let coroot = e_mats[idx].commutator(&f_mats[idx]);
        let mut expected = Matrix::zero(dim);
        for (k, &c) in rs.coroot_on_simples(idx).iter().enumerate() {
            expected = expected.add(&h_mats[k].scale(c));
        }
        assert_eq!(
            coroot,
            expected,
            "coroot of {} matches its expansion",
            rs.root_name(idx)
        );
    }

    let mut weights: Vec<Vec<i64>> = Vec::with_capacity(2 * nf + n);
    let coord_len = rs.e_coords(0).len();
    for idx in 0..nf {
        weights.push(rs.e_coords(idx).to_vec());
    }
    for _ in 0..n {
        weights.push(vec![0; coord_len]);
    }
    for idx in 0..nf {
        weights.push(rs.e_coords(idx).iter().map(|&c| -c).collect());
    }

    let total = 2 * nf + n;
    let alg = LieAlgebra {
        rank: n,
        num_roots: nf,
        matrix_dim: dim,
        e_mats,
        h_mats,
        f_mats,
        bracket_table: vec![vec![Vec::new(); total]; total],
        weights,
    };

    let mut table = vec![vec![Vec::new(); total]; total];
    for i in 0..total {
        for j in 0..total {
            let comm = alg.basis_mat(i).commutator(alg.basis_mat(j));
            let wt: Vec<i64> = alg.weights[i]
                .iter()
                .zip(&alg.weights[j])
                .map(|(a, b)| a + b)
                .collect();
            let combo = decompose(rs, &alg, &comm, &wt);
            for &(_, c) in &combo {
                assert!(c.abs() <= 2, "structure constants stay within ±2");
            }
            table[i][j] = combo;
        }
    }

    Ok(LieAlgebra {
        bracket_table: table,
        ..alg
    })
}

fn build_f_matrices(rs: &RootSystem, dim: usize) -> Vec<Matrix> {
    let n = rs.rank;
    let mut mats: Vec<Option<Matrix>> = vec![None; rs.num_roots()];

    let simple_f = |i: usize| -> Matrix {
        match rs.kind {
            LieKind::A => Matrix::unit(dim, i, i - 1),
            LieKind::C => {
                if i < n {
                    // e_i = E_{i,i+1} − E_{n+i+1,n+i}; f_i is its transpose.
                    Matrix::unit(dim, i, i - 1).sub(&Matrix::unit(dim, n + i - 1, n + i))
                } else {
                    Matrix::unit(dim, 2 * n - 1, n - 1)
                }
            }
        }
    };

    // Plain segments by increasing length: f_{i,j} = [f_i, f_{i+1,j}].
    for len in 0..n {
        for i in 1..=n - len {
            let j = i + len;
            let idx = rs.index_of_segment(i, ChainEnd::Plain(j));
            let m = if len == 0 {
                simple_f(i)
            } else {
                let tail = mats[rs.index_of_segment(i + 1, ChainEnd::Plain(j))]
                    .clone()
                    .unwrap();
                simple_f(i).commutator(&tail)
            };
            mats[idx] = Some(m);
        }
    }

    if rs.kind == LieKind::C {
        // Long roots 2ε_j: halved bracket of the short pair ε_j ∓ ε_n.
        for j in (1..n).rev() {
            let left = mats[rs.index_of_segment(j, ChainEnd::Plain(n - 1))]
                .clone()
                .unwrap();
            let right = mats[rs.index_of_segment(j, ChainEnd::Plain(n))]
                .clone()
                .unwrap();
            let idx = rs.index_of_segment(j, ChainEnd::Barred(j));
            mats[idx] = Some(left.commutator(&right).scale_div(2));
            // Barred segments above the diagonal: f_{i,j̄} = [f_i, f_{i+1,j̄}].
            for i in (1..j).rev() {
                let tail = mats[rs.index_of_segment(i + 1, ChainEnd::Barred(j))]
                    .clone()
                    .unwrap();
                let here = rs.index_of_segment(i, ChainEnd::Barred(j));
                mats[here] = Some(simple_f(i).commutator(&tail));
            }
        }
    }

    mats.into_iter().map(Option::unwrap).collect()
}

fn in_sp(m: &Matrix, n: usize) -> bool {
    // M is symplectic-Lie iff  Mᵀ J + J M = 0  for J = [[0, I], [−I, 0]].
    let dim = 2 * n;
    let mut j = Matrix::zero(dim);
    for k in 0..n {
        j.set(k, n + k, 1);
        j.set(n + k, k, -1);
    }
    m.transpose().mul(&j).add(&j.mul(m)).is_zero()
}

/// Writes a commutator of basis matrices back over the basis, using the
/// weight of the product to pick the only possible target.
fn decompose(rs: &RootSystem, alg: &LieAlgebra, m: &Matrix, weight: &[i64]) -> Vec<(usize, i64)> {
    if m.is_zero() {
        return Vec::new();
    }
    if weight.iter().all(|&c| c == 0) {
        return cartan_decompose(rs, alg, m);
    }
    let (target, flip) = match rs.root_by_e_coords(weight) {
        Some(idx) => (alg.idx_e(idx), idx),
        None => {
            let neg: Vec<i64> = weight.iter().map(|&c| -c).collect();
            let idx = rs
                .root_by_e_coords(&neg)
                .expect("a nonzero commutator lands on a root space");
            (alg.idx_f(idx), idx)
        }
    };
    let _ = flip;
    let basis = alg.basis_mat(target);
    let (r, c) = first_nonzero(basis);
    let q = m.get(r, c) / basis.get(r, c);
    assert_eq!(
        *m,
        basis.scale(q),
        "root-space commutators are scalar multiples of the basis vector"
    );
    vec![(target, q)]
}

fn cartan_decompose(rs: &RootSystem, alg: &LieAlgebra, m: &Matrix) -> Vec<(usize, i64)> {
    assert!(m.is_diagonal(), "weight-zero commutators are diagonal");
    let n = rs.rank;
    // Both realizations admit the same partial-sum solve on the leading
    // n diagonal entries.
    let coeffs: Vec<i64> = (0..n)
        .scan(0i64, |acc, k| {
            *acc += m.get(k, k);
            Some(*acc)
        })
        .collect();
    let mut rebuilt = Matrix::zero(alg.matrix_dim);
    for (k, &c) in coeffs.iter().enumerate() {
        rebuilt = rebuilt.add(&alg.h_mat(k).scale(c));
    }
    assert_eq!(*m, rebuilt, "Cartan solve reconstructs the input");
    coeffs
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .map(|(k, c)| (alg.idx_h(k), c))
        .collect()
}

fn first_nonzero(m: &Matrix) -> (usize, usize) {
    for r in 0..m.n {
        for c in 0..m.n {
            if m.get(r, c) != 0 {
                return (r, c);
            }
        }
    }
    panic!("matrix is zero");
}

/// Convenience: the root index of a segment, for tests and callers that
/// address roots by their chain data.
pub fn segment(rs: &RootSystem, start: usize, end: ChainEnd) -> usize {
    rs.index_of(PositiveRoot { start, end })
        .expect("segment is a root")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystem;

    fn setup(kind: LieKind, rank: usize) -> (RootSystem, LieAlgebra) {
        let rs = RootSystem::new(kind, rank).unwrap();
        let lie = build_lie_algebra(&rs).unwrap();
        (rs, lie)
    }

    fn single(idx: usize) -> LieElement {
        let mut e = LieElement::new();
        e.insert(idx, 1);
        e
    }

    #[test]
    fn sl2_relations() {
        let (rs, lie) = setup(LieKind::A, 1);
        let r = rs.simple_root_index(1);
        let (e, h, f) = (lie.idx_e(r), lie.idx_h(0), lie.idx_f(r));
        assert_eq!(lie.bracket_basis(e, f), &[(h, 1)]);
        assert_eq!(lie.bracket_basis(h, e), &[(e, 2)]);
        assert_eq!(lie.bracket_basis(h, f), &[(f, -2)]);
    }

    #[test]
    fn a2_composite_signs_are_frozen() {
        let (rs, lie) = setup(LieKind::A, 2);
        let top = segment(&rs, 1, ChainEnd::Plain(2));
        let a1 = rs.simple_root_index(1);
        let a2 = rs.simple_root_index(2);
        // These two signs pin the normalization that the straightening
        // coefficients depend on.
        assert_eq!(
            lie.bracket_basis(lie.idx_e(a1), lie.idx_f(top)),
            &[(lie.idx_f(a2), 1)]
        );
        assert_eq!(
            lie.bracket_basis(lie.idx_e(a2), lie.idx_f(top)),
            &[(lie.idx_f(a1), -1)]
        );
        // f_{α_1} and f_{α_1+α_2} commute.
        assert!(lie.bracket_basis(lie.idx_f(a1), lie.idx_f(top)).is_empty());
        // [h_1, f_{α_1+α_2}] = −f_{α_1+α_2}.
        assert_eq!(
            lie.bracket_basis(lie.idx_h(0), lie.idx_f(top)),
            &[(lie.idx_f(top), -1)]
        );
    }

    #[test]
    fn c2_bracket_values_are_frozen() {
        let (rs, lie) = setup(LieKind::C, 2);
        let long = segment(&rs, 1, ChainEnd::Barred(1));
        let mid = segment(&rs, 1, ChainEnd::Plain(2));
        let a1 = rs.simple_root_index(1);
        let a2 = rs.simple_root_index(2);
        assert_eq!(
            lie.bracket_basis(lie.idx_e(a1), lie.idx_f(long)),
            &[(lie.idx_f(mid), 1)]
        );
        assert_eq!(
            lie.bracket_basis(lie.idx_e(a1), lie.idx_f(mid)),
            &[(lie.idx_f(a2), 2)]
        );
        assert_eq!(
            lie.bracket_basis(lie.idx_e(mid), lie.idx_f(long)),
            &[(lie.idx_f(a1), -1)]
        );
        assert_eq!(
            lie.bracket_basis(lie.idx_f(a1), lie.idx_f(mid)),
            &[(lie.idx_f(long), 2)]
        );
        assert!(lie.bracket_basis(lie.idx_e(a2), lie.idx_f(long)).is_empty());
        assert_eq!(
            lie.bracket_basis(lie.idx_f(a1), lie.idx_f(a2)),
            &[(lie.idx_f(mid), 1)]
        );
    }

    #[test]
    fn coroot_brackets_match_for_all_roots_up_to_rank_three() {
        for (kind, n) in [
            (LieKind::A, 1),
            (LieKind::A, 2),
            (LieKind::A, 3),
            (LieKind::C, 1),
            (LieKind::C, 2),
            (LieKind::C, 3),
        ] {
            let (rs, lie) = setup(kind, n);
            for idx in 0..rs.num_roots() {
                let got = lie.bracket_basis(lie.idx_e(idx), lie.idx_f(idx)).to_vec();
                let expected: Vec<(usize, i64)> = rs
                    .coroot_on_simples(idx)
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| c != 0)
                    .map(|(k, &c)| (lie.idx_h(k), c))
                    .collect();
                assert_eq!(got, expected, "{kind:?}_{n} root {}", rs.root_name(idx));
            }
        }
    }

    #[test]
    fn cartan_acts_by_the_root_pairing() {
        for (kind, n) in [(LieKind::A, 3), (LieKind::C, 3)] {
            let (rs, lie) = setup(kind, n);
            for idx in 0..rs.num_roots() {
                for k in 0..n {
                    // ⟨α, α_k∨⟩ from the coroot pairing of a basis weight.
                    let pairing: i64 = {
                        let simple = rs.simple_root_index(k + 1);
                        let e_k = rs.e_coords(simple).to_vec();
                        let alpha = rs.e_coords(idx);
                        // For both realizations ⟨α, α_k∨⟩ = (α, α_k)·2/(α_k,α_k)
                        // computed in ε-coordinates.
                        let dot: i64 = alpha.iter().zip(&e_k).map(|(a, b)| a * b).sum();
                        let norm: i64 = e_k.iter().map(|b| b * b).sum();
                        2 * dot / norm
                    };
                    assert_eq!(
                        lie.bracket_basis(lie.idx_h(k), lie.idx_e(idx)).to_vec(),
                        if pairing == 0 {
                            vec![]
                        } else {
                            vec![(lie.idx_e(idx), pairing)]
                        }
                    );
                    assert_eq!(
                        lie.bracket_basis(lie.idx_h(k), lie.idx_f(idx)).to_vec(),
                        if pairing == 0 {
                            vec![]
                        } else {
                            vec![(lie.idx_f(idx), -pairing)]
                        }
                    );
                }
            }
        }
    }

    #[test]
    fn brackets_are_antisymmetric() {
        for (kind, n) in [(LieKind::A, 2), (LieKind::C, 2)] {
            let (_, lie) = setup(kind, n);
            for i in 0..lie.dim() {
                for j in 0..lie.dim() {
                    let mut neg: Vec<(usize, i64)> = lie
                        .bracket_basis(j, i)
                        .iter()
                        .map(|&(k, c)| (k, -c))
                        .collect();
                    neg.sort();
                    let mut fwd = lie.bracket_basis(i, j).to_vec();
                    fwd.sort();
                    assert_eq!(fwd, neg);
                }
            }
        }
    }

    #[test]
    fn jacobi_identity_holds_exhaustively_up_to_rank_three() {
        for (kind, n) in [
            (LieKind::A, 2),
            (LieKind::A, 3),
            (LieKind::C, 2),
            (LieKind::C, 3),
        ] {
            let (_, lie) = setup(kind, n);
            let dim = lie.dim();
            for x in 0..dim {
                for y in 0..dim {
                    let xy = lie.bracket(&single(x), &single(y));
                    for z in 0..dim {
                        let yz = lie.bracket(&single(y), &single(z));
                        let zx = lie.bracket(&single(z), &single(x));
                        let mut total = lie.bracket(&xy, &single(z));
                        for (k, v) in lie.bracket(&yz, &single(x)) {
                            let e = total.entry(k).or_insert(0);
                            *e += v;
                            if *e == 0 {
                                total.remove(&k);
                            }
                        }
                        for (k, v) in lie.bracket(&zx, &single(y)) {
                            let e = total.entry(k).or_insert(0);
                            *e += v;
                            if *e == 0 {
                                total.remove(&k);
                            }
                        }
                        assert!(total.is_empty(), "{kind:?}_{n}: jacobi at ({x},{y},{z})");
                    }
                }
            }
        }
    }

    #[test]
    fn long_root_vector_has_a_single_unit_entry_in_c2() {
        let (rs, lie) = setup(LieKind::C, 2);
        let long = segment(&rs, 1, ChainEnd::Barred(1));
        let m = lie.f_mat(long);
        let entries: Vec<(usize, usize, i64)> = (0..m.n)
            .flat_map(|r| (0..m.n).map(move |c| (r, c)))
            .filter(|&(r, c)| m.get(r, c) != 0)
            .map(|(r, c)| (r, c, m.get(r, c)))
            .collect();
        assert_eq!(entries, vec![(2, 0, 1)]);
    }

    #[test]
    fn grading_lands_in_the_right_weight_space() {
        for (kind, n) in [(LieKind::A, 3), (LieKind::C, 3)] {
            let (_, lie) = setup(kind, n);
            for i in 0..lie.dim() {
                for j in 0..lie.dim() {
                    let wt: Vec<i64> = lie
                        .basis_weight(i)
                        .iter()
                        .zip(lie.basis_weight(j))
                        .map(|(a, b)| a + b)
                        .collect();
                    for &(k, _) in lie.bracket_basis(i, j) {
                        assert_eq!(lie.basis_weight(k), &wt[..]);
                    }
                }
            }
        }
    }
}
