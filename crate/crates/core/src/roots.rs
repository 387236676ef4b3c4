//! Root-system combinatorics for types A_n and C_n.
//!
//! Positive roots are encoded as segments of the extended chain
//! `1 < 2 < … < n < n̄−1 < … < 1̄`: the root `α_{i,j}` is the consecutive sum
//! `α_i + … + α_j` of simple roots, and in type C the segment may run past
//! the top node and come back down, giving the barred roots
//! `α_{i,j̄} = α_i + … + α_n + α_{n−1} + … + α_j`.  Type A uses only the
//! ascending half of the chain.
//!
//! This module owns the natural partial order on positive roots, the total
//! "good" ordering that drives the monomial order downstream, coroot
//! pairings, and the Weyl dimension formula used as an independent
//! dimension oracle.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use num::{BigInt, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Supported simple Lie types.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LieKind {
    A,
    C,
}

impl LieKind {
    /// One-letter name, as used in messages and reports.
    pub fn letter(self) -> char {
        match self {
            LieKind::A => 'A',
            LieKind::C => 'C',
        }
    }

    /// Dimension of the defining matrix realization (`n+1` resp. `2n`).
    pub fn matrix_dim(self, rank: usize) -> usize {
        match self {
            LieKind::A => rank + 1,
            LieKind::C => 2 * rank,
        }
    }
}

/// End node of a root segment in the extended chain.
///
/// `Plain(j)` is the node `j` on the ascending half, `Barred(j)` the node
/// `j̄` on the descending half (type C only, `j ≤ n−1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ChainEnd {
    Plain(usize),
    Barred(usize),
}

/// A positive root `α_{start,end}`, with 1-based `start`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PositiveRoot {
    pub start: usize,
    pub end: ChainEnd,
}

/// Outcome of comparing two positive roots in the natural partial order.
///
/// `LessEq` covers equality; `Greater` means strictly greater.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootCmp {
    LessEq,
    Greater,
    Incomparable,
}

/// A dominant integral weight `λ = Σ m_i ω_i`, stored by its coefficients
/// over the fundamental weights.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DominantWeight {
    m: Vec<u32>,
}

impl DominantWeight {
    pub fn new(m: Vec<u32>) -> Self {
        DominantWeight { m }
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight { m: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self) -> &[u32] {
        &self.m
    }

    /// Coefficient of `ω_i` (1-based).
    pub fn m_at(&self, i: usize) -> u32 {
        self.m[i - 1]
    }

    /// Partition coordinate `λ_i = m_i + … + m_n` (1-based, `λ_{n+1} = 0`).
    pub fn lambda(&self, i: usize) -> u32 {
        self.m.iter().skip(i - 1).sum()
    }

    /// The consecutive sum `m_i + … + m_j` (1-based, inclusive).
    pub fn m_sum(&self, i: usize, j: usize) -> u32 {
        self.m[i - 1..=j - 1].iter().sum()
    }

    pub fn total(&self) -> u32 {
        self.m.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|&v| v == 0)
    }
}

/// The positive roots of a fixed type and rank, together with every derived
/// ordering and coordinate table used downstream.
///
/// Roots are held in the good ordering, largest first; the position of a
/// root in that list is its *canonical index*, and all other modules key
/// their exponent vectors and containers by it.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: LieKind,
    pub rank: usize,
    roots: Vec<PositiveRoot>,
    simple_coords: Vec<Vec<i64>>,
    e_coords: Vec<Vec<i64>>,
    heights: Vec<u32>,
    coroot_simple: Vec<Vec<i64>>,
    pos_index: BTreeMap<(usize, usize), usize>,
    e_coord_index: BTreeMap<Vec<i64>, usize>,
    simple_index: Vec<usize>,
    f_word_rank: Vec<usize>,
}

/// Builds the full root system, rejecting unsupported types at the CLI
/// boundary before this is ever reached; rank 0 is rejected here.
pub fn positive_roots(kind: LieKind, rank: usize) -> Result<RootSystem> {
    RootSystem::new(kind, rank)
}

impl RootSystem {
    pub fn new(kind: LieKind, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank {
                kind: kind.letter(),
                rank,
            });
        }
        let n = rank;
        let mut roots = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                roots.push(PositiveRoot {
                    start: i,
                    end: ChainEnd::Plain(j),
                });
            }
            if kind == LieKind::C {
                for j in (i..n).rev() {
                    roots.push(PositiveRoot {
                        start: i,
                        end: ChainEnd::Barred(j),
                    });
                }
            }
        }

        let height_of = |r: &PositiveRoot| -> u32 {
            simple_coords_of(kind, n, r).iter().map(|&c| c as u32).sum()
        };
        // Good ordering: height descending, ties by start ascending.  The
        // pair (height, start) is injective on positive roots, so this is a
        // total order.
        roots.sort_by_key(|r| (Reverse(height_of(r)), r.start));

        let simple_coords: Vec<Vec<i64>> =
            roots.iter().map(|r| simple_coords_of(kind, n, r)).collect();
        let e_coords: Vec<Vec<i64>> = roots.iter().map(|r| e_coords_of(kind, n, r)).collect();
        let heights: Vec<u32> = simple_coords
            .iter()
            .map(|c| c.iter().map(|&v| v as u32).sum())
            .collect();
        let coroot_simple: Vec<Vec<i64>> =
            roots.iter().map(|r| coroot_simple_of(kind, n, r)).collect();

        let mut pos_index = BTreeMap::new();
        let mut e_coord_index = BTreeMap::new();
        for (idx, r) in roots.iter().enumerate() {
            pos_index.insert((r.start, chain_pos_of(n, r.end)), idx);
            e_coord_index.insert(e_coords[idx].clone(), idx);
        }
        let simple_index: Vec<usize> = (1..=n).map(|i| pos_index[&(i, i)]).collect();

        // Word order of the f- and e-letters inside normal-form words:
        // start descending, then chain position descending.
        let mut by_word: Vec<usize> = (0..roots.len()).collect();
        by_word.sort_by_key(|&idx| {
            (
                Reverse(roots[idx].start),
                Reverse(chain_pos_of(n, roots[idx].end)),
            )
        });
        let mut f_word_rank = vec![0usize; roots.len()];
        for (rank_pos, &idx) in by_word.iter().enumerate() {
            f_word_rank[idx] = rank_pos;
        }

        Ok(RootSystem {
            kind,
            rank,
            roots,
            simple_coords,
            e_coords,
            heights,
            coroot_simple,
            pos_index,
            e_coord_index,
            simple_index,
            f_word_rank,
        })
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// The roots in the good ordering, largest first.
    pub fn good_ordering(&self) -> &[PositiveRoot] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> PositiveRoot {
        self.roots[idx]
    }

    /// Canonical index of a root, if it belongs to this system.
    pub fn index_of(&self, r: PositiveRoot) -> Option<usize> {
        self.pos_index
            .get(&(r.start, chain_pos_of(self.rank, r.end)))
            .copied()
    }

    /// Canonical index of the simple root `α_k` (1-based).
    pub fn simple_root_index(&self, k: usize) -> usize {
        self.simple_index[k - 1]
    }

    /// Canonical index of the root `α_{i,j}` with both parts given as
    /// chain data; panics if absent.
    pub fn index_of_segment(&self, start: usize, end: ChainEnd) -> usize {
        self.index_of(PositiveRoot { start, end })
            .expect("segment is a root of this system")
    }

    /// Position of a chain end in the extended chain `1 … n n̄−1 … 1̄`.
    pub fn chain_pos(&self, end: ChainEnd) -> usize {
        chain_pos_of(self.rank, end)
    }

    /// Expansion into simple-root coordinates.
    pub fn simple_coords(&self, idx: usize) -> &[i64] {
        &self.simple_coords[idx]
    }

    /// Coordinates in the standard Euclidean realization (`ε`-basis);
    /// length `n+1` for type A and `n` for type C.
    pub fn e_coords(&self, idx: usize) -> &[i64] {
        &self.e_coords[idx]
    }

    /// Root with the given Euclidean coordinates, if any.
    pub fn root_by_e_coords(&self, coords: &[i64]) -> Option<usize> {
        self.e_coord_index.get(coords).copied()
    }

    /// Number of simple-root summands.
    pub fn height(&self, idx: usize) -> u32 {
        self.heights[idx]
    }

    /// Expansion of the coroot element `h_α` over `h_1 … h_n`.
    pub fn coroot_on_simples(&self, idx: usize) -> &[i64] {
        &self.coroot_simple[idx]
    }

    /// Position of the root's f-letter inside normal-form words.
    pub fn word_rank(&self, idx: usize) -> usize {
        self.f_word_rank[idx]
    }

    /// Natural partial order: `a ≤ b` iff the starts and the chain
    /// positions of the ends are both `≤`.
    pub fn is_leq(&self, a: usize, b: usize) -> bool {
        let ra = self.roots[a];
        let rb = self.roots[b];
        ra.start <= rb.start && self.chain_pos(ra.end) <= self.chain_pos(rb.end)
    }

    /// Ternary comparison in the natural partial order.
    pub fn root_leq(&self, a: usize, b: usize) -> RootCmp {
        if self.is_leq(a, b) {
            RootCmp::LessEq
        } else if self.is_leq(b, a) {
            RootCmp::Greater
        } else {
            RootCmp::Incomparable
        }
    }

    /// Display name: `a[i,j]` for plain ends, `a[i,-j]` for barred ends.
    pub fn root_name(&self, idx: usize) -> String {
        let r = self.roots[idx];
        match r.end {
            ChainEnd::Plain(j) => format!("a[{},{}]", r.start, j),
            ChainEnd::Barred(j) => format!("a[{},-{}]", r.start, j),
        }
    }

    /// Pairing `λ(h_α)` of a dominant weight with the coroot of `α`;
    /// non-negative for dominant weights.
    pub fn coroot_pairing(&self, lambda: &DominantWeight, idx: usize) -> i64 {
        assert_eq!(lambda.rank(), self.rank, "weight rank mismatch");
        self.coroot_simple[idx]
            .iter()
            .zip(lambda.m())
            .map(|(&c, &m)| c * m as i64)
            .sum()
    }

    /// Exact dimension of the simple module `V(λ)` by the Weyl product
    /// formula `Π ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩` over the positive roots.
    pub fn weyl_dim(&self, lambda: &DominantWeight) -> u64 {
        assert_eq!(lambda.rank(), self.rank, "weight rank mismatch");
        let shifted = DominantWeight::new(lambda.m().iter().map(|&v| v + 1).collect());
        let rho = DominantWeight::new(vec![1; self.rank]);
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for idx in 0..self.num_roots() {
            num *= BigInt::from(self.coroot_pairing(&shifted, idx));
            den *= BigInt::from(self.coroot_pairing(&rho, idx));
        }
        let (q, r) = num::Integer::div_rem(&num, &den);
        assert!(r.is_zero(), "Weyl dimension product must divide exactly");
        q.to_u64().expect("dimension fits in u64 at this scale")
    }
}

fn chain_pos_of(n: usize, end: ChainEnd) -> usize {
    match end {
        ChainEnd::Plain(j) => j,
        ChainEnd::Barred(j) => 2 * n - j,
    }
}

fn simple_coords_of(kind: LieKind, n: usize, r: &PositiveRoot) -> Vec<i64> {
    let mut c = vec![0i64; n];
    match r.end {
        ChainEnd::Plain(j) => {
            for k in r.start..=j {
                c[k - 1] = 1;
            }
        }
        ChainEnd::Barred(j) => {
            debug_assert_eq!(kind, LieKind::C);
            for k in r.start..=n {
                c[k - 1] += 1;
            }
            for k in j..=n - 1 {
                c[k - 1] += 1;
            }
        }
    }
    c
}

fn e_coords_of(kind: LieKind, n: usize, r: &PositiveRoot) -> Vec<i64> {
    match kind {
        LieKind::A => {
            let mut c = vec![0i64; n + 1];
            let ChainEnd::Plain(j) = r.end else {
                panic!("type A roots end on the ascending half");
            };
            c[r.start - 1] = 1;
            c[j] = -1;
            c
        }
        LieKind::C => {
            let mut c = vec![0i64; n];
            match r.end {
                ChainEnd::Plain(j) if j < n => {
                    c[r.start - 1] = 1;
                    c[j] = -1;
                }
                ChainEnd::Plain(_) => {
                    // α_{i,n} = ε_i + ε_n; for i = n this is the long 2ε_n.
                    c[r.start - 1] += 1;
                    c[n - 1] += 1;
                }
                ChainEnd::Barred(j) => {
                    // α_{i,j̄} = ε_i + ε_j; for i = j this is the long 2ε_i.
                    c[r.start - 1] += 1;
                    c[j - 1] += 1;
                }
            }
            c
        }
    }
}

fn coroot_simple_of(kind: LieKind, n: usize, r: &PositiveRoot) -> Vec<i64> {
    let mut c = vec![0i64; n];
    match kind {
        LieKind::A => {
            let ChainEnd::Plain(j) = r.end else {
                panic!("type A roots end on the ascending half");
            };
            for k in r.start..=j {
                c[k - 1] = 1;
            }
        }
        LieKind::C => match r.end {
            ChainEnd::Plain(j) if j < n => {
                for k in r.start..=j {
                    c[k - 1] = 1;
                }
            }
            ChainEnd::Plain(_) if r.start == n => {
                // (2ε_n)∨ = ε_n = α_n∨.
                c[n - 1] = 1;
            }
            ChainEnd::Plain(_) => {
                // (ε_i + ε_n)∨ = ε_i + ε_n = α_i∨ + … + α_{n−1}∨ + 2 α_n∨.
                for k in r.start..n {
                    c[k - 1] = 1;
                }
                c[n - 1] = 2;
            }
            ChainEnd::Barred(j) if r.start == j => {
                // (2ε_i)∨ = ε_i = α_i∨ + … + α_n∨.
                for k in r.start..=n {
                    c[k - 1] = 1;
                }
            }
            ChainEnd::Barred(j) => {
                // (ε_i + ε_j)∨ = α_i∨ + … + α_{j−1}∨ + 2(α_j∨ + … + α_n∨).
                for k in r.start..j {
                    c[k - 1] = 1;
                }
                for k in j..=n {
                    c[k - 1] = 2;
                }
            }
        },
    }
    c
}
