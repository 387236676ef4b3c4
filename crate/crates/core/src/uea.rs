//! Exact arithmetic in the universal enveloping algebra.
//!
//! Elements are rational linear combinations of PBW monomials
//! `f^a h^b e^c`.  Inside a normal-form word the f- and e-letters are
//! arranged by start descending, then chain position descending — the order
//! in which straightened elements are also displayed — while exponent
//! vectors are laid out over the good ordering, largest root first.
//!
//! The monomial comparison used for leading terms is a block order: the
//! f-blocks are compared first, then h, then e, each by graded reverse
//! lexicographic (total degree first; ties broken at the last differing
//! variable, where the smaller exponent wins).  Multiplication rewrites
//! adjacent out-of-order letter pairs `x·y → y·x + [x,y]`; every correction
//! strictly lowers total degree, so the rewriting terminates and leading
//! terms are multiplicative on f-monomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::chevalley::{build_lie_algebra, LieAlgebra};
use crate::error::{Error, Result};
use crate::roots::{DominantWeight, LieKind, RootSystem};

/// A single PBW generator: a root vector or a Cartan element.
///
/// Root letters carry the canonical index of their root; `H` carries the
/// 0-based simple index.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    F(usize),
    H(usize),
    E(usize),
}

/// Which product to use: the honest enveloping-algebra product, or the
/// degeneration in which f-letters commute exactly (h and e unchanged).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductKind {
    Standard,
    PbwDegenerate,
}

/// Which adjacent inversion the rewriting kernel resolves first.  The
/// result is independent of the choice; both are kept so tests can assert
/// that independence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RewriteStrategy {
    RightmostFirst,
    LeftmostFirst,
}

/// Exponent vectors of a normal-form monomial `f^a h^b e^c`.
///
/// The f- and e-blocks are indexed by canonical root index (good ordering,
/// largest first); the h-block by simple index.  `Ord` implements the
/// monomial comparison order described in the module docs, so the last key
/// of a sorted term map is the leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PBWMonomial {
    pub f: Vec<u32>,
    pub h: Vec<u32>,
    pub e: Vec<u32>,
}

fn cmp_block_revlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&v| v as u64).sum();
    let db: u64 = b.iter().map(|&v| v as u64).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // Smaller exponent at the last differing variable wins.
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl Ord for PBWMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_block_revlex(&self.f, &other.f)
            .then_with(|| cmp_block_revlex(&self.h, &other.h))
            .then_with(|| cmp_block_revlex(&self.e, &other.e))
    }
}

impl PartialOrd for PBWMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The monomial comparison order, exposed under its operation name.
pub fn compare_monomials(a: &PBWMonomial, b: &PBWMonomial) -> Ordering {
    a.cmp(b)
}

impl PBWMonomial {
    pub fn one(num_roots: usize, rank: usize) -> Self {
        PBWMonomial {
            f: vec![0; num_roots],
            h: vec![0; rank],
            e: vec![0; num_roots],
        }
    }

    pub fn from_f_exponents(exps: &[u32], rank: usize) -> Self {
        PBWMonomial {
            f: exps.to_vec(),
            h: vec![0; rank],
            e: vec![0; exps.len()],
        }
    }

    pub fn is_one(&self) -> bool {
        self.total_degree() == 0
    }

    pub fn f_degree(&self) -> u64 {
        self.f.iter().map(|&v| v as u64).sum()
    }

    pub fn total_degree(&self) -> u64 {
        self.f_degree()
            + self.h.iter().map(|&v| v as u64).sum::<u64>()
            + self.e.iter().map(|&v| v as u64).sum::<u64>()
    }

    pub fn is_f_only(&self) -> bool {
        self.h.iter().all(|&v| v == 0) && self.e.iter().all(|&v| v == 0)
    }

    /// Componentwise product (juxtaposition of commuting powers).
    pub fn mul(&self, other: &Self) -> Self {
        PBWMonomial {
            f: self.f.iter().zip(&other.f).map(|(a, b)| a + b).collect(),
            h: self.h.iter().zip(&other.h).map(|(a, b)| a + b).collect(),
            e: self.e.iter().zip(&other.e).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.f.iter().zip(&other.f).all(|(a, b)| a <= b)
            && self.h.iter().zip(&other.h).all(|(a, b)| a <= b)
            && self.e.iter().zip(&other.e).all(|(a, b)| a <= b)
    }

    /// Componentwise quotient; caller guarantees divisibility.
    pub fn div(&self, other: &Self) -> Self {
        PBWMonomial {
            f: self.f.iter().zip(&other.f).map(|(a, b)| a - b).collect(),
            h: self.h.iter().zip(&other.h).map(|(a, b)| a - b).collect(),
            e: self.e.iter().zip(&other.e).map(|(a, b)| a - b).collect(),
        }
    }
}

/// A finite rational combination of PBW monomials, kept sorted by the
/// monomial order with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UEAElement {
    terms: BTreeMap<PBWMonomial, BigRational>,
}

impl UEAElement {
    pub fn zero() -> Self {
        UEAElement::default()
    }

    pub fn from_term(m: PBWMonomial, c: BigRational) -> Self {
        let mut el = UEAElement::zero();
        el.add_term(m, c);
        el
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PBWMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PBWMonomial) -> Option<&BigRational> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return UEAElement::zero();
        }
        UEAElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Leading monomial and coefficient under the comparison order.
    pub fn leading_term(&self) -> Result<(&PBWMonomial, &BigRational)> {
        self.terms.last_key_value().ok_or(Error::ZeroElement)
    }

    /// Rescales so the leading coefficient is 1.
    pub fn monic(&self) -> Result<Self> {
        let (_, lc) = self.leading_term()?;
        let inv = BigRational::one() / lc.clone();
        Ok(self.scale(&inv))
    }
}

/// Everything needed to compute in one enveloping algebra: the root system,
/// the Chevalley basis with its bracket table, and the letter orderings the
/// rewriting kernel consults.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub kind: LieKind,
    pub rank: usize,
    pub rs: RootSystem,
    pub lie: LieAlgebra,
    /// Canonical root indices arranged in word order.
    f_by_word: Vec<usize>,
    /// Bracket of two letters, flattened over letter-id pairs.
    letter_brackets: Vec<Vec<(Letter, i64)>>,
}

impl Algebra {
    pub fn new(kind: LieKind, rank: usize) -> Result<Self> {
        let rs = RootSystem::new(kind, rank)?;
        let lie = build_lie_algebra(&rs)?;
        let nf = rs.num_roots();
        let n = rank;

        let mut f_by_word: Vec<usize> = (0..nf).collect();
        f_by_word.sort_by_key(|&r| rs.word_rank(r));

        let letter_count = 2 * nf + n;
        let all_letters: Vec<Letter> = (0..letter_count)
            .map(|id| {
                if id < nf {
                    Letter::F(id)
                } else if id < nf + n {
                    Letter::H(id - nf)
                } else {
                    Letter::E(id - nf - n)
                }
            })
            .collect();
        let mut letter_brackets = vec![Vec::new(); letter_count * letter_count];
        for &x in &all_letters {
            for &y in &all_letters {
                let combo = lie.bracket_basis(lie_index(&lie, x), lie_index(&lie, y));
                letter_brackets[letter_id(nf, n, x) * letter_count + letter_id(nf, n, y)] = combo
                    .iter()
                    .map(|&(k, c)| (letter_from_lie(&lie, k), c))
                    .collect();
            }
        }

        Ok(Algebra {
            kind,
            rank,
            rs,
            lie,
            f_by_word,
            letter_brackets,
        })
    }

    pub fn num_roots(&self) -> usize {
        self.rs.num_roots()
    }

    /// Canonical root indices in the order their letters appear in words.
    pub fn roots_in_word_order(&self) -> &[usize] {
        &self.f_by_word
    }

    /// Position of a letter inside normal-form words: all f-letters first
    /// (word order), then `h_1 … h_n`, then e-letters (word order).
    pub fn word_rank(&self, l: Letter) -> usize {
        let nf = self.num_roots();
        match l {
            Letter::F(r) => self.rs.word_rank(r),
            Letter::H(k) => nf + k,
            Letter::E(r) => nf + self.rank + self.rs.word_rank(r),
        }
    }

    pub fn monomial_one(&self) -> PBWMonomial {
        PBWMonomial::one(self.num_roots(), self.rank)
    }

    /// The monomial `letter^k`.
    pub fn letter_power(&self, l: Letter, k: u32) -> PBWMonomial {
        let mut m = self.monomial_one();
        match l {
            Letter::F(r) => m.f[r] = k,
            Letter::H(i) => m.h[i] = k,
            Letter::E(r) => m.e[r] = k,
        }
        m
    }

    pub fn element_from_letter(&self, l: Letter) -> UEAElement {
        UEAElement::from_term(self.letter_power(l, 1), BigRational::one())
    }

    /// Letters of a monomial in word order, with multiplicity.
    pub fn letters_of(&self, m: &PBWMonomial) -> Vec<Letter> {
        let mut word = Vec::with_capacity(m.total_degree() as usize);
        for &r in &self.f_by_word {
            for _ in 0..m.f[r] {
                word.push(Letter::F(r));
            }
        }
        for (k, &exp) in m.h.iter().enumerate() {
            for _ in 0..exp {
                word.push(Letter::H(k));
            }
        }
        for &r in &self.f_by_word {
            for _ in 0..m.e[r] {
                word.push(Letter::E(r));
            }
        }
        word
    }

    fn monomial_from_sorted_word(&self, word: &[Letter]) -> PBWMonomial {
        let mut m = self.monomial_one();
        for &l in word {
            match l {
                Letter::F(r) => m.f[r] += 1,
                Letter::H(k) => m.h[k] += 1,
                Letter::E(r) => m.e[r] += 1,
            }
        }
        m
    }

    fn brackets_of(&self, x: Letter, y: Letter) -> &[(Letter, i64)] {
        let nf = self.num_roots();
        let count = 2 * nf + self.rank;
        &self.letter_brackets[letter_id(nf, self.rank, x) * count + letter_id(nf, self.rank, y)]
    }

    /// Normal-orders `coeff · word` into `out`.
    fn normalize_word(
        &self,
        kind: ProductKind,
        strategy: RewriteStrategy,
        coeff: BigRational,
        word: Vec<Letter>,
        out: &mut UEAElement,
    ) {
        let mut work: Vec<(BigRational, Vec<Letter>)> = vec![(coeff, word)];
        while let Some((c, w)) = work.pop() {
            let inversion = match strategy {
                RewriteStrategy::RightmostFirst => (0..w.len().saturating_sub(1))
                    .rev()
                    .find(|&i| self.word_rank(w[i]) > self.word_rank(w[i + 1])),
                RewriteStrategy::LeftmostFirst => (0..w.len().saturating_sub(1))
                    .find(|&i| self.word_rank(w[i]) > self.word_rank(w[i + 1])),
            };
            let Some(i) = inversion else {
                out.add_term(self.monomial_from_sorted_word(&w), c);
                continue;
            };
            let (x, y) = (w[i], w[i + 1]);
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            // Correction terms: x·y = y·x + [x,y].  Under the degenerate
            // product two f-letters commute exactly.
            let skip_bracket = kind == ProductKind::PbwDegenerate
                && matches!(x, Letter::F(_))
                && matches!(y, Letter::F(_));
            if !skip_bracket {
                for &(z, k) in self.brackets_of(x, y) {
                    let mut shorter = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..i]);
                    shorter.push(z);
                    shorter.extend_from_slice(&w[i + 2..]);
                    work.push((&c * BigRational::from_integer(BigInt::from(k)), shorter));
                }
            }
            work.push((c, swapped));
        }
    }

    /// Product of two elements under the given product, resolving the
    /// rightmost inversion first.
    pub fn multiply(&self, kind: ProductKind, a: &UEAElement, b: &UEAElement) -> UEAElement {
        self.multiply_with(kind, RewriteStrategy::RightmostFirst, a, b)
    }

    pub fn multiply_with(
        &self,
        kind: ProductKind,
        strategy: RewriteStrategy,
        a: &UEAElement,
        b: &UEAElement,
    ) -> UEAElement {
        let mut out = UEAElement::zero();
        for (ma, ca) in a.terms() {
            let head = self.letters_of(ma);
            for (mb, cb) in b.terms() {
                let mut word = head.clone();
                word.extend(self.letters_of(mb));
                self.normalize_word(kind, strategy, ca * cb, word, &mut out);
            }
        }
        out
    }

    /// The bracket `x^k·y − y·x^k` of a letter power with an element.
    /// `k = 0` gives zero.
    pub fn commutator_power(
        &self,
        kind: ProductKind,
        x: Letter,
        k: u32,
        y: &UEAElement,
    ) -> UEAElement {
        if k == 0 {
            return UEAElement::zero();
        }
        let xk = UEAElement::from_term(self.letter_power(x, k), BigRational::one());
        self.multiply(kind, &xk, y)
            .sub(&self.multiply(kind, y, &xk))
    }

    /// Reduces modulo the left ideal generated by all `e_α` and
    /// `h_i − λ(h_i)`: monomials with an e-letter are dropped and every
    /// h-letter is evaluated at the weight.
    pub fn reduce_modulo_linear(&self, a: &UEAElement, lambda: &DominantWeight) -> UEAElement {
        let mut out = UEAElement::zero();
        for (m, c) in a.terms() {
            if m.e.iter().any(|&v| v > 0) {
                continue;
            }
            let mut factor = BigInt::one();
            for (k, &exp) in m.h.iter().enumerate() {
                if exp > 0 {
                    factor *= BigInt::from(lambda.m()[k]).pow(exp);
                }
            }
            if factor.is_zero() {
                continue;
            }
            let reduced = PBWMonomial::from_f_exponents(&m.f, self.rank);
            out.add_term(reduced, c * BigRational::from_integer(factor));
        }
        out
    }

    /// Weight of a monomial: e-letters add their root, f-letters subtract
    /// it, h-letters are weightless.
    pub fn weight_of_monomial(&self, m: &PBWMonomial) -> Vec<i64> {
        let len = self.rs.e_coords(0).len();
        let mut wt = vec![0i64; len];
        for r in 0..self.num_roots() {
            let coords = self.rs.e_coords(r);
            for (w, &c) in wt.iter_mut().zip(coords) {
                *w += (m.e[r] as i64 - m.f[r] as i64) * c;
            }
        }
        wt
    }

    /// Display name of a letter: `f[i,j]`, `f[i,-j]`, `h[k]`, `e[i,j]`.
    pub fn letter_name(&self, l: Letter) -> String {
        match l {
            Letter::F(r) => format!("f{}", &self.rs.root_name(r)[1..]),
            Letter::E(r) => format!("e{}", &self.rs.root_name(r)[1..]),
            Letter::H(k) => format!("h[{}]", k + 1),
        }
    }
}

fn letter_id(nf: usize, _rank: usize, l: Letter) -> usize {
    match l {
        Letter::F(r) => r,
        Letter::H(k) => nf + k,
        Letter::E(r) => nf + _rank + r,
    }
}

fn lie_index(lie: &LieAlgebra, l: Letter) -> usize {
    match l {
        Letter::E(r) => lie.idx_e(r),
        Letter::H(k) => lie.idx_h(k),
        Letter::F(r) => lie.idx_f(r),
    }
}

fn letter_from_lie(lie: &LieAlgebra, idx: usize) -> Letter {
    if idx < lie.num_roots {
        Letter::E(idx)
    } else if idx < lie.num_roots + lie.rank {
        Letter::H(idx - lie.num_roots)
    } else {
        Letter::F(idx - lie.num_roots - lie.rank)
    }
}
