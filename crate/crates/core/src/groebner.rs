//! Construction and verification of the basis of the defining ideal.
//!
//! The generating set is assembled from three strata: every raising
//! generator `e_α`, the shifted Cartan elements `h_α − λ(h_α)`, and one
//! straightened element per minimal violator, built by iterated
//! commutators with e-powers so that its leading monomial is exactly the
//! violator's `f^s`.  Type A uses a closed nested-commutator recipe; type
//! C runs a bounded weight-guided search over such recipes.  Verification
//! closes the loop: standard monomials against the polytope, annihilation
//! against the explicit module, pairwise non-divisibility of leading
//! monomials, and stability of those monomials under the degenerate
//! product.

use std::collections::BTreeSet;

use num::{BigRational, One};

use crate::error::{Error, Result};
use crate::fflv::{fflv_points, minimal_violators, Sink, Violator};
use crate::module_oracle::{build_module, fflv_independent};
use crate::roots::{ChainEnd, DominantWeight, LieKind, RootSystem};
use crate::uea::{Algebra, Letter, PBWMonomial, ProductKind, UEAElement};

/// How a basis element arose.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Provenance {
    /// A raising generator `e_α`.
    Raising { root: usize },
    /// A shifted Cartan generator `h_α − λ(h_α)`.
    Cartan { root: usize },
    /// A straightened element with leading monomial `f^s`.
    Straightened { violator: Violator },
}

/// One basis element with its cached leading monomial.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub element: UEAElement,
    pub lm: PBWMonomial,
    pub provenance: Provenance,
}

/// The generating set for one dominant weight, in export order: raising
/// generators first (largest root first), then Cartan generators, then
/// straightened elements by descending leading monomial.  `elements` is
/// the pruned, minimal set; `unpruned` additionally carries the Cartan
/// generators for non-simple roots, whose leading monomials tie with
/// simple ones.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub lambda: DominantWeight,
    pub elements: Vec<BasisElement>,
    pub unpruned: Vec<BasisElement>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<&PBWMonomial> {
        self.elements.iter().map(|b| &b.lm).collect()
    }

    pub fn f_elements(&self) -> impl Iterator<Item = &BasisElement> {
        self.elements
            .iter()
            .filter(|b| matches!(b.provenance, Provenance::Straightened { .. }))
    }
}

/// Root whose power is straightened for a violator: the segment from the
/// source row to a plain sink, or — for the two doubled-sink shapes of
/// type C — the doubled root of the source row itself.
pub fn base_root(rs: &RootSystem, v: &Violator) -> usize {
    let i = v.source_row;
    match (rs.kind, v.sink) {
        (LieKind::A, Sink::Simple(j)) => rs.index_of_segment(i, ChainEnd::Plain(j)),
        (LieKind::C, Sink::Simple(j)) if j < rs.rank => rs.index_of_segment(i, ChainEnd::Plain(j)),
        (LieKind::C, _) => {
            if i < rs.rank {
                rs.index_of_segment(i, ChainEnd::Barred(i))
            } else {
                rs.index_of_segment(i, ChainEnd::Plain(i))
            }
        }
        (LieKind::A, Sink::SubCHighest(_)) => unreachable!("type A has no doubled sinks"),
    }
}

/// The closed nested-commutator recipe for a type-A block `[ℓ,k]`,
/// innermost operator first.  Each entry pairs the e-root to commutate
/// with and its power; zero powers are omitted.
pub fn partial_operator_a(rs: &RootSystem, s: &[u32], ell: usize, k: usize) -> Vec<(usize, u32)> {
    let entry = |i: usize, j: usize| -> u32 {
        if i <= j {
            s[rs.index_of_segment(i, ChainEnd::Plain(j))]
        } else {
            0
        }
    };
    let mut recipe = Vec::new();
    // Inner group: commutators with e_{j'+1,k} to the power of the j'-th
    // column sum.
    for jp in ell..k {
        let power: u32 = (ell..=jp).map(|a| entry(a, jp)).sum();
        if power > 0 {
            recipe.push((rs.index_of_segment(jp + 1, ChainEnd::Plain(k)), power));
        }
    }
    // Outer group: commutators with e_{ℓ,i'−1} to the power of the i'-th
    // row sum, from i' = k down.
    for ip in (ell + 1..=k).rev() {
        let power: u32 = (ip..=k).map(|b| entry(ip, b)).sum();
        if power > 0 {
            recipe.push((rs.index_of_segment(ell, ChainEnd::Plain(ip - 1)), power));
        }
    }
    recipe
}

/// Applies a recipe to `f_β^d`: innermost commutator first, reducing away
/// h- and e-contaminated terms after every step (each step maps the
/// linear-generator ideal into itself, so the reductions are sound).
fn apply_recipe(
    alg: &Algebra,
    lambda: &DominantWeight,
    kind: ProductKind,
    beta: usize,
    d: u32,
    recipe: &[(usize, u32)],
) -> UEAElement {
    let mut acc = UEAElement::from_term(alg.letter_power(Letter::F(beta), d), BigRational::one());
    for &(gamma, power) in recipe {
        acc = alg.commutator_power(kind, Letter::E(gamma), power, &acc);
        acc = alg.reduce_modulo_linear(&acc, lambda);
        if acc.is_zero() {
            return acc;
        }
    }
    acc
}

struct RecipeSearch<'a> {
    alg: &'a Algebra,
    lambda: &'a DominantWeight,
    kind: ProductKind,
    beta: usize,
    d: u32,
    expected: &'a PBWMonomial,
    target: Vec<i64>,
    seq: Vec<(usize, u32)>,
}

impl RecipeSearch<'_> {
    fn dfs(&mut self, positions_left: usize, power_left: u32) -> Option<UEAElement> {
        if positions_left == 0 {
            if !self.target.iter().all(|&t| t == 0) {
                return None;
            }
            let candidate = apply_recipe(
                self.alg,
                self.lambda,
                self.kind,
                self.beta,
                self.d,
                &self.seq,
            );
            if candidate.is_zero() {
                return None;
            }
            let candidate = candidate.monic().expect("nonzero candidate");
            let (lm, _) = candidate.leading_term().expect("nonzero candidate");
            if lm == self.expected {
                return Some(candidate);
            }
            return None;
        }
        for g in 0..self.alg.num_roots() {
            let coords = self.alg.rs.simple_coords(g).to_vec();
            for a in 1..=power_left {
                for (t, c) in self.target.iter_mut().zip(&coords) {
                    *t -= i64::from(a) * c;
                }
                let feasible = self.target.iter().all(|&t| t >= 0);
                if feasible {
                    self.seq.push((g, a));
                    let hit = self.dfs(positions_left - 1, power_left - a);
                    self.seq.pop();
                    if hit.is_some() {
                        for (t, c) in self.target.iter_mut().zip(&coords) {
                            *t += i64::from(a) * c;
                        }
                        return hit;
                    }
                }
                for (t, c) in self.target.iter_mut().zip(&coords) {
                    *t += i64::from(a) * c;
                }
                if !feasible {
                    break;
                }
            }
        }
        None
    }
}

const MAX_RECIPE_LEN: usize = 4;

/// Weight-guided search for a straightening recipe, tried in order of
/// recipe length, then lexicographically by root and power.  A candidate
/// wins when its reduced monic form has leading monomial exactly `f^s`;
/// candidates that reduce to zero or to a wrong leading monomial are
/// skipped.  Works for both types; type C has no closed formula and
/// always goes through here.
pub fn straighten_search(
    alg: &Algebra,
    lambda: &DominantWeight,
    v: &Violator,
    kind: ProductKind,
) -> Result<UEAElement> {
    let rs = &alg.rs;
    let beta = base_root(rs, v);
    let d = v.degree as u32;
    let expected = PBWMonomial::from_f_exponents(&v.exponents, alg.rank);
    let mut target: Vec<i64> = rs
        .simple_coords(beta)
        .iter()
        .map(|&c| i64::from(d) * c)
        .collect();
    for (r, &e) in v.exponents.iter().enumerate() {
        for (t, c) in target.iter_mut().zip(rs.simple_coords(r)) {
            *t -= i64::from(e) * c;
        }
    }
    let power_budget = d * rs.height(beta);
    let mut search = RecipeSearch {
        alg,
        lambda,
        kind,
        beta,
        d,
        expected: &expected,
        target,
        seq: Vec::new(),
    };
    for len in 0..=MAX_RECIPE_LEN {
        if let Some(el) = search.dfs(len, power_budget) {
            return Ok(el);
        }
    }
    Err(Error::SearchExhausted {
        exponents: format!("{:?}", v.exponents),
        source_row: v.source_row,
        sink: v.sink.label(),
        max_len: MAX_RECIPE_LEN,
    })
}

/// Straightens one violator into a monic element with leading monomial
/// `f^s`: the closed recipe in type A, the bounded search in type C.
pub fn straighten(
    alg: &Algebra,
    lambda: &DominantWeight,
    v: &Violator,
    kind: ProductKind,
) -> Result<UEAElement> {
    match alg.kind {
        LieKind::A => {
            let Sink::Simple(j) = v.sink else {
                unreachable!("type A has no doubled sinks")
            };
            let ell = v.source_row;
            let recipe = partial_operator_a(&alg.rs, &v.exponents, ell, j);
            let beta = alg.rs.index_of_segment(ell, ChainEnd::Plain(j));
            let result = apply_recipe(alg, lambda, kind, beta, v.degree as u32, &recipe);
            let expected = PBWMonomial::from_f_exponents(&v.exponents, alg.rank);
            let context = || {
                format!(
                    "straightening {:?} (row {}, sink {})",
                    v.exponents,
                    v.source_row,
                    v.sink.label()
                )
            };
            if result.is_zero() {
                return Err(Error::LmMismatch { context: context() });
            }
            let result = result.monic()?;
            let (lm, _) = result.leading_term()?;
            if *lm != expected {
                return Err(Error::LmMismatch { context: context() });
            }
            Ok(result)
        }
        LieKind::C => straighten_search(alg, lambda, v, kind),
    }
}

/// Builds the full generating set and its pruned minimal form under the
/// standard product.
pub fn build_groebner_basis(alg: &Algebra, lambda: &DominantWeight) -> Result<GroebnerBasis> {
    build_groebner_basis_with(alg, lambda, ProductKind::Standard)
}

/// As `build_groebner_basis`, but the straightening runs under the given
/// product; used to confirm that the degenerate product leaves every
/// leading monomial in place.
pub fn build_groebner_basis_with(
    alg: &Algebra,
    lambda: &DominantWeight,
    kind: ProductKind,
) -> Result<GroebnerBasis> {
    let rs = &alg.rs;
    let nf = rs.num_roots();
    let mut unpruned = Vec::new();

    for r in 0..nf {
        let element = alg.element_from_letter(Letter::E(r));
        unpruned.push(BasisElement {
            lm: alg.letter_power(Letter::E(r), 1),
            element,
            provenance: Provenance::Raising { root: r },
        });
    }

    for r in 0..nf {
        let coeffs = rs.coroot_on_simples(r);
        let mut element = UEAElement::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                element.add_term(
                    alg.letter_power(Letter::H(k), 1),
                    BigRational::from_integer(c.into()),
                );
            }
        }
        element.add_term(
            alg.monomial_one(),
            BigRational::from_integer((-rs.coroot_pairing(lambda, r)).into()),
        );
        let (lm, lc) = element.leading_term().expect("coroot expansion is nonzero");
        assert!(lc.is_one(), "leading Cartan coefficient is always one");
        let lm = lm.clone();
        unpruned.push(BasisElement {
            element,
            lm,
            provenance: Provenance::Cartan { root: r },
        });
    }

    let violators = minimal_violators(rs, lambda);
    let straightened = crate::par::straighten_violators(alg, lambda, &violators, kind)?;
    let mut f_block: Vec<BasisElement> = violators
        .into_iter()
        .zip(straightened)
        .map(|(v, element)| {
            let lm = PBWMonomial::from_f_exponents(&v.exponents, alg.rank);
            BasisElement {
                element,
                lm,
                provenance: Provenance::Straightened { violator: v },
            }
        })
        .collect();
    f_block.sort_by(|a, b| b.lm.cmp(&a.lm));
    unpruned.extend(f_block);

    let elements: Vec<BasisElement> = unpruned
        .iter()
        .filter(|b| match b.provenance {
            Provenance::Cartan { root } => rs.height(root) == 1,
            _ => true,
        })
        .cloned()
        .collect();

    Ok(GroebnerBasis {
        lambda: lambda.clone(),
        elements,
        unpruned,
    })
}

/// Head normal form of `f` against the basis: while some leading monomial
/// divides the leading monomial of `f`, the first such element (in basis
/// order) is scaled, left-multiplied by the cofactor monomial, and
/// subtracted.  The result's leading monomial is divisible by none.
pub fn left_reduce(alg: &Algebra, basis: &GroebnerBasis, f: &UEAElement) -> UEAElement {
    let mut f = f.clone();
    loop {
        let Ok((lm, lc)) = f.leading_term() else {
            return f;
        };
        let Some(divisor) = basis.elements.iter().find(|b| b.lm.divides(lm)) else {
            return f;
        };
        let cofactor = lm.div(&divisor.lm);
        let lc = lc.clone();
        let shifted = alg.multiply(
            ProductKind::Standard,
            &UEAElement::from_term(cofactor, BigRational::one()),
            &divisor.element,
        );
        debug_assert_eq!(
            shifted.leading_term().expect("product of nonzero").0,
            lm,
            "left multiples preserve leading monomials"
        );
        f = f.sub(&shifted.scale(&lc));
    }
}

/// All exponent vectors whose monomials no leading monomial divides, in
/// ascending lexicographic order; aborts past twice the Weyl dimension.
pub fn standard_monomials(alg: &Algebra, basis: &GroebnerBasis) -> Result<Vec<Vec<u32>>> {
    let nf = alg.num_roots();
    let f_lms: Vec<Vec<u32>> = basis
        .elements
        .iter()
        .filter(|b| b.lm.is_f_only() && !b.lm.is_one())
        .map(|b| b.lm.f.clone())
        .collect();
    let caps: Vec<Option<u32>> = (0..nf)
        .map(|r| {
            f_lms
                .iter()
                .find(|lm| lm[r] > 0 && lm.iter().enumerate().all(|(k, &e)| k == r || e == 0))
                .map(|lm| lm[r] - 1)
        })
        .collect();
    let expected = alg.rs.weyl_dim(&basis.lambda);
    let guard = 2 * expected;
    let mut out = Vec::new();
    let mut s = vec![0u32; nf];
    standard_dfs(0, &caps, &f_lms, &mut s, &mut out, guard, expected)?;
    Ok(out)
}

fn standard_dfs(
    r: usize,
    caps: &[Option<u32>],
    f_lms: &[Vec<u32>],
    s: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    guard: u64,
    expected: u64,
) -> Result<()> {
    if r == s.len() {
        if out.len() as u64 >= guard {
            return Err(Error::EnumerationGuard { guard, expected });
        }
        out.push(s.clone());
        return Ok(());
    }
    let mut v = 0u32;
    loop {
        if let Some(cap) = caps[r] {
            if v > cap {
                break;
            }
        }
        s[r] = v;
        // A leading monomial fully supported in the prefix that divides it
        // stays divisible for every larger v: prune the rest of the loop.
        let blocked = f_lms.iter().any(|lm| {
            lm[r + 1..].iter().all(|&e| e == 0)
                && lm[..=r].iter().zip(&s[..=r]).all(|(a, b)| a <= b)
        });
        if blocked {
            break;
        }
        standard_dfs(r + 1, caps, f_lms, s, out, guard, expected)?;
        v += 1;
    }
    s[r] = 0;
    Ok(())
}

/// Whether to consult the explicit module during verification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleMode {
    /// Build the module when the ambient budget allows; otherwise note the
    /// downgrade and verify combinatorially.
    Auto,
    /// Never build the module.
    Skip,
}

/// Outcome of the core verification: standard-monomial count, set
/// equality with the polytope, and — when the oracle ran — annihilation
/// of the highest vector by every generator and independence of the
/// polytope monomials.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub weyl_dim: u64,
    pub standard_count: u64,
    pub count_matches: bool,
    pub sets_match: bool,
    pub annihilation: Option<bool>,
    pub independence: Option<bool>,
    pub oracle_note: Option<String>,
    pub pass: bool,
}

/// Core verification against a prebuilt basis.
pub fn verify_groebner_with(
    alg: &Algebra,
    basis: &GroebnerBasis,
    oracle: OracleMode,
) -> Result<VerifyReport> {
    let lambda = &basis.lambda;
    let expected = alg.rs.weyl_dim(lambda);
    let standard = standard_monomials(alg, basis)?;
    let points = fflv_points(&alg.rs, lambda);
    let count_matches = standard.len() as u64 == expected;
    let sets_match = standard == points;

    let (annihilation, independence, oracle_note) = match oracle {
        OracleMode::Skip => (None, None, Some("oracle skipped: disabled".to_string())),
        OracleMode::Auto => match build_module(alg, lambda) {
            Ok(module) => {
                let elements: Vec<&UEAElement> =
                    basis.unpruned.iter().map(|b| &b.element).collect();
                let annihilated = crate::par::annihilates_all(&module, alg, &elements);
                let independent = fflv_independent(&module, alg, lambda);
                (Some(annihilated), Some(independent), None)
            }
            Err(Error::ResourceBudget { dim, budget }) => (
                None,
                None,
                Some(format!(
                    "oracle skipped: ambient dimension {dim} exceeds budget {budget}"
                )),
            ),
            Err(other) => return Err(other),
        },
    };

    let pass =
        count_matches && sets_match && annihilation.unwrap_or(true) && independence.unwrap_or(true);
    Ok(VerifyReport {
        weyl_dim: expected,
        standard_count: standard.len() as u64,
        count_matches,
        sets_match,
        annihilation,
        independence,
        oracle_note,
        pass,
    })
}

/// Builds the basis and runs the core verification.
pub fn verify_groebner(
    alg: &Algebra,
    lambda: &DominantWeight,
    oracle: OracleMode,
) -> Result<VerifyReport> {
    let basis = build_groebner_basis(alg, lambda)?;
    verify_groebner_with(alg, &basis, oracle)
}

/// True iff no leading monomial divides another within the set.
pub fn verify_minimal(elements: &[BasisElement]) -> bool {
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            if i != j && a.lm.divides(&b.lm) {
                return false;
            }
        }
    }
    true
}

/// True iff no tail monomial anywhere is divisible by a leading monomial.
pub fn is_reduced(elements: &[BasisElement]) -> bool {
    elements.iter().all(|b| {
        b.element
            .terms()
            .filter(|(m, _)| **m != b.lm)
            .all(|(m, _)| !elements.iter().any(|g| g.lm.divides(m)))
    })
}

/// Rebuilds the basis under the degenerate product and compares leading
/// monomial sets with a prebuilt standard basis.
pub fn verify_degenerate_with(alg: &Algebra, basis: &GroebnerBasis) -> Result<bool> {
    let degenerate = build_groebner_basis_with(alg, &basis.lambda, ProductKind::PbwDegenerate)?;
    let standard_lms: BTreeSet<&PBWMonomial> = basis.elements.iter().map(|b| &b.lm).collect();
    let degenerate_lms: BTreeSet<&PBWMonomial> =
        degenerate.elements.iter().map(|b| &b.lm).collect();
    Ok(standard_lms == degenerate_lms)
}

/// Builds both bases and compares leading monomial sets.
pub fn verify_degenerate(alg: &Algebra, lambda: &DominantWeight) -> Result<bool> {
    let basis = build_groebner_basis(alg, lambda)?;
    verify_degenerate_with(alg, &basis)
}

/// Everything the `verify` command reports, in one flat record.
#[derive(Clone, Debug)]
pub struct FullVerifyReport {
    pub core: VerifyReport,
    pub minimal: bool,
    pub reduced: bool,
    pub degenerate_match: bool,
    pub pass: bool,
}

/// Runs the core verification plus minimality, reducedness, and the
/// degenerate comparison on one freshly built basis.  Reducedness is
/// informational and does not affect the verdict.
pub fn run_full_verify(
    alg: &Algebra,
    lambda: &DominantWeight,
    oracle: OracleMode,
) -> Result<FullVerifyReport> {
    let basis = build_groebner_basis(alg, lambda)?;
    let core = verify_groebner_with(alg, &basis, oracle)?;
    let minimal = verify_minimal(&basis.elements);
    let reduced = is_reduced(&basis.elements);
    let degenerate_match = verify_degenerate_with(alg, &basis)?;
    let pass = core.pass && minimal && degenerate_match;
    Ok(FullVerifyReport {
        core,
        minimal,
        reduced,
        degenerate_match,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn alg(kind: LieKind, rank: usize) -> Algebra {
        Algebra::new(kind, rank).unwrap()
    }

    fn f_elem(a: &Algebra, terms: &[(&[(usize, u32)], BigRational)]) -> UEAElement {
        let mut el = UEAElement::zero();
        for (exps, c) in terms {
            let mut m = a.monomial_one();
            for &(r, e) in *exps {
                m.f[r] += e;
            }
            el.add_term(m, c.clone());
        }
        el
    }

    fn violator_by_exponents<'a>(vs: &'a [Violator], exps: &[u32]) -> &'a Violator {
        vs.iter().find(|v| v.exponents == exps).unwrap()
    }

    #[test]
    fn recipes_for_type_a_are_frozen() {
        let a = alg(LieKind::A, 2);
        let rs = &a.rs;
        let a1 = rs.simple_root_index(1);
        let a2 = rs.simple_root_index(2);
        let top = rs.index_of_segment(1, ChainEnd::Plain(2));
        let mut s = vec![0u32; 3];
        s[top] = 1;
        s[a1] = 1;
        s[a2] = 1;
        assert_eq!(partial_operator_a(rs, &s, 1, 2), vec![(a2, 1), (a1, 1)]);

        let mut pure = vec![0u32; 3];
        pure[top] = 3;
        assert_eq!(partial_operator_a(rs, &pure, 1, 2), vec![]);

        let a3 = alg(LieKind::A, 3);
        let rs3 = &a3.rs;
        let seg = |i, j| rs3.index_of_segment(i, ChainEnd::Plain(j));
        let mut s = vec![0u32; 6];
        s[seg(1, 2)] = 2;
        s[seg(1, 3)] = 1;
        s[seg(2, 3)] = 2;
        assert_eq!(
            partial_operator_a(rs3, &s, 1, 3),
            vec![(seg(3, 3), 2), (seg(1, 1), 2)]
        );
    }

    #[test]
    fn straightened_elements_of_the_a2_adjoint_are_frozen() {
        let a = alg(LieKind::A, 2);
        let lam = DominantWeight::new(vec![1, 1]);
        let vs = minimal_violators(&a.rs, &lam);
        let a1 = a.rs.simple_root_index(1);
        let a2 = a.rs.simple_root_index(2);
        let top = a.rs.index_of_segment(1, ChainEnd::Plain(2));

        let mixed = violator_by_exponents(&vs, &[1, 1, 1]);
        let got = straighten(&a, &lam, mixed, ProductKind::Standard).unwrap();
        let expected = f_elem(
            &a,
            &[
                (&[(a2, 1), (top, 1), (a1, 1)], rat(1, 1)),
                (&[(top, 2)], rat(1, 2)),
            ],
        );
        assert_eq!(got, expected);

        let cube = violator_by_exponents(&vs, &[3, 0, 0]);
        let got = straighten(&a, &lam, cube, ProductKind::Standard).unwrap();
        assert_eq!(got, f_elem(&a, &[(&[(top, 3)], rat(1, 1))]));
    }

    #[test]
    fn the_a2_adjoint_basis_is_the_golden_eleven() {
        let a = alg(LieKind::A, 2);
        let lam = DominantWeight::new(vec![1, 1]);
        let basis = build_groebner_basis(&a, &lam).unwrap();
        assert_eq!(basis.elements.len(), 11);
        assert_eq!(basis.unpruned.len(), 12);

        let a1 = a.rs.simple_root_index(1);
        let a2 = a.rs.simple_root_index(2);
        let top = a.rs.index_of_segment(1, ChainEnd::Plain(2));
        let one = a.monomial_one();

        let mut expected: Vec<UEAElement> = Vec::new();
        for r in [top, a1, a2] {
            expected.push(a.element_from_letter(Letter::E(r)));
        }
        for k in 0..2 {
            let mut h = a.element_from_letter(Letter::H(k));
            h.add_term(one.clone(), rat(-1, 1));
            expected.push(h);
        }
        expected.push(f_elem(&a, &[(&[(top, 3)], rat(1, 1))]));
        expected.push(f_elem(&a, &[(&[(top, 2), (a1, 1)], rat(1, 1))]));
        expected.push(f_elem(&a, &[(&[(a2, 1), (top, 2)], rat(1, 1))]));
        expected.push(f_elem(
            &a,
            &[
                (&[(a2, 1), (top, 1), (a1, 1)], rat(1, 1)),
                (&[(top, 2)], rat(1, 2)),
            ],
        ));
        expected.push(f_elem(&a, &[(&[(a1, 2)], rat(1, 1))]));
        expected.push(f_elem(&a, &[(&[(a2, 2)], rat(1, 1))]));

        let got: Vec<&UEAElement> = basis.elements.iter().map(|b| &b.element).collect();
        assert_eq!(got.len(), expected.len());
        for (g, e) in got.iter().zip(&expected) {
            assert_eq!(*g, e);
        }

        // The unpruned variant additionally carries h_{1,2} − 2 up front
        // in the Cartan block.
        let composite = basis
            .unpruned
            .iter()
            .find(|b| matches!(b.provenance, Provenance::Cartan { root } if root == top))
            .unwrap();
        let mut h12 = a.element_from_letter(Letter::H(0));
        h12 = h12.add(&a.element_from_letter(Letter::H(1)));
        h12.add_term(one, rat(-2, 1));
        assert_eq!(composite.element, h12);
    }

    #[test]
    fn c2_straightened_elements_are_frozen() {
        let a = alg(LieKind::C, 2);
        let long = a.rs.index_of_segment(1, ChainEnd::Barred(1));
        let mid = a.rs.index_of_segment(1, ChainEnd::Plain(2));
        let a1 = a.rs.simple_root_index(1);
        let a2 = a.rs.simple_root_index(2);

        let lam = DominantWeight::new(vec![1, 0]);
        let vs = minimal_violators(&a.rs, &lam);
        let square = violator_by_exponents(&vs, &[0, 2, 0, 0]);
        let got = straighten(&a, &lam, square, ProductKind::Standard).unwrap();
        let expected = f_elem(
            &a,
            &[(&[(mid, 2)], rat(1, 1)), (&[(a2, 1), (long, 1)], rat(2, 1))],
        );
        assert_eq!(got, expected);

        let mixed = violator_by_exponents(&vs, &[0, 1, 1, 0]);
        let got = straighten(&a, &lam, mixed, ProductKind::Standard).unwrap();
        let expected = f_elem(
            &a,
            &[(&[(mid, 1), (a1, 1)], rat(1, 1)), (&[(long, 1)], rat(1, 1))],
        );
        assert_eq!(got, expected);

        let adjoint = DominantWeight::new(vec![1, 1]);
        let vs = minimal_violators(&a.rs, &adjoint);
        let triple = violator_by_exponents(&vs, &[0, 1, 1, 1]);
        let got = straighten(&a, &adjoint, triple, ProductKind::Standard).unwrap();
        let expected = f_elem(
            &a,
            &[
                (&[(a2, 1), (mid, 1), (a1, 1)], rat(1, 1)),
                (&[(mid, 2)], rat(1, 2)),
                (&[(a2, 1), (long, 1)], rat(1, 1)),
            ],
        );
        assert_eq!(got, expected);

        let zero = DominantWeight::zero(2);
        let vs = minimal_violators(&a.rs, &zero);
        let delta_mid = violator_by_exponents(&vs, &[0, 1, 0, 0]);
        let got = straighten(&a, &zero, delta_mid, ProductKind::Standard).unwrap();
        assert_eq!(got, f_elem(&a, &[(&[(mid, 1)], rat(1, 1))]));
    }

    #[test]
    fn zero_weight_basis_lists_every_letter_once() {
        for (kind, rank) in [(LieKind::A, 2), (LieKind::C, 2)] {
            let a = alg(kind, rank);
            let lam = DominantWeight::zero(rank);
            let basis = build_groebner_basis(&a, &lam).unwrap();
            let nf = a.num_roots();
            assert_eq!(basis.elements.len(), 2 * nf + rank);
            for b in basis.f_elements() {
                assert_eq!(b.element.num_terms(), 1);
                assert_eq!(b.lm.f_degree(), 1);
            }
        }
    }

    #[test]
    fn left_reduce_examples() {
        let a = alg(LieKind::A, 2);
        let lam = DominantWeight::new(vec![1, 1]);
        let basis = build_groebner_basis(&a, &lam).unwrap();
        let a1 = a.rs.simple_root_index(1);
        let a2 = a.rs.simple_root_index(2);
        let top = a.rs.index_of_segment(1, ChainEnd::Plain(2));

        let f1sq = f_elem(&a, &[(&[(a1, 2)], rat(1, 1))]);
        assert!(left_reduce(&a, &basis, &f1sq).is_zero());

        for s in fflv_points(&a.rs, &lam) {
            let m = PBWMonomial::from_f_exponents(&s, a.rank);
            let el = UEAElement::from_term(m, rat(1, 1));
            assert_eq!(left_reduce(&a, &basis, &el), el);
        }

        let word = f_elem(&a, &[(&[(a2, 1), (top, 1), (a1, 1)], rat(1, 1))]);
        let reduced = left_reduce(&a, &basis, &word);
        assert_eq!(reduced, f_elem(&a, &[(&[(top, 2)], rat(-1, 2))]));
    }

    #[test]
    fn standard_monomials_match_the_polytope() {
        let a = alg(LieKind::A, 2);
        let lam = DominantWeight::new(vec![1, 1]);
        let basis = build_groebner_basis(&a, &lam).unwrap();
        let std = standard_monomials(&a, &basis).unwrap();
        assert_eq!(std.len(), 8);
        assert_eq!(std, fflv_points(&a.rs, &lam));

        let a1alg = alg(LieKind::A, 1);
        let lam = DominantWeight::new(vec![2]);
        let basis = build_groebner_basis(&a1alg, &lam).unwrap();
        let std = standard_monomials(&a1alg, &basis).unwrap();
        assert_eq!(std, vec![vec![0], vec![1], vec![2]]);

        let zero = DominantWeight::zero(2);
        let basis = build_groebner_basis(&a, &zero).unwrap();
        assert_eq!(standard_monomials(&a, &basis).unwrap(), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn dropping_a_generator_trips_the_enumeration_guard() {
        let a = alg(LieKind::C, 2);
        let lam = DominantWeight::zero(2);
        let mut basis = build_groebner_basis(&a, &lam).unwrap();
        let victim = basis
            .elements
            .iter()
            .position(|b| matches!(b.provenance, Provenance::Straightened { .. }))
            .unwrap();
        basis.elements.remove(victim);
        match standard_monomials(&a, &basis) {
            Err(Error::EnumerationGuard { guard, expected }) => {
                assert_eq!(guard, 2);
                assert_eq!(expected, 1);
            }
            other => panic!("expected the guard to trip, got {other:?}"),
        }
    }

    #[test]
    fn minimality_holds_after_pruning_but_not_before() {
        let a = alg(LieKind::A, 2);
        let lam = DominantWeight::new(vec![1, 1]);
        let basis = build_groebner_basis(&a, &lam).unwrap();
        assert!(verify_minimal(&basis.elements));
        assert!(!verify_minimal(&basis.unpruned));

        // Adjoining a multiple of an existing leading monomial breaks it.
        let a1 = a.rs.simple_root_index(1);
        let mut broken = basis.elements.clone();
        broken.push(BasisElement {
            element: f_elem(&a, &[(&[(a1, 3)], rat(1, 1))]),
            lm: PBWMonomial::from_f_exponents(
                &{
                    let mut s = vec![0u32; 3];
                    s[a1] = 3;
                    s
                },
                2,
            ),
            provenance: Provenance::Raising { root: a1 },
        });
        assert!(!verify_minimal(&broken));
        assert!(verify_minimal(&basis.elements[..1]));
    }

    #[test]
    fn reducedness_is_reported_not_enforced() {
        let a = alg(LieKind::A, 2);
        let lam = DominantWeight::new(vec![1, 1]);
        let basis = build_groebner_basis(&a, &lam).unwrap();
        assert!(is_reduced(&basis.elements));
    }

    #[test]
    fn verify_reports_pass_on_the_small_instances() {
        let a = alg(LieKind::A, 2);
        let lam = DominantWeight::new(vec![1, 1]);
        let report = verify_groebner(&a, &lam, OracleMode::Auto).unwrap();
        assert!(report.pass);
        assert_eq!(report.standard_count, 8);
        assert_eq!(report.annihilation, Some(true));
        assert_eq!(report.independence, Some(true));
        assert!(report.oracle_note.is_none());

        let c = alg(LieKind::C, 2);
        let lam = DominantWeight::new(vec![1, 0]);
        let report = verify_groebner(&c, &lam, OracleMode::Auto).unwrap();
        assert!(report.pass);
        assert_eq!(report.weyl_dim, 4);
    }

    #[test]
    fn verify_downgrades_when_the_oracle_is_out_of_budget() {
        let c = alg(LieKind::C, 1);
        let lam = DominantWeight::new(vec![14]);
        let report = verify_groebner(&c, &lam, OracleMode::Auto).unwrap();
        assert!(report.pass);
        assert_eq!(report.weyl_dim, 15);
        assert_eq!(report.annihilation, None);
        assert!(report.oracle_note.unwrap().contains("16384"));

        let report = verify_groebner(&c, &lam, OracleMode::Skip).unwrap();
        assert!(report.pass);
        assert!(report.oracle_note.unwrap().contains("disabled"));
    }

    #[test]
    fn degenerate_product_preserves_every_leading_monomial() {
        for (kind, rank, m) in [
            (LieKind::A, 2, vec![1u32, 1]),
            (LieKind::C, 2, vec![0, 1]),
            (LieKind::A, 2, vec![0, 0]),
        ] {
            let a = alg(kind, rank);
            let lam = DominantWeight::new(m);
            assert!(verify_degenerate(&a, &lam).unwrap(), "{kind:?}{rank}");
        }
    }

    #[test]
    fn full_verify_wraps_everything() {
        let a = alg(LieKind::C, 2);
        let lam = DominantWeight::new(vec![1, 1]);
        let report = run_full_verify(&a, &lam, OracleMode::Auto).unwrap();
        assert!(report.pass);
        assert!(report.minimal);
        assert!(report.degenerate_match);
        assert_eq!(report.core.weyl_dim, 16);
    }

    #[test]
    fn search_and_recipe_agree_on_a_type_a_example() {
        let a = alg(LieKind::A, 2);
        let lam = DominantWeight::new(vec![1, 1]);
        let basis = build_groebner_basis(&a, &lam).unwrap();
        let vs = minimal_violators(&a.rs, &lam);
        for v in &vs {
            let by_recipe = straighten(&a, &lam, v, ProductKind::Standard).unwrap();
            let by_search = straighten_search(&a, &lam, v, ProductKind::Standard).unwrap();
            assert_eq!(
                by_recipe.leading_term().unwrap().0,
                by_search.leading_term().unwrap().0
            );
            let diff = by_recipe.sub(&by_search);
            assert!(left_reduce(&a, &basis, &diff).is_zero());
        }
    }

    #[test]
    fn sl4_basis_contains_the_degree_five_element_and_is_not_reduced() {
        let a = alg(LieKind::A, 3);
        let lam = DominantWeight::new(vec![1, 1, 2]);
        let basis = build_groebner_basis(&a, &lam).unwrap();
        let seg = |i, j| a.rs.index_of_segment(i, ChainEnd::Plain(j));

        let display = f_elem(
            &a,
            &[
                (&[(seg(2, 3), 2), (seg(1, 3), 1), (seg(1, 2), 2)], rat(1, 1)),
                (
                    &[
                        (seg(2, 3), 1),
                        (seg(2, 2), 1),
                        (seg(1, 3), 2),
                        (seg(1, 2), 1),
                    ],
                    rat(2, 1),
                ),
                (&[(seg(2, 2), 2), (seg(1, 3), 3)], rat(1, 3)),
            ],
        );
        assert!(basis.f_elements().any(|b| b.element == display));

        let f2sq = f_elem(&a, &[(&[(seg(2, 2), 2)], rat(1, 1))]);
        assert!(basis.f_elements().any(|b| b.element == f2sq));

        assert!(!is_reduced(&basis.elements));
        assert!(verify_minimal(&basis.elements));
    }
}
