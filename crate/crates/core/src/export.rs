//! Deterministic text and JSON renderings of everything the command-line
//! front end emits: basis elements, polytope points, Dyck paths, Weyl
//! dimensions, and verification reports.
//!
//! Text elements list their terms in descending monomial order with
//! sign-aware joins and `p/q` coefficients (omitted when the magnitude is
//! one).  Exponent vectors serialize as arrays of `{root, exp}` objects,
//! nonzero entries only, in canonical root order.  All outputs end with a
//! newline and are byte-stable across runs; the JSON documents parse back
//! into the same structures and re-serialize to identical bytes.

use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::fflv::DyckPath;
use crate::groebner::{BasisElement, FullVerifyReport, GroebnerBasis, Provenance};
use crate::roots::{DominantWeight, RootSystem};
use crate::uea::{Algebra, PBWMonomial, UEAElement};

/// Renders a monomial as `*`-joined letter powers in word order, `1` for
/// the empty monomial.
pub fn render_monomial(alg: &Algebra, m: &PBWMonomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let letters = alg.letters_of(m);
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        let name = alg.letter_name(letters[i]);
        if j - i == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join("*")
}

/// Renders an element with terms in descending monomial order.
pub fn render_element(alg: &Algebra, el: &UEAElement) -> String {
    if el.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in el.terms().rev().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        let body = if m.is_one() {
            abs.to_string()
        } else if abs.is_one() {
            render_monomial(alg, m)
        } else {
            format!("{abs}*{}", render_monomial(alg, m))
        };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

/// One root/exponent pair of a sparse exponent vector.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct RootExpJson {
    pub root: String,
    pub exp: u32,
}

/// Sparse form of an exponent vector over the positive roots.
pub fn exponents_json(rs: &RootSystem, exps: &[u32]) -> Vec<RootExpJson> {
    exps.iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(r, &e)| RootExpJson {
            root: rs.root_name(r),
            exp: e,
        })
        .collect()
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct TermJson {
    pub monomial: String,
    pub coeff: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProvenanceJson {
    Raising {
        root: String,
    },
    Cartan {
        root: String,
    },
    Straightened {
        source_row: usize,
        sink: String,
        exponents: Vec<RootExpJson>,
    },
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ElementJson {
    pub provenance: ProvenanceJson,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct BasisJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub weight: Vec<u32>,
    pub full: bool,
    pub elements: Vec<ElementJson>,
}

fn element_json(alg: &Algebra, b: &BasisElement) -> ElementJson {
    let provenance = match &b.provenance {
        Provenance::Raising { root } => ProvenanceJson::Raising {
            root: alg.rs.root_name(*root),
        },
        Provenance::Cartan { root } => ProvenanceJson::Cartan {
            root: alg.rs.root_name(*root),
        },
        Provenance::Straightened { violator } => ProvenanceJson::Straightened {
            source_row: violator.source_row,
            sink: violator.sink.label(),
            exponents: exponents_json(&alg.rs, &violator.exponents),
        },
    };
    let terms = b
        .element
        .terms()
        .rev()
        .map(|(m, c)| TermJson {
            monomial: render_monomial(alg, m),
            coeff: c.to_string(),
        })
        .collect();
    ElementJson { provenance, terms }
}

fn selected(basis: &GroebnerBasis, full: bool) -> &[BasisElement] {
    if full {
        &basis.unpruned
    } else {
        &basis.elements
    }
}

/// One basis element per line.
pub fn basis_text(alg: &Algebra, basis: &GroebnerBasis, full: bool) -> String {
    let mut out = String::new();
    for b in selected(basis, full) {
        out.push_str(&render_element(alg, &b.element));
        out.push('\n');
    }
    out
}

pub fn basis_document(alg: &Algebra, basis: &GroebnerBasis, full: bool) -> BasisJson {
    BasisJson {
        kind: alg.kind.letter().to_string(),
        rank: alg.rank,
        weight: basis.lambda.m().to_vec(),
        full,
        elements: selected(basis, full)
            .iter()
            .map(|b| element_json(alg, b))
            .collect(),
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct PointsJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub weight: Vec<u32>,
    pub dim: u64,
    pub points: Vec<Vec<RootExpJson>>,
}

/// One lattice point per line, rendered as its basis monomial.
pub fn points_text(alg: &Algebra, points: &[Vec<u32>]) -> String {
    let mut out = String::new();
    for p in points {
        let m = PBWMonomial::from_f_exponents(p, alg.rank);
        out.push_str(&render_monomial(alg, &m));
        out.push('\n');
    }
    out
}

pub fn points_document(alg: &Algebra, lambda: &DominantWeight, points: &[Vec<u32>]) -> PointsJson {
    PointsJson {
        kind: alg.kind.letter().to_string(),
        rank: alg.rank,
        weight: lambda.m().to_vec(),
        dim: alg.rs.weyl_dim(lambda),
        points: points.iter().map(|p| exponents_json(&alg.rs, p)).collect(),
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct DimJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub weight: Vec<u32>,
    pub dim: u64,
}

pub fn dim_text(dim: u64) -> String {
    format!("{dim}\n")
}

pub fn dim_document(rs: &RootSystem, lambda: &DominantWeight) -> DimJson {
    DimJson {
        kind: rs.kind.letter().to_string(),
        rank: rs.rank,
        weight: lambda.m().to_vec(),
        dim: rs.weyl_dim(lambda),
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct PathJson {
    pub source_row: usize,
    pub sink: String,
    pub roots: Vec<String>,
    pub bound: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct PathsJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub weight: Option<Vec<u32>>,
    pub paths: Vec<PathJson>,
}

fn path_json(rs: &RootSystem, lambda: Option<&DominantWeight>, p: &DyckPath) -> PathJson {
    PathJson {
        source_row: p.source_row,
        sink: p.sink.label(),
        roots: p.roots.iter().map(|&r| rs.root_name(r)).collect(),
        bound: lambda.map(|l| crate::fflv::path_bound(l, p)),
    }
}

/// One path per line: source row, sink, the chain, and — when a weight is
/// given — the bound.
pub fn paths_text(rs: &RootSystem, lambda: Option<&DominantWeight>, paths: &[DyckPath]) -> String {
    let mut out = String::new();
    for p in paths {
        let names: Vec<String> = p.roots.iter().map(|&r| rs.root_name(r)).collect();
        out.push_str(&format!(
            "row {} -> {}: {}",
            p.source_row,
            p.sink.label(),
            names.join(" ")
        ));
        if let Some(l) = lambda {
            out.push_str(&format!(" (bound {})", crate::fflv::path_bound(l, p)));
        }
        out.push('\n');
    }
    out
}

pub fn paths_document(
    rs: &RootSystem,
    lambda: Option<&DominantWeight>,
    paths: &[DyckPath],
) -> PathsJson {
    PathsJson {
        kind: rs.kind.letter().to_string(),
        rank: rs.rank,
        weight: lambda.map(|l| l.m().to_vec()),
        paths: paths.iter().map(|p| path_json(rs, lambda, p)).collect(),
    }
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct VerifyJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub weight: Vec<u32>,
    pub weyl_dim: u64,
    pub standard_count: u64,
    pub count_matches: bool,
    pub sets_match: bool,
    pub annihilation: Option<bool>,
    pub independence: Option<bool>,
    pub oracle_note: Option<String>,
    pub minimal: bool,
    pub reduced: bool,
    pub degenerate_match: bool,
    pub pass: bool,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn oracle_line(b: Option<bool>) -> &'static str {
    match b {
        Some(v) => yes_no(v),
        None => "skipped",
    }
}

/// The human-readable report, ending in a `RESULT:` verdict line.
pub fn verify_text(report: &FullVerifyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("weyl dim: {}\n", report.core.weyl_dim));
    out.push_str(&format!(
        "standard monomials: {}\n",
        report.core.standard_count
    ));
    out.push_str(&format!(
        "count match: {}\n",
        yes_no(report.core.count_matches)
    ));
    out.push_str(&format!("set match: {}\n", yes_no(report.core.sets_match)));
    out.push_str(&format!(
        "annihilation: {}\n",
        oracle_line(report.core.annihilation)
    ));
    out.push_str(&format!(
        "independence: {}\n",
        oracle_line(report.core.independence)
    ));
    if let Some(note) = &report.core.oracle_note {
        out.push_str(&format!("note: {note}\n"));
    }
    out.push_str(&format!("minimal: {}\n", yes_no(report.minimal)));
    out.push_str(&format!("reduced: {}\n", yes_no(report.reduced)));
    out.push_str(&format!(
        "degenerate match: {}\n",
        yes_no(report.degenerate_match)
    ));
    out.push_str(&format!(
        "RESULT: {}\n",
        if report.pass { "PASS" } else { "FAIL" }
    ));
    out
}

pub fn verify_document(
    rs: &RootSystem,
    lambda: &DominantWeight,
    report: &FullVerifyReport,
) -> VerifyJson {
    VerifyJson {
        kind: rs.kind.letter().to_string(),
        rank: rs.rank,
        weight: lambda.m().to_vec(),
        weyl_dim: report.core.weyl_dim,
        standard_count: report.core.standard_count,
        count_matches: report.core.count_matches,
        sets_match: report.core.sets_match,
        annihilation: report.core.annihilation,
        independence: report.core.independence,
        oracle_note: report.core.oracle_note.clone(),
        minimal: report.minimal,
        reduced: report.reduced,
        degenerate_match: report.degenerate_match,
        pass: report.pass,
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}
