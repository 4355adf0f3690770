//! End-to-end verification of the degree-11, five-variable computation:
//! the identity ledger, the spanning and decomposition checks for the
//! eight monomial families, the vanishing of the `GL_5` invariants, and
//! the assembled report with its final conclusion.
//!
//! The ledger is data, not code: a versioned JSON file in the repo with
//! one record per displayed equation, each carrying its source section
//! tag and the quoted equation. A record asserts either an exact
//! polynomial identity (`mode = "exact"`) or an equality of cohit
//! classes (`mode = "mod-hit"`); records may apply a named linear
//! substitution to the left-hand side first. Every record is evaluated
//! on every run, and mod-hit outcomes also report whether the exact
//! form happens to hold.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::text::parse_polynomial;
use crate::algebra::{monomial_basis, LinearSubstitution, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::f2linalg::F2Matrix;
use crate::hit::CohitSpace;
use crate::invariants::{invariant_subspace_of, GroupSpec, InvariantReport, ProjectionReplay};
use crate::steenrod::sq;

/// The shipped ledger, embedded at build time.
pub const LEDGER_JSON: &str = include_str!("../data/ledger.json");

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "mod-hit")]
    ModHit,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SqTermText {
    pub i: u32,
    pub source: String,
}

/// One displayed equation, in the shared text syntax.
///
/// The asserted statement is built from the fields as follows: let
/// `L = subst(lhs)` when a substitution is present (plus `lhs` itself
/// when `add_lhs` is set), otherwise `L = lhs`, and let
/// `S = sum_j Sq^(i_j)(source_j)`. Then
///
/// * `exact` asserts `L = rhs + S` as polynomials;
/// * `mod-hit` asserts that `L + rhs` is hit, i.e. the two sides
///   represent the same cohit class.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub id: String,
    pub section: String,
    pub vars: usize,
    pub mode: Mode,
    pub lhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subst: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub add_lhs: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sq_terms: Vec<SqTermText>,
    pub rhs: String,
    pub quote: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Ledger {
    pub notes: Vec<String>,
    pub records: Vec<IdentityRecord>,
}

pub fn parse_ledger(text: &str) -> Result<Ledger> {
    Ok(serde_json::from_str(text)?)
}

pub fn builtin_ledger() -> Ledger {
    parse_ledger(LEDGER_JSON).expect("the shipped ledger parses")
}

/// Outcome of evaluating one record. `also_exact` is reported for
/// mod-hit records only: whether the statement happens to hold on the
/// nose as polynomials as well.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityOutcome {
    pub id: String,
    pub section: String,
    pub mode: Mode,
    pub pass: bool,
    pub also_exact: Option<bool>,
}

struct ParsedRecord {
    id: String,
    section: String,
    vars: usize,
    mode: Mode,
    effective_lhs: Polynomial,
    sq_sum: Polynomial,
    rhs: Polynomial,
    degree: Option<u32>,
}

fn parse_record(rec: &IdentityRecord) -> Result<ParsedRecord> {
    let fail = |reason: String| Error::Ledger {
        id: rec.id.clone(),
        reason,
    };
    let k = rec.vars;
    if k == 0 {
        return Err(fail("vars must be at least 1".into()));
    }
    let lhs = parse_polynomial(&rec.lhs, k).map_err(|e| fail(format!("lhs: {e}")))?;
    let rhs = parse_polynomial(&rec.rhs, k).map_err(|e| fail(format!("rhs: {e}")))?;
    let effective_lhs = match &rec.subst {
        Some(s) => {
            let g = LinearSubstitution::parse(s, k).map_err(|e| fail(format!("subst: {e}")))?;
            let image = lhs.substitute(&g);
            if rec.add_lhs {
                &image + &lhs
            } else {
                image
            }
        }
        None => lhs,
    };
    let mut sq_sum = Polynomial::zero(k);
    for term in &rec.sq_terms {
        if term.i == 0 {
            return Err(fail("square index 0 in sq_terms".into()));
        }
        let source =
            parse_polynomial(&term.source, k).map_err(|e| fail(format!("sq source: {e}")))?;
        sq_sum += &sq(term.i, &source);
    }
    if !effective_lhs.is_homogeneous() || !rhs.is_homogeneous() {
        return Err(fail("sides are not homogeneous".into()));
    }
    let degree = effective_lhs.degree().or_else(|| rhs.degree());
    if let (Some(a), Some(b)) = (effective_lhs.degree(), rhs.degree()) {
        if a != b {
            return Err(fail(format!("degree mismatch between sides: {a} vs {b}")));
        }
    }
    Ok(ParsedRecord {
        id: rec.id.clone(),
        section: rec.section.clone(),
        vars: k,
        mode: rec.mode,
        effective_lhs,
        sq_sum,
        rhs,
        degree,
    })
}

fn evaluate(parsed: &ParsedRecord, spaces: &HashMap<(usize, u32), CohitSpace>) -> IdentityOutcome {
    let exact_holds = &parsed.effective_lhs + &parsed.sq_sum == parsed.rhs;
    let (pass, also_exact) = match parsed.mode {
        Mode::Exact => (exact_holds, None),
        Mode::ModHit => {
            let hit = match parsed.degree {
                None => true, // both sides zero
                Some(d) => spaces[&(parsed.vars, d)].is_hit(&(&parsed.effective_lhs + &parsed.rhs)),
            };
            (hit, Some(exact_holds))
        }
    };
    IdentityOutcome {
        id: parsed.id.clone(),
        section: parsed.section.clone(),
        mode: parsed.mode,
        pass,
        also_exact,
    }
}

/// Quotients shared between the ledger run and the other checks.
pub struct SpaceCache {
    map: HashMap<(usize, u32), CohitSpace>,
}

impl SpaceCache {
    pub fn new() -> Self {
        SpaceCache {
            map: HashMap::new(),
        }
    }

    pub fn build(&mut self, keys: impl IntoIterator<Item = (usize, u32)>) {
        let missing: BTreeSet<(usize, u32)> = keys
            .into_iter()
            .filter(|key| !self.map.contains_key(key))
            .collect();
        let built: Vec<((usize, u32), CohitSpace)> = missing
            .into_par_iter()
            .map(|(k, d)| ((k, d), CohitSpace::new(k, d)))
            .collect();
        self.map.extend(built);
    }

    pub fn get(&self, k: usize, d: u32) -> &CohitSpace {
        &self.map[&(k, d)]
    }
}

impl Default for SpaceCache {
    fn default() -> Self {
        Self::new()
    }
}

/// Evaluates every record, building whatever cohit spaces the mod-hit
/// records need. Outcomes are returned sorted by record id.
pub fn run_identity_ledger(
    ledger: &Ledger,
    cache: &mut SpaceCache,
) -> Result<Vec<IdentityOutcome>> {
    let parsed: Vec<ParsedRecord> = ledger
        .records
        .iter()
        .map(parse_record)
        .collect::<Result<_>>()?;
    cache.build(parsed.iter().filter_map(|r| {
        (r.mode == Mode::ModHit).then_some(())?;
        r.degree.map(|d| (r.vars, d))
    }));
    let mut outcomes: Vec<IdentityOutcome> =
        parsed.par_iter().map(|r| evaluate(r, &cache.map)).collect();
    outcomes.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(outcomes)
}

/// A family of monomials closed under variable permutation, labelled
/// by its lexicographically largest representative.
#[derive(Clone, Debug)]
pub struct Family {
    pub label: String,
    pub representative: Monomial,
    pub members: Vec<Monomial>,
}

/// All distinct permutations of the exponent tuple, descending lex.
pub fn permutations_of(m: &Monomial) -> Vec<Monomial> {
    let mut set = BTreeSet::new();
    let mut exps = m.exponents().to_vec();
    heap_permute(&mut exps, 0, &mut set);
    set.into_iter().rev().collect()
}

fn heap_permute(exps: &mut Vec<u32>, at: usize, out: &mut BTreeSet<Monomial>) {
    if at == exps.len() {
        out.insert(Monomial::new(exps.clone()));
        return;
    }
    for i in at..exps.len() {
        exps.swap(at, i);
        heap_permute(exps, at + 1, out);
        exps.swap(at, i);
    }
}

/// The eight permutation families whose classes span the degree-11
/// quotient in five variables, labelled `A` through `H`.
pub fn degree_eleven_families() -> Vec<Family> {
    const REPS: [[u32; 5]; 8] = [
        [7, 3, 1, 0, 0],
        [5, 3, 3, 0, 0],
        [7, 2, 1, 1, 0],
        [5, 3, 2, 1, 0],
        [7, 1, 1, 1, 1],
        [3, 3, 3, 1, 1],
        [5, 3, 1, 1, 1],
        [4, 3, 2, 1, 1],
    ];
    REPS.iter()
        .zip(["A", "B", "C", "D", "E", "F", "G", "H"])
        .map(|(&rep, label)| {
            let representative = Monomial::from(rep);
            Family {
                label: label.to_string(),
                members: permutations_of(&representative),
                representative,
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySummary {
    pub label: String,
    pub representative: String,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanningCheck {
    pub pass: bool,
    pub span_dim: usize,
    pub cohit_dim: usize,
    pub families: Vec<FamilySummary>,
    /// Monomials whose class falls outside the family span; empty on
    /// success.
    pub outside: Vec<String>,
}

/// Checks that the class of every degree-`d` monomial lies in the span
/// of the family classes.
pub fn check_spanning(space: &CohitSpace, families: &[Family]) -> SpanningCheck {
    let dim = space.dim();
    let mut span = F2Matrix::new(dim);
    for family in families {
        for m in &family.members {
            span.push_row(space.reduce(&Polynomial::from(m.clone())));
        }
    }
    let echelon = span.echelon();
    let mut outside = Vec::new();
    for m in monomial_basis(space.k(), space.d()) {
        let class = space.reduce(&Polynomial::from(m.clone()));
        if !echelon.contains(&class) {
            outside.push(m.to_string());
        }
    }
    SpanningCheck {
        pass: outside.is_empty(),
        span_dim: echelon.rank(),
        cohit_dim: dim,
        families: families
            .iter()
            .map(|f| FamilySummary {
                label: f.label.clone(),
                representative: f.representative.to_string(),
                size: f.members.len(),
            })
            .collect(),
        outside,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SummandReport {
    pub label: String,
    pub size: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionCheck {
    /// The seven summands `A..F` and the combined `G+H`. The dims are
    /// computed here, not quoted from anywhere.
    pub summands: Vec<SummandReport>,
    pub dim_sum: usize,
    pub span_dim: usize,
    pub cohit_dim: usize,
    pub direct: bool,
}

/// Measures the seven family subspaces (`G` and `H` merged) and checks
/// that their dimensions add up to the dimension of their joint span,
/// which must be the whole quotient.
pub fn check_decomposition(space: &CohitSpace, families: &[Family]) -> DecompositionCheck {
    assert_eq!(families.len(), 8, "expected families A through H");
    let dim = space.dim();
    let family_matrix = |fams: &[&Family]| -> F2Matrix {
        let mut m = F2Matrix::new(dim);
        for f in fams {
            for mono in &f.members {
                m.push_row(space.reduce(&Polynomial::from(mono.clone())));
            }
        }
        m
    };

    let mut summands = Vec::new();
    for f in &families[..6] {
        summands.push(SummandReport {
            label: f.label.clone(),
            size: f.members.len(),
            dim: family_matrix(&[f]).rank(),
        });
    }
    let gh = [&families[6], &families[7]];
    summands.push(SummandReport {
        label: format!("{}+{}", families[6].label, families[7].label),
        size: families[6].members.len() + families[7].members.len(),
        dim: family_matrix(&gh).rank(),
    });

    let all: Vec<&Family> = families.iter().collect();
    let span_dim = family_matrix(&all).rank();
    let dim_sum = summands.iter().map(|s| s.dim).sum();
    DecompositionCheck {
        summands,
        dim_sum,
        span_dim,
        cohit_dim: dim,
        direct: dim_sum == span_dim && span_dim == dim,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub claim: String,
    pub pass: bool,
}

/// The assembled verification report.
pub struct SuiteReport {
    pub k: usize,
    pub d: u32,
    /// True when `(k, d) = (5, 11)`, the configuration the ledger and
    /// family checks apply to.
    pub full: bool,
    pub monomial_count: usize,
    pub hit_rank: usize,
    pub cohit_dim: usize,
    pub identities: Vec<IdentityOutcome>,
    pub spanning: Option<SpanningCheck>,
    pub decomposition: Option<DecompositionCheck>,
    pub invariants: InvariantReport,
    pub replays: Vec<ProjectionReplay>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    pub assumptions: Vec<String>,
    pub conclusion: Option<String>,
}

impl SuiteReport {
    /// True when every check that ran has passed.
    pub fn passed(&self) -> bool {
        let identities_ok = self.identities.iter().all(|o| o.pass);
        let spanning_ok = self.spanning.as_ref().is_none_or(|s| s.pass);
        let decomposition_ok = self.decomposition.as_ref().is_none_or(|c| c.direct);
        let witnesses_ok = self.witnesses.iter().all(|w| w.pass);
        let full_ok = !self.full
            || (self.cohit_dim == 315
                && self.invariants.invariant_dim == 0
                && self.conclusion.is_some());
        identities_ok && spanning_ok && decomposition_ok && witnesses_ok && full_ok
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "degree": self.d,
            "mode": if self.full { "full" } else { "generic" },
            "cohit": {
                "monomials": self.monomial_count,
                "hit_rank": self.hit_rank,
                "dim": self.cohit_dim,
            },
            "identities": {
                "total": self.identities.len(),
                "passed": self.identities.iter().filter(|o| o.pass).count(),
                "records": self.identities,
            },
            "spanning": self.spanning,
            "decomposition": self.decomposition,
            "invariants": self.invariants.to_json_value(),
            "replays": self.replays.iter().map(|r| r.to_json_value()).collect::<Vec<_>>(),
            "witnesses": self.witnesses,
            "notes": self.notes,
            "assumptions": self.assumptions,
            "conclusion": self.conclusion,
            "pass": self.passed(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("report serialization")
    }

    /// Plain-text rendering, deterministic line for line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let ok = |b: bool| if b { "ok" } else { "FAIL" };
        out.push_str(&format!(
            "cohit space: k={} d={} monomials={} hit rank={} dim={}\n",
            self.k, self.d, self.monomial_count, self.hit_rank, self.cohit_dim
        ));
        if self.full {
            let passed = self.identities.iter().filter(|o| o.pass).count();
            out.push_str(&format!(
                "identity ledger: {passed}/{} passed [{}]\n",
                self.identities.len(),
                ok(passed == self.identities.len())
            ));
            for o in self.identities.iter().filter(|o| !o.pass) {
                out.push_str(&format!("  FAIL {} ({})\n", o.id, o.section));
            }
            if let Some(s) = &self.spanning {
                out.push_str(&format!(
                    "family spanning: span dim {} of {} [{}]\n",
                    s.span_dim,
                    s.cohit_dim,
                    ok(s.pass)
                ));
            }
            if let Some(c) = &self.decomposition {
                let dims: Vec<String> = c
                    .summands
                    .iter()
                    .map(|s| format!("{}={}", s.label, s.dim))
                    .collect();
                out.push_str(&format!(
                    "decomposition: {} sum={} span={} [{}]\n",
                    dims.join(" "),
                    c.dim_sum,
                    c.span_dim,
                    ok(c.direct)
                ));
            }
        }
        out.push_str(&format!(
            "invariants: group={} dim={} (per-generator fixed dims: {:?})\n",
            self.invariants.group,
            self.invariants.invariant_dim,
            self.invariants.per_generator_fixed_dims
        ));
        for w in &self.witnesses {
            out.push_str(&format!("witness: {} [{}]\n", w.claim, ok(w.pass)));
        }
        for r in &self.replays {
            out.push_str(&format!(
                "projection replay: kill {:?} -> {} variables, {}\n",
                r.kill,
                r.k - r.kill.len(),
                if r.vacuous {
                    "vacuous (empty invariant basis)".to_string()
                } else {
                    format!("{} images", r.entries.len())
                }
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        for a in &self.assumptions {
            out.push_str(&format!("assumption: {a}\n"));
        }
        match &self.conclusion {
            Some(c) => out.push_str(&format!("conclusion: {c}\n")),
            None if self.full => out.push_str("conclusion: withheld (a required check failed)\n"),
            None => out.push_str("conclusion: not applicable outside k=5, degree 11\n"),
        }
        out.push_str(&format!("result: {}\n", ok(self.passed())));
        out
    }
}

fn three_variable_witnesses(space: &CohitSpace) -> Vec<Witness> {
    let rel = parse_polynomial("(5,3,3)+(3,5,3)+(3,3,5)", 3).unwrap();
    let single = parse_polynomial("(3,3,5)", 3).unwrap();
    vec![
        Witness {
            claim: "(5,3,3)+(3,5,3)+(3,3,5) is hit in 3 variables, degree 11".into(),
            pass: space.is_hit(&rel),
        },
        Witness {
            claim: "(3,3,5) is not hit in 3 variables, degree 11".into(),
            pass: !space.is_hit(&single),
        },
    ]
}

fn four_variable_witnesses(space: &CohitSpace) -> Vec<Witness> {
    let p = parse_polynomial("(0,3,5,3)", 4).unwrap();
    vec![Witness {
        claim: "(0,3,5,3) is not hit in 4 variables, degree 11".into(),
        pass: !space.is_hit(&p),
    }]
}

fn conclusion_text() -> String {
    "The degree-11 cohit module of the 5-variable polynomial algebra has dimension 315 \
     and its GL_5(F2)-invariant subspace is zero. The space of GL_5-coinvariants of the \
     degree-11 primitive homology of B(Z/2)^5 is dual to that invariant subspace, so it \
     vanishes as well. The fifth algebraic transfer maps those coinvariants to \
     Ext_A^{5,16}(F2,F2); its image in this bidegree is therefore zero, so it cannot \
     detect the nonzero element P(h_2)."
        .into()
}

/// Runs every check that applies at `(k, d)`.
///
/// At `(5, 11)` this is the whole battery: the identity ledger, the
/// spanning and decomposition checks, the invariant computation, the
/// projection replays and — when the two headline numbers come out
/// right — the concluding statement. Elsewhere it degrades to a
/// generic cohit/invariant report.
pub fn run_full_suite(k: usize, d: u32) -> Result<SuiteReport> {
    assert!(k >= 1, "at least one variable required");
    let full = k == 5 && d == 11;
    let mut cache = SpaceCache::new();
    cache.build([(k, d)]);

    let (identities, spanning, decomposition, replays, notes) = if full {
        let ledger = parse_ledger(LEDGER_JSON)?;
        let outcomes = run_identity_ledger(&ledger, &mut cache)?;
        let families = degree_eleven_families();
        let space = cache.get(5, 11);
        let spanning = check_spanning(space, &families);
        let decomposition = check_decomposition(space, &families);
        let group = GroupSpec::general_linear(5);
        let replays = vec![
            crate::invariants::replay_projection(5, 11, &[4], &group),
            crate::invariants::replay_projection(5, 11, &[3, 4], &group),
        ];
        (
            outcomes,
            Some(spanning),
            Some(decomposition),
            replays,
            ledger.notes,
        )
    } else {
        (Vec::new(), None, None, Vec::new(), Vec::new())
    };

    if full || (k == 3 && d == 11) {
        cache.build([(3usize, 11u32)]);
    }
    if full || (k == 4 && d == 11) {
        cache.build([(4usize, 11u32)]);
    }
    let mut witnesses = Vec::new();
    if full || (k == 3 && d == 11) {
        witnesses.extend(three_variable_witnesses(cache.get(3, 11)));
    }
    if full || (k == 4 && d == 11) {
        witnesses.extend(four_variable_witnesses(cache.get(4, 11)));
    }

    let space = cache.get(k, d);
    let invariants = invariant_subspace_of(space, &GroupSpec::general_linear(k));

    let assumptions = if full {
        vec![
            "P(h_2) is a nonzero element of Ext_A^{5,16}(F2,F2); this is an external \
             input, not computed here."
                .to_string(),
        ]
    } else {
        Vec::new()
    };
    let conclusion =
        (full && space.dim() == 315 && invariants.invariant_dim == 0).then(conclusion_text);

    Ok(SuiteReport {
        k,
        d,
        full,
        monomial_count: space.monomial_count(),
        hit_rank: space.hit_rank(),
        cohit_dim: space.dim(),
        identities,
        spanning,
        decomposition,
        invariants,
        replays,
        witnesses,
        notes,
        assumptions,
        conclusion,
    })
}
