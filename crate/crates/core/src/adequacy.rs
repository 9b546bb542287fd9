//! Predecessor checking and refutation.
//!
//! A system is adequate iff some closed term P satisfies
//! `(P d_{n+1}) ≃β d_n` for all n. For the ⟨T,p_0⟩ / ⟨F,p_n⟩ system no
//! such P exists: from any candidate we build the probe
//! `Q = λn.((P ⟨F,n⟩) T)`, head-reduce `(Q ν x y)` for fresh ν, x, y,
//! and the shape of the resulting head normal form pins down a concrete
//! index n at which the predecessor law must fail. The certificate
//! records the case analysis plus an independent direct check by
//! normalization.

use serde_json::json;

use crate::numerals::{numeral, nour_numeral, p_term, NumeralSystem};
use crate::reduction::{
    head_reduce, hnf_shape, normalize, BetaVerdict, Head, HnfShape, ReductionOutcome,
};
use crate::syntax::{print, PrintMode};
use crate::term::Term;

/// The probe's fresh head variable. Not an ASCII identifier, so the
/// parser can never produce it inside a user-supplied term.
pub const PROBE_NU: &str = "ν";
pub const PROBE_X: &str = "x";
pub const PROBE_Y: &str = "y";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdequacyError {
    #[error("candidate has free variables: {0:?}")]
    NotClosed(Vec<String>),
    #[error("system '{0}' does not have the ⟨T,p_0⟩/⟨F,p_n⟩ pairing the probe relies on")]
    WrongSystem(String),
}

fn require_closed(candidate: &Term) -> Result<(), AdequacyError> {
    let fv = candidate.free_vars();
    if fv.is_empty() {
        Ok(())
    } else {
        Err(AdequacyError::NotClosed(fv.into_iter().collect()))
    }
}

/// The standard pair-based Church predecessor.
pub fn church_pred() -> Term {
    crate::syntax::parse("\\n.\\f.\\x. n (\\g.\\h. h (g f)) (\\u. x) (\\u. u)")
        .expect("church predecessor literal parses")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Observed {
    Term(Term),
    FuelExhausted(u64),
}

#[derive(Debug, Clone)]
pub struct PredIndexReport {
    pub n: u64,
    pub pass: bool,
    pub observed: Observed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredVerdict {
    AllPass,
    FirstFailure(u64),
}

#[derive(Debug, Clone)]
pub struct PredecessorReport {
    pub system: String,
    pub candidate: Term,
    pub bound: u64,
    pub fuel: u64,
    pub per_index: Vec<PredIndexReport>,
    pub verdict: PredVerdict,
}

impl PredecessorReport {
    pub fn all_pass(&self) -> bool {
        self.verdict == PredVerdict::AllPass
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "system": self.system,
            "candidate": print(&self.candidate, PrintMode::Canonical),
            "bound": self.bound,
            "fuel": self.fuel,
            "per_index": self.per_index.iter().map(|r| json!({
                "n": r.n,
                "pass": r.pass,
                "observed": match &r.observed {
                    Observed::Term(t) => json!(print(t, PrintMode::Canonical)),
                    Observed::FuelExhausted(fuel) => json!({"fuel_exhausted": fuel}),
                },
            })).collect::<Vec<_>>(),
            "verdict": match self.verdict {
                PredVerdict::AllPass => "AllPass".to_string(),
                PredVerdict::FirstFailure(n) => format!("FirstFailure({n})"),
            },
        })
    }
}

impl std::fmt::Display for PredecessorReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "predecessor law for system {} up to n = {} (fuel {})",
            self.system,
            self.bound.saturating_sub(1),
            self.fuel
        )?;
        for r in &self.per_index {
            let obs = match &r.observed {
                Observed::Term(t) => print(t, PrintMode::Canonical),
                Observed::FuelExhausted(fuel) => format!("<fuel exhausted at {fuel}>"),
            };
            writeln!(
                f,
                "  n = {}: {} observed {}",
                r.n,
                if r.pass { "pass" } else { "FAIL" },
                obs
            )?;
        }
        match self.verdict {
            PredVerdict::AllPass => write!(f, "verdict: AllPass"),
            PredVerdict::FirstFailure(n) => write!(f, "verdict: FirstFailure({n})"),
        }
    }
}

/// Evaluates `(candidate d_{n+1}) ≃β d_n` for n = 0 … bound−1.
/// An `Unknown` β-equivalence verdict counts as a failure.
pub fn check_predecessor(
    sys: &NumeralSystem,
    candidate: &Term,
    bound: u64,
    fuel: u64,
) -> Result<PredecessorReport, AdequacyError> {
    require_closed(candidate)?;
    let mut per_index = Vec::new();
    let mut verdict = PredVerdict::AllPass;
    for n in 0..bound {
        let (rhs, lhs_arg) = match (numeral(sys, n, fuel), numeral(sys, n + 1, fuel)) {
            (Ok(rhs), Ok(arg)) => (rhs, arg),
            _ => {
                per_index.push(PredIndexReport {
                    n,
                    pass: false,
                    observed: Observed::FuelExhausted(fuel),
                });
                verdict = PredVerdict::FirstFailure(n);
                break;
            }
        };
        let lhs = Term::app(candidate.clone(), lhs_arg);
        let out = normalize(&lhs, fuel);
        let (pass, observed) = if out.reached() {
            (out.result == rhs, Observed::Term(out.result))
        } else {
            (false, Observed::FuelExhausted(fuel))
        };
        per_index.push(PredIndexReport { n, pass, observed });
        if !pass {
            verdict = PredVerdict::FirstFailure(n);
            break;
        }
    }
    Ok(PredecessorReport {
        system: sys.name.clone(),
        candidate: candidate.clone(),
        bound,
        fuel,
        per_index,
        verdict,
    })
}

/// Q = λn.((candidate ⟨F, n⟩) T), closed for closed candidates.
pub fn build_probe(candidate: &Term) -> Result<Term, AdequacyError> {
    require_closed(candidate)?;
    Ok(Term::lam(
        "n",
        Term::app(
            Term::app(
                candidate.clone(),
                Term::pair(Term::t_false(), Term::free("n")),
            ),
            Term::t_true(),
        ),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeClassification {
    /// Head reduction of (Q ν x y) reached (x u_1…u_k).
    HeadX(usize),
    /// Reached (y u_1…u_k).
    HeadY(usize),
    /// Reached (ν u_1…u_k).
    HeadNu(usize),
    /// Reached an hnf with leading binders.
    LambdaHeaded {
        binders: usize,
        head: Head,
        args: usize,
    },
    /// Head reduction did not terminate within fuel.
    Unsolvable { fuel: u64 },
}

impl ProbeClassification {
    pub fn case_label(&self) -> &'static str {
        match self {
            ProbeClassification::HeadX(_) => "head-x",
            ProbeClassification::HeadY(_) => "head-y",
            ProbeClassification::HeadNu(_) => "head-nu",
            ProbeClassification::LambdaHeaded { .. } => "lambda-headed",
            ProbeClassification::Unsolvable { .. } => "unsolvable",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            ProbeClassification::HeadX(k) => {
                json!({"case": "head-x", "binders": 0, "head": PROBE_X, "args": k})
            }
            ProbeClassification::HeadY(k) => {
                json!({"case": "head-y", "binders": 0, "head": PROBE_Y, "args": k})
            }
            ProbeClassification::HeadNu(k) => {
                json!({"case": "head-nu", "binders": 0, "head": PROBE_NU, "args": k})
            }
            ProbeClassification::LambdaHeaded {
                binders,
                head,
                args,
            } => json!({
                "case": "lambda-headed",
                "binders": binders,
                "head": head.label(),
                "args": args,
            }),
            ProbeClassification::Unsolvable { fuel } => {
                json!({"case": "unsolvable", "fuel": fuel})
            }
        }
    }
}

/// Head-reduces (probe ν x y) with three fixed distinct free variables
/// and classifies the reached head normal form.
pub fn classify_probe(probe: &Term, fuel: u64) -> ProbeClassification {
    let applied = Term::apps(
        probe.clone(),
        [
            Term::free(PROBE_NU),
            Term::free(PROBE_X),
            Term::free(PROBE_Y),
        ],
    );
    let out = head_reduce(&applied, fuel);
    if !out.reached() {
        return ProbeClassification::Unsolvable { fuel };
    }
    let shape = hnf_shape(&out.result).expect("head reduction terminated at an hnf");
    if shape.binders > 0 {
        return ProbeClassification::LambdaHeaded {
            binders: shape.binders,
            head: shape.head,
            args: shape.args,
        };
    }
    match &shape.head {
        Head::Free(name) if name == PROBE_X => ProbeClassification::HeadX(shape.args),
        Head::Free(name) if name == PROBE_Y => ProbeClassification::HeadY(shape.args),
        Head::Free(name) if name == PROBE_NU => ProbeClassification::HeadNu(shape.args),
        // the probe's only free variables are ν, x, y, so this arm is
        // unreachable for well-formed inputs
        _ => ProbeClassification::LambdaHeaded {
            binders: 0,
            head: shape.head,
            args: shape.args,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RequiredVar {
    X,
    Y,
}

impl RequiredVar {
    pub fn name(self) -> &'static str {
        match self {
            RequiredVar::X => PROBE_X,
            RequiredVar::Y => PROBE_Y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefuteVerdict {
    Refuted,
    RefutedModuloFuel,
}

#[derive(Debug, Clone)]
pub struct DirectCheck {
    pub lhs: Observed,
    pub rhs: Term,
    pub verdict: BetaVerdict,
}

#[derive(Debug, Clone)]
pub struct RefutationCertificate {
    pub candidate: Term,
    pub probe: Term,
    pub classification: ProbeClassification,
    pub counterexample_n: u64,
    pub required: RequiredVar,
    pub observed_probe_hnf: Option<HnfShape>,
    pub direct_check: DirectCheck,
    pub fuel: u64,
    pub verdict: RefuteVerdict,
}

impl RefutationCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "candidate": print(&self.candidate, PrintMode::Canonical),
            "probe": print(&self.probe, PrintMode::Canonical),
            "classification": self.classification.to_json(),
            "counterexample": {
                "n": self.counterexample_n,
                "required": self.required.name(),
                "observed": self.observed_probe_hnf.as_ref().map(|s| s.to_json()),
            },
            "direct_check": {
                "lhs_nf": match &self.direct_check.lhs {
                    Observed::Term(t) => json!(print(t, PrintMode::Canonical)),
                    Observed::FuelExhausted(fuel) => json!({"fuel_exhausted": fuel}),
                },
                "rhs_nf": print(&self.direct_check.rhs, PrintMode::Canonical),
                "verdict": self.direct_check.verdict.label(),
            },
            "fuel": self.fuel,
            "verdict": match self.verdict {
                RefuteVerdict::Refuted => "Refuted",
                RefuteVerdict::RefutedModuloFuel => "RefutedModuloFuel",
            },
        })
    }
}

impl std::fmt::Display for RefutationCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "candidate: {}", print(&self.candidate, PrintMode::Canonical))?;
        writeln!(f, "probe:     {}", print(&self.probe, PrintMode::Canonical))?;
        writeln!(f, "case:      {}", self.classification.case_label())?;
        writeln!(
            f,
            "counterexample: n = {} (the law needs head {})",
            self.counterexample_n,
            self.required.name()
        )?;
        let lhs = match &self.direct_check.lhs {
            Observed::Term(t) => print(t, PrintMode::Canonical),
            Observed::FuelExhausted(fuel) => format!("<fuel exhausted at {fuel}>"),
        };
        writeln!(
            f,
            "direct check: (candidate d_{}) normalizes to {} vs d_{} = {} -> {}",
            self.counterexample_n + 1,
            lhs,
            self.counterexample_n,
            print(&self.direct_check.rhs, PrintMode::Canonical),
            self.direct_check.verdict.label()
        )?;
        write!(
            f,
            "verdict: {}",
            match self.verdict {
                RefuteVerdict::Refuted => "Refuted",
                RefuteVerdict::RefutedModuloFuel => "RefutedModuloFuel",
            }
        )
    }
}

#[derive(Debug, Clone)]
pub enum RefuteOutcome {
    Certificate(Box<RefutationCertificate>),
    CandidateSurvives,
}

fn is_nour_shaped(sys: &NumeralSystem) -> bool {
    sys.zero == nour_numeral(0)
}

/// Runs the head-reduction case analysis against a candidate
/// predecessor and produces a counterexample certificate.
pub fn refute(
    sys: &NumeralSystem,
    candidate: &Term,
    fuel: u64,
) -> Result<RefuteOutcome, AdequacyError> {
    require_closed(candidate)?;
    if !is_nour_shaped(sys) {
        return Err(AdequacyError::WrongSystem(sys.name.clone()));
    }
    let probe = build_probe(candidate)?;
    let classification = classify_probe(&probe, fuel);
    // Each classification forces the law to fail at a specific index:
    //   head x:     correct behavior at n = 1 needs head y
    //   head y:     correct behavior at n = 0 needs head x
    //   head ν, k:  substituting p_{k+2} for ν leaves a λ-headed hnf,
    //               but n = k+1 needs head y
    //   λ-headed:   substitution keeps the leading binder; n = 0 needs x
    //   unsolvable: (Q ν x y) solvable is forced by the law at any n
    let (counterexample_n, required) = match &classification {
        ProbeClassification::HeadX(_) => (1, RequiredVar::Y),
        ProbeClassification::HeadY(_) => (0, RequiredVar::X),
        ProbeClassification::HeadNu(k) => (*k as u64 + 1, RequiredVar::Y),
        ProbeClassification::LambdaHeaded { .. } => (0, RequiredVar::X),
        ProbeClassification::Unsolvable { .. } => (0, RequiredVar::X),
    };
    // (a) run the probe on the concrete numeral payload p_{n+1} and
    // record that head reduction does not end at the required variable
    let probe_applied = Term::apps(
        probe.clone(),
        [
            p_term(counterexample_n + 1),
            Term::free(PROBE_X),
            Term::free(PROBE_Y),
        ],
    );
    let probe_out = head_reduce(&probe_applied, fuel);
    let observed_probe_hnf = probe_out
        .reached()
        .then(|| hnf_shape(&probe_out.result).expect("hnf after head reduction"));
    // (b) independent direct check of the law at the counterexample index
    let rhs = nour_numeral(counterexample_n);
    let lhs = Term::app(candidate.clone(), nour_numeral(counterexample_n + 1));
    let lhs_out = normalize(&lhs, fuel);
    let direct_verdict = if lhs_out.reached() {
        if lhs_out.result == rhs {
            BetaVerdict::Yes
        } else {
            BetaVerdict::No
        }
    } else {
        BetaVerdict::Unknown
    };
    let direct_check = DirectCheck {
        lhs: if lhs_out.reached() {
            Observed::Term(lhs_out.result)
        } else {
            Observed::FuelExhausted(fuel)
        },
        rhs,
        verdict: direct_verdict,
    };
    let verdict = match direct_verdict {
        BetaVerdict::No => RefuteVerdict::Refuted,
        BetaVerdict::Unknown => RefuteVerdict::RefutedModuloFuel,
        BetaVerdict::Yes => return Ok(RefuteOutcome::CandidateSurvives),
    };
    Ok(RefuteOutcome::Certificate(Box::new(RefutationCertificate {
        candidate: candidate.clone(),
        probe,
        classification,
        counterexample_n,
        required,
        observed_probe_hnf,
        direct_check,
        fuel,
        verdict,
    })))
}

/// All closed terms of size ≤ max_size, exactly once, in increasing
/// size, deterministic order within each size stratum (variable <
/// abstraction < application).
pub fn enumerate_closed(max_size: usize) -> impl Iterator<Item = Term> {
    ClosedTerms {
        max_size,
        size: 0,
        buf: Vec::new().into_iter(),
    }
}

struct ClosedTerms {
    max_size: usize,
    size: usize,
    buf: std::vec::IntoIter<Term>,
}

impl Iterator for ClosedTerms {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        loop {
            if let Some(t) = self.buf.next() {
                return Some(t);
            }
            if self.size >= self.max_size {
                return None;
            }
            self.size += 1;
            self.buf = terms_of(self.size, 0).into_iter();
        }
    }
}

fn terms_of(size: usize, depth: usize) -> Vec<Term> {
    let mut out = Vec::new();
    if size == 0 {
        return out;
    }
    if size == 1 {
        for i in 0..depth {
            out.push(Term::Bound(i));
        }
        return out;
    }
    for body in terms_of(size - 1, depth + 1) {
        out.push(Term::lam_anon(body));
    }
    if size >= 3 {
        for fun_size in 1..=size - 2 {
            let funs = terms_of(fun_size, depth);
            let args = terms_of(size - 1 - fun_size, depth);
            for f in &funs {
                for a in &args {
                    out.push(Term::app(f.clone(), a.clone()));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub candidates: u64,
    pub rejected_at_zero: u64,
    pub rejected_later: u64,
    pub fuel_exhausted: u64,
}

impl SearchStats {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "candidates": self.candidates,
            "rejected_at_zero": self.rejected_at_zero,
            "rejected_later": self.rejected_later,
            "fuel_exhausted": self.fuel_exhausted,
        })
    }
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(Term),
    NoneFound(SearchStats),
}

// intermediate terms larger than this abort a candidate's reduction
const SEARCH_SIZE_CAP: usize = 50_000;

/// Sweeps every closed term of size ≤ max_size through the predecessor
/// law for n = 0 … law_bound−1, cheapest index first, discarding on the
/// first failure. Returns the enumeration-earliest survivor, if any.
pub fn search_predecessor(
    sys: &NumeralSystem,
    max_size: usize,
    law_bound: u64,
    fuel: u64,
) -> SearchOutcome {
    let numerals: Vec<Term> = (0..=law_bound)
        .map(|n| numeral(sys, n, fuel).expect("builtin numerals stay within fuel"))
        .collect();
    let mut stats = SearchStats::default();
    'candidates: for cand in enumerate_closed(max_size) {
        stats.candidates += 1;
        for n in 0..law_bound {
            let lhs = Term::app(cand.clone(), numerals[(n + 1) as usize].clone());
            let out: ReductionOutcome =
                crate::reduction::normalize_capped(&lhs, fuel, SEARCH_SIZE_CAP);
            if !out.reached() {
                stats.fuel_exhausted += 1;
                continue 'candidates;
            }
            if out.result != numerals[n as usize] {
                if n == 0 {
                    stats.rejected_at_zero += 1;
                } else {
                    stats.rejected_later += 1;
                }
                continue 'candidates;
            }
        }
        return SearchOutcome::Found(cand);
    }
    SearchOutcome::NoneFound(stats)
}
