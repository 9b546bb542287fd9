//! Head reduction, normal-order normalization, β-equivalence and
//! solvability — all fuel-bounded, where fuel counts β-contractions.

use serde_json::json;

use crate::syntax::{print, PrintMode};
use crate::term::Term;

/// Default β-contraction budget for CLI commands.
pub const DEFAULT_FUEL: u64 = 100_000;

/// Recorded trace entries are capped so certificates stay small.
pub const TRACE_LIMIT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Head,
    NormalOrder,
}

impl Strategy {
    pub fn label(self) -> &'static str {
        match self {
            Strategy::Head => "head",
            Strategy::NormalOrder => "normal-order",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Reached,
    FuelExhausted,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Reached => "reached",
            Status::FuelExhausted => "fuel-exhausted",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReductionOutcome {
    pub status: Status,
    pub result: Term,
    pub steps: u64,
    pub strategy: Strategy,
    pub trace: Option<Vec<Term>>,
}

impl ReductionOutcome {
    pub fn reached(&self) -> bool {
        self.status == Status::Reached
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "status": self.status.label(),
            "strategy": self.strategy.label(),
            "steps": self.steps,
            "result": print(&self.result, PrintMode::Canonical),
            "trace": self.trace.as_ref().map(|ts| {
                ts.iter()
                    .enumerate()
                    .map(|(i, t)| json!({"step": i, "term": print(t, PrintMode::Canonical)}))
                    .collect::<Vec<_>>()
            }),
        })
    }
}

/// Contracts the head redex, if any. A term has at most one head redex,
/// so this is deterministic; `None` means the term is in head normal form.
pub fn head_step(t: &Term) -> Option<Term> {
    match t {
        Term::Lam(h, b) => head_step(b).map(|b2| Term::Lam(h.clone(), Box::new(b2))),
        Term::App(f, a) => match &**f {
            Term::Lam(_, body) => Some(body.open(a)),
            _ => head_step(f).map(|f2| Term::app(f2, (**a).clone())),
        },
        Term::Free(_) | Term::Bound(_) => None,
    }
}

/// Contracts the leftmost-outermost redex, if any. For terms that are
/// not in head normal form this coincides with `head_step`.
pub fn leftmost_step(t: &Term) -> Option<Term> {
    match t {
        Term::Lam(h, b) => leftmost_step(b).map(|b2| Term::Lam(h.clone(), Box::new(b2))),
        Term::App(f, a) => {
            if let Term::Lam(_, body) = &**f {
                return Some(body.open(a));
            }
            if let Some(f2) = leftmost_step(f) {
                return Some(Term::app(f2, (**a).clone()));
            }
            leftmost_step(a).map(|a2| Term::app((**f).clone(), a2))
        }
        Term::Free(_) | Term::Bound(_) => None,
    }
}

fn run(
    m: &Term,
    fuel: u64,
    strategy: Strategy,
    traced: bool,
    size_cap: Option<usize>,
) -> ReductionOutcome {
    let step: fn(&Term) -> Option<Term> = match strategy {
        Strategy::Head => head_step,
        Strategy::NormalOrder => leftmost_step,
    };
    let mut cur = m.clone();
    let mut steps = 0u64;
    let mut trace = traced.then(|| vec![cur.clone()]);
    while steps < fuel {
        match step(&cur) {
            Some(next) => {
                cur = next;
                steps += 1;
                if let Some(tr) = trace.as_mut() {
                    if tr.len() < TRACE_LIMIT {
                        tr.push(cur.clone());
                    }
                }
                if let Some(cap) = size_cap {
                    if cur.size() > cap {
                        return ReductionOutcome {
                            status: Status::FuelExhausted,
                            result: cur,
                            steps,
                            strategy,
                            trace,
                        };
                    }
                }
            }
            None => {
                return ReductionOutcome {
                    status: Status::Reached,
                    result: cur,
                    steps,
                    strategy,
                    trace,
                }
            }
        }
    }
    let status = if step(&cur).is_none() {
        Status::Reached
    } else {
        Status::FuelExhausted
    };
    ReductionOutcome {
        status,
        result: cur,
        steps,
        strategy,
        trace,
    }
}

/// Iterated head reduction. `steps` of the outcome is the length h of
/// the head reduction performed.
pub fn head_reduce(m: &Term, fuel: u64) -> ReductionOutcome {
    run(m, fuel, Strategy::Head, false, None)
}

pub fn head_reduce_traced(m: &Term, fuel: u64) -> ReductionOutcome {
    run(m, fuel, Strategy::Head, true, None)
}

/// Leftmost-outermost reduction to β-normal form, with a step budget
/// shared across the whole reduction.
pub fn normalize(m: &Term, fuel: u64) -> ReductionOutcome {
    run(m, fuel, Strategy::NormalOrder, false, None)
}

pub fn normalize_traced(m: &Term, fuel: u64) -> ReductionOutcome {
    run(m, fuel, Strategy::NormalOrder, true, None)
}

/// Like `normalize`, but also gives up (reporting fuel exhaustion) if an
/// intermediate term grows past `size_cap` nodes. Used by the brute-force
/// search, where a handful of candidates blow up instead of looping.
pub fn normalize_capped(m: &Term, fuel: u64, size_cap: usize) -> ReductionOutcome {
    run(m, fuel, Strategy::NormalOrder, false, Some(size_cap))
}

/// The head variable of a head normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Head {
    Free(String),
    /// De Bruijn index relative to the innermost peeled binder.
    Bound(usize),
}

impl Head {
    pub fn label(&self) -> String {
        match self {
            Head::Free(n) => n.clone(),
            Head::Bound(i) => format!("#{i}"),
        }
    }
}

/// Decomposition of a head normal form λx_1…λx_n (x v_1…v_m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfShape {
    pub binders: usize,
    pub head: Head,
    pub args: usize,
}

impl HnfShape {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "binders": self.binders,
            "head": self.head.label(),
            "args": self.args,
        })
    }
}

/// `None` if the term still has a head redex.
pub fn hnf_shape(t: &Term) -> Option<HnfShape> {
    let mut binders = 0usize;
    let mut cur = t;
    while let Term::Lam(_, b) = cur {
        binders += 1;
        cur = b;
    }
    let mut args = 0usize;
    while let Term::App(f, _) = cur {
        args += 1;
        cur = f;
    }
    match cur {
        Term::Free(n) => Some(HnfShape {
            binders,
            head: Head::Free(n.clone()),
            args,
        }),
        Term::Bound(i) => Some(HnfShape {
            binders,
            head: Head::Bound(*i),
            args,
        }),
        Term::Lam(..) => None, // head redex (binders peeled, so a Lam here is applied)
        Term::App(..) => unreachable!(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaVerdict {
    Yes,
    No,
    Unknown,
}

impl BetaVerdict {
    pub fn label(self) -> &'static str {
        match self {
            BetaVerdict::Yes => "yes",
            BetaVerdict::No => "no",
            BetaVerdict::Unknown => "unknown",
        }
    }
}

/// Semi-decision of β-equivalence: normalize both sides and compare up
/// to α. Sound for normalizing terms; `Unknown` when fuel runs out.
pub fn beta_eq(a: &Term, b: &Term, fuel: u64) -> BetaVerdict {
    let na = normalize(a, fuel);
    if !na.reached() {
        return BetaVerdict::Unknown;
    }
    let nb = normalize(b, fuel);
    if !nb.reached() {
        return BetaVerdict::Unknown;
    }
    if na.result == nb.result {
        BetaVerdict::Yes
    } else {
        BetaVerdict::No
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solvability {
    Solvable(u64),
    Unknown,
}

/// A term is solvable iff its head reduction terminates; this checks
/// termination within `fuel` steps.
pub fn is_solvable(m: &Term, fuel: u64) -> Solvability {
    let out = head_reduce(m, fuel);
    if out.reached() {
        Solvability::Solvable(out.steps)
    } else {
        Solvability::Unknown
    }
}
