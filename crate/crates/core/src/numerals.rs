//! Numeral systems as data, and mechanical verification of their laws.
//!
//! A numeral system is a zero term, a successor term and a zero-test
//! term, all closed, whose iterates `S^n 0` are distinct closed normal
//! terms with `(Z 0) ≃β T` and `(Z (S^n 0)) ≃β F` for n ≥ 1.

use serde_json::json;

use crate::reduction::{beta_eq, normalize, BetaVerdict};
use crate::syntax::{print, PrintMode};
use crate::term::Term;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumeralError {
    #[error("unknown numeral system '{0}'")]
    UnknownSystem(String),
    #[error("fuel exhausted while computing numeral {n}")]
    FuelExhausted { n: u64 },
}

#[derive(Clone)]
pub struct NumeralSystem {
    pub name: String,
    pub zero: Term,
    pub successor: Term,
    pub zero_test: Term,
    /// Direct generator for the n-th numeral, when one is known.
    pub closed_form: Option<fn(u64) -> Term>,
}

impl std::fmt::Debug for NumeralSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NumeralSystem")
            .field("name", &self.name)
            .field("zero", &self.zero)
            .field("successor", &self.successor)
            .field("zero_test", &self.zero_test)
            .field("closed_form", &self.closed_form.is_some())
            .finish()
    }
}

/// p_n = λx_1…λx_n.λx.x
pub fn p_term(n: u64) -> Term {
    let mut t = Term::lam("x", Term::free("x"));
    for i in (1..=n).rev() {
        t = Term::Lam(Some(format!("x{i}")), Box::new(t));
    }
    t
}

/// d_0 = ⟨T, p_0⟩ and d_n = ⟨F, p_n⟩ for n ≥ 1.
pub fn nour_numeral(n: u64) -> Term {
    if n == 0 {
        Term::pair(Term::t_true(), p_term(0))
    } else {
        Term::pair(Term::t_false(), p_term(n))
    }
}

/// c_n = λf.λx.f^n(x)
pub fn church_numeral(n: u64) -> Term {
    let mut body = Term::free("x");
    for _ in 0..n {
        body = Term::app(Term::free("f"), body);
    }
    Term::lam("f", Term::lam("x", body))
}

pub fn builtin(name: &str) -> Result<NumeralSystem, NumeralError> {
    match name {
        "church" => Ok(NumeralSystem {
            name: "church".to_string(),
            zero: church_numeral(0),
            successor: Term::lam(
                "n",
                Term::lam(
                    "f",
                    Term::lam(
                        "x",
                        Term::app(
                            Term::free("f"),
                            Term::apps(Term::free("n"), [Term::free("f"), Term::free("x")]),
                        ),
                    ),
                ),
            ),
            zero_test: Term::lam(
                "n",
                Term::apps(
                    Term::free("n"),
                    [Term::lam("z", Term::t_false()), Term::t_true()],
                ),
            ),
            closed_form: Some(church_numeral),
        }),
        // S = λn.⟨F, λx.(n F)⟩: (d_n F) head-reduces to p_n, and
        // λx.p_n is α-equal to p_{n+1}.
        "nour" => Ok(NumeralSystem {
            name: "nour".to_string(),
            zero: nour_numeral(0),
            successor: Term::lam(
                "n",
                Term::pair(
                    Term::t_false(),
                    Term::lam("x", Term::app(Term::free("n"), Term::t_false())),
                ),
            ),
            zero_test: nour_zero_test(),
            closed_form: Some(nour_numeral),
        }),
        // The successor exactly as printed in the source material,
        // S = λn.⟨F, λx.n⟩. Kept as a fixture: it fails the closed-form
        // law at n = 1, which the verifier demonstrates.
        "nour-paper" => Ok(NumeralSystem {
            name: "nour-paper".to_string(),
            zero: nour_numeral(0),
            successor: Term::lam(
                "n",
                Term::pair(Term::t_false(), Term::lam("x", Term::free("n"))),
            ),
            zero_test: nour_zero_test(),
            closed_form: Some(nour_numeral),
        }),
        other => Err(NumeralError::UnknownSystem(other.to_string())),
    }
}

fn nour_zero_test() -> Term {
    // Z = λn.(n T)
    Term::lam("n", Term::app(Term::free("n"), Term::t_true()))
}

/// The n-th numeral of a system: successor applied n times to zero,
/// normalizing after each application.
pub fn numeral(sys: &NumeralSystem, n: u64, fuel: u64) -> Result<Term, NumeralError> {
    let mut cur = sys.zero.clone();
    for i in 1..=n {
        let out = normalize(&Term::app(sys.successor.clone(), cur), fuel);
        if !out.reached() {
            return Err(NumeralError::FuelExhausted { n: i });
        }
        cur = out.result;
    }
    Ok(cur)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub n: u64,
    pub successor_ok: bool,
    pub distinct_ok: bool,
    pub zerotest_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawVerdict {
    AllPass,
    FirstFailure {
        n: u64,
        law: String,
        expected: String,
        actual: String,
    },
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub system: String,
    pub bound: u64,
    pub fuel: u64,
    pub per_index: Vec<IndexReport>,
    pub verdict: LawVerdict,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.verdict == LawVerdict::AllPass
    }

    pub fn to_json(&self) -> serde_json::Value {
        let failures = match &self.verdict {
            LawVerdict::AllPass => vec![],
            LawVerdict::FirstFailure {
                n,
                law,
                expected,
                actual,
            } => vec![json!({
                "n": n,
                "law": law,
                "expected": expected,
                "actual": actual,
            })],
        };
        json!({
            "system": self.system,
            "bound": self.bound,
            "fuel": self.fuel,
            "verdict": match self.verdict {
                LawVerdict::AllPass => "AllPass",
                LawVerdict::FirstFailure { .. } => "FirstFailure",
            },
            "failures": failures,
        })
    }
}

impl std::fmt::Display for LawReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "system {} checked up to n = {} (fuel {})",
            self.system, self.bound, self.fuel
        )?;
        match &self.verdict {
            LawVerdict::AllPass => write!(f, "verdict: AllPass"),
            LawVerdict::FirstFailure {
                n,
                law,
                expected,
                actual,
            } => {
                writeln!(f, "verdict: FirstFailure at n = {n} ({law} law)")?;
                writeln!(f, "  expected: {expected}")?;
                write!(f, "  actual:   {actual}")
            }
        }
    }
}

/// Checks, for every n up to `bound`: the n-th numeral is a normal
/// form, is α-distinct from all earlier numerals, agrees with the
/// closed form when one exists, and satisfies the zero-test law.
/// Stops at the first failing law.
pub fn verify_laws(sys: &NumeralSystem, bound: u64, fuel: u64) -> LawReport {
    let mut per_index = Vec::new();
    let mut previous: Vec<Term> = Vec::new();
    let mut cur = sys.zero.clone();
    let canon = |t: &Term| print(t, PrintMode::Canonical);
    for n in 0..=bound {
        if n > 0 {
            let out = normalize(&Term::app(sys.successor.clone(), cur.clone()), fuel);
            if !out.reached() {
                return LawReport {
                    system: sys.name.clone(),
                    bound,
                    fuel,
                    per_index,
                    verdict: LawVerdict::FirstFailure {
                        n,
                        law: "fuel".to_string(),
                        expected: "a normal form within fuel".to_string(),
                        actual: format!("fuel exhausted after {} steps", out.steps),
                    },
                };
            }
            cur = out.result;
        }
        let mut fail: Option<(String, String, String)> = None;
        // (i) normal form: re-normalizing must take zero steps
        let renorm = normalize(&cur, fuel);
        let successor_ok_nf = renorm.reached() && renorm.steps == 0;
        if !successor_ok_nf {
            fail = Some((
                "normal-form".to_string(),
                "a β-normal term".to_string(),
                canon(&cur),
            ));
        }
        // (ii) α-distinct from all earlier numerals
        let distinct_ok = previous.iter().all(|p| p != &cur);
        if fail.is_none() && !distinct_ok {
            let m = previous.iter().position(|p| p == &cur).unwrap();
            fail = Some((
                "distinctness".to_string(),
                format!("a term distinct from numeral {m}"),
                canon(&cur),
            ));
        }
        // (iii) closed form agreement
        let closed_ok = match sys.closed_form {
            Some(gen) => gen(n) == cur,
            None => true,
        };
        if fail.is_none() && !closed_ok {
            let expected = sys.closed_form.map(|gen| gen(n)).unwrap();
            fail = Some(("closed-form".to_string(), canon(&expected), canon(&cur)));
        }
        // (iv) zero test: T at 0, F above
        let probe = Term::app(sys.zero_test.clone(), cur.clone());
        let want = if n == 0 { Term::t_true() } else { Term::t_false() };
        let zerotest_ok = beta_eq(&probe, &want, fuel) == BetaVerdict::Yes;
        if fail.is_none() && !zerotest_ok {
            let got = normalize(&probe, fuel);
            fail = Some((
                "zero-test".to_string(),
                canon(&want),
                if got.reached() {
                    canon(&got.result)
                } else {
                    format!("fuel exhausted after {} steps", got.steps)
                },
            ));
        }
        per_index.push(IndexReport {
            n,
            successor_ok: successor_ok_nf && closed_ok,
            distinct_ok,
            zerotest_ok,
        });
        if let Some((law, expected, actual)) = fail {
            return LawReport {
                system: sys.name.clone(),
                bound,
                fuel,
                per_index,
                verdict: LawVerdict::FirstFailure {
                    n,
                    law,
                    expected,
                    actual,
                },
            };
        }
        previous.push(cur.clone());
    }
    LawReport {
        system: sys.name.clone(),
        bound,
        fuel,
        per_index,
        verdict: LawVerdict::AllPass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::{head_reduce, hnf_shape, DEFAULT_FUEL};
    use crate::term::alpha_eq;

    #[test]
    fn p_terms() {
        assert!(alpha_eq(&p_term(0), &Term::lam("x", Term::free("x"))));
        assert!(alpha_eq(
            &p_term(1),
            &Term::lam("a", Term::lam("x", Term::free("x")))
        ));
        assert_eq!(p_term(3).size(), 5);
    }

    #[test]
    fn p_term_consumes_binders() {
        let t = Term::apps(p_term(3), [Term::free("a"), Term::free("b")]);
        let out = head_reduce(&t, 10);
        assert!(out.reached());
        assert!(alpha_eq(&out.result, &p_term(1)));
    }

    #[test]
    fn nour_numerals_shape() {
        let d0 = nour_numeral(0);
        assert!(alpha_eq(&d0, &Term::pair(Term::t_true(), p_term(0))));
        let d2 = nour_numeral(2);
        assert!(alpha_eq(&d2, &Term::pair(Term::t_false(), p_term(2))));
        assert!(!alpha_eq(&nour_numeral(1), &nour_numeral(2)));
    }

    #[test]
    fn unknown_system_is_an_error() {
        assert!(matches!(builtin("roman"), Err(NumeralError::UnknownSystem(_))));
    }

    #[test]
    fn church_successor_law_instance() {
        let sys = builtin("church").unwrap();
        let lhs = Term::app(sys.successor.clone(), church_numeral(0));
        assert_eq!(beta_eq(&lhs, &church_numeral(1), 1000), BetaVerdict::Yes);
    }

    #[test]
    fn nour_successor_law_instances() {
        let sys = builtin("nour").unwrap();
        for n in 0..10 {
            let lhs = Term::app(sys.successor.clone(), nour_numeral(n));
            assert_eq!(
                beta_eq(&lhs, &nour_numeral(n + 1), 1000),
                BetaVerdict::Yes,
                "successor law failed at n = {n}"
            );
        }
    }

    #[test]
    fn paper_successor_fails_at_one() {
        let sys = builtin("nour-paper").unwrap();
        let lhs = Term::app(sys.successor.clone(), nour_numeral(0));
        assert_eq!(beta_eq(&lhs, &nour_numeral(1), 1000), BetaVerdict::No);
    }

    #[test]
    fn numeral_iterates_successor() {
        let church = builtin("church").unwrap();
        assert!(alpha_eq(
            &numeral(&church, 0, 100).unwrap(),
            &church_numeral(0)
        ));
        let nour = builtin("nour").unwrap();
        assert!(alpha_eq(
            &numeral(&nour, 3, 1000).unwrap(),
            &nour_numeral(3)
        ));
    }

    #[test]
    fn paper_numeral_one_diverges_from_closed_form() {
        let sys = builtin("nour-paper").unwrap();
        let got = numeral(&sys, 1, 1000).unwrap();
        let expected = Term::pair(Term::t_false(), Term::lam("x", nour_numeral(0)));
        assert!(alpha_eq(&got, &expected));
        assert!(!alpha_eq(&got, &nour_numeral(1)));
    }

    #[test]
    fn verify_laws_church_small() {
        let report = verify_laws(&builtin("church").unwrap(), 10, DEFAULT_FUEL);
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn verify_laws_nour_small() {
        let report = verify_laws(&builtin("nour").unwrap(), 10, DEFAULT_FUEL);
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn verify_laws_paper_fixture_fails_closed_form_at_one() {
        let report = verify_laws(&builtin("nour-paper").unwrap(), 1, DEFAULT_FUEL);
        match &report.verdict {
            LawVerdict::FirstFailure { n, law, .. } => {
                assert_eq!(*n, 1);
                assert_eq!(law, "closed-form");
            }
            LawVerdict::AllPass => panic!("fixture unexpectedly passed"),
        }
    }

    #[test]
    fn nour_zero_test_behavior() {
        let sys = builtin("nour").unwrap();
        for n in 0..5 {
            let probe = Term::app(sys.zero_test.clone(), nour_numeral(n));
            let out = head_reduce(&probe, 1000);
            assert!(out.reached());
            assert!(hnf_shape(&out.result).is_some());
            let want = if n == 0 { Term::t_true() } else { Term::t_false() };
            assert_eq!(beta_eq(&probe, &want, 1000), BetaVerdict::Yes);
        }
    }
}
