//! The λ-term data model.
//!
//! Terms are locally nameless: bound variables are de Bruijn indices,
//! free variables carry their name. Binder name hints are kept only for
//! printing and are ignored by equality, so `==` is α-equivalence.

use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};

#[derive(Debug, Clone)]
pub enum Term {
    /// A free variable, identified by name.
    Free(String),
    /// A bound variable as a de Bruijn index (0 = innermost binder).
    Bound(usize),
    /// An abstraction. The name is a printing hint only.
    Lam(Option<String>, Box<Term>),
    /// An application.
    App(Box<Term>, Box<Term>),
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Term::Free(a), Term::Free(b)) => a == b,
            (Term::Bound(a), Term::Bound(b)) => a == b,
            (Term::Lam(_, a), Term::Lam(_, b)) => a == b,
            (Term::App(f, a), Term::App(g, b)) => f == g && a == b,
            _ => false,
        }
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Term::Free(n) => {
                0u8.hash(state);
                n.hash(state);
            }
            Term::Bound(i) => {
                1u8.hash(state);
                i.hash(state);
            }
            Term::Lam(_, b) => {
                2u8.hash(state);
                b.hash(state);
            }
            Term::App(f, a) => {
                3u8.hash(state);
                f.hash(state);
                a.hash(state);
            }
        }
    }
}

impl Term {
    pub fn free(name: impl Into<String>) -> Term {
        Term::Free(name.into())
    }

    /// Abstraction that binds every free occurrence of `name` in `body`.
    pub fn lam(name: impl Into<String>, body: Term) -> Term {
        let name = name.into();
        let body = body.close_over(&name, 0);
        Term::Lam(Some(name), Box::new(body))
    }

    /// Abstraction over an already index-based body (no name to bind).
    pub fn lam_anon(body: Term) -> Term {
        Term::Lam(None, Box::new(body))
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Box::new(f), Box::new(a))
    }

    /// Left-nested application `f a1 a2 ... ak`.
    pub fn apps(f: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(f, Term::app)
    }

    /// The pair ⟨m, n⟩, i.e. λz.(z m n).
    pub fn pair(m: Term, n: Term) -> Term {
        Term::Lam(
            Some("z".to_string()),
            Box::new(Term::apps(Term::Bound(0), [m, n])),
        )
    }

    /// T = λx.λy.x
    pub fn t_true() -> Term {
        Term::lam("x", Term::lam("y", Term::free("x")))
    }

    /// F = λx.λy.y
    pub fn t_false() -> Term {
        Term::lam("x", Term::lam("y", Term::free("y")))
    }

    fn close_over(self, name: &str, depth: usize) -> Term {
        match self {
            Term::Free(n) if n == name => Term::Bound(depth),
            Term::Free(_) | Term::Bound(_) => self,
            Term::Lam(h, b) => Term::Lam(h, Box::new(b.close_over(name, depth + 1))),
            Term::App(f, a) => Term::App(
                Box::new(f.close_over(name, depth)),
                Box::new(a.close_over(name, depth)),
            ),
        }
    }

    /// Replaces index 0 with `arg` and shifts the remaining indices down,
    /// i.e. β-contraction of `(λ.self) arg`. Indices in `arg` that refer
    /// to binders enclosing the redex are shifted past the binders
    /// crossed on the way in.
    pub(crate) fn open(&self, arg: &Term) -> Term {
        self.open_at(arg, 0)
    }

    fn open_at(&self, arg: &Term, depth: usize) -> Term {
        match self {
            Term::Bound(i) if *i == depth => arg.shifted(depth, 0),
            Term::Bound(i) if *i > depth => Term::Bound(i - 1),
            Term::Bound(_) | Term::Free(_) => self.clone(),
            Term::Lam(h, b) => Term::Lam(h.clone(), Box::new(b.open_at(arg, depth + 1))),
            Term::App(f, a) => Term::App(
                Box::new(f.open_at(arg, depth)),
                Box::new(a.open_at(arg, depth)),
            ),
        }
    }

    /// Shifts indices ≥ `cutoff` up by `amount`.
    fn shifted(&self, amount: usize, cutoff: usize) -> Term {
        if amount == 0 {
            return self.clone();
        }
        match self {
            Term::Bound(i) if *i >= cutoff => Term::Bound(i + amount),
            Term::Bound(_) | Term::Free(_) => self.clone(),
            Term::Lam(h, b) => Term::Lam(h.clone(), Box::new(b.shifted(amount, cutoff + 1))),
            Term::App(f, a) => Term::App(
                Box::new(f.shifted(amount, cutoff)),
                Box::new(a.shifted(amount, cutoff)),
            ),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Free(n) => {
                out.insert(n.clone());
            }
            Term::Bound(_) => {}
            Term::Lam(_, b) => b.collect_free(out),
            Term::App(f, a) => {
                f.collect_free(out);
                a.collect_free(out);
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Free(_) => false,
            Term::Bound(_) => true,
            Term::Lam(_, b) => b.is_closed(),
            Term::App(f, a) => f.is_closed() && a.is_closed(),
        }
    }

    /// Node count: variables 1, abstraction 1 + body, application 1 + both.
    pub fn size(&self) -> usize {
        match self {
            Term::Free(_) | Term::Bound(_) => 1,
            Term::Lam(_, b) => 1 + b.size(),
            Term::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    /// Simultaneous capture-avoiding substitution of free variables.
    /// Images are inserted as-is and never rescanned.
    pub fn substitute(&self, sigma: &Substitution) -> Term {
        if sigma.is_empty() {
            return self.clone();
        }
        match self {
            Term::Free(n) => match sigma.get(n) {
                Some(image) => image.clone(),
                None => self.clone(),
            },
            Term::Bound(_) => self.clone(),
            Term::Lam(h, b) => Term::Lam(h.clone(), Box::new(b.substitute(sigma))),
            Term::App(f, a) => Term::App(
                Box::new(f.substitute(sigma)),
                Box::new(a.substitute(sigma)),
            ),
        }
    }

    /// True iff every de Bruijn index resolves to an enclosing binder.
    pub fn is_locally_closed(&self) -> bool {
        fn go(t: &Term, depth: usize) -> bool {
            match t {
                Term::Free(_) => true,
                Term::Bound(i) => *i < depth,
                Term::Lam(_, b) => go(b, depth + 1),
                Term::App(f, a) => go(f, depth) && go(a, depth),
            }
        }
        go(self, 0)
    }
}

/// α-equivalence. With the nameless representation this is structural
/// equality, hints excluded.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    a == b
}

/// A finite map from free-variable names to terms, applied simultaneously.
#[derive(Debug, Clone, Default)]
pub struct Substitution {
    map: BTreeMap<String, Term>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn bind(mut self, name: impl Into<String>, image: Term) -> Substitution {
        self.map.insert(name.into(), image);
        self
    }

    pub fn insert(&mut self, name: impl Into<String>, image: Term) {
        self.map.insert(name.into(), image);
    }

    pub fn get(&self, name: &str) -> Option<&Term> {
        self.map.get(name)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn domain(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(|s| s.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Term)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }
}

impl FromIterator<(String, Term)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (String, Term)>>(iter: I) -> Self {
        Substitution {
            map: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_eq_ignores_binder_names() {
        let a = Term::lam("x", Term::free("x"));
        let b = Term::lam("y", Term::free("y"));
        assert!(alpha_eq(&a, &b));
    }

    #[test]
    fn true_false_distinct() {
        assert!(!alpha_eq(&Term::t_true(), &Term::t_false()));
    }

    #[test]
    fn pair_of_true_and_identity_is_d0() {
        // ⟨T, p_0⟩ against λz.(z (λa.λb.a) (λc.c))
        let d0 = Term::pair(Term::t_true(), Term::lam("x", Term::free("x")));
        let lit = Term::lam(
            "z",
            Term::apps(
                Term::free("z"),
                [
                    Term::lam("a", Term::lam("b", Term::free("a"))),
                    Term::lam("c", Term::free("c")),
                ],
            ),
        );
        assert!(alpha_eq(&d0, &lit));
    }

    #[test]
    fn free_vars_of_closed_term_empty() {
        assert!(Term::lam("x", Term::free("x")).free_vars().is_empty());
    }

    #[test]
    fn free_vars_under_binder() {
        let t = Term::lam("x", Term::app(Term::free("x"), Term::free("y")));
        let fv = t.free_vars();
        assert_eq!(fv.into_iter().collect::<Vec<_>>(), vec!["y".to_string()]);
    }

    #[test]
    fn substitute_simple() {
        let id = Term::lam("z", Term::free("z"));
        let sigma = Substitution::new().bind("x", id.clone());
        assert!(alpha_eq(&Term::free("x").substitute(&sigma), &id));
    }

    #[test]
    fn substitute_is_simultaneous() {
        // (x y) with {x↦y, y↦x} must give (y x), not (x x)
        let t = Term::app(Term::free("x"), Term::free("y"));
        let sigma = Substitution::new()
            .bind("x", Term::free("y"))
            .bind("y", Term::free("x"));
        let expected = Term::app(Term::free("y"), Term::free("x"));
        assert!(alpha_eq(&t.substitute(&sigma), &expected));
    }

    #[test]
    fn substitute_avoids_capture() {
        // λy.(x y) with {x↦y}: the free y must not be captured
        let t = Term::lam("y", Term::app(Term::free("x"), Term::free("y")));
        let sigma = Substitution::new().bind("x", Term::free("y"));
        let got = t.substitute(&sigma);
        let expected = Term::Lam(
            None,
            Box::new(Term::app(Term::free("y"), Term::Bound(0))),
        );
        assert!(alpha_eq(&got, &expected));
        assert_eq!(got.free_vars().len(), 1);
    }

    #[test]
    fn sizes() {
        assert_eq!(Term::free("x").size(), 1);
        assert_eq!(Term::lam("x", Term::free("x")).size(), 2);
        assert_eq!(Term::t_true().size(), 3);
    }
}
