//! Seeded pseudo-random term generation, used by the selftest command
//! and the randomized suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::reduction::normalize_capped;
use crate::term::{Substitution, Term};

#[derive(Debug, Clone)]
pub struct GenParams {
    /// Names the generator may use for free variables; empty for closed
    /// terms.
    pub free_names: Vec<String>,
    /// Hard bound on nesting depth.
    pub max_depth: usize,
    /// Relative weights for variable / abstraction / application nodes.
    pub var_weight: u32,
    pub lam_weight: u32,
    pub app_weight: u32,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            free_names: vec!["u".into(), "v".into(), "w".into()],
            max_depth: 7,
            var_weight: 3,
            lam_weight: 2,
            app_weight: 3,
        }
    }
}

impl GenParams {
    pub fn closed() -> GenParams {
        GenParams {
            free_names: Vec::new(),
            ..GenParams::default()
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_term(rng: &mut impl Rng, params: &GenParams) -> Term {
    gen_term(rng, params, 0, 0)
}

fn gen_term(rng: &mut impl Rng, params: &GenParams, scope: usize, depth: usize) -> Term {
    let can_var = scope > 0 || !params.free_names.is_empty();
    if depth >= params.max_depth {
        if can_var {
            return gen_var(rng, params, scope);
        }
        return Term::lam_anon(Term::Bound(0));
    }
    let var_w = if can_var { params.var_weight } else { 0 };
    let total = var_w + params.lam_weight + params.app_weight;
    let roll = rng.gen_range(0..total);
    if roll < var_w {
        gen_var(rng, params, scope)
    } else if roll < var_w + params.lam_weight {
        Term::lam_anon(gen_term(rng, params, scope + 1, depth + 1))
    } else {
        Term::app(
            gen_term(rng, params, scope, depth + 1),
            gen_term(rng, params, scope, depth + 1),
        )
    }
}

fn gen_var(rng: &mut impl Rng, params: &GenParams, scope: usize) -> Term {
    let choices = scope + params.free_names.len();
    let pick = rng.gen_range(0..choices);
    if pick < scope {
        Term::Bound(pick)
    } else {
        Term::free(params.free_names[pick - scope].clone())
    }
}

/// A substitution mapping each of `names` to a fresh random term.
pub fn random_substitution(rng: &mut impl Rng, names: &[String], params: &GenParams) -> Substitution {
    let mut sigma = Substitution::new();
    for n in names {
        if rng.gen_bool(0.75) {
            sigma.insert(n.clone(), random_term(rng, params));
        }
    }
    sigma
}

/// The first `count` seeded random closed terms that normalize within
/// `fuel` steps. Deterministic for a fixed seed and parameters.
pub fn random_closed_normalizing(seed: u64, count: usize, fuel: u64) -> Vec<Term> {
    let mut rng = rng_from_seed(seed);
    let params = GenParams::closed();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let t = random_term(&mut rng, &params);
        // the size cap rules out terms whose "normalization" only fits in
        // the fuel budget by growing without bound
        if normalize_capped(&t, fuel, 20_000).reached() {
            out.push(t);
        }
    }
    out
}
