//! End-to-end acceptance suite. Each test prints one PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use lamnum_core::adequacy::{
    check_predecessor, church_pred, enumerate_closed, refute, search_predecessor,
    ProbeClassification, RefuteOutcome, RefuteVerdict, SearchOutcome,
};
use lamnum_core::numerals::{builtin, numeral, verify_laws, LawVerdict};
use lamnum_core::random::{
    random_closed_normalizing, random_substitution, random_term, rng_from_seed, GenParams,
};
use lamnum_core::reduction::{beta_eq, head_reduce, BetaVerdict, DEFAULT_FUEL};
use lamnum_core::syntax::{parse, print, PrintMode};
use lamnum_core::term::{alpha_eq, Term};

fn criterion(name: &str, pass: bool) {
    println!("{}: {name}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "acceptance criterion failed: {name}");
}

#[test]
fn numeral_laws_adequate_church_case() {
    let start = Instant::now();
    let sys = builtin("church").unwrap();
    let laws = verify_laws(&sys, 50, DEFAULT_FUEL);
    let pred = check_predecessor(&sys, &church_pred(), 50, DEFAULT_FUEL).unwrap();
    let within_budget = start.elapsed() < Duration::from_secs(30);
    criterion(
        "numeral laws, adequate case (church, bound 50, under 30s)",
        laws.all_pass() && pred.all_pass() && within_budget,
    );
}

#[test]
fn numeral_laws_nour_case() {
    let sys = builtin("nour").unwrap();
    let laws = verify_laws(&sys, 50, DEFAULT_FUEL);
    // pairwise α-distinctness over all 51 numerals, quantified
    let numerals: Vec<Term> = (0..=50)
        .map(|n| numeral(&sys, n, DEFAULT_FUEL).unwrap())
        .collect();
    let mut pairwise_distinct = true;
    for i in 0..numerals.len() {
        for j in 0..i {
            if numerals[i] == numerals[j] {
                pairwise_distinct = false;
            }
        }
    }
    // zero-test laws directly
    let mut zero_test_ok =
        beta_eq(&Term::app(sys.zero_test.clone(), numerals[0].clone()), &Term::t_true(), DEFAULT_FUEL)
            == BetaVerdict::Yes;
    for n in 1..=50 {
        zero_test_ok &= beta_eq(
            &Term::app(sys.zero_test.clone(), numerals[n].clone()),
            &Term::t_false(),
            DEFAULT_FUEL,
        ) == BetaVerdict::Yes;
    }
    criterion(
        "numeral laws, nour case (bound 50, pairwise distinct, zero test)",
        laws.all_pass() && pairwise_distinct && zero_test_ok,
    );
}

#[test]
fn paper_literal_successor_fixture() {
    let sys = builtin("nour-paper").unwrap();
    let report = verify_laws(&sys, 1, DEFAULT_FUEL);
    let ok = match &report.verdict {
        LawVerdict::FirstFailure {
            n,
            law,
            expected,
            actual,
        } => {
            *n == 1
                && law == "closed-form"
                && expected == "\\a. a (\\b.\\c. c) (\\d.\\e. e)"
                && actual == "\\a. a (\\b.\\c. c) (\\d.\\e. e (\\f.\\g. f) (\\h. h))"
        }
        LawVerdict::AllPass => false,
    };
    criterion(
        "paper-literal successor fixture (FirstFailure at n=1, pinned normal forms)",
        ok,
    );
}

fn battery_candidates() -> Vec<Term> {
    let sys = builtin("nour").unwrap();
    let mut cands = vec![
        parse("\\n. n").unwrap(),
        parse("\\p. p (\\x.\\y. y)").unwrap(),
        parse("\\n.\\z. z").unwrap(),
        church_pred(),
        sys.successor.clone(),
    ];
    cands.extend(random_closed_normalizing(42, 20, 2000));
    cands
}

#[test]
fn refutation_battery() {
    let start = Instant::now();
    let sys = builtin("nour").unwrap();
    let mut all_ok = true;
    for cand in battery_candidates() {
        match refute(&sys, &cand, DEFAULT_FUEL).unwrap() {
            RefuteOutcome::Certificate(cert) => {
                // direct check must independently confirm the failure
                if cert.direct_check.verdict != BetaVerdict::No
                    || cert.verdict != RefuteVerdict::Refuted
                {
                    all_ok = false;
                }
            }
            RefuteOutcome::CandidateSurvives => all_ok = false,
        }
    }
    let within_budget = start.elapsed() < Duration::from_secs(60);
    criterion(
        "refutation battery (25 candidates, direct check confirms, under 1min)",
        all_ok && within_budget,
    );
}

#[test]
fn case_coverage() {
    let sys = builtin("nour").unwrap();
    let mut seen: BTreeSet<&'static str> = BTreeSet::new();
    for cand in battery_candidates() {
        if let RefuteOutcome::Certificate(cert) = refute(&sys, &cand, DEFAULT_FUEL).unwrap() {
            seen.insert(cert.classification.case_label());
        }
    }
    let battery_ok =
        seen.contains("head-x") && seen.contains("head-y") && seen.contains("head-nu");
    // dedicated fixtures for the two remaining cases
    let lambda_headed = matches!(
        refute(&sys, &parse("\\n.\\a.\\b.\\c.\\d.\\e. e").unwrap(), DEFAULT_FUEL).unwrap(),
        RefuteOutcome::Certificate(cert)
            if matches!(cert.classification, ProbeClassification::LambdaHeaded { .. })
    );
    let unsolvable = matches!(
        refute(&sys, &parse("\\n. (\\x. x x) (\\x. x x)").unwrap(), 500).unwrap(),
        RefuteOutcome::Certificate(cert)
            if matches!(cert.classification, ProbeClassification::Unsolvable { .. })
                && cert.verdict == RefuteVerdict::RefutedModuloFuel
    );
    criterion(
        "case coverage (head-x, head-y, head-nu in battery; lambda-headed and unsolvable fixtures)",
        battery_ok && lambda_headed && unsolvable,
    );
}

#[test]
fn brute_force_search_at_desk_scale() {
    let start = Instant::now();
    let sys = builtin("nour").unwrap();
    let outcome = search_predecessor(&sys, 12, 3, 500);
    let within_budget = start.elapsed() < Duration::from_secs(600);
    let ok = match outcome {
        SearchOutcome::NoneFound(stats) => stats.candidates == 173_442,
        SearchOutcome::Found(_) => false,
    };
    criterion(
        "brute-force theorem support (no predecessor among all 173442 closed terms of size <= 12)",
        ok && within_budget,
    );
}

#[test]
fn substitution_lemma_suite() {
    let mut rng = rng_from_seed(2024);
    let params = GenParams::default();
    let mut ok = true;
    for _ in 0..1000 {
        let m = random_term(&mut rng, &params);
        let cut = 1 + (m.size() as u64 % 24);
        let intermediate = head_reduce(&m, cut);
        let n = intermediate.result;
        let h = intermediate.steps;
        let sigma = random_substitution(&mut rng, &params.free_names, &params);
        let out = head_reduce(&m.substitute(&sigma), h);
        if out.steps != h || !alpha_eq(&out.result, &n.substitute(&sigma)) {
            ok = false;
        }
    }
    criterion(
        "substitution lemma (1000 cases, exact step-count equality)",
        ok,
    );
}

#[test]
fn syntax_round_trip_suite() {
    let mut rng = rng_from_seed(99);
    let params = GenParams::default();
    let mut ok = true;
    let mut canonical_seen: Vec<(String, Term)> = Vec::new();
    for _ in 0..1000 {
        let t = random_term(&mut rng, &params);
        let reparsed = match parse(&print(&t, PrintMode::Readable)) {
            Ok(r) => r,
            Err(_) => {
                ok = false;
                continue;
            }
        };
        if !alpha_eq(&reparsed, &t) {
            ok = false;
        }
        let canon = print(&t, PrintMode::Canonical);
        // injectivity up to α on the sample: same text iff α-equal
        for (text, seen) in &canonical_seen {
            if (text == &canon) != alpha_eq(seen, &t) {
                ok = false;
            }
        }
        canonical_seen.push((canon, t));
    }
    criterion(
        "syntax round-trip (1000 terms, canonical printing injective up to alpha)",
        ok,
    );
}

#[test]
fn enumeration_cross_check() {
    // independent recursive counting oracle over nameless terms:
    // count(1, d) = d; count(s, d) = count(s-1, d+1)
    //   + sum over splits of count(i, d) * count(s-1-i, d)
    fn count(size: usize, depth: usize) -> u64 {
        if size == 0 {
            return 0;
        }
        if size == 1 {
            return depth as u64;
        }
        let mut total = count(size - 1, depth + 1);
        for i in 1..size - 1 {
            total += count(i, depth) * count(size - 1 - i, depth);
        }
        total
    }
    let pinned: [u64; 9] = [0, 1, 2, 4, 13, 42, 139, 506, 1915];
    let mut by_size = vec![0u64; 10];
    for t in enumerate_closed(9) {
        by_size[t.size()] += 1;
    }
    let mut ok = true;
    for size in 1..=9 {
        let oracle = count(size, 0);
        if by_size[size] != oracle || oracle != pinned[size - 1] {
            ok = false;
        }
    }
    criterion(
        "enumeration cross-check (closed-term counts per size up to 9 match counting oracle)",
        ok,
    );
}
