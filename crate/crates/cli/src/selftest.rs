//! Reduced-bound invariant suite behind `lamnum selftest`.

use serde_json::json;

use lamnum_core::adequacy::{
    check_predecessor, church_pred, enumerate_closed, refute, search_predecessor, RefuteOutcome,
    SearchOutcome,
};
use lamnum_core::numerals::{builtin, verify_laws, LawVerdict};
use lamnum_core::random::{
    random_closed_normalizing, random_substitution, random_term, rng_from_seed, GenParams,
};
use lamnum_core::reduction::{head_reduce, BetaVerdict, DEFAULT_FUEL};
use lamnum_core::syntax::{parse, print, PrintMode};
use lamnum_core::term::alpha_eq;

pub fn run(json_mode: bool) -> Result<u8, String> {
    let mut checks: Vec<(&'static str, bool)> = Vec::new();

    checks.push((
        "church laws (bound 10)",
        verify_laws(&builtin("church").unwrap(), 10, DEFAULT_FUEL).all_pass(),
    ));
    checks.push((
        "nour laws (bound 10)",
        verify_laws(&builtin("nour").unwrap(), 10, DEFAULT_FUEL).all_pass(),
    ));
    checks.push((
        "nour-paper fixture fails closed-form at n=1",
        matches!(
            verify_laws(&builtin("nour-paper").unwrap(), 1, DEFAULT_FUEL).verdict,
            LawVerdict::FirstFailure { n: 1, .. }
        ),
    ));
    checks.push((
        "church predecessor (bound 10)",
        check_predecessor(&builtin("church").unwrap(), &church_pred(), 10, DEFAULT_FUEL)
            .map(|r| r.all_pass())
            .unwrap_or(false),
    ));

    let nour = builtin("nour").unwrap();
    let mut battery_ok = true;
    let mut cands = vec![
        parse("\\n. n").unwrap(),
        parse("\\p. p (\\x.\\y. y)").unwrap(),
        parse("\\n.\\z. z").unwrap(),
        church_pred(),
    ];
    cands.extend(random_closed_normalizing(42, 5, 2000));
    for cand in &cands {
        match refute(&nour, cand, DEFAULT_FUEL) {
            Ok(RefuteOutcome::Certificate(cert)) => {
                if cert.direct_check.verdict != BetaVerdict::No {
                    battery_ok = false;
                }
            }
            _ => battery_ok = false,
        }
    }
    checks.push(("refutation battery (9 candidates)", battery_ok));

    checks.push((
        "search finds no predecessor up to size 7",
        matches!(
            search_predecessor(&nour, 7, 2, 500),
            SearchOutcome::NoneFound(_)
        ),
    ));

    let enum_ok = {
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
        let mut by_size = vec![0u64; 8];
        for t in enumerate_closed(7) {
            by_size[t.size()] += 1;
        }
        (1..=7).all(|s| by_size[s] == count(s, 0))
    };
    checks.push(("enumeration matches counting oracle up to size 7", enum_ok));

    let mut rng = rng_from_seed(5);
    let params = GenParams::default();
    let mut roundtrip_ok = true;
    let mut sublemma_ok = true;
    for _ in 0..100 {
        let t = random_term(&mut rng, &params);
        match parse(&print(&t, PrintMode::Readable)) {
            Ok(r) if alpha_eq(&r, &t) => {}
            _ => roundtrip_ok = false,
        }
        let cut = 1 + (t.size() as u64 % 16);
        let mid = head_reduce(&t, cut);
        let sigma = random_substitution(&mut rng, &params.free_names, &params);
        let out = head_reduce(&t.substitute(&sigma), mid.steps);
        if out.steps != mid.steps || !alpha_eq(&out.result, &mid.result.substitute(&sigma)) {
            sublemma_ok = false;
        }
    }
    checks.push(("syntax round-trip (100 random terms)", roundtrip_ok));
    checks.push((
        "substitution lemma with exact step counts (100 cases)",
        sublemma_ok,
    ));

    let all_pass = checks.iter().all(|(_, ok)| *ok);
    if json_mode {
        println!(
            "{}",
            json!({
                "checks": checks
                    .iter()
                    .map(|(name, ok)| json!({"name": name, "pass": ok}))
                    .collect::<Vec<_>>(),
                "verdict": if all_pass { "pass" } else { "fail" },
            })
        );
    } else {
        for (name, ok) in &checks {
            println!("{}: {name}", if *ok { "PASS" } else { "FAIL" });
        }
        println!("selftest: {}", if all_pass { "pass" } else { "fail" });
    }
    Ok(if all_pass { 0 } else { 1 })
}
