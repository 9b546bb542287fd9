//! A workbench for the untyped λ-calculus centred on numeral systems:
//! head reduction with step counting, normal-order normalization,
//! numeral-law verification, and a refutation engine that produces
//! concrete counterexample certificates for candidate predecessor terms.

pub mod adequacy;
pub mod numerals;
pub mod random;
pub mod reduction;
pub mod syntax;
pub mod term;

pub use adequacy::{
    build_probe, check_predecessor, church_pred, classify_probe, enumerate_closed, refute,
    search_predecessor, AdequacyError, PredecessorReport, ProbeClassification, RefutationCertificate,
    RefuteOutcome, SearchOutcome, SearchStats,
};
pub use numerals::{
    builtin, church_numeral, nour_numeral, numeral, p_term, verify_laws, LawReport, LawVerdict,
    NumeralError, NumeralSystem,
};
pub use reduction::{
    beta_eq, head_reduce, head_reduce_traced, head_step, hnf_shape, is_solvable, leftmost_step,
    normalize, normalize_traced, BetaVerdict, Head, HnfShape, ReductionOutcome, Solvability, Status,
    Strategy, DEFAULT_FUEL,
};
pub use syntax::{parse, parse_definitions, parse_with, print, Definitions, PrintMode, SyntaxError};
pub use term::{alpha_eq, Substitution, Term};
