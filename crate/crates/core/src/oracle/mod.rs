//! Brute-force verification over finite fields.

mod f2;
mod fuzz;

pub use f2::{
    irreducibles_f2, no_monomial_invariant_f2, strong_qfc_witness_f2, verify_strong_witness, F2Poly, FactorKind,
    StrongQfcWitness, WitnessFactor, MAX_IRREDUCIBLE_DEGREE, WITNESS_SUPPORT_RADIUS,
};
pub use fuzz::{
    agreement_check, fuzz_monoid_algebra, recheck_counterexample, FuzzConfig, ObstructionKind, OracleCounterexample,
    OracleReport, DEFAULT_MAX_REPORTED, DEFAULT_PAIR_BUDGET, MAX_PRIME,
};
