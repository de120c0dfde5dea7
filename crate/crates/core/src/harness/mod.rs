//! Independent oracles and the verification driver.

mod brute;
mod oracle;
mod suite;

pub use brute::{finite_bruteforce, BruteReport, RelTable, MAX_EXHAUSTIVE_N, MAX_N};
pub use oracle::{oracle_ext_rel, oracle_minmax_membership, oracle_minmax_set, MinMax, OracleOps};
pub use suite::{
    run_suite, Counterexample, Mutant, RunConfig, RunReport, Suite, SuiteReport, MIN_SETS_PER_PAIR,
    STANDARD_TERMS,
};
