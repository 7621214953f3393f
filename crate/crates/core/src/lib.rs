//! Exact computations with the twisted `gl(n)` action on Laurent polynomials.
//!
//! A unit `E_ab` acts on `x^k` by `(k[b] + alpha[b]) x^(k + e_a - e_b)`, where
//! `alpha` is a vector of Gaussian rationals. Everything here is exact.

pub mod action;
pub mod error;
pub mod filtration;
pub mod ladder;
pub mod laurent;
pub mod lattice;
pub mod oracle;
pub mod scalar;
pub mod window;

pub use action::{act_on_monomial, act_unit, act_word, unit_coefficient, weight_of, MatrixUnit, UWord, Weight};
pub use error::{Error, Result};
pub use ladder::{ladder_word, separation_certificate, Derivation, DerivationNode, LadderCertificate, LadderStep, LadderSummary};
pub use filtration::{
    check_filtration_axioms, graded_basis, graded_iso_check, member_leq, member_lt, monoid_mul, poset_leq, FiltrationConfig,
    FiltrationReport, PosetIndex,
};
pub use laurent::{normalize_alpha, AlphaParam, Exponent, IndexSet, LaurentPoly, MAX_VARS};
pub use lattice::{
    binomial, classify, classify_hw, dimension_count, generator_of_v, is_generator, member_l, member_v, reduce_mod_lower,
    verify_hw, w_basis_window, Classification, Dimension, GeneratorCase, GeneratorResult, HwCertificate, HwPattern,
    ModuleId,
};
pub use oracle::{
    binomial_splits, check_cyclic, check_direct_sum, check_simple_w, closure_check, indecomposability_certificate,
    pair_witnesses, reachability_set, run_sweep, run_sweep_with_env, weights_injective, ClosureReport, DirectSumReport, IndecomposabilityReport, ReachReport, SweepConfig, SweepReport,
};
pub use scalar::GaussianRational;
pub use window::Window;
