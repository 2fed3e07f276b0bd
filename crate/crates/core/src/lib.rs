//! Exact calculus of states, eidostates and the `→` relation of the
//! coin-and-box model, with entropic probability and free-energy accounting.

pub mod canon;
pub mod derive;
pub mod expr;
pub mod ledger;
pub mod logexpr;
pub mod measure;
pub mod rational;
pub mod term;

pub use canon::{canonical_form, realize_canonical, CanonError, CanonicalForm, Canonicalization};
pub use derive::certificate::{Certificate, CertificateError, Direction, Relation, Rule, Step};
pub use derive::search::{search_derivation, SearchOutcome};
pub use derive::{reachable, Decision, Reason};
pub use expr::{parse, parse_eidostate, parse_term, Declarations, Expr, ParseError};
pub use ledger::{
    free_energy, free_energy_change, landauer_cost, synthesize_augmentation,
    work_information_bound, Augmentation, Ensemble, LedgerError, LedgerReport, ProcessDirection,
    Real, Synthesis,
};
pub use logexpr::LogExpr;
pub use measure::{
    entropic_probability, entropy_decomposition, gibbs_gap, tune_context, uniformize_mechanical,
    uniformize_reservoir, AugmentedEidostate, Decomposition, Distribution, Increment, MeasureError,
    ReservoirSpec, Tuning,
};
pub use rational::Rational;
pub use term::{
    combine, prime_factors, similar, AbstractAtom, Atom, CoinSet, ContentVector, Eidostate, Face,
    Term, TermError, Weight, COINS,
};
