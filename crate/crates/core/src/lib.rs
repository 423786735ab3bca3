//! A logic engine for tuple-valued and three-valued semantics.
//!
//! The engine covers a propositional language and a first-order language
//! (negation, conjunction, disjunction, universal and existential
//! quantifiers) and evaluates formulas under three families of semantics:
//!
//! * **Tuple-valued**: truth values are bit vectors of a fixed width `n`,
//!   ordered lexicographically. Negation flips every component;
//!   conjunction and disjunction are lattice meet and join. See [`tuple`].
//! * **Three-valued**: the strong Kleene scheme over `{0, 1/2, 1}`, with
//!   K3 (only `1` designated) and LP (`1` and `1/2` designated) as the two
//!   standard designation choices. See [`threeval`].
//! * **Classical**: the two-valued fragment of the three-valued scheme.
//!
//! On top of evaluation the crate provides:
//!
//! * consequence relations for each semantics, including the mixed
//!   strict-tolerant relation, with exhaustive propositional checking and
//!   bounded first-order countermodel search ([`consequence`]);
//! * the collapse and embedding translations between tuple-valued and
//!   three-valued interpretations, together with randomized and exhaustive
//!   harnesses that confirm the two sides classify exactly the same
//!   sequents as valid ([`translation`]);
//! * natural-language readings of tuple values ([`reading`]);
//! * a parser and printer for the formula language ([`parser`]).
//!
//! # Example
//!
//! Explosion fails under the tolerant tuple consequence relation:
//!
//! ```
//! use tupleval_core::{
//!     check_propositional, parse_sequent, ConsequenceMode, DesignatedMode, DEFAULT_BUDGET,
//! };
//!
//! let seq = parse_sequent("p, ~p |- q", None)?;
//! let mode = ConsequenceMode::Tuple { width: 2, designated: DesignatedMode::Tolerant };
//! let verdict = check_propositional(&seq, &mode, DEFAULT_BUDGET)?;
//! assert!(!verdict.valid);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod consequence;
pub mod corpus;
pub mod formula;
pub mod interp;
pub mod parser;
pub mod reading;
pub mod threeval;
pub mod translation;
pub mod tuple;

pub use consequence::{
    certify_countermodel, check_first_order_bounded, check_propositional, designated_atoms_table,
    CheckError, ConsequenceMode, Countermodel, TruthTable, Verdict, DEFAULT_BUDGET,
};
pub use formula::{Formula, Sequent, Signature, SignatureError, Term};
pub use interp::{EvalError, Interpretation, LogicValue, ModelError, ModelJson, ValueSpace};
pub use parser::{parse_formula, parse_sequent, ParseError};
pub use reading::{explain, ReadingError, ReadingScheme};
pub use threeval::{ThreeDesignatedMode, ThreeValue};
pub use translation::{
    collapse_interpretation, collapse_value, embed_interpretation, embed_value, run_lemma_suite,
    verify_pairs_first_order, verify_pairs_propositional, CorpusReport, FoCorpusParams,
    LemmaReport, ModePairing, PropCorpusParams, TranslationError,
};
pub use tuple::{DesignatedMode, TupleValue};
