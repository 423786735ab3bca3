//! Consequence relations and countermodel search.
//!
//! A sequent is valid when every interpretation that designates all the
//! premises also designates the conclusion. The designation policy can
//! differ between the two sides: the *strict-tolerant* modes designate
//! premises strictly (tuple: all-ones; three-valued: value 1) but accept
//! tolerantly designated conclusions (tuple: anything but all-zeros;
//! three-valued: 1 or 1/2).
//!
//! Propositional checking is exhaustive over the letters that actually
//! occur. First-order checking enumerates interpretations over all domain
//! sizes up to a bound, so `valid` there means "no countermodel with at
//! most `max_domain` elements". Both walks are deterministic (see
//! [`InterpretationEnumerator`]), so the reported countermodel for an
//! invalid sequent is a stable function of the input. Every countermodel
//! is re-checked from its serialized form before being returned.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{Formula, Sequent, Signature, SignatureError};
use crate::interp::{
    eval_unchecked, validate_model, EvalError, Interpretation, InterpretationEnumerator,
    LogicValue, ModelError, ModelJson,
};
use crate::threeval::{ThreeDesignatedMode, ThreeValue};
use crate::tuple::{DesignatedMode, TupleValue};

/// Default cap on how many interpretations a single check may evaluate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A consequence relation: a semantics plus designation policies for
/// premises and conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConsequenceMode {
    /// Tuple semantics of the given width with one designation policy on
    /// both sides.
    Tuple {
        width: u8,
        designated: DesignatedMode,
    },
    /// Tuple semantics, strict premises and tolerant conclusions.
    TupleStrictTolerant { width: u8 },
    /// Three-valued semantics with one designation policy on both sides.
    /// The classical policy restricts interpretations to the two-valued
    /// ones.
    Three(ThreeDesignatedMode),
    /// Three-valued semantics, K3 premises and LP conclusions.
    ThreeStrictTolerant,
}

impl ConsequenceMode {
    /// Every tuple mode at a width, plus every three-valued mode.
    pub fn all(width: u8) -> Vec<ConsequenceMode> {
        vec![
            ConsequenceMode::Tuple {
                width,
                designated: DesignatedMode::Strict,
            },
            ConsequenceMode::Tuple {
                width,
                designated: DesignatedMode::Bossy,
            },
            ConsequenceMode::Tuple {
                width,
                designated: DesignatedMode::Tolerant,
            },
            ConsequenceMode::TupleStrictTolerant { width },
            ConsequenceMode::Three(ThreeDesignatedMode::K3),
            ConsequenceMode::Three(ThreeDesignatedMode::Lp),
            ConsequenceMode::Three(ThreeDesignatedMode::Classical),
            ConsequenceMode::ThreeStrictTolerant,
        ]
    }

    /// Builds a mode from CLI-style parts.
    pub fn from_parts(semantics: &str, mode: &str, width: u8) -> Result<ConsequenceMode, String> {
        match (semantics, mode) {
            ("tuple", "strict") => Ok(ConsequenceMode::Tuple {
                width,
                designated: DesignatedMode::Strict,
            }),
            ("tuple", "bossy") => Ok(ConsequenceMode::Tuple {
                width,
                designated: DesignatedMode::Bossy,
            }),
            ("tuple", "tolerant") => Ok(ConsequenceMode::Tuple {
                width,
                designated: DesignatedMode::Tolerant,
            }),
            ("tuple", "st" | "strict-tolerant") => {
                Ok(ConsequenceMode::TupleStrictTolerant { width })
            }
            ("three", "k3") => Ok(ConsequenceMode::Three(ThreeDesignatedMode::K3)),
            ("three", "lp") => Ok(ConsequenceMode::Three(ThreeDesignatedMode::Lp)),
            ("three", "classical") => Ok(ConsequenceMode::Three(ThreeDesignatedMode::Classical)),
            ("three", "st" | "strict-tolerant") => Ok(ConsequenceMode::ThreeStrictTolerant),
            ("tuple", other) => Err(format!(
                "mode `{other}` is not a tuple mode (expected strict, bossy, tolerant, or st)"
            )),
            ("three", other) => Err(format!(
                "mode `{other}` is not a three-valued mode (expected k3, lp, classical, or st)"
            )),
            (other, _) => Err(format!(
                "unknown semantics `{other}` (expected tuple or three)"
            )),
        }
    }

    pub fn label(&self) -> String {
        match self {
            ConsequenceMode::Tuple { width, designated } => {
                format!("tuple-{designated} (n={width})")
            }
            ConsequenceMode::TupleStrictTolerant { width } => {
                format!("tuple-strict-tolerant (n={width})")
            }
            ConsequenceMode::Three(d) => format!("three-{d}"),
            ConsequenceMode::ThreeStrictTolerant => "three-strict-tolerant".to_string(),
        }
    }
}

impl fmt::Display for ConsequenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The result of a consequence check.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub valid: bool,
    /// Human-readable mode label, e.g. `tuple-strict (n=2)`.
    pub mode: String,
    /// Interpretations evaluated before the verdict was reached.
    pub interpretations_checked: u64,
    /// For first-order checks, the domain-size bound the verdict is
    /// relative to; absent for propositional checks, which are exhaustive.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_domain: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub countermodel: Option<Countermodel>,
}

/// A refuting interpretation, in serializable form: the model plus the
/// value every formula of the sequent takes in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Countermodel {
    #[serde(flatten)]
    pub model: ModelJson,
    /// Formula text to rendered value, for premises and conclusion.
    pub formula_values: BTreeMap<String, String>,
}

/// Error from a consequence check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("`{formula}` is not propositional")]
    NotPropositional { formula: String },
    #[error("`{formula}` is not a sentence; free variables: {variables}")]
    NotSentence { formula: String, variables: String },
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("search budget exhausted after {checked} interpretations (budget {budget})")]
    BudgetExhausted { checked: u64, budget: u64 },
    #[error("the formula has {count} letters; the table limit is {limit}")]
    TooManyAtoms { count: usize, limit: usize },
}

/// Exhaustively checks a propositional sequent: every assignment of
/// values to the letters that occur in it is visited (subject to the
/// budget).
pub fn check_propositional(
    seq: &Sequent,
    mode: &ConsequenceMode,
    budget: u64,
) -> Result<Verdict, CheckError> {
    for f in seq.formulas() {
        if !f.is_propositional() {
            return Err(CheckError::NotPropositional {
                formula: f.to_string(),
            });
        }
    }
    let sig = seq.signature()?;
    dispatch(seq, &sig, mode, 1..=1, None, budget)
}

/// Searches for a countermodel among interpretations with domain sizes
/// `1..=max_domain`. All formulas must be sentences. A `valid` verdict
/// means only that no countermodel exists within the bound.
pub fn check_first_order_bounded(
    seq: &Sequent,
    mode: &ConsequenceMode,
    max_domain: usize,
    budget: u64,
) -> Result<Verdict, CheckError> {
    if max_domain == 0 {
        return Err(CheckError::Model(ModelError::EmptyDomain));
    }
    for f in seq.formulas() {
        let free = f.free_variables();
        if !free.is_empty() {
            return Err(CheckError::NotSentence {
                formula: f.to_string(),
                variables: free.into_iter().collect::<Vec<_>>().join(", "),
            });
        }
    }
    let sig = seq.signature()?;
    dispatch(seq, &sig, mode, 1..=max_domain, Some(max_domain), budget)
}

fn dispatch(
    seq: &Sequent,
    sig: &Signature,
    mode: &ConsequenceMode,
    domain_sizes: std::ops::RangeInclusive<usize>,
    max_domain: Option<usize>,
    budget: u64,
) -> Result<Verdict, CheckError> {
    match *mode {
        ConsequenceMode::Tuple { width, designated } => run(
            seq,
            sig,
            TupleValue::all(width).collect(),
            "tuple",
            Some(width),
            domain_sizes,
            max_domain,
            budget,
            mode,
            move |v| designated.designates(v),
            move |v| designated.designates(v),
        ),
        ConsequenceMode::TupleStrictTolerant { width } => run(
            seq,
            sig,
            TupleValue::all(width).collect(),
            "tuple",
            Some(width),
            domain_sizes,
            max_domain,
            budget,
            mode,
            |v: TupleValue| DesignatedMode::Strict.designates(v),
            |v: TupleValue| DesignatedMode::Tolerant.designates(v),
        ),
        ConsequenceMode::Three(d) => {
            // The classical policy quantifies over two-valued
            // interpretations only; on those, designation is `v == 1` for
            // all three policies that appear here.
            let values = if d == ThreeDesignatedMode::Classical {
                ThreeValue::classical().to_vec()
            } else {
                ThreeValue::all().to_vec()
            };
            run(
                seq,
                sig,
                values,
                "three",
                None,
                domain_sizes,
                max_domain,
                budget,
                mode,
                move |v| d.designates(v),
                move |v| d.designates(v),
            )
        }
        ConsequenceMode::ThreeStrictTolerant => run(
            seq,
            sig,
            ThreeValue::all().to_vec(),
            "three",
            None,
            domain_sizes,
            max_domain,
            budget,
            mode,
            |v: ThreeValue| ThreeDesignatedMode::K3.designates(v),
            |v: ThreeValue| ThreeDesignatedMode::Lp.designates(v),
        ),
    }
}

#[allow(clippy::too_many_arguments)]
fn run<V: LogicValue>(
    seq: &Sequent,
    sig: &Signature,
    values: Vec<V>,
    semantics: &str,
    width: Option<u8>,
    domain_sizes: std::ops::RangeInclusive<usize>,
    max_domain: Option<usize>,
    budget: u64,
    mode: &ConsequenceMode,
    premise_ok: impl Fn(V) -> bool,
    conclusion_ok: impl Fn(V) -> bool,
) -> Result<Verdict, CheckError> {
    let mut checked: u64 = 0;
    let mut env = Vec::new();
    for ds in domain_sizes {
        let mut e = InterpretationEnumerator::new(sig, ds, values.clone())?;
        loop {
            if checked >= budget {
                return Err(CheckError::BudgetExhausted { checked, budget });
            }
            checked += 1;
            let m = e.current();
            if let Some(formula_values) = refutes(seq, m, &premise_ok, &conclusion_ok, &mut env)? {
                let countermodel = Countermodel {
                    model: ModelJson::from_interpretation(m, semantics, width),
                    formula_values,
                };
                if let Err(reason) = certify_countermodel(seq, mode, &countermodel) {
                    panic!("countermodel failed certification: {reason}");
                }
                return Ok(Verdict {
                    valid: false,
                    mode: mode.label(),
                    interpretations_checked: checked,
                    max_domain,
                    countermodel: Some(countermodel),
                });
            }
            if !e.advance() {
                break;
            }
        }
    }
    Ok(Verdict {
        valid: true,
        mode: mode.label(),
        interpretations_checked: checked,
        max_domain,
        countermodel: None,
    })
}

/// Evaluates the sequent in `m`; if the interpretation refutes it, returns
/// the rendered value of every formula.
fn refutes<'f, V: LogicValue>(
    seq: &'f Sequent,
    m: &Interpretation<V>,
    premise_ok: impl Fn(V) -> bool,
    conclusion_ok: impl Fn(V) -> bool,
    env: &mut Vec<(&'f str, usize)>,
) -> Result<Option<BTreeMap<String, String>>, EvalError> {
    for p in seq.premises() {
        let v = eval_unchecked(p, m, env)?;
        if !premise_ok(v) {
            return Ok(None);
        }
    }
    let c = eval_unchecked(seq.conclusion(), m, env)?;
    if conclusion_ok(c) {
        return Ok(None);
    }
    let mut values = BTreeMap::new();
    for f in seq.formulas() {
        let v = eval_unchecked(f, m, env)?;
        values.insert(f.to_string(), v.value_name());
    }
    Ok(Some(values))
}

/// Re-checks a countermodel from its serialized form: the model must
/// interpret the sequent's vocabulary, reproduce the recorded formula
/// values, designate every premise, and fail to designate the conclusion
/// under the mode's policies. Returns a diagnostic message on failure.
pub fn certify_countermodel(
    seq: &Sequent,
    mode: &ConsequenceMode,
    cm: &Countermodel,
) -> Result<(), String> {
    match mode {
        ConsequenceMode::Tuple { .. } | ConsequenceMode::TupleStrictTolerant { .. } => {
            let (m, w) = cm.model.to_tuple().map_err(|e| e.to_string())?;
            let (expected_width, premise, conclusion): (u8, DesignatedMode, DesignatedMode) =
                match *mode {
                    ConsequenceMode::Tuple { width, designated } => (width, designated, designated),
                    ConsequenceMode::TupleStrictTolerant { width } => {
                        (width, DesignatedMode::Strict, DesignatedMode::Tolerant)
                    }
                    _ => unreachable!("outer match restricts to tuple modes"),
                };
            if w != expected_width {
                return Err(format!(
                    "model has width {w}, mode expects {expected_width}"
                ));
            }
            certify_in(
                seq,
                &m,
                cm,
                |v| premise.designates(v),
                |v| conclusion.designates(v),
            )
        }
        ConsequenceMode::Three(d) => {
            let m = cm.model.to_three().map_err(|e| e.to_string())?;
            if *d == ThreeDesignatedMode::Classical {
                let middle = m
                    .predicates()
                    .values()
                    .any(|t| t.values().contains(&ThreeValue::Half));
                if middle {
                    return Err("classical countermodel contains the value 1/2".to_string());
                }
            }
            let d = *d;
            certify_in(
                seq,
                &m,
                cm,
                move |v| d.designates(v),
                move |v| d.designates(v),
            )
        }
        ConsequenceMode::ThreeStrictTolerant => {
            let m = cm.model.to_three().map_err(|e| e.to_string())?;
            certify_in(
                seq,
                &m,
                cm,
                |v| ThreeDesignatedMode::K3.designates(v),
                |v| ThreeDesignatedMode::Lp.designates(v),
            )
        }
    }
}

fn certify_in<V: LogicValue>(
    seq: &Sequent,
    m: &Interpretation<V>,
    cm: &Countermodel,
    premise_ok: impl Fn(V) -> bool,
    conclusion_ok: impl Fn(V) -> bool,
) -> Result<(), String> {
    let sig = seq.signature().map_err(|e| e.to_string())?;
    validate_model(&sig, m).map_err(|e| e.to_string())?;
    let mut env = Vec::new();
    for f in seq.formulas() {
        let v = eval_unchecked(f, m, &mut env).map_err(|e| e.to_string())?;
        let text = f.to_string();
        match cm.formula_values.get(&text) {
            None => return Err(format!("no recorded value for `{text}`")),
            Some(recorded) if *recorded != v.value_name() => {
                return Err(format!(
                    "`{text}` evaluates to {} but the countermodel records {recorded}",
                    v.value_name()
                ))
            }
            Some(_) => {}
        }
    }
    for p in seq.premises() {
        let v = eval_unchecked(p, m, &mut env).map_err(|e| e.to_string())?;
        if !premise_ok(v) {
            return Err(format!(
                "premise `{p}` is not designated (value {})",
                v.value_name()
            ));
        }
    }
    let c = eval_unchecked(seq.conclusion(), m, &mut env).map_err(|e| e.to_string())?;
    if conclusion_ok(c) {
        return Err(format!(
            "conclusion `{}` is designated (value {})",
            seq.conclusion(),
            c.value_name()
        ));
    }
    Ok(())
}

/// A truth table for a propositional formula: one row per assignment to
/// its letters, in enumeration order (letters sorted, values ascending,
/// rightmost letter fastest).
#[derive(Debug, Clone, Serialize)]
pub struct TruthTable {
    pub formula: String,
    pub mode: String,
    pub atoms: Vec<String>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    /// Rendered input values, one per atom.
    pub inputs: Vec<String>,
    /// Rendered value of the formula.
    pub value: String,
    /// Whether the value is designated. Uniform modes use their shared
    /// policy; strict-tolerant modes flag accepting (conclusion-side)
    /// rows.
    pub designated: bool,
}

/// Builds the truth table of a propositional formula under a mode's
/// semantics, refusing formulas with more than `atom_limit` letters.
pub fn designated_atoms_table(
    f: &Formula,
    mode: &ConsequenceMode,
    atom_limit: usize,
) -> Result<TruthTable, CheckError> {
    if !f.is_propositional() {
        return Err(CheckError::NotPropositional {
            formula: f.to_string(),
        });
    }
    let atoms: Vec<String> = f.letters().into_iter().collect();
    if atoms.len() > atom_limit {
        return Err(CheckError::TooManyAtoms {
            count: atoms.len(),
            limit: atom_limit,
        });
    }
    let sig = f.signature()?;
    let rows = match *mode {
        ConsequenceMode::Tuple { width, designated } => table_rows(
            f,
            &sig,
            &atoms,
            TupleValue::all(width).collect(),
            move |v| designated.designates(v),
        )?,
        ConsequenceMode::TupleStrictTolerant { width } => table_rows(
            f,
            &sig,
            &atoms,
            TupleValue::all(width).collect(),
            |v: TupleValue| DesignatedMode::Tolerant.designates(v),
        )?,
        ConsequenceMode::Three(d) => {
            let values = if d == ThreeDesignatedMode::Classical {
                ThreeValue::classical().to_vec()
            } else {
                ThreeValue::all().to_vec()
            };
            table_rows(f, &sig, &atoms, values, move |v| d.designates(v))?
        }
        ConsequenceMode::ThreeStrictTolerant => table_rows(
            f,
            &sig,
            &atoms,
            ThreeValue::all().to_vec(),
            |v: ThreeValue| ThreeDesignatedMode::Lp.designates(v),
        )?,
    };
    Ok(TruthTable {
        formula: f.to_string(),
        mode: mode.label(),
        atoms,
        rows,
    })
}

fn table_rows<V: LogicValue>(
    f: &Formula,
    sig: &Signature,
    atoms: &[String],
    values: Vec<V>,
    designated: impl Fn(V) -> bool,
) -> Result<Vec<TableRow>, CheckError> {
    let mut rows = Vec::new();
    let mut e = InterpretationEnumerator::new(sig, 1, values)?;
    let mut env = Vec::new();
    loop {
        let m = e.current();
        let inputs = atoms
            .iter()
            .map(|a| {
                m.predicates()
                    .get(a)
                    .expect("atoms come from the signature")
                    .values()[0]
                    .value_name()
            })
            .collect();
        let v = eval_unchecked(f, m, &mut env)?;
        rows.push(TableRow {
            inputs,
            value: v.value_name(),
            designated: designated(v),
        });
        if !e.advance() {
            break;
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_formula, parse_sequent};

    fn seq(s: &str) -> Sequent {
        parse_sequent(s, None).unwrap()
    }

    fn tuple(width: u8, designated: DesignatedMode) -> ConsequenceMode {
        ConsequenceMode::Tuple { width, designated }
    }

    fn check(s: &str, mode: ConsequenceMode) -> Verdict {
        check_propositional(&seq(s), &mode, DEFAULT_BUDGET).unwrap()
    }

    fn check_fo(s: &str, mode: ConsequenceMode, max_domain: usize) -> Verdict {
        check_first_order_bounded(&seq(s), &mode, max_domain, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn explosion_fails_tolerantly_but_holds_bossily() {
        // p, ~p |- q: invalid under tuple-tolerant and LP, valid under
        // tuple-bossy, tuple-strict (vacuously), classical, and both
        // strict-tolerant modes.
        let v = check("p, ~p |- q", tuple(2, DesignatedMode::Tolerant));
        assert!(!v.valid);
        let cm = v
            .countermodel
            .expect("invalid verdicts carry countermodels");
        // Enumeration order pins the first refutation: p = ⟨0,1⟩, q = ⟨0,0⟩.
        assert_eq!(cm.model.predicates["p"][""], "01");
        assert_eq!(cm.model.predicates["q"][""], "00");
        assert_eq!(cm.formula_values["p"], "01");
        assert_eq!(cm.formula_values["~p"], "10");
        assert_eq!(cm.formula_values["q"], "00");

        assert!(
            !check(
                "p, ~p |- q",
                ConsequenceMode::Three(ThreeDesignatedMode::Lp)
            )
            .valid
        );
        assert!(check("p, ~p |- q", tuple(2, DesignatedMode::Bossy)).valid);
        assert!(check("p, ~p |- q", tuple(2, DesignatedMode::Strict)).valid);
        assert!(
            check(
                "p, ~p |- q",
                ConsequenceMode::Three(ThreeDesignatedMode::Classical)
            )
            .valid
        );
        assert!(
            check(
                "p, ~p |- q",
                ConsequenceMode::TupleStrictTolerant { width: 2 }
            )
            .valid
        );
        assert!(check("p, ~p |- q", ConsequenceMode::ThreeStrictTolerant).valid);
    }

    #[test]
    fn excluded_middle_fails_strictly_but_holds_tolerantly() {
        // |- p | ~p: invalid under tuple-strict and K3, valid under
        // bossy, tolerant, LP, and classical.
        let v = check("|- p | ~p", tuple(2, DesignatedMode::Strict));
        assert!(!v.valid);
        let cm = v.countermodel.unwrap();
        // First non-refuted assignment is p = ⟨0,0⟩ (the disjunction hits
        // top); p = ⟨0,1⟩ refutes.
        assert_eq!(cm.model.predicates["p"][""], "01");
        assert_eq!(cm.formula_values["p | ~p"], "10");

        assert!(!check("|- p | ~p", ConsequenceMode::Three(ThreeDesignatedMode::K3)).valid);
        assert!(check("|- p | ~p", tuple(2, DesignatedMode::Bossy)).valid);
        assert!(check("|- p | ~p", tuple(2, DesignatedMode::Tolerant)).valid);
        assert!(check("|- p | ~p", ConsequenceMode::Three(ThreeDesignatedMode::Lp)).valid);
        assert!(
            check(
                "|- p | ~p",
                ConsequenceMode::Three(ThreeDesignatedMode::Classical)
            )
            .valid
        );
    }

    #[test]
    fn wider_tuples_agree_on_the_signature_cases() {
        assert!(!check("p, ~p |- q", tuple(3, DesignatedMode::Tolerant)).valid);
        assert!(!check("|- p | ~p", tuple(3, DesignatedMode::Strict)).valid);
        assert!(check("p, ~p |- q", tuple(3, DesignatedMode::Bossy)).valid);
        assert!(check("|- p | ~p", tuple(3, DesignatedMode::Tolerant)).valid);
    }

    #[test]
    fn modus_ponens_in_disjunctive_form() {
        // ~p | q, p |- q: valid classically, invalid under LP (glut on p).
        assert!(
            check(
                "~p | q, p |- q",
                ConsequenceMode::Three(ThreeDesignatedMode::Classical)
            )
            .valid
        );
        let v = check(
            "~p | q, p |- q",
            ConsequenceMode::Three(ThreeDesignatedMode::Lp),
        );
        assert!(!v.valid);
        let cm = v.countermodel.unwrap();
        assert_eq!(cm.model.predicates["p"][""], "1/2");
        assert_eq!(cm.model.predicates["q"][""], "0");
    }

    #[test]
    fn first_order_instantiation_and_its_converse() {
        let mode = tuple(2, DesignatedMode::Strict);
        assert!(check_fo("forall x. P(x) |- P(c)", mode, 2).valid);
        let v = check_fo("P(c) |- forall x. P(x)", mode, 2);
        assert!(!v.valid);
        let cm = v.countermodel.unwrap();
        // Smallest refutation: domain {0,1}, c = 0, P(0) = ⟨1,1⟩ and P(1)
        // the first value that breaks the universal: ⟨0,0⟩.
        assert_eq!(cm.model.domain_size, 2);
        assert_eq!(cm.model.constants["c"], 0);
        assert_eq!(cm.model.predicates["P"]["0"], "11");
        assert_eq!(cm.model.predicates["P"]["1"], "00");
    }

    #[test]
    fn existential_does_not_entail_universal() {
        let v = check_fo(
            "exists x. P(x) |- forall x. P(x)",
            tuple(2, DesignatedMode::Bossy),
            2,
        );
        assert!(!v.valid);
        let cm = v.countermodel.unwrap();
        assert_eq!(cm.model.domain_size, 2);
        assert_eq!(cm.model.predicates["P"]["0"], "00");
        assert_eq!(cm.model.predicates["P"]["1"], "10");
        assert_eq!(cm.formula_values["exists x. P(x)"], "10");
        assert_eq!(cm.formula_values["forall x. P(x)"], "00");
        assert_eq!(v.max_domain, Some(2));
    }

    #[test]
    fn certification_rejects_tampered_countermodels() {
        let mode = tuple(2, DesignatedMode::Tolerant);
        let s = seq("p, ~p |- q");
        let v = check_propositional(&s, &mode, DEFAULT_BUDGET).unwrap();
        let cm = v.countermodel.unwrap();
        assert!(certify_countermodel(&s, &mode, &cm).is_ok());

        // Wrong recorded value.
        let mut bad = cm.clone();
        bad.formula_values.insert("q".to_string(), "11".to_string());
        assert!(certify_countermodel(&s, &mode, &bad).is_err());

        // Model that does not refute: q designated.
        let mut bad = cm.clone();
        bad.model
            .predicates
            .get_mut("q")
            .unwrap()
            .insert(String::new(), "11".to_string());
        bad.formula_values.insert("q".to_string(), "11".to_string());
        let err = certify_countermodel(&s, &mode, &bad).unwrap_err();
        assert!(err.contains("designated"), "{err}");

        // Wrong width for the mode.
        let err = certify_countermodel(&s, &tuple(3, DesignatedMode::Tolerant), &cm).unwrap_err();
        assert!(err.contains("width"), "{err}");
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // p |- p over width 2 has 4 assignments; a budget of 3 is too low.
        let err =
            check_propositional(&seq("p |- p"), &tuple(2, DesignatedMode::Strict), 3).unwrap_err();
        assert_eq!(
            err,
            CheckError::BudgetExhausted {
                checked: 3,
                budget: 3
            }
        );
        // And 4 is exactly enough: only the occurring letters count.
        let v = check_propositional(&seq("p |- p"), &tuple(2, DesignatedMode::Strict), 4).unwrap();
        assert!(v.valid);
        assert_eq!(v.interpretations_checked, 4);
    }

    #[test]
    fn propositional_checks_reject_quantified_formulas_and_vice_versa() {
        let s = seq("forall x. P(x) |- P(c)");
        assert!(matches!(
            check_propositional(&s, &tuple(2, DesignatedMode::Strict), DEFAULT_BUDGET),
            Err(CheckError::NotPropositional { .. })
        ));
        let open = Sequent::new(vec![], parse_formula("P(x)", None).unwrap());
        assert!(matches!(
            check_first_order_bounded(&open, &tuple(2, DesignatedMode::Strict), 2, DEFAULT_BUDGET),
            Err(CheckError::NotSentence { .. })
        ));
    }

    #[test]
    fn monotone_formulas_respect_the_value_order() {
        // Negation-free formulas are monotone: raising an input cannot
        // lower the value.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let letters = vec!["p".to_string(), "q".to_string()];
        for _ in 0..200 {
            let f = loop {
                let f = crate::corpus::random_prop_formula(&mut rng, &letters, 3);
                fn negation_free(f: &Formula) -> bool {
                    match f {
                        Formula::Atom(..) => true,
                        Formula::Not(_) => false,
                        Formula::And(a, b) | Formula::Or(a, b) => {
                            negation_free(a) && negation_free(b)
                        }
                        _ => false,
                    }
                }
                if negation_free(&f) {
                    break f;
                }
            };
            let values: Vec<TupleValue> = TupleValue::all(2).collect();
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| values[rng.random_range(0..4)];
            let mut lo = std::collections::BTreeMap::new();
            let mut hi = std::collections::BTreeMap::new();
            for l in &letters {
                let a = pick(&mut rng);
                let b = pick(&mut rng);
                lo.insert(l.clone(), a.min(b));
                hi.insert(l.clone(), a.max(b));
            }
            let vlo = crate::tuple::eval_prop(&f, &lo).unwrap();
            let vhi = crate::tuple::eval_prop(&f, &hi).unwrap();
            assert!(vlo <= vhi, "{f} not monotone");
        }
    }

    #[test]
    fn truth_table_for_negation_width_two() {
        let f = parse_formula("~p", None).unwrap();
        let t = designated_atoms_table(&f, &tuple(2, DesignatedMode::Strict), 3).unwrap();
        assert_eq!(t.atoms, vec!["p".to_string()]);
        let rows: Vec<(&str, &str, bool)> = t
            .rows
            .iter()
            .map(|r| (r.inputs[0].as_str(), r.value.as_str(), r.designated))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("00", "11", true),
                ("01", "10", false),
                ("10", "01", false),
                ("11", "00", false),
            ]
        );
    }

    #[test]
    fn truth_table_three_valued_conjunction() {
        let f = parse_formula("p & q", None).unwrap();
        let t = designated_atoms_table(&f, &ConsequenceMode::Three(ThreeDesignatedMode::K3), 3)
            .unwrap();
        assert_eq!(t.rows.len(), 9);
        // Rows follow the enumeration order with q fastest; spot-check the
        // middle row (p = 1/2, q = 1/2).
        assert_eq!(t.rows[4].inputs, vec!["1/2".to_string(), "1/2".to_string()]);
        assert_eq!(t.rows[4].value, "1/2");
        assert!(!t.rows[4].designated);
        // Classical tables skip the middle value entirely.
        let t2 = designated_atoms_table(
            &f,
            &ConsequenceMode::Three(ThreeDesignatedMode::Classical),
            3,
        )
        .unwrap();
        assert_eq!(t2.rows.len(), 4);
        assert!(t2.rows.iter().all(|r| r.value != "1/2"));
    }

    #[test]
    fn truth_table_respects_the_atom_limit() {
        let f = parse_formula("p & q | r", None).unwrap();
        assert!(matches!(
            designated_atoms_table(&f, &tuple(2, DesignatedMode::Strict), 2),
            Err(CheckError::TooManyAtoms { count: 3, limit: 2 })
        ));
    }

    #[test]
    fn strict_tolerant_table_flags_conclusion_side_designation() {
        let f = parse_formula("p", None).unwrap();
        let t = designated_atoms_table(&f, &ConsequenceMode::ThreeStrictTolerant, 3).unwrap();
        // LP-designation: 1/2 and 1 both flagged.
        let flags: Vec<bool> = t.rows.iter().map(|r| r.designated).collect();
        assert_eq!(flags, vec![false, true, true]);
    }

    #[test]
    fn verdicts_serialize_with_the_documented_shape() {
        let v = check("p, ~p |- q", tuple(2, DesignatedMode::Tolerant));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["valid"], serde_json::json!(false));
        let cm = &json["countermodel"];
        assert_eq!(cm["domain_size"], serde_json::json!(1));
        assert_eq!(cm["semantics"], serde_json::json!("tuple"));
        assert_eq!(cm["width"], serde_json::json!(2));
        assert_eq!(cm["predicates"]["p"][""], serde_json::json!("01"));
        assert_eq!(cm["formula_values"]["~p"], serde_json::json!("10"));
        // Propositional checks are exhaustive: no max_domain key.
        assert!(cm.get("max_domain").is_none());
        assert!(json.get("max_domain").is_none());
    }
}
