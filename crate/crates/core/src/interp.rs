//! Interpretations and evaluation, generic over the value space.
//!
//! An [`Interpretation`] fixes a finite domain `{0, ..., k-1}`, an element
//! for each constant, and a table of truth values for each predicate.
//! Propositional valuations are the degenerate case: domain of size 1 and
//! nullary predicates only.
//!
//! The evaluator is shared between the tuple-valued and three-valued
//! semantics through the [`LogicValue`] trait: negation is supplied by the
//! value type, conjunction and disjunction are minimum and maximum in the
//! value order, and the quantifiers are the corresponding minimum and
//! maximum over all instantiations of the bound variable.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{Formula, Signature, SignatureError, Term};
use crate::threeval::ThreeValue;
use crate::tuple::TupleValue;

/// A truth value usable by the generic evaluator.
///
/// The `Ord` instance must be the truth order of the semantics:
/// conjunction and disjunction are defined as [`LogicValue::meet`] and
/// [`LogicValue::join`], which default to minimum and maximum in that
/// order.
pub trait LogicValue: Copy + Ord + Eq + std::hash::Hash + fmt::Debug + fmt::Display {
    /// The negation of this value.
    fn negate(self) -> Self;

    /// True when no value of the same space is smaller; conjunctions can
    /// stop early on this value.
    fn is_least(self) -> bool;

    /// True when no value of the same space is larger; disjunctions can
    /// stop early on this value.
    fn is_greatest(self) -> bool;

    fn meet(self, other: Self) -> Self {
        self.min(other)
    }

    fn join(self, other: Self) -> Self {
        self.max(other)
    }

    /// The value as it appears in JSON output, e.g. `10` or `1/2`.
    fn value_name(self) -> String {
        self.to_string()
    }
}

/// A finite set of truth values, in ascending truth order, for driving
/// enumeration.
pub trait ValueSpace {
    type Value: LogicValue;

    fn values(&self) -> Vec<Self::Value>;
}

/// The table of values a predicate takes on every tuple of domain
/// elements, stored row-major (the last argument varies fastest).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateTable<V> {
    arity: usize,
    values: Vec<V>,
}

impl<V: LogicValue> PredicateTable<V> {
    /// Number of cells a table needs: `domain_size ^ arity`, or `None` on
    /// overflow.
    pub fn cell_count(domain_size: usize, arity: usize) -> Option<usize> {
        domain_size.checked_pow(u32::try_from(arity).ok()?)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    /// The value at an argument tuple.
    pub fn value(&self, domain_size: usize, args: &[usize]) -> V {
        self.values[self.cell_index(domain_size, args)]
    }

    fn cell_index(&self, domain_size: usize, args: &[usize]) -> usize {
        assert_eq!(args.len(), self.arity, "argument count must match arity");
        let mut idx = 0;
        for &a in args {
            debug_assert!(a < domain_size);
            idx = idx * domain_size + a;
        }
        idx
    }
}

/// A model: a finite domain, constant denotations, and predicate tables
/// over a value type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation<V> {
    domain_size: usize,
    constants: BTreeMap<String, usize>,
    predicates: BTreeMap<String, PredicateTable<V>>,
}

impl<V: LogicValue> Interpretation<V> {
    pub fn new(domain_size: usize) -> Result<Interpretation<V>, ModelError> {
        if domain_size == 0 {
            return Err(ModelError::EmptyDomain);
        }
        Ok(Interpretation {
            domain_size,
            constants: BTreeMap::new(),
            predicates: BTreeMap::new(),
        })
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn constants(&self) -> &BTreeMap<String, usize> {
        &self.constants
    }

    pub fn predicates(&self) -> &BTreeMap<String, PredicateTable<V>> {
        &self.predicates
    }

    pub fn set_constant(
        &mut self,
        name: impl Into<String>,
        element: usize,
    ) -> Result<(), ModelError> {
        let name = name.into();
        if element >= self.domain_size {
            return Err(ModelError::ConstantOutOfRange {
                name,
                element,
                domain_size: self.domain_size,
            });
        }
        self.constants.insert(name, element);
        Ok(())
    }

    /// Installs a predicate table from its row-major cell values.
    pub fn set_predicate(
        &mut self,
        name: impl Into<String>,
        arity: usize,
        values: Vec<V>,
    ) -> Result<(), ModelError> {
        let name = name.into();
        let expected =
            PredicateTable::<V>::cell_count(self.domain_size, arity).ok_or_else(|| {
                ModelError::TableTooLarge {
                    name: name.clone(),
                    arity,
                    domain_size: self.domain_size,
                }
            })?;
        if values.len() != expected {
            return Err(ModelError::TableSize {
                name,
                expected,
                got: values.len(),
            });
        }
        self.predicates
            .insert(name, PredicateTable { arity, values });
        Ok(())
    }

    /// Assigns a value to a propositional letter (a nullary predicate).
    pub fn set_letter(&mut self, name: impl Into<String>, value: V) {
        self.set_predicate(name, 0, vec![value])
            .expect("nullary tables always have exactly one cell");
    }

    pub(crate) fn set_predicate_cell(&mut self, name: &str, cell: usize, value: V) {
        let table = self
            .predicates
            .get_mut(name)
            .expect("predicate installed before cell writes");
        table.values[cell] = value;
    }

    /// Applies a value translation to every table cell, keeping domain and
    /// constants.
    pub fn map_values<W: LogicValue>(&self, mut f: impl FnMut(V) -> W) -> Interpretation<W> {
        Interpretation {
            domain_size: self.domain_size,
            constants: self.constants.clone(),
            predicates: self
                .predicates
                .iter()
                .map(|(name, table)| {
                    (
                        name.clone(),
                        PredicateTable {
                            arity: table.arity,
                            values: table.values.iter().map(|&v| f(v)).collect(),
                        },
                    )
                })
                .collect(),
        }
    }
}

/// Error constructing or decoding a model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("the domain must have at least one element")]
    EmptyDomain,
    #[error(
        "constant `{name}` denotes element {element}, outside the domain of size {domain_size}"
    )]
    ConstantOutOfRange {
        name: String,
        element: usize,
        domain_size: usize,
    },
    #[error("table for `{name}` has {got} cells, expected {expected}")]
    TableSize {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error(
        "table for `{name}` with arity {arity} over a domain of size {domain_size} is too large"
    )]
    TableTooLarge {
        name: String,
        arity: usize,
        domain_size: usize,
    },
    #[error("model mixes tuple values of widths {first} and {got}")]
    InconsistentWidth { first: u8, got: u8 },
    #[error("cannot parse truth value {text:?}")]
    BadValue { text: String },
    #[error("cannot parse argument tuple {text:?}: {reason}")]
    BadElementKey { text: String, reason: String },
    #[error("table for `{name}` is missing a value for arguments ({key})")]
    MissingCell { name: String, key: String },
    #[error("model declares semantics {got:?}, expected {expected:?}")]
    WrongSemantics { expected: String, got: String },
    #[error("model does not fix a tuple width")]
    MissingWidth,
}

/// Error evaluating a formula.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no value assigned to propositional letter `{name}`")]
    MissingLetter { name: String },
    #[error("formula is not propositional: it contains {found}")]
    NotPropositional { found: String },
    #[error("the model does not interpret predicate `{name}`")]
    UnknownPredicate { name: String },
    #[error(
        "predicate `{name}` has arity {expected} in the model but is applied to {got} arguments"
    )]
    ArityMismatch {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("the model does not interpret constant `{name}`")]
    UnknownConstant { name: String },
    #[error("variable `{name}` occurs free")]
    UnboundVariable { name: String },
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

/// Evaluates a propositional formula under an assignment to its letters.
pub fn eval_prop<V: LogicValue>(
    f: &Formula,
    assignment: &BTreeMap<String, V>,
) -> Result<V, EvalError> {
    match f {
        Formula::Atom(p, args) => {
            if !args.is_empty() {
                return Err(EvalError::NotPropositional {
                    found: format!("predicate `{p}` applied to {} arguments", args.len()),
                });
            }
            assignment
                .get(p)
                .copied()
                .ok_or_else(|| EvalError::MissingLetter { name: p.clone() })
        }
        Formula::Not(g) => Ok(eval_prop(g, assignment)?.negate()),
        Formula::And(a, b) => {
            let l = eval_prop(a, assignment)?;
            let r = eval_prop(b, assignment)?;
            Ok(l.meet(r))
        }
        Formula::Or(a, b) => {
            let l = eval_prop(a, assignment)?;
            let r = eval_prop(b, assignment)?;
            Ok(l.join(r))
        }
        Formula::Forall(x, _) | Formula::Exists(x, _) => Err(EvalError::NotPropositional {
            found: format!("a quantifier binding `{x}`"),
        }),
    }
}

/// Checks that a model interprets every symbol of a signature, with
/// matching arities.
pub fn validate_model<V: LogicValue>(
    sig: &Signature,
    m: &Interpretation<V>,
) -> Result<(), EvalError> {
    for (name, &arity) in &sig.predicates {
        match m.predicates.get(name) {
            None => return Err(EvalError::UnknownPredicate { name: name.clone() }),
            Some(t) if t.arity() != arity => {
                return Err(EvalError::ArityMismatch {
                    name: name.clone(),
                    expected: t.arity(),
                    got: arity,
                })
            }
            Some(_) => {}
        }
    }
    for c in &sig.constants {
        if !m.constants.contains_key(c) {
            return Err(EvalError::UnknownConstant { name: c.clone() });
        }
    }
    Ok(())
}

/// Evaluates a sentence in a model, after checking that the model
/// interprets the sentence's vocabulary.
pub fn eval_sentence<V: LogicValue>(f: &Formula, m: &Interpretation<V>) -> Result<V, EvalError> {
    validate_model(&f.signature()?, m)?;
    eval_unchecked(f, m, &mut Vec::new())
}

/// The evaluation loop proper. Callers must have validated the model
/// against the formula's signature; only unbound variables can still
/// fail. Conjunctions, disjunctions and quantifiers stop early once the
/// running value hits the bottom or top of the value order.
pub(crate) fn eval_unchecked<'f, V: LogicValue>(
    f: &'f Formula,
    m: &Interpretation<V>,
    env: &mut Vec<(&'f str, usize)>,
) -> Result<V, EvalError> {
    match f {
        Formula::Atom(p, args) => {
            let table = m
                .predicates
                .get(p)
                .ok_or_else(|| EvalError::UnknownPredicate { name: p.clone() })?;
            let mut idx = 0usize;
            for t in args {
                let elem = match t {
                    Term::Var(x) => env
                        .iter()
                        .rev()
                        .find(|(v, _)| v == x)
                        .map(|&(_, e)| e)
                        .ok_or_else(|| EvalError::UnboundVariable { name: x.clone() })?,
                    Term::Const(c) => *m
                        .constants
                        .get(c)
                        .ok_or_else(|| EvalError::UnknownConstant { name: c.clone() })?,
                };
                idx = idx * m.domain_size + elem;
            }
            Ok(table.values[idx])
        }
        Formula::Not(g) => Ok(eval_unchecked(g, m, env)?.negate()),
        Formula::And(a, b) => {
            let l = eval_unchecked(a, m, env)?;
            if l.is_least() {
                return Ok(l);
            }
            Ok(l.meet(eval_unchecked(b, m, env)?))
        }
        Formula::Or(a, b) => {
            let l = eval_unchecked(a, m, env)?;
            if l.is_greatest() {
                return Ok(l);
            }
            Ok(l.join(eval_unchecked(b, m, env)?))
        }
        Formula::Forall(x, body) => {
            let mut acc: Option<V> = None;
            for d in 0..m.domain_size {
                env.push((x, d));
                let v = eval_unchecked(body, m, env);
                env.pop();
                let v = v?;
                acc = Some(match acc {
                    None => v,
                    Some(a) => a.meet(v),
                });
                if acc.expect("just set").is_least() {
                    break;
                }
            }
            Ok(acc.expect("domains are nonempty"))
        }
        Formula::Exists(x, body) => {
            let mut acc: Option<V> = None;
            for d in 0..m.domain_size {
                env.push((x, d));
                let v = eval_unchecked(body, m, env);
                env.pop();
                let v = v?;
                acc = Some(match acc {
                    None => v,
                    Some(a) => a.join(v),
                });
                if acc.expect("just set").is_greatest() {
                    break;
                }
            }
            Ok(acc.expect("domains are nonempty"))
        }
    }
}

/// Iterator over all argument tuples of a given arity, last position
/// varying fastest. Arity 0 yields exactly the empty tuple.
pub fn domain_tuples(domain_size: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = domain_size
        .checked_pow(u32::try_from(arity).expect("arity fits in u32"))
        .expect("table size fits in usize");
    (0..total).map(move |i| {
        let mut tuple = vec![0usize; arity];
        let mut rest = i;
        for slot in tuple.iter_mut().rev() {
            *slot = rest % domain_size;
            rest /= domain_size;
        }
        tuple
    })
}

/// Enumerates every interpretation of a signature over a fixed domain
/// size and value space, in a fixed deterministic order.
///
/// The enumeration behaves like an odometer. Its positions are: the
/// constants in sorted name order, then each predicate's table cells in
/// sorted name order (cells row-major within a table). The rightmost
/// position varies fastest; constants count through domain elements in
/// ascending order and cells count through the value space in ascending
/// order. The first interpretation therefore maps every constant to
/// element 0 and every cell to the least value.
pub struct InterpretationEnumerator<V: LogicValue> {
    values: Vec<V>,
    interp: Interpretation<V>,
    const_names: Vec<String>,
    const_digits: Vec<usize>,
    /// `(predicate name, cell index)` pairs, in enumeration order.
    cell_slots: Vec<(String, usize)>,
    cell_digits: Vec<usize>,
    exhausted: bool,
}

impl<V: LogicValue> InterpretationEnumerator<V> {
    pub fn new(
        sig: &Signature,
        domain_size: usize,
        values: Vec<V>,
    ) -> Result<InterpretationEnumerator<V>, ModelError> {
        assert!(!values.is_empty(), "value space must be nonempty");
        let mut interp = Interpretation::new(domain_size)?;
        let const_names: Vec<String> = sig.constants.iter().cloned().collect();
        for c in &const_names {
            interp.set_constant(c.clone(), 0)?;
        }
        let mut cell_slots = Vec::new();
        for (name, &arity) in &sig.predicates {
            let cells = PredicateTable::<V>::cell_count(domain_size, arity).ok_or_else(|| {
                ModelError::TableTooLarge {
                    name: name.clone(),
                    arity,
                    domain_size,
                }
            })?;
            interp.set_predicate(name.clone(), arity, vec![values[0]; cells])?;
            for cell in 0..cells {
                cell_slots.push((name.clone(), cell));
            }
        }
        let const_digits = vec![0; const_names.len()];
        let cell_digits = vec![0; cell_slots.len()];
        Ok(InterpretationEnumerator {
            values,
            interp,
            const_names,
            const_digits,
            cell_slots,
            cell_digits,
            exhausted: false,
        })
    }

    /// Total number of interpretations, or `None` on overflow.
    pub fn total(&self) -> Option<u128> {
        let d = self.interp.domain_size as u128;
        let v = self.values.len() as u128;
        let mut total = 1u128;
        for _ in &self.const_names {
            total = total.checked_mul(d)?;
        }
        for _ in &self.cell_slots {
            total = total.checked_mul(v)?;
        }
        Some(total)
    }

    /// The interpretation currently pointed at.
    pub fn current(&self) -> &Interpretation<V> {
        &self.interp
    }

    /// Steps to the next interpretation; returns `false` once every
    /// interpretation has been visited.
    pub fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        // Cells are to the right of constants, so they spin first.
        for i in (0..self.cell_digits.len()).rev() {
            let digit = &mut self.cell_digits[i];
            let (name, cell) = &self.cell_slots[i];
            if *digit + 1 < self.values.len() {
                *digit += 1;
                self.interp
                    .set_predicate_cell(name, *cell, self.values[*digit]);
                return true;
            }
            *digit = 0;
            self.interp.set_predicate_cell(name, *cell, self.values[0]);
        }
        for i in (0..self.const_digits.len()).rev() {
            let digit = &mut self.const_digits[i];
            if *digit + 1 < self.interp.domain_size {
                *digit += 1;
                let elem = *digit;
                let name = self.const_names[i].clone();
                self.interp.constants.insert(name, elem);
                return true;
            }
            *digit = 0;
            self.interp.constants.insert(self.const_names[i].clone(), 0);
        }
        self.exhausted = true;
        false
    }
}

/// JSON form of an interpretation, as emitted in countermodels and
/// accepted by model files.
///
/// Predicate tables map comma-joined argument tuples (the empty string for
/// nullary predicates) to rendered truth values: bit strings like `"10"`
/// for tuple semantics, `"0"`/`"1/2"`/`"1"` for three-valued semantics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    /// `"tuple"` or `"three"`. Optional on input; the value strings
    /// disambiguate.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub semantics: String,
    /// Tuple width, present iff `semantics` is `"tuple"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<u8>,
    pub domain_size: usize,
    #[serde(default)]
    pub constants: BTreeMap<String, usize>,
    #[serde(default)]
    pub predicates: BTreeMap<String, BTreeMap<String, String>>,
}

/// Renders an argument tuple as a JSON object key: `""`, `"0"`, `"0,1"`.
pub fn element_key(args: &[usize]) -> String {
    args.iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_element_key(key: &str, domain_size: usize) -> Result<Vec<usize>, ModelError> {
    if key.is_empty() {
        return Ok(Vec::new());
    }
    key.split(',')
        .map(|part| {
            let elem: usize = part.trim().parse().map_err(|e| ModelError::BadElementKey {
                text: key.to_string(),
                reason: format!("{e}"),
            })?;
            if elem >= domain_size {
                return Err(ModelError::BadElementKey {
                    text: key.to_string(),
                    reason: format!("element {elem} outside domain of size {domain_size}"),
                });
            }
            Ok(elem)
        })
        .collect()
}

impl ModelJson {
    /// Renders any interpretation, tagging it with a semantics name and
    /// optional width. Prefer [`ModelJson::from_tuple`] and
    /// [`ModelJson::from_three`], which fill the tags in.
    pub fn from_interpretation<V: LogicValue>(
        m: &Interpretation<V>,
        semantics: &str,
        width: Option<u8>,
    ) -> ModelJson {
        let mut json = ModelJson {
            semantics: semantics.to_string(),
            width,
            domain_size: m.domain_size(),
            constants: m.constants().clone(),
            predicates: BTreeMap::new(),
        };
        for (name, table) in m.predicates() {
            json.predicates.insert(name.clone(), render_table(m, table));
        }
        json
    }

    /// Renders a tuple-valued interpretation. Every table cell must have
    /// the given width.
    pub fn from_tuple(m: &Interpretation<TupleValue>, width: u8) -> Result<ModelJson, ModelError> {
        for table in m.predicates().values() {
            for &v in table.values() {
                if v.width() != width {
                    return Err(ModelError::InconsistentWidth {
                        first: width,
                        got: v.width(),
                    });
                }
            }
        }
        Ok(ModelJson::from_interpretation(m, "tuple", Some(width)))
    }

    /// Renders a three-valued interpretation.
    pub fn from_three(m: &Interpretation<ThreeValue>) -> ModelJson {
        ModelJson::from_interpretation(m, "three", None)
    }

    /// Decodes into a tuple-valued interpretation, returning the model and
    /// its width. Tables must be complete and all values the same width.
    pub fn to_tuple(&self) -> Result<(Interpretation<TupleValue>, u8), ModelError> {
        if !self.semantics.is_empty() && self.semantics != "tuple" {
            return Err(ModelError::WrongSemantics {
                expected: "tuple".to_string(),
                got: self.semantics.clone(),
            });
        }
        let mut width = self.width;
        let m = self.decode(|text| {
            let v: TupleValue = text.parse().map_err(|_| ModelError::BadValue {
                text: text.to_string(),
            })?;
            match width {
                None => width = Some(v.width()),
                Some(w) if w != v.width() => {
                    return Err(ModelError::InconsistentWidth {
                        first: w,
                        got: v.width(),
                    })
                }
                Some(_) => {}
            }
            Ok(v)
        })?;
        let width = width.ok_or(ModelError::MissingWidth)?;
        Ok((m, width))
    }

    /// Decodes into a three-valued interpretation.
    pub fn to_three(&self) -> Result<Interpretation<ThreeValue>, ModelError> {
        if !self.semantics.is_empty() && self.semantics != "three" {
            return Err(ModelError::WrongSemantics {
                expected: "three".to_string(),
                got: self.semantics.clone(),
            });
        }
        self.decode(|text| {
            text.parse().map_err(|_| ModelError::BadValue {
                text: text.to_string(),
            })
        })
    }

    fn decode<V: LogicValue>(
        &self,
        mut parse: impl FnMut(&str) -> Result<V, ModelError>,
    ) -> Result<Interpretation<V>, ModelError> {
        let mut m = Interpretation::new(self.domain_size)?;
        for (name, &elem) in &self.constants {
            m.set_constant(name.clone(), elem)?;
        }
        for (name, cells) in &self.predicates {
            // Infer the arity from the first key; completeness is then
            // checked by walking every argument tuple.
            let arity = match cells.keys().next() {
                None => {
                    return Err(ModelError::MissingCell {
                        name: name.clone(),
                        key: String::new(),
                    })
                }
                Some(k) => parse_element_key(k, self.domain_size)?.len(),
            };
            let mut values = Vec::new();
            for args in domain_tuples(self.domain_size, arity) {
                let key = element_key(&args);
                let text = cells.get(&key).ok_or_else(|| ModelError::MissingCell {
                    name: name.clone(),
                    key: key.clone(),
                })?;
                values.push(parse(text)?);
            }
            m.set_predicate(name.clone(), arity, values)?;
        }
        Ok(m)
    }
}

fn render_table<V: LogicValue>(
    m: &Interpretation<V>,
    table: &PredicateTable<V>,
) -> BTreeMap<String, String> {
    let mut cells = BTreeMap::new();
    for args in domain_tuples(m.domain_size(), table.arity()) {
        let v = table.value(m.domain_size(), &args);
        cells.insert(element_key(&args), v.value_name());
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;
    use crate::threeval::ThreeValue::{Half, One, Zero};
    use crate::tuple::TupleSpace;

    fn tv(s: &str) -> TupleValue {
        s.parse().unwrap()
    }

    /// Domain {0, 1}, P(0) = ⟨1,1⟩, P(1) = ⟨1,0⟩, c = 1.
    fn sample_tuple_model() -> Interpretation<TupleValue> {
        let mut m = Interpretation::new(2).unwrap();
        m.set_constant("c", 1).unwrap();
        m.set_predicate("P", 1, vec![tv("11"), tv("10")]).unwrap();
        m
    }

    #[test]
    fn quantifiers_are_meet_and_join_over_the_domain() {
        let m = sample_tuple_model();
        let px = Formula::atom("P", vec![Term::var("x")]);
        let forall = Formula::forall("x", px.clone());
        let exists = Formula::exists("x", px.clone());
        // min(⟨1,1⟩, ⟨1,0⟩) = ⟨1,0⟩ and max = ⟨1,1⟩.
        assert_eq!(eval_sentence(&forall, &m).unwrap(), tv("10"));
        assert_eq!(eval_sentence(&exists, &m).unwrap(), tv("11"));
        // ~forall x. P(x) = ~⟨1,0⟩ = ⟨0,1⟩.
        assert_eq!(eval_sentence(&Formula::not(forall), &m).unwrap(), tv("01"));
        // P(c) with c = 1.
        let pc = Formula::atom("P", vec![Term::constant("c")]);
        assert_eq!(eval_sentence(&pc, &m).unwrap(), tv("10"));
    }

    #[test]
    fn nested_quantifiers_and_shadowing() {
        // R(x, y) = 1 iff x == y, three-valued; forall x exists y R(x,y) = 1.
        let mut m = Interpretation::new(2).unwrap();
        m.set_predicate("R", 2, vec![One, Zero, Zero, One]).unwrap();
        let rxy = Formula::atom("R", vec![Term::var("x"), Term::var("y")]);
        let f = Formula::forall("x", Formula::exists("y", rxy.clone()));
        assert_eq!(eval_sentence(&f, &m).unwrap(), One);
        // Shadowing: forall x exists x R(x,x) looks only at the diagonal.
        let rxx = Formula::atom("R", vec![Term::var("x"), Term::var("x")]);
        let g = Formula::forall("x", Formula::exists("x", rxx));
        assert_eq!(eval_sentence(&g, &m).unwrap(), One);
    }

    #[test]
    fn evaluation_validates_the_vocabulary() {
        let m = sample_tuple_model();
        let bad_pred = Formula::atom("Q", vec![Term::constant("c")]);
        assert!(matches!(
            eval_sentence(&bad_pred, &m),
            Err(EvalError::UnknownPredicate { .. })
        ));
        let bad_const = Formula::atom("P", vec![Term::constant("d")]);
        assert!(matches!(
            eval_sentence(&bad_const, &m),
            Err(EvalError::UnknownConstant { .. })
        ));
        let bad_arity = Formula::atom("P", vec![Term::constant("c"), Term::constant("c")]);
        assert!(matches!(
            eval_sentence(&bad_arity, &m),
            Err(EvalError::ArityMismatch { .. })
        ));
        let free = Formula::atom("P", vec![Term::var("x")]);
        assert!(matches!(
            eval_sentence(&free, &m),
            Err(EvalError::UnboundVariable { .. })
        ));
    }

    #[test]
    fn enumerator_visits_interpretations_in_odometer_order() {
        // Signature {P: 1}, domain {0, 1}, three values: 9 interpretations,
        // last cell fastest.
        let sig = Signature::of_formulas(&[Formula::forall(
            "x",
            Formula::atom("P", vec![Term::var("x")]),
        )])
        .unwrap();
        let mut e = InterpretationEnumerator::new(&sig, 2, ThreeValue::all().to_vec()).unwrap();
        assert_eq!(e.total(), Some(9));
        let mut seen = Vec::new();
        loop {
            let p = e.current().predicates().get("P").unwrap();
            seen.push((p.values()[0], p.values()[1]));
            if !e.advance() {
                break;
            }
        }
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], (Zero, Zero));
        assert_eq!(seen[1], (Zero, Half));
        assert_eq!(seen[2], (Zero, One));
        assert_eq!(seen[3], (Half, Zero));
        assert_eq!(seen[8], (One, One));
        // No duplicates.
        let distinct: std::collections::BTreeSet<_> = seen.iter().collect();
        assert_eq!(distinct.len(), 9);
    }

    #[test]
    fn enumerator_spins_constants_slowest() {
        // Signature {P: 1, c}, domain {0, 1}, classical values: 2 * 4 = 8.
        let pc = Formula::atom("P", vec![Term::constant("c")]);
        let sig = pc.signature().unwrap();
        let mut e =
            InterpretationEnumerator::new(&sig, 2, ThreeValue::classical().to_vec()).unwrap();
        assert_eq!(e.total(), Some(8));
        let mut count = 1u32;
        // The first four interpretations keep c = 0.
        for _ in 0..3 {
            assert!(e.advance());
            count += 1;
            assert_eq!(e.current().constants()["c"], 0);
        }
        assert!(e.advance());
        count += 1;
        assert_eq!(e.current().constants()["c"], 1);
        while e.advance() {
            count += 1;
        }
        assert_eq!(count, 8);
    }

    #[test]
    fn enumerator_covers_tuple_spaces() {
        let sig = Signature::of_formulas(&[Formula::letter("p"), Formula::letter("q")]).unwrap();
        let mut e = InterpretationEnumerator::new(&sig, 1, TupleSpace::new(2).values()).unwrap();
        assert_eq!(e.total(), Some(16));
        let mut n = 1;
        while e.advance() {
            n += 1;
        }
        assert_eq!(n, 16);
    }

    #[test]
    fn model_json_round_trips_tuple_models() {
        let m = sample_tuple_model();
        let json = ModelJson::from_tuple(&m, 2).unwrap();
        assert_eq!(json.semantics, "tuple");
        assert_eq!(json.width, Some(2));
        assert_eq!(json.predicates["P"]["0"], "11");
        assert_eq!(json.predicates["P"]["1"], "10");
        let (back, width) = json.to_tuple().unwrap();
        assert_eq!(width, 2);
        assert_eq!(back, m);
        // Via serde text as well.
        let text = serde_json::to_string(&json).unwrap();
        let reparsed: ModelJson = serde_json::from_str(&text).unwrap();
        assert_eq!(reparsed, json);
    }

    #[test]
    fn model_json_round_trips_three_valued_models() {
        let mut m = Interpretation::new(1).unwrap();
        m.set_letter("p", Half);
        m.set_letter("q", Zero);
        let json = ModelJson::from_three(&m);
        assert_eq!(json.predicates["p"][""], "1/2");
        let back = json.to_three().unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn model_json_decoding_rejects_malformed_input() {
        let text = r#"{"domain_size": 2, "predicates": {"P": {"0": "10"}}}"#;
        let json: ModelJson = serde_json::from_str(text).unwrap();
        assert!(matches!(
            json.to_tuple(),
            Err(ModelError::MissingCell { .. })
        ));
        let text = r#"{"domain_size": 1, "predicates": {"P": {"": "10"}}, "constants": {"c": 3}}"#;
        let json: ModelJson = serde_json::from_str(text).unwrap();
        assert!(matches!(
            json.to_tuple(),
            Err(ModelError::ConstantOutOfRange { .. })
        ));
        let text = r#"{"domain_size": 1, "predicates": {"p": {"": "10"}, "q": {"": "101"}}}"#;
        let json: ModelJson = serde_json::from_str(text).unwrap();
        assert!(matches!(
            json.to_tuple(),
            Err(ModelError::InconsistentWidth { .. })
        ));
        let text = r#"{"domain_size": 1, "predicates": {"p": {"": "2"}}}"#;
        let json: ModelJson = serde_json::from_str(text).unwrap();
        assert!(matches!(json.to_three(), Err(ModelError::BadValue { .. })));
    }

    #[test]
    fn short_circuiting_matches_full_evaluation() {
        // p & q with p = 0 must not depend on q's table, but the value
        // must equal the unshortened meet.
        let mut m = Interpretation::new(1).unwrap();
        m.set_letter("p", Zero);
        m.set_letter("q", Half);
        let f = Formula::and(Formula::letter("p"), Formula::letter("q"));
        assert_eq!(eval_sentence(&f, &m).unwrap(), Zero);
        let g = Formula::or(Formula::not(Formula::letter("p")), Formula::letter("q"));
        assert_eq!(eval_sentence(&g, &m).unwrap(), One);
    }
}
