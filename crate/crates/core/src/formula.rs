//! Abstract syntax for the formula language: terms, formulas, sequents,
//! signatures, substitution, and a deterministic formula enumerator.
//!
//! The language has atoms built from predicate symbols applied to terms
//! (propositional letters are the nullary case), negation, conjunction,
//! disjunction, and the two quantifiers. Terms are variables or constants;
//! there are no function symbols.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A term: either a variable or a constant symbol.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Const(String),
}

impl Term {
    /// Builds a variable term.
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    /// Builds a constant term.
    pub fn constant(name: impl Into<String>) -> Term {
        Term::Const(name.into())
    }

    /// The symbol name, regardless of whether this is a variable or a
    /// constant.
    pub fn name(&self) -> &str {
        match self {
            Term::Var(n) | Term::Const(n) => n,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A formula of the first-order language. Propositional formulas are the
/// special case built from nullary atoms with no quantifiers.
///
/// Equality, ordering and hashing are structural: bound-variable names
/// matter. Use [`Formula::alpha_eq`] for equality up to renaming of bound
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    /// A predicate applied to terms. An empty argument list makes this a
    /// propositional letter.
    Atom(String, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `Forall(x, body)` binds `x` in `body`.
    Forall(String, Box<Formula>),
    /// `Exists(x, body)` binds `x` in `body`.
    Exists(String, Box<Formula>),
}

impl Formula {
    /// A propositional letter: a nullary atom.
    pub fn letter(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into(), Vec::new())
    }

    /// An atom `P(t1, ..., tk)`.
    pub fn atom(pred: impl Into<String>, args: Vec<Term>) -> Formula {
        Formula::Atom(pred.into(), args)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(var.into(), Box::new(body))
    }

    /// True when the formula is purely propositional: every atom is
    /// nullary and there are no quantifiers.
    pub fn is_propositional(&self) -> bool {
        match self {
            Formula::Atom(_, args) => args.is_empty(),
            Formula::Not(f) => f.is_propositional(),
            Formula::And(a, b) | Formula::Or(a, b) => a.is_propositional() && b.is_propositional(),
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }

    /// True when the formula has no free variables.
    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Nesting depth of connectives and quantifiers; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(..) => 0,
            Formula::Not(f) | Formula::Forall(_, f) | Formula::Exists(_, f) => 1 + f.depth(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// The set of free variable names.
    pub fn free_variables(&self) -> BTreeSet<String> {
        fn go(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
            match f {
                Formula::Atom(_, args) => {
                    for t in args {
                        if let Term::Var(v) = t {
                            if !bound.iter().any(|b| b == v) {
                                out.insert(v.clone());
                            }
                        }
                    }
                }
                Formula::Not(g) => go(g, bound, out),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    go(a, bound, out);
                    go(b, bound, out);
                }
                Formula::Forall(x, body) | Formula::Exists(x, body) => {
                    bound.push(x.clone());
                    go(body, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Every variable name occurring in the formula, free or bound.
    pub fn all_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        fn go(f: &Formula, out: &mut BTreeSet<String>) {
            match f {
                Formula::Atom(_, args) => {
                    for t in args {
                        if let Term::Var(v) = t {
                            out.insert(v.clone());
                        }
                    }
                }
                Formula::Not(g) => go(g, out),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                Formula::Forall(x, body) | Formula::Exists(x, body) => {
                    out.insert(x.clone());
                    go(body, out);
                }
            }
        }
        go(self, &mut out);
        out
    }

    /// Names of the propositional letters (nullary atoms) occurring in the
    /// formula, in sorted order.
    pub fn letters(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        fn go(f: &Formula, out: &mut BTreeSet<String>) {
            match f {
                Formula::Atom(p, args) => {
                    if args.is_empty() {
                        out.insert(p.clone());
                    }
                }
                Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => go(g, out),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    go(a, out);
                    go(b, out);
                }
            }
        }
        go(self, &mut out);
        out
    }

    /// Capture-avoiding substitution of `term` for every free occurrence
    /// of the variable `var`.
    ///
    /// When substituting under a quantifier whose bound variable occurs in
    /// `term`, the bound variable is renamed to a fresh name (the original
    /// name with the smallest numeric suffix that avoids every variable in
    /// sight) before descending.
    pub fn substitute(&self, var: &str, term: &Term) -> Formula {
        match self {
            Formula::Atom(p, args) => {
                let args = args
                    .iter()
                    .map(|t| match t {
                        Term::Var(v) if v == var => term.clone(),
                        other => other.clone(),
                    })
                    .collect();
                Formula::Atom(p.clone(), args)
            }
            Formula::Not(f) => Formula::not(f.substitute(var, term)),
            Formula::And(a, b) => Formula::and(a.substitute(var, term), b.substitute(var, term)),
            Formula::Or(a, b) => Formula::or(a.substitute(var, term), b.substitute(var, term)),
            Formula::Forall(x, body) => {
                let (x, body) = substitute_under_binder(x, body, var, term);
                Formula::Forall(x, Box::new(body))
            }
            Formula::Exists(x, body) => {
                let (x, body) = substitute_under_binder(x, body, var, term);
                Formula::Exists(x, Box::new(body))
            }
        }
    }

    /// Equality up to renaming of bound variables. Free variables and
    /// constants must match by name.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        fn terms_eq(a: &Term, b: &Term, env: &[(String, String)]) -> bool {
            match (a, b) {
                (Term::Const(c), Term::Const(d)) => c == d,
                (Term::Var(x), Term::Var(y)) => {
                    // The innermost binding of either side decides; both
                    // sides must be bound at the same level or both free.
                    for (l, r) in env.iter().rev() {
                        match (l == x, r == y) {
                            (true, true) => return true,
                            (false, false) => continue,
                            _ => return false,
                        }
                    }
                    x == y
                }
                _ => false,
            }
        }
        fn go(a: &Formula, b: &Formula, env: &mut Vec<(String, String)>) -> bool {
            match (a, b) {
                (Formula::Atom(p, ps), Formula::Atom(q, qs)) => {
                    p == q
                        && ps.len() == qs.len()
                        && ps.iter().zip(qs).all(|(s, t)| terms_eq(s, t, env))
                }
                (Formula::Not(f), Formula::Not(g)) => go(f, g, env),
                (Formula::And(a1, a2), Formula::And(b1, b2))
                | (Formula::Or(a1, a2), Formula::Or(b1, b2)) => go(a1, b1, env) && go(a2, b2, env),
                (Formula::Forall(x, f), Formula::Forall(y, g))
                | (Formula::Exists(x, f), Formula::Exists(y, g)) => {
                    env.push((x.clone(), y.clone()));
                    let r = go(f, g, env);
                    env.pop();
                    r
                }
                _ => false,
            }
        }
        go(self, other, &mut Vec::new())
    }

    /// Collects the predicates (with arities) and constants occurring in
    /// the formula. Fails if a predicate is used with two different
    /// arities.
    pub fn signature(&self) -> Result<Signature, SignatureError> {
        let mut sig = Signature::default();
        collect_signature(self, &mut sig)?;
        Ok(sig)
    }
}

fn substitute_under_binder(x: &str, body: &Formula, var: &str, term: &Term) -> (String, Formula) {
    if x == var {
        // The binder shadows `var`; nothing free to replace below.
        return (x.to_string(), body.clone());
    }
    let captures = matches!(term, Term::Var(v) if v == x) && body.free_variables().contains(var);
    if captures {
        let mut avoid = body.all_variables();
        avoid.insert(var.to_string());
        avoid.insert(term.name().to_string());
        let fresh = fresh_variable(x, &avoid);
        let renamed = body.substitute(x, &Term::var(fresh.clone()));
        (fresh, renamed.substitute(var, term))
    } else {
        (x.to_string(), body.substitute(var, term))
    }
}

/// Picks the first name of the form `base`, `base1`, `base2`, ... that is
/// not in `avoid`.
pub fn fresh_variable(base: &str, avoid: &BTreeSet<String>) -> String {
    if !avoid.contains(base) {
        return base.to_string();
    }
    for k in 1u32.. {
        let candidate = format!("{base}{k}");
        if !avoid.contains(&candidate) {
            return candidate;
        }
    }
    unreachable!("ran out of fresh variable names")
}

fn collect_signature(f: &Formula, sig: &mut Signature) -> Result<(), SignatureError> {
    match f {
        Formula::Atom(p, args) => {
            sig.add_predicate(p, args.len())?;
            for t in args {
                if let Term::Const(c) = t {
                    sig.constants.insert(c.clone());
                }
            }
            Ok(())
        }
        Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => {
            collect_signature(g, sig)
        }
        Formula::And(a, b) | Formula::Or(a, b) => {
            collect_signature(a, sig)?;
            collect_signature(b, sig)
        }
    }
}

/// The non-logical vocabulary of a formula or sequent: predicate symbols
/// with their arities, plus constant symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    /// Predicate name to arity. Propositional letters have arity 0.
    pub predicates: BTreeMap<String, usize>,
    pub constants: BTreeSet<String>,
}

impl Signature {
    /// Registers a predicate, failing on an arity conflict.
    pub fn add_predicate(&mut self, name: &str, arity: usize) -> Result<(), SignatureError> {
        match self.predicates.get(name) {
            Some(&existing) if existing != arity => Err(SignatureError::ArityConflict {
                name: name.to_string(),
                first: existing,
                second: arity,
            }),
            Some(_) => Ok(()),
            None => {
                self.predicates.insert(name.to_string(), arity);
                Ok(())
            }
        }
    }

    /// Merges another signature into this one, failing on arity conflicts.
    pub fn merge(&mut self, other: &Signature) -> Result<(), SignatureError> {
        for (name, &arity) in &other.predicates {
            self.add_predicate(name, arity)?;
        }
        self.constants.extend(other.constants.iter().cloned());
        Ok(())
    }

    /// The union signature of several formulas.
    pub fn of_formulas<'a>(
        formulas: impl IntoIterator<Item = &'a Formula>,
    ) -> Result<Signature, SignatureError> {
        let mut sig = Signature::default();
        for f in formulas {
            collect_signature(f, &mut sig)?;
        }
        Ok(sig)
    }
}

/// Error produced when a predicate symbol is used with conflicting
/// arities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("predicate `{name}` is used with arity {first} and with arity {second}")]
    ArityConflict {
        name: String,
        first: usize,
        second: usize,
    },
}

/// A sequent: finitely many premises and a single conclusion.
///
/// Duplicate premises are removed on construction (first occurrence kept);
/// consequence only depends on the premise *set*.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequent {
    premises: Vec<Formula>,
    conclusion: Formula,
}

impl Sequent {
    pub fn new(premises: Vec<Formula>, conclusion: Formula) -> Sequent {
        let mut seen = BTreeSet::new();
        let premises = premises
            .into_iter()
            .filter(|p| seen.insert(p.clone()))
            .collect();
        Sequent {
            premises,
            conclusion,
        }
    }

    pub fn premises(&self) -> &[Formula] {
        &self.premises
    }

    pub fn conclusion(&self) -> &Formula {
        &self.conclusion
    }

    /// Premises followed by the conclusion.
    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.premises
            .iter()
            .chain(std::iter::once(&self.conclusion))
    }

    pub fn is_propositional(&self) -> bool {
        self.formulas().all(Formula::is_propositional)
    }

    /// The union signature of all formulas in the sequent.
    pub fn signature(&self) -> Result<Signature, SignatureError> {
        Signature::of_formulas(self.formulas())
    }
}

/// Enumerates propositional formulas over `atoms` up to a connective
/// nesting depth, in a fixed deterministic order.
///
/// Writing `F(d)` for the formulas of depth at most `d`, the order is:
/// the atoms themselves (in the given order), then `~f` for every `f` in
/// `F(d-1)`, then `f & g` for every pair, then `f | g` for every pair,
/// with the left operand varying slower. Counts therefore satisfy
/// `|F(0)| = A` and `|F(d+1)| = A + |F(d)| + 2 |F(d)|^2`.
pub fn enumerate_formulas(atoms: &[String], max_depth: usize) -> FormulaEnumeration {
    let atom_formulas: Vec<Formula> = atoms.iter().map(Formula::letter).collect();
    let mut counts: Vec<u64> = Vec::with_capacity(max_depth + 1);
    let a = atom_formulas.len() as u64;
    counts.push(a);
    for d in 0..max_depth {
        let c = counts[d];
        counts.push(a + c + 2 * c * c);
    }
    FormulaEnumeration {
        atoms: atom_formulas,
        counts,
        next: 0,
    }
}

/// Iterator over enumerated formulas; see [`enumerate_formulas`].
#[derive(Debug, Clone)]
pub struct FormulaEnumeration {
    atoms: Vec<Formula>,
    /// `counts[d]` is the number of formulas of depth at most `d`.
    counts: Vec<u64>,
    next: u64,
}

impl FormulaEnumeration {
    /// Total number of formulas the enumeration will yield.
    pub fn total(&self) -> u64 {
        *self.counts.last().expect("counts is never empty")
    }

    /// Decodes the formula at `index` within the depth-`d` block.
    fn decode(&self, index: u64, d: usize) -> Formula {
        let a = self.atoms.len() as u64;
        if index < a {
            return self.atoms[index as usize].clone();
        }
        let prev = self.counts[d - 1];
        let mut rest = index - a;
        if rest < prev {
            return Formula::not(self.decode(rest, d - 1));
        }
        rest -= prev;
        let pairs = prev * prev;
        if rest < pairs {
            return Formula::and(
                self.decode(rest / prev, d - 1),
                self.decode(rest % prev, d - 1),
            );
        }
        rest -= pairs;
        Formula::or(
            self.decode(rest / prev, d - 1),
            self.decode(rest % prev, d - 1),
        )
    }
}

impl Iterator for FormulaEnumeration {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        if self.next >= self.total() {
            return None;
        }
        let f = self.decode(self.next, self.counts.len() - 1);
        self.next += 1;
        Some(f)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total() - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for FormulaEnumeration {}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::letter("p")
    }

    fn q() -> Formula {
        Formula::letter("q")
    }

    #[test]
    fn free_variables_of_open_and_closed_formulas() {
        // P(x) & Q(y) with only x bound leaves y free.
        let f = Formula::forall(
            "x",
            Formula::and(
                Formula::atom("P", vec![Term::var("x")]),
                Formula::atom("Q", vec![Term::var("y")]),
            ),
        );
        let fv: Vec<_> = f.free_variables().into_iter().collect();
        assert_eq!(fv, vec!["y".to_string()]);

        let closed = Formula::forall("x", Formula::exists("y", f.clone()));
        assert!(closed.free_variables().is_empty());
        assert!(closed.is_sentence());

        // A variable both bound and free: P(x) & forall x. Q(x).
        let g = Formula::and(
            Formula::atom("P", vec![Term::var("x")]),
            Formula::forall("x", Formula::atom("Q", vec![Term::var("x")])),
        );
        assert_eq!(
            g.free_variables().into_iter().collect::<Vec<_>>(),
            vec!["x".to_string()]
        );
    }

    #[test]
    fn substitution_replaces_free_occurrences_only() {
        // (P(x) & forall x. Q(x))[x := c] replaces only the first x.
        let g = Formula::and(
            Formula::atom("P", vec![Term::var("x")]),
            Formula::forall("x", Formula::atom("Q", vec![Term::var("x")])),
        );
        let expected = Formula::and(
            Formula::atom("P", vec![Term::constant("c")]),
            Formula::forall("x", Formula::atom("Q", vec![Term::var("x")])),
        );
        assert_eq!(g.substitute("x", &Term::constant("c")), expected);
    }

    #[test]
    fn substitution_avoids_capture_by_renaming() {
        // (forall y. P(x, y))[x := y] must not capture the inserted y.
        let f = Formula::forall(
            "y",
            Formula::atom("P", vec![Term::var("x"), Term::var("y")]),
        );
        let g = f.substitute("x", &Term::var("y"));
        let expected = Formula::forall(
            "y1",
            Formula::atom("P", vec![Term::var("y"), Term::var("y1")]),
        );
        assert_eq!(g, expected);
        // And the result is alpha-equivalent to the intent, not to the
        // capturing reading.
        assert!(g.alpha_eq(&Formula::forall(
            "z",
            Formula::atom("P", vec![Term::var("y"), Term::var("z")]),
        )));
    }

    #[test]
    fn substituting_a_variable_for_itself_is_identity_up_to_alpha() {
        let f = Formula::forall(
            "y",
            Formula::or(
                Formula::atom("P", vec![Term::var("x"), Term::var("y")]),
                Formula::not(Formula::atom("Q", vec![Term::var("x")])),
            ),
        );
        let g = f.substitute("x", &Term::var("x"));
        assert!(f.alpha_eq(&g));
    }

    #[test]
    fn substitution_removes_the_variable_from_free_variables() {
        let f = Formula::exists(
            "z",
            Formula::and(
                Formula::atom("R", vec![Term::var("x"), Term::var("z")]),
                Formula::atom("P", vec![Term::var("y")]),
            ),
        );
        let g = f.substitute("x", &Term::constant("c"));
        let fv: Vec<_> = g.free_variables().into_iter().collect();
        assert_eq!(fv, vec!["y".to_string()]);
    }

    #[test]
    fn alpha_equivalence_examples() {
        let f = Formula::forall("x", Formula::atom("P", vec![Term::var("x")]));
        let g = Formula::forall("y", Formula::atom("P", vec![Term::var("y")]));
        assert!(f.alpha_eq(&g));
        assert_ne!(f, g);

        // Different free variables are not alpha-equivalent.
        let h1 = Formula::atom("P", vec![Term::var("x")]);
        let h2 = Formula::atom("P", vec![Term::var("y")]);
        assert!(!h1.alpha_eq(&h2));

        // Swapped nesting is not alpha-equivalent to aligned nesting.
        let n1 = Formula::forall(
            "x",
            Formula::exists(
                "y",
                Formula::atom("R", vec![Term::var("x"), Term::var("y")]),
            ),
        );
        let n2 = Formula::forall(
            "y",
            Formula::exists(
                "x",
                Formula::atom("R", vec![Term::var("y"), Term::var("x")]),
            ),
        );
        let n3 = Formula::forall(
            "y",
            Formula::exists(
                "x",
                Formula::atom("R", vec![Term::var("x"), Term::var("y")]),
            ),
        );
        assert!(n1.alpha_eq(&n2));
        assert!(!n1.alpha_eq(&n3));
    }

    #[test]
    fn signature_collects_predicates_and_constants() {
        let f = Formula::and(
            Formula::atom("P", vec![Term::constant("a"), Term::var("x")]),
            Formula::or(
                Formula::letter("q"),
                Formula::atom("P", vec![Term::constant("b"), Term::constant("a")]),
            ),
        );
        let sig = f.signature().unwrap();
        assert_eq!(sig.predicates.get("P"), Some(&2));
        assert_eq!(sig.predicates.get("q"), Some(&0));
        assert_eq!(
            sig.constants.iter().cloned().collect::<Vec<_>>(),
            vec!["a".to_string(), "b".to_string()]
        );
    }

    #[test]
    fn signature_rejects_arity_conflicts() {
        let f = Formula::and(
            Formula::atom("P", vec![Term::constant("a")]),
            Formula::atom("P", vec![Term::constant("a"), Term::constant("b")]),
        );
        let err = f.signature().unwrap_err();
        assert_eq!(
            err,
            SignatureError::ArityConflict {
                name: "P".to_string(),
                first: 1,
                second: 2,
            }
        );
    }

    #[test]
    fn sequent_deduplicates_premises() {
        let s = Sequent::new(vec![p(), q(), p()], q());
        assert_eq!(s.premises(), &[p(), q()]);
    }

    #[test]
    fn enumeration_starts_with_the_documented_prefix() {
        // One atom, depth 1: exactly p, ~p, p & p, p | p.
        let got: Vec<Formula> = enumerate_formulas(&["p".to_string()], 1).collect();
        assert_eq!(
            got,
            vec![
                p(),
                Formula::not(p()),
                Formula::and(p(), p()),
                Formula::or(p(), p()),
            ]
        );
    }

    #[test]
    fn enumeration_counts_follow_the_recurrence() {
        // A = 2: c(0) = 2, c(1) = 2 + 2 + 2*4 = 12,
        // c(2) = 2 + 12 + 2*144 = 302.
        let atoms = vec!["p".to_string(), "q".to_string()];
        assert_eq!(enumerate_formulas(&atoms, 0).total(), 2);
        assert_eq!(enumerate_formulas(&atoms, 1).total(), 12);
        assert_eq!(enumerate_formulas(&atoms, 2).total(), 302);
        let all: Vec<Formula> = enumerate_formulas(&atoms, 2).collect();
        assert_eq!(all.len(), 302);
    }

    #[test]
    fn enumeration_has_no_duplicates_and_respects_depth() {
        let atoms = vec!["p".to_string(), "q".to_string()];
        let all: Vec<Formula> = enumerate_formulas(&atoms, 2).collect();
        let distinct: BTreeSet<&Formula> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|f| f.depth() <= 2));
        assert!(all.iter().all(Formula::is_propositional));
    }

    #[test]
    fn enumeration_depth_two_block_order() {
        let atoms = vec!["p".to_string(), "q".to_string()];
        let all: Vec<Formula> = enumerate_formulas(&atoms, 2).collect();
        // Atoms first, then negations of the depth-1 enumeration in order.
        assert_eq!(all[0], p());
        assert_eq!(all[1], q());
        assert_eq!(all[2], Formula::not(p()));
        assert_eq!(all[3], Formula::not(q()));
        assert_eq!(all[4], Formula::not(Formula::not(p())));
        // First conjunction block entry pairs the first two depth-1
        // formulas: p & p.
        assert_eq!(all[14], Formula::and(p(), p()));
    }

    #[test]
    fn fresh_variable_picks_lowest_unused_suffix() {
        let avoid: BTreeSet<String> = ["y".to_string(), "y1".to_string()].into_iter().collect();
        assert_eq!(fresh_variable("y", &avoid), "y2");
        assert_eq!(fresh_variable("x", &avoid), "x");
    }
}
