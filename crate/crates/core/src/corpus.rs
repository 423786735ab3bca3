//! Seeded random generation of formulas, sequents, and interpretations,
//! used by the property tests and the verification harnesses.
//!
//! Everything here is deterministic in the caller's RNG, so a recorded
//! seed reproduces a run exactly.

use rand::Rng;

use crate::formula::{Formula, Sequent, Signature, Term};
use crate::interp::{Interpretation, LogicValue, PredicateTable};
use crate::threeval::ThreeValue;
use crate::tuple::TupleValue;

/// Variable names quantifiers draw from. Generation keeps scopes shorter
/// than this list, so a fresh name is always available.
const VAR_NAMES: [&str; 6] = ["x", "y", "z", "x1", "y1", "z1"];

/// A small pool of signatures whose largest table stays tiny, so that
/// exhaustive interpretation search over them is fast even for width-3
/// tuple values.
pub fn signature_pool() -> Vec<Signature> {
    fn build(preds: &[(&str, usize)], consts: &[&str]) -> Signature {
        let mut sig = Signature::default();
        for &(p, a) in preds {
            sig.add_predicate(p, a)
                .expect("pool predicates are distinct");
        }
        sig.constants = consts.iter().map(|c| c.to_string()).collect();
        sig
    }
    vec![
        build(&[("P", 1)], &[]),
        build(&[("P", 1), ("Q", 1)], &["a"]),
        build(&[("P", 2)], &[]),
        build(&[("P", 1)], &["a", "b"]),
        build(&[("P", 1), ("q", 0)], &["a"]),
    ]
}

/// Picks a signature from [`signature_pool`].
pub fn random_signature(rng: &mut impl Rng) -> Signature {
    let pool = signature_pool();
    let i = rng.random_range(0..pool.len());
    pool.into_iter().nth(i).expect("index in range")
}

/// Generates a random sentence over `sig` with at most `max_connectives`
/// nested connectives and at most `max_quantifiers` nested quantifiers.
///
/// If the signature has neither constants nor nullary predicates, a
/// quantifier is required to give atoms something to talk about, so
/// `max_quantifiers` must be at least 1 in that case (and at most
/// the length of the variable name pool always).
pub fn random_fo_sentence(
    rng: &mut impl Rng,
    sig: &Signature,
    max_connectives: usize,
    max_quantifiers: usize,
) -> Formula {
    assert!(max_quantifiers <= VAR_NAMES.len());
    let mut scope: Vec<&str> = Vec::new();
    gen_sentence(rng, sig, max_connectives, max_quantifiers, &mut scope)
}

fn gen_sentence(
    rng: &mut impl Rng,
    sig: &Signature,
    connectives: usize,
    quantifiers: usize,
    scope: &mut Vec<&str>,
) -> Formula {
    let has_terms = !scope.is_empty() || !sig.constants.is_empty();
    let has_nullary = sig.predicates.values().any(|&a| a == 0);
    let can_atom = has_terms || has_nullary;
    assert!(
        can_atom || quantifiers > 0,
        "signature without constants or letters needs a quantifier budget"
    );
    // Weighted choice: 0-2 atom, 3-4 negation, 5-6 conjunction,
    // 7-8 disjunction, 9 forall, 10 exists. Retry on choices the budgets
    // rule out; an atom or a quantifier is always admissible.
    let kind = loop {
        if connectives == 0 {
            break if can_atom {
                0
            } else {
                9 + rng.random_range(0..2)
            };
        }
        let k = rng.random_range(0..11);
        match k {
            0..=2 if !can_atom => continue,
            9 | 10 if quantifiers == 0 => continue,
            _ => break k,
        }
    };
    match kind {
        0..=2 => gen_atom(rng, sig, scope, has_terms),
        3 | 4 => Formula::not(gen_sentence(rng, sig, connectives - 1, quantifiers, scope)),
        5 | 6 => Formula::and(
            gen_sentence(rng, sig, connectives - 1, quantifiers, scope),
            gen_sentence(rng, sig, connectives - 1, quantifiers, scope),
        ),
        7 | 8 => Formula::or(
            gen_sentence(rng, sig, connectives - 1, quantifiers, scope),
            gen_sentence(rng, sig, connectives - 1, quantifiers, scope),
        ),
        _ => {
            let available: Vec<&str> = VAR_NAMES
                .iter()
                .copied()
                .filter(|v| !scope.contains(v))
                .collect();
            let var = available[rng.random_range(0..available.len())];
            scope.push(var);
            let body = gen_sentence(
                rng,
                sig,
                connectives.saturating_sub(1),
                quantifiers - 1,
                scope,
            );
            scope.pop();
            if kind == 9 {
                Formula::forall(var, body)
            } else {
                Formula::exists(var, body)
            }
        }
    }
}

fn gen_atom(rng: &mut impl Rng, sig: &Signature, scope: &[&str], has_terms: bool) -> Formula {
    let usable: Vec<(&String, usize)> = sig
        .predicates
        .iter()
        .filter(|&(_, &a)| a == 0 || has_terms)
        .map(|(p, &a)| (p, a))
        .collect();
    let (pred, arity) = usable[rng.random_range(0..usable.len())];
    let args = (0..arity)
        .map(|_| {
            let total = scope.len() + sig.constants.len();
            let i = rng.random_range(0..total);
            if i < scope.len() {
                Term::var(scope[i])
            } else {
                Term::constant(sig.constants.iter().nth(i - scope.len()).expect("in range"))
            }
        })
        .collect();
    Formula::atom(pred, args)
}

/// Generates a random propositional formula over the given letters.
pub fn random_prop_formula(rng: &mut impl Rng, letters: &[String], max_depth: usize) -> Formula {
    assert!(!letters.is_empty());
    if max_depth == 0 || rng.random_range(0..4) == 0 {
        return Formula::letter(&letters[rng.random_range(0..letters.len())]);
    }
    match rng.random_range(0..3) {
        0 => Formula::not(random_prop_formula(rng, letters, max_depth - 1)),
        1 => Formula::and(
            random_prop_formula(rng, letters, max_depth - 1),
            random_prop_formula(rng, letters, max_depth - 1),
        ),
        _ => Formula::or(
            random_prop_formula(rng, letters, max_depth - 1),
            random_prop_formula(rng, letters, max_depth - 1),
        ),
    }
}

/// Generates a random sequent of sentences over `sig`.
pub fn random_fo_sequent(
    rng: &mut impl Rng,
    sig: &Signature,
    max_premises: usize,
    max_connectives: usize,
    max_quantifiers: usize,
) -> Sequent {
    let n = rng.random_range(0..=max_premises);
    let premises = (0..n)
        .map(|_| random_fo_sentence(rng, sig, max_connectives, max_quantifiers))
        .collect();
    let conclusion = random_fo_sentence(rng, sig, max_connectives, max_quantifiers);
    Sequent::new(premises, conclusion)
}

/// Fills in a random interpretation of `sig`, drawing every table cell
/// uniformly from `values` and every constant uniformly from the domain.
pub fn random_interpretation<V: LogicValue>(
    rng: &mut impl Rng,
    sig: &Signature,
    domain_size: usize,
    values: &[V],
) -> Interpretation<V> {
    assert!(!values.is_empty());
    let mut m = Interpretation::new(domain_size).expect("domain sizes are positive");
    for c in &sig.constants {
        let elem = rng.random_range(0..domain_size);
        m.set_constant(c.clone(), elem).expect("element in range");
    }
    for (p, &arity) in &sig.predicates {
        let cells =
            PredicateTable::<V>::cell_count(domain_size, arity).expect("pool tables are small");
        let table = (0..cells)
            .map(|_| values[rng.random_range(0..values.len())])
            .collect();
        m.set_predicate(p.clone(), arity, table)
            .expect("sized to fit");
    }
    m
}

/// Random tuple-valued interpretation of a fixed width.
pub fn random_tuple_interpretation(
    rng: &mut impl Rng,
    sig: &Signature,
    domain_size: usize,
    width: u8,
) -> Interpretation<TupleValue> {
    let values: Vec<TupleValue> = TupleValue::all(width).collect();
    random_interpretation(rng, sig, domain_size, &values)
}

/// Random three-valued interpretation; with `classical_only` the middle
/// value never appears.
pub fn random_three_interpretation(
    rng: &mut impl Rng,
    sig: &Signature,
    domain_size: usize,
    classical_only: bool,
) -> Interpretation<ThreeValue> {
    let values: Vec<ThreeValue> = if classical_only {
        ThreeValue::classical().to_vec()
    } else {
        ThreeValue::all().to_vec()
    };
    random_interpretation(rng, sig, domain_size, &values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::validate_model;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generation_is_deterministic_in_the_seed() {
        let run = || {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let sig = random_signature(&mut rng);
            let s = random_fo_sequent(&mut rng, &sig, 2, 3, 2);
            let m = random_tuple_interpretation(&mut rng, &sig, 2, 2);
            (s, m)
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn generated_formulas_are_sentences_over_their_signature() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..500 {
            let sig = random_signature(&mut rng);
            let f = random_fo_sentence(&mut rng, &sig, 3, 2);
            assert!(f.is_sentence(), "{f} has free variables");
            let fsig = f.signature().unwrap();
            for (p, a) in &fsig.predicates {
                assert_eq!(sig.predicates.get(p), Some(a), "in {f}");
            }
            assert!(fsig.constants.is_subset(&sig.constants), "in {f}");
        }
    }

    #[test]
    fn generated_interpretations_cover_the_signature() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..100 {
            let sig = random_signature(&mut rng);
            let f = random_fo_sentence(&mut rng, &sig, 2, 2);
            let m = random_three_interpretation(&mut rng, &sig, 2, false);
            validate_model(&f.signature().unwrap(), &m).unwrap();
            let mc = random_three_interpretation(&mut rng, &sig, 2, true);
            for table in mc.predicates().values() {
                assert!(table.values().iter().all(|v| v.is_classical()));
            }
        }
    }

    #[test]
    fn quantifier_budget_is_respected() {
        fn quantifier_depth(f: &Formula) -> usize {
            match f {
                Formula::Atom(..) => 0,
                Formula::Not(g) => quantifier_depth(g),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    quantifier_depth(a).max(quantifier_depth(b))
                }
                Formula::Forall(_, g) | Formula::Exists(_, g) => 1 + quantifier_depth(g),
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..300 {
            let sig = random_signature(&mut rng);
            let f = random_fo_sentence(&mut rng, &sig, 3, 2);
            assert!(quantifier_depth(&f) <= 2, "{f}");
        }
    }
}
