//! Translations between tuple-valued and three-valued semantics, and
//! harnesses that verify the resulting equivalences of consequence
//! relations.
//!
//! The two value maps:
//!
//! * **collapse** sends a width-`n` tuple to a three-valued verdict:
//!   all-ones to 1, all-zeros to 0, every mixed tuple to 1/2.
//! * **embed** sends a three-valued value into width `n >= 2`: 1 to the
//!   all-ones tuple, 0 to all-zeros, and 1/2 to `⟨1, ..., 1, 0⟩`.
//!
//! Both maps commute with evaluation when lifted pointwise to
//! interpretations ([`verify_collapse_on`], [`verify_embed_on`]), which
//! yields four equivalences of consequence relations, checked here
//! exhaustively on a propositional corpus
//! ([`verify_pairs_propositional`]) and on random first-order sequents
//! ([`verify_pairs_first_order`]):
//!
//! | tuple mode        | three-valued mode |
//! |-------------------|-------------------|
//! | strict            | K3                |
//! | bossy             | classical         |
//! | tolerant          | LP                |
//! | strict-tolerant   | strict-tolerant   |

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::consequence::{
    check_first_order_bounded, check_propositional, CheckError, ConsequenceMode,
};
use crate::corpus;
use crate::formula::{enumerate_formulas, Formula, Sequent};
use crate::interp::{eval_prop, eval_sentence, EvalError, Interpretation, LogicValue};
use crate::threeval::{ThreeDesignatedMode, ThreeValue};
use crate::tuple::{DesignatedMode, TupleValue};

/// Error from a translation or a translation check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslationError {
    #[error("embedding the middle value needs width at least 2, got {0}")]
    WidthTooSmall(u8),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Collapses a tuple value to a three-valued verdict: all-ones to 1,
/// all-zeros to 0, anything mixed to 1/2.
pub fn collapse_value(v: TupleValue) -> ThreeValue {
    if v.is_top() {
        ThreeValue::One
    } else if v.is_bottom() {
        ThreeValue::Zero
    } else {
        ThreeValue::Half
    }
}

/// Embeds a three-valued value into width-`width` tuples: 1 to all-ones,
/// 0 to all-zeros, 1/2 to `⟨1, ..., 1, 0⟩`. Needs `width >= 2`, since a
/// single bit has no mixed tuple.
pub fn embed_value(v: ThreeValue, width: u8) -> Result<TupleValue, TranslationError> {
    if width < 2 {
        return Err(TranslationError::WidthTooSmall(width));
    }
    Ok(match v {
        ThreeValue::One => TupleValue::top(width),
        ThreeValue::Zero => TupleValue::bottom(width),
        ThreeValue::Half => TupleValue::from_bits(width, TupleValue::top(width).bits() ^ 1),
    })
}

/// Applies [`collapse_value`] to every table cell.
pub fn collapse_interpretation(m: &Interpretation<TupleValue>) -> Interpretation<ThreeValue> {
    m.map_values(collapse_value)
}

/// Applies [`embed_value`] to every table cell.
pub fn embed_interpretation(
    m: &Interpretation<ThreeValue>,
    width: u8,
) -> Result<Interpretation<TupleValue>, TranslationError> {
    if width < 2 {
        return Err(TranslationError::WidthTooSmall(width));
    }
    Ok(m.map_values(|v| embed_value(v, width).expect("width checked above")))
}

/// One checked instance of a translation lemma.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaInstance {
    pub sentence: String,
    /// Value of the sentence on the tuple side, rendered.
    pub tuple_value: String,
    /// Value of the sentence on the three-valued side, rendered.
    pub three_value: String,
    /// Whether the translated value matches.
    pub holds: bool,
}

/// Checks, on one model and sentence, that collapsing the model and then
/// evaluating agrees with evaluating and then collapsing the value.
pub fn verify_collapse_on(
    m: &Interpretation<TupleValue>,
    s: &Formula,
) -> Result<LemmaInstance, TranslationError> {
    let tuple_value = eval_sentence(s, m)?;
    let three_value = eval_sentence(s, &collapse_interpretation(m))?;
    Ok(LemmaInstance {
        sentence: s.to_string(),
        tuple_value: tuple_value.value_name(),
        three_value: three_value.value_name(),
        holds: collapse_value(tuple_value) == three_value,
    })
}

/// Checks, on one model and sentence, that evaluating over the embedded
/// model yields a tuple value that collapses back to the three-valued one.
///
/// The embedding claim is deliberately this weak form: the image of
/// [`embed_value`] is not closed under negation (flipping `⟨1, ..., 1, 0⟩`
/// gives `⟨0, ..., 0, 1⟩`), so complex sentences can take tuple values
/// outside the image. What the embedding guarantees — and what the
/// consequence equivalences need — is that the tuple value is all-ones
/// exactly when the three-valued one is 1 and all-zeros exactly when it is
/// 0, i.e. that the collapse of the tuple value recovers the three-valued
/// value.
pub fn verify_embed_on(
    m: &Interpretation<ThreeValue>,
    s: &Formula,
    width: u8,
) -> Result<LemmaInstance, TranslationError> {
    let three_value = eval_sentence(s, m)?;
    let tuple_value = eval_sentence(s, &embed_interpretation(m, width)?)?;
    Ok(LemmaInstance {
        sentence: s.to_string(),
        tuple_value: tuple_value.value_name(),
        three_value: three_value.value_name(),
        holds: collapse_value(tuple_value) == three_value,
    })
}

/// A failed lemma instance, with everything needed to replay it.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaFailure {
    /// `"collapse"` or `"embed"`.
    pub lemma: String,
    pub width: u8,
    pub sentence: String,
    pub model: crate::interp::ModelJson,
    pub tuple_value: String,
    pub three_value: String,
}

/// Outcome of a randomized lemma suite run.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub seed: u64,
    pub samples: u64,
    pub widths: Vec<u8>,
    pub max_domain: usize,
    /// Instances checked, per lemma (collapse, embed).
    pub collapse_checked: u64,
    pub embed_checked: u64,
    pub failures: Vec<LemmaFailure>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs both lemma checks on `samples` random (model, sentence) pairs
/// each, over random signatures, domain sizes up to `max_domain`, and the
/// given widths. Deterministic in `seed`.
pub fn run_lemma_suite(samples: u64, widths: &[u8], max_domain: usize, seed: u64) -> LemmaReport {
    assert!(!widths.is_empty() && widths.iter().all(|&w| w >= 2));
    assert!(max_domain >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LemmaReport {
        seed,
        samples,
        widths: widths.to_vec(),
        max_domain,
        collapse_checked: 0,
        embed_checked: 0,
        failures: Vec::new(),
    };
    for _ in 0..samples {
        let sig = corpus::random_signature(&mut rng);
        let width = widths[rng.random_range(0..widths.len())];
        let domain_size = rng.random_range(1..=max_domain);
        let s = corpus::random_fo_sentence(&mut rng, &sig, 3, 2);

        let mt = corpus::random_tuple_interpretation(&mut rng, &sig, domain_size, width);
        let inst = verify_collapse_on(&mt, &s).expect("generated models cover the signature");
        report.collapse_checked += 1;
        if !inst.holds {
            report.failures.push(LemmaFailure {
                lemma: "collapse".to_string(),
                width,
                sentence: inst.sentence,
                model: crate::interp::ModelJson::from_tuple(&mt, width)
                    .expect("generated models have uniform width"),
                tuple_value: inst.tuple_value,
                three_value: inst.three_value,
            });
        }

        let m3 = corpus::random_three_interpretation(&mut rng, &sig, domain_size, false);
        let inst = verify_embed_on(&m3, &s, width).expect("generated models cover the signature");
        report.embed_checked += 1;
        if !inst.holds {
            report.failures.push(LemmaFailure {
                lemma: "embed".to_string(),
                width,
                sentence: inst.sentence,
                model: crate::interp::ModelJson::from_three(&m3),
                tuple_value: inst.tuple_value,
                three_value: inst.three_value,
            });
        }
    }
    report
}

/// One of the four mode equivalences between tuple and three-valued
/// consequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModePairing {
    StrictK3,
    BossyClassical,
    TolerantLp,
    StrictTolerant,
}

impl ModePairing {
    pub fn all() -> [ModePairing; 4] {
        [
            ModePairing::StrictK3,
            ModePairing::BossyClassical,
            ModePairing::TolerantLp,
            ModePairing::StrictTolerant,
        ]
    }

    pub fn tuple_mode(self, width: u8) -> ConsequenceMode {
        match self {
            ModePairing::StrictK3 => ConsequenceMode::Tuple {
                width,
                designated: DesignatedMode::Strict,
            },
            ModePairing::BossyClassical => ConsequenceMode::Tuple {
                width,
                designated: DesignatedMode::Bossy,
            },
            ModePairing::TolerantLp => ConsequenceMode::Tuple {
                width,
                designated: DesignatedMode::Tolerant,
            },
            ModePairing::StrictTolerant => ConsequenceMode::TupleStrictTolerant { width },
        }
    }

    pub fn three_mode(self) -> ConsequenceMode {
        match self {
            ModePairing::StrictK3 => ConsequenceMode::Three(ThreeDesignatedMode::K3),
            ModePairing::BossyClassical => ConsequenceMode::Three(ThreeDesignatedMode::Classical),
            ModePairing::TolerantLp => ConsequenceMode::Three(ThreeDesignatedMode::Lp),
            ModePairing::StrictTolerant => ConsequenceMode::ThreeStrictTolerant,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ModePairing::StrictK3 => "strict/k3",
            ModePairing::BossyClassical => "bossy/classical",
            ModePairing::TolerantLp => "tolerant/lp",
            ModePairing::StrictTolerant => "strict-tolerant/strict-tolerant",
        }
    }
}

/// Validity on both sides of a pairing for one sequent.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PairAgreement {
    pub tuple_valid: bool,
    pub three_valid: bool,
}

impl PairAgreement {
    pub fn agree(&self) -> bool {
        self.tuple_valid == self.three_valid
    }
}

/// Checks one sequent under both sides of a pairing. Propositional
/// sequents are checked exhaustively when `max_domain` is `None`;
/// otherwise bounded first-order search is used on both sides.
pub fn verify_pair_on_sequent(
    seq: &Sequent,
    pairing: ModePairing,
    width: u8,
    max_domain: Option<usize>,
    budget: u64,
) -> Result<PairAgreement, CheckError> {
    let tuple_mode = pairing.tuple_mode(width);
    let three_mode = pairing.three_mode();
    let (tuple_valid, three_valid) = match max_domain {
        None => (
            check_propositional(seq, &tuple_mode, budget)?.valid,
            check_propositional(seq, &three_mode, budget)?.valid,
        ),
        Some(bound) => (
            check_first_order_bounded(seq, &tuple_mode, bound, budget)?.valid,
            check_first_order_bounded(seq, &three_mode, bound, budget)?.valid,
        ),
    };
    Ok(PairAgreement {
        tuple_valid,
        three_valid,
    })
}

/// A sequent on which the two sides of a pairing disagreed.
#[derive(Debug, Clone, Serialize)]
pub struct Disagreement {
    pub pairing: String,
    pub width: u8,
    pub sequent: String,
    pub tuple_valid: bool,
    pub three_valid: bool,
}

/// Outcome of a corpus run comparing tuple and three-valued consequence.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub sequents_checked: u64,
    /// Individual (sequent, pairing, width) comparisons made.
    pub comparisons: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub disagreements: Vec<Disagreement>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Parameters for the exhaustive propositional corpus.
#[derive(Debug, Clone)]
pub struct PropCorpusParams {
    /// Number of distinct letters (`p`, `q`, ...).
    pub atoms: usize,
    /// Connective-nesting depth bound for enumerated formulas.
    pub max_depth: usize,
    /// Premise sets of size up to this are formed (including the empty
    /// set); 2 means empty, singleton, and unordered pairs.
    pub max_premises: usize,
    /// Tuple widths to compare against the three-valued side.
    pub widths: Vec<u8>,
}

impl Default for PropCorpusParams {
    fn default() -> PropCorpusParams {
        PropCorpusParams {
            atoms: 2,
            max_depth: 2,
            max_premises: 2,
            widths: vec![2, 3],
        }
    }
}

const LETTER_NAMES: [&str; 4] = ["p", "q", "r", "s"];

/// Designated-assignment bitmask of one formula under one policy: bit `a`
/// is set iff assignment number `a` designates the formula. Assignments
/// are numbered in enumeration order (letters sorted, values ascending,
/// rightmost letter fastest).
type Mask = Vec<u64>;

fn mask_blocks(count: usize) -> usize {
    count.div_ceil(64)
}

fn full_mask(count: usize) -> Mask {
    let mut m = vec![u64::MAX; mask_blocks(count)];
    let tail = count % 64;
    if tail != 0 {
        *m.last_mut().expect("count > 0") = (1u64 << tail) - 1;
    }
    m
}

/// Is the intersection of the premises' designated sets (under
/// `prem_policy`) contained in the conclusion's designated set (under
/// `concl_policy`)? `masks[policy][formula]` indexes the mask table;
/// `universe` masks off the bits beyond the assignment count.
fn mask_entails(
    masks: &[Vec<Mask>],
    prem_policy: usize,
    concl_policy: usize,
    premises: &[usize],
    conclusion: usize,
    universe: &Mask,
) -> bool {
    let concl = &masks[concl_policy][conclusion];
    for (block, &c) in concl.iter().enumerate() {
        let mut prem = universe[block];
        for &i in premises {
            prem &= masks[prem_policy][i][block];
        }
        if prem & !c != 0 {
            return false;
        }
    }
    true
}

/// Computes `[policy][formula]` mask tables in one sweep over the
/// assignments.
fn compute_masks<V: LogicValue>(
    formulas: &[Formula],
    letters: &[String],
    values: &[V],
    policies: &[&dyn Fn(V) -> bool],
) -> Vec<Vec<Mask>> {
    let count = values
        .len()
        .checked_pow(letters.len() as u32)
        .expect("assignment count fits in usize");
    let blocks = mask_blocks(count);
    let mut masks = vec![vec![vec![0u64; blocks]; formulas.len()]; policies.len()];
    // Odometer over assignments, rightmost letter fastest.
    let mut digits = vec![0usize; letters.len()];
    let mut assignment: BTreeMap<String, V> =
        letters.iter().map(|l| (l.clone(), values[0])).collect();
    for a in 0..count {
        for (fi, f) in formulas.iter().enumerate() {
            let v = eval_prop(f, &assignment).expect("letters are all assigned");
            for (pi, policy) in policies.iter().enumerate() {
                if policy(v) {
                    masks[pi][fi][a / 64] |= 1u64 << (a % 64);
                }
            }
        }
        // Advance the odometer.
        for i in (0..digits.len()).rev() {
            if digits[i] + 1 < values.len() {
                digits[i] += 1;
                assignment.insert(letters[i].clone(), values[digits[i]]);
                break;
            }
            digits[i] = 0;
            assignment.insert(letters[i].clone(), values[0]);
        }
    }
    masks
}

/// Exhaustively compares all four pairings on every sequent formed from
/// the enumerated formula corpus: premise sets up to `max_premises`
/// formulas, any enumerated conclusion.
///
/// Validity is computed from designated-assignment bitmasks; a sequent is
/// valid iff the intersection of its premises' designated sets is
/// contained in the conclusion's. This agrees with
/// [`check_propositional`] (the unit tests cross-validate the two paths)
/// but is fast enough to sweep millions of sequents.
pub fn verify_pairs_propositional(params: &PropCorpusParams) -> CorpusReport {
    assert!(params.atoms >= 1 && params.atoms <= LETTER_NAMES.len());
    assert!(
        params.max_premises <= 2,
        "premise sets larger than pairs are not enumerated"
    );
    let letters: Vec<String> = LETTER_NAMES[..params.atoms]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let formulas: Vec<Formula> = enumerate_formulas(&letters, params.max_depth).collect();

    // Three-valued masks: K3, LP; classical masks over the two-valued
    // assignments.
    let three = compute_masks(
        &formulas,
        &letters,
        &ThreeValue::all(),
        &[&|v| ThreeDesignatedMode::K3.designates(v), &|v| {
            ThreeDesignatedMode::Lp.designates(v)
        }],
    );
    let classical = compute_masks(
        &formulas,
        &letters,
        &ThreeValue::classical(),
        &[&|v| v == ThreeValue::One],
    );
    let three_count = 3usize.pow(params.atoms as u32);
    let classical_count = 2usize.pow(params.atoms as u32);

    // Tuple masks per width: strict, bossy, tolerant.
    struct TupleSide {
        width: u8,
        masks: Vec<Vec<Mask>>,
        universe: Mask,
    }
    let tuple_sides: Vec<TupleSide> = params
        .widths
        .iter()
        .map(|&width| {
            let values: Vec<TupleValue> = TupleValue::all(width).collect();
            let masks = compute_masks(
                &formulas,
                &letters,
                &values,
                &[
                    &|v| DesignatedMode::Strict.designates(v),
                    &|v| DesignatedMode::Bossy.designates(v),
                    &|v| DesignatedMode::Tolerant.designates(v),
                ],
            );
            let universe = full_mask(values.len().pow(params.atoms as u32));
            TupleSide {
                width,
                masks,
                universe,
            }
        })
        .collect();
    let three_universe = full_mask(three_count);
    let classical_universe = full_mask(classical_count);

    let mut report = CorpusReport {
        sequents_checked: 0,
        comparisons: 0,
        seed: None,
        disagreements: Vec::new(),
    };

    // Premise index sets: empty, singletons, unordered pairs i < j.
    let n = formulas.len();
    let mut premise_sets: Vec<Vec<usize>> = vec![Vec::new()];
    if params.max_premises >= 1 {
        premise_sets.extend((0..n).map(|i| vec![i]));
    }
    if params.max_premises >= 2 {
        for i in 0..n {
            for j in (i + 1)..n {
                premise_sets.push(vec![i, j]);
            }
        }
    }

    const STRICT: usize = 0;
    const BOSSY: usize = 1;
    const TOLERANT: usize = 2;
    const K3: usize = 0;
    const LP: usize = 1;

    for premises in &premise_sets {
        for conclusion in 0..n {
            report.sequents_checked += 1;
            // Three-valued verdicts, shared across widths.
            let k3_valid = mask_entails(&three, K3, K3, premises, conclusion, &three_universe);
            let lp_valid = mask_entails(&three, LP, LP, premises, conclusion, &three_universe);
            let cl_valid =
                mask_entails(&classical, 0, 0, premises, conclusion, &classical_universe);
            let st3_valid = mask_entails(&three, K3, LP, premises, conclusion, &three_universe);

            for side in &tuple_sides {
                let pairs = [
                    (
                        ModePairing::StrictK3,
                        mask_entails(
                            &side.masks,
                            STRICT,
                            STRICT,
                            premises,
                            conclusion,
                            &side.universe,
                        ),
                        k3_valid,
                    ),
                    (
                        ModePairing::BossyClassical,
                        mask_entails(
                            &side.masks,
                            BOSSY,
                            BOSSY,
                            premises,
                            conclusion,
                            &side.universe,
                        ),
                        cl_valid,
                    ),
                    (
                        ModePairing::TolerantLp,
                        mask_entails(
                            &side.masks,
                            TOLERANT,
                            TOLERANT,
                            premises,
                            conclusion,
                            &side.universe,
                        ),
                        lp_valid,
                    ),
                    (
                        ModePairing::StrictTolerant,
                        mask_entails(
                            &side.masks,
                            STRICT,
                            TOLERANT,
                            premises,
                            conclusion,
                            &side.universe,
                        ),
                        st3_valid,
                    ),
                ];
                for (pairing, tuple_valid, three_valid) in pairs {
                    report.comparisons += 1;
                    if tuple_valid != three_valid {
                        report.disagreements.push(Disagreement {
                            pairing: pairing.label().to_string(),
                            width: side.width,
                            sequent: render_sequent(&formulas, premises, conclusion),
                            tuple_valid,
                            three_valid,
                        });
                    }
                }
            }
        }
    }
    report
}

fn render_sequent(formulas: &[Formula], premises: &[usize], conclusion: usize) -> String {
    let seq = Sequent::new(
        premises.iter().map(|&i| formulas[i].clone()).collect(),
        formulas[conclusion].clone(),
    );
    seq.to_string()
}

/// Parameters for the randomized first-order corpus.
#[derive(Debug, Clone)]
pub struct FoCorpusParams {
    pub sequents: u64,
    pub widths: Vec<u8>,
    pub max_domain: usize,
    pub max_premises: usize,
    pub max_connectives: usize,
    pub max_quantifiers: usize,
    pub seed: u64,
    pub budget: u64,
}

impl Default for FoCorpusParams {
    fn default() -> FoCorpusParams {
        FoCorpusParams {
            sequents: 1000,
            widths: vec![2, 3],
            max_domain: 2,
            max_premises: 2,
            max_connectives: 2,
            max_quantifiers: 2,
            seed: 0x1009,
            budget: crate::consequence::DEFAULT_BUDGET,
        }
    }
}

/// Compares all four pairings on random first-order sequents, both sides
/// searched to the same domain bound. Deterministic in the seed.
pub fn verify_pairs_first_order(params: &FoCorpusParams) -> Result<CorpusReport, CheckError> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut report = CorpusReport {
        sequents_checked: 0,
        comparisons: 0,
        seed: Some(params.seed),
        disagreements: Vec::new(),
    };
    for _ in 0..params.sequents {
        let sig = corpus::random_signature(&mut rng);
        let seq = corpus::random_fo_sequent(
            &mut rng,
            &sig,
            params.max_premises,
            params.max_connectives,
            params.max_quantifiers,
        );
        report.sequents_checked += 1;
        for pairing in ModePairing::all() {
            for &width in &params.widths {
                let agreement = verify_pair_on_sequent(
                    &seq,
                    pairing,
                    width,
                    Some(params.max_domain),
                    params.budget,
                )?;
                report.comparisons += 1;
                if !agreement.agree() {
                    report.disagreements.push(Disagreement {
                        pairing: pairing.label().to_string(),
                        width,
                        sequent: seq.to_string(),
                        tuple_valid: agreement.tuple_valid,
                        three_valid: agreement.three_valid,
                    });
                }
            }
        }
    }
    Ok(report)
}
