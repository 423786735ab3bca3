//! Three-valued semantics over `{0, 1/2, 1}` with the strong Kleene
//! operations, plus its two-valued (classical) fragment.
//!
//! Negation is `1 - x`; conjunction and disjunction are minimum and
//! maximum in the order `0 < 1/2 < 1`. The designation policies are K3
//! (only `1` designated), LP (`1` and `1/2` designated), and classical,
//! which coincides with both on two-valued interpretations and is
//! undefined on the middle value.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::Formula;
use crate::interp::{self, EvalError, Interpretation, LogicValue, ValueSpace};

/// A truth value of the strong Kleene scheme. The derived ordering is the
/// truth order `0 < 1/2 < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreeValue {
    Zero,
    Half,
    One,
}

impl ThreeValue {
    /// Negation: `1 - x`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> ThreeValue {
        match self {
            ThreeValue::Zero => ThreeValue::One,
            ThreeValue::Half => ThreeValue::Half,
            ThreeValue::One => ThreeValue::Zero,
        }
    }

    /// Conjunction: minimum in the truth order.
    pub fn meet(self, other: ThreeValue) -> ThreeValue {
        self.min(other)
    }

    /// Disjunction: maximum in the truth order.
    pub fn join(self, other: ThreeValue) -> ThreeValue {
        self.max(other)
    }

    /// The three values in ascending order.
    pub fn all() -> [ThreeValue; 3] {
        [ThreeValue::Zero, ThreeValue::Half, ThreeValue::One]
    }

    /// The two classical values in ascending order.
    pub fn classical() -> [ThreeValue; 2] {
        [ThreeValue::Zero, ThreeValue::One]
    }

    pub fn is_classical(self) -> bool {
        self != ThreeValue::Half
    }
}

impl fmt::Display for ThreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThreeValue::Zero => "0",
            ThreeValue::Half => "1/2",
            ThreeValue::One => "1",
        })
    }
}

/// Error parsing a [`ThreeValue`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected one of 0, 1/2, 1, got {0:?}")]
pub struct ThreeParseError(String);

impl FromStr for ThreeValue {
    type Err = ThreeParseError;

    fn from_str(s: &str) -> Result<ThreeValue, ThreeParseError> {
        match s {
            "0" => Ok(ThreeValue::Zero),
            "1/2" | "0.5" | "half" => Ok(ThreeValue::Half),
            "1" => Ok(ThreeValue::One),
            other => Err(ThreeParseError(other.to_string())),
        }
    }
}

impl LogicValue for ThreeValue {
    fn negate(self) -> ThreeValue {
        self.neg()
    }

    fn is_least(self) -> bool {
        self == ThreeValue::Zero
    }

    fn is_greatest(self) -> bool {
        self == ThreeValue::One
    }
}

/// The full three-valued space `{0, 1/2, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ThreeSpace;

impl ValueSpace for ThreeSpace {
    type Value = ThreeValue;

    fn values(&self) -> Vec<ThreeValue> {
        ThreeValue::all().to_vec()
    }
}

/// The classical (two-valued) subspace `{0, 1}` of [`ThreeSpace`].
/// Interpretations drawn from this space never produce `1/2`, because the
/// strong Kleene operations are closed on classical values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassicalSpace;

impl ValueSpace for ClassicalSpace {
    type Value = ThreeValue;

    fn values(&self) -> Vec<ThreeValue> {
        ThreeValue::classical().to_vec()
    }
}

/// A designation policy for three-valued semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreeDesignatedMode {
    /// K3: only `1` is designated.
    K3,
    /// LP: `1` and `1/2` are designated.
    Lp,
    /// Classical: `1` is designated, `0` is not, and the policy is only
    /// defined on two-valued interpretations.
    Classical,
}

impl ThreeDesignatedMode {
    /// Whether `v` is designated.
    ///
    /// # Panics
    ///
    /// The classical policy panics on `1/2`: callers restrict themselves
    /// to two-valued interpretations, so a middle value reaching this
    /// point is a bug, not an answerable question.
    pub fn designates(self, v: ThreeValue) -> bool {
        match self {
            ThreeDesignatedMode::K3 => v == ThreeValue::One,
            ThreeDesignatedMode::Lp => v != ThreeValue::Zero,
            ThreeDesignatedMode::Classical => match v {
                ThreeValue::One => true,
                ThreeValue::Zero => false,
                ThreeValue::Half => {
                    panic!("classical designation is undefined on 1/2")
                }
            },
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ThreeDesignatedMode::K3 => "k3",
            ThreeDesignatedMode::Lp => "lp",
            ThreeDesignatedMode::Classical => "classical",
        }
    }
}

impl fmt::Display for ThreeDesignatedMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ThreeDesignatedMode {
    type Err = String;

    fn from_str(s: &str) -> Result<ThreeDesignatedMode, String> {
        match s {
            "k3" | "K3" => Ok(ThreeDesignatedMode::K3),
            "lp" | "LP" => Ok(ThreeDesignatedMode::Lp),
            "classical" => Ok(ThreeDesignatedMode::Classical),
            other => Err(format!(
                "unknown designation mode `{other}` (expected k3, lp, or classical)"
            )),
        }
    }
}

/// Evaluates a propositional formula under a three-valued assignment.
pub fn eval_prop(
    f: &Formula,
    assignment: &std::collections::BTreeMap<String, ThreeValue>,
) -> Result<ThreeValue, EvalError> {
    interp::eval_prop(f, assignment)
}

/// Evaluates a first-order sentence in a three-valued interpretation.
pub fn eval_sentence(
    f: &Formula,
    model: &Interpretation<ThreeValue>,
) -> Result<ThreeValue, EvalError> {
    interp::eval_sentence(f, model)
}

#[cfg(test)]
mod tests {
    use super::ThreeValue::{Half, One, Zero};
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn negation_table() {
        assert_eq!(Zero.neg(), One);
        assert_eq!(Half.neg(), Half);
        assert_eq!(One.neg(), Zero);
    }

    #[test]
    fn meet_and_join_are_min_and_max() {
        assert_eq!(One.meet(Half), Half);
        assert_eq!(Half.meet(Zero), Zero);
        assert_eq!(Half.join(Zero), Half);
        assert_eq!(One.join(Half), One);
        assert_eq!(Half.meet(Half), Half);
        assert_eq!(Half.join(Half), Half);
    }

    #[test]
    fn designation_policies() {
        assert!(ThreeDesignatedMode::K3.designates(One));
        assert!(!ThreeDesignatedMode::K3.designates(Half));
        assert!(!ThreeDesignatedMode::K3.designates(Zero));
        assert!(ThreeDesignatedMode::Lp.designates(One));
        assert!(ThreeDesignatedMode::Lp.designates(Half));
        assert!(!ThreeDesignatedMode::Lp.designates(Zero));
        assert!(ThreeDesignatedMode::Classical.designates(One));
        assert!(!ThreeDesignatedMode::Classical.designates(Zero));
    }

    #[test]
    #[should_panic(expected = "undefined on 1/2")]
    fn classical_designation_rejects_the_middle_value() {
        ThreeDesignatedMode::Classical.designates(Half);
    }

    #[test]
    fn eval_prop_matches_hand_computation() {
        // v(p) = 1/2, v(q) = 0:
        //   ~p     = 1/2
        //   p & q  = 0
        //   p | q  = 1/2
        //   p | ~p = 1/2
        let mut a = BTreeMap::new();
        a.insert("p".to_string(), Half);
        a.insert("q".to_string(), Zero);
        let p = Formula::letter("p");
        let q = Formula::letter("q");
        assert_eq!(eval_prop(&Formula::not(p.clone()), &a).unwrap(), Half);
        assert_eq!(
            eval_prop(&Formula::and(p.clone(), q.clone()), &a).unwrap(),
            Zero
        );
        assert_eq!(
            eval_prop(&Formula::or(p.clone(), q.clone()), &a).unwrap(),
            Half
        );
        let lem = Formula::or(p.clone(), Formula::not(p));
        assert_eq!(eval_prop(&lem, &a).unwrap(), Half);
    }

    #[test]
    fn classical_space_is_closed_under_the_operations() {
        for &a in &ThreeValue::classical() {
            assert!(a.neg().is_classical());
            for &b in &ThreeValue::classical() {
                assert!(a.meet(b).is_classical());
                assert!(a.join(b).is_classical());
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for v in ThreeValue::all() {
            assert_eq!(v.to_string().parse::<ThreeValue>().unwrap(), v);
        }
        assert!("2".parse::<ThreeValue>().is_err());
    }
}
