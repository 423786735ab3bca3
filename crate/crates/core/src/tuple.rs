//! Tuple-valued semantics: truth values are bit vectors of a fixed width
//! `n`, compared lexicographically.
//!
//! For width 2 the four values in ascending order are `⟨0,0⟩ < ⟨0,1⟩ <
//! ⟨1,0⟩ < ⟨1,1⟩`. Negation flips every component; conjunction and
//! disjunction are the lattice meet (minimum) and join (maximum) in the
//! lexicographic order. Three designation policies are supported:
//!
//! * **strict** — only the all-ones value is designated;
//! * **bossy** — the first component decides: designated iff it is 1;
//! * **tolerant** — everything except the all-zeros value is designated.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::Formula;
use crate::interp::{self, EvalError, Interpretation, LogicValue, ValueSpace};

/// Maximum supported tuple width. Values are packed into a `u16`, and all
/// the enumeration machinery would be unusable far before this bound
/// anyway.
pub const MAX_WIDTH: u8 = 16;

/// A truth value of the width-`n` tuple semantics: a bit vector
/// `⟨b1, ..., bn⟩` packed so that `b1` is the most significant bit.
///
/// The derived ordering compares widths first and then the packed bits,
/// so for values of equal width it is exactly the lexicographic order on
/// bit vectors. Values of different widths never arise in one valuation;
/// the arithmetic operations check this.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TupleValue {
    width: u8,
    bits: u16,
}

impl TupleValue {
    /// Builds a value from packed bits. The leftmost component `b1` is the
    /// most significant of the low `width` bits.
    ///
    /// # Panics
    ///
    /// Panics if `width` is 0 or exceeds [`MAX_WIDTH`], or if `bits` has a
    /// set bit outside the low `width` bits.
    pub fn from_bits(width: u8, bits: u16) -> TupleValue {
        assert!(
            (1..=MAX_WIDTH).contains(&width),
            "tuple width must be between 1 and {MAX_WIDTH}, got {width}"
        );
        assert!(
            u32::from(bits) < (1u32 << width),
            "bit pattern {bits:#b} does not fit in width {width}"
        );
        TupleValue { width, bits }
    }

    /// The all-ones value `⟨1, ..., 1⟩`, the top of the lattice.
    pub fn top(width: u8) -> TupleValue {
        TupleValue::from_bits(width, ((1u32 << width) - 1) as u16)
    }

    /// The all-zeros value `⟨0, ..., 0⟩`, the bottom of the lattice.
    pub fn bottom(width: u8) -> TupleValue {
        TupleValue::from_bits(width, 0)
    }

    pub fn width(self) -> u8 {
        self.width
    }

    /// The packed bit pattern, leftmost component most significant.
    pub fn bits(self) -> u16 {
        self.bits
    }

    /// The `i`-th component (0-based from the left), as a boolean.
    pub fn component(self, i: u8) -> bool {
        assert!(
            i < self.width,
            "component {i} out of range for width {}",
            self.width
        );
        (self.bits >> (self.width - 1 - i)) & 1 == 1
    }

    pub fn is_top(self) -> bool {
        self == TupleValue::top(self.width)
    }

    pub fn is_bottom(self) -> bool {
        self.bits == 0
    }

    /// Componentwise complement: `¬⟨b1, ..., bn⟩ = ⟨1-b1, ..., 1-bn⟩`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> TupleValue {
        TupleValue {
            width: self.width,
            bits: self.bits ^ TupleValue::top(self.width).bits,
        }
    }

    /// Lattice meet: the lexicographic minimum.
    ///
    /// # Panics
    ///
    /// Panics if the widths differ.
    pub fn meet(self, other: TupleValue) -> TupleValue {
        self.check_width(other);
        self.min(other)
    }

    /// Lattice join: the lexicographic maximum.
    ///
    /// # Panics
    ///
    /// Panics if the widths differ.
    pub fn join(self, other: TupleValue) -> TupleValue {
        self.check_width(other);
        self.max(other)
    }

    fn check_width(self, other: TupleValue) {
        assert_eq!(
            self.width, other.width,
            "cannot combine tuple values of widths {} and {}",
            self.width, other.width
        );
    }

    /// All `2^width` values in ascending (lexicographic) order.
    pub fn all(width: u8) -> impl Iterator<Item = TupleValue> {
        assert!((1..=MAX_WIDTH).contains(&width));
        (0..(1u32 << width)).map(move |bits| TupleValue {
            width,
            bits: bits as u16,
        })
    }
}

impl fmt::Display for TupleValue {
    /// Renders the components as a bit string, e.g. `10` for `⟨1,0⟩`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            write!(f, "{}", u8::from(self.component(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TupleValue {
    /// Renders in angle-bracket notation, e.g. `⟨1,0⟩`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for i in 0..self.width {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", u8::from(self.component(i)))?;
        }
        write!(f, "⟩")
    }
}

/// Error parsing a [`TupleValue`] from a bit string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TupleParseError {
    #[error("tuple value must have between 1 and {MAX_WIDTH} components, got {0}")]
    BadWidth(usize),
    #[error("tuple value components must be 0 or 1, got {0:?}")]
    BadComponent(char),
}

impl FromStr for TupleValue {
    type Err = TupleParseError;

    /// Parses a bit string such as `10` into `⟨1,0⟩`.
    fn from_str(s: &str) -> Result<TupleValue, TupleParseError> {
        if s.is_empty() || s.len() > MAX_WIDTH as usize {
            return Err(TupleParseError::BadWidth(s.len()));
        }
        let mut bits = 0u16;
        for c in s.chars() {
            match c {
                '0' => bits <<= 1,
                '1' => bits = (bits << 1) | 1,
                other => return Err(TupleParseError::BadComponent(other)),
            }
        }
        Ok(TupleValue {
            width: s.len() as u8,
            bits,
        })
    }
}

impl LogicValue for TupleValue {
    fn negate(self) -> TupleValue {
        self.neg()
    }

    fn is_least(self) -> bool {
        self.is_bottom()
    }

    fn is_greatest(self) -> bool {
        self.is_top()
    }

    // Route through the width-checked versions rather than the plain
    // `Ord` defaults.
    fn meet(self, other: TupleValue) -> TupleValue {
        TupleValue::meet(self, other)
    }

    fn join(self, other: TupleValue) -> TupleValue {
        TupleValue::join(self, other)
    }
}

/// The value space of the width-`n` tuple semantics, for plugging into the
/// generic evaluator and enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleSpace {
    width: u8,
}

impl TupleSpace {
    pub fn new(width: u8) -> TupleSpace {
        assert!((1..=MAX_WIDTH).contains(&width));
        TupleSpace { width }
    }

    pub fn width(self) -> u8 {
        self.width
    }
}

impl ValueSpace for TupleSpace {
    type Value = TupleValue;

    fn values(&self) -> Vec<TupleValue> {
        TupleValue::all(self.width).collect()
    }
}

/// A designation policy for tuple values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DesignatedMode {
    /// Only `⟨1, ..., 1⟩` is designated.
    Strict,
    /// Designated iff the first component is 1.
    Bossy,
    /// Everything except `⟨0, ..., 0⟩` is designated.
    Tolerant,
}

impl DesignatedMode {
    pub fn designates(self, v: TupleValue) -> bool {
        match self {
            DesignatedMode::Strict => v.is_top(),
            DesignatedMode::Bossy => v.component(0),
            DesignatedMode::Tolerant => !v.is_bottom(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DesignatedMode::Strict => "strict",
            DesignatedMode::Bossy => "bossy",
            DesignatedMode::Tolerant => "tolerant",
        }
    }
}

impl fmt::Display for DesignatedMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for DesignatedMode {
    type Err = String;

    fn from_str(s: &str) -> Result<DesignatedMode, String> {
        match s {
            "strict" => Ok(DesignatedMode::Strict),
            "bossy" => Ok(DesignatedMode::Bossy),
            "tolerant" => Ok(DesignatedMode::Tolerant),
            other => Err(format!(
                "unknown designation mode `{other}` (expected strict, bossy, or tolerant)"
            )),
        }
    }
}

/// Evaluates a propositional formula under an assignment of tuple values
/// to its letters.
pub fn eval_prop(
    f: &Formula,
    assignment: &BTreeMap<String, TupleValue>,
) -> Result<TupleValue, EvalError> {
    interp::eval_prop(f, assignment)
}

/// Evaluates a first-order sentence in a tuple-valued interpretation.
pub fn eval_sentence(
    f: &Formula,
    model: &Interpretation<TupleValue>,
) -> Result<TupleValue, EvalError> {
    interp::eval_sentence(f, model)
}
