//! Natural-language readings of tuple values.
//!
//! A tuple value ⟨b₁, …, bₙ⟩ packs n classical verdicts into one truth
//! value, and each position can be given an informal interpretation.  This
//! module renders a value under one of four fixed template schemes:
//!
//! * `plain` — the canonical glosses for width 2: ⟨1,1⟩ is "true, and true
//!   only", ⟨1,0⟩ is "true, but also false", and so on.
//! * `agents` — position i reports the verdict of the i-th of n agents.
//! * `respects` — position i reports whether the predicate applies in the
//!   i-th respect, named by a caller-supplied label (e.g. a vague noun can
//!   hold "according to gender, but not according to stereotype").
//! * `custom` — bare per-position verdicts under caller-supplied labels.
//!
//! The renderings are deterministic templates, not prose generation; they
//! exist so that the CLI and demo can answer "what does ⟨1,0⟩ *mean*?".

use crate::tuple::TupleValue;
use thiserror::Error;

/// Errors arising when a reading scheme is applied to an ill-matched value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReadingError {
    /// The `plain` scheme has fixed glosses only for width-2 values.
    #[error("the plain reading is defined only for width 2, got width {0}")]
    PlainRequiresWidthTwo(u8),
    /// A labelled scheme was given a different number of labels than the
    /// value has positions.
    #[error("scheme needs one label per tuple position: got {labels} labels for width {width}")]
    LabelCountMismatch { labels: usize, width: u8 },
    /// An unrecognized scheme name was supplied.
    #[error("unknown reading scheme `{0}` (expected plain, agents, respects, or custom)")]
    UnknownScheme(String),
    /// A labelled scheme was requested without labels.
    #[error("scheme `{0}` requires --labels with one label per tuple position")]
    LabelsRequired(String),
    /// A fixed scheme was given labels it cannot use.
    #[error("scheme `{0}` does not take labels")]
    LabelsForbidden(String),
}

/// A template for rendering a tuple value as an English gloss.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReadingScheme {
    /// The four fixed width-2 glosses ("true, and true only", …).
    Plain,
    /// Each position is the verdict of one agent.
    Agents,
    /// Each position says whether the predicate holds in a named respect.
    Respects(Vec<String>),
    /// Each position is a bare labelled verdict.
    Custom(Vec<String>),
}

impl ReadingScheme {
    /// Builds a scheme from a CLI-style kind name plus optional labels.
    pub fn from_parts(kind: &str, labels: &[String]) -> Result<Self, ReadingError> {
        match kind {
            "plain" | "agents" => {
                if !labels.is_empty() {
                    return Err(ReadingError::LabelsForbidden(kind.to_owned()));
                }
                Ok(if kind == "plain" {
                    ReadingScheme::Plain
                } else {
                    ReadingScheme::Agents
                })
            }
            "respects" | "custom" => {
                if labels.is_empty() {
                    return Err(ReadingError::LabelsRequired(kind.to_owned()));
                }
                let labels = labels.to_vec();
                Ok(if kind == "respects" {
                    ReadingScheme::Respects(labels)
                } else {
                    ReadingScheme::Custom(labels)
                })
            }
            other => Err(ReadingError::UnknownScheme(other.to_owned())),
        }
    }

    /// The scheme's CLI name.
    pub fn kind(&self) -> &'static str {
        match self {
            ReadingScheme::Plain => "plain",
            ReadingScheme::Agents => "agents",
            ReadingScheme::Respects(_) => "respects",
            ReadingScheme::Custom(_) => "custom",
        }
    }
}

/// Renders `value` under `scheme` as a one-line English gloss.
pub fn explain(value: TupleValue, scheme: &ReadingScheme) -> Result<String, ReadingError> {
    match scheme {
        ReadingScheme::Plain => explain_plain(value),
        ReadingScheme::Agents => Ok(explain_agents(value)),
        ReadingScheme::Respects(labels) => {
            check_labels(value, labels)?;
            Ok(explain_respects(value, labels))
        }
        ReadingScheme::Custom(labels) => {
            check_labels(value, labels)?;
            Ok(explain_custom(value, labels))
        }
    }
}

fn check_labels(value: TupleValue, labels: &[String]) -> Result<(), ReadingError> {
    if labels.len() != usize::from(value.width()) {
        return Err(ReadingError::LabelCountMismatch {
            labels: labels.len(),
            width: value.width(),
        });
    }
    Ok(())
}

fn explain_plain(value: TupleValue) -> Result<String, ReadingError> {
    if value.width() != 2 {
        return Err(ReadingError::PlainRequiresWidthTwo(value.width()));
    }
    let gloss = match (value.component(0), value.component(1)) {
        (true, true) => "true, and true only",
        (true, false) => "true, but also false",
        (false, true) => "false, but also true",
        (false, false) => "false, and false only",
    };
    Ok(gloss.to_owned())
}

const NUMBER_WORDS: [&str; 17] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
];

fn explain_agents(value: TupleValue) -> String {
    let width = usize::from(value.width());
    if value.is_top() || value.is_bottom() {
        let verdict = if value.is_top() { "true" } else { "false" };
        return match width {
            1 => format!("the agent judges {verdict}"),
            2 => format!("both agents judge {verdict}"),
            _ => format!("all {} agents judge {verdict}", NUMBER_WORDS[width]),
        };
    }
    let parts: Vec<String> = (0..value.width())
        .map(|i| {
            let verdict = if value.component(i) { "true" } else { "false" };
            format!("agent {} judges {verdict}", u32::from(i) + 1)
        })
        .collect();
    parts.join(", ")
}

fn explain_respects(value: TupleValue, labels: &[String]) -> String {
    let mut out = String::new();
    for (i, label) in labels.iter().enumerate() {
        let i = i as u8;
        let positive = value.component(i);
        if i == 0 {
            if positive {
                out.push_str(&format!("holds according to {label}"));
            } else {
                out.push_str(&format!("does not hold according to {label}"));
            }
            continue;
        }
        let previous = value.component(i - 1);
        let joiner = if positive == previous {
            ", and "
        } else {
            ", but "
        };
        out.push_str(joiner);
        if positive {
            out.push_str(&format!("according to {label}"));
        } else {
            out.push_str(&format!("not according to {label}"));
        }
    }
    out
}

fn explain_custom(value: TupleValue, labels: &[String]) -> String {
    let parts: Vec<String> = labels
        .iter()
        .enumerate()
        .map(|(i, label)| {
            let verdict = if value.component(i as u8) {
                "true"
            } else {
                "false"
            };
            format!("{label}: {verdict}")
        })
        .collect();
    parts.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(text: &str) -> TupleValue {
        text.parse().expect("test literal parses")
    }

    #[test]
    fn plain_glosses_cover_all_four_pairs() {
        let cases = [
            ("11", "true, and true only"),
            ("10", "true, but also false"),
            ("01", "false, but also true"),
            ("00", "false, and false only"),
        ];
        for (bits, expected) in cases {
            assert_eq!(
                explain(value(bits), &ReadingScheme::Plain).unwrap(),
                expected,
                "gloss for {bits}"
            );
        }
    }

    #[test]
    fn plain_rejects_other_widths() {
        let err = explain(value("101"), &ReadingScheme::Plain).unwrap_err();
        assert_eq!(err, ReadingError::PlainRequiresWidthTwo(3));
    }

    #[test]
    fn agents_collapses_uniform_values() {
        assert_eq!(
            explain(value("111"), &ReadingScheme::Agents).unwrap(),
            "all three agents judge true"
        );
        assert_eq!(
            explain(value("00"), &ReadingScheme::Agents).unwrap(),
            "both agents judge false"
        );
        assert_eq!(
            explain(value("1"), &ReadingScheme::Agents).unwrap(),
            "the agent judges true"
        );
    }

    #[test]
    fn agents_lists_split_verdicts_per_position() {
        assert_eq!(
            explain(value("10"), &ReadingScheme::Agents).unwrap(),
            "agent 1 judges true, agent 2 judges false"
        );
        assert_eq!(
            explain(value("011"), &ReadingScheme::Agents).unwrap(),
            "agent 1 judges false, agent 2 judges true, agent 3 judges true"
        );
    }

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| (*s).to_owned()).collect()
    }

    #[test]
    fn respects_follows_the_but_template() {
        let scheme = ReadingScheme::Respects(labels(&["gender", "stereotype"]));
        assert_eq!(
            explain(value("10"), &scheme).unwrap(),
            "holds according to gender, but not according to stereotype"
        );
        assert_eq!(
            explain(value("11"), &scheme).unwrap(),
            "holds according to gender, and according to stereotype"
        );
        assert_eq!(
            explain(value("01"), &scheme).unwrap(),
            "does not hold according to gender, but according to stereotype"
        );
        assert_eq!(
            explain(value("00"), &scheme).unwrap(),
            "does not hold according to gender, and not according to stereotype"
        );
    }

    #[test]
    fn respects_handles_longer_runs() {
        let scheme = ReadingScheme::Respects(labels(&["colour", "shape", "size"]));
        assert_eq!(
            explain(value("110"), &scheme).unwrap(),
            "holds according to colour, and according to shape, but not according to size"
        );
    }

    #[test]
    fn labelled_schemes_require_matching_label_count() {
        let scheme = ReadingScheme::Respects(labels(&["gender"]));
        assert_eq!(
            explain(value("10"), &scheme).unwrap_err(),
            ReadingError::LabelCountMismatch {
                labels: 1,
                width: 2
            }
        );
    }

    #[test]
    fn custom_renders_bare_verdicts() {
        let scheme = ReadingScheme::Custom(labels(&["expert", "novice"]));
        assert_eq!(
            explain(value("10"), &scheme).unwrap(),
            "expert: true, novice: false"
        );
    }

    #[test]
    fn from_parts_builds_and_validates() {
        assert_eq!(
            ReadingScheme::from_parts("plain", &[]).unwrap(),
            ReadingScheme::Plain
        );
        assert_eq!(
            ReadingScheme::from_parts("agents", &[]).unwrap(),
            ReadingScheme::Agents
        );
        assert_eq!(
            ReadingScheme::from_parts("respects", &labels(&["a", "b"])).unwrap(),
            ReadingScheme::Respects(labels(&["a", "b"]))
        );
        assert!(matches!(
            ReadingScheme::from_parts("respects", &[]),
            Err(ReadingError::LabelsRequired(_))
        ));
        assert!(matches!(
            ReadingScheme::from_parts("plain", &labels(&["a"])),
            Err(ReadingError::LabelsForbidden(_))
        ));
        assert!(matches!(
            ReadingScheme::from_parts("nope", &[]),
            Err(ReadingError::UnknownScheme(_))
        ));
    }
}
