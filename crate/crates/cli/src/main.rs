//! Command-line driver for the tupleval logic engine.
//!
//! Commands: `parse`, `eval`, `table`, `entails`, `explain`, `verify`.
//! Structured output is available everywhere via `--json`.
//!
//! Exit codes are a stable contract:
//!
//! * 0 — success (for `entails`: the sequent is valid; for `verify`: no
//!   failures)
//! * 1 — a countermodel or verification failure was found
//! * 2 — usage or syntax error
//! * 3 — the interpretation budget ran out before a verdict
//!
//! The `TUPLEVAL_BUDGET` environment variable overrides the default
//! interpretation budget for consequence checks.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use tupleval_core::{
    certify_countermodel, check_first_order_bounded, check_propositional, designated_atoms_table,
    explain, parse_formula, parse_sequent, run_lemma_suite, verify_pairs_first_order,
    verify_pairs_propositional, CheckError, ConsequenceMode, FoCorpusParams, Formula, ModelJson,
    PropCorpusParams, ReadingScheme, Sequent, ThreeDesignatedMode, TruthTable, Verdict,
    DEFAULT_BUDGET,
};

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tupleval",
    version,
    about = "Evaluate and compare tuple-valued, three-valued, and classical logics",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula or sequent and print its canonical form.
    ///
    /// Input containing a turnstile (`|-` or `⊢`) is read as a sequent;
    /// anything else as a single formula.
    Parse {
        /// Formula or sequent text, e.g. "~(p & q)" or "p, ~p |- q".
        input: String,
        /// Emit a JSON description instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a sentence in a model loaded from a JSON file.
    Eval {
        /// Path to a model file (the countermodel JSON schema).
        #[arg(long, value_name = "FILE")]
        model: String,
        /// The sentence to evaluate.
        formula: String,
        /// Emit the value and designation statuses as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the truth table of a propositional formula.
    Table {
        #[command(flatten)]
        mode: ModeArgs,
        /// Refuse formulas with more than this many distinct letters.
        #[arg(long, default_value_t = 4, value_name = "COUNT")]
        max_atoms: usize,
        /// The propositional formula to tabulate.
        formula: String,
        /// Emit the table as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check whether a sequent is valid under a consequence mode.
    ///
    /// Exits 0 when valid, 1 when a countermodel is found (and printed),
    /// 3 when the interpretation budget runs out first.
    Entails {
        #[command(flatten)]
        mode: ModeArgs,
        /// Domain-size bound for first-order sequents (propositional
        /// sequents are checked exhaustively and ignore this).
        #[arg(long, default_value_t = 2, value_name = "SIZE")]
        max_domain: usize,
        /// The sequent, e.g. "p, ~p |- q" or "|- p | ~p".
        sequent: String,
        /// Emit the verdict (and countermodel, if any) as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Render a tuple value as an English gloss.
    Explain {
        /// Reading scheme: plain, agents, respects, or custom.
        #[arg(long, default_value = "plain")]
        scheme: String,
        /// Labels for the respects/custom schemes, one per tuple position.
        #[arg(long, value_delimiter = ',', value_name = "LABELS")]
        labels: Vec<String>,
        /// The value as a bit string, e.g. "10".
        value: String,
        /// Emit the gloss as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run the translation-lemma or mode-equivalence verification suites.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

/// Consequence-mode selection shared by `table` and `entails`.
#[derive(Args)]
struct ModeArgs {
    /// Value semantics: "three" or "tuple".
    #[arg(long, default_value = "three")]
    semantics: String,
    /// Designation mode: for three-valued semantics one of k3, lp,
    /// classical, st; for tuple semantics one of strict, bossy, tolerant,
    /// st. Defaults to classical for three-valued semantics and tolerant
    /// for tuple semantics.
    #[arg(long)]
    mode: Option<String>,
    /// Tuple width (ignored for three-valued semantics).
    #[arg(long = "n", default_value_t = 2, value_name = "WIDTH")]
    width: u8,
}

impl ModeArgs {
    fn resolve(&self) -> Result<ConsequenceMode, Failure> {
        if self.semantics == "tuple" && !(1..=16).contains(&self.width) {
            return Err(Failure::usage(format!(
                "tuple width must be between 1 and 16, got {}",
                self.width
            )));
        }
        let mode = match &self.mode {
            Some(m) => m.as_str(),
            None if self.semantics == "tuple" => "tolerant",
            None => "classical",
        };
        ConsequenceMode::from_parts(&self.semantics, mode, self.width).map_err(Failure::usage)
    }
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Check the collapse and embedding lemmas on random models.
    Lemmas {
        /// Tuple widths to test (comma-separated; each must be at least 2).
        #[arg(long = "n", value_delimiter = ',', default_values_t = vec![2], value_name = "WIDTHS")]
        widths: Vec<u8>,
        /// Domain-size bound for the random models.
        #[arg(long = "domains", default_value_t = 2, value_name = "SIZE")]
        max_domain: usize,
        /// Number of (model, sentence) samples per lemma.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// RNG seed; identical seeds give byte-identical reports.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check the four mode-equivalence theorems on sequent corpora.
    Theorems {
        /// Tuple widths to test (comma-separated; each must be at least 2).
        #[arg(long = "n", value_delimiter = ',', default_values_t = vec![2], value_name = "WIDTHS")]
        widths: Vec<u8>,
        /// Letters in the exhaustive propositional corpus.
        #[arg(long, default_value_t = 2)]
        atoms: usize,
        /// Connective-nesting depth of the enumerated formulas.
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Number of random first-order sequents.
        #[arg(long, default_value_t = 1000)]
        sequents: u64,
        /// Domain-size bound for the first-order search.
        #[arg(long = "domains", default_value_t = 2, value_name = "SIZE")]
        max_domain: usize,
        /// RNG seed for the first-order corpus.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the full reports as JSON.
        #[arg(long)]
        json: bool,
    },
}

/// A command failure: what to print on stderr and the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn budget(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_BUDGET,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (e.g. `tupleval ... | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Parse { input, json } => cmd_parse(&input, json),
        Command::Eval {
            model,
            formula,
            json,
        } => cmd_eval(&model, &formula, json),
        Command::Table {
            mode,
            max_atoms,
            formula,
            json,
        } => cmd_table(&mode, max_atoms, &formula, json),
        Command::Entails {
            mode,
            max_domain,
            sequent,
            json,
        } => cmd_entails(&mode, max_domain, &sequent, json),
        Command::Explain {
            scheme,
            labels,
            value,
            json,
        } => cmd_explain(&scheme, &labels, &value, json),
        Command::Verify { suite } => cmd_verify(suite),
    }
}

/// Resolves the interpretation budget, honoring `TUPLEVAL_BUDGET`.
fn budget() -> Result<u64, Failure> {
    match std::env::var("TUPLEVAL_BUDGET") {
        Ok(text) => match text.trim().parse::<u64>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Failure::usage(format!(
                "TUPLEVAL_BUDGET must be a positive integer, got `{text}`"
            ))),
        },
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn parse_failure(e: &tupleval_core::ParseError, input: &str) -> Failure {
    Failure::usage(format!("{e}\n{}", e.render(input)))
}

fn to_pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize to JSON")
}

fn cmd_parse(input: &str, json: bool) -> Result<u8, Failure> {
    let is_sequent = input.contains("|-") || input.contains('⊢');
    if is_sequent {
        let seq: Sequent = parse_sequent(input, None).map_err(|e| parse_failure(&e, input))?;
        if json {
            let premises: Vec<String> = seq.premises().iter().map(|f| f.to_string()).collect();
            println!(
                "{}",
                to_pretty(&json!({
                    "kind": "sequent",
                    "canonical": seq.to_string(),
                    "premises": premises,
                    "conclusion": seq.conclusion().to_string(),
                    "propositional": seq.is_propositional(),
                }))
            );
        } else {
            println!("{seq}");
        }
    } else {
        let f: Formula = parse_formula(input, None).map_err(|e| parse_failure(&e, input))?;
        if json {
            let free: Vec<String> = f.free_variables().into_iter().collect();
            println!(
                "{}",
                to_pretty(&json!({
                    "kind": "formula",
                    "canonical": f.to_string(),
                    "propositional": f.is_propositional(),
                    "sentence": f.is_sentence(),
                    "free_variables": free,
                    "depth": f.depth(),
                }))
            );
        } else {
            println!("{f}");
        }
    }
    Ok(0)
}

fn cmd_eval(model_path: &str, formula: &str, json: bool) -> Result<u8, Failure> {
    let text = fs::read_to_string(model_path)
        .map_err(|e| Failure::usage(format!("cannot read model file `{model_path}`: {e}")))?;
    let model: ModelJson = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("model file `{model_path}` is not valid: {e}")))?;
    let f: Formula = parse_formula(formula, None).map_err(|e| parse_failure(&e, formula))?;

    if model.semantics == "three" {
        let m = model
            .to_three()
            .map_err(|e| Failure::usage(format!("model file `{model_path}` is not valid: {e}")))?;
        let value = tupleval_core::threeval::eval_sentence(&f, &m)
            .map_err(|e| Failure::usage(e.to_string()))?;
        let classical = value
            .is_classical()
            .then(|| ThreeDesignatedMode::Classical.designates(value));
        if json {
            let mut out = json!({
                "formula": f.to_string(),
                "semantics": "three",
                "value": value.to_string(),
                "designated": {
                    "k3": ThreeDesignatedMode::K3.designates(value),
                    "lp": ThreeDesignatedMode::Lp.designates(value),
                },
            });
            if let Some(c) = classical {
                out["designated"]["classical"] = json!(c);
            }
            println!("{}", to_pretty(&out));
        } else {
            let mut policies = format!(
                "k3: {}, lp: {}",
                yes_no(ThreeDesignatedMode::K3.designates(value)),
                yes_no(ThreeDesignatedMode::Lp.designates(value))
            );
            if let Some(c) = classical {
                policies.push_str(&format!(", classical: {}", yes_no(c)));
            }
            println!("{f} = {value}  (designated under {policies})");
        }
    } else {
        let (m, width) = model
            .to_tuple()
            .map_err(|e| Failure::usage(format!("model file `{model_path}` is not valid: {e}")))?;
        let value = tupleval_core::tuple::eval_sentence(&f, &m)
            .map_err(|e| Failure::usage(e.to_string()))?;
        use tupleval_core::DesignatedMode::{Bossy, Strict, Tolerant};
        if json {
            println!(
                "{}",
                to_pretty(&json!({
                    "formula": f.to_string(),
                    "semantics": "tuple",
                    "width": width,
                    "value": value.to_string(),
                    "designated": {
                        "strict": Strict.designates(value),
                        "bossy": Bossy.designates(value),
                        "tolerant": Tolerant.designates(value),
                    },
                }))
            );
        } else {
            println!(
                "{f} = {value}  (designated under strict: {}, bossy: {}, tolerant: {})",
                yes_no(Strict.designates(value)),
                yes_no(Bossy.designates(value)),
                yes_no(Tolerant.designates(value))
            );
        }
    }
    Ok(0)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_table(mode: &ModeArgs, max_atoms: usize, formula: &str, json: bool) -> Result<u8, Failure> {
    let f: Formula = parse_formula(formula, None).map_err(|e| parse_failure(&e, formula))?;
    let mode = mode.resolve()?;
    let table =
        designated_atoms_table(&f, &mode, max_atoms).map_err(|e| Failure::usage(e.to_string()))?;
    if json {
        println!("{}", to_pretty(&table));
    } else {
        print!("{}", render_table(&table));
    }
    Ok(0)
}

fn render_table(table: &TruthTable) -> String {
    let mut headers: Vec<String> = table.atoms.clone();
    headers.push(table.formula.clone());
    headers.push("designated".to_string());
    let mut grid: Vec<Vec<String>> = vec![headers];
    for row in &table.rows {
        let mut cells = row.inputs.clone();
        cells.push(row.value.clone());
        cells.push(yes_no(row.designated).to_string());
        grid.push(cells);
    }
    let columns = grid[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = format!("mode: {}\n", table.mode);
    for (i, row) in grid.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
        if i == 0 {
            let total = widths.iter().sum::<usize>() + 2 * (columns - 1);
            out.push_str(&"-".repeat(total));
            out.push('\n');
        }
    }
    out
}

fn cmd_entails(
    mode: &ModeArgs,
    max_domain: usize,
    sequent: &str,
    json: bool,
) -> Result<u8, Failure> {
    let seq: Sequent = parse_sequent(sequent, None).map_err(|e| parse_failure(&e, sequent))?;
    let mode = mode.resolve()?;
    let budget = budget()?;
    let verdict = if seq.is_propositional() {
        check_propositional(&seq, &mode, budget)
    } else {
        check_first_order_bounded(&seq, &mode, max_domain, budget)
    }
    .map_err(map_check_error)?;

    if json {
        println!("{}", to_pretty(&verdict));
    } else {
        render_verdict(&seq, &mode, &verdict);
    }
    Ok(if verdict.valid { 0 } else { EXIT_INVALID })
}

fn render_verdict(seq: &Sequent, mode: &ConsequenceMode, verdict: &Verdict) {
    if verdict.valid {
        match verdict.max_domain {
            Some(bound) => println!(
                "valid under {mode} for domains up to size {bound} ({} interpretations checked)",
                verdict.interpretations_checked
            ),
            None => println!(
                "valid under {mode} ({} interpretations checked)",
                verdict.interpretations_checked
            ),
        }
    } else {
        let cm = verdict
            .countermodel
            .as_ref()
            .expect("invalid verdicts carry a countermodel");
        certify_countermodel(seq, mode, cm)
            .expect("countermodels are certified before being reported");
        println!("invalid under {mode}: countermodel found");
        println!("{}", to_pretty(cm));
    }
}

fn map_check_error(e: CheckError) -> Failure {
    match e {
        CheckError::BudgetExhausted { .. } => {
            Failure::budget(format!("{e}; raise TUPLEVAL_BUDGET to search further"))
        }
        other => Failure::usage(other.to_string()),
    }
}

fn cmd_explain(scheme: &str, labels: &[String], value: &str, json: bool) -> Result<u8, Failure> {
    let value: tupleval_core::TupleValue = value
        .parse()
        .map_err(|e: tupleval_core::tuple::TupleParseError| Failure::usage(e.to_string()))?;
    let scheme =
        ReadingScheme::from_parts(scheme, labels).map_err(|e| Failure::usage(e.to_string()))?;
    let gloss = explain(value, &scheme).map_err(|e| Failure::usage(e.to_string()))?;
    if json {
        println!(
            "{}",
            to_pretty(&json!({
                "value": value.to_string(),
                "width": value.width(),
                "scheme": scheme.kind(),
                "gloss": gloss,
            }))
        );
    } else {
        println!("{gloss}");
    }
    Ok(0)
}

fn check_widths(widths: &[u8]) -> Result<(), Failure> {
    if widths.is_empty() {
        return Err(Failure::usage("at least one width is required"));
    }
    for &w in widths {
        if !(2..=16).contains(&w) {
            return Err(Failure::usage(format!(
                "width must be between 2 and 16 (the embedding of 1/2 needs a mixed tuple), got {w}"
            )));
        }
    }
    Ok(())
}

/// Counts the formulas the exhaustive corpus would enumerate.
fn corpus_formula_count(atoms: usize, depth: usize) -> u128 {
    let mut count = atoms as u128;
    for _ in 0..depth {
        count = atoms as u128 + count + 2 * count * count;
    }
    count
}

fn cmd_verify(suite: VerifySuite) -> Result<u8, Failure> {
    match suite {
        VerifySuite::Lemmas {
            widths,
            max_domain,
            samples,
            seed,
            json,
        } => {
            check_widths(&widths)?;
            if max_domain == 0 {
                return Err(Failure::usage("domain bound must be at least 1"));
            }
            let report = run_lemma_suite(samples, &widths, max_domain, seed);
            if json {
                println!("{}", to_pretty(&report));
            } else {
                println!(
                    "collapse lemma: {} instances checked\nembedding lemma: {} instances checked\nfailures: {} (seed {})",
                    report.collapse_checked,
                    report.embed_checked,
                    report.failures.len(),
                    report.seed
                );
                for failure in report.failures.iter().take(5) {
                    println!("  {failure:?}");
                }
            }
            Ok(if report.passed() { 0 } else { EXIT_INVALID })
        }
        VerifySuite::Theorems {
            widths,
            atoms,
            depth,
            sequents,
            max_domain,
            seed,
            json,
        } => {
            check_widths(&widths)?;
            if atoms == 0 || atoms > 4 {
                return Err(Failure::usage("atoms must be between 1 and 4"));
            }
            if max_domain == 0 {
                return Err(Failure::usage("domain bound must be at least 1"));
            }
            let formulas = corpus_formula_count(atoms, depth);
            let premise_sets = 1 + formulas + formulas * (formulas - 1) / 2;
            if premise_sets * formulas > 100_000_000 {
                return Err(Failure::usage(format!(
                    "the exhaustive corpus would contain {} sequents; lower --atoms or --depth",
                    premise_sets * formulas
                )));
            }

            let prop = verify_pairs_propositional(&PropCorpusParams {
                atoms,
                max_depth: depth,
                max_premises: 2,
                widths: widths.clone(),
            });
            let fo = verify_pairs_first_order(&FoCorpusParams {
                sequents,
                widths,
                max_domain,
                seed,
                ..FoCorpusParams::default()
            })
            .map_err(map_check_error)?;

            let passed = prop.passed() && fo.passed();
            if json {
                println!(
                    "{}",
                    to_pretty(&json!({
                        "propositional": prop,
                        "first_order": fo,
                    }))
                );
            } else {
                println!(
                    "propositional corpus: {} sequents, {} comparisons, {} disagreements",
                    prop.sequents_checked,
                    prop.comparisons,
                    prop.disagreements.len()
                );
                println!(
                    "first-order corpus: {} sequents, {} comparisons, {} disagreements (seed {})",
                    fo.sequents_checked,
                    fo.comparisons,
                    fo.disagreements.len(),
                    seed
                );
                for d in prop.disagreements.iter().chain(&fo.disagreements).take(5) {
                    println!("  {d:?}");
                }
                if passed {
                    println!("all mode pairings agree");
                }
            }
            Ok(if passed { 0 } else { EXIT_INVALID })
        }
    }
}
