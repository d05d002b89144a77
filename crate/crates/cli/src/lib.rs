//! The `skein` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use skein_core::ideal::{check_table_symmetries, verify_table, BorromeanTable, Target};
use skein_core::oracle::CheckKind;
use skein_core::{
    borromean_presentation, borromean_table, fuzz, ideal_generators, parse_presentation,
    parse_word, trace_nf, trace_poly, Polynomial, TraceEngine,
};

/// Success.
pub const EXIT_OK: i32 = 0;
/// A verification check failed.
pub const EXIT_FAILURE: i32 = 1;
/// Bad usage, unparsable input or an I/O error.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "skein",
    version,
    about = "SL2 trace polynomials and skein algebra ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trace polynomial of a word such as `g1*g2^-1`.
    Trace {
        word: String,
        /// Reduce modulo K.
        #[arg(long)]
        normal_form: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// K and the sixteen trace differences generating the defining ideal.
    Ideal {
        path: PathBuf,
        /// Reduce each difference modulo K.
        #[arg(long)]
        normal_form: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the published Borromean rings generators and their symmetries.
    VerifyBorromean {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compare trace polynomials against random exact SL2 representations.
    Oracle {
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        max_len: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Output of one command: what goes to stdout, stderr, and the exit code.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: EXIT_USAGE,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let threads = match std::env::var("SKEIN_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Some(n),
            _ => {
                return Outcome::usage(format!(
                    "SKEIN_THREADS must be a positive integer, got `{v}`"
                ))
            }
        },
        Err(_) => None,
    };
    match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(cli.command)),
            Err(e) => Outcome::usage(e),
        },
        None => execute(cli.command),
    }
}

/// Runs [`run`] on the process arguments and writes the outcome.
pub fn main_exit_code() -> i32 {
    let outcome = run(std::env::args_os());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    outcome.code
}

pub fn execute(command: Command) -> Outcome {
    match command {
        Command::Trace {
            word,
            normal_form,
            format,
        } => cmd_trace(&word, normal_form, format),
        Command::Ideal {
            path,
            normal_form,
            format,
        } => cmd_ideal(&path, normal_form, format),
        Command::VerifyBorromean { format } => cmd_verify_borromean(borromean_table(), format),
        Command::Oracle {
            trials,
            max_len,
            seed,
            format,
        } => cmd_oracle(trials, max_len as usize, seed, format),
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

fn poly_json(p: &Polynomial) -> serde_json::Value {
    serde_json::to_value(p.to_json_terms()).expect("terms serialize")
}

pub fn cmd_trace(word: &str, normal_form: bool, format: Format) -> Outcome {
    let w = match parse_word(word) {
        Ok(w) => w,
        Err(e) => return Outcome::usage(format!("cannot parse word `{word}`: {e}")),
    };
    let p = if normal_form {
        trace_nf(&w)
    } else {
        trace_poly(&w)
    };
    match format {
        Format::Text => Outcome::ok(format!("{p}\n")),
        Format::Json => Outcome::ok(json_text(&json!({
            "word": w.to_string(),
            "normal_form": normal_form,
            "text": p.to_string(),
            "terms": poly_json(&p),
        }))),
    }
}

pub fn cmd_ideal(path: &std::path::Path, normal_form: bool, format: Format) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("cannot read {}: {e}", path.display())),
    };
    let presentation = match parse_presentation(&text) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("{}: {e}", path.display())),
    };
    let mut gens = ideal_generators(&presentation);
    if normal_form {
        gens = gens.normal_forms();
    }
    match format {
        Format::Text => {
            let mut out = format!("K: {}\n", gens.k);
            for (label, p) in &gens.diffs {
                let _ = writeln!(out, "D[{label}]: {p}");
            }
            Outcome::ok(out)
        }
        Format::Json => {
            let generators: Vec<_> = gens
                .diffs
                .iter()
                .map(|(label, p)| {
                    json!({"label": label.to_string(), "text": p.to_string(), "terms": poly_json(p)})
                })
                .collect();
            Outcome::ok(json_text(&json!({
                "normal_form": normal_form,
                "k": {"text": gens.k.to_string(), "terms": poly_json(&gens.k)},
                "generators": generators,
            })))
        }
    }
}

/// Verifies `table` against the Borromean presentation. Exit 1 if any
/// divisibility check or required symmetry fails.
pub fn cmd_verify_borromean(table: &BorromeanTable, format: Format) -> Outcome {
    let report = verify_table(&TraceEngine::new(), &borromean_presentation(), table);
    let symmetries = check_table_symmetries(table);
    let passed = report.all_passed() && symmetries.passed();
    let stdout = match format {
        Format::Json => json_text(&json!({
            "verification": report.to_json_value(),
            "symmetries": symmetries.to_json_value(),
            "passed": passed,
        })),
        Format::Text => {
            let mut out = String::new();
            for e in &report.entries {
                let target = match e.target {
                    Target::Q => "Q",
                    Target::Zero => "0",
                };
                let status = if e.passed { "pass" } else { "FAIL" };
                let _ = write!(out, "Q[{}]: {status} (target {target})", e.label);
                if let Some(r) = &e.remainder {
                    let _ = write!(out, " remainder {r}");
                }
                out.push('\n');
            }
            for c in &symmetries.required {
                let status = if c.holds { "holds" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "symmetry {} Q[{}] = Q[{}]: {status}",
                    c.map, c.source, c.target
                );
            }
            let inv = if symmetries.swap23_involution {
                "holds"
            } else {
                "FAIL"
            };
            let _ = writeln!(out, "symmetry swap23 involution: {inv}");
            for f in symmetries.self_symmetries.iter().chain(&symmetries.triple) {
                let maps: Vec<String> = f.maps.iter().map(ToString::to_string).collect();
                let maps = if maps.is_empty() {
                    "none".to_string()
                } else {
                    maps.join(" ")
                };
                let _ = writeln!(out, "observed Q[{}] -> Q[{}]: {maps}", f.source, f.target);
            }
            let _ = writeln!(out, "result: {}", if passed { "pass" } else { "FAIL" });
            out
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if passed { EXIT_OK } else { EXIT_FAILURE },
    }
}

pub fn cmd_oracle(trials: u64, max_len: usize, seed: u64, format: Format) -> Outcome {
    let report = match fuzz(trials, max_len, seed) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    match format {
        Format::Json => Outcome {
            stdout: format!("{}\n", report.to_json()),
            stderr: String::new(),
            code,
        },
        Format::Text => {
            let mut out = format!(
                "trials: {}\nmax_len: {max_len}\nseed: {seed}\nfailures: {}\n",
                report.trials,
                report.failures.len()
            );
            for f in &report.failures {
                let check = match f.check {
                    CheckKind::Word => "word",
                    CheckKind::FrickeVanishes => "fricke",
                    CheckKind::ProductRelation => "product",
                };
                let _ = writeln!(
                    out,
                    "trial {} seed {} {check}: word {} expected {} got {}",
                    f.trial, f.seed, f.word, f.expected, f.got
                );
            }
            let _ = writeln!(
                out,
                "result: {}",
                if report.passed() { "pass" } else { "FAIL" }
            );
            Outcome {
                stdout: out,
                stderr: format!("elapsed_ms: {}\n", report.elapsed.as_millis()),
                code,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_text() {
        assert_eq!(run(["skein", "trace", "g1^2"]).stdout, "x1^2 - 2\n");
        assert_eq!(run(["skein", "trace", "e"]).stdout, "2\n");
    }

    #[test]
    fn trace_json_has_two_terms() {
        let out = run(["skein", "trace", "g1*g2^-1", "--format", "json"]);
        assert_eq!(out.code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["terms"].as_array().unwrap().len(), 2);
        assert_eq!(v["text"], "x1*x2 - x12");
    }

    #[test]
    fn bad_word_is_usage_error() {
        let out = run(["skein", "trace", "g1g2"]);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(out.stderr.contains("column 3"), "{}", out.stderr);
    }

    #[test]
    fn flag_errors() {
        assert_eq!(run(["skein", "oracle", "--trials", "0"]).code, EXIT_USAGE);
        assert_eq!(run(["skein", "oracle", "--max-len", "0"]).code, EXIT_USAGE);
        assert_eq!(
            run(["skein", "trace", "g1", "--format", "xml"]).code,
            EXIT_USAGE
        );
        assert_eq!(run(["skein", "frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run(["skein", "--help"]).code, EXIT_OK);
    }

    #[test]
    fn corrupted_constant_fails_verification() {
        use skein_core::{CosetWord, Label, RelatorPair};
        let mut table = borromean_table().clone();
        let bad = Label::new(RelatorPair::AlphaBeta, CosetWord::G1G3);
        for (l, p) in table.q.iter_mut() {
            if *l == bad {
                *p += &Polynomial::constant(1);
            }
        }
        let out = cmd_verify_borromean(&table, Format::Text);
        assert_eq!(out.code, EXIT_FAILURE);
        assert!(out.stdout.contains("Q[ab,g1g3]: FAIL"), "{}", out.stdout);
        assert_eq!(out.stdout.matches("FAIL").count(), 2);
    }

    #[test]
    fn oracle_text_is_stable() {
        let a = cmd_oracle(10, 12, 7, Format::Text);
        let b = cmd_oracle(10, 12, 7, Format::Text);
        assert_eq!(a.code, EXIT_OK);
        assert_eq!(a.stdout, b.stdout);
        assert!(a.stderr.starts_with("elapsed_ms: "));
    }
}
