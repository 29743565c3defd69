//! Command dispatch shared by the binary and the tests.

use std::fmt::Write;

use hkc_core::transforms::{
    extend_by_conductor, hk_generators_of, minimal_subset, normalize_parameter, rings_equal,
    torsion_witness, truncate_parametrization,
};
use hkc_core::{analyze, AnalysisConfig, HkProfile, RingReport, Series};
use serde_json::{json, Value};
use thiserror::Error;

use crate::parse::{parse_generators, parse_series, InputError, ParsedInput};
use crate::report::{self, series_list};

pub const DEFAULT_MAX_PRECISION: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Hk,
    Semigroup,
    /// Membership of one series.
    Member(String),
    /// Equality with each listed parametrization.
    Equal(Vec<String>),
    Truncate,
    Normalize,
    Extend,
    Torsion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub precision_override: Option<usize>,
    pub max_precision: usize,
    pub output_mode: OutputMode,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            precision_override: None,
            max_precision: DEFAULT_MAX_PRECISION,
            output_mode: OutputMode::Text,
        }
    }
}

impl Options {
    pub fn config(&self) -> AnalysisConfig {
        AnalysisConfig {
            initial_precision: self.precision_override,
            max_precision: self.max_precision,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Math(#[from] hkc_core::Error),
}

impl RunError {
    /// 1 for input problems, 2 for mathematical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => 1,
            RunError::Math(_) => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        let kind = match self {
            RunError::Input(_) => "input",
            RunError::Math(_) => "math",
        };
        json!({ "kind": kind, "message": self.to_string() })
    }
}

/// Result of one command in both renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub json: Value,
    pub text: String,
}

impl Output {
    pub fn render(&self, mode: OutputMode) -> String {
        match mode {
            OutputMode::Json => self.json.to_string(),
            OutputMode::Text => self.text.trim_end().to_string(),
        }
    }
}

// Herzog-Kunz generators split off the generators as typed; `input_index`
// refers to positions in `raw`.
fn hk_of_input(input: &ParsedInput, r: &RingReport) -> Result<HkProfile, RunError> {
    let keep = minimal_subset(r);
    let ys: Vec<Series> = keep.iter().map(|&i| input.raw[i].clone()).collect();
    let mut hk = hk_generators_of(r, &ys)?;
    if let Some(index) = hk.input_index.as_mut() {
        for i in index.iter_mut() {
            *i = keep[*i];
        }
    }
    Ok(hk)
}

/// Parses `generators` and runs `cmd` on the ring they generate.
pub fn run_command(cmd: &Command, generators: &str, opts: &Options) -> Result<Output, RunError> {
    let input = parse_generators(generators)?;
    let config = opts.config();
    let r = analyze(&input.param, &config)?;
    match cmd {
        Command::Analyze => {
            let hk = hk_of_input(&input, &r)?;
            let witness = torsion_witness(&r, &config)?;
            let extension = if r.conductor_in_m2 {
                Some(extend_by_conductor(&r, &config)?)
            } else {
                None
            };
            Ok(Output {
                json: report::analysis_json(
                    &input.raw,
                    &r,
                    &hk,
                    witness.as_ref(),
                    extension.as_ref(),
                ),
                text: report::analysis_text(
                    &input.raw,
                    &r,
                    &hk,
                    witness.as_ref(),
                    extension.as_ref(),
                ),
            })
        }
        Command::Hk => {
            let hk = hk_of_input(&input, &r)?;
            let mut text = String::new();
            report::hk_text(&mut text, &hk, None);
            Ok(Output {
                json: report::hk_json(&hk, None),
                text,
            })
        }
        Command::Semigroup => {
            let s = &r.value_semigroup;
            let mut json = report::semigroup_json(s);
            json["gaps"] = json!(s.gaps());
            let mut text = String::new();
            report::semigroup_text(&mut text, s);
            let _ = writeln!(text, "gaps: {:?}", s.gaps());
            Ok(Output { json, text })
        }
        Command::Member(f) => {
            let f = parse_series(f).map_err(InputError::from)?;
            let member = r.contains(&f)?;
            Ok(Output {
                json: json!({ "element": f.to_string(), "member": member }),
                text: format!("{f} in R: {}\n", report::yes_no(member)),
            })
        }
        Command::Equal(others) => {
            let mut rows = Vec::new();
            let mut text = String::new();
            for line in others {
                let other = parse_generators(line)?;
                let equal = rings_equal(&input.param, &other.param, &config)?;
                let _ = writeln!(
                    text,
                    "{line}: {}",
                    if equal { "equal" } else { "different" }
                );
                rows.push(json!({ "generators": series_list(&other.raw, None), "equal": equal }));
            }
            Ok(Output {
                json: json!({ "generators": series_list(&input.raw, None), "comparisons": rows }),
                text,
            })
        }
        Command::Truncate => {
            let (p, d) = truncate_parametrization(&r)?;
            let equal = rings_equal(&p, &input.param, &config)?;
            let gens = series_list(p.gens(), None);
            Ok(Output {
                text: format!(
                    "d = {d}\ngenerators: {}\nsame ring: {}\n",
                    gens.join(", "),
                    report::yes_no(equal)
                ),
                json: json!({ "d": d, "generators": gens, "rings_equal": equal }),
            })
        }
        Command::Normalize => {
            let n = normalize_parameter(&r)?;
            let gens = series_list(n.param.gens(), None);
            Ok(Output {
                text: format!(
                    "substitution s = {}\ngenerators: {}\nvalid below t^{}\n",
                    n.substitution,
                    gens.join(", "),
                    n.precision
                ),
                json: json!({
                    "substitution": n.substitution.to_string(),
                    "generators": gens,
                    "precision": n.precision,
                }),
            })
        }
        Command::Extend => {
            let e = extend_by_conductor(&r, &config)?;
            let mut text = String::new();
            report::extension_text(&mut text, &e);
            Ok(Output {
                json: report::extension_json(&e),
                text,
            })
        }
        Command::Torsion => {
            let w = torsion_witness(&r, &config)?;
            let mut text = String::new();
            match &w {
                Some(w) => report::witness_text(&mut text, w),
                None => text.push_str("torsion witness: none (conductor in m^2)\n"),
            }
            Ok(Output {
                json: json!({ "torsion_witness": w.as_ref().map(report::witness_json) }),
                text,
            })
        }
    }
}

/// Lines of a batch file: blank lines and `#` comments are skipped.
pub fn input_lines(contents: &str) -> Vec<String> {
    contents
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}
