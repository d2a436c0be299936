//! `ddisc`: classify bound quiver algebras, compute their derived
//! composition factors and series, and tabulate Hom spaces of string objects.
//!
//! Exit codes: 0 success, 1 input error, 2 classification unknown,
//! 3 verification failure.

mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ddisc::classify::{
    ag_invariant, clock_condition, cycle_count, is_derived_discrete, is_derived_discrete_with, is_gentle, lambda_normal_form,
    ClassifyOptions, ComponentClass, Verdict,
};
use ddisc::homology::{infinite_gldim_check, lambda_hom_table, HomologyError, StringObject};
use ddisc::quiver::{build_lambda, connected_components, grothendieck_rank, is_isomorphic, serialize_presentation, LambdaDescriptor};
use ddisc::series::{composition_factors, is_n_derived_simple, strip_series, verify_trace, SeriesError};
use ddisc::{Gf32003, Rational};

use report::*;

const DEFAULT_MARGIN_CAP: usize = 6;

#[derive(Parser)]
#[command(name = "ddisc", version, about = "Derived discrete algebras: classification, factors, series and Hom tables")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gentleness, cycles, clock condition, discreteness and normal form.
    Classify {
        /// Presentation file or inline sum such as `L(2,2,1)+A3`.
        input: String,
        /// Report gentle trees as unknown.
        #[arg(long)]
        strict_tree: bool,
    },
    /// Composition factor multiset and derived simplicity.
    Factors {
        input: String,
        /// Recollement arity; the answer does not depend on it.
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Greedy composition series with independent verification.
    Series { input: String },
    /// `dim Hom(X, Y[h])` for string objects of Λ(s,s,t), `0 <= h <= max-shift`.
    Hom {
        input: String,
        #[arg(long)]
        from: StringObject,
        #[arg(long)]
        to: StringObject,
        #[arg(long)]
        max_shift: usize,
        #[arg(long, value_enum, default_value_t = FieldChoice::Rational)]
        field: FieldChoice,
    },
    /// Print the presentation of Λ(r,s,t).
    BuildLambda { r: usize, s: usize, t: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldChoice {
    Rational,
    Gf32003,
}

enum Failure {
    Input(String),
    Unknown(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Unknown(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Unknown(m) | Failure::Verification(m) => m,
        }
    }
}

/// A rendered report and the exit code it carries.
struct Outcome {
    text: String,
    code: u8,
}

fn emit<T: Serialize + Pretty>(pretty: bool, report: &Report<T>, code: u8) -> Outcome {
    let text = if pretty {
        report.pretty()
    } else {
        let mut s = serde_json::to_string_pretty(report).expect("report serializes");
        s.push('\n');
        s
    };
    Outcome { text, code }
}

fn envelope<T>(command: &'static str, input: &input::Input, result: T) -> Report<T> {
    Report {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        command,
        input: InputInfo::new(input.source, &input.bytes, &input.presentation),
        result,
    }
}

fn margin_cap() -> Result<usize, Failure> {
    match std::env::var("DDISC_MARGIN_CAP") {
        Err(_) => Ok(DEFAULT_MARGIN_CAP),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("DDISC_MARGIN_CAP must be a non-negative integer, got {v:?}"))),
    }
}

fn classify(input: &input::Input, strict_tree: bool, pretty: bool) -> Outcome {
    let p = &input.presentation;
    let report = is_derived_discrete_with(p, ClassifyOptions { strict_tree });
    let normal = lambda_normal_form(p);
    let components = connected_components(p)
        .iter()
        .zip(&report.components)
        .zip(&normal.components)
        .map(|((c, verdict), class)| ComponentReport {
            vertices: verdict.vertices.clone(),
            gentle: is_gentle(c).is_gentle(),
            cycles: cycle_count(c),
            clock: clock_condition(c).ok(),
            ag_invariant: ag_invariant(c).ok(),
            discrete: verdict.verdict,
            reason: verdict.reason.clone(),
            normal_form: class_name(class),
        })
        .collect();
    let result = ClassifyResult {
        discrete: report.verdict,
        gentle: is_gentle(p),
        infinite_global_dimension: infinite_gldim_check(p),
        normal_form: normal.components.iter().map(class_name).collect(),
        components,
    };
    let code = if report.verdict == Verdict::Unknown { 2 } else { 0 };
    emit(pretty, &envelope("classify", input, result), code)
}

fn factors(input: &input::Input, n: usize, pretty: bool) -> Result<Outcome, Failure> {
    let p = &input.presentation;
    match is_derived_discrete(p).verdict {
        Verdict::Yes => {}
        v => return Err(series_failure(SeriesError::NotDerivedDiscrete(v))),
    }
    let normal = lambda_normal_form(p);
    let simple = is_n_derived_simple(&normal, n).map_err(series_failure)?;
    let factors = composition_factors(&normal).map_err(series_failure)?;
    let result = FactorsResult {
        normal_form: normal.components.iter().map(class_name).collect(),
        factors,
        grothendieck_rank: grothendieck_rank(p),
        derived_simple: simple,
    };
    Ok(emit(pretty, &envelope("factors", input, result), 0))
}

fn series_failure(e: SeriesError) -> Failure {
    match e {
        SeriesError::InvalidN | SeriesError::NotDerivedDiscrete(Verdict::No) => Failure::Input(e.to_string()),
        SeriesError::UnknownComponent { .. } | SeriesError::NotDerivedDiscrete(_) => Failure::Unknown(e.to_string()),
        _ => Failure::Verification(e.to_string()),
    }
}

fn series(input: &input::Input, pretty: bool) -> Result<Outcome, Failure> {
    let p = &input.presentation;
    let trace = strip_series(p).map_err(series_failure)?;
    let (verification, code) = match verify_trace(p, &trace) {
        Ok(v) => (Verification::Passed(v), 0),
        Err(e) => (Verification::Failed { error: e.to_string() }, 3),
    };
    let result = SeriesResult { trace, verification };
    Ok(emit(pretty, &envelope("series", input, result), code))
}

/// Objects are named over the canonical Λ(s,s,t); an input isomorphic to
/// it is accepted and computed there.
fn hom_algebra(input: &input::Input) -> Result<LambdaDescriptor, Failure> {
    let normal = lambda_normal_form(&input.presentation);
    let not_lambda = || Failure::Input("hom needs an algebra isomorphic to a single Λ(s,s,t)".into());
    match normal.components.as_slice() {
        [ComponentClass::Lambda(d)] if d.is_full_cycle() => {
            let canonical = build_lambda(*d).expect("valid descriptor");
            if is_isomorphic(&input.presentation, &canonical) {
                Ok(*d)
            } else {
                Err(not_lambda())
            }
        }
        [ComponentClass::Unknown(reason)] => Err(Failure::Unknown(format!("cannot classify input: {reason}"))),
        _ => Err(not_lambda()),
    }
}

fn hom(
    input: &input::Input,
    from: StringObject,
    to: StringObject,
    max_shift: usize,
    field: FieldChoice,
    pretty: bool,
) -> Result<Outcome, Failure> {
    let d = hom_algebra(input)?;
    let cap = margin_cap()?;
    let computed = match field {
        FieldChoice::Rational => lambda_hom_table::<Rational>(d, from, to, max_shift, cap),
        FieldChoice::Gf32003 => lambda_hom_table::<Gf32003>(d, from, to, max_shift, cap),
    };
    let table = computed.map_err(|e| match e {
        HomologyError::NonStabilizing { .. } => Failure::Verification(format!("{e} (raise DDISC_MARGIN_CAP, now {cap})")),
        other => Failure::Input(other.to_string()),
    })?;
    let result = HomResult {
        algebra: format!("Lambda({},{},{})", d.r, d.s, d.t),
        from,
        to,
        field: match field {
            FieldChoice::Rational => "rational",
            FieldChoice::Gf32003 => "gf32003",
        },
        dims: table.dims,
        margin: table.margin,
    };
    Ok(emit(pretty, &envelope("hom", input, result), 0))
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let load = |arg: &str| input::load(arg).map_err(Failure::Input);
    match cli.command {
        Command::BuildLambda { r, s, t } => {
            let d = LambdaDescriptor::new(r, s, t).map_err(|e| Failure::Input(e.to_string()))?;
            let p = build_lambda(d).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(Outcome {
                text: format!("# {d}\n{}", serialize_presentation(&p)),
                code: 0,
            })
        }
        Command::Classify { input, strict_tree } => Ok(classify(&load(&input)?, strict_tree, cli.pretty)),
        Command::Factors { input, n } => factors(&load(&input)?, n, cli.pretty),
        Command::Series { input } => series(&load(&input)?, cli.pretty),
        Command::Hom {
            input,
            from,
            to,
            max_shift,
            field,
        } => hom(&load(&input)?, from, to, max_shift, field, cli.pretty),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
