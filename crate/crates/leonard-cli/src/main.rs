//! JSON command-line surface over the leonard crate.
//!
//! Exit codes are stable for scripting: 0 success or accepted, 1 well-formed
//! input that is rejected (invalid array, not a Leonard pair, failing
//! selftest), 2 malformed input, 3 field constraint violation. Diagnostics
//! go to stderr as a `{reason, detail}` JSON object.

mod json;
mod selftest;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leonard::fixtures::qracah_rational_params;
use leonard::*;
use serde::Serialize;

use json::*;

const EXIT_REJECTED: i32 = 1;
const EXIT_MALFORMED: i32 = 2;
const EXIT_FIELD_CONSTRAINT: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    code: i32,
    reason: String,
    detail: String,
}

impl CliError {
    pub fn malformed(detail: &str) -> Self {
        CliError {
            code: EXIT_MALFORMED,
            reason: "malformed input".to_string(),
            detail: detail.to_string(),
        }
    }

    pub fn field_constraint(detail: &str) -> Self {
        CliError {
            code: EXIT_FIELD_CONSTRAINT,
            reason: "field constraint violation".to_string(),
            detail: detail.to_string(),
        }
    }

    pub fn rejected(detail: &str) -> Self {
        CliError {
            code: EXIT_REJECTED,
            reason: "rejected".to_string(),
            detail: detail.to_string(),
        }
    }

    fn from_array_error(e: ArrayError) -> Self {
        match &e {
            ArrayError::InvalidInput => CliError::rejected(&e.to_string()),
            ArrayError::ZeroScale | ArrayError::MalformedSequences => {
                CliError::malformed(&e.to_string())
            }
            ArrayError::BadCharacteristic | ArrayError::ConstraintViolated(_) => {
                CliError::field_constraint(&e.to_string())
            }
        }
    }
}

#[derive(Parser)]
#[command(
    name = "leonard",
    about = "Construct, validate, recognize and normalize Leonard pairs over exact fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input file; stdin when omitted
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file; stdout when omitted
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Lbub,
    Tdd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Krawtchouk,
    Qracah,
}

#[derive(Subcommand)]
enum Command {
    /// Check a parameter array against the classification conditions
    Validate {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Build the canonical matrix pair of a parameter array
    Canon {
        #[arg(long, value_enum)]
        form: FormArg,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Decide whether a matrix pair is a Leonard pair and extract its arrays
    Recognize {
        #[arg(long, value_enum)]
        shape: FormArg,
        #[command(flatten)]
        io: IoArgs,
    },
    /// The four parameter arrays of the underlying Leonard pair
    Orbit {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Transition matrices, weights and normalization of an array
    Transition {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Emit a built-in example family array
    Example {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        d: usize,
        /// Field selector: "rational" or "prime:P"
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long = "s-star")]
        s_star: Option<String>,
        #[arg(long)]
        r1: Option<String>,
        #[arg(long)]
        r2: Option<String>,
        /// Output file; stdout when omitted
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Run the built-in invariant suite on the fixture families
    Selftest {
        /// Perturb one fixture to demonstrate a failing run
        #[arg(long)]
        corrupt: bool,
    },
}

fn read_input(io: &IoArgs) -> Result<String, CliError> {
    match &io.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::malformed(&format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::malformed(&format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::malformed(&format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("serializable output");
    text.push('\n');
    text
}

fn parse_json<'a, T: serde::Deserialize<'a>>(text: &'a str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::malformed(&e.to_string()))
}

fn prime_ctx(p: u64) -> Result<FpCtx, CliError> {
    FpCtx::new(p).map_err(|e| CliError::field_constraint(&e.to_string()))
}

/// Instantiates `$body` over the scalar type selected by a field descriptor.
macro_rules! dispatch {
    ($field:expr, $F:ident, $ctx:ident, $body:block) => {
        match $field {
            FieldJson::Rational => {
                type $F = BigRational;
                let ctx = ();
                let $ctx = &ctx;
                $body
            }
            FieldJson::Prime { p } => {
                type $F = Fp;
                let ctx = prime_ctx(p)?;
                let $ctx = &ctx;
                $body
            }
        }
    };
}

/// Output document and exit code of one command.
type Outcome = (String, i32);

fn cmd_validate(text: &str) -> Result<Outcome, CliError> {
    let doc: ArrayDoc = parse_json(text)?;
    dispatch!(doc.field, F, ctx, {
        let p = parse_array::<F>(ctx, &doc.body)?;
        let report = p.validate();
        let code = if report.valid() { 0 } else { EXIT_REJECTED };
        Ok((to_json(&emit_validation(&report)), code))
    })
}

fn cmd_canon(form: FormArg, text: &str) -> Result<Outcome, CliError> {
    let doc: ArrayDoc = parse_json(text)?;
    dispatch!(doc.field, F, ctx, {
        let p = parse_array::<F>(ctx, &doc.body)?;
        let pair = match form {
            FormArg::Lbub => lb_ub(&p),
            FormArg::Tdd => td_d(&p),
        }
        .map_err(CliError::from_array_error)?;
        let out = CanonOut {
            field: doc.field,
            form: match form {
                FormArg::Lbub => "lbub".to_string(),
                FormArg::Tdd => "tdd".to_string(),
            },
            a: emit_matrix(&pair.a),
            a_star: emit_matrix(&pair.a_star),
        };
        Ok((to_json(&out), 0))
    })
}

fn cmd_recognize(shape: FormArg, text: &str) -> Result<Outcome, CliError> {
    let doc: PairDoc = parse_json(text)?;
    dispatch!(doc.field, F, ctx, {
        let a = parse_matrix::<F>(ctx, &doc.a)?;
        let a_star = parse_matrix::<F>(ctx, &doc.a_star)?;
        let report = match shape {
            FormArg::Lbub => recognize_lbub(&a, &a_star),
            FormArg::Tdd => recognize_tdd(&a, &a_star)
                .map_err(|e| CliError::field_constraint(&e.to_string()))?,
        };
        let code = if report.accepted() { 0 } else { EXIT_REJECTED };
        Ok((to_json(&emit_recognition(&report)), code))
    })
}

fn cmd_orbit(text: &str) -> Result<Outcome, CliError> {
    let doc: ArrayDoc = parse_json(text)?;
    dispatch!(doc.field, F, ctx, {
        let p = parse_array::<F>(ctx, &doc.body)?;
        use D4Gen::*;
        let orbit: Vec<ParameterArray<F>> = if p.d() == 0 {
            vec![p.d4_act(&[]).map_err(CliError::from_array_error)?]
        } else {
            [&[][..], &[Down][..], &[DDown][..], &[Down, DDown][..]]
                .iter()
                .map(|word| p.d4_act(word).map_err(CliError::from_array_error))
                .collect::<Result<_, _>>()?
        };
        let out = OrbitOut {
            field: doc.field,
            arrays: orbit.iter().map(emit_array).collect(),
        };
        Ok((to_json(&out), 0))
    })
}

fn cmd_transition(text: &str) -> Result<Outcome, CliError> {
    let doc: ArrayDoc = parse_json(text)?;
    dispatch!(doc.field, F, ctx, {
        let p = parse_array::<F>(ctx, &doc.body)?;
        let data = transition_matrices(&p).map_err(CliError::from_array_error)?;
        let out = TransitionOut {
            field: doc.field,
            p: emit_matrix(&data.p_mat),
            p_star: emit_matrix(&data.p_star_mat),
            k: scalar_strings(&data.k),
            k_star: scalar_strings(&data.k_star),
            nu: data.nu.to_string(),
        };
        Ok((to_json(&out), 0))
    })
}

fn parse_field_flag(flag: &str) -> Result<FieldJson, CliError> {
    if flag == "rational" {
        return Ok(FieldJson::Rational);
    }
    if let Some(p_text) = flag.strip_prefix("prime:") {
        let p: u64 = p_text
            .parse()
            .map_err(|_| CliError::malformed("field must be \"rational\" or \"prime:P\""))?;
        return Ok(FieldJson::Prime { p });
    }
    Err(CliError::malformed(
        "field must be \"rational\" or \"prime:P\"",
    ))
}

#[allow(clippy::too_many_arguments)]
fn cmd_example(
    family: FamilyArg,
    d: usize,
    field_flag: &str,
    q: Option<String>,
    s: Option<String>,
    s_star: Option<String>,
    r1: Option<String>,
    r2: Option<String>,
) -> Result<Outcome, CliError> {
    let field = parse_field_flag(field_flag)?;
    dispatch!(field, F, ctx, {
        let p: ParameterArray<F> = match family {
            FamilyArg::Krawtchouk => {
                krawtchouk_array(d, ctx).map_err(CliError::from_array_error)?
            }
            FamilyArg::Qracah => {
                // defaults over the rationals follow the standard fixture
                let defaults = qracah_rational_params(d);
                let value = |flag: Option<String>, fallback: String| -> Result<F, CliError> {
                    let text = flag.unwrap_or(fallback);
                    F::parse(ctx, &text).map_err(|e| CliError::malformed(&e.to_string()))
                };
                let params = QRacahParams {
                    d,
                    q: value(q, defaults.q.to_string())?,
                    s: value(s, defaults.s.to_string())?,
                    s_star: value(s_star, defaults.s_star.to_string())?,
                    r1: value(r1, defaults.r1.to_string())?,
                    r2: value(r2, defaults.r2.to_string())?,
                };
                params.array().map_err(CliError::from_array_error)?
            }
        };
        let out = ArrayDoc {
            field,
            body: emit_array(&p),
        };
        Ok((to_json(&out), 0))
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (io, outcome) = match cli.command {
        Command::Validate { io } => {
            let text = read_input(&io)?;
            (io, cmd_validate(&text)?)
        }
        Command::Canon { form, io } => {
            let text = read_input(&io)?;
            (io, cmd_canon(form, &text)?)
        }
        Command::Recognize { shape, io } => {
            let text = read_input(&io)?;
            (io, cmd_recognize(shape, &text)?)
        }
        Command::Orbit { io } => {
            let text = read_input(&io)?;
            (io, cmd_orbit(&text)?)
        }
        Command::Transition { io } => {
            let text = read_input(&io)?;
            (io, cmd_transition(&text)?)
        }
        Command::Example {
            family,
            d,
            field,
            q,
            s,
            s_star,
            r1,
            r2,
            output,
        } => {
            let outcome = cmd_example(family, d, &field, q, s, s_star, r1, r2)?;
            (
                IoArgs {
                    input: None,
                    output,
                },
                outcome,
            )
        }
        Command::Selftest { corrupt } => {
            let code = selftest::run(corrupt);
            std::process::exit(code);
        }
    };
    let (text, code) = outcome;
    write_output(&io.output, &text)?;
    std::process::exit(code);
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        let diag = serde_json::json!({"reason": e.reason, "detail": e.detail});
        eprintln!("{diag}");
        std::process::exit(e.code);
    }
}
