//! The `hopf` command-line tool.
//!
//! Machine output goes to stdout, diagnostics to stderr. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | selftest failure |
//! | 2 | bad arguments or input document |
//! | 3 | the two `π₁` routes disagree (convention bug) |
//! | 4 | not a homology Hopf surface |
//! | 5 | certificate does not verify |

mod commands;
pub mod document;
pub mod selftest;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{classify_report, parse_int_list};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;
pub const EXIT_NOT_HOMOLOGY_HOPF: i32 = 4;
pub const EXIT_INVALID_CERTIFICATE: i32 = 5;

pub const CSV_HEADER: &str = "a,b,p,c,d,q,mu,homology_hopf,rank,invariant_factors";

#[derive(Debug, Parser)]
#[command(
    name = "hopf",
    version,
    about = "Invariants and certified normal forms of T^2 x D^2 gluings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MatrixInput {
    /// Matrix document (JSON); reads stdin when omitted or "-".
    pub file: Option<PathBuf>,
    /// Inline matrix: nine comma-separated integers, row-major.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "file")]
    pub matrix: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinant, gcd(g, h), homology-Hopf flag and fundamental group of a gluing.
    Classify(MatrixInput),
    /// Compose two logarithmic transformations with the Hopf gluing and cross-check pi_1.
    Compose {
        /// Plus-side triple a,b,p.
        #[arg(long, allow_hyphen_values = true)]
        plus: Option<String>,
        /// Minus-side triple c,d,q.
        #[arg(long, allow_hyphen_values = true)]
        minus: Option<String>,
        /// Explicit plus-side completion, nine integers row-major.
        #[arg(long, allow_hyphen_values = true)]
        plus_completion: Option<String>,
        /// Explicit minus-side completion, nine integers row-major.
        #[arg(long, allow_hyphen_values = true)]
        minus_completion: Option<String>,
    },
    /// Reduce a homology-Hopf gluing to normal form and emit a certificate.
    Reduce {
        #[command(flatten)]
        input: MatrixInput,
        /// Continue to [[1,0,1],[0,1,0],[0,0,1]].
        #[arg(long)]
        standard: bool,
    },
    /// Check a certificate document.
    Verify {
        /// Certificate document; reads stdin when omitted or "-".
        file: Option<PathBuf>,
    },
    /// Tabulate mu over a parameter grid or random SL(3,Z) samples.
    Sweep(SweepArgs),
    /// Run the built-in property suites at reduced size.
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Inclusive range for p, e.g. 0:2.
    #[arg(long, allow_hyphen_values = true)]
    pub p_range: Option<String>,
    /// Inclusive range for q, e.g. -3:3.
    #[arg(long, allow_hyphen_values = true)]
    pub q_range: Option<String>,
    /// Plus-side direction a,b.
    #[arg(long, allow_hyphen_values = true)]
    pub direction_plus: Option<String>,
    /// Minus-side direction c,d.
    #[arg(long, allow_hyphen_values = true)]
    pub direction_minus: Option<String>,
    /// Sample N random pairs of SL(3,Z) words instead of a grid.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Word length of each random SL(3,Z) sample.
    #[arg(long, default_value_t = crate::enumeration::DEFAULT_WORD_LENGTH)]
    pub word_length: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Keep only homology-Hopf rows.
    #[arg(long)]
    pub homology_hopf_only: bool,
    /// Evaluate cells on the rayon pool (output is unchanged).
    #[arg(long)]
    pub parallel: bool,
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Runs one invocation against explicit streams and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut io = commands::Io {
        stdin,
        stdout,
        stderr,
    };
    let code = match cli.command {
        Command::Classify(input) => commands::classify(&mut io, &input),
        Command::Compose {
            plus,
            minus,
            plus_completion,
            minus_completion,
        } => commands::compose(
            &mut io,
            plus.as_deref(),
            minus.as_deref(),
            plus_completion.as_deref(),
            minus_completion.as_deref(),
        ),
        Command::Reduce { input, standard } => commands::reduce(&mut io, &input, standard),
        Command::Verify { file } => commands::verify(&mut io, file.as_deref()),
        Command::Sweep(args) => commands::sweep(&mut io, &args),
        Command::Selftest => selftest::run(io.stdout),
    };
    let _ = io.stdout.flush();
    code
}
