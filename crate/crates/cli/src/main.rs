mod cmd;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gmtors::counting::CountMethod;
use gmtors::Error;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "gmtors", version, about = "Torsion points of bounded order on subvarieties of the algebraic torus")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Characteristic (0 or a prime).
    #[arg(long, global = true, default_value_t = 0)]
    pub p: u64,
    /// Degree of the coefficient field F_{p^k}.
    #[arg(long, global = true, default_value_t = 1)]
    pub k: u32,
    /// Largest enumerated field has at most 2^bits elements.
    #[arg(long, global = true, default_value_t = 24)]
    pub max_field_bits: u32,
    /// Point budget of the counting routines.
    #[arg(long, global = true, default_value_t = 1_000_000_000)]
    pub max_points: u64,
    /// Largest lattice dimension for the exhaustive minima search.
    #[arg(long, global = true, default_value_t = 6)]
    pub minima_dim_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Read the main input (polynomial text or JSON) from a file.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Method {
    Auto,
    Enumerate,
    GraphGcd,
}

impl From<Method> for CountMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Auto => CountMethod::Auto,
            Method::Enumerate => CountMethod::Enumerate,
            Method::GraphGcd => CountMethod::GraphGcd,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Format {
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum JordanMode {
    /// J_d(1..=n)
    Table,
    /// Σ_{n ≤ x, n ≡ a mod m} J_d(n) with its main term
    Sum,
    /// main term only
    Main,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jordan totients: table, progression sum, main term.
    Jordan {
        #[arg(long, value_enum, default_value_t = JordanMode::Table)]
        mode: JordanMode,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        x: Option<u64>,
    },
    /// Smith normal form of an integer matrix (JSON array of rows).
    Snf {
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Determinantal divisors d_k.
    Minors {
        #[arg(long)]
        matrix: Option<String>,
        /// Only d_size (default: every size).
        #[arg(long)]
        size: Option<usize>,
    },
    /// Saturation and p-saturation of a lattice (JSON array of generators).
    Saturate {
        #[arg(long)]
        lattice: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Successive minima of a full-rank lattice under the sup norm.
    Minima {
        #[arg(long)]
        lattice: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Exact number of coset points of order at most T.
    CosetCount {
        #[arg(long)]
        coset: Option<String>,
        #[arg(long = "T")]
        t: u64,
    },
    /// Upper bound for the coset count.
    CosetBound {
        #[arg(long)]
        coset: Option<String>,
        #[arg(long = "T")]
        t: u64,
    },
    /// Solve x^U = ζ for an n×m matrix U and ζ in 𝔾ₘ^m.
    SolveMonomial {
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long)]
        zeta: String,
    },
    /// Decide whether a hypersurface contains no torsion coset of its dimension.
    Admissible {
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Stabilizer lattice of a hypersurface.
    Stabilizer {
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Exact count of torsion points of order at most T in characteristic p.
    CountCharp {
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "T")]
        t: u64,
    },
    /// Counts on x1 + x2 = 1 with the upper and lower bounds.
    Fink {
        #[arg(long = "T", value_delimiter = ',', required = true)]
        t: Vec<u64>,
    },
    /// Point counts over F_{p^l} against q^r.
    Langweil {
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<u32>,
        /// Expected dimension (default n − 1).
        #[arg(long)]
        r: Option<u32>,
    },
    /// Counting exponent d + 1 − 1/(d − δ + 1).
    Exponent {
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        delta: u64,
    },
    /// Main term b·T^{a+1} from a torsion coset decomposition (JSON array).
    Char0Main {
        #[arg(long)]
        cosets: Option<String>,
        #[arg(long = "T")]
        t: u64,
    },
    /// Σ_{n ≤ T} a_n / n from the partial sums A(1), …, A(T).
    Abel {
        #[arg(long)]
        prefix: Option<String>,
        #[arg(long = "T")]
        t: Option<usize>,
        #[arg(long)]
        nonnegative: bool,
    },
    /// Least-squares slope of log count against log T.
    EmpiricalExponent {
        #[arg(long)]
        series: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (body, code) = match cmd::run(&cli.global, &cli.command) {
        Ok(v) => (v, ExitCode::SUCCESS),
        Err(e) => {
            let code = if matches!(e, Error::Input(_)) { 2 } else { 1 };
            (json!({"error": {"kind": e.kind(), "message": e.message()}}), ExitCode::from(code))
        }
    };
    let text = serde_json::to_string_pretty(&body).expect("JSON values serialize");
    // a closed pipe is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    code
}
