//! `lapspec`: build graphs, compute exact Laplacian spectra, and run the
//! verification checks from the command line.
//!
//! Exit codes: 0 success (or a passing check), 1 failing check, 2 usage or
//! input error, 3 resource cap exceeded.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lapspec::algebra::{Interval, Rat};
use lapspec::combinatorics::{is_isomorphic, max_independent_set};
use lapspec::enumeration::graphs;
use lapspec::spectral::{charpoly, Spectrum, SpectrumKey};
use lapspec::verify::{self, CheckId, Options, Report};
use lapspec::{graph6, BinaryStarParams, Error, Graph, Variant};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "lapspec", version, about = "Exact Laplacian spectra and binary star checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    BinaryStar,
    DoubleStar,
    DoubleStarlike,
    K1Join,
    Path,
    Cycle,
    Star,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "BPrime", alias = "bprime", alias = "B'")]
    BPrime,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, value_enum, default_value = "B")]
    variant: VariantArg,
    #[arg(long, default_value_t = 0)]
    p: usize,
    #[arg(long, default_value_t = 0)]
    q: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
    /// Order for path, cycle, star, complete and k1-join.
    #[arg(long)]
    n: Option<usize>,
    /// Block size for k1-join.
    #[arg(long)]
    m: Option<usize>,
    /// Path length for double-starlike.
    #[arg(long)]
    len: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph and print its graph6 code.
    Construct(ConstructArgs),
    /// Print the Laplacian characteristic polynomial.
    Charpoly {
        /// graph6 code, or `-` for standard input.
        graph: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print every eigenvalue with multiplicity, ascending.
    Spectrum {
        graph: Option<String>,
        /// Isolating intervals are refined below 2^-bits.
        #[arg(long, default_value_t = 20)]
        bits: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Number of eigenvalues in an interval such as "[0,2]" or "(2,7/2]".
    Count {
        #[arg(long, allow_hyphen_values = true)]
        interval: String,
        graph: Option<String>,
    },
    /// Independence number and a maximum independent set.
    Alpha { graph: Option<String> },
    /// Whether two graphs are isomorphic.
    Iso { first: String, second: String },
    /// All graphs of an order up to isomorphism, as graph6 lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Run a named check and print its report.
    Verify {
        /// One of: lower-bound, alpha2, alpha-n-minus-2, brackets,
        /// spanning-trees, algebraic-connectivity, multiplicity, interlacing,
        /// degree-bounds, cospectral, dls.
        check: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 10)]
        cap: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Report elapsed_ms as 0 so repeated runs are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// With a graph: list its L-cospectral mates (order at most 9).
    /// Without: run the binary star DLS check.
    Dls {
        graph: Option<String>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        no_timing: bool,
    },
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::ResourceCap(_) | Error::Order(_) | Error::Overflow(_) => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn read_graph(arg: Option<&str>) -> Result<Graph, Failure> {
    let text = match arg {
        Some(s) if s != "-" => s.to_string(),
        _ => {
            let mut line = String::new();
            io::stdin().lock().read_line(&mut line).map_err(|e| usage(format!("reading stdin: {e}")))?;
            line
        }
    };
    Ok(graph6::decode(text.trim())?)
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| usage(format!("this family needs --{flag}")))
}

fn construct(a: &ConstructArgs) -> Result<Graph, Failure> {
    let ConstructArgs { family, variant, p, q, r, n, m, len } = *a;
    let g = match family {
        Family::BinaryStar => {
            let v = match variant {
                VariantArg::B => Variant::B,
                VariantArg::BPrime => Variant::BPrime,
            };
            Graph::binary_star(BinaryStarParams::new(v, p, q, r)?)?
        }
        Family::DoubleStar => Graph::double_star(p, r)?,
        Family::DoubleStarlike => Graph::double_starlike(p, need(len, "len")?, q)?,
        Family::K1Join => Graph::k1_join_family(need(n, "n")?, need(m, "m")?)?,
        Family::Path => Graph::path(need(n, "n")?)?,
        Family::Cycle => Graph::cycle(need(n, "n")?)?,
        Family::Star => Graph::star(need(n, "n")?)?,
        Family::Complete => Graph::complete(need(n, "n")?)?,
    };
    Ok(g)
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    }
}

fn spectrum_lines(g: &Graph, bits: u32, format: Format) -> Result<String, Failure> {
    let width = Rat::new(BigInt::from(1), BigInt::from(1) << bits);
    let summary = Spectrum::of(g).roots(&width)?;
    // only print digits the isolating width guarantees
    let digits = (f64::from(bits) * std::f64::consts::LOG10_2).floor() as usize;
    let rows: Vec<(String, String, String, usize)> = summary
        .entries()
        .iter()
        .map(|e| {
            let approx = format!("{:.digits$}", e.root.to_f64());
            let (lo, hi) = (e.root.lo().to_string(), e.root.hi().to_string());
            (approx, lo, hi, e.multiplicity)
        })
        .collect();
    Ok(match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .zip(summary.entries())
                .map(|((approx, lo, hi, m), e)| {
                    serde_json::json!({ "approx": approx, "lo": lo, "hi": hi, "exact": e.root.is_exact(), "multiplicity": m })
                })
                .collect();
            serde_json::to_string_pretty(&items).expect("serialisable") + "\n"
        }
        Format::Text => rows
            .iter()
            .zip(summary.entries())
            .map(|((approx, lo, hi, m), e)| {
                if e.root.is_exact() {
                    format!("{approx:>14}  x{m:<3} = {lo}\n")
                } else {
                    format!("{approx:>14}  x{m:<3} in [{lo}, {hi}]\n")
                }
            })
            .collect(),
    })
}

/// Non-isomorphic graphs with the same Laplacian spectrum as `g`.
fn mates(g: &Graph) -> Result<Vec<Graph>, Failure> {
    let key = SpectrumKey::of(g);
    let stream = graphs(g.order(), false)?;
    Ok(stream.iter().filter(|h| SpectrumKey::of(h) == key && !is_isomorphic(g, h)).cloned().collect())
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let out = match cli.command {
        Command::Construct(args) => graph6::encode(&construct(&args)?) + "\n",
        Command::Charpoly { graph, format } => {
            let mu = charpoly(&read_graph(graph.as_deref())?);
            match format {
                Format::Text => format!("{mu}\n"),
                Format::Json => serde_json::to_string(&mu).expect("serialisable") + "\n",
            }
        }
        Command::Spectrum { graph, bits, format } => spectrum_lines(&read_graph(graph.as_deref())?, bits, format)?,
        Command::Count { interval, graph } => {
            let iv: Interval = interval.parse().map_err(|e: Error| usage(format!("--interval: {e}")))?;
            format!("{}\n", Spectrum::of(&read_graph(graph.as_deref())?).count(&iv))
        }
        Command::Alpha { graph } => {
            let set = max_independent_set(&read_graph(graph.as_deref())?);
            let list: Vec<String> = set.iter().map(usize::to_string).collect();
            format!("{}\n{}\n", set.len(), list.join(" "))
        }
        Command::Iso { first, second } => {
            let (a, b) = (read_graph(Some(&first))?, read_graph(Some(&second))?);
            format!("{}\n", is_isomorphic(&a, &b))
        }
        Command::Enumerate { n, connected } => {
            let stream = graphs(n, connected)?;
            stream.iter().map(|g| graph6::encode(g) + "\n").collect()
        }
        Command::Verify { check, max_n, seed, trials, jobs, cap, format, no_timing } => {
            let id: CheckId = check.parse()?;
            let opts = Options { jobs, cap, seed, timing: !no_timing };
            let report = verify::run(id, max_n, trials, &opts)?;
            let code = if report.passed() { 0 } else { 1 };
            return Ok((render(&report, format), code));
        }
        Command::Dls { graph: Some(g), .. } => {
            let g = read_graph(Some(&g))?;
            let found = mates(&g)?;
            if found.is_empty() {
                "determined by its Laplacian spectrum\n".to_string()
            } else {
                found.iter().map(|h| graph6::encode(h) + "\n").collect()
            }
        }
        Command::Dls { graph: None, max_n, jobs, format, no_timing } => {
            let opts = Options { jobs, timing: !no_timing, ..Options::default() };
            let report = verify::run(CheckId::Dls, max_n, None, &opts)?;
            let code = if report.passed() { 0 } else { 1 };
            return Ok((render(&report, format), code));
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("lapspec: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
