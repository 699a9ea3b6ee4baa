//! Thin command-line wrapper around the frobcenter library.
//!
//! Exit codes: 0 success with a positive result, 1 the algorithm returned
//! found=false, 2 usage or input errors.

use clap::{Parser, Subcommand, ValueEnum};
use frobcenter::center::{compute_center, CenterOptions};
use frobcenter::frobdata::{filter_S_prime, guess_m, FrobeniusDatum};
use frobcenter::normic::DEFAULT_SUBSET_CAP;
use frobcenter::pointcount::{frobenius_datum_from_curve, DEFAULT_ENUM_CAP};
use frobcenter::report;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "frobcenter", about = "Bound the center of the geometric endomorphism algebra of an abelian variety from Frobenius data.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Input JSON file.
    input: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cap on finite-field size for point-counting enumeration.
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full center-identification pipeline.
    Center {
        #[command(flatten)]
        common: CommonArgs,
        /// Isogeny exponent m (c_p = g_p^m); guessed from the data when omitted.
        #[arg(long)]
        m: Option<u32>,
        /// Use this prime as the reference prime q.
        #[arg(long)]
        q: Option<u64>,
        /// Iterate over every surviving choice of q and intersect the conclusions.
        #[arg(long)]
        iterate_q: bool,
        /// Cap on irreducible factors for normic subset enumeration.
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        subset_cap: usize,
    },
    /// Report the admissibility verdict for each prime.
    Filter {
        #[command(flatten)]
        common: CommonArgs,
        /// Isogeny exponent m; guessed from the data when omitted.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Count points on the input curves and emit their Frobenius polynomials.
    Charpoly {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute the upper bound for m from the data.
    GuessM {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn emit(common: &CommonArgs, text: String) -> Result<(), String> {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("write {:?}: {}", path, e)),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn load(common: &CommonArgs) -> Result<(report::InputFile, Vec<FrobeniusDatum>), String> {
    let text = std::fs::read_to_string(&common.input)
        .map_err(|e| format!("read {:?}: {}", common.input, e))?;
    let file = report::InputFile::parse(&text).map_err(|e| e.to_string())?;
    let data = file.collect_data(common.enum_cap).map_err(|e| e.to_string())?;
    Ok((file, data))
}

fn resolve_m(
    flag: Option<u32>,
    file_m: Option<u32>,
    data: &[FrobeniusDatum],
    warnings: &mut Vec<String>,
) -> Result<u32, String> {
    if let Some(m) = flag.or(file_m) {
        if m == 0 {
            return Err("m must be positive".into());
        }
        return Ok(m);
    }
    let m = guess_m(data).map_err(|e| format!("m not supplied and could not be guessed: {}", e))?;
    warnings.push(format!("m not supplied; using the guessed upper bound m = {}", m));
    Ok(m)
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Center { common, m, q, iterate_q, subset_cap } => {
            let (file, data) = load(&common)?;
            let mut warnings = Vec::new();
            let m = resolve_m(m, file.m, &data, &mut warnings)?;
            let opts = CenterOptions {
                q_override: q,
                iterate_q,
                subset_cap,
                threads: None,
            };
            let mut rep = compute_center(m, &data, &opts);
            rep.warnings.splice(0..0, warnings);
            let text = match common.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report::center_to_json(&rep))
                        .map_err(|e| e.to_string())?;
                    s.push('\n');
                    s
                }
                Format::Text => report::center_to_text(&rep),
            };
            emit(&common, text)?;
            Ok(if rep.found { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Filter { common, m } => {
            let (file, data) = load(&common)?;
            let mut warnings = Vec::new();
            let m = resolve_m(m, file.m, &data, &mut warnings)?;
            let results: Vec<_> = filter_S_prime(&data, m)
                .into_iter()
                .map(|(d, s)| (d.q, s))
                .collect();
            let text = match common.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report::filter_to_json(&results))
                        .map_err(|e| e.to_string())?;
                    s.push('\n');
                    s
                }
                Format::Text => report::filter_to_text(&results),
            };
            for w in &warnings {
                eprintln!("warning: {}", w);
            }
            emit(&common, text)?;
            let any_in = results.iter().any(|(_, s)| s.is_in());
            Ok(if any_in { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Charpoly { common } => {
            let text = std::fs::read_to_string(&common.input)
                .map_err(|e| format!("read {:?}: {}", common.input, e))?;
            let file = report::InputFile::parse(&text).map_err(|e| e.to_string())?;
            let mut data = Vec::new();
            for entry in &file.curves {
                let spec = entry.to_curve().map_err(|e| e.to_string())?;
                for &p in &entry.primes {
                    data.push(
                        frobenius_datum_from_curve(&spec, p, common.enum_cap)
                            .map_err(|e| e.to_string())?,
                    );
                }
            }
            let text = match common.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report::charpoly_to_json(&data))
                        .map_err(|e| e.to_string())?;
                    s.push('\n');
                    s
                }
                Format::Text => report::charpoly_to_text(&data),
            };
            emit(&common, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::GuessM { common } => {
            let (_, data) = load(&common)?;
            match guess_m(&data) {
                Ok(m) => {
                    let text = match common.format {
                        Format::Json => {
                            let mut s =
                                serde_json::to_string_pretty(&report::GuessMJson { m })
                                    .map_err(|e| e.to_string())?;
                            s.push('\n');
                            s
                        }
                        Format::Text => format!("m = {}\n", m),
                    };
                    emit(&common, text)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{}", e);
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
