use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use niche_core::format::{
    emit_census_csv, emit_certificate, emit_dot, emit_graph, emit_tournament, parse_document,
    parse_graph, parse_tournament, Document, ParseError,
};
use niche_core::niche::verify_relation_laws;
use niche_core::oracle::{census, cross_check, random_tournament, CROSS_CHECK_DEFAULT};
use niche_core::properties::{condensation_shape, verify_niche_properties};
use niche_core::recognize::Decision;
use niche_core::{niche_graph, realize, recognize, Error};

#[derive(Parser)]
#[command(
    name = "niche",
    version,
    about = "Niche graphs of bipartite tournaments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the niche graph of a tournament file.
    Niche {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide whether a graph is a niche graph and print the certificate.
    Recognize {
        file: PathBuf,
        /// Write a witness tournament here when the answer is YES.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Run the law suite on a graph or tournament file.
    Verify { file: PathBuf },
    /// Compare the recognizer with exhaustive enumeration.
    CrossCheck {
        #[arg(long = "max", default_value_t = CROSS_CHECK_DEFAULT)]
        max: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Count niche graphs over all orientations of K_{m,n}.
    Census {
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Emit a seeded random tournament.
    Random {
        #[arg(long)]
        left: usize,
        #[arg(long)]
        right: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Parse(String),
    Verification(String),
    SizeLimit(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Verification(_) => 3,
            Failure::SizeLimit(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m)
            | Failure::Parse(m)
            | Failure::Verification(m)
            | Failure::SizeLimit(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeLimit { .. } => Failure::SizeLimit(e.to_string()),
            Error::InternalRoundTripFailure(_) | Error::CertificateMismatch(_) => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, ParseError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

/// Run a command, returning its standard output.
fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Niche { file, out, dot } => {
            let d = parsed(&file, parse_tournament(&read(&file)?))?;
            let g = niche_graph(&d);
            if let Some(dot) = dot {
                write(&dot, &emit_dot(&g))?;
            }
            match out {
                Some(out) => write(&out, &emit_graph(&g)).map(|_| String::new()),
                None => Ok(emit_graph(&g)),
            }
        }
        Command::Recognize { file, witness } => {
            let g = parsed(&file, parse_graph(&read(&file)?))?;
            let cert = recognize(&g);
            if let (Some(path), Decision::Yes) = (witness, cert.decision) {
                let d = realize(&g)?.ok_or_else(|| {
                    Failure::Verification("no witness for a YES certificate".into())
                })?;
                write(&path, &emit_tournament(&d))?;
            }
            Ok(emit_certificate(&cert))
        }
        Command::Verify { file } => {
            let doc = parsed(&file, parse_document(&read(&file)?))?;
            let report = match doc {
                Document::Tournament(d) => {
                    let mut r = verify_relation_laws(&d);
                    r.extend(verify_niche_properties(&niche_graph(&d)));
                    r
                }
                Document::Graph(g) => {
                    let mut r = verify_niche_properties(&g);
                    r.push(condensation_shape(&g));
                    r
                }
            };
            let text = report.to_string();
            if report.all_pass() {
                Ok(text)
            } else {
                print!("{text}");
                let failed = report.failures().count();
                Err(Failure::Verification(format!("{failed} law(s) failed")))
            }
        }
        Command::CrossCheck { max, jobs } => {
            let report = cross_check(max, jobs)?;
            let text = report.to_string();
            if report.mismatches.is_empty() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Verification(format!(
                    "{} mismatch(es)",
                    report.mismatches.len()
                )))
            }
        }
        Command::Census {
            left,
            right,
            jobs,
            csv,
        } => {
            let c = census(left, right, jobs)?;
            let rows = emit_census_csv(&c);
            match csv {
                Some(path) => {
                    write(&path, &rows)?;
                    Ok(format!(
                        "left {left} right {right} orientations {} classes {}\n",
                        c.total(),
                        c.counts.len()
                    ))
                }
                None => Ok(rows),
            }
        }
        Command::Random {
            left,
            right,
            seed,
            out,
        } => {
            let text = emit_tournament(&random_tournament(left, right, seed)?);
            match out {
                Some(out) => write(&out, &text).map(|_| String::new()),
                None => Ok(text),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
