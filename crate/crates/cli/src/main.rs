use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sn_closure::closure::{CloseOptions, DEFAULT_MAX_N};
use sn_closure::report::{ClosureReport, ReportOptions};
use sn_closure::spec_file::RingSpecFile;
use sn_closure::verify::{self, Suite};
use sn_closure::{gallery, ncpoly, partition, Base, Error, RankRing};

const EXIT_PARSE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_GUARD: u8 = 4;

/// S_n-closures of rings of rank n, computed exactly.
#[derive(Parser)]
#[command(name = "snclosure", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a ring spec file describes a commutative ring with unity.
    Validate { path: PathBuf },
    /// Compute G(A/B) for a ring spec file and print a report.
    Closure {
        path: PathBuf,
        /// Dimensions per content class (degenerate rings only).
        #[arg(long)]
        graded: bool,
        /// List the residue basis words.
        #[arg(long)]
        basis: bool,
        /// Print structure constants in the residue basis.
        #[arg(long)]
        structure: bool,
        /// Largest rank to close directly.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Include wall time (the report is otherwise byte-reproducible).
        #[arg(long)]
        timing: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Run the saturation on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Print the predicted decomposition of G(R_n/K) into irreducibles.
    Predict {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=12))]
        n: u8,
    },
    /// Emit a gallery ring as a spec file.
    Gallery {
        /// split-<n>, monogenic-<c_n,...,c_0>, cubic-<a,b,c,d>, degenerate-<n>,
        /// imprimitive-quartic or finite-field-<p,n>.
        name: String,
        /// ZZ, QQ or GF(p); defaults depend on the ring.
        #[arg(long)]
        base: Option<String>,
        /// Write to a file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print f_0, ..., f_k.
    Desmit { k: usize },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Paper,
    Properties,
    All,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidRing(_) => EXIT_INVALID,
        Error::ResourceGuard { .. } => EXIT_GUARD,
        _ => EXIT_PARSE,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    if let Error::InvalidRing(violations) = &e {
        for v in violations {
            eprintln!("  {v}");
        }
    }
    ExitCode::from(exit_code(&e))
}

fn read_ring(path: &Path) -> Result<(Vec<u8>, RankRing), Error> {
    let bytes = fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::Parse(format!("{}: not UTF-8", path.display())))?;
    let ring = RingSpecFile::parse(&text)?.to_ring()?;
    Ok((bytes, ring))
}

fn parse_base(text: &str) -> Result<Base, Error> {
    match text {
        "ZZ" => Ok(Base::Integers),
        "QQ" => Ok(Base::Rationals),
        _ => {
            let p = text
                .strip_prefix("GF(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| {
                    Error::Parse(format!("unknown base {text:?}; expected ZZ, QQ or GF(p)"))
                })?;
            Base::prime_field(p)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Validate { path } => {
            let (_, ring) = read_ring(&path)?;
            println!("valid ring of rank {} over {}", ring.rank(), ring.base());
            println!("basis: {}", ring.names().join(", "));
            println!("discriminant: {}", ring.discriminant());
            println!("etale: {}", if ring.is_etale() { "yes" } else { "no" });
        }
        Command::Closure {
            path,
            graded,
            basis,
            structure,
            max_n,
            timing,
            json,
            sequential,
        } => {
            let (bytes, ring) = read_ring(&path)?;
            let close_opts = CloseOptions {
                max_n,
                parallel: !sequential && CloseOptions::default().parallel,
                ..CloseOptions::default()
            };
            let opts = ReportOptions {
                graded,
                basis,
                structure,
                timing,
            };
            if graded && !ring.is_degenerate() {
                eprintln!("note: --graded applies only to degenerate rings; ignored");
            }
            let report = ClosureReport::build(&bytes, &ring, &close_opts, opts)?;
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{report}");
            }
        }
        Command::Predict { n } => {
            println!("{}", partition::predicted_decomposition(n as usize));
        }
        Command::Gallery { name, base, output } => {
            let base = base.as_deref().map(parse_base).transpose()?;
            let ring = gallery::gallery(&name, base)?;
            let text = RingSpecFile::from_ring(&ring).emit();
            match output {
                Some(p) => fs::write(&p, text)
                    .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
                None => print!("{text}"),
            }
        }
        Command::Desmit { k } => {
            for (i, f) in ncpoly::desmit_sequence(k)?.iter().enumerate() {
                println!("f_{i}(X,Y) = {f}");
            }
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Paper => Suite::Paper,
                SuiteArg::Properties => Suite::Properties,
                SuiteArg::All => Suite::All,
            };
            let mut passed = 0;
            let mut total = 0;
            for id in suite.criteria() {
                let check = verify::criterion(id);
                println!("{check}");
                total += 1;
                passed += usize::from(check.passed);
            }
            println!("{passed} of {total} checks passed");
            if passed < total {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    run(cli).unwrap_or_else(fail)
}
