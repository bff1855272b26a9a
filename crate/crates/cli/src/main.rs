use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gem_census::{enumerate_with, BoundaryClass, CensusFilter, EnumerateOptions, Parity};
use gem_cli::analyze::analyze;
use gem_cli::catalog::{check_catalog, read_catalog, write_catalog};
use gem_cli::moves::{run_moves, MoveSpec};
use gem_cli::tri::{export_tri, import_tri};
use gem_cli::verify::verify_tables;
use gem_cli::CliError;
use gem_core::{canonical_code, GemCode};

/// Census and analysis of 4-colored graphs representing 3-manifolds with boundary.
#[derive(Parser)]
#[command(name = "gem", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate contracted graphs without 2-dipoles; prints the count.
    Enumerate(EnumerateArgs),
    /// Report invariants, residues and move inventory of one code.
    Analyze { code: String },
    /// Check the bundled catalog codes and published census counts.
    VerifyTables {
        /// Largest order of census counts to re-run.
        #[arg(long, default_value_t = 12)]
        max_order: usize,
        /// Also run the long censuses (non-bipartite at 12, toric at 16).
        #[arg(long)]
        slow: bool,
    },
    /// Apply moves in sequence (see `analyze` for handles) and print canonical codes.
    Move {
        code: String,
        /// cancel-dipole=I, insert-dipole=AB@V, switch-rho2=I or switch-rho3=I
        #[arg(required = true)]
        moves: Vec<String>,
    },
    /// Write the pseudo-triangulation dual to a graph.
    ExportTri { code: String, path: PathBuf },
    /// Read a GEM-TRI file and print the canonical code of its graph.
    ImportTri { path: PathBuf },
    /// Load a catalog file; with --check, recompute every record.
    Catalog {
        path: PathBuf,
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number of vertices (even, at most 16).
    #[arg(long)]
    vertices: usize,
    #[arg(long, conflicts_with = "non_bipartite")]
    bipartite: bool,
    #[arg(long)]
    non_bipartite: bool,
    /// any, toric or toric-connected
    #[arg(long, default_value = "any")]
    boundary: String,
    /// Keep rigid graphs only (needs --bipartite).
    #[arg(long)]
    rigid: bool,
    /// Keep graphs with 2-dipoles too.
    #[arg(long)]
    allow_2_dipoles: bool,
    /// Catalog file to write, one JSON record per line.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Print every code after the count.
    #[arg(long)]
    list: bool,
}

fn parse_code(text: &str) -> Result<GemCode, CliError> {
    Ok(GemCode::parse(text)?)
}

fn enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let parity = match (args.bipartite, args.non_bipartite) {
        (true, _) => Parity::Bipartite,
        (_, true) => Parity::NonBipartite,
        _ => Parity::Any,
    };
    let boundary: BoundaryClass = args.boundary.parse().map_err(|e: gem_census::CensusError| CliError::Usage(e.to_string()))?;
    let filter = CensusFilter {
        parity,
        boundary,
        rigid_only: args.rigid,
        no_2_dipoles: !args.allow_2_dipoles,
        ..CensusFilter::default()
    };
    filter.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let mut out = match &args.output {
        Some(path) => Some(BufWriter::new(File::create(path).map_err(|e| CliError::io(path, e))?)),
        None => None,
    };
    let records = enumerate_with(args.vertices, &filter, &EnumerateOptions::from_env()).map_err(|e| match e {
        gem_census::CensusError::InvalidOrder(_) => CliError::Usage(e.to_string()),
        other => other.into(),
    })?;
    if let (Some(w), Some(path)) = (out.as_mut(), &args.output) {
        write_catalog(w, &records).map_err(|e| CliError::io(path, e))?;
    }
    println!("{}", records.len());
    if args.list {
        for r in &records {
            println!("{}", r.code);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate(args) => enumerate(args),
        Command::Analyze { code } => {
            print!("{}", analyze(&parse_code(&code)?));
            Ok(())
        }
        Command::VerifyTables { max_order, slow } => {
            let checks = verify_tables(max_order, slow, &EnumerateOptions::from_env());
            let failed = checks.iter().filter(|c| !c.ok).count();
            for c in &checks {
                println!("{c}");
            }
            println!("{} checks, {failed} failed", checks.len());
            if failed == 0 {
                Ok(())
            } else {
                Err(CliError::Mismatch(format!("{failed} checks failed")))
            }
        }
        Command::Move { code, moves } => {
            let g = parse_code(&code)?.decode();
            let specs: Vec<MoveSpec> = moves.iter().map(|m| m.parse()).collect::<Result<_, _>>()?;
            print!("{}", run_moves(&g, &specs)?);
            Ok(())
        }
        Command::ExportTri { code, path } => {
            let g = parse_code(&code)?.decode();
            let mut f = File::create(&path).map_err(|e| CliError::io(&path, e))?;
            f.write_all(export_tri(&g).as_bytes()).map_err(|e| CliError::io(&path, e))?;
            println!("{} tetrahedra written to {}", g.order(), path.display());
            Ok(())
        }
        Command::ImportTri { path } => {
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
            println!("{}", canonical_code(&import_tri(&text)?));
            Ok(())
        }
        Command::Catalog { path, check } => {
            let f = File::open(&path).map_err(|e| CliError::io(&path, e))?;
            let records = read_catalog(BufReader::new(f))?;
            println!("{} records", records.len());
            if check {
                let bad = check_catalog(&records);
                for b in &bad {
                    println!("{b}");
                }
                if !bad.is_empty() {
                    return Err(CliError::Mismatch(format!("{} records differ from recomputation", bad.len())));
                }
                println!("all records match recomputation");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
