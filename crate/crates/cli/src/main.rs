//! `hopfcert`: check, build and certify finite-dimensional Hopf structures.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on an
//! input or usage error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use hopfcert_core::io::{
    self, build, cotensor, gallery, run_suite, BuildOptions, Certificate, Manifest, SuiteOptions,
    BUILDS, GALLERY, MANIFEST, SUITES,
};
use hopfcert_core::{Error, Field};

#[derive(Parser, Debug)]
#[command(
    name = "hopfcert",
    version,
    about = "Exact checker for Hopf crossed modules and quantum 2-groups"
)]
struct Cli {
    /// Field for every input: Q or Fp:<p>. Defaults to the declared field.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Skip checking inputs before a construction.
    #[arg(long, global = true)]
    no_validate: bool,
    /// Check large biproducts on every basis input instead of generators.
    #[arg(long, global = true)]
    full_basis: bool,
    /// Directory for certificates and constructed files.
    #[arg(long, global = true, value_name = "DIR")]
    emit: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Default)]
struct InputArgs {
    /// Manifest whose roles supply input files.
    #[arg(long, value_name = "FILE")]
    manifest: Option<PathBuf>,
    /// Input file for a role; overrides the manifest.
    #[arg(short = 'i', long = "input", value_name = "ROLE=PATH", value_parser = parse_role)]
    inputs: Vec<(String, PathBuf)>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a check suite, or every suite a manifest expects.
    Check {
        suite: Option<String>,
        #[command(flatten)]
        inputs: InputArgs,
        /// List suites and their input roles.
        #[arg(long)]
        list: bool,
    },
    /// Construct a structure and write it as input files.
    Build {
        kind: Option<String>,
        #[command(flatten)]
        inputs: InputArgs,
        /// List constructions and their input roles.
        #[arg(long)]
        list: bool,
    },
    /// Canonical basis of the cotensor of a crossed module's 2-group.
    Cotensor {
        #[command(flatten)]
        inputs: InputArgs,
    },
    /// Emit worked examples with their manifests.
    Gallery {
        name: Option<String>,
        /// List entries without emitting.
        #[arg(long)]
        list: bool,
    },
    /// Render a certificate; exits with its verdict.
    Report { certificate: PathBuf },
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_role(s: &str) -> std::result::Result<(String, PathBuf), String> {
    let (role, path) = s
        .split_once('=')
        .ok_or_else(|| format!("expected ROLE=PATH, got {s:?}"))?;
    Ok((role.to_string(), PathBuf::from(path)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if let Some(Error::Validation { report, .. }) = e.downcast_ref::<Error>() {
                eprint!("{}", report.to_text());
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Check { list: true, .. } => {
            for s in SUITES {
                println!("{:<16} {:<48} {}", s.name, s.roles.join(","), s.summary);
            }
            Ok(0)
        }
        Command::Check {
            suite: Some(suite),
            inputs,
            ..
        } => {
            let (paths, _) = resolve(inputs)?;
            let cert = run_suite(suite, &paths, &suite_options(cli))?;
            emit_certificate(cli, &cert)?;
            print_certificate(cli, &cert);
            Ok(cert.verdict.exit_code() as u8)
        }
        Command::Check {
            suite: None,
            inputs,
            ..
        } => check_manifest(cli, inputs),
        Command::Build { list: true, .. } => {
            for b in BUILDS {
                println!("{:<14} {:<48} {}", b.name, b.roles.join(","), b.summary);
            }
            Ok(0)
        }
        Command::Build { kind: None, .. } => bail!("missing construction; see `build --list`"),
        Command::Build {
            kind: Some(kind),
            inputs,
            ..
        } => {
            let (paths, _) = resolve(inputs)?;
            let files = build(kind, &paths, &build_options(cli))?;
            let dir = cli.emit.clone().unwrap_or_else(|| PathBuf::from("."));
            std::fs::create_dir_all(&dir)?;
            for (name, text) in &files {
                let path = dir.join(name);
                std::fs::write(&path, text).with_context(|| path.display().to_string())?;
                println!("{}", path.display());
            }
            Ok(0)
        }
        Command::Cotensor { inputs } => {
            let (paths, _) = resolve(inputs)?;
            let report = cotensor(&paths, &build_options(cli))?;
            let json = io::to_json(&report);
            if let Some(dir) = &cli.emit {
                std::fs::create_dir_all(dir)?;
                std::fs::write(dir.join("cotensor.json"), &json)?;
            }
            if cli.json {
                print!("{json}");
            } else {
                println!("field:   {}", report.field);
                println!("ambient: {}", report.basis.ambient_dim());
                println!("dim:     {}", report.dim);
            }
            Ok(0)
        }
        Command::Gallery { list: true, .. } => {
            for name in GALLERY {
                println!("{name:<20} {}", gallery(name)?.manifest.description);
            }
            Ok(0)
        }
        Command::Gallery { name, .. } => {
            let root = cli.emit.clone().unwrap_or_else(|| PathBuf::from("gallery"));
            let names: Vec<&str> = match name {
                Some(n) => vec![n.as_str()],
                None => GALLERY.to_vec(),
            };
            for n in &names {
                let entry = gallery(n)?;
                let dir = if name.is_some() {
                    root.clone()
                } else {
                    root.join(n)
                };
                for path in entry.emit(&dir)? {
                    println!("{}", path.display());
                }
            }
            Ok(0)
        }
        Command::Report { certificate } => {
            let text = std::fs::read_to_string(certificate)
                .with_context(|| certificate.display().to_string())?;
            let cert = Certificate::from_json(&text)?;
            print_certificate(cli, &cert);
            Ok(cert.verdict.exit_code() as u8)
        }
    }
}

fn suite_options(cli: &Cli) -> SuiteOptions {
    SuiteOptions {
        field: cli.field,
        full_basis: cli.full_basis,
    }
}

fn build_options(cli: &Cli) -> BuildOptions {
    BuildOptions {
        field: cli.field,
        validate: !cli.no_validate,
    }
}

/// Role paths from the manifest, then explicit inputs on top.
fn resolve(args: &InputArgs) -> Result<(BTreeMap<String, PathBuf>, Option<Manifest>)> {
    let mut paths = BTreeMap::new();
    let mut manifest = None;
    if let Some(file) = &args.manifest {
        let file = if file.is_dir() {
            file.join(MANIFEST)
        } else {
            file.clone()
        };
        let text = std::fs::read_to_string(&file).with_context(|| file.display().to_string())?;
        let m: Manifest = io::from_json(&text)?;
        paths = m.role_paths(file.parent().unwrap_or(Path::new(".")));
        manifest = Some(m);
    }
    paths.extend(args.inputs.iter().cloned());
    Ok((paths, manifest))
}

/// Runs every suite the manifest names; exits 0 when each verdict matches.
fn check_manifest(cli: &Cli, args: &InputArgs) -> Result<u8> {
    let (paths, manifest) = resolve(args)?;
    let Some(manifest) = manifest else {
        bail!("give a suite or --manifest; see `check --list`");
    };
    let mut code = 0;
    let mut rows = Vec::new();
    for (suite, expected) in &manifest.expected {
        let cert = run_suite(suite, &paths, &suite_options(cli))?;
        emit_certificate(cli, &cert)?;
        let matches = cert.verdict == *expected;
        if !matches {
            code = 1;
        }
        rows.push((suite.clone(), cert.verdict, *expected, matches));
    }
    if cli.json {
        let json: Vec<_> = rows
            .iter()
            .map(|(s, v, e, m)| serde_json::json!({"suite": s, "verdict": v, "expected": e, "matches": m}))
            .collect();
        println!("{}", serde_json::to_string_pretty(&json)?);
    } else {
        println!("{}", manifest.name);
        for (suite, verdict, expected, matches) in rows {
            let mark = if matches { "ok" } else { "MISMATCH" };
            println!("  {suite:<16} {verdict:<5} (expected {expected}) {mark}");
        }
    }
    Ok(code)
}

fn emit_certificate(cli: &Cli, cert: &Certificate) -> Result<()> {
    if let Some(dir) = &cli.emit {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}.cert.json", cert.suite));
        std::fs::write(&path, cert.to_json()).with_context(|| path.display().to_string())?;
    }
    Ok(())
}

fn print_certificate(cli: &Cli, cert: &Certificate) {
    if cli.json {
        print!("{}", cert.to_json());
    } else {
        print!("{}", cert.to_text());
    }
}
