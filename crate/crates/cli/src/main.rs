//! Batch interface: table emission, family polynomials, subdivision
//! construction, local h routes, realizability checks and the
//! verification-suite runner with its errata report.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use ivgamma_core::balanced_ffk::{dec_complex, is_k_ffk_explain};
use ivgamma_core::bounds::Bounds;
use ivgamma_core::eulerian::BPlusTable;
use ivgamma_core::gamma_main::{gamma_int, h_int_from_h, SymmetricH};
use ivgamma_core::interval::IntervalSubdivision;
use ivgamma_core::local_h::{
    local_h_definition, local_h_derangement, local_h_excedance, DEFAULT_CONSTRUCTION_BOUND,
};
use ivgamma_core::polynomials::{gamma_expand, IntPolynomial};
use ivgamma_core::report::Status;
use ivgamma_core::signed_perms::{Interpretation, StatTables};
use ivgamma_core::simplicial::SimplicialComplex;
use ivgamma_core::suites::{run_suites, summary_lines, SuiteOptions};
use ivgamma_core::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "ivgamma", version, about = "exact interval-subdivision combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format for the primary artifact.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the primary artifact to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the interval subdivision of a complex given as JSON.
    Subdivide {
        /// Input complex: {"vertices": [...], "facets": [[...], ...]}.
        #[arg(long)]
        input: PathBuf,
        /// Output path for the subdivision JSON.
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit statistic tables for one order.
    Table {
        #[arg(long)]
        n: usize,
        /// bpjk: descents by first letter; bpp/bmp: descents of the two
        /// first-sign classes; slides: the descent/slide tables.
        #[arg(long)]
        stat: String,
        #[command(flatten)]
        output: OutputArgs,
        /// Number of worker threads (0 = library default).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Raise the enumeration guard (hard cap 9).
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Family polynomials and their gamma vectors.
    Eulerian {
        #[arg(long)]
        n: usize,
        /// Signed index; negative values select the barred family.
        #[arg(long, allow_hyphen_values = true)]
        j: i32,
        /// plain, symmetric or tilde.
        #[arg(long, default_value = "plain")]
        family: String,
        /// Also emit the gamma vector (symmetric and tilde families only).
        #[arg(long)]
        gamma: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// h- and gamma-vector of the subdivision from a symmetric h-vector or
    /// a complex.
    GammaInt {
        /// Comma-separated h-vector, e.g. 1,5,10,10,5,1.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        h: Option<Vec<String>>,
        /// Complex JSON file (h is computed from it).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Also construct the subdivision and compare.
        #[arg(long)]
        cross_check: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Local h-polynomial of the subdivided simplex.
    LocalH {
        #[arg(long)]
        n: usize,
        /// definition, derangement, excedance or all.
        #[arg(long, default_value = "all")]
        route: String,
        /// Write a JSON report of the routes.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Colored realizability of a face vector.
    Ffk {
        /// Comma-separated vector, e.g. 1,8.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        f: Vec<String>,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The decorated-permutation complex.
    Dec {
        #[arg(long)]
        n: usize,
        /// Run the structural and balance validation.
        #[arg(long)]
        check_balanced: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run verification suites and write the errata report.
    Verify {
        /// Comma-separated suite names; all suites when omitted.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        /// Seed for the randomized h-vector corpus.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of worker threads (0 = library default).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Write the full report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit { .. } => ExitCode::from(EXIT_RESOURCE),
                Error::InvalidInput(_) | Error::IndexOutOfRange { .. } => {
                    ExitCode::from(EXIT_USAGE)
                }
                _ => ExitCode::from(EXIT_FAIL),
            }
        }
    }
}

fn parse_vector(items: &[String]) -> Result<Vec<BigInt>, Error> {
    items
        .iter()
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidInput(format!("not an integer: {s:?}")))
        })
        .collect()
}

fn emit(output: &OutputArgs, json: serde_json::Value, csv: String) -> Result<(), Error> {
    let body = match output.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&json)?),
        Format::Csv => csv,
    };
    match &output.out {
        Some(path) => fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn configure_threads(threads: usize) {
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
}

fn poly_json(p: &IntPolynomial) -> serde_json::Value {
    serde_json::json!(p.to_decimal_strings())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Subdivide { input, out } => {
            let text = fs::read_to_string(&input)?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            let base = SimplicialComplex::from_json(&value)?;
            let subdivision = IntervalSubdivision::build(&base)?;
            fs::write(
                &out,
                format!("{}\n", serde_json::to_string_pretty(&subdivision.to_json())?),
            )?;
            let f = subdivision.complex().f_vector();
            println!(
                "subdivided: {} vertices, {} facets, f = {:?}",
                subdivision.intervals().len(),
                subdivision.complex().facets().len(),
                f.to_decimal_strings()
            );
            Ok(ExitCode::SUCCESS)
        }

        Command::Table { n, stat, output, threads, max_n } => {
            configure_threads(threads);
            let bounds = Bounds::with_max_n(max_n);
            let tables = if threads == 1 {
                StatTables::compute(n, &bounds)?
            } else {
                StatTables::compute_parallel(n, &bounds)?
            };
            let (json, csv) = render_table(&tables, &stat)?;
            emit(&output, json, csv)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Eulerian { n, j, family, gamma, output } => {
            let table = BPlusTable::up_to(n);
            let (poly, reference) = match family.as_str() {
                "plain" => (table.b_plus(n, j)?, None),
                "symmetric" => {
                    let (p, r) = table.symmetric(n, j)?;
                    (p, Some(r))
                }
                "tilde" => {
                    let (p, r) = table.tilde(n, j)?;
                    (p, Some(r))
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown family {other:?} (plain, symmetric, tilde)"
                    )))
                }
            };
            let mut json = serde_json::json!({
                "n": n,
                "j": j,
                "family": family,
                "coefficients": poly.to_decimal_strings(),
            });
            let mut csv = format!(
                "degree,coefficient\n{}",
                poly.to_decimal_strings()
                    .iter()
                    .enumerate()
                    .map(|(d, c)| format!("{d},{c}\n"))
                    .collect::<String>()
            );
            if let Some(r) = reference {
                json["ref_degree"] = serde_json::json!(r);
                if gamma {
                    let g = gamma_expand(&poly, r)?;
                    json["gamma"] = serde_json::json!(g.to_decimal_strings());
                    csv.push_str(&format!("gamma,{}\n", g.to_decimal_strings().join(";")));
                }
            } else if gamma {
                return Err(Error::InvalidInput(
                    "the plain family is not symmetric; gamma needs symmetric or tilde".into(),
                ));
            }
            emit(&output, json, csv)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::GammaInt { h, input, cross_check, output } => {
            let (sym, base) = match (h, input) {
                (Some(items), None) => (SymmetricH::new(parse_vector(&items)?)?, None),
                (None, Some(path)) => {
                    let text = fs::read_to_string(&path)?;
                    let value: serde_json::Value = serde_json::from_str(&text)?;
                    let base = SimplicialComplex::from_json(&value)?;
                    (SymmetricH::from_complex(&base)?, Some(base))
                }
                _ => {
                    return Err(Error::InvalidInput("pass exactly one of --h or --input".into()))
                }
            };
            let h_poly = h_int_from_h(&sym)?;
            let gamma = gamma_int(&sym)?;
            let mut json = serde_json::json!({
                "h": sym.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "h_int": h_poly.to_decimal_strings(),
                "gamma_int": {
                    "ref_degree": gamma.ref_degree,
                    "entries": gamma.to_decimal_strings(),
                },
                "nonnegative_input": sym.is_nonnegative(),
            });
            let mut agrees = true;
            if cross_check {
                let base = base
                    .ok_or_else(|| Error::InvalidInput("--cross-check needs --input".into()))?;
                let built = IntervalSubdivision::build(&base)?;
                let geometric = built.complex().h_polynomial();
                agrees = geometric == h_poly;
                json["cross_check"] = serde_json::json!({
                    "constructed_h": geometric.to_decimal_strings(),
                    "agrees": agrees,
                });
            }
            let csv = format!(
                "h_int,{}\ngamma_int,{}\n",
                h_poly.to_decimal_strings().join(";"),
                gamma.to_decimal_strings().join(";")
            );
            emit(&output, json, csv)?;
            Ok(if agrees { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
        }

        Command::LocalH { n, route, report, output } => {
            let bounds = Bounds::default();
            if !["all", "definition", "derangement", "excedance"].contains(&route.as_str()) {
                return Err(Error::InvalidInput(format!("unknown route {route:?}")));
            }
            let mut json = serde_json::json!({ "n": n });
            let mut rows = String::from("route,coefficients\n");
            let mut reference: Option<IntPolynomial> = None;
            let mut agree = true;
            let mut track = |name: &str, poly: IntPolynomial, json: &mut serde_json::Value| {
                json[name] = poly_json(&poly);
                rows.push_str(&format!("{name},{}\n", poly.to_decimal_strings().join(";")));
                match &reference {
                    Some(r) if *r != poly => agree = false,
                    Some(_) => {}
                    None => reference = Some(poly),
                }
            };
            let want = |r: &str| route == "all" || route == r;
            if want("definition") {
                track("definition", local_h_definition(n, DEFAULT_CONSTRUCTION_BOUND)?, &mut json);
            }
            if want("derangement") {
                track("derangement", local_h_derangement(n)?, &mut json);
            }
            if want("excedance") {
                track(
                    "excedance",
                    local_h_excedance(n, &Interpretation::CALIBRATED, &bounds)?,
                    &mut json,
                );
                json["excedance_interpretation"] =
                    serde_json::json!(Interpretation::CALIBRATED.name());
            }
            json["routes_agree"] = serde_json::json!(agree);
            if let Some(p) = &reference {
                if !p.is_zero() {
                    let xi = gamma_expand(p, n)?;
                    json["local_gamma"] = serde_json::json!({
                        "ref_degree": xi.ref_degree,
                        "entries": xi.to_decimal_strings(),
                    });
                }
            }
            if let Some(path) = report {
                fs::write(&path, format!("{}\n", serde_json::to_string_pretty(&json)?))?;
            }
            emit(&output, json, rows)?;
            Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
        }

        Command::Ffk { f, k, output } => {
            let vector = parse_vector(&f)?;
            let decision = is_k_ffk_explain(&vector, k);
            let json = serde_json::json!({
                "f": f,
                "k": k,
                "realizable": decision.ok,
                "reason": decision.reason,
            });
            let csv = format!("realizable,{}\nreason,\"{}\"\n", decision.ok, decision.reason);
            emit(&output, json, csv)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Dec { n, check_balanced, output } => {
            let (complex, colors) = dec_complex(n, check_balanced)?;
            let f = complex.f_vector();
            let gamma = ivgamma_core::balanced_ffk::gamma_of_type_b(n)?;
            let mut trimmed = gamma.entries.clone();
            while trimmed.last().is_some_and(|x| x == &BigInt::from(0)) {
                trimmed.pop();
            }
            let f_big: Vec<BigInt> = f.0.iter().map(|&x| BigInt::from(x)).collect();
            let json = serde_json::json!({
                "n": n,
                "f": f.to_decimal_strings(),
                "type_b_gamma": gamma.to_decimal_strings(),
                "f_equals_gamma": f_big == trimmed,
                "colors": colors.iter().max().copied().unwrap_or(0),
                "validated": check_balanced,
            });
            let csv = format!(
                "f,{}\ngamma,{}\n",
                f.to_decimal_strings().join(";"),
                gamma.to_decimal_strings().join(";")
            );
            emit(&output, json, csv)?;
            Ok(if f_big == trimmed { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
        }

        Command::Verify { suite, max_n, max_dim, seed, threads, report, output } => {
            configure_threads(threads);
            let opts = SuiteOptions { max_n, max_dim, seed };
            let result = run_suites(&suite, &opts)?;
            for line in summary_lines(&result) {
                println!("{line}");
            }
            println!(
                "{} identities: {} pass, {} corrected-form-passes, {} unresolved, {} fail",
                result.records.len(),
                result.count(Status::Pass),
                result.count(Status::CorrectedFormPasses),
                result.count(Status::Unresolved),
                result.fail_count(),
            );
            if let Some(path) = &report {
                fs::write(path, result.to_json_string() + "\n")?;
            }
            if output.out.is_some() || output.format == Format::Csv {
                let json = serde_json::to_value(&result)?;
                emit(&output, json, result.to_csv_string())?;
            }
            Ok(if result.fail_count() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            })
        }
    }
}

fn render_table(t: &StatTables, stat: &str) -> Result<(serde_json::Value, String), Error> {
    let n = t.n;
    match stat {
        "bpjk" => {
            let letters = StatTables::first_letters(n);
            let json = serde_json::json!({
                "n": n,
                "axes": ["first_letter", "descents"],
                "first_letters": letters,
                "counts": t.b_plus_jk,
            });
            let mut csv = String::from("first_letter");
            for k in 0..=n {
                csv.push_str(&format!(",des{k}"));
            }
            csv.push('\n');
            for (row, j) in t.b_plus_jk.iter().zip(&letters) {
                csv.push_str(&j.to_string());
                for c in row {
                    csv.push_str(&format!(",{c}"));
                }
                csv.push('\n');
            }
            Ok((json, csv))
        }
        "bpp" | "bmp" => {
            let counts = if stat == "bpp" { &t.b_pp } else { &t.b_mp };
            let json = serde_json::json!({
                "n": n,
                "axes": ["descents"],
                "counts": counts,
            });
            let mut csv = String::from("descents,count\n");
            for (k, c) in counts.iter().enumerate() {
                csv.push_str(&format!("{k},{c}\n"));
            }
            Ok((json, csv))
        }
        "slides" => {
            let json = serde_json::json!({
                "n": n,
                "axes": ["descents", "slides_minus_one"],
                "all_positive": t.w_pp,
                "negative_first": t.w_mp,
                "all_positive_diagonal": t.b_pp_diag(),
                "negative_first_diagonal": t.b_mp_diag(),
                "diagonal_slides_all_len2": t.diag_slides_all_len2,
            });
            let mut csv = String::from("class,descents");
            for s in 0..t.w_pp[0].len() {
                csv.push_str(&format!(",s{s}"));
            }
            csv.push('\n');
            for (name, rows) in [("all_positive", &t.w_pp), ("negative_first", &t.w_mp)] {
                for (k, row) in rows.iter().enumerate() {
                    csv.push_str(&format!("{name},{k}"));
                    for c in row {
                        csv.push_str(&format!(",{c}"));
                    }
                    csv.push('\n');
                }
            }
            Ok((json, csv))
        }
        other => Err(Error::InvalidInput(format!(
            "unknown stat {other:?} (bpjk, bpp, bmp, slides)"
        ))),
    }
}
