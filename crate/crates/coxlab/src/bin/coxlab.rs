use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use coxlab::arrangement::IntersectionLattice;
use coxlab::group::{self, enumerate_group, group_cap};
use coxlab::hurwitz;
use coxlab::identities::{self, Ctx, IdentityReport};
use coxlab::laplacian;
use coxlab::nc::nc_of_group;
use coxlab::roots::{CoxeterType, RootSystem};
use coxlab::Error;

#[derive(Parser)]
#[command(name = "coxlab", about = "Exact computations for finite reflection groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Lift the group-order cap for heavy types (H4, E6, B5).
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Group-level data.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Intersection-lattice data.
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// W-Laplacian data.
    Laplacian {
        #[command(subcommand)]
        cmd: LaplacianCmd,
    },
    /// Run one identity check.
    Verify {
        identity: String,
        r#type: String,
        /// kmax for chapoton (default 4).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Noncrossing-partition lattice data.
    Nc {
        #[command(subcommand)]
        cmd: NcCmd,
    },
    /// Factorizations and the dual presentation.
    Hurwitz {
        #[command(subcommand)]
        cmd: HurwitzCmd,
    },
    /// Run identity suites.
    Suite {
        #[command(subcommand)]
        cmd: SuiteCmd,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Rank, order, reflections, Coxeter numbers, degrees.
    Info { r#type: String },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Flat counts per dimension and the characteristic polynomial.
    Summary { r#type: String },
}

#[derive(Subcommand)]
enum LaplacianCmd {
    /// det(tI + L_W).
    Charpoly { r#type: String },
}

#[derive(Subcommand)]
enum NcCmd {
    /// Number of multichains w_1 <= ... <= w_k.
    Zeta {
        r#type: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum HurwitzCmd {
    /// Write the dual presentation to a file (text, plus a .json mirror).
    Export {
        r#type: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum SuiteCmd {
    /// Every applicable identity over the default (or given) types.
    All {
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        types: Option<Vec<String>>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = if cli.allow_large {
        10_000_000
    } else {
        group_cap()
    };
    match run(&cli, cap) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BadType(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: &Cli, cap: usize) -> coxlab::Result<bool> {
    match &cli.cmd {
        Cmd::Group {
            cmd: GroupCmd::Info { r#type },
        } => group_info(r#type, cap, cli.format),
        Cmd::Lattice {
            cmd: LatticeCmd::Summary { r#type },
        } => lattice_summary(r#type, cli.format),
        Cmd::Laplacian {
            cmd: LaplacianCmd::Charpoly { r#type },
        } => laplacian_charpoly(r#type, cli.format),
        Cmd::Verify { identity, r#type, k } => verify(identity, r#type, *k, cap, cli.format),
        Cmd::Nc {
            cmd: NcCmd::Zeta { r#type, k },
        } => nc_zeta(r#type, *k, cap, cli.format),
        Cmd::Hurwitz {
            cmd: HurwitzCmd::Export { r#type, out },
        } => hurwitz_export(r#type, out, cap, cli.format),
        Cmd::Suite {
            cmd: SuiteCmd::All { types },
        } => suite_all(types.as_deref(), cli.format),
    }
}

fn comma(v: &[usize]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn group_info(name: &str, cap: usize, format: Format) -> coxlab::Result<bool> {
    let ctype = CoxeterType::parse(name)?;
    let rs = RootSystem::build(&ctype)?;
    let gt = enumerate_group(&rs, cap)?;
    let multiset = rs.cox_multiset(&rs.all_root_indices());
    let degrees = group::degree_multiset(&rs, None)?;
    let field = if rs.field_d == 0 {
        "Q".to_string()
    } else {
        format!("Q(sqrt({}))", rs.field_d)
    };
    match format {
        Format::Json => {
            let v = json!({
                "type": ctype.to_string(),
                "rank": rs.rank,
                "order": gt.order.to_string(),
                "positive_roots": rs.num_positive_roots(),
                "coxeter_numbers": multiset,
                "degrees": degrees,
                "field": field,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        Format::Table => {
            println!("type: {ctype}");
            println!("rank: {}", rs.rank);
            println!("order: {}", gt.order);
            println!("positive roots: {}", rs.num_positive_roots());
            println!("coxeter numbers: {}", comma(&multiset));
            println!("degrees: {}", comma(&degrees));
            println!("field: {field}");
        }
    }
    Ok(true)
}

fn lattice_summary(name: &str, format: Format) -> coxlab::Result<bool> {
    let ctype = CoxeterType::parse(name)?;
    let rs = RootSystem::build(&ctype)?;
    let lat = IntersectionLattice::build(&rs);
    let by_dim: Vec<usize> = (0..=lat.ambient_dim)
        .map(|d| lat.flats.iter().filter(|f| f.dim == d).count())
        .collect();
    let chi = lat.restriction_char_poly(lat.bottom());
    let chambers = lat.restriction_chambers(lat.bottom());
    match format {
        Format::Json => {
            let v = json!({
                "type": ctype.to_string(),
                "flats": lat.len(),
                "flats_by_dimension": by_dim,
                "characteristic_polynomial": chi.to_string(),
                "chambers": chambers.to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        Format::Table => {
            println!("type: {ctype}");
            println!("flats: {}", lat.len());
            let parts: Vec<String> = by_dim
                .iter()
                .enumerate()
                .map(|(d, c)| format!("{d}:{c}"))
                .collect();
            println!("flats by dimension: {}", parts.join(" "));
            println!("characteristic polynomial: {chi}");
            println!("chambers: {chambers}");
        }
    }
    Ok(true)
}

fn laplacian_charpoly(name: &str, format: Format) -> coxlab::Result<bool> {
    let ctype = CoxeterType::parse(name)?;
    let rs = RootSystem::build(&ctype)?;
    let p = laplacian::char_poly(&rs, &rs.all_root_indices())?;
    match format {
        Format::Json => {
            let v = json!({
                "type": ctype.to_string(),
                "charpoly": p.to_string(),
                "coefficients": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        Format::Table => println!("{p}"),
    }
    Ok(true)
}

fn print_report(r: &IdentityReport, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&r).unwrap());
        }
        Format::Table => {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            println!("{verdict} {} {}", r.identity, r.group_type);
            println!("  lhs: {}", r.lhs);
            println!("  rhs: {}", r.rhs);
            println!("  notes: {}", r.notes);
        }
    }
}

fn verify(
    identity: &str,
    name: &str,
    k: Option<usize>,
    cap: usize,
    format: Format,
) -> coxlab::Result<bool> {
    if !identities::IDENTITY_NAMES.contains(&identity) {
        return Err(Error::BadType(format!("unknown identity: {identity}")));
    }
    let ctx = Ctx::with_cap(name, cap)?;
    let r = identities::check(identity, &ctx, k)?;
    print_report(&r, format);
    Ok(r.pass)
}

fn nc_zeta(name: &str, k: usize, cap: usize, format: Format) -> coxlab::Result<bool> {
    if k == 0 {
        return Err(Error::BadType("zeta needs k >= 1".into()));
    }
    let ctype = CoxeterType::parse(name)?;
    let rs = RootSystem::build(&ctype)?;
    let gt = enumerate_group(&rs, cap)?;
    let z = nc_of_group(&rs, &gt)?.zeta(k);
    match format {
        Format::Json => {
            let v = json!({
                "type": ctype.to_string(),
                "k": k,
                "zeta": z.to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        Format::Table => println!("{z}"),
    }
    Ok(true)
}

fn hurwitz_export(
    name: &str,
    out: &PathBuf,
    cap: usize,
    format: Format,
) -> coxlab::Result<bool> {
    let ctype = CoxeterType::parse(name)?;
    let rs = RootSystem::build(&ctype)?;
    let gt = enumerate_group(&rs, cap)?;
    let c = gt
        .lookup(&group::coxeter_element(&rs, group::CoxeterMode::Bipartite))
        .expect("coxeter element enumerated");
    let fs = hurwitz::enumerate_factorizations(&gt, c);
    let pres = hurwitz::export_dual_presentation(&gt, &fs);
    let json_path = out.with_extension(match out.extension() {
        Some(ext) => format!("{}.json", ext.to_string_lossy()),
        None => "json".to_string(),
    });
    std::fs::write(out, pres.to_text())
        .map_err(|e| Error::PropertyViolation(format!("write {}: {e}", out.display())))?;
    std::fs::write(
        &json_path,
        serde_json::to_string_pretty(&pres.to_json()).unwrap(),
    )
    .map_err(|e| Error::PropertyViolation(format!("write {}: {e}", json_path.display())))?;
    match format {
        Format::Json => {
            let v = json!({
                "type": ctype.to_string(),
                "words": pres.words.len(),
                "text": out.display().to_string(),
                "json": json_path.display().to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        Format::Table => {
            println!("wrote {} and {}", out.display(), json_path.display());
            println!("words: {}", pres.words.len());
        }
    }
    Ok(true)
}

fn suite_all(types: Option<&[String]>, format: Format) -> coxlab::Result<bool> {
    let names: Vec<String> = match types {
        Some(ts) => ts.to_vec(),
        None => identities::DEFAULT_SUITE_TYPES
            .iter()
            .map(|s| s.to_string())
            .collect(),
    };
    let reports = identities::run_suite(&names, None)?;
    let all_passed = reports.iter().all(|r| r.pass);
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&reports).unwrap());
        }
        Format::Table => {
            for r in &reports {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                println!("{verdict} {:<22} {}", r.identity, r.group_type);
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            println!("passed {passed}/{}", reports.len());
        }
    }
    Ok(all_passed)
}
