//! Command-line front end. [`run`] returns the process exit code: 0 on
//! success, 1 on domain errors, 2 on usage errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::census::{census, CENSUS_HEADER};
use crate::classify::{classify_abelian, cyclic_classes};
use crate::dessin::{classify_dessins, classify_dessins_by_extension, Dessin};
use crate::emit::{csv_table, emit_dessin, emit_entries, pipe_table, ClassEntry, Format};
use crate::error::{Error, Result};
use crate::group::{build_group, ConstructorFamily, GroupSpec, AUTOMORPHISM_BOUND};
use crate::ops::{dual, extended_group, join, sylow_decompose, triality, wilson, TrialityElement};
use crate::verify::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "dessins",
    version,
    about = "Regular dessins d'enfants over finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
    Dot,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Dot => Format::Dot,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form classification of cyclic or abelian dessins
    Classify {
        #[command(subcommand)]
        family: ClassifyCommand,
    },
    /// Brute-force classification of the dessins on one group
    Enumerate {
        #[arg(long, value_parser = parse_spec)]
        group: GroupSpec,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// Invariants of a dessin given as JSON
    Invariants {
        #[command(flatten)]
        input: DessinInput,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// Apply an operation to dessins given as JSON
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Check known identities; one JSON line per check
    Verify {
        #[command(subcommand)]
        suite: VerifyCommand,
    },
    /// Class counts for every constructor group up to an order
    Census {
        #[arg(long)]
        max_order: u64,
        /// Comma-separated families; all when omitted
        #[arg(long, value_delimiter = ',', value_parser = parse_family)]
        constructors: Vec<ConstructorFamily>,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
}

#[derive(Debug, Subcommand)]
enum ClassifyCommand {
    /// Dessins on Z_m
    Cyclic {
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// Dessins on Z_n ⊕ Z_m, n | m
    Abelian {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        symmetric_only: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
}

#[derive(Debug, Args)]
struct DessinInput {
    /// JSON file, or `-` for standard input
    #[arg(long)]
    dessin: PathBuf,
}

#[derive(Debug, Args)]
struct OpOutput {
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Debug, Subcommand)]
enum OpCommand {
    /// Swap the vertex colours
    Dual {
        #[command(flatten)]
        input: DessinInput,
        #[command(flatten)]
        output: OpOutput,
    },
    /// Permute black vertices, white vertices and faces, e.g. `--perm wfb`
    Triality {
        #[arg(long, value_parser = parse_perm)]
        perm: TrialityElement,
        #[command(flatten)]
        input: DessinInput,
        #[command(flatten)]
        output: OpOutput,
    },
    /// (x, y) ↦ (x^i, y^j)
    Wilson {
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        #[command(flatten)]
        input: DessinInput,
        #[command(flatten)]
        output: OpOutput,
    },
    /// Parallel product of two dessins
    Join {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[command(flatten)]
        output: OpOutput,
    },
    /// Quotient by the core
    Shadow {
        #[command(flatten)]
        input: DessinInput,
        #[command(flatten)]
        output: OpOutput,
    },
    /// Sylow components of a nilpotent dessin
    Decompose {
        #[command(flatten)]
        input: DessinInput,
        #[command(flatten)]
        output: OpOutput,
    },
    /// Extension of a symmetric dessin's group by the swap of x and y
    Extend {
        #[command(flatten)]
        input: DessinInput,
        #[command(flatten)]
        output: OpOutput,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    C6,
    Alt4,
    Q8,
    Meta64,
    Heisenberg {
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    Join144,
    Decomposition {
        #[arg(long, value_parser = parse_spec)]
        group: GroupSpec,
    },
    Anumber {
        #[arg(long, default_value_t = 24)]
        max: u64,
    },
}

fn parse_spec(s: &str) -> std::result::Result<GroupSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_perm(s: &str) -> std::result::Result<TrialityElement, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<ConstructorFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Classify { family } => {
            let text = match family {
                ClassifyCommand::Cyclic { m, format } => classify_cyclic(m, format.into())?,
                ClassifyCommand::Abelian {
                    n,
                    m,
                    symmetric_only,
                    format,
                } => classify_abelian_text(n, m, symmetric_only, format.into())?,
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Enumerate { group, format } => {
            out.write_all(enumerate(&group, format.into())?.as_bytes())?;
        }
        Command::Invariants { input, format } => {
            let d = read_dessin(&input.dessin)?;
            out.write_all(emit_dessin(&d, format.into())?.as_bytes())?;
        }
        Command::Op { op } => out.write_all(apply_op(op)?.as_bytes())?,
        Command::Verify { suite } => {
            let suite = match suite {
                VerifyCommand::C6 => Suite::C6,
                VerifyCommand::Alt4 => Suite::Alt4,
                VerifyCommand::Q8 => Suite::Q8,
                VerifyCommand::Meta64 => Suite::Meta64,
                VerifyCommand::Heisenberg { p } => Suite::Heisenberg { p },
                VerifyCommand::Join144 => Suite::Join144,
                VerifyCommand::Decomposition { group } => Suite::Decomposition { group },
                VerifyCommand::Anumber { max } => Suite::Anumber { max },
            };
            let results = run_suite(&suite)?;
            for r in &results {
                writeln!(out, "{}", r.to_json_line())?;
            }
            if results.iter().any(|r| !r.pass) {
                return Ok(1);
            }
        }
        Command::Census {
            max_order,
            constructors,
            format,
        } => {
            let families = if constructors.is_empty() {
                ConstructorFamily::ALL.to_vec()
            } else {
                constructors
            };
            let rows = census(max_order, &families)?;
            let text = match Format::from(format) {
                Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
                Format::Table => pipe_table(&CENSUS_HEADER, &cells(&rows)),
                Format::Csv => csv_table(&CENSUS_HEADER, &cells(&rows))?,
                Format::Dot => return Err(Error::Unsupported("census has no dot form".into())),
            };
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(0)
}

fn cells(rows: &[crate::census::CensusRow]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.cells()).collect()
}

/// Classes of `C(m; r, s)`, listed by genus and then by pair, named `C1, C2, …`.
pub fn cyclic_entries(m: u64) -> Result<Vec<ClassEntry>> {
    let group = Arc::new(build_group(&GroupSpec::Cyclic(m))?);
    let mut entries: Vec<ClassEntry> = cyclic_classes(m)?
        .iter()
        .map(|c| {
            let d = Dessin::new(group.clone(), c.r as usize, c.s as usize)?;
            Ok(ClassEntry::new(String::new(), d))
        })
        .collect::<Result<_>>()?;
    entries.sort_by_key(|e| (e.invariants.genus, e.dessin.x(), e.dessin.y()));
    for (i, e) in entries.iter_mut().enumerate() {
        e.id = format!("C{}", i + 1);
    }
    Ok(entries)
}

fn classify_cyclic(m: u64, format: Format) -> Result<String> {
    emit_entries(&cyclic_entries(m)?, format)
}

fn classify_abelian_text(n: u64, m: u64, symmetric_only: bool, format: Format) -> Result<String> {
    let list = classify_abelian(n, m)?;
    let mut entries = Vec::new();
    let mut components = Vec::new();
    for (i, rep) in list.representatives.iter().enumerate() {
        let entry = ClassEntry::new(format!("A{}", i + 1), rep.dessin.clone());
        if symmetric_only && !entry.invariants.symmetric {
            continue;
        }
        components.push(
            rep.components
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
        );
        entries.push(entry);
    }
    if format != Format::Json {
        return emit_entries(&entries, format);
    }
    let mut classes: Vec<serde_json::Value> =
        serde_json::from_str(&emit_entries(&entries, format)?)?;
    for (class, comps) in classes.iter_mut().zip(components) {
        class["components"] = json!(comps);
    }
    let value = json!({
        "n": n,
        "m": m,
        "total_count": list.total_count,
        "symmetric_count": list.symmetric_count,
        "classes": classes,
    });
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

fn enumerate(spec: &GroupSpec, format: Format) -> Result<String> {
    let group = Arc::new(build_group(spec)?);
    let c = if group.order() <= AUTOMORPHISM_BOUND {
        classify_dessins(&group)?
    } else {
        classify_dessins_by_extension(&group)
    };
    let entries: Vec<ClassEntry> = c
        .representatives
        .iter()
        .enumerate()
        .map(|(i, d)| ClassEntry::new(format!("D{}", i + 1), d.clone()))
        .collect();
    if format != Format::Json {
        return emit_entries(&entries, format);
    }
    let classes: serde_json::Value = serde_json::from_str(&emit_entries(&entries, format)?)?;
    let value = json!({
        "group": spec,
        "order": group.order(),
        "automorphisms": c.automorphisms,
        "generating_pairs": c.generating_pairs,
        "classes": classes,
    });
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

fn read_dessin(path: &Path) -> Result<Dessin> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    let value: serde_json::Value = serde_json::from_str(&text)?;
    // accept the `{"dessin": …, "invariants": …}` form written by this tool
    match value.get("dessin") {
        Some(inner) => Dessin::from_json(&inner.to_string()),
        None => Dessin::from_json(&text),
    }
}

fn apply_op(op: OpCommand) -> Result<String> {
    let (result, output) = match op {
        OpCommand::Dual { input, output } => (dual(&read_dessin(&input.dessin)?), output),
        OpCommand::Triality {
            perm,
            input,
            output,
        } => (triality(&read_dessin(&input.dessin)?, perm), output),
        OpCommand::Wilson {
            i,
            j,
            input,
            output,
        } => (wilson(&read_dessin(&input.dessin)?, i, j)?, output),
        OpCommand::Join {
            left,
            right,
            output,
        } => (join(&read_dessin(&left)?, &read_dessin(&right)?)?, output),
        OpCommand::Shadow { input, output } => (read_dessin(&input.dessin)?.shadow()?, output),
        OpCommand::Decompose { input, output } => {
            let parts = sylow_decompose(&read_dessin(&input.dessin)?)?;
            let entries: Vec<ClassEntry> = parts
                .into_iter()
                .map(|d| {
                    let p = crate::numth::factorize(d.order() as u64)
                        .map(|f| f.primes().next().unwrap_or(1))
                        .unwrap_or(1);
                    ClassEntry::new(format!("p={p}"), d)
                })
                .collect();
            return emit_entries(&entries, output.format.into());
        }
        OpCommand::Extend { input, output } => {
            let d = read_dessin(&input.dessin)?;
            let ext = extended_group(&d)?;
            let xy = ext.mul(d.x(), d.y());
            let center = ext.center();
            let value = json!({
                "order": ext.order(),
                "nilpotency_class": ext.nilpotency_class(),
                "center_order": center.len(),
                "center_generated_by_xy": ext.cyclic_subgroup(xy) == center,
                "table": ext.rows(),
                "labels": ext.labels(),
            });
            return match Format::from(output.format) {
                Format::Json => Ok(serde_json::to_string_pretty(&value)? + "\n"),
                Format::Table => Ok(format!(
                    "order: {}\nnilpotency class: {}\ncenter order: {}\ncenter generated by xy: {}\n",
                    ext.order(),
                    ext.nilpotency_class().map_or_else(|| "-".into(), |c| c.to_string()),
                    center.len(),
                    if value["center_generated_by_xy"] == true { "Yes" } else { "No" },
                )),
                f => Err(Error::Unsupported(format!("extend has no {f} form"))),
            };
        }
    };
    emit_dessin(&result, output.format.into())
}
