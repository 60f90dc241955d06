use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use unimod::construction;
use unimod::frames;
use unimod::glue::{self, AnalyzeOptions};
use unimod::known::{self, LONG_SHADOW_FRAME_GRAPH, LONG_SHADOW_SOURCES};
use unimod::lattice::{self, EnumOptions, Norm};

mod derive;
mod report;
mod source;

use report::{markdown_table, norm_text, norm_value, pair_text, row_json, status};

#[derive(Parser)]
#[command(
    name = "unimod",
    version,
    about = "Unimodular lattices from self-dual codes over Z_k"
)]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Format {
    /// Print JSON.
    #[arg(long, conflicts_with = "md")]
    json: bool,
    /// Print Markdown.
    #[arg(long)]
    md: bool,
}

#[derive(Args, Clone, Copy)]
struct Budget {
    /// Node budget per enumeration.
    #[arg(long, default_value_t = EnumOptions::default().budget)]
    budget: u64,
}

impl Budget {
    fn options(self) -> EnumOptions {
        EnumOptions {
            budget: self.budget,
        }
    }
}

#[derive(Args)]
struct SourceArgs {
    /// Dataset name (C36_1..C36_10, D36_1..D36_9, E36_1, E36_2) or N36_1..N36_4.
    name: Option<String>,
    /// Code file (`k n r` header) or lattice file (`m s` header).
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum norm, kissing number, shadow data and neighbor norm-3 counts.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Norm bound for the theta prefix, e.g. `4` or `7/2`.
        #[arg(long, default_value = "4", value_parser = parse_norm)]
        bound: Norm,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        format: Format,
    },
    /// Invariants of all dataset lattices against the reference table.
    Table1 {
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        format: Format,
    },
    /// Extract and check the minimum-norm-3 neighbors with long shadow.
    LongShadow {
        /// Dataset lattices to extract from (default: the four known sources).
        #[arg(long = "source")]
        sources: Vec<String>,
        /// Directory for the extracted lattice files.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        format: Format,
    },
    /// Run a symbolic derivation and compare it with the reference values.
    Derive {
        #[arg(value_enum)]
        target: derive::Target,
        #[command(flatten)]
        format: Format,
    },
    /// Norm-3 orthogonality graph, maximum clique and 3-frame verdict.
    Frames {
        #[command(flatten)]
        source: SourceArgs,
        /// Write the graph as an adjacency list.
        #[arg(long)]
        adjacency: Option<PathBuf>,
        /// Print the vectors of the clique witness.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        format: Format,
    },
    /// Print the code or Construction A lattice of a dataset entry.
    Export {
        name: String,
        /// Print the code instead of the lattice.
        #[arg(long)]
        code: bool,
    },
}

fn parse_norm(s: &str) -> Result<Norm, String> {
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num: i64 = num.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    let den: i64 = den.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    if den <= 0 || num < 0 {
        return Err(format!("`{s}` is not a nonnegative rational"));
    }
    Ok(Norm::new(num, den))
}

fn emit(format: Format, default_json: bool, value: &Value, markdown: impl FnOnce() -> String) {
    if format.json || (default_json && !format.md) {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("JSON values serialize")
        );
    } else {
        print!("{}", markdown());
    }
}

fn analyze(source: SourceArgs, bound: Norm, budget: Budget, format: Format) -> Result<bool> {
    let src = source::resolve(
        source.name.as_deref(),
        source.file.as_ref(),
        budget.options(),
    )?;
    let t = Instant::now();
    let r = glue::analyze(
        &src.lattice,
        AnalyzeOptions {
            bound,
            enumeration: budget.options(),
        },
    )?;
    eprintln!(
        "{}: analyzed in {:.1}s",
        src.name,
        t.elapsed().as_secs_f64()
    );
    let row = row_json(&src.name, &r);
    emit(format, true, &row, || {
        markdown_table(
            &[
                "lattice",
                "dim",
                "min",
                "tau",
                "alpha",
                "shadow min",
                "{n1, n2}",
            ],
            &[vec![
                src.name.clone(),
                r.dimension.to_string(),
                norm_text(r.min_norm),
                r.kissing.map_or("-".into(), |k| k.to_string()),
                r.alpha.to_string(),
                norm_text(r.shadow_min),
                pair_text(r.n_counts),
            ]],
        )
    });
    Ok(true)
}

fn table1(budget: Budget, format: Format) -> Result<bool> {
    let mut rows = Vec::new();
    let mut table = Vec::new();
    let mut all = true;
    for expected in known::DATASET_ROWS {
        let t = Instant::now();
        let l = source::dataset_lattice(expected.name)?;
        let r = glue::analyze(
            &l,
            AnalyzeOptions {
                enumeration: budget.options(),
                ..Default::default()
            },
        )?;
        let pass = r.min_norm == Some(Norm::from_integer(4))
            && r.kissing == Some(expected.kissing)
            && r.n_counts == Some(expected.n_counts);
        all &= pass;
        eprintln!(
            "{}: {} ({:.1}s)",
            expected.name,
            status(pass),
            t.elapsed().as_secs_f64()
        );
        let mut row = row_json(expected.name, &r);
        row["expected"] = json!({"tau": expected.kissing, "n_counts": expected.n_counts});
        row["status"] = json!(status(pass));
        rows.push(row);
        table.push(vec![
            expected.name.to_string(),
            norm_text(r.min_norm),
            r.kissing.map_or("-".into(), |k| k.to_string()),
            pair_text(r.n_counts),
            r.alpha.to_string(),
            norm_text(r.shadow_min),
            format!(
                "{} {}",
                expected.kissing,
                pair_text(Some(expected.n_counts))
            ),
            status(pass).to_string(),
        ]);
    }
    let value = json!({"rows": rows, "status": status(all)});
    emit(format, false, &value, || {
        markdown_table(
            &[
                "lattice",
                "min",
                "tau",
                "{n1, n2}",
                "alpha",
                "shadow min",
                "expected",
                "status",
            ],
            &table,
        )
    });
    Ok(all)
}

fn long_shadow(
    sources: Vec<String>,
    out_dir: Option<PathBuf>,
    budget: Budget,
    format: Format,
) -> Result<bool> {
    let sources = if sources.is_empty() {
        LONG_SHADOW_SOURCES.map(String::from).to_vec()
    } else {
        sources
    };
    if let Some(dir) = &out_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let opts = budget.options();
    let mut all = true;
    let mut rows = Vec::new();
    let mut table = Vec::new();
    for src in &sources {
        let t = Instant::now();
        let l = source::dataset_lattice(src)?;
        let name = match LONG_SHADOW_SOURCES.iter().position(|s| s == src) {
            Some(i) => source::neighbor_name(i),
            None => format!("neighbor_{src}"),
        };
        let Some(n) = glue::long_shadow_extract(&l, opts)? else {
            let counts = glue::n_counts(&l, opts)?;
            eprintln!(
                "{src}: refused, neighbor norm-3 counts {}",
                pair_text(Some(counts))
            );
            all = false;
            rows.push(
                json!({"source": src, "refused": true, "n_counts": counts, "status": "FAIL"}),
            );
            table.push(vec![
                src.clone(),
                "-".into(),
                "-".into(),
                "-".into(),
                "-".into(),
                format!("refused {}", pair_text(Some(counts))),
            ]);
            continue;
        };
        let theta = lattice::theta_prefix(&n, Norm::from_integer(3), opts)?;
        let shadow_min = glue::shadow(&n)?.shadow_min(Norm::from_integer(0), opts)?;
        let pass = theta.min_norm() == Some(Norm::from_integer(3))
            && theta.kissing() == Some(960)
            && shadow_min == Norm::from_integer(5);
        all &= pass;
        let mut file = Value::Null;
        if let Some(dir) = &out_dir {
            let path = dir.join(format!("{name}.lat"));
            std::fs::write(&path, n.to_text())
                .with_context(|| format!("writing {}", path.display()))?;
            file = json!(path.display().to_string());
        }
        eprintln!(
            "{src}: {name} {} ({:.1}s)",
            status(pass),
            t.elapsed().as_secs_f64()
        );
        rows.push(json!({
            "name": name,
            "source": src,
            "min_norm": norm_value(theta.min_norm()),
            "kissing": theta.kissing(),
            "shadow_min": norm_value(Some(shadow_min)),
            "file": file,
            "status": status(pass),
        }));
        table.push(vec![
            name,
            src.clone(),
            norm_text(theta.min_norm()),
            theta.kissing().map_or("-".into(), |k| k.to_string()),
            shadow_min.to_string(),
            status(pass).to_string(),
        ]);
    }
    let value = json!({"neighbors": rows, "status": status(all)});
    emit(format, false, &value, || {
        markdown_table(
            &[
                "lattice",
                "source",
                "min",
                "kissing",
                "shadow min",
                "status",
            ],
            &table,
        )
    });
    Ok(all)
}

fn frames_cmd(
    source: SourceArgs,
    adjacency: Option<PathBuf>,
    witness: bool,
    budget: Budget,
    format: Format,
) -> Result<bool> {
    let src = source::resolve(
        source.name.as_deref(),
        source.file.as_ref(),
        budget.options(),
    )?;
    let t = Instant::now();
    let fg = frames::frame_graph(&src.lattice, budget.options())?;
    eprintln!(
        "{}: frame graph with {} vertices ({:.1}s)",
        src.name,
        fg.vertex_count(),
        t.elapsed().as_secs_f64()
    );
    if let Some(path) = &adjacency {
        std::fs::write(path, fg.graph.to_adjacency_list())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let dim = src.lattice.dim();
    let clique = frames::max_clique(&fg.graph, Some(dim));
    eprintln!(
        "{}: clique search done ({:.1}s)",
        src.name,
        t.elapsed().as_secs_f64()
    );
    let frame = clique.size >= dim && fg.verify_frame(&clique.witness[..dim]);
    let valency = fg.graph.regular_degree();
    // the extracted neighbors have a known graph
    let expected = source::neighbor_index(&src.name).map(|_| LONG_SHADOW_FRAME_GRAPH);
    let pass = expected.is_none_or(|(v, d, c)| {
        fg.vertex_count() == v && valency == Some(d) && clique.size == c && !clique.lower_bound_only
    });
    let vectors: Vec<&Vec<i64>> = clique.witness.iter().map(|&v| &fg.vectors[v]).collect();
    let mut value = json!({
        "name": src.name,
        "vertices": fg.vertex_count(),
        "edges": fg.graph.edge_count(),
        "valency": valency,
        "max_clique": clique.size,
        "lower_bound_only": clique.lower_bound_only,
        "frame": frame,
        "witness": clique.witness,
        "scale": fg.scale,
    });
    if witness {
        value["witness_vectors"] = json!(vectors);
    }
    if let Some((v, d, c)) = expected {
        value["expected"] = json!({"vertices": v, "valency": d, "max_clique": c});
        value["status"] = json!(status(pass));
    }
    emit(format, false, &value, || {
        let bound = if clique.lower_bound_only { ">= " } else { "" };
        let mut s = format!("lattice: {}\n", src.name);
        s.push_str(&format!(
            "vertices: {}\nedges: {}\n",
            fg.vertex_count(),
            fg.graph.edge_count()
        ));
        s.push_str(&format!(
            "valency: {}\n",
            match valency {
                Some(d) => d.to_string(),
                None if fg.vertex_count() == 0 => "-".into(),
                None => "irregular".into(),
            }
        ));
        s.push_str(&format!("maximum clique: {bound}{}\n", clique.size));
        s.push_str(&format!(
            "3-frame: {}\n",
            if frame { "found" } else { "none" }
        ));
        if witness {
            s.push_str(&format!("witness vectors (scale {}):\n", fg.scale));
            for v in &vectors {
                s.push_str(&format!(
                    "  {}\n",
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
        }
        if expected.is_some() {
            s.push_str(&format!("status: {}\n", status(pass)));
        }
        s
    });
    Ok(pass)
}

fn export(name: &str, code: bool) -> Result<bool> {
    let c = construction::dataset(name)?;
    if code {
        print!("{}", c.to_text());
    } else {
        print!("{}", construction::construction_a(&c)?.to_text());
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Analyze {
            source,
            bound,
            budget,
            format,
        } => analyze(source, bound, budget, format),
        Command::Table1 { budget, format } => table1(budget, format),
        Command::LongShadow {
            sources,
            out_dir,
            budget,
            format,
        } => long_shadow(sources, out_dir, budget, format),
        Command::Derive { target, format } => {
            let d = derive::run(target)?;
            let mut value = d.json;
            value["status"] = json!(status(d.pass));
            emit(format, false, &value, || {
                format!("{}{}\n", d.text, status(d.pass))
            });
            Ok(d.pass)
        }
        Command::Frames {
            source,
            adjacency,
            witness,
            budget,
            format,
        } => frames_cmd(source, adjacency, witness, budget, format),
        Command::Export { name, code } => export(&name, code),
    }
}

/// 3 for an exhausted enumeration budget, 2 for any other input or library error.
fn error_code(err: &anyhow::Error) -> u8 {
    let budget = err.chain().any(|c| {
        matches!(
            c.downcast_ref::<unimod::Error>(),
            Some(unimod::Error::BudgetExceeded { .. })
        )
    });
    if budget {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms_parse() {
        assert_eq!(parse_norm("4").unwrap(), Norm::from_integer(4));
        assert_eq!(parse_norm("7/2").unwrap(), Norm::new(7, 2));
        assert!(parse_norm("-1").is_err());
        assert!(parse_norm("1/0").is_err());
        assert!(parse_norm("x").is_err());
    }

    #[test]
    fn budget_errors_map_to_3() {
        let e =
            anyhow::Error::new(unimod::Error::BudgetExceeded { budget: 1 }).context("enumerating");
        assert_eq!(error_code(&e), 3);
        assert_eq!(error_code(&anyhow::Error::new(unimod::Error::NotOdd)), 2);
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
