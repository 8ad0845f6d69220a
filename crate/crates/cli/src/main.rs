//! `twig` — exact treewidth, separator and clique enumeration, and oracles
//! over PACE-style `.gr` files.
//!
//! Exit codes: 0 on success, 1 for a negative decision verdict (`tw > k`) or
//! a self-check mismatch, 2 for unusable input.

mod selfcheck;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use twig::graph::Graph;
use twig::io;
use twig::oracle;
use twig::pmc::{is_nice_pmc, list_pmcs};
use twig::polyspace::{treewidth_polyspace_with_stats, PolySpaceConfig, Ratio};
use twig::separators::{list_minimal_separators, list_minimal_separators_bounded, SeparatorFamily};
use twig::set::VertexSet;
use twig::treewidth::{decide_treewidth_at_most, find_treewidth, treewidth_exact, TreewidthResult};

#[derive(Parser)]
#[command(
    name = "twig",
    version,
    about = "exact treewidth via separators and potential maximal cliques"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Worker-thread cap for batch commands (self-check); 1 keeps runs
    /// byte-for-byte reproducible, results are identical either way
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct InputArg {
    /// Graph file in .gr format, `-` for standard input
    #[arg(value_name = "FILE")]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate connected sets B with a prescribed root, |B| = b+1 and
    /// |N(B)| = f (or ≤ f)
    EnumConnected {
        #[command(flatten)]
        input: InputArg,
        /// Root vertex (1-indexed)
        #[arg(long)]
        root: usize,
        /// Set size minus one
        #[arg(long)]
        b: usize,
        /// Boundary size
        #[arg(long)]
        f: usize,
        /// Accept boundaries of size at most f instead of exactly f
        #[arg(long)]
        at_most: bool,
    },
    /// List all minimal separators
    ListSeparators {
        #[command(flatten)]
        input: InputArg,
        /// Only separators with at most this many vertices
        #[arg(long)]
        max_size: Option<usize>,
        /// Print the count and a size histogram instead of the family
        #[arg(long)]
        count_only: bool,
    },
    /// List all potential maximal cliques
    ListPmcs {
        #[command(flatten)]
        input: InputArg,
        /// Only cliques with at most this many vertices
        #[arg(long)]
        max_size: Option<usize>,
        /// Restrict the output to nice potential maximal cliques
        #[arg(long)]
        nice_only: bool,
        /// Print the count instead of the family
        #[arg(long)]
        count_only: bool,
    },
    /// Compute or decide treewidth
    Treewidth {
        #[command(flatten)]
        input: InputArg,
        /// Exponential-space exact computation (the default)
        #[arg(long, conflicts_with_all = ["at_most", "find_k", "polyspace"])]
        exact: bool,
        /// Decide whether the treewidth is at most k
        #[arg(long, value_name = "K", conflicts_with_all = ["find_k", "polyspace"])]
        at_most: Option<usize>,
        /// Scan k upward until the decision succeeds
        #[arg(long, conflicts_with = "polyspace")]
        find_k: bool,
        /// Polynomial-space computation (width only)
        #[arg(long)]
        polyspace: bool,
        /// Component-size threshold for the polynomial-space driver,
        /// as a decimal in (0, 0.5)
        #[arg(long, value_name = "X")]
        alpha: Option<String>,
        /// Write the decomposition as a .td file
        #[arg(long, value_name = "FILE")]
        emit_td: Option<PathBuf>,
        /// Write the triangulation as a .gr file
        #[arg(long, value_name = "FILE")]
        emit_triangulation: Option<PathBuf>,
    },
    /// Brute-force reference computations, same output formats as the fast
    /// paths
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
    /// Replay the oracle-equivalence suite on generated graphs
    Selfcheck {
        /// Largest vertex count in the generated corpus
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Number of random graphs
        #[arg(long, default_value_t = 40)]
        trials: usize,
        /// Seed for the random corpus
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact treewidth by subset dynamic programming
    Treewidth {
        #[command(flatten)]
        input: InputArg,
    },
    /// All minimal separators by subset scan
    Separators {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        count_only: bool,
    },
    /// All potential maximal cliques by subset scan
    Pmcs {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        count_only: bool,
    },
    /// Rooted connected-set family by subset scan
    Connected {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        root: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        f: usize,
    },
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(io::parse_graph(&text)?)
}

/// 1-indexed, space-separated member list.
fn show(set: &VertexSet) -> String {
    let ids: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
    ids.join(" ")
}

fn set_to_json(set: &VertexSet) -> serde_json::Value {
    serde_json::Value::from(set.iter().map(|v| v + 1).collect::<Vec<usize>>())
}

fn parse_alpha(text: &str) -> Result<Ratio> {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if int.is_empty() && frac.is_empty()
        || !int.chars().all(|c| c.is_ascii_digit())
        || !frac.chars().all(|c| c.is_ascii_digit())
        || frac.len() > 9
    {
        return Err(anyhow!("alpha must be a plain decimal like 0.38685"));
    }
    let den = 10u64.pow(frac.len() as u32);
    let num = int.parse::<u64>().unwrap_or(0) * den + frac.parse::<u64>().unwrap_or(0);
    if num == 0 || 2 * num >= den {
        return Err(anyhow!("alpha must lie strictly between 0 and 0.5"));
    }
    Ok(Ratio::new(num as u32, den as u32))
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::EnumConnected {
            input,
            root,
            b,
            f,
            at_most,
        } => {
            let g = read_graph(&input.input)?;
            if root == 0 || root > g.n() {
                return Err(anyhow!("root {root} out of range 1..={}", g.n()));
            }
            let records: Vec<_> = if at_most {
                twig::enumerate::connected_sets_rooted_at_most(&g, root - 1, b, f).collect()
            } else {
                twig::enumerate::connected_sets_rooted(&g, root - 1, b, f).collect()
            };
            if cli.json {
                let items: Vec<serde_json::Value> = records
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "set": set_to_json(&r.set),
                            "boundary": set_to_json(&r.boundary),
                        })
                    })
                    .collect();
                let bound = twig::enumerate::count_bound(b, f).to_string();
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "enum-connected",
                        "count": records.len(),
                        "bound": bound,
                        "records": items,
                    })
                );
            } else {
                for r in &records {
                    println!("{} | {}", show(&r.set), show(&r.boundary));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::ListSeparators {
            input,
            max_size,
            count_only,
        } => {
            let g = read_graph(&input.input)?;
            let family = match max_size {
                Some(k) => list_minimal_separators_bounded(&g, k),
                None => list_minimal_separators(&g),
            };
            print_separators(&g, &family, count_only, cli.json);
            Ok(ExitCode::SUCCESS)
        }

        Command::ListPmcs {
            input,
            max_size,
            nice_only,
            count_only,
        } => {
            let g = read_graph(&input.input)?;
            let mut pmcs = list_pmcs(&g, max_size);
            if nice_only {
                pmcs.retain(|p| is_nice_pmc(&g, p));
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "list-pmcs",
                        "count": pmcs.len(),
                        "pmcs": if count_only {
                            serde_json::Value::Null
                        } else {
                            pmcs.iter().map(|p| set_to_json(p.set())).collect()
                        },
                    })
                );
            } else if count_only {
                println!("{}", pmcs.len());
            } else {
                for p in &pmcs {
                    println!("{}", show(p.set()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Treewidth {
            input,
            exact: _,
            at_most,
            find_k,
            polyspace,
            alpha,
            emit_td,
            emit_triangulation,
        } => {
            let g = read_graph(&input.input)?;
            if alpha.is_some() && !polyspace {
                return Err(anyhow!("--alpha only applies to --polyspace"));
            }
            if polyspace {
                if emit_td.is_some() || emit_triangulation.is_some() {
                    return Err(anyhow!("the polynomial-space mode computes the width only"));
                }
                let cfg = match alpha {
                    Some(text) => PolySpaceConfig::with_alpha(parse_alpha(&text)?),
                    None => PolySpaceConfig::default(),
                };
                let (width, stats) = treewidth_polyspace_with_stats(&g, cfg);
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "command": "treewidth",
                            "mode": "polyspace",
                            "width": width,
                            "alpha": cfg.alpha_split().as_f64(),
                            "stats": {
                                "large_bag_candidates": stats.large_bag_candidates,
                                "small_bag_candidates": stats.small_bag_candidates,
                                "separator_candidates": stats.separator_candidates,
                                "leaf_bag_searches": stats.leaf_bag_searches,
                                "max_split_depth": stats.max_split_depth,
                            },
                        })
                    );
                } else {
                    println!("treewidth {width}");
                    println!(
                        "memory: streamed candidates ({} bag, {} separator), \
                         split recursion depth <= {}",
                        stats.large_bag_candidates + stats.small_bag_candidates,
                        stats.separator_candidates,
                        stats.max_split_depth
                    );
                }
                return Ok(ExitCode::SUCCESS);
            }

            let (result, mode): (Option<TreewidthResult>, &str) = if let Some(k) = at_most {
                (decide_treewidth_at_most(&g, k), "decision")
            } else if find_k {
                (Some(find_treewidth(&g)), "scan")
            } else {
                (Some(treewidth_exact(&g)), "exact")
            };

            match result {
                Some(r) => {
                    if let Some(path) = emit_td {
                        write_output(&path, &io::write_decomposition(&r.decomposition))?;
                    }
                    if let Some(path) = emit_triangulation {
                        write_output(&path, &io::write_graph(&r.triangulation))?;
                    }
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "command": "treewidth",
                                "mode": mode,
                                "width": r.width,
                                "bags": r.decomposition.bags().len(),
                            })
                        );
                    } else {
                        println!("treewidth {}", r.width);
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    let k = at_most.expect("only the decision mode can fail");
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "command": "treewidth",
                                "mode": mode,
                                "verdict": format!("treewidth > {k}"),
                            })
                        );
                    } else {
                        println!("treewidth > {k}");
                    }
                    Ok(ExitCode::FAILURE)
                }
            }
        }

        Command::Oracle { what } => run_oracle(what, cli.json),

        Command::Selfcheck {
            n_max,
            trials,
            seed,
        } => selfcheck::run(n_max, trials, seed, cli.threads, cli.json),
    }
}

fn print_separators(g: &Graph, family: &SeparatorFamily, count_only: bool, json: bool) {
    if json {
        let histogram = family.size_histogram(g.n());
        println!(
            "{}",
            serde_json::json!({
                "command": "list-separators",
                "count": family.len(),
                "histogram": histogram,
                "separators": if count_only {
                    serde_json::Value::Null
                } else {
                    family.sets().map(set_to_json).collect()
                },
            })
        );
    } else if count_only {
        println!("{}", family.len());
        for (size, count) in family.size_histogram(g.n()).iter().enumerate() {
            if *count > 0 {
                println!("size {size}: {count}");
            }
        }
    } else {
        for s in family.sets() {
            println!("{}", show(s));
        }
    }
}

fn run_oracle(what: OracleCommand, json: bool) -> Result<ExitCode> {
    use oracle::{OracleReport, OracleValue};
    match what {
        OracleCommand::Treewidth { input } => {
            let g = read_graph(&input.input)?;
            let report = OracleReport::treewidth(&g)?;
            let OracleValue::Width(width) = report.value else {
                unreachable!()
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "oracle",
                        "quantity": report.quantity,
                        "method": report.method,
                        "n_limit": report.n_limit,
                        "width": width,
                    })
                );
            } else {
                println!("treewidth {width}");
            }
        }
        OracleCommand::Separators { input, count_only } => {
            let g = read_graph(&input.input)?;
            print_oracle_family(&g, OracleReport::separators(&g)?, count_only, json);
        }
        OracleCommand::Pmcs { input, count_only } => {
            let g = read_graph(&input.input)?;
            print_oracle_family(&g, OracleReport::pmcs(&g)?, count_only, json);
        }
        OracleCommand::Connected { input, root, b, f } => {
            let g = read_graph(&input.input)?;
            if root == 0 || root > g.n() {
                return Err(anyhow!("root {root} out of range 1..={}", g.n()));
            }
            let report = OracleReport::connected_sets(&g, root - 1, b, f)?;
            let OracleValue::Family(sets) = &report.value else {
                unreachable!()
            };
            if json {
                let items: Vec<serde_json::Value> = sets
                    .iter()
                    .map(|s| {
                        serde_json::json!({
                            "set": set_to_json(s),
                            "boundary": set_to_json(&g.neighborhood(s)),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "oracle-connected",
                        "quantity": report.quantity,
                        "method": report.method,
                        "n_limit": report.n_limit,
                        "count": sets.len(),
                        "records": items,
                    })
                );
            } else {
                for s in sets {
                    println!("{} | {}", show(s), show(&g.neighborhood(s)));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_oracle_family(g: &Graph, report: oracle::OracleReport, count_only: bool, json: bool) {
    let oracle::OracleValue::Family(sets) = &report.value else {
        unreachable!()
    };
    if json {
        let mut histogram = vec![0usize; g.n() + 1];
        for s in sets {
            histogram[s.len()] += 1;
        }
        println!(
            "{}",
            serde_json::json!({
                "command": "oracle",
                "quantity": report.quantity,
                "method": report.method,
                "n_limit": report.n_limit,
                "count": sets.len(),
                "histogram": histogram,
                "members": if count_only {
                    serde_json::Value::Null
                } else {
                    sets.iter().map(set_to_json).collect()
                },
            })
        );
    } else if count_only {
        println!("{}", sets.len());
    } else {
        for s in sets {
            println!("{}", show(s));
        }
    }
}
