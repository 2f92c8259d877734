use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kroncover::bounds::{f_bound, g_bound, h_bound, HTable, DEFAULT_H_CONSTANT};
use kroncover::goursat::{goursat_decompose, PowerStructure};
use kroncover::harness::{emit_report, load_corpus, run, Check, Config, Format};
use kroncover::perm::{PermGroup, Permutation};
use kroncover::{Error, Result};

#[derive(Parser)]
#[command(
    name = "kroncover",
    version,
    about = "Normal coverings and covering-index bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    H,
    F,
    G,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification checks over a corpus.
    Verify {
        /// JSON-lines corpus file; may be repeated.
        #[arg(long, required = true)]
        corpus: Vec<PathBuf>,
        /// Comma-separated subset of jordan,theorem,proposition,lemma,saxl.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, default_value_t = 360)]
        max_order: u128,
        #[arg(long, default_value_t = 50_000)]
        max_aut_order: u128,
        #[arg(long, default_value_t = DEFAULT_H_CONSTANT)]
        h_constant: f64,
        /// Report path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutFormat::Tsv)]
        format: OutFormat,
    },
    /// Print a table of h(m), f(n) or g(n, c).
    Bounds {
        #[arg(long, value_enum)]
        table: Table,
        #[arg(long, default_value_t = 10)]
        n_max: u64,
        #[arg(long, default_value_t = 5)]
        c_max: u32,
        #[arg(long, default_value_t = DEFAULT_H_CONSTANT)]
        h_constant: f64,
        /// Use only the tabulated values of h, without the closed form.
        #[arg(long)]
        empirical_only: bool,
    },
    /// Goursat decomposition of a subdirect subgroup of T^k.
    Decompose {
        /// Corpus entry, optionally as NAME^k.
        #[arg(long)]
        group: String,
        #[arg(long, required = true)]
        corpus: Vec<PathBuf>,
        /// Generator of the subgroup, in cycle notation on k blocks; may be repeated.
        #[arg(long, required = true)]
        subgroup: Vec<String>,
    },
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("KRONCOVER_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match dispatch(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dispatch(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Verify {
            corpus,
            checks,
            max_order,
            max_aut_order,
            h_constant,
            out,
            format,
        } => {
            let corpus = load_corpus(&corpus)?;
            let checks = match checks {
                Some(list) => list
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<Check>>>()?,
                None => Check::ALL.to_vec(),
            };
            let cfg = Config {
                max_order,
                max_aut_order,
                table: HTable::catalogued(h_constant),
                checks,
            };
            let report = run(&corpus, &cfg);
            let format = match format {
                OutFormat::Tsv => Format::Tsv,
                OutFormat::Json => Format::Json,
            };
            write_out(&out, &emit_report(&report, format))?;
            for n in report
                .notices
                .iter()
                .filter(|n| n.message.starts_with("skipped") || n.message.starts_with("partial"))
            {
                eprintln!("note: {} [{}] {}", n.group, n.check, n.message);
            }
            if report.events.is_empty() {
                return Ok(ExitCode::SUCCESS);
            }
            let bundle = out
                .as_ref()
                .map(|p| p.with_extension("counterexample.json"))
                .unwrap_or_else(|| PathBuf::from("counterexample.json"));
            let text = serde_json::to_string_pretty(&report.events).expect("events serialize");
            write_out(&Some(bundle.clone()), &text)?;
            eprintln!(
                "counterexample: {} failing check(s), reproduction data in {}",
                report.events.len(),
                bundle.display()
            );
            Ok(ExitCode::from(2))
        }
        Command::Bounds {
            table,
            n_max,
            c_max,
            h_constant,
            empirical_only,
        } => {
            let mut ht = HTable::catalogued(h_constant);
            if empirical_only {
                ht = ht.empirical_only();
            }
            let mut text = String::new();
            match table {
                Table::H | Table::F => {
                    let name = if matches!(table, Table::H) { "m" } else { "n" };
                    text.push_str(&format!("{name}\tkind\tvalue\n"));
                    for m in 1..=n_max {
                        let v = if matches!(table, Table::H) {
                            h_bound(m, &ht)
                        } else {
                            f_bound(m, &ht)
                        };
                        text.push_str(&format!("{m}\t{}\t{}\n", v.kind(), v.value_or_log2()));
                    }
                }
                Table::G => {
                    text.push_str("n\tc\tkind\tvalue\n");
                    for n in 1..=n_max {
                        for c in 0..=c_max {
                            let v = g_bound(n, c, &ht);
                            text.push_str(&format!(
                                "{n}\t{c}\t{}\t{}\n",
                                v.kind(),
                                v.value_or_log2()
                            ));
                        }
                    }
                }
            }
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose {
            group,
            corpus,
            subgroup,
        } => {
            let corpus = load_corpus(&corpus)?;
            let (name, k) = match group.rsplit_once('^') {
                Some((n, k)) => (
                    n,
                    k.parse()
                        .map_err(|_| Error::Parse(format!("bad power in {group:?}")))?,
                ),
                None => (group.as_str(), 1usize),
            };
            let spec = corpus
                .find(name)
                .ok_or_else(|| Error::Parse(format!("no corpus entry named {name:?}")))?;
            let t = spec.build()?;
            let p = PowerStructure::new(&t, k)?;
            let gens = subgroup
                .iter()
                .map(|s| Permutation::parse(s, t.degree() * k))
                .collect::<Result<Vec<_>>>()?;
            let u = PermGroup::new(t.degree() * k, gens)?;
            match goursat_decompose(&u, &p)? {
                None => println!("not a product of full diagonals"),
                Some(dec) => {
                    println!("t\t{}", dec.t());
                    for (part, (_, maps)) in dec.partition.iter().zip(&dec.diagonals) {
                        let maps: Vec<String> = maps.iter().map(|m| format!("[{m}]")).collect();
                        println!("{part:?}\t{}", maps.join(" "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
