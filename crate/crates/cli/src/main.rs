//! Command-line front end: demos, truth-table printing, exhaustive
//! verification runs, query-count comparison and file ingestion.
//!
//! Every command renders one report, as aligned text or as a single JSON
//! object (`--format json`). Errors go to stderr with a nonzero exit.
//! Commands are deterministic unless an explicit `--seed` is given, which
//! enables demonstration sampling only.

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use dualsim::deutsch::{
    classify_classical, classify_quantum, classify_table, circuit_final_state, BlackBox,
    FunctionTable, QueryRecord,
};
use dualsim::interferometer::{deutsch_phases, mz_intensities, phase_error_sweep, MzNetwork};
use dualsim::switchboard::{
    alice_inspect, consistent_wirings, lower_terminal_count, nwire_inspect, CableRun,
    Observation, SwitchPos, Wiring,
};
use dualsim::{qsim, verify};

#[derive(Parser)]
#[command(name = "dualsim", version, about = "Dual-world constant-vs-balanced simulator")]
struct Cli {
    /// Output format for the report
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Seed for demonstration sampling; absent a seed output is fully deterministic
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Mode {
    Quantum,
    Classical,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print all eight observation rows with their consistent wiring sets
    TruthTable,
    /// Run the flip-on-lower-terminal inspection on one wiring (a-d)
    Inspect { wiring: String },
    /// Classify an oracle (inline bits or a file path) one or both ways
    Deutsch {
        /// Inline bit string over {0,1} or a path to an oracle file
        oracle: String,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    /// Run the exhaustive cross-world verification suite
    Verify {
        #[arg(long = "max-n", default_value_t = 3)]
        max_n: usize,
    },
    /// Mach-Zehnder detector intensities for phases or a 1-bit oracle
    Mz {
        /// Upper-arm phase in radians
        #[arg(required_unless_present = "oracle", conflicts_with = "oracle")]
        phi0: Option<f64>,
        /// Lower-arm phase in radians
        #[arg(required_unless_present = "oracle", conflicts_with = "oracle")]
        phi1: Option<f64>,
        /// One-bit oracle bits instead of explicit phases
        #[arg(long)]
        oracle: Option<String>,
        /// Phase-error half-width for the worst-case sweep
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// N-wire inspection of a cable run (letters a-d, one per cable)
    Nwire { cables: String },
}

/// One command's structured output.
struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    results: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::TruthTable => cmd_truth_table(),
        Command::Inspect { wiring } => cmd_inspect(wiring),
        Command::Deutsch { oracle, mode } => cmd_deutsch(oracle, *mode, cli.seed),
        Command::Verify { max_n } => cmd_verify(*max_n),
        Command::Mz {
            phi0,
            phi1,
            oracle,
            epsilon,
        } => cmd_mz(*phi0, *phi1, oracle.as_deref(), *epsilon),
        Command::Nwire { cables } => cmd_nwire(cables),
    };
    match outcome {
        Ok((report, ok)) => {
            print_report(&report, cli.format);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

type CmdResult = Result<(Report, bool), String>;

fn switch_name(p: SwitchPos) -> &'static str {
    match p {
        SwitchPos::Up => "up",
        SwitchPos::Down => "down",
    }
}

fn wiring_letters(set: &[Wiring]) -> String {
    set.iter()
        .map(|w| w.letter().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_truth_table() -> CmdResult {
    let mut rows = Vec::new();
    for left in SwitchPos::BOTH {
        for right in SwitchPos::BOTH {
            for light in [true, false] {
                let set = consistent_wirings(Observation { left, right, light });
                rows.push(json!({
                    "left": switch_name(left),
                    "right": switch_name(right),
                    "light": if light { "on" } else { "off" },
                    "wirings": wiring_letters(&set),
                }));
            }
        }
    }
    Ok((
        Report {
            command: "truth-table",
            inputs: Map::new(),
            results: json!({ "rows": rows }),
        },
        true,
    ))
}

fn parse_wiring(arg: &str) -> Result<Wiring, String> {
    let mut chars = arg.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Wiring::parse(c).map_err(|e| e.to_string()),
        _ => Err(format!("expected a single wiring letter a-d, got {arg:?}")),
    }
}

fn cmd_inspect(arg: &str) -> CmdResult {
    let w = parse_wiring(arg)?;
    let (final_pos, verdict) = alice_inspect(w);
    let mut inputs = Map::new();
    inputs.insert("wiring".into(), json!(w.letter().to_string()));
    Ok((
        Report {
            command: "inspect",
            inputs,
            results: json!({
                "lower_terminal_count": lower_terminal_count(w),
                "final_switch": switch_name(final_pos),
                "verdict": verdict.to_string(),
            }),
        },
        true,
    ))
}

/// Inline bits and oracle files share one parser; a readable path wins,
/// anything else is treated as inline bits.
fn load_oracle(arg: &str) -> Result<FunctionTable, String> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| format!("reading {arg}: {e}"))?
    } else {
        arg.to_string()
    };
    FunctionTable::parse(&text).map_err(|e| e.to_string())
}

fn cmd_deutsch(oracle_arg: &str, mode: Mode, seed: Option<u64>) -> CmdResult {
    let f = load_oracle(oracle_arg)?;
    let mut inputs = Map::new();
    inputs.insert(
        "oracle".into(),
        json!(f.values().iter().map(|v| v.to_string()).collect::<String>()),
    );
    inputs.insert(
        "mode".into(),
        json!(match mode {
            Mode::Quantum => "quantum",
            Mode::Classical => "classical",
            Mode::Both => "both",
        }),
    );

    let mut results = Map::new();
    results.insert("table_classification".into(), json!(classify_table(&f).to_string()));
    if matches!(mode, Mode::Quantum | Mode::Both) {
        let (class, log, certainty) =
            classify_quantum(&f).map_err(|e| e.to_string())?;
        results.insert("quantum_classification".into(), json!(class.to_string()));
        results.insert("quantum_queries".into(), json!(log.queries()));
        results.insert("certainty".into(), json!(certainty));
        if let Some(seed) = seed {
            let state = circuit_final_state(&f).map_err(|e| e.to_string())?;
            results.insert("sampled_basis_index".into(), json!(qsim::sample(&state, seed)));
            results.insert("seed".into(), json!(seed));
        }
    }
    if matches!(mode, Mode::Classical | Mode::Both) {
        if classify_table(&f) == dualsim::Classification::Neither {
            return Err("function is neither constant nor balanced; promise violated".into());
        }
        let (class, log) = classify_classical(&mut BlackBox::new(f.clone()));
        results.insert("classical_classification".into(), json!(class.to_string()));
        results.insert("classical_queries".into(), json!(log.queries()));
        let transcript: Vec<Value> = log
            .transcript()
            .iter()
            .filter_map(|r| match r {
                QueryRecord::Classical { input, output } => {
                    Some(json!({ "input": input, "output": output }))
                }
                QueryRecord::Superposed => None,
            })
            .collect();
        results.insert("classical_transcript".into(), json!(transcript));
    }
    Ok((
        Report {
            command: "deutsch",
            inputs,
            results: Value::Object(results),
        },
        true,
    ))
}

fn cmd_verify(max_n: usize) -> CmdResult {
    let report = verify::run_suite(max_n).map_err(|e| e.to_string())?;
    let mut inputs = Map::new();
    inputs.insert("max_n".into(), json!(max_n));
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })
        })
        .collect();
    let all = report.all_passed();
    Ok((
        Report {
            command: "verify",
            inputs,
            results: json!({
                "checks": checks,
                "passed": report.passed_count(),
                "total": report.checks.len(),
                "all_passed": all,
            }),
        },
        all,
    ))
}

fn cmd_mz(
    phi0: Option<f64>,
    phi1: Option<f64>,
    oracle: Option<&str>,
    epsilon: Option<f64>,
) -> CmdResult {
    let mut inputs = Map::new();
    let net = match (phi0, phi1, oracle) {
        (Some(upper), Some(lower), None) => {
            inputs.insert("phi0".into(), json!(upper));
            inputs.insert("phi1".into(), json!(lower));
            MzNetwork::new(upper, lower, 0).map_err(|e| e.to_string())?
        }
        (None, None, Some(bits)) => {
            let f = load_oracle(bits)?;
            inputs.insert(
                "oracle".into(),
                json!(f.values().iter().map(|v| v.to_string()).collect::<String>()),
            );
            deutsch_phases(&f).map_err(|e| e.to_string())?
        }
        _ => return Err("give either two phases or --oracle <bits>".into()),
    };
    let i = mz_intensities(&net);
    let mut results = Map::new();
    results.insert("port0".into(), json!(i.port0));
    results.insert("port1".into(), json!(i.port1));
    results.insert("dominant_port".into(), json!(i.dominant_port()));
    if let Some(eps) = epsilon {
        inputs.insert("epsilon".into(), json!(eps));
        let sweep = phase_error_sweep(&[net.delta()], eps).map_err(|e| e.to_string())?;
        let rows: Vec<Value> = sweep
            .iter()
            .map(|(target, worst)| json!({ "target_delta": target, "worst_error": worst }))
            .collect();
        results.insert("error_sweep".into(), json!(rows));
    }
    Ok((
        Report {
            command: "mz",
            inputs,
            results: Value::Object(results),
        },
        true,
    ))
}

fn cmd_nwire(cables: &str) -> CmdResult {
    let run = CableRun::parse(cables).map_err(|e| e.to_string())?;
    let mut inputs = Map::new();
    inputs.insert("cables".into(), json!(cables.to_lowercase()));
    let per_cable: Vec<Value> = run
        .cables()
        .iter()
        .map(|&w| {
            json!({
                "cable": w.letter().to_string(),
                "lower_terminal_count": lower_terminal_count(w),
            })
        })
        .collect();
    let total: u32 = run
        .cables()
        .iter()
        .map(|&w| lower_terminal_count(w) as u32)
        .sum();
    let (final_pos, parity) = nwire_inspect(&run);
    Ok((
        Report {
            command: "nwire",
            inputs,
            results: json!({
                "per_cable": per_cable,
                "total_lower_connections": total,
                "final_switch": switch_name(final_pos),
                "parity": parity.to_string(),
            }),
        },
        true,
    ))
}

fn print_report(report: &Report, format: Format) {
    match format {
        Format::Json => {
            let obj = json!({
                "command": report.command,
                "inputs": Value::Object(report.inputs.clone()),
                "results": report.results,
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        Format::Table => {
            println!("command: {}", report.command);
            for (key, value) in &report.inputs {
                println!("  {key} = {}", scalar(value));
            }
            render_value(&report.results, 0);
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_value(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (key, value) in map {
                match value {
                    Value::Array(items) if items.iter().all(Value::is_object) => {
                        println!("{pad}{key}:");
                        render_object_rows(items, indent + 1);
                    }
                    Value::Object(_) => {
                        println!("{pad}{key}:");
                        render_value(value, indent + 1);
                    }
                    _ => println!("{pad}{key:<width$}  {}", scalar(value)),
                }
            }
        }
        other => println!("{pad}{}", scalar(other)),
    }
}

/// Renders an array of flat objects as one aligned table.
fn render_object_rows(items: &[Value], indent: usize) {
    let pad = "  ".repeat(indent + 1);
    let Some(Value::Object(first)) = items.first() else {
        return;
    };
    let headers: Vec<&String> = first.keys().collect();
    let mut rows: Vec<Vec<String>> = vec![headers.iter().map(|h| h.to_string()).collect()];
    for item in items {
        if let Value::Object(map) = item {
            rows.push(
                headers
                    .iter()
                    .map(|h| map.get(*h).map(scalar).unwrap_or_default())
                    .collect(),
            );
        }
    }
    let widths: Vec<usize> = (0..headers.len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        println!("{pad}{}", line.join("  ").trim_end());
    }
}
