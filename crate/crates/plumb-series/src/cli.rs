//! Command-line surface.
//!
//! Binds every library operation to the plain-text graph format: parses
//! arguments, loads and optionally re-arrows a graph, dispatches, and prints
//! a versioned JSON envelope (`{"schema": "plumb-series/1", ...}`) on one
//! line. `--pretty` switches to a human-readable text rendering. Output
//! bytes are deterministic for fixed inputs.
//!
//! Exit status: 0 on success (for `verify`, only when the check passes),
//! 1 on domain errors (one `error: <code>: <message>` line on stderr),
//! 2 on usage errors.

use crate::error::{Error, Result};
use crate::graph::ResolutionGraph;
use crate::invariants;
use crate::laufer;
use crate::lattice::{Cycle, GroupClass, Lattice};
use crate::oracle::{self, CheckOptions};
use crate::rat;
use crate::series::MultiSeries;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Version tag present in every JSON document this binary emits.
const SCHEMA: &str = "plumb-series/1";

#[derive(Parser)]
#[command(
    name = "plumb-series",
    version,
    about = "Invariants of negative-definite plumbing trees: multivariable series, \
             fundamental cycles, zeta functions, and verification oracles"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

/// Graph input shared by most subcommands.
#[derive(Args)]
struct GraphArgs {
    /// Graph file (plain text; a `.json` suffix selects the JSON form).
    #[arg(long, value_name = "FILE")]
    graph: String,

    /// Add arrows to a vertex: `id` (one arrow) or `id:count`. Repeatable;
    /// counts stack on top of what the file declares.
    #[arg(long = "arrow", value_name = "ID[:COUNT]")]
    arrows: Vec<String>,
}

impl GraphArgs {
    fn load(&self) -> Result<ResolutionGraph> {
        let text = std::fs::read_to_string(&self.graph).map_err(|e| Error::Io {
            path: self.graph.clone(),
            msg: e.to_string(),
        })?;
        let mut g = if self.graph.ends_with(".json") {
            ResolutionGraph::from_json(&text)?
        } else {
            ResolutionGraph::parse(&text)?
        };
        for spec in &self.arrows {
            let (id, count) = parse_arrow_spec(spec)?;
            g = g.with_arrows(&id, count)?;
        }
        Ok(g)
    }

    fn lattice(&self) -> Result<Lattice> {
        Lattice::new(self.load()?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a graph (tree shape, negative definiteness).
    Check {
        #[command(flatten)]
        graph: GraphArgs,
    },

    /// Determinant, discriminant group, canonical cycle, fundamental cycle,
    /// and classification.
    Invariants {
        #[command(flatten)]
        graph: GraphArgs,
    },

    /// Fundamental (Artin) cycle via the greedy sequence.
    Zmin {
        #[command(flatten)]
        graph: GraphArgs,

        /// Include the step-by-step greedy trace.
        #[arg(long)]
        trace: bool,
    },

    /// Series computations (full, class component, reduced, relative).
    #[command(subcommand)]
    Series(SeriesCommand),

    /// Counting series with Laufer-type coefficient evaluation (rational
    /// and minimally elliptic graphs only).
    #[command(name = "p-laufer")]
    PLaufer {
        #[command(flatten)]
        graph: GraphArgs,

        /// Dual-coordinate cap: coefficients on the box [0, cap]^s.
        #[arg(long, value_name = "N")]
        cap: u32,
    },

    /// One coefficient of the Hilbert series recovered from the counting
    /// series.
    Hilbert {
        #[command(flatten)]
        graph: GraphArgs,

        /// Cap for the intermediate counting series; the command certifies
        /// it is large enough for the queried coefficient.
        #[arg(long, value_name = "N")]
        cap: u32,

        /// Query cycle: coordinates `a/b,...` or dual coordinates `n:1,0,2`.
        #[arg(long, value_name = "SPEC")]
        at: String,
    },

    /// Monodromy zeta function of the curve germ marked by arrows.
    Zeta {
        #[command(flatten)]
        graph: GraphArgs,
    },

    /// Counting polynomial of a superisolated singularity from the curve
    /// degree and the characteristic polynomial of its cusps.
    #[command(name = "n-poly")]
    NPoly {
        /// Degree of the plane curve (at least 2).
        #[arg(long, value_name = "D")]
        degree: u32,

        /// Comma-separated integer coefficients of Delta, constant term
        /// first.
        #[arg(long, value_name = "C0,C1,...")]
        delta: String,
    },

    /// Blow up a regular point of one exceptional curve.
    Blowup {
        #[command(flatten)]
        graph: GraphArgs,

        /// Vertex id carrying the blown-up point.
        #[arg(long, value_name = "ID")]
        at: String,

        /// Id for the new (-1)-vertex (generated when omitted).
        #[arg(long, value_name = "ID")]
        new_id: Option<String>,
    },

    /// Run a named verification check; exit status reflects the outcome.
    Verify {
        /// Check name (an unknown name lists the registered ones).
        name: String,

        #[command(flatten)]
        graph: GraphArgs,

        /// Window override (total-degree cap, box size, or instance count,
        /// depending on the check).
        #[arg(long, value_name = "N")]
        window: Option<u32>,

        /// Seed for randomized instance generation.
        #[arg(long, value_name = "S")]
        seed: Option<u64>,

        /// Relative tolerance for floating-point checks.
        #[arg(long, value_name = "T")]
        tolerance: Option<f64>,
    },
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// Full multivariable series on the dual-coordinate box [0, cap]^s.
    Z {
        #[command(flatten)]
        graph: GraphArgs,

        /// Dual-coordinate cap.
        #[arg(long, value_name = "N")]
        cap: u32,
    },

    /// One discriminant-class component of the full series.
    Zh {
        #[command(flatten)]
        graph: GraphArgs,

        /// Dual-coordinate cap.
        #[arg(long, value_name = "N")]
        cap: u32,

        /// Class: `0`, a representative `a/b,...`, or dual coordinates
        /// `n:1,0,2`.
        #[arg(long, value_name = "SPEC")]
        class: String,
    },

    /// Reduced series on chosen vertices, complete on the box [0, bound].
    Reduced {
        #[command(flatten)]
        graph: GraphArgs,

        /// Kept vertices, comma-separated ids.
        #[arg(long, value_name = "ID[,ID...]")]
        vertices: String,

        /// Rational exponent bound certifying the window.
        #[arg(long, value_name = "B")]
        bound: String,

        /// Optional class restriction (same forms as `series zh`).
        #[arg(long, value_name = "SPEC")]
        class: Option<String>,
    },

    /// Arrow-weighted series: full with --cap, reduced with --vertices and
    /// --bound.
    Relative {
        #[command(flatten)]
        graph: GraphArgs,

        /// Dual-coordinate cap (full series form).
        #[arg(long, value_name = "N")]
        cap: Option<u32>,

        /// Kept vertices (reduced form), comma-separated ids.
        #[arg(long, value_name = "ID[,ID...]")]
        vertices: Option<String>,

        /// Rational exponent bound (reduced form).
        #[arg(long, value_name = "B")]
        bound: Option<String>,

        /// Optional class restriction.
        #[arg(long, value_name = "SPEC")]
        class: Option<String>,
    },
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let pretty = cli.pretty;
    match execute(cli.command, pretty) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}: {}", e.code(), e);
            1
        }
    }
}

fn execute(command: Command, pretty: bool) -> Result<i32> {
    match command {
        Command::Check { graph } => {
            let lat = graph.lattice()?;
            let g = lat.graph();
            let payload = json!({
                "valid": true,
                "rank": lat.rank(),
                "edges": g.edges().len(),
                "arrows": g.total_arrows(),
                "det": lat.det().to_string(),
                "group_order": lat.group_order().to_string(),
            });
            if pretty {
                println!(
                    "ok: {} vertices, {} edges, {} arrows, det {}, group order {}",
                    lat.rank(),
                    g.edges().len(),
                    g.total_arrows(),
                    lat.det(),
                    lat.group_order()
                );
            } else {
                emit("check", payload);
            }
            Ok(0)
        }

        Command::Invariants { graph } => {
            let lat = graph.lattice()?;
            let class = laufer::classify(&lat)?;
            let ids: Vec<String> = lat
                .graph()
                .vertices()
                .iter()
                .map(|v| v.id.clone())
                .collect();
            let payload = json!({
                "vertices": ids,
                "det": lat.det().to_string(),
                "group_order": lat.group_order().to_string(),
                "invariant_factors": lat
                    .group_structure()
                    .invariant_factors
                    .iter()
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>(),
                "canonical_cycle": lat.canonical_cycle().to_strings(),
                "zmin": class.zmin.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
                "chi_zmin": class.chi.to_string(),
                "classification": class.kind.label(),
                "geometric_genus": class.geometric_genus(),
            });
            if pretty {
                println!("vertices: {}", ids.join(", "));
                println!("det {} | group order {}", lat.det(), lat.group_order());
                let factors = lat.group_structure().invariant_factors;
                if factors.is_empty() {
                    println!("discriminant group: trivial");
                } else {
                    let parts: Vec<String> =
                        factors.iter().map(|f| format!("Z/{f}")).collect();
                    println!("discriminant group: {}", parts.join(" x "));
                }
                println!("canonical cycle K = {}", lat.canonical_cycle());
                println!(
                    "Z_min = ({}), chi = {}",
                    class
                        .zmin
                        .iter()
                        .map(|z| z.to_string())
                        .collect::<Vec<_>>()
                        .join(", "),
                    class.chi
                );
                println!("classification: {}", class.kind.label());
            } else {
                emit("invariants", payload);
            }
            Ok(0)
        }

        Command::Zmin { graph, trace } => {
            let lat = graph.lattice()?;
            let outcome = laufer::fundamental_cycle(&lat)?;
            let increments = laufer::fundamental_increments(&lat)?;
            let class = laufer::classify(&lat)?;
            let mut payload = json!({
                "zmin": outcome.cycle.to_strings(),
                "chi": class.chi.to_string(),
                "increments": increments,
                "classification": class.kind.label(),
            });
            if trace {
                payload["trace"] = outcome
                    .steps
                    .iter()
                    .map(|s| json!({"id": s.id, "pairing": s.pairing}))
                    .collect();
            }
            if pretty {
                println!("Z_min = {}", outcome.cycle);
                println!("chi = {}", class.chi);
                println!(
                    "increments (sorted): [{}]",
                    increments
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                );
                if trace {
                    for (k, s) in outcome.steps.iter().enumerate() {
                        println!("step {}: add E_{} (pairing {})", k + 1, s.id, s.pairing);
                    }
                }
            } else {
                emit("zmin", payload);
            }
            Ok(0)
        }

        Command::Series(series) => run_series(series, pretty),

        Command::PLaufer { graph, cap } => {
            let lat = graph.lattice()?;
            let series = invariants::p_laufer(&lat, cap)?;
            if pretty {
                print_multi(&series);
            } else {
                emit("p-laufer", json!({"series": series.to_json(&lat)?}));
            }
            Ok(0)
        }

        Command::Hilbert { graph, cap, at } => {
            let lat = graph.lattice()?;
            let query = parse_cycle_spec(&lat, &at)?;
            let p = invariants::p_laufer(&lat, cap)?;
            let coeff = invariants::hilbert_coefficient(&lat, &p, &query)?;
            if pretty {
                println!("hilbert coefficient at {} = {}", query, coeff);
            } else {
                emit(
                    "hilbert",
                    json!({
                        "at": query.to_strings(),
                        "cap": cap,
                        "coefficient": coeff.to_string(),
                    }),
                );
            }
            Ok(0)
        }

        Command::Zeta { graph } => {
            let lat = graph.lattice()?;
            let zeta = invariants::monodromy_zeta(&lat)?;
            if pretty {
                println!("zeta(t) = {}", zeta.render());
            } else {
                emit("zeta", json!({"zeta": zeta.to_json()}));
            }
            Ok(0)
        }

        Command::NPoly { degree, delta } => {
            let coeffs = parse_bigint_list(&delta)?;
            let result = invariants::superisolated_n_poly(degree, &coeffs)?;
            if pretty {
                println!("N(t) = {}", polynomial_string(&result.coeffs));
                println!("N(1) = {}", result.n_at_one);
                println!("symmetric: {}", result.symmetric);
            } else {
                emit("n-poly", json!({"degree": degree, "n": result.to_json()}));
            }
            Ok(0)
        }

        Command::Blowup { graph, at, new_id } => {
            let g = graph.load()?;
            let j = g.index_of(&at)?;
            let blown = g.blow_up_free(j, new_id.as_deref())?;
            let new_vertex = blown.vertex(blown.len() - 1).id.clone();
            if pretty {
                print!("{}", blown.to_text());
            } else {
                emit(
                    "blowup",
                    json!({
                        "at": at,
                        "new_vertex": new_vertex,
                        "graph_text": blown.to_text(),
                        "graph": blown.to_json(),
                    }),
                );
            }
            Ok(0)
        }

        Command::Verify {
            name,
            graph,
            window,
            seed,
            tolerance,
        } => {
            let lat = graph.lattice()?;
            let check = oracle::find_check(&name)?;
            let options = CheckOptions {
                window,
                seed: seed.unwrap_or(oracle::DEFAULT_SEED),
                tolerance: tolerance.unwrap_or(1e-9),
            };
            let outcome = check.run(&lat, &options)?;
            if pretty {
                if outcome.passed {
                    println!("PASS {} ({})", outcome.name, outcome.window);
                } else {
                    let d = outcome.first_discrepancy.as_ref().expect("failed outcome");
                    println!(
                        "FAIL {} ({}): at {}: expected {}, got {}",
                        outcome.name, outcome.window, d.location, d.expected, d.actual
                    );
                }
            } else {
                emit(
                    "verify",
                    json!({"summary": check.summary(), "outcome": outcome.to_json()}),
                );
            }
            Ok(if outcome.passed { 0 } else { 1 })
        }
    }
}

fn run_series(series: SeriesCommand, pretty: bool) -> Result<i32> {
    match series {
        SeriesCommand::Z { graph, cap } => {
            let lat = graph.lattice()?;
            let z = invariants::z_series(&lat, cap)?;
            if pretty {
                print_multi(&z);
            } else {
                emit("series z", json!({"series": z.to_json(&lat)?}));
            }
            Ok(0)
        }

        SeriesCommand::Zh { graph, cap, class } => {
            let lat = graph.lattice()?;
            let h = parse_class_spec(&lat, &class)?;
            let zh = invariants::z_h_series(&lat, &h, cap)?;
            if pretty {
                println!("class {}", h);
                print_multi(&zh);
            } else {
                emit(
                    "series zh",
                    json!({"class": h.to_strings(), "series": zh.to_json(&lat)?}),
                );
            }
            Ok(0)
        }

        SeriesCommand::Reduced {
            graph,
            vertices,
            bound,
            class,
        } => {
            let lat = graph.lattice()?;
            let u = parse_vertex_list(&lat, &vertices)?;
            let b = rat::parse_rational(&bound)?;
            let h = class
                .as_deref()
                .map(|spec| parse_class_spec(&lat, spec))
                .transpose()?;
            let reduced = invariants::z_reduced(&lat, &u, h.as_ref(), &b)?;
            if pretty {
                print_reduced_header(&lat, &u, h.as_ref());
                print_reduced(&reduced);
            } else {
                emit(
                    "series reduced",
                    reduced_payload(&lat, &u, h.as_ref(), reduced.to_json()),
                );
            }
            Ok(0)
        }

        SeriesCommand::Relative {
            graph,
            cap,
            vertices,
            bound,
            class,
        } => {
            let lat = graph.lattice()?;
            let h = class
                .as_deref()
                .map(|spec| parse_class_spec(&lat, spec))
                .transpose()?;
            match (cap, vertices, bound) {
                (Some(cap), None, None) => {
                    let full = invariants::z_relative_series(&lat, cap)?;
                    let z = match &h {
                        Some(h) => full.class_component(&lat, h)?,
                        None => full,
                    };
                    if pretty {
                        print_multi(&z);
                    } else {
                        emit("series relative", json!({"series": z.to_json(&lat)?}));
                    }
                    Ok(0)
                }
                (None, Some(vertices), Some(bound)) => {
                    let u = parse_vertex_list(&lat, &vertices)?;
                    let b = rat::parse_rational(&bound)?;
                    let reduced = invariants::z_relative_reduced(&lat, &u, h.as_ref(), &b)?;
                    if pretty {
                        print_reduced_header(&lat, &u, h.as_ref());
                        print_reduced(&reduced);
                    } else {
                        emit(
                            "series relative",
                            reduced_payload(&lat, &u, h.as_ref(), reduced.to_json()),
                        );
                    }
                    Ok(0)
                }
                _ => {
                    eprintln!(
                        "usage: series relative takes either --cap (full series) or \
                         --vertices and --bound (reduced series)"
                    );
                    Ok(2)
                }
            }
        }
    }
}

/// Prints the one-line JSON envelope.
fn emit(command: &str, payload: Value) {
    let doc = json!({
        "schema": SCHEMA,
        "command": command,
        "result": payload,
    });
    println!("{doc}");
}

fn reduced_payload(lat: &Lattice, u: &[usize], h: Option<&GroupClass>, series: Value) -> Value {
    json!({
        "vertices": u
            .iter()
            .map(|&j| lat.graph().vertex(j).id.clone())
            .collect::<Vec<_>>(),
        "class": h.map(|h| h.to_strings()),
        "series": series,
    })
}

/// Parses `id` or `id:count` for `--arrow`.
fn parse_arrow_spec(spec: &str) -> Result<(String, u64)> {
    let bad = |msg: String| Error::InvalidInput { msg };
    match spec.split_once(':') {
        None => Ok((spec.trim().to_string(), 1)),
        Some((id, count)) => {
            let count: u64 = count
                .trim()
                .parse()
                .map_err(|_| bad(format!("arrow count {count:?} is not a nonnegative integer")))?;
            Ok((id.trim().to_string(), count))
        }
    }
}

/// Parses a cycle spec: coordinates `a/b,...` or dual coordinates `n:1,0,2`.
fn parse_cycle_spec(lat: &Lattice, spec: &str) -> Result<Cycle> {
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix("n:") {
        let n = rest
            .split(',')
            .map(|tok| {
                tok.trim().parse::<i64>().map_err(|_| Error::InvalidCycleSpec {
                    msg: format!("dual coordinate {tok:?} is not an integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if n.len() != lat.rank() {
            return Err(Error::InvalidCycleSpec {
                msg: format!(
                    "expected {} dual coordinates, got {}",
                    lat.rank(),
                    n.len()
                ),
            });
        }
        Ok(lat.cycle_from_dual_i64(&n))
    } else {
        let cycle = Cycle::parse_list(s)?;
        if cycle.len() != lat.rank() {
            return Err(Error::InvalidCycleSpec {
                msg: format!("expected {} coordinates, got {}", lat.rank(), cycle.len()),
            });
        }
        Ok(cycle)
    }
}

/// Parses a class spec: `0` (zero class), a representative cycle `a/b,...`,
/// or dual coordinates `n:1,0,2` meaning the class of that dual combination.
fn parse_class_spec(lat: &Lattice, spec: &str) -> Result<GroupClass> {
    if spec.trim() == "0" {
        return Ok(lat.zero_class());
    }
    let cycle = parse_cycle_spec(lat, spec)?;
    lat.class_of(&cycle)
}

/// Resolves a comma-separated id list to vertex indices.
fn parse_vertex_list(lat: &Lattice, spec: &str) -> Result<Vec<usize>> {
    spec.split(',')
        .map(|id| lat.graph().index_of(id.trim()))
        .collect()
}

/// Parses a comma-separated integer list.
fn parse_bigint_list(spec: &str) -> Result<Vec<BigInt>> {
    spec.split(',')
        .map(|tok| {
            tok.trim().parse::<BigInt>().map_err(|_| Error::InvalidInput {
                msg: format!("coefficient {tok:?} is not an integer"),
            })
        })
        .collect()
}

/// Human rendering of an integer polynomial in `t`, constant term first.
fn polynomial_string(coeffs: &[BigInt]) -> String {
    use num_traits::Zero;
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let body = match k {
            0 => c.to_string(),
            _ => {
                let power = if k == 1 { "t".to_string() } else { format!("t^{k}") };
                if c == &BigInt::from(1) {
                    power
                } else if c == &BigInt::from(-1) {
                    format!("-{power}")
                } else {
                    format!("{c}*{power}")
                }
            }
        };
        parts.push(body);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn print_multi(series: &MultiSeries) {
    println!(
        "variables: {} | cap {}",
        series.variables().join(", "),
        series.cap()
    );
    for (n, c) in series.terms() {
        let key = n
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(",");
        println!("({key}): {c}");
    }
}

fn print_reduced_header(lat: &Lattice, u: &[usize], h: Option<&GroupClass>) {
    let ids: Vec<String> = u
        .iter()
        .map(|&j| lat.graph().vertex(j).id.clone())
        .collect();
    match h {
        Some(h) => println!("vertices: {} | class {}", ids.join(", "), h),
        None => println!("vertices: {}", ids.join(", ")),
    }
}

fn print_reduced(series: &crate::series::ReducedSeries) {
    println!("certified bound: {}", rat::format_rational(series.certified_bound()));
    for (e, c) in series.terms() {
        let key = e
            .iter()
            .map(rat::format_rational)
            .collect::<Vec<_>>()
            .join(",");
        println!("t^({key}): {c}");
    }
}
