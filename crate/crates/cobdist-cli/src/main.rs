//! Command-line surface for the cobdist engines.
//!
//! Exit codes: 0 on success (including uncertified results, which set
//! `"certified": false` in JSON), 2 on parse errors, 3 on violated
//! preconditions.

mod svg;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cobdist::genus::{g4_interval, UpperWitness};
use cobdist::knots::combo_signature;
use cobdist::metric::{
    ball_radius_one, big_delta_interval, dbar_search, default_universe, delta_certified, zz,
    Certificate, ClassNode, DistInterval,
};
use cobdist::parse::{parse_combo, parse_element, parse_group, parse_point, ParseError};
use cobdist::projective::{canonicalize, common_multiple_witness, equivalent, related_one_step};
use cobdist::rips::{build_rips_for_combos, twist_clique, RipsComplex};
use cobdist::{Error, StepFunction};

#[derive(Parser)]
#[command(
    name = "cobdist",
    version,
    about = "Exact signature functions, certified four-genus intervals, and projective \
             distances on combinations of 2-stranded torus knots"
)]
struct Cli {
    /// Emit a JSON record instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV rows (sig and dbar only)
    #[arg(long, global = true)]
    csv: bool,
    /// Seed echoed into output records for reproducible demos
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for pairwise computations
    #[arg(long, global = true, default_value_t = 1)]
    parallel: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Signature step function of a knot combination
    Sig {
        combo: String,
        /// Write an SVG plot of the step function
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Certified four-genus interval of a combination
    G4 { combo: String },
    /// Minimum of g4(b*T(2,2n+1) - a*T(2,2k+1)) over nonzero a, b
    Dbar { k: u32, n: u32 },
    /// Certified projective distance between two primitive combinations
    Delta { combo_a: String, combo_b: String },
    /// Chain-metric interval within a universe of intermediate classes
    BigDelta {
        combo_a: String,
        combo_b: String,
        /// `torus:M`, or semicolon-separated combinations; default adds the
        /// two-step witness pattern to all torus classes up to T(2,61)
        #[arg(long)]
        universe: Option<String>,
    },
    /// Radius-one ball around T(2,N) among torus classes
    Ball {
        n: u32,
        /// Largest odd torus parameter considered
        #[arg(long, default_value_t = 121)]
        max: u32,
    },
    /// Vietoris-Rips complex over certified distance-one edges
    Rips {
        /// Comma-separated odd torus parameters, e.g. 3,5,7
        #[arg(long, conflicts_with_all = ["twist", "combos"])]
        torus: Option<String>,
        /// Comma-separated twist parameters, e.g. 1,2,3
        #[arg(long, conflicts_with_all = ["torus", "combos"])]
        twist: Option<String>,
        /// File with one knot combination per line
        #[arg(long, conflicts_with_all = ["torus", "twist"])]
        combos: Option<PathBuf>,
    },
    /// Canonical projective class of group elements
    Proj {
        group: String,
        elem: String,
        elem2: Option<String>,
    },
    /// Max-norm demonstration metric on the rank-two lattice
    Zz {
        #[command(subcommand)]
        cmd: ZzCmd,
    },
}

#[derive(Subcommand)]
enum ZzCmd {
    /// Least max-norm distance between multiples of the two classes
    Delta { p: String, q: String },
    /// Shortest chain within a coefficient bound
    Chain {
        p: String,
        q: String,
        /// Coordinate bound on intermediate classes (default: max input
        /// coordinate)
        #[arg(long)]
        bound: Option<i64>,
    },
}

enum Failure {
    Parse(String),
    Engine(Error),
    Io(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("io error: {msg}");
            ExitCode::from(3)
        }
    }
}

struct Output {
    json: bool,
    csv: bool,
    seed: Option<u64>,
    started: Instant,
}

impl Output {
    fn record(&self, command: &str, inputs: Value, certified: bool, body: Value) -> Value {
        let mut obj = json!({
            "command": command,
            "inputs": inputs,
            "certified": certified,
            "timing_ms": self.started.elapsed().as_millis() as u64,
        });
        if let Some(seed) = self.seed {
            obj["seed"] = json!(seed);
        }
        for (k, v) in body.as_object().expect("body is an object") {
            obj[k] = v.clone();
        }
        obj
    }

    fn no_csv(&self, command: &str) -> Result<(), Failure> {
        if self.csv {
            return Err(Failure::Parse(format!(
                "csv output is only defined for sig and dbar, not {command}"
            )));
        }
        Ok(())
    }
}

fn cert_json(c: &Certificate) -> Value {
    json!({ "kind": c.kind(), "detail": serde_json::to_value(c).unwrap() })
}

fn interval_body(d: &DistInterval) -> Value {
    json!({
        "lower": d.lower,
        "upper": d.upper,
        "witnesses": [cert_json(&d.lower_cert), cert_json(&d.upper_cert)],
    })
}

fn interval_text(d: &DistInterval) -> String {
    let upper = d
        .upper
        .map(|u| u.to_string())
        .unwrap_or_else(|| "unbounded".into());
    let tag = if d.exact() { "exact" } else { "interval" };
    format!(
        "[{}, {}] ({tag})\n  lower: {}\n  upper: {}",
        d.lower,
        upper,
        describe(&d.lower_cert),
        describe(&d.upper_cert)
    )
}

fn describe(c: &Certificate) -> String {
    match c {
        Certificate::SameClass => "same projective class".into(),
        Certificate::SignaturePoint { pair, at, value } => format!(
            "signature point: |sig|({at}) = {value} for multiples ({}, {})",
            pair.0, pair.1
        ),
        Certificate::Schema { pair, curves } => format!(
            "surgery schema with {curves} curves for multiples ({}, {})",
            pair.0, pair.1
        ),
        Certificate::ClosedForm { pair } => {
            format!("closed-form bound for multiples ({}, {})", pair.0, pair.1)
        }
        Certificate::Seifert { pair } => {
            format!("Seifert-genus bound for multiples ({}, {})", pair.0, pair.1)
        }
        Certificate::Chain { nodes } => format!("chain: {}", nodes.join(" -> ")),
        Certificate::Axiom { note } => format!("axiom: {note}"),
        Certificate::Unbounded => "no certified bound in this universe".into(),
    }
}

fn node_from(text: &str) -> Result<ClassNode, Failure> {
    let combo = parse_combo(text)?;
    Ok(ClassNode::new(combo)?)
}

fn sig_rows(sig: &StepFunction) -> Vec<(String, String, i64)> {
    let mut rows = Vec::new();
    let mut lo = "0".to_string();
    for (i, v) in sig.interval_values().iter().enumerate() {
        let hi = if i < sig.breakpoints().len() {
            sig.breakpoints()[i].to_string()
        } else {
            "1".to_string()
        };
        rows.push((lo.clone(), hi.clone(), *v));
        lo = hi;
    }
    rows
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = Output {
        json: cli.json,
        csv: cli.csv,
        seed: cli.seed,
        started: Instant::now(),
    };
    match cli.cmd {
        Cmd::Sig { combo, svg } => {
            let parsed = parse_combo(&combo)?;
            let sig = combo_signature(&parsed)?;
            let rows = sig_rows(&sig);
            if let Some(path) = svg {
                let doc = svg::render_step_svg(&sig, &parsed.to_string());
                std::fs::write(&path, doc).map_err(|e| Failure::Io(e.to_string()))?;
            }
            if out.json {
                let body = json!({
                    "value": sig.sup_abs(),
                    "intervals": rows.iter()
                        .map(|(lo, hi, v)| json!([lo, hi, v]))
                        .collect::<Vec<_>>(),
                    "witnesses": [],
                });
                let rec = out.record("sig", json!({"combo": parsed.to_string()}), true, body);
                println!("{}", serde_json::to_string_pretty(&rec).unwrap());
            } else if out.csv {
                println!("t_lo,t_hi,value");
                for (lo, hi, v) in rows {
                    println!("{lo},{hi},{v}");
                }
            } else {
                println!("signature of {parsed}");
                for (lo, hi, v) in rows {
                    println!("  ({lo}, {hi}{}  {v}", if hi == "1" { "]" } else { ")" });
                }
                println!("sup |sig| = {}", sig.sup_abs());
            }
        }
        Cmd::G4 { combo } => {
            out.no_csv("g4")?;
            let parsed = parse_combo(&combo)?;
            let interval = g4_interval(&parsed)?;
            let upper_kind = match &interval.upper_witness {
                UpperWitness::Schema(s) => format!("schema with {} curves", s.total_curves()),
                UpperWitness::ClosedForm { k, n, a } => {
                    format!("closed form at k={k}, n={n}, a={a}")
                }
                UpperWitness::Seifert => "Seifert genus".to_string(),
            };
            if out.json {
                let body = json!({
                    "lower": interval.lower,
                    "upper": interval.upper,
                    "witnesses": [
                        {"kind": "signature-point", "detail": format!("|sig|({}) = {}", interval.lower_witness, interval.lower)},
                        {"kind": match interval.upper_witness { UpperWitness::Schema(_) => "schema", UpperWitness::ClosedForm{..} => "closed-form", UpperWitness::Seifert => "seifert" }, "detail": upper_kind},
                    ],
                });
                let rec = out.record(
                    "g4",
                    json!({"combo": parsed.to_string()}),
                    interval.exact(),
                    body,
                );
                println!("{}", serde_json::to_string_pretty(&rec).unwrap());
            } else {
                println!(
                    "g4({parsed}) in [{}, {}]{}",
                    interval.lower,
                    interval.upper,
                    if interval.exact() { " (exact)" } else { "" }
                );
                println!(
                    "  lower: |sig|({}) = {}",
                    interval.lower_witness, interval.lower
                );
                println!("  upper: {upper_kind}");
            }
        }
        Cmd::Dbar { k, n } => {
            let res = dbar_search(k, n)?;
            if out.json {
                let witnesses: Vec<Value> = res
                    .argmins
                    .iter()
                    .map(|(b, a)| {
                        let combo = cobdist::knots::torus_pair_combo(k, n, *a, *b).unwrap();
                        let i = g4_interval(&combo).unwrap();
                        match i.upper_witness {
                            UpperWitness::Schema(s) => json!({"kind": "schema", "detail": format!("({b}, {a}): {} curves", s.total_curves())}),
                            UpperWitness::ClosedForm { .. } => json!({"kind": "closed-form", "detail": format!("({b}, {a})")}),
                            UpperWitness::Seifert => json!({"kind": "seifert", "detail": format!("({b}, {a})")}),
                        }
                    })
                    .collect();
                let body = json!({
                    "value": res.value,
                    "argmins": res.argmins,
                    "witnesses": witnesses,
                    "candidates": res.candidates.iter()
                        .map(|c| json!({"b": c.b, "a": c.a, "lower": c.lower, "upper": c.upper, "exact": c.exact}))
                        .collect::<Vec<_>>(),
                });
                let rec = out.record("dbar", json!({"k": k, "n": n}), res.all_certified, body);
                println!("{}", serde_json::to_string_pretty(&rec).unwrap());
            } else if out.csv {
                println!("b,a,lower,upper,exact");
                for c in &res.candidates {
                    println!("{},{},{},{},{}", c.b, c.a, c.lower, c.upper, c.exact);
                }
            } else {
                let mins: Vec<String> = res
                    .argmins
                    .iter()
                    .map(|(b, a)| format!("(b={b}, a={a})"))
                    .collect();
                println!(
                    "dbar(T(2,{}), T(2,{})) = {}  at {}{}",
                    2 * k + 1,
                    2 * n + 1,
                    res.value,
                    mins.join(", "),
                    if res.all_certified {
                        ""
                    } else {
                        "  [not fully certified]"
                    }
                );
            }
        }
        Cmd::Delta { combo_a, combo_b } => {
            out.no_csv("delta")?;
            let x = node_from(&combo_a)?;
            let y = node_from(&combo_b)?;
            let d = delta_certified(&x, &y)?;
            if out.json {
                let rec = out.record(
                    "delta",
                    json!({"a": x.label(), "b": y.label()}),
                    d.exact(),
                    interval_body(&d),
                );
                println!("{}", serde_json::to_string_pretty(&rec).unwrap());
            } else {
                println!(
                    "delta([{}], [{}]) = {}",
                    x.label(),
                    y.label(),
                    interval_text(&d)
                );
            }
        }
        Cmd::BigDelta {
            combo_a,
            combo_b,
            universe,
        } => {
            out.no_csv("big-delta")?;
            let x = node_from(&combo_a)?;
            let y = node_from(&combo_b)?;
            let nodes = match universe.as_deref() {
                None => default_universe(30),
                Some(spec) => {
                    if let Some(m_str) = spec.strip_prefix("torus:") {
                        let q: u32 = m_str.parse().map_err(|_| {
                            Failure::Parse(format!("parse error at position 6: bad bound {m_str}"))
                        })?;
                        (1..=(q.saturating_sub(1)) / 2)
                            .map(ClassNode::torus)
                            .collect::<Result<Vec<_>, _>>()?
                    } else {
                        spec.split(';')
                            .filter(|s| !s.trim().is_empty())
                            .map(node_from)
                            .collect::<Result<Vec<_>, _>>()?
                    }
                }
            };
            let d = big_delta_interval(&x, &y, &nodes, cli.parallel.max(1))?;
            if out.json {
                let rec = out.record(
                    "big-delta",
                    json!({"a": x.label(), "b": y.label(), "universe_size": nodes.len()}),
                    d.exact(),
                    interval_body(&d),
                );
                println!("{}", serde_json::to_string_pretty(&rec).unwrap());
            } else {
                println!(
                    "Delta([{}], [{}]) = {}",
                    x.label(),
                    y.label(),
                    interval_text(&d)
                );
            }
        }
        Cmd::Ball { n, max } => {
            out.no_csv("ball")?;
            if n < 3 || n % 2 == 0 {
                return Err(Failure::Engine(Error::ParameterRange {
                    name: "odd torus parameter N",
                    min: 3,
                    got: i64::from(n),
                }));
            }
            let m = (n - 1) / 2;
            let m_max = (max.max(3) - 1) / 2;
            let ball = ball_radius_one(m, m_max, cli.parallel.max(1))?;
            if out.json {
                let body = json!({
                    "ball": ball,
                    "witnesses": [{
                        "kind": "classification",
                        "detail": "members certified by exact delta = 1 (signature point \
                                   lower, schema/closed-form upper) and cross-checked \
                                   against the distance-one classification",
                    }],
                });
                let rec = out.record("ball", json!({"n": n, "max": max}), true, body);
                println!("{}", serde_json::to_string_pretty(&rec).unwrap());
            } else {
                let parts: Vec<String> = ball.iter().map(|q| q.to_string()).collect();
                println!("{}", parts.join(" "));
            }
        }
        Cmd::Rips {
            torus,
            twist,
            combos,
        } => {
            out.no_csv("rips")?;
            let complex: RipsComplex = if let Some(list) = torus {
                let mut nodes = Vec::new();
                for part in list.split(',') {
                    let q: u32 = part.trim().parse().map_err(|_| {
                        Failure::Parse(format!("parse error: bad torus parameter {part}"))
                    })?;
                    if q < 3 || q.is_multiple_of(2) {
                        return Err(Failure::Parse(format!(
                            "parse error: torus parameter {q} must be odd and at least 3"
                        )));
                    }
                    nodes.push(ClassNode::torus((q - 1) / 2)?);
                }
                build_rips_for_combos(&nodes, cli.parallel.max(1))?
            } else if let Some(list) = twist {
                let ns: Vec<u32> = list
                    .split(',')
                    .map(|p| {
                        p.trim().parse().map_err(|_| {
                            Failure::Parse(format!("parse error: bad twist parameter {p}"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                twist_clique(&ns)?
            } else if let Some(path) = combos {
                let text =
                    std::fs::read_to_string(&path).map_err(|e| Failure::Io(e.to_string()))?;
                let nodes = text
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(node_from)
                    .collect::<Result<Vec<_>, _>>()?;
                build_rips_for_combos(&nodes, cli.parallel.max(1))?
            } else {
                return Err(Failure::Parse(
                    "one of --torus, --twist, --combos is required".into(),
                ));
            };
            if out.json {
                let body = json!({
                    "vertices": complex.vertices,
                    "edges": complex.edges.iter().map(|e| json!({"a": e.a, "b": e.b, "certificate": e.certificate})).collect::<Vec<_>>(),
                    "maximal_simplices": complex.maximal_simplices,
                    "uncertified_pairs": complex.uncertified_pairs,
                    "dimension": complex.dimension(),
                    "witnesses": [],
                });
                let rec = out.record(
                    "rips",
                    json!({}),
                    complex.uncertified_pairs.is_empty(),
                    body,
                );
                println!("{}", serde_json::to_string_pretty(&rec).unwrap());
            } else {
                println!(
                    "vertices: {}  edges: {}  dimension: {}",
                    complex.vertices.len(),
                    complex.edges.len(),
                    complex
                        .dimension()
                        .map(|d| d.to_string())
                        .unwrap_or_else(|| "-".into())
                );
                for s in &complex.maximal_simplices {
                    let names: Vec<&str> =
                        s.iter().map(|i| complex.vertices[*i].as_str()).collect();
                    println!("  simplex: {{{}}}", names.join(", "));
                }
                if !complex.uncertified_pairs.is_empty() {
                    println!("  uncertified pairs: {:?}", complex.uncertified_pairs);
                }
            }
        }
        Cmd::Proj { group, elem, elem2 } => {
            out.no_csv("proj")?;
            let g = parse_group(&group)?;
            let x = parse_element(&elem, &g)?;
            match elem2 {
                None => {
                    let class = canonicalize(&g, &x);
                    if out.json {
                        let body = json!({"value": class.to_string(), "witnesses": []});
                        let rec = out.record(
                            "proj",
                            json!({"group": g.to_string(), "elem": x.to_string()}),
                            true,
                            body,
                        );
                        println!("{}", serde_json::to_string_pretty(&rec).unwrap());
                    } else {
                        println!("[{x}] = {class} in P({g})");
                    }
                }
                Some(e2) => {
                    let y = parse_element(&e2, &g)?;
                    let eq = equivalent(&g, &x, &y);
                    let one = related_one_step(&g, &x, &y);
                    let witness = common_multiple_witness(&g, &x, &y);
                    if out.json {
                        let body = json!({
                            "value": eq,
                            "one_step": one,
                            "witnesses": witness
                                .map(|(a, b)| vec![json!({"kind": "common-multiple", "detail": format!("{a}*x = {b}*y != 0")})])
                                .unwrap_or_default(),
                        });
                        let rec = out.record(
                            "proj",
                            json!({"group": g.to_string(), "elem": x.to_string(), "elem2": y.to_string()}),
                            true,
                            body,
                        );
                        println!("{}", serde_json::to_string_pretty(&rec).unwrap());
                    } else {
                        println!("[{x}] {} [{y}] in P({g})", if eq { "=" } else { "!=" });
                        println!("  one-step related: {one}");
                        match witness {
                            Some((a, b)) => println!("  common multiple: {a}*x = {b}*y != 0"),
                            None => println!("  common multiple: none"),
                        }
                    }
                }
            }
        }
        Cmd::Zz { cmd } => {
            out.no_csv("zz")?;
            match cmd {
                ZzCmd::Delta { p, q } => {
                    let pp = parse_point(&p)?;
                    let qq = parse_point(&q)?;
                    if pp == (0, 0) || qq == (0, 0) {
                        return Err(Failure::Engine(Error::ParameterRange {
                            name: "lattice point",
                            min: 1,
                            got: 0,
                        }));
                    }
                    let d = zz::zz_delta(pp, qq);
                    if out.json {
                        let body = json!({"value": d, "witnesses": []});
                        let rec = out.record("zz-delta", json!({"p": p, "q": q}), true, body);
                        println!("{}", serde_json::to_string_pretty(&rec).unwrap());
                    } else {
                        println!("{d}");
                    }
                }
                ZzCmd::Chain { p, q, bound } => {
                    let pp = parse_point(&p)?;
                    let qq = parse_point(&q)?;
                    if pp == (0, 0) || qq == (0, 0) {
                        return Err(Failure::Engine(Error::ParameterRange {
                            name: "lattice point",
                            min: 1,
                            got: 0,
                        }));
                    }
                    let bound = bound.unwrap_or_else(|| {
                        [pp.0.abs(), pp.1.abs(), qq.0.abs(), qq.1.abs(), 2]
                            .into_iter()
                            .max()
                            .unwrap()
                    });
                    let (d, chain) = zz::zz_big_delta(pp, qq, bound);
                    if out.json {
                        let body = json!({
                            "value": d,
                            "witnesses": [{"kind": "chain", "detail": chain.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" -> ")}],
                        });
                        let rec = out.record(
                            "zz-chain",
                            json!({"p": p, "q": q, "bound": bound}),
                            true,
                            body,
                        );
                        println!("{}", serde_json::to_string_pretty(&rec).unwrap());
                    } else {
                        let steps: Vec<String> =
                            chain.iter().map(|(a, b)| format!("({a},{b})")).collect();
                        println!("{d}  via {}", steps.join(" -> "));
                    }
                }
            }
        }
    }
    Ok(())
}
