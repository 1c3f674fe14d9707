//! Command-line front end. Every subcommand builds a [`Report`] that is
//! rendered as text, pretty JSON (`json-like`) or DOT.

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::homology;
use crate::presentation::{present, Presentation};
use crate::ribbon::{self, BrauerGraph, GraphData};
use crate::strmod::StringModule;
use crate::udr::{self, TreeModule};
use crate::verify;

/// Graphs shipped with the crate, addressable by name.
pub const BUNDLED: [(&str, &str); 8] = [
    ("star_2_222", include_str!("../graphs/star_2_222.graph")),
    ("star_2_223", include_str!("../graphs/star_2_223.graph")),
    ("star_3_22", include_str!("../graphs/star_3_22.graph")),
    ("star_1_222", include_str!("../graphs/star_1_222.graph")),
    ("star_3_2222", include_str!("../graphs/star_3_2222.graph")),
    ("koszul_2_2_3", include_str!("../graphs/koszul_2_2_3.graph")),
    ("tree_2221", include_str!("../graphs/tree_2221.graph")),
    ("bad_pairing", include_str!("../graphs/bad_pairing.graph")),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(name = "json-like", alias = "structured")]
    JsonLike,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "brauer", version, about = "Brauer graph algebras, string modules and deformation rings")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Maximal word length for enumerating suites.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    max_len: u64,
    /// Depth to which template ladders are checked.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    probe_depth: Option<u64>,
    /// Seed for the random tree corpus.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    /// Override for the Ω-periodicity search bound.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    bound: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Check the graph invariants; exit 1 on violations.
    Validate { graph: String },
    /// Counts, perimeters, multiplicities, bipartiteness and growth class.
    Invariants { graph: String },
    /// Compare the six derived-equivalence invariants of two graphs.
    DerivedEq { a: String, b: String },
    /// Star with the same derived-equivalence invariants as a tree.
    StarReduce { graph: String },
    /// Green walks and double-stepped Green walks.
    GreenWalks { graph: String },
    /// Quiver, special cycles and relations.
    Present { graph: String },
    /// Dimension, top, socle, periodicity, component, stable End and Ext^1.
    Module {
        graph: String,
        #[arg(long, allow_hyphen_values = true)]
        string: String,
    },
    /// Universal deformation ring with the evidence trail.
    Udr {
        graph: String,
        #[arg(long, allow_hyphen_values = true)]
        string: String,
    },
    /// Classify on the star reduction of a tree.
    UdrTree {
        graph: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["tube", "diagonal"])]
        string: Option<String>,
        /// Distance on the tube diagonal.
        #[arg(long, conflicts_with = "diagonal")]
        tube: Option<usize>,
        /// `t,j`: position j on the diagonal through S(t).
        #[arg(long, value_parser = parse_pair)]
        diagonal: Option<(usize, usize)>,
    },
    /// Window of the stable component around a module.
    Component {
        graph: String,
        #[arg(long, allow_hyphen_values = true)]
        string: String,
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
    },
    /// List the bundled graphs.
    Graphs,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected t,j")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

/// Rendered outcome of one command.
struct Report {
    text: String,
    json: Value,
    dot: Option<String>,
    status: i32,
}

impl Report {
    fn new(text: String, json: Value) -> Report {
        Report { text, json, dot: None, status: 0 }
    }
}

/// Failure before a report exists; always exit 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> InputError {
        InputError(e.to_string())
    }
}

type CmdResult = std::result::Result<Report, InputError>;

fn read_source(arg: &str) -> std::result::Result<String, InputError> {
    if Path::new(arg).exists() {
        return std::fs::read_to_string(arg).map_err(|e| InputError(format!("cannot read {arg}: {e}")));
    }
    let stem = arg.strip_suffix(".graph").unwrap_or(arg);
    BUNDLED
        .iter()
        .find(|(n, _)| *n == stem)
        .map(|(_, t)| t.to_string())
        .ok_or_else(|| InputError(format!("{arg}: no such file or bundled graph")))
}

fn load_data(arg: &str) -> std::result::Result<GraphData, InputError> {
    GraphData::from_json(&read_source(arg)?).map_err(|e| InputError(format!("{arg}: {e}")))
}

fn load_graph(arg: &str) -> std::result::Result<BrauerGraph, InputError> {
    BrauerGraph::from_data(&load_data(arg)?).map_err(|e| InputError(format!("{arg}: {e}")))
}

fn halves(g: &BrauerGraph, hs: &[usize]) -> Vec<String> {
    hs.iter().map(|&h| g.half_id(h).to_string()).collect()
}

fn set(xs: impl IntoIterator<Item = impl ToString>) -> String {
    format!("{{{}}}", xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn cmd_validate(path: &str) -> CmdResult {
    let data = load_data(path)?;
    let r = ribbon::validate(&data);
    let text = if r.ok() { "ok".to_string() } else { r.violations.iter().map(|v| format!("violation: {v}")).collect::<Vec<_>>().join("\n") };
    let mut rep = Report::new(text, json!({ "ok": r.ok(), "violations": r.violations }));
    rep.status = i32::from(!r.ok());
    Ok(rep)
}

fn cmd_invariants(path: &str) -> CmdResult {
    let g = load_graph(path)?;
    let mut mults = g.multiplicities();
    mults.reverse();
    let perims = g.perimeters();
    let growth = ribbon::growth_class(&g);
    let family = homology::family_name(&present(&g));
    let exc: Vec<&str> = ribbon::exceptional_edges(&g).into_iter().map(|e| g.edge_name(e)).collect();
    let text = [
        format!("vertices {}", g.n_vertices()),
        format!("edges {}", g.n_edges()),
        format!("faces {}", perims.len()),
        format!("perimeters {}", set(&perims)),
        format!("multiplicities {}", set(&mults)),
        format!("bipartite {}", g.is_bipartite()),
        format!("tree {}", g.is_tree()),
        format!("growth {growth}"),
        format!("exceptional edges {}", set(&exc)),
        format!("family {family}"),
    ]
    .join("\n");
    Ok(Report::new(
        text,
        json!({
            "vertices": g.n_vertices(), "edges": g.n_edges(), "faces": perims.len(), "perimeters": perims,
            "multiplicities": mults, "bipartite": g.is_bipartite(), "tree": g.is_tree(), "growth": growth,
            "exceptional_edges": exc, "family": family,
        }),
    ))
}

fn cmd_derived_eq(a: &str, b: &str) -> CmdResult {
    let (ga, gb) = (load_graph(a)?, load_graph(b)?);
    let r = ribbon::derived_equivalent(&ga, &gb);
    let mut lines = vec![format!("equivalent: {}", r.equivalent)];
    for c in &r.criteria {
        lines.push(format!("{} {} | {} {}", c.name, c.left, c.right, if c.ok { "ok" } else { "differs" }));
    }
    let mut rep = Report::new(lines.join("\n"), serde_json::to_value(&r).expect("report serializes"));
    rep.status = i32::from(!r.equivalent);
    Ok(rep)
}

fn cmd_star_reduce(path: &str) -> CmdResult {
    let g = load_graph(path)?;
    let s = ribbon::star_reduce(&g)?;
    let name = homology::family_name(&present(&s));
    Ok(Report::new(s.data().to_json(), json!({ "star": name, "graph": s.data() })))
}

fn cmd_green_walks(path: &str) -> CmdResult {
    let g = load_graph(path)?;
    let walks: Vec<Vec<String>> = g.green_walks().iter().map(|w| halves(&g, &w.steps)).collect();
    let double: Vec<Vec<String>> = g.double_stepped_walks().iter().map(|w| halves(&g, &w.steps)).collect();
    let mut lines = Vec::new();
    for w in &walks {
        lines.push(format!("walk ({}) {}", w.len(), w.join(" ")));
    }
    for w in &double {
        lines.push(format!("double-stepped ({}) {}", w.len(), w.join(" ")));
    }
    Ok(Report::new(lines.join("\n"), json!({ "green_walks": walks, "double_stepped": double })))
}

fn quiver_dot(p: &Presentation) -> String {
    let mut s = String::from("digraph quiver {\n");
    for q in 0..p.n_q() {
        s.push_str(&format!("  q{q} [label=\"{}\"];\n", p.q_name(q)));
    }
    for a in p.arrows() {
        s.push_str(&format!("  q{} -> q{} [label=\"{}\"];\n", a.source, a.target, a.id));
    }
    s.push_str("}\n");
    s
}

fn cmd_present(path: &str) -> CmdResult {
    let g = load_graph(path)?;
    let p = present(&g);
    let ex = p.export();
    let mut lines = vec![format!("family {}", homology::family_name(&p)), format!("dimension {}", p.dim())];
    for a in p.arrows() {
        lines.push(format!("arrow {}: {} -> {} at vertex {}", a.id, p.q_name(a.source), p.q_name(a.target), g.vertex_id(a.vertex)));
    }
    for c in ex["special_cycles"].as_array().into_iter().flatten() {
        let arrows: Vec<&str> = c["arrows"].as_array().into_iter().flatten().filter_map(|x| x.as_str()).collect();
        lines.push(format!("special cycle at {} from {}: ({})^{}", c["vertex"].as_str().unwrap_or(""), c["half_edge"].as_str().unwrap_or(""), arrows.join(" "), c["power"]));
    }
    let rel = p.relations();
    let name = |a: &usize| p.arrow(*a).id.clone();
    for (a, b) in &rel.type1 {
        lines.push(format!("relation I: {} = {}", a.iter().map(name).collect::<Vec<_>>().join(" "), b.iter().map(name).collect::<Vec<_>>().join(" ")));
    }
    for a in &rel.type2 {
        lines.push(format!("relation II: {} = 0", a.iter().map(name).collect::<Vec<_>>().join(" ")));
    }
    for (a, b) in &rel.type3 {
        lines.push(format!("relation III: {} {} = 0", name(a), name(b)));
    }
    let mut rep = Report::new(lines.join("\n"), ex);
    rep.dot = Some(quiver_dot(&p));
    Ok(rep)
}

fn parse_module(p: &Presentation, word: &str) -> std::result::Result<StringModule, InputError> {
    StringModule::parse(word, p).map_err(|e| InputError(format!("`{word}`: {e}")))
}

fn cmd_module(path: &str, word: &str, bound: Option<usize>) -> CmdResult {
    let g = load_graph(path)?;
    let p = present(&g);
    let m = parse_module(&p, word)?;
    let name = |qs: Vec<usize>| qs.into_iter().map(|q| p.q_name(q)).collect::<Vec<_>>();
    let mut lines = vec![
        format!("module M[{}]", m.display(&p)),
        format!("dim {}", m.dim()),
        format!("dimension vector {:?}", m.word().dim_vector(&p)),
        format!("top {}", set(name(m.top(&p)))),
        format!("socle {}", set(name(m.socle(&p)))),
    ];
    let mut j = json!({
        "word": m.display(&p), "dim": m.dim(), "dim_vector": m.word().dim_vector(&p),
        "top": name(m.top(&p)), "socle": name(m.socle(&p)),
    });
    if homology::is_projective(&p, &m) {
        lines.push("projective".into());
        j["projective"] = json!(true);
        return Ok(Report::new(lines.join("\n"), j));
    }
    let period = homology::is_periodic(&p, &m, bound)?;
    let addr = homology::locate(&p, &m)?;
    let se = homology::stable_end_dim(&p, &m);
    let ext = homology::ext1_dim(&p, &m)?;
    lines.push(match period {
        Some(k) => format!("periodic, period {k}"),
        None => "non-periodic".into(),
    });
    lines.push(match &addr {
        homology::ComponentAddress::ExceptionalTube { tube_id, rank, d, boundary_half } => {
            format!("tube {tube_id} of rank {rank}, d = {d}, ray from boundary half-edge {}", g.half_id(*boundary_half))
        }
        homology::ComponentAddress::ZaInfinityInfinity { diagonal: Some((t, jj, k)) } => {
            format!("ZA_inf_inf, Omega-stable; Omega^{k}(M) is position {jj} of the diagonal through S({t})")
        }
        homology::ComponentAddress::ZaInfinityInfinity { diagonal: None } => "ZA_inf_inf".into(),
    });
    lines.push(format!("stable End dim {se}"));
    lines.push(format!("Ext^1 dim {ext}"));
    j["periodic"] = json!(period.is_some());
    j["period"] = json!(period);
    j["address"] = serde_json::to_value(&addr).expect("address serializes");
    j["stable_end_dim"] = json!(se);
    j["ext1_dim"] = json!(ext);
    Ok(Report::new(lines.join("\n"), j))
}

fn classification_text(c: &udr::Classification) -> String {
    let mut lines = vec![format!("{}", c.class), format!("module M[{}]", c.word)];
    for e in &c.evidence {
        lines.push(format!("  {}: {}", e.rule, e.detail));
    }
    lines.join("\n")
}

fn cmd_udr(path: &str, word: &str) -> CmdResult {
    let g = load_graph(path)?;
    let p = present(&g);
    let m = parse_module(&p, word)?;
    let c = udr::classify(&p, &m)?;
    Ok(Report::new(classification_text(&c), serde_json::to_value(&c).expect("classification serializes")))
}

fn cmd_udr_tree(path: &str, word: Option<String>, tube: Option<usize>, diagonal: Option<(usize, usize)>) -> CmdResult {
    let g = load_graph(path)?;
    let module = match (word, tube, diagonal) {
        (Some(w), _, _) => TreeModule::Word(w),
        (_, Some(d), _) => TreeModule::Tube { d },
        (_, _, Some((t, j))) => TreeModule::Diagonal { t, j },
        _ => return Err(InputError("one of --string, --tube, --diagonal is required".into())),
    };
    let r = udr::classify_tree(&g, &module)?;
    let text = format!("star {}\n{}\ntransport: {}", r.star, classification_text(&r.classification), r.transport);
    Ok(Report::new(text, serde_json::to_value(&r).expect("classification serializes")))
}

fn cmd_component(path: &str, word: &str, radius: usize) -> CmdResult {
    let g = load_graph(path)?;
    let p = present(&g);
    let m = parse_module(&p, word)?;
    if homology::is_projective(&p, &m) {
        return Err(Error::ProjectiveInput.into());
    }
    let mut w = homology::component_window(&p, &m, radius);
    w.label_with(|s| {
        StringModule::parse(s, &p).map(|x| format!("dim {}", x.dim())).unwrap_or_default()
    });
    let mut lines = vec![format!("{} modules, {} irreducible maps", w.nodes.len(), w.arrows.len())];
    for n in &w.nodes {
        lines.push(format!("({}, {}) {}", n.coords.0, n.coords.1, n.word));
    }
    for (a, b) in &w.arrows {
        lines.push(format!("{} -> {}", w.nodes[*a].word, w.nodes[*b].word));
    }
    let mut rep = Report::new(lines.join("\n"), serde_json::to_value(&w).expect("window serializes"));
    rep.dot = Some(w.to_dot());
    Ok(rep)
}

fn cmd_verify(suite: &str, cfg: &verify::Config) -> CmdResult {
    let checks = verify::run_suite(suite, cfg)?;
    let passed = checks.iter().filter(|c| c.ok).count();
    let mut lines: Vec<String> = checks.iter().map(|c| c.line()).collect();
    lines.push(format!("{suite}: {passed}/{} checks passed", checks.len()));
    let mut rep = Report::new(lines.join("\n"), json!({ "suite": suite, "passed": passed, "checks": checks }));
    rep.status = i32::from(passed != checks.len());
    Ok(rep)
}

fn cmd_graphs() -> CmdResult {
    let names: Vec<&str> = BUNDLED.iter().map(|(n, _)| *n).collect();
    Ok(Report::new(names.join("\n"), json!(names)))
}

fn dispatch(cli: Cli) -> CmdResult {
    let cfg = verify::Config {
        max_len: cli.max_len as usize,
        seed: cli.seed,
        bound: cli.bound.map(|b| b as usize),
        probe_depth: cli.probe_depth.map(|d| d as usize),
        ..verify::Config::default()
    };
    match cli.cmd {
        Cmd::Validate { graph } => cmd_validate(&graph),
        Cmd::Invariants { graph } => cmd_invariants(&graph),
        Cmd::DerivedEq { a, b } => cmd_derived_eq(&a, &b),
        Cmd::StarReduce { graph } => cmd_star_reduce(&graph),
        Cmd::GreenWalks { graph } => cmd_green_walks(&graph),
        Cmd::Present { graph } => cmd_present(&graph),
        Cmd::Module { graph, string } => cmd_module(&graph, &string, cfg.bound),
        Cmd::Udr { graph, string } => cmd_udr(&graph, &string),
        Cmd::UdrTree { graph, string, tube, diagonal } => cmd_udr_tree(&graph, string, tube, diagonal),
        Cmd::Component { graph, string, radius } => cmd_component(&graph, &string, radius),
        Cmd::Verify { suite } => cmd_verify(&suite, &cfg),
        Cmd::Graphs => cmd_graphs(),
    }
}

/// Run with explicit output streams; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if code == 0 { 0 } else { 2 };
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(rep) => {
            let body = match format {
                Format::Text => rep.text,
                Format::JsonLike => serde_json::to_string_pretty(&rep.json).expect("json renders"),
                Format::Dot => match rep.dot {
                    Some(d) => d,
                    None => {
                        let _ = writeln!(err, "error: dot output is available for `component` and `present` only");
                        return 2;
                    }
                },
            };
            let _ = writeln!(out, "{}", body.trim_end());
            rep.status
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Run against the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
