//! `simplex-color`: generate, color, check and draw pure simplicial complexes.
//!
//! Exit codes: 0 success, 2 input error, 3 complex cannot be realized (no
//! exposed facet left while peeling), 4 coloring or certificate is invalid,
//! 1 internal error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;
use simplex_color::complex::{self, Format, ValidationLevel};
use simplex_color::dual::{analyze_kd1_configuration, build_dual, find_all_cliques, find_clique, stats};
use simplex_color::{
    color, exact_chromatic, generate, peel, render_svg, verify_coloring, Complex, Error,
    GeneratorKind, GeneratorSpec, PeelCertificate, PeelMethod, RenderOptions, DEFAULT_NODE_LIMIT,
};

const EXIT_INTERNAL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNREALIZABLE: u8 = 3;
const EXIT_INVALID_COLORING: u8 = 4;

#[derive(Parser)]
#[command(name = "simplex-color", version, about = "Color pure simplicial complexes with d+1 colors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated complex (JSON, or OFF for `.off` outputs in 2D).
    Generate(GenerateArgs),
    /// Peel and color complexes; writes a coloring and a peel certificate.
    Color(ColorArgs),
    /// Check that a coloring is proper, and optionally replay a certificate.
    Verify(VerifyArgs),
    /// Report degree, clique and chromatic-bound facts about the dual graph.
    Analyze(AnalyzeArgs),
    /// Exact chromatic number of the dual graph for small complexes.
    Chromatic(ChromaticArgs),
    /// Draw a planar complex as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// fan, closed-fan, tri-tiling, delaunay2d, freudenthal, path, boundary-abstract
    #[arg(long)]
    kind: GeneratorKind,
    #[arg(long = "dim")]
    dimension: usize,
    /// Size parameter; its meaning depends on the kind.
    #[arg(long, visible_alias = "cells", default_value_t = 1)]
    size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; stdout (JSON) when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long, default_value = "combinatorial")]
    method: PeelMethod,
    /// Coloring output (single input only). Defaults to `<input stem>.coloring.json`.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Certificate output (single input only). Defaults to
    /// `<output stem>.certificate.json`, or `<input stem>.certificate.json`
    /// without `-o`.
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Worker threads for several inputs; 0 uses all cores.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct VerifyArgs {
    input: PathBuf,
    coloring: PathBuf,
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ChromaticArgs {
    input: PathBuf,
    /// Largest component the exact search accepts.
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    limit: usize,
}

#[derive(Args)]
struct RenderArgs {
    input: PathBuf,
    #[arg(long)]
    coloring: Option<PathBuf>,
    #[arg(short, long)]
    output: PathBuf,
    #[arg(long, default_value_t = 640)]
    width: u32,
    #[arg(long, default_value_t = 640)]
    height: u32,
    /// Comma-separated fill colors indexed by color number.
    #[arg(long, value_delimiter = ',')]
    palette: Option<Vec<String>>,
    #[arg(long)]
    show_dual: bool,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unrealizable { .. } => EXIT_UNREALIZABLE,
            Error::Invariant(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Color(a) => cmd_color(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Chromatic(a) => cmd_chromatic(a),
        Command::Render(a) => cmd_render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &Path) -> Result<Complex, Failure> {
    complex::load(path, Format::from_path(path)).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

/// Loads a complex and rejects combinatorially broken input.
fn load_checked(path: &Path) -> Result<Complex, Failure> {
    let c = load(path)?;
    let report = complex::validate(&c, ValidationLevel::Combinatorial);
    if !report.is_valid() {
        return Err(Failure {
            code: EXIT_INPUT,
            message: format!(
                "{}: invalid complex: {}",
                path.display(),
                serde_json::to_string(&report.violations).unwrap_or_default()
            ),
        });
    }
    Ok(c)
}

/// `dir/name.json` with `suffix` -> `dir/name<suffix>`.
fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}{suffix}"))
}

fn cmd_generate(a: GenerateArgs) -> CmdResult {
    let spec = GeneratorSpec::new(a.kind, a.dimension, a.size).with_seed(a.seed);
    let c = generate(&spec)?;
    match a.output {
        Some(path) => {
            complex::save(&c, &path, Format::from_path(&path))?;
            println!("{} simplices -> {}", c.len(), path.display());
        }
        None => println!("{}", complex::to_json_string(&c)),
    }
    Ok(())
}

struct Colored {
    colors_used: usize,
    coloring_path: PathBuf,
}

fn color_one(input: &Path, method: PeelMethod, out: PathBuf, cert_path: PathBuf) -> Result<Colored, Failure> {
    let c = load_checked(input)?;
    let cert = peel(&c, method).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", input.display(), f.message);
        f
    })?;
    let col = color(&c, &cert)?;
    complex::save_coloring(&col, &out)?;
    std::fs::write(&cert_path, cert.to_json()).map_err(Error::from)?;
    Ok(Colored {
        colors_used: col.colors_used(),
        coloring_path: out,
    })
}

fn cmd_color(a: ColorArgs) -> CmdResult {
    if a.inputs.len() > 1 && (a.output.is_some() || a.certificate.is_some()) {
        return Err(Failure {
            code: EXIT_INPUT,
            message: "-o and --certificate need a single input; batch outputs go next to each input".into(),
        });
    }
    if a.inputs.len() == 1 {
        let input = &a.inputs[0];
        let cert = a.certificate.unwrap_or_else(|| match &a.output {
            Some(out) => sibling(out, ".certificate.json"),
            None => sibling(input, ".certificate.json"),
        });
        let out = a.output.unwrap_or_else(|| sibling(input, ".coloring.json"));
        let done = color_one(input, a.method, out, cert)?;
        println!("colors used: {}", done.colors_used);
        return Ok(());
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| Failure {
            code: EXIT_INTERNAL,
            message: e.to_string(),
        })?;
    let results: Vec<Result<Colored, Failure>> = pool.install(|| {
        a.inputs
            .par_iter()
            .map(|input| {
                let out = sibling(input, ".coloring.json");
                color_one(input, a.method, out, sibling(input, ".certificate.json"))
            })
            .collect()
    });
    let mut first_failure = None;
    for (input, r) in a.inputs.iter().zip(results) {
        match r {
            Ok(done) => println!(
                "{}: colors used: {} -> {}",
                input.display(),
                done.colors_used,
                done.coloring_path.display()
            ),
            Err(f) => {
                eprintln!("error: {}", f.message);
                first_failure.get_or_insert(f.code);
            }
        }
    }
    match first_failure {
        None => Ok(()),
        Some(code) => Err(Failure {
            code,
            message: "some inputs failed".into(),
        }),
    }
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let c = load(&a.input)?;
    let col = complex::load_coloring(&a.coloring)?;
    let check = verify_coloring(&c, &col)?;
    if !check.is_valid() {
        for v in &check.violations {
            println!("{}", serde_json::to_string(v).unwrap_or_default());
        }
        return Err(Failure {
            code: EXIT_INVALID_COLORING,
            message: format!("{} violation(s)", check.violations.len()),
        });
    }
    if let Some(path) = a.certificate {
        let text = std::fs::read_to_string(&path).map_err(Error::from)?;
        let cert = PeelCertificate::from_json(&text)?;
        cert.check(&c).map_err(|e| Failure {
            code: EXIT_INVALID_COLORING,
            message: format!("certificate rejected: {e}"),
        })?;
    }
    println!("valid: {} simplices, {} colors", c.len(), col.colors_used());
    Ok(())
}

fn cmd_analyze(a: AnalyzeArgs) -> CmdResult {
    let c = load_checked(&a.input)?;
    let d = c.dimension();
    let g = build_dual(&c)?;
    let st = stats(&g, d);
    let big = find_clique(&g, d + 2);
    let reports = find_all_cliques(&g, d + 1)
        .iter()
        .map(|k| analyze_kd1_configuration(&c, k))
        .collect::<Result<Vec<_>, _>>()?;

    if a.json {
        let report = json!({
            "dimension": d,
            "simplices": c.len(),
            "stats": st,
            "k_d2": big,
            "k_d1": reports,
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap_or_default());
        return Ok(());
    }
    println!("dimension: {d}");
    println!("simplices: {}", c.len());
    println!("dual edges: {}", g.edge_count());
    println!("max degree: {}", st.max_degree);
    println!("components: {}", st.component_count);
    match st.lawrence_bound {
        Some(b) => println!("lawrence bound: {b}"),
        None => println!("lawrence bound: not applicable"),
    }
    println!("chromatic upper bound: {}", st.chromatic_upper_bound);
    match &big {
        Some(k) => println!("K_{}: present {k:?}", d + 2),
        None => println!("K_{}: absent", d + 2),
    }
    if reports.is_empty() {
        println!("K_{}: absent", d + 1);
    } else {
        println!("K_{}: present ({} found)", d + 1, reports.len());
    }
    for r in &reports {
        println!(
            "  clique {:?}: {} vertices, vertex count {}, halfspace condition {}",
            r.clique_nodes,
            r.distinct_vertex_ids.len(),
            if r.vertex_count_ok { "ok" } else { "FAILED" },
            if r.halfspace_condition_ok { "ok" } else { "FAILED" },
        );
    }
    Ok(())
}

fn cmd_chromatic(a: ChromaticArgs) -> CmdResult {
    let c = load_checked(&a.input)?;
    let g = build_dual(&c)?;
    let r = exact_chromatic(&g, a.limit)?;
    println!("chromatic number: {}", r.chromatic_number);
    Ok(())
}

fn cmd_render(a: RenderArgs) -> CmdResult {
    let c = load(&a.input)?;
    let col = a.coloring.as_deref().map(complex::load_coloring).transpose()?;
    let mut opts = RenderOptions {
        width: a.width,
        height: a.height,
        show_dual: a.show_dual,
        ..RenderOptions::default()
    };
    if let Some(p) = a.palette {
        opts.palette = p;
    }
    let svg = render_svg(&c, col.as_ref(), &opts)?;
    std::fs::write(&a.output, svg).map_err(Error::from)?;
    Ok(())
}
