//! Experiment driver for the udg library.
//!
//! Subcommands generate benchmark instances, time the shortest-path and
//! separation solvers, and render instances or dumped results as SVG.
//! Timing runs print a one-row CSV record to stdout; human-oriented notes
//! go to stderr so the records stay machine-readable.

mod digest;
mod results;
mod svg;

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use udg::datagen::{
    add_strip_clutter, generate, make_domain_sized, parse_instance, HoleStyle, Instance,
};
use udg::delaunay::build_delaunay;
use udg::oracle::{oracle_separation, oracle_sssp};
use udg::sep_compact::{separation_compact_with, CompactOptions};
use udg::sep_generic::{separating_set, separation_generic, SeparationAnswer};
use udg::sssp::{
    build_explicit_graph, sssp_delaunay_with, sssp_grid, ExplicitGraph, ShortestPathResult,
    SsspOptions, UNREACHED,
};

use digest::{digest_separation, digest_trees, hex};
use results::{format_cycle, format_tree, parse_any, AnyFile, CycleAnswer};

const CSV_HEADER: &str = "algorithm,instance,n,preprocess_s,per_root_s,roots,answer_digest";

#[derive(Parser)]
#[command(name = "udg", about = "Unit-disk-graph shortest paths and minimum separation")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a benchmark instance
    Generate(GenerateArgs),
    /// Time single-source shortest paths over sampled roots
    Sssp(SsspArgs),
    /// Compute a minimum separating set
    Separate(SeparateArgs),
    /// Render an instance or result file as SVG
    Render(RenderArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Hole layout: none, small1, large1, small4, large4
    #[arg(long, default_value = "none", value_parser = HoleStyle::from_str)]
    style: HoleStyle,
    /// Domain width
    #[arg(long, default_value_t = 16.0)]
    width: f64,
    /// Domain height
    #[arg(long, default_value_t = 4.0)]
    height: f64,
    /// Number of points to sample
    #[arg(short = 'n', long)]
    count: usize,
    /// Generator seed
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Extra points in the unit-width strip around the st segment
    #[arg(long, default_value_t = 0)]
    clutter: usize,
    /// Output path (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SsspMethod {
    /// Triangulation walk with per-level nearest-neighbour queries
    Delaunay,
    /// Breadth-first search over the explicit edge list
    Bfs,
    /// Breadth-first search over unit-grid cells
    Grid,
}

#[derive(Args)]
struct SsspArgs {
    /// Instance file
    instance: PathBuf,
    #[arg(long, value_enum, default_value_t = SsspMethod::Delaunay)]
    method: SsspMethod,
    /// How many roots to sample (without replacement)
    #[arg(long, default_value_t = 50)]
    roots: usize,
    /// Seed for root sampling, independent of the instance seed
    #[arg(long, default_value_t = 1)]
    root_seed: u64,
    /// Disable nearest-neighbour query hints (delaunay method only)
    #[arg(long)]
    no_hints: bool,
    /// Check every tree against the quadratic reference (needs n <= 2000)
    #[arg(long)]
    verify: bool,
    /// Write `index distance` lines for the first sampled root
    #[arg(long, value_name = "PATH")]
    dump_dist: Option<PathBuf>,
    /// Write the first sampled root's tree as a result file
    #[arg(long, value_name = "PATH")]
    dump_tree: Option<PathBuf>,
    /// Solve roots on a thread pool; per-root time then measures throughput
    #[arg(long)]
    parallel_roots: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SepMethod {
    /// Full tree and edge scan per root
    Generic,
    /// Grouped probes with pruning shortcuts
    Compact,
}

#[derive(Args)]
struct SeparateArgs {
    /// Instance file
    instance: PathBuf,
    #[arg(long, value_enum, default_value_t = SepMethod::Compact)]
    method: SepMethod,
    /// Disable the compact method's pruning shortcuts
    #[arg(long)]
    no_early_exit: bool,
    /// Cross-check against the exhaustive reference (needs n <= 14)
    #[arg(long)]
    verify: bool,
    /// Write the optimal separating set as a result file
    #[arg(long, value_name = "PATH")]
    dump_witness: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Instance or result file
    input: PathBuf,
    /// Output path (input with .svg extension when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Shade the radius-1/2 disk around the relevant points
    #[arg(long)]
    disks: bool,
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run() -> Result<()> {
    match Cli::parse().cmd {
        Cmd::Generate(a) => cmd_generate(a),
        Cmd::Sssp(a) => cmd_sssp(a),
        Cmd::Separate(a) => cmd_separate(a),
        Cmd::Render(a) => cmd_render(a),
    }
}

fn read_instance(path: &PathBuf) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let inst = parse_instance(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(inst)
}

fn cmd_generate(args: GenerateArgs) -> Result<()> {
    let spec = make_domain_sized(args.style, args.width, args.height)?;
    let mut g = generate(&spec, args.count, args.seed)?;
    if args.clutter > 0 {
        add_strip_clutter(&spec, &mut g, args.clutter, args.seed)?;
    }
    g.style_label = args.style.to_string();
    let text = g.to_text();
    match args.output {
        Some(path) => {
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_sssp(args: SsspArgs) -> Result<()> {
    let inst = read_instance(&args.instance)?;
    let n = inst.points.len();
    if n == 0 {
        bail!("instance has no points");
    }
    let k = args.roots.clamp(1, n);
    let mut rng = ChaCha8Rng::seed_from_u64(args.root_seed);
    let roots: Vec<u32> =
        rand::seq::index::sample(&mut rng, n, k).into_iter().map(|i| i as u32).collect();

    // Shared structures are built once and timed separately from the
    // per-root solves.
    enum Prep {
        Tri(udg::delaunay::Triangulation),
        Graph(ExplicitGraph),
        PerRoot,
    }
    let opts = SsspOptions { use_hints: !args.no_hints, max_level: None };
    let t0 = Instant::now();
    let prep = match args.method {
        SsspMethod::Delaunay => Prep::Tri(build_delaunay(&inst.points)?),
        SsspMethod::Bfs => Prep::Graph(build_explicit_graph(&inst.points)),
        SsspMethod::Grid => Prep::PerRoot,
    };
    let preprocess_s = t0.elapsed().as_secs_f64();

    let solve = |&root: &u32| -> udg::Result<ShortestPathResult> {
        match &prep {
            Prep::Tri(tri) => sssp_delaunay_with(&inst.points, tri, root, opts),
            Prep::Graph(g) => g.bfs(root),
            Prep::PerRoot => sssp_grid(&inst.points, root),
        }
    };
    let t1 = Instant::now();
    let trees: Vec<ShortestPathResult> = if args.parallel_roots {
        roots.par_iter().map(solve).collect::<udg::Result<_>>()?
    } else {
        roots.iter().map(solve).collect::<udg::Result<_>>()?
    };
    let per_root_s = t1.elapsed().as_secs_f64() / trees.len() as f64;

    if args.verify {
        if n > 2000 {
            bail!("--verify is limited to 2000 points; this instance has {n}");
        }
        for (&root, tree) in roots.iter().zip(&trees) {
            let reference = oracle_sssp(&inst.points, root)?;
            if reference.dist != tree.dist {
                bail!("distances disagree with the quadratic reference at root {root}");
            }
        }
        eprintln!("verified {} trees against the quadratic reference", trees.len());
    }

    if let Some(path) = &args.dump_dist {
        let mut out = String::new();
        for (i, &d) in trees[0].dist.iter().enumerate() {
            let d = if d == UNREACHED { -1 } else { d as i64 };
            out.push_str(&format!("{i} {d}\n"));
        }
        fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.dump_tree {
        fs::write(path, format_tree(&inst, &trees[0]))
            .with_context(|| format!("writing {}", path.display()))?;
    }

    let name = match args.method {
        SsspMethod::Delaunay => "delaunay",
        SsspMethod::Bfs => "bfs",
        SsspMethod::Grid => "grid",
    };
    println!("{CSV_HEADER}");
    println!(
        "{},{},{},{:.6},{:.9},{},{}",
        name,
        args.instance.display(),
        n,
        preprocess_s,
        per_root_s,
        trees.len(),
        hex(digest_trees(&trees))
    );
    Ok(())
}

fn cmd_separate(args: SeparateArgs) -> Result<()> {
    if args.no_early_exit && matches!(args.method, SepMethod::Generic) {
        bail!("--no-early-exit only applies to the compact method");
    }
    let inst = read_instance(&args.instance)?;
    let n = inst.points.len();

    let t0 = Instant::now();
    let answer = match args.method {
        SepMethod::Generic => separation_generic(&inst.points, inst.s, inst.t)?,
        SepMethod::Compact => separation_compact_with(
            &inst.points,
            inst.s,
            inst.t,
            CompactOptions { early_exit: !args.no_early_exit },
        )?,
    };
    let elapsed = t0.elapsed().as_secs_f64();

    match &answer {
        SeparationAnswer::Infeasible => eprintln!("terminals cannot be separated"),
        SeparationAnswer::Separator { size, .. } => {
            eprintln!("minimum separating set: {size} disks")
        }
    }

    if args.verify {
        if n > 14 {
            bail!("--verify is limited to 14 points; this instance has {n}");
        }
        let reference = oracle_separation(&inst.points, inst.s, inst.t)?;
        if reference.size() != answer.size() {
            bail!(
                "answer {:?} disagrees with the exhaustive reference {:?}",
                answer.size(),
                reference.size()
            );
        }
        eprintln!("verified against the exhaustive reference");
    }

    if let Some(path) = &args.dump_witness {
        let text = match &answer {
            SeparationAnswer::Separator { size, witness: Some(w) } => {
                let set = separating_set(&inst.points, inst.s, inst.t, w)?;
                let mut members = vec![false; n];
                for &i in &set {
                    members[i as usize] = true;
                }
                let ans = CycleAnswer { size: *size, root: w.root, edge: w.edge };
                format_cycle(&inst, Some(&ans), &members)
            }
            SeparationAnswer::Separator { witness: None, .. } => {
                bail!("the answer carries no witness to dump")
            }
            SeparationAnswer::Infeasible => format_cycle(&inst, None, &vec![false; n]),
        };
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }

    let name = match args.method {
        SepMethod::Generic => "generic",
        SepMethod::Compact => "compact",
    };
    println!("{CSV_HEADER}");
    println!(
        "{},{},{},{:.6},{:.9},{},{}",
        name,
        args.instance.display(),
        n,
        0.0,
        elapsed,
        1,
        hex(digest_separation(answer.size()))
    );
    Ok(())
}

fn cmd_render(args: RenderArgs) -> Result<()> {
    let text =
        fs::read_to_string(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let svg = match parse_any(&text)? {
        AnyFile::Instance(i) => svg::render_instance(&i, args.disks),
        AnyFile::Tree(t) => svg::render_tree(&t, args.disks),
        AnyFile::Cycle(c) => svg::render_cycle(&c, args.disks),
    };
    let out = args.output.unwrap_or_else(|| args.input.with_extension("svg"));
    fs::write(&out, svg).with_context(|| format!("writing {}", out.display()))?;
    eprintln!("wrote {}", out.display());
    Ok(())
}
