use std::fs;
use std::io::{ErrorKind, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde_json::json;
use ttone::bounds::{applicable_certificates, degenerate_upper, greedy_2tone_upper};
use ttone::constructions::{
    color_cycle, color_fat_triangle, color_grid, color_outerplanar, color_path, color_planar, color_sparse,
    ConstructionError,
};
use ttone::density::mad_with_witness;
use ttone::exact::{ExactError, TauStatus};
use ttone::greedy::{degeneracy_order, greedy_color};
use ttone::random::{gnp, random_apollonian, random_maximal_outerplanar, random_subdivided, random_tree, rng_from_seed};
use ttone::{mad, tau, verify, Coloring, Density, Graph, SearchBudget};

use crate::{BoundsArgs, ColorArgs, Command, Family, GenArgs, GraphInput, TauArgs, VerifyArgs};

pub const VIOLATIONS: u8 = 1;
pub const USAGE: u8 = 2;
pub const TIMEOUT: u8 = 3;
pub const PRECONDITION: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: USAGE, message: message.to_string() }
}

fn precondition(message: impl ToString) -> Failure {
    Failure { code: PRECONDITION, message: message.to_string() }
}

fn from_construction(e: ConstructionError) -> Failure {
    match e {
        ConstructionError::Stuck(_) | ConstructionError::Coloring(_) => usage(format!("internal error: {}", e)),
        _ => precondition(e),
    }
}

pub fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Gen(args) => generate(args),
        Command::Color(args) => color(args),
        Command::Verify(args) => check(args),
        Command::Tau(args) => exact(args),
        Command::Bounds(args) => bounds(args),
        Command::Mad(input) => max_average_degree(input),
    }
}

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| usage(format!("{}: {}", p.display(), e))),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {}", e)))?;
            Ok(s)
        }
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let text = read_text(input.graph.as_deref())?;
    Graph::from_edge_list(&text).map_err(usage)
}

// A reader that hangs up early (`| head`) is not an error; the exit code
// still reflects the result.
fn say(line: impl std::fmt::Display) -> Result<(), Failure> {
    match writeln!(std::io::stdout().lock(), "{}", line) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(usage(format!("stdout: {}", e))),
        _ => Ok(()),
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, format!("{}\n", text)).map_err(|e| usage(format!("{}: {}", p.display(), e))),
        None => say(text),
    }
}

fn generate(args: GenArgs) -> Result<u8, Failure> {
    let mut rng = rng_from_seed(args.seed);
    let g = if let Some(n) = args.path {
        Graph::path(n)
    } else if let Some(n) = args.cycle {
        Graph::cycle(n)
    } else if let Some(mn) = &args.grid {
        Graph::grid(mn[0], mn[1])
    } else if let Some(d) = args.star {
        Graph::star(d)
    } else if let Some(t) = args.fat_triangle {
        Graph::fat_triangle(t)
    } else if let Some(n) = args.tree {
        Ok(random_tree(n, &mut rng))
    } else if let Some(n) = args.outerplanar {
        if n < 3 {
            return Err(usage("--outerplanar needs at least 3 vertices"));
        }
        Ok(random_maximal_outerplanar(n, &mut rng))
    } else if let Some(n) = args.apollonian {
        if n < 3 || !(0.0..=1.0).contains(&args.hub_bias) {
            return Err(usage("--apollonian needs at least 3 vertices and --hub-bias in [0, 1]"));
        }
        Ok(random_apollonian(n, args.hub_bias, &mut rng))
    } else if let Some(n) = args.subdivided {
        if n < 1 || args.max_subdivisions < 1 {
            return Err(usage("--subdivided needs at least 1 base vertex and --max-subdivisions >= 1"));
        }
        Ok(random_subdivided(n, n / 3, args.max_subdivisions, 0, &mut rng))
    } else if let Some(np) = &args.gnp {
        let n: usize = np[0].parse().map_err(|_| usage(format!("--gnp: bad vertex count {:?}", np[0])))?;
        let p: f64 = np[1].parse().map_err(|_| usage(format!("--gnp: bad probability {:?}", np[1])))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(usage("--gnp: probability must lie in [0, 1]"));
        }
        Ok(gnp(n, p, &mut rng))
    } else {
        unreachable!("clap requires one generator")
    };
    let g = g.map_err(usage)?;
    emit(args.output.as_ref(), g.to_edge_list().trim_end())?;
    Ok(0)
}

// Vertex `v` gets the label at its position in `order`.
fn along(order: &[usize], c: &Coloring) -> Coloring {
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    c.pull_back(order.len(), |v| Some(position[v]))
}

fn as_path(g: &Graph, t: usize) -> Result<Coloring, Failure> {
    let order = g.path_order().ok_or_else(|| precondition("input is not a path"))?;
    Ok(along(&order, &color_path(g.n(), t).map_err(from_construction)?))
}

fn as_cycle(g: &Graph, t: usize) -> Result<Coloring, Failure> {
    let order = g.cycle_order().ok_or_else(|| precondition("input is not a cycle"))?;
    Ok(along(&order, &color_cycle(g.n(), t).map_err(from_construction)?))
}

fn as_grid(g: &Graph, t: usize) -> Result<Coloring, Failure> {
    let n = g.n();
    let (rows, cols) = (2..=n / 2)
        .filter(|m| n.is_multiple_of(*m) && n / m >= 2)
        .map(|m| (m, n / m))
        .find(|&(m, c)| Graph::grid(m, c).is_ok_and(|grid| grid == *g))
        .ok_or_else(|| precondition("input is not a grid with row-major vertex ids"))?;
    color_grid(rows, cols, t).map_err(from_construction)
}

fn as_fat_triangle(g: &Graph) -> Result<Coloring, Failure> {
    let n = g.n();
    let s = (n >= 6 && n.is_multiple_of(3)).then(|| n / 3 - 1);
    let s = s
        .filter(|&s| Graph::fat_triangle(s).is_ok_and(|h| h == *g))
        .ok_or_else(|| precondition("input is not a fat triangle with the generator's vertex ids"))?;
    color_fat_triangle(s).map_err(from_construction)
}

fn greedy_fallback(g: &Graph, t: usize) -> Coloring {
    let (order, degeneracy) = degeneracy_order(g);
    let delta = g.max_degree().max(1) as u64;
    let mut k = degenerate_upper(degeneracy.max(2) as u64, t as u64, delta) as usize;
    if t == 2 {
        k = k.min(greedy_2tone_upper(delta) as usize);
    }
    let mut k = k.max(t);
    loop {
        if let Ok(c) = greedy_color(g, t, k, &order) {
            return c;
        }
        k += t;
    }
}

fn auto(g: &Graph, t: usize) -> Result<(Coloring, &'static str), Failure> {
    if let Ok(c) = as_path(g, t) {
        return Ok((c, "path"));
    }
    if (2..=5).contains(&t) {
        if let Ok(c) = as_cycle(g, t) {
            return Ok((c, "cycle"));
        }
        if let Ok(c) = as_grid(g, t) {
            return Ok((c, "grid"));
        }
    }
    if t == 2 {
        if let Ok(c) = as_fat_triangle(g) {
            return Ok((c, "fat-triangle"));
        }
        if g.n() == 0 || mad(g) < Density::new(12, 5) {
            return Ok((color_sparse(g).map_err(from_construction)?, "sparse"));
        }
        if let Ok(c) = color_outerplanar(g) {
            return Ok((c, "outerplanar"));
        }
        if let Ok(c) = color_planar(g) {
            return Ok((c, "planar"));
        }
    }
    Ok((greedy_fallback(g, t), "greedy"))
}

fn color(args: ColorArgs) -> Result<u8, Failure> {
    if args.t == 0 {
        return Err(usage("--t must be at least 1"));
    }
    let two_tone_only = matches!(
        args.family,
        Family::FatTriangle | Family::Sparse | Family::Outerplanar | Family::Planar
    );
    if two_tone_only && args.t != 2 {
        return Err(usage(format!("family {:?} is 2-tone only", args.family)));
    }
    let g = read_graph(&args.input)?;
    let c = match args.family {
        Family::Path => as_path(&g, args.t)?,
        Family::Cycle => as_cycle(&g, args.t)?,
        Family::Grid => as_grid(&g, args.t)?,
        Family::FatTriangle => as_fat_triangle(&g)?,
        Family::Sparse => color_sparse(&g).map_err(from_construction)?,
        Family::Outerplanar => color_outerplanar(&g).map_err(from_construction)?,
        Family::Planar => color_planar(&g).map_err(from_construction)?,
        Family::Auto => {
            let (c, family) = auto(&g, args.t)?;
            eprintln!("ttone: colored as {}", family);
            c
        }
    };
    emit(args.output.as_ref(), &c.to_json())?;
    Ok(0)
}

fn check(args: VerifyArgs) -> Result<u8, Failure> {
    let g = read_graph(&args.input)?;
    let text = read_text(Some(&args.coloring))?;
    let c = Coloring::from_json(&text).map_err(usage)?;
    if c.n() > g.n() {
        return Err(usage(format!("coloring labels vertex {} but the graph has {} vertices", c.n() - 1, g.n())));
    }
    // a coloring missing its last vertices is padded so the gap is reported
    let found = verify(&g, &c.pull_back(g.n(), Some)).map_err(usage)?;
    if found.is_empty() {
        say(json!({"ok": true}))?;
        return Ok(0);
    }
    for v in &found {
        say(serde_json::to_string(v).expect("violation serializes"))?;
    }
    eprintln!("ttone: {} violation(s)", found.len());
    Ok(VIOLATIONS)
}

fn exact(args: TauArgs) -> Result<u8, Failure> {
    if args.t == 0 {
        return Err(usage("--t must be at least 1"));
    }
    let mut budget = SearchBudget::nodes(args.max_nodes);
    if let Some(secs) = args.time_limit {
        let limit = Duration::try_from_secs_f64(secs).map_err(|_| usage("--time-limit must be a nonnegative number"))?;
        budget = budget.with_wall_limit(limit);
    }
    let g = read_graph(&args.input)?;
    let r = tau(&g, args.t, budget).map_err(|e| match e {
        ExactError::PaletteTooLarge(_) => Failure { code: TIMEOUT, message: e.to_string() },
        _ => usage(e),
    })?;
    if let (Some(path), Some(c)) = (&args.witness, &r.coloring) {
        emit(Some(path), &c.to_json())?;
    }
    say(r.to_json())?;
    Ok(match r.status {
        TauStatus::Resolved => 0,
        TauStatus::Timeout => TIMEOUT,
    })
}

fn bounds(args: BoundsArgs) -> Result<u8, Failure> {
    if args.t == 0 {
        return Err(usage("--t must be at least 1"));
    }
    let g = read_graph(&args.input)?;
    for cert in applicable_certificates(&g, args.t) {
        say(cert.to_json())?;
    }
    Ok(0)
}

fn max_average_degree(input: GraphInput) -> Result<u8, Failure> {
    let g = read_graph(&input)?;
    if g.n() == 0 {
        return Err(usage("the empty graph has no maximum average degree"));
    }
    let (m, subgraph) = mad_with_witness(&g);
    let m = m.reduced();
    let out = json!({
        "numerator": m.numerator,
        "denominator": m.denominator,
        "mad": m.to_string(),
        "subgraph": subgraph,
    });
    say(out)?;
    Ok(0)
}
