use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use strata_core::io::{parse_pair, parse_points, CompareRow, LayerDoc, PointFile, QueryDoc, ResultDocument};
use strata_core::oracle::{uniform_points, GadgetSpec};
use strata_core::svg::{render, RenderOptions};
use strata_core::verify::verify_set;
use strata_core::{
    convex_depths, depths_of_set, layers, level_set_of, query_depth, tukey_depth, Classification, Error, PointSet,
};

#[derive(Parser)]
#[command(
    name = "strata",
    version,
    about = "Delaunay depth, layers and depth contours of planar point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Depth of every point.
    Depth {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::Delaunay)]
        method: Method,
    },
    /// Layers of the Delaunay stratification.
    Layers { file: String },
    /// Depth contours and medians.
    Contours { file: String },
    /// Level of one point.
    Query {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum, default_value_t = Via::Insert)]
        via: Via,
    },
    /// Delaunay, convex and Tukey depth side by side.
    Compare {
        file: String,
        /// Emit a result document instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Writes a generated point file.
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        /// Comma-separated values, `k`, or `n` depending on the kind.
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Checks the pipeline against the oracles and invariants.
    Verify {
        file: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Draws the set as SVG.
    Render {
        file: String,
        #[arg(long)]
        out: PathBuf,
        /// Draw the depth contours.
        #[arg(long)]
        levels: bool,
        /// Draw the layer edges.
        #[arg(long)]
        layers: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Delaunay,
    Convex,
    Tukey,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Insert,
    Contours,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Kind {
    ElementUniqueness,
    NestedTriangle,
    ComponentExtremal,
    Uniform,
}

enum Failure {
    Core(Error),
    Io(String),
    /// Malformed argument value.
    Usage(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Core(e)) => {
            eprintln!("strata: {e}");
            ExitCode::from(match e {
                Error::Parse { .. } => 2,
                e if e.is_degenerate_input() => 3,
                _ => 1,
            })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("strata: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("strata: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify) => ExitCode::from(4),
    }
}

fn read_points(path: &str) -> Result<PointFile, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    }
    Ok(parse_points(&text)?)
}

fn emit(s: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(s.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Io(format!("stdout: {e}")))
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Depth { file, method } => {
            let f = read_points(&file)?;
            let mut doc = ResultDocument::new("depth", &f);
            let depths = match method {
                Method::Delaunay => depths_of_set(&f.set).1.depth,
                Method::Convex => convex_depths(&f.set).depth,
                Method::Tukey => f.set.points().iter().map(|&p| tukey_depth(&f.set, p).depth).collect(),
            };
            doc.method = Some(
                match method {
                    Method::Delaunay => "delaunay",
                    Method::Convex => "convex",
                    Method::Tukey => "tukey",
                }
                .to_string(),
            );
            doc.set_depth = depths.iter().copied().max();
            doc.depths = Some(depths);
            emit(&doc.to_json())
        }
        Command::Layers { file } => {
            let f = read_points(&file)?;
            let (t, d) = depths_of_set(&f.set);
            let mut doc = ResultDocument::new("layers", &f);
            doc.layers = Some(match &t {
                Some(t) => layers(t, &d).iter().map(LayerDoc::from).collect(),
                None => Vec::new(),
            });
            doc.set_depth = Some(d.set_depth);
            doc.depths = Some(d.depth);
            emit(&doc.to_json())
        }
        Command::Contours { file } => {
            let f = read_points(&file)?;
            let d = depths_of_set(&f.set).1;
            let ls = level_set_of(&f.set)?;
            let mut doc = ResultDocument::new("contours", &f).with_level_set(&ls);
            doc.set_depth = Some(d.set_depth);
            doc.depths = Some(d.depth);
            emit(&doc.to_json())
        }
        Command::Query { file, point, via } => {
            let f = read_points(&file)?;
            let p = parse_pair(&point).map_err(|m| Failure::Usage(format!("--point: {m}")))?;
            let (name, c) = match via {
                Via::Insert => ("insert", Classification::Level(query_depth(&f.set, p)?)),
                Via::Contours => ("contours", level_set_of(&f.set)?.classify(p)),
            };
            let mut doc = ResultDocument::new("query", &f);
            doc.query = Some(QueryDoc::new(point.trim(), name, c));
            emit(&doc.to_json())
        }
        Command::Compare { file, json } => {
            let f = read_points(&file)?;
            let rows = compare_rows(&f.set);
            if json {
                let mut doc = ResultDocument::new("compare", &f);
                doc.comparison = Some(rows);
                return emit(&doc.to_json());
            }
            let mut out = String::from("index\tpoint\tdelaunay\tconvex\ttukey\n");
            for r in &rows {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    r.index, f.text[r.index], r.delaunay, r.convex, r.tukey
                ));
            }
            emit(&out)
        }
        Command::Gen { kind, params, seed } => emit(&generate(kind, &params, seed)?),
        Command::Verify { file, samples } => {
            let f = read_points(&file)?;
            let checks = verify_set(&f.set, samples, 0)?;
            let failed = checks.iter().any(|c| !c.passed);
            for c in &checks {
                eprintln!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
            }
            let mut doc = ResultDocument::new("verify", &f);
            doc.checks = Some(checks);
            emit(&doc.to_json())?;
            if failed {
                Err(Failure::Verify)
            } else {
                Ok(())
            }
        }
        Command::Render {
            file,
            out,
            levels,
            layers: with_layers,
        } => {
            let f = read_points(&file)?;
            let (t, d) = depths_of_set(&f.set);
            let l = t.as_ref().map(|t| layers(t, &d)).unwrap_or_default();
            let ls = if levels { Some(level_set_of(&f.set)?) } else { None };
            let svg = render(
                &f.set,
                &d,
                &l,
                ls.as_ref(),
                RenderOptions {
                    layers: with_layers,
                    levels,
                },
            );
            std::fs::write(&out, svg).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))
        }
    }
}

fn compare_rows(s: &PointSet) -> Vec<CompareRow> {
    let del = depths_of_set(s).1.depth;
    let conv = convex_depths(s).depth;
    s.points()
        .iter()
        .enumerate()
        .map(|(i, &p)| CompareRow {
            index: i,
            delaunay: del[i],
            convex: conv[i],
            tukey: tukey_depth(s, p).depth,
        })
        .collect()
}

fn generate(kind: Kind, params: &str, seed: u64) -> Result<String, Failure> {
    let bad = |m: String| Failure::Usage(format!("{params:?}: {m}"));
    let int = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| bad(format!("expected a nonnegative integer, found {s:?}")))
    };
    let (name, set, query): (&str, PointSet, _) = match kind {
        Kind::Uniform => ("uniform", uniform_points(int(params)?, seed)?, None),
        _ => {
            let spec = match kind {
                Kind::ElementUniqueness => GadgetSpec::ElementUniqueness {
                    values: params
                        .split(',')
                        .map(|v| v.trim().parse::<f64>().map_err(|_| bad(format!("not a number: {v:?}"))))
                        .collect::<Result<_, _>>()?,
                },
                Kind::NestedTriangle => GadgetSpec::NestedTriangle { k: int(params)? },
                _ => GadgetSpec::ComponentExtremal { k: int(params)? },
            };
            let (s, q) = spec.build().map_err(|e| match e {
                Error::Range { .. } | Error::Domain(_) => Failure::Usage(e.to_string()),
                e => e.into(),
            })?;
            let name = match kind {
                Kind::ElementUniqueness => "element_uniqueness",
                Kind::NestedTriangle => "nested_triangle",
                _ => "component_extremal",
            };
            (name, s, q)
        }
    };
    let mut out = match kind {
        Kind::Uniform => format!("# strata gen {name} {params} --seed {seed}\n"),
        _ => format!("# strata gen {name} {params}\n"),
    };
    if let Some(q) = query {
        out.push_str(&format!("# query {},{}\n", q.x, q.y));
    }
    for p in set.points() {
        out.push_str(&format!("{},{}\n", p.x, p.y));
    }
    Ok(out)
}
