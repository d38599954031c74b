//! Batch command-line front end. Every command writes one document (JSON by
//! default) to stdout or `--out`; failures print a JSON error object to
//! stderr and exit with 2 (configuration), 3 (inconclusive truncation) or 4
//! (internal invariant).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::affine::{AffineGroup, WfRep};
use crate::cells::{certified_ideal, certified_partition, CellSelector, IdealKind};
use crate::characters::Characters;
use crate::error::{Error, Result};
use crate::hecke::{parse_word, KlBasis, KlCache};
use crate::rootdata::{RootSystem, Weight};
use crate::tilting::{radical, Tilting};

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "tiltcell", version, about = "Alcoves, KL bases, cells and tilting characters")]
pub struct Cli {
    /// Root system, e.g. A1, G2, B3.
    #[arg(long = "type", global = true)]
    pub root_type: Option<String>,
    /// Level l; defaults to the smallest admissible value above h.
    #[arg(long = "l", global = true)]
    pub level: Option<i64>,
    /// Truncation length L for balls and cells.
    #[arg(long = "L", global = true, default_value_t = 14)]
    pub truncation: usize,
    #[arg(long, global = true, env = "TILTCELL_CACHE")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Below,
    AtMost,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots, coroots and Weyl group data.
    Roots,
    /// Weight multiplicities of a Weyl module.
    Char {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Weyl factors of a tensor product of two Weyl modules.
    Tensor {
        #[arg(allow_hyphen_values = true)]
        a: Weight,
        #[arg(allow_hyphen_values = true)]
        b: Weight,
    },
    /// Minimal coset representatives of length at most L.
    Alcoves,
    /// KL basis elements of the antispherical module.
    Klbasis {
        /// A single element as generator digits; all of ball(L) if absent.
        #[arg(long)]
        word: Option<String>,
    },
    /// Right cells of the ball of length L.
    Cells,
    /// Weyl factors of an indecomposable tilting module.
    TiltingChar {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Indecomposable summands of Q(a) (x) Q(b).
    Decompose {
        #[arg(allow_hyphen_values = true)]
        a: Weight,
        #[arg(allow_hyphen_values = true)]
        b: Weight,
    },
    /// Membership of Q(weight) in the ideal generated by a cell.
    IdealCheck {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
        #[arg(long, default_value = "subregular")]
        cell: String,
        #[arg(long, value_enum, default_value_t = KindArg::Below)]
        kind: KindArg,
    },
    /// Quotient of the Grothendieck ring by the ideal of modules below a cell.
    QuotientRing {
        #[arg(long, default_value = "subregular")]
        cell: String,
    },
    /// Radical of the quotient ring.
    Radical {
        #[arg(long, default_value = "subregular")]
        cell: String,
    },
    /// Inspect or maintain the on-disk KL cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CacheAction {
    List,
    Clear,
    /// Recompute a random 5% sample and evict mismatches.
    Verify {
        #[arg(long, default_value_t = 0.05)]
        fraction: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Parses `args`, runs the command and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let err = json!({"schema": SCHEMA, "error": {"kind": "usage", "message": e.to_string().trim_end(), "exit_code": 2}});
            let _ = writeln!(stderr, "{err}");
            return 2;
        }
    };
    match execute(&cli) {
        Ok(doc) => match emit(&cli, &doc, stdout) {
            Ok(()) => 0,
            Err(e) => report(&e, stderr),
        },
        Err(e) => report(&e, stderr),
    }
}

fn report(e: &Error, stderr: &mut dyn Write) -> i32 {
    let err = json!({"schema": SCHEMA, "error": {"kind": e.kind(), "message": e.to_string(), "exit_code": e.exit_code()}});
    let _ = writeln!(stderr, "{err}");
    e.exit_code()
}

fn emit(cli: &Cli, doc: &str, stdout: &mut dyn Write) -> Result<()> {
    match &cli.out {
        Some(p) => std::fs::write(p, doc)?,
        None => stdout.write_all(doc.as_bytes())?,
    }
    Ok(())
}

/// Shared state built from the global flags.
struct Job {
    rs: Arc<RootSystem>,
    group: Option<Arc<AffineGroup>>,
    kl: Option<Arc<KlBasis>>,
    truncation: usize,
}

impl Job {
    fn new(cli: &Cli, needs_group: bool) -> Result<Self> {
        let t = cli.root_type.as_deref().ok_or_else(|| Error::InvalidArgument("--type is required".into()))?;
        let rs = Arc::new(RootSystem::parse(t)?);
        if cli.truncation == 0 {
            return Err(Error::InvalidArgument("--L must be at least 1".into()));
        }
        let mut job = Job { rs: rs.clone(), group: None, kl: None, truncation: cli.truncation };
        if needs_group {
            let level = cli.level.unwrap_or_else(|| default_level(&rs));
            let group = Arc::new(AffineGroup::new(rs, level)?);
            let kl = match &cli.cache_dir {
                Some(d) => KlBasis::with_cache(group.clone(), d)?,
                None => KlBasis::new(group.clone()),
            };
            job.group = Some(group);
            job.kl = Some(Arc::new(kl));
        }
        Ok(job)
    }

    fn group(&self) -> &AffineGroup {
        self.group.as_deref().unwrap()
    }

    fn kl(&self) -> &Arc<KlBasis> {
        self.kl.as_ref().unwrap()
    }

    fn header(&self, command: &str) -> Value {
        let mut h = json!({"schema": SCHEMA, "command": command, "type": self.rs.label()});
        if let Some(g) = &self.group {
            h["level"] = json!(g.level());
        }
        h
    }
}

/// Smallest odd `l > h`, avoiding multiples of 3 for G2.
pub fn default_level(rs: &RootSystem) -> i64 {
    let mut l = rs.coxeter_number() as i64 + 1;
    while l % 2 == 0 || (rs.label() == "G2" && l % 3 == 0) {
        l += 1;
    }
    l
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(m), Value::Object(extra)) = (a.as_object_mut(), b) {
        m.extend(extra);
    }
    a
}

fn json_doc(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn weight_list(items: impl IntoIterator<Item = (Weight, i64)>) -> Value {
    Value::Array(items.into_iter().map(|(w, m)| json!({"weight": w, "multiplicity": m})).collect())
}

fn weight_csv(items: impl IntoIterator<Item = (Weight, i64)>) -> String {
    let mut s = String::from("weight,multiplicity\n");
    for (w, m) in items {
        let coords: Vec<String> = w.coords().iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, "\"{}\",{m}", coords.join(","));
    }
    s
}

fn refuse(cmd: &str, f: Format) -> Error {
    Error::InvalidArgument(format!("format {f:?} is not available for `{cmd}`").to_lowercase())
}

fn execute(cli: &Cli) -> Result<String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Roots => {
            let job = Job::new(cli, false)?;
            match fmt.unwrap_or(Format::Json) {
                Format::Json => Ok(json_doc(&merge(job.header("roots"), json!({"root_system": job.rs.to_json()})))),
                f => Err(refuse("roots", f)),
            }
        }
        Command::Char { weight } => {
            let job = Job::new(cli, false)?;
            let chars = Characters::new(job.rs.clone());
            let m = chars.weight_multiplicities(weight)?;
            let dim = chars.weyl_dim(weight)?;
            let items: Vec<(Weight, i64)> = m.iter().map(|(w, c)| (w.clone(), c)).collect();
            match fmt.unwrap_or(Format::Json) {
                Format::Json => Ok(json_doc(&merge(
                    job.header("char"),
                    json!({"weight": weight, "dimension": dim, "multiplicities": weight_list(items)}),
                ))),
                Format::Csv => Ok(weight_csv(items)),
                f => Err(refuse("char", f)),
            }
        }
        Command::Tensor { a, b } => {
            let job = Job::new(cli, false)?;
            let chars = Characters::new(job.rs.clone());
            let t = chars.tensor_weyl_factors(a, b)?;
            let items: Vec<(Weight, i64)> = t.into_iter().rev().collect();
            match fmt.unwrap_or(Format::Json) {
                Format::Json => Ok(json_doc(&merge(job.header("tensor"), json!({"a": a, "b": b, "factors": weight_list(items)})))),
                Format::Csv => Ok(weight_csv(items)),
                f => Err(refuse("tensor", f)),
            }
        }
        Command::Alcoves => {
            let job = Job::new(cli, true)?;
            let ball = job.group().ball(job.truncation);
            match fmt.unwrap_or(Format::Json) {
                Format::Json => Ok(json_doc(&merge(
                    job.header("alcoves"),
                    json!({"truncation": job.truncation, "count": ball.len(), "alcoves": job.group().ball_json(&ball)}),
                ))),
                Format::Svg => {
                    let classes: Vec<(WfRep, usize)> = ball.iter().map(|x| (x.clone(), x.length())).collect();
                    let legend: Vec<(String, usize)> =
                        (0..=job.truncation).map(|n| (format!("length {n}"), n)).collect();
                    svg::emit(job.group(), &classes, &legend)
                }
                f => Err(refuse("alcoves", f)),
            }
        }
        Command::Klbasis { word } => {
            let job = Job::new(cli, true)?;
            let g = job.group();
            let elements = match word {
                Some(w) => {
                    let letters = parse_word(w, g.num_generators())
                        .ok_or_else(|| Error::InvalidArgument(format!("bad word `{w}`")))?;
                    vec![g.wf_rep(&g.from_word(&letters))?]
                }
                None => g.ball(job.truncation),
            };
            let kl = job.kl();
            match fmt.unwrap_or(Format::Text) {
                Format::Text => {
                    let mut s = String::new();
                    for x in &elements {
                        let _ = writeln!(s, "{}", kl.kl_element(x)?.format_as(x));
                    }
                    Ok(s)
                }
                Format::Json => {
                    let mut out = Vec::new();
                    for x in &elements {
                        let n = kl.kl_element(x)?;
                        let terms: Vec<Value> = n
                            .iter()
                            .rev()
                            .map(|(y, p)| {
                                let poly: Vec<Value> = p.terms().map(|(e, c)| json!([e, c.to_string()])).collect();
                                json!({"element": y.word(), "polynomial": poly})
                            })
                            .collect();
                        out.push(json!({"element": x.word(), "terms": terms}));
                    }
                    Ok(json_doc(&merge(job.header("klbasis"), json!({"elements": out}))))
                }
                f => Err(refuse("klbasis", f)),
            }
        }
        Command::Cells => {
            let job = Job::new(cli, true)?;
            let (p, stable) = certified_partition(job.kl(), job.truncation)?;
            match fmt.unwrap_or(Format::Json) {
                Format::Json => {
                    let cells: Vec<Value> = p
                        .cells
                        .iter()
                        .enumerate()
                        .map(|(i, c)| {
                            let words: Vec<&[u8]> = c.iter().map(|x| x.word()).collect();
                            json!({"index": i, "size": c.len(), "stable": stable[i], "elements": words})
                        })
                        .collect();
                    let order: Vec<[usize; 2]> = p.order.iter().map(|&(a, b)| [a, b]).collect();
                    Ok(json_doc(&merge(
                        job.header("cells"),
                        json!({"truncation": p.length, "cells": cells, "order": order}),
                    )))
                }
                Format::Svg => {
                    let classes: Vec<(WfRep, usize)> =
                        p.cells.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |x| (x.clone(), i))).collect();
                    let legend: Vec<(String, usize)> = (0..p.len())
                        .map(|i| (format!("cell {i} ({}){}", p.cells[i].len(), if stable[i] { "" } else { " truncated" }), i))
                        .collect();
                    svg::emit(job.group(), &classes, &legend)
                }
                f => Err(refuse("cells", f)),
            }
        }
        Command::TiltingChar { weight } => {
            let job = Job::new(cli, true)?;
            let t = Tilting::new(job.kl().clone());
            let q = t.tilting_indecomposable(weight)?;
            let w = t.longest_representative(weight)?;
            let dim = t.dimension(&q)?;
            match fmt.unwrap_or(Format::Json) {
                Format::Json => Ok(json_doc(&merge(
                    job.header("tilting-char"),
                    json!({"weight": weight, "longest_representative": w.word(), "dimension": dim, "character": q.to_json(&job.rs)}),
                ))),
                Format::Csv => Ok(weight_csv(q.sorted_factors(&job.rs))),
                f => Err(refuse("tilting-char", f)),
            }
        }
        Command::Decompose { a, b } => {
            let job = Job::new(cli, true)?;
            let t = Tilting::new(job.kl().clone());
            let d = t.decompose_tensor(a, b)?;
            let mut items: Vec<(Weight, i64)> = d.into_iter().collect();
            items.sort_by_key(|(w, _)| std::cmp::Reverse(crate::tilting::peel_key(&job.rs, w)));
            match fmt.unwrap_or(Format::Json) {
                Format::Json => Ok(json_doc(&merge(job.header("decompose"), json!({"a": a, "b": b, "summands": weight_list(items)})))),
                Format::Csv => Ok(weight_csv(items)),
                f => Err(refuse("decompose", f)),
            }
        }
        Command::IdealCheck { weight, cell, kind } => {
            let job = Job::new(cli, true)?;
            let sel: CellSelector = cell.parse()?;
            let kind = match kind {
                KindArg::Below => IdealKind::Below,
                KindArg::AtMost => IdealKind::AtMost,
            };
            let ideal = certified_ideal(job.kl(), job.truncation, &sel, kind)?;
            let t = Tilting::new(job.kl().clone());
            let w = t.longest_representative(weight)?;
            let member = t.ideal_membership(weight, &ideal)?;
            match fmt.unwrap_or(Format::Json) {
                Format::Json => Ok(json_doc(&merge(
                    job.header("ideal-check"),
                    json!({
                        "weight": weight,
                        "cell": ideal.cell(),
                        "kind": if kind == IdealKind::Below { "below" } else { "at-most" },
                        "longest_representative": w.word(),
                        "member": member,
                        "truncation": ideal.length(),
                    }),
                ))),
                f => Err(refuse("ideal-check", f)),
            }
        }
        Command::QuotientRing { cell } | Command::Radical { cell } => {
            let is_ring = matches!(cli.command, Command::QuotientRing { .. });
            let name = if is_ring { "quotient-ring" } else { "radical" };
            let job = Job::new(cli, true)?;
            let sel: CellSelector = cell.parse()?;
            let ideal = certified_ideal(job.kl(), job.truncation, &sel, IdealKind::Below)?;
            let t = Tilting::new(job.kl().clone());
            let ring = t.quotient_ring(&ideal)?;
            let rad = radical(&ring)?;
            let extra = json!({"cell": ideal.cell(), "truncation": ideal.length()});
            match (fmt.unwrap_or(Format::Json), is_ring) {
                (Format::Json, true) => Ok(json_doc(&merge(merge(merge(job.header(name), extra), ring.to_json()), rad.to_json()))),
                (Format::Csv, true) => Ok(ring.to_csv()),
                (Format::Json, false) => Ok(json_doc(&merge(
                    merge(merge(job.header(name), extra), json!({"dimension": ring.dim(), "basis": ring.basis})),
                    rad.to_json(),
                ))),
                (f, _) => Err(refuse(name, f)),
            }
        }
        Command::Cache { action } => {
            let job = Job::new(cli, matches!(action, CacheAction::Verify { .. }))?;
            let dir = cli
                .cache_dir
                .as_ref()
                .ok_or_else(|| Error::InvalidArgument("--cache-dir or TILTCELL_CACHE is required".into()))?;
            let cache = KlCache::open(dir, &job.rs.label())?;
            let body = match action {
                CacheAction::List => json!({"action": "list", "entries": cache.list()?}),
                CacheAction::Clear => json!({"action": "clear", "removed": cache.clear()?}),
                CacheAction::Verify { fraction, seed } => {
                    if !(0.0..=1.0).contains(fraction) {
                        return Err(Error::InvalidArgument("--fraction must lie in [0, 1]".into()));
                    }
                    let r = cache.verify(job.group.clone().unwrap(), *fraction, *seed)?;
                    json!({"action": "verify", "report": r})
                }
            };
            Ok(json_doc(&merge(job.header("cache"), body)))
        }
    }
}

/// Rank-2 alcove pictures in the `lambda + rho` plane.
pub mod svg {
    use std::fmt::Write as _;

    use crate::affine::{AffineGroup, WfRep};
    use crate::error::{Error, Result};
    use crate::rootdata::Weight;

    const PALETTE: [&str; 12] = [
        "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
        "#008080", "#e6beff",
    ];

    /// Euclidean basis for the fundamental weights from their Gram matrix
    /// `n_i (B^-1)_ij n_j`, `B_ij = a_ij n_i`.
    fn frame(group: &AffineGroup) -> [[f64; 2]; 2] {
        let rs = group.root_system();
        let n = rs.norms();
        let a = |i: usize, j: usize| (rs.datum().entry(i, j) * n[i]) as f64;
        let det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        let inv = [[a(1, 1) / det, -a(0, 1) / det], [-a(1, 0) / det, a(0, 0) / det]];
        let g = |i: usize, j: usize| n[i] as f64 * inv[i][j] * n[j] as f64;
        let e1 = [g(0, 0).sqrt(), 0.0];
        let x = g(0, 1) / e1[0];
        let e2 = [x, (g(1, 1) - x * x).sqrt()];
        [e1, e2]
    }

    pub fn emit(group: &AffineGroup, classes: &[(WfRep, usize)], legend: &[(String, usize)]) -> Result<String> {
        let rs = group.root_system();
        if rs.rank() != 2 {
            return Err(Error::InvalidArgument(format!("SVG output needs rank 2, {} has rank {}", rs.label(), rs.rank())));
        }
        let [e1, e2] = frame(group);
        let coroot = &rs.coroots()[rs.highest_short_root()];
        let scale = coroot[0] * coroot[1];
        let l = group.level();
        // Vertices of the fundamental alcove times `scale`.
        let verts = [
            Weight::new(vec![0, 0]),
            Weight::new(vec![l * scale / coroot[0], 0]),
            Weight::new(vec![0, l * scale / coroot[1]]),
        ];
        let project = |w: &Weight| {
            let (x, y) = (w[0] as f64 / scale as f64, w[1] as f64 / scale as f64);
            (x * e1[0] + y * e2[0], -(x * e1[1] + y * e2[1]))
        };
        let mut polys = Vec::new();
        let (mut lo, mut hi) = ((0.0f64, 0.0f64), (0.0f64, 0.0f64));
        for (x, class) in classes {
            let el = x.element();
            let shift = scale * el.translation();
            let pts: Vec<(f64, f64)> = verts
                .iter()
                .map(|v| project(&(&rs.weyl().act(el.finite_part(), v) + &shift)))
                .collect();
            for &(a, b) in &pts {
                lo = (lo.0.min(a), lo.1.min(b));
                hi = (hi.0.max(a), hi.1.max(b));
            }
            polys.push((pts, *class, x.word_string()));
        }
        let pad = 1.0 + l as f64 * 0.05;
        let legend_h = 14.0 * legend.len() as f64;
        let (w, h) = (hi.0 - lo.0 + 2.0 * pad, hi.1 - lo.1 + 2.0 * pad);
        let unit = (w.max(h) / 60.0).max(0.05);
        let mut s = String::new();
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.3} {:.3} {:.3} {:.3}\">",
            lo.0 - pad,
            lo.1 - pad,
            w,
            h + legend_h * unit
        );
        for (pts, class, name) in &polys {
            let p: Vec<String> = pts.iter().map(|(a, b)| format!("{a:.3},{b:.3}")).collect();
            let _ = writeln!(
                s,
                "  <polygon points=\"{}\" fill=\"{}\" stroke=\"black\" stroke-width=\"{:.3}\"><title>{name}</title></polygon>",
                p.join(" "),
                PALETTE[class % PALETTE.len()],
                unit * 0.1
            );
        }
        for (k, (label, class)) in legend.iter().enumerate() {
            let y = hi.1 + pad + unit * 14.0 * k as f64;
            let _ = writeln!(
                s,
                "  <rect x=\"{:.3}\" y=\"{y:.3}\" width=\"{u:.3}\" height=\"{u:.3}\" fill=\"{}\"/><text x=\"{:.3}\" y=\"{:.3}\" font-size=\"{u:.3}\">{label}</text>",
                lo.0 - pad,
                PALETTE[class % PALETTE.len()],
                lo.0 - pad + 1.5 * unit * 10.0,
                y + unit * 10.0,
                u = unit * 10.0
            );
        }
        s.push_str("</svg>\n");
        Ok(s)
    }
}
