//! Command-line front end. Node and reflection indices are 1-based here and
//! 0-based in `lie_core`; the conversion happens only in this crate.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lie_core::curves::{
    decide_smooth_rational_curve, hilbert_dimension, positivity, tangent_degree, CurveClass,
    Exception, Positivity,
};
use lie_core::desing::{
    build_tower, demazure_refinement, minimal_schubert, rationally_smooth, smoothness_sufficient,
    tower_dimension, FactorTag,
};
use lie_core::orbits::{
    brute_force_min_codim, complement_codim_ge2, flag_dimension, levi_quotient,
    nilradical_filtration, orbit_table,
};
use lie_core::weyl::enumerate;
use lie_core::{build_root_system, LieError, LieType, NodeSet, RootDatum, WeylElement};

pub mod views;

use views::*;

#[derive(Parser, Debug)]
#[command(
    name = "lie",
    version,
    about = "Root systems, parabolic orbits, curve classes and Schubert desingularizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Roots, Cartan matrix and Dynkin diagram.
    RootSystem(Common),
    /// P'-orbits of G/P.
    Orbits(Common),
    /// Whether the complement of the dense P'-orbit has codimension >= 2.
    Codim(Common),
    /// Levi quotient of P' acting on G/P.
    Levi(Common),
    /// Ascending central series of the nilradical of P.
    Nilradical(Common),
    /// Existence of morphisms and smooth rational curves in a class.
    Curves(Common),
    /// Dimension of the space of rational curves in a class.
    Hilbert(Common),
    /// Desingularization tower of a Schubert variety.
    Desing(Common),
    /// Demazure refinement of the tower.
    Refine(Common),
    /// Sufficient smoothness criterion against the reflection-count test.
    Smooth(Common),
    /// Minimal Schubert variety attached to X_w.
    Minimal(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Cartan type: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    lie_type: LieType,
    #[arg(long)]
    rank: usize,
    /// Marked nodes of P, 1-based (default: all nodes, the Borel).
    #[arg(long)]
    p: Option<String>,
    /// Marked nodes of P', 1-based (default: all nodes).
    #[arg(long)]
    pprime: Option<String>,
    /// Reduced or unreduced word in 1-based simple reflections, e.g. "2 1 3 2".
    #[arg(long, conflicts_with = "perm")]
    word: Option<String>,
    /// One-line permutation (type A only), e.g. 3412.
    #[arg(long)]
    perm: Option<String>,
    /// Curve degrees aligned with the sorted nodes of P, e.g. 2,0,2.
    #[arg(long, allow_hyphen_values = true)]
    degrees: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Sweep every Weyl group element instead of one word.
    #[arg(long)]
    all_w: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn usage(msg: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: msg,
            code: 1,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(LieError),
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Failure::Domain(e)
    }
}

type Out<T> = std::result::Result<T, Failure>;

fn usage<T>(flag: &str, msg: impl std::fmt::Display) -> Out<T> {
    Err(Failure::Usage(format!(
        "error: invalid value for '--{flag}': {msg}\n\nFor more information, try '--help'.\n"
    )))
}

/// Parses arguments (program name first) and runs the query.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            };
        }
    };
    let (common, name) = cli.command.split();
    let json = common.format == Format::Json;
    match dispatch(&cli.command, common) {
        Ok(s) => Outcome::ok(s),
        Err(Failure::Usage(msg)) => Outcome::usage(msg),
        Err(Failure::Domain(e)) => {
            let stdout = if json {
                to_json(&ErrorView {
                    command: name.to_string(),
                    error: e.to_string(),
                })
            } else {
                String::new()
            };
            Outcome {
                stdout,
                stderr: format!("error: {e}\n"),
                code: 2,
            }
        }
    }
}

impl Command {
    fn split(&self) -> (&Common, &'static str) {
        match self {
            Command::RootSystem(c) => (c, "root-system"),
            Command::Orbits(c) => (c, "orbits"),
            Command::Codim(c) => (c, "codim"),
            Command::Levi(c) => (c, "levi"),
            Command::Nilradical(c) => (c, "nilradical"),
            Command::Curves(c) => (c, "curves"),
            Command::Hilbert(c) => (c, "hilbert"),
            Command::Desing(c) => (c, "desing"),
            Command::Refine(c) => (c, "refine"),
            Command::Smooth(c) => (c, "smooth"),
            Command::Minimal(c) => (c, "minimal"),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("views serialize");
    s.push('\n');
    s
}

fn render<T: serde::Serialize + Render>(v: &T, format: Format) -> Out<String> {
    match format {
        Format::Json => Ok(to_json(v)),
        Format::Text => Ok(v.text()),
        Format::Dot => usage(
            "format",
            "dot output is available for root-system and desing only",
        ),
    }
}

fn datum(c: &Common) -> Out<RootDatum> {
    if !c.lie_type.accepts(c.rank) {
        return usage(
            "rank",
            format!("type {} needs rank {}", c.lie_type, c.lie_type.admissible()),
        );
    }
    Ok(build_root_system(c.lie_type, c.rank)?)
}

fn parse_list(flag: &str, text: &str) -> Out<Vec<i64>> {
    text.split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .or_else(|_| usage(flag, format!("'{t}' is not an integer")))
        })
        .collect()
}

fn parse_nodes(flag: &str, text: Option<&str>, rank: usize) -> Out<NodeSet> {
    let Some(text) = text else {
        return Ok(NodeSet::all(rank));
    };
    let mut out = NodeSet::new();
    for v in parse_list(flag, text)? {
        if v < 1 || v as usize > rank {
            return usage(flag, format!("node {v} is outside 1..={rank}"));
        }
        out.insert(v as usize - 1);
    }
    Ok(out)
}

fn parse_w(c: &Common, rd: &RootDatum) -> Out<WeylElement> {
    if let Some(perm) = &c.perm {
        if rd.lie_type() != LieType::A {
            return usage("perm", "permutations are accepted for type A only");
        }
        let digits: Vec<i64> = if perm.contains(',') || perm.contains(' ') {
            parse_list("perm", perm)?
        } else {
            perm.chars()
                .map(|ch| ch.to_digit(10).map(i64::from).ok_or(()))
                .collect::<std::result::Result<_, _>>()
                .or_else(|_| usage("perm", format!("'{perm}' is not a permutation")))?
        };
        let one_line: Vec<usize> = digits.iter().map(|&d| d.max(0) as usize).collect();
        return WeylElement::from_permutation(rd, &one_line).or_else(|e| usage("perm", e));
    }
    let Some(word) = &c.word else {
        return usage("word", "a word or a permutation is required");
    };
    let mut letters = Vec::new();
    for v in parse_list("word", word)? {
        if v < 1 || v as usize > rd.rank() {
            return usage(
                "word",
                format!("reflection {v} is outside 1..={}", rd.rank()),
            );
        }
        letters.push(v as usize - 1);
    }
    Ok(WeylElement::from_word(rd, &letters)?)
}

fn parse_class(c: &Common, sigma: &NodeSet) -> Out<CurveClass> {
    let Some(text) = &c.degrees else {
        return usage("degrees", "degrees are required");
    };
    let degrees = parse_list("degrees", text)?;
    if degrees.len() != sigma.len() {
        return usage(
            "degrees",
            format!("expected {} degrees, one per node of P", sigma.len()),
        );
    }
    Ok(CurveClass::new(sigma, &degrees)?)
}

fn elements(c: &Common, rd: &RootDatum) -> Out<Vec<WeylElement>> {
    if c.all_w {
        Ok(enumerate(rd)?)
    } else {
        Ok(vec![parse_w(c, rd)?])
    }
}

fn dispatch(cmd: &Command, c: &Common) -> Out<String> {
    let rd = datum(c)?;
    let n = rd.rank();
    let p = parse_nodes("p", c.p.as_deref(), n)?;
    let pp = parse_nodes("pprime", c.pprime.as_deref(), n)?;
    match cmd {
        Command::RootSystem(_) => {
            if c.format == Format::Dot {
                return Ok(rd.dynkin_dot());
            }
            render(&RootSystemView::new(&rd), c.format)
        }
        Command::Orbits(_) => {
            let orbits = orbit_table(&rd, &p, &pp)?
                .into_iter()
                .map(|o| OrbitView {
                    representative: one_based(o.w.reduced_word(&rd)),
                    dimension: o.dimension,
                    dense: o.dense,
                    size: o.size,
                })
                .collect();
            let v = OrbitsView {
                group: group(&rd),
                p: nodes_out(&p),
                pprime: nodes_out(&pp),
                flag_dimension: flag_dimension(&rd, &p),
                orbits,
            };
            render(&v, c.format)
        }
        Command::Codim(_) => {
            let v = CodimView {
                group: group(&rd),
                p: nodes_out(&p),
                pprime: nodes_out(&pp),
                codim_ge2: complement_codim_ge2(&rd, &p, &pp)?,
                min_codim: brute_force_min_codim(&rd, &p, &pp)?,
            };
            render(&v, c.format)
        }
        Command::Levi(_) => {
            let q = levi_quotient(&rd, &p, &pp)?;
            let factors = q
                .factors
                .iter()
                .map(|f| LeviFactorView {
                    lie_type: f.lie_type.to_string(),
                    rank: f.rank,
                    nodes: f.nodes.iter().map(|x| x + 1).collect(),
                    marked: nodes_out(&f.marked),
                    projective_space: f.is_projective_space(),
                    dimension: f.flag_dimension(&rd),
                })
                .collect();
            render(
                &LeviView {
                    group: group(&rd),
                    p: nodes_out(&p),
                    pprime: nodes_out(&pp),
                    factors,
                    torus_rank: q.torus_rank,
                },
                c.format,
            )
        }
        Command::Nilradical(_) => {
            let f = nilradical_filtration(&rd, &p)?;
            let v = NilradicalView {
                group: group(&rd),
                p: nodes_out(&p),
                layers: f.layers.iter().map(|l| l.coords(&rd)).collect(),
                abelian: f.is_abelian(),
            };
            render(&v, c.format)
        }
        Command::Curves(_) => {
            let class = parse_class(c, &p)?;
            let verdict = decide_smooth_rational_curve(&rd, &p, &class)?;
            let v = CurvesView {
                group: group(&rd),
                p: nodes_out(&p),
                degrees: class.values(),
                positivity: positivity_name(positivity(&class)).to_string(),
                tangent_degree: tangent_degree(&rd, &p, &class)?,
                mor_nonempty: verdict.mor_nonempty,
                smooth: verdict.smooth_curve_exists,
                exception: verdict.exception_hit.map(|e| exception_name(e).to_string()),
                reduction: verdict.reduction.map(|fs| {
                    fs.iter()
                        .map(|f| ReducedView {
                            lie_type: f.lie_type.to_string(),
                            rank: f.rank,
                            nodes: f.nodes.iter().map(|x| x + 1).collect(),
                            marked: nodes_out(&f.marked),
                            degrees: f.class.values(),
                            dimension: f.dimension,
                        })
                        .collect()
                }),
            };
            render(&v, c.format)
        }
        Command::Hilbert(_) => {
            let class = parse_class(c, &p)?;
            let h = hilbert_dimension(&rd, &p, &class)?;
            render(
                &HilbertView {
                    group: group(&rd),
                    p: nodes_out(&p),
                    degrees: class.values(),
                    dimension: h.dimension,
                    boundary: h.boundary,
                },
                c.format,
            )
        }
        Command::Desing(_) => {
            let w = parse_w(c, &rd)?;
            let t = build_tower(&rd, &p, &w)?;
            if c.format == Format::Dot {
                return Ok(t.to_dot(&rd));
            }
            let marks = t.factor_marks(&rd);
            let factors = t
                .factors
                .iter()
                .zip(&t.tags)
                .zip(&marks)
                .map(|((f, tag), m)| TowerFactorView {
                    label: tag_label(*tag),
                    marked: nodes_out(m),
                    roots: f.roots().len(),
                })
                .collect();
            let v = DesingView {
                group: group(&rd),
                p: nodes_out(&p),
                w: one_based(w.reduced_word(&rd)),
                w_prime: one_based(t.base_word.reduced_word(&rd)),
                terminal_index: t.sequence.terminal_index,
                factors,
                junctions: t.junctions.iter().map(|j| j.len()).collect(),
                dimension: tower_dimension(&rd, &t)?,
                steps: t
                    .sequence
                    .step_log(&rd)
                    .into_iter()
                    .map(|s| StepView {
                        n: s.n,
                        sigma_p: nodes_out(&s.sigma_p),
                        sigma_pprime: nodes_out(&s.sigma_pprime),
                        union_size: s.union_size,
                    })
                    .collect(),
            };
            render(&v, c.format)
        }
        Command::Refine(_) => {
            let w = parse_w(c, &rd)?;
            let t = build_tower(&rd, &p, &w)?;
            let r = demazure_refinement(&rd, &t)?;
            let groups = t
                .tags
                .iter()
                .enumerate()
                .map(|(i, tag)| RefineGroupView {
                    factor: tag_label(*tag),
                    word: r
                        .word
                        .iter()
                        .zip(&r.groups)
                        .filter(|(_, &g)| g == i)
                        .map(|(&s, _)| s + 1)
                        .collect(),
                })
                .collect();
            let v = RefineView {
                group: group(&rd),
                p: nodes_out(&p),
                w_prime: one_based(t.base_word.reduced_word(&rd)),
                word: one_based(r.word.clone()),
                regroups: r.regroups_to(&t),
                groups,
            };
            render(&v, c.format)
        }
        Command::Smooth(_) => {
            let mut rows = Vec::new();
            for w in elements(c, &rd)? {
                let m = minimal_schubert(&rd, &p, &w)?;
                rows.push(SmoothView {
                    w: one_based(w.reduced_word(&rd)),
                    w_prime: one_based(m.w_prime.reduced_word(&rd)),
                    criterion: smoothness_sufficient(&rd, &p, &w)?,
                    rationally_smooth: rationally_smooth(&rd, &m.w_prime),
                });
            }
            render(
                &SmoothTable {
                    group: group(&rd),
                    p: nodes_out(&p),
                    rows,
                },
                c.format,
            )
        }
        Command::Minimal(_) => {
            let mut rows = Vec::new();
            for w in elements(c, &rd)? {
                let m = minimal_schubert(&rd, &p, &w)?;
                rows.push(MinimalView {
                    w: one_based(w.reduced_word(&rd)),
                    w_prime: one_based(m.w_prime.reduced_word(&rd)),
                    p1: nodes_out(&m.p1_nodes),
                    is_minimal: m.is_minimal,
                    dimension: m.dimension,
                });
            }
            render(
                &MinimalTable {
                    group: group(&rd),
                    p: nodes_out(&p),
                    rows,
                },
                c.format,
            )
        }
    }
}

fn group(rd: &RootDatum) -> String {
    format!("{}{}", rd.lie_type(), rd.rank())
}

fn nodes_out(s: &NodeSet) -> Vec<usize> {
    s.iter().map(|x| x + 1).collect()
}

fn one_based(word: Vec<usize>) -> Vec<usize> {
    word.into_iter().map(|x| x + 1).collect()
}

fn tag_label(tag: FactorTag) -> String {
    match tag {
        FactorTag::Primed(k) => format!("P'{k}"),
        FactorTag::Unprimed(k) => format!("P{k}"),
        FactorTag::Merged(k) => format!("P{k}=P'{k}"),
    }
}

fn positivity_name(p: Positivity) -> &'static str {
    match p {
        Positivity::Strict => "strict",
        Positivity::Positive => "positive",
        Positivity::Outside => "outside",
    }
}

fn exception_name(e: Exception) -> &'static str {
    match e {
        Exception::P1 => "P1",
        Exception::P2 => "P2",
        Exception::P1xP1 => "P1xP1",
    }
}
