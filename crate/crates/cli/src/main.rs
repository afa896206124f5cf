//! Command-line entry point: complex validation, geometry queries, the
//! contraction checkers, the tame-group pipelines, and DOT export.
//!
//! Exit codes: 0 = all checks pass, 1 = violations found (witnesses emitted),
//! 2 = usage or input error.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tamecx::complex::{
    corner_angle, interval, vertex_angle, AngleTables, ComplexJson, Ext, LinkGraph, Metric,
    PolygonalComplex,
};
use tamecx::contraction::{
    all_pairs, check_checkpoint_system, check_coarse_lipschitz, check_scp, contraction_constant,
    measure_angle_of_view, CheckpointSystem, ScpConstants, ScpOptions,
};
use tamecx::tame::{explicit_g, sample_words};
use tamecx::tame_complex::{
    common_stabilizer_report, enumerate_ball, partial_link_exploration, stabilizer_report_text,
    verify_grid, BallCaps,
};

#[derive(Parser)]
#[command(name = "tamecx", version, about = "Exact checkers for polygonal complexes and the tame-group square complex")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a complex file: structural invariants and connectivity.
    Validate { complex: PathBuf },
    /// Shortest-path distance between two labelled vertices.
    Distance {
        complex: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Combinatorial interval (union of all geodesics) between two vertices.
    Interval {
        complex: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Angles at a vertex: between two incident edges, or between two target
    /// vertices (minimized over geodesic first edges).
    Angle {
        complex: PathBuf,
        #[arg(long)]
        at: String,
        /// Far endpoints of two incident edges (corner angle); give twice.
        #[arg(long, num_args = 2, conflicts_with = "between")]
        toward: Vec<String>,
        /// Two target vertices (vertex angle); give twice.
        #[arg(long, num_args = 2)]
        between: Vec<String>,
    },
    /// Contraction and concatenation checkers.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Tame-group pipelines.
    #[command(subcommand)]
    Tame(TameCommand),
    /// Export to Graphviz DOT.
    #[command(subcommand)]
    Export(ExportCommand),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Strong concatenation property with constants (A, R).
    Scp {
        complex: PathBuf,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        r: u32,
        /// Half-length bound for enumerated geodesic segments.
        #[arg(long, default_value_t = 6)]
        half_len: u32,
    },
    /// Measure the angle of view and cross-check the concatenation property
    /// with constants (3A, 0).
    Aov { complex: PathBuf },
    /// Coarsely-Lipschitz projections onto a quasi-line.
    Lipschitz {
        complex: PathBuf,
        /// Vertices of the quasi-line (repeat the flag).
        #[arg(long = "on", required = true)]
        line: Vec<String>,
        /// Radius bound for the measured contraction constant (defaults to
        /// the diameter).
        #[arg(long)]
        radius: Option<u32>,
        /// Use this constant instead of measuring one.
        #[arg(long)]
        constant: Option<u32>,
    },
    /// Checkpoint system from singleton translates along an axis.
    Checkpoints {
        complex: PathBuf,
        /// Axis vertices in order (repeat the flag).
        #[arg(long = "axis", required = true)]
        axis: Vec<String>,
        /// Error constant L.
        #[arg(long, default_value_t = 0)]
        error_constant: u32,
        /// Vertices whose intervals should be excluded as boundary (repeat).
        #[arg(long = "boundary")]
        boundary: Vec<String>,
        /// Minimal pair distance in the exhaustive test set.
        #[arg(long, default_value_t = 2)]
        min_distance: u32,
    },
}

#[derive(Subcommand)]
enum TameCommand {
    /// Enumerate a ball around the identity, recover the interval between
    /// [x1] and its g^2-translate, and verify the 4x4 grid.
    Grid {
        #[arg(long, default_value_t = 2)]
        wordlen: usize,
        #[arg(long, default_value_t = 20_000)]
        vertex_cap: usize,
        #[arg(long, default_value_t = 100_000)]
        element_cap: usize,
        /// Also dump the enumerated portion.
        #[arg(long)]
        dump_portion: bool,
    },
    /// Derive the common-stabilizer constraints and print the report.
    Stabilizer,
    /// Verify quadratic-form invariance and exact inverses on the explicit
    /// element and seeded random generator words.
    Qcheck {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
    },
    /// Link-orbit exploration: distances in the link of [x1] under elementary
    /// twists of increasing degree.
    LinkOrbit {
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long, default_value_t = 2)]
        wordlen: usize,
    },
}

#[derive(Subcommand)]
enum ExportCommand {
    /// DOT of the 1-skeleton, or of the link of a vertex.
    Dot {
        complex: PathBuf,
        /// Export the link graph of this vertex instead of the 1-skeleton.
        #[arg(long)]
        link: Option<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Violations,
}

impl From<tamecx::complex::ComplexError> for CliError {
    fn from(e: tamecx::complex::ComplexError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<tamecx::contraction::CheckError> for CliError {
    fn from(e: tamecx::contraction::CheckError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<tamecx::tame_complex::PortionError> for CliError {
    fn from(e: tamecx::tame_complex::PortionError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Violations) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_complex(path: &PathBuf) -> Result<PolygonalComplex, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let json: ComplexJson = serde_json::from_str(&text).map_err(|e| {
        CliError::Input(format!(
            "malformed JSON in {} at line {} column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;
    Ok(PolygonalComplex::from_json(&json)?)
}

fn vertex(c: &PolygonalComplex, label: &str) -> Result<usize, CliError> {
    c.vertex_by_label(label)
        .ok_or_else(|| CliError::Input(format!("unknown vertex: {label}")))
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).unwrap()),
        Format::Text => print!("{}", text(value)),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Validate { complex } => {
            let c = load_complex(&complex)?;
            let report = c.validate();
            emit(format, &report, |r| {
                let mut s = format!(
                    "vertices: {}\nedges: {}\npolygons: {}\nconnected: {} ({} components)\n",
                    r.vertex_count, r.edge_count, r.polygon_count, r.connected, r.components
                );
                for v in &r.violations {
                    s.push_str(&format!("violation [{}]: {}\n", v.kind, v.detail));
                }
                s
            });
            if report.is_valid() {
                Ok(())
            } else {
                Err(CliError::Violations)
            }
        }
        Command::Distance { complex, from, to } => {
            let c = load_complex(&complex)?;
            let m = Metric::new(&c);
            let (u, v) = (vertex(&c, &from)?, vertex(&c, &to)?);
            #[derive(Serialize)]
            struct Out {
                from: String,
                to: String,
                distance: Ext,
            }
            let out = Out {
                from,
                to,
                distance: m.d(u, v),
            };
            emit(format, &out, |o| format!("{}\n", o.distance));
            Ok(())
        }
        Command::Interval { complex, from, to } => {
            let c = load_complex(&complex)?;
            let (u, v) = (vertex(&c, &from)?, vertex(&c, &to)?);
            let set = interval(&c, u, v)?;
            #[derive(Serialize)]
            struct Out {
                from: String,
                to: String,
                vertices: Vec<String>,
            }
            let out = Out {
                from,
                to,
                vertices: set.iter().map(|&x| c.label(x).to_string()).collect(),
            };
            emit(format, &out, |o| format!("{}\n", o.vertices.join(" ")));
            Ok(())
        }
        Command::Angle {
            complex,
            at,
            toward,
            between,
        } => {
            let c = load_complex(&complex)?;
            let v = vertex(&c, &at)?;
            let angle = if toward.len() == 2 {
                let u1 = vertex(&c, &toward[0])?;
                let u2 = vertex(&c, &toward[1])?;
                corner_angle(&c, v, u1, u2)?
            } else if between.len() == 2 {
                let m = Metric::new(&c);
                let t = AngleTables::new(&c);
                let w1 = vertex(&c, &between[0])?;
                let w2 = vertex(&c, &between[1])?;
                vertex_angle(&c, &m, &t, v, w1, w2)?
            } else {
                return Err(CliError::Input(
                    "give either --toward A B (corner angle) or --between W W' (vertex angle)"
                        .into(),
                ));
            };
            #[derive(Serialize)]
            struct Out {
                at: String,
                angle: Ext,
            }
            emit(format, &Out { at, angle }, |o| format!("{}\n", o.angle));
            Ok(())
        }
        Command::Check(check) => run_check(check, format),
        Command::Tame(tame) => run_tame(tame, format),
        Command::Export(ExportCommand::Dot { complex, link }) => {
            let c = load_complex(&complex)?;
            match link {
                None => print!("{}", c.to_dot()),
                Some(label) => {
                    let v = vertex(&c, &label)?;
                    print!("{}", LinkGraph::new(&c, v).to_dot(&c));
                }
            }
            Ok(())
        }
    }
}

fn run_check(check: CheckCommand, format: Format) -> Result<(), CliError> {
    match check {
        CheckCommand::Scp {
            complex,
            a,
            r,
            half_len,
        } => {
            let c = load_complex(&complex)?;
            let m = Metric::new(&c);
            let t = AngleTables::new(&c);
            let opts = ScpOptions {
                half_length_bound: half_len,
                ..ScpOptions::default()
            };
            let violations = check_scp(&c, &m, &t, ScpConstants { a: Ext::Fin(a), r }, &opts);
            #[derive(Serialize)]
            struct Out {
                a: u32,
                r: u32,
                violations: Vec<tamecx::contraction::Violation>,
            }
            let out = Out { a, r, violations };
            emit(format, &out, |o| {
                format!(
                    "strong concatenation check (A = {}, R = {}): {} violation(s)\n",
                    o.a,
                    o.r,
                    o.violations.len()
                )
            });
            if out.violations.is_empty() {
                Ok(())
            } else {
                Err(CliError::Violations)
            }
        }
        CheckCommand::Aov { complex } => {
            let c = load_complex(&complex)?;
            let m = Metric::new(&c);
            let t = AngleTables::new(&c);
            let aov = measure_angle_of_view(&c, &m, &t);
            let consts = match aov.angle_of_view {
                Ext::Fin(a) => ScpConstants {
                    a: Ext::Fin(3 * a),
                    r: 0,
                },
                Ext::Inf => ScpConstants { a: Ext::Inf, r: 0 },
            };
            let violations = check_scp(&c, &m, &t, consts, &ScpOptions::default());
            #[derive(Serialize)]
            struct Out {
                report: tamecx::contraction::AovReport,
                scp_constants: ScpConstants,
                cross_check_violations: usize,
            }
            let out = Out {
                report: aov,
                scp_constants: consts,
                cross_check_violations: violations.len(),
            };
            emit(format, &out, |o| {
                format!(
                    "angle of view: {} (witness {:?})\ncross-check with (3A, 0): {} violation(s)\n",
                    o.report.angle_of_view, o.report.witness, o.cross_check_violations
                )
            });
            if violations.is_empty() {
                Ok(())
            } else {
                Err(CliError::Violations)
            }
        }
        CheckCommand::Lipschitz {
            complex,
            line,
            radius,
            constant,
        } => {
            let c = load_complex(&complex)?;
            let m = Metric::new(&c);
            let lambda: BTreeSet<usize> = line
                .iter()
                .map(|l| vertex(&c, l))
                .collect::<Result<_, _>>()?;
            let measured = constant.is_none();
            let constant = match constant {
                Some(k) => k,
                None => {
                    contraction_constant(&c, &m, &lambda, radius.unwrap_or_else(|| m.diameter()))
                        .constant
                }
            };
            let violations = check_coarse_lipschitz(&c, &m, &lambda, constant);
            #[derive(Serialize)]
            struct Out {
                constant: u32,
                measured: bool,
                violations: Vec<tamecx::contraction::Violation>,
            }
            let out = Out {
                constant,
                measured,
                violations,
            };
            emit(format, &out, |o| {
                format!(
                    "coarsely-Lipschitz check with C = {} ({}): {} violation(s)\n",
                    o.constant,
                    if o.measured { "measured" } else { "given" },
                    o.violations.len()
                )
            });
            if out.violations.is_empty() {
                Ok(())
            } else {
                Err(CliError::Violations)
            }
        }
        CheckCommand::Checkpoints {
            complex,
            axis,
            error_constant,
            boundary,
            min_distance,
        } => {
            let c = load_complex(&complex)?;
            let m = Metric::new(&c);
            let axis_ids: Vec<usize> = axis
                .iter()
                .map(|l| vertex(&c, l))
                .collect::<Result<_, _>>()?;
            let sys = CheckpointSystem::new(
                axis_ids.iter().map(|&v| [v].into()).collect(),
                (0..axis_ids.len() as i64).collect(),
                error_constant,
            )?;
            let boundary: BTreeSet<usize> = boundary
                .iter()
                .map(|l| vertex(&c, l))
                .collect::<Result<_, _>>()?;
            let pairs = all_pairs(&c, &m, min_distance);
            let report = check_checkpoint_system(
                &c,
                &m,
                &sys,
                &pairs,
                if boundary.is_empty() {
                    None
                } else {
                    Some(&boundary)
                },
            )?;
            emit(format, &report, |r| {
                format!(
                    "checkpoint check over {} pairs: {} violation(s), {} pair(s) excluded\n",
                    r.pairs_checked,
                    r.violations.len(),
                    r.excluded_pairs.len()
                )
            });
            if report.is_clean() {
                Ok(())
            } else {
                Err(CliError::Violations)
            }
        }
    }
}

fn run_tame(tame: TameCommand, format: Format) -> Result<(), CliError> {
    match tame {
        TameCommand::Grid {
            wordlen,
            vertex_cap,
            element_cap,
            dump_portion,
        } => {
            let caps = BallCaps {
                max_word_length: wordlen.max(4),
                vertex_cap,
                element_cap,
            };
            let g = explicit_g();
            let portion = enumerate_ball(&[g.clone()], wordlen, &caps)?;
            let report = verify_grid(&portion, &g)?;
            if dump_portion {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&portion.to_json()).unwrap()
                );
            }
            emit(format, &report, |r| {
                format!(
                    "interval between {} and {}: {} vertices, {} edges, {} squares\n\
                     distances: v to g^2 v = {}, v to g v = {}, g v to g^2 v = {}\n\
                     4x4 grid verified: {}\n({})\n",
                    r.base_vertex,
                    r.g2v,
                    r.interval_vertices,
                    r.interval_edges,
                    r.interval_squares,
                    r.distance_v_g2v,
                    r.distance_v_gv,
                    r.distance_gv_g2v,
                    r.is_grid_4x4,
                    r.note
                )
            });
            if report.is_grid_4x4 {
                Ok(())
            } else {
                Err(CliError::Violations)
            }
        }
        TameCommand::Stabilizer => {
            let report = common_stabilizer_report()?;
            emit(format, &report, stabilizer_report_text);
            Ok(())
        }
        TameCommand::Qcheck {
            seed,
            count,
            maxlen,
        } => {
            use tamecx::algebra::quadratic_form;
            let q = quadratic_form();
            let g = explicit_g();
            let mut failures = Vec::new();
            let mut check = |name: String, el: &tamecx::tame::TameElement| {
                if el.forward.quadratic_form_pullback() != q
                    || el.inverse.quadratic_form_pullback() != q
                    || !el.forward.compose(&el.inverse).is_identity()
                {
                    failures.push(name);
                }
            };
            check("explicit hyperbolic element".into(), &g);
            for (i, el) in sample_words(seed, count, maxlen).iter().enumerate() {
                check(format!("word #{i}"), el);
            }
            #[derive(Serialize)]
            struct Out {
                seed: u64,
                words_checked: usize,
                failures: Vec<String>,
            }
            let out = Out {
                seed,
                words_checked: count + 1,
                failures,
            };
            emit(format, &out, |o| {
                format!(
                    "q-invariance and inverse check on {} elements (seed {}): {} failure(s)\n",
                    o.words_checked,
                    o.seed,
                    o.failures.len()
                )
            });
            if out.failures.is_empty() {
                Ok(())
            } else {
                Err(CliError::Violations)
            }
        }
        TameCommand::LinkOrbit {
            max_degree,
            wordlen,
        } => {
            use tamecx::algebra::Monomial;
            use tamecx::tame::{Generator, Letter, TameElement};
            use tamecx::{GroundPoly, Rat};
            let twists: Vec<TameElement> = (1..=max_degree)
                .map(|k| {
                    let mut p = GroundPoly::zero();
                    p.add_term(Monomial([k, 0, 0, 0]), Rat::from_integer(1.into()));
                    TameElement::from_word(vec![Letter::new(
                        Generator::elementary(p).expect("powers of x1 are valid twists"),
                    )])
                })
                .collect();
            let portion = enumerate_ball(&twists, wordlen, &BallCaps::default())?;
            let report = partial_link_exploration(&portion, &twists)?;
            emit(format, &report, |r| {
                let mut s = format!(
                    "link orbit at {} from node {}:\n",
                    r.base_vertex, r.base_node
                );
                for row in &r.rows {
                    s.push_str(&format!(
                        "  {} -> {} (distance {})\n",
                        row.element,
                        row.image_vertex.as_deref().unwrap_or("?"),
                        row.distance
                            .map(|d| d.to_string())
                            .unwrap_or_else(|| "outside portion".into())
                    ));
                }
                s.push_str(&format!("({})\n", r.note));
                s
            });
            Ok(())
        }
    }
}
