//! Command-line surface for the library: classification, Iwasawa factors,
//! matrix exponentials, half-plane actions, orbit figures, representation
//! evaluation, ladder solving, quadrature, and the identity checklist.
//!
//! Machine-readable JSON goes to stdout; human-oriented remarks go to stderr.
//! Exit codes: 0 on success, 1 when `verify` finds a failing identity, 2 on
//! malformed input. Setting `EPH_EXACT=1` switches commands that support both
//! backends to exact rational arithmetic; inputs then accept integers,
//! fractions like `3/4`, and decimal literals.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use eph::homogeneous::{act_brute, act_moebius, HalfPlanePoint, ProjPoint};
use eph::hypercomplex::{HNum, Sigma};
use eph::induced::{cos_bump, indicator_bump, inner_product, NprimeFlavor, QuadratureSpec};
use eph::ladder::solve_ladder;
use eph::orbitgen::{emit, figure_geometric, figure_rotations, EmitFormat};
use eph::scalar::Rat;
use eph::sl2::{classify, exp_traceless, iwasawa_decompose, LieElem, Mat2, SL2Elem};
use eph::verify::{run_suites, Suite};
use eph::{Error, Scalar};

#[derive(Parser)]
#[command(name = "eph", version, about = "Two-dimensional hypercomplex geometry toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a traceless matrix by the subgroup type its exponential generates.
    Classify {
        /// Matrix entries a,b,c,d (row major).
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Factor a determinant-one matrix as A(alpha) N(nu) K(phi).
    Iwasawa {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Exponentiate a traceless matrix at parameter t.
    Exp {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Apply a determinant-one matrix to a point of the sigma half-plane.
    Act {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        /// Algebra selector: -1 (complex), 0 (dual), 1 (double).
        #[arg(long, allow_hyphen_values = true)]
        sigma: i64,
        /// Point coordinates u,v.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum, default_value = "brute")]
        form: ActForm,
    },
    /// Write the rotation-orbit figure (1) or the geometric-orbit figure (2).
    Orbit {
        #[arg(long)]
        figure: u8,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        format: FormatArg,
        /// Use the geodesic parabolic families for the figure-2 spoke levels.
        #[arg(long)]
        geodesic_spokes: bool,
    },
    /// Run the identity checklist and print a pass/fail table.
    Verify {
        /// One suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Evaluate one induced-representation step: multiplier and image point.
    RepEval {
        #[arg(long, value_enum)]
        subgroup: SubgroupArg,
        /// Character flavor for N': complex, parabolic-algebraic, parabolic-geometric.
        #[arg(long)]
        flavor: Option<String>,
        /// Integer weight k for K; character parameter tau for N'.
        #[arg(long, allow_hyphen_values = true)]
        param: String,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Solve the ladder relation for a named generator.
    Ladder {
        #[arg(long, value_enum)]
        generator: GeneratorArg,
        #[arg(long, allow_hyphen_values = true)]
        sigma: i64,
    },
    /// Integrate the invariant pairing of the built-in bump pair over a grid.
    InnerProduct {
        #[arg(long)]
        flavor: String,
        /// Path to a JSON quadrature grid {u_min,u_max,v_min,v_max,nu,nv}.
        #[arg(long)]
        grid: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum ActForm {
    Brute,
    Moebius,
}

#[derive(ValueEnum, Clone, Copy)]
enum FormatArg {
    Csv,
    Svg,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
enum SubgroupArg {
    #[value(name = "K")]
    K,
    #[value(name = "Nprime")]
    Nprime,
}

#[derive(ValueEnum, Clone, Copy)]
enum GeneratorArg {
    #[value(name = "Z")]
    Z,
    #[value(name = "B")]
    B,
    #[value(name = "NprimeGen")]
    NprimeGen,
}

enum CliError {
    /// Malformed input: message plus exit code 2.
    Usage(String),
    /// The checklist found a failing identity: exit code 1.
    ChecksFailed,
}

fn usage<T: std::fmt::Display>(e: T) -> CliError {
    CliError::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::ChecksFailed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("eph: {msg}");
            eprintln!("run with --help for usage");
            ExitCode::from(2)
        }
    }
}

/// Whether EPH_EXACT selects the rational backend.
fn exact_mode() -> Result<bool, CliError> {
    match std::env::var("EPH_EXACT") {
        Err(_) => Ok(false),
        Ok(v) if v == "0" || v.is_empty() => Ok(false),
        Ok(v) if v == "1" => Ok(true),
        Ok(v) => Err(CliError::Usage(format!("EPH_EXACT must be 0 or 1, got {v:?}"))),
    }
}

fn parse_list<S: Scalar>(s: &str, n: usize, what: &str) -> Result<Vec<S>, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(CliError::Usage(format!(
            "{what} needs {n} comma-separated values, got {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            S::parse_str(p).ok_or_else(|| {
                CliError::Usage(format!("cannot parse {p:?} as a number in this mode"))
            })
        })
        .collect()
}

fn parse_matrix<S: Scalar>(s: &str) -> Result<Mat2<S>, CliError> {
    let e = parse_list::<S>(s, 4, "--matrix")?;
    Ok(Mat2::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()))
}

fn parse_point<S: Scalar>(s: &str) -> Result<HalfPlanePoint<S>, CliError> {
    let e = parse_list::<S>(s, 2, "--point")?;
    Ok(HalfPlanePoint::new(e[0].clone(), e[1].clone()))
}

fn parse_sigma(n: i64) -> Result<Sigma, CliError> {
    Sigma::from_int(n).ok_or_else(|| CliError::Usage(format!("--sigma must be -1, 0 or 1, got {n}")))
}

fn parse_flavor(s: &str) -> Result<NprimeFlavor, CliError> {
    [NprimeFlavor::Complex, NprimeFlavor::ParabAlgebraic, NprimeFlavor::ParabGeometric]
        .into_iter()
        .find(|f| f.label() == s)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "--flavor must be complex, parabolic-algebraic or parabolic-geometric, got {s:?}"
            ))
        })
}

/// A scalar as JSON: a float in float mode, an exact decimal/fraction string
/// in exact mode.
fn scalar_json<S: Scalar>(x: &S) -> serde_json::Value {
    if S::exact_backend() {
        json!(x.to_string())
    } else {
        json!(x.to_f64())
    }
}

fn hnum_json<S: Scalar>(w: &HNum<S>) -> serde_json::Value {
    json!({ "re": scalar_json(&w.re), "im": scalar_json(&w.im) })
}

fn emit_json(value: &serde_json::Value) {
    println!("{value}");
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { matrix } => {
            if exact_mode()? {
                classify_cmd::<Rat>(&matrix)
            } else {
                classify_cmd::<f64>(&matrix)
            }
        }
        Command::Iwasawa { matrix } => {
            if exact_mode()? {
                iwasawa_cmd::<Rat>(&matrix)
            } else {
                iwasawa_cmd::<f64>(&matrix)
            }
        }
        Command::Exp { matrix, t } => {
            if exact_mode()? {
                exp_cmd::<Rat>(&matrix, &t)
            } else {
                exp_cmd::<f64>(&matrix, &t)
            }
        }
        Command::Act { matrix, sigma, point, form } => {
            if exact_mode()? {
                act_cmd::<Rat>(&matrix, sigma, &point, form)
            } else {
                act_cmd::<f64>(&matrix, sigma, &point, form)
            }
        }
        Command::Orbit { figure, out, format, geodesic_spokes } => {
            orbit_cmd(figure, &out, format, geodesic_spokes)
        }
        Command::Verify { suite } => verify_cmd(&suite),
        Command::RepEval { subgroup, flavor, param, matrix, point } => {
            rep_eval_cmd(subgroup, flavor.as_deref(), &param, &matrix, &point)
        }
        Command::Ladder { generator, sigma } => ladder_cmd(generator, sigma),
        Command::InnerProduct { flavor, grid } => inner_product_cmd(&flavor, &grid),
    }
}

fn classify_cmd<S: Scalar>(matrix: &str) -> Result<(), CliError> {
    let x = LieElem::new(parse_matrix::<S>(matrix)?).map_err(usage)?;
    let class = classify(&x).map_err(usage)?;
    emit_json(&json!({
        "class": class.label(),
        "delta": scalar_json(&x.delta()),
    }));
    eprintln!("{} (delta = {})", class.label(), x.delta());
    Ok(())
}

fn iwasawa_cmd<S: Scalar>(matrix: &str) -> Result<(), CliError> {
    let g = SL2Elem::new(parse_matrix::<S>(matrix)?).map_err(usage)?;
    let f = iwasawa_decompose(&g).map_err(usage)?;
    emit_json(&json!({
        "alpha": scalar_json(&f.alpha),
        "nu": scalar_json(&f.nu),
        "phi": scalar_json(&f.phi),
    }));
    eprintln!("A({}) N({}) K({})", f.alpha, f.nu, f.phi);
    Ok(())
}

fn exp_cmd<S: Scalar>(matrix: &str, t: &str) -> Result<(), CliError> {
    let x = LieElem::new(parse_matrix::<S>(matrix)?).map_err(usage)?;
    let t = S::parse_str(t)
        .ok_or_else(|| CliError::Usage(format!("cannot parse --t {t:?} in this mode")))?;
    let g = exp_traceless(&x, &t).map_err(usage)?;
    let m = g.mat();
    emit_json(&json!({
        "matrix": [scalar_json(&m.a), scalar_json(&m.b), scalar_json(&m.c), scalar_json(&m.d)],
    }));
    eprintln!("[[{}, {}], [{}, {}]]", m.a, m.b, m.c, m.d);
    Ok(())
}

fn act_cmd<S: Scalar>(matrix: &str, sigma: i64, point: &str, form: ActForm) -> Result<(), CliError> {
    let g = SL2Elem::new(parse_matrix::<S>(matrix)?).map_err(usage)?;
    let sigma = parse_sigma(sigma)?;
    let p = parse_point::<S>(point)?;
    let image = match form {
        ActForm::Brute => match act_brute(&g, &p, sigma) {
            Ok(q) => Some(q),
            Err(Error::IdealPoint) => None,
            Err(e) => return Err(usage(e)),
        },
        ActForm::Moebius => {
            let q = act_moebius(&g, &ProjPoint::embed(&p, sigma)).map_err(usage)?;
            match q.affine_point() {
                Ok(q) => Some(q),
                Err(Error::IdealPoint) => None,
                Err(e) => return Err(usage(e)),
            }
        }
    };
    match image {
        Some(q) => {
            emit_json(&json!({
                "u": scalar_json(&q.u),
                "v": scalar_json(&q.v),
                "ideal": false,
            }));
            eprintln!("({}, {})", q.u, q.v);
        }
        None => {
            emit_json(&json!({ "ideal": true }));
            eprintln!("image is an ideal point of the compactified plane");
        }
    }
    Ok(())
}

fn orbit_cmd(figure: u8, out: &PathBuf, format: FormatArg, geodesic: bool) -> Result<(), CliError> {
    let curves = match (figure, geodesic) {
        (1, false) => figure_rotations(),
        (1, true) => {
            return Err(CliError::Usage(
                "--geodesic-spokes applies only to --figure 2".into(),
            ))
        }
        (2, g) => figure_geometric(g),
        (n, _) => return Err(CliError::Usage(format!("--figure must be 1 or 2, got {n}"))),
    };
    let fmt = match format {
        FormatArg::Csv => EmitFormat::Csv,
        FormatArg::Svg => EmitFormat::Svg,
        FormatArg::Json => EmitFormat::Json,
    };
    emit(&curves, fmt, out).map_err(|e| CliError::Usage(format!("cannot write {out:?}: {e}")))?;
    emit_json(&json!({
        "figure": figure,
        "curves": curves.len(),
        "path": out,
    }));
    eprintln!("wrote {} curves to {}", curves.len(), out.display());
    Ok(())
}

fn verify_cmd(suite: &str) -> Result<(), CliError> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_label(suite).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.label()).collect();
            CliError::Usage(format!(
                "unknown suite {suite:?}; expected one of {} or all",
                names.join(", ")
            ))
        })?]
    };
    let reports = run_suites(&suites);
    for r in &reports {
        eprintln!(
            "{} {:12} {} [{}]",
            if r.passed { "pass" } else { "FAIL" },
            r.suite.label(),
            r.name,
            r.detail
        );
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    eprintln!("{} checks, {} failed", reports.len(), failed);
    let rows: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            json!({
                "suite": r.suite.label(),
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
            })
        })
        .collect();
    emit_json(&json!(rows));
    if failed > 0 {
        return Err(CliError::ChecksFailed);
    }
    Ok(())
}

fn rep_eval_cmd(
    subgroup: SubgroupArg,
    flavor: Option<&str>,
    param: &str,
    matrix: &str,
    point: &str,
) -> Result<(), CliError> {
    match subgroup {
        SubgroupArg::K => {
            let k: i64 = param
                .parse()
                .map_err(|_| CliError::Usage(format!("--param must be an integer weight, got {param:?}")))?;
            if k < 1 {
                return Err(CliError::Usage("--param must be a positive weight for K".into()));
            }
            let g = SL2Elem::new(parse_matrix::<f64>(matrix)?).map_err(usage)?;
            let p = parse_point::<f64>(point)?;
            let [a, b, c, d] = g.inverse().mat().entries();
            let m = HNum::new(c * p.u + d, c * p.v, Sigma::Elliptic);
            let msq = m.modulus_sq();
            if msq == 0.0 {
                return Err(CliError::Usage("the point maps to an ideal point".into()));
            }
            let mult = m.conj().scale(&(1.0 / msq.sqrt())).pow(k as u32);
            let w = HNum::new(p.u, p.v, Sigma::Elliptic);
            let image = w
                .scale(&a)
                .add(&HNum::from_real(b, Sigma::Elliptic))
                .and_then(|n| n.div(&m))
                .map_err(usage)?;
            emit_json(&json!({
                "multiplier": hnum_json(&mult),
                "image": { "u": json!(image.re), "v": json!(image.im) },
            }));
            eprintln!("multiplier {} at image ({}, {})", mult, image.re, image.im);
            Ok(())
        }
        SubgroupArg::Nprime => {
            let flavor = parse_flavor(flavor.ok_or_else(|| {
                CliError::Usage("--flavor is required for the N' subgroup".into())
            })?)?;
            let exact = exact_mode()? && flavor != NprimeFlavor::Complex;
            if exact {
                nprime_eval::<Rat>(flavor, param, matrix, point)
            } else {
                nprime_eval::<f64>(flavor, param, matrix, point)
            }
        }
    }
}

/// Multiplier and image point of the N'-induced action, from the entries of
/// the inverse group element: the domain moves by the dual Möbius map and the
/// flavor's multiplier takes the parameter s = tau c v / (c u + d).
fn nprime_eval<S: Scalar>(
    flavor: NprimeFlavor,
    param: &str,
    matrix: &str,
    point: &str,
) -> Result<(), CliError> {
    let tau = S::parse_str(param)
        .ok_or_else(|| CliError::Usage(format!("cannot parse --param {param:?} in this mode")))?;
    let g = SL2Elem::new(parse_matrix::<S>(matrix)?).map_err(usage)?;
    let p = parse_point::<S>(point)?;
    let [a, b, c, d] = g.inverse().mat().entries();
    let den = c.clone() * p.u.clone() + d;
    if den.is_zero() {
        return Err(CliError::Usage("the point maps to an ideal point".into()));
    }
    let s = tau * c * p.v.clone() / den.clone();
    let image_u = (a * p.u.clone() + b) / den.clone();
    let image_v = p.v.clone() / (den.clone() * den);
    let mult = match flavor {
        NprimeFlavor::Complex => {
            let (cs, sn) = s.try_cos_sin().ok_or_else(|| {
                CliError::Usage("the complex multiplier needs the float backend".into())
            })?;
            HNum::new(cs, sn, Sigma::Elliptic)
        }
        NprimeFlavor::ParabAlgebraic => HNum::new(S::one(), s, Sigma::Parabolic),
        NprimeFlavor::ParabGeometric => {
            let sq = s.clone() * s.clone();
            HNum::new(s, sq - S::one(), Sigma::Parabolic)
        }
    };
    emit_json(&json!({
        "multiplier": hnum_json(&mult),
        "image": { "u": scalar_json(&image_u), "v": scalar_json(&image_v) },
    }));
    eprintln!("multiplier {} at image ({}, {})", mult, image_u, image_v);
    Ok(())
}

fn ladder_cmd(generator: GeneratorArg, sigma: i64) -> Result<(), CliError> {
    let sigma = parse_sigma(sigma)?;
    let (name, x) = match generator {
        GeneratorArg::Z => ("Z", [eph::rat(0, 1), eph::rat(0, 1), eph::rat(1, 1)]),
        GeneratorArg::B => ("B", [eph::rat(0, 1), eph::rat(1, 1), eph::rat(0, 1)]),
        GeneratorArg::NprimeGen => {
            ("NprimeGen", [eph::rat(0, 1), eph::rat(1, 1), eph::rat(-1, 2)])
        }
    };
    let theta = x[0].clone() * x[0].clone() + x[1].clone() * x[1].clone()
        - eph::rat(4, 1) * x[2].clone() * x[2].clone();
    let pairs = match solve_ladder(&x, sigma) {
        Ok(pairs) => pairs,
        Err(Error::NoNontrivialSolution) => Vec::new(),
        Err(e) => return Err(usage(e)),
    };
    let rows: Vec<serde_json::Value> = pairs
        .iter()
        .map(|(lambda, l)| {
            json!({
                "lambda": hnum_json(lambda),
                "operator": {
                    "a": hnum_json(&l.ca),
                    "b": hnum_json(&l.cb),
                    "z": hnum_json(&l.cz),
                },
            })
        })
        .collect();
    emit_json(&json!({
        "generator": name,
        "sigma": sigma.unit_square(),
        "lambda_squared": theta.to_string(),
        "pairs": rows,
    }));
    if pairs.is_empty() {
        eprintln!("no ladder operators for {name} in this algebra (lambda^2 = {theta})");
    } else {
        eprintln!("lambda^2 = {theta}");
        for (lambda, l) in &pairs {
            eprintln!("lambda = {lambda}: L = ({})A + ({})B + ({})Z", l.ca, l.cb, l.cz);
        }
    }
    Ok(())
}

fn inner_product_cmd(flavor: &str, grid_path: &PathBuf) -> Result<(), CliError> {
    let flavor = parse_flavor(flavor)?;
    let text = std::fs::read_to_string(grid_path)
        .map_err(|e| CliError::Usage(format!("cannot read {grid_path:?}: {e}")))?;
    let grid: QuadratureSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad quadrature grid: {e}")))?;
    grid.validate().map_err(usage)?;
    let rect = grid.rect().map_err(usage)?;
    let sigma = flavor.value_sigma();
    let f1 = cos_bump(sigma, rect.clone(), 1.0, 0.5);
    let f2 = indicator_bump(sigma, rect);
    let value = inner_product(&f1, &f2, flavor, &grid).map_err(usage)?;
    let refined = inner_product(&f1, &f2, flavor, &grid.refined()).map_err(usage)?;
    let quad_error =
        (value.re - refined.re).abs().max((value.im - refined.im).abs());
    emit_json(&json!({
        "flavor": flavor.label(),
        "value": hnum_json(&value),
        "quad_error": quad_error,
    }));
    eprintln!("<f1, f2> = {value} (quadrature error ~ {quad_error:.3e})");
    Ok(())
}
