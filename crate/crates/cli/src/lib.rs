//! Command-line front end for `curvestab`.
//!
//! Exit codes: 0 stable / true, 1 semistable boundary, 2 unstable / false,
//! 3 malformed rational, 4 unknown id, 5 schema violation, 6 I/O, 7 failed
//! precondition, 8 usage.

pub mod report;
pub mod wire;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use curvestab::bounds::{increments_from_profiles, is_staircase, omega_hat, primary_indices, shifted_weights, trapezoid_bound};
use curvestab::chow_weight::{chow_weight, two_weight_closed_form, two_weight_datum, two_weight_sizes};
use curvestab::curve_model::{classify_weighted, stabilize, WeightedClass, MAX_COMPONENTS};
use curvestab::degree_class::find_twist;
use curvestab::k_stability::{k_stable, KVerdict};
use curvestab::newton::{lattice_count_oracle, polygon_from_points, GammaSet};
use curvestab::slope::{
    degree_bound_constants, degree_bound_violations, equivalence_report, h0_guard, is_extremal,
    slope_check_h0, slope_check_interval, ScanOptions, Side, StabilityVerdict, Status, WitnessKind,
};
use curvestab::{Curve, Polarization, Rational, Scalar, Subcurve};
use num_traits::Signed;
use serde::Serialize;

use report::*;
use wire::{CurveFile, DatumFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Rational(String),
    #[error("{0}")]
    Unknown(String),
    #[error("{0}")]
    Schema(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Rational(_) => 3,
            CliError::Unknown(_) => 4,
            CliError::Schema(_) => 5,
            CliError::Io(_) => 6,
            CliError::Precondition(_) => 7,
            CliError::Usage(_) => 8,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Rational(_) => "malformed-rational",
            CliError::Unknown(_) => "unknown-id",
            CliError::Schema(_) => "schema",
            CliError::Io(_) => "io",
            CliError::Precondition(_) => "precondition",
            CliError::Usage(_) => "usage",
        }
    }
}

impl From<curvestab::Error> for CliError {
    fn from(e: curvestab::Error) -> Self {
        use curvestab::Error as E;
        let msg = e.to_string();
        match e {
            E::MalformedRational(_) | E::ZeroDenominator(_) => CliError::Rational(msg),
            E::UnknownComponent(_) => CliError::Unknown(msg),
            E::InvalidCurve(_) => CliError::Schema(msg),
            _ => CliError::Precondition(msg),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "curvestab", version, about = "Stability of polarized weighted pointed nodal curves")]
struct Cli {
    /// Render numbers as {"exact", "approx"} pairs.
    #[arg(long, global = true)]
    float: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Criterion {
    Interval,
    H0,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Slope stability of a polarization.
    Check {
        #[arg(long)]
        curve: PathBuf,
        /// Degrees as `C1=10,C2=10`.
        #[arg(long)]
        polarization: String,
        #[arg(long, value_enum, default_value = "interval")]
        criterion: Criterion,
        #[arg(long)]
        connected_only: bool,
    },
    /// Twist a degree vector into the admissible set.
    Twist {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Chow weight of a one-parameter subgroup datum.
    ChowWeight {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        polarization: String,
        #[arg(long)]
        ops: PathBuf,
    },
    /// Chow weight of the two-weight subgroup toward a subcurve.
    TwoWeight {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        polarization: String,
        /// Component ids, comma separated.
        #[arg(long)]
        subcurve: String,
        /// Also write the generated datum.
        #[arg(long)]
        datum_out: Option<PathBuf>,
    },
    /// Newton polygon of a point set.
    Newton {
        /// Points as `x,y;x,y;...`.
        #[arg(long)]
        gamma: String,
        /// Defaults to the largest x among the lowest points.
        #[arg(long)]
        width: Option<i64>,
        #[arg(long)]
        oracle_k: Option<i64>,
    },
    /// Multiplicity bounds for a staircase datum.
    Bounds {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        polarization: String,
        #[arg(long)]
        ops: Option<PathBuf>,
        #[arg(long, default_value = "1/2")]
        epsilon: String,
    },
    /// K-stability through two-weight test configurations.
    KCheck {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        polarization: String,
        #[arg(long)]
        connected_only: bool,
    },
    /// Weighted (semi)stability of the curve itself.
    Classify {
        #[arg(long)]
        curve: PathBuf,
    },
    /// Contract exceptional components.
    Stabilize {
        #[arg(long)]
        curve: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments (program name first) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 8,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(&cli) {
        Ok((code, body)) => match &cli.output {
            Some(path) => match std::fs::write(path, &body) {
                Ok(()) => Outcome {
                    code,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => error_outcome(&CliError::Io(format!("{}: {e}", path.display()))),
            },
            None => Outcome {
                code,
                stdout: body,
                stderr: String::new(),
            },
        },
        Err(e) => error_outcome(&e),
    }
}

fn error_outcome(e: &CliError) -> Outcome {
    #[derive(Serialize)]
    struct ErrorOut<'a> {
        error: &'a str,
        message: String,
    }
    let body = serde_json::to_string(&ErrorOut {
        error: e.kind(),
        message: e.to_string(),
    })
    .expect("serializable");
    Outcome {
        code: e.code(),
        stdout: String::new(),
        stderr: body + "\n",
    }
}

fn scan_options(connected_only: bool) -> Result<ScanOptions, CliError> {
    let max_components = match std::env::var("CURVESTAB_MAX_R") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("CURVESTAB_MAX_R: not a count: `{v}`")))?
            .min(MAX_COMPONENTS),
        Err(_) => MAX_COMPONENTS,
    };
    Ok(ScanOptions {
        connected_only,
        max_components,
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_curve(path: &Path) -> Result<Curve<Rational>, CliError> {
    wire::from_json::<CurveFile>(&read(path)?)?.to_curve()
}

fn load_datum(path: &Path, curve: &Curve<Rational>) -> Result<curvestab::chow_weight::OnePSDatum, CliError> {
    wire::from_json::<DatumFile>(&read(path)?)?.to_datum(curve)
}

/// `C1=10,C2=-3` into a map, checking ids against the curve.
fn parse_assignments(curve: &Curve<Rational>, text: &str) -> Result<BTreeMap<String, i64>, CliError> {
    let mut out = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (id, val) = part
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected `id=degree`, got `{part}`")))?;
        let (id, val) = (id.trim(), val.trim());
        let v: i64 = val
            .parse()
            .map_err(|_| CliError::Usage(format!("`{id}`: not an integer: `{val}`")))?;
        curve.component_index(id)?;
        if out.insert(id.to_string(), v).is_some() {
            return Err(CliError::Usage(format!("`{id}` given twice")));
        }
    }
    Ok(out)
}

fn load_polarization(curve: &Curve<Rational>, text: &str) -> Result<Polarization, CliError> {
    Ok(Polarization::from_map(curve, &parse_assignments(curve, text)?)?)
}

fn load_vector(curve: &Curve<Rational>, text: &str) -> Result<Vec<i64>, CliError> {
    let map = parse_assignments(curve, text)?;
    curve
        .components()
        .iter()
        .map(|c| {
            map.get(&c.id)
                .copied()
                .ok_or_else(|| CliError::Usage(format!("missing entry for `{}`", c.id)))
        })
        .collect()
}

fn parse_gamma(text: &str) -> Result<Vec<(i64, i64)>, CliError> {
    text.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let bad = || CliError::Usage(format!("expected `x,y`, got `{p}`"));
            let (x, y) = p.split_once(',').ok_or_else(bad)?;
            Ok((x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn ids(curve: &Curve<Rational>, y: Subcurve) -> Vec<String> {
    curve.subcurve_ids(y)
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Stable => "Stable",
        Status::StrictlySemistable => "StrictlySemistable",
        Status::Unstable => "Unstable",
    }
}

fn status_code(s: Status) -> i32 {
    match s {
        Status::Stable => 0,
        Status::StrictlySemistable => 1,
        Status::Unstable => 2,
    }
}

fn sign_code(x: &Rational) -> i32 {
    if x.is_positive() {
        0
    } else if x.is_negative() {
        2
    } else {
        1
    }
}

fn verdict_out(curve: &Curve<Rational>, v: &StabilityVerdict<Rational>, f: Fmt) -> VerdictOut {
    VerdictOut {
        status: status_name(v.status),
        witnesses: v
            .witnesses
            .iter()
            .map(|w| WitnessOut {
                subcurve: ids(curve, w.subcurve),
                value: f.q(&w.value),
                lower: f.q(&w.lower),
                upper: f.q(&w.upper),
                side: match w.side {
                    Side::Lower => "lower",
                    Side::Upper => "upper",
                },
                kind: match w.kind {
                    WitnessKind::Attained => "attained",
                    WitnessKind::Violated => "violated",
                },
            })
            .collect(),
    }
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable") + "\n"
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    let f = Fmt { float: cli.float };
    match &cli.command {
        Command::Check {
            curve,
            polarization,
            criterion,
            connected_only,
        } => {
            let c = load_curve(curve)?;
            let d = load_polarization(&c, polarization)?;
            let opts = scan_options(*connected_only)?;
            let interval = slope_check_interval(&c, &d, &opts)?;
            let (main, h0, equivalence) = match criterion {
                Criterion::Interval => (interval, None, None),
                Criterion::H0 => (slope_check_h0(&c, &d, &opts)?, None, None),
                Criterion::Both => {
                    let rep = equivalence_report(&c, &d, &opts)?;
                    let h0 = if h0_guard(&c, &d).is_ok() {
                        Some(verdict_out(&c, &slope_check_h0(&c, &d, &opts)?, f))
                    } else {
                        None
                    };
                    let eq = EquivalenceOut {
                        in_regime: rep.in_regime,
                        interval: status_name(rep.interval),
                        h0: status_name(rep.h0),
                        disagreements: rep
                            .disagreements
                            .iter()
                            .map(|x| DisagreementOut {
                                subcurve: ids(&c, x.subcurve),
                                degree: x.degree,
                                lower: f.q(&x.lower),
                                h0_lhs: x.h0_lhs.as_ref().map(|v| f.q(v)),
                                h0_rhs: f.q(&x.h0_rhs),
                            })
                            .collect(),
                    };
                    (interval, h0, Some(eq))
                }
            };
            let extremal = if main.status == Status::Unstable || *criterion == Criterion::H0 {
                None
            } else {
                let e = is_extremal(&c, &d, &opts)?;
                Some(ExtremalOut {
                    extremal: e.extremal,
                    violating: e.violating.iter().map(|&y| ids(&c, y)).collect(),
                })
            };
            let v = verdict_out(&c, &main, f);
            let out = CheckOut {
                criterion: match criterion {
                    Criterion::Interval => "interval",
                    Criterion::H0 => "h0",
                    Criterion::Both => "both",
                },
                status: v.status,
                witnesses: v.witnesses,
                h0,
                equivalence,
                extremal,
            };
            Ok((status_code(main.status), to_json(&out)))
        }
        Command::Twist { curve, vector } => {
            let c = load_curve(curve)?;
            let v = load_vector(&c, vector)?;
            let t = find_twist(&c, &v, &scan_options(false)?)?;
            let code = if t.is_some() { 0 } else { 2 };
            let out = TwistOut {
                components: c.components().iter().map(|x| x.id.clone()).collect(),
                vector: v,
                twist: t.as_ref().map(|t| t.twist.clone()),
                coefficients: t.map(|t| t.coefficients),
            };
            Ok((code, to_json(&out)))
        }
        Command::ChowWeight {
            curve,
            polarization,
            ops,
        } => {
            let c = load_curve(curve)?;
            let d = load_polarization(&c, polarization)?;
            let datum = load_datum(ops, &c)?;
            let w = chow_weight(&datum, &c, &d)?;
            let out = ChowOut {
                omega: f.q(&w.omega),
                mu_a: f.q(&w.mu_a),
                omega_a: f.q(&w.omega_a),
                e: f.q(&w.e),
            };
            Ok((sign_code(&w.omega_a), to_json(&out)))
        }
        Command::TwoWeight {
            curve,
            polarization,
            subcurve,
            datum_out,
        } => {
            let c = load_curve(curve)?;
            let d = load_polarization(&c, polarization)?;
            let names: Vec<&str> = subcurve.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let y = c.subcurve(&names)?;
            let datum = two_weight_datum(&c, &d, y)?;
            let (m, m0) = two_weight_sizes(&c, &d, y)?;
            let w = chow_weight(&datum, &c, &d)?;
            let closed = two_weight_closed_form(&c, &d, y)?;
            if let Some(path) = datum_out {
                std::fs::write(path, to_json(&DatumFile::from_datum(&datum, &c)))
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            let out = TwoWeightOut {
                subcurve: ids(&c, y),
                m,
                m0,
                agrees: closed == w.omega_a,
                omega: f.q(&w.omega),
                mu_a: f.q(&w.mu_a),
                omega_a: f.q(&w.omega_a),
                e: f.q(&w.e),
                closed_form: f.q(&closed),
            };
            Ok((sign_code(&w.omega_a), to_json(&out)))
        }
        Command::Newton {
            gamma,
            width,
            oracle_k,
        } => {
            let pts = parse_gamma(gamma)?;
            let g = match width {
                Some(w) => GammaSet::new(pts, *w),
                None => GammaSet::with_derived_width(pts)?,
            };
            let poly = polygon_from_points::<Rational>(&g)?;
            let oracle = match oracle_k {
                &Some(k) => {
                    let n = |k| lattice_count_oracle::<Rational>(&g, k);
                    let (a, b, c) = (n(k)?, n(k + 1)?, n(k + 2)?);
                    Some(OracleOut {
                        k,
                        count: a,
                        second_difference: c - 2 * b + a,
                        twice_area: f.q(&(poly.area.clone() * Rational::from_int(2))),
                    })
                }
                None => None,
            };
            let out = NewtonOut {
                width: g.width,
                vertices: poly.vertices.iter().map(|(x, y)| (f.q(x), f.q(y))).collect(),
                area: f.q(&poly.area),
                oracle,
            };
            Ok((0, to_json(&out)))
        }
        Command::Bounds {
            curve,
            polarization,
            ops,
            epsilon,
        } => {
            let c = load_curve(curve)?;
            let d = load_polarization(&c, polarization)?;
            let eps = Rational::parse_rational(epsilon)
                .map_err(|e| CliError::Rational(format!("--epsilon: {e}")))?;
            let k = degree_bound_constants(&c)?;
            let viol = degree_bound_violations(&c, &d, &k.c)?;
            let mut out = BoundsOut {
                degree_bound: DegreeBoundOut {
                    c: f.q(&k.c),
                    m: f.q(&k.m),
                    c_min: f.q(&k.c_min),
                    c1: f.q(&k.c1),
                    c2: f.q(&k.c2),
                    m1: f.q(&k.m1),
                    m2: f.q(&k.m2),
                    violations: viol.iter().map(|&y| ids(&c, y)).collect(),
                },
                staircase: None,
                e_alpha: None,
                e_x: None,
                omega_hat: None,
                omega_hat_a: None,
                rho_hat: None,
                unassigned: None,
                trapezoid_report: None,
                primary: None,
            };
            if let Some(ops) = ops {
                let datum = load_datum(ops, &c)?;
                datum.validate(&c, &d)?;
                let st = is_staircase(&datum);
                out.staircase = Some(StaircaseOut {
                    ok: st.ok,
                    violations: st.violations.clone(),
                });
                if st.ok {
                    let oh = omega_hat(&datum, &c, &d, &eps)?;
                    let cid = |a: usize| c.component(a).id.clone();
                    out.e_alpha = Some(oh.e_alpha.iter().enumerate().map(|(a, v)| (cid(a), f.q(v))).collect());
                    out.e_x = Some(f.q(&oh.e_x));
                    out.omega_hat = Some(f.q(&oh.omega_hat));
                    out.omega_hat_a = Some(f.q(&oh.omega_hat_a));
                    let sw = shifted_weights(&datum);
                    out.rho_hat = Some(sw.values);
                    out.unassigned = Some(sw.unassigned);
                    let mut traps = Vec::new();
                    for p in &datum.profiles {
                        let h = datum.hbar[p.component];
                        let t = trapezoid_bound::<Rational>(&p.vanish, &datum.rho, h, 0, h)?;
                        traps.push(TrapezoidOut {
                            point: p.id.clone(),
                            rhs: f.q(&t.rhs),
                            exact: f.q(&t.exact),
                            ok: t.ok,
                            half_rho: f.q(&t.half_rho),
                        });
                    }
                    out.trapezoid_report = Some(traps);
                    out.primary = Some(
                        increments_from_profiles(&datum)?
                            .iter()
                            .map(|s| {
                                let p = primary_indices(s, &c, &d);
                                (
                                    cid(s.component),
                                    PrimaryOut {
                                        indices: p.primary,
                                        j_bar: p.j_bar,
                                        w_pri: p.w_pri,
                                        width_bound_ok: p.width_bound_ok,
                                    },
                                )
                            })
                            .collect(),
                    );
                }
            }
            Ok((0, to_json(&out)))
        }
        Command::KCheck {
            curve,
            polarization,
            connected_only,
        } => {
            let c = load_curve(curve)?;
            let d = load_polarization(&c, polarization)?;
            let rep = k_stable(&c, &d, &scan_options(*connected_only)?)?;
            let (verdict, reason, code) = match &rep.verdict {
                KVerdict::KStable => ("KStable", None, 0),
                KVerdict::NotKStable { reason, .. } => ("NotKStable", Some(reason.clone()), 2),
            };
            let out = KCheckOut {
                verdict,
                reason,
                proportional: rep.proportional,
                df: rep
                    .df
                    .iter()
                    .map(|(y, v)| DfOut {
                        subcurve: ids(&c, *y),
                        value: f.q(v),
                    })
                    .collect(),
                witness: rep.scan_witness.as_ref().map(|w| DfWitnessOut {
                    subcurve: ids(&c, w.subcurve),
                    power: w.power,
                    value: f.q(&w.value),
                }),
            };
            Ok((code, to_json(&out)))
        }
        Command::Classify { curve } => {
            let c = load_curve(curve)?;
            let (out, code) = match classify_weighted(&c) {
                WeightedClass::Stable => (
                    ClassifyOut {
                        class: "Stable",
                        exceptional: vec![],
                        witness: None,
                        reason: None,
                    },
                    0,
                ),
                WeightedClass::Semistable { exceptional } => (
                    ClassifyOut {
                        class: "Semistable",
                        exceptional,
                        witness: None,
                        reason: None,
                    },
                    1,
                ),
                WeightedClass::NotSemistable { witness, reason } => (
                    ClassifyOut {
                        class: "NotSemistable",
                        exceptional: vec![],
                        witness,
                        reason: Some(reason),
                    },
                    2,
                ),
            };
            Ok((code, to_json(&out)))
        }
        Command::Stabilize { curve } => {
            let c = load_curve(curve)?;
            let s = stabilize(&c)?;
            Ok((0, to_json(&CurveFile::from_model(&s.to_model()))))
        }
    }
}
