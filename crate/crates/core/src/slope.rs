//! Slope stability: extremes intervals, the h0 inequality, extremality.

use crate::curve_model::{Curve, Polarization, Subcurve, MAX_COMPONENTS};
use crate::error::{Error, Result};
use crate::scalar::{frac, int, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub connected_only: bool,
    pub max_components: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            connected_only: false,
            max_components: MAX_COMPONENTS,
        }
    }
}

impl ScanOptions {
    pub fn subcurves<F: Scalar>(&self, curve: &Curve<F>) -> Result<Vec<Subcurve>> {
        curve.subcurves_capped(true, self.connected_only, self.max_components)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremesInterval<F> {
    pub lower: F,
    pub upper: F,
    pub subcurve: Subcurve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Stable,
    StrictlySemistable,
    Unstable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Attained,
    Violated,
}

/// `value` is the tested quantity; `lower`/`upper` the bounds of the criterion
/// (for the h0 form only `upper` is meaningful and `lower` repeats it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<F> {
    pub subcurve: Subcurve,
    pub value: F,
    pub lower: F,
    pub upper: F,
    pub side: Side,
    pub kind: WitnessKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityVerdict<F> {
    pub status: Status,
    pub witnesses: Vec<Witness<F>>,
}

impl<F> StabilityVerdict<F> {
    fn from_witnesses(witnesses: Vec<Witness<F>>) -> Self {
        let status = if witnesses.iter().any(|w| w.kind == WitnessKind::Violated) {
            Status::Unstable
        } else if witnesses.is_empty() {
            Status::Stable
        } else {
            Status::StrictlySemistable
        };
        StabilityVerdict { status, witnesses }
    }
}

pub fn chi_a<F: Scalar>(curve: &Curve<F>) -> F {
    int::<F>(curve.genus() - 1) + curve.total_mark_weight()
}

/// Weighted dualizing degree of the whole curve, required positive.
fn total_omega<F: Scalar>(curve: &Curve<F>) -> Result<F> {
    let w = curve.omega_degree(curve.full(), true)?;
    if w.is_positive() {
        Ok(w)
    } else {
        Err(Error::NonPositiveTotalDegree)
    }
}

/// Extremes on any nonempty subcurve, the whole curve included.
pub fn extremes_any<F: Scalar>(curve: &Curve<F>, total: i64, y: Subcurve) -> Result<ExtremesInterval<F>> {
    let omega = total_omega(curve)?;
    let wy = curve.omega_degree(y, true)?;
    let a = curve.total_mark_weight();
    let centre = wy / omega * (int::<F>(total) + a.half()) - curve.mark_weight_on(y).half();
    let half_links: F = frac(curve.links(y), 2);
    Ok(ExtremesInterval {
        lower: centre.clone() - half_links.clone(),
        upper: centre + half_links,
        subcurve: y,
    })
}

pub fn extremes<F: Scalar>(curve: &Curve<F>, d: &Polarization, y: Subcurve) -> Result<ExtremesInterval<F>> {
    curve.check_proper(y)?;
    extremes_any(curve, d.total(), y)
}

/// Interval test of an arbitrary integer vector against the extremes of every scanned Y.
pub(crate) fn interval_witnesses<F: Scalar>(
    curve: &Curve<F>,
    v: &[i64],
    opts: &ScanOptions,
) -> Result<Vec<Witness<F>>> {
    let total: i64 = v.iter().sum();
    total_omega(curve)?;
    let mut out = Vec::new();
    for y in opts.subcurves(curve)? {
        let ext = extremes_any(curve, total, y)?;
        let dy: F = int(crate::curve_model::degree_on(v, y));
        for (side, bound) in [(Side::Lower, &ext.lower), (Side::Upper, &ext.upper)] {
            let kind = match (side, dy.cmp(bound)) {
                (_, std::cmp::Ordering::Equal) => Some(WitnessKind::Attained),
                (Side::Lower, std::cmp::Ordering::Less) => Some(WitnessKind::Violated),
                (Side::Upper, std::cmp::Ordering::Greater) => Some(WitnessKind::Violated),
                _ => None,
            };
            if let Some(kind) = kind {
                out.push(Witness {
                    subcurve: y,
                    value: dy.clone(),
                    lower: ext.lower.clone(),
                    upper: ext.upper.clone(),
                    side,
                    kind,
                });
            }
        }
    }
    Ok(out)
}

pub fn slope_check_interval<F: Scalar>(
    curve: &Curve<F>,
    d: &Polarization,
    opts: &ScanOptions,
) -> Result<StabilityVerdict<F>> {
    Ok(StabilityVerdict::from_witnesses(interval_witnesses(
        curve,
        d.degrees(),
        opts,
    )?))
}

pub fn h0_guard<F: Scalar>(curve: &Curve<F>, d: &Polarization) -> Result<()> {
    for i in 0..curve.num_components() {
        let need = 2 * curve.component(i).genus as i64 + curve.valence(i) + 1;
        if d.degree(i) < need {
            return Err(Error::DegreeGuard {
                component: curve.component(i).id.clone(),
                detail: format!(
                    "degree too small for h0 formula: {} < {need}",
                    d.degree(i)
                ),
            });
        }
    }
    Ok(())
}

/// Riemann-Roch value deg_Y + 1 - g_Y.
pub fn h0_rr<F: Scalar>(curve: &Curve<F>, d: &Polarization, y: Subcurve) -> Result<i64> {
    Ok(d.on(y) + 1 - curve.arithmetic_genus(y)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H0Row<F> {
    pub subcurve: Subcurve,
    pub lhs: Option<F>,
    pub rhs: F,
}

fn h0_rows<F: Scalar>(curve: &Curve<F>, d: &Polarization, opts: &ScanOptions) -> Result<Vec<H0Row<F>>> {
    let hx = h0_rr(curve, d, curve.full())?;
    if hx <= 0 {
        return Err(Error::DegreeGuard {
            component: "X".into(),
            detail: "non-positive h0 of the whole curve".into(),
        });
    }
    let rhs = (int::<F>(d.total()) + curve.total_mark_weight().half()) / int(hx);
    let mut rows = Vec::new();
    for y in opts.subcurves(curve)? {
        let hy = h0_rr(curve, d, y)?;
        let lhs = (hy > 0).then(|| {
            (int::<F>(d.on(y)) + frac(curve.links(y), 2) + curve.mark_weight_on(y).half())
                / int(hy)
        });
        rows.push(H0Row {
            subcurve: y,
            lhs,
            rhs: rhs.clone(),
        });
    }
    Ok(rows)
}

fn h0_kind<F: Scalar>(row: &H0Row<F>) -> Option<WitnessKind> {
    match &row.lhs {
        None => Some(WitnessKind::Violated),
        Some(l) if *l == row.rhs => Some(WitnessKind::Attained),
        Some(l) if *l > row.rhs => Some(WitnessKind::Violated),
        _ => None,
    }
}

pub fn slope_check_h0<F: Scalar>(
    curve: &Curve<F>,
    d: &Polarization,
    opts: &ScanOptions,
) -> Result<StabilityVerdict<F>> {
    h0_guard(curve, d)?;
    let mut w = Vec::new();
    for row in h0_rows(curve, d, opts)? {
        if let Some(kind) = h0_kind(&row) {
            w.push(Witness {
                subcurve: row.subcurve,
                value: row.lhs.clone().expect("guarded h0 is positive"),
                lower: row.rhs.clone(),
                upper: row.rhs,
                side: Side::Upper,
                kind,
            });
        }
    }
    Ok(StabilityVerdict::from_witnesses(w))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement<F> {
    pub subcurve: Subcurve,
    pub degree: i64,
    pub lower: F,
    pub h0_lhs: Option<F>,
    pub h0_rhs: F,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport<F> {
    pub interval: Status,
    pub h0: Status,
    /// False when the degree guard for the h0 formula fails.
    pub in_regime: bool,
    pub disagreements: Vec<Disagreement<F>>,
}

/// The h0 inequality for Y is matched against the lower extreme of Y; the upper
/// extreme of Y is the lower extreme of its complement.
pub fn equivalence_report<F: Scalar>(
    curve: &Curve<F>,
    d: &Polarization,
    opts: &ScanOptions,
) -> Result<EquivalenceReport<F>> {
    let in_regime = h0_guard(curve, d).is_ok();
    let interval = slope_check_interval(curve, d, opts)?;
    let rows = h0_rows(curve, d, opts)?;
    let mut disagreements = Vec::new();
    let mut h0_witnesses = Vec::new();
    for row in rows {
        let ext = extremes(curve, d, row.subcurve)?;
        let dy: F = int(d.on(row.subcurve));
        let by_interval = match dy.cmp(&ext.lower) {
            std::cmp::Ordering::Less => Some(WitnessKind::Violated),
            std::cmp::Ordering::Equal => Some(WitnessKind::Attained),
            std::cmp::Ordering::Greater => None,
        };
        let by_h0 = h0_kind(&row);
        if let Some(k) = by_h0 {
            h0_witnesses.push(k);
        }
        if by_interval != by_h0 {
            disagreements.push(Disagreement {
                subcurve: row.subcurve,
                degree: d.on(row.subcurve),
                lower: ext.lower,
                h0_lhs: row.lhs,
                h0_rhs: row.rhs,
            });
        }
    }
    let h0 = if h0_witnesses.contains(&WitnessKind::Violated) {
        Status::Unstable
    } else if h0_witnesses.is_empty() {
        Status::Stable
    } else {
        Status::StrictlySemistable
    };
    Ok(EquivalenceReport {
        interval: interval.status,
        h0,
        in_regime,
        disagreements,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBoundConstants<F> {
    pub c: F,
    pub m: F,
    pub c_min: F,
    pub c1: F,
    pub c2: F,
    pub m1: F,
    pub m2: F,
}

pub fn degree_bound_constants<F: Scalar>(curve: &Curve<F>) -> Result<DegreeBoundConstants<F>> {
    let chi = chi_a(curve);
    if !chi.is_positive() {
        return Err(Error::NonPositiveTotalDegree);
    }
    let weights: Vec<F> = curve.marks().iter().map(|m| m.weight.clone()).collect();
    let n = weights.len();
    if n > 20 {
        return Err(Error::EnumerationCap { r: n, cap: 20 });
    }
    let mut c_min: Option<F> = None;
    for mask in 0u32..(1 << n) {
        let s = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(F::zero(), |s, i| s + weights[i].half());
        for k in 0..=2 {
            let v = s.clone() + frac(k, 2);
            if v.is_positive() && c_min.as_ref().is_none_or(|c| v < *c) {
                c_min = Some(v);
            }
        }
    }
    let c_min = c_min.expect("k = 1 term is positive");
    let nf: F = int(n as i64);
    let c1 = F::one() / (int::<F>(4) * chi.clone());
    let c2 = std::cmp::min(c_min.clone() / chi.clone(), F::one() / (int::<F>(2) * chi.clone()));
    let m1 = int::<F>(4) * chi.clone() * (int::<F>(6) + nf.half());
    let m2 = std::cmp::max(
        int::<F>(6 * curve.genus() - 6) + nf.half(),
        chi * (int::<F>(2) + nf) / (int::<F>(2) * c_min.clone()),
    );
    Ok(DegreeBoundConstants {
        c: std::cmp::min(c1.clone(), c2.clone()),
        m: std::cmp::max(m1.clone(), m2.clone()),
        c_min,
        c1,
        c2,
        m1,
        m2,
    })
}

/// Connected proper subcurves with deg Y < C deg X, skipping unmarked lines with two links.
pub fn degree_bound_violations<F: Scalar>(
    curve: &Curve<F>,
    d: &Polarization,
    c: &F,
) -> Result<Vec<Subcurve>> {
    let total: F = int(d.total());
    let mut out = Vec::new();
    for y in curve.subcurves(true, true)? {
        let is_line = y.len() == 1 && {
            let i = y.indices().next().expect("singleton");
            curve.component(i).genus == 0
                && d.degree(i) == 1
                && !curve.has_marks_on(i)
                && curve.links(y) == 2
        };
        if !is_line && int::<F>(d.on(y)) < c.clone() * total.clone() {
            out.push(y);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub extremal: bool,
    pub violating: Vec<Subcurve>,
}

/// Degree-one rational components.
pub fn e_components<F: Scalar>(curve: &Curve<F>, d: &Polarization) -> Subcurve {
    let ix: Vec<usize> = (0..curve.num_components())
        .filter(|&i| d.degree(i) == 1 && curve.component(i).genus == 0)
        .collect();
    Subcurve::from_indices(&ix)
}

pub fn is_extremal<F: Scalar>(
    curve: &Curve<F>,
    d: &Polarization,
    opts: &ScanOptions,
) -> Result<ExtremalReport> {
    let verdict = slope_check_interval(curve, d, opts)?;
    if verdict.status == Status::Unstable {
        return Err(Error::InvalidArgument("slope unstable polarization".into()));
    }
    let e = e_components(curve, d);
    let mut violating = Vec::new();
    for w in &verdict.witnesses {
        if w.side != Side::Lower || violating.contains(&w.subcurve) {
            continue;
        }
        let ok = curve.linking_node_indices(w.subcurve).into_iter().all(|k| {
            let (a, b) = curve.nodes()[k];
            e.contains(a) || e.contains(b)
        });
        if !ok {
            violating.push(w.subcurve);
        }
    }
    Ok(ExtremalReport {
        extremal: violating.is_empty(),
        violating,
    })
}
