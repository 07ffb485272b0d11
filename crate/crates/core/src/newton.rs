//! Newton polygons of (vanishing order, weight) point sets.
//!
//! The region is the part of the strip `[0, w] x [0, inf)` lying on or below the
//! lower-left convex envelope of `Γ + R²≥0`. When `Γ` has no point on the y-axis the
//! region would be unbounded, so the point `(0, max y)` is added first.

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    pub points: Vec<(i64, i64)>,
    pub width: i64,
}

impl GammaSet {
    pub fn new(points: Vec<(i64, i64)>, width: i64) -> Self {
        GammaSet { points, width }
    }

    /// Width set to the largest x among the points of minimum weight.
    pub fn with_derived_width(points: Vec<(i64, i64)>) -> Result<Self> {
        let ymin = points.iter().map(|p| p.1).min().ok_or(Error::EmptyGamma)?;
        let width = points
            .iter()
            .filter(|p| p.1 == ymin)
            .map(|p| p.0)
            .max()
            .expect("nonempty");
        Ok(GammaSet { points, width })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon<F> {
    /// Counterclockwise from the origin; empty when the area is zero.
    pub vertices: Vec<(F, F)>,
    pub area: F,
    envelope: Vec<(i64, i64)>,
    width: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointKind {
    Smooth,
    NodeBranch(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointProfile {
    pub id: String,
    pub component: usize,
    pub kind: PointKind,
    /// Indices of the marks sitting at this point.
    pub marks: Vec<usize>,
    /// Vanishing orders at indices `0..=hbar` of the component.
    pub vanish: Vec<i64>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Vertices of the lower-left envelope, from the y-axis to the leftmost lowest point.
pub fn envelope(points: &[(i64, i64)]) -> Result<Vec<(i64, i64)>> {
    if points.is_empty() {
        return Err(Error::EmptyGamma);
    }
    if points.iter().any(|p| p.0 < 0 || p.1 < 0) {
        return Err(Error::InvalidArgument("negative coordinate in point set".into()));
    }
    let mut pts = points.to_vec();
    if !pts.iter().any(|p| p.0 == 0) {
        let top = pts.iter().map(|p| p.1).max().expect("nonempty");
        pts.push((0, top));
    }
    pts.sort();
    let mut pareto: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        if pareto.last().is_none_or(|q| p.1 < q.1) {
            pareto.push(p);
        }
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pareto {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    Ok(hull)
}

impl<F: Scalar> NewtonPolygon<F> {
    /// Envelope height at `x >= 0`.
    pub fn height(&self, x: &F) -> F {
        height_on(&self.envelope, x)
    }

    pub fn width(&self) -> i64 {
        self.width
    }

    pub fn envelope(&self) -> &[(i64, i64)] {
        &self.envelope
    }

    /// Area of the part of the region with `x0 <= x <= x1`.
    pub fn area_between(&self, x0: &F, x1: &F) -> F {
        let w: F = int(self.width);
        let a = std::cmp::max(x0.clone(), F::zero());
        let b = std::cmp::min(x1.clone(), w);
        if a >= b {
            return F::zero();
        }
        let mut cuts = vec![a.clone(), b.clone()];
        for &(x, _) in &self.envelope {
            let x: F = int(x);
            if x > a && x < b {
                cuts.push(x);
            }
        }
        cuts.sort();
        cuts.windows(2)
            .map(|s| {
                let (l, r) = (&s[0], &s[1]);
                (self.height(l) + self.height(r)) * (r.clone() - l.clone()) / int(2)
            })
            .fold(F::zero(), |s, t| s + t)
    }
}

fn height_on<F: Scalar>(env: &[(i64, i64)], x: &F) -> F {
    for s in env.windows(2) {
        let (p, q) = (s[0], s[1]);
        let (px, qx): (F, F) = (int(p.0), int(q.0));
        if *x <= qx {
            let t = (x.clone() - px.clone()) / (qx - px);
            return int::<F>(p.1) + t * int(q.1 - p.1);
        }
    }
    int(env.last().expect("nonempty envelope").1)
}

pub fn polygon_from_points<F: Scalar>(gamma: &GammaSet) -> Result<NewtonPolygon<F>> {
    let env = envelope(&gamma.points)?;
    if gamma.width < 0 {
        return Err(Error::InvalidArgument("negative width".into()));
    }
    let mut poly = NewtonPolygon {
        vertices: Vec::new(),
        area: F::zero(),
        envelope: env,
        width: gamma.width,
    };
    let w: F = int(gamma.width);
    poly.area = poly.area_between(&F::zero(), &w);
    if poly.area.is_zero() {
        return Ok(poly);
    }
    let mut v: Vec<(F, F)> = vec![(F::zero(), F::zero()), (w.clone(), F::zero())];
    v.push((w.clone(), poly.height(&w)));
    for &(x, y) in poly.envelope.iter().rev() {
        if int::<F>(x) < w {
            v.push((int(x), int(y)));
        }
    }
    v.dedup();
    if v.len() > 1 && v.first() == v.last() {
        v.pop();
    }
    poly.vertices = v;
    Ok(poly)
}

/// Shoelace area of a simple polygon.
pub fn area<F: Scalar>(vertices: &[(F, F)]) -> F {
    let n = vertices.len();
    if n < 3 {
        return F::zero();
    }
    let twice = (0..n)
        .map(|i| {
            let (x0, y0) = &vertices[i];
            let (x1, y1) = &vertices[(i + 1) % n];
            x0.clone() * y1.clone() - x1.clone() * y0.clone()
        })
        .fold(F::zero(), |s, t| s + t);
    twice.abs() / int(2)
}

/// Lattice points of the `k`-dilate of the closed region, boundary included.
pub fn lattice_count_oracle<F: Scalar>(gamma: &GammaSet, k: i64) -> Result<i64> {
    if k < 0 {
        return Err(Error::InvalidArgument("negative dilation".into()));
    }
    let poly: NewtonPolygon<F> = polygon_from_points(gamma)?;
    if k == 0 {
        return Ok(1);
    }
    let kf: F = int(k);
    Ok((0..=k * gamma.width)
        .map(|x| (kf.clone() * poly.height(&(int::<F>(x) / kf.clone()))).floor_int() + 1)
        .sum())
}

pub fn check_weights(rho: &[i64]) -> Result<()> {
    if rho.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::UnsortedWeights);
    }
    Ok(())
}

pub fn profile_gamma(vanish: &[i64], rho: &[i64], hbar: usize) -> Result<GammaSet> {
    if vanish.is_empty() {
        return Err(Error::InvalidArgument("empty vanishing profile".into()));
    }
    if vanish.len() != hbar + 1 || rho.len() <= hbar {
        return Err(Error::InvalidArgument(format!(
            "profile has {} entries, expected {}",
            vanish.len(),
            hbar + 1
        )));
    }
    let points = (0..=hbar).map(|i| (vanish[i], rho[i])).collect();
    Ok(GammaSet::new(points, vanish[hbar]))
}

/// `2 |Δ_q|`, the local multiplicity at one support point.
pub fn point_contribution<F: Scalar>(vanish: &[i64], rho: &[i64], hbar: usize) -> Result<F> {
    check_weights(rho)?;
    let gamma = profile_gamma(vanish, rho, hbar)?;
    let poly: NewtonPolygon<F> = polygon_from_points(&gamma)?;
    Ok(poly.area * int(2))
}
