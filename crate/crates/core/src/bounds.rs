//! Staircase data and the bound functionals built on it.

use crate::chow_weight::{marked_weight, OnePSDatum};
use crate::curve_model::{Curve, Polarization};
use crate::error::{Error, Result};
use crate::newton::{polygon_from_points, profile_gamma, NewtonPolygon, PointKind};
use crate::scalar::{frac, int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseReport {
    pub ok: bool,
    /// `(profile id, index)` where the order drops from `index` to `index + 1`.
    pub violations: Vec<(String, usize)>,
}

pub fn is_staircase(datum: &OnePSDatum) -> StaircaseReport {
    let mut violations = Vec::new();
    for p in &datum.profiles {
        for i in 0..p.vanish.len().saturating_sub(1) {
            if p.vanish[i] > p.vanish[i + 1] {
                violations.push((p.id.clone(), i));
            }
        }
    }
    StaircaseReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// `v_{i+1} - v_i` for `i < hbar`.
pub fn profile_increments(vanish: &[i64]) -> Vec<i64> {
    vanish.windows(2).map(|w| w[1] - w[0]).collect()
}

pub fn initial_index(vanish: &[i64]) -> Option<usize> {
    profile_increments(vanish).iter().position(|&x| x > 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentStair {
    pub component: usize,
    pub hbar: usize,
    /// Increment degree at each index `0..=m`; zero from `hbar` on.
    pub delta: Vec<i64>,
    /// Width at each index `0..=hbar`.
    pub widths: Vec<i64>,
    /// Indices with a positive increment, plus `hbar`.
    pub index_set: Vec<usize>,
    /// `(profile position in the datum, initial index)`.
    pub initial: Vec<(usize, Option<usize>)>,
}

fn stairs_unchecked(datum: &OnePSDatum) -> Vec<ComponentStair> {
    (0..datum.hbar.len())
        .map(|a| {
            let h = datum.hbar[a];
            let mut delta = vec![0i64; datum.m + 1];
            let mut widths = vec![0i64; h + 1];
            let mut initial = Vec::new();
            for (pi, p) in datum.profiles.iter().enumerate() {
                if p.component != a {
                    continue;
                }
                for (i, x) in profile_increments(&p.vanish).into_iter().enumerate() {
                    delta[i] += x;
                }
                for (i, &v) in p.vanish.iter().enumerate().take(h + 1) {
                    widths[i] += v;
                }
                initial.push((pi, initial_index(&p.vanish)));
            }
            let mut index_set: Vec<usize> = (0..h).filter(|&i| delta[i] > 0).collect();
            index_set.push(h);
            ComponentStair {
                component: a,
                hbar: h,
                delta,
                widths,
                index_set,
                initial,
            }
        })
        .collect()
}

pub fn increments_from_profiles(datum: &OnePSDatum) -> Result<Vec<ComponentStair>> {
    if let Some((profile, index)) = is_staircase(datum).violations.into_iter().next() {
        return Err(Error::NotStaircase { profile, index });
    }
    Ok(stairs_unchecked(datum))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrapezoidReport<F> {
    pub rhs: F,
    pub exact: F,
    pub ok: bool,
    /// The `l = 0`, `k = hbar` form `sum δ ρ̄ - ρ̄_{i0}/2`.
    pub half_rho: F,
}

pub fn trapezoid_bound<F: Scalar>(
    vanish: &[i64],
    rho: &[i64],
    hbar: usize,
    l: usize,
    k: usize,
) -> Result<TrapezoidReport<F>> {
    if !(l <= k && k <= hbar) {
        return Err(Error::InvalidArgument(format!("index range {l}..{k} outside 0..={hbar}")));
    }
    let gamma = profile_gamma(vanish, rho, hbar)?;
    if let Some(i) = (0..hbar).find(|&i| vanish[i] > vanish[i + 1]) {
        return Err(Error::NotStaircase {
            profile: "profile".into(),
            index: i,
        });
    }
    let bar = |i: usize| rho[i] - rho[hbar];
    let inc = profile_increments(vanish);
    let hits: Vec<usize> = (l..k).filter(|&i| inc[i] > 0).collect();
    let (lo, hi) = match (hits.first(), hits.last()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => (l, l),
    };
    let sum: i64 = hits.iter().map(|&i| inc[i] * bar(i)).sum();
    let rhs = int::<F>(sum) - frac(bar(lo) + bar(hi), 2);

    let poly: NewtonPolygon<F> = polygon_from_points(&gamma)?;
    let (xl, xk) = (vanish[l], vanish[k]);
    let exact = poly.area_between(&int(xl), &int(xk)) - int::<F>(rho[hbar] * (xk - xl));

    let all: Vec<usize> = (0..hbar).filter(|&i| inc[i] > 0).collect();
    let half_rho = match all.first() {
        Some(&i0) => {
            int::<F>(all.iter().map(|&i| inc[i] * bar(i)).sum()) - frac(bar(i0), 2)
        }
        None => F::zero(),
    };
    Ok(TrapezoidReport {
        ok: exact <= rhs,
        rhs,
        exact,
        half_rho,
    })
}

/// Area under the polyline through the lowest point of each column, continued
/// flat to the width. Bounds the Newton polygon area from above.
pub fn interpolation_area<F: Scalar>(points: &[(i64, i64)], width: i64) -> Result<F> {
    let chain = pareto_chain(points)?;
    let seg = |x0: i64, y0: i64, x1: i64, y1: i64| -> F {
        let (a, b) = (x0.min(width), x1.min(width));
        if a >= b {
            return F::zero();
        }
        let at = |x: i64| -> F { int::<F>(y0) + frac::<F>((x - x0) * (y1 - y0), x1 - x0) };
        (at(a) + at(b)) * int(b - a) / int(2)
    };
    let mut total = F::zero();
    for w in chain.windows(2) {
        total = total + seg(w[0].0, w[0].1, w[1].0, w[1].1);
    }
    let last = *chain.last().expect("nonempty");
    if width > last.0 {
        total = total + int::<F>(last.1 * (width - last.0));
    }
    Ok(total)
}

fn pareto_chain(points: &[(i64, i64)]) -> Result<Vec<(i64, i64)>> {
    if points.is_empty() {
        return Err(Error::EmptyGamma);
    }
    let mut pts = points.to_vec();
    if !pts.iter().any(|p| p.0 == 0) {
        let top = pts.iter().map(|p| p.1).max().expect("nonempty");
        pts.push((0, top));
    }
    pts.sort();
    let mut out: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        if out.last().is_none_or(|q| p.1 < q.1) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Whether the lowest-point polyline turns only counterclockwise.
pub fn in_convex_position(points: &[(i64, i64)]) -> Result<bool> {
    let c = pareto_chain(points)?;
    Ok(c.windows(3).all(|w| {
        let (o, a, b) = (w[0], w[1], w[2]);
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0) >= 0
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryIndexReport {
    pub primary: Vec<usize>,
    pub j_bar: Option<usize>,
    pub w_pri: Option<i64>,
    /// Whether `0 <= d - w_pri <= 2(g + ℓ + 1)` holds.
    pub width_bound_ok: bool,
}

pub fn primary_indices<F: Scalar>(
    stair: &ComponentStair,
    curve: &Curve<F>,
    d: &Polarization,
) -> PrimaryIndexReport {
    let a = stair.component;
    let deg = d.degree(a);
    let g = curve.component(a).genus as i64;
    let links = curve.valence(a);
    let primary: Vec<usize> = if deg == 1 {
        stair.index_set.first().copied().into_iter().collect()
    } else {
        let cap = deg - 2 * g - links - 1;
        stair
            .index_set
            .iter()
            .copied()
            .filter(|&i| i < stair.hbar && stair.widths[i + 1] <= cap)
            .collect()
    };
    let j_bar = primary.last().copied();
    let w_pri = j_bar.map(|j| stair.widths.get(j + 1).copied().unwrap_or(deg));
    let width_bound_ok = match w_pri {
        Some(w) => 0 <= deg - w && deg - w <= 2 * (g + links + 1),
        None => false,
    };
    PrimaryIndexReport {
        primary,
        j_bar,
        w_pri,
        width_bound_ok,
    }
}

fn check_epsilon<F: Scalar>(eps: &F) -> Result<()> {
    if eps.is_positive() && *eps <= F::one() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("epsilon {eps} outside (0, 1]")))
    }
}

pub fn e_alpha<F: Scalar>(
    datum: &OnePSDatum,
    stair: &ComponentStair,
    curve: &Curve<F>,
    d: &Polarization,
    eps: &F,
) -> Result<F> {
    check_epsilon(eps)?;
    let a = stair.component;
    let deg = d.degree(a);
    let rho = &datum.rho;
    let top = rho[stair.hbar];
    let bar = |i: usize| rho[i] - top;
    if deg == 1 && !curve.has_marks_on(a) {
        let i0 = stair.index_set[0];
        return Ok(int(stair.delta[i0] * bar(i0) + 2 * top));
    }
    let pri = primary_indices(stair, curve, d);
    let degf: F = int(deg);
    let two_eps = int::<F>(2) * eps.clone() / degf;
    let lead: i64 = pri.primary.iter().map(|&i| stair.delta[i] * bar(i)).sum();
    let special: i64 = stair
        .initial
        .iter()
        .filter_map(|&(pi, i0)| {
            let p = &datum.profiles[pi];
            let special = matches!(p.kind, PointKind::NodeBranch(_)) || !p.marks.is_empty();
            if special {
                i0.map(bar)
            } else {
                None
            }
        })
        .sum();
    Ok((int::<F>(2) + two_eps.clone()) * int(lead) - (F::one() + two_eps) * int(special)
        + int(2 * deg * top))
}

/// Degree above which the local multiplicity is bounded by `E_α`.
pub fn e_alpha_degree_threshold<F: Scalar>(genus: i64, links: i64, eps: &F) -> Result<F> {
    check_epsilon(eps)?;
    let s = genus + links + 1;
    Ok(int::<F>((1 << 14) * s * s) / (eps.clone() * eps.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaHat<F> {
    pub e_alpha: Vec<F>,
    pub e_x: F,
    pub omega_hat: F,
    pub omega_hat_a: F,
}

pub fn omega_hat<F: Scalar>(datum: &OnePSDatum, curve: &Curve<F>, d: &Polarization, eps: &F) -> Result<OmegaHat<F>> {
    datum.validate(curve, d)?;
    let stairs = increments_from_profiles(datum)?;
    let e_alpha = stairs
        .iter()
        .map(|s| e_alpha(datum, s, curve, d, eps))
        .collect::<Result<Vec<F>>>()?;
    let e_x = e_alpha.iter().fold(F::zero(), |s, e| s + e.clone());
    let lead: F = frac::<F>(2 * d.total(), datum.m as i64 + 1) * int(datum.sum_rho());
    let omega_hat = lead - e_x.clone();
    Ok(OmegaHat {
        omega_hat_a: omega_hat.clone() + marked_weight(datum, curve),
        e_alpha,
        e_x,
        omega_hat,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedWeights {
    pub values: Vec<i64>,
    /// Indices outside every component's index set, filled from the component
    /// with the largest top index.
    pub unassigned: Vec<usize>,
}

pub fn shifted_weights(datum: &OnePSDatum) -> ShiftedWeights {
    let stairs = stairs_unchecked(datum);
    let fallback = (0..datum.hbar.len()).max_by_key(|&a| (datum.hbar[a], std::cmp::Reverse(a)));
    let mut values = Vec::with_capacity(datum.m + 1);
    let mut unassigned = Vec::new();
    for i in 0..=datum.m {
        let best = stairs
            .iter()
            .filter(|s| s.index_set.contains(&i))
            .map(|s| datum.rho[i] - datum.rho[s.hbar])
            .min();
        match best {
            Some(v) => values.push(v),
            None => {
                unassigned.push(i);
                let base = fallback.map_or(0, |a| datum.rho[datum.hbar[a]]);
                values.push((datum.rho[i] - base).max(0));
            }
        }
    }
    ShiftedWeights { values, unassigned }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    NonNegative,
    NonPositive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeFailure {
    /// The functional fails at the zero weight vector.
    Apex,
    /// Fails on the edge with this many leading ones.
    Edge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCheck {
    pub ok: bool,
    pub failing: Option<EdgeFailure>,
}

pub fn edge_vector(m: usize, ones: usize) -> Vec<i64> {
    (0..=m).map(|i| i64::from(i < ones)).collect()
}

/// Checks an affine functional on the cone `ρ_0 >= ... >= ρ_m = 0` through its
/// value at the apex and its increments along the edges `(1^{m0}, 0, ...)`.
pub fn verify_on_edges<F: Scalar>(
    f: &dyn Fn(&[i64]) -> F,
    m: usize,
    m0_range: std::ops::RangeInclusive<usize>,
    sense: Sense,
) -> EdgeCheck {
    let good = |x: &F| match sense {
        Sense::NonNegative => !x.is_negative(),
        Sense::NonPositive => !x.is_positive(),
    };
    let apex = f(&vec![0; m + 1]);
    if !good(&apex) {
        return EdgeCheck {
            ok: false,
            failing: Some(EdgeFailure::Apex),
        };
    }
    for m0 in m0_range {
        if m0 == 0 || m0 > m {
            continue;
        }
        if !good(&(f(&edge_vector(m, m0)) - apex.clone())) {
            return EdgeCheck {
                ok: false,
                failing: Some(EdgeFailure::Edge(m0)),
            };
        }
    }
    EdgeCheck {
        ok: true,
        failing: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::PointProfile;
    use crate::Rational;

    fn datum(profiles: &[&[i64]], rho: Vec<i64>) -> OnePSDatum {
        let h = profiles[0].len() - 1;
        OnePSDatum {
            m: rho.len() - 1,
            rho,
            hbar: vec![h],
            profiles: profiles
                .iter()
                .enumerate()
                .map(|(i, v)| PointProfile {
                    id: format!("q{i}"),
                    component: 0,
                    kind: PointKind::Smooth,
                    marks: vec![],
                    vanish: v.to_vec(),
                })
                .collect(),
            imax: vec![],
        }
    }

    #[test]
    fn staircase_checks() {
        let bad = datum(&[&[0, 2, 1]], vec![2, 1, 0]);
        let rep = is_staircase(&bad);
        assert!(!rep.ok);
        assert_eq!(rep.violations, vec![("q0".to_string(), 1)]);
        assert!(increments_from_profiles(&bad).is_err());
        let mut empty = bad.clone();
        empty.profiles.clear();
        assert!(is_staircase(&empty).ok);
    }

    #[test]
    fn increments() {
        let s = &increments_from_profiles(&datum(&[&[0, 1, 2]], vec![2, 1, 0])).unwrap()[0];
        assert_eq!(&s.delta[..2], &[1, 1]);
        let s = &increments_from_profiles(&datum(&[&[0, 0, 3]], vec![2, 1, 0])).unwrap()[0];
        assert_eq!(&s.delta[..2], &[0, 3]);
        let s = &increments_from_profiles(&datum(&[&[0, 1], &[0, 2]], vec![1, 0])).unwrap()[0];
        assert_eq!(s.delta[0], 3);
        assert_eq!(s.widths[1], 3);
    }

    #[test]
    fn trapezoid_examples() {
        let r: TrapezoidReport<Rational> = trapezoid_bound(&[0, 1], &[1, 0], 1, 0, 1).unwrap();
        assert_eq!(r.exact, frac(1, 2));
        assert_eq!(r.rhs, int(0));
        assert_eq!(r.half_rho, frac(1, 2));
        let r: TrapezoidReport<Rational> = trapezoid_bound(&[0, 1, 2], &[3, 1, 0], 2, 0, 2).unwrap();
        assert_eq!(r.rhs, int(2));
        assert_eq!(r.exact, frac(5, 2));
        assert!(!r.ok);
        assert_eq!(r.half_rho, frac(5, 2));
        let r: TrapezoidReport<Rational> = trapezoid_bound(&[5, 5, 5], &[2, 2, 2], 2, 0, 2).unwrap();
        assert_eq!((r.rhs, r.exact), (int(0), int(0)));
        assert!(trapezoid_bound::<Rational>(&[0, 1], &[1, 0], 1, 1, 0).is_err());
    }

    #[test]
    fn interpolation_bounds_hull() {
        let pts = [(0, 3), (1, 2), (2, 0)];
        let t: Rational = interpolation_area(&pts, 2).unwrap();
        let p: NewtonPolygon<Rational> =
            polygon_from_points(&crate::newton::GammaSet::new(pts.to_vec(), 2)).unwrap();
        assert_eq!(t, frac(7, 2));
        assert_eq!(p.area, int(3));
        assert!(!in_convex_position(&pts).unwrap());
        assert!(in_convex_position(&[(0, 3), (1, 1), (2, 0)]).unwrap());
    }

    #[test]
    fn shifted_single_component() {
        let d = datum(&[&[0, 1, 2]], vec![3, 1, 0]);
        let s = shifted_weights(&d);
        assert_eq!(s.values, vec![3, 1, 0]);
        assert!(s.unassigned.is_empty());
        let flat = datum(&[&[0, 1, 2]], vec![0, 0, 0]);
        assert_eq!(shifted_weights(&flat).values, vec![0, 0, 0]);
    }

    #[test]
    fn edges() {
        let m = 4;
        let f = |r: &[i64]| -> Rational { int(r.iter().sum::<i64>() - r[0] * (m as i64 + 1)) };
        let c = verify_on_edges(&f, m, 1..=m, Sense::NonNegative);
        assert_eq!(c.failing, Some(EdgeFailure::Edge(1)));
        let z = |_: &[i64]| -> Rational { int(0) };
        assert!(verify_on_edges(&z, m, 1..=m, Sense::NonNegative).ok);
        let f0 = |r: &[i64]| -> Rational { int(r.iter().sum::<i64>() - r[0]) };
        let m = 0;
        assert!(verify_on_edges(&f0, m, 1..=m, Sense::NonNegative).ok);
    }

    #[test]
    fn epsilon_range() {
        let d = datum(&[&[0, 1]], vec![1, 0]);
        let s = &increments_from_profiles(&d).unwrap()[0];
        let c: Curve<Rational> = Curve::new(&crate::curve_model::CurveModel {
            components: vec![crate::curve_model::Component { id: "C".into(), genus: 2 }],
            nodes: vec![],
            sites: vec![],
            marks: vec![],
        })
        .unwrap();
        let pol = Polarization::new(&c, vec![1]).unwrap();
        assert!(e_alpha(&d, s, &c, &pol, &int(0)).is_err());
        assert!(e_alpha(&d, s, &c, &pol, &int(2)).is_err());
        assert_eq!(e_alpha(&d, s, &c, &pol, &frac(1, 2)).unwrap(), int(1));
    }
}
