#![allow(dead_code)]

use curvestab::curve_model::{Component, Mark, MarkSite, WeightedClass, classify_weighted};
use curvestab::{Curve, CurveModel, Polarization, Rational, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

pub fn model(genera: &[u32], nodes: &[(usize, usize)]) -> CurveModel<Rational> {
    CurveModel {
        components: genera
            .iter()
            .enumerate()
            .map(|(i, &g)| Component {
                id: format!("C{}", i + 1),
                genus: g,
            })
            .collect(),
        nodes: nodes
            .iter()
            .map(|&(a, b)| (format!("C{}", a + 1), format!("C{}", b + 1)))
            .collect(),
        sites: vec![],
        marks: vec![],
    }
}

pub fn curve(genera: &[u32], nodes: &[(usize, usize)]) -> Curve<Rational> {
    Curve::new(&model(genera, nodes)).unwrap()
}

/// One site per mark on the given components.
pub fn with_marks(mut m: CurveModel<Rational>, marks: &[(usize, Rational)]) -> CurveModel<Rational> {
    for (j, (c, w)) in marks.iter().enumerate() {
        m.sites.push(MarkSite {
            id: format!("s{}", j + 1),
            component: format!("C{}", c + 1),
        });
        m.marks.push(Mark {
            id: format!("x{}", j + 1),
            site: format!("s{}", j + 1),
            weight: w.clone(),
        });
    }
    m
}

#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_r: usize,
    pub max_genus: u32,
    pub max_extra_nodes: usize,
    pub max_marks: usize,
    /// Mark weights are multiples of `1/weight_denom`.
    pub weight_denom: i64,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_r: 5,
            max_genus: 2,
            max_extra_nodes: 2,
            max_marks: 0,
            weight_denom: 4,
        }
    }
}

/// Random connected dual graph; extra nodes may be self-pairs.
pub fn random_model(rng: &mut ChaCha8Rng, s: Shape) -> CurveModel<Rational> {
    let r = rng.gen_range(1..=s.max_r);
    let genera: Vec<u32> = (0..r).map(|_| rng.gen_range(0..=s.max_genus)).collect();
    let mut nodes: Vec<(usize, usize)> = (1..r).map(|i| (rng.gen_range(0..i), i)).collect();
    for _ in 0..rng.gen_range(0..=s.max_extra_nodes) {
        nodes.push((rng.gen_range(0..r), rng.gen_range(0..r)));
    }
    let n = rng.gen_range(0..=s.max_marks);
    let marks: Vec<(usize, Rational)> = (0..n)
        .map(|_| (rng.gen_range(0..r), q(rng.gen_range(0..=s.weight_denom), s.weight_denom)))
        .collect();
    with_marks(model(&genera, &nodes), &marks)
}

/// Random curve with positive weighted dualizing degree.
pub fn random_curve(rng: &mut ChaCha8Rng, s: Shape) -> Curve<Rational> {
    loop {
        let c = Curve::new(&random_model(rng, s)).unwrap();
        if c.omega_degree(c.full(), true).unwrap() > q(0, 1) {
            return c;
        }
    }
}

pub fn random_semistable(rng: &mut ChaCha8Rng, s: Shape) -> Curve<Rational> {
    loop {
        let c = Curve::new(&random_model(rng, s)).unwrap();
        if !matches!(classify_weighted(&c), WeightedClass::NotSemistable { .. }) {
            return c;
        }
    }
}

pub fn random_stable(rng: &mut ChaCha8Rng, s: Shape) -> Curve<Rational> {
    loop {
        let c = Curve::new(&random_model(rng, s)).unwrap();
        if classify_weighted(&c) == WeightedClass::Stable {
            return c;
        }
    }
}

/// Degrees satisfying the h0 guard, padded by up to `slack` per component.
pub fn guarded_degrees(rng: &mut ChaCha8Rng, c: &Curve<Rational>, slack: i64) -> Polarization {
    let v = (0..c.num_components())
        .map(|a| 2 * c.component(a).genus as i64 + c.valence(a) + 1 + rng.gen_range(0..=slack))
        .collect();
    Polarization::new(c, v).unwrap()
}

pub fn random_degrees(rng: &mut ChaCha8Rng, c: &Curve<Rational>, lo: i64, hi: i64) -> Polarization {
    let v = (0..c.num_components()).map(|_| rng.gen_range(lo..=hi)).collect();
    Polarization::new(c, v).unwrap()
}

/// Random non-increasing weights ending in 0.
pub fn random_rho(rng: &mut ChaCha8Rng, m: usize, max: i64) -> Vec<i64> {
    let mut rho: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=max)).collect();
    rho.sort_unstable_by(|a, b| b.cmp(a));
    rho.push(0);
    rho
}

/// Random non-decreasing vanishing profile of length `len` starting at 0.
pub fn random_staircase(rng: &mut ChaCha8Rng, len: usize, max_step: i64) -> Vec<i64> {
    let mut v = vec![0i64];
    while v.len() < len {
        let last = *v.last().unwrap();
        v.push(last + rng.gen_range(0..=max_step));
    }
    v
}
