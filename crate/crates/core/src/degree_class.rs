//! Degree class group, the admissible degree set and twisting into it.

use crate::curve_model::{Curve, Subcurve};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::slope::{extremes_any, interval_witnesses, ScanOptions, WitnessKind};

pub type Matrix = Vec<Vec<i64>>;

/// Off-diagonal: nodes between components; diagonal: minus the valence.
pub fn ell_matrix<F: Scalar>(curve: &Curve<F>) -> Matrix {
    let r = curve.num_components();
    let mut m = vec![vec![0i64; r]; r];
    for &(a, b) in curve.nodes() {
        m[a][b] += 1;
        m[b][a] += 1;
        m[a][a] -= 1;
        m[b][b] -= 1;
    }
    m
}

/// Unimodular `u`, `v` and diagonal `d` with `u * a * v = d`, each diagonal
/// entry dividing the next, zeros last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
    pub d: Vec<Vec<i128>>,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.d.len().min(self.d.first().map_or(0, |r| r.len())))
            .map(|i| self.d[i][i])
            .collect()
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

pub fn smith_normal_form(a: &Matrix) -> SmithForm {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut d: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u = identity(m);
    let mut v = identity(n);

    let row_op = |d: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for j in 0..d[src].len() {
            let x = d[src][j];
            d[dst][j] -= q * x;
        }
        for j in 0..u[src].len() {
            let x = u[src][j];
            u[dst][j] -= q * x;
        }
    };
    let col_op = |d: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for row in d.iter_mut() {
            let x = row[src];
            row[dst] -= q * x;
        }
        for row in v.iter_mut() {
            let x = row[src];
            row[dst] -= q * x;
        }
    };

    for t in 0..m.min(n) {
        let mut pivot = None;
        for i in t..m {
            for j in t..n {
                if d[i][j] != 0 && pivot.is_none_or(|(pi, pj): (usize, usize)| d[i][j].abs() < d[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                let q = d[i][t].div_euclid(d[t][t]);
                if q != 0 {
                    row_op(&mut d, &mut u, i, t, q);
                }
                if d[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                let q = d[t][j].div_euclid(d[t][t]);
                if q != 0 {
                    col_op(&mut d, &mut v, j, t, q);
                }
                if d[t][j] != 0 {
                    dirty = true;
                }
            }
            if dirty {
                // Bring the smallest leftover in row or column t to the pivot.
                let mut best = (t, t);
                for i in t + 1..m {
                    if d[i][t] != 0 && d[i][t].abs() < d[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if d[t][j] != 0 && d[t][j].abs() < d[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    d.swap(t, best.0);
                    u.swap(t, best.0);
                } else if best.1 != t {
                    for row in d.iter_mut() {
                        row.swap(t, best.1);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            let p = d[t][t];
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[i][j] % p != 0));
            match bad {
                Some(i) => row_op(&mut d, &mut u, t, i, -1),
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    SmithForm { u, v, d }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeClassGroup {
    /// Invariant factors; `0` stands for a free summand.
    pub factors: Vec<i64>,
}

impl DegreeClassGroup {
    pub fn torsion_order(&self) -> i64 {
        self.factors.iter().filter(|&&f| f != 0).product()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().filter(|&&f| f == 0).count()
    }
}

pub fn degree_class_group<F: Scalar>(curve: &Curve<F>) -> DegreeClassGroup {
    let snf = smith_normal_form(&ell_matrix(curve));
    DegreeClassGroup {
        factors: snf.diagonal().into_iter().map(|x| x as i64).collect(),
    }
}

/// Integer `b` with `L b = t` for the symmetric ell-matrix `L`, if one exists.
pub fn solve_lattice(snf: &SmithForm, t: &[i64]) -> Option<Vec<i64>> {
    let n = t.len();
    let ut: Vec<i128> = (0..n)
        .map(|i| (0..n).map(|j| snf.u[i][j] * t[j] as i128).sum())
        .collect();
    let diag = snf.diagonal();
    let mut y = vec![0i128; n];
    for i in 0..n {
        let di = diag.get(i).copied().unwrap_or(0);
        if di == 0 {
            if ut[i] != 0 {
                return None;
            }
        } else {
            if ut[i] % di != 0 {
                return None;
            }
            y[i] = ut[i] / di;
        }
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| snf.v[i][j] * y[j]).sum::<i128>() as i64)
            .collect(),
    )
}

pub fn apply_twist(l: &Matrix, v: &[i64], b: &[i64]) -> Vec<i64> {
    (0..v.len())
        .map(|j| v[j] + (0..v.len()).map(|a| b[a] * l[a][j]).sum::<i64>())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSetReport {
    pub member: bool,
    pub negative_entries: Vec<usize>,
    pub failing: Vec<Subcurve>,
}

/// Membership of `v` in the admissible set for total degree `sum(v)`.
pub fn b_set_membership<F: Scalar>(curve: &Curve<F>, v: &[i64], opts: &ScanOptions) -> Result<BSetReport> {
    let negative_entries: Vec<usize> = (0..v.len()).filter(|&i| v[i] < 0).collect();
    if !negative_entries.is_empty() {
        return Ok(BSetReport {
            member: false,
            negative_entries,
            failing: vec![],
        });
    }
    let mut failing: Vec<Subcurve> = interval_witnesses(curve, v, opts)?
        .into_iter()
        .filter(|w| w.kind == WitnessKind::Violated)
        .map(|w| w.subcurve)
        .collect();
    failing.dedup();
    Ok(BSetReport {
        member: failing.is_empty(),
        negative_entries,
        failing,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twist {
    pub twist: Vec<i64>,
    /// `twist = v + sum_a b[a] * row_a`, normalised so that `min b = 0`.
    pub coefficients: Vec<i64>,
}

/// Lexicographically smallest member of the admissible set in `v + Γ`, searched in
/// the box of componentwise extremes.
pub fn find_twist<F: Scalar>(curve: &Curve<F>, v: &[i64], opts: &ScanOptions) -> Result<Option<Twist>> {
    let r = curve.num_components();
    let total: i64 = v.iter().sum();
    let l = ell_matrix(curve);
    let snf = smith_normal_form(&l);
    let mut lo = Vec::with_capacity(r);
    let mut hi = Vec::with_capacity(r);
    if r == 1 {
        lo.push(total);
        hi.push(total);
    } else {
        for i in 0..r {
            let e = extremes_any(curve, total, Subcurve::from_indices(&[i]))?;
            lo.push(e.lower.ceil_int().max(0));
            hi.push(e.upper.floor_int());
        }
    }
    let mut cur = vec![0i64; r];
    let mut found = None;
    search(&lo, &hi, 0, total, &mut cur, &mut |w| {
        let t: Vec<i64> = w.iter().zip(v).map(|(a, b)| a - b).collect();
        let Some(b) = solve_lattice(&snf, &t) else {
            return Ok(false);
        };
        if !b_set_membership(curve, w, opts)?.member {
            return Ok(false);
        }
        let shift = b.iter().copied().min().unwrap_or(0);
        let b: Vec<i64> = b.iter().map(|x| x - shift).collect();
        debug_assert_eq!(apply_twist(&l, v, &b), w);
        found = Some(Twist {
            twist: w.to_vec(),
            coefficients: b,
        });
        Ok(true)
    })?;
    Ok(found)
}

fn search(
    lo: &[i64],
    hi: &[i64],
    i: usize,
    remaining: i64,
    cur: &mut Vec<i64>,
    visit: &mut dyn FnMut(&[i64]) -> Result<bool>,
) -> Result<bool> {
    if i == lo.len() {
        return if remaining == 0 { visit(cur) } else { Ok(false) };
    }
    let rest_lo: i64 = lo[i + 1..].iter().sum();
    let rest_hi: i64 = hi[i + 1..].iter().sum();
    let from = lo[i].max(remaining - rest_hi);
    let to = hi[i].min(remaining - rest_lo);
    for x in from..=to {
        cur[i] = x;
        if search(lo, hi, i + 1, remaining - x, cur, visit)? {
            return Ok(true);
        }
    }
    Ok(false)
}
