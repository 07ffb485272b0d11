//! Dual graphs of weighted pointed nodal curves.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// Hard ceiling on the number of components any subset scan will accept.
pub const MAX_COMPONENTS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub id: String,
    pub genus: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkSite {
    pub id: String,
    pub component: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mark<F> {
    pub id: String,
    pub site: String,
    pub weight: F,
}

/// Raw curve description, ids unresolved. `nodes` may contain self-pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveModel<F> {
    pub components: Vec<Component>,
    pub nodes: Vec<(String, String)>,
    pub sites: Vec<MarkSite>,
    pub marks: Vec<Mark<F>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub entity: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("{}: {}", v.entity, v.message))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Mark resolved to its component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkInfo<F> {
    pub id: String,
    pub site: String,
    pub component: usize,
    pub weight: F,
}

/// Validated curve. Components are indexed in input order; self-nodes are folded
/// into the genus, so `nodes` holds cross-nodes only. Node `k` is named `n{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve<F> {
    components: Vec<Component>,
    nodes: Vec<(usize, usize)>,
    sites: Vec<MarkSite>,
    site_component: Vec<usize>,
    marks: Vec<MarkInfo<F>>,
    index: HashMap<String, usize>,
}

/// Set of components, as a bitmask over component indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subcurve(pub u32);

impl Subcurve {
    pub fn from_indices(ix: &[usize]) -> Self {
        Subcurve(ix.iter().fold(0u32, |m, &i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn complement(self, r: usize) -> Self {
        Subcurve(!self.0 & full_mask(r))
    }

    pub fn union(self, other: Self) -> Self {
        Subcurve(self.0 | other.0)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }
}

fn full_mask(r: usize) -> u32 {
    if r >= 32 {
        u32::MAX
    } else {
        (1u32 << r) - 1
    }
}

/// Integer degree per component, in component order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    degrees: Vec<i64>,
}

impl Polarization {
    pub fn new<F: Scalar>(curve: &Curve<F>, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != curve.num_components() {
            return Err(Error::Polarization(format!(
                "expected {} degrees, got {}",
                curve.num_components(),
                degrees.len()
            )));
        }
        if let Some(i) = degrees.iter().position(|&d| d < 1) {
            return Err(Error::Polarization(format!(
                "non-ample degree {} on `{}`",
                degrees[i],
                curve.component(i).id
            )));
        }
        Ok(Polarization { degrees })
    }

    pub fn from_map<F: Scalar>(curve: &Curve<F>, map: &BTreeMap<String, i64>) -> Result<Self> {
        for k in map.keys() {
            curve.component_index(k)?;
        }
        let degrees = curve
            .components()
            .iter()
            .map(|c| {
                map.get(&c.id).copied().ok_or_else(|| {
                    Error::Polarization(format!("missing degree for `{}`", c.id))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(curve, degrees)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn total(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn on(&self, y: Subcurve) -> i64 {
        y.indices().map(|i| self.degrees[i]).sum()
    }
}

pub fn degree_on(v: &[i64], y: Subcurve) -> i64 {
    y.indices().map(|i| v[i]).sum()
}

pub fn validate_curve<F: Scalar>(model: &CurveModel<F>) -> ValidationReport {
    let mut out = Vec::new();
    let mut push = |entity: &str, message: String| {
        out.push(Violation {
            entity: entity.to_string(),
            message,
        })
    };

    let mut comp_ix: HashMap<&str, usize> = HashMap::new();
    for (i, c) in model.components.iter().enumerate() {
        if comp_ix.insert(c.id.as_str(), i).is_some() {
            push(&c.id, "duplicate component id".into());
        }
    }
    if model.components.is_empty() {
        push("components", "no components".into());
    }
    if model.components.len() > 32 {
        push("components", format!("{} components, at most 32 supported", model.components.len()));
    }

    let r = model.components.len();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (k, (a, b)) in model.nodes.iter().enumerate() {
        let ia = comp_ix.get(a.as_str()).copied();
        let ib = comp_ix.get(b.as_str()).copied();
        for (id, ix) in [(a, ia), (b, ib)] {
            if ix.is_none() {
                push(&format!("nodes[{k}]"), format!("unknown component `{id}`"));
            }
        }
        if let (Some(ia), Some(ib)) = (ia, ib) {
            let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
            parent[ra] = rb;
        }
    }
    if r > 1 {
        let root = find(&mut parent, 0);
        if (1..r).any(|i| find(&mut parent, i) != root) {
            push("nodes", "dual graph disconnected".into());
        }
    }

    let mut site_ix: HashMap<&str, usize> = HashMap::new();
    for (i, s) in model.sites.iter().enumerate() {
        if site_ix.insert(s.id.as_str(), i).is_some() {
            push(&s.id, "duplicate site id".into());
        }
        if !comp_ix.contains_key(s.component.as_str()) {
            push(&s.id, format!("unknown component `{}`", s.component));
        }
    }

    let mut load: Vec<F> = vec![F::zero(); model.sites.len()];
    let mut mark_ids: HashMap<&str, ()> = HashMap::new();
    for m in &model.marks {
        if mark_ids.insert(m.id.as_str(), ()).is_some() {
            push(&m.id, "duplicate mark id".into());
        }
        if m.weight.is_negative() {
            push(&m.id, format!("negative weight {}", m.weight));
        }
        match site_ix.get(m.site.as_str()) {
            Some(&s) => load[s] = load[s].clone() + m.weight.clone(),
            None => push(&m.id, format!("unknown site `{}`", m.site)),
        }
    }
    for (s, total) in model.sites.iter().zip(&load) {
        if *total > F::one() {
            push(&s.id, format!("site overweight {total} > 1"));
        }
    }

    ValidationReport { violations: out }
}

impl<F: Scalar> Curve<F> {
    pub fn new(model: &CurveModel<F>) -> Result<Self> {
        let report = validate_curve(model);
        if !report.is_ok() {
            return Err(Error::InvalidCurve(report.to_string()));
        }
        let mut components = model.components.clone();
        let index: HashMap<String, usize> = components
            .iter()
            .enumerate()
            .map(|(i, c)| (c.id.clone(), i))
            .collect();
        let mut nodes = Vec::new();
        for (a, b) in &model.nodes {
            let (ia, ib) = (index[a], index[b]);
            if ia == ib {
                components[ia].genus += 1;
            } else {
                nodes.push((ia.min(ib), ia.max(ib)));
            }
        }
        let site_index: HashMap<&str, usize> = model
            .sites
            .iter()
            .enumerate()
            .map(|(i, s)| (s.id.as_str(), i))
            .collect();
        let site_component: Vec<usize> =
            model.sites.iter().map(|s| index[&s.component]).collect();
        let marks = model
            .marks
            .iter()
            .map(|m| MarkInfo {
                id: m.id.clone(),
                site: m.site.clone(),
                component: site_component[site_index[m.site.as_str()]],
                weight: m.weight.clone(),
            })
            .collect();
        Ok(Curve {
            components,
            nodes,
            sites: model.sites.clone(),
            site_component,
            marks,
            index,
        })
    }

    /// Model with folded genera and no self-pairs.
    pub fn to_model(&self) -> CurveModel<F> {
        CurveModel {
            components: self.components.clone(),
            nodes: self
                .nodes
                .iter()
                .map(|&(a, b)| {
                    (
                        self.components[a].id.clone(),
                        self.components[b].id.clone(),
                    )
                })
                .collect(),
            sites: self.sites.clone(),
            marks: self
                .marks
                .iter()
                .map(|m| Mark {
                    id: m.id.clone(),
                    site: m.site.clone(),
                    weight: m.weight.clone(),
                })
                .collect(),
        }
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Component {
        &self.components[i]
    }

    pub fn component_index(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownComponent(id.to_string()))
    }

    pub fn nodes(&self) -> &[(usize, usize)] {
        &self.nodes
    }

    pub fn node_id(k: usize) -> String {
        format!("n{}", k + 1)
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        let k: usize = id.strip_prefix('n')?.parse().ok()?;
        (k >= 1 && k <= self.nodes.len()).then(|| k - 1)
    }

    pub fn marks(&self) -> &[MarkInfo<F>] {
        &self.marks
    }

    pub fn sites(&self) -> &[MarkSite] {
        &self.sites
    }

    pub fn site_component(&self, s: usize) -> usize {
        self.site_component[s]
    }

    pub fn full(&self) -> Subcurve {
        Subcurve(full_mask(self.num_components()))
    }

    pub fn subcurve(&self, ids: &[&str]) -> Result<Subcurve> {
        let ix = ids
            .iter()
            .map(|id| self.component_index(id))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subcurve::from_indices(&ix))
    }

    pub fn subcurve_ids(&self, y: Subcurve) -> Vec<String> {
        y.indices().map(|i| self.components[i].id.clone()).collect()
    }

    pub fn genus(&self) -> i64 {
        self.arithmetic_genus(self.full()).expect("nonempty")
    }

    /// Cross-node branches on component `i`.
    pub fn valence(&self, i: usize) -> i64 {
        self.nodes.iter().filter(|&&(a, b)| a == i || b == i).count() as i64
    }

    /// Cross-nodes between distinct components `i` and `j`.
    pub fn nodes_between(&self, i: usize, j: usize) -> i64 {
        let (a, b) = (i.min(j), i.max(j));
        self.nodes.iter().filter(|&&n| n == (a, b)).count() as i64
    }

    fn check_nonempty(&self, y: Subcurve) -> Result<()> {
        if y.is_empty() {
            Err(Error::EmptySubcurve)
        } else {
            Ok(())
        }
    }

    pub fn check_proper(&self, y: Subcurve) -> Result<()> {
        self.check_nonempty(y)?;
        if y == self.full() {
            Err(Error::WholeCurve)
        } else {
            Ok(())
        }
    }

    pub fn internal_nodes(&self, y: Subcurve) -> i64 {
        self.nodes
            .iter()
            .filter(|&&(a, b)| y.contains(a) && y.contains(b))
            .count() as i64
    }

    pub fn arithmetic_genus(&self, y: Subcurve) -> Result<i64> {
        self.check_nonempty(y)?;
        let chi: i64 = y
            .indices()
            .map(|i| 1 - self.components[i].genus as i64)
            .sum::<i64>()
            - self.internal_nodes(y);
        Ok(1 - chi)
    }

    /// Linking count without the properness check; zero on the whole curve.
    pub fn links(&self, y: Subcurve) -> i64 {
        self.nodes
            .iter()
            .filter(|&&(a, b)| y.contains(a) != y.contains(b))
            .count() as i64
    }

    pub fn linking_nodes(&self, y: Subcurve) -> Result<i64> {
        self.check_proper(y)?;
        Ok(self.links(y))
    }

    /// Indices of cross-nodes with exactly one endpoint in `y`.
    pub fn linking_node_indices(&self, y: Subcurve) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&k| {
                let (a, b) = self.nodes[k];
                y.contains(a) != y.contains(b)
            })
            .collect()
    }

    pub fn mark_weight_on(&self, y: Subcurve) -> F {
        self.marks
            .iter()
            .filter(|m| y.contains(m.component))
            .fold(F::zero(), |s, m| s + m.weight.clone())
    }

    pub fn total_mark_weight(&self) -> F {
        self.mark_weight_on(self.full())
    }

    pub fn omega_degree_component(&self, i: usize, weighted: bool) -> F {
        let base = 2 * self.components[i].genus as i64 - 2 + self.valence(i);
        let mut out: F = int(base);
        if weighted {
            out = out + self.mark_weight_on(Subcurve::from_indices(&[i]));
        }
        out
    }

    pub fn omega_degree(&self, y: Subcurve, weighted: bool) -> Result<F> {
        self.check_nonempty(y)?;
        Ok(y
            .indices()
            .fold(F::zero(), |s, i| s + self.omega_degree_component(i, weighted)))
    }

    pub fn is_connected(&self, y: Subcurve) -> bool {
        let Some(start) = y.indices().next() else {
            return false;
        };
        let mut seen = Subcurve::from_indices(&[start]);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &(a, b) in &self.nodes {
                let other = if a == i {
                    b
                } else if b == i {
                    a
                } else {
                    continue;
                };
                if y.contains(other) && !seen.contains(other) {
                    seen = seen.union(Subcurve::from_indices(&[other]));
                    stack.push(other);
                }
            }
        }
        seen == y
    }

    pub fn subcurves(&self, proper_only: bool, connected_only: bool) -> Result<Vec<Subcurve>> {
        self.subcurves_capped(proper_only, connected_only, MAX_COMPONENTS)
    }

    /// Subsets in lexicographic order of their sorted component-index lists.
    pub fn subcurves_capped(
        &self,
        proper_only: bool,
        connected_only: bool,
        cap: usize,
    ) -> Result<Vec<Subcurve>> {
        let r = self.num_components();
        let cap = cap.min(MAX_COMPONENTS);
        if r > cap {
            return Err(Error::EnumerationCap { r, cap });
        }
        let full = self.full();
        let mut out = Vec::new();
        if r == 0 {
            return Ok(out);
        }
        let mut seq = vec![0usize];
        loop {
            let y = Subcurve::from_indices(&seq);
            if !(proper_only && y == full) && !(connected_only && !self.is_connected(y)) {
                out.push(y);
            }
            let last = *seq.last().expect("nonempty");
            if last + 1 < r {
                seq.push(last + 1);
            } else {
                seq.pop();
                match seq.last_mut() {
                    Some(l) => *l += 1,
                    None => break,
                }
            }
        }
        Ok(out)
    }

    pub fn has_marks_on(&self, i: usize) -> bool {
        self.marks.iter().any(|m| m.component == i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightedClass {
    Stable,
    Semistable { exceptional: Vec<String> },
    NotSemistable { witness: Option<String>, reason: String },
}

pub fn classify_weighted<F: Scalar>(curve: &Curve<F>) -> WeightedClass {
    let mut exceptional = Vec::new();
    for i in 0..curve.num_components() {
        let w = curve.omega_degree_component(i, true);
        let id = curve.component(i).id.clone();
        if w.is_negative() {
            return WeightedClass::NotSemistable {
                witness: Some(id),
                reason: format!("weighted dualizing degree {w} < 0"),
            };
        }
        if w.is_zero() {
            if curve.component(i).genus != 0 {
                return WeightedClass::NotSemistable {
                    witness: Some(id),
                    reason: "degree-zero component of positive genus".into(),
                };
            }
            if curve.has_marks_on(i) {
                return WeightedClass::NotSemistable {
                    witness: Some(id),
                    reason: "degree-zero component meets the marks".into(),
                };
            }
            exceptional.push(id);
        }
    }
    let total = curve.omega_degree(curve.full(), true).expect("nonempty");
    if !total.is_positive() {
        return WeightedClass::NotSemistable {
            witness: None,
            reason: format!("total weighted dualizing degree {total} <= 0"),
        };
    }
    if exceptional.is_empty() {
        WeightedClass::Stable
    } else {
        WeightedClass::Semistable { exceptional }
    }
}

/// Contracts exceptional components until none remain.
pub fn stabilize<F: Scalar>(curve: &Curve<F>) -> Result<Curve<F>> {
    if let WeightedClass::NotSemistable { reason, .. } = classify_weighted(curve) {
        return Err(Error::NotSemistable(reason));
    }
    let mut model = curve.to_model();
    loop {
        let cur = Curve::new(&model)?;
        let target = (0..cur.num_components()).find(|&i| {
            cur.component(i).genus == 0
                && !cur.has_marks_on(i)
                && cur.omega_degree_component(i, true).is_zero()
        });
        let Some(e) = target else {
            return Ok(cur);
        };
        let eid = cur.component(e).id.clone();
        let mut ends = Vec::new();
        model.nodes.retain(|(a, b)| {
            if *a == eid {
                ends.push(b.clone());
                false
            } else if *b == eid {
                ends.push(a.clone());
                false
            } else {
                true
            }
        });
        debug_assert_eq!(ends.len(), 2);
        model.components.retain(|c| c.id != eid);
        model.sites.retain(|s| s.component != eid);
        // A pair of ends on one component becomes a self-pair, which
        // re-validation folds into that component's genus.
        model.nodes.push((ends[0].clone(), ends[1].clone()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn comp(id: &str, genus: u32) -> Component {
        Component {
            id: id.into(),
            genus,
        }
    }

    fn model(comps: &[(&str, u32)], nodes: &[(&str, &str)]) -> CurveModel<Rational> {
        CurveModel {
            components: comps.iter().map(|&(i, g)| comp(i, g)).collect(),
            nodes: nodes
                .iter()
                .map(|&(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            sites: vec![],
            marks: vec![],
        }
    }

    #[test]
    fn genus_examples() {
        let c = Curve::new(&model(&[("C1", 1), ("C2", 1)], &[("C1", "C2")])).unwrap();
        assert_eq!(c.genus(), 2);
        let b = Curve::new(&model(
            &[("C1", 0), ("C2", 0)],
            &[("C1", "C2"), ("C1", "C2"), ("C1", "C2")],
        ))
        .unwrap();
        assert_eq!(b.genus(), 2);
        assert_eq!(b.linking_nodes(Subcurve(1)).unwrap(), 3);
        let i = Curve::new(&model(&[("C1", 3)], &[])).unwrap();
        assert_eq!(i.genus(), 3);
    }

    #[test]
    fn self_nodes_fold_into_genus() {
        let c = Curve::new(&model(&[("C1", 0)], &[("C1", "C1")])).unwrap();
        assert_eq!(c.component(0).genus, 1);
        assert!(c.nodes().is_empty());
    }

    #[test]
    fn chain_links() {
        let c = Curve::new(&model(
            &[("C1", 1), ("E", 0), ("C2", 1)],
            &[("C1", "E"), ("E", "C2")],
        ))
        .unwrap();
        assert_eq!(c.linking_nodes(c.subcurve(&["E"]).unwrap()).unwrap(), 2);
        assert_eq!(c.linking_nodes(c.subcurve(&["C1", "E"]).unwrap()).unwrap(), 1);
        assert!(c.linking_nodes(c.full()).is_err());
        assert!(c.arithmetic_genus(Subcurve(0)).is_err());
        let conn = c.subcurves(true, true).unwrap();
        assert_eq!(conn.len(), 5);
    }

    #[test]
    fn subcurve_order_is_lexicographic() {
        let c = Curve::new(&model(
            &[("A", 1), ("B", 1), ("C", 1)],
            &[("A", "B"), ("B", "C")],
        ))
        .unwrap();
        let all: Vec<Vec<usize>> = c
            .subcurves(false, false)
            .unwrap()
            .into_iter()
            .map(|y| y.indices().collect())
            .collect();
        assert_eq!(
            all,
            vec![
                vec![0],
                vec![0, 1],
                vec![0, 1, 2],
                vec![0, 2],
                vec![1],
                vec![1, 2],
                vec![2]
            ]
        );
        let one = Curve::new(&model(&[("A", 2)], &[])).unwrap();
        assert!(one.subcurves(true, false).unwrap().is_empty());
        assert_eq!(one.subcurves(false, false).unwrap().len(), 1);
    }

    #[test]
    fn validation_reports() {
        let mut m = model(&[("C1", 0), ("C2", 0)], &[]);
        m.sites.push(MarkSite {
            id: "p".into(),
            component: "C1".into(),
        });
        for (id, w) in [("x1", (1, 2)), ("x2", (2, 3))] {
            m.marks.push(Mark {
                id: id.into(),
                site: "p".into(),
                weight: crate::scalar::frac(w.0, w.1),
            });
        }
        let rep = validate_curve(&m);
        let msgs: Vec<&str> = rep.violations.iter().map(|v| v.message.as_str()).collect();
        assert!(msgs.contains(&"dual graph disconnected"));
        assert!(msgs.contains(&"site overweight 7/6 > 1"));
    }

    #[test]
    fn omega_degrees() {
        let c = Curve::new(&model(&[("C1", 1), ("C2", 1)], &[("C1", "C2")])).unwrap();
        assert_eq!(c.omega_degree(Subcurve(1), false).unwrap(), int::<Rational>(1));
        assert_eq!(c.omega_degree(c.full(), true).unwrap(), int::<Rational>(2));
    }

    #[test]
    fn stabilize_examples() {
        let chain = Curve::new(&model(
            &[("C1", 1), ("E", 0), ("C2", 1)],
            &[("C1", "E"), ("E", "C2")],
        ))
        .unwrap();
        assert_eq!(
            classify_weighted(&chain),
            WeightedClass::Semistable {
                exceptional: vec!["E".into()]
            }
        );
        let s = stabilize(&chain).unwrap();
        assert_eq!(s.num_components(), 2);
        assert_eq!(s.nodes().len(), 1);
        assert_eq!(s.genus(), 2);

        let loop_ = Curve::new(&model(&[("C1", 1), ("E", 0)], &[("C1", "E"), ("C1", "E")]))
            .unwrap();
        let s = stabilize(&loop_).unwrap();
        assert_eq!(s.num_components(), 1);
        assert_eq!(s.component(0).genus, 2);
        assert_eq!(s.genus(), loop_.genus());

        let tail = Curve::new(&model(&[("C1", 2), ("E", 0)], &[("C1", "E")])).unwrap();
        assert!(matches!(
            classify_weighted(&tail),
            WeightedClass::NotSemistable { .. }
        ));
        assert!(stabilize(&tail).is_err());
    }

    #[test]
    fn too_many_components() {
        let comps: Vec<(String, u32)> = (0..33).map(|i| (format!("C{i}"), 1)).collect();
        let names: Vec<(&str, u32)> = comps.iter().map(|(s, g)| (s.as_str(), *g)).collect();
        let links: Vec<(&str, &str)> = (1..33).map(|i| (names[i - 1].0, names[i].0)).collect();
        assert!(matches!(Curve::new(&model(&names, &links)), Err(Error::InvalidCurve(_))));
    }
}
