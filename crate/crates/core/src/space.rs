//! Semigroup-labelled graphs and semigroup-valued metric spaces.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{Distance, Elem, PosetSemigroup};

/// A triple `(a, b, c)` with `d(a, b)` not below `d(a, c) + d(c, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleViolation {
    pub a: String,
    pub b: String,
    pub c: String,
    pub ab: String,
    pub ac: String,
    pub cb: String,
}

impl fmt::Display for TriangleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d({a},{b}) = {ab} is not below d({a},{c}) + d({c},{b}) = {ac} + {cb}",
            a = self.a,
            b = self.b,
            c = self.c,
            ab = self.ab,
            ac = self.ac,
            cb = self.cb
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleReport {
    pub violations: Vec<TriangleViolation>,
}

impl TriangleReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Why a shortest-path amalgam does not exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmalgamationFailure {
    pub reason: String,
    pub triangle: Option<TriangleViolation>,
}

impl fmt::Display for AmalgamationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.triangle {
            Some(t) => write!(f, "{}: {t}", self.reason),
            None => write!(f, "{}", self.reason),
        }
    }
}

fn amalgamation_error(reason: impl Into<String>, triangle: Option<TriangleViolation>) -> Error {
    Error::Amalgamation(Box::new(AmalgamationFailure { reason: reason.into(), triangle }))
}

fn check_labels(labels: &[String]) -> Result<()> {
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::Input(format!("duplicate vertex label {l:?}")));
        }
    }
    Ok(())
}

/// Every violating triple among fully defined triangles, with `a < b`.
fn triangle_violations<F>(sg: &PosetSemigroup, labels: &[String], dist: F) -> Vec<TriangleViolation>
where
    F: Fn(usize, usize) -> Option<Distance>,
{
    let n = labels.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let Some(ab) = dist(a, b) else { continue };
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                let (Some(ac), Some(cb)) = (dist(a, c), dist(c, b)) else { continue };
                if !sg.leq_dist(ab, sg.add_dist(ac, cb)) {
                    out.push(TriangleViolation {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                        c: labels[c].clone(),
                        ab: sg.distance_label(ab).to_string(),
                        ac: sg.distance_label(ac).to_string(),
                        cb: sg.distance_label(cb).to_string(),
                    });
                }
            }
        }
    }
    out
}

/// A symmetric, partially defined labelling of vertex pairs by carrier
/// elements. The diagonal is always zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledGraph {
    semigroup: Arc<PosetSemigroup>,
    labels: Vec<String>,
    dist: Vec<Option<Distance>>,
}

impl LabelledGraph {
    /// A graph with no edges.
    pub fn new(semigroup: Arc<PosetSemigroup>, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut dist = vec![None; n * n];
        for i in 0..n {
            dist[i * n + i] = Some(Distance::Zero);
        }
        Ok(Self { semigroup, labels, dist })
    }

    pub fn semigroup(&self) -> &Arc<PosetSemigroup> {
        &self.semigroup
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn get(&self, a: usize, b: usize) -> Option<Distance> {
        self.dist[a * self.len() + b]
    }

    /// Sets the edge `{a, b}`; `a` and `b` must differ.
    pub fn set(&mut self, a: usize, b: usize, e: Elem) -> Result<()> {
        let n = self.len();
        if a >= n || b >= n {
            return Err(Error::Input(format!("vertex index out of range 0..{n}")));
        }
        if a == b {
            return Err(Error::Input("cannot label the diagonal".into()));
        }
        if e.index() >= self.semigroup.size() {
            return Err(Error::Input(format!("element index {} out of range", e.index())));
        }
        self.dist[a * n + b] = Some(Distance::Elem(e));
        self.dist[b * n + a] = Some(Distance::Elem(e));
        Ok(())
    }

    pub fn set_by_label(&mut self, a: &str, b: &str, e: &str) -> Result<()> {
        let va = self.vertex(a).ok_or_else(|| Error::Input(format!("unknown vertex {a:?}")))?;
        let vb = self.vertex(b).ok_or_else(|| Error::Input(format!("unknown vertex {b:?}")))?;
        let el = self
            .semigroup
            .elem(e)
            .ok_or_else(|| Error::Input(format!("unknown element {e:?}")))?;
        self.set(va, vb, el)
    }

    pub fn is_complete(&self) -> bool {
        self.dist.iter().all(Option::is_some)
    }
}

/// A complete labelled graph satisfying every triangle inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricSpace {
    semigroup: Arc<PosetSemigroup>,
    labels: Vec<String>,
    dist: Vec<Distance>,
}

impl MetricSpace {
    pub fn from_graph(g: &LabelledGraph) -> Result<Self> {
        if !g.is_complete() {
            return Err(Error::Input("graph is not complete".into()));
        }
        let space = Self {
            semigroup: g.semigroup.clone(),
            labels: g.labels.clone(),
            dist: g.dist.iter().map(|d| d.expect("complete")).collect(),
        };
        if let Some(v) = space.check_triangles().violations.into_iter().next() {
            return Err(Error::Triangle(Box::new(v)));
        }
        Ok(space)
    }

    /// The single-vertex space.
    pub fn point(semigroup: Arc<PosetSemigroup>, label: impl Into<String>) -> Self {
        Self { semigroup, labels: vec![label.into()], dist: vec![Distance::Zero] }
    }

    /// Builds from a full matrix of off-diagonal carrier elements (the
    /// diagonal entries are ignored).
    pub fn from_elements(
        semigroup: Arc<PosetSemigroup>,
        labels: Vec<String>,
        matrix: &[Vec<Elem>],
    ) -> Result<Self> {
        let n = labels.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Input(format!("distance matrix is not {n}x{n}")));
        }
        let mut g = LabelledGraph::new(semigroup, labels)?;
        for a in 0..n {
            for b in a + 1..n {
                if matrix[a][b] != matrix[b][a] {
                    return Err(Error::Input(format!("matrix is not symmetric at ({a},{b})")));
                }
                g.set(a, b, matrix[a][b])?;
            }
        }
        Self::from_graph(&g)
    }

    /// Skips the triangle check. Callers guarantee validity.
    pub(crate) fn from_parts_unchecked(
        semigroup: Arc<PosetSemigroup>,
        labels: Vec<String>,
        dist: Vec<Distance>,
    ) -> Self {
        debug_assert_eq!(dist.len(), labels.len() * labels.len());
        Self { semigroup, labels, dist }
    }

    pub fn semigroup(&self) -> &Arc<PosetSemigroup> {
        &self.semigroup
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertices_by_label<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                self.vertex(l.as_ref())
                    .ok_or_else(|| Error::Input(format!("unknown vertex {:?}", l.as_ref())))
            })
            .collect()
    }

    #[inline]
    pub fn d(&self, a: usize, b: usize) -> Distance {
        self.dist[a * self.len() + b]
    }

    /// Off-diagonal distance as a carrier element.
    pub fn elem(&self, a: usize, b: usize) -> Option<Elem> {
        self.d(a, b).elem()
    }

    /// Same distances under new vertex labels.
    pub fn relabelled(&self, labels: Vec<String>) -> Result<MetricSpace> {
        if labels.len() != self.len() {
            return Err(Error::Input("label count does not match the vertex count".into()));
        }
        check_labels(&labels)?;
        Ok(Self::from_parts_unchecked(self.semigroup.clone(), labels, self.dist.clone()))
    }

    pub fn to_graph(&self) -> LabelledGraph {
        LabelledGraph {
            semigroup: self.semigroup.clone(),
            labels: self.labels.clone(),
            dist: self.dist.iter().map(|&d| Some(d)).collect(),
        }
    }

    pub fn check_triangles(&self) -> TriangleReport {
        TriangleReport {
            violations: triangle_violations(&self.semigroup, &self.labels, |a, b| Some(self.d(a, b))),
        }
    }

    /// Restriction to `subset`, in the given order.
    pub fn induced(&self, subset: &[usize]) -> Result<MetricSpace> {
        let n = self.len();
        for (i, &v) in subset.iter().enumerate() {
            if v >= n {
                return Err(Error::Input(format!("vertex {v} out of range 0..{n}")));
            }
            if subset[..i].contains(&v) {
                return Err(Error::Input(format!("vertex {v} repeated in subset")));
            }
        }
        let k = subset.len();
        let mut dist = Vec::with_capacity(k * k);
        for &a in subset {
            for &b in subset {
                dist.push(self.d(a, b));
            }
        }
        let labels = subset.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(Self::from_parts_unchecked(self.semigroup.clone(), labels, dist))
    }

    /// Whether sending `a[i]` to `b[i]` and fixing `x` pointwise is a
    /// well-defined distance-preserving bijection between the induced
    /// substructures on `a ∪ x` and `b ∪ x`.
    pub fn same_type_over(&self, a: &[usize], b: &[usize], x: &[usize]) -> Result<bool> {
        if a.len() != b.len() {
            return Err(Error::Input(format!("tuple lengths differ: {} vs {}", a.len(), b.len())));
        }
        let n = self.len();
        if let Some(&v) = a.iter().chain(b).chain(x).find(|&&v| v >= n) {
            return Err(Error::Input(format!("vertex {v} out of range 0..{n}")));
        }
        let mut map: Vec<(usize, usize)> = x.iter().map(|&v| (v, v)).collect();
        map.extend(a.iter().copied().zip(b.iter().copied()));
        for (i, &(u, fu)) in map.iter().enumerate() {
            for &(v, fv) in &map[..i] {
                // a function and injective
                if (u == v) != (fu == fv) {
                    return Ok(false);
                }
                if self.d(u, v) != self.d(fu, fv) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Adjoins a vertex `label` at distance `dists[i]` from `base[i]`, with
    /// every other distance the infimum of the two-step paths through the
    /// base (the maximum when the base is empty).
    pub fn extend_point(&self, base: &[usize], dists: &[Elem], label: impl Into<String>) -> Result<MetricSpace> {
        let label = label.into();
        if base.len() != dists.len() {
            return Err(Error::Input("base and distance vector differ in length".into()));
        }
        if self.vertex(&label).is_some() {
            return Err(Error::Input(format!("vertex {label:?} already exists")));
        }
        let n = self.len();
        let sg = &self.semigroup;
        let mut row = Vec::with_capacity(n + 1);
        for u in 0..n {
            if let Some(i) = base.iter().position(|&b| b == u) {
                row.push(Distance::Elem(dists[i]));
                continue;
            }
            let inf = sg.infimum_dist(base.iter().zip(dists).map(|(&c, &t)| sg.add_dist(t.into(), self.d(c, u))));
            match inf {
                Some(d) => row.push(d),
                None => {
                    return Err(amalgamation_error(
                        format!("no infimum for the distance from {label} to {}", self.labels[u]),
                        None,
                    ))
                }
            }
        }
        row.push(Distance::Zero);
        let mut labels = self.labels.clone();
        labels.push(label);
        let mut dist = Vec::with_capacity((n + 1) * (n + 1));
        for a in 0..n {
            dist.extend_from_slice(&self.dist[a * n..(a + 1) * n]);
            dist.push(row[a]);
        }
        dist.extend_from_slice(&row);
        let out = Self::from_parts_unchecked(self.semigroup.clone(), labels, dist);
        if let Some(v) = out.triangles_through(n).into_iter().next() {
            return Err(amalgamation_error("one-point extension violates the triangle inequality", Some(v)));
        }
        Ok(out)
    }

    /// Violations among triangles containing vertex `x`.
    pub(crate) fn triangles_through(&self, x: usize) -> Vec<TriangleViolation> {
        let sg = &self.semigroup;
        let n = self.len();
        let mut out = Vec::new();
        let mut push = |a: usize, b: usize, c: usize| {
            let (ab, ac, cb) = (self.d(a, b), self.d(a, c), self.d(c, b));
            if !sg.leq_dist(ab, sg.add_dist(ac, cb)) {
                out.push(TriangleViolation {
                    a: self.labels[a].clone(),
                    b: self.labels[b].clone(),
                    c: self.labels[c].clone(),
                    ab: sg.distance_label(ab).to_string(),
                    ac: sg.distance_label(ac).to_string(),
                    cb: sg.distance_label(cb).to_string(),
                });
            }
        };
        for u in 0..n {
            for v in u + 1..n {
                if u == x || v == x {
                    continue;
                }
                push(u, v, x);
                push(u, x, v);
                push(v, x, u);
            }
        }
        out
    }

    pub fn to_data(&self) -> SpaceData {
        let sg = &self.semigroup;
        let n = self.len();
        SpaceData {
            semigroup: SemigroupRef::Inline(sg.to_data()),
            vertices: self.labels.clone(),
            d: (0..n)
                .map(|a| (0..n).map(|b| Some(sg.distance_label(self.d(a, b)).to_string())).collect())
                .collect(),
        }
    }
}

/// Fills every undefined pair by shortest paths: undefined entries start at
/// the maximum and are repeatedly lowered to the infimum of all two-step
/// paths until nothing changes. Defined entries are never modified; if one
/// of them ends up above a two-step path the result is a triangle error.
pub fn complete_shortest_path(g: &LabelledGraph) -> Result<MetricSpace> {
    let sg = g.semigroup.clone();
    let n = g.len();
    let undefined: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| g.get(a, b).is_none())
        .collect();
    let mut dist: Vec<Distance> = Vec::with_capacity(n * n);
    if undefined.is_empty() {
        dist.extend(g.dist.iter().map(|d| d.expect("complete")));
    } else {
        let max = sg.maximum().ok_or(Error::NoMaximum)?;
        dist.extend(g.dist.iter().map(|d| d.unwrap_or(Distance::Elem(max))));
        loop {
            let mut changed = false;
            for &(a, b) in &undefined {
                let current = dist[a * n + b];
                let paths = (0..n)
                    .filter(|&c| c != a && c != b)
                    .map(|c| sg.add_dist(dist[a * n + c], dist[c * n + b]));
                let inf = sg
                    .infimum_dist(std::iter::once(current).chain(paths))
                    .ok_or_else(|| {
                        Error::MissingInfimum(format!("paths between {} and {}", g.labels[a], g.labels[b]))
                    })?;
                if inf != current {
                    dist[a * n + b] = inf;
                    dist[b * n + a] = inf;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
    let space = MetricSpace::from_parts_unchecked(sg, g.labels.clone(), dist);
    match space.check_triangles().violations.into_iter().next() {
        Some(v) => Err(Error::Triangle(Box::new(v))),
        None => Ok(space),
    }
}

/// Every violating triple among the fully defined triangles of `g`.
pub fn check_triangles(g: &LabelledGraph) -> TriangleReport {
    TriangleReport { violations: triangle_violations(&g.semigroup, &g.labels, |a, b| g.get(a, b)) }
}

/// Result of [`amalgam`]: the merged space and where each vertex of the
/// second factor ended up.
#[derive(Clone, Debug)]
pub struct Amalgam {
    pub space: MetricSpace,
    pub right: Vec<usize>,
}

/// Shortest-path strong amalgam of `left` and `right` over the vertices
/// whose labels are listed in `base` (present in both factors).
///
/// The result keeps `left`'s vertices in order and appends the non-base
/// vertices of `right`. A non-base label of `right` that clashes with a
/// label of `left` is primed until unique. Cross distances are
/// `inf{d(a, c) + d(c, b) : c in base}`, the maximum for an empty base.
pub fn amalgam<S: AsRef<str>>(left: &MetricSpace, right: &MetricSpace, base: &[S]) -> Result<Amalgam> {
    let lb = left.vertices_by_label(base)?;
    let rb = right.vertices_by_label(base)?;
    amalgam_over(left, &lb, right, &rb)
}

/// As [`amalgam`], with the base given as matching index lists.
pub fn amalgam_over(left: &MetricSpace, lbase: &[usize], right: &MetricSpace, rbase: &[usize]) -> Result<Amalgam> {
    if !Arc::ptr_eq(&left.semigroup, &right.semigroup) && left.semigroup != right.semigroup {
        return Err(Error::Input("factors are over different semigroups".into()));
    }
    if lbase.len() != rbase.len() {
        return Err(Error::Input("base index lists differ in length".into()));
    }
    if left.induced(lbase)?.dist != right.induced(rbase)?.dist {
        return Err(Error::Input("factors disagree on the base".into()));
    }
    let sg = left.semigroup.clone();
    let n = left.len();
    let extra: Vec<usize> = (0..right.len()).filter(|v| !rbase.contains(v)).collect();
    let total = n + extra.len();

    let mut right_map = vec![usize::MAX; right.len()];
    for (&l, &r) in lbase.iter().zip(rbase) {
        right_map[r] = l;
    }
    let mut labels = left.labels.clone();
    for (i, &r) in extra.iter().enumerate() {
        right_map[r] = n + i;
        let mut label = right.labels[r].clone();
        while labels.contains(&label) || extra.iter().any(|&o| o != r && right.labels[o] == label) {
            label.push('\'');
        }
        labels.push(label);
    }

    let mut dist = vec![Distance::Zero; total * total];
    for a in 0..n {
        for b in 0..n {
            dist[a * total + b] = left.d(a, b);
        }
    }
    for &r1 in &extra {
        for r2 in 0..right.len() {
            let (x, y) = (right_map[r1], right_map[r2]);
            dist[x * total + y] = right.d(r1, r2);
            dist[y * total + x] = right.d(r1, r2);
        }
    }
    for a in (0..n).filter(|a| !lbase.contains(a)) {
        for &r in &extra {
            let paths = lbase
                .iter()
                .zip(rbase)
                .map(|(&lc, &rc)| sg.add_dist(left.d(a, lc), right.d(rc, r)));
            let inf = sg.infimum_dist(paths).ok_or_else(|| {
                amalgamation_error(
                    format!("no infimum for the distance between {} and {}", left.labels[a], right.labels[r]),
                    None,
                )
            })?;
            let y = right_map[r];
            dist[a * total + y] = inf;
            dist[y * total + a] = inf;
        }
    }
    let space = MetricSpace::from_parts_unchecked(sg, labels, dist);
    if let Some(v) = space.check_triangles().violations.into_iter().next() {
        return Err(amalgamation_error("amalgam violates the triangle inequality", Some(v)));
    }
    Ok(Amalgam { space, right: right_map })
}

/// Semigroup given inline or by reference (file path or built-in spec).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemigroupRef {
    Inline(crate::semigroup::SemigroupData),
    Named(String),
}

/// JSON space format. Entries are element labels, `"0"` on the diagonal,
/// or `null` when undefined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceData {
    pub semigroup: SemigroupRef,
    pub vertices: Vec<String>,
    pub d: Vec<Vec<Option<String>>>,
}

impl SpaceData {
    /// Builds the graph; named semigroups are resolved by `resolve`.
    pub fn to_graph<F>(&self, resolve: F) -> Result<LabelledGraph>
    where
        F: Fn(&str) -> Result<PosetSemigroup>,
    {
        let sg = match &self.semigroup {
            SemigroupRef::Inline(data) => PosetSemigroup::from_data(data)?,
            SemigroupRef::Named(name) => resolve(name)?,
        };
        let n = self.vertices.len();
        if self.d.len() != n || self.d.iter().any(|r| r.len() != n) {
            return Err(Error::Input(format!("distance matrix is not {n}x{n}")));
        }
        let mut g = LabelledGraph::new(Arc::new(sg), self.vertices.clone())?;
        for a in 0..n {
            match self.d[a][a].as_deref() {
                None | Some("0") => {}
                Some(other) => return Err(Error::Input(format!("diagonal entry {other:?} must be \"0\""))),
            }
            for b in a + 1..n {
                if self.d[a][b] != self.d[b][a] {
                    return Err(Error::Input(format!("matrix is not symmetric at ({a},{b})")));
                }
                if let Some(label) = &self.d[a][b] {
                    let e = g
                        .semigroup()
                        .elem(label)
                        .ok_or_else(|| Error::Input(format!("unknown element {label:?} at ({a},{b})")))?;
                    g.set(a, b, e)?;
                }
            }
        }
        Ok(g)
    }
}

impl Serialize for MetricSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_data().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{path_semigroup, product_capped};

    fn path(n: usize) -> Arc<PosetSemigroup> {
        Arc::new(path_semigroup(n).unwrap())
    }

    fn graph(sg: &Arc<PosetSemigroup>, labels: &[&str], edges: &[(&str, &str, &str)]) -> LabelledGraph {
        let mut g = LabelledGraph::new(sg.clone(), labels.iter().map(|s| s.to_string()).collect()).unwrap();
        for (a, b, e) in edges {
            g.set_by_label(a, b, e).unwrap();
        }
        g
    }

    #[test]
    fn triangle_violation_detected() {
        let sg = path(3);
        let g = graph(&sg, &["a", "b", "c"], &[("a", "b", "3"), ("a", "c", "1"), ("b", "c", "1")]);
        let r = check_triangles(&g);
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!((v.a.as_str(), v.b.as_str(), v.c.as_str()), ("a", "b", "c"));
        assert!(matches!(MetricSpace::from_graph(&g), Err(Error::Triangle(_))));
    }

    #[test]
    fn two_points_have_no_triangles() {
        let sg = path(3);
        for e in ["1", "2", "3"] {
            assert!(check_triangles(&graph(&sg, &["a", "b"], &[("a", "b", e)])).is_empty());
        }
    }

    #[test]
    fn completion_examples() {
        let sg = path(3);
        let g = graph(&sg, &["a", "b", "c"], &[("a", "c", "1"), ("c", "b", "1")]);
        let s = complete_shortest_path(&g).unwrap();
        assert_eq!(s.semigroup().distance_label(s.d(0, 1)), "2");

        let g = graph(&sg, &["a", "b"], &[]);
        let s = complete_shortest_path(&g).unwrap();
        assert_eq!(s.semigroup().distance_label(s.d(0, 1)), "3");
    }

    #[test]
    fn completion_of_product_configuration() {
        let sg = Arc::new(product_capped(3, 2).unwrap());
        let g = graph(
            &sg,
            &["a", "b", "c1", "c2"],
            &[("a", "c1", "(1,1)"), ("b", "c1", "(1,2)"), ("a", "c2", "(1,1)"), ("b", "c2", "(2,1)")],
        );
        let s = complete_shortest_path(&g).unwrap();
        assert_eq!(sg.distance_label(s.d(0, 1)), "(2,2)");
        assert!(s.check_triangles().is_empty());
    }

    #[test]
    fn completion_rejects_bad_original_edges() {
        let sg = path(3);
        let g = graph(&sg, &["a", "b", "c", "x"], &[("a", "b", "3"), ("a", "c", "1"), ("b", "c", "1")]);
        assert!(matches!(complete_shortest_path(&g), Err(Error::Triangle(_))));
    }

    #[test]
    fn induced_restrictions() {
        let sg = path(3);
        let g = graph(&sg, &["a", "b", "c"], &[("a", "c", "1"), ("c", "b", "2")]);
        let s = complete_shortest_path(&g).unwrap();
        assert_eq!(s.induced(&[0, 1, 2]).unwrap(), s);
        assert_eq!(s.induced(&[1]).unwrap().len(), 1);
        let x = s.induced(&[2, 0]).unwrap();
        assert_eq!(x.induced(&[1]).unwrap(), s.induced(&[0]).unwrap());
        assert!(s.induced(&[5]).is_err());
        assert!(s.induced(&[0, 0]).is_err());
    }

    #[test]
    fn same_type_examples() {
        let sg = path(3);
        let g = graph(
            &sg,
            &["x", "p", "q", "r"],
            &[("x", "p", "1"), ("x", "q", "2"), ("x", "r", "1"), ("p", "q", "2"), ("p", "r", "2"), ("q", "r", "2")],
        );
        let s = MetricSpace::from_graph(&g).unwrap();
        assert!(s.same_type_over(&[1], &[1], &[0]).unwrap());
        assert!(!s.same_type_over(&[1], &[2], &[0]).unwrap());
        assert!(s.same_type_over(&[1], &[3], &[0]).unwrap());
        assert!(s.same_type_over(&[1, 3], &[3, 1], &[0]).unwrap());
        assert!(s.same_type_over(&[1], &[2], &[1]).is_ok());
        assert!(matches!(s.same_type_over(&[1], &[2, 3], &[]), Err(Error::Input(_))));
    }

    #[test]
    fn amalgam_examples() {
        let sg = path(3);
        let a = MetricSpace::point(sg.clone(), "a");
        let b = MetricSpace::point(sg.clone(), "b");
        let m = amalgam::<&str>(&a, &b, &[]).unwrap();
        assert_eq!(sg.distance_label(m.space.d(0, 1)), "3");

        let ac = MetricSpace::from_graph(&graph(&sg, &["a", "c"], &[("a", "c", "1")])).unwrap();
        let bc = MetricSpace::from_graph(&graph(&sg, &["c", "b"], &[("c", "b", "1")])).unwrap();
        let m = amalgam(&ac, &bc, &["c"]).unwrap();
        assert_eq!(m.space.labels(), ["a", "c", "b"]);
        assert_eq!(sg.distance_label(m.space.d(0, 2)), "2");
        assert!(m.space.check_triangles().is_empty());
    }

    #[test]
    fn amalgam_renames_clashing_labels() {
        let sg = path(3);
        let ac = MetricSpace::from_graph(&graph(&sg, &["a", "c"], &[("a", "c", "1")])).unwrap();
        let m = amalgam(&ac, &ac, &["c"]).unwrap();
        assert_eq!(m.space.labels(), ["a", "c", "a'"]);
        assert_eq!(m.right, vec![2, 1]);
    }

    #[test]
    fn amalgam_base_mismatch_is_input_error() {
        let sg = path(3);
        let x = MetricSpace::from_graph(&graph(&sg, &["c", "e", "a"], &[("c", "e", "1"), ("a", "c", "1"), ("a", "e", "1")])).unwrap();
        let y = MetricSpace::from_graph(&graph(&sg, &["c", "e", "b"], &[("c", "e", "2"), ("b", "c", "1"), ("b", "e", "1")])).unwrap();
        assert!(matches!(amalgam(&x, &y, &["c", "e"]), Err(Error::Input(_))));
    }

    #[test]
    fn product_amalgam_over_two_points() {
        let sg = Arc::new(product_capped(3, 2).unwrap());
        let left = MetricSpace::from_graph(&graph(
            &sg,
            &["c1", "c2", "a"],
            &[("c1", "c2", "(2,2)"), ("a", "c1", "(1,1)"), ("a", "c2", "(1,1)")],
        ))
        .unwrap();
        let right = MetricSpace::from_graph(&graph(
            &sg,
            &["c1", "c2", "b"],
            &[("c1", "c2", "(2,2)"), ("b", "c1", "(1,2)"), ("b", "c2", "(2,1)")],
        ))
        .unwrap();
        let m = amalgam(&left, &right, &["c1", "c2"]).unwrap();
        assert_eq!(sg.distance_label(m.space.d(2, 3)), "(2,2)");
    }

    #[test]
    fn space_json_round_trip() {
        let sg = path(3);
        let s = complete_shortest_path(&graph(&sg, &["a", "b", "c"], &[("a", "b", "1")])).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        let data: SpaceData = serde_json::from_str(&json).unwrap();
        let back = MetricSpace::from_graph(&data.to_graph(|_| unreachable!()).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
