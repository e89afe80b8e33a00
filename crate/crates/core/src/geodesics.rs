//! Geodesic sequences and the boundedness constant.
//!
//! A sequence `a_1, ..., a_n` of distinct vertices is geodesic when
//! `a_i ⫫_{a_j} a_k` for all `i < j < k`. For the shortest-path relation
//! this forces `d(a_i, a_k)` to be the sum of the consecutive steps between
//! them, so a geodesic is determined up to isomorphism by its step profile.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::independence::indep;
use crate::semigroup::{bits, full_mask, Distance, Elem, PosetSemigroup};
use crate::space::{amalgam_over, MetricSpace};

/// Consecutive step distances of a geodesic. Never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepProfile(Vec<Elem>);

impl StepProfile {
    pub fn new(steps: Vec<Elem>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Input("step profile must be nonempty".into()));
        }
        Ok(Self(steps))
    }

    pub fn steps(&self) -> &[Elem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Sum of a nonempty slice.
pub fn fold(sg: &PosetSemigroup, steps: &[Elem]) -> Elem {
    let (&first, rest) = steps.split_first().expect("nonempty fold");
    rest.iter().fold(first, |acc, &x| sg.add(acc, x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicCheck {
    pub geodesic: bool,
    /// First `(i, j, k)` positions with `a_i` not independent from `a_k` over `a_j`.
    pub violation: Option<(usize, usize, usize)>,
}

fn check_sequence(s: &MetricSpace, seq: &[usize]) -> Result<()> {
    for (i, &v) in seq.iter().enumerate() {
        if v >= s.len() {
            return Err(Error::Input(format!("vertex {v} out of range 0..{}", s.len())));
        }
        if seq[..i].contains(&v) {
            return Err(Error::Input(format!("vertex {} repeated in sequence", s.label(v))));
        }
    }
    Ok(())
}

pub fn is_geodesic(s: &MetricSpace, seq: &[usize]) -> Result<GeodesicCheck> {
    check_sequence(s, seq)?;
    let n = seq.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !indep(s, &[seq[i]], &[seq[j]], &[seq[k]])? {
                    return Ok(GeodesicCheck { geodesic: false, violation: Some((i, j, k)) });
                }
            }
        }
    }
    Ok(GeodesicCheck { geodesic: true, violation: None })
}

/// Whether every `d(a_i, a_k)` equals the sum of the steps between them.
pub fn fold_law_holds(s: &MetricSpace, seq: &[usize]) -> bool {
    let sg = s.semigroup();
    (0..seq.len()).all(|i| {
        let mut acc: Option<Elem> = None;
        (i + 1..seq.len()).all(|k| {
            let Some(step) = s.elem(seq[k - 1], seq[k]) else { return false };
            let sum = acc.map_or(step, |a| sg.add(a, step));
            acc = Some(sum);
            s.d(seq[i], seq[k]) == Distance::Elem(sum)
        })
    })
}

/// A verified geodesic inside a metric space.
#[derive(Clone, Debug)]
pub struct GeodesicSequence {
    space: MetricSpace,
    seq: Vec<usize>,
}

impl GeodesicSequence {
    pub fn new(space: MetricSpace, seq: Vec<usize>) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::Input("geodesic needs at least one vertex".into()));
        }
        let check = is_geodesic(&space, &seq)?;
        if let Some((i, j, k)) = check.violation {
            return Err(Error::Input(format!(
                "not geodesic: {} is not independent from {} over {}",
                space.label(seq[i]),
                space.label(seq[k]),
                space.label(seq[j])
            )));
        }
        Ok(Self { space, seq })
    }

    pub fn space(&self) -> &MetricSpace {
        &self.space
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn first(&self) -> usize {
        self.seq[0]
    }

    pub fn last(&self) -> usize {
        *self.seq.last().expect("nonempty")
    }

    /// `None` for a single vertex.
    pub fn profile(&self) -> Option<StepProfile> {
        let steps = self
            .seq
            .windows(2)
            .map(|w| self.space.elem(w[0], w[1]).expect("distinct vertices"))
            .collect();
        StepProfile::new(steps).ok()
    }

    pub fn endpoint_distance(&self) -> Distance {
        self.space.d(self.first(), self.last())
    }

    pub fn reversed(&self) -> Result<Self> {
        let mut seq = self.seq.clone();
        seq.reverse();
        Self::new(self.space.clone(), seq)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "space": self.space.to_data(),
            "seq": self.seq.iter().map(|&v| self.space.label(v)).collect::<Vec<_>>(),
        })
    }
}

fn fresh_label(s: &MetricSpace) -> String {
    (0..)
        .map(|i| format!("g{i}"))
        .find(|l| s.vertex(l).is_none())
        .expect("unbounded")
}

/// Adjoins a fresh vertex at distance `t` from the last vertex, amalgamated
/// over the last vertex so that the rest of the sequence is independent
/// from it.
pub fn extend_geodesic(g: &GeodesicSequence, t: Elem) -> Result<GeodesicSequence> {
    let last = g.last();
    let space = g.space.extend_point(&[last], &[t], fresh_label(&g.space))?;
    let mut seq = g.seq.clone();
    seq.push(space.len() - 1);
    GeodesicSequence::new(space, seq)
}

/// The space on `g0, ..., gn` with `d(g_i, g_k)` the sum of steps `i..k`.
pub fn geodesic_with_profile(sg: &Arc<PosetSemigroup>, profile: &StepProfile) -> Result<GeodesicSequence> {
    let steps = profile.steps();
    if let Some(bad) = steps.iter().find(|e| e.index() >= sg.size()) {
        return Err(Error::Input(format!("step {} is not a carrier element", bad.index())));
    }
    let n = steps.len() + 1;
    let labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let mut matrix = vec![vec![Elem(0); n]; n];
    for i in 0..n {
        for k in i + 1..n {
            let d = fold(sg, &steps[i..k]);
            matrix[i][k] = d;
            matrix[k][i] = d;
        }
    }
    let space = MetricSpace::from_elements(sg.clone(), labels, &matrix)?;
    GeodesicSequence::new(space, (0..n).collect())
}

/// Joins `g1` and `g2` at the last vertex of `g1`, which is identified with
/// the first vertex of `g2`. The spaces are amalgamated over that pivot.
pub fn concat_geodesics(g1: &GeodesicSequence, g2: &GeodesicSequence) -> Result<GeodesicSequence> {
    let merged = amalgam_over(&g1.space, &[g1.last()], &g2.space, &[g2.first()])?;
    let mut seq = g1.seq.clone();
    seq.extend(g2.seq[1..].iter().map(|&v| merged.right[v]));
    GeodesicSequence::new(merged.space, seq)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Bound {
    Exact(usize),
    /// No length up to the searched maximum forces the maximum.
    Exceeds,
}

impl Bound {
    pub fn value(self) -> Option<usize> {
        match self {
            Bound::Exact(k) => Some(k),
            Bound::Exceeds => None,
        }
    }
}

/// Smallest `k <= max_len` such that every sum of `k` carrier elements is
/// the maximum. Works on the set of reachable sums per length.
pub fn compute_bound(sg: &PosetSemigroup, max_len: usize) -> Result<Bound> {
    let max = sg.maximum().ok_or(Error::NoMaximum)?;
    let all = full_mask(sg.size());
    let top = 1u128 << max.index();
    let mut reach = all;
    for k in 1..=max_len {
        if reach == top {
            return Ok(Bound::Exact(k));
        }
        let mut next = 0u128;
        for x in bits(reach) {
            for y in sg.elements() {
                next |= 1u128 << sg.add(Elem(x as u8), y).index();
            }
        }
        reach = next;
    }
    Ok(Bound::Exceeds)
}

/// Non-maximal `m` with `m + l` the maximum for every `l`.
pub fn almost_free_elements(sg: &PosetSemigroup) -> Result<Vec<Elem>> {
    let max = sg.maximum().ok_or(Error::NoMaximum)?;
    Ok(sg
        .elements()
        .filter(|&m| m != max && sg.elements().all(|l| sg.add(m, l) == max))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{path_semigroup, product_capped};
    use crate::space::LabelledGraph;

    fn path(n: usize) -> Arc<PosetSemigroup> {
        Arc::new(path_semigroup(n).unwrap())
    }

    fn profile(sg: &PosetSemigroup, labels: &[&str]) -> StepProfile {
        StepProfile::new(labels.iter().map(|l| sg.elem(l).unwrap()).collect()).unwrap()
    }

    #[test]
    fn chain_distances_are_geodesic() {
        let sg = path(3);
        let n = 5;
        let mut g = LabelledGraph::new(sg.clone(), (0..n).map(|i| format!("a{i}")).collect()).unwrap();
        for i in 0..n {
            for j in i + 1..n {
                g.set(i, j, Elem(((j - i).min(3) - 1) as u8)).unwrap();
            }
        }
        let s = MetricSpace::from_graph(&g).unwrap();
        assert!(is_geodesic(&s, &[0, 1, 2, 3, 4]).unwrap().geodesic);
        assert!(is_geodesic(&s, &[3, 1]).unwrap().geodesic);
        assert!(is_geodesic(&s, &[0, 0]).is_err());
    }

    #[test]
    fn equilateral_triangle_is_not_geodesic() {
        let sg = path(3);
        let mut g = LabelledGraph::new(sg, vec!["a".into(), "b".into(), "c".into()]).unwrap();
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            g.set(a, b, Elem(0)).unwrap();
        }
        let s = MetricSpace::from_graph(&g).unwrap();
        let c = is_geodesic(&s, &[0, 1, 2]).unwrap();
        assert!(!c.geodesic);
        assert_eq!(c.violation, Some((0, 1, 2)));
    }

    #[test]
    fn extension_examples() {
        let sg = path(3);
        let one = GeodesicSequence::new(MetricSpace::point(sg.clone(), "a"), vec![0]).unwrap();
        let two = extend_geodesic(&one, Elem(0)).unwrap();
        assert_eq!(two.space().labels(), ["a", "g0"]);
        assert_eq!(sg.distance_label(two.endpoint_distance()), "1");
        let three = extend_geodesic(&two, Elem(0)).unwrap();
        assert_eq!(sg.distance_label(three.endpoint_distance()), "2");

        let q = Arc::new(product_capped(3, 2).unwrap());
        let one = q.elem("(1,1)").unwrap();
        let mut g = GeodesicSequence::new(MetricSpace::point(q.clone(), "a"), vec![0]).unwrap();
        for _ in 0..3 {
            g = extend_geodesic(&g, one).unwrap();
        }
        assert_eq!(q.distance_label(g.endpoint_distance()), "(3,3)");
    }

    #[test]
    fn profile_examples() {
        let sg = path(3);
        let g = geodesic_with_profile(&sg, &profile(&sg, &["1", "1", "1"])).unwrap();
        assert_eq!(g.endpoint_distance(), Distance::Elem(sg.maximum().unwrap()));
        assert!(indep(g.space(), &[0], &[], &[3]).unwrap());
        let g = geodesic_with_profile(&sg, &profile(&sg, &["1", "1"])).unwrap();
        assert_eq!(sg.distance_label(g.endpoint_distance()), "2");
        assert!(!indep(g.space(), &[0], &[], &[2]).unwrap());
        let g = geodesic_with_profile(&sg, &profile(&sg, &["2"])).unwrap();
        assert_eq!(g.space().len(), 2);
        assert!(StepProfile::new(vec![]).is_err());
    }

    #[test]
    fn concat_examples() {
        let sg = path(3);
        let one = geodesic_with_profile(&sg, &profile(&sg, &["1"])).unwrap();
        let two = geodesic_with_profile(&sg, &profile(&sg, &["1", "1"])).unwrap();
        let c = concat_geodesics(&one, &one).unwrap();
        assert_eq!(c.seq().len(), 3);
        assert_eq!(sg.distance_label(c.endpoint_distance()), "2");
        let c = concat_geodesics(&two, &one).unwrap();
        assert_eq!(sg.distance_label(c.endpoint_distance()), "3");

        let q = Arc::new(product_capped(3, 2).unwrap());
        let a = geodesic_with_profile(&q, &profile(&q, &["(1,2)"])).unwrap();
        let b = geodesic_with_profile(&q, &profile(&q, &["(2,1)"])).unwrap();
        let c = concat_geodesics(&a, &b).unwrap();
        assert_eq!(q.distance_label(c.endpoint_distance()), "(3,3)");
        assert!(fold_law_holds(c.space(), c.seq()));
    }

    #[test]
    fn reversal_stays_geodesic() {
        let sg = path(4);
        let g = geodesic_with_profile(&sg, &profile(&sg, &["1", "2", "1"])).unwrap();
        let r = g.reversed().unwrap();
        assert!(fold_law_holds(r.space(), r.seq()));
    }

    #[test]
    fn bounds_on_paths() {
        for n in 2..=6 {
            assert_eq!(compute_bound(&path_semigroup(n).unwrap(), 64).unwrap(), Bound::Exact(n));
        }
        assert_eq!(compute_bound(&path_semigroup(1).unwrap(), 4).unwrap(), Bound::Exact(1));
        assert_eq!(compute_bound(&path_semigroup(4).unwrap(), 2).unwrap(), Bound::Exceeds);
    }

    #[test]
    fn almost_free_on_paths() {
        for n in 2..=6 {
            let sg = path_semigroup(n).unwrap();
            let af: Vec<&str> = almost_free_elements(&sg).unwrap().iter().map(|&e| sg.label(e)).collect();
            assert_eq!(af, vec![(n - 1).to_string()]);
        }
        assert!(almost_free_elements(&path_semigroup(1).unwrap()).unwrap().is_empty());
    }
}
