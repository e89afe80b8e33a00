//! The shortest-path independence relation.
//!
//! `A ⫫_C B` holds when every cross distance `d(a, b)` equals the infimum of
//! `d(a, c) + d(c, b)` over `c` in `C`, the maximum when `C` is empty. Zero
//! distances follow the neutral-element convention, so `a ⫫_C a` holds
//! exactly when `a` is in `C`.

pub mod axioms;

use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraisse::random_space;
use crate::rng::{self, sub_seed};
use crate::semigroup::{Distance, PosetSemigroup};
use crate::space::{complete_shortest_path, LabelledGraph, MetricSpace};

pub use axioms::{
    check_derived, check_metric_like, check_sir_axioms, check_suite, AxiomOutcome, AxiomReport, CheckConfig,
    Counterexample, FragmentSource, SamplingBounds, Suite,
};

/// A ternary relation on vertex sets of a metric space.
pub trait Independence: Sync {
    fn name(&self) -> &'static str;
    fn indep(&self, s: &MetricSpace, a: &[usize], c: &[usize], b: &[usize]) -> Result<bool>;
}

/// The shortest-path relation.
#[derive(Clone, Copy, Debug, Default)]
pub struct ShortestPath;

impl Independence for ShortestPath {
    fn name(&self) -> &'static str {
        "shortest-path"
    }

    fn indep(&self, s: &MetricSpace, a: &[usize], c: &[usize], b: &[usize]) -> Result<bool> {
        indep(s, a, c, b)
    }
}

/// The shortest-path relation with the infimum replaced by a strictly lower
/// bound whenever one exists. Used only to check that the axiom harness
/// detects a broken relation.
#[derive(Clone, Copy, Debug, Default)]
pub struct LoweredInfimum;

impl Independence for LoweredInfimum {
    fn name(&self) -> &'static str {
        "lowered-infimum"
    }

    fn indep(&self, s: &MetricSpace, a: &[usize], c: &[usize], b: &[usize]) -> Result<bool> {
        let sg = s.semigroup();
        for &x in a {
            for &y in b {
                let inf = path_infimum(s, x, c, y)?;
                let target = match inf {
                    Distance::Zero => Distance::Zero,
                    Distance::Elem(e) => sg
                        .elements()
                        .find(|&l| sg.lt(l, e))
                        .map(Distance::Elem)
                        .unwrap_or(inf),
                };
                if s.d(x, y) != target {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `inf{d(a, c) + d(c, b) : c in base}`, the maximum for an empty base.
pub fn path_infimum(s: &MetricSpace, a: usize, base: &[usize], b: usize) -> Result<Distance> {
    let sg = s.semigroup();
    if base.is_empty() {
        return sg.maximum().map(Distance::Elem).ok_or(Error::NoMaximum);
    }
    sg.infimum_dist(base.iter().map(|&c| sg.add_dist(s.d(a, c), s.d(c, b))))
        .ok_or_else(|| {
            Error::MissingInfimum(format!(
                "paths from {} to {} through {{{}}}",
                s.label(a),
                s.label(b),
                base.iter().map(|&c| s.label(c)).join(",")
            ))
        })
}

fn check_vertices(s: &MetricSpace, sets: &[&[usize]]) -> Result<()> {
    let n = s.len();
    match sets.iter().flat_map(|x| x.iter()).find(|&&v| v >= n) {
        Some(v) => Err(Error::Input(format!("vertex {v} out of range 0..{n}"))),
        None => Ok(()),
    }
}

/// Whether `A ⫫_C B` holds in `s` for the shortest-path relation.
pub fn indep(s: &MetricSpace, a: &[usize], c: &[usize], b: &[usize]) -> Result<bool> {
    check_vertices(s, &[a, b, c])?;
    for &x in a {
        for &y in b {
            if s.d(x, y) != path_infimum(s, x, c, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every subset `C'` of `c` with at most `k` elements over which `a ⫫ b`
/// still holds, smallest first. Requires `a ⫫_C b`.
pub fn support_sets(s: &MetricSpace, a: usize, c: &[usize], b: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if !indep(s, &[a], c, &[b])? {
        return Err(Error::Input(format!(
            "{} and {} are not independent over the given base",
            s.label(a),
            s.label(b)
        )));
    }
    let mut out = Vec::new();
    for size in 0..=k.min(c.len()) {
        for sub in c.iter().copied().combinations(size) {
            if indep(s, &[a], &sub, &[b])? {
                out.push(sub);
            }
        }
    }
    Ok(out)
}

/// A configuration where `a ⫫_C b` holds but no subset of `C` of size at
/// most `k` supports it.
#[derive(Clone, Debug, Serialize)]
pub struct UnsupportedWitness {
    pub space: MetricSpace,
    pub a: usize,
    pub b: usize,
    pub base: Vec<usize>,
    pub k: usize,
}

impl UnsupportedWitness {
    pub fn to_json(&self) -> serde_json::Value {
        let l = |v: &usize| self.space.label(*v).to_string();
        serde_json::json!({
            "space": self.space.to_data(),
            "a": l(&self.a),
            "b": l(&self.b),
            "base": self.base.iter().map(l).collect::<Vec<_>>(),
            "k": self.k,
        })
    }
}

/// Search limits for [`find_unsupported_witness`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SearchBudget {
    /// Largest configuration, counting `a` and `b`.
    pub max_vertices: usize,
    /// Realizations tried per candidate tuple of path sums.
    pub realizations: usize,
    /// Random spaces examined after the exhaustive phase.
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_vertices: 5, realizations: 2000, random_trials: 200, seed: 0 }
    }
}

/// Looks for a failure of `k`-supportedness.
///
/// The exhaustive phase runs over tuples of path sums `s_1 <= ... <= s_m`
/// (as multisets of carrier elements) whose infimum `t` is not the infimum
/// of any `k` of them, nor the maximum. Each such tuple is realized by
/// splitting every `s_i` as `d(a, c_i) + d(c_i, b)`, setting `d(a, b) = t`
/// and completing the base by shortest paths. The randomized phase samples
/// seeded random spaces and bases.
pub fn find_unsupported_witness(
    sg: &Arc<PosetSemigroup>,
    k: usize,
    budget: &SearchBudget,
) -> Result<Option<UnsupportedWitness>> {
    let max = sg.maximum().ok_or(Error::NoMaximum)?;
    let elems: Vec<_> = sg.elements().collect();
    let splits: Vec<Vec<_>> = elems
        .iter()
        .map(|&s| {
            elems
                .iter()
                .flat_map(|&x| elems.iter().map(move |&y| (x, y)))
                .filter(|&(x, y)| sg.add(x, y) == s)
                .collect()
        })
        .collect();

    for m in k + 1..=budget.max_vertices.saturating_sub(2) {
        for sums in elems.iter().copied().combinations_with_replacement(m) {
            let Some(t) = sg.infimum(&sums) else { continue };
            if t == max {
                continue;
            }
            let supported = (1..=k).any(|size| {
                sums.iter()
                    .copied()
                    .combinations(size)
                    .any(|sub| sg.infimum(&sub) == Some(t))
            });
            if supported || sums.iter().any(|s| splits[s.index()].is_empty()) {
                continue;
            }
            let choices = sums.iter().map(|s| splits[s.index()].iter().copied());
            for split in choices.multi_cartesian_product().take(budget.realizations) {
                let mut labels = vec!["a".to_string(), "b".to_string()];
                labels.extend((1..=m).map(|i| format!("c{i}")));
                let mut g = LabelledGraph::new(sg.clone(), labels)?;
                g.set(0, 1, t)?;
                for (i, &(x, y)) in split.iter().enumerate() {
                    g.set(0, i + 2, x)?;
                    g.set(1, i + 2, y)?;
                }
                let Ok(space) = complete_shortest_path(&g) else { continue };
                let base: Vec<usize> = (2..m + 2).collect();
                if indep(&space, &[0], &base, &[1])? && support_sets(&space, 0, &base, 1, k)?.is_empty() {
                    return Ok(Some(UnsupportedWitness { space, a: 0, b: 1, base, k }));
                }
            }
        }
    }

    for trial in 0..budget.random_trials {
        let seed = sub_seed(budget.seed, trial as u64);
        let space = match random_space(sg, budget.max_vertices.max(2), seed, None) {
            Ok(s) => s,
            Err(Error::Exhausted(_)) => continue,
            Err(e) => return Err(e),
        };
        let mut r = rng::rng(seed);
        let mut pool: Vec<usize> = (0..space.len()).collect();
        rand::seq::SliceRandom::shuffle(pool.as_mut_slice(), &mut r);
        let a = pool[0];
        let b = pool[1];
        let rest = &pool[2..];
        let base = rng::subset(&mut r, rest, k + 1, rest.len());
        if base.len() <= k || !indep(&space, &[a], &base, &[b])? {
            continue;
        }
        if support_sets(&space, a, &base, b, k)?.is_empty() {
            return Ok(Some(UnsupportedWitness { space, a, b, base, k }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{path_semigroup, product_capped};

    fn space(sg: &Arc<PosetSemigroup>, labels: &[&str], edges: &[(&str, &str, &str)]) -> MetricSpace {
        let mut g = LabelledGraph::new(sg.clone(), labels.iter().map(|s| s.to_string()).collect()).unwrap();
        for (a, b, e) in edges {
            g.set_by_label(a, b, e).unwrap();
        }
        complete_shortest_path(&g).unwrap()
    }

    fn product_example() -> MetricSpace {
        let sg = Arc::new(product_capped(3, 2).unwrap());
        space(
            &sg,
            &["a", "b", "c1", "c2"],
            &[("a", "c1", "(1,1)"), ("b", "c1", "(1,2)"), ("a", "c2", "(1,1)"), ("b", "c2", "(2,1)")],
        )
    }

    #[test]
    fn product_example_needs_both_base_points() {
        let s = product_example();
        assert!(indep(&s, &[0], &[2, 3], &[1]).unwrap());
        assert!(!indep(&s, &[0], &[2], &[1]).unwrap());
        assert!(!indep(&s, &[0], &[3], &[1]).unwrap());
        assert!(support_sets(&s, 0, &[2, 3], 1, 1).unwrap().is_empty());
        assert_eq!(support_sets(&s, 0, &[2, 3], 1, 2).unwrap(), vec![vec![2, 3]]);
    }

    #[test]
    fn empty_base_means_maximum() {
        let sg = Arc::new(path_semigroup(3).unwrap());
        let s = space(&sg, &["a", "b", "c"], &[("a", "b", "3"), ("a", "c", "1")]);
        assert!(indep(&s, &[0], &[], &[1]).unwrap());
        assert!(!indep(&s, &[0], &[], &[2]).unwrap());
    }

    #[test]
    fn self_independence_needs_membership() {
        let sg = Arc::new(path_semigroup(3).unwrap());
        let s = space(&sg, &["a", "b", "c"], &[("a", "b", "1"), ("a", "c", "2")]);
        assert!(!indep(&s, &[0], &[1, 2], &[0]).unwrap());
        assert!(!indep(&s, &[0], &[], &[0]).unwrap());
        assert!(indep(&s, &[0], &[0, 1], &[0]).unwrap());
    }

    #[test]
    fn per_pair_definition() {
        let s = product_example();
        let all = indep(&s, &[0, 2], &[3], &[1]).unwrap();
        let pairs = indep(&s, &[0], &[3], &[1]).unwrap() && indep(&s, &[2], &[3], &[1]).unwrap();
        assert_eq!(all, pairs);
    }

    #[test]
    fn chain_singleton_support() {
        let sg = Arc::new(path_semigroup(3).unwrap());
        let s = space(&sg, &["a", "b", "c"], &[("a", "c", "1"), ("c", "b", "1")]);
        let sup = support_sets(&s, 0, &[2], 1, 1).unwrap();
        assert!(sup.contains(&vec![2]));
    }

    #[test]
    fn support_requires_independence() {
        let s = product_example();
        assert!(matches!(support_sets(&s, 0, &[2], 1, 1), Err(Error::Input(_))));
    }

    #[test]
    fn witness_search() {
        let budget = SearchBudget { random_trials: 20, ..SearchBudget::default() };
        let q = Arc::new(product_capped(3, 2).unwrap());
        let w = find_unsupported_witness(&q, 1, &budget).unwrap().expect("witness");
        assert_eq!(w.base.len(), 2);
        let p = Arc::new(path_semigroup(3).unwrap());
        assert!(find_unsupported_witness(&p, 1, &budget).unwrap().is_none());
    }

    #[test]
    fn lowered_relation_differs() {
        let sg = Arc::new(path_semigroup(3).unwrap());
        let s = space(&sg, &["a", "b"], &[("a", "b", "3")]);
        assert!(ShortestPath.indep(&s, &[0], &[], &[1]).unwrap());
        assert!(!LoweredInfimum.indep(&s, &[0], &[], &[1]).unwrap());
    }
}
