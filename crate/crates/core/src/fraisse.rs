//! Amalgamation checks, finite approximations of the generic structure,
//! seeded random spaces, forbidden-triangle families and the classification
//! sweep over small semigroups.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::RngExt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesics::{compute_bound, Bound};
use crate::independence::{find_unsupported_witness, SearchBudget};
use crate::rng::{self, sub_seed};
use crate::semigroup::{enumerate_pocs, Distance, Elem, PosetSemigroup, SemigroupData};
use crate::space::{AmalgamationFailure, MetricSpace, SpaceData};

/// Largest base size accepted by [`check_amalgamation`].
pub const MAX_BASE_BOUND: usize = 3;

/// Labels in family configs may be written as JSON numbers or strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelValue {
    Int(i64),
    Str(String),
}

impl fmt::Display for LabelValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelValue::Int(i) => write!(f, "{i}"),
            LabelValue::Str(s) => write!(f, "{s}"),
        }
    }
}

/// Family config file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyConfig {
    OddPerimeter {
        name: String,
        #[serde(rename = "K1")]
        k1: u32,
        delta: u32,
    },
    Explicit {
        name: String,
        forbidden_triples: Vec<[LabelValue; 3]>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum FamilyKind {
    /// Integer distances `1..=delta`; triangles with odd perimeter below
    /// `2 * k1` are forbidden.
    OddPerimeter { k1: u32, delta: u32 },
    /// Sorted label triples.
    Explicit(BTreeSet<[String; 3]>),
}

/// A symmetric predicate on distance triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleFamily {
    name: String,
    kind: FamilyKind,
}

impl TriangleFamily {
    pub fn odd_perimeter(k1: u32, delta: u32) -> Self {
        Self { name: "cherlin_odd_perimeter".into(), kind: FamilyKind::OddPerimeter { k1, delta } }
    }

    pub fn explicit<S: Into<String>>(name: S, triples: impl IntoIterator<Item = [String; 3]>) -> Self {
        let set = triples
            .into_iter()
            .map(|mut t| {
                t.sort();
                t
            })
            .collect();
        Self { name: name.into(), kind: FamilyKind::Explicit(set) }
    }

    pub fn from_config(cfg: &FamilyConfig) -> Result<Self> {
        match cfg {
            FamilyConfig::OddPerimeter { name, k1, delta } => {
                if name != "cherlin_odd_perimeter" {
                    return Err(Error::Input(format!("unknown parametric family {name:?}")));
                }
                Ok(Self::odd_perimeter(*k1, *delta))
            }
            FamilyConfig::Explicit { name, forbidden_triples } => Ok(Self::explicit(
                name.clone(),
                forbidden_triples
                    .iter()
                    .map(|t| [t[0].to_string(), t[1].to_string(), t[2].to_string()]),
            )),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Whether the triangle with side labels `x`, `y`, `z` is forbidden.
    pub fn forbids(&self, x: &str, y: &str, z: &str) -> bool {
        match &self.kind {
            FamilyKind::OddPerimeter { k1, delta } => {
                let parse = |s: &str| s.parse::<u32>().ok().filter(|v| (1..=*delta).contains(v));
                match (parse(x), parse(y), parse(z)) {
                    (Some(a), Some(b), Some(c)) => {
                        let p = a + b + c;
                        p % 2 == 1 && p < 2 * k1
                    }
                    _ => false,
                }
            }
            FamilyKind::Explicit(set) => {
                let mut t = [x.to_string(), y.to_string(), z.to_string()];
                t.sort();
                set.contains(&t)
            }
        }
    }

    /// Checks that the family's distances are carrier labels of `sg`.
    pub fn check_carrier(&self, sg: &PosetSemigroup) -> Result<()> {
        match &self.kind {
            FamilyKind::OddPerimeter { delta, .. } => {
                let expected: Vec<String> = (1..=*delta).map(|v| v.to_string()).collect();
                if sg.labels() != expected.as_slice() {
                    return Err(Error::Input(format!(
                        "family {} expects the carrier 1..={delta}",
                        self.name
                    )));
                }
            }
            FamilyKind::Explicit(set) => {
                if let Some(bad) = set.iter().flatten().find(|l| sg.elem(l).is_none()) {
                    return Err(Error::Input(format!("family label {bad:?} is not a carrier element")));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn compile(&self, sg: &PosetSemigroup) -> Result<CompiledFamily> {
        self.check_carrier(sg)?;
        let m = sg.size();
        let mut table = vec![false; m * m * m];
        for [a, b, c] in (0..m).array_combinations::<3>().chain(
            // repeated sides
            (0..m).flat_map(|a| (0..m).map(move |b| [a, a, b])),
        ) {
            let f = self.forbids(&sg.labels()[a], &sg.labels()[b], &sg.labels()[c]);
            for (x, y, z) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                table[(x * m + y) * m + z] = f;
            }
        }
        Ok(CompiledFamily { m, table })
    }
}

pub(crate) struct CompiledFamily {
    m: usize,
    table: Vec<bool>,
}

impl CompiledFamily {
    fn forbids(&self, x: Distance, y: Distance, z: Distance) -> bool {
        match (x, y, z) {
            (Distance::Elem(a), Distance::Elem(b), Distance::Elem(c)) => {
                self.table[(a.index() * self.m + b.index()) * self.m + c.index()]
            }
            _ => false,
        }
    }

    /// First forbidden triangle through vertex `x`.
    fn through(&self, s: &MetricSpace, x: usize) -> Option<ForbiddenTriangle> {
        (0..s.len())
            .filter(|&u| u != x)
            .array_combinations()
            .find(|&[u, v]| self.forbids(s.d(u, v), s.d(u, x), s.d(v, x)))
            .map(|[u, v]| ForbiddenTriangle::new(s, u, v, x))
    }
}

/// A vertex triple whose distances the family forbids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenTriangle {
    pub vertices: [String; 3],
    pub distances: [String; 3],
}

impl ForbiddenTriangle {
    fn new(s: &MetricSpace, a: usize, b: usize, c: usize) -> Self {
        let sg = s.semigroup();
        let l = |d| sg.distance_label(d).to_string();
        Self {
            vertices: [s.label(a).into(), s.label(b).into(), s.label(c).into()],
            distances: [l(s.d(a, b)), l(s.d(b, c)), l(s.d(a, c))],
        }
    }
}

impl fmt::Display for ForbiddenTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "forbidden triangle ({}) with sides ({})",
            self.vertices.join(","),
            self.distances.join(",")
        )
    }
}

/// Every vertex triple of `s` whose distance triple `family` forbids.
pub fn check_forbidden(s: &MetricSpace, family: &TriangleFamily) -> Result<Vec<ForbiddenTriangle>> {
    let compiled = family.compile(s.semigroup())?;
    Ok((0..s.len())
        .array_combinations()
        .filter(|&[a, b, c]| compiled.forbids(s.d(a, b), s.d(b, c), s.d(a, c)))
        .map(|[a, b, c]| ForbiddenTriangle::new(s, a, b, c))
        .collect())
}

fn forbidden_error(t: ForbiddenTriangle) -> Error {
    Error::Amalgamation(Box::new(AmalgamationFailure { reason: t.to_string(), triangle: None }))
}

/// Identifier used in reports: canonical for small carriers, the labelled
/// encoding otherwise.
pub fn semigroup_id(sg: &PosetSemigroup) -> String {
    if sg.size() <= 5 {
        sg.canonical_id()
    } else {
        crate::semigroup::render_code(sg.size(), &sg.encoding())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmalgamationWitness {
    pub base: SpaceData,
    pub extension1: Vec<String>,
    pub extension2: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmalgamationReport {
    pub semigroup: String,
    pub base_bound: usize,
    pub family: Option<String>,
    pub passed: bool,
    pub bases_checked: usize,
    pub pairs_checked: usize,
    pub failure: Option<AmalgamationWitness>,
}

/// Every valid (and family-respecting) space on `n` vertices, one per
/// isomorphism class, as upper-triangle element vectors.
fn base_classes(sg: &Arc<PosetSemigroup>, n: usize, family: Option<&CompiledFamily>) -> Result<Vec<MetricSpace>> {
    let pairs: Vec<[usize; 2]> = (0..n).array_combinations().collect();
    let m = sg.size();
    let count = (m as f64).powi(pairs.len() as i32);
    if count > 2e7 {
        return Err(Error::Input(format!("{count} candidate bases on {n} vertices is too many")));
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let pair_index = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == [a, b]).expect("pair")
    };
    let labels: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let mut out = Vec::new();
    let elems: Vec<Elem> = sg.elements().collect();
    for code in std::iter::repeat_n(elems.iter().copied(), pairs.len()).multi_cartesian_product() {
        let canonical = perms.iter().all(|p| {
            let permuted: Vec<Elem> = pairs.iter().map(|&[a, b]| code[pair_index(p[a], p[b])]).collect();
            permuted >= code
        });
        if !canonical {
            continue;
        }
        let mut matrix = vec![vec![Elem(0); n]; n];
        for (&[a, b], &e) in pairs.iter().zip(&code) {
            matrix[a][b] = e;
            matrix[b][a] = e;
        }
        let Ok(space) = MetricSpace::from_elements(sg.clone(), labels.clone(), &matrix) else { continue };
        if let Some(f) = family {
            if (0..n).any(|x| f.through(&space, x).is_some()) {
                continue;
            }
        }
        out.push(space);
    }
    Ok(out)
}

/// Distance vectors of valid one-point extensions of `base`.
fn extension_types(base: &MetricSpace, family: Option<&CompiledFamily>) -> Vec<Vec<Elem>> {
    let sg = base.semigroup();
    let n = base.len();
    let all: Vec<usize> = (0..n).collect();
    let elems: Vec<Elem> = sg.elements().collect();
    std::iter::repeat_n(elems.iter().copied(), n)
        .multi_cartesian_product()
        .filter(|v| valid_extension(base, &all, v, family))
        .collect()
}

/// Whether a new point at distances `v` from `vertices` keeps that part of
/// the space valid.
fn valid_extension(s: &MetricSpace, vertices: &[usize], v: &[Elem], family: Option<&CompiledFamily>) -> bool {
    let sg = s.semigroup();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let d = s.d(vertices[i], vertices[j]);
            let (x, y) = (Distance::Elem(v[i]), Distance::Elem(v[j]));
            if !sg.leq_dist(d, sg.add_dist(x, y))
                || !sg.leq_dist(x, sg.add_dist(d, y))
                || !sg.leq_dist(y, sg.add_dist(d, x))
            {
                return false;
            }
            if family.is_some_and(|f| f.forbids(d, x, y)) {
                return false;
            }
        }
    }
    true
}

/// Verifies that any two one-point extensions of any base with at most
/// `base_bound` vertices have a valid shortest-path amalgam.
pub fn check_amalgamation(
    sg: &Arc<PosetSemigroup>,
    base_bound: usize,
    family: Option<&TriangleFamily>,
) -> Result<AmalgamationReport> {
    if base_bound > MAX_BASE_BOUND {
        return Err(Error::Input(format!("base bound is capped at {MAX_BASE_BOUND}")));
    }
    let max = sg.maximum().ok_or(Error::NoMaximum)?;
    let compiled = family.map(|f| f.compile(sg)).transpose()?;
    let mut bases = Vec::new();
    for n in 0..=base_bound {
        bases.extend(base_classes(sg, n, compiled.as_ref())?);
    }
    let results: Vec<(usize, Option<AmalgamationWitness>)> = bases
        .par_iter()
        .map(|base| {
            let types = extension_types(base, compiled.as_ref());
            let mut pairs = 0;
            for (i, t1) in types.iter().enumerate() {
                for t2 in &types[i..] {
                    pairs += 1;
                    if let Some(reason) = amalgam_failure(base, t1, t2, max, compiled.as_ref()) {
                        let l = |t: &[Elem]| t.iter().map(|&e| sg.label(e).to_string()).collect();
                        let w = AmalgamationWitness {
                            base: base.to_data(),
                            extension1: l(t1),
                            extension2: l(t2),
                            reason,
                        };
                        return (pairs, Some(w));
                    }
                }
            }
            (pairs, None)
        })
        .collect();
    let failure = results.iter().find_map(|(_, w)| w.clone());
    let failed_at = results.iter().position(|(_, w)| w.is_some());
    let upto = failed_at.map_or(results.len(), |i| i + 1);
    Ok(AmalgamationReport {
        semigroup: semigroup_id(sg),
        base_bound,
        family: family.map(|f| f.name().to_string()),
        passed: failure.is_none(),
        bases_checked: upto,
        pairs_checked: results[..upto].iter().map(|(p, _)| p).sum(),
        failure,
    })
}

fn amalgam_failure(
    base: &MetricSpace,
    t1: &[Elem],
    t2: &[Elem],
    max: Elem,
    family: Option<&CompiledFamily>,
) -> Option<String> {
    let all: Vec<usize> = (0..base.len()).collect();
    let with_p = match base.extend_point(&all, t1, "p") {
        Ok(s) => s,
        Err(e) => return Some(e.to_string()),
    };
    let n = base.len();
    // q sits at t2 from the base; its distance to p is forced by the base
    let sg = base.semigroup();
    let pq = if n == 0 {
        max
    } else {
        match sg.infimum(&t1.iter().zip(t2).map(|(&x, &y)| sg.add(x, y)).collect::<Vec<_>>()) {
            Some(e) => e,
            None => return Some("no infimum for the distance between the new points".into()),
        }
    };
    let mut dists = t2.to_vec();
    dists.push(pq);
    let mut base_and_p = all.clone();
    base_and_p.push(n);
    let full = match with_p.extend_point(&base_and_p, &dists, "q") {
        Ok(s) => s,
        Err(e) => return Some(e.to_string()),
    };
    family.and_then(|f| f.through(&full, n + 1)).map(|t| t.to_string())
}

/// Bounds for [`build_generic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericParams {
    pub rounds: usize,
    pub max_base: usize,
    pub max_vertices: usize,
}

impl Default for GenericParams {
    fn default() -> Self {
        Self { rounds: 3, max_base: 2, max_vertices: 12 }
    }
}

/// Finite approximation of the generic structure. Each round collects the
/// one-point extension types over vertex subsets of size `1..=max_base` not
/// yet realized, shuffles them with the round's seed and adjoins each one
/// still missing by shortest-path amalgamation over its base.
pub fn build_generic(
    sg: &Arc<PosetSemigroup>,
    params: GenericParams,
    seed: u64,
    family: Option<&TriangleFamily>,
) -> Result<MetricSpace> {
    if params.rounds == 0 || params.max_base == 0 || params.max_vertices == 0 {
        return Err(Error::Input("generic build bounds must be positive".into()));
    }
    let compiled = family.map(|f| f.compile(sg)).transpose()?;
    let elems: Vec<Elem> = sg.elements().collect();
    let mut space = MetricSpace::point(sg.clone(), "v0");
    for round in 0..params.rounds {
        if space.len() >= params.max_vertices {
            break;
        }
        let mut types: Vec<(Vec<usize>, Vec<Elem>)> = Vec::new();
        for size in 1..=params.max_base.min(space.len()) {
            for base in (0..space.len()).combinations(size) {
                for v in std::iter::repeat_n(elems.iter().copied(), size).multi_cartesian_product() {
                    if valid_extension(&space, &base, &v, compiled.as_ref()) && !realized(&space, &base, &v) {
                        types.push((base.clone(), v));
                    }
                }
            }
        }
        if types.is_empty() {
            break;
        }
        types.shuffle(&mut rng::rng(sub_seed(seed, round as u64)));
        for (base, v) in types {
            if space.len() >= params.max_vertices {
                break;
            }
            if realized(&space, &base, &v) {
                continue;
            }
            let label = format!("v{}", space.len());
            space = space.extend_point(&base, &v, label)?;
            if let Some(t) = compiled.as_ref().and_then(|f| f.through(&space, space.len() - 1)) {
                return Err(forbidden_error(t));
            }
        }
    }
    Ok(space)
}

fn realized(s: &MetricSpace, base: &[usize], v: &[Elem]) -> bool {
    (0..s.len())
        .filter(|x| !base.contains(x))
        .any(|x| base.iter().zip(v).all(|(&b, &e)| s.d(x, b) == Distance::Elem(e)))
}

const RANDOM_ATTEMPTS: usize = 64;

/// An `n`-vertex space grown one point at a time: each new point gets random
/// distances to a random subset of the existing points and shortest-path
/// distances to the rest. Rejected extensions are retried.
pub fn random_space(
    sg: &Arc<PosetSemigroup>,
    n: usize,
    seed: u64,
    family: Option<&TriangleFamily>,
) -> Result<MetricSpace> {
    if n == 0 {
        return Err(Error::Input("random space needs at least one vertex".into()));
    }
    if n > 1 && sg.maximum().is_none() {
        return Err(Error::NoMaximum);
    }
    let compiled = family.map(|f| f.compile(sg)).transpose()?;
    let mut r = rng::rng(seed);
    let m = sg.size();
    let mut space = MetricSpace::point(sg.clone(), "v0");
    while space.len() < n {
        let len = space.len();
        let mut next = None;
        for attempt in 0..RANDOM_ATTEMPTS {
            let mut order: Vec<usize> = (0..len).collect();
            order.shuffle(&mut r);
            // late attempts fall back to a single base point, which always amalgamates
            let j = if attempt >= RANDOM_ATTEMPTS / 2 { 1 } else { r.random_range(1..=len) };
            let base = &order[..j];
            let dists: Vec<Elem> = (0..j).map(|_| Elem(r.random_range(0..m) as u8)).collect();
            let Ok(candidate) = space.extend_point(base, &dists, format!("v{len}")) else { continue };
            if compiled.as_ref().is_some_and(|f| f.through(&candidate, len).is_some()) {
                continue;
            }
            next = Some(candidate);
            break;
        }
        space = next.ok_or(Error::Exhausted(RANDOM_ATTEMPTS))?;
    }
    Ok(space)
}

/// One row of the classification table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub id: String,
    pub size: usize,
    pub semigroup: SemigroupData,
    pub valid: bool,
    pub archimedean: bool,
    pub has_maximum: bool,
    pub has_identity: bool,
    pub binary_infima: bool,
    /// `None` when there is no maximum.
    pub amalgamation: Option<bool>,
    pub bound: Option<usize>,
    /// `None` when the search could not run (no maximum or missing infima).
    pub one_supported: Option<bool>,
}

/// Fold lengths searched for the boundedness constant in classification.
pub const CLASSIFY_MAX_LEN: usize = 16;

/// Flags every enumerated semigroup with carrier size at most `max_size`.
pub fn classify_semigroups(max_size: usize, base_bound: usize) -> Result<Vec<ClassificationRow>> {
    if base_bound > MAX_BASE_BOUND {
        return Err(Error::Input(format!("base bound is capped at {MAX_BASE_BOUND}")));
    }
    let all = enumerate_pocs(max_size)?;
    all.into_par_iter()
        .map(|sg| {
            let sg = Arc::new(sg);
            let has_maximum = sg.maximum().is_some();
            let amalgamation = if has_maximum {
                Some(check_amalgamation(&sg, base_bound, None)?.passed)
            } else {
                None
            };
            let bound = match compute_bound(&sg, CLASSIFY_MAX_LEN) {
                Ok(Bound::Exact(k)) => Some(k),
                _ => None,
            };
            let budget = SearchBudget { max_vertices: 5, realizations: 200, random_trials: 20, seed: 0 };
            let one_supported = find_unsupported_witness(&sg, 1, &budget).ok().map(|w| w.is_none());
            Ok(ClassificationRow {
                id: sg.canonical_id(),
                size: sg.size(),
                semigroup: sg.to_data(),
                valid: true,
                archimedean: sg.is_archimedean().holds,
                has_maximum,
                has_identity: sg.identity().is_some(),
                binary_infima: sg.has_binary_infima(),
                amalgamation,
                bound,
                one_supported,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{path_semigroup, product_capped};
    use crate::space::LabelledGraph;

    fn arc(sg: PosetSemigroup) -> Arc<PosetSemigroup> {
        Arc::new(sg)
    }

    #[test]
    fn odd_perimeter_family() {
        let f = TriangleFamily::odd_perimeter(2, 3);
        assert!(f.forbids("1", "1", "1"));
        assert!(!f.forbids("1", "1", "2"));
        let g = TriangleFamily::odd_perimeter(1, 3);
        for t in (1..=3).combinations_with_replacement(3) {
            assert!(!g.forbids(&t[0].to_string(), &t[1].to_string(), &t[2].to_string()));
        }
    }

    #[test]
    fn family_config_parsing() {
        let cfg: FamilyConfig = serde_json::from_str(r#"{"name":"cherlin_odd_perimeter","K1":2,"delta":3}"#).unwrap();
        let f = TriangleFamily::from_config(&cfg).unwrap();
        assert!(f.forbids("1", "1", "1"));
        let cfg: FamilyConfig = serde_json::from_str(r#"{"name":"custom","forbidden_triples":[[1,2,"3"]]}"#).unwrap();
        let f = TriangleFamily::from_config(&cfg).unwrap();
        assert!(f.forbids("3", "1", "2"));
        assert!(!f.forbids("1", "1", "2"));
    }

    #[test]
    fn forbidden_check_on_space() {
        let sg = arc(path_semigroup(3).unwrap());
        let mut g = LabelledGraph::new(sg.clone(), vec!["a".into(), "b".into(), "c".into()]).unwrap();
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            g.set(a, b, Elem(0)).unwrap();
        }
        let s = MetricSpace::from_graph(&g).unwrap();
        let bad = check_forbidden(&s, &TriangleFamily::odd_perimeter(2, 3)).unwrap();
        assert_eq!(bad.len(), 1);
        let q = arc(product_capped(3, 2).unwrap());
        let p = random_space(&q, 3, 1, None).unwrap();
        assert!(matches!(check_forbidden(&p, &TriangleFamily::odd_perimeter(2, 3)), Err(Error::Input(_))));
    }

    #[test]
    fn base_classes_on_path() {
        let sg = arc(path_semigroup(3).unwrap());
        assert_eq!(base_classes(&sg, 0, None).unwrap().len(), 1);
        assert_eq!(base_classes(&sg, 1, None).unwrap().len(), 1);
        assert_eq!(base_classes(&sg, 2, None).unwrap().len(), 3);
        // triangles up to isomorphism are sorted side triples with z <= x + y
        let brute = (1..=3)
            .combinations_with_replacement(3)
            .filter(|t| t[2] <= t[0] + t[1])
            .count();
        assert_eq!(base_classes(&sg, 3, None).unwrap().len(), brute);
    }

    #[test]
    fn amalgamation_passes_for_path() {
        let sg = arc(path_semigroup(3).unwrap());
        let r = check_amalgamation(&sg, 2, None).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.pairs_checked > 0);
    }

    #[test]
    fn generic_realizes_all_distances() {
        let sg = arc(path_semigroup(3).unwrap());
        let params = GenericParams { rounds: 1, max_base: 1, max_vertices: 10 };
        let s = build_generic(&sg, params, 5, None).unwrap();
        let from_seed: BTreeSet<&str> = (1..s.len()).map(|v| sg.distance_label(s.d(0, v))).collect();
        assert_eq!(from_seed, BTreeSet::from(["1", "2", "3"]));
    }

    #[test]
    fn generic_is_deterministic() {
        let sg = arc(product_capped(3, 2).unwrap());
        let a = build_generic(&sg, GenericParams::default(), 9, None).unwrap();
        let b = build_generic(&sg, GenericParams::default(), 9, None).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a.check_triangles().is_empty());
    }

    #[test]
    fn random_space_examples() {
        let sg = arc(path_semigroup(3).unwrap());
        assert_eq!(random_space(&sg, 1, 0, None).unwrap().len(), 1);
        assert_eq!(random_space(&sg, 2, 0, None).unwrap().len(), 2);
        let s = random_space(&sg, 10, 42, None).unwrap();
        assert!(s.check_triangles().is_empty());
        assert!(random_space(&sg, 0, 0, None).is_err());
    }
}
