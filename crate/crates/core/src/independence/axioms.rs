//! Seeded property checks of the independence axioms on finite fragments.
//!
//! Each trial picks a fragment from a small pool, draws disjoint vertex sets
//! and either evaluates the axiom on the fragment directly or first builds a
//! configuration by amalgamation in which the premises hold for the
//! shortest-path relation. Types are compared as induced distance matrices.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::RngExt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Independence, ShortestPath};
use crate::error::{Error, Result};
use crate::fraisse::{build_generic, random_space, GenericParams};
use crate::rng::{self, sub_seed, Rng};
use crate::semigroup::PosetSemigroup;
use crate::space::{amalgam_over, MetricSpace, SpaceData};

const FRAGMENT_POOL: usize = 8;

const NOTE: &str = "sampled checks on finite fragments are evidence, not proof";

/// Where fragments come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FragmentSource {
    Random { vertices: usize },
    Generic(GenericParams),
}

impl Default for FragmentSource {
    fn default() -> Self {
        FragmentSource::Generic(GenericParams::default())
    }
}

impl FragmentSource {
    pub fn build(&self, sg: &Arc<PosetSemigroup>, seed: u64) -> Result<MetricSpace> {
        match *self {
            FragmentSource::Random { vertices } => random_space(sg, vertices, seed, None),
            FragmentSource::Generic(params) => build_generic(sg, params, seed, None),
        }
    }
}

/// Upper bounds on sampled set sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingBounds {
    pub max_a: usize,
    pub max_b: usize,
    pub max_c: usize,
}

impl Default for SamplingBounds {
    fn default() -> Self {
        Self { max_a: 3, max_b: 3, max_c: 4 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub source: FragmentSource,
    pub trials: usize,
    pub seed: u64,
    pub bounds: SamplingBounds,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self { source: FragmentSource::default(), trials: 1000, seed: 0, bounds: SamplingBounds::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Sir,
    MetricLike,
    Derived,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Sir => "sir",
            Suite::MetricLike => "metric-like",
            Suite::Derived => "derived",
        }
    }

    pub fn axioms(self) -> &'static [&'static str] {
        match self {
            Suite::Sir => &[
                "invariance",
                "symmetry",
                "monotonicity",
                "existence",
                "transitivity",
                "stationarity",
                "base_absorption",
                "pairwise_free_union",
            ],
            Suite::MetricLike => &["self_dependence", "dependent_pair", "perfect_triviality"],
            Suite::Derived => &["metricity", "triviality"],
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sir" => Ok(Suite::Sir),
            "metric-like" => Ok(Suite::MetricLike),
            "derived" => Ok(Suite::Derived),
            _ => Err(Error::Input(format!("unknown suite {s:?} (expected sir, metric-like or derived)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub space: SpaceData,
    pub sets: BTreeMap<String, Vec<String>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub axiom: String,
    pub passed: bool,
    pub trials: usize,
    /// Trials whose premises held.
    pub instances: usize,
    pub seed: u64,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub suite: String,
    pub relation: String,
    pub seed: u64,
    pub trials: usize,
    pub fragments: FragmentSource,
    pub bounds: SamplingBounds,
    /// Some fragments could not be built, so fewer distinct fragments were used.
    pub partial: bool,
    pub passed: bool,
    pub outcomes: Vec<AxiomOutcome>,
    pub note: String,
}

impl AxiomReport {
    pub fn failures(&self) -> impl Iterator<Item = &AxiomOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

pub fn check_sir_axioms(sg: &Arc<PosetSemigroup>, cfg: &CheckConfig) -> Result<AxiomReport> {
    check_suite(&ShortestPath, Suite::Sir, sg, cfg)
}

pub fn check_metric_like(sg: &Arc<PosetSemigroup>, cfg: &CheckConfig) -> Result<AxiomReport> {
    check_suite(&ShortestPath, Suite::MetricLike, sg, cfg)
}

pub fn check_derived(sg: &Arc<PosetSemigroup>, cfg: &CheckConfig) -> Result<AxiomReport> {
    check_suite(&ShortestPath, Suite::Derived, sg, cfg)
}

/// Runs every axiom of `suite` for the relation `rel`.
pub fn check_suite(
    rel: &dyn Independence,
    suite: Suite,
    sg: &Arc<PosetSemigroup>,
    cfg: &CheckConfig,
) -> Result<AxiomReport> {
    if sg.maximum().is_none() {
        return Err(Error::NoMaximum);
    }
    if cfg.bounds.max_a == 0 || cfg.bounds.max_b == 0 {
        return Err(Error::Input("sampling bounds for A and B must be positive".into()));
    }
    let pool = FRAGMENT_POOL.min(cfg.trials.max(1));
    let built: Vec<Result<MetricSpace>> =
        (0..pool).into_par_iter().map(|i| cfg.source.build(sg, sub_seed(cfg.seed, i as u64))).collect();
    let mut fragments = Vec::new();
    let mut partial = false;
    let mut build_failure = None;
    for b in built {
        match b {
            Ok(s) => fragments.push(s),
            Err(Error::Exhausted(_)) => partial = true,
            Err(e) if e.is_finding() => {
                build_failure.get_or_insert_with(|| Counterexample {
                    space: MetricSpace::point(sg.clone(), "v0").to_data(),
                    sets: BTreeMap::new(),
                    detail: format!("fragment build failed: {e}"),
                });
            }
            Err(e) => return Err(e),
        }
    }

    let mut outcomes = Vec::new();
    if let Some(cx) = build_failure {
        outcomes.push(AxiomOutcome {
            axiom: "fragment_build".into(),
            passed: false,
            trials: pool,
            instances: pool,
            seed: cfg.seed,
            counterexample: Some(cx),
        });
    }
    for &name in suite.axioms() {
        outcomes.push(run_axiom(name, rel, &fragments, cfg)?);
    }
    Ok(AxiomReport {
        suite: suite.name().into(),
        relation: rel.name().into(),
        seed: cfg.seed,
        trials: cfg.trials,
        fragments: cfg.source,
        bounds: cfg.bounds,
        partial: partial || fragments.is_empty(),
        passed: outcomes.iter().all(|o| o.passed),
        outcomes,
        note: NOTE.into(),
    })
}

enum Verdict {
    Vacuous,
    Held,
    Failed(Counterexample),
}

type AxiomFn = fn(&dyn Independence, &MetricSpace, &mut Rng, &SamplingBounds) -> Result<Verdict>;

fn axiom_fn(name: &str) -> AxiomFn {
    match name {
        "invariance" => invariance,
        "symmetry" => symmetry,
        "monotonicity" => monotonicity,
        "existence" => existence,
        "transitivity" => transitivity,
        "stationarity" => stationarity,
        "base_absorption" => base_absorption,
        "pairwise_free_union" => pairwise_free_union,
        "self_dependence" => self_dependence,
        "dependent_pair" => dependent_pair,
        "perfect_triviality" => perfect_triviality,
        "metricity" => metricity,
        "triviality" => triviality,
        _ => unreachable!("unknown axiom {name}"),
    }
}

fn salt(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn run_axiom(name: &str, rel: &dyn Independence, fragments: &[MetricSpace], cfg: &CheckConfig) -> Result<AxiomOutcome> {
    let f = axiom_fn(name);
    let trials = if fragments.is_empty() { 0 } else { cfg.trials };
    let base_seed = sub_seed(cfg.seed, salt(name));
    let results: Vec<Result<Verdict>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let frag = &fragments[t % fragments.len()];
            let mut r = rng::rng(sub_seed(base_seed, t as u64));
            match f(rel, frag, &mut r, &cfg.bounds) {
                Err(e) if e.is_finding() => Ok(Verdict::Failed(Config::new(frag.clone()).fail(e.to_string()))),
                other => other,
            }
        })
        .collect();
    let mut instances = 0;
    let mut counterexample = None;
    for v in results {
        match v? {
            Verdict::Vacuous => {}
            Verdict::Held => instances += 1,
            Verdict::Failed(cx) => {
                instances += 1;
                counterexample.get_or_insert(cx);
            }
        }
    }
    Ok(AxiomOutcome {
        axiom: name.into(),
        passed: counterexample.is_none(),
        trials,
        instances,
        seed: cfg.seed,
        counterexample,
    })
}

/// A space with named vertex sets.
#[derive(Clone)]
struct Config {
    space: MetricSpace,
    sets: Vec<(&'static str, Vec<usize>)>,
}

impl Config {
    fn new(space: MetricSpace) -> Self {
        Self { space, sets: Vec::new() }
    }

    fn with(mut self, name: &'static str, set: Vec<usize>) -> Self {
        self.sets.push((name, set));
        self
    }

    fn get(&self, name: &str) -> &[usize] {
        &self.sets.iter().find(|(n, _)| *n == name).expect("named set").1
    }

    /// Concatenation of the named sets without repeats, in order.
    fn union(&self, names: &[&str]) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for v in names.iter().flat_map(|n| self.get(n)) {
            if !out.contains(v) {
                out.push(*v);
            }
        }
        out
    }

    fn indep(&self, rel: &dyn Independence, a: &[&str], c: &[&str], b: &[&str]) -> Result<bool> {
        rel.indep(&self.space, &self.union(a), &self.union(c), &self.union(b))
    }

    fn fail(&self, detail: impl Into<String>) -> Counterexample {
        Counterexample {
            space: self.space.to_data(),
            sets: self
                .sets
                .iter()
                .map(|(n, s)| (n.to_string(), s.iter().map(|&v| self.space.label(v).to_string()).collect()))
                .collect(),
            detail: detail.into(),
        }
    }

    fn verdict(&self, ok: bool, detail: impl FnOnce() -> String) -> Verdict {
        if ok {
            Verdict::Held
        } else {
            Verdict::Failed(self.fail(detail()))
        }
    }
}

/// Amalgam of the part of `l` spanned by `lnames` and `base` with the part
/// of `r` spanned by `rnames` and `base`, over the sets named in `base`.
fn glue(l: &Config, lnames: &[&'static str], r: &Config, rnames: &[&'static str], base: &[&'static str]) -> Result<Config> {
    let keep = |c: &Config, names: &[&'static str]| {
        let mut v = c.union(names);
        v.extend(c.union(base));
        v.sort_unstable();
        v.dedup();
        v
    };
    let (lkeep, rkeep) = (keep(l, lnames), keep(r, rnames));
    let lpos = |v: usize| lkeep.binary_search(&v).expect("kept vertex");
    let rpos = |v: usize| rkeep.binary_search(&v).expect("kept vertex");
    let lbase: Vec<usize> = l.union(base).into_iter().map(lpos).collect();
    let rbase: Vec<usize> = r.union(base).into_iter().map(rpos).collect();
    let am = amalgam_over(&l.space.induced(&lkeep)?, &lbase, &r.space.induced(&rkeep)?, &rbase)?;
    let mut sets = Vec::new();
    for &n in lnames.iter().chain(base) {
        if !sets.iter().any(|(m, _)| *m == n) {
            sets.push((n, l.get(n).iter().map(|&v| lpos(v)).collect()));
        }
    }
    for &n in rnames {
        debug_assert!(!sets.iter().any(|(m, _)| *m == n));
        sets.push((n, r.get(n).iter().map(|&v| am.right[rpos(v)]).collect()));
    }
    Ok(Config { space: am.space, sets })
}

/// Shuffled vertices of the fragment, drawn from in sequence so that the
/// sampled sets are disjoint.
struct Draw<'r> {
    pool: Vec<usize>,
    rng: &'r mut Rng,
}

impl<'r> Draw<'r> {
    fn new(s: &MetricSpace, rng: &'r mut Rng) -> Self {
        let mut pool: Vec<usize> = (0..s.len()).collect();
        pool.shuffle(rng);
        Self { pool, rng }
    }

    fn set(&mut self, min: usize, max: usize) -> Vec<usize> {
        let hi = max.min(self.pool.len());
        let k = self.rng.random_range(min.min(hi)..=hi);
        rng::take(&mut self.pool, k)
    }

    fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn invariance(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let mut d = Draw::new(s, r);
    let (a, c, bb) = (d.set(1, b.max_a), d.set(0, b.max_c), d.set(1, b.max_b));
    let cfg = Config::new(s.clone()).with("A", a).with("C", c).with("B", bb);
    let here = cfg.indep(rel, &["A"], &["C"], &["B"])?;

    let mut perm: Vec<usize> = (0..s.len()).collect();
    perm.shuffle(d.rng);
    let mut inv = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v] = i;
    }
    let relabel = |c: &Config, m: &dyn Fn(usize) -> usize, space: MetricSpace| Config {
        space,
        sets: c.sets.iter().map(|(n, v)| (*n, v.iter().map(|&x| m(x)).collect())).collect(),
    };
    let permuted = relabel(&cfg, &|v| inv[v], s.induced(&perm)?);
    let moved = permuted.indep(rel, &["A"], &["C"], &["B"])?;

    let mut keep = cfg.union(&["A", "C", "B"]);
    keep.sort_unstable();
    let restricted = relabel(&cfg, &|v| keep.binary_search(&v).expect("kept"), s.induced(&keep)?);
    let small = restricted.indep(rel, &["A"], &["C"], &["B"])?;

    Ok(cfg.verdict(here == moved && here == small, || {
        format!(
            "A ⫫_C B {} in the fragment, {} after reordering vertices, {} on the induced substructure",
            yes(here),
            yes(moved),
            yes(small)
        )
    }))
}

/// Sampled sets `A`, `C`, `B` plus `extra` further named sets; on a coin
/// flip the configuration is rebuilt as the amalgam of `A ∪ C` with
/// `B ∪ C ∪ extra` over `C`.
fn independent_or_sampled(s: &MetricSpace, r: &mut Rng, b: &SamplingBounds, extra: &[&'static str]) -> Result<Config> {
    let mut d = Draw::new(s, r);
    let mut cfg = Config::new(s.clone())
        .with("A", d.set(1, b.max_a))
        .with("C", d.set(0, b.max_c))
        .with("B", d.set(1, b.max_b));
    for &n in extra {
        cfg = cfg.with(n, d.set(1, b.max_b));
    }
    if d.coin() {
        let mut right = vec!["B"];
        right.extend_from_slice(extra);
        cfg = glue(&cfg, &["A"], &cfg, &right, &["C"])?;
    }
    Ok(cfg)
}

fn symmetry(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let cfg = independent_or_sampled(s, r, b, &[])?;
    if !cfg.indep(rel, &["A"], &["C"], &["B"])? {
        return Ok(Verdict::Vacuous);
    }
    let ok = cfg.indep(rel, &["B"], &["C"], &["A"])?;
    Ok(cfg.verdict(ok, || "A ⫫_C B holds but B ⫫_C A fails".into()))
}

fn monotonicity(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let cfg = independent_or_sampled(s, r, b, &["D"])?;
    if !cfg.indep(rel, &["A"], &["C"], &["B", "D"])? {
        return Ok(Verdict::Vacuous);
    }
    let first = cfg.indep(rel, &["A"], &["C"], &["B"])?;
    let second = cfg.indep(rel, &["A"], &["B", "C"], &["D"])?;
    Ok(cfg.verdict(first && second, || {
        format!("A ⫫_C BD holds; A ⫫_C B {}, A ⫫_BC D {}", yes(first), yes(second))
    }))
}

fn existence(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let mut d = Draw::new(s, r);
    let cfg = Config::new(s.clone()).with("A", d.set(1, b.max_a)).with("C", d.set(0, b.max_c)).with("B", d.set(1, b.max_b));
    let x = match glue(&cfg, &["A"], &cfg, &["B"], &["C"]) {
        Ok(x) => x,
        Err(e) if e.is_finding() => return Ok(Verdict::Failed(cfg.fail(format!("no amalgam of AC and BC over C: {e}")))),
        Err(e) => return Err(e),
    };
    let ac = cfg.union(&["A", "C"]);
    let ac2 = x.union(&["A", "C"]);
    let same_type = ac.iter().zip(&ac2).all(|(&u, &u2)| ac.iter().zip(&ac2).all(|(&v, &v2)| s.d(u, v) == x.space.d(u2, v2)));
    let indep = x.indep(rel, &["A"], &["C"], &["B"])?;
    Ok(x.verdict(same_type && indep, || {
        if same_type {
            "the amalgam copy A of the type over C is not independent from B over C".into()
        } else {
            "the amalgam copy does not realize the type of A over C".into()
        }
    }))
}

fn transitivity(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let mut d = Draw::new(s, r);
    let frag = Config::new(s.clone())
        .with("A", d.set(1, b.max_a))
        .with("C", d.set(0, b.max_c))
        .with("B", d.set(1, b.max_b))
        .with("B2", d.set(1, b.max_b));
    let cfg = if d.coin() {
        let y = glue(&frag, &["A"], &frag, &["B"], &["C"])?;
        glue(&y, &["A"], &frag, &["B2"], &["B", "C"])?
    } else {
        frag
    };
    if !cfg.indep(rel, &["A"], &["C"], &["B"])? || !cfg.indep(rel, &["A"], &["B", "C"], &["B2"])? {
        return Ok(Verdict::Vacuous);
    }
    let ok = cfg.indep(rel, &["A"], &["C"], &["B2"])?;
    Ok(cfg.verdict(ok, || "A ⫫_C B and A ⫫_BC B2 hold but A ⫫_C B2 fails".into()))
}

fn stationarity(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let mut d = Draw::new(s, r);
    let a = d.set(1, b.max_a);
    let frag = Config::new(s.clone())
        .with("A", a.clone())
        .with("C", d.set(0, b.max_c))
        .with("B", d.set(1, b.max_b))
        .with("A2", a);

    if frag.get("A").len() == 1 && d.coin() {
        // two realizations inside the fragment
        let (a, c, bb) = (frag.get("A")[0], frag.get("C"), frag.get("B"));
        let bc = frag.union(&["B", "C"]);
        if !rel.indep(s, &[a], c, bb)? {
            return Ok(Verdict::Vacuous);
        }
        let mut seen = false;
        for v in (0..s.len()).filter(|&v| v != a && !bc.contains(&v)) {
            if s.same_type_over(&[a], &[v], c)? && rel.indep(s, &[v], c, bb)? {
                seen = true;
                if !s.same_type_over(&[a], &[v], &bc)? {
                    let cfg = frag.clone().with("A'", vec![v]);
                    return Ok(Verdict::Failed(cfg.fail(
                        "A and A' have the same type over C and are independent from B over C, but differ over BC",
                    )));
                }
            }
        }
        return Ok(if seen { Verdict::Held } else { Verdict::Vacuous });
    }

    let y = glue(&frag, &["A"], &frag, &["B"], &["C"])?;
    let z = glue(&y, &["A", "B"], &frag, &["A2"], &["C"])?;
    let (a1, a2, c) = (z.get("A"), z.get("A2"), z.get("C"));
    if !z.space.same_type_over(a1, a2, c)?
        || !z.indep(rel, &["A"], &["C"], &["B"])?
        || !z.indep(rel, &["A2"], &["C"], &["B"])?
    {
        return Ok(Verdict::Vacuous);
    }
    let ok = z.space.same_type_over(a1, a2, &z.union(&["B", "C"]))?;
    Ok(z.verdict(ok, || {
        "A and A2 have the same type over C and are independent from B over C, but differ over BC".into()
    }))
}

fn base_absorption(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let cfg = independent_or_sampled(s, r, b, &[])?;
    if !cfg.indep(rel, &["A"], &["C"], &["B"])? {
        return Ok(Verdict::Vacuous);
    }
    let ok = cfg.indep(rel, &["A"], &["C"], &["B", "C"])?;
    Ok(cfg.verdict(ok, || "A ⫫_C B holds but A ⫫_C BC fails".into()))
}

fn pairwise_free_union(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let mut d = Draw::new(s, r);
    let mut cfg = Config::new(s.clone()).with("a", d.set(1, 1)).with("X", d.set(1, b.max_b)).with("E", vec![]);
    if d.coin() {
        cfg = glue(&cfg, &["a"], &cfg, &["X"], &["E"])?;
    }
    let (a, x) = (cfg.get("a"), cfg.get("X"));
    if a.is_empty() || x.is_empty() {
        return Ok(Verdict::Vacuous);
    }
    for &v in x {
        if !rel.indep(&cfg.space, a, &[], &[v])? {
            return Ok(Verdict::Vacuous);
        }
    }
    let ok = rel.indep(&cfg.space, a, &[], x)?;
    Ok(cfg.verdict(ok, || "a ⫫ x over the empty set for every x in X, but not a ⫫ X".into()))
}

fn self_dependence(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let mut d = Draw::new(s, r);
    let cfg = Config::new(s.clone()).with("a", d.set(1, 1)).with("A", d.set(0, b.max_a));
    if cfg.get("a").is_empty() {
        return Ok(Verdict::Vacuous);
    }
    let ok = !cfg.indep(rel, &["a"], &["A"], &["a"])?;
    Ok(cfg.verdict(ok, || "a is not in A but a ⫫_A a holds".into()))
}

fn dependent_pair(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, _: &SamplingBounds) -> Result<Verdict> {
    let a = r.random_range(0..s.len());
    for v in (0..s.len()).filter(|&v| v != a) {
        if !rel.indep(s, &[a], &[], &[v])? {
            return Ok(Verdict::Held);
        }
    }
    let sg = s.semigroup();
    let max = sg.maximum().ok_or(Error::NoMaximum)?;
    let cfg = Config::new(s.clone()).with("a", vec![a]);
    let Some(e) = sg.elements().find(|&e| e != max) else {
        return Ok(Verdict::Failed(cfg.fail(
            "the only distance is the maximum, so every pair of distinct points is independent over the empty set",
        )));
    };
    let label = (0..).map(|i| format!("x{i}")).find(|l| s.vertex(l).is_none()).expect("unbounded");
    let ext = s.extend_point(&[a], &[e], label)?;
    let x = ext.len() - 1;
    let ok = !rel.indep(&ext, &[a], &[], &[x])?;
    let cfg = Config::new(ext).with("a", vec![a]).with("b", vec![x]);
    Ok(cfg.verdict(ok, || "a point at non-maximal distance is independent over the empty set".into()))
}

fn perfect_triviality(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let mut d = Draw::new(s, r);
    let mut cfg = Config::new(s.clone())
        .with("A", d.set(1, b.max_a))
        .with("C", d.set(0, b.max_c))
        .with("B", d.set(1, b.max_b))
        .with("E1", d.set(0, b.max_c))
        .with("E2", d.set(0, b.max_c));
    if d.coin() {
        cfg = glue(&cfg, &["A", "E1"], &cfg, &["B", "E2"], &["C"])?;
    }
    if !cfg.indep(rel, &["A"], &["C"], &["B"])? {
        return Ok(Verdict::Vacuous);
    }
    let ok = cfg.indep(rel, &["A"], &["C", "E1", "E2"], &["B"])?;
    Ok(cfg.verdict(ok, || "A ⫫_C B holds but fails over the larger base C E1 E2".into()))
}

fn metricity(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let mut d = Draw::new(s, r);
    let half = b.max_c.div_ceil(2);
    let frag = Config::new(s.clone())
        .with("A", d.set(1, b.max_a))
        .with("B", d.set(1, b.max_b))
        .with("C1", d.set(0, half))
        .with("C2", d.set(0, half))
        .with("D", d.set(0, half));
    let cfg = if d.coin() {
        let y = glue(&frag, &["C1", "C2"], &frag, &["B"], &["D"])?;
        glue(&y, &["B", "D"], &frag, &["A"], &["C1", "C2"])?
    } else {
        frag
    };
    if !cfg.indep(rel, &["A"], &["C1", "C2"], &["B"])? || !cfg.indep(rel, &["C1"], &["D"], &["B"])? {
        return Ok(Verdict::Vacuous);
    }
    let ok = cfg.indep(rel, &["A"], &["C2", "D"], &["B"])?;
    Ok(cfg.verdict(ok, || "A ⫫_C1C2 B and C1 ⫫_D B hold but A ⫫_C2D B fails".into()))
}

fn triviality(rel: &dyn Independence, s: &MetricSpace, r: &mut Rng, b: &SamplingBounds) -> Result<Verdict> {
    let mut d = Draw::new(s, r);
    let frag = Config::new(s.clone())
        .with("A", d.set(1, b.max_a))
        .with("B", d.set(0, b.max_c))
        .with("C", d.set(1, b.max_b))
        .with("D", d.set(1, b.max_b));
    let cfg = if d.coin() {
        let y = glue(&frag, &["A"], &frag, &["C"], &["B"])?;
        glue(&y, &["A"], &frag, &["D"], &["B", "C"])?
    } else {
        frag
    };
    if !cfg.indep(rel, &["A"], &["B"], &["C"])? || !cfg.indep(rel, &["A"], &["B"], &["D"])? {
        return Ok(Verdict::Vacuous);
    }
    let ok = cfg.indep(rel, &["A"], &["B"], &["C", "D"])?;
    Ok(cfg.verdict(ok, || "A ⫫_B C and A ⫫_B D hold but A ⫫_B CD fails".into()))
}
