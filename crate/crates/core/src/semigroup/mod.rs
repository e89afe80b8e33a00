//! Finite partially ordered commutative semigroups.
//!
//! A [`PosetSemigroup`] is a carrier `0..m` with a commutative, associative
//! operation `+` and a partial order `<=` such that `a <= a + b` and `+` is
//! monotone in each argument. The distinguished zero distance is never part
//! of the carrier; it lives in [`Distance::Zero`] and acts as the neutral and
//! least element.

pub mod construct;
pub mod enumerate;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use construct::{path_semigroup, product_capped, sauer_semigroup, Rational};
pub use enumerate::{enumerate_pocs, MAX_ENUMERATION_SIZE};

/// Largest supported carrier. Down-sets are stored as `u128` masks.
pub const MAX_CARRIER: usize = 128;

/// Index of a carrier element.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u8);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A carrier element or the zero symbol.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Distance {
    Zero,
    Elem(Elem),
}

impl Distance {
    pub fn elem(self) -> Option<Elem> {
        match self {
            Distance::Zero => None,
            Distance::Elem(e) => Some(e),
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Distance::Zero)
    }
}

impl From<Elem> for Distance {
    fn from(e: Elem) -> Self {
        Distance::Elem(e)
    }
}

/// Raw table data, also the JSON file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupData {
    pub elements: Vec<String>,
    pub op: Vec<Vec<usize>>,
    pub leq: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "all axioms hold");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("{} at ({})", v.axiom, v.witness.join(", ")))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Axiom families in reporting order.
pub const AXIOMS: [&str; 7] = [
    "reflexivity",
    "antisymmetry",
    "transitivity",
    "commutativity",
    "associativity",
    "absorption",
    "monotonicity",
];

/// First (lexicographically least) witness for every violated axiom.
/// Tables must already be square and index-closed.
pub(crate) fn axiom_violations(m: usize, op: &[usize], leq: &[bool]) -> Vec<(&'static str, Vec<usize>)> {
    let o = |a: usize, b: usize| op[a * m + b];
    let le = |a: usize, b: usize| leq[a * m + b];
    let mut out = Vec::new();

    if let Some(a) = (0..m).find(|&a| !le(a, a)) {
        out.push(("reflexivity", vec![a]));
    }
    if let Some((a, b)) = pairs(m).find(|&(a, b)| a < b && le(a, b) && le(b, a)) {
        out.push(("antisymmetry", vec![a, b]));
    }
    if let Some((a, b, c)) = triples(m).find(|&(a, b, c)| le(a, b) && le(b, c) && !le(a, c)) {
        out.push(("transitivity", vec![a, b, c]));
    }
    if let Some((a, b)) = pairs(m).find(|&(a, b)| a < b && o(a, b) != o(b, a)) {
        out.push(("commutativity", vec![a, b]));
    }
    if let Some((a, b, c)) = triples(m).find(|&(a, b, c)| o(o(a, b), c) != o(a, o(b, c))) {
        out.push(("associativity", vec![a, b, c]));
    }
    if let Some((a, b)) = pairs(m).find(|&(a, b)| !le(a, o(a, b))) {
        out.push(("absorption", vec![a, b]));
    }
    if let Some((a, b, c)) = triples(m).find(|&(a, b, c)| le(b, c) && !le(o(a, b), o(a, c))) {
        out.push(("monotonicity", vec![a, b, c]));
    }
    out
}

fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |a| (0..m).map(move |b| (a, b)))
}

fn triples(m: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..m).flat_map(move |a| pairs(m).map(move |(b, c)| (a, b, c)))
}

fn check_shape(data: &SemigroupData) -> Result<()> {
    let m = data.elements.len();
    if m == 0 {
        return Err(Error::Input("carrier is empty".into()));
    }
    if m > MAX_CARRIER {
        return Err(Error::Input(format!("carrier has {m} elements, at most {MAX_CARRIER} supported")));
    }
    for (i, label) in data.elements.iter().enumerate() {
        if label == "0" {
            return Err(Error::Input("label \"0\" is reserved for the zero distance".into()));
        }
        if data.elements[..i].contains(label) {
            return Err(Error::Input(format!("duplicate element label {label:?}")));
        }
    }
    if data.op.len() != m || data.op.iter().any(|row| row.len() != m) {
        return Err(Error::Input(format!("op table is not {m}x{m}")));
    }
    if data.leq.len() != m || data.leq.iter().any(|row| row.len() != m) {
        return Err(Error::Input(format!("leq table is not {m}x{m}")));
    }
    if let Some(bad) = data.op.iter().flatten().find(|&&x| x >= m) {
        return Err(Error::Input(format!("op entry {bad} is out of range 0..{m}")));
    }
    Ok(())
}

/// Checks every axiom family on raw tables. Malformed tables are an
/// `Error::Input`, axiom failures are reported in the returned value.
pub fn validate(data: &SemigroupData) -> Result<ValidationReport> {
    check_shape(data)?;
    let m = data.elements.len();
    let op: Vec<usize> = data.op.iter().flatten().copied().collect();
    let leq: Vec<bool> = data.leq.iter().flatten().copied().collect();
    let violations: Vec<Violation> = axiom_violations(m, &op, &leq)
        .into_iter()
        .map(|(axiom, w)| Violation {
            axiom: axiom.to_string(),
            witness: w.iter().map(|&i| data.elements[i].clone()).collect(),
        })
        .collect();
    Ok(ValidationReport { passed: violations.is_empty(), violations })
}

/// Result of the archimedean test. `witness` is the first pair `(a, b)` such
/// that no power of `a` dominates `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Archimedean {
    pub holds: bool,
    pub witness: Option<(Elem, Elem)>,
}

/// A validated finite partially ordered commutative semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetSemigroup {
    labels: Vec<String>,
    op: Vec<Elem>,
    leq: Vec<bool>,
    // down[x] has bit y set iff y <= x
    down: Vec<u128>,
    maximum: Option<Elem>,
}

impl PosetSemigroup {
    pub fn from_data(data: &SemigroupData) -> Result<Self> {
        let report = validate(data)?;
        if !report.passed {
            return Err(Error::Axioms(Box::new(report)));
        }
        let op = data.op.iter().flatten().map(|&x| Elem(x as u8)).collect();
        let leq = data.leq.iter().flatten().copied().collect();
        Ok(Self::from_valid_parts(data.elements.clone(), op, leq))
    }

    /// Builds from tables already known to satisfy every axiom.
    pub(crate) fn from_valid_parts(labels: Vec<String>, op: Vec<Elem>, leq: Vec<bool>) -> Self {
        let m = labels.len();
        let down: Vec<u128> = (0..m)
            .map(|x| (0..m).filter(|&y| leq[y * m + x]).fold(0u128, |acc, y| acc | (1 << y)))
            .collect();
        let full = full_mask(m);
        let maximum = (0..m).find(|&x| down[x] == full).map(|x| Elem(x as u8));
        Self { labels, op, leq, down, maximum }
    }

    pub fn to_data(&self) -> SemigroupData {
        let m = self.size();
        SemigroupData {
            elements: self.labels.clone(),
            op: (0..m).map(|a| (0..m).map(|b| self.op[a * m + b].index()).collect()).collect(),
            leq: (0..m).map(|a| self.leq[a * m..(a + 1) * m].to_vec()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size()).map(|i| Elem(i as u8))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e.index()]
    }

    pub fn distance_label(&self, d: Distance) -> &str {
        match d {
            Distance::Zero => "0",
            Distance::Elem(e) => self.label(e),
        }
    }

    pub fn elem(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(|i| Elem(i as u8))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.op[a.index() * self.size() + b.index()]
    }

    /// `+` extended with zero as the neutral element.
    #[inline]
    pub fn add_dist(&self, a: Distance, b: Distance) -> Distance {
        match (a, b) {
            (Distance::Zero, x) | (x, Distance::Zero) => x,
            (Distance::Elem(a), Distance::Elem(b)) => Distance::Elem(self.add(a, b)),
        }
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.index() * self.size() + b.index()]
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    /// Order extended with zero as the least element.
    pub fn leq_dist(&self, a: Distance, b: Distance) -> bool {
        match (a, b) {
            (Distance::Zero, _) => true,
            (_, Distance::Zero) => false,
            (Distance::Elem(a), Distance::Elem(b)) => self.leq(a, b),
        }
    }

    /// The n-fold sum `a + a + ... + a`.
    pub fn n_times(&self, a: Elem, n: usize) -> Result<Elem> {
        if n == 0 {
            return Err(Error::Input("n_times requires n >= 1".into()));
        }
        let mut acc = a;
        for _ in 1..n {
            let next = self.add(acc, a);
            if next == acc {
                break;
            }
            acc = next;
        }
        Ok(acc)
    }

    /// The eventual value of the power sequence of `a`. The sequence is
    /// nondecreasing, so it is reached within `|M|` steps.
    pub fn stable_power(&self, a: Elem) -> Elem {
        let mut acc = a;
        loop {
            let next = self.add(acc, a);
            if next == acc {
                return acc;
            }
            acc = next;
        }
    }

    pub fn is_archimedean(&self) -> Archimedean {
        for a in self.elements() {
            let p = self.stable_power(a);
            if let Some(b) = self.elements().find(|&b| !self.leq(b, p)) {
                return Archimedean { holds: false, witness: Some((a, b)) };
            }
        }
        Archimedean { holds: true, witness: None }
    }

    pub fn maximum(&self) -> Option<Elem> {
        self.maximum
    }

    /// Neutral element of `+` inside the carrier, if any.
    pub fn identity(&self) -> Option<Elem> {
        self.elements().find(|&e| self.elements().all(|x| self.add(e, x) == x))
    }

    /// Greatest lower bound of `set`. The empty set has the maximum as its
    /// infimum, when there is one.
    pub fn infimum(&self, set: &[Elem]) -> Option<Elem> {
        let lower = set
            .iter()
            .fold(full_mask(self.size()), |acc, e| acc & self.down[e.index()]);
        self.greatest_in(lower)
    }

    /// Infimum over extended distances; any zero forces a zero result.
    pub fn infimum_dist<I>(&self, set: I) -> Option<Distance>
    where
        I: IntoIterator<Item = Distance>,
    {
        let mut lower = full_mask(self.size());
        for d in set {
            match d {
                Distance::Zero => return Some(Distance::Zero),
                Distance::Elem(e) => lower &= self.down[e.index()],
            }
        }
        self.greatest_in(lower).map(Distance::Elem)
    }

    fn greatest_in(&self, lower: u128) -> Option<Elem> {
        bits(lower)
            .find(|&g| self.down[g] == lower)
            .map(|g| Elem(g as u8))
    }

    pub fn has_binary_infima(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.infimum(&[a, b]).is_some()))
    }

    /// Applies a relabelling of the carrier: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let m = self.size();
        let mut labels = vec![String::new(); m];
        let mut op = vec![Elem(0); m * m];
        let mut leq = vec![false; m * m];
        for a in 0..m {
            labels[perm[a]] = self.labels[a].clone();
            for b in 0..m {
                op[perm[a] * m + perm[b]] = Elem(perm[self.op[a * m + b].index()] as u8);
                leq[perm[a] * m + perm[b]] = self.leq[a * m + b];
            }
        }
        Self::from_valid_parts(labels, op, leq)
    }

    /// Tables flattened as `op` followed by `leq` (0/1).
    pub fn encoding(&self) -> Vec<u8> {
        self.op
            .iter()
            .map(|e| e.0)
            .chain(self.leq.iter().map(|&b| b as u8))
            .collect()
    }

    /// Lexicographically least encoding over all relabellings, rendered as
    /// `m:op:leq`. Equal for isomorphic semigroups. Only feasible for small
    /// carriers.
    pub fn canonical_id(&self) -> String {
        let m = self.size();
        let code = enumerate::canonical_encoding(m, &self.encoding());
        render_code(m, &code)
    }
}

pub(crate) fn render_code(m: usize, code: &[u8]) -> String {
    let (op, leq) = code.split_at(m * m);
    let op: String = op.iter().map(|x| char::from_digit(*x as u32, 36).unwrap_or('?')).collect();
    let leq: String = leq.iter().map(|&x| if x == 1 { '1' } else { '0' }).collect();
    format!("{m}:{op}:{leq}")
}

impl TryFrom<SemigroupData> for PosetSemigroup {
    type Error = Error;
    fn try_from(data: SemigroupData) -> Result<Self> {
        Self::from_data(&data)
    }
}

impl Serialize for PosetSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_data().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PosetSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let data = SemigroupData::deserialize(d)?;
        Self::from_data(&data).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn full_mask(m: usize) -> u128 {
    if m >= 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    }
}

pub(crate) fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
