//! Exhaustive enumeration of small partially ordered commutative semigroups
//! up to isomorphism.
//!
//! For each labelled partial order the commutative operation table is filled
//! by backtracking, restricted to common upper bounds (absorption). Complete
//! tables are kept when they pass every axiom and their `(op, leq)` encoding
//! is the lexicographic minimum over all relabellings, so each isomorphism
//! class is produced exactly once.

use itertools::Itertools;
use rayon::prelude::*;

use super::{axiom_violations, Elem, PosetSemigroup};
use crate::error::{Error, Result};

/// Hard cap on the carrier size accepted by [`enumerate_pocs`].
pub const MAX_ENUMERATION_SIZE: usize = 4;

/// Every semigroup with carrier size `1..=max_size`, one per isomorphism
/// class, ordered by size and then by canonical encoding.
pub fn enumerate_pocs(max_size: usize) -> Result<Vec<PosetSemigroup>> {
    if max_size > MAX_ENUMERATION_SIZE {
        return Err(Error::Input(format!(
            "enumeration is capped at carrier size {MAX_ENUMERATION_SIZE}, got {max_size}"
        )));
    }
    let mut out = Vec::new();
    for m in 1..=max_size {
        let orders = labelled_partial_orders(m);
        let mut found: Vec<Vec<u8>> = orders
            .par_iter()
            .flat_map_iter(|leq| canonical_tables(m, leq))
            .collect();
        found.sort();
        out.extend(found.into_iter().map(|code| from_code(m, &code)));
    }
    Ok(out)
}

fn from_code(m: usize, code: &[u8]) -> PosetSemigroup {
    let labels = (0..m).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let op = code[..m * m].iter().map(|&x| Elem(x)).collect();
    let leq = code[m * m..].iter().map(|&x| x == 1).collect();
    PosetSemigroup::from_valid_parts(labels, op, leq)
}

/// All partial orders on `0..m` as flattened `m * m` tables.
pub(crate) fn labelled_partial_orders(m: usize) -> Vec<Vec<bool>> {
    let off: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (0..m).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << off.len()) {
        let mut leq = vec![false; m * m];
        for a in 0..m {
            leq[a * m + a] = true;
        }
        for (i, &(a, b)) in off.iter().enumerate() {
            if mask >> i & 1 == 1 {
                leq[a * m + b] = true;
            }
        }
        let antisymmetric = off.iter().all(|&(a, b)| !(leq[a * m + b] && leq[b * m + a]));
        let transitive = (0..m).all(|a| {
            (0..m).all(|b| (0..m).all(|c| !(leq[a * m + b] && leq[b * m + c]) || leq[a * m + c]))
        });
        if antisymmetric && transitive {
            out.push(leq);
        }
    }
    out
}

fn canonical_tables(m: usize, leq: &[bool]) -> Vec<Vec<u8>> {
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect();
    let candidates: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&(a, b)| (0..m).filter(|&u| leq[a * m + u] && leq[b * m + u]).collect())
        .collect();
    let mut op = vec![0usize; m * m];
    let mut out = Vec::new();
    fill(0, m, leq, &pairs, &candidates, &mut op, &mut out);
    out
}

fn fill(
    depth: usize,
    m: usize,
    leq: &[bool],
    pairs: &[(usize, usize)],
    candidates: &[Vec<usize>],
    op: &mut Vec<usize>,
    out: &mut Vec<Vec<u8>>,
) {
    if depth == pairs.len() {
        if axiom_violations(m, op, leq).is_empty() {
            let code = encode(m, op, leq);
            if is_canonical(m, &code) {
                out.push(code);
            }
        }
        return;
    }
    let (a, b) = pairs[depth];
    for &u in &candidates[depth] {
        op[a * m + b] = u;
        op[b * m + a] = u;
        fill(depth + 1, m, leq, pairs, candidates, op, out);
    }
}

fn encode(m: usize, op: &[usize], leq: &[bool]) -> Vec<u8> {
    debug_assert_eq!(op.len(), m * m);
    op.iter().map(|&x| x as u8).chain(leq.iter().map(|&b| b as u8)).collect()
}

pub(crate) fn permute_code(m: usize, code: &[u8], perm: &[usize]) -> Vec<u8> {
    let mut out = vec![0u8; 2 * m * m];
    for a in 0..m {
        for b in 0..m {
            let (pa, pb) = (perm[a], perm[b]);
            out[pa * m + pb] = perm[code[a * m + b] as usize] as u8;
            out[m * m + pa * m + pb] = code[m * m + a * m + b];
        }
    }
    out
}

fn is_canonical(m: usize, code: &[u8]) -> bool {
    (0..m)
        .permutations(m)
        .all(|p| permute_code(m, code, &p).as_slice() >= code)
}

pub(crate) fn canonical_encoding(m: usize, code: &[u8]) -> Vec<u8> {
    (0..m)
        .permutations(m)
        .map(|p| permute_code(m, code, &p))
        .min()
        .unwrap_or_else(|| code.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::validate;

    #[test]
    fn poset_counts() {
        // labelled posets: 1, 3, 19, 219
        let counts: Vec<usize> = (1..=4).map(|m| labelled_partial_orders(m).len()).collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
    }

    #[test]
    fn one_element() {
        let all = enumerate_pocs(1).unwrap();
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_pocs(MAX_ENUMERATION_SIZE + 1), Err(Error::Input(_))));
    }

    #[test]
    fn everything_yielded_validates_and_is_distinct() {
        let all = enumerate_pocs(3).unwrap();
        let mut ids: Vec<String> = all.iter().map(|m| m.canonical_id()).collect();
        for m in &all {
            assert!(validate(&m.to_data()).unwrap().passed);
        }
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a: Vec<_> = enumerate_pocs(3).unwrap().iter().map(|m| m.encoding()).collect();
        let b: Vec<_> = enumerate_pocs(3).unwrap().iter().map(|m| m.encoding()).collect();
        assert_eq!(a, b);
    }
}
