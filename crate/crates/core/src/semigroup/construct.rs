//! Built-in semigroup families.

use num_rational::Ratio;

use super::{Elem, PosetSemigroup, MAX_CARRIER};
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// `{1, ..., n}` with `a + b = min(n, a + b)` and the usual order.
pub fn path_semigroup(n: usize) -> Result<PosetSemigroup> {
    if n == 0 {
        return Err(Error::Input("path semigroup needs n >= 1".into()));
    }
    if n > MAX_CARRIER {
        return Err(Error::Input(format!("path semigroup size {n} exceeds {MAX_CARRIER}")));
    }
    let labels = (1..=n).map(|v| v.to_string()).collect();
    let mut op = Vec::with_capacity(n * n);
    let mut leq = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            // values are index + 1
            op.push(Elem(((a + b + 2).min(n) - 1) as u8));
            leq.push(a <= b);
        }
    }
    Ok(PosetSemigroup::from_valid_parts(labels, op, leq))
}

/// `{1, ..., n}^k` with componentwise addition capped at `n` and the product
/// order. Elements are indexed in lexicographic order of their tuples.
pub fn product_capped(n: usize, k: usize) -> Result<PosetSemigroup> {
    if n < 3 || k < 1 {
        return Err(Error::Input("product_capped needs n >= 3 and k >= 1".into()));
    }
    let size = (n as u64).checked_pow(k as u32).filter(|&s| s as usize <= MAX_CARRIER);
    let Some(size) = size else {
        return Err(Error::Input(format!("{n}^{k} elements exceed {MAX_CARRIER}")));
    };
    let size = size as usize;
    let tuples: Vec<Vec<usize>> = (0..size).map(|i| digits(i, n, k)).collect();
    let index = |t: &[usize]| t.iter().fold(0, |acc, &d| acc * n + d);
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<String> = t.iter().map(|d| (d + 1).to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let mut op = Vec::with_capacity(size * size);
    let mut leq = Vec::with_capacity(size * size);
    for a in &tuples {
        for b in &tuples {
            let sum: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y + 2).min(n) - 1).collect();
            op.push(Elem(index(&sum) as u8));
            leq.push(a.iter().zip(b).all(|(x, y)| x <= y));
        }
    }
    Ok(PosetSemigroup::from_valid_parts(labels, op, leq))
}

fn digits(mut i: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = i % base;
        i /= base;
    }
    out
}

/// Sauer's semigroup on a finite set `S` of positive rationals:
/// `a + b = max{x in S : x <= a + b}`, ordered by `<=`.
///
/// Fails with the first non-associative triple when `+` is not associative.
/// The candidate set is never empty because `a <= a + b` and `a` is in `S`.
pub fn sauer_semigroup(values: &[Rational]) -> Result<PosetSemigroup> {
    let mut s: Vec<Rational> = values.to_vec();
    s.sort();
    s.dedup();
    if s.is_empty() {
        return Err(Error::Input("Sauer set must be nonempty".into()));
    }
    if s[0] <= Rational::from_integer(0) {
        return Err(Error::Input("Sauer set must contain positive values only".into()));
    }
    if s.len() > MAX_CARRIER {
        return Err(Error::Input(format!("Sauer set exceeds {MAX_CARRIER} values")));
    }
    let m = s.len();
    let mut table = vec![0usize; m * m];
    for a in 0..m {
        for b in 0..m {
            let sum = s[a] + s[b];
            // s is sorted, so the last value not above the sum is the max
            table[a * m + b] = s.iter().rposition(|x| *x <= sum).expect("a <= a + b");
        }
    }
    let o = |a: usize, b: usize| table[a * m + b];
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if o(o(a, b), c) != o(a, o(b, c)) {
                    return Err(Error::NotAssociative(s[a].to_string(), s[b].to_string(), s[c].to_string()));
                }
            }
        }
    }
    let labels = s.iter().map(|x| x.to_string()).collect();
    let op = table.into_iter().map(|x| Elem(x as u8)).collect();
    let leq = (0..m).flat_map(|a| (0..m).map(move |b| a <= b)).collect();
    Ok(PosetSemigroup::from_valid_parts(labels, op, leq))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Input(format!("bad rational {s:?}: {e}")))
}
