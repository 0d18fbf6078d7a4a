use std::collections::BTreeMap;

use rug::Integer;

use crate::error::{Error, Result};
use crate::mpseries::BigReal;

/// Largest `n` whose partitions [`partitions`] will enumerate.
pub const MAX_ENUMERATED: u32 = 40;

/// A partition of `n` into `k` parts, stored largest part first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub parts: Vec<u32>,
    pub n: u32,
    pub k: u32,
    /// part value -> number of occurrences
    pub multiplicities: BTreeMap<u32, u32>,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::usage(format!("not a partition: {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(parts: Vec<u32>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for &p in &parts {
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        Partition { n: parts.iter().sum(), k: parts.len() as u32, parts, multiplicities }
    }

    /// Checks the public fields against each other.
    pub fn is_valid(&self) -> bool {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0u32) += 1;
        }
        !self.parts.is_empty()
            && !self.parts.contains(&0)
            && self.parts.windows(2).all(|w| w[0] >= w[1])
            && self.parts.iter().sum::<u32>() == self.n
            && self.parts.len() as u32 == self.k
            && counts == self.multiplicities
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// All partitions of `n`, in decreasing lexicographic order of their
/// parts: `(5), (4, 1), (3, 2), (3, 1, 1), ...`.
pub fn partitions(n: u32) -> Result<Vec<Partition>> {
    if n == 0 || n > MAX_ENUMERATED {
        return Err(Error::usage(format!(
            "partitions are enumerated for 1 <= n <= {MAX_ENUMERATED}, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut parts = vec![n];
    loop {
        out.push(Partition::from_sorted(parts.clone()));
        // Find the rightmost part larger than one, lower it by one and
        // refill the remainder greedily with parts no larger than it.
        let Some(i) = parts.iter().rposition(|&p| p > 1) else { break };
        let ones = (parts.len() - i - 1) as u32;
        let top = parts[i] - 1;
        parts.truncate(i);
        parts.push(top);
        let mut rest = ones + 1;
        while rest > 0 {
            let p = rest.min(top);
            parts.push(p);
            rest -= p;
        }
    }
    Ok(out)
}

/// `p(n)` by the standard part-size dynamic programme; `p(0) = 1`.
pub fn partition_count(n: u32) -> Integer {
    let n = n as usize;
    let mut table = vec![Integer::new(); n + 1];
    table[0] = Integer::from(1);
    for part in 1..=n {
        for total in part..=n {
            let add = table[total - part].clone();
            table[total] += add;
        }
    }
    table.swap_remove(n)
}

/// Hardy–Ramanujan leading asymptotic `exp(2 pi sqrt(n/6)) / (4 n sqrt 3)`.
pub fn hr_estimate(n: u32, digits: u32) -> Result<BigReal> {
    if n == 0 {
        return Err(Error::usage("hr_estimate needs n >= 1"));
    }
    let nr = BigReal::from_i64(i64::from(n), digits);
    let exponent = BigReal::pi(digits).mul_i64(2) * nr.div_i64(6).sqrt()?;
    let denom = nr.mul_i64(4) * BigReal::from_i64(3, digits).sqrt()?;
    Ok(exponent.exp() / denom)
}
