//! Integer partitions and bipartitions: the index sets of conjugacy classes
//! of `S_n` and `B_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, lcm};
use crate::error::{Error, Result};

/// A partition of `n`, parts stored weakly decreasing.
///
/// Serializes as a bare JSON array of parts, e.g. `[3,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Which partitions [`partitions`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionFilter {
    All,
    /// Odd parts only.
    Op,
    /// Even parts only (even `n`); even parts plus exactly one part 1 (odd `n`).
    Ep,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^n)`, the cycle type of the identity.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Builds from a multiplicity map `part -> count`.
    pub fn from_multiplicities(mult: &BTreeMap<usize, usize>) -> Self {
        let mut parts = Vec::with_capacity(mult.values().sum());
        for (&part, &count) in mult.iter().rev() {
            if part > 0 {
                parts.extend(std::iter::repeat_n(part, count));
            }
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each part size, `part -> count`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `|Z_ν| = ∏_j b_j! · j^{b_j}`, the order of the centralizer in `S_n` of
    /// an element of this cycle type.
    pub fn centralizer_order(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (j, b)| {
                acc * factorial(b as u64) * BigInt::from(j).pow(b as u32)
            })
    }

    /// Number of permutations of this cycle type.
    pub fn class_size(&self) -> BigInt {
        factorial(self.n() as u64) / self.centralizer_order()
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.n() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Least common multiple of the parts (1 for the empty partition).
    pub fn lcm_of_parts(&self) -> usize {
        self.parts.iter().copied().fold(1, lcm)
    }

    pub fn is_op(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn is_ep(&self) -> bool {
        let ones = self.parts.iter().filter(|&&p| p == 1).count();
        let evens = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if self.n().is_multiple_of(2) {
            evens == self.len()
        } else {
            ones == 1 && evens + 1 == self.len()
        }
    }

    pub fn matches(&self, filter: PartitionFilter) -> bool {
        match filter {
            PartitionFilter::All => true,
            PartitionFilter::Op => self.is_op(),
            PartitionFilter::Ep => self.is_ep(),
        }
    }

    /// True if every part divides `k`.
    pub fn parts_divide(&self, k: usize) -> bool {
        self.parts.iter().all(|&p| k.is_multiple_of(p))
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// This partition with one extra part.
    pub fn with_part(&self, part: usize) -> Partition {
        self.union(&Partition { parts: vec![part] })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain("partition parts must be weakly decreasing"));
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Canonical (reverse-lexicographic) order: `(4) < (3,1) < (2,2) < ...`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"3,1"`, `"(3,1)"` or `"[3,1]"`; the empty string is the empty
/// partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::domain(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` passing `filter`, in canonical order.
pub fn partitions(n: usize, filter: PartitionFilter) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out.retain(|p| p.matches(filter));
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// A pair of partitions `(λ⁺, λ⁻)`: positive and negative cycle lengths of a
/// signed permutation (negative lengths halved).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiPartition {
    pub plus: Partition,
    pub minus: Partition,
}

impl BiPartition {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        BiPartition { plus, minus }
    }

    pub fn n(&self) -> usize {
        self.plus.n() + self.minus.n()
    }

    /// `|Z_{B_n}| = ∏_j b_{j,+}!(2j)^{b_{j,+}} · ∏_j b_{j,-}!(2j)^{b_{j,-}}`.
    pub fn centralizer_order(&self) -> BigInt {
        [&self.plus, &self.minus]
            .into_iter()
            .flat_map(|p| p.multiplicities())
            .fold(BigInt::one(), |acc, (j, b)| {
                acc * factorial(b as u64) * BigInt::from(2 * j).pow(b as u32)
            })
    }

    /// Number of signed permutations in this class.
    pub fn class_size(&self) -> BigInt {
        signed_group_order(self.n()) / self.centralizer_order()
    }

    /// Least common multiple of the orders of the cyclic centralizer factors:
    /// `i` for positive parts, `2i` for negative parts.
    pub fn root_order(&self) -> usize {
        let plus = self.plus.lcm_of_parts();
        let minus = self.minus.parts().iter().map(|&i| 2 * i).fold(1, lcm);
        lcm(plus, minus)
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.plus, self.minus)
    }
}

/// `|B_n| = 2^n n!`.
pub fn signed_group_order(n: usize) -> BigInt {
    factorial(n as u64) * BigInt::from(2).pow(n as u32)
}

/// All bipartitions of total size `n`, ordered by decreasing `|λ⁺|`, then
/// canonically within each component.
pub fn bipartitions(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for plus in partitions(k, PartitionFilter::All) {
            for minus in partitions(n - k, PartitionFilter::All) {
                out.push(BiPartition::new(plus.clone(), minus));
            }
        }
    }
    out
}
