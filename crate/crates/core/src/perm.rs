//! Permutations of `[1..n]` in one-line notation, descent sets, and
//! brute-force enumeration of `S_n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::class_function::ClassFunction;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{Partition, PartitionFilter};

/// A permutation `π = [π_1, …, π_n]` of `[1..n]`.
///
/// Serializes as the JSON array of its window.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &v in &window {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::domain(format!(
                    "{window:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { window })
    }

    /// Builds from 0-based images without validation; callers guarantee a
    /// bijection.
    pub(crate) fn from_zero_based(images: &[usize]) -> Self {
        Permutation {
            window: images.iter().map(|&v| v + 1).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.n(),
            other.n(),
            "composing permutations of different size"
        );
        Permutation {
            window: other.window.iter().map(|&v| self.window[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { window: inv }
    }

    /// Disjoint cycles (fixed points included), each starting at its least
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.window[i] - 1;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        cycle_type_of(&self.window, 1)
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }

    /// `π^k` for `k >= 0`, computed cycle by cycle.
    pub fn pow(&self, k: u64) -> Permutation {
        let mut window = vec![0; self.n()];
        for cycle in self.cycles() {
            let len = cycle.len();
            let shift = (k % len as u64) as usize;
            for (pos, &v) in cycle.iter().enumerate() {
                window[v - 1] = cycle[(pos + shift) % len];
            }
        }
        Permutation { window }
    }

    pub fn descent_set(&self) -> DescentSet {
        let mut mask = 0u64;
        for (i, w) in self.window.windows(2).enumerate() {
            if w[0] > w[1] {
                mask |= 1 << i;
            }
        }
        DescentSet { n: self.n(), mask }
    }

    /// The reversed window `[π_n, …, π_1]`.
    pub fn reversed(&self) -> Permutation {
        let mut window = self.window.clone();
        window.reverse();
        Permutation { window }
    }
}

/// Cycle type of a bijection given by its images, with values offset by
/// `base` (0 or 1).
pub(crate) fn cycle_type_of(images: &[usize], base: usize) -> Partition {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = images[i] - base;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("cycle lengths are positive")
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(window: Vec<usize>) -> Result<Self> {
        Permutation::new(window)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.window
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.window.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", cells.join(","))
    }
}

/// A subset of `[n-1]`, stored as a bitmask (bit `i-1` for position `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSet {
    n: usize,
    mask: u64,
}

impl DescentSet {
    pub fn new(n: usize, positions: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &p in positions {
            if p == 0 || p >= n {
                return Err(Error::domain(format!(
                    "descent position {p} outside 1..{}",
                    n.saturating_sub(1)
                )));
            }
            mask |= 1 << (p - 1);
        }
        Ok(DescentSet { n, mask })
    }

    pub fn empty(n: usize) -> Self {
        DescentSet { n, mask: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn positions(&self) -> Vec<usize> {
        (1..self.n)
            .filter(|&i| self.mask >> (i - 1) & 1 == 1)
            .collect()
    }

    /// `[n-1] \ D`.
    pub fn complement(&self) -> DescentSet {
        let full = if self.n <= 1 {
            0
        } else {
            (1u64 << (self.n - 1)) - 1
        };
        DescentSet {
            n: self.n,
            mask: !self.mask & full,
        }
    }

    /// Sorted positions joined by commas, e.g. `"1,3"`; `""` for the empty set.
    pub fn key(&self) -> String {
        self.positions()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

/// Rearranges `a` into its lexicographic successor; false when `a` was last.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All permutations of `[1..n]` in lexicographic window order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<usize>> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            current = Some(next);
        }
        Some(Permutation { window: out })
    })
}

/// Folds over all of `S_n`, split by first letter across the rayon pool.
/// `merge` must be associative and commutative; the result is then
/// independent of the number of workers.
pub fn par_fold_permutations<A, Init, Fold, Merge>(
    n: usize,
    init: Init,
    fold: Fold,
    merge: Merge,
) -> A
where
    A: Send,
    Init: Fn() -> A + Sync + Send,
    Fold: Fn(&mut A, &Permutation) + Sync + Send,
    Merge: Fn(A, A) -> A + Sync + Send,
{
    if n == 0 {
        let mut acc = init();
        fold(&mut acc, &Permutation::identity(0));
        return acc;
    }
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut window: Vec<usize> = std::iter::once(first)
                .chain((1..=n).filter(|&v| v != first))
                .collect();
            loop {
                let p = Permutation {
                    window: window.clone(),
                };
                fold(&mut acc, &p);
                if !next_permutation(&mut window[1..]) {
                    break;
                }
            }
            acc
        })
        .reduce(&init, &merge)
}

/// Which permutation family [`oc_ec_members`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleFamily {
    /// Cycle type in `OP(n)`.
    Oc,
    /// Cycle type in `EP(n)`.
    Ec,
}

impl CycleFamily {
    pub fn filter(self) -> PartitionFilter {
        match self {
            CycleFamily::Oc => PartitionFilter::Op,
            CycleFamily::Ec => PartitionFilter::Ep,
        }
    }
}

/// Members of `OC(n)` or `EC(n)` in lexicographic order.
pub fn oc_ec_members(n: usize, which: CycleFamily, limits: &Limits) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::domain("OC/EC are defined for n >= 1"));
    }
    limits.check_perm_n(n)?;
    let filter = which.filter();
    Ok(all_permutations(n)
        .filter(|p| p.cycle_type().matches(filter))
        .collect())
}

/// Histogram of `Des(π)` (or of `[n-1] \ Des(π)` when `complement` is set).
pub fn descent_distribution(
    perms: &[Permutation],
    complement: bool,
) -> Result<BTreeMap<DescentSet, u64>> {
    let mut hist = BTreeMap::new();
    let n = perms.first().map(Permutation::n);
    for p in perms {
        if Some(p.n()) != n {
            return Err(Error::domain("descent distribution over mixed sizes"));
        }
        let d = p.descent_set();
        let d = if complement { d.complement() } else { d };
        *hist.entry(d).or_insert(0) += 1;
    }
    Ok(hist)
}

/// Evaluates `f` on every element of `S_n`, checks that it is constant on
/// each conjugacy class, and returns the per-class value.
pub fn brute_force_class_function<F>(n: usize, limits: &Limits, f: F) -> Result<ClassFunction>
where
    F: Fn(&Permutation) -> BigInt + Sync + Send,
{
    limits.check_perm_n(n)?;
    type Seen = BTreeMap<Partition, (BigInt, Option<Permutation>)>;
    let observed: std::result::Result<Seen, String> = par_fold_permutations(
        n,
        || Ok(Seen::new()),
        |acc, p| {
            if let Ok(map) = acc {
                let v = f(p);
                let nu = p.cycle_type();
                match map.get(&nu) {
                    Some((w, _)) if *w != v => {
                        *acc = Err(format!(
                            "evaluator is not a class function: {p} gives {v}, class {nu} has {w}"
                        ));
                    }
                    Some(_) => {}
                    None => {
                        map.insert(nu, (v, Some(p.clone())));
                    }
                }
            }
        },
        |a, b| {
            let (mut a, b) = (a?, b?);
            for (nu, (v, rep)) in b {
                if let Some((w, _)) = a.get(&nu) {
                    if *w != v {
                        return Err(format!(
                            "evaluator is not a class function on class {nu}: {w} vs {v}"
                        ));
                    }
                } else {
                    a.insert(nu, (v, rep));
                }
            }
            Ok(a)
        },
    );
    let observed = observed.map_err(Error::consistency)?;
    let values = observed.into_iter().map(|(k, (v, _))| (k, v)).collect();
    ClassFunction::from_values(n, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{double_factorial, factorial};
    use proptest::prelude::*;

    fn perm(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!(serde_json::from_str::<Permutation>("[2,3,1]").is_ok());
        assert!(serde_json::from_str::<Permutation>("[2,2,1]").is_err());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(perm(&[2, 1, 3]).cycle_type(), part(&[2, 1]));
        assert_eq!(Permutation::identity(4).cycle_type(), Partition::ones(4));
        assert_eq!(perm(&[2, 3, 1, 5, 4]).cycle_type(), part(&[3, 2]));
        assert_eq!(
            perm(&[2, 3, 1, 5, 4]).cycles(),
            vec![vec![1, 2, 3], vec![4, 5]]
        );
    }

    #[test]
    fn descent_sets() {
        assert_eq!(perm(&[3, 1, 2]).descent_set().positions(), vec![1]);
        assert_eq!(
            Permutation::identity(5).descent_set().positions(),
            Vec::<usize>::new()
        );
        assert_eq!(perm(&[3, 2, 1]).descent_set().positions(), vec![1, 2]);
        assert_eq!(perm(&[1, 3, 2, 4]).descent_set().key(), "2");
        assert_eq!(DescentSet::new(5, &[1, 3]).unwrap().key(), "1,3");
        assert_eq!(DescentSet::new(4, &[1, 3]).unwrap().complement().key(), "2");
        assert!(DescentSet::new(3, &[3]).is_err());
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<Permutation> = all_permutations(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], perm(&[1, 2, 3]));
        assert_eq!(all[1], perm(&[1, 3, 2]));
        assert_eq!(all[5], perm(&[3, 2, 1]));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_permutations(0).count(), 1);
        let count = par_fold_permutations(6, || 0u64, |a, _| *a += 1, |a, b| a + b);
        assert_eq!(count, 720);
    }

    #[test]
    fn oc_ec_small() {
        let limits = Limits::default();
        assert_eq!(oc_ec_members(4, CycleFamily::Oc, &limits).unwrap().len(), 9);
        assert_eq!(oc_ec_members(4, CycleFamily::Ec, &limits).unwrap().len(), 9);
        assert_eq!(
            oc_ec_members(3, CycleFamily::Ec, &limits).unwrap(),
            vec![perm(&[1, 3, 2]), perm(&[2, 1, 3]), perm(&[3, 2, 1])]
        );
        assert!(matches!(
            oc_ec_members(9, CycleFamily::Oc, &limits),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn oc_sizes_match_double_factorials() {
        let limits = Limits::default();
        for n in 1..=8usize {
            let size = BigInt::from(oc_ec_members(n, CycleFamily::Oc, &limits).unwrap().len());
            let n = n as i64;
            let expected = if n % 2 == 0 {
                double_factorial(n - 1).pow(2)
            } else {
                double_factorial(n) * double_factorial(n - 2)
            };
            assert_eq!(size, expected, "n = {n}");
        }
    }

    #[test]
    fn descent_histograms() {
        let limits = Limits::default();
        let oc3 = oc_ec_members(3, CycleFamily::Oc, &limits).unwrap();
        let ec3 = oc_ec_members(3, CycleFamily::Ec, &limits).unwrap();
        let expected: BTreeMap<DescentSet, u64> = [
            (DescentSet::empty(3), 1),
            (DescentSet::new(3, &[1]).unwrap(), 1),
            (DescentSet::new(3, &[2]).unwrap(), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(descent_distribution(&oc3, false).unwrap(), expected);
        assert_eq!(descent_distribution(&ec3, true).unwrap(), expected);
        let id = [Permutation::identity(1)];
        assert_eq!(
            descent_distribution(&id, false).unwrap(),
            [(DescentSet::empty(1), 1)].into_iter().collect()
        );
        assert!(
            descent_distribution(&[Permutation::identity(2), Permutation::identity(3)], false)
                .is_err()
        );
    }

    #[test]
    fn full_group_complement_symmetry() {
        for n in 1..=7 {
            let all: Vec<Permutation> = all_permutations(n).collect();
            assert_eq!(
                descent_distribution(&all, false).unwrap(),
                descent_distribution(&all, true).unwrap()
            );
        }
    }

    #[test]
    fn sign_matches_cycle_count() {
        // Independent sign: parity of the inversion count.
        for n in 0..=8 {
            for p in all_permutations(n) {
                let w = p.window();
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| w[i] > w[j])
                    .count();
                let by_inversions = if inversions % 2 == 0 { 1 } else { -1 };
                let by_cycles = if (n - p.cycles().len()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(p.sign(), by_inversions);
                assert_eq!(p.sign(), by_cycles);
            }
        }
    }

    #[test]
    fn brute_force_class_functions() {
        let limits = Limits::default();
        let ones = brute_force_class_function(3, &limits, |_| BigInt::from(1)).unwrap();
        assert!(ones.iter().all(|(_, v)| *v == BigInt::from(1)));
        let sign = brute_force_class_function(3, &limits, |p| BigInt::from(p.sign())).unwrap();
        assert_eq!(sign.get(&Partition::ones(3)), &BigInt::from(1));
        assert_eq!(sign.get(&part(&[2, 1])), &BigInt::from(-1));
        assert_eq!(sign.get(&part(&[3])), &BigInt::from(1));
        let all: Vec<Permutation> = all_permutations(3).collect();
        let roots = brute_force_class_function(3, &limits, |g| {
            BigInt::from(all.iter().filter(|x| x.compose(x) == *g).count())
        })
        .unwrap();
        assert_eq!(roots.get(&Partition::ones(3)), &BigInt::from(4));
        assert_eq!(roots.get(&part(&[2, 1])), &BigInt::from(0));
        assert_eq!(roots.get(&part(&[3])), &BigInt::from(1));
        let not_class = brute_force_class_function(3, &limits, |p| BigInt::from(p.apply(1)));
        assert!(matches!(not_class, Err(Error::Consistency(_))));
        assert!(matches!(
            brute_force_class_function(9, &limits, |_| BigInt::from(1)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn class_sizes_by_enumeration() {
        let mut sizes: BTreeMap<Partition, u64> = BTreeMap::new();
        for p in all_permutations(4) {
            *sizes.entry(p.cycle_type()).or_insert(0) += 1;
        }
        assert_eq!(sizes[&part(&[2, 2])], 3);
        for (nu, size) in sizes {
            assert_eq!(BigInt::from(size) * nu.centralizer_order(), factorial(4));
        }
    }

    proptest! {
        #[test]
        fn power_is_repeated_composition(seed in proptest::collection::vec(0usize..100, 1..8), k in 0u64..12) {
            let n = seed.len();
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by_key(|&i| (seed[i], i));
            let p = Permutation::from_zero_based(&idx);
            let mut q = Permutation::identity(n);
            for _ in 0..k {
                q = p.compose(&q);
            }
            prop_assert_eq!(p.pow(k), q);
            prop_assert_eq!(p.compose(&p.inverse()), Permutation::identity(n));
        }

        #[test]
        fn conjugation_preserves_cycle_type(a in proptest::collection::vec(0usize..100, 6), b in proptest::collection::vec(0usize..100, 6)) {
            let mk = |s: &Vec<usize>| {
                let mut idx: Vec<usize> = (0..s.len()).collect();
                idx.sort_by_key(|&i| (s[i], i));
                Permutation::from_zero_based(&idx)
            };
            let (g, h) = (mk(&a), mk(&b));
            let conj = h.inverse().compose(&g).compose(&h);
            prop_assert_eq!(conj.cycle_type(), g.cycle_type());
            prop_assert_eq!(g.reversed().descent_set().positions().len() + g.descent_set().positions().len(), g.n().saturating_sub(1));
        }
    }
}
