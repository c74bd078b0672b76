//! The hyperoctahedral group `B_n` of signed permutations of `[±n]`: classes,
//! higher Lie characters, the positive-cycles-only count, and induction into
//! `S_{2n}` / `S_{2n+1}` through the centralizer of a fixed-point-free
//! involution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, double_factorial, gcd, mobius};
use crate::class_function::{BClassFunction, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::gf::{compare_series, Discrepancy};
use crate::limits::Limits;
use crate::partition::{bipartitions, partitions, BiPartition, Partition, PartitionFilter};
use crate::perm::{all_permutations, Permutation};
use crate::report::{Basis, Status};
use crate::series::{MonomialKey, Var};
use crate::{CycloInt, RationalSeries};

/// Bijection `σ` of `[±n]` with `σ(−i) = −σ(i)`, stored as the window
/// `[σ(1), …, σ(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SignedPermutation {
    window: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        let mut seen = vec![false; window.len()];
        for &v in &window {
            let a = v.abs();
            if a == 0 || a > n || seen[(a - 1) as usize] {
                return Err(Error::domain(format!(
                    "{window:?} is not a signed permutation window"
                )));
            }
            seen[(a - 1) as usize] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn apply(&self, v: i64) -> i64 {
        apply_window(&self.window, v)
    }

    /// `(self ∘ other)(v) = self(other(v))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.n(), other.n());
        SignedPermutation {
            window: other.window.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let src = i as i64 + 1;
            window[(v.abs() - 1) as usize] = if v > 0 { src } else { -src };
        }
        SignedPermutation { window }
    }

    pub fn cycle_type(&self) -> BiPartition {
        signed_cycle_type_of(&self.window)
    }

    pub fn has_positive_cycles_only(&self) -> bool {
        self.cycle_type().minus.is_empty()
    }

    /// Image in `S_{2n}` (or `S_{2n+1}`, fixing the last letter): `+i ↦ i`,
    /// `−i ↦ n + i`. The image of `B_n` is the centralizer of
    /// `(1, n+1)(2, n+2)⋯(n, 2n)`.
    pub fn to_permutation(&self, target: FusionTarget) -> Permutation {
        let n = self.n();
        let label = |v: i64| {
            if v > 0 {
                v as usize - 1
            } else {
                n + (-v) as usize - 1
            }
        };
        let mut images = vec![0usize; target.size(n)];
        for v in (1..=n as i64).flat_map(|i| [i, -i]) {
            images[label(v)] = label(self.apply(v));
        }
        if target == FusionTarget::Odd {
            images[2 * n] = 2 * n;
        }
        Permutation::from_zero_based(&images)
    }

    /// Inverse of [`to_permutation`](Self::to_permutation) on its image.
    pub fn from_permutation(p: &Permutation, n: usize) -> Option<SignedPermutation> {
        let label = |v: i64| if v > 0 { v as usize } else { n + (-v) as usize };
        let unlabel = |x: usize| if x <= n { x as i64 } else { -((x - n) as i64) };
        if p.n() < 2 * n || (p.n() > 2 * n && p.apply(2 * n + 1) != 2 * n + 1) || p.n() > 2 * n + 1
        {
            return None;
        }
        let mut window = Vec::with_capacity(n);
        for i in 1..=n as i64 {
            let image = unlabel(p.apply(label(i)));
            if unlabel(p.apply(label(-i))) != -image {
                return None;
            }
            window.push(image);
        }
        Some(SignedPermutation { window })
    }
}

impl TryFrom<Vec<i64>> for SignedPermutation {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        SignedPermutation::new(v)
    }
}

impl From<SignedPermutation> for Vec<i64> {
    fn from(s: SignedPermutation) -> Self {
        s.window
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn apply_window(window: &[i64], v: i64) -> i64 {
    if v > 0 {
        window[(v - 1) as usize]
    } else {
        -window[(-v - 1) as usize]
    }
}

/// Class of a signed window: a cycle through `i` that reaches `−i` is
/// negative and contributes half its length to `λ⁻`.
pub(crate) fn signed_cycle_type_of(window: &[i64]) -> BiPartition {
    let n = window.len();
    let mut visited = vec![false; n];
    let (mut plus, mut minus) = (Vec::new(), Vec::new());
    for start in 1..=n as i64 {
        if visited[(start - 1) as usize] {
            continue;
        }
        let mut v = start;
        let mut len = 0;
        let negative = loop {
            visited[(v.abs() - 1) as usize] = true;
            v = apply_window(window, v);
            len += 1;
            if v == start {
                break false;
            }
            if v == -start {
                break true;
            }
        };
        if negative {
            minus.push(len);
        } else {
            plus.push(len);
        }
    }
    BiPartition::new(
        Partition::new(plus).expect("positive lengths"),
        Partition::new(minus).expect("positive lengths"),
    )
}

/// Every element of `B_n`: permutations in lexicographic order, each with
/// all `2^n` sign patterns.
pub fn all_signed_permutations(n: usize, limits: &Limits) -> Result<Vec<SignedPermutation>> {
    limits.check_signed_perm_n(n)?;
    let mut out = Vec::new();
    for p in all_permutations(n) {
        for mask in 0u32..(1 << n) {
            let window = p
                .window()
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    if mask >> i & 1 == 1 {
                        -(v as i64)
                    } else {
                        v as i64
                    }
                })
                .collect();
            out.push(SignedPermutation { window });
        }
    }
    Ok(out)
}

/// Positive parts first, then negative parts, each an `i`-cycle on
/// consecutive letters; a negative cycle closes with `σ(last) = −first`.
pub fn standard_representative_bn(blambda: &BiPartition) -> SignedPermutation {
    let mut window = Vec::with_capacity(blambda.n());
    let mut start = 1i64;
    for (parts, negative) in [(&blambda.plus, false), (&blambda.minus, true)] {
        for &i in parts.parts() {
            let i = i as i64;
            for t in 0..i {
                window.push(if t + 1 < i {
                    start + t + 1
                } else if negative {
                    -start
                } else {
                    start
                });
            }
            start += i;
        }
    }
    SignedPermutation { window }
}

/// The blocks of the standard representative holding cycles of one length
/// and one sign.
#[derive(Debug, Clone)]
struct BFactor {
    len: usize,
    negative: bool,
    /// 0-based first letter of each block.
    starts: Vec<usize>,
}

fn b_factors(blambda: &BiPartition) -> Vec<BFactor> {
    let mut out: Vec<BFactor> = Vec::new();
    let mut offset = 0;
    for (parts, negative) in [(&blambda.plus, false), (&blambda.minus, true)] {
        for &i in parts.parts() {
            match out.last_mut() {
                Some(f) if f.len == i && f.negative == negative => f.starts.push(offset),
                _ => out.push(BFactor {
                    len: i,
                    negative,
                    starts: vec![offset],
                }),
            }
            offset += i;
        }
    }
    out
}

impl BFactor {
    /// Order of the cyclic part of `G_{i,±}` carrying `ω`.
    fn cyclic_order(&self) -> usize {
        if self.negative {
            2 * self.len
        } else {
            self.len
        }
    }

    /// Radices of the per-block data: a cyclic shift, plus a sign flip for
    /// positive blocks.
    fn radices(&self) -> Vec<usize> {
        let a = self.starts.len();
        let mut r = vec![self.cyclic_order(); a];
        if !self.negative {
            r.extend(std::iter::repeat_n(2, a));
        }
        r
    }

    /// Writes the signed images of this factor's letters into `window`.
    /// `data` holds the shifts `k_b`, then (positive blocks) the flips `f_b`.
    fn realize(&self, sigma: &[usize], data: &[usize], window: &mut [i64]) {
        let a = self.starts.len();
        let i = self.len;
        for (b, &start) in self.starts.iter().enumerate() {
            let target = self.starts[sigma[b]] as i64;
            let k = data[b];
            for t in 0..i {
                let image = if self.negative {
                    let u = (t + k) % (2 * i);
                    if u < i {
                        target + u as i64 + 1
                    } else {
                        -(target + (u - i) as i64 + 1)
                    }
                } else {
                    let v = target + ((t + k) % i) as i64 + 1;
                    if data[a + b] == 1 {
                        -v
                    } else {
                        v
                    }
                };
                window[start + t] = image;
            }
        }
    }
}

fn step_mixed(digits: &mut [usize], radices: &[usize]) -> bool {
    for (d, &r) in digits.iter_mut().zip(radices) {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

fn symmetric_group_zero_based(a: usize) -> Vec<Vec<usize>> {
    all_permutations(a)
        .map(|p| p.window().iter().map(|v| v - 1).collect())
        .collect()
}

/// Every element of `Z_{B_n}(x)` for `x` the standard representative, with
/// `ω^x` (exponent-1 generators).
pub fn centralizer_elements_bn(
    blambda: &BiPartition,
    limits: &Limits,
) -> Result<Vec<(SignedPermutation, CycloInt)>> {
    let order = u64::try_from(&blambda.centralizer_order()).unwrap_or(u64::MAX);
    limits.check_centralizer(order)?;
    let n = blambda.n();
    let root = blambda.root_order();
    let mut acc: Vec<(Vec<i64>, usize)> = vec![(vec![0; n], 0)];
    for f in b_factors(blambda) {
        let radices = f.radices();
        let scale = root / f.cyclic_order();
        let a = f.starts.len();
        let mut next = Vec::new();
        for sigma in symmetric_group_zero_based(a) {
            let mut data = vec![0usize; radices.len()];
            loop {
                let k: usize = data[..a].iter().sum();
                for (window, e) in &acc {
                    let mut w = window.clone();
                    f.realize(&sigma, &data, &mut w);
                    next.push((w, e + scale * k));
                }
                if !step_mixed(&mut data, &radices) {
                    break;
                }
            }
        }
        acc = next;
    }
    Ok(acc
        .into_iter()
        .map(|(w, e)| {
            (
                SignedPermutation { window: w },
                Cyclotomic::root_power(root, e as i64),
            )
        })
        .collect())
}

/// Per factor: `(class of the realized block element, Σ k mod order) ↦ count`.
fn summarize_b_factor(f: &BFactor) -> BTreeMap<(BiPartition, usize), u64> {
    let a = f.starts.len();
    let local = BFactor {
        len: f.len,
        negative: f.negative,
        starts: (0..a).map(|b| b * f.len).collect(),
    };
    let radices = local.radices();
    let order = local.cyclic_order();
    let mut out = BTreeMap::new();
    let mut window = vec![0i64; a * f.len];
    for sigma in symmetric_group_zero_based(a) {
        let mut data = vec![0usize; radices.len()];
        loop {
            local.realize(&sigma, &data, &mut window);
            let k = data[..a].iter().sum::<usize>() % order;
            *out.entry((signed_cycle_type_of(&window), k))
                .or_insert(0u64) += 1;
            if !step_mixed(&mut data, &radices) {
                break;
            }
        }
    }
    out
}

fn union_b(a: &BiPartition, b: &BiPartition) -> BiPartition {
    BiPartition::new(a.plus.union(&b.plus), a.minus.union(&b.minus))
}

/// `ψ_{B_n}^{(λ⁺,λ⁻)}` with `ω` using `ζ^{root_power}` on every cyclic factor.
pub fn higher_lie_character_bn_with_root(
    blambda: &BiPartition,
    root_power: usize,
    limits: &Limits,
) -> Result<BClassFunction> {
    let n = blambda.n();
    limits.check_signed_character_n(n)?;
    let root = blambda.root_order();
    if gcd(root_power, root) != 1 {
        return Err(Error::domain(format!(
            "root power {root_power} is not coprime to the root order {root} of {blambda}"
        )));
    }
    let empty = BiPartition::new(Partition::empty(), Partition::empty());
    let mut acc: Vec<(BiPartition, usize, u64)> = vec![(empty, 0, 1)];
    for f in b_factors(blambda) {
        let summary = summarize_b_factor(&f);
        let scale = root / f.cyclic_order();
        let mut next = Vec::with_capacity(acc.len() * summary.len());
        for (bnu, e, c) in &acc {
            for ((fnu, k), fc) in &summary {
                next.push((
                    union_b(bnu, fnu),
                    (e + scale * root_power * k) % root,
                    c * fc,
                ));
            }
        }
        acc = next;
    }
    let mut sums: BTreeMap<BiPartition, Cyclotomic<i64>> = BTreeMap::new();
    for (bnu, e, c) in acc {
        sums.entry(bnu)
            .or_insert_with(|| Cyclotomic::zero(root))
            .add_root_power(e as i64, c as i64);
    }
    let z_lambda = blambda.centralizer_order();
    let mut chi = BClassFunction::zero(n);
    for (bnu, sum) in sums {
        let reduced = sum.to_rational_integer().ok_or_else(|| {
            Error::consistency(format!(
                "ψ_B^{blambda}: ω-sum on class {bnu} is not a rational integer: {sum}"
            ))
        })?;
        let (q, r) = (bnu.centralizer_order() * BigInt::from(reduced)).div_rem(&z_lambda);
        if !r.is_zero() {
            return Err(Error::consistency(format!(
                "ψ_B^{blambda}: value on class {bnu} is not an integer"
            )));
        }
        chi.set(&bnu, q);
    }
    Ok(chi)
}

pub fn higher_lie_character_bn(blambda: &BiPartition, limits: &Limits) -> Result<BClassFunction> {
    higher_lie_character_bn_with_root(blambda, 1, limits)
}

/// `η_{B_n} = Σ_{λ ⊢ n} ψ_{B_n}^{(λ,∅)}`.
pub fn eta(n: usize, limits: &Limits) -> Result<BClassFunction> {
    limits.check_signed_character_n(n)?;
    let parts: Vec<BClassFunction> = partitions(n, PartitionFilter::All)
        .into_par_iter()
        .map(|lambda| {
            higher_lie_character_bn(&BiPartition::new(lambda, Partition::empty()), limits)
        })
        .collect::<Result<_>>()?;
    Ok(crate::class_function::sum(n, &parts))
}

/// Where `B_n` is embedded: the centralizer of a fixed-point-free involution
/// in `S_{2n}`, or of an involution with one fixed point in `S_{2n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FusionTarget {
    Even,
    Odd,
}

impl FusionTarget {
    pub fn size(self, n: usize) -> usize {
        match self {
            FusionTarget::Even => 2 * n,
            FusionTarget::Odd => 2 * n + 1,
        }
    }
}

/// `S_N`-class containing the `B_n`-class `bν`: a positive `j`-cycle becomes
/// two `j`-cycles, a negative one a `2j`-cycle.
pub fn fuse_class(bnu: &BiPartition, target: FusionTarget) -> Partition {
    let mut parts = Vec::with_capacity(2 * bnu.n() + 1);
    for &j in bnu.plus.parts() {
        parts.extend([j, j]);
    }
    for &j in bnu.minus.parts() {
        parts.push(2 * j);
    }
    if target == FusionTarget::Odd {
        parts.push(1);
    }
    Partition::new(parts).expect("positive parts")
}

/// `χ↑^{S_N}` via `ξ(ν) = |Z_ν| Σ_{fuse(bν) = ν} χ(bν)/|Z_{B_n}(bν)|`.
pub fn induce_to_sn(chi: &BClassFunction, target: FusionTarget) -> Result<ClassFunction> {
    let big_n = target.size(chi.n());
    let mut sums: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (bnu, v) in chi.iter() {
        *sums
            .entry(fuse_class(bnu, target))
            .or_insert_with(BigRational::zero) +=
            BigRational::new(v.clone(), bnu.centralizer_order());
    }
    let mut out = ClassFunction::zero(big_n);
    for (nu, s) in sums {
        let value = s * BigRational::from_integer(nu.centralizer_order());
        if !value.is_integer() {
            return Err(Error::consistency(format!(
                "induced value on {nu} is not an integer"
            )));
        }
        out.set(&nu, value.to_integer());
    }
    Ok(out)
}

/// Literal induction `ξ(g) = (1/|H|) Σ_{a ∈ S_N} χ⁰(a⁻¹ g a)` with `H` the
/// embedded copy of `B_n`.
pub fn induce_by_cosets(
    chi: &BClassFunction,
    target: FusionTarget,
    limits: &Limits,
) -> Result<ClassFunction> {
    let n = chi.n();
    let big_n = target.size(n);
    limits.check_perm_n(big_n)?;
    let group: Vec<Permutation> = all_permutations(big_n).collect();
    let h_order = crate::partition::signed_group_order(n);
    let classes = partitions(big_n, PartitionFilter::All);
    let values: Vec<BigInt> = classes
        .par_iter()
        .map(|nu| {
            let g = crate::hlc::standard_representative(nu);
            let mut total = BigInt::zero();
            for a in &group {
                let conj = a.inverse().compose(&g).compose(a);
                if let Some(h) = SignedPermutation::from_permutation(&conj, n) {
                    total += chi.get(&h.cycle_type());
                }
            }
            total
        })
        .collect();
    let mut out = ClassFunction::zero(big_n);
    for (nu, total) in classes.iter().zip(values) {
        let (q, r) = total.div_rem(&h_order);
        if !r.is_zero() {
            return Err(Error::consistency(format!(
                "coset induction on {nu} is not integral"
            )));
        }
        out.set(nu, q);
    }
    Ok(out)
}

/// A perfect matching on `[±n]`: `partner[idx(v)] = m(v)`.
pub type Matching = Vec<i64>;

fn letter_index(n: usize, v: i64) -> usize {
    if v > 0 {
        v as usize - 1
    } else {
        n + (-v) as usize - 1
    }
}

fn index_letter(n: usize, idx: usize) -> i64 {
    if idx < n {
        idx as i64 + 1
    } else {
        -((idx - n) as i64 + 1)
    }
}

/// All `(2n−1)!!` perfect matchings on the `2n` letters of `[±n]`.
pub fn perfect_matchings(n: usize) -> Vec<Matching> {
    fn go(n: usize, partner: &mut Vec<i64>, out: &mut Vec<Matching>) {
        let Some(first) = partner.iter().position(|&p| p == 0) else {
            out.push(partner.clone());
            return;
        };
        for other in first + 1..2 * n {
            if partner[other] != 0 {
                continue;
            }
            partner[first] = index_letter(n, other);
            partner[other] = index_letter(n, first);
            go(n, partner, out);
            partner[first] = 0;
            partner[other] = 0;
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![0; 2 * n], &mut out);
    out
}

/// `σ_m`: walk each alternating cycle of `m₀ ∪ m` (`m₀` pairs `i` with `−i`)
/// starting at its largest positive letter `i₀` along the `m₀` edge, and send
/// every letter two steps ahead.
pub fn matching_to_signed(n: usize, m: &Matching) -> Result<SignedPermutation> {
    let mut image = vec![0i64; 2 * n];
    let mut done = vec![false; 2 * n];
    for i0 in (1..=n as i64).rev() {
        if done[letter_index(n, i0)] {
            continue;
        }
        // v0 = i0, v1 = −i0, v2 = m(v1), v3 = −v2, …
        let mut cycle = vec![i0];
        loop {
            let last = *cycle.last().unwrap();
            let next = if cycle.len() % 2 == 1 {
                -last
            } else {
                m[letter_index(n, last)]
            };
            if next == i0 {
                break;
            }
            cycle.push(next);
        }
        let len = cycle.len();
        for (k, &v) in cycle.iter().enumerate() {
            done[letter_index(n, v)] = true;
            image[letter_index(n, v)] = cycle[(k + 2) % len];
        }
    }
    for i in 1..=n as i64 {
        if image[letter_index(n, -i)] != -image[letter_index(n, i)] {
            return Err(Error::consistency(format!(
                "σ_m is not signed for matching {m:?}"
            )));
        }
    }
    SignedPermutation::new(image[..n].to_vec())
}

#[derive(Debug, Clone, Serialize)]
pub struct PositiveOnlyWitness {
    pub n: usize,
    /// Elements of `B_n` with positive cycles only, by enumeration.
    pub count: u64,
    pub expected: String,
    pub matchings: u64,
    /// `m ↦ σ_m` lands in the positive-only set and hits every element once.
    pub bijection: bool,
    pub status: Status,
}

pub fn positive_only_count(n: usize, limits: &Limits) -> Result<PositiveOnlyWitness> {
    let positive: BTreeSet<SignedPermutation> = all_signed_permutations(n, limits)?
        .into_iter()
        .filter(|s| s.has_positive_cycles_only())
        .collect();
    let matchings = perfect_matchings(n);
    let mut images = BTreeSet::new();
    let mut inside = true;
    for m in &matchings {
        let s = matching_to_signed(n, m)?;
        inside &= positive.contains(&s);
        images.insert(s);
    }
    let bijection = inside && images.len() == matchings.len() && images == positive;
    let expected = double_factorial(2 * n as i64 - 1);
    let ok = bijection && BigInt::from(positive.len()) == expected;
    Ok(PositiveOnlyWitness {
        n,
        count: positive.len() as u64,
        expected: expected.to_string(),
        matchings: matchings.len() as u64,
        bijection,
        status: Status::from_bool(ok),
    })
}

/// `K_{ε,θ}(e) = εθ μ(2e) + ((1+ε)(1+θ)/2) μ(e)`.
pub fn k_coefficient(eps: bool, theta: bool, e: u64) -> i64 {
    let s = |b: bool| if b { 1 } else { -1 };
    s(eps) * s(theta) * mobius(2 * e) + (1 + s(eps)) * (1 + s(theta)) / 2 * mobius(e)
}

/// `Σ_{n ≤ w} Σ_{bλ, bν} ψ_{B_n}^{bλ}(bν) s^{c(bλ)} t^{c(bν)} / |Z_{B_n}(bν)|`
/// in the tagged variables `s_{i,±}`, `t_{j,±}`.
pub fn lhs_summation_bn(w: u32, limits: &Limits) -> Result<RationalSeries> {
    limits.check_signed_character_n(w as usize)?;
    let key = |bl: &BiPartition, s_family: bool| {
        let mut v = Vec::new();
        for (p, positive) in [(&bl.plus, true), (&bl.minus, false)] {
            for (i, a) in p.multiplicities() {
                v.push((Var::signed(i as u32, positive), a as u32));
            }
        }
        if s_family {
            MonomialKey::new(v, vec![])
        } else {
            MonomialKey::new(vec![], v)
        }
    };
    let mut out = RationalSeries::one(w, w);
    for n in 1..=w as usize {
        let rows: Vec<(BiPartition, BClassFunction)> = bipartitions(n)
            .into_par_iter()
            .map(|bl| higher_lie_character_bn(&bl, limits).map(|chi| (bl, chi)))
            .collect::<Result<_>>()?;
        for (bl, chi) in rows {
            let s = key(&bl, true);
            for (bnu, v) in chi.iter() {
                out.add_term(
                    s.times(&key(bnu, false)),
                    BigRational::new(v.clone(), bnu.centralizer_order()),
                );
            }
        }
    }
    Ok(out)
}

pub fn rhs_summation_bn(w: u32) -> RationalSeries {
    let mut exponent = RationalSeries::zero(w, w);
    for i in 1..=w {
        for j in 1..=w {
            for e in divisors(gcd(i, j) as u64) {
                let e = e as u32;
                let weight = i * j / e;
                if weight > w {
                    continue;
                }
                for eps in [true, false] {
                    for theta in [true, false] {
                        let k = k_coefficient(eps, theta, e as u64);
                        if k == 0 {
                            continue;
                        }
                        let key = MonomialKey::new(
                            vec![(Var::signed(i, eps), j / e)],
                            vec![(Var::signed(j, theta), i / e)],
                        );
                        exponent.add_term(key, BigRational::new(k.into(), (2 * weight).into()));
                    }
                }
            }
        }
    }
    exponent.exp().expect("exponent has no constant term")
}

#[derive(Debug, Clone, Serialize)]
pub struct SummationBnReport {
    pub truncation: u32,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
    pub basis: Basis,
    pub terms: usize,
}

/// Coefficientwise check of the `B_n` summation identity up to weight `w`.
pub fn verify_summation_4_bn(w: u32, limits: &Limits) -> Result<SummationBnReport> {
    let lhs = lhs_summation_bn(w, limits)?;
    let rhs = rhs_summation_bn(w);
    let first = compare_series(&lhs, &rhs);
    Ok(SummationBnReport {
        truncation: w,
        status: Status::from_bool(first.is_none()),
        first_discrepancy: first,
        basis: Basis::Proved,
        terms: lhs.support_union(&rhs).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::signed_group_order;

    fn bp(plus: &[usize], minus: &[usize]) -> BiPartition {
        BiPartition::new(
            Partition::new(plus.to_vec()).unwrap(),
            Partition::new(minus.to_vec()).unwrap(),
        )
    }

    fn sp(w: &[i64]) -> SignedPermutation {
        SignedPermutation::new(w.to_vec()).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    fn values(chi: &BClassFunction) -> Vec<i64> {
        chi.iter().map(|(_, v)| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn cycle_types() {
        assert_eq!(sp(&[2, 1]).cycle_type(), bp(&[2], &[]));
        assert_eq!(sp(&[-1]).cycle_type(), bp(&[], &[1]));
        // 1 → −2 → 1: a positive 2-cycle
        assert_eq!(sp(&[-2, -1]).cycle_type(), bp(&[2], &[]));
        // 1 → 2 → −1: negative
        assert_eq!(sp(&[2, -1]).cycle_type(), bp(&[], &[2]));
        assert!(SignedPermutation::new(vec![1, -1]).is_err());
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=5 {
            let all = all_signed_permutations(n, &limits()).unwrap();
            assert_eq!(BigInt::from(all.len()), signed_group_order(n));
            let mut hist: BTreeMap<BiPartition, u64> = BTreeMap::new();
            for s in &all {
                *hist.entry(s.cycle_type()).or_default() += 1;
            }
            for bl in bipartitions(n) {
                assert_eq!(BigInt::from(hist[&bl]), bl.class_size(), "class {bl}");
            }
        }
    }

    #[test]
    fn group_operations() {
        let all = all_signed_permutations(3, &limits()).unwrap();
        let id = SignedPermutation::identity(3);
        for a in all.iter().step_by(5) {
            assert_eq!(a.compose(&a.inverse()), id);
            for b in all.iter().step_by(7) {
                let ab = a.compose(b);
                assert_eq!(
                    ab.to_permutation(FusionTarget::Even),
                    a.to_permutation(FusionTarget::Even)
                        .compose(&b.to_permutation(FusionTarget::Even))
                );
                assert_eq!(
                    SignedPermutation::from_permutation(&ab.to_permutation(FusionTarget::Odd), 3),
                    Some(ab)
                );
            }
        }
    }

    #[test]
    fn representatives() {
        for n in 0..=5 {
            for bl in bipartitions(n) {
                assert_eq!(standard_representative_bn(&bl).cycle_type(), bl);
            }
        }
    }

    #[test]
    fn centralizer_is_exact() {
        for n in 1..=4 {
            let all = all_signed_permutations(n, &limits()).unwrap();
            for bl in bipartitions(n) {
                let x = standard_representative_bn(&bl);
                let commuting: BTreeSet<SignedPermutation> = all
                    .iter()
                    .filter(|g| g.compose(&x) == x.compose(g))
                    .cloned()
                    .collect();
                let elems = centralizer_elements_bn(&bl, &limits()).unwrap();
                let streamed: BTreeSet<SignedPermutation> =
                    elems.iter().map(|(g, _)| g.clone()).collect();
                assert_eq!(streamed.len(), elems.len());
                assert_eq!(streamed, commuting, "Z of {bl}");
            }
        }
    }

    #[test]
    fn omega_is_a_homomorphism() {
        for bl in [bp(&[2, 1], &[1]), bp(&[1], &[2]), bp(&[], &[1, 1, 1])] {
            let elems = centralizer_elements_bn(&bl, &limits()).unwrap();
            let omega: BTreeMap<SignedPermutation, CycloInt> = elems.iter().cloned().collect();
            for (a, wa) in &elems {
                for (b, wb) in elems.iter().step_by(3) {
                    assert_eq!(omega[&a.compose(b)], wa.clone() * wb.clone(), "{bl}");
                }
            }
        }
    }

    fn by_cosets_in_bn(bl: &BiPartition) -> BClassFunction {
        let n = bl.n();
        let omega: BTreeMap<SignedPermutation, CycloInt> = centralizer_elements_bn(bl, &limits())
            .unwrap()
            .into_iter()
            .collect();
        let all = all_signed_permutations(n, &limits()).unwrap();
        BClassFunction::from_fn(n, |bnu| {
            let g = standard_representative_bn(bnu);
            let mut total = CycloInt::zero(bl.root_order());
            for a in &all {
                if let Some(w) = omega.get(&a.inverse().compose(&g).compose(a)) {
                    total = total + w.clone();
                }
            }
            let (q, r) = total
                .to_rational_integer()
                .unwrap()
                .div_rem(&bl.centralizer_order());
            assert!(r.is_zero());
            q
        })
    }

    #[test]
    fn characters_match_coset_formula() {
        for n in 1..=3 {
            for bl in bipartitions(n) {
                assert_eq!(
                    higher_lie_character_bn(&bl, &limits()).unwrap(),
                    by_cosets_in_bn(&bl),
                    "{bl}"
                );
            }
        }
    }

    #[test]
    fn b1_examples_and_dimensions() {
        assert_eq!(
            values(&higher_lie_character_bn(&bp(&[1], &[]), &limits()).unwrap()),
            vec![1, 1]
        );
        assert_eq!(
            values(&higher_lie_character_bn(&bp(&[], &[1]), &limits()).unwrap()),
            vec![1, -1]
        );
        assert_eq!(values(&eta(1, &limits()).unwrap()), vec![1, 1]);
        assert_eq!(values(&eta(0, &limits()).unwrap()), vec![1]);
        for n in 1..=5 {
            for bl in bipartitions(n) {
                let chi = higher_lie_character_bn(&bl, &limits()).unwrap();
                assert_eq!(
                    chi.dimension(),
                    &(signed_group_order(n) / bl.centralizer_order())
                );
            }
        }
        for n in 1..=4 {
            assert_eq!(
                eta(n, &limits()).unwrap().dimension(),
                &double_factorial(2 * n as i64 - 1)
            );
        }
    }

    #[test]
    fn root_choice_independence() {
        for n in 1..=3 {
            for bl in bipartitions(n) {
                let base = higher_lie_character_bn(&bl, &limits()).unwrap();
                let l = bl.root_order();
                for c in (1..l.max(2)).filter(|&c| gcd(c, l) == 1) {
                    assert_eq!(
                        higher_lie_character_bn_with_root(&bl, c, &limits()).unwrap(),
                        base
                    );
                }
            }
        }
    }

    #[test]
    fn positive_only() {
        for (n, count) in [(1, 1), (2, 3), (3, 15), (4, 105)] {
            let w = positive_only_count(n, &limits()).unwrap();
            assert_eq!(w.count, count);
            assert!(w.bijection, "n = {n}");
            assert_eq!(w.status, Status::Pass);
        }
    }

    #[test]
    fn fusion() {
        assert_eq!(
            fuse_class(&bp(&[2], &[1]), FusionTarget::Even),
            Partition::new(vec![2, 2, 2]).unwrap()
        );
        assert_eq!(
            fuse_class(&bp(&[2], &[1]), FusionTarget::Odd),
            Partition::new(vec![2, 2, 2, 1]).unwrap()
        );
        assert_eq!(
            fuse_class(&bp(&[1, 1], &[]), FusionTarget::Even),
            Partition::ones(4)
        );
        // fusion agrees with the embedding
        for s in all_signed_permutations(3, &limits()).unwrap() {
            for target in [FusionTarget::Even, FusionTarget::Odd] {
                assert_eq!(
                    s.to_permutation(target).cycle_type(),
                    fuse_class(&s.cycle_type(), target)
                );
            }
        }
    }

    #[test]
    fn induction_matches_cosets() {
        let vals = |c: &ClassFunction| {
            c.iter()
                .map(|(_, v)| i64::try_from(v).unwrap())
                .collect::<Vec<_>>()
        };
        let e1 = eta(1, &limits()).unwrap();
        assert_eq!(
            vals(&induce_to_sn(&e1, FusionTarget::Even).unwrap()),
            vec![1, 1]
        );
        // classes (3), (2,1), (1,1,1)
        assert_eq!(
            vals(&induce_to_sn(&e1, FusionTarget::Odd).unwrap()),
            vec![0, 1, 3]
        );
        for n in 1..=3 {
            for bl in bipartitions(n) {
                let chi = higher_lie_character_bn(&bl, &limits()).unwrap();
                for target in [FusionTarget::Even, FusionTarget::Odd] {
                    if target.size(n) > 6 {
                        continue;
                    }
                    let fast = induce_to_sn(&chi, target).unwrap();
                    assert_eq!(
                        fast,
                        induce_by_cosets(&chi, target, &limits()).unwrap(),
                        "{bl} {target:?}"
                    );
                    let index =
                        crate::arith::factorial(target.size(n) as u64) / signed_group_order(n);
                    assert_eq!(fast.dimension(), &(index * chi.dimension()));
                }
            }
        }
    }

    #[test]
    fn k_values() {
        assert_eq!(k_coefficient(true, true, 1), 1);
        assert_eq!(k_coefficient(true, false, 1), 1);
        for e in 1..20 {
            assert_eq!(k_coefficient(true, false, e), -mobius(2 * e));
        }
    }

    #[test]
    fn summation_bn() {
        let r = verify_summation_4_bn(3, &limits()).unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r.first_discrepancy);
    }
}
