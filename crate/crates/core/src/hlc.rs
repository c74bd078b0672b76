//! Higher Lie characters `ψ^λ` and twisted higher Lie characters `τ^λ` of
//! `S_n`.
//!
//! Both are induced from a linear character `ω` of the centralizer `Z_x` of
//! the standard element `x` of cycle type `λ`. The centralizer is a product
//! of wreath products `G_i ≀ S_{a_i}`, one per part size `i` occurring `a_i`
//! times. `ω` is `ζ_i^{c}` on the generator of each `G_i` and trivial
//! (plain) or the sign (twisted) on each wreathing `S_{a_i}`. Values come from
//!
//! ```text
//! ψ(ν) = |Z_ν| / |Z_λ| · Σ_{z ∈ Z_x, type(z) = ν} ω(z)
//! ```
//!
//! evaluated by enumerating `Z_x` (never the class `C_ν`), realizing every
//! element as an honest permutation and reading off its cycle type. The
//! cyclotomic sum is reduced exactly and must be a rational integer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, lcm};
use crate::class_function::ClassFunction;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{partitions, Partition, PartitionFilter};
use crate::perm::{all_permutations, cycle_type_of, Permutation};
use crate::CycloInt;

/// Character on the wreathing symmetric groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Trivial on `S_{a_i}`: the higher Lie character `ψ^λ`.
    Plain,
    /// Sign on `S_{a_i}`: the twisted higher Lie character `τ^λ`.
    Twisted,
}

/// Canonical element of cycle type `λ`: cycles on consecutive blocks of
/// letters, largest parts first.
pub fn standard_representative(lambda: &Partition) -> Permutation {
    let mut images = Vec::with_capacity(lambda.n());
    let mut offset = 0;
    for &part in lambda.parts() {
        for t in 0..part {
            images.push(offset + (t + 1) % part);
        }
        offset += part;
    }
    Permutation::from_zero_based(&images)
}

/// The blocks of `x = standard_representative(λ)` holding cycles of one
/// length `i`.
#[derive(Debug, Clone)]
struct Factor {
    cycle_len: usize,
    block_starts: Vec<usize>,
}

fn factors(lambda: &Partition) -> Vec<Factor> {
    let mut out: Vec<Factor> = Vec::new();
    let mut offset = 0;
    for &part in lambda.parts() {
        match out.last_mut() {
            Some(f) if f.cycle_len == part => f.block_starts.push(offset),
            _ => out.push(Factor {
                cycle_len: part,
                block_starts: vec![offset],
            }),
        }
        offset += part;
    }
    out
}

/// Wreath element `(k_0, …, k_{a-1}; σ)` of `G_i ≀ S_a` acting on `a`
/// consecutive `i`-blocks: letter `t` of block `b` goes to letter
/// `t + k_b (mod i)` of block `σ(b)`. Writes 0-based images into `images`
/// (indexed relative to the first block start `base`).
fn realize_wreath(
    cycle_len: usize,
    block_starts: &[usize],
    sigma: &[usize],
    shifts: &[usize],
    images: &mut [usize],
) {
    for (b, &start) in block_starts.iter().enumerate() {
        let target = block_starts[sigma[b]];
        for t in 0..cycle_len {
            images[start + t] = target + (t + shifts[b]) % cycle_len;
        }
    }
}

fn perm_sign(sigma: &[usize]) -> i64 {
    cycle_type_of(sigma, 0).sign()
}

fn symmetric_group_zero_based(a: usize) -> Vec<Vec<usize>> {
    all_permutations(a)
        .map(|p| p.window().iter().map(|v| v - 1).collect())
        .collect()
}

/// Advances a mixed-radix counter of base `radix`; false on wrap-around.
fn step_digits(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// One element of `Z_x` realized in `S_n`, with both `ω` values over the
/// common root-of-unity order `lcm(λ)`.
#[derive(Debug, Clone)]
pub struct CentralizerElement {
    pub perm: Permutation,
    pub omega_plain: CycloInt,
    pub omega_twisted: CycloInt,
}

/// Every element of the centralizer of `standard_representative(λ)`, with its
/// `ω` values (primitive root choice `ζ_i^1`).
pub fn centralizer_elements(
    lambda: &Partition,
    limits: &Limits,
) -> Result<impl Iterator<Item = CentralizerElement>> {
    let order = lambda.centralizer_order();
    let order_u64 = u64::try_from(&order).unwrap_or(u64::MAX);
    limits.check_centralizer(order_u64)?;

    let n = lambda.n();
    let root_order = lambda.lcm_of_parts();
    let factors = factors(lambda);
    let groups: Vec<Vec<Vec<usize>>> = factors
        .iter()
        .map(|f| symmetric_group_zero_based(f.block_starts.len()))
        .collect();
    // Per factor: index into its symmetric group, then one shift per block.
    let mut perm_idx = vec![0usize; factors.len()];
    let mut shifts: Vec<Vec<usize>> = factors
        .iter()
        .map(|f| vec![0; f.block_starts.len()])
        .collect();
    let mut done = false;

    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut images = vec![0usize; n];
        let mut exponent = 0usize;
        let mut wreath_sign = 1i64;
        for (fi, f) in factors.iter().enumerate() {
            let sigma = &groups[fi][perm_idx[fi]];
            realize_wreath(
                f.cycle_len,
                &f.block_starts,
                sigma,
                &shifts[fi],
                &mut images,
            );
            let k: usize = shifts[fi].iter().sum();
            exponent += (root_order / f.cycle_len) * k;
            wreath_sign *= perm_sign(sigma);
        }
        let plain = Cyclotomic::root_power(root_order, exponent as i64);
        let twisted = plain.scale(&BigInt::from(wreath_sign));
        let element = CentralizerElement {
            perm: Permutation::from_zero_based(&images),
            omega_plain: plain,
            omega_twisted: twisted,
        };

        // Advance: shifts of factor 0 fastest, then its permutation, then factor 1, ...
        done = true;
        for (fi, f) in factors.iter().enumerate() {
            if step_digits(&mut shifts[fi], f.cycle_len) {
                done = false;
                break;
            }
            perm_idx[fi] += 1;
            if perm_idx[fi] < groups[fi].len() {
                done = false;
                break;
            }
            perm_idx[fi] = 0;
        }
        Some(element)
    }))
}

/// Aggregated contribution of one wreath factor: for each (cycle type of the
/// realized block permutation, `Σ k mod i`, wreath sign), how many elements.
type FactorSummary = BTreeMap<(Partition, usize, i64), u64>;

fn summarize_factor(f: &Factor) -> FactorSummary {
    let a = f.block_starts.len();
    let i = f.cycle_len;
    let local_starts: Vec<usize> = (0..a).map(|b| b * i).collect();
    let mut out = FactorSummary::new();
    let mut images = vec![0usize; a * i];
    for sigma in symmetric_group_zero_based(a) {
        let sign = perm_sign(&sigma);
        let mut shifts = vec![0usize; a];
        loop {
            realize_wreath(i, &local_starts, &sigma, &shifts, &mut images);
            let nu = cycle_type_of(&images, 0);
            let k = shifts.iter().sum::<usize>() % i;
            *out.entry((nu, k, sign)).or_insert(0) += 1;
            if !step_digits(&mut shifts, i) {
                break;
            }
        }
    }
    out
}

/// Sums of `ω` over `Z_x ∩ C_ν` for every `ν`, both modes, with `ω` using
/// `ζ_i^{root_power}` on each `G_i`.
fn omega_sums(
    lambda: &Partition,
    root_power: usize,
) -> BTreeMap<Partition, (Cyclotomic<i64>, Cyclotomic<i64>)> {
    let root_order = lambda.lcm_of_parts();
    let mut acc: Vec<(Partition, usize, i64, u64)> = vec![(Partition::empty(), 0, 1, 1)];
    for f in factors(lambda) {
        let summary = summarize_factor(&f);
        let scale = root_order / f.cycle_len;
        let mut next = Vec::with_capacity(acc.len() * summary.len());
        for (nu, e, s, c) in &acc {
            for ((fnu, k, fs), fc) in &summary {
                next.push((
                    nu.union(fnu),
                    (e + scale * root_power * k) % root_order,
                    s * fs,
                    c * fc,
                ));
            }
        }
        acc = next;
    }
    let mut sums: BTreeMap<Partition, (Cyclotomic<i64>, Cyclotomic<i64>)> = BTreeMap::new();
    for (nu, e, s, c) in acc {
        let entry = sums
            .entry(nu)
            .or_insert_with(|| (Cyclotomic::zero(root_order), Cyclotomic::zero(root_order)));
        let c = c as i64;
        entry.0.add_root_power(e as i64, c);
        entry.1.add_root_power(e as i64, s * c);
    }
    sums
}

/// Turns `Σ ω` over `Z_x ∩ C_ν` into the induced character value.
fn induced_value(
    lambda_centralizer: &BigInt,
    nu: &Partition,
    sum: &Cyclotomic<i64>,
    what: &str,
) -> Result<BigInt> {
    let reduced = sum.to_rational_integer().ok_or_else(|| {
        Error::consistency(format!(
            "{what}: ω-sum on class {nu} does not reduce to a rational integer: {sum}"
        ))
    })?;
    let numerator = nu.centralizer_order() * BigInt::from(reduced);
    let (q, r) = numerator.div_rem(lambda_centralizer);
    if !r.is_zero() {
        return Err(Error::consistency(format!(
            "{what}: value on class {nu} is not an integer ({numerator}/{lambda_centralizer})"
        )));
    }
    Ok(q)
}

/// `(ψ^λ, τ^λ)` with `ω` built from `ζ_i^{root_power}`; `root_power` must be
/// coprime to every part of `λ`.
pub fn higher_lie_character_pair_with_root(
    lambda: &Partition,
    root_power: usize,
    limits: &Limits,
) -> Result<(ClassFunction, ClassFunction)> {
    let n = lambda.n();
    limits.check_character_n(n)?;
    if gcd(root_power, lambda.lcm_of_parts()) != 1 {
        return Err(Error::domain(format!(
            "root power {root_power} is not coprime to the parts of {lambda}"
        )));
    }
    let z_lambda = lambda.centralizer_order();
    let sums = omega_sums(lambda, root_power);
    let mut plain = ClassFunction::zero(n);
    let mut twisted = ClassFunction::zero(n);
    for (nu, (p, t)) in &sums {
        plain.set(nu, induced_value(&z_lambda, nu, p, &format!("ψ^{lambda}"))?);
        twisted.set(nu, induced_value(&z_lambda, nu, t, &format!("τ^{lambda}"))?);
    }
    Ok((plain, twisted))
}

pub fn higher_lie_character_pair(
    lambda: &Partition,
    limits: &Limits,
) -> Result<(ClassFunction, ClassFunction)> {
    higher_lie_character_pair_with_root(lambda, 1, limits)
}

/// `ψ^λ` (plain) or `τ^λ` (twisted) as a class function on `S_n`.
pub fn higher_lie_character(
    lambda: &Partition,
    mode: Mode,
    limits: &Limits,
) -> Result<ClassFunction> {
    let (plain, twisted) = higher_lie_character_pair(lambda, limits)?;
    Ok(match mode {
        Mode::Plain => plain,
        Mode::Twisted => twisted,
    })
}

/// `(λ, ψ^λ, τ^λ)` for every `λ ⊢ n` passing `filter`, canonical order,
/// computed in parallel.
pub fn character_family(
    n: usize,
    filter: PartitionFilter,
    limits: &Limits,
) -> Result<Vec<(Partition, ClassFunction, ClassFunction)>> {
    limits.check_character_n(n)?;
    partitions(n, filter)
        .into_par_iter()
        .map(|lambda| {
            let (p, t) = higher_lie_character_pair(&lambda, limits)?;
            Ok((lambda, p, t))
        })
        .collect()
}

/// `Σ_{λ ⊢ n, λ ∈ filter} ψ^λ` (or `τ^λ`).
pub fn character_sum(
    n: usize,
    filter: PartitionFilter,
    mode: Mode,
    limits: &Limits,
) -> Result<ClassFunction> {
    let family = character_family(n, filter, limits)?;
    Ok(crate::class_function::sum(
        n,
        family.iter().map(|(_, p, t)| match mode {
            Mode::Plain => p,
            Mode::Twisted => t,
        }),
    ))
}

/// Character table JSON: `{"n":4,"lambda":[3,1],"mode":"plain","values":[…]}`.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub lambda: Partition,
    pub mode: Mode,
    pub values: serde_json::Value,
}

impl CharacterTable {
    pub fn new(lambda: &Partition, mode: Mode, chi: &ClassFunction) -> Self {
        CharacterTable {
            n: chi.n(),
            lambda: lambda.clone(),
            mode,
            values: chi.json_values(),
        }
    }
}

/// Realizes the single wreath cycle of length `ell` with `G_i`-class `ζ_i^k`
/// in `S_{i·ell}` and returns `(number of cycles, common cycle length)`.
pub fn verify_single_cycle_structure(i: usize, k: usize, ell: usize) -> Result<(usize, usize)> {
    if i == 0 || ell == 0 || k >= i {
        return Err(Error::domain(format!(
            "single-cycle structure needs i >= 1, 0 <= k < i, ell >= 1 (got i={i}, k={k}, ell={ell})"
        )));
    }
    let starts: Vec<usize> = (0..ell).map(|b| b * i).collect();
    let sigma: Vec<usize> = (0..ell).map(|b| (b + 1) % ell).collect();
    let mut shifts = vec![0usize; ell];
    shifts[ell - 1] = k;
    let mut images = vec![0usize; i * ell];
    realize_wreath(i, &starts, &sigma, &shifts, &mut images);
    let nu = cycle_type_of(&images, 0);
    let len = nu.parts()[0];
    if nu.parts().iter().any(|&p| p != len) {
        return Err(Error::consistency(format!(
            "wreath cycle realizes with unequal cycle lengths {nu}"
        )));
    }
    Ok((nu.len(), len))
}

/// `(1/i^{ℓ-1}) Σ ω(z)` (times `sign(z)` when `signed`) over the wreath
/// elements `z ∈ G_i ≀ S_ℓ` whose underlying block permutation is one fixed
/// `ℓ`-cycle and which realize as `d = i/e` disjoint cycles of length `ℓe`.
pub fn single_cycle_sum(i: usize, e: usize, ell: usize, signed: bool) -> Result<BigRational> {
    if i == 0 || e == 0 || ell == 0 || !i.is_multiple_of(e) {
        return Err(Error::domain(format!(
            "single-cycle sum needs e | i and ell >= 1 (got i={i}, e={e}, ell={ell})"
        )));
    }
    let d = i / e;
    let j = ell * e;
    let target = Partition::new(vec![j; d])?;
    let starts: Vec<usize> = (0..ell).map(|b| b * i).collect();
    let sigma: Vec<usize> = (0..ell).map(|b| (b + 1) % ell).collect();
    let mut shifts = vec![0usize; ell];
    let mut images = vec![0usize; i * ell];
    let mut sum = Cyclotomic::<i64>::zero(i);
    loop {
        realize_wreath(i, &starts, &sigma, &shifts, &mut images);
        let nu = cycle_type_of(&images, 0);
        if nu == target {
            let k: usize = shifts.iter().sum();
            let weight = if signed { nu.sign() } else { 1 };
            sum.add_root_power(k as i64, weight);
        }
        if !step_digits(&mut shifts, i) {
            break;
        }
    }
    let total = sum.to_rational_integer().ok_or_else(|| {
        Error::consistency(format!(
            "single-cycle sum for i={i}, e={e}, ell={ell} is irrational"
        ))
    })?;
    Ok(BigRational::new(
        BigInt::from(total),
        BigInt::from(i).pow(ell as u32 - 1),
    ))
}

/// Common root-of-unity order used for `λ`: the lcm of its parts.
pub fn root_order(lambda: &Partition) -> usize {
    lambda.parts().iter().copied().fold(1, lcm)
}

/// Units modulo `lcm(λ)`: the admissible primitive-root exponents for `λ`.
pub fn admissible_root_powers(lambda: &Partition) -> Vec<usize> {
    let l = root_order(lambda);
    (1..=l.max(1))
        .filter(|&c| gcd(c, l) == 1 && (c < l || l == 1))
        .collect()
}

/// Exact checks of the cyclotomic and wreath-product lemmas behind the
/// character formulas: `Σ_{gcd(r,n)=1} ζ_n^r = μ(n)` for `n ≤ mobius_max`;
/// the cycle structure of a single wreath cycle for `i ≤ i_max`, `k < i`,
/// `ℓ ≤ 4`; and the collapse of single-cycle sums to `μ(e)` (plain) and
/// `(−1)^{i(j−1)/e} μ(e)` (signed) for `e | i`, `ℓ ≤ 3`.
pub fn verify_kernel(mobius_max: usize, i_max: usize) -> Result<crate::report::CheckReport> {
    use crate::arith::{divisors, mobius, neg_one_pow};
    let mut failures = Vec::new();
    for n in 1..=mobius_max {
        let s = crate::cyclotomic::mobius_root_of_unity_sum(n);
        if s.to_rational_integer() != Some(BigInt::from(mobius(n as u64))) {
            failures.push(format!("mobius n={n}"));
        }
    }
    for i in 1..=i_max {
        for k in 0..i {
            for ell in 1..=4 {
                let d = gcd(k, i);
                if verify_single_cycle_structure(i, k, ell)? != (d, ell * i / d) {
                    failures.push(format!("structure i={i} k={k} ell={ell}"));
                }
            }
        }
        for e in divisors(i as u64) {
            let e = e as usize;
            for ell in 1..=3 {
                let j = ell * e;
                let mu = mobius(e as u64);
                let plain = single_cycle_sum(i, e, ell, false)?;
                let signed = single_cycle_sum(i, e, ell, true)?;
                let signed_expected = neg_one_pow((i * (j - 1) / e) as i64) * mu;
                if plain != BigRational::from_integer(mu.into()) {
                    failures.push(format!("collapse i={i} e={e} ell={ell}"));
                }
                if signed != BigRational::from_integer(signed_expected.into()) {
                    failures.push(format!("signed collapse i={i} e={e} ell={ell}"));
                }
            }
        }
    }
    Ok(
        crate::report::CheckReport::new("kernel", failures.is_empty())
            .with("mobius_max", mobius_max)
            .with("i_max", i_max)
            .with(
                "signed_lemmas",
                crate::report::Basis::ComputationallyVerified,
            )
            .with("failures", failures),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, mobius, neg_one_pow};
    use crate::perm::all_permutations;
    use std::collections::BTreeSet;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn values(chi: &ClassFunction) -> Vec<i64> {
        chi.iter().map(|(_, v)| i64::try_from(v).unwrap()).collect()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn representatives() {
        assert_eq!(standard_representative(&part(&[2, 1])).window(), &[2, 1, 3]);
        assert_eq!(standard_representative(&part(&[3])).window(), &[2, 3, 1]);
        assert_eq!(
            standard_representative(&part(&[2, 2])).window(),
            &[2, 1, 4, 3]
        );
        for lambda in partitions(6, PartitionFilter::All) {
            assert_eq!(standard_representative(&lambda).cycle_type(), lambda);
        }
    }

    #[test]
    fn centralizer_stream_examples() {
        let two: Vec<_> = centralizer_elements(&part(&[2]), &limits())
            .unwrap()
            .collect();
        assert_eq!(two.len(), 2);
        let omegas: BTreeSet<Option<BigInt>> = two
            .iter()
            .map(|z| z.omega_plain.to_rational_integer())
            .collect();
        assert_eq!(
            omegas,
            [Some(BigInt::from(1)), Some(BigInt::from(-1))]
                .into_iter()
                .collect()
        );

        let ones: Vec<_> = centralizer_elements(&part(&[1, 1]), &limits())
            .unwrap()
            .collect();
        assert_eq!(ones.len(), 2);
        assert!(ones
            .iter()
            .all(|z| z.omega_plain.to_rational_integer() == Some(BigInt::from(1))));
        let tw: BTreeSet<Option<BigInt>> = ones
            .iter()
            .map(|z| z.omega_twisted.to_rational_integer())
            .collect();
        assert_eq!(
            tw,
            [Some(BigInt::from(1)), Some(BigInt::from(-1))]
                .into_iter()
                .collect()
        );

        let three: Vec<_> = centralizer_elements(&part(&[3]), &limits())
            .unwrap()
            .collect();
        assert_eq!(three.len(), 3);
        for (r, z) in three.iter().enumerate() {
            assert_eq!(z.omega_plain, Cyclotomic::root_power(3, r as i64));
        }
    }

    #[test]
    fn centralizer_stream_is_the_centralizer() {
        // Brute-force oracle: all g in S_n commuting with x.
        for n in 1..=6 {
            for lambda in partitions(n, PartitionFilter::All) {
                let x = standard_representative(&lambda);
                let commuting: BTreeSet<Permutation> = all_permutations(n)
                    .filter(|g| g.compose(&x) == x.compose(g))
                    .collect();
                let streamed: Vec<Permutation> = centralizer_elements(&lambda, &limits())
                    .unwrap()
                    .map(|z| z.perm)
                    .collect();
                let as_set: BTreeSet<Permutation> = streamed.iter().cloned().collect();
                assert_eq!(streamed.len(), as_set.len(), "duplicates for {lambda}");
                assert_eq!(as_set, commuting, "centralizer of {lambda}");
                assert_eq!(BigInt::from(streamed.len()), lambda.centralizer_order());
            }
        }
    }

    #[test]
    fn omega_is_multiplicative() {
        let lambda = part(&[3, 2, 2, 1]);
        let elems: Vec<_> = centralizer_elements(&lambda, &limits()).unwrap().collect();
        let by_perm: BTreeMap<Permutation, (CycloInt, CycloInt)> = elems
            .iter()
            .map(|z| {
                (
                    z.perm.clone(),
                    (z.omega_plain.clone(), z.omega_twisted.clone()),
                )
            })
            .collect();
        for a in elems.iter().step_by(7) {
            for b in elems.iter().step_by(11) {
                let ab = a.perm.compose(&b.perm);
                let (p, t) = &by_perm[&ab];
                assert_eq!(*p, a.omega_plain.clone() * b.omega_plain.clone());
                assert_eq!(*t, a.omega_twisted.clone() * b.omega_twisted.clone());
            }
        }
    }

    #[test]
    fn stream_respects_cap() {
        let tight = Limits {
            centralizer_order: 10,
            ..Limits::default()
        };
        assert!(matches!(
            centralizer_elements(&Partition::ones(4), &tight),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn character_examples() {
        let psi3 = higher_lie_character(&part(&[3]), Mode::Plain, &limits()).unwrap();
        // classes in canonical order (3), (2,1), (1,1,1)
        assert_eq!(values(&psi3), vec![-1, 0, 2]);
        let triv = higher_lie_character(&Partition::ones(4), Mode::Plain, &limits()).unwrap();
        assert!(values(&triv).iter().all(|&v| v == 1));
        let psi2 = higher_lie_character(&part(&[2]), Mode::Plain, &limits()).unwrap();
        assert_eq!(values(&psi2), vec![-1, 1]);
        let tau11 = higher_lie_character(&part(&[1, 1]), Mode::Twisted, &limits()).unwrap();
        assert_eq!(values(&tau11), vec![-1, 1]);
    }

    /// Direct coset-formula induction over all of `S_n`: an oracle
    /// independent of the centralizer-sum route.
    fn induced_by_cosets(lambda: &Partition, mode: Mode) -> ClassFunction {
        let n = lambda.n();
        let elems: Vec<CentralizerElement> =
            centralizer_elements(lambda, &limits()).unwrap().collect();
        let omega: BTreeMap<Permutation, CycloInt> = elems
            .into_iter()
            .map(|z| {
                let w = match mode {
                    Mode::Plain => z.omega_plain,
                    Mode::Twisted => z.omega_twisted,
                };
                (z.perm, w)
            })
            .collect();
        let group: Vec<Permutation> = all_permutations(n).collect();
        let order = root_order(lambda);
        ClassFunction::from_fn(n, |nu| {
            let g = standard_representative(nu);
            let mut total = CycloInt::zero(order);
            for a in &group {
                let conj = a.inverse().compose(&g).compose(a);
                if let Some(w) = omega.get(&conj) {
                    total = total + w.clone();
                }
            }
            let total = total.to_rational_integer().expect("rational");
            let (q, r) = total.div_rem(&lambda.centralizer_order());
            assert!(r.is_zero());
            q
        })
    }

    #[test]
    fn matches_coset_induction() {
        for n in 1..=5 {
            for lambda in partitions(n, PartitionFilter::All) {
                let (p, t) = higher_lie_character_pair(&lambda, &limits()).unwrap();
                assert_eq!(p, induced_by_cosets(&lambda, Mode::Plain), "ψ^{lambda}");
                assert_eq!(t, induced_by_cosets(&lambda, Mode::Twisted), "τ^{lambda}");
            }
        }
    }

    #[test]
    fn dimensions() {
        for n in 1..=7 {
            for (lambda, p, t) in character_family(n, PartitionFilter::All, &limits()).unwrap() {
                let expected = factorial(n as u64) / lambda.centralizer_order();
                assert_eq!(p.dimension(), &expected);
                assert_eq!(t.dimension(), &expected);
            }
        }
    }

    #[test]
    fn independent_of_primitive_root() {
        for n in 1..=5 {
            for lambda in partitions(n, PartitionFilter::All) {
                let base = higher_lie_character_pair(&lambda, &limits()).unwrap();
                for c in admissible_root_powers(&lambda) {
                    let other = higher_lie_character_pair_with_root(&lambda, c, &limits()).unwrap();
                    assert_eq!(other, base, "λ = {lambda}, c = {c}");
                }
            }
        }
        assert!(higher_lie_character_pair_with_root(&part(&[3]), 3, &limits()).is_err());
    }

    #[test]
    fn sum_over_all_lambda_is_regular_character() {
        for n in 1..=6 {
            let total = character_sum(n, PartitionFilter::All, Mode::Plain, &limits()).unwrap();
            for (nu, v) in total.iter() {
                let expected = if *nu == Partition::ones(n) {
                    factorial(n as u64)
                } else {
                    BigInt::zero()
                };
                assert_eq!(*v, expected, "n = {n}, ν = {nu}");
            }
        }
    }

    #[test]
    fn single_cycle_structure() {
        assert_eq!(verify_single_cycle_structure(4, 2, 1).unwrap(), (2, 2));
        assert_eq!(verify_single_cycle_structure(3, 0, 2).unwrap(), (3, 2));
        assert_eq!(verify_single_cycle_structure(2, 1, 3).unwrap(), (1, 6));
        for i in 1..=6 {
            for k in 0..i {
                for ell in 1..=4 {
                    let d = gcd(k, i);
                    assert_eq!(
                        verify_single_cycle_structure(i, k, ell).unwrap(),
                        (d, ell * i / d)
                    );
                }
            }
        }
        assert!(verify_single_cycle_structure(3, 3, 1).is_err());
    }

    #[test]
    fn single_cycle_sums_collapse() {
        for i in 1..=6usize {
            for e in crate::arith::divisors(i as u64) {
                let e = e as usize;
                for ell in 1..=3 {
                    let j = ell * e;
                    let plain = single_cycle_sum(i, e, ell, false).unwrap();
                    assert_eq!(
                        plain,
                        BigRational::from_integer(BigInt::from(mobius(e as u64)))
                    );
                    let signed = single_cycle_sum(i, e, ell, true).unwrap();
                    let expected = neg_one_pow((i * (j - 1) / e) as i64) * mobius(e as u64);
                    assert_eq!(signed, BigRational::from_integer(BigInt::from(expected)));
                }
            }
        }
    }

    #[test]
    fn kernel_report() {
        assert!(verify_kernel(24, 6).unwrap().passed());
    }

    #[test]
    fn table_json() {
        let lambda = part(&[3, 1]);
        let chi = higher_lie_character(&lambda, Mode::Plain, &limits()).unwrap();
        let json = serde_json::to_string(&CharacterTable::new(&lambda, Mode::Plain, &chi)).unwrap();
        assert!(json
            .starts_with(r#"{"n":4,"lambda":[3,1],"mode":"plain","values":[{"nu":[4],"value":"#));
    }
}
