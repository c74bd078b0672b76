//! Both sides of the generating-function identities for higher Lie
//! characters, and coefficientwise comparison.
//!
//! The left-hand sides are assembled from exact character values,
//!
//! ```text
//! Σ_n Σ_{λ,ν ⊢ n} ψ^λ(ν) s^{c(λ)} t^{c(ν)} / |Z_ν|      (optionally × sign(ν)),
//! ```
//!
//! the right-hand sides from their closed forms as exponentials and products.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{divisors, double_factorial, factorial, gcd, mobius, neg_one_pow};
use crate::error::{Error, Result};
use crate::hlc::character_family;
use crate::limits::Limits;
use crate::partition::{Partition, PartitionFilter};
use crate::report::{Basis, Status};
use crate::series::{Family, MonomialKey, Var};
use crate::RationalSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    #[serde(rename = "SUMMATION_4A")]
    Summation4A,
    #[serde(rename = "SUMMATION_4A_SIGNED")]
    Summation4ASigned,
    OddCycles,
    EvenCycles,
}

impl IdentityId {
    pub const ALL: [IdentityId; 4] = [
        IdentityId::Summation4A,
        IdentityId::Summation4ASigned,
        IdentityId::OddCycles,
        IdentityId::EvenCycles,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            IdentityId::Summation4A => "summation",
            IdentityId::Summation4ASigned => "summation-signed",
            IdentityId::OddCycles => "odd-cycles",
            IdentityId::EvenCycles => "even-cycles",
        }
    }

    /// The signed summation identity is only outlined; its ingredient lemmas
    /// are checked here rather than proved.
    pub fn basis(self) -> Basis {
        match self {
            IdentityId::Summation4A | IdentityId::OddCycles => Basis::Proved,
            IdentityId::Summation4ASigned | IdentityId::EvenCycles => {
                Basis::ComputationallyVerified
            }
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        match norm.as_str() {
            "summation" | "summation-4a" => Ok(IdentityId::Summation4A),
            "summation-signed" | "summation-4a-signed" => Ok(IdentityId::Summation4ASigned),
            "odd-cycles" | "odd" | "op" => Ok(IdentityId::OddCycles),
            "even-cycles" | "even" | "ep" => Ok(IdentityId::EvenCycles),
            _ => Err(Error::domain(format!("unknown identity `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub key: MonomialKey,
    #[serde(serialize_with = "as_string")]
    pub lhs: BigRational,
    #[serde(serialize_with = "as_string")]
    pub rhs: BigRational,
}

fn as_string<S: serde::Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub truncation: u32,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
    pub basis: Basis,
    /// Terms compared (union of both supports).
    pub terms: usize,
}

/// First key, in canonical order, where the two series differ.
pub fn compare_series(lhs: &RationalSeries, rhs: &RationalSeries) -> Option<Discrepancy> {
    lhs.support_union(rhs).find_map(|k| {
        let (a, b) = (lhs.coefficient(k), rhs.coefficient(k));
        (a != b).then(|| Discrepancy {
            key: k.clone(),
            lhs: a,
            rhs: b,
        })
    })
}

fn rational(n: i64, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(BigInt::from(n), d.into())
}

/// `Σ_{n ≤ w} Σ_{λ ∈ filter} Σ_ν ψ^λ(ν) s^{c(λ)} t^{c(ν)}/|Z_ν|`.
fn lhs_filtered(
    w: u32,
    signed: bool,
    filter: PartitionFilter,
    keep_s: bool,
    limits: &Limits,
) -> Result<RationalSeries> {
    limits.check_character_n(w as usize)?;
    let mut out = RationalSeries::one(w, w);
    for n in 1..=w as usize {
        for (lambda, psi, _) in character_family(n, filter, limits)? {
            let s_part = if keep_s {
                lambda.clone()
            } else {
                Partition::empty()
            };
            for (nu, value) in psi.iter() {
                if value.is_zero() {
                    continue;
                }
                let sign = if signed { nu.sign() } else { 1 };
                let coeff = BigRational::new(value * sign, nu.centralizer_order());
                out.add_term(MonomialKey::from_partitions(&s_part, nu), coeff);
            }
        }
    }
    Ok(out)
}

/// Left-hand side of the (signed) summation identity up to weight `w`.
pub fn lhs_summation_4a(w: u32, signed: bool, limits: &Limits) -> Result<RationalSeries> {
    lhs_filtered(w, signed, PartitionFilter::All, true, limits)
}

/// Odd/even-parts left-hand side read straight off the character sums.
pub fn lhs_cycles_direct(w: u32, id: IdentityId, limits: &Limits) -> Result<RationalSeries> {
    match id {
        IdentityId::OddCycles => lhs_filtered(w, false, PartitionFilter::Op, false, limits),
        IdentityId::EvenCycles => lhs_filtered(w, true, PartitionFilter::Ep, false, limits),
        _ => Err(Error::domain(
            "direct cycle LHS is only defined for the odd/even identities",
        )),
    }
}

/// Odd/even-parts left-hand side by specializing the `s_i` in the general
/// series: odd `i` ↦ 1, even ↦ 0 for odd parts; for even parts, even `i` ↦ 1,
/// a single `s_1` ↦ 1 and everything else odd ↦ 0.
pub fn lhs_cycles_by_substitution(
    w: u32,
    id: IdentityId,
    limits: &Limits,
) -> Result<RationalSeries> {
    let (general, odd) = match id {
        IdentityId::OddCycles => (lhs_summation_4a(w, false, limits)?, true),
        IdentityId::EvenCycles => (lhs_summation_4a(w, true, limits)?, false),
        _ => {
            return Err(Error::domain(
                "substituted cycle LHS is only defined for the odd/even identities",
            ))
        }
    };
    let one = BigRational::one;
    let zero = BigRational::zero;
    Ok(general.substitute(|family, var, exp| {
        if family != Family::S {
            return None;
        }
        let i = var.index;
        Some(match (odd, i % 2 == 1) {
            (true, true) => one(),
            (true, false) => zero(),
            (false, false) => one(),
            (false, true) if i == 1 && exp == 1 => one(),
            (false, true) => zero(),
        })
    }))
}

/// `exp( Σ_{i,j} Σ_{e | (i,j)} c(i,j,e) μ(e) s_i^{j/e} t_j^{i/e} / (ij/e) )` with
/// `c = (−1)^{i(j−1)/e}` in the signed case and 1 otherwise.
pub fn rhs_summation_4a(w: u32, signed: bool) -> RationalSeries {
    let mut exponent = RationalSeries::zero(w, w);
    for i in 1..=w {
        for j in 1..=w {
            for e in divisors(gcd(i, j) as u64) {
                let e = e as u32;
                let weight = i * j / e;
                if weight > w {
                    continue;
                }
                let mu = mobius(e as u64);
                if mu == 0 {
                    continue;
                }
                let sign = if signed {
                    neg_one_pow((i * (j - 1) / e) as i64)
                } else {
                    1
                };
                let key = MonomialKey::plain(&[(i, j / e)], &[(j, i / e)]);
                exponent.add_term(key, rational(sign * mu, weight));
            }
        }
    }
    exponent.exp().expect("exponent has no constant term")
}

/// `∏_{2^p ≤ w} ((1 + t_{2^p})/(1 − t_{2^p}))^{1/2^{p+1}}`.
pub fn rhs_op_product(w: u32) -> RationalSeries {
    let mut out = RationalSeries::one(w, w);
    let mut j = 1u32;
    while j <= w.max(1) {
        let factor =
            RationalSeries::binomial_power(w, w, Family::T, Var::plain(j), rational(1, 2 * j));
        out = out.multiply(&factor);
        j *= 2;
    }
    out
}

fn build_report(
    id: IdentityId,
    w: u32,
    lhs: &RationalSeries,
    rhs: &RationalSeries,
    route_gap: Option<Discrepancy>,
) -> IdentityReport {
    let first = route_gap.or_else(|| compare_series(lhs, rhs));
    IdentityReport {
        identity_id: id,
        truncation: w,
        status: Status::from_bool(first.is_none()),
        first_discrepancy: first,
        basis: id.basis(),
        terms: lhs.support_union(rhs).count(),
    }
}

fn sides(
    id: IdentityId,
    w: u32,
    limits: &Limits,
) -> Result<(RationalSeries, RationalSeries, Option<Discrepancy>)> {
    Ok(match id {
        IdentityId::Summation4A => (
            lhs_summation_4a(w, false, limits)?,
            rhs_summation_4a(w, false),
            None,
        ),
        IdentityId::Summation4ASigned => (
            lhs_summation_4a(w, true, limits)?,
            rhs_summation_4a(w, true),
            None,
        ),
        IdentityId::OddCycles | IdentityId::EvenCycles => {
            let direct = lhs_cycles_direct(w, id, limits)?;
            let substituted = lhs_cycles_by_substitution(w, id, limits)?;
            let gap = compare_series(&direct, &substituted);
            (direct, rhs_op_product(w), gap)
        }
    })
}

/// Compares both sides of `id` coefficientwise up to weight `w`. For the
/// odd/even identities the two LHS routes must also agree; a disagreement
/// is reported as the discrepancy (direct vs substituted).
pub fn verify_identity(id: IdentityId, w: u32, limits: &Limits) -> Result<IdentityReport> {
    let (lhs, rhs, gap) = sides(id, w, limits)?;
    Ok(build_report(id, w, &lhs, &rhs, gap))
}

/// Harness self-test: the same comparison after adding `delta` to the LHS
/// coefficient at `key`.
pub fn verify_identity_perturbed(
    id: IdentityId,
    w: u32,
    key: &MonomialKey,
    delta: &BigRational,
    limits: &Limits,
) -> Result<IdentityReport> {
    let (mut lhs, rhs, gap) = sides(id, w, limits)?;
    lhs.add_term(key.clone(), delta.clone());
    Ok(build_report(id, w, &lhs, &rhs, gap))
}

/// `n! · [t_1^n]` of the odd-cycles product with `t_{2^p} = 0` for `p ≥ 1`,
/// paired with `(n−1)!!²` (n even) or `n!!·(n−2)!!` (n odd), for `n ≤ n_max`.
pub fn double_factorial_drop_out(n_max: u32) -> Vec<(u32, BigInt, BigInt)> {
    let series = rhs_op_product(n_max).substitute(|family, var, _| {
        (family == Family::T && var.index > 1).then(BigRational::zero)
    });
    (0..=n_max)
        .map(|n| {
            let key = MonomialKey::plain(&[], &[(1, n)]);
            let scaled = series.coefficient(&key) * BigRational::from_integer(factorial(n as u64));
            assert!(scaled.is_integer(), "n!·coefficient is integral");
            let n = n as i64;
            let expected = if n % 2 == 0 {
                let d = double_factorial(n - 1);
                &d * &d
            } else {
                double_factorial(n) * double_factorial(n - 2)
            };
            (n as u32, scaled.to_integer(), expected)
        })
        .collect()
}
