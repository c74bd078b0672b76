//! Root enumerators `ρ_k(g) = #{x : x^k = g}` and their signed versions, and
//! the verifiers tying them to higher Lie characters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::arith::{divisors, double_factorial, gcd, neg_one_pow, odd_lcm_up_to};
use crate::class_function::{sum, ClassFunction};
use crate::error::{Error, Result};
use crate::gf::compare_series;
use crate::hlc::{character_family, character_sum, Mode};
use crate::limits::Limits;
use crate::partition::{partitions, Partition, PartitionFilter};
use crate::perm::{descent_distribution, oc_ec_members, par_fold_permutations, CycleFamily};
use crate::report::{Basis, CheckReport};
use crate::series::MonomialKey;
use crate::signed::{eta, induce_by_cosets, induce_to_sn, FusionTarget};
use crate::RationalSeries;

/// Which roots to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootOrder {
    K(u64),
    /// `x^k = g` for some odd `k`.
    Odd,
}

impl RootOrder {
    /// A single exponent with the same roots in `S_n`; for odd roots, the lcm
    /// of the odd numbers up to `n`.
    pub fn exponent(self, n: usize) -> u64 {
        match self {
            RootOrder::K(k) => k,
            RootOrder::Odd => odd_lcm_up_to(n as u64),
        }
    }

    /// Partitions indexing the matching higher Lie characters: all parts
    /// divide `k`, or all parts odd.
    pub fn admits(self, lambda: &Partition) -> bool {
        match self {
            RootOrder::K(k) => lambda.parts_divide(k as usize),
            RootOrder::Odd => lambda.is_op(),
        }
    }
}

impl fmt::Display for RootOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootOrder::K(k) => write!(f, "{k}"),
            RootOrder::Odd => write!(f, "odd"),
        }
    }
}

impl FromStr for RootOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("odd") {
            return Ok(RootOrder::Odd);
        }
        match s.parse::<u64>() {
            Ok(k) if k >= 1 => Ok(RootOrder::K(k)),
            _ => Err(Error::domain(format!(
                "root order must be a positive integer or `odd`, got `{s}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RootSpec {
    pub order: RootOrder,
    /// Weight each root `x` by `sign(x)`.
    pub signed: bool,
}

/// `ρ_k^{S_n}` (or `ρ̄_k^{S_n}`) by scanning all of `S_n` and tallying
/// `x ↦ x^k` by the class of `x^k`.
pub fn root_enumerator(n: usize, spec: RootSpec, limits: &Limits) -> Result<ClassFunction> {
    limits.check_perm_n(n)?;
    let k = spec.order.exponent(n);
    let tally: BTreeMap<Partition, i64> = par_fold_permutations(
        n,
        BTreeMap::new,
        |acc: &mut BTreeMap<Partition, i64>, x| {
            let w = if spec.signed { x.sign() } else { 1 };
            *acc.entry(x.pow(k).cycle_type()).or_insert(0) += w;
        },
        |mut a, b| {
            for (nu, c) in b {
                *a.entry(nu).or_insert(0) += c;
            }
            a
        },
    );
    let mut out = ClassFunction::zero(n);
    for (nu, total) in tally {
        let (q, r) = BigInt::from(total).div_rem(&nu.class_size());
        if !r.is_zero() {
            return Err(Error::consistency(format!(
                "root count on class {nu} is not class-constant"
            )));
        }
        out.set(&nu, q);
    }
    Ok(out)
}

/// `Σ_{λ admitted} ψ^λ`, or `Σ sign(λ) τ^λ` for the signed enumerator.
pub fn root_character_sum(n: usize, spec: RootSpec, limits: &Limits) -> Result<ClassFunction> {
    let family = character_family(n, PartitionFilter::All, limits)?;
    let terms: Vec<ClassFunction> = family
        .into_iter()
        .filter(|(lambda, _, _)| spec.order.admits(lambda))
        .map(|(lambda, psi, tau)| {
            if spec.signed {
                tau.scale(&BigInt::from(lambda.sign()))
            } else {
                psi
            }
        })
        .collect();
    Ok(sum(n, &terms))
}

fn table(chi: &ClassFunction) -> serde_json::Value {
    chi.json_values()
}

/// Scharf: `ρ_k = Σ_{λ ⊢_k n} ψ^λ` and `ρ̄_k = Σ_{λ ⊢_k n} sign(λ) τ^λ`.
pub fn verify_scharf(n: usize, order: RootOrder, limits: &Limits) -> Result<CheckReport> {
    let plain = RootSpec {
        order,
        signed: false,
    };
    let signed = RootSpec {
        order,
        signed: true,
    };
    let (rho, psi_sum) = (
        root_enumerator(n, plain, limits)?,
        root_character_sum(n, plain, limits)?,
    );
    let (rho_bar, tau_sum) = (
        root_enumerator(n, signed, limits)?,
        root_character_sum(n, signed, limits)?,
    );
    let ok_plain = rho == psi_sum;
    let ok_signed = rho_bar == tau_sum;
    Ok(CheckReport::new("scharf", ok_plain && ok_signed)
        .with("n", n)
        .with("k", order.to_string())
        .with("exponent", order.exponent(n).to_string())
        .with("plain", ok_plain)
        .with("signed", ok_signed)
        .with("basis", Basis::ComputationallyVerified)
        .with("rho", table(&rho))
        .with("psi_sum", table(&psi_sum))
        .with("rho_signed", table(&rho_bar))
        .with("tau_sum", table(&tau_sum)))
}

/// `(n−1)!!²` for even `n`, `n!!·(n−2)!!` for odd `n`.
pub fn odd_root_count(n: usize) -> BigInt {
    let n = n as i64;
    if n % 2 == 0 {
        let d = double_factorial(n - 1);
        &d * &d
    } else {
        double_factorial(n) * double_factorial(n - 2)
    }
}

/// Descent sets over `OC(n)` against complemented descent sets over `EC(n)`.
pub fn verify_equid(n: usize, limits: &Limits) -> Result<CheckReport> {
    let oc = oc_ec_members(n, CycleFamily::Oc, limits)?;
    let ec = oc_ec_members(n, CycleFamily::Ec, limits)?;
    let left = descent_distribution(&oc, false)?;
    let right = descent_distribution(&ec, true)?;
    let expected = odd_root_count(n);
    let ok =
        left == right && BigInt::from(oc.len()) == expected && BigInt::from(ec.len()) == expected;
    let render = |h: &BTreeMap<crate::perm::DescentSet, u64>| {
        h.iter()
            .map(|(d, c)| (d.to_string(), c.to_string()))
            .collect::<BTreeMap<_, _>>()
    };
    Ok(CheckReport::new("equid", ok)
        .with("n", n)
        .with_number("oc_total", oc.len())
        .with_number("ec_total", ec.len())
        .with_number("expected_total", expected)
        .with(
            "histograms",
            json!({ "oc_descents": render(&left), "ec_complement_descents": render(&right) }),
        ))
}

/// `Σ_{OP} ψ = sign ⊗ Σ_{EP} ψ` and `Σ_{OP} τ = Σ_{EP} ψ`, classwise.
pub fn verify_op_ep(n: usize, limits: &Limits) -> Result<CheckReport> {
    let op_psi = character_sum(n, PartitionFilter::Op, Mode::Plain, limits)?;
    let op_tau = character_sum(n, PartitionFilter::Op, Mode::Twisted, limits)?;
    let ep_psi = character_sum(n, PartitionFilter::Ep, Mode::Plain, limits)?;
    let signed_ep = ep_psi.tensor_sign();
    let ok_main = op_psi == signed_ep;
    let ok_twisted = op_tau == ep_psi;
    Ok(CheckReport::new("op-ep", ok_main && ok_twisted)
        .with("n", n)
        .with("plain", ok_main)
        .with("twisted", ok_twisted)
        .with_number("dimension", op_psi.dimension())
        .with("op_psi", table(&op_psi))
        .with("sign_ep_psi", table(&signed_ep))
        .with("op_tau", table(&op_tau))
        .with("ep_psi", table(&ep_psi)))
}

/// Induction from `S_m` to `S_{m+1}`: classes fuse by adding a fixed point.
pub fn induce_one_point(chi: &ClassFunction) -> Result<ClassFunction> {
    let m = chi.n();
    let mut sums: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (mu, v) in chi.iter() {
        *sums
            .entry(mu.with_part(1))
            .or_insert_with(BigRational::zero) +=
            BigRational::new(v.clone(), mu.centralizer_order());
    }
    let mut out = ClassFunction::zero(m + 1);
    for (nu, s) in sums {
        let v = s * BigRational::from_integer(nu.centralizer_order());
        if !v.is_integer() {
            return Err(Error::consistency(format!(
                "induced value on {nu} is not an integer"
            )));
        }
        out.set(&nu, v.to_integer());
    }
    Ok(out)
}

fn rho_odd(n: usize, limits: &Limits) -> Result<ClassFunction> {
    root_enumerator(
        n,
        RootSpec {
            order: RootOrder::Odd,
            signed: false,
        },
        limits,
    )
}

/// `ρ_odd^{S_{2n+1}} = ρ_odd^{S_{2n}}↑`, and `ρ_odd^{S_{2n}}` is not induced
/// from `S_{2n−1}` (its degree is not `2n` times the smaller one).
pub fn verify_induced_odd(n: usize, limits: &Limits) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::domain("induced-odd needs n >= 1"));
    }
    let even = rho_odd(2 * n, limits)?;
    let odd = rho_odd(2 * n + 1, limits)?;
    let induced = induce_one_point(&even)?;
    let ok_induced = induced == odd;
    let below = rho_odd(2 * n - 1, limits)?;
    let scaled = below.dimension() * BigInt::from(2 * n);
    let not_induced = &scaled != even.dimension();
    Ok(CheckReport::new("induced-odd", ok_induced && not_induced)
        .with("n", n)
        .with("induced_matches", ok_induced)
        .with("lower_not_induced", not_induced)
        .with_number("dim_even", even.dimension())
        .with_number("dim_below_times_index", scaled)
        .with("rho_odd_odd", table(&odd))
        .with("induced", table(&induced)))
}

/// `η_{B_n}↑^{S_{2n}} = Σ_{OP(2n)} ψ = ρ_odd^{S_{2n}}` and the same into
/// `S_{2n+1}`; fusion-based induction is cross-checked by coset induction
/// when `S_{2n+1}` is small enough.
pub fn verify_induced_b(n: usize, limits: &Limits) -> Result<CheckReport> {
    let eta_n = eta(n, limits)?;
    let mut report_fields = Vec::new();
    let mut ok = true;
    for target in [FusionTarget::Even, FusionTarget::Odd] {
        let big_n = target.size(n);
        let induced = induce_to_sn(&eta_n, target)?;
        let op_sum = character_sum(big_n, PartitionFilter::Op, Mode::Plain, limits)?;
        let rho = rho_odd(big_n, limits)?;
        let by_cosets = if big_n <= limits.perm_n as usize && big_n <= 7 {
            Some(induce_by_cosets(&eta_n, target, limits)?)
        } else {
            None
        };
        let cosets_ok = by_cosets.as_ref().map(|c| *c == induced);
        let this = induced == op_sum && induced == rho && cosets_ok != Some(false);
        ok &= this;
        report_fields.push((
            format!("s{big_n}"),
            json!({
                "pass": this,
                "matches_op_sum": induced == op_sum,
                "matches_rho_odd": induced == rho,
                "coset_cross_check": cosets_ok,
                "induced": table(&induced),
            }),
        ));
    }
    let mut r = CheckReport::new("induced-b", ok)
        .with("n", n)
        .with("eta", eta_n.json_values());
    for (k, v) in report_fields {
        r = r.with(&k, v);
    }
    Ok(r)
}

/// `Σ_{n ≤ w} Σ_ν f_n(ν) t^{c(ν)}/|Z_ν|` for a family of class functions.
fn class_series(w: u32, family: &[ClassFunction]) -> RationalSeries {
    let mut out = RationalSeries::zero(w, w);
    for chi in family {
        for (nu, v) in chi.iter() {
            out.add_term(
                MonomialKey::from_partitions(&Partition::empty(), nu),
                BigRational::new(v.clone(), nu.centralizer_order()),
            );
        }
    }
    out
}

/// Exponents of the cited root-counting generating functions:
/// `Σ_j Σ_{h | k, gcd(h,j) = 1} c · t_j^{k/h} / (jk/h)` with `c = 1`, or
/// `c = (−1)^{1 + jk/h}` for the signed count.
pub fn cited_root_series(w: u32, k: u64, signed: bool) -> RationalSeries {
    let mut exponent = RationalSeries::zero(w, w);
    for j in 1..=w as u64 {
        for h in divisors(k) {
            if gcd(h, j) != 1 {
                continue;
            }
            let power = k / h;
            let weight = j * power;
            if weight > w as u64 {
                continue;
            }
            let c = if signed {
                neg_one_pow(1 + weight as i64)
            } else {
                1
            };
            exponent.add_term(
                MonomialKey::plain(&[], &[(j as u32, power as u32)]),
                BigRational::new(c.into(), weight.into()),
            );
        }
    }
    exponent.exp().expect("no constant term")
}

/// Both cited generating functions for `ρ_k` and `ρ̄_k` against brute-force
/// root counts up to weight `w`.
pub fn verify_cited_gf_remarks(w: u32, k: u64, limits: &Limits) -> Result<CheckReport> {
    limits.check_perm_n(w as usize)?;
    let mut results = Vec::new();
    for signed in [false, true] {
        let spec = RootSpec {
            order: RootOrder::K(k),
            signed,
        };
        let family: Vec<ClassFunction> = (0..=w as usize)
            .map(|n| root_enumerator(n, spec, limits))
            .collect::<Result<_>>()?;
        let lhs = class_series(w, &family);
        let rhs = cited_root_series(w, k, signed);
        results.push(compare_series(&lhs, &rhs));
    }
    let ok = results.iter().all(Option::is_none);
    let [plain, signed]: [_; 2] = results.try_into().expect("two results");
    Ok(CheckReport::new("cited-gf", ok)
        .with("weight", w)
        .with("k", k)
        .with("basis", Basis::ComputationallyVerified)
        .with("plain_discrepancy", plain)
        .with("signed_discrepancy", signed))
}

/// Σ over `OP(n)` of `dim ψ^λ` two ways: class sizes, and `n!·[t_1^n]` of the
/// odd-cycles product; both against the closed form.
pub fn verify_double_factorial(n_max: usize) -> CheckReport {
    let by_classes: Vec<BigInt> = (0..=n_max)
        .map(|n| {
            partitions(n, PartitionFilter::Op)
                .iter()
                .map(Partition::class_size)
                .fold(BigInt::zero(), |a, b| a + b)
        })
        .collect();
    let by_series = crate::gf::double_factorial_drop_out(n_max as u32);
    let mut rows = Vec::new();
    let mut ok = true;
    for (n, classes) in by_classes.iter().enumerate().skip(1) {
        let (_, series, _) = &by_series[n];
        let formula = odd_root_count(n);
        ok &= *classes == formula && *series == formula;
        rows.push(json!({
            "n": n,
            "class_sizes": classes.to_string(),
            "series": series.to_string(),
            "formula": formula.to_string(),
        }));
    }
    CheckReport::new("double-factorial", ok)
        .with("n_max", n_max)
        .with("rows", rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn limits() -> Limits {
        Limits::default()
    }

    fn vals(c: &ClassFunction) -> Vec<i64> {
        c.iter().map(|(_, v)| i64::try_from(v).unwrap()).collect()
    }

    fn spec(order: RootOrder, signed: bool) -> RootSpec {
        RootSpec { order, signed }
    }

    #[test]
    fn enumerator_examples() {
        // canonical order (3), (2,1), (1,1,1)
        assert_eq!(
            vals(&root_enumerator(3, spec(RootOrder::K(2), false), &limits()).unwrap()),
            vec![1, 0, 4]
        );
        assert_eq!(
            vals(&root_enumerator(3, spec(RootOrder::Odd, false), &limits()).unwrap()),
            vec![0, 1, 3]
        );
        for n in 0..=5 {
            let one = root_enumerator(n, spec(RootOrder::K(1), false), &limits()).unwrap();
            assert!(one.iter().all(|(_, v)| v.is_one()));
        }
    }

    #[test]
    fn enumerator_invariants() {
        for n in 1..=7 {
            for k in [2u64, 3, 4, 6] {
                let r = root_enumerator(n, spec(RootOrder::K(k), false), &limits()).unwrap();
                let rb = root_enumerator(n, spec(RootOrder::K(k), true), &limits()).unwrap();
                for (nu, v) in r.iter() {
                    assert!(*v >= BigInt::zero());
                    assert!((v - rb.get(nu)).is_even());
                }
            }
            let odd = rho_odd(n, &limits()).unwrap();
            assert_eq!(odd.get(&Partition::ones(n)), &odd_root_count(n));
            let odd_bar = root_enumerator(n, spec(RootOrder::Odd, true), &limits()).unwrap();
            assert_eq!(odd.tensor_sign(), odd_bar);
        }
        assert_eq!(
            rho_odd(8, &limits()).unwrap().get(&Partition::ones(8)),
            &BigInt::from(11025)
        );
    }

    #[test]
    fn scharf_small() {
        for n in 1..=5 {
            for k in [1, 2, 3, 4, 6] {
                assert!(
                    verify_scharf(n, RootOrder::K(k), &limits())
                        .unwrap()
                        .passed(),
                    "n={n} k={k}"
                );
            }
            assert!(verify_scharf(n, RootOrder::Odd, &limits())
                .unwrap()
                .passed());
        }
    }

    #[test]
    fn equid_and_op_ep() {
        let r = verify_equid(3, &limits()).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.get("histograms").unwrap()["oc_descents"],
            json!({"{}": "1", "{1}": "1", "{2}": "1"})
        );
        let r = verify_equid(4, &limits()).unwrap();
        assert_eq!(r.get("oc_total").unwrap(), "9");
        for n in 1..=5 {
            assert!(verify_op_ep(n, &limits()).unwrap().passed());
        }
    }

    #[test]
    fn induced() {
        let r = verify_induced_odd(1, &limits()).unwrap();
        assert!(r.passed());
        for n in 1..=2 {
            assert!(verify_induced_odd(n, &limits()).unwrap().passed());
            assert!(verify_induced_b(n, &limits()).unwrap().passed());
        }
    }

    #[test]
    fn cited_remarks() {
        let s = cited_root_series(2, 2, false);
        assert_eq!(
            s.coefficient(&MonomialKey::plain(&[], &[(1, 1)])),
            BigRational::one()
        );
        assert_eq!(
            s.coefficient(&MonomialKey::plain(&[], &[(1, 2)])),
            BigRational::one()
        );
        assert_eq!(s.constant_term(), BigRational::one());
        for k in [2, 3, 4] {
            let r = verify_cited_gf_remarks(5, k, &limits()).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap());
        }
    }

    #[test]
    fn double_factorials() {
        assert!(verify_double_factorial(8).passed());
    }

    #[test]
    fn one_point_induction_dimension() {
        let chi = rho_odd(4, &limits()).unwrap();
        let up = induce_one_point(&chi).unwrap();
        assert_eq!(up.dimension(), &(chi.dimension() * BigInt::from(5)));
    }
}
