//! Exact arithmetic in `Z[ζ_L]`.
//!
//! Values are kept in the group-ring basis `1, ζ, …, ζ^{L-1}` (so addition of
//! a root of unity is a single coefficient bump) and reduced modulo the
//! cyclotomic polynomial `Φ_L` only when a canonical form is needed. `Φ_L` is
//! obtained by exact division of `x^L - 1` by `Φ_d` for the proper divisors
//! `d` of `L`; no floating point is involved anywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{divisors, gcd};
use crate::scalar::RingInt;

/// An element `Σ_r coeffs[r] ζ_L^r` of the ring of integers of `Q(ζ_L)`.
#[derive(Debug, Clone)]
pub struct Cyclotomic<T> {
    order: usize,
    coeffs: Vec<T>,
}

/// Coefficients of `Φ_L`, lowest degree first.
pub fn cyclotomic_polynomial(order: usize) -> Arc<Vec<i64>> {
    assert!(order >= 1, "cyclotomic polynomial order must be positive");
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&order) {
        return Arc::clone(hit);
    }
    // x^L - 1
    let mut num = vec![0i64; order + 1];
    num[0] = -1;
    num[order] = 1;
    for d in divisors(order as u64) {
        let d = d as usize;
        if d == order {
            continue;
        }
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    let phi = Arc::new(num);
    cache
        .lock()
        .expect("cache poisoned")
        .insert(order, Arc::clone(&phi));
    phi
}

/// Exact quotient of `num` by the monic `den`; panics on a nonzero remainder.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (dn..num.len()).rev() {
        let c = rem[k];
        if c != 0 {
            quot[k - dn] = c;
            for (t, &dc) in den.iter().enumerate() {
                rem[k - dn + t] -= c * dc;
            }
        }
    }
    assert!(
        rem.iter().all(|&c| c == 0),
        "inexact division in cyclotomic polynomial construction"
    );
    quot
}

impl<T: RingInt> Cyclotomic<T> {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "root-of-unity order must be positive");
        Cyclotomic {
            order,
            coeffs: vec![T::zero(); order],
        }
    }

    pub fn from_integer(order: usize, value: T) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = value;
        z
    }

    pub fn one(order: usize) -> Self {
        Self::from_integer(order, T::one())
    }

    /// `ζ_L^r` (any integer `r`, taken mod `L`).
    pub fn root_power(order: usize, r: i64) -> Self {
        let mut z = Self::zero(order);
        z.add_root_power(r, T::one());
        z
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// In-place `self += count · ζ_L^r`.
    pub fn add_root_power(&mut self, r: i64, count: T) {
        let idx = r.rem_euclid(self.order as i64) as usize;
        let slot = &mut self.coeffs[idx];
        *slot = slot.clone() + count;
    }

    /// Re-expresses this value over `ζ_M` where `L | M`.
    pub fn lift(&self, new_order: usize) -> Self {
        assert!(
            new_order.is_multiple_of(self.order),
            "cannot lift order {} to {}",
            self.order,
            new_order
        );
        let step = new_order / self.order;
        let mut z = Self::zero(new_order);
        for (r, c) in self.coeffs.iter().enumerate() {
            z.coeffs[r * step] = c.clone();
        }
        z
    }

    pub fn scale(&self, k: &T) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    /// Canonical representative: remainder modulo `Φ_L` (degree `< φ(L)`),
    /// padded with zeros to length `L`.
    pub fn reduce(&self) -> Self {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.len() - 1;
        let mut c = self.coeffs.clone();
        for k in (deg..self.order).rev() {
            if c[k].is_zero() {
                continue;
            }
            let lead = std::mem::replace(&mut c[k], T::zero());
            for (t, &pc) in phi.iter().enumerate().take(deg) {
                if pc != 0 {
                    let slot = &mut c[k - deg + t];
                    *slot = slot.clone() - lead.clone() * T::from(pc);
                }
            }
        }
        Cyclotomic {
            order: self.order,
            coeffs: c,
        }
    }

    pub fn is_rational_integer(&self) -> bool {
        self.reduce().coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational integer this value equals, if it is one.
    pub fn to_rational_integer(&self) -> Option<T> {
        let r = self.reduce();
        if r.coeffs[1..].iter().all(Zero::is_zero) {
            Some(r.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.reduce().coeffs.iter().all(Zero::is_zero)
    }

    pub fn map_coeffs<U: RingInt>(&self, f: impl Fn(&T) -> U) -> Cyclotomic<U> {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic values must share one root-of-unity order"
        );
    }
}

impl Cyclotomic<i64> {
    pub fn to_big(&self) -> Cyclotomic<BigInt> {
        self.map_coeffs(|&c| BigInt::from(c))
    }
}

/// Equality in the field, not of representatives.
impl<T: RingInt> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && (self.clone() - other.clone()).is_zero()
    }
}

impl<T: RingInt> Add for Cyclotomic<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.assert_same_order(&rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<T: RingInt> Sub for Cyclotomic<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: RingInt> Neg for Cyclotomic<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Group-ring product (cyclic convolution, valid since `ζ^L = 1`).
impl<T: RingInt> Mul for Cyclotomic<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.assert_same_order(&rhs);
        let l = self.order;
        let mut out = vec![T::zero(); l];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = &mut out[(i + j) % l];
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        Cyclotomic {
            order: l,
            coeffs: out,
        }
    }
}

impl<T: RingInt + fmt::Display> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduce();
        let terms: Vec<String> = r
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*z{}", self.order),
                _ => format!("{c}*z{}^{k}", self.order),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `Σ_{0≤k<n, gcd(k,n)=1} ζ_n^k` in `Z[ζ_n]`; it reduces to `μ(n)`.
pub fn mobius_root_of_unity_sum(n: usize) -> Cyclotomic<BigInt> {
    let mut z = Cyclotomic::zero(n);
    for k in 0..n {
        if gcd(k, n) == 1 {
            z.add_root_power(k as i64, BigInt::from(1));
        }
    }
    z
}
