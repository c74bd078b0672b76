//! Integer helpers: gcd/lcm, Möbius function, divisors, factorials.

use num_bigint::BigInt;
use num_traits::One;

pub use num_integer::{gcd, lcm};

/// Möbius function by trial division. `mobius(0)` is treated as 0.
pub fn mobius(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let mut m = n;
    let mut sign = 1i64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!!` for `n >= -1`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    assert!(n >= -1, "double factorial is defined for n >= -1");
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Least common multiple of all odd numbers in `1..=n` (1 for `n <= 1`).
pub fn odd_lcm_up_to(n: u64) -> u64 {
    (1..=n).filter(|k| k % 2 == 1).fold(1, lcm)
}

/// `(-1)^e` for a signed exponent.
pub fn neg_one_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
