//! Independent brute-force oracles checked against the public API.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use hilex_core::arith::factorial;
use hilex_core::hlc::{higher_lie_character, Mode};
use hilex_core::partition::partitions;
use hilex_core::perm::all_permutations;
use hilex_core::roots::{root_enumerator, RootOrder, RootSpec};
use hilex_core::signed::all_signed_permutations;
use hilex_core::{Limits, Partition, PartitionFilter, Permutation, SignedPermutation};

fn power_by_composition(p: &Permutation, k: u64) -> Permutation {
    (0..k).fold(Permutation::identity(p.n()), |acc, _| acc.compose(p))
}

fn classical_mobius(n: u64) -> i64 {
    let mut m = n;
    let mut result = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

// Known closed form for the Lie character: supported on classes (d^{n/d}),
// with value mu(d) (n/d - 1)! d^{n/d - 1}.
fn lie_character_value(nu: &Partition) -> BigInt {
    let n = nu.n();
    let d = nu.parts()[0];
    if nu.parts().iter().any(|&p| p != d) {
        return BigInt::from(0);
    }
    let m = n / d;
    BigInt::from(classical_mobius(d as u64))
        * factorial(m as u64 - 1)
        * BigInt::from(d).pow(m as u32 - 1)
}

#[test]
fn single_row_is_the_lie_character() {
    let limits = Limits::default();
    for n in 1..=7 {
        let lambda = Partition::new(vec![n]).unwrap();
        let psi = higher_lie_character(&lambda, Mode::Plain, &limits).unwrap();
        for (nu, v) in psi.iter() {
            assert_eq!(v, &lie_character_value(nu), "n = {n}, nu = {nu}");
        }
    }
}

#[test]
fn family_sum_is_regular() {
    // Σ_λ ψ^λ is the regular character; the twisted family has the same degrees.
    let limits = Limits::default();
    for n in 1..=6 {
        let mut plain = BTreeMap::new();
        let mut twisted_dim = BigInt::from(0);
        for lambda in partitions(n, PartitionFilter::All) {
            let psi = higher_lie_character(&lambda, Mode::Plain, &limits).unwrap();
            let tau = higher_lie_character(&lambda, Mode::Twisted, &limits).unwrap();
            assert_eq!(psi.dimension(), tau.dimension());
            twisted_dim += tau.dimension();
            for (nu, v) in psi.iter() {
                *plain.entry(nu.clone()).or_insert_with(|| BigInt::from(0)) += v;
            }
        }
        for (nu, v) in plain {
            let want = if nu == Partition::ones(n) {
                factorial(n as u64)
            } else {
                BigInt::from(0)
            };
            assert_eq!(v, want, "n = {n}, nu = {nu}");
        }
        assert_eq!(twisted_dim, factorial(n as u64));
    }
}

#[test]
fn root_counts_by_pairwise_search() {
    let limits = Limits::default();
    for n in 1..=5 {
        let perms: Vec<Permutation> = all_permutations(n).collect();
        for k in [2u64, 3, 4, 6] {
            for signed in [false, true] {
                let mut counts: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
                for y in &perms {
                    let x = power_by_composition(y, k);
                    let w = if signed { y.sign() } else { 1 };
                    *counts.entry(x.window().to_vec()).or_default() += w;
                }
                let spec = RootSpec {
                    order: RootOrder::K(k),
                    signed,
                };
                let f = root_enumerator(n, spec, &limits).unwrap();
                for x in &perms {
                    let want = counts.get(x.window()).copied().unwrap_or(0);
                    assert_eq!(
                        f.get(&x.cycle_type()),
                        &BigInt::from(want),
                        "n = {n}, k = {k}, x = {:?}",
                        x.window()
                    );
                }
            }
        }
    }
}

#[test]
fn class_sizes_sum_to_group_orders() {
    let limits = Limits::default();
    for n in 0..=8 {
        let total: BigInt = partitions(n, PartitionFilter::All)
            .iter()
            .map(Partition::class_size)
            .sum();
        assert_eq!(total, factorial(n as u64));
    }
    for n in 1..=4 {
        let all = all_signed_permutations(n, &limits).unwrap();
        let mut sizes: BTreeMap<_, u64> = BTreeMap::new();
        for w in &all {
            *sizes.entry(w.cycle_type()).or_default() += 1;
        }
        for (bl, count) in sizes {
            assert_eq!(bl.class_size(), BigInt::from(count));
        }
    }
}

fn permutation_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w.into_iter().map(|i| i + 1).collect()).unwrap())
}

fn signed_of_size(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (
        Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(),
        proptest::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(w, flips)| {
            SignedPermutation::new(
                w.into_iter()
                    .zip(flips)
                    .map(|(v, f)| if f { -v } else { v })
                    .collect(),
            )
            .unwrap()
        })
}

proptest! {
    #[test]
    fn cycle_type_is_a_class_invariant(p in permutation_strategy(9), seed in any::<u64>()) {
        let n = p.n();
        let mut window: Vec<usize> = (1..=n).collect();
        window.rotate_left((seed as usize) % n);
        let g = Permutation::new(window).unwrap();
        let conj = g.compose(&p).compose(&g.inverse());
        prop_assert_eq!(conj.cycle_type(), p.cycle_type());
        prop_assert_eq!(p.cycle_type().n(), n);
        prop_assert_eq!(p.compose(&p.inverse()), Permutation::identity(n));
    }

    #[test]
    fn power_matches_repeated_composition(p in permutation_strategy(8), k in 0u64..30) {
        prop_assert_eq!(p.pow(k), power_by_composition(&p, k));
    }

    #[test]
    fn signed_cycle_type_is_a_class_invariant(
        (w, g) in (1usize..=7).prop_flat_map(|n| (signed_of_size(n), signed_of_size(n)))
    ) {
        let conj = g.compose(&w).compose(&g.inverse());
        prop_assert_eq!(conj.cycle_type(), w.cycle_type());
        prop_assert_eq!(w.compose(&w.inverse()), SignedPermutation::identity(w.n()));
    }
}
