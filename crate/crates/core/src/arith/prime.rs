//! Primality testing.
//!
//! Below 2^64 Miller–Rabin runs with the first twelve primes as witnesses,
//! which is deterministic for every `n < 3.3 * 10^24`. Above that the test
//! runs [`BIG_ROUNDS`] rounds with bases drawn from a ChaCha stream seeded by
//! `n` itself, so the verdict for a given `n` never changes between runs.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Trial division bound used before falling back to rho.
pub const TRIAL_BOUND: u32 = 10_000;

/// Miller–Rabin rounds for integers of more than 64 bits (error < 4^-64).
pub const BIG_ROUNDS: usize = 64;

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Primes below [`TRIAL_BOUND`], computed once.
pub fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
        let mut composite = vec![false; n];
        let mut primes = Vec::new();
        for i in 2..n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j < n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn seed_from(n: &BigUint) -> u64 {
    n.iter_u64_digits()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, d| (h ^ d).wrapping_mul(0x0000_0100_0000_01b3))
}

fn is_prime_big(n: &BigUint) -> bool {
    for &p in small_primes().iter().take(64) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let span = n - 3u32;
    let mut rng = ChaCha20Rng::seed_from_u64(seed_from(n));
    let words = n.iter_u64_digits().count() + 1;

    'round: for _ in 0..BIG_ROUNDS {
        let raw = BigUint::from_slice(
            &(0..words * 2).map(|_| rng.gen::<u32>()).collect::<Vec<_>>(),
        );
        let a = raw % &span + 2u32;
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'round;
            }
        }
        return false;
    }
    true
}

/// Primality of an arbitrary-precision integer.
pub fn is_prime(n: &BigUint) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => is_prime_big(n),
    }
}
