//! Pollard–Brent rho splitting, with a 64-bit fast path.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::prime::mul_mod;

/// How many polynomial increments are tried before giving up on a composite.
pub const MAX_ATTEMPTS: u64 = 64;

const BATCH: u64 = 128;

/// Tries to split a composite `n` with the map `x -> x^2 + c`.
/// Returns a nontrivial divisor, or `None` when this increment degenerates.
pub(crate) fn brent_u64(n: u64, c: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let step = |x: u64| {
        let sq = mul_mod(x, x, n);
        let (sum, overflow) = sq.overflowing_add(c);
        if overflow || sum >= n {
            sum.wrapping_sub(n)
        } else {
            sum
        }
    };
    let (mut x, mut y, mut ys) = (0u64, 2u64 % n, 0u64);
    let (mut q, mut g, mut r) = (1u64, 1u64, 1u64);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = step(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

pub(crate) fn brent_big(n: &BigUint, c: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let c = BigUint::from(c) % n;
    let step = |x: &BigUint| (x * x + &c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut x = BigUint::zero();
    let mut y = BigUint::from(2u32) % n;
    let mut ys = BigUint::zero();
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut r = 1u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = step(&y);
                q = q * diff(&x, &y) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = step(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}
