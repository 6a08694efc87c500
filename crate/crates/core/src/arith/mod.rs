//! Exact integer utilities: valuations, primality, factorization and cube
//! detection. Everything here is a pure function of its arguments.

mod prime;
mod rho;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Roots;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use prime::{is_prime, is_prime_u64, small_primes, BIG_ROUNDS, TRIAL_BOUND};

/// Complete prime factorization of a positive integer.
///
/// Factors are kept sorted by prime with positive exponents; `value` is the
/// product they multiply out to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
    value: BigUint,
}

impl Factorization {
    /// The factorization of 1.
    pub fn one() -> Self {
        Self { factors: Vec::new(), value: BigUint::one() }
    }

    /// Builds a factorization from `(prime, exponent)` pairs in any order.
    /// Repeated primes are merged and zero exponents dropped.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigUint, u32)>,
    {
        let mut merged: BTreeMap<BigUint, u32> = BTreeMap::new();
        for (p, e) in pairs {
            if e == 0 {
                continue;
            }
            if !is_prime(&p) {
                return Err(Error::NotPrime(p));
            }
            *merged.entry(p).or_default() += e;
        }
        let value = merged.iter().fold(BigUint::one(), |acc, (p, &e)| acc * p.pow(e));
        Ok(Self { factors: merged.into_iter().collect(), value })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent of `p`, zero when `p` does not divide the value.
    pub fn exponent(&self, p: &BigUint) -> u32 {
        self.factors
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn exponent_u64(&self, p: u64) -> u32 {
        self.exponent(&BigUint::from(p))
    }

    /// `"p^e"` strings in increasing order of `p`.
    pub fn to_strings(&self) -> Vec<String> {
        self.factors.iter().map(|(p, e)| format!("{p}^{e}")).collect()
    }
}

/// Space-separated `p^e` terms, e.g. `3^3 7^1`. The empty factorization
/// prints as `1`.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&self.to_strings().join(" "))
    }
}

impl FromStr for Factorization {
    type Err = String;

    /// Accepts the [`Display`](fmt::Display) form; terms may also be
    /// separated by `*`, and a bare `p` means `p^1`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self::one());
        }
        let mut pairs = Vec::new();
        for term in s.split(|c: char| c.is_whitespace() || c == '*').filter(|x| !x.is_empty()) {
            let (p, e) = term.split_once('^').unwrap_or((term, "1"));
            let p: BigUint = p.parse().map_err(|_| format!("bad prime in term {term:?}"))?;
            let e: u32 = e.parse().map_err(|_| format!("bad exponent in term {term:?}"))?;
            pairs.push((p, e));
        }
        Self::from_pairs(pairs).map_err(|e| e.to_string())
    }
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn vp(n: &BigInt, p: &BigUint) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    let mut m = n.magnitude().clone();
    let mut e = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&m, p);
        if !r.is_zero() {
            return Ok(e);
        }
        m = q;
        e += 1;
    }
}

/// Exact cube root of `n`, or `None` when `n` is not the cube of a positive
/// integer.
pub fn cube_root_exact(n: &BigUint) -> Option<BigUint> {
    if n.is_zero() {
        return None;
    }
    let r = n.cbrt();
    (&r * &r * &r == *n).then_some(r)
}

/// Whether `n` is a signed cube, i.e. `n = r^3` for some integer `r`.
pub fn is_cube(n: &BigInt) -> bool {
    n.is_zero() || cube_root_exact(n.magnitude()).is_some()
}

/// Complete prime factorization of `n >= 1`.
///
/// Trial division by the primes below [`TRIAL_BOUND`] runs first; composite
/// cofactors are split with Pollard–Brent rho. A cofactor that resists
/// [`rho::MAX_ATTEMPTS`] polynomial increments is reported as
/// [`Error::FactorizationFailed`].
pub fn factor(n: &BigUint) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();
    match n.to_u64() {
        Some(small) => {
            for (p, e) in factor_u64(small)? {
                *found.entry(BigUint::from(p)).or_default() += e;
            }
        }
        None => factor_big(n, &mut found)?,
    }
    let factors: Vec<_> = found.into_iter().collect();
    debug_assert_eq!(
        factors.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e)),
        *n
    );
    Ok(Factorization { factors, value: n.clone() })
}

/// Factorization of a machine integer as sorted `(prime, exponent)` pairs.
pub fn factor_u64(mut n: u64) -> Result<Vec<(u64, u32)>> {
    let mut out: BTreeMap<u64, u32> = BTreeMap::new();
    for &p in small_primes() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        while n.is_multiple_of(p) {
            n /= p;
            *out.entry(p).or_default() += 1;
        }
    }
    let bound = TRIAL_BOUND as u64;
    if n > 1 && n < bound * bound {
        // No factor below the bound, so n is prime.
        *out.entry(n).or_default() += 1;
        n = 1;
    }
    let mut pending = if n > 1 { vec![n] } else { Vec::new() };
    while let Some(m) = pending.pop() {
        if is_prime_u64(m) {
            *out.entry(m).or_default() += 1;
            continue;
        }
        if let Some(r) = perfect_square_u64(m) {
            pending.push(r);
            pending.push(r);
            continue;
        }
        let d = (1..=rho::MAX_ATTEMPTS)
            .find_map(|c| rho::brent_u64(m, c))
            .ok_or_else(|| Error::FactorizationFailed(BigUint::from(m)))?;
        pending.push(d);
        pending.push(m / d);
    }
    Ok(out.into_iter().collect())
}

fn perfect_square_u64(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

fn factor_big(n: &BigUint, out: &mut BTreeMap<BigUint, u32>) -> Result<()> {
    let mut m = n.clone();
    for &p in small_primes() {
        while (&m % p).is_zero() {
            m /= p;
            *out.entry(BigUint::from(p)).or_default() += 1;
        }
    }
    let mut pending = if m.is_one() { Vec::new() } else { vec![m] };
    while let Some(m) = pending.pop() {
        if let Some(small) = m.to_u64() {
            for (p, e) in factor_u64(small)? {
                *out.entry(BigUint::from(p)).or_default() += e;
            }
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_default() += 1;
            continue;
        }
        let r = m.sqrt();
        if &r * &r == m {
            pending.push(r.clone());
            pending.push(r);
            continue;
        }
        let d = (1..=rho::MAX_ATTEMPTS)
            .find_map(|c| rho::brent_big(&m, c))
            .ok_or_else(|| Error::FactorizationFailed(m.clone()))?;
        pending.push(&m / &d);
        pending.push(d);
    }
    Ok(())
}

pub(crate) fn bigint_from_biguint(n: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}
