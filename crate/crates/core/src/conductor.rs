//! `Δ_t = t^2 + 3t + 9` and the conductor of `K_t`.
//!
//! The conductor is read off the factorization of `Δ_t` together with the
//! residue of `t` modulo 27:
//!
//! * every prime `p != 3` with `v_p(Δ_t) ≢ 0 (mod 3)` divides it exactly once;
//! * `3^2` divides it exactly when `t ≡ 0, 6 (mod 9)` or `t ≡ 3, 21 (mod 27)`;
//! * nothing else divides it.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{factor, Factorization};
use crate::error::{Error, Result};

/// How 3 sits in `Δ_t`, determined by `t` modulo 27.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ThreeCase {
    /// `3 ∤ t`: `v_3(Δ) = 0`.
    V3Zero,
    /// `t ≡ 0, 6 (mod 9)`: `v_3(Δ) = 2`, 3 ramifies.
    V3Two,
    /// `t ≡ 3, 21 (mod 27)`: `v_3(Δ) = 3`, 3 ramifies.
    V3ThreeRamified,
    /// `t ≡ 12 (mod 27)`: `v_3(Δ) = 3`, 3 is unramified.
    V3ThreeUnramified,
}

impl ThreeCase {
    pub fn of(t: i64) -> Self {
        let r = t.rem_euclid(27);
        match (r % 3, r % 9, r) {
            (1 | 2, _, _) => Self::V3Zero,
            (_, 0 | 6, _) => Self::V3Two,
            (_, _, 12) => Self::V3ThreeUnramified,
            _ => Self::V3ThreeRamified,
        }
    }

    /// `v_3(Δ_t)` in this case.
    pub fn delta_valuation(self) -> u32 {
        match self {
            Self::V3Zero => 0,
            Self::V3Two => 2,
            Self::V3ThreeRamified | Self::V3ThreeUnramified => 3,
        }
    }

    /// Whether 3 divides the conductor.
    pub fn ramified(self) -> bool {
        matches!(self, Self::V3Two | Self::V3ThreeRamified)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::V3Zero => "V3_ZERO",
            Self::V3Two => "V3_TWO",
            Self::V3ThreeRamified => "V3_THREE_RAMIFIED",
            Self::V3ThreeUnramified => "V3_THREE_UNRAMIFIED",
        }
    }
}

pub fn three_case(t: i64) -> ThreeCase {
    ThreeCase::of(t)
}

fn check_param(t: i64) -> Result<()> {
    if t < -1 {
        Err(Error::ParamOutOfRange(t))
    } else {
        Ok(())
    }
}

/// `Δ_t = t^2 + 3t + 9` for `t >= -1`.
pub fn delta(t: i64) -> Result<BigUint> {
    check_param(t)?;
    Ok(BigUint::from(delta_u128(t)))
}

pub(crate) fn delta_u128(t: i64) -> u128 {
    let t = t as i128;
    // Positive for every integer t; fits since |t| <= 2^63.
    (t * t + 3 * t + 9) as u128
}

/// Everything downstream needs about ramification in `K_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConductorData {
    pub t: i64,
    pub delta: Factorization,
    pub conductor: Factorization,
    pub three_case: ThreeCase,
}

impl ConductorData {
    pub fn delta_value(&self) -> &BigUint {
        self.delta.value()
    }

    pub fn conductor_value(&self) -> &BigUint {
        self.conductor.value()
    }

    /// `v_p(Δ_t)`.
    pub fn delta_exponent(&self, p: &BigUint) -> u32 {
        self.delta.exponent(p)
    }

    /// `Δ_t = c`, i.e. `Z[θ]` is already the maximal order.
    pub fn is_trivial(&self) -> bool {
        self.delta.value() == self.conductor.value()
    }

    /// `Δ_t / c`.
    pub fn index_cube(&self) -> BigUint {
        self.delta.value() / self.conductor.value()
    }
}

/// Computes `Δ_t`, its factorization, the 3-adic case and the conductor.
pub fn conductor(t: i64) -> Result<ConductorData> {
    let delta = factor(&delta(t)?)?;
    let three_case = ThreeCase::of(t);
    debug_assert_eq!(delta.exponent_u64(3), three_case.delta_valuation(), "t = {t}");

    let mut pairs: Vec<(BigUint, u32)> = delta
        .factors()
        .iter()
        .filter(|(p, e)| p.to_u64() != Some(3) && e % 3 != 0)
        .map(|(p, _)| (p.clone(), 1))
        .collect();
    if three_case.ramified() {
        pairs.push((BigUint::from(3u32), 2));
    }
    let conductor = Factorization::from_pairs(pairs)?;
    Ok(ConductorData { t, delta, conductor, three_case })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(t: i64) -> u64 {
        conductor(t).unwrap().conductor_value().to_u64().unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(-1).unwrap(), BigUint::from(7u32));
        assert_eq!(delta(0).unwrap(), BigUint::from(9u32));
        assert_eq!(delta(54).unwrap(), BigUint::from(3087u32));
        assert_eq!(delta(-2), Err(Error::ParamOutOfRange(-2)));
    }

    #[test]
    fn three_case_examples() {
        assert_eq!(three_case(1), ThreeCase::V3Zero);
        assert_eq!(three_case(12), ThreeCase::V3ThreeUnramified);
        assert_eq!(three_case(21), ThreeCase::V3ThreeRamified);
        assert_eq!(three_case(3), ThreeCase::V3ThreeRamified);
        assert_eq!(three_case(0), ThreeCase::V3Two);
        assert_eq!(three_case(6), ThreeCase::V3Two);
        assert_eq!(three_case(-1), ThreeCase::V3Zero);
        assert_eq!(three_case(39), ThreeCase::V3ThreeUnramified);
    }

    #[test]
    fn conductor_examples() {
        assert_eq!(c(21), 171);
        assert_eq!(c(12), 7);
        assert_eq!(c(740), 1603);
        let d = conductor(740).unwrap();
        assert_eq!(d.delta.to_string(), "7^4 229^1");
        assert_eq!(d.conductor.to_string(), "7^1 229^1");
        assert_eq!(d.index_cube(), BigUint::from(343u32));
    }

    #[test]
    fn conductor_divides_delta_and_respects_ramification_rules() {
        for t in -1..3000 {
            let d = conductor(t).unwrap();
            assert_eq!(d.delta_value() % d.conductor_value(), BigUint::from(0u32));
            for (p, e) in d.conductor.factors() {
                let p = p.to_u64().unwrap();
                if p == 3 {
                    assert_eq!(*e, 2);
                } else {
                    assert_eq!(*e, 1);
                    assert_eq!(p % 3, 1, "t = {t}, p = {p}");
                    assert_ne!(d.delta.exponent_u64(p) % 3, 0);
                }
            }
            for (p, e) in d.delta.factors() {
                if p.to_u64() != Some(3) {
                    assert_eq!(e % 3 == 0, d.conductor.exponent(p) == 0);
                }
            }
            assert!([0, 2, 3].contains(&d.delta.exponent_u64(3)));
        }
    }

    #[test]
    fn invariant_under_parameter_reflection() {
        for t in -1..500i64 {
            let r = -(t + 3);
            assert_eq!(delta_u128(t), delta_u128(r));
            let a = conductor(t).unwrap();
            let b = conductor(crate::field::reduce_param(r)).unwrap();
            assert_eq!(a.delta, b.delta);
            assert_eq!(a.conductor, b.conductor);
            assert_eq!(ThreeCase::of(r).ramified(), a.three_case.ramified(), "t = {t}");
        }
    }
}
