//! Monogenity of `K_t`, principality of the conductor ideal, and explicit
//! power integral bases.
//!
//! `K_t` has a power integral basis iff some parameter `t'` giving the same
//! field satisfies `Δ_{t'} / c ∈ N^3`; equivalently `t' ≢ 3, 21 (mod 27)` and
//! `v_p(Δ_{t'}) ≢ 2 (mod 3)` for every `p != 3`. Both forms are evaluated and
//! must agree. A generator is then `γ = (θ_{t'} - a) / m` with
//! `m = (Δ_{t'} / c)^{1/3}` and `a ≡ t'/3 (mod m)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{bigint_from_biguint, cube_root_exact};
use crate::conductor::{conductor, ConductorData, ThreeCase};
use crate::error::{Error, Result};
use crate::field::{CubicPolynomial, FieldElement};

/// Parameters `t >= -1` that define the same field. Every other parameter
/// defines a field of its own.
pub const NONTRIVIAL_CLASSES: [&[i64]; 4] = [&[-1, 5, 12, 1259], &[0, 3, 54], &[1, 66], &[2, 2389]];

/// The class `{0, 3, 54}` of `Q(ζ_9 + ζ_9^{-1})`, where the conductor ideal is
/// principal but the general criterion does not apply.
pub const ZETA9_CLASS: &[i64] = &[0, 3, 54];

/// Set of parameters `t >= -1` giving the same field `K_t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoincidenceClass {
    members: Vec<i64>,
}

impl CoincidenceClass {
    pub fn of(t: i64) -> Self {
        let members = NONTRIVIAL_CLASSES
            .iter()
            .find(|c| c.contains(&t))
            .map(|c| c.to_vec())
            .unwrap_or_else(|| vec![t]);
        Self { members }
    }

    /// Smallest member.
    pub fn representative(&self) -> i64 {
        self.members[0]
    }

    /// All members in increasing order.
    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn others(&self, t: i64) -> Vec<i64> {
        self.members.iter().copied().filter(|&m| m != t).collect()
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_zeta9(&self) -> bool {
        self.members == ZETA9_CLASS
    }
}

pub fn coincidence_class(t: i64) -> CoincidenceClass {
    CoincidenceClass::of(t)
}

/// Case labels: monogenic at `t` itself (`A`), only through another member
/// of the coincidence class (`B`), or not monogenic (`C`). `TrivialZTheta`
/// refines `A` when `Δ_t = c`, so that `Z[θ]` is the full ring of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "trivial")]
    TrivialZTheta,
}

impl CaseLabel {
    /// Table letter; the trivial case is reported as `a`.
    pub fn letter(self) -> char {
        match self {
            Self::A | Self::TrivialZTheta => 'a',
            Self::B => 'b',
            Self::C => 'c',
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::A => "a",
            Self::B => "b",
            Self::C => "c",
            Self::TrivialZTheta => "trivial",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "a" | "A" => Some(Self::A),
            "b" | "B" => Some(Self::B),
            "c" | "C" => Some(Self::C),
            "trivial" | "TRIVIAL_Z_THETA" => Some(Self::TrivialZTheta),
            _ => None,
        }
    }
}

/// `t ≢ 3, 21 (mod 27)` and `v_p(Δ_t) ≢ 2 (mod 3)` for all `p != 3`.
pub fn valuation_condition(data: &ConductorData) -> bool {
    data.three_case != ThreeCase::V3ThreeRamified
        && data
            .delta
            .factors()
            .iter()
            .all(|(p, e)| p.to_u64() == Some(3) || e % 3 != 2)
}

/// `c | Δ_t` and `Δ_t / c` is a perfect cube.
pub fn cube_condition(data: &ConductorData) -> bool {
    let (q, r) = data.delta_value().div_rem(data.conductor_value());
    r.is_zero() && cube_root_exact(&q).is_some()
}

pub fn monogenic_param_valuation(t: i64) -> Result<bool> {
    Ok(valuation_condition(&conductor(t)?))
}

pub fn monogenic_param_cube(t: i64) -> Result<bool> {
    Ok(cube_condition(&conductor(t)?))
}

/// The parameter-level condition, with both routes evaluated and compared.
pub fn param_condition(data: &ConductorData) -> Result<bool> {
    let by_cube = cube_condition(data);
    let by_valuation = valuation_condition(data);
    if by_cube != by_valuation {
        return Err(Error::Inconsistent {
            t: data.t,
            detail: format!("cube test says {by_cube}, valuation test says {by_valuation}"),
        });
    }
    Ok(by_cube)
}

/// Explicit principality test for the conductor ideal, outside the
/// `Q(ζ_9 + ζ_9^{-1})` class:
///
/// * `3 ∤ c`: `v_p(Δ) ≡ 1 (mod 3)` for all `p | c`, or `≡ 2` for all `p | c`;
/// * `3 | c`: `v_3(Δ) = 2` and `v_p(Δ) ≡ 1 (mod 3)` for all `p | c`, `p != 3`.
pub fn principal_by_valuation(data: &ConductorData) -> bool {
    let residues = |skip_three: bool| {
        data.conductor
            .primes()
            .filter(move |p| !(skip_three && p.to_u64() == Some(3)))
            .map(|p| data.delta_exponent(p) % 3)
            .collect::<Vec<_>>()
    };
    if data.three_case.ramified() {
        data.three_case.delta_valuation() == 2 && residues(true).iter().all(|&r| r == 1)
    } else {
        let r = residues(false);
        r.iter().all(|&x| x == 1) || r.iter().all(|&x| x == 2)
    }
}

/// `Δ/c ∈ N^3` or `Δ^2/c ∈ N^3`.
pub fn principal_by_cube(data: &ConductorData) -> bool {
    let d = data.delta_value();
    let c = data.conductor_value();
    let is_cube_quotient = |n: BigUint| {
        let (q, r) = n.div_rem(c);
        r.is_zero() && cube_root_exact(&q).is_some()
    };
    is_cube_quotient(d.clone()) || is_cube_quotient(d * d)
}

fn principal_checked(data: &ConductorData, class: &CoincidenceClass) -> Result<bool> {
    if class.is_zeta9() {
        return Ok(true);
    }
    let by_valuation = principal_by_valuation(data);
    let by_cube = principal_by_cube(data);
    if by_valuation != by_cube {
        return Err(Error::Inconsistent {
            t: data.t,
            detail: format!("principality: valuation test {by_valuation}, cube test {by_cube}"),
        });
    }
    Ok(by_valuation)
}

/// Whether the conductor ideal of `K_t` is principal.
pub fn ck_principal(t: i64) -> Result<bool> {
    principal_checked(&conductor(t)?, &CoincidenceClass::of(t))
}

/// An explicit generator `γ = (θ - a) / m` of the ring of integers, with the
/// data needed to check it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PibCertificate {
    /// Parameter whose `θ` the generator is built from.
    pub witness_t: i64,
    pub conductor: BigUint,
    /// `m = (Δ / c)^{1/3}`.
    pub m: BigUint,
    /// Least nonnegative residue, `0 <= a < m`.
    pub a: BigUint,
    pub gamma: FieldElement,
    pub min_poly: CubicPolynomial,
    /// `disc(γ) = c^2`.
    pub disc: BigUint,
}

/// `m` and the canonical `a` for a parameter that passes the cube test.
pub fn pib_parameters(data: &ConductorData) -> Result<(BigUint, BigUint)> {
    let t = data.t;
    let m = cube_root_exact(&data.index_cube())
        .filter(|_| cube_condition(data))
        .ok_or(Error::NotMonogenic(t))?;
    let mb = bigint_from_biguint(&m);
    let tb = BigInt::from(t);
    let three = BigInt::from(3);
    let a = if m.is_one() {
        BigInt::zero()
    } else if (&m % 3u32).is_zero() {
        // Only possible for t ≡ 12 (mod 27), so t/3 is an integer.
        if !(&tb % &three).is_zero() {
            return Err(Error::Inconsistent { t, detail: format!("3 | m = {m} but 3 ∤ t") });
        }
        (&tb / &three).mod_floor(&mb)
    } else {
        // 3a ≡ t (mod m): shift t by a multiple of m to make it divisible by 3.
        let shifted = (0..3)
            .map(|k: i32| &tb + k * &mb)
            .find(|v: &BigInt| v.is_multiple_of(&three))
            .expect("m is prime to 3");
        (shifted / &three).mod_floor(&mb)
    };
    Ok((m, a.to_biguint().expect("residue is nonnegative")))
}

/// Builds `γ` for a parameter satisfying the cube test and checks that it is
/// integral with discriminant `c^2`.
pub fn build_certificate(data: &ConductorData) -> Result<PibCertificate> {
    let t = data.t;
    let (m, a) = pib_parameters(data)?;
    let gamma = FieldElement::theta(t)
        .add_integer(&-bigint_from_biguint(&a))
        .div_integer(&bigint_from_biguint(&m))?;
    let fail = |detail: String| Error::Inconsistent { t, detail };

    let min_poly = gamma.minimal_polynomial();
    if min_poly.degree() != 3 || !min_poly.has_integer_coefficients() {
        return Err(fail(format!("γ = {gamma} is not integral: {min_poly}")));
    }
    let c = data.conductor_value().clone();
    let disc = gamma.element_discriminant();
    let expected = bigint_from_biguint(&(&c * &c));
    if !disc.is_integer() || disc.to_integer() != expected {
        return Err(fail(format!("disc(γ) = {disc}, expected c^2 = {expected}")));
    }
    Ok(PibCertificate {
        witness_t: t,
        conductor: c.clone(),
        m,
        a,
        gamma,
        min_poly,
        disc: &c * &c,
    })
}

/// Full monogenity verdict for `K_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonogenityVerdict {
    pub t: i64,
    pub data: ConductorData,
    pub class: CoincidenceClass,
    /// The condition holds at `t` itself.
    pub parameter_monogenic: bool,
    /// The condition holds at some member of the class.
    pub field_monogenic: bool,
    pub case_label: CaseLabel,
    pub ck_principal: bool,
    /// `t` when it passes itself, otherwise the smallest passing member.
    pub witness_t: Option<i64>,
    pub certificate: Option<PibCertificate>,
}

impl MonogenityVerdict {
    /// Principal conductor ideal with `Z[θ] ≠ O_K` but no power integral
    /// basis.
    pub fn is_principal_non_monogenic(&self) -> bool {
        self.ck_principal && !self.field_monogenic && !self.data.is_trivial()
    }
}

/// Decides monogenity of `K_t` for `t >= -1` and, when it holds, builds a
/// verified power integral basis.
pub fn field_monogenic(t: i64) -> Result<MonogenityVerdict> {
    let data = conductor(t)?;
    let class = CoincidenceClass::of(t);
    let parameter_monogenic = param_condition(&data)?;

    let mut witness = None;
    let mut witness_data = None;
    if parameter_monogenic {
        witness = Some(t);
    } else {
        for &other in class.members().iter().filter(|&&m| m != t) {
            let other_data = conductor(other)?;
            if param_condition(&other_data)? {
                witness = Some(other);
                witness_data = Some(other_data);
                break;
            }
        }
    }
    let field_monogenic = witness.is_some();
    let case_label = match (parameter_monogenic, field_monogenic) {
        (true, _) if data.is_trivial() => CaseLabel::TrivialZTheta,
        (true, _) => CaseLabel::A,
        (false, true) => CaseLabel::B,
        (false, false) => CaseLabel::C,
    };
    let ck_principal = principal_checked(&data, &class)?;
    if field_monogenic && !ck_principal {
        return Err(Error::Inconsistent {
            t,
            detail: "monogenic field with non-principal conductor ideal".into(),
        });
    }
    let certificate = match witness {
        Some(_) => Some(build_certificate(witness_data.as_ref().unwrap_or(&data))?),
        None => None,
    };
    Ok(MonogenityVerdict {
        t,
        data,
        class,
        parameter_monogenic,
        field_monogenic,
        case_label,
        ck_principal,
        witness_t: witness,
        certificate,
    })
}

/// The verified power integral basis of `K_t`, built at the witness
/// parameter.
pub fn power_integral_basis(t: i64) -> Result<PibCertificate> {
    field_monogenic(t)?.certificate.ok_or(Error::NotMonogenic(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn valuation_route_examples() {
        assert!(monogenic_param_valuation(4).unwrap());
        assert!(!monogenic_param_valuation(21).unwrap());
        assert!(!monogenic_param_valuation(5).unwrap());
    }

    #[test]
    fn cube_route_examples() {
        assert!(monogenic_param_cube(54).unwrap());
        assert!(monogenic_param_cube(0).unwrap());
        assert!(!monogenic_param_cube(101_471).unwrap());
    }

    #[test]
    fn verdict_examples() {
        let v = field_monogenic(3).unwrap();
        assert!(v.field_monogenic && !v.parameter_monogenic);
        assert_eq!(v.case_label, CaseLabel::B);
        assert_eq!(v.witness_t, Some(0));

        let v = field_monogenic(21).unwrap();
        assert!(!v.field_monogenic);
        assert_eq!(v.case_label, CaseLabel::C);
        assert!(v.certificate.is_none());

        let v = field_monogenic(12).unwrap();
        assert_eq!(v.case_label, CaseLabel::A);
        assert_eq!(v.witness_t, Some(12));

        assert_eq!(field_monogenic(0).unwrap().case_label, CaseLabel::TrivialZTheta);
        assert_eq!(field_monogenic(66).unwrap().witness_t, Some(1));
        assert_eq!(field_monogenic(5).unwrap().witness_t, Some(-1));
    }

    #[test]
    fn principality_examples() {
        assert!(ck_principal(101_471).unwrap());
        assert!(!ck_principal(21).unwrap());
        assert!(ck_principal(3).unwrap());
        assert!(ck_principal(54).unwrap());
        assert!(field_monogenic(101_471).unwrap().is_principal_non_monogenic());
    }

    #[test]
    fn certificate_examples() {
        let c = power_integral_basis(0).unwrap();
        assert_eq!((c.m.clone(), c.a.clone()), (big(1), big(0)));
        assert_eq!(c.gamma, FieldElement::theta(0));

        let c = power_integral_basis(12).unwrap();
        assert_eq!((c.m.clone(), c.a.clone(), c.disc.clone()), (big(3), big(1), big(49)));
        assert_eq!(c.gamma, FieldElement::from_i64s(12, -1, 1, 0, 3).unwrap());

        let c = power_integral_basis(54).unwrap();
        assert_eq!((c.m.clone(), c.a.clone(), c.disc.clone()), (big(7), big(4), big(81)));

        let c = power_integral_basis(740).unwrap();
        assert_eq!(c.m, big(7));
        assert_eq!(c.disc, big(1603 * 1603));

        assert_eq!(power_integral_basis(21), Err(Error::NotMonogenic(21)));
    }

    #[test]
    fn class_lookup() {
        assert_eq!(coincidence_class(1259).members(), &[-1, 5, 12, 1259]);
        assert_eq!(coincidence_class(1259).others(1259), vec![-1, 5, 12]);
        assert_eq!(coincidence_class(7).members(), &[7]);
        assert!(coincidence_class(54).is_zeta9());
        assert_eq!(coincidence_class(2389).representative(), 2);
    }

    #[test]
    fn label_strings() {
        for l in [CaseLabel::A, CaseLabel::B, CaseLabel::C, CaseLabel::TrivialZTheta] {
            assert_eq!(CaseLabel::parse(l.as_str()), Some(l));
        }
        assert_eq!(CaseLabel::TrivialZTheta.letter(), 'a');
    }
}
