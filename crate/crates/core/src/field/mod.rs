//! Exact arithmetic in the simplest cubic field `K_t = Q(θ)`, where `θ` is a
//! root of `f_t(x) = x^3 - t x^2 - (t + 3) x - 1`.
//!
//! Elements are stored as `(c0 + c1 θ + c2 θ^2) / den` over the power basis
//! with one shared positive denominator, always in lowest terms. The Galois
//! generator is fixed once and for all as `σ(θ) = -(1 + θ)/θ`, which in the
//! power basis is `-θ^2 + t θ + (t + 2)`.

mod poly;

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use poly::CubicPolynomial;

/// Maps any integer parameter to the equivalent one with `t >= -1`, using
/// `K_t = K_{-(t+3)}`.
pub fn reduce_param(t: i64) -> i64 {
    if t >= -1 {
        t
    } else {
        -(t + 3)
    }
}

type Coords = [BigInt; 3];

/// Product of two power-basis integer vectors, reduced with
/// `θ^3 = t θ^2 + (t + 3) θ + 1`.
fn mul_coords(a: &Coords, b: &Coords, t: &BigInt) -> Coords {
    let mut c: [BigInt; 5] = Default::default();
    for i in 0..3 {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..3 {
            c[i + j] += &a[i] * &b[j];
        }
    }
    let t3 = t + 3;
    for k in (3..5).rev() {
        let top = std::mem::take(&mut c[k]);
        if top.is_zero() {
            continue;
        }
        c[k - 1] += t * &top;
        c[k - 2] += &t3 * &top;
        c[k - 3] += top;
    }
    let [c0, c1, c2, _, _] = c;
    [c0, c1, c2]
}

/// Multiplication by `θ` on coordinates.
fn times_theta(a: &Coords, t: &BigInt) -> Coords {
    [a[2].clone(), &a[0] + (t + 3) * &a[2], &a[1] + t * &a[2]]
}

/// An element of `K_t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    t: i64,
    num: Coords,
    den: BigInt,
}

impl FieldElement {
    /// `(c0 + c1 θ + c2 θ^2) / den` in `K_t`, reduced to lowest terms.
    pub fn new(t: i64, num: [BigInt; 3], den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut x = Self { t, num, den };
        x.normalize();
        Ok(x)
    }

    pub fn from_i64s(t: i64, c0: i64, c1: i64, c2: i64, den: i64) -> Result<Self> {
        Self::new(t, [c0.into(), c1.into(), c2.into()], den.into())
    }

    pub fn integer(t: i64, n: impl Into<BigInt>) -> Self {
        Self { t, num: [n.into(), BigInt::zero(), BigInt::zero()], den: BigInt::one() }
    }

    pub fn rational(t: i64, q: &BigRational) -> Self {
        let mut x = Self {
            t,
            num: [q.numer().clone(), BigInt::zero(), BigInt::zero()],
            den: q.denom().clone(),
        };
        x.normalize();
        x
    }

    pub fn zero(t: i64) -> Self {
        Self::integer(t, 0)
    }

    pub fn one(t: i64) -> Self {
        Self::integer(t, 1)
    }

    pub fn theta(t: i64) -> Self {
        Self { t, num: [BigInt::zero(), BigInt::one(), BigInt::zero()], den: BigInt::one() }
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn param(&self) -> i64 {
        self.t
    }

    /// Numerator coordinates `(c0, c1, c2)`.
    pub fn numerator(&self) -> &[BigInt; 3] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    fn t_big(&self) -> BigInt {
        BigInt::from(self.t)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1].is_zero() && self.num[2].is_zero()
    }

    /// The value as a rational number, for elements of `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.t == other.t {
            Ok(())
        } else {
            Err(Error::MismatchedField(self.t, other.t))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let num = std::array::from_fn(|i| &self.num[i] * &other.den + &other.num[i] * &self.den);
        Self::new(self.t, num, &self.den * &other.den)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let num = mul_coords(&self.num, &other.num, &self.t_big());
        Self::new(self.t, num, &self.den * &other.den)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    /// Multiplicative inverse via the adjugate of the multiplication matrix.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.numerator_matrix();
        let det = det3(&m);
        // First column of adj(m): the cofactors of row 0.
        let adj0 = [
            &m[1][1] * &m[2][2] - &m[1][2] * &m[2][1],
            -(&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0]),
            &m[1][0] * &m[2][1] - &m[1][1] * &m[2][0],
        ];
        let num = adj0.map(|c| c * &self.den);
        let inv = Self::new(self.t, num, det)?;
        debug_assert!(self.try_mul(&inv).map(|p| p == Self::one(self.t)).unwrap_or(false));
        Ok(inv)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut x = Self { t: self.t, num: self.num.clone().map(|c| c * k), den: self.den.clone() };
        x.normalize();
        x
    }

    pub fn div_integer(&self, k: &BigInt) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.t, self.num.clone(), &self.den * k)
    }

    pub fn add_integer(&self, k: &BigInt) -> Self {
        let mut num = self.num.clone();
        num[0] += k * &self.den;
        let mut x = Self { t: self.t, num, den: self.den.clone() };
        x.normalize();
        x
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.t);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same field");
            }
            base = base.try_mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Image under the Galois generator `σ(θ) = -θ^2 + t θ + (t + 2)`.
    pub fn sigma(&self) -> Self {
        let t = self.t_big();
        let s: Coords = [&t + 2, t.clone(), BigInt::from(-1)];
        let s2 = mul_coords(&s, &s, &t);
        let num = std::array::from_fn(|i| {
            &self.num[0] * if i == 0 { BigInt::one() } else { BigInt::zero() }
                + &self.num[1] * &s[i]
                + &self.num[2] * &s2[i]
        });
        let mut x = Self { t: self.t, num, den: self.den.clone() };
        x.normalize();
        x
    }

    /// `σ^k(x)` for `k` taken mod 3.
    pub fn sigma_pow(&self, k: u32) -> Self {
        (0..k % 3).fold(self.clone(), |x, _| x.sigma())
    }

    /// Integer matrix `N` with `x · θ^j = (N e_j) / den`, i.e. column `j`
    /// holds the numerator coordinates of `x θ^j`.
    fn numerator_matrix(&self) -> [[BigInt; 3]; 3] {
        let t = self.t_big();
        let c0 = self.num.clone();
        let c1 = times_theta(&c0, &t);
        let c2 = times_theta(&c1, &t);
        let cols = [c0, c1, c2];
        std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()))
    }

    /// Matrix of multiplication by `x` in the basis `{1, θ, θ^2}`.
    pub fn multiplication_matrix(&self) -> [[BigRational; 3]; 3] {
        let m = self.numerator_matrix();
        m.map(|row| row.map(|v| BigRational::new(v, self.den.clone())))
    }

    /// `x + σx + σ²x`.
    pub fn trace(&self) -> BigRational {
        let s1 = self.sigma();
        let s2 = s1.sigma();
        let sum = self.try_add(&s1).and_then(|y| y.try_add(&s2)).expect("same field");
        let tr = sum.as_rational().expect("trace lies in Q");
        debug_assert_eq!(tr, -self.characteristic_polynomial().coeff(2));
        tr
    }

    /// `x · σx · σ²x`.
    pub fn norm(&self) -> BigRational {
        let s1 = self.sigma();
        let s2 = s1.sigma();
        let prod = self.try_mul(&s1).and_then(|y| y.try_mul(&s2)).expect("same field");
        let n = prod.as_rational().expect("norm lies in Q");
        debug_assert_eq!(n, -self.characteristic_polynomial().coeff(0));
        n
    }

    /// Characteristic polynomial of the multiplication-by-`x` matrix.
    pub fn characteristic_polynomial(&self) -> CubicPolynomial {
        let m = self.numerator_matrix();
        let tr = &m[0][0] + &m[1][1] + &m[2][2];
        let minors = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
            + (&m[0][0] * &m[2][2] - &m[0][2] * &m[2][0])
            + (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
        let det = det3(&m);
        let d = &self.den;
        CubicPolynomial::monic_cubic(
            BigRational::new(-tr, d.clone()),
            BigRational::new(minors, d * d),
            BigRational::new(-det, d * d * d),
        )
    }

    /// Minimal polynomial over `Q`. Equal to the characteristic polynomial
    /// for irrational elements; for a rational `c` it is the linear `x - c`.
    pub fn minimal_polynomial(&self) -> CubicPolynomial {
        match self.as_rational() {
            Some(c) => CubicPolynomial::linear(c),
            None => self.characteristic_polynomial(),
        }
    }

    /// Whether `x` is an algebraic integer.
    pub fn is_integral(&self) -> bool {
        self.den.is_one() || self.characteristic_polynomial().has_integer_coefficients()
    }

    /// `N(x - σx)^2`, the product of all differences of distinct conjugates.
    /// Zero exactly when `x` is rational.
    pub fn element_discriminant(&self) -> BigRational {
        let diff = self.try_sub(&self.sigma()).expect("same field");
        let n = diff.norm();
        &n * &n
    }

    /// Evaluates a rational polynomial at `x`.
    pub fn eval(&self, p: &CubicPolynomial) -> Self {
        p.coefficients().iter().rev().fold(Self::zero(self.t), |acc, c| {
            acc.try_mul(self)
                .and_then(|y| y.try_add(&Self::rational(self.t, c)))
                .expect("same field")
        })
    }
}

fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        FieldElement { t: self.t, num: self.num.clone().map(|c| -c), den: self.den.clone() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let basis = ["", "θ", "θ^2"][k];
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => basis.to_string(),
                _ => format!("{mag}{basis}"),
            };
            terms.push((c.is_negative(), body));
        }
        let mut s = String::new();
        for (i, (neg, body)) in terms.iter().enumerate() {
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(body);
        }
        if s.is_empty() {
            s.push('0');
        }
        if self.den.is_one() {
            f.write_str(&s)
        } else if terms.len() > 1 {
            write!(f, "({s})/{}", self.den)
        } else {
            write!(f, "{s}/{}", self.den)
        }
    }
}

/// The field `K_t`, constructed with a check that the closed form of `σ(θ)`
/// really is a root of `f_t`.
#[derive(Debug, Clone)]
pub struct SimplestCubicField {
    t: i64,
    sigma_theta: FieldElement,
}

impl SimplestCubicField {
    pub fn new(t: i64) -> Self {
        let sigma_theta = FieldElement::theta(t).sigma();
        let f = Self::shanks_polynomial(t);
        assert!(sigma_theta.eval(&f).is_zero(), "f_t(σθ) != 0 at t = {t}");
        Self { t, sigma_theta }
    }

    /// `f_t(x) = x^3 - t x^2 - (t + 3) x - 1`.
    pub fn shanks_polynomial(t: i64) -> CubicPolynomial {
        let t = BigInt::from(t);
        let q = |v: BigInt| BigRational::from_integer(v);
        CubicPolynomial::monic_cubic(q(-&t), q(-(&t + 3i32)), q(BigInt::from(-1)))
    }

    pub fn param(&self) -> i64 {
        self.t
    }

    pub fn defining_polynomial(&self) -> CubicPolynomial {
        Self::shanks_polynomial(self.t)
    }

    pub fn theta(&self) -> FieldElement {
        FieldElement::theta(self.t)
    }

    pub fn sigma_theta(&self) -> &FieldElement {
        &self.sigma_theta
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::one(self.t)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::zero(self.t)
    }

    pub fn integer(&self, n: impl Into<BigInt>) -> FieldElement {
        FieldElement::integer(self.t, n)
    }

    pub fn element(&self, c0: i64, c1: i64, c2: i64, den: i64) -> Result<FieldElement> {
        FieldElement::from_i64s(self.t, c0, c1, c2, den)
    }
}
