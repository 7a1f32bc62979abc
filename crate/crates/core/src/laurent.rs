//! Laurent polynomials in one variable over the rationals.
//!
//! All toric and short toric polynomials live here, together with the
//! truncation operators `U_{>=z}`, `U_{<=z}` and the bijection between
//! multiplicatively symmetric polynomials (palindromic coefficients) and
//! additively symmetric ones (`p(x) = (-1)^n p(-x)`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::arith::{self, Rational};
use crate::error::{Error, Result};

/// Map from integer exponents to nonzero rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Integer coefficients listed from the constant term upwards.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as i64, arith::rat(c))),
        )
    }

    /// `x - x^{-1}`
    pub fn x_minus_inv() -> Self {
        Self::from_terms([(1, arith::rat(1)), (-1, arith::rat(-1))])
    }

    /// `x^{-1} - x`
    pub fn inv_minus_x() -> Self {
        -Self::x_minus_inv()
    }

    pub fn add_term(&mut self, exp: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing order of exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.low_degree().is_some_and(|e| e < 0)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The substitution `p(x) -> p(x^k)`; `k` may be negative.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substituting x^0 collapses the polynomial");
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval_at(&self, r: &Rational) -> Result<Rational> {
        if r.is_zero() {
            if self.has_negative_exponents() {
                return Err(Error::EvalAtZeroWithNegativeExponents);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.coeffs {
            let pw = if e >= 0 {
                num_traits::pow(r.clone(), e as usize)
            } else {
                num_traits::pow(r.recip(), (-e) as usize)
            };
            acc += c * pw;
        }
        Ok(acc)
    }

    /// `U_{>=z}`: discards every term of degree below `z`.
    pub fn truncate_ge(&self, z: i64) -> Self {
        Self {
            coeffs: self.coeffs.range(z..).map(|(&e, c)| (e, c.clone())).collect(),
        }
    }

    /// `U_{<=z}`: discards every term of degree above `z`.
    pub fn truncate_le(&self, z: i64) -> Self {
        Self {
            coeffs: self.coeffs.range(..=z).map(|(&e, c)| (e, c.clone())).collect(),
        }
    }

    fn require_ordinary(&self) -> Result<()> {
        if self.has_negative_exponents() {
            Err(Error::NegativeExponentPresent)
        } else {
            Ok(())
        }
    }

    /// `a_k = a_{n-k}` for all `k`, with every exponent in `[0, n]`.
    pub fn is_mult_symmetric(&self, n: i64) -> Result<bool> {
        self.require_ordinary()?;
        if self.degree().is_some_and(|d| d > n) {
            return Ok(false);
        }
        Ok(self.coeffs.iter().all(|(&e, c)| self.coeff(n - e) == *c))
    }

    /// `a_{n-2k-1} = 0` for all `k`, with every exponent at most `n`.
    pub fn is_add_symmetric(&self, n: i64) -> Result<bool> {
        self.require_ordinary()?;
        if self.degree().is_some_and(|d| d > n) {
            return Ok(false);
        }
        Ok(self.coeffs.keys().all(|&e| (n - e) % 2 == 0))
    }

    /// `q = U_{>=0}(x^{-n} p(x^2))` for a multiplicatively symmetric `p` of
    /// degree exactly `n`.
    pub fn to_additive_variant(&self, n: i64) -> Result<Self> {
        if self.degree() != Some(n) || !self.is_mult_symmetric(n)? {
            return Err(Error::NotMultSymmetric(n));
        }
        Ok(self.substitute_power(2).shift(-n).truncate_ge(0))
    }

    /// Inverse of [`Self::to_additive_variant`]: the coefficient of `x^{n-2k}`
    /// in `q` is placed on `x^{n-k}` and `x^k`, once only when `n - 2k = 0`.
    pub fn to_multiplicative_variant(&self, n: i64) -> Result<Self> {
        if self.degree() != Some(n) || !self.is_add_symmetric(n)? {
            return Err(Error::NotAddSymmetric(n));
        }
        let mut p = Self::zero();
        for (&e, c) in &self.coeffs {
            let k = (n - e) / 2;
            p.add_term(n - k, c.clone());
            if e != 0 {
                p.add_term(k, c.clone());
            }
        }
        Ok(p)
    }

    /// Coefficients of an ordinary polynomial, constant term first.
    pub fn to_coeff_vec(&self) -> Result<Vec<Rational>> {
        self.require_ordinary()?;
        let len = self.degree().map_or(0, |d| d as usize + 1);
        Ok((0..len as i64).map(|e| self.coeff(e)).collect())
    }

    /// Sorted `[exponent, numerator, denominator]` triples, highest degree first.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .rev()
                .map(|(&e, c)| {
                    Value::Array(vec![
                        Value::from(e),
                        arith::int_to_json(c.numer()),
                        arith::int_to_json(c.denom()),
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Input("polynomial must be a list of triples".into()))?;
        let mut p = Self::zero();
        for item in items {
            let t = item
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::Input(format!("bad polynomial term {item}")))?;
            let e = t[0]
                .as_i64()
                .ok_or_else(|| Error::Input(format!("bad exponent {}", t[0])))?;
            let c = arith::rational_from_json(&Value::Array(vec![t[1].clone(), t[2].clone()]))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            if e == 0 {
                write!(f, "{}", arith::fmt_rational(&abs))?;
                continue;
            }
            if !unit {
                write!(f, "{}", arith::fmt_rational(&abs))?;
            }
            match e {
                1 => write!(f, "x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn ring_operations() {
        let a = poly(&[(1, 1), (-1, -1)]);
        let b = poly(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, poly(&[(2, 1), (-2, -1)]));
        let p = poly(&[(3, 2), (0, 1), (-4, 7)]);
        assert!((&p + &p.scale(&rat(-1))).is_zero());
        assert_eq!(poly(&[(2, 1), (0, 2)]).eval_at(&rat(1)).unwrap(), rat(3));
    }

    #[test]
    fn eval_at_zero() {
        assert_eq!(
            poly(&[(-1, 1)]).eval_at(&rat(0)),
            Err(Error::EvalAtZeroWithNegativeExponents)
        );
        assert_eq!(poly(&[(2, 1), (0, 5)]).eval_at(&rat(0)).unwrap(), rat(5));
        assert_eq!(poly(&[(-2, 4)]).eval_at(&rat(2)).unwrap(), rat(1));
    }

    #[test]
    fn truncations() {
        assert_eq!(poly(&[(-2, 1), (0, 3), (1, 1)]).truncate_ge(0), poly(&[(0, 3), (1, 1)]));
        assert_eq!(poly(&[(2, 1), (1, 1), (0, 1)]).truncate_le(1), poly(&[(1, 1), (0, 1)]));
        // U_{>=1}((x^2 + 2)(x - 1/x)) = x^3 + x
        let lhs = (&poly(&[(2, 1), (0, 2)]) * &LaurentPoly::x_minus_inv()).truncate_ge(1);
        assert_eq!(lhs, poly(&[(3, 1), (1, 1)]));
    }

    #[test]
    fn symmetry_predicates() {
        let p = poly(&[(0, 1), (1, -2), (3, 7), (5, -2), (6, 1)]);
        assert!(p.is_mult_symmetric(6).unwrap());
        let q = poly(&[(6, 1), (4, -2), (0, 7)]);
        assert!(q.is_add_symmetric(6).unwrap());
        assert!(!poly(&[(0, 1), (1, 1)]).is_mult_symmetric(2).unwrap());
        assert_eq!(
            poly(&[(-1, 1)]).is_mult_symmetric(2),
            Err(Error::NegativeExponentPresent)
        );
        assert_eq!(poly(&[(-1, 1)]).is_add_symmetric(2), Err(Error::NegativeExponentPresent));
    }

    #[test]
    fn additive_variants() {
        let p = poly(&[(0, 1), (2, -2), (5, -2), (7, 1)]);
        assert_eq!(p.to_additive_variant(7).unwrap(), poly(&[(7, 1), (3, -2)]));
        assert_eq!(
            poly(&[(0, 1), (1, 2), (2, 1)]).to_additive_variant(2).unwrap(),
            poly(&[(2, 1), (0, 2)])
        );
        assert_eq!(LaurentPoly::one().to_additive_variant(0).unwrap(), LaurentPoly::one());
        // the introductory pair: 1 - 2x + 7x^3 - 2x^5 + x^6  <->  x^6 - 2x^4 + 7
        let intro = poly(&[(0, 1), (1, -2), (3, 7), (5, -2), (6, 1)]);
        assert_eq!(intro.to_additive_variant(6).unwrap(), poly(&[(6, 1), (4, -2), (0, 7)]));
        assert_eq!(
            poly(&[(0, 1), (1, 1)]).to_additive_variant(1).unwrap(),
            poly(&[(1, 1)])
        );
        assert_eq!(
            poly(&[(0, 1), (1, 2)]).to_additive_variant(1),
            Err(Error::NotMultSymmetric(1))
        );
    }

    #[test]
    fn multiplicative_variants() {
        assert_eq!(
            poly(&[(2, 1), (0, 2)]).to_multiplicative_variant(2).unwrap(),
            poly(&[(0, 1), (1, 2), (2, 1)])
        );
        assert_eq!(
            poly(&[(3, 1), (1, 5)]).to_multiplicative_variant(3).unwrap(),
            poly(&[(0, 1), (1, 5), (2, 5), (3, 1)])
        );
        assert_eq!(
            LaurentPoly::zero().to_multiplicative_variant(0),
            Err(Error::NotAddSymmetric(0))
        );
        assert_eq!(
            poly(&[(3, 1), (2, 1)]).to_multiplicative_variant(3),
            Err(Error::NotAddSymmetric(3))
        );
    }

    #[test]
    fn display_and_json() {
        let p = LaurentPoly::from_terms([(3, rat(1)), (1, rat(5)), (-1, ratio(-1, 2))]);
        assert_eq!(p.to_string(), "x^3 + 5x - 1/2x^-1");
        let v = p.to_json();
        assert_eq!(v, serde_json::json!([[3, 1, 1], [1, 5, 1], [-1, -1, 2]]));
        assert_eq!(LaurentPoly::from_json(&v).unwrap(), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..7, -20i64..21, 1i64..5), 0..7).prop_map(|ts| {
            LaurentPoly::from_terms(ts.into_iter().map(|(e, n, d)| (e, ratio(n, d))))
        })
    }

    fn arb_mult_symmetric() -> impl Strategy<Value = (LaurentPoly, i64)> {
        (0i64..9).prop_flat_map(|n| {
            prop::collection::vec(-9i64..10, (n / 2 + 1) as usize).prop_map(move |half| {
                let mut p = LaurentPoly::monomial(0, rat(1));
                p.add_term(n, if n == 0 { rat(0) } else { rat(1) });
                for (k, &c) in half.iter().enumerate().skip(1) {
                    let k = k as i64;
                    p.add_term(k, rat(c));
                    if 2 * k != n {
                        p.add_term(n - k, rat(c));
                    }
                }
                (p, n)
            })
        })
    }

    proptest! {
        #[test]
        fn truncation_is_idempotent_and_complementary(p in arb_poly(), z in -5i64..6) {
            let u = p.truncate_ge(z);
            prop_assert_eq!(u.truncate_ge(z), u.clone());
            prop_assert_eq!(&u + &(&p - &u), p.clone());
            prop_assert_eq!(&u + &p.truncate_le(z - 1), p);
        }

        #[test]
        fn variants_round_trip((p, n) in arb_mult_symmetric()) {
            let q = p.to_additive_variant(n).unwrap();
            prop_assert!(q.is_add_symmetric(n).unwrap());
            prop_assert_eq!(q.to_multiplicative_variant(n).unwrap(), p.clone());
            // x^{-n} p(x^2) = x^n p(x^{-2}) for palindromic p
            prop_assert_eq!(p.substitute_power(2).shift(-n), p.substitute_power(-2).shift(n));
        }

        #[test]
        fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
