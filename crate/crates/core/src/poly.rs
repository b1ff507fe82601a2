//! Laurent polynomials over an exact integer scalar.
//!
//! A [`LaurentPoly`] stores a contiguous coefficient window starting at a
//! (possibly negative) offset degree.  The representation is canonical:
//! the first and last stored coefficients are nonzero, and the zero
//! polynomial is the empty window at offset 0.  All ring operations
//! preserve canonical form, so structural equality is polynomial equality.

use std::fmt;
use std::str::FromStr;

use num::traits::{FromPrimitive, NumAssignRef, ToPrimitive};
use num::{Integer, Signed};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Scalar bound for exact coefficient arithmetic.
///
/// Satisfied by `num::BigInt` (the crate default, no overflow anywhere)
/// and by the machine integers, which are handy in small tests.
pub trait Coefficient:
    Integer + Signed + NumAssignRef + FromPrimitive + ToPrimitive + Clone + fmt::Debug + fmt::Display
{
}

impl<T> Coefficient for T where
    T: Integer
        + Signed
        + NumAssignRef
        + FromPrimitive
        + ToPrimitive
        + Clone
        + fmt::Debug
        + fmt::Display
{
}

/// Binomial coefficient `C(a, b)` with the zero convention for out-of-range
/// lower index: `b < 0` gives 0 for every `a`, and `b > a >= 0` gives 0.
/// A negative upper index with a nonnegative lower index has no meaning
/// anywhere in this crate and is rejected.
///
/// Panics if `a < 0 <= b`.
pub fn binomial<T: Coefficient>(a: i64, b: i64) -> T {
    if b < 0 {
        return T::zero();
    }
    assert!(a >= 0, "binomial: negative upper index {a}");
    if b > a {
        return T::zero();
    }
    let b = b.min(a - b);
    let mut result = T::one();
    // C(a-b+i, i) stays integral at every step, so each division is exact.
    for i in 1..=b {
        result *= T::from_i64(a - b + i).expect("binomial factor fits the scalar");
        result /= T::from_i64(i).unwrap();
    }
    result
}

/// Laurent polynomial `sum_k c_k T^k` with contiguous support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly<T> {
    offset: i64,
    coeffs: Vec<T>,
}

impl<T: Coefficient> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// The monomial `c * T^degree`.
    pub fn monomial(c: T, degree: i64) -> Self {
        Self::from_coeffs(degree, vec![c])
    }

    /// Builds a polynomial from a coefficient window starting at `offset`,
    /// trimming zero coefficients at both ends.
    pub fn from_coeffs(offset: i64, coeffs: Vec<T>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.canonicalize();
        p
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.offset += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest degree with a nonzero coefficient; 0 for the zero polynomial.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Lowest and highest degrees of the support, `None` for zero.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some((self.offset, self.offset + self.coeffs.len() as i64 - 1))
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: i64) -> T {
        let idx = degree - self.offset;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            T::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (alo, ahi) = self.support().unwrap();
        let (blo, bhi) = other.support().unwrap();
        let lo = alo.min(blo);
        let hi = ahi.max(bhi);
        let mut coeffs = vec![T::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(alo - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(blo - lo) as usize + i] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        for x in &mut coeffs {
            *x *= c;
        }
        LaurentPoly {
            offset: self.offset,
            coeffs,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let mut term = a.clone();
                term *= b;
                coeffs[i + j] += &term;
            }
        }
        Self::from_coeffs(self.offset + other.offset, coeffs)
    }

    /// Multiplication by `T^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplication by `(1 - T)^p`.
    pub fn mul_one_minus_t_pow(&self, p: u32) -> Self {
        let mut cur = self.clone();
        for _ in 0..p {
            cur = cur.sub(&cur.shift(1));
        }
        cur
    }

    /// Exact division by `(1 - T)`.  The quotient coefficients are the
    /// running prefix sums of the dividend.
    ///
    /// Panics unless the value at `T = 1` is zero, i.e. unless the division
    /// is exact.
    pub fn div_one_minus_t(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut acc = T::zero();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            acc += c;
            coeffs.push(acc.clone());
        }
        let remainder = coeffs.pop().unwrap();
        assert!(
            remainder.is_zero(),
            "div_one_minus_t: polynomial does not vanish at T = 1 (value {remainder})"
        );
        Self::from_coeffs(self.offset, coeffs)
    }

    /// Value at `T = 1`, the sum of all coefficients.
    pub fn eval_one(&self) -> T {
        let mut acc = T::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// Largest absolute value among the coefficients; zero for zero.
    pub fn max_abs_coeff(&self) -> T {
        let mut best = T::zero();
        for c in &self.coeffs {
            let a = c.abs();
            if a > best {
                best = a;
            }
        }
        best
    }
}

/// Text form `offset:c0,c1,...`; the zero polynomial prints as `0:`.
impl<T: Coefficient> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.offset)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parse error for the `offset:c0,c1,...` text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolyError(pub String);

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid polynomial: {}", self.0)
    }
}

impl std::error::Error for ParsePolyError {}

impl<T> FromStr for LaurentPoly<T>
where
    T: Coefficient + FromStr,
    <T as FromStr>::Err: fmt::Display,
{
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| ParsePolyError(format!("expected `offset:c0,c1,...`, got `{s}`")))?;
        let offset: i64 = head
            .trim()
            .parse()
            .map_err(|e| ParsePolyError(format!("bad offset `{head}`: {e}")))?;
        let tail = tail.trim();
        let mut coeffs = Vec::new();
        if !tail.is_empty() {
            for part in tail.split(',') {
                let c = part
                    .trim()
                    .parse::<T>()
                    .map_err(|e| ParsePolyError(format!("bad coefficient `{part}`: {e}")))?;
                coeffs.push(c);
            }
        }
        Ok(Self::from_coeffs(offset, coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    offset: i64,
    coeffs: Vec<String>,
}

// Coefficients cross the JSON boundary as decimal strings: arbitrary
// precision values must not be squeezed into JSON numbers.
impl<T: Coefficient> Serialize for LaurentPoly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T> Deserialize<'de> for LaurentPoly<T>
where
    T: Coefficient + FromStr,
    <T as FromStr>::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for c in &repr.coeffs {
            coeffs.push(
                c.parse::<T>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient `{c}`: {e}")))?,
            );
        }
        Ok(Self::from_coeffs(repr.offset, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn poly(offset: i64, coeffs: &[i64]) -> LaurentPoly<Int> {
        LaurentPoly::from_coeffs(offset, coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial::<Int>(0, 0), Int::from(1));
        assert_eq!(binomial::<Int>(5, 2), Int::from(10));
        assert_eq!(binomial::<Int>(5, 0), Int::from(1));
        assert_eq!(binomial::<Int>(3, 5), Int::from(0));
        assert_eq!(binomial::<Int>(4, -1), Int::from(0));
        assert_eq!(binomial::<Int>(-1, -1), Int::from(0));
        assert_eq!(
            binomial::<Int>(52, 26),
            "495918532948104".parse::<Int>().unwrap()
        );
    }

    #[test]
    #[should_panic(expected = "negative upper index")]
    fn binomial_rejects_negative_upper_index() {
        let _ = binomial::<Int>(-1, 0);
    }

    #[test]
    fn canonical_form_trims_both_ends() {
        let p = poly(-2, &[0, 0, 3, 0, 1, 0, 0]);
        assert_eq!(p.support(), Some((0, 2)));
        assert_eq!(p.coeff(0), Int::from(3));
        assert_eq!(p.coeff(1), Int::from(0));
        assert_eq!(p.coeff(2), Int::from(1));
        assert_eq!(p.coeff(17), Int::from(0));
    }

    #[test]
    fn canonical_zero() {
        let z = poly(5, &[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.offset(), 0);
        assert_eq!(z, LaurentPoly::zero());
    }

    #[test]
    fn mul_telescopes() {
        // (1 - T)(1 + T + T^2) = 1 - T^3
        let a = poly(0, &[1, -1]);
        let b = poly(0, &[1, 1, 1]);
        assert_eq!(a.mul(&b), poly(0, &[1, 0, 0, -1]));
    }

    #[test]
    fn mul_by_zero_is_canonical_zero() {
        let p = poly(-3, &[2, 5]);
        assert!(p.mul(&LaurentPoly::zero()).is_zero());
        assert_eq!(p.mul(&LaurentPoly::zero()).offset(), 0);
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = poly(1, &[4, -6, 4, -1]);
        assert!(p.add(&p.neg()).is_zero());
    }

    #[test]
    fn mul_one_minus_t_pow_squares() {
        let one = poly(0, &[1]);
        assert_eq!(one.mul_one_minus_t_pow(2), poly(0, &[1, -2, 1]));
        assert_eq!(one.mul_one_minus_t_pow(0), one);
    }

    #[test]
    fn div_one_minus_t_is_prefix_summation() {
        let p = poly(1, &[3, -6, 4, -1]);
        assert_eq!(p.div_one_minus_t(), poly(1, &[3, -3, 1]));
    }

    #[test]
    fn div_one_minus_t_round_trips() {
        let q = poly(-2, &[7, 0, 2, 5]);
        let p = q.mul_one_minus_t_pow(1);
        assert_eq!(p.div_one_minus_t(), q);
    }

    #[test]
    #[should_panic(expected = "does not vanish at T = 1")]
    fn div_one_minus_t_rejects_inexact() {
        let _ = poly(0, &[1, 1]).div_one_minus_t();
    }

    #[test]
    fn eval_one_sums_coefficients() {
        assert_eq!(poly(1, &[4, -6, 4, -1]).eval_one(), Int::from(1));
        assert_eq!(LaurentPoly::<Int>::zero().eval_one(), Int::from(0));
    }

    #[test]
    fn text_form_round_trips() {
        for s in ["0:", "0:1", "-2:3,0,1", "1:4,-6,4,-1"] {
            let p: LaurentPoly<Int> = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        // Non-canonical input parses to canonical form.
        let p: LaurentPoly<Int> = "-1:0,5,0".parse().unwrap();
        assert_eq!(p.to_string(), "0:5");
    }

    #[test]
    fn text_form_rejects_garbage() {
        assert!("".parse::<LaurentPoly<Int>>().is_err());
        assert!("1,2,3".parse::<LaurentPoly<Int>>().is_err());
        assert!("x:1".parse::<LaurentPoly<Int>>().is_err());
        assert!("0:1,b".parse::<LaurentPoly<Int>>().is_err());
    }

    #[test]
    fn json_round_trips_with_string_coefficients() {
        let p = poly(-1, &[1, 0, -3]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"offset":-1,"coeffs":["1","0","-3"]}"#);
        let back: LaurentPoly<Int> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn max_abs_coeff() {
        assert_eq!(poly(0, &[1, -7, 3]).max_abs_coeff(), Int::from(7));
        assert_eq!(LaurentPoly::<Int>::zero().max_abs_coeff(), Int::from(0));
    }
}
