//! Rational series `Q(T) / (1 - T)^m` and their expansions.

use serde::{Deserialize, Serialize};

use crate::poly::{Coefficient, LaurentPoly};

/// A formal series presented as a Laurent polynomial numerator over a
/// power of `(1 - T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries<T> {
    numerator: LaurentPoly<T>,
    denom_exponent: u32,
}

impl<T: Coefficient> RationalSeries<T> {
    pub fn new(numerator: LaurentPoly<T>, denom_exponent: u32) -> Self {
        RationalSeries {
            numerator,
            denom_exponent,
        }
    }

    pub fn numerator(&self) -> &LaurentPoly<T> {
        &self.numerator
    }

    pub fn denom_exponent(&self) -> u32 {
        self.denom_exponent
    }

    /// Expands the series up to degree `upto` inclusive.
    ///
    /// The coefficient of `T^k` is `sum_j Q_j * C(m + k - j - 1, m - 1)`
    /// for denominator exponent `m >= 1`, and `Q_k` itself for `m = 0`.
    ///
    /// Panics if `upto` lies below the numerator offset.
    pub fn expand(&self, upto: i64) -> SeriesPrefix<T> {
        let offset = self.numerator.offset();
        assert!(
            upto >= offset,
            "expand: truncation degree {upto} below numerator offset {offset}"
        );
        let len = (upto - offset + 1) as usize;
        let mut coeffs = vec![T::zero(); len];
        if self.denom_exponent == 0 {
            for (i, c) in self.numerator.coeffs().iter().enumerate() {
                if i < len {
                    coeffs[i] = c.clone();
                }
            }
            return SeriesPrefix { offset, coeffs };
        }
        let m = self.denom_exponent as i64;
        // Row of expansion weights C(m - 1 + u, m - 1) for u = 0..len,
        // built incrementally: each step is an exact multiply/divide.
        let mut weights = Vec::with_capacity(len);
        let mut w = T::one();
        weights.push(w.clone());
        for u in 1..len as i64 {
            w *= T::from_i64(m - 1 + u).unwrap();
            w /= T::from_i64(u).unwrap();
            weights.push(w.clone());
        }
        for (j, q) in self.numerator.coeffs().iter().enumerate() {
            if q.is_zero() || j >= len {
                continue;
            }
            for u in 0..len - j {
                let mut term = q.clone();
                term *= &weights[u];
                coeffs[j + u] += &term;
            }
        }
        SeriesPrefix { offset, coeffs }
    }
}

/// A coefficient window `[offset, truncation_degree]` of an expanded series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPrefix<T> {
    offset: i64,
    coeffs: Vec<T>,
}

#[derive(Serialize, Deserialize)]
struct PrefixRepr {
    offset: i64,
    coeffs: Vec<String>,
}

// Same JSON shape as a polynomial: the window is a finite coefficient
// list, and the entries travel as decimal strings.
impl<T: Coefficient> Serialize for SeriesPrefix<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PrefixRepr {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T> Deserialize<'de> for SeriesPrefix<T>
where
    T: Coefficient + std::str::FromStr,
    <T as std::str::FromStr>::Err: std::fmt::Display,
{
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = PrefixRepr::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for c in &repr.coeffs {
            coeffs.push(
                c.parse::<T>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient `{c}`: {e}")))?,
            );
        }
        Ok(SeriesPrefix {
            offset: repr.offset,
            coeffs,
        })
    }
}

impl<T: Coefficient> SeriesPrefix<T> {
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn truncation_degree(&self) -> i64 {
        self.offset + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient at `degree`.  Degrees below the offset are zero; degrees
    /// beyond the truncation are not known and are rejected.
    pub fn coeff(&self, degree: i64) -> T {
        if degree < self.offset {
            return T::zero();
        }
        assert!(
            degree <= self.truncation_degree(),
            "coefficient at degree {degree} beyond truncation {}",
            self.truncation_degree()
        );
        self.coeffs[(degree - self.offset) as usize].clone()
    }
}
