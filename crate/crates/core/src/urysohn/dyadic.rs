use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sorgenfrey::Scalar;

/// Finest level a [`Dyadic`] may carry. Products of two depth-60 values fit.
pub const MAX_LEVEL: u32 = 120;

/// A dyadic rational `k / 2^n` in `[0, 1]`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: u128,
    level: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, level: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, level: 0 };

    /// `num / 2^level`, reduced. Fails outside `[0, 1]` or beyond [`MAX_LEVEL`].
    pub fn new(num: u128, level: u32) -> Result<Self> {
        if level > MAX_LEVEL {
            return Err(Error::Domain(format!(
                "dyadic level {level} exceeds the maximum {MAX_LEVEL}"
            )));
        }
        if num > (1u128 << level) {
            return Err(Error::Domain(format!("{num}/2^{level} is greater than 1")));
        }
        Ok(Dyadic::reduced(num, level))
    }

    fn reduced(mut num: u128, mut level: u32) -> Self {
        if num == 0 {
            return Dyadic::ZERO;
        }
        while level > 0 && num.is_multiple_of(2) {
            num /= 2;
            level -= 1;
        }
        Dyadic { num, level }
    }

    pub fn numerator(self) -> u128 {
        self.num
    }

    /// Smallest `n` with `self · 2^n` an integer.
    pub fn level(self) -> u32 {
        self.level
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_one(self) -> bool {
        self == Dyadic::ONE
    }

    /// Bits `r_1 .. r_l` with `self = Σ r_i / 2^i` and `r_l = 1`.
    /// Defined on the open interval `(0, 1)` only.
    pub fn binary_expansion(self) -> Result<Vec<bool>> {
        if self.is_zero() || self.is_one() {
            return Err(Error::Domain(format!(
                "binary expansion needs a value strictly between 0 and 1, got {self}"
            )));
        }
        Ok((1..=self.level)
            .map(|i| (self.num >> (self.level - i)) & 1 == 1)
            .collect())
    }

    /// Numerator of `self` at the finer level `level`.
    pub(crate) fn scaled_to(self, level: u32) -> u128 {
        debug_assert!(level >= self.level);
        self.num << (level - self.level)
    }

    pub fn checked_mul(self, other: Dyadic) -> Result<Dyadic> {
        Dyadic::new(self.num * other.num, self.level + other.level)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / 2f64.powi(self.level as i32)
    }

    /// Exact conversion into a rational scalar.
    pub fn to_scalar<T: Scalar>(self) -> T {
        let two = T::one() + T::one();
        let mut denom = T::one();
        for _ in 0..self.level {
            denom = denom * two.clone();
        }
        let mut num = T::zero();
        let mut bit = T::one();
        let mut rest = self.num;
        while rest > 0 {
            if rest & 1 == 1 {
                num = num + bit.clone();
            }
            bit = bit * two.clone();
            rest >>= 1;
        }
        num / denom
    }

    /// Absolute difference `|self − other|`.
    pub fn abs_diff(self, other: Dyadic) -> Dyadic {
        let level = self.level.max(other.level);
        let a = self.scaled_to(level);
        let b = other.scaled_to(level);
        Dyadic::reduced(a.abs_diff(b), level)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let level = self.level.max(other.level);
        self.scaled_to(level).cmp(&other.scaled_to(level))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u128 << self.level)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Dyadic::ZERO
    }
    fn is_zero(&self) -> bool {
        self.num == 0
    }
}

impl std::ops::Add for Dyadic {
    type Output = Dyadic;
    /// Panics if the sum exceeds 1.
    fn add(self, rhs: Dyadic) -> Dyadic {
        let level = self.level.max(rhs.level);
        Dyadic::new(self.scaled_to(level) + rhs.scaled_to(level), level)
            .expect("dyadic sum stays in [0,1]")
    }
}

impl std::ops::Mul for Dyadic {
    type Output = Dyadic;
    /// Panics if the product level exceeds [`MAX_LEVEL`].
    fn mul(self, rhs: Dyadic) -> Dyadic {
        self.checked_mul(rhs)
            .expect("dyadic product level in range")
    }
}

impl One for Dyadic {
    fn one() -> Self {
        Dyadic::ONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn d(num: u128, level: u32) -> Dyadic {
        Dyadic::new(num, level).unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(d(1, 1).binary_expansion().unwrap(), vec![true]);
        assert_eq!(d(3, 3).binary_expansion().unwrap(), vec![false, true, true]);
        assert_eq!(
            d(11, 4).binary_expansion().unwrap(),
            vec![true, false, true, true]
        );
        assert!(matches!(
            Dyadic::ZERO.binary_expansion(),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Dyadic::ONE.binary_expansion(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn reduction_and_ordering() {
        assert_eq!(d(4, 3), d(1, 1));
        assert_eq!(d(8, 3), Dyadic::ONE);
        assert!(d(3, 3) < d(1, 1));
        assert!(d(1, 1) < d(5, 3));
        assert_eq!(d(3, 3).to_string(), "3/8");
        assert!(Dyadic::new(9, 3).is_err());
        assert!(Dyadic::new(1, MAX_LEVEL + 1).is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(d(1, 1) * d(3, 2), d(3, 3));
        assert_eq!(d(1, 2) + d(1, 4), d(5, 4));
        assert_eq!(d(1, 2).abs_diff(d(5, 4)), d(1, 4));
        let r: BigRational = d(11, 4).to_scalar();
        assert_eq!(r, BigRational::new(11.into(), 16.into()));
    }

    proptest! {
        #[test]
        fn expansion_sums_back(level in 1u32..40, raw in any::<u64>()) {
            let num = (raw as u128) % (1u128 << level);
            prop_assume!(num > 0);
            let q = d(num, level);
            let bits = q.binary_expansion().unwrap();
            prop_assert_eq!(*bits.last().unwrap(), true);
            prop_assert_eq!(bits.len() as u32, q.level());
            let rebuilt = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .fold(Dyadic::ZERO, |acc, (i, _)| acc + d(1, i as u32 + 1));
            prop_assert_eq!(rebuilt, q);
        }
    }
}
