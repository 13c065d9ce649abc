//! Scalar abstraction for the exact and numeric coefficient types.
//!
//! `Ring` is the minimal interface the polynomial and matrix code needs:
//! exact ring operations plus exact division (division that is known to
//! leave no remainder, as produced by subresultant chains and fraction-free
//! elimination). Implementations delegate to the `num-traits` machinery of
//! the underlying types. `OrderedRing` adds sign queries for the scalars
//! that embed in ℝ.

use num_traits::{One, Signed, Zero};

use crate::{Int, Rat, C64};

/// Commutative ring with exact division, by-reference operations.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Exact division; the caller guarantees `other` divides `self`.
    fn exact_div(&self, other: &Self) -> Self;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Ring embedded in ℝ, with exact sign determination.
pub trait OrderedRing: Ring {
    /// Sign in {−1, 0, +1}.
    fn sign(&self) -> i8;
    fn abs(&self) -> Self {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl Ring for Int {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Self {
        debug_assert!(!Zero::is_zero(other), "exact_div by zero");
        debug_assert!(Zero::is_zero(&(self % other)), "inexact integer division");
        self / other
    }
}

impl OrderedRing for Int {
    fn sign(&self) -> i8 {
        if Zero::is_zero(self) {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
}

impl OrderedRing for Rat {
    fn sign(&self) -> i8 {
        if Zero::is_zero(self) {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl Ring for C64 {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
}
