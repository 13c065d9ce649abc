//! Dense univariate polynomials over a generic [`Ring`] scalar.
//!
//! `Poly<T>` stores coefficients in ascending degree order. Invariant: the
//! vector is either empty (the zero polynomial) or its last element is
//! nonzero. The same type nests as `Poly<Poly<Int>>` for the bivariate
//! elimination work (ℤ[x][y]).

pub mod prs;
pub mod sturm;

use crate::ring::{OrderedRing, Ring};
use crate::{Int, Rat, C64};
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    pub fn monomial(c: T, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&other.coeff(i)));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Poly::from_coeffs(coeffs)
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
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            coeffs.push(mul_usize(c, i));
        }
        Poly::from_coeffs(coeffs)
    }

    /// Horner evaluation in the coefficient ring.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Horner evaluation after mapping coefficients into another ring.
    pub fn eval_map<U: Ring>(&self, x: &U, inject: impl Fn(&T) -> U) -> U {
        let mut acc = U::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&inject(c));
        }
        acc
    }

    /// Map coefficients into another ring.
    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| f(c)).collect())
    }

    /// Composition self(q(x)).
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// self(−x).
    pub fn reflect(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (i, c) in coeffs.iter_mut().enumerate() {
            if i % 2 == 1 {
                *c = c.neg();
            }
        }
        Poly { coeffs }
    }

    /// Division with remainder when the divisor's leading coefficient is a
    /// unit that divides exactly (always for field scalars).
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.deg();
        let dlc = div.lc();
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.lc().exact_div(&dlc);
            let k = rd - dd;
            quot[k] = q.clone();
            rem = rem.sub(&div.scale(&q).shift_up(k));
        }
        (Poly::from_coeffs(quot), rem)
    }

    /// Exact division, asserting a zero remainder.
    pub fn exact_div_poly(&self, div: &Self) -> Self {
        let (q, r) = self.pseudo_exact_div(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    // Exact division that only requires exact coefficient divisions along the
    // way (valid when `div` divides `self` in T[x]).
    fn pseudo_exact_div(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.deg();
        let dlc = div.lc();
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.lc().exact_div(&dlc);
            let k = rd - dd;
            quot[k] = q.clone();
            rem = rem.sub(&div.scale(&q).shift_up(k));
        }
        (Poly::from_coeffs(quot), rem)
    }
}

fn mul_usize<T: Ring>(c: &T, n: usize) -> T {
    // double-and-add; n is a small degree index
    let mut acc = T::zero();
    let mut base = c.clone();
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.add(&base);
        }
        k >>= 1;
        if k > 0 {
            base = base.add(&base);
        }
    }
    acc
}

impl<T: Ring> Ring for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn exact_div(&self, other: &Self) -> Self {
        self.exact_div_poly(other)
    }
}

impl<T: Ring + std::fmt::Debug> std::fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl Poly<Rat> {
    /// Clear denominators: returns (primitive integer polynomial, positive
    /// rational scale) with self = scale · primitive.
    pub fn to_int_primitive(&self) -> (Poly<Int>, Rat) {
        if self.is_zero() {
            return (Poly::zero(), Rat::one());
        }
        let mut lcm: Int = num_traits::One::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content: Int = num_traits::Zero::zero();
        for c in &ints {
            content = num_integer::gcd(content, c.clone());
        }
        if content.is_zero() {
            content = num_traits::One::one();
        }
        let prim = Poly::from_coeffs(ints.iter().map(|c| c / &content).collect());
        (prim, Rat::new(content, lcm))
    }

    pub fn from_int(p: &Poly<Int>) -> Poly<Rat> {
        p.map(|c| Rat::from_integer(c.clone()))
    }

    /// Make the polynomial monic (nonzero input).
    pub fn monic(&self) -> Poly<Rat> {
        let lc = self.lc();
        assert!(!Ring::is_zero(&lc));
        self.scale(&(Rat::one() / lc))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| rat_to_f64_approx(c))
            .collect()
    }

    pub fn to_cpoly(&self) -> Poly<C64> {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| C64::new(rat_to_f64_approx(c), 0.0))
                .collect(),
        )
    }
}

/// f64 approximation of a rational, safe for huge numerators/denominators.
pub fn rat_to_f64_approx(x: &Rat) -> f64 {
    if Zero::is_zero(x) {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (x.numer().to_f64(), x.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // scale down by a common power of two
    let nb = x.numer().bits() as i64;
    let db = x.denom().bits() as i64;
    let shift = (nb.max(db) - 900).max(0) as u64;
    let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

impl Poly<Int> {
    /// Positive gcd of the coefficients (zero polynomial has content 0).
    pub fn content(&self) -> Int {
        let mut g: Int = num_traits::Zero::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Divide by the (positive) content; sign of the polynomial is kept.
    pub fn primitive_part(&self) -> Poly<Int> {
        let c = self.content();
        if c.is_zero() || num_traits::One::is_one(&c) {
            return self.clone();
        }
        self.map(|a| a / &c)
    }

    pub fn to_rat(&self) -> Poly<Rat> {
        Poly::from_int(self)
    }

    /// Exact sign of self(a/b) via the homogenized integer value.
    pub fn sign_at_rat(&self, x: &Rat) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let a = x.numer();
        let b = x.denom();
        let n = self.deg();
        // sum c_i a^i b^(n-i)
        let mut acc: Int = num_traits::Zero::zero();
        let mut apow: Int = num_traits::One::one();
        let mut bpows: Vec<Int> = Vec::with_capacity(n + 1);
        let mut bp: Int = num_traits::One::one();
        for _ in 0..=n {
            bpows.push(bp.clone());
            bp *= b;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                acc += c * &apow * &bpows[n - i];
            }
            if i < n {
                apow *= a;
            }
        }
        OrderedRing::sign(&acc)
    }

    /// Sign of the value at +∞ (resp. −∞ with `neg`).
    pub fn sign_at_infinity(&self, neg: bool) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let s = OrderedRing::sign(&self.lc());
        if neg && self.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// Cauchy root bound: all real roots lie in (−B, B); B a power of two.
    pub fn root_bound(&self) -> Rat {
        assert!(!self.is_zero());
        let lc = Ring::abs(&self.lc());
        let mut maxc: Int = num_traits::Zero::zero();
        for c in &self.coeffs {
            let a = Signed::abs(c);
            if a > maxc {
                maxc = a;
            }
        }
        let bound = Rat::one() + Rat::new(maxc, lc);
        // round up to a power of two for dyadic endpoints
        let mut b = Rat::one();
        let two = crate::rat(2);
        while b < bound {
            b *= &two;
        }
        b
    }
}

impl std::fmt::Display for Poly<Rat> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let a = Signed::abs(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !num_traits::One::is_one(&a) || i == 0;
            if show_coeff {
                write!(f, "{}", a)?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "t")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn p(cs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn arithmetic_and_normalization() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-1, -2, -3]);
        assert!(a.add(&b).is_zero());
        assert_eq!(a.mul(&Poly::one()), a);
        assert_eq!(a.deg(), 2);
        let c = Poly::from_coeffs(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(c.deg(), 0);
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[2, 0, -3, 1, 4]);
        let b = p(&[1, 1, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().map_or(true, |d| d < b.deg()));
    }

    #[test]
    fn compose_and_reflect() {
        let a = p(&[1, 0, 1]); // 1 + t^2
        let m = a.compose(&p(&[0, -1]));
        assert_eq!(m, a);
        assert_eq!(a.reflect(), a);
        let b = p(&[0, 1, 0, 1]);
        assert_eq!(b.reflect(), b.neg());
    }

    #[test]
    fn int_primitive_and_sign() {
        let a = Poly::from_coeffs(vec![ratio(1, 2), ratio(-3, 4)]);
        let (prim, scale) = a.to_int_primitive();
        assert_eq!(prim.to_rat().scale(&scale), a);
        assert_eq!(prim.content(), Int::from(1));
        // sign of 2 - 3t at t = 1 is -1, at 0 is +1
        let q = Poly::from_coeffs(vec![Int::from(2), Int::from(-3)]);
        assert_eq!(q.sign_at_rat(&rat(1)), -1);
        assert_eq!(q.sign_at_rat(&rat(0)), 1);
        assert_eq!(q.sign_at_rat(&ratio(2, 3)), 0);
    }

    #[test]
    fn display_matches_convention() {
        let a = p(&[54, 30, 19, 4, 10, 2, 1]);
        assert_eq!(
            a.to_string(),
            "t^6 + 2*t^5 + 10*t^4 + 4*t^3 + 19*t^2 + 30*t + 54"
        );
    }
}
