use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Univariate power series truncated after `x^order`, exact rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least the constant term"
        );
        PowerSeries { coeffs }
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn set(&mut self, i: usize, c: BigRational) {
        self.coeffs[i] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<BigRational> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        let mut out = Self::zero(order);
        for i in 1..=self.order() {
            out.coeffs[i - 1] = &self.coeffs[i] * rat(i as i64);
        }
        out
    }

    /// Antiderivative with zero constant term; gains one order.
    pub fn integral(&self) -> Self {
        let mut out = Self::zero(self.order() + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i + 1] = c / rat(i as i64 + 1);
        }
        out
    }

    /// `exp(self)`, which requires a zero constant term.
    pub fn exp(&self) -> Option<Self> {
        if !self.coeffs[0].is_zero() {
            return None;
        }
        let n = self.order();
        let mut g = Self::zero(n);
        g.coeffs[0] = BigRational::one();
        // n g_n = sum_{k=1..n} k f_k g_{n-k}
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &g.coeffs[m - k] * rat(k as i64);
                }
            }
            g.coeffs[m] = acc / rat(m as i64);
        }
        Some(g)
    }

    /// `self(inner)`; `inner` must have a zero constant term.
    pub fn compose(&self, inner: &PowerSeries) -> Option<Self> {
        if !inner.coeffs[0].is_zero() {
            return None;
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Some(acc)
    }

    /// Rescales `x^n` by `1/n!`, sending an ordinary generating function
    /// to the exponential one with the same coefficients.
    pub fn borel(&self) -> Self {
        let mut fact = BigRational::one();
        let mut out = self.clone();
        for (n, c) in out.coeffs.iter_mut().enumerate() {
            if n > 0 {
                fact *= rat(n as i64);
            }
            *c = &*c / &fact;
        }
        out
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = PowerSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn exp_of_x() {
        let e = PowerSeries::x(5).exp().unwrap();
        let expect = [q(1, 1), q(1, 1), q(1, 2), q(1, 6), q(1, 24), q(1, 120)];
        assert_eq!(e.coeffs(), &expect);
        assert!(PowerSeries::constant(q(1, 1), 3).exp().is_none());
    }

    #[test]
    fn composition_with_geometric_series() {
        // 1/(1-y) at y = x/(1+x) is 1 + x
        let geo = PowerSeries::from_coeffs(vec![q(1, 1); 7]);
        let mut inner = PowerSeries::zero(6);
        for i in 1..=6 {
            inner.set(i, q(if i % 2 == 1 { 1 } else { -1 }, 1));
        }
        let got = geo.compose(&inner).unwrap();
        let mut expect = PowerSeries::zero(6);
        expect.set(0, q(1, 1));
        expect.set(1, q(1, 1));
        assert_eq!(got, expect);
    }

    #[test]
    fn borel_divides_by_factorial() {
        let s = PowerSeries::from_coeffs(vec![q(1, 1), q(1, 1), q(2, 1), q(6, 1)]);
        assert_eq!(s.borel().coeffs(), vec![q(1, 1); 4].as_slice());
    }
}
