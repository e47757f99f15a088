use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::power::{rat, PowerSeries};

/// Bivariate series `sum a[i][j] z^i u^j` truncated at `i <= max_z` and
/// `j <= max_u`. Every operation keeps the smaller of its operands' bounds,
/// so retained coefficients are always exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    max_z: usize,
    max_u: usize,
    coeffs: Vec<BigRational>,
}

impl BiSeries {
    pub fn zero(max_z: usize, max_u: usize) -> Self {
        BiSeries {
            max_z,
            max_u,
            coeffs: vec![BigRational::zero(); (max_z + 1) * (max_u + 1)],
        }
    }

    /// The monomial `z^i u^j`, or zero if it falls outside the bounds.
    pub fn monomial(i: usize, j: usize, max_z: usize, max_u: usize) -> Self {
        let mut s = Self::zero(max_z, max_u);
        if i <= max_z && j <= max_u {
            s.set(i, j, rat(1));
        }
        s
    }

    pub fn max_z(&self) -> usize {
        self.max_z
    }

    pub fn max_u(&self) -> usize {
        self.max_u
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.max_u + 1) + j
    }

    /// Coefficient of `z^i u^j`; zero beyond the bounds.
    pub fn get(&self, i: usize, j: usize) -> BigRational {
        if i > self.max_z || j > self.max_u {
            return BigRational::zero();
        }
        self.coeffs[self.idx(i, j)].clone()
    }

    pub fn coeff(&self, i: usize, j: usize) -> &BigRational {
        &self.coeffs[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, c: BigRational) {
        let k = self.idx(i, j);
        self.coeffs[k] = c;
    }

    pub fn add_to(&mut self, i: usize, j: usize, c: &BigRational) {
        let k = self.idx(i, j);
        self.coeffs[k] += c;
    }

    pub fn truncate(&self, max_z: usize, max_u: usize) -> Self {
        let mut out = Self::zero(max_z, max_u);
        for i in 0..=max_z.min(self.max_z) {
            for j in 0..=max_u.min(self.max_u) {
                out.set(i, j, self.coeff(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero coefficients in `(i, j)` lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> + '_ {
        (0..=self.max_z)
            .flat_map(move |i| (0..=self.max_u).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.coeff(i, j)))
            .filter(|(_, _, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        BiSeries {
            max_z: self.max_z,
            max_u: self.max_u,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `z^a u^b`, dropping terms that leave the bounds.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.max_z, self.max_u);
        for (i, j, c) in self.terms() {
            if i + a <= self.max_z && j + b <= self.max_u {
                out.set(i + a, j + b, c.clone());
            }
        }
        out
    }

    /// `∂/∂z`; the z bound drops by one.
    pub fn d_dz(&self) -> Self {
        let mut out = Self::zero(self.max_z.saturating_sub(1), self.max_u);
        for (i, j, c) in self.terms() {
            if i >= 1 {
                out.set(i - 1, j, c * rat(i as i64));
            }
        }
        out
    }

    /// `∂/∂u`; the u bound drops by one.
    pub fn d_du(&self) -> Self {
        let mut out = Self::zero(self.max_z, self.max_u.saturating_sub(1));
        for (i, j, c) in self.terms() {
            if j >= 1 {
                out.set(i, j - 1, c * rat(j as i64));
            }
        }
        out
    }

    /// `∫_0^z`; the z bound grows by one.
    pub fn integrate_z(&self) -> Self {
        let mut out = Self::zero(self.max_z + 1, self.max_u);
        for (i, j, c) in self.terms() {
            out.set(i + 1, j, c / rat(i as i64 + 1));
        }
        out
    }

    /// Substitutes `u = 1` row by row (only meaningful when each z-row is
    /// a polynomial in u within the bound).
    pub fn eval_u_one(&self) -> PowerSeries {
        let mut out = PowerSeries::zero(self.max_z);
        for i in 0..=self.max_z {
            let mut acc = BigRational::zero();
            for j in 0..=self.max_u {
                acc += self.coeff(i, j);
            }
            out.set(i, acc);
        }
        out
    }

    /// `f(self)`; `self` must have a zero constant term so that truncation
    /// in each variable is respected: every monomial of `self^k` has total
    /// degree at least `k`, so powers beyond `max_z + max_u` never reach a
    /// retained coefficient.
    pub fn compose_into(&self, f: &PowerSeries) -> Option<Self> {
        if !self.coeff(0, 0).is_zero() {
            return None;
        }
        let needed = (self.max_z + self.max_u).min(f.order());
        let mut acc = Self::zero(self.max_z, self.max_u);
        acc.set(0, 0, f.coeff(needed).clone());
        for k in (0..needed).rev() {
            acc = &acc * self;
            acc.add_to(0, 0, f.coeff(k));
        }
        Some(acc)
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        let (mz, mu) = (self.max_z.min(rhs.max_z), self.max_u.min(rhs.max_u));
        let mut out = self.truncate(mz, mu);
        for i in 0..=mz {
            for j in 0..=mu {
                out.add_to(i, j, rhs.coeff(i, j));
            }
        }
        out
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &BiSeries) -> BiSeries {
        let (mz, mu) = (self.max_z.min(rhs.max_z), self.max_u.min(rhs.max_u));
        let mut out = self.truncate(mz, mu);
        for i in 0..=mz {
            for j in 0..=mu {
                let k = out.idx(i, j);
                out.coeffs[k] -= rhs.coeff(i, j);
            }
        }
        out
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let (mz, mu) = (self.max_z.min(rhs.max_z), self.max_u.min(rhs.max_u));
        let mut out = BiSeries::zero(mz, mu);
        let left: Vec<_> = self
            .terms()
            .filter(|&(i, j, _)| i <= mz && j <= mu)
            .collect();
        let right: Vec<_> = rhs
            .terms()
            .filter(|&(i, j, _)| i <= mz && j <= mu)
            .collect();
        for &(i1, j1, a) in &left {
            for &(i2, j2, b) in &right {
                if i1 + i2 <= mz && j1 + j2 <= mu {
                    out.add_to(i1 + i2, j1 + j2, &(a * b));
                }
            }
        }
        out
    }
}
