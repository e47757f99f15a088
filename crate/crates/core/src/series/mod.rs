//! Truncated formal power series over exact rationals, and the checks
//! tying the counts `c(n, m)` to their generating functions: the partial
//! differential equation, the Lambert W expansion of the Cayley series,
//! and the closed form of the bivariate series expanded at `u = 1`.

mod bivariate;
mod power;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::counting::{build_count_table, CountTable};

pub use bivariate::BiSeries;
pub use power::PowerSeries;

use power::rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("substituted series has a nonzero constant term")]
    SubstitutionIllFormed,
    #[error("order {order} is below the minimum {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("count table covers n <= {have}, order {order} needs more")]
    TableTooSmall { have: usize, order: usize },
}

fn big(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

fn factorial(n: usize) -> BigRational {
    (1..=n).fold(BigRational::one(), |acc, k| acc * rat(k as i64))
}

fn binomial(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    (0..k).fold(BigRational::one(), |acc, i| {
        acc * rat((n - i) as i64) / rat(i as i64 + 1)
    })
}

/// Truncation bound of the edge variable for vertex order `n`.
pub fn edge_bound(n: usize) -> usize {
    (2 * n).saturating_sub(3)
}

/// `sum c(n,m) z^n u^m / n!` for `n <= order`, with `u` truncated at
/// `2 order - 3`.
pub fn egf_from_counts(table: &CountTable, order: usize) -> BiSeries {
    assert!(
        table.n_max() >= order,
        "count table too small for order {order}"
    );
    let mut c = BiSeries::zero(order, edge_bound(order));
    for n in 1..=order {
        let f = factorial(n);
        for (m, count) in table.row_entries(n) {
            c.set(n, m, big(count) / &f);
        }
    }
    c
}

/// `sum c(n,m) z^n u^m`, the ordinary counterpart of [`egf_from_counts`].
pub fn ogf_from_counts(table: &CountTable, order: usize) -> BiSeries {
    assert!(
        table.n_max() >= order,
        "count table too small for order {order}"
    );
    let mut c = BiSeries::zero(order, edge_bound(order));
    for n in 1..=order {
        for (m, count) in table.row_entries(n) {
            c.set(n, m, big(count));
        }
    }
    c
}

/// Divides the coefficient of `z^n` by `n!`.
pub fn borel_transform(s: &BiSeries) -> BiSeries {
    let mut out = s.clone();
    for i in 0..=s.max_z() {
        let f = factorial(i);
        for j in 0..=s.max_u() {
            out.set(i, j, s.coeff(i, j) / &f);
        }
    }
    out
}

/// `∂C/∂z − 1 − zu ∂C/∂z − u³ ∂C/∂u`, truncated to z-degree `max_z − 1`.
/// The u bound is widened by two so that no term of `C` is lost.
pub fn pde_residual(c: &BiSeries) -> BiSeries {
    let (nz, nu) = (c.max_z(), c.max_u() + 2);
    let c = c.truncate(nz, nu);
    let dz = c.d_dz();
    let du = c.d_du().truncate(nz.saturating_sub(1), nu);
    let one = BiSeries::monomial(0, 0, dz.max_z(), nu);
    let r = &dz - &one;
    let r = &r - &dz.shift(1, 1);
    &r - &du.shift(0, 3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PdeMismatch {
    /// `C(0, u)` has a nonzero coefficient at this power of `u`.
    InitialCondition { u_degree: usize, value: BigRational },
    Residual {
        z_degree: usize,
        u_degree: usize,
        value: BigRational,
    },
}

impl fmt::Display for PdeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdeMismatch::InitialCondition { u_degree, value } => {
                write!(f, "C(0,u) has coefficient {value} at u^{u_degree}")
            }
            PdeMismatch::Residual {
                z_degree,
                u_degree,
                value,
            } => write!(f, "residual {value} at z^{z_degree} u^{u_degree}"),
        }
    }
}

/// Checks the initial condition `C(0,u) = 0` and that the residual
/// vanishes, reporting the first offending coefficient.
pub fn check_pde(c: &BiSeries) -> Result<(), PdeMismatch> {
    for j in 0..=c.max_u() {
        if !c.coeff(0, j).is_zero() {
            return Err(PdeMismatch::InitialCondition {
                u_degree: j,
                value: c.coeff(0, j).clone(),
            });
        }
    }
    match pde_residual(c).terms().next() {
        None => Ok(()),
        Some((i, j, v)) => Err(PdeMismatch::Residual {
            z_degree: i,
            u_degree: j,
            value: v.clone(),
        }),
    }
}

/// `W · exp(W) − x` through `x^order`.
pub fn lambert_residual(w: &PowerSeries) -> PowerSeries {
    let e = w.exp().expect("W has zero constant term");
    &(w * &e) - &PowerSeries::x(w.order())
}

/// Principal branch of Lambert W: `sum (−n)^(n−1) / n! x^n`.
pub fn lambert_w_series(order: usize) -> PowerSeries {
    assert!(order >= 1, "Lambert W series needs order >= 1");
    let mut w = PowerSeries::zero(order);
    for n in 1..=order {
        let p = (0..n - 1).fold(BigRational::one(), |acc, _| acc * rat(-(n as i64)));
        w.set(n, p / factorial(n));
    }
    let r = lambert_residual(&w);
    assert!(r.is_zero(), "W e^W = x fails: {r:?}");
    w
}

/// `−W(−x) − W(−x)² / 2`, the exponential generating function of Cayley
/// trees counted by vertices.
pub fn cayley_series(order: usize) -> PowerSeries {
    let w = lambert_w_series(order);
    let neg_x = PowerSeries::x(order).scale(&rat(-1));
    let wn = w.compose(&neg_x).expect("−x has zero constant term");
    let sq = &wn * &wn;
    &(-&wn) - &sq.scale(&BigRational::new(1.into(), 2.into()))
}

/// Which form of the closed formula a coefficient belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// Vertices and edges, `C(z, 1+s)`.
    EdgeForm,
    /// Vertices and twists, `Cayley(z, 1+s)`.
    TwistForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub identity: Identity,
    pub z_degree: usize,
    pub s_degree: usize,
    /// Coefficient obtained from the counts.
    pub counted: BigRational,
    /// Coefficient obtained from the closed form.
    pub closed_form: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub order: usize,
    pub s_bound: usize,
    pub coefficients_checked: usize,
    pub mismatch: Option<Mismatch>,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for ClosedFormReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(
                f,
                "{} coefficients match through z^{} s^{}",
                self.coefficients_checked, self.order, self.s_bound
            ),
            Some(m) => write!(
                f,
                "{:?} differs at z^{} s^{}: counts give {}, closed form gives {}",
                m.identity, m.z_degree, m.s_degree, m.counted, m.closed_form
            ),
        }
    }
}

/// Checks the closed form of the bivariate series against freshly built
/// counts.
pub fn closed_form_check(order: usize) -> Result<ClosedFormReport, SeriesError> {
    closed_form_check_with(&build_count_table(order.max(1)), order)
}

/// Expands both closed forms at `u = 1 + s` (where every factor is
/// analytic) and compares them with the series built from `table`,
/// coefficient by coefficient for `z <= order`, `s <= 2 order − 3`.
pub fn closed_form_check_with(
    table: &CountTable,
    order: usize,
) -> Result<ClosedFormReport, SeriesError> {
    if order < 3 {
        return Err(SeriesError::OrderTooSmall { order, min: 3 });
    }
    if table.n_max() < order {
        return Err(SeriesError::TableTooSmall {
            have: table.n_max(),
            order,
        });
    }
    let (nz, ns) = (order, edge_bound(order));
    // every power A^k with k > nz + ns has no retained term
    let t = cayley_series(nz + ns);

    let q = {
        // s / (1+s)
        let mut q = PowerSeries::zero(ns);
        for j in 1..=ns {
            q.set(j, rat(if j % 2 == 1 { 1 } else { -1 }));
        }
        q
    };
    let e = q.scale(&rat(-1)).exp().expect("q has zero constant term");
    let qe = &q * &e;
    let inv = &PowerSeries::constant(rat(1), ns) - &q;
    let e_inv = &e * &inv;

    let lift = |z0: &PowerSeries, z1: &PowerSeries| {
        let mut a = BiSeries::zero(nz, ns);
        for j in 0..=ns {
            a.set(0, j, z0.coeff(j).clone());
            a.set(1, j, z1.coeff(j).clone());
        }
        a
    };

    let half = BigRational::new(1.into(), 2.into());
    let mut checked = 0;

    // C(z,1+s) = T(A) + 1/(2(1+s)^2) − 1/2, A = (z + s/(1+s)) e^{−s/(1+s)}
    let a = lift(&qe, &e);
    let mut rhs = a
        .compose_into(&t)
        .ok_or(SeriesError::SubstitutionIllFormed)?;
    for j in 1..=ns {
        let sign = if j % 2 == 1 { -1 } else { 1 };
        rhs.add_to(0, j, &(rat(sign * (j as i64 + 1)) * &half));
    }
    for n in 0..=nz {
        let f = factorial(n);
        for j in 0..=ns {
            let mut lhs = BigRational::zero();
            if n >= 1 {
                for (m, c) in table.row_entries(n) {
                    lhs += big(c) * binomial(m, j);
                }
            }
            lhs /= &f;
            checked += 1;
            if &lhs != rhs.coeff(n, j) {
                return Ok(report(
                    order,
                    ns,
                    checked,
                    Identity::EdgeForm,
                    n,
                    j,
                    lhs,
                    rhs.coeff(n, j),
                ));
            }
        }
    }

    // Cayley(z,1+s) = (1+s) T(B) + 1/(2(1+s)) − (1+s)/2, B = (z+s)/(1+s) e^{−s/(1+s)}
    let b = lift(&qe, &e_inv);
    let tb = b
        .compose_into(&t)
        .ok_or(SeriesError::SubstitutionIllFormed)?;
    let mut rhs = &tb + &tb.shift(0, 1);
    // 1/(2(1+s)) − (1+s)/2 = −s + (1/2) sum_{j>=2} (−s)^j
    rhs.add_to(0, 1, &(-&half - &half));
    for j in 2..=ns {
        let sign = if j % 2 == 1 { -1 } else { 1 };
        rhs.add_to(0, j, &(rat(sign) * &half));
    }
    for n in 0..=nz {
        let f = factorial(n);
        for j in 0..=ns {
            let mut lhs = BigRational::zero();
            if n >= 1 {
                for (k, c) in table.row(n).iter().enumerate() {
                    lhs += big(c) * binomial(k, j);
                }
            }
            lhs /= &f;
            checked += 1;
            if &lhs != rhs.coeff(n, j) {
                return Ok(report(
                    order,
                    ns,
                    checked,
                    Identity::TwistForm,
                    n,
                    j,
                    lhs,
                    rhs.coeff(n, j),
                ));
            }
        }
    }

    Ok(ClosedFormReport {
        order,
        s_bound: ns,
        coefficients_checked: checked,
        mismatch: None,
    })
}

#[allow(clippy::too_many_arguments)]
fn report(
    order: usize,
    s_bound: usize,
    checked: usize,
    identity: Identity,
    z_degree: usize,
    s_degree: usize,
    counted: BigRational,
    closed_form: &BigRational,
) -> ClosedFormReport {
    ClosedFormReport {
        order,
        s_bound,
        coefficients_checked: checked,
        mismatch: Some(Mismatch {
            identity,
            z_degree,
            s_degree,
            counted,
            closed_form: closed_form.clone(),
        }),
    }
}
