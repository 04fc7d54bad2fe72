//! Exact truncated power series with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `c_0 + c_1 x + ... + c_N x^N`, exact, truncated at order `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl RationalSeries {
    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The monomial `x`, or zero when `order == 0`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least its constant term"
        );
        RationalSeries { coeffs }
    }

    /// `Σ a_k x^k / k!` for `k ≤ order`.
    pub fn from_egf(order: usize, mut a: impl FnMut(usize) -> BigInt) -> Self {
        RationalSeries {
            coeffs: (0..=order)
                .map(|k| BigRational::new(a(k), factorial(k)))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `k! · c_k`, the exponential-generating-function coefficient.
    pub fn egf_coeff(&self, k: usize) -> BigRational {
        self.coeff(k) * BigRational::from_integer(factorial(k))
    }

    /// `k! · c_k` as an integer; errors if it is not one.
    pub fn egf_integer(&self, k: usize) -> Result<BigInt> {
        let c = self.egf_coeff(k);
        if c.is_integer() {
            Ok(c.to_integer())
        } else {
            Err(Error::Series(format!(
                "coefficient {k}: {c} is not an integer"
            )))
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        RationalSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`, keeping the truncation order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![BigRational::zero(); n];
        if k < n {
            coeffs[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        RationalSeries { coeffs }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Series(
                "reciprocal of a series with zero constant term".into(),
            ));
        }
        let n = self.coeffs.len();
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            out.push(-acc * &inv0);
        }
        Ok(RationalSeries { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.reciprocal()?)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;
    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        RationalSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;
    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        RationalSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;
    fn neg(self) -> RationalSeries {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] += a * b;
            }
        }
        RationalSeries { coeffs }
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// `φ_j(x) = Σ x^{4k+j} / (4k+j)!`.
pub fn olivier(j: usize, order: usize) -> Result<RationalSeries> {
    if j > 3 {
        return Err(Error::Series(format!("Olivier index {j} outside 0..=3")));
    }
    Ok(RationalSeries::from_egf(order, |k| {
        if k % 4 == j {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }))
}

fn olivier_all(order: usize) -> [RationalSeries; 4] {
    [0, 1, 2, 3].map(|j| olivier(j, order).expect("index in range"))
}

/// `φ_0^2 - φ_1 φ_3`.
fn a_denominator(phi: &[RationalSeries; 4]) -> RationalSeries {
    &(&phi[0] * &phi[0]) - &(&phi[1] * &phi[3])
}

/// `Σ A(k) x^k / k!` over `k ≡ residue (mod 4)`, where `A(k)` counts 2up-2down
/// permutations of length `k`.
pub fn a_series(residue: usize, order: usize) -> Result<RationalSeries> {
    let phi = olivier_all(order);
    let num = match residue {
        1 => &(&phi[0] * &phi[1]) - &(&phi[2] * &phi[3]),
        3 => phi[3].clone(),
        _ => {
            return Err(Error::Series(format!(
                "residue {residue} is neither 1 nor 3"
            )))
        }
    };
    num.div(&a_denominator(&phi))
}

/// `F_P(x) = (x/2)(φ_0 φ_1 - φ_2 φ_3 + φ_3) / (φ_0^2 - φ_1 φ_3)`, whose
/// coefficient of `x^{2n}/(2n)!` is `♯(P_n)`.
pub fn fp_series(order: usize) -> Result<RationalSeries> {
    if order < 2 {
        return Err(Error::Series(format!("order {order} below 2")));
    }
    let phi = olivier_all(order);
    let num = &(&(&phi[0] * &phi[1]) - &(&phi[2] * &phi[3])) + &phi[3];
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(num.div(&a_denominator(&phi))?.shift(1).scale(&half))
}

pub fn sin_series(order: usize) -> RationalSeries {
    RationalSeries::from_egf(order, |k| match k % 4 {
        1 => BigInt::one(),
        3 => -BigInt::one(),
        _ => BigInt::zero(),
    })
}

pub fn cos_series(order: usize) -> RationalSeries {
    RationalSeries::from_egf(order, |k| match k % 4 {
        0 => BigInt::one(),
        2 => -BigInt::one(),
        _ => BigInt::zero(),
    })
}

/// `sec t + tan t = (1 + sin t) / cos t`.
pub fn sec_tan_series(order: usize) -> RationalSeries {
    let num = &RationalSeries::one(order) + &sin_series(order);
    num.div(&cos_series(order))
        .expect("cos has constant term 1")
}

/// Checks `(num / den) · den = num` exactly up to the truncation order.
pub fn multiply_back_holds(num: &RationalSeries, den: &RationalSeries) -> Result<bool> {
    let q = num.div(den)?;
    Ok(&q * den == num.truncate(q.order()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HurwitzKind {
    Polynomial,
    Rational,
}

/// Hurwitz-type reference counts: `n^{n-3}` for polynomials and
/// `n^{n-3} (2n-2)! / n!` for rational functions.
pub fn hurwitz_reference(n: usize, kind: HurwitzKind) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { min: 3, got: n });
    }
    let base = BigUint::from(n).pow(n as u32 - 3);
    Ok(match kind {
        HurwitzKind::Polynomial => base,
        HurwitzKind::Rational => {
            let num: BigUint = (n + 1..=2 * n - 2).map(BigUint::from).product();
            base * num
        }
    })
}
