//! The root `γ` of `cos z cosh z + 1 = 0` and the ratio diagnostic
//! `r_n = ♯(P_n) γ^{2n} / (n (2n-1)!)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::series::factorial;
use crate::updown::sharp_path;

pub fn gamma_equation(z: f64) -> f64 {
    z.cos() * z.cosh() + 1.0
}

fn gamma_derivative(z: f64) -> f64 {
    z.cos() * z.sinh() - z.sin() * z.cosh()
}

/// Smallest positive root of `cos z cosh z + 1`, with a bracket whose ends
/// have opposite signs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaRoot {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
}

impl GammaRoot {
    pub fn residual(&self) -> f64 {
        gamma_equation(self.value).abs()
    }

    pub fn decimal(&self, digits: usize) -> String {
        format!("{:.*}", digits, self.value)
    }
}

/// Scans `(0, 4]` for the first sign change, then bisects and polishes with
/// Newton steps kept inside the bracket.
pub fn gamma_root() -> GammaRoot {
    let step = 1.0 / 64.0;
    let mut lo = step;
    while gamma_equation(lo + step).signum() == gamma_equation(lo).signum() {
        lo += step;
        assert!(lo < 4.0, "no sign change below 4");
    }
    let mut hi = lo + step;
    let lo_sign = gamma_equation(lo).signum();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if gamma_equation(mid).signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut value = 0.5 * (lo + hi);
    for _ in 0..3 {
        let next = value - gamma_equation(value) / gamma_derivative(value);
        if next > lo && next < hi {
            value = next;
        }
    }
    GammaRoot { value, lo, hi }
}

/// `r_n` for the given `γ`; `♯(P_n)` comes from the determinant.
pub fn asymptotic_ratio_with(n: usize, gamma: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let sharp = BigInt::from(sharp_path(n)?);
    let denom = BigInt::from(n) * factorial(2 * n - 1);
    let exact = BigRational::new(sharp, denom)
        .to_f64()
        .ok_or_else(|| Error::Series("ratio does not fit in f64".into()))?;
    Ok(exact * gamma.powi(2 * n as i32))
}

pub fn asymptotic_ratio(n: usize) -> Result<f64> {
    asymptotic_ratio_with(n, gamma_root().value)
}

/// `(n, r_n, r_{n+1}/r_n)` for `n` in `from..=to`.
pub fn ratio_table(from: usize, to: usize) -> Result<Vec<(usize, f64, f64)>> {
    let gamma = gamma_root().value;
    let rs: Vec<f64> = (from..=to + 1)
        .map(|n| asymptotic_ratio_with(n, gamma))
        .collect::<Result<_>>()?;
    Ok((from..=to)
        .map(|n| {
            let i = n - from;
            (n, rs[i], rs[i + 1] / rs[i])
        })
        .collect())
}
