use std::f64::consts::PI;
use std::fmt;

use hyp6_exact::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::simplex::{MAX_DIM, MIN_DIM};
use crate::CoxeterError;

/// A rational multiple of π^power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiMultiple {
    pub coeff: BigRational,
    pub power: u32,
}

impl PiMultiple {
    pub fn value(&self) -> f64 {
        self.coeff.to_f64().unwrap_or(f64::NAN) * PI.powi(self.power as i32)
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.coeff.numer();
        let den = self.coeff.denom();
        let pi = match self.power {
            0 => String::new(),
            1 => "pi".to_string(),
            k => format!("pi^{k}"),
        };
        let head = if pi.is_empty() {
            num.to_string()
        } else if num.is_one() {
            pi
        } else if *num == -BigInt::one() {
            format!("-{pi}")
        } else {
            format!("{num}*{pi}")
        };
        if den.is_one() {
            write!(f, "{head}")
        } else {
            write!(f, "{head}/{den}")
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Volume {
    Exact(PiMultiple),
    Numeric { value: f64, expression: String },
}

impl Volume {
    pub fn value(&self) -> f64 {
        match self {
            Volume::Exact(p) => p.value(),
            Volume::Numeric { value, .. } => *value,
        }
    }
}

impl fmt::Display for Volume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Volume::Exact(p) => p.fmt(f),
            Volume::Numeric { value, expression } => write!(f, "{expression} = {value:.15}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupConstants {
    pub dim: usize,
    pub sigma_order: BigInt,
    /// [Γⁿ : Γ₂ⁿ].
    pub index_gamma2: BigInt,
    /// covol(PO_{n,1}ℤ) = vol(Δⁿ).
    pub covolume: Volume,
    pub vol_pn: Volume,
    /// κ_n = (−2π)^{n/2}/(n−1)!!, even n only.
    pub kappa: Option<PiMultiple>,
    pub euler_char_gamma: BigRational,
    pub euler_char_gamma2: BigRational,
}

fn check_dim(n: usize) -> Result<(), CoxeterError> {
    if (MIN_DIM..=MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(CoxeterError::DimensionOutOfRange(n))
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * big(n - i) / big(i + 1);
    }
    acc
}

/// Bernoulli number B_m with B₁ = −1/2, from Σ_{j≤m} C(m+1,j)B_j = 0.
pub fn bernoulli(m: u64) -> BigRational {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for k in 1..=m {
        let s = (0..k).fold(BigRational::zero(), |acc, j| {
            acc + BigRational::from(binomial(k + 1, j)) * &b[j as usize]
        });
        b.push(-s / BigRational::from(big(k + 1)));
    }
    b.pop().unwrap()
}

/// |Σⁿ| for 2 ≤ n ≤ 8.
pub fn sigma_order(n: usize) -> Result<u64, CoxeterError> {
    check_dim(n)?;
    Ok([2, 12, 120, 1920, 51840, 2903040, 696729600][n - 2])
}

/// [Γⁿ : Γ₂ⁿ] = ∏(2^i − ε(i)) / (2^{n−1} + Re (1+i)^{n−1}), ε(i) = 1 for even i.
pub fn index_gamma2(n: usize) -> Result<BigInt, CoxeterError> {
    check_dim(n)?;
    let num = (1..=n as u32).fold(BigInt::one(), |acc, i| {
        acc * (BigInt::from(2).pow(i) - BigInt::from(u32::from(i % 2 == 0)))
    });
    // (1+i)^{n-1} as a Gaussian integer
    let (mut re, mut im) = (BigInt::one(), BigInt::zero());
    for _ in 0..n - 1 {
        let r = &re - &im;
        im += &re;
        re = r;
    }
    let den = BigInt::from(2).pow(n as u32 - 1) + re;
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

fn double_factorial(k: u64) -> BigInt {
    (1..=k).rev().step_by(2).fold(BigInt::one(), |a, x| a * big(x))
}

fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, x| a * big(x))
}

/// Catalan's constant L(2) by a Ramanujan series.
pub fn catalan() -> f64 {
    // G = π/8 ln(2+√3) + 3/8 Σ (k!)²/((2k)!(2k+1)²)
    let mut s = 0.0;
    let mut ratio = 1.0; // (k!)²/(2k)!
    for k in 0..60u32 {
        let k = f64::from(k);
        s += ratio / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
        ratio *= (k + 1.0) / (2.0 * (2.0 * k + 1.0));
    }
    PI / 8.0 * (2.0 + 3f64.sqrt()).ln() + 3.0 / 8.0 * s
}

/// ζ(3) = 5/2 Σ (−1)^{k+1} / (k³ C(2k,k)).
pub fn zeta3() -> f64 {
    let mut s = 0.0;
    let mut c = 1.0; // C(2k,k)
    for k in 1..60u32 {
        let kf = f64::from(k);
        c *= 2.0 * (2.0 * kf - 1.0) / kf;
        let t = 1.0 / (kf * kf * kf * c);
        s += if k % 2 == 1 { t } else { -t };
    }
    2.5 * s
}

/// L(4) = 1 − 1/3⁴ + 1/5⁴ − ⋯, summed until terms drop below 1e-20.
pub fn dirichlet_beta4() -> f64 {
    let mut s = 0.0;
    let mut k = 0u32;
    loop {
        let d = f64::from(2 * k + 1);
        let t = 1.0 / (d * d * d * d);
        if t < 1e-20 {
            break;
        }
        // sum from the far tail would be more stable; 1e-16 relative is ample
        s += if k % 2 == 0 { t } else { -t };
        k += 1;
    }
    s
}

fn odd_volume(n: usize) -> Volume {
    let (value, expression) = match n {
        3 => (catalan(), "L(2)"),
        5 => (7.0 * zeta3() / 8.0, "7*zeta(3)/8"),
        _ => (8.0 * dirichlet_beta4(), "8*L(4)"),
    };
    Volume::Numeric {
        value,
        expression: expression.to_string(),
    }
}

pub fn constants(n: usize) -> Result<GroupConstants, CoxeterError> {
    check_dim(n)?;
    let sigma = BigInt::from(sigma_order(n)?);
    let index = index_gamma2(n)?;
    if n % 2 == 1 {
        let vol = odd_volume(n);
        let covol = vol.value() / sigma.to_f64().unwrap_or(f64::NAN);
        let expression = match &vol {
            Volume::Numeric { expression, .. } => format!("({expression})/{sigma}"),
            Volume::Exact(_) => unreachable!(),
        };
        // odd-dimensional lattices have vanishing Euler characteristic
        return Ok(GroupConstants {
            dim: n,
            sigma_order: sigma,
            index_gamma2: index,
            covolume: Volume::Numeric {
                value: covol,
                expression,
            },
            vol_pn: vol,
            kappa: None,
            euler_char_gamma: BigRational::zero(),
            euler_char_gamma2: BigRational::zero(),
        });
    }
    let h = (n / 2) as u64;
    let twist = if n == 2 || n == 8 { 1i64 } else { -1 };
    let mut c = BigRational::new(BigInt::from(2).pow(h as u32) + twist, factorial(n as u64));
    for k in 1..=h {
        c *= bernoulli(2 * k).abs();
    }
    let covolume = PiMultiple {
        coeff: c.clone(),
        power: h as u32,
    };
    let vol = PiMultiple {
        coeff: &c * BigRational::from(sigma.clone()),
        power: h as u32,
    };
    let kappa = PiMultiple {
        coeff: BigRational::new(BigInt::from(-2).pow(h as u32), double_factorial(n as u64 - 1)),
        power: h as u32,
    };
    let chi = &c / &kappa.coeff;
    let chi2 = &chi * BigRational::from(index.clone());
    Ok(GroupConstants {
        dim: n,
        sigma_order: sigma,
        index_gamma2: index,
        covolume: Volume::Exact(covolume),
        vol_pn: Volume::Exact(vol),
        kappa: Some(kappa),
        euler_char_gamma: chi,
        euler_char_gamma2: chi2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(6), q(1, 42));
        assert_eq!(bernoulli(8), q(-1, 30));
        assert_eq!(bernoulli(12), q(-691, 2730));
        assert!(bernoulli(7).is_zero());
    }

    #[test]
    fn index_matches_sigma_order() {
        for n in 2..=7 {
            assert_eq!(index_gamma2(n).unwrap(), BigInt::from(sigma_order(n).unwrap()));
        }
        assert_eq!(index_gamma2(8).unwrap() * 2, BigInt::from(sigma_order(8).unwrap()));
    }

    #[test]
    fn display_forms() {
        let c = constants(6).unwrap();
        assert_eq!(c.vol_pn.to_string(), "pi^3/15");
        assert_eq!(constants(2).unwrap().vol_pn.to_string(), "pi/2");
        assert_eq!(constants(4).unwrap().vol_pn.to_string(), "pi^2/12");
        assert_eq!(constants(8).unwrap().vol_pn.to_string(), "136*pi^4/105");
        assert_eq!(c.kappa.unwrap().to_string(), "-8*pi^3/15");
    }
}
