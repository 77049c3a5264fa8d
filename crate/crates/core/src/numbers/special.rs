use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{binomial, factorial, Polynomial, Rational, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialFamily {
    /// `theta_n(x) = sum_k (n+k)! / ((n-k)! k!) (x/2)^k`.
    Bessel,
    /// `sum_k k! C(n,k)^2 x^(n-k)`.
    LaguerreSquare,
}

impl FromStr for SpecialFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bessel" => Ok(SpecialFamily::Bessel),
            "laguerre-square" => Ok(SpecialFamily::LaguerreSquare),
            _ => Err(Error::UnsupportedParameters(format!("unknown polynomial family `{s}`"))),
        }
    }
}

pub fn special_poly(family: SpecialFamily, n: u32, var: &Symbol) -> Result<Polynomial> {
    let x = Polynomial::symbol(var.clone());
    let mut out = Polynomial::zero();
    for k in 0..=n {
        let c = match family {
            SpecialFamily::Bessel => {
                let c = Rational::new(
                    factorial(n + k),
                    factorial(n - k) * factorial(k) * BigInt::from(2).pow(k),
                );
                if !c.is_integer() {
                    return Err(Error::NonIntegral(format!("theta_{n} coefficient {k} = {c}")));
                }
                Polynomial::constant(c)
            }
            SpecialFamily::LaguerreSquare => {
                let b = binomial(i64::from(n), i64::from(k));
                Polynomial::from(factorial(k) * &b * &b)
            }
        };
        let e = match family {
            SpecialFamily::Bessel => k,
            SpecialFamily::LaguerreSquare => n - k,
        };
        out += &c * &x.pow(e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let y = Symbol::new("y");
        let p = |s: &str| s.parse::<Polynomial>().unwrap();
        assert_eq!(special_poly(SpecialFamily::Bessel, 2, &y).unwrap(), p("1 + 3*y + 3*y^2"));
        assert_eq!(special_poly(SpecialFamily::Bessel, 0, &y).unwrap(), p("1"));
        assert_eq!(special_poly(SpecialFamily::Bessel, 3, &y).unwrap(), p("1 + 6*y + 15*y^2 + 15*y^3"));
        assert_eq!(special_poly(SpecialFamily::LaguerreSquare, 2, &y).unwrap(), p("2 + 4*y + y^2"));
    }
}
