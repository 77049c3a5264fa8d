//! Generalized Stirling numbers `S_{r,s}(n, k)`: the normal-ordering
//! coefficients of `((b†)^r b^s)^n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::at;
use crate::error::{Error, Result};
use crate::ring::{binomial, factorial, falling_factorial, to_falling_factorial_basis, Polynomial, Rational, Symbol};

fn falling(x: i64, k: u32) -> BigInt {
    (0..i64::from(k)).map(|i| BigInt::from(x - i)).product()
}

/// Row `k = 0..=n s` by recurrence, for `s = 1` or `s = r`:
///
/// * `S_{r,1}(n, k) = [k + (n-1)(r-1)] S_{r,1}(n-1, k) + S_{r,1}(n-1, k-1)`
/// * `S_{r,r}(n+1, k) = sum_{p=0..r} C(k+p-r, p) r^(p) S_{r,r}(n, k+p-r)`,
///   with `r^(p)` falling and `S_{r,r}(1, r) = 1`.
pub fn gen_stirling_row_recur(n: u32, r: u32, s: u32) -> Result<Vec<BigInt>> {
    if n == 0 || r == 0 {
        return Err(Error::UnsupportedParameters(format!("n = {n}, r = {r}; both must be >= 1")));
    }
    let (r, n) = (i64::from(r), i64::from(n));
    if i64::from(s) == 1 {
        let mut row = vec![BigInt::zero(), BigInt::one()];
        for m in 2..=n {
            row = (0..=m)
                .map(|k| at(&row, k) * (k + (m - 1) * (r - 1)) + at(&row, k - 1))
                .collect();
            row[0] = BigInt::zero();
        }
        Ok(row)
    } else if i64::from(s) == r {
        let mut row = vec![BigInt::zero(); r as usize + 1];
        row[r as usize] = BigInt::one();
        for m in 1..n {
            row = (0..=(m + 1) * r)
                .map(|k| {
                    (0..=r)
                        .map(|p| binomial(k + p - r, p) * falling(r, p as u32) * at(&row, k + p - r))
                        .sum()
                })
                .collect();
        }
        Ok(row)
    } else {
        Err(Error::UnsupportedParameters(format!(
            "recurrence needs s = 1 or s = r, got r = {r}, s = {s}"
        )))
    }
}

pub fn gen_stirling_recur(n: u32, k: u32, r: u32, s: u32) -> Result<BigInt> {
    Ok(at(&gen_stirling_row_recur(n, r, s)?, i64::from(k)))
}

/// Coefficient of `x^k` in
/// `e^{-x} sum_{j >= s} (1/j!) prod_{i=1..n} (j + (i-1)(r-s))^(s) x^j`.
/// Only `j <= k` contributes, so the sum is finite.
pub fn gen_stirling_dobinski(n: u32, k: u32, r: u32, s: u32) -> Result<BigInt> {
    if r < s {
        return Err(Error::UnsupportedParameters(format!("need r >= s, got r = {r}, s = {s}")));
    }
    let d = i64::from(r) - i64::from(s);
    let mut acc = Rational::zero();
    for j in s..=k {
        let prod: BigInt = (1..=i64::from(n))
            .map(|i| falling(i64::from(j) + (i - 1) * d, s))
            .product();
        let mut term = Rational::new(prod, factorial(j) * factorial(k - j));
        if (k - j) % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    if !acc.is_integer() {
        return Err(Error::NonIntegral(format!("S_({r},{s})({n},{k}) = {acc}")));
    }
    let value = acc.to_integer();
    let lo = if n == 0 { 0 } else { s };
    if !value.is_zero() && (k < lo || k > n * s) {
        return Err(Error::Inconsistent(format!(
            "S_({r},{s})({n},{k}) = {value} outside its support"
        )));
    }
    Ok(value)
}

/// Row `k = 0..=n s` by the series route.
pub fn gen_stirling_row_dobinski(n: u32, r: u32, s: u32) -> Result<Vec<BigInt>> {
    (0..=n * s).map(|k| gen_stirling_dobinski(n, k, r, s)).collect()
}

/// `B_r(n) = sum_k S_{r,r}(n, k)`.
pub fn gen_bell(n: u32, r: u32) -> Result<BigInt> {
    Ok(gen_stirling_row_recur(n, r, r)?.into_iter().sum())
}

/// Expands `prod_{j=1..n} (x + (j-1)(r-s))^(s)` in the falling-factorial
/// basis and compares with the `S_{r,s}(n, .)` row (recurrence route when
/// `s` is 1 or `r`, series route otherwise).
pub fn falling_factorial_identity_check(n: u32, r: u32, s: u32) -> Result<bool> {
    let x = Symbol::new("x");
    let d = i64::from(r) - i64::from(s);
    let shifted = |c: i64| -> Polynomial {
        let ff = falling_factorial(&x, s);
        ff.substitute(&x, &(Polynomial::symbol(x.clone()) + Polynomial::from_int(c)))
    };
    let product = (1..=i64::from(n)).fold(Polynomial::one(), |acc, j| &acc * &shifted((j - 1) * d));
    let coeffs = to_falling_factorial_basis(&product, &x);
    let row = if s == 1 || s == r {
        gen_stirling_row_recur(n, r, s)?
    } else {
        gen_stirling_row_dobinski(n, r, s)?
    };
    let len = coeffs.len().max(row.len());
    Ok((0..len).all(|k| {
        let want = Polynomial::from(at(&row, k as i64));
        coeffs.get(k).cloned().unwrap_or_default() == want
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::stirling2_row;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn worked_rows() {
        assert_eq!(gen_stirling_row_recur(3, 3, 1).unwrap(), ints(&[0, 15, 9, 1]));
        assert_eq!(gen_stirling_row_recur(2, 3, 3).unwrap(), ints(&[0, 0, 0, 6, 18, 9, 1]));
        assert_eq!(gen_stirling_row_dobinski(2, 3, 3).unwrap(), ints(&[0, 0, 0, 6, 18, 9, 1]));
        assert_eq!(gen_stirling_row_dobinski(2, 2, 1).unwrap(), ints(&[0, 2, 1]));
        assert_eq!(gen_bell(2, 3).unwrap(), BigInt::from(34));
        assert_eq!(gen_bell(1, 5).unwrap(), BigInt::from(1));
    }

    #[test]
    fn degenerations() {
        for n in 1..=8 {
            assert_eq!(gen_stirling_row_recur(n, 1, 1).unwrap(), stirling2_row(n));
            assert_eq!(gen_bell(n, 1).unwrap(), crate::numbers::bell(n));
        }
        for n in 1..=6 {
            assert_eq!(gen_stirling_row_dobinski(n, 1, 1).unwrap(), stirling2_row(n));
        }
    }

    #[test]
    fn unsupported_s() {
        assert!(matches!(gen_stirling_row_recur(2, 3, 2), Err(Error::UnsupportedParameters(_))));
        assert!(gen_stirling_dobinski(2, 2, 1, 2).is_err());
    }

    #[test]
    fn falling_identity() {
        assert!(falling_factorial_identity_check(2, 2, 2).unwrap());
        assert!(falling_factorial_identity_check(2, 3, 3).unwrap());
        assert!(falling_factorial_identity_check(3, 3, 2).unwrap());
        for n in 1..=8 {
            assert!(falling_factorial_identity_check(n, 1, 1).unwrap());
        }
    }
}
