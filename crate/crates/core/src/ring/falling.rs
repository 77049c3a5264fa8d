use num_bigint::BigInt;
use num_traits::Zero;

use super::{binomial, factorial, Polynomial, Rational, Symbol};

/// `v(v-1)...(v-k+1)`, with the empty product for `k = 0`.
pub fn falling_factorial(v: &Symbol, k: u32) -> Polynomial {
    let x = Polynomial::symbol(v.clone());
    (0..k).fold(Polynomial::one(), |acc, j| {
        &acc * &(&x - &Polynomial::from_int(j))
    })
}

/// Coefficients `c_k` (free of `v`) with `a = sum_k c_k * v^(k falling)`.
///
/// Uses Newton's forward-difference formula `c_k = (Delta^k a)(0) / k!`,
/// evaluating `a` at `v = 0, 1, ..., deg`. The result always has
/// `deg_v(a) + 1` entries (a single zero entry for the zero polynomial).
pub fn to_falling_factorial_basis(a: &Polynomial, v: &Symbol) -> Vec<Polynomial> {
    let d = a.degree_in(v) as i64;
    let values: Vec<Polynomial> = (0..=d)
        .map(|i| a.substitute(v, &Polynomial::from_int(i)))
        .collect();
    (0..=d)
        .map(|k| {
            let mut diff = Polynomial::zero();
            for (i, value) in values.iter().enumerate().take(k as usize + 1) {
                let sign: i64 = if (k - i as i64) % 2 == 0 { 1 } else { -1 };
                let w = binomial(k, i as i64) * sign;
                if !w.is_zero() {
                    diff += value.scale(&Rational::from_integer(w));
                }
            }
            diff.scale(&Rational::new(BigInt::from(1), factorial(k as u32)))
        })
        .collect()
}

/// Inverse of [`to_falling_factorial_basis`].
pub fn from_falling_factorial_basis(coeffs: &[Polynomial], v: &Symbol) -> Polynomial {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c * &falling_factorial(v, k as u32))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Polynomial> {
        v.iter().map(|&n| Polynomial::from_int(n)).collect()
    }

    #[test]
    fn square_in_falling_basis() {
        let x = Symbol::new("x");
        assert_eq!(to_falling_factorial_basis(&p("x^2"), &x), ints(&[0, 1, 1]));
    }

    #[test]
    fn squared_falling_factorial() {
        // (x(x-1))^2 = 2 x^(2) + 4 x^(3) + x^(4), checked by hand:
        // at x = 2: 4 = 2*2; at x = 3: 36 = 2*6 + 4*6; at x = 4: 144 = 24 + 96 + 24.
        let x = Symbol::new("x");
        let sq = falling_factorial(&x, 2).pow(2);
        assert_eq!(to_falling_factorial_basis(&sq, &x), ints(&[0, 0, 2, 4, 1]));
    }

    #[test]
    fn constants_and_parameters() {
        let x = Symbol::new("x");
        assert_eq!(to_falling_factorial_basis(&p("5"), &x), ints(&[5]));
        assert_eq!(to_falling_factorial_basis(&Polynomial::zero(), &x), ints(&[0]));
        // (x + q) = q * x^(0) + 1 * x^(1)
        assert_eq!(to_falling_factorial_basis(&p("x + q"), &x), vec![p("q"), p("1")]);
    }

    #[test]
    fn falling_factorial_expansion() {
        let x = Symbol::new("x");
        assert_eq!(falling_factorial(&x, 3), p("x^3 - 3*x^2 + 2*x"));
        assert_eq!(falling_factorial(&x, 0), Polynomial::one());
    }
}
