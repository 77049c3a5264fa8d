//! Number families, each computed by its own recurrence, closed formula or
//! brute-force count. Parameters (`p`, `q`, `m`, `r`) are polynomials, so
//! they may be bound to integers or left symbolic.
//!
//! Row helpers return `k = 0..=K` for the family's largest `K`; scalar
//! accessors return zero outside the support.

mod generalized;
mod rook;
mod special;
mod triangle;

pub use generalized::{
    falling_factorial_identity_check, gen_bell, gen_stirling_dobinski, gen_stirling_recur,
    gen_stirling_row_dobinski, gen_stirling_row_recur,
};
pub use rook::{rook_numbers, rstirling_bruteforce, FerrersBoard};
pub use special::{special_poly, SpecialFamily};
pub use triangle::{Family, Params, Triangle};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{binomial, factorial, Polynomial, Symbol};

fn at<T: Clone + Default>(row: &[T], k: i64) -> T {
    usize::try_from(k)
        .ok()
        .and_then(|k| row.get(k).cloned())
        .unwrap_or_default()
}

/// Rows `0..=max_n` of `S(n, k)`, with `S(0, 0) = 1`.
pub fn stirling2_rows(max_n: u32) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::from(1)]];
    for n in 1..=max_n as usize {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| at(prev, k as i64) * k + at(prev, k as i64 - 1))
            .collect();
        rows.push(row);
    }
    rows
}

pub fn stirling2_row(n: u32) -> Vec<BigInt> {
    stirling2_rows(n).pop().expect("row n exists")
}

pub fn stirling2(n: u32, k: u32) -> BigInt {
    at(&stirling2_row(n), k as i64)
}

pub fn bell(n: u32) -> BigInt {
    stirling2_row(n).into_iter().sum()
}

/// The signed-sum formula for the `m`-Eulerian numbers, halved.
/// `E(0, 0)_1 = 1` is a special value; the sum gives 1/2 there.
pub fn eulerian_m(n: u32, k: i64, m: i64) -> Result<BigInt> {
    if m < 1 {
        return Err(Error::UnsupportedParameters(format!("m = {m}, need m >= 1")));
    }
    if n == 0 && k == 0 && m == 1 {
        return Ok(BigInt::from(1));
    }
    let mut sum = BigInt::zero();
    for j in 0..=i64::from(n) + 1 {
        let t = BigInt::from(m * (k - j) + 1);
        if t.is_zero() {
            continue;
        }
        let mut term = binomial(i64::from(n) + 1, j) * t.pow(n) * t.signum();
        if j % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    let (half, rem) = sum.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::NonIntegral(format!("E({n},{k})_{m} = {sum}/2")));
    }
    Ok(half)
}

/// `E(n, j)_m` for `j = 0..=n`.
pub fn eulerian_row(n: u32, m: i64) -> Result<Vec<BigInt>> {
    (0..=i64::from(n)).map(|j| eulerian_m(n, j, m)).collect()
}

/// `S_p(n, k)` for `k = 0..=n`, `n >= 1`, from
/// `S_p(n, k) = (k - 1 + p) S_p(n-1, k) + S_p(n-1, k-1)`, `S_p(1, 1) = 1`.
pub fn stirling_p_row(n: u32, p: &Polynomial) -> Vec<Polynomial> {
    assert!(n >= 1, "S_p is indexed from n = 1");
    let mut row = vec![Polynomial::zero(), Polynomial::one()];
    for n in 2..=n as usize {
        row = (0..=n)
            .map(|k| {
                let factor = Polynomial::from_int(k as i64 - 1) + p.clone();
                &factor * &at(&row, k as i64) + at(&row, k as i64 - 1)
            })
            .collect();
        row[0] = Polynomial::zero();
    }
    row
}

pub fn stirling_p(n: u32, k: u32, p: &Polynomial) -> Polynomial {
    at(&stirling_p_row(n, p), k as i64)
}

/// `S_q(n, k)` for `k = 0..=n`, `n >= 1`, from
/// `S_q(n+1, k) = (k - 1 + q^n) S_q(n, k) + S_q(n, k-1)`, `S_q(1, k) = [k = 1]`.
pub fn q_stirling_row(n: u32, q: &Polynomial) -> Vec<Polynomial> {
    assert!(n >= 1, "S_q is indexed from n = 1");
    let mut row = vec![Polynomial::zero(), Polynomial::one()];
    for prev_n in 1..n {
        let qn = q.pow(prev_n);
        row = (0..=prev_n as usize + 1)
            .map(|k| {
                if k == 0 {
                    return Polynomial::zero();
                }
                let factor = Polynomial::from_int(k as i64 - 1) + qn.clone();
                &factor * &at(&row, k as i64) + at(&row, k as i64 - 1)
            })
            .collect();
    }
    row
}

pub fn q_stirling(n: u32, k: u32, q: &Polynomial) -> Polynomial {
    at(&q_stirling_row(n, q), k as i64)
}

/// `W_{m,r}(n, k)` for `k = 0..=n`, from
/// `W(n, k) = (r + k m) W(n-1, k) + W(n-1, k-1)`, `W(0, 0) = 1`.
pub fn whitney_row(n: u32, m: &Polynomial, r: &Polynomial) -> Vec<Polynomial> {
    let mut row = vec![Polynomial::one()];
    for n in 1..=n as usize {
        row = (0..=n)
            .map(|k| {
                let factor = r + &m.scale(&crate::ring::integer(k as i64));
                &factor * &at(&row, k as i64) + at(&row, k as i64 - 1)
            })
            .collect();
    }
    row
}

pub fn whitney(n: u32, k: u32, m: &Polynomial, r: &Polynomial) -> Polynomial {
    at(&whitney_row(n, m, r), k as i64)
}

/// `D_{m,r}(n; x) = sum_k W_{m,r}(n, k) x^k`.
pub fn dowling_poly(n: u32, m: &Polynomial, r: &Polynomial, x: &Symbol) -> Polynomial {
    let x = Polynomial::symbol(x.clone());
    whitney_row(n, m, r)
        .iter()
        .enumerate()
        .map(|(k, w)| w * &x.pow(k as u32))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SfVariant {
    Plain,
    Bar,
    Tilde,
}

/// Stirling-Frobenius rows `k = 0..=n` from
/// `S(n, k) = (m(k+1) - 1) S(n-1, k) + c_k S(n-1, k-1)`, where `c_k` is
/// `1`, `m` or `m k` for the plain, bar and tilde variants. Only `S(0, 0) = 1`
/// is prescribed, so `S(n, 0) = (m - 1)^n`.
pub fn sf_row(n: u32, m: &Polynomial, variant: SfVariant) -> Vec<Polynomial> {
    let mut row = vec![Polynomial::one()];
    for n in 1..=n as usize {
        row = (0..=n)
            .map(|k| {
                let k_int = crate::ring::integer(k as i64);
                let factor = m.scale(&crate::ring::integer(k as i64 + 1)) - Polynomial::one();
                let carry = match variant {
                    SfVariant::Plain => Polynomial::one(),
                    SfVariant::Bar => m.clone(),
                    SfVariant::Tilde => m.scale(&k_int),
                };
                &factor * &at(&row, k as i64) + &carry * &at(&row, k as i64 - 1)
            })
            .collect();
    }
    row
}

pub fn sf_numbers(n: u32, k: u32, m: &Polynomial, variant: SfVariant) -> Polynomial {
    at(&sf_row(n, m, variant), k as i64)
}

/// The Eulerian-sum route:
/// `S(n, k)_m = (m^k k!)^{-1} sum_j E(n, j)_m C(j, n - k)`, then scaled for
/// the bar and tilde variants.
pub fn sf_formula(n: u32, k: u32, m: i64, variant: SfVariant) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for (j, e) in eulerian_row(n, m)?.into_iter().enumerate() {
        sum += e * binomial(j as i64, i64::from(n) - i64::from(k));
    }
    let mk = BigInt::from(m).pow(k);
    let denom = &mk * factorial(k);
    let (plain, rem) = sum.div_rem(&denom);
    if !rem.is_zero() {
        return Err(Error::NonIntegral(format!("SF({n},{k})_{m} = {sum}/{denom}")));
    }
    Ok(match variant {
        SfVariant::Plain => plain,
        SfVariant::Bar => plain * mk,
        SfVariant::Tilde => plain * denom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn polys(v: &[&str]) -> Vec<Polynomial> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn sym(s: &str) -> Polynomial {
        Polynomial::var(s)
    }

    #[test]
    fn stirling_and_bell() {
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(bell(4), BigInt::from(15));
        assert_eq!(bell(7), BigInt::from(877));
        for n in 1..=10 {
            assert_eq!(stirling2(n, 1), BigInt::from(1));
        }
        assert_eq!(stirling2(2, 5), BigInt::zero());
    }

    #[test]
    fn eulerian_values() {
        assert_eq!(eulerian_m(1, 0, 1).unwrap(), BigInt::from(1));
        assert_eq!(eulerian_m(0, 0, 1).unwrap(), BigInt::from(1));
        assert_eq!(eulerian_row(4, 1).unwrap(), ints(&[1, 11, 11, 1, 0]));
        assert!(eulerian_m(2, 0, 0).is_err());
        for m in 1..=4 {
            for n in 0..=6 {
                for k in i64::from(n) + 1..i64::from(n) + 4 {
                    assert!(eulerian_m(n, k, m).unwrap().is_zero(), "E({n},{k})_{m}");
                }
            }
        }
    }

    #[test]
    fn p_stirling_rows() {
        let p = sym("p");
        assert_eq!(stirling_p_row(3, &p), polys(&["0", "p^2", "2*p + 1", "1"]));
        assert_eq!(stirling_p_row(1, &p), polys(&["0", "1"]));
        for n in 1..=8 {
            let at_one: Vec<Polynomial> = stirling_p_row(n, &Polynomial::one());
            let want: Vec<Polynomial> = stirling2_row(n).into_iter().map(Polynomial::from).collect();
            assert_eq!(at_one, want);
            assert_eq!(stirling_p(n, n, &p), Polynomial::one());
        }
    }

    #[test]
    fn q_stirling_rows() {
        let q = sym("q");
        assert_eq!(q_stirling_row(3, &q), polys(&["0", "q^3", "1 + q + q^2", "1"]));
        assert_eq!(q_stirling(1, 1, &q), Polynomial::one());
    }

    #[test]
    fn whitney_rows() {
        let (m, r) = (sym("m"), sym("r"));
        assert_eq!(whitney_row(2, &m, &r), polys(&["r^2", "m + 2*r", "1"]));
        let one = Polynomial::one();
        for n in 1..=8 {
            let want: Vec<Polynomial> = stirling2_row(n).into_iter().map(Polynomial::from).collect();
            assert_eq!(whitney_row(n, &one, &Polynomial::zero()), want);
        }
        let x = Symbol::new("x");
        assert_eq!(dowling_poly(1, &m, &r, &x), "r + x".parse().unwrap());
    }

    #[test]
    fn sf_rows_and_formula() {
        let m = sym("m");
        assert_eq!(sf_row(2, &m, SfVariant::Plain), polys(&["1 - 2*m + m^2", "-2 + 3*m", "1"]));
        for n in 1..=8 {
            let want: Vec<Polynomial> = stirling2_row(n).into_iter().map(Polynomial::from).collect();
            assert_eq!(sf_row(n, &Polynomial::one(), SfVariant::Plain), want);
        }
        for mv in 1..=4i64 {
            let mp = Polynomial::from_int(mv);
            for n in 0..=6 {
                for variant in [SfVariant::Plain, SfVariant::Bar, SfVariant::Tilde] {
                    let row = sf_row(n, &mp, variant);
                    for k in 0..=n {
                        let formula = sf_formula(n, k, mv, variant).unwrap();
                        assert_eq!(row[k as usize], Polynomial::from(formula), "m={mv} n={n} k={k}");
                    }
                }
            }
        }
    }
}
