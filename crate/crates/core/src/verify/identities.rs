use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::Report;
use crate::grammar::Grammar;
use crate::numbers::{
    dowling_poly, eulerian_row, falling_factorial_identity_check, gen_bell, gen_stirling_row_dobinski,
    gen_stirling_row_recur, q_stirling_row, rstirling_bruteforce, sf_formula, sf_row, stirling2_row, stirling_p_row,
    whitney_row, Family, Params, SfVariant, Triangle,
};
use crate::ring::{binomial, factorial, falling_factorial, integer, Polynomial, Rational, Symbol, TruncatedSeries};

fn lift(row: Vec<BigInt>) -> Vec<Polynomial> {
    row.into_iter().map(Polynomial::from).collect()
}

/// `e^{rz} ((e^{mz} - 1)/m)^k / k!` to order `order` in `z`, with `m`, `r`
/// arbitrary polynomials. `(e^{mz} - 1)/m` is expanded as
/// `sum_{n >= 1} m^(n-1) z^n / n!`, so symbolic `m` is fine.
fn whitney_egf(m: &Polynomial, r: &Polynomial, k: u32, order: usize) -> TruncatedSeries {
    let z = Symbol::new("z");
    let exp_rz = (0..=order).map(|n| r.pow(n as u32)).collect();
    let exp_rz = TruncatedSeries::from_egf(z.clone(), exp_rz).expect("free of z");
    let inner = (0..=order)
        .map(|n| if n == 0 { Polynomial::zero() } else { m.pow(n as u32 - 1) })
        .collect();
    let inner = TruncatedSeries::from_egf(z, inner).expect("free of z");
    exp_rz
        .mul(&inner.pow(k))
        .expect("same variable")
        .scale_rational(&Rational::new(BigInt::from(1), factorial(k)))
}

fn random_poly(rng: &mut StdRng) -> Polynomial {
    let (x, y) = (Polynomial::var("x"), Polynomial::var("y"));
    let mut out = Polynomial::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let c = rng.gen_range(-3i64..=3);
        let term = &x.pow(rng.gen_range(0..=2)) * &y.pow(rng.gen_range(0..=2));
        out += term.scale(&integer(c));
    }
    out
}

/// Classical and parametric identities between the number families, for
/// `n <= max_n`. `seed` drives the random inputs of the Leibniz check.
pub fn verify_identities(max_n: u32, seed: u64) -> Report {
    let mut report = Report::new("identities");
    report.param("max_n", max_n);
    report.param("seed", seed);

    // k! S(n,k) = sum_j E(n,j) C(j, n-k)
    for n in 1..=max_n {
        let want: Vec<BigInt> = stirling2_row(n)
            .into_iter()
            .enumerate()
            .map(|(k, s)| s * factorial(k as u32))
            .collect();
        let got = eulerian_row(n, 1).map(|e| {
            (0..=n)
                .map(|k| {
                    e.iter()
                        .enumerate()
                        .map(|(j, ej)| ej * binomial(j as i64, i64::from(n - k)))
                        .sum::<BigInt>()
                })
                .collect::<Vec<_>>()
        });
        match got {
            Ok(got) => report.check_list(format!("eulerian-stirling/n={n}"), &want, &got),
            Err(e) => report.record(format!("eulerian-stirling/n={n}"), String::new(), format!("error: {e}"), false),
        }
    }

    // (x+1)(x+q)...(x+q^(n-1)) = sum_k S_q(n,k) (x+1)^(k) falling
    let (x, q) = (Symbol::new("x"), Polynomial::var("q"));
    let xp = Polynomial::symbol(x.clone());
    let x_plus_1 = &xp + &Polynomial::one();
    for n in 1..=max_n.min(6) {
        let lhs = (0..n).fold(Polynomial::one(), |acc, i| &acc * &(&xp + &q.pow(i)));
        let rhs: Polynomial = q_stirling_row(n, &q)
            .iter()
            .enumerate()
            .map(|(k, c)| c * &falling_factorial(&x, k as u32).substitute(&x, &x_plus_1))
            .sum();
        report.check(format!("q-stirling-definition/n={n}"), &lhs, &rhs);
    }

    // exponential generating function of W_{m,r}(n,k)
    let order = max_n as usize;
    for mv in 1..=3i64 {
        for rv in 0..=3i64 {
            let (m, r) = (Polynomial::from_int(mv), Polynomial::from_int(rv));
            let rows: Vec<Vec<Polynomial>> = (0..=max_n).map(|n| whitney_row(n, &m, &r)).collect();
            for k in 0..=4u32 {
                let series = whitney_egf(&m, &r, k, order);
                let want: Vec<Polynomial> = rows.iter().map(|row| row.get(k as usize).cloned().unwrap_or_default()).collect();
                let got: Vec<Polynomial> = (0..=order).map(|n| series.egf_coefficient(n)).collect();
                report.check_list(format!("whitney-egf/m={mv}/r={rv}/k={k}"), &want, &got);
            }
        }
    }
    let (m, r) = (Polynomial::var("m"), Polynomial::var("r"));
    for k in 0..=4u32 {
        let series = whitney_egf(&m, &r, k, order);
        let want: Vec<Polynomial> = (0..=max_n)
            .map(|n| whitney_row(n, &m, &r).get(k as usize).cloned().unwrap_or_default())
            .collect();
        let got: Vec<Polynomial> = (0..=order).map(|n| series.egf_coefficient(n)).collect();
        report.check_list(format!("whitney-egf/symbolic/k={k}"), &want, &got);
    }

    // W_{1,p}(n,k) = S_p(n+1,k+1); W_{1,0} = S
    let p = Polynomial::var("p");
    for n in 0..=max_n {
        let w = whitney_row(n, &Polynomial::one(), &p);
        let s = stirling_p_row(n + 1, &p);
        report.check_list(format!("whitney-1-p/n={n}"), &w, &s[1..]);
        let w0 = whitney_row(n, &Polynomial::one(), &Polynomial::zero());
        report.check_list(format!("whitney-1-0/n={n}"), &lift(stirling2_row(n)), &w0);
    }

    // r-Stirling numbers by exhaustive set partitions
    for rv in 0..=3u32 {
        for n in 0..=max_n.min(6) {
            let want = whitney_row(n, &Polynomial::one(), &Polynomial::from_int(i64::from(rv)));
            let got: Result<Vec<Polynomial>, _> =
                (0..=n).map(|k| rstirling_bruteforce(n, k, rv).map(Polynomial::from)).collect();
            match got {
                Ok(got) => report.check_list(format!("r-stirling-bruteforce/r={rv}/n={n}"), &want, &got),
                Err(e) => report.record(format!("r-stirling-bruteforce/r={rv}/n={n}"), String::new(), format!("error: {e}"), false),
            }
        }
    }

    // D(n+1; x) = r D(n; x) + x sum_k C(n,k) m^(n-k) D(k; x)
    let xs = Symbol::new("x");
    let dowling: Vec<Polynomial> = (0..=max_n).map(|n| dowling_poly(n, &m, &r, &xs)).collect();
    for n in 0..max_n as usize {
        let sum: Polynomial = (0..=n)
            .map(|k| (&m.pow((n - k) as u32) * &dowling[k]).scale(&Rational::from_integer(binomial(n as i64, k as i64))))
            .sum();
        let rhs = &(&r * &dowling[n]) + &(&xp * &sum);
        report.check(format!("dowling-recurrence/n={}", n + 1), &dowling[n + 1], &rhs);
    }
    // D(n; x) = (r + x) D(n-1; x) + m x D'(n-1; x)
    for n in 1..=max_n as usize {
        let prev = &dowling[n - 1];
        let rhs = &(&(&r + &xp) * prev) + &(&(&m * &xp) * &prev.partial_derivative(&xs));
        report.check(format!("dowling-derivative/n={n}"), &dowling[n], &rhs);
    }

    // series route against recurrences
    for rv in 1..=4u32 {
        for n in 1..=max_n.min(6) {
            for s in [1, rv] {
                report.check_result(
                    format!("dobinski/r={rv}/s={s}/n={n}"),
                    gen_stirling_row_recur(n, rv, s).map(|r| format!("{:?}", r)),
                    gen_stirling_row_dobinski(n, rv, s).map(|r| format!("{:?}", r)),
                );
                if s == rv {
                    break;
                }
            }
        }
    }
    for rv in 1..=3u32 {
        for s in 0..=rv {
            for n in 1..=4u32 {
                report.check_result(
                    format!("falling-factorial/n={n}/r={rv}/s={s}"),
                    Ok(true),
                    falling_factorial_identity_check(n, rv, s),
                );
            }
        }
    }
    report.check_result("generalized-bell/B_3(2)", Ok(BigInt::from(34)), gen_bell(2, 3));

    // Stirling-Frobenius: scaled variants, and the Eulerian-sum route
    for n in 0..=max_n {
        let plain = sf_row(n, &m, SfVariant::Plain);
        let scaled = |c: fn(u32) -> Polynomial| -> Vec<Polynomial> {
            plain.iter().enumerate().map(|(k, v)| &c(k as u32) * v).collect()
        };
        fn mk(k: u32) -> Polynomial {
            Polynomial::var("m").pow(k)
        }
        fn mk_fact(k: u32) -> Polynomial {
            &Polynomial::var("m").pow(k) * &Polynomial::from(factorial(k))
        }
        report.check_list(format!("sf-bar/n={n}"), &scaled(mk), &sf_row(n, &m, SfVariant::Bar));
        report.check_list(format!("sf-tilde/n={n}"), &scaled(mk_fact), &sf_row(n, &m, SfVariant::Tilde));
        for mv in 1..=4i64 {
            let rec = sf_row(n, &Polynomial::from_int(mv), SfVariant::Plain);
            let formula: Result<Vec<Polynomial>, _> =
                (0..=n).map(|k| sf_formula(n, k, mv, SfVariant::Plain).map(Polynomial::from)).collect();
            match formula {
                Ok(f) => report.check_list(format!("sf-formula/m={mv}/n={n}"), &rec, &f),
                Err(e) => report.record(format!("sf-formula/m={mv}/n={n}"), String::new(), format!("error: {e}"), false),
            }
        }
    }

    // D^n(uv) = sum_k C(n,k) D^k(u) D^(n-k)(v)
    let mut rng = StdRng::seed_from_u64(seed);
    let grammars = [
        ("stirling", Grammar::stirling()),
        ("p", Grammar::shifted_stirling(&p)),
        ("dowling", Grammar::dowling(&m, &r)),
        ("sf-tilde", "x -> (m - 1)*x + m*x*y; y -> m*(y + y^2)".parse().expect("built-in grammar")),
    ];
    for (name, g) in &grammars {
        for trial in 0..3 {
            let (u, v) = (random_poly(&mut rng), random_poly(&mut rng));
            let n = 5usize.min(max_n as usize);
            let du = g.derivatives(&u, n);
            let dv = g.derivatives(&v, n);
            let rhs: Polynomial = (0..=n)
                .map(|k| (&du[k] * &dv[n - k]).scale(&Rational::from_integer(binomial(n as i64, k as i64))))
                .sum();
            report.check(format!("leibniz/{name}/trial={trial}/u={u}/v={v}"), &g.derive_n(&(&u * &v), n), &rhs);
        }
    }

    // every triangle, at its default parameters, has integer-polynomial entries
    for family in Family::ALL {
        let id = format!("integral/{}", family.name());
        match Triangle::build(family, max_n, &Params::new()) {
            Ok(t) => {
                let bad: Vec<String> = t
                    .rows()
                    .flat_map(|(_, row)| row.iter())
                    .filter(|e| !e.is_integral())
                    .map(|e| e.to_string())
                    .collect();
                report.record(id, "integral entries".into(), if bad.is_empty() { "integral entries".into() } else { bad.join(", ") }, bad.is_empty());
            }
            Err(e) => report.record(id, "integral entries".into(), format!("error: {e}"), false),
        }
    }

    // degenerations
    for n in 1..=max_n {
        let s = lift(stirling2_row(n));
        report.check_list(format!("p=1/n={n}"), &s, &stirling_p_row(n, &Polynomial::one()));
        report.check_list(format!("q=1/n={n}"), &s, &q_stirling_row(n, &Polynomial::one()));
        report.check_list(format!("sf-m=1/n={n}"), &s, &sf_row(n, &Polynomial::one(), SfVariant::Plain));
    }

    report
}
