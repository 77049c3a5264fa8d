use super::Report;
use crate::grammar::{shift_apply, Grammar, LAMBDA};
use crate::ring::{Polynomial, Symbol, TruncatedSeries};

/// `exp(c * lambda)` to `order`.
fn exp_lambda(c: &Polynomial, order: usize) -> TruncatedSeries {
    let egf = (0..=order).map(|n| c.pow(n as u32)).collect();
    TruncatedSeries::from_egf(Symbol::new(LAMBDA), egf).expect("free of lambda")
}

/// `exp((e^lambda - 1) y)` to `order`, built by series composition.
fn stirling_flow(order: usize) -> TruncatedSeries {
    let y = Polynomial::var("y");
    let mut inner = exp_lambda(&Polynomial::one(), order);
    inner = inner
        .sub(&TruncatedSeries::from_polynomial(&Polynomial::one(), Symbol::new(LAMBDA), order))
        .expect("same variable");
    inner.scale(&y).expect("free of lambda").exp().expect("zero constant term")
}

/// The shift operator of the Stirling grammar on `x`, `xy` and `y^m` against
/// closed forms, to `lambda^order`.
pub fn verify_shift(order: usize) -> Report {
    let mut report = Report::new("shift");
    report.param("order", order);
    let g = Grammar::stirling();
    let (x, y) = (Polynomial::var("x"), Polynomial::var("y"));
    let flow = stirling_flow(order);

    let mut check = |id: String, start: &Polynomial, want: TruncatedSeries| {
        report.check_result(id, Ok(want), shift_apply(&g, start, order));
    };

    check("e^{lambda D}(x)".into(), &x, flow.scale(&x).expect("free of lambda"));
    let xy = &x * &y;
    let want = exp_lambda(&Polynomial::one(), order)
        .mul(&flow)
        .and_then(|s| s.scale(&xy))
        .expect("same variable");
    check("e^{lambda D}(xy)".into(), &xy, want);
    for m in 0..=4u32 {
        let ym = y.pow(m);
        let want = exp_lambda(&Polynomial::from_int(m), order).scale(&ym).expect("free of lambda");
        check(format!("e^{{lambda D}}(y^{m})"), &ym, want);
    }

    report
}
