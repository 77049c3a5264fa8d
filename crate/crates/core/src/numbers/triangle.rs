use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{
    eulerian_row, gen_stirling_row_dobinski, gen_stirling_row_recur, q_stirling_row, sf_row, special_poly,
    stirling2_row, stirling_p_row, whitney_row, SfVariant, SpecialFamily,
};
use crate::error::{Error, Result};
use crate::ring::{Polynomial, Symbol};

/// Parameter bindings by name; unbound parameters stay symbolic.
pub type Params = BTreeMap<String, Polynomial>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Stirling2,
    Eulerian,
    StirlingP,
    GenStirling,
    QStirling,
    Whitney,
    Sf,
    SfBar,
    SfTilde,
    Bessel,
    LaguerreSquare,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Stirling2,
        Family::Eulerian,
        Family::StirlingP,
        Family::GenStirling,
        Family::QStirling,
        Family::Whitney,
        Family::Sf,
        Family::SfBar,
        Family::SfTilde,
        Family::Bessel,
        Family::LaguerreSquare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Stirling2 => "stirling2",
            Family::Eulerian => "eulerian",
            Family::StirlingP => "stirling-p",
            Family::GenStirling => "gen-stirling",
            Family::QStirling => "q-stirling",
            Family::Whitney => "whitney",
            Family::Sf => "sf",
            Family::SfBar => "sf-bar",
            Family::SfTilde => "sf-tilde",
            Family::Bessel => "bessel",
            Family::LaguerreSquare => "laguerre-square",
        }
    }

    /// Parameter names the family reads.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            Family::Stirling2 | Family::Bessel | Family::LaguerreSquare => &[],
            Family::Eulerian | Family::Sf | Family::SfBar | Family::SfTilde => &["m"],
            Family::StirlingP => &["p"],
            Family::GenStirling => &["r", "s"],
            Family::QStirling => &["q"],
            Family::Whitney => &["m", "r"],
        }
    }

    /// Smallest row index the family is defined for.
    pub fn first_n(self) -> u32 {
        match self {
            Family::StirlingP | Family::GenStirling | Family::QStirling => 1,
            _ => 0,
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::UnsupportedParameters(format!("unknown family `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

/// Rows `first_n..=max_n` of an `(n, k)`-indexed family, row `n` listing
/// `k = 0..=K(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangle {
    family: Family,
    params: Params,
    first_n: u32,
    rows: Vec<Vec<Polynomial>>,
}

fn int_param(params: &Params, name: &str, default: i64, min: i64) -> Result<i64> {
    let v = match params.get(name) {
        None => default,
        Some(p) => p
            .integer_value()
            .and_then(|v| i64::try_from(v).ok())
            .ok_or_else(|| Error::UnsupportedParameters(format!("`{name}` must be an integer, got {p}")))?,
    };
    if v < min {
        return Err(Error::UnsupportedParameters(format!("`{name}` must be >= {min}, got {v}")));
    }
    Ok(v)
}

fn poly_param(params: &Params, name: &str) -> Polynomial {
    params.get(name).cloned().unwrap_or_else(|| Polynomial::var(name))
}

fn lift(row: Vec<num_bigint::BigInt>) -> Vec<Polynomial> {
    row.into_iter().map(Polynomial::from).collect()
}

impl Triangle {
    pub fn build(family: Family, max_n: u32, params: &Params) -> Result<Self> {
        if let Some(k) = params.keys().find(|k| !family.parameters().contains(&k.as_str())) {
            return Err(Error::UnsupportedParameters(format!(
                "family `{}` takes no parameter `{k}`",
                family.name()
            )));
        }
        let first_n = family.first_n();
        let mut bound = Params::new();
        let ns = first_n..=max_n;
        let rows: Vec<Vec<Polynomial>> = match family {
            Family::Stirling2 => ns.map(|n| lift(stirling2_row(n))).collect(),
            Family::Eulerian => {
                let m = int_param(params, "m", 1, 1)?;
                bound.insert("m".into(), Polynomial::from_int(m));
                ns.map(|n| eulerian_row(n, m).map(lift)).collect::<Result<_>>()?
            }
            Family::StirlingP => {
                let p = poly_param(params, "p");
                bound.insert("p".into(), p.clone());
                ns.map(|n| stirling_p_row(n, &p)).collect()
            }
            Family::GenStirling => {
                let r = int_param(params, "r", 2, 1)?;
                let s = int_param(params, "s", r, 0)?;
                if s > r {
                    return Err(Error::UnsupportedParameters(format!("need r >= s, got r = {r}, s = {s}")));
                }
                bound.insert("r".into(), Polynomial::from_int(r));
                bound.insert("s".into(), Polynomial::from_int(s));
                let (r, s) = (r as u32, s as u32);
                ns.map(|n| {
                    if s == 1 || s == r {
                        gen_stirling_row_recur(n, r, s).map(lift)
                    } else {
                        gen_stirling_row_dobinski(n, r, s).map(lift)
                    }
                })
                .collect::<Result<_>>()?
            }
            Family::QStirling => {
                let q = poly_param(params, "q");
                bound.insert("q".into(), q.clone());
                ns.map(|n| q_stirling_row(n, &q)).collect()
            }
            Family::Whitney => {
                let (m, r) = (poly_param(params, "m"), poly_param(params, "r"));
                bound.insert("m".into(), m.clone());
                bound.insert("r".into(), r.clone());
                ns.map(|n| whitney_row(n, &m, &r)).collect()
            }
            Family::Sf | Family::SfBar | Family::SfTilde => {
                let m = poly_param(params, "m");
                bound.insert("m".into(), m.clone());
                let variant = match family {
                    Family::Sf => SfVariant::Plain,
                    Family::SfBar => SfVariant::Bar,
                    _ => SfVariant::Tilde,
                };
                ns.map(|n| sf_row(n, &m, variant)).collect()
            }
            Family::Bessel | Family::LaguerreSquare => {
                let which = if family == Family::Bessel {
                    SpecialFamily::Bessel
                } else {
                    SpecialFamily::LaguerreSquare
                };
                let x = Symbol::new("x");
                ns.map(|n| {
                    let mut row = special_poly(which, n, &x)?.coefficients_in(&x);
                    row.resize(n as usize + 1, Polynomial::zero());
                    Ok(row)
                })
                .collect::<Result<_>>()?
            }
        };
        Ok(Triangle {
            family,
            params: bound,
            first_n,
            rows,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Effective bindings, defaults included.
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn first_n(&self) -> u32 {
        self.first_n
    }

    /// `(n, row)` pairs.
    pub fn rows(&self) -> impl Iterator<Item = (u32, &[Polynomial])> + '_ {
        self.rows.iter().enumerate().map(|(i, r)| (self.first_n + i as u32, r.as_slice()))
    }

    pub fn row(&self, n: u32) -> Option<&[Polynomial]> {
        n.checked_sub(self.first_n)
            .and_then(|i| self.rows.get(i as usize))
            .map(Vec::as_slice)
    }

    pub fn entry(&self, n: u32, k: u32) -> Polynomial {
        self.row(n)
            .and_then(|r| r.get(k as usize).cloned())
            .unwrap_or_default()
    }

    fn params_text(&self) -> String {
        let parts: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(";")
    }

    /// `family,params` header, then one `n,k,value` line per entry.
    pub fn to_csv(&self) -> String {
        let mut out = format!("{},{}\n", self.family.name(), self.params_text());
        for (n, row) in self.rows() {
            for (k, v) in row.iter().enumerate() {
                let cell = v.to_string();
                if cell.contains(',') {
                    writeln!(out, "{n},{k},\"{cell}\"").unwrap();
                } else {
                    writeln!(out, "{n},{k},{cell}").unwrap();
                }
            }
        }
        out
    }

    /// One line per row: `n: v_0, v_1, ...`.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let params = self.params_text();
        if params.is_empty() {
            writeln!(out, "{}", self.family.name()).unwrap();
        } else {
            writeln!(out, "{} ({params})", self.family.name()).unwrap();
        }
        for (n, row) in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{n}: {}", cells.join(", ")).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_p_csv() {
        let t = Triangle::build(Family::StirlingP, 3, &Params::new()).unwrap();
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "stirling-p,p=p");
        assert!(lines.contains(&"3,2,1 + 2*p"));
        assert_eq!(t.entry(3, 1), "p^2".parse().unwrap());
        assert_eq!(t.entry(9, 1), Polynomial::zero());
    }

    #[test]
    fn bound_parameters() {
        let mut params = Params::new();
        params.insert("r".into(), Polynomial::from_int(3));
        let t = Triangle::build(Family::GenStirling, 2, &params).unwrap();
        let row: Vec<String> = t.row(2).unwrap().iter().map(|v| v.to_string()).collect();
        assert_eq!(row, ["0", "0", "0", "6", "18", "9", "1"]);
        params.insert("s".into(), Polynomial::from_int(2));
        let t = Triangle::build(Family::GenStirling, 2, &params).unwrap();
        assert_eq!(t.entry(2, 3), Polynomial::from_int(6));
        assert!(crate::numbers::falling_factorial_identity_check(2, 3, 2).unwrap());
    }

    #[test]
    fn rejects_bad_parameters() {
        let mut params = Params::new();
        params.insert("z".into(), Polynomial::one());
        assert!(Triangle::build(Family::Stirling2, 3, &params).is_err());
        let mut params = Params::new();
        params.insert("m".into(), Polynomial::var("m"));
        assert!(Triangle::build(Family::Eulerian, 3, &params).is_err());
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn every_family_builds() {
        for f in Family::ALL {
            let t = Triangle::build(f, 4, &Params::new()).unwrap();
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
            assert!(!t.to_plain().is_empty());
            assert!(serde_json::to_string(&t).is_ok());
        }
    }
}
