use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};

use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Outcome of one suite. `notes` hold informational comparisons that do not
/// count towards `pass`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    suite: String,
    params: BTreeMap<String, String>,
    cases: Vec<Case>,
    pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<Case>,
}

pub(crate) fn list<T: Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(", "))
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            params: BTreeMap::new(),
            cases: Vec::new(),
            pass: true,
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Display) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn record(&mut self, id: impl Into<String>, expected: String, actual: String, pass: bool) {
        self.pass &= pass;
        self.cases.push(Case {
            id: id.into(),
            expected,
            actual,
            pass,
        });
    }

    pub fn check<T: PartialEq + Display>(&mut self, id: impl Into<String>, expected: &T, actual: &T) {
        self.record(id, expected.to_string(), actual.to_string(), expected == actual);
    }

    pub fn check_list<T: PartialEq + Display>(&mut self, id: impl Into<String>, expected: &[T], actual: &[T]) {
        self.record(id, list(expected), list(actual), expected == actual);
    }

    /// Records an error on either side as a failure.
    pub fn check_result<T: PartialEq + Display>(
        &mut self,
        id: impl Into<String>,
        expected: Result<T>,
        actual: Result<T>,
    ) {
        match (expected, actual) {
            (Ok(e), Ok(a)) => self.check(id, &e, &a),
            (e, a) => self.record(id, render_err(&e), render_err(&a), false),
        }
    }

    pub fn note(&mut self, id: impl Into<String>, expected: String, actual: String, agree: bool) {
        self.notes.push(Case {
            id: id.into(),
            expected,
            actual,
            pass: agree,
        });
    }

    pub fn suite(&self) -> &str {
        &self.suite
    }

    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    pub fn cases(&self) -> &[Case] {
        &self.cases
    }

    pub fn notes(&self) -> &[Case] {
        &self.notes
    }

    pub fn pass(&self) -> bool {
        self.pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> + '_ {
        self.cases.iter().filter(|c| !c.pass)
    }

    /// Human-readable summary: a header, one line per case, failures with
    /// both sides, and the notes.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let passed = self.cases.iter().filter(|c| c.pass).count();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        writeln!(out, "suite {}: {verdict} ({passed}/{} cases)", self.suite, self.cases.len()).unwrap();
        if !self.params.is_empty() {
            let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(out, "  params: {}", params.join(", ")).unwrap();
        }
        for c in &self.cases {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            writeln!(out, "  {mark} {}", c.id).unwrap();
            if !c.pass {
                writeln!(out, "       expected: {}", c.expected).unwrap();
                writeln!(out, "       actual:   {}", c.actual).unwrap();
            }
        }
        for n in &self.notes {
            let mark = if n.pass { "agree" } else { "differ" };
            writeln!(out, "  note ({mark}) {}", n.id).unwrap();
            writeln!(out, "       expected: {}", n.expected).unwrap();
            writeln!(out, "       actual:   {}", n.actual).unwrap();
        }
        out
    }
}

fn render_err<T: Display>(r: &Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn pass_tracks_cases_not_notes() {
        let mut r = Report::new("t");
        r.check("a", &1, &1);
        r.note("n", "x".into(), "y".into(), false);
        assert!(r.pass());
        r.check_result("b", Ok(2), Err::<i32, _>(Error::EmptyGrammar));
        assert!(!r.pass());
        assert_eq!(r.failures().count(), 1);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"suite":"t","params":{},"cases":[{"id":"a""#));
        assert!(r.to_table().contains("FAIL b"));
    }
}
