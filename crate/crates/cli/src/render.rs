use std::fmt::Write as _;

use cycinv::classify::ClassLabel;
use cycinv::resolution::{betti, Resolution};
use cycinv::semigroup::InvariantSet;
use serde_json::{json, Value};

use crate::Format;

/// Pretty JSON with sorted keys, newline-terminated.
pub fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn monomial(c: u64, d: u64) -> String {
    match (c, d) {
        (0, 0) => "1".into(),
        (c, 0) => power("x1", c),
        (0, d) => power("x2", d),
        (c, d) => format!("{}*{}", power("x1", c), power("x2", d)),
    }
}

fn power(v: &str, e: u64) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

pub fn slopes(inv: &InvariantSet) -> Vec<String> {
    inv.slopes().iter().map(|r| r.to_string()).collect()
}

pub fn classification(label: &ClassLabel, format: Format) -> String {
    match format {
        Format::Json => json(&serde_json::to_value(label).expect("label serializes")),
        Format::Csv => format!("{}\n{}\n", ClassLabel::CSV_HEADER, label.csv_row()),
        Format::Human => {
            let e = &label.evidence;
            let d = &e.division;
            let mut s = String::new();
            let _ = writeln!(s, "label:        {}", label.kind);
            let _ = writeln!(
                s,
                "canonical:    p = {}, b = {}, b^-1 = {}{}",
                e.p,
                e.b,
                e.b_inv,
                if e.swapped { " (swapped)" } else { "" }
            );
            let _ = writeln!(s, "product:      (p-b)(p-b^-1) = {} = {}p+1", e.product, e.k);
            let _ = writeln!(s, "invariants:   {}", e.n_invariants);
            let _ = writeln!(s, "slopes:       {}", e.n_slopes);
            let _ = writeln!(s, "division:     q = {}, r = {}, s = {}, t = {}", d.q, d.r, d.s, d.t);
            let _ = writeln!(s, "r=s and q=t:  {}", e.two_slope_condition);
            s
        }
    }
}

pub fn resolution_human(res: &Resolution, method: &str, matrices: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "method: {method}");
    for (i, m) in res.modules().iter().enumerate() {
        let t: Vec<String> = m.twists().iter().map(i64::to_string).collect();
        let _ = writeln!(s, "F{i}: rank {} twists {{{}}}", m.rank(), t.join(", "));
    }
    s.push('\n');
    s.push_str(&betti(res).render());
    if matrices {
        for (k, d) in res.differentials().iter().enumerate() {
            let _ = writeln!(s, "\nd{}:", k + 1);
            let cells = d.to_strings();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            for row in cells {
                let row: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                let _ = writeln!(s, "  [ {} ]", row.join("  "));
            }
        }
    }
    s
}

pub fn resolution_json(res: &Resolution, header: Value) -> Value {
    let mut v = res.to_json();
    let table: Vec<Value> = betti(res).entries().iter().map(|(&(i, j), &n)| json!([i, j, n])).collect();
    v["betti"] = Value::Array(table);
    if let (Value::Object(out), Value::Object(h)) = (&mut v, header) {
        out.extend(h);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use cycinv::classify::classify;

    #[test]
    fn monomials_use_power_syntax() {
        assert_eq!(monomial(0, 0), "1");
        assert_eq!(monomial(7, 0), "x1^7");
        assert_eq!(monomial(1, 2), "x1*x2^2");
        assert_eq!(monomial(0, 1), "x2");
    }

    #[test]
    fn json_keys_are_sorted() {
        assert_eq!(json(&json!({"b": 1, "a": [2]})), "{\n  \"a\": [\n    2\n  ],\n  \"b\": 1\n}\n");
    }

    #[test]
    fn classification_formats() {
        let label = classify(11, 3).unwrap();
        assert!(classification(&label, Format::Human).starts_with("label:        TwoSlope\n"));
        assert!(classification(&label, Format::Csv).ends_with("11,3,4,56,5,6,2,3,2,2,3,TwoSlope\n"));
    }
}
