//! Plain-text tables.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fmt::Write;

pub fn tuple<T: Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// One labelled row with right-aligned cells.
pub fn row<T: Display>(label: &str, cells: &[T], label_width: usize, cell_width: usize) -> String {
    let mut s = format!("{label:<label_width$}");
    for c in cells {
        let _ = write!(s, " {:>cell_width$}", c.to_string());
    }
    s.push('\n');
    s
}

pub fn checks(map: &BTreeMap<String, bool>) -> String {
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
    let mut s = String::from("checks:\n");
    for (k, v) in map {
        let _ = writeln!(s, "  {k:<width$}  {}", if *v { "pass" } else { "FAIL" });
    }
    s
}

pub fn verdict(pass: bool) -> &'static str {
    if pass {
        "result: PASS\n"
    } else {
        "result: FAIL\n"
    }
}

pub fn points<S: AsRef<str>>(pts: &[Vec<S>]) -> String {
    let mut s = String::new();
    for (i, p) in pts.iter().enumerate() {
        let coords: Vec<&str> = p.iter().map(|c| c.as_ref()).collect();
        let _ = writeln!(s, "  {i:>3}  ({})", coords.join(" : "));
    }
    s
}
