use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::Serialize;

use super::probe::ProbeSummary;

/// `f(t) = t(d + 3 - t)/2`.
pub fn f_of(t: i64, d: i64) -> Rational64 {
    Rational64::new(t * (d + 3 - t), 2)
}

/// `g(t) = t(d + (5 - t)/2)`.
pub fn g_of(t: i64, d: i64) -> Rational64 {
    Rational64::new(t * (2 * d + 5 - t), 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Quantities for one excluded cardinality `y_i`, with `w = 2 y_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Due2Row {
    pub i: i64,
    pub y: i64,
    pub w: i64,
    pub a: i64,
    pub f_a: i64,
    /// `g(2i + 1)` as `num/den`.
    pub g_bound: String,
    pub s_bound_ok: bool,
    pub a_squared_at_most_w: bool,
    pub two_f_a_exceeds_w: bool,
    pub w_exceeds_g_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Due2Report {
    pub c: i64,
    pub d: i64,
    pub parity: Parity,
    pub xs: Vec<i64>,
    pub ys: Vec<i64>,
    pub rows: Vec<Due2Row>,
    pub checks: BTreeMap<String, bool>,
    /// Non-gating remarks.
    pub notes: BTreeMap<String, bool>,
    pub pass: bool,
    pub evidence: Option<ProbeSummary>,
}

/// `d - k > sqrt(q)` in integers.
fn exceeds_root(d: i64, k: i64, q: i64) -> bool {
    d - k > 0 && (d - k) * (d - k) > q
}

/// The cardinalities `x_i` (realized) and `y_i` (excluded) and every
/// inequality the exclusion argument uses. Out-of-range input is reported
/// through the checks, never rejected.
pub fn due2_table(c: i64, d: i64) -> Due2Report {
    let parity = if d % 2 == 0 { Parity::Even } else { Parity::Odd };
    let t_of = |i: i64| match parity {
        Parity::Odd => 2 * i,
        Parity::Even => 2 * i + 1,
    };
    let xs: Vec<i64> = (1..=c).map(|i| f_of(t_of(i), d).to_integer()).collect();
    let ys: Vec<i64> = xs.iter().skip(1).map(|x| x - 1).collect();

    let rows: Vec<Due2Row> = (1..c)
        .map(|i| {
            let y = ys[i as usize - 1];
            let w = 2 * y;
            let a = t_of(i) + 2;
            let f_a = f_of(a, d);
            let g_bound = g_of(2 * i + 1, d);
            Due2Row {
                i,
                y,
                w,
                a,
                f_a: f_a.to_integer(),
                g_bound: g_bound.to_string(),
                s_bound_ok: Rational64::new((d + 5) * (d + 3), 8) > Rational64::from(w),
                a_squared_at_most_w: a * a <= w,
                two_f_a_exceeds_w: f_a * 2 > Rational64::from(w),
                w_exceeds_g_bound: Rational64::from(w) > g_bound,
            }
        })
        .collect();

    let mut checks = BTreeMap::new();
    checks.insert("d_at_least_14c_plus_2".to_string(), d >= 14 * c + 2);
    checks.insert("f_increasing_range".to_string(), 2 * (2 * c + 1) <= d + 3);
    let mut chain = Vec::with_capacity(2 * c as usize);
    for (k, x) in xs.iter().enumerate() {
        chain.push(*x);
        if let Some(y) = ys.get(k) {
            chain.push(*y);
        }
    }
    checks.insert("interleaving".to_string(), chain.windows(2).all(|w| w[0] < w[1]));
    checks.insert("y_is_next_x_minus_1".to_string(), ys.iter().zip(&xs[1..]).all(|(y, x)| *y == x - 1));
    checks.insert(
        "s_threshold".to_string(),
        match parity {
            Parity::Odd => exceeds_root(d, 8 * c - 4, 32 * c * c - 16 * c - 15),
            Parity::Even => exceeds_root(d, 8 * c, 32 * c * c + 16 * c + 17),
        },
    );
    checks.insert("s_bound".to_string(), rows.iter().all(|r| r.s_bound_ok));
    checks.insert("a_squared_at_most_w".to_string(), rows.iter().all(|r| r.a_squared_at_most_w));
    checks.insert("two_f_a_exceeds_w".to_string(), rows.iter().all(|r| r.two_f_a_exceeds_w));
    checks.insert("f_a_is_next_x".to_string(), rows.iter().all(|r| r.f_a == xs[r.i as usize]));
    checks.insert("w_exceeds_g_bound".to_string(), rows.iter().all(|r| r.w_exceeds_g_bound));
    checks.insert("a_in_g_range".to_string(), rows.iter().all(|r| 2 * r.a <= 2 * d + 5));

    let mut notes = BTreeMap::new();
    if parity == Parity::Even {
        // Here a = 2i + 3, so a lower-degree curve can have degree 2i + 2
        // and the sharper comparison is against g(2i + 2).
        notes.insert(
            "w_exceeds_g_2i_plus_2".to_string(),
            rows.iter().all(|r| Rational64::from(r.w) > g_of(2 * r.i + 2, d)),
        );
    }
    let pass = checks.values().all(|&v| v);
    Due2Report { c, d, parity, xs, ys, rows, checks, notes, pass, evidence: None }
}
