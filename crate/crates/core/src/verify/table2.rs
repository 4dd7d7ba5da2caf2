//! Spot checks of the exceptional-case table.
//!
//! Each case fixes `k` (the first `k` primes divide `n`), the index
//! `m = n / o(g)`, and possibly one exponent. The check instantiates the
//! smallest `n` consistent with the case, takes `o(g) = n / m` and its true
//! totient, and compares `n / phi(o(g))` with `Q` exactly.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::{ids, Counterexample, Verdict, Verdicts};
use crate::numtheory::{first_primes, nth_prime, q_of_primes, totient, ExactRational, PrimeSetTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">")]
    Greater,
}

impl From<Ordering> for Relation {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Relation::Less,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::Greater,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
        })
    }
}

/// One printed row: the case label, its minimal exponent vector, and the
/// printed value and relation against `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Case {
    pub k: usize,
    pub m: u64,
    pub alpha1: u32,
    pub case: &'static str,
    pub exponents: Vec<u32>,
    pub printed_value: &'static str,
    pub printed_relation: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub case: Table2Case,
    pub n: u64,
    pub order_g: u64,
    pub phi_order_g: u64,
    pub ratio: ExactRational,
    pub ratio_floor: u64,
    pub q: ExactRational,
    pub relation: Relation,
    /// The printed relation against `Q` matches the computed one.
    pub reproduced: bool,
    /// The printed value equals the floor of the computed ratio.
    pub value_matches: bool,
    pub verdict: Verdict,
}

fn case(
    k: usize,
    m: u64,
    alpha1: u32,
    case: &'static str,
    exponents: &[u32],
    printed_value: &'static str,
    printed_relation: Relation,
) -> Table2Case {
    Table2Case {
        k,
        m,
        alpha1,
        case,
        exponents: exponents.to_vec(),
        printed_value,
        printed_relation,
    }
}

/// Every row of the table at its minimal exponents.
pub fn table2_cases() -> Vec<Table2Case> {
    use Relation::*;
    vec![
        case(2, 4, 2, "all", &[2, 1], "6", Equal),
        case(3, 6, 1, "a2=1", &[1, 1, 1], "7.4", Less),
        case(3, 6, 1, "a2>1", &[1, 2, 1], "11", Greater),
        case(3, 8, 3, "all", &[3, 1, 1], "15", Greater),
        case(4, 8, 3, "all", &[3, 1, 1, 1], "17", Greater),
        case(4, 10, 1, "a3=1", &[1, 1, 1, 1], "14", Greater),
        case(4, 10, 1, "a3>1", &[1, 1, 2, 1], "21", Greater),
        case(5, 12, 2, "a2=1", &[2, 1, 1, 1, 1], "19", Greater),
        case(5, 12, 2, "a2>1", &[2, 2, 1, 1, 1], "28", Greater),
        case(5, 14, 1, "a4=1", &[1, 1, 1, 1, 1], "28", Greater),
        case(5, 14, 1, "a4>1", &[1, 1, 1, 2, 1], "33", Greater),
        case(6, 14, 1, "a4=1", &[1, 1, 1, 1, 1, 1], "62", Greater),
        case(6, 14, 1, "a4>1", &[1, 1, 1, 2, 1, 1], "36", Greater),
        case(6, 16, 4, "all", &[4, 1, 1, 1, 1, 1], "41", Greater),
        case(7, 18, 1, "a2=2", &[1, 2, 1, 1, 1, 1, 1], "33", Greater),
        case(7, 18, 1, "a2>2", &[1, 3, 1, 1, 1, 1, 1], "49", Greater),
        case(8, 20, 2, "a3=1", &[2, 1, 1, 1, 1, 1, 1, 1], "46", Greater),
        case(8, 20, 2, "a3>1", &[2, 1, 2, 1, 1, 1, 1, 1], "58", Greater),
    ]
}

/// Even `m` with `pi(k) + 1 <= m < Q(F_k)`, for `k = 2..=8`.
pub fn table2_bullets() -> Vec<(usize, Vec<u64>)> {
    (2..=8)
        .map(|k| {
            let q = q_of_primes(&PrimeSetTag::FirstPrimes(k).members());
            let lo = nth_prime(k) + 1;
            let ms = (lo..)
                .take_while(|&m| q > m)
                .filter(|m| m % 2 == 0)
                .collect();
            (k, ms)
        })
        .collect()
}

fn exponent_of(mut x: u64, p: u64) -> u32 {
    let mut e = 0;
    while x.is_multiple_of(p) {
        x /= p;
        e += 1;
    }
    e
}

fn evaluate(c: Table2Case) -> Table2Row {
    let primes = first_primes(c.k);
    let n: u64 = primes
        .iter()
        .zip(&c.exponents)
        .map(|(&p, &a)| p.pow(a))
        .product();
    let order_g = n / c.m;
    let phi = totient(order_g).expect("order_g >= 1");
    let ratio = ExactRational::new(n, phi);
    let q = q_of_primes(&primes);
    let relation = Relation::from(ratio.partial_cmp(&q).expect("rationals are ordered"));
    let ratio_floor: u64 = ratio.floor().try_into().expect("ratio is positive");
    let value_matches = c.printed_value == ratio_floor.to_string();
    let reproduced = relation == c.printed_relation;

    let mut v = Verdict::new(ids::table_2(c.k));
    let label = format!("k={} m={} {}", c.k, c.m, c.case);
    let cx = |detail: String| Counterexample::new(label.clone(), vec![], detail);
    v.record(reproduced, || {
        cx(format!("n/phi(o(g)) = {ratio} {relation} Q = {q}, printed {}", c.printed_relation))
    });
    v.record(n.is_multiple_of(c.m) && order_g % 2 == 1, || {
        cx(format!("o(g) = n/m = {order_g} is not an odd integer"))
    });
    let (p, alpha_k) = (primes[c.k - 1], c.exponents[c.k - 1]);
    v.record(order_g.is_multiple_of(p.pow(alpha_k)), || {
        cx(format!("{p}^{alpha_k} does not divide o(g) = {order_g}"))
    });
    v.record(exponent_of(c.m, 2) == c.alpha1 && c.exponents[0] == c.alpha1, || {
        cx(format!("2-part of m = {} is not 2^{}", c.m, c.alpha1))
    });
    v.record(
        c.m.is_multiple_of(2) && c.m > nth_prime(c.k) && q > c.m,
        || cx(format!("m = {} is outside [pi(k) + 1, Q)", c.m)),
    );
    if !value_matches {
        v.note(format!(
            "{label}: printed value {} but floor(n/phi(o(g))) = floor({ratio}) = {ratio_floor}",
            c.printed_value
        ));
    }
    Table2Row {
        n,
        order_g,
        phi_order_g: phi,
        ratio,
        ratio_floor,
        q,
        relation,
        reproduced,
        value_matches,
        verdict: v,
        case: c,
    }
}

/// Evaluates every case and the bullet column. Printed values that differ
/// from the computed floor are reported as notes; only the relation to `Q`
/// and the structural constraints decide pass or fail.
pub fn table2_spot_check() -> (Vec<Table2Row>, Verdicts) {
    let rows: Vec<Table2Row> = table2_cases().into_iter().map(evaluate).collect();
    let mut verdicts = Verdicts::new();
    for r in &rows {
        verdicts.push(r.verdict.clone());
    }
    let v = verdicts.entry(ids::TABLE_2_BULLETS);
    for (k, ms) in table2_bullets() {
        let mut listed: Vec<u64> = rows
            .iter()
            .filter(|r| r.case.k == k)
            .map(|r| r.case.m)
            .collect();
        listed.dedup();
        v.record(listed == ms, || {
            Counterexample::new(format!("k={k}"), vec![], format!("bullets {ms:?}, rows {listed:?}"))
        });
    }
    (rows, verdicts)
}

impl Table2Row {
    pub fn to_text(&self) -> String {
        let c = &self.case;
        let mark = if self.value_matches { "" } else { " (printed value differs)" };
        format!(
            "k={} m={:<2} a1={} {:<5} n={:<10} o(g)={:<9} phi={:<7} n/phi={} (floor {}) {} Q={}; printed {} {} Q {}{}",
            c.k,
            c.m,
            c.alpha1,
            c.case,
            self.n,
            self.order_g,
            self.phi_order_g,
            self.ratio,
            self.ratio_floor,
            self.relation,
            self.q,
            c.printed_value,
            c.printed_relation,
            if self.reproduced { "reproduced" } else { "NOT reproduced" },
            mark
        )
    }
}
