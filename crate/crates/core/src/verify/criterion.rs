use std::fmt;

use serde::Serialize;

use super::{ids, Counterexample, Result, Verdict, Verdicts};
use crate::groups::{count_sylow, sylow_subgroup, FiniteGroup};
use crate::numtheory::{factorize, q_of_primes, totient, ExactRational};

/// Sylow data attached to one witness `g`, for the largest prime `p | n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub witness: usize,
    pub sylow_prime: u64,
    pub sylow_order: usize,
    pub unique: bool,
    pub normal: bool,
    pub contained_in_gen: bool,
    pub cyclic: bool,
}

impl CriterionOutcome {
    pub fn holds(&self) -> bool {
        self.unique && self.normal && self.contained_in_gen && self.cyclic
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub group: String,
    pub n: u64,
    pub outcomes: Vec<CriterionOutcome>,
    pub verdicts: Verdicts,
}

/// Headline numbers for one group, as printed by the `criterion` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionSummary {
    pub group: String,
    pub n: u64,
    pub q: ExactRational,
    /// `max_g Q phi(o(g))`.
    pub max_q_phi: ExactRational,
    pub witnesses: usize,
    pub sylow_prime: Option<u64>,
    pub sylow_count: Option<usize>,
    pub sylow_order: Option<usize>,
    pub outcomes_hold: bool,
}

fn q_and_n(g: &FiniteGroup) -> Result<(ExactRational, ExactRational)> {
    let n = g.order() as u64;
    let q = q_of_primes(&factorize(n)?.primes());
    Ok((q, ExactRational::from(n)))
}

/// Elements `g` with `n < Q phi(o(g))`, compared exactly.
pub fn find_witnesses(g: &FiniteGroup) -> Result<Vec<usize>> {
    let (q, n) = q_and_n(g)?;
    let orders = g.element_orders();
    let mut by_order = std::collections::HashMap::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let o = orders[x];
        let is_witness = match by_order.get(&o) {
            Some(&w) => w,
            None => {
                let w = n < &q * &ExactRational::from(totient(o as u64)?);
                by_order.insert(o, w);
                w
            }
        };
        if is_witness {
            out.push(x);
        }
    }
    Ok(out)
}

/// Sylow data for every witness of `g`. Empty when there is none.
pub fn check_witnesses(g: &FiniteGroup) -> Result<Vec<(usize, CriterionOutcome)>> {
    let witnesses = find_witnesses(g)?;
    if witnesses.is_empty() {
        return Ok(Vec::new());
    }
    let f = factorize(g.order() as u64)?;
    let (p, _) = f.largest().expect("a group with a witness has order >= 2");
    let sylow = sylow_subgroup(g, p)?;
    let unique = count_sylow(g, p)? == 1;
    let normal = g.is_normal(&sylow)?;
    let cyclic = sylow
        .members()
        .iter()
        .any(|&x| g.element_orders()[x] == sylow.order());
    Ok(witnesses
        .into_iter()
        .map(|w| {
            let powers = g.cyclic_powers(w);
            let contained = sylow.members().iter().all(|x| powers.contains(x));
            let outcome = CriterionOutcome {
                witness: w,
                sylow_prime: p,
                sylow_order: sylow.order(),
                unique,
                normal,
                contained_in_gen: contained,
                cyclic,
            };
            (w, outcome)
        })
        .collect())
}

/// If the largest prime `p | n` has more than one Sylow subgroup, then
/// `n >= Q phi(o(g))` for every `g`. Vacuous otherwise.
pub fn verify_contrapositive(g: &FiniteGroup) -> Result<Verdict> {
    let mut v = Verdict::new(ids::SYLOW_CONTRAPOSITIVE);
    let f = factorize(g.order() as u64)?;
    let Some((p, _)) = f.largest() else {
        return Ok(v);
    };
    let count = count_sylow(g, p)?;
    if count > 1 {
        let witnesses = find_witnesses(g)?;
        v.record(witnesses.is_empty(), || {
            Counterexample::new(
                g.name(),
                witnesses.clone(),
                format!("{count} Sylow {p}-subgroups, yet n < Q phi(o(g))"),
            )
        });
    }
    Ok(v)
}

/// Every witness-driven statement for one group: the element-level
/// consequences of `n < Q phi(o(g))`, the normal cyclic Sylow criterion,
/// its contrapositive, and the Sylow counting congruences.
pub fn verify_group_statements(g: &FiniteGroup) -> Result<CriterionReport> {
    let n = g.order() as u64;
    let f = factorize(n)?;
    let mut verdicts = Verdicts::new();
    let orders = g.element_orders();
    let outcomes = check_witnesses(g)?;

    for (w, outcome) in &outcomes {
        let w = *w;
        let o = orders[w] as u64;
        let (p, alpha) = f.largest().expect("witness implies n >= 2");

        let v = verdicts.entry(ids::WITNESS_NON_IDENTITY);
        if w == g.identity() && n == 2 {
            v.note("n = 2: the identity satisfies 2 < Q phi(1) = 3, the stated exception");
        }
        v.record(w != g.identity() || n == 2, || {
            Counterexample::new(g.name(), vec![w], "identity is a witness")
        });

        if f.is_prime_power() && n > 2 {
            verdicts.entry(ids::WITNESS_GENERATES).record(o == n, || {
                Counterexample::new(g.name(), vec![w], format!("o(g) = {o} < n = {n}"))
            });
        }
        if n > 2 {
            let pa = p.pow(alpha);
            verdicts
                .entry(ids::WITNESS_TOP_PRIME_POWER)
                .record(o.is_multiple_of(pa), || {
                    Counterexample::new(g.name(), vec![w], format!("{pa} does not divide o(g) = {o}"))
                });
        }
        if o.is_multiple_of(2) {
            verdicts.entry(ids::WITNESS_EVEN_INDEX).record(n / o < p, || {
                Counterexample::new(g.name(), vec![w], format!("n / o(g) = {} >= p = {p}", n / o))
            });
        }

        let v = verdicts.entry(ids::NORMAL_SYLOW);
        if n == 2 && w == g.identity() {
            // the exceptional witness cannot contain the Sylow subgroup;
            // the involution is a witness as well and carries the statement
            v.note("n = 2: identity witness exempt; the involution carries the criterion");
            continue;
        }
        v.record(outcome.holds(), || {
            Counterexample::new(
                g.name(),
                vec![w],
                format!(
                    "Sylow {p}: unique = {}, normal = {}, cyclic = {}, inside <g> = {}",
                    outcome.unique, outcome.normal, outcome.cyclic, outcome.contained_in_gen
                ),
            )
        });
    }

    verdicts.push(verify_contrapositive(g)?);

    for &(q, _) in f.factors() {
        let count = count_sylow(g, q)?;
        let part = q.pow(f.exponent_of(q)) as usize;
        let ok = count % q as usize == 1 && (g.order() / part).is_multiple_of(count);
        verdicts.entry(ids::SYLOW_COUNT).record(ok, || {
            Counterexample::new(g.name(), vec![], format!("{count} Sylow {q}-subgroups"))
        });
    }

    Ok(CriterionReport {
        group: g.name().to_string(),
        n,
        outcomes: outcomes.into_iter().map(|(_, o)| o).collect(),
        verdicts,
    })
}

pub fn criterion_summary(g: &FiniteGroup) -> Result<CriterionSummary> {
    let n = g.order() as u64;
    let f = factorize(n)?;
    let (q, _) = q_and_n(g)?;
    let max_phi = g.max_phi_order();
    let outcomes = check_witnesses(g)?;
    let (sylow_prime, sylow_count, sylow_order) = match f.largest() {
        Some((p, alpha)) => (
            Some(p),
            Some(count_sylow(g, p)?),
            Some(p.pow(alpha) as usize),
        ),
        None => (None, None, None),
    };
    let outcomes_hold = outcomes
        .iter()
        .all(|(w, o)| o.holds() || (n == 2 && *w == g.identity()));
    Ok(CriterionSummary {
        group: g.name().to_string(),
        n,
        max_q_phi: &q * &ExactRational::from(max_phi),
        q,
        witnesses: outcomes.len(),
        sylow_prime,
        sylow_count,
        sylow_order,
        outcomes_hold,
    })
}

impl fmt::Display for CriterionSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = ExactRational::from(self.n);
        let (Some(p), Some(count)) = (self.sylow_prime, self.sylow_count) else {
            return write!(f, "no witness; trivial group");
        };
        if self.witnesses == 0 {
            if self.max_q_phi == n {
                write!(f, "no witness; n = Qφ(o(g)) = {}", self.n)?;
            } else {
                write!(f, "no witness; n = {} > max Qφ(o(g)) = {}", self.n, self.max_q_phi)?;
            }
            return write!(f, "; Sylow-{p} count = {count}");
        }
        let plural = if self.witnesses == 1 { "" } else { "es" };
        write!(
            f,
            "{} witness{plural}; n = {} < max Qφ(o(g)) = {}; Sylow-{p} count = {count}; ",
            self.witnesses, self.n, self.max_q_phi
        )?;
        if self.outcomes_hold {
            write!(
                f,
                "normal cyclic Sylow-{p} subgroup of order {} inside <g>",
                self.sylow_order.unwrap_or(1)
            )
        } else {
            write!(f, "criterion FAILED")
        }
    }
}
