//! Executable statements over constructed groups and integer ranges.
//!
//! Each checked claim has a stable statement id (see [`ids`]). A check never
//! errors on a false claim: it produces a failing [`Verdict`] carrying the
//! first counterexample found, and the caller decides what to do with it.

mod criterion;
mod main_theorem;
mod products;
mod sweep;
mod table2;

pub use criterion::{
    check_witnesses, criterion_summary, find_witnesses, verify_contrapositive,
    verify_group_statements, CriterionOutcome, CriterionReport, CriterionSummary,
};
pub use main_theorem::{verify_main, verify_main_range, GroupRow, VerificationReport};
pub use products::{
    product_lemma_grid, verify_product_lemmas, verify_semidirect_lemmas, verify_semidirect_sweep,
};
pub use sweep::{verify_group_sweep, verify_numtheory_sweep, verify_power_graph, SweepReport};
pub use table2::{table2_bullets, table2_cases, table2_spot_check, Relation, Table2Case, Table2Row};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::groups::GroupError;
use crate::numtheory::NumberError;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Number(#[from] NumberError),
}

pub type Result<T> = std::result::Result<T, VerifyError>;

/// Statement identifiers used as verdict keys in reports.
pub mod ids {
    pub const THM_MAIN: &str = "thm-main";
    pub const THM_MAX_EDGES: &str = "thm-max-edges";
    pub const CYCLIC_ROW_PHI: &str = "cyclic-row-phi";
    pub const EDGE_COUNT: &str = "edge-count";
    pub const DIRECTED_EDGE_COUNT: &str = "directed-edge-count";
    pub const MUTUAL_GENERATION: &str = "mutual-generation";
    pub const DEGREE_LAW: &str = "degree-law";
    pub const CYCLIC_TWO_FORMS: &str = "cyclic-two-forms";
    pub const CYCLIC_LOWER_BOUND: &str = "cyclic-lower-bound";
    pub const Q_LE_P_PLUS_1: &str = "q-le-p-plus-1";
    pub const Q_LT_P_ODD: &str = "q-lt-p-odd";
    pub const N_GEQ_BOUND: &str = "n-geq-bound";
    pub const TOTIENT_DIVISIBILITY: &str = "totient-divisibility";
    pub const TOTIENT_PRODUCT_IDENTITY: &str = "totient-product-identity";
    pub const TABLE_1: &str = "table-1";
    pub const WITNESS_NON_IDENTITY: &str = "witness-non-identity";
    pub const WITNESS_GENERATES: &str = "witness-prime-power-generates";
    pub const WITNESS_TOP_PRIME_POWER: &str = "witness-top-prime-power-divides";
    pub const WITNESS_EVEN_INDEX: &str = "witness-even-index";
    pub const NORMAL_SYLOW: &str = "normal-sylow-criterion";
    pub const SYLOW_CONTRAPOSITIVE: &str = "sylow-contrapositive";
    pub const SYLOW_COUNT: &str = "sylow-count";
    pub const PRODUCT_ORDER_LAW: &str = "direct-product-order-law";
    pub const PRODUCT_BOUND: &str = "direct-product-bound";
    pub const PRODUCT_COPRIME: &str = "direct-product-coprime";
    pub const PRODUCT_ELEM2: &str = "direct-product-elementary-2";
    pub const PRODUCT_TWICE_ODD: &str = "direct-product-twice-odd";
    pub const SEMIDIRECT_ORDER_DIVIDES: &str = "semidirect-order-divides";
    pub const SEMIDIRECT_PHI_BOUND: &str = "semidirect-phi-bound";
    pub const SEMIDIRECT_EQUALITY: &str = "semidirect-equality-iff-direct";
    pub const SEMIDIRECT_CYCLIC: &str = "semidirect-cyclic-iff-direct";
    pub const TABLE_2_BULLETS: &str = "table-2-bullets";

    pub fn table_2(k: usize) -> String {
        format!("table-2-k{k}")
    }
}

/// Concrete evidence for a failed statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub group: String,
    pub elements: Vec<usize>,
    pub detail: String,
}

impl Counterexample {
    pub fn new(group: impl Into<String>, elements: Vec<usize>, detail: impl Into<String>) -> Self {
        Counterexample {
            group: group.into(),
            elements,
            detail: detail.into(),
        }
    }
}

/// Pass/fail for one statement, with the number of instances checked.
///
/// A failing verdict always carries a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub pass: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn new(id: impl Into<String>) -> Self {
        Verdict {
            id: id.into(),
            pass: true,
            checked: 0,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    /// Records one instance; the first failure's counterexample is kept.
    pub fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok && self.pass {
            self.pass = false;
            self.counterexample = Some(counterexample());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        let text = text.into();
        if !self.notes.contains(&text) {
            self.notes.push(text);
        }
    }

    /// Folds `other` into `self`, keeping the earlier counterexample.
    pub fn absorb(&mut self, other: Verdict) {
        debug_assert_eq!(self.id, other.id);
        self.checked += other.checked;
        if !other.pass && self.pass {
            self.pass = false;
            self.counterexample = other.counterexample;
        }
        for n in other.notes {
            self.note(n);
        }
    }
}

/// Verdicts keyed by statement id, iterated in id order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Verdicts(BTreeMap<String, Verdict>);

impl Verdicts {
    pub fn new() -> Self {
        Verdicts::default()
    }

    /// Mutable access to a statement's verdict, creating it on first use.
    pub fn entry(&mut self, id: &str) -> &mut Verdict {
        self.0
            .entry(id.to_string())
            .or_insert_with(|| Verdict::new(id))
    }

    pub fn push(&mut self, verdict: Verdict) {
        match self.0.get_mut(&verdict.id) {
            Some(existing) => existing.absorb(verdict),
            None => {
                self.0.insert(verdict.id.clone(), verdict);
            }
        }
    }

    pub fn merge(&mut self, other: Verdicts) {
        for (_, v) in other.0 {
            self.push(v);
        }
    }

    pub fn get(&self, id: &str) -> Option<&Verdict> {
        self.0.get(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Verdict> {
        self.0.values()
    }

    pub fn all_pass(&self) -> bool {
        self.0.values().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.0.values().filter(|v| !v.pass)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One `id: pass|FAIL (checked)` line per statement.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in self.iter() {
            let status = if v.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("{:<34} {:<4} ({} checked)\n", v.id, status, v.checked));
            if let Some(cx) = &v.counterexample {
                out.push_str(&format!(
                    "    counterexample: {} elements {:?}: {}\n",
                    cx.group, cx.elements, cx.detail
                ));
            }
            for n in &v.notes {
                out.push_str(&format!("    note: {n}\n"));
            }
        }
        out
    }
}

/// Builds a local thread pool of `jobs` workers (0 means rayon's default).
pub(crate) fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_keeps_first_counterexample() {
        let mut v = Verdict::new("x");
        v.record(true, || unreachable!());
        v.record(false, || Counterexample::new("G1", vec![1], "first"));
        v.record(false, || Counterexample::new("G2", vec![2], "second"));
        assert!(!v.pass);
        assert_eq!(v.checked, 3);
        assert_eq!(v.counterexample.unwrap().group, "G1");
    }

    #[test]
    fn merge_accumulates_counts() {
        let mut a = Verdicts::new();
        a.entry("s").record(true, || unreachable!());
        let mut b = Verdicts::new();
        b.entry("s").record(false, || Counterexample::new("G", vec![], "bad"));
        b.entry("t").record(true, || unreachable!());
        a.merge(b);
        assert_eq!(a.len(), 2);
        assert_eq!(a.get("s").unwrap().checked, 2);
        assert!(!a.all_pass());
        assert_eq!(a.failures().count(), 1);
    }

    #[test]
    fn json_is_keyed_by_statement() {
        let mut a = Verdicts::new();
        a.entry(ids::THM_MAIN).record(true, || unreachable!());
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"thm-main":{"id":"thm-main","pass":true,"checked":1}}"#);
    }
}
