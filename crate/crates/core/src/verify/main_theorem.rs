use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::criterion::find_witnesses;
use super::{ids, with_pool, Counterexample, Result, Verdicts};
use crate::groups::{catalog, GroupFactory};
use crate::numtheory::phi_cyclic_sum;
use crate::powergraph::PowerGraph;

/// One catalog group in a per-order report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupRow {
    pub name: String,
    pub phi_g: u64,
    pub is_cyclic: bool,
    pub undirected_edges: usize,
    pub max_phi_order: u64,
    /// Elements `g` with `n < Q phi(o(g))`.
    pub witnesses: Vec<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: u64,
    pub phi_cyclic: u64,
    /// Number of catalog groups examined. The catalog is not a classification.
    pub catalog_coverage: usize,
    pub rows: Vec<GroupRow>,
    pub verdicts: Verdicts,
}

/// Checks, for every catalog group `G` of order `n`: `phi(C_n) >= phi(G)`
/// with equality exactly when `G` is cyclic; the undirected edge count is
/// `(phi(G) - n) / 2`; and the cyclic entry has the most undirected edges.
pub fn verify_main(n: u64, factory: &GroupFactory) -> Result<VerificationReport> {
    let groups = catalog(n, factory)?;
    let phi_cn: u64 = phi_cyclic_sum(n)?
        .try_into()
        .expect("cyclic totient sum fits in u64 within the order cap");
    let mut verdicts = Verdicts::new();
    let mut rows = Vec::with_capacity(groups.len());

    for g in &groups {
        let phi_g = g.phi();
        let cyclic = g.is_cyclic();
        let edges = PowerGraph::build(g).undirected_edge_count();

        let main_ok = phi_cn >= phi_g && ((phi_g == phi_cn) == cyclic);
        verdicts.entry(ids::THM_MAIN).record(main_ok, || {
            Counterexample::new(
                g.name(),
                vec![],
                format!("phi(C_{n}) = {phi_cn}, phi(G) = {phi_g}, cyclic = {cyclic}"),
            )
        });
        let count_ok = 2 * edges as u64 + n == phi_g;
        verdicts.entry(ids::EDGE_COUNT).record(count_ok, || {
            Counterexample::new(
                g.name(),
                vec![],
                format!("{edges} undirected edges but phi(G) = {phi_g}"),
            )
        });
        if cyclic {
            verdicts.entry(ids::CYCLIC_ROW_PHI).record(phi_g == phi_cn, || {
                Counterexample::new(g.name(), vec![], format!("phi = {phi_g} != {phi_cn}"))
            });
        }
        rows.push(GroupRow {
            name: g.name().to_string(),
            phi_g,
            is_cyclic: cyclic,
            undirected_edges: edges,
            max_phi_order: g.max_phi_order(),
            witnesses: find_witnesses(g)?,
            pass: main_ok && count_ok,
        });
    }

    let expected_max = ((phi_cn - n) / 2) as usize;
    let cyclic_edges = rows.iter().find(|r| r.is_cyclic).map(|r| r.undirected_edges);
    let max_edges = rows.iter().map(|r| r.undirected_edges).max().unwrap_or(0);
    let max_ok = cyclic_edges == Some(max_edges) && max_edges == expected_max;
    verdicts.entry(ids::THM_MAX_EDGES).record(max_ok, || {
        let worst = rows
            .iter()
            .max_by_key(|r| r.undirected_edges)
            .map_or(String::new(), |r| r.name.clone());
        Counterexample::new(
            worst,
            vec![],
            format!(
                "cyclic entry has {cyclic_edges:?} edges, catalog maximum {max_edges}, (phi(C_n) - n)/2 = {expected_max}"
            ),
        )
    });

    Ok(VerificationReport {
        n,
        phi_cyclic: phi_cn,
        catalog_coverage: rows.len(),
        rows,
        verdicts,
    })
}

/// [`verify_main`] over an inclusive range, in ascending `n` regardless of
/// completion order.
pub fn verify_main_range(
    from: u64,
    to: u64,
    factory: &GroupFactory,
    jobs: usize,
) -> Result<Vec<VerificationReport>> {
    with_pool(jobs, || {
        (from..=to)
            .into_par_iter()
            .map(|n| verify_main(n, factory))
            .collect::<Result<Vec<_>>>()
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl VerificationReport {
    pub const CSV_HEADER: &'static str =
        "n,group,phi_G,is_cyclic,undirected_edges,max_phi_order,witnesses,verdict";

    pub fn passed(&self) -> bool {
        self.verdicts.all_pass()
    }

    /// CSV rows without the header.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let witnesses: Vec<String> = r.witnesses.iter().map(|w| w.to_string()).collect();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                self.n,
                csv_field(&r.name),
                r.phi_g,
                r.is_cyclic,
                r.undirected_edges,
                r.max_phi_order,
                witnesses.join(";"),
                if r.pass { "pass" } else { "fail" }
            )
            .unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        format!("{}\n{}", Self::CSV_HEADER, self.csv_rows())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "n = {}: phi(C_n) = {}, catalog coverage {} groups",
            self.n, self.phi_cyclic, self.catalog_coverage
        )
        .unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "  {:<24} phi = {:<8} cyclic = {:<5} undirected = {:<6} {}",
                r.name,
                r.phi_g,
                r.is_cyclic,
                r.undirected_edges,
                if r.pass { "pass" } else { "FAIL" }
            )
            .unwrap();
        }
        out.push_str(&self.verdicts.to_text());
        out
    }
}
