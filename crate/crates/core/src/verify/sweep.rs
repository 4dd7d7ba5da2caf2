use rayon::prelude::*;
use serde::Serialize;

use super::criterion::verify_group_statements;
use super::{ids, with_pool, Counterexample, Result, Verdicts};
use crate::groups::{catalog, FiniteGroup, GroupFactory, Subgroup};
use crate::numtheory::{
    factorize, is_two_three_mixed, lemma_n_geq_check, lemma_q_bounds, phi_cyclic_product,
    phi_cyclic_sum, q_lower_bound_check, table1, totient,
};
use crate::powergraph::PowerGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub description: String,
    pub verdicts: Verdicts,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.verdicts.all_pass()
    }

    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.description, self.verdicts.to_text())
    }
}

/// Printed `Q(F_l)` and `Q(S_l)` for `l = 1..=9`.
const TABLE_1_FIRST: [&str; 9] = ["3", "6", "9", "12", "72/5", "84/5", "189/10", "21", "252/11"];
const TABLE_1_SKIP: [&str; 8] = ["2", "9/2", "8", "54/5", "14", "81/5", "56/3", "1134/55"];

fn totient_sieve(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for p in 2..=limit {
        if phi[p] == p as u64 {
            for m in (p..=limit).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi
}

fn check_n(n: u64, sieve: &[u64], v: &mut Verdicts) -> Result<()> {
    let label = || format!("n = {n}");
    let cx = |detail: String| Counterexample::new(label(), vec![], detail);

    let sum = phi_cyclic_sum(n)?;
    let product = phi_cyclic_product(n)?;
    v.entry(ids::CYCLIC_TWO_FORMS)
        .record(sum == product, || cx(format!("divisor sum {sum} != product {product}")));

    let f = factorize(n)?;
    let phi = totient(n)?;
    let tv = v.entry(ids::TOTIENT_DIVISIBILITY);
    tv.record(phi == sieve[n as usize], || {
        cx(format!("totient {phi} != sieve {}", sieve[n as usize]))
    });
    for d in f.divisors() {
        let pd = sieve[d as usize];
        tv.record(phi % pd == 0, || cx(format!("phi({d}) = {pd} does not divide phi(n) = {phi}")));
    }
    // n * prod (p - 1) = phi(n) * prod p, in integers
    let (num, den) = f
        .primes()
        .iter()
        .fold((1u128, 1u128), |(a, b), &p| (a * p as u128, b * (p - 1) as u128));
    v.entry(ids::TOTIENT_PRODUCT_IDENTITY)
        .record(n as u128 * den == phi as u128 * num, || {
            cx(format!("phi(n) = {phi} disagrees with the prime product"))
        });

    if n < 2 {
        return Ok(());
    }
    let lb = q_lower_bound_check(n)?;
    v.entry(ids::CYCLIC_LOWER_BOUND)
        .record(lb.holds, || cx(format!("phi(C_n) - n^2/Q = {}", lb.gap)));

    let qb = lemma_q_bounds(n)?;
    if let Some(ok) = qb.q_le_p_plus_1 {
        v.entry(ids::Q_LE_P_PLUS_1).record(ok, || cx("Q > p + 1".into()));
    }
    if let Some(ok) = qb.q_lt_p_odd {
        v.entry(ids::Q_LT_P_ODD).record(ok, || cx("Q >= p".into()));
    }

    if !f.is_power_of_two() {
        let c = lemma_n_geq_check(n)?;
        v.entry(ids::N_GEQ_BOUND)
            .record(c.holds && c.equality == is_two_three_mixed(n), || {
                cx(format!(
                    "rhs = {}, holds = {}, equality = {}",
                    c.rhs, c.holds, c.equality
                ))
            });
    }
    Ok(())
}

fn check_table1(v: &mut Verdicts) {
    let t = v.entry(ids::TABLE_1);
    for row in table1() {
        let first = row.q_first.to_string();
        t.record(first == TABLE_1_FIRST[row.ell - 1], || {
            Counterexample::new(format!("F_{}", row.ell), vec![], format!("Q = {first}"))
        });
        if let Some(skip) = &row.q_skip {
            let skip = skip.to_string();
            t.record(skip == TABLE_1_SKIP[row.ell - 1], || {
                Counterexample::new(format!("S_{}", row.ell), vec![], format!("Q = {skip}"))
            });
        }
    }
}

/// Every number-theoretic statement over `1..=limit`.
pub fn verify_numtheory_sweep(limit: u64, jobs: usize) -> Result<SweepReport> {
    let sieve = totient_sieve(limit as usize);
    const CHUNK: u64 = 2048;
    let chunks: Vec<u64> = (0..limit.div_ceil(CHUNK)).collect();
    let parts = with_pool(jobs, || {
        chunks
            .par_iter()
            .map(|&c| {
                let mut v = Verdicts::new();
                let lo = c * CHUNK + 1;
                let hi = ((c + 1) * CHUNK).min(limit);
                for n in lo..=hi {
                    check_n(n, &sieve, &mut v)?;
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    // ascending merge keeps the smallest counterexample
    let mut verdicts = Verdicts::new();
    check_table1(&mut verdicts);
    for p in parts {
        verdicts.merge(p);
    }
    Ok(SweepReport {
        description: format!("number theory sweep over 1..={limit}"),
        verdicts,
    })
}

/// Power-graph laws for one group, each checked against the subgroup
/// machinery rather than the graph builder's own masks.
pub fn verify_power_graph(g: &FiniteGroup) -> Result<Verdicts> {
    let mut v = Verdicts::new();
    let pg = PowerGraph::build(g);
    let orders = g.element_orders();
    let gens: Vec<Subgroup<'_>> = g
        .elements()
        .map(|x| Subgroup::generated(g, &[x]))
        .collect::<std::result::Result<_, _>>()?;

    for x in g.elements() {
        let expected = totient(orders[x] as u64)? as usize - 1;
        let deg = pg.undirected_degree(x)?;
        v.entry(ids::DEGREE_LAW).record(deg == expected, || {
            Counterexample::new(g.name(), vec![x], format!("degree {deg}, phi(o(g)) - 1 = {expected}"))
        });
    }

    let mv = v.entry(ids::MUTUAL_GENERATION);
    let edges = pg.undirected_edges();
    let mut expected_pairs = 0usize;
    for x in g.elements() {
        for y in (x + 1)..g.order() {
            if orders[x] != orders[y] {
                continue;
            }
            let same = gens[x] == gens[y];
            expected_pairs += same as usize;
            let has = edges.binary_search(&(x, y)).is_ok();
            mv.record(same == has, || {
                Counterexample::new(
                    g.name(),
                    vec![x, y],
                    format!("same cyclic subgroup = {same}, undirected edge = {has}"),
                )
            });
        }
    }
    mv.record(expected_pairs == edges.len(), || {
        Counterexample::new(g.name(), vec![], format!("{} edges, {expected_pairs} mutual pairs", edges.len()))
    });

    let phi = g.phi();
    let n = g.order() as u64;
    v.entry(ids::EDGE_COUNT)
        .record(2 * edges.len() as u64 + n == phi, || {
            Counterexample::new(g.name(), vec![], format!("{} edges, phi(G) = {phi}", edges.len()))
        });
    let directed: usize = orders.iter().map(|&o| o - 1).sum();
    v.entry(ids::DIRECTED_EDGE_COUNT)
        .record(pg.directed_edge_count() == directed, || {
            Counterexample::new(
                g.name(),
                vec![],
                format!("{} directed edges, sum of (o(g) - 1) = {directed}", pg.directed_edge_count()),
            )
        });
    Ok(v)
}

/// Witness, Sylow and power-graph statements for every catalog group with
/// order in `from..=to`.
pub fn verify_group_sweep(
    from: u64,
    to: u64,
    factory: &GroupFactory,
    jobs: usize,
    power_graph: bool,
) -> Result<SweepReport> {
    let parts = with_pool(jobs, || {
        (from..=to)
            .into_par_iter()
            .map(|n| {
                let mut v = Verdicts::new();
                for g in catalog(n, factory)? {
                    v.merge(verify_group_statements(&g)?.verdicts);
                    if power_graph {
                        v.merge(verify_power_graph(&g)?);
                    }
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut verdicts = Verdicts::new();
    for p in parts {
        verdicts.merge(p);
    }
    Ok(SweepReport {
        description: format!("catalog group sweep over orders {from}..={to}"),
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{alternating, dicyclic};

    #[test]
    fn sieve_matches_totient() {
        let s = totient_sieve(500);
        for n in 1..=500u64 {
            assert_eq!(s[n as usize], totient(n).unwrap());
        }
    }

    #[test]
    fn small_numtheory_sweep() {
        let r = verify_numtheory_sweep(3000, 2).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.verdicts.get(ids::CYCLIC_TWO_FORMS).unwrap().checked, 3000);
        assert!(r.verdicts.get(ids::N_GEQ_BOUND).unwrap().checked > 0);
    }

    #[test]
    fn limit_one_is_vacuous() {
        let r = verify_numtheory_sweep(1, 1).unwrap();
        assert!(r.passed());
        assert!(r.verdicts.get(ids::CYCLIC_LOWER_BOUND).is_none());
    }

    #[test]
    fn power_graph_laws() {
        for g in [alternating(4).unwrap(), dicyclic(3).unwrap()] {
            let v = verify_power_graph(&g).unwrap();
            assert!(v.all_pass(), "{}", v.to_text());
        }
    }

    #[test]
    fn small_group_sweep() {
        let r = verify_group_sweep(1, 24, &GroupFactory::default(), 2, true).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
