//! The construction catalog: every group of a given order that the
//! constructors in this crate can reach. This is a test population, not a
//! classification; it does not claim to contain every isomorphism type.

use std::collections::HashSet;

use num_integer::Integer;

use super::construct::enumerate_semidirect_units;
use super::{FiniteGroup, GroupFactory, Result, SemidirectSpec};
use crate::numtheory::factorize;

/// Integer partitions of `m` in non-increasing order.
fn partitions(m: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// Invariant-factor lists `d_1 | d_2 | ... | d_j` of every abelian group of
/// order `n`, cyclic first.
pub(crate) fn abelian_invariants(n: u64) -> Vec<Vec<u64>> {
    let f = factorize(n).expect("n >= 1");
    let mut choices: Vec<Vec<(u64, Vec<u32>)>> = vec![Vec::new()];
    for &(p, a) in f.factors() {
        let mut next = Vec::new();
        for prefix in &choices {
            for part in partitions(a) {
                let mut extended = prefix.clone();
                extended.push((p, part));
                next.push(extended);
            }
        }
        choices = next;
    }
    choices
        .into_iter()
        .map(|choice| {
            let len = choice.iter().map(|(_, part)| part.len()).max().unwrap_or(0);
            let mut factors: Vec<u64> = (0..len)
                .map(|i| {
                    choice
                        .iter()
                        .map(|(p, part)| part.get(i).map_or(1, |&e| p.pow(e)))
                        .product()
                })
                .collect();
            factors.sort_unstable();
            factors
        })
        .collect()
}

/// Non-abelian groups of order `n` that are built directly (not as products).
fn basic_nonabelian(n: u64, factory: &GroupFactory) -> Result<Vec<FiniteGroup>> {
    let mut out = Vec::new();
    if n.is_multiple_of(2) && n / 2 >= 3 {
        out.push(factory.dihedral(n / 2)?);
    }
    if n.is_multiple_of(4) && n / 4 >= 2 {
        out.push(factory.dicyclic(n / 4)?);
    }
    for k in 3..=6u64 {
        let fact: u64 = (1..=k).product();
        if fact == n {
            out.push(factory.symmetric(k)?);
        }
        if k >= 4 && fact / 2 == n {
            out.push(factory.alternating(k)?);
        }
    }
    for (a, b) in coprime_splits(n) {
        for r in enumerate_semidirect_units(a, b) {
            if r != 1 {
                out.push(factory.semidirect_cyclic(SemidirectSpec { a, b, r })?);
            }
        }
    }
    Ok(out)
}

/// Factorizations `n = a * b` with `gcd(a, b) = 1` and `a, b >= 2`.
fn coprime_splits(n: u64) -> Vec<(u64, u64)> {
    (2..n)
        .filter(|&a| n.is_multiple_of(a))
        .map(|a| (a, n / a))
        .filter(|&(a, b)| b >= 2 && a.gcd(&b) == 1)
        .collect()
}

/// Catalog of groups of order `n`, deduplicated by name.
///
/// Contains every abelian group, `D_{n/2}`, `Dic_{n/4}`, `S_k`/`A_k` of
/// matching order, every `C_a x|_r C_b` over coprime splits (including the
/// direct `r = 1` case), and direct products of the non-abelian constructions
/// of a proper order with each abelian group of the complementary order.
pub fn catalog(n: u64, factory: &GroupFactory) -> Result<Vec<FiniteGroup>> {
    factory.check_cap(n)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |g: FiniteGroup, out: &mut Vec<FiniteGroup>| {
        if seen.insert(g.name().to_string()) {
            out.push(g);
        }
    };
    for inv in abelian_invariants(n) {
        push(factory.abelian(&inv)?, &mut out);
    }
    for g in basic_nonabelian(n, factory)? {
        push(g, &mut out);
    }
    for (a, b) in coprime_splits(n) {
        push(
            factory.semidirect_cyclic(SemidirectSpec { a, b, r: 1 })?,
            &mut out,
        );
    }
    for d in (6..n).filter(|d| n.is_multiple_of(*d)) {
        let complements = abelian_invariants(n / d);
        for base in basic_nonabelian(d, factory)? {
            for inv in &complements {
                let a = factory.abelian(inv)?;
                push(factory.direct_product(&base, &a)?, &mut out);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: u64) -> Vec<String> {
        catalog(n, &GroupFactory::default())
            .unwrap()
            .iter()
            .map(|g| g.name().to_string())
            .collect()
    }

    #[test]
    fn partitions_counts() {
        let counts: Vec<usize> = (1..=6).map(|m| partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn abelian_invariant_factors() {
        assert_eq!(abelian_invariants(4), vec![vec![4], vec![2, 2]]);
        assert_eq!(abelian_invariants(12), vec![vec![12], vec![2, 6]]);
        assert_eq!(abelian_invariants(1), vec![Vec::<u64>::new()]);
        assert_eq!(abelian_invariants(16).len(), 5);
    }

    #[test]
    fn order_four() {
        assert_eq!(names(4), vec!["C4", "C2xC2"]);
    }

    #[test]
    fn order_six() {
        let ns = names(6);
        assert!(ns.contains(&"C6".to_string()));
        assert!(ns.contains(&"C3:C2[r=2]".to_string()));
        assert!(ns.contains(&"D3".to_string()));
        assert!(ns.contains(&"S3".to_string()));
    }

    #[test]
    fn order_twelve() {
        let ns = names(12);
        for expected in ["C12", "C2xC6", "D6", "Dic3", "A4", "C3:C4[r=2]"] {
            assert!(ns.contains(&expected.to_string()), "missing {expected} in {ns:?}");
        }
    }

    #[test]
    fn order_sixteen_includes_c2_times_quaternion() {
        let ns = names(16);
        assert!(ns.contains(&"Dic2 x C2".to_string()), "{ns:?}");
        assert!(ns.contains(&"C4xC4".to_string()));
    }

    #[test]
    fn every_entry_has_the_right_order() {
        let factory = GroupFactory::default();
        for n in 1..=40 {
            let groups = catalog(n, &factory).unwrap();
            assert!(!groups.is_empty());
            assert!(groups[0].is_cyclic());
            assert!(groups.iter().all(|g| g.order() as u64 == n));
        }
    }

    #[test]
    fn cap_applies() {
        assert!(catalog(50, &GroupFactory::with_cap(40)).is_err());
    }
}
