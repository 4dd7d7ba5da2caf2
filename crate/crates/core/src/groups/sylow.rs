//! Sylow subgroups by normalizer-guided growth.
//!
//! Starting from the cyclic subgroup of a largest `q`-element, a `q`-subgroup
//! `H` that is not yet Sylow always has a `q`-element in `N_G(H) \ H`
//! (because `q` divides `|N_G(H) : H|`), and adjoining it yields a strictly
//! larger `q`-group. The loop stops at the full `q`-part of `|G|`.

use super::{FiniteGroup, GroupError, Result, Subgroup};
use crate::numtheory::is_prime;

fn q_part(order: usize, q: u64) -> usize {
    let q = q as usize;
    let mut part = 1;
    let mut rest = order;
    while rest.is_multiple_of(q) {
        rest /= q;
        part *= q;
    }
    part
}

fn is_q_power(mut x: usize, q: usize) -> bool {
    while x.is_multiple_of(q) {
        x /= q;
    }
    x == 1
}

/// A Sylow `q`-subgroup of `g`; the trivial subgroup when `q` does not
/// divide `|G|`.
pub fn sylow_subgroup(g: &FiniteGroup, q: u64) -> Result<Subgroup<'_>> {
    if !is_prime(q) {
        return Err(GroupError::NotPrime(q));
    }
    let target = q_part(g.order(), q);
    if target == 1 {
        return Ok(Subgroup::trivial(g));
    }
    let qu = q as usize;
    let orders = g.element_orders();
    let start = g
        .elements()
        .filter(|&x| is_q_power(orders[x], qu))
        .max_by_key(|&x| (orders[x], std::cmp::Reverse(x)))
        .expect("identity is a q-element");
    let mut current = g.generated_subgroup(&[start])?;
    while current.order() < target {
        let normalizer = g.normalizer(&current)?;
        let extension = normalizer
            .members()
            .iter()
            .copied()
            .filter(|&x| !current.contains(x) && is_q_power(orders[x], qu))
            .max_by_key(|&x| (orders[x], std::cmp::Reverse(x)))
            .expect("a non-Sylow q-subgroup has a q-element in its normalizer outside it");
        let mut gens = vec![extension];
        gens.extend_from_slice(current.members());
        let grown = g.generated_subgroup(&gens)?;
        debug_assert!(is_q_power(grown.order(), qu) && grown.order() > current.order());
        current = grown;
    }
    debug_assert_eq!(current.order(), target);
    Ok(current)
}

/// Number of Sylow `q`-subgroups, as the index of the normalizer of one.
pub fn count_sylow(g: &FiniteGroup, q: u64) -> Result<usize> {
    if !is_prime(q) {
        return Err(GroupError::NotPrime(q));
    }
    if !g.order().is_multiple_of(q as usize) {
        return Err(GroupError::PrimeNotDividing {
            prime: q,
            order: g.order(),
        });
    }
    let p = sylow_subgroup(g, q)?;
    let count = g.normalizer(&p)?.index();
    debug_assert_eq!(count % q as usize, 1);
    debug_assert_eq!((g.order() / p.order()) % count, 0);
    Ok(count)
}
