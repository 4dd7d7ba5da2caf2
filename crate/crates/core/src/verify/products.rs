use num_integer::Integer;
use rayon::prelude::*;

use super::{ids, with_pool, Counterexample, Result, Verdicts};
use crate::groups::{
    enumerate_semidirect_units, FiniteGroup, GroupError, GroupFactory, GroupSpec, SemidirectSpec,
};
use crate::numtheory::totient;

fn is_elementary_abelian_2(g: &FiniteGroup) -> bool {
    g.element_orders().iter().all(|&o| o <= 2)
}

fn is_twice_odd(n: usize) -> bool {
    n.is_multiple_of(2) && (n / 2) % 2 == 1
}

/// `phi(U x T) <= phi(U) phi(T)`, with equality when the orders are coprime,
/// when `U` is an elementary abelian 2-group, or when `gcd(|U|, |T|) = 2`
/// and `|U|` is twice an odd number. Also checks `o((u, t)) = lcm(o(u), o(t))`.
pub fn verify_product_lemmas(
    u: &FiniteGroup,
    t: &FiniteGroup,
    factory: &GroupFactory,
) -> Result<Verdicts> {
    let g = factory.direct_product(u, t)?;
    let mut verdicts = Verdicts::new();
    let (phi_g, phi_u, phi_t) = (g.phi(), u.phi(), t.phi());
    let name = g.name().to_string();
    let detail = || format!("phi(G) = {phi_g}, phi(U) phi(T) = {}", phi_u * phi_t);

    verdicts
        .entry(ids::PRODUCT_BOUND)
        .record(phi_g <= phi_u * phi_t, || Counterexample::new(&name, vec![], detail()));

    let (nu, nt) = (u.order(), t.order());
    let gcd = nu.gcd(&nt);
    let equal = phi_g == phi_u * phi_t;
    if gcd == 1 {
        verdicts
            .entry(ids::PRODUCT_COPRIME)
            .record(equal, || Counterexample::new(&name, vec![], detail()));
    }
    if is_elementary_abelian_2(u) {
        verdicts
            .entry(ids::PRODUCT_ELEM2)
            .record(equal, || Counterexample::new(&name, vec![], detail()));
    }
    if gcd == 2 && is_twice_odd(nu) {
        verdicts
            .entry(ids::PRODUCT_TWICE_ODD)
            .record(equal, || Counterexample::new(&name, vec![], detail()));
    }

    let v = verdicts.entry(ids::PRODUCT_ORDER_LAW);
    for x in u.elements() {
        for y in t.elements() {
            let ox = u.element_orders()[x];
            let oy = t.element_orders()[y];
            let idx = x * nt + y;
            let o = g.element_orders()[idx];
            v.record(o == ox.lcm(&oy), || {
                Counterexample::new(
                    &name,
                    vec![idx],
                    format!("o(({x},{y})) = {o}, lcm({ox}, {oy}) = {}", ox.lcm(&oy)),
                )
            });
        }
    }
    Ok(verdicts)
}

/// Compares `C_a x|_r C_b` with `C_a x C_b` on the shared index set: every
/// element order divides its direct-product order, `phi` is bounded by the
/// direct one with equality exactly when `r = 1`, and the product is cyclic
/// exactly when `r = 1`. Requires `gcd(a, b) = 1`.
pub fn verify_semidirect_lemmas(spec: SemidirectSpec, factory: &GroupFactory) -> Result<Verdicts> {
    spec.validate()?;
    if !spec.is_coprime() {
        return Err(GroupError::InvalidSemidirect {
            a: spec.a,
            b: spec.b,
            r: spec.r,
            reason: "a and b must be coprime",
        }
        .into());
    }
    let g = factory.semidirect_cyclic(spec)?;
    let h = factory.semidirect_cyclic(spec.direct())?;
    let mut verdicts = Verdicts::new();
    let name = g.name().to_string();

    let (og, oh) = (g.element_orders(), h.element_orders());
    let v = verdicts.entry(ids::SEMIDIRECT_ORDER_DIVIDES);
    for x in g.elements() {
        v.record(oh[x] % og[x] == 0, || {
            Counterexample::new(
                &name,
                vec![x],
                format!("order {} does not divide direct order {}", og[x], oh[x]),
            )
        });
    }
    // the totient of a divisor divides the totient of the multiple
    let v = verdicts.entry(ids::SEMIDIRECT_PHI_BOUND);
    for x in g.elements() {
        let (a, b) = (totient(og[x] as u64)?, totient(oh[x] as u64)?);
        v.record(b % a == 0, || {
            Counterexample::new(&name, vec![x], format!("phi({}) = {a} does not divide phi({}) = {b}", og[x], oh[x]))
        });
    }
    let (phi_g, phi_h) = (g.phi(), h.phi());
    v.record(phi_g <= phi_h, || {
        Counterexample::new(&name, vec![], format!("phi = {phi_g} > direct {phi_h}"))
    });

    let direct = spec.is_direct();
    verdicts
        .entry(ids::SEMIDIRECT_EQUALITY)
        .record((phi_g == phi_h) == direct, || {
            Counterexample::new(
                &name,
                vec![],
                format!("phi = {phi_g}, direct phi = {phi_h}, r = {}", spec.r),
            )
        });
    verdicts
        .entry(ids::SEMIDIRECT_CYCLIC)
        .record(g.is_cyclic() == direct, || {
            Counterexample::new(&name, vec![], format!("cyclic = {}, r = {}", g.is_cyclic(), spec.r))
        });
    Ok(verdicts)
}

/// [`verify_semidirect_lemmas`] for every coprime `(a, b)` with
/// `2 <= a`, `1 <= b`, `ab <= max_order` and every admissible `r`.
pub fn verify_semidirect_sweep(
    max_order: u64,
    factory: &GroupFactory,
    jobs: usize,
) -> Result<Verdicts> {
    let mut specs = Vec::new();
    for a in 2..=max_order {
        for b in 1..=max_order / a {
            if a.gcd(&b) == 1 {
                for r in enumerate_semidirect_units(a, b) {
                    specs.push(SemidirectSpec { a, b, r });
                }
            }
        }
    }
    let parts = with_pool(jobs, || {
        specs
            .par_iter()
            .map(|&s| verify_semidirect_lemmas(s, factory))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut out = Verdicts::new();
    for p in parts {
        out.merge(p);
    }
    Ok(out)
}

/// Fixed `(U, T)` pairs covering each equality hypothesis and some strict
/// cases.
pub fn product_lemma_grid() -> Vec<(GroupSpec, GroupSpec)> {
    use GroupSpec::*;
    vec![
        (Cyclic(2), Cyclic(3)),
        (Cyclic(4), Cyclic(4)),
        (Abelian(vec![2, 2]), Cyclic(4)),
        (Abelian(vec![2, 2]), Symmetric(3)),
        (Abelian(vec![2, 2, 2]), Dihedral(4)),
        (Cyclic(2), Dicyclic(2)),
        (Cyclic(2), Cyclic(2)),
        (Cyclic(6), Cyclic(4)),
        (Cyclic(6), Dihedral(4)),
        (Symmetric(3), Cyclic(4)),
        (Symmetric(3), Abelian(vec![2, 2])),
        (Cyclic(10), Dicyclic(3)),
        (Cyclic(3), Cyclic(9)),
        (Symmetric(3), Symmetric(3)),
        (Dihedral(4), Dicyclic(2)),
        (Cyclic(5), Alternating(4)),
        (Cyclic(3), Cyclic(4)),
        (Dihedral(5), Cyclic(3)),
        (Cyclic(4), Cyclic(6)),
        (Abelian(vec![3, 3]), Cyclic(3)),
    ]
}
