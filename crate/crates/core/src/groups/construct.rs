//! Concrete group constructions. Every constructor returns a validated
//! table whose identity is element 0.

use std::collections::HashMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupError, GroupFactory, Result};

/// Parameters of the cyclic semidirect product `C_a x|_r C_b`, where the
/// generator of `C_b` acts on `C_a` as multiplication by `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemidirectSpec {
    pub a: u64,
    pub b: u64,
    pub r: u64,
}

impl SemidirectSpec {
    pub fn new(a: u64, b: u64, r: u64) -> Result<Self> {
        let spec = SemidirectSpec { a, b, r };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let SemidirectSpec { a, b, r } = *self;
        let invalid = |reason| GroupError::InvalidSemidirect { a, b, r, reason };
        if a == 0 || b == 0 {
            return Err(invalid("a and b must be positive"));
        }
        if r == 0 || (a > 1 && r >= a) || (a == 1 && r != 1) {
            return Err(invalid("r must lie in [1, a)"));
        }
        if r.gcd(&a) != 1 {
            return Err(invalid("r is not a unit modulo a"));
        }
        if pow_mod(r, b, a) != 1 % a {
            return Err(invalid("r^b is not 1 modulo a"));
        }
        Ok(())
    }

    pub fn order(&self) -> u64 {
        self.a * self.b
    }

    pub fn is_coprime(&self) -> bool {
        self.a.gcd(&self.b) == 1
    }

    pub fn is_direct(&self) -> bool {
        self.r % self.a.max(1) == 1 % self.a.max(1)
    }

    /// The same pair of factors with the trivial action.
    pub fn direct(&self) -> SemidirectSpec {
        SemidirectSpec { r: 1, ..*self }
    }

    pub fn name(&self) -> String {
        format!("C{}:C{}[r={}]", self.a, self.b, self.r)
    }
}

fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut result = 1u128;
    let mut b = base as u128 % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    result as u64
}

/// All `r` in `[1, a)` with `gcd(r, a) = 1` and `r^b = 1 (mod a)`; `[1]`
/// when `a = 1`.
pub fn enumerate_semidirect_units(a: u64, b: u64) -> Vec<u64> {
    if a <= 1 {
        return vec![1];
    }
    (1..a)
        .filter(|&r| r.gcd(&a) == 1 && pow_mod(r, b, a) == 1)
        .collect()
}

fn build_table(n: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<u32> {
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(mul(i, j) as u32);
        }
    }
    table
}

fn to_usize(value: u64) -> Result<usize> {
    usize::try_from(value).map_err(|_| GroupError::InvalidArgument(format!("{value} too large")))
}

impl GroupFactory {
    pub fn cyclic(&self, n: u64) -> Result<FiniteGroup> {
        self.check_cap(n)?;
        let n = to_usize(n)?;
        let table = build_table(n, |i, j| (i + j) % n);
        let labels = (0..n).map(|i| i.to_string()).collect();
        self.finish(format!("C{n}"), n, table, 0, Some(labels))
    }

    /// `C_{d_1} x ... x C_{d_j}`; the empty list gives the trivial group.
    pub fn abelian(&self, moduli: &[u64]) -> Result<FiniteGroup> {
        if moduli.contains(&0) {
            return Err(GroupError::InvalidArgument("cyclic factor of order 0".into()));
        }
        let order = moduli
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| GroupError::InvalidArgument("order overflow".into()))?;
        self.check_cap(order)?;
        let n = to_usize(order)?;
        let dims: Vec<usize> = moduli.iter().map(|&d| d as usize).collect();
        let digits = |mut x: usize| -> Vec<usize> {
            let mut out = vec![0; dims.len()];
            for (slot, &d) in out.iter_mut().zip(&dims).rev() {
                *slot = x % d;
                x /= d;
            }
            out
        };
        let coords: Vec<Vec<usize>> = (0..n).map(digits).collect();
        let table = build_table(n, |i, j| {
            coords[i]
                .iter()
                .zip(&coords[j])
                .zip(&dims)
                .fold(0, |acc, ((&x, &y), &d)| acc * d + (x + y) % d)
        });
        let labels = coords
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let name = if moduli.is_empty() {
            "C1".to_string()
        } else {
            moduli
                .iter()
                .map(|d| format!("C{d}"))
                .collect::<Vec<_>>()
                .join("x")
        };
        self.finish(name, n, table, 0, Some(labels))
    }

    /// Dihedral group of order `2m` (symmetries of an `m`-gon).
    pub fn dihedral(&self, m: u64) -> Result<FiniteGroup> {
        if m == 0 {
            return Err(GroupError::InvalidArgument("dihedral(0)".into()));
        }
        self.check_cap(2 * m)?;
        let m = to_usize(m)?;
        let n = 2 * m;
        // index j*m + i is r^i s^j
        let table = build_table(n, |x, y| {
            let (i, j) = (x % m, x / m);
            let (k, l) = (y % m, y / m);
            let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            ((j + l) % 2) * m + rot
        });
        let labels = (0..n)
            .map(|x| {
                if x < m {
                    format!("r{}", x)
                } else {
                    format!("r{}s", x - m)
                }
            })
            .collect();
        self.finish(format!("D{m}"), n, table, 0, Some(labels))
    }

    /// Dicyclic group of order `4m`: `<a, x | a^(2m), x^2 = a^m, x a x^-1 = a^-1>`.
    /// `dicyclic(2)` is the quaternion group.
    pub fn dicyclic(&self, m: u64) -> Result<FiniteGroup> {
        if m == 0 {
            return Err(GroupError::InvalidArgument("dicyclic(0)".into()));
        }
        self.check_cap(4 * m)?;
        let m = to_usize(m)?;
        let half = 2 * m;
        let n = 2 * half;
        // index j*2m + i is a^i x^j
        let table = build_table(n, |p, q| {
            let (i, j) = (p % half, p / half);
            let (k, l) = (q % half, q / half);
            if j == 0 {
                l * half + (i + k) % half
            } else if l == 0 {
                half + (i + half - k) % half
            } else {
                (i + half - k + m) % half
            }
        });
        let labels = (0..n)
            .map(|p| {
                if p < half {
                    format!("a{}", p)
                } else {
                    format!("a{}x", p - half)
                }
            })
            .collect();
        self.finish(format!("Dic{m}"), n, table, 0, Some(labels))
    }

    /// Symmetric group on `k <= 6` points.
    pub fn symmetric(&self, k: u64) -> Result<FiniteGroup> {
        self.permutation_group(k, false)
    }

    /// Alternating group on `k <= 6` points.
    pub fn alternating(&self, k: u64) -> Result<FiniteGroup> {
        self.permutation_group(k, true)
    }

    fn permutation_group(&self, k: u64, even_only: bool) -> Result<FiniteGroup> {
        if !(1..=6).contains(&k) {
            return Err(GroupError::InvalidArgument(format!(
                "permutation degree {k} outside 1..=6"
            )));
        }
        let k = k as usize;
        let perms: Vec<Vec<u8>> = permutations(k)
            .into_iter()
            .filter(|p| !even_only || is_even(p))
            .collect();
        let n = perms.len();
        self.check_cap(n as u64)?;
        let index: HashMap<&[u8], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        // (s * t)(x) = s(t(x))
        let table = build_table(n, |i, j| {
            let composed: Vec<u8> = perms[j].iter().map(|&x| perms[i][x as usize]).collect();
            index[composed.as_slice()]
        });
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        let name = if even_only { format!("A{k}") } else { format!("S{k}") };
        self.finish(name, n, table, 0, Some(labels))
    }

    /// `G x H` with element `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(&self, g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
        let (m, k) = (g.order(), h.order());
        self.check_cap((m as u64).saturating_mul(k as u64))?;
        let n = m * k;
        let table = build_table(n, |x, y| {
            g.mul(x / k, y / k) * k + h.mul(x % k, y % k)
        });
        let identity = g.identity() * k + h.identity();
        let labels = (0..n)
            .map(|x| format!("({},{})", g.label(x / k), h.label(x % k)))
            .collect();
        let name = format!("{} x {}", wrap_name(g.name()), wrap_name(h.name()));
        let product = self.finish(name, n, table, identity, Some(labels))?;
        debug_assert!(product.elements().all(|x| {
            let (ou, ot) = (g.element_orders()[x / k], h.element_orders()[x % k]);
            product.element_orders()[x] == ou.lcm(&ot)
        }));
        Ok(product)
    }

    /// `C_a x|_r C_b`: pairs `(u, t)` at index `u * b + t`, multiplied as
    /// `(u1, t1)(u2, t2) = (u1 + r^t1 u2 mod a, t1 + t2 mod b)`.
    pub fn semidirect_cyclic(&self, spec: SemidirectSpec) -> Result<FiniteGroup> {
        spec.validate()?;
        self.check_cap(spec.order())?;
        let a = spec.a as usize;
        let b = spec.b as usize;
        let n = a * b;
        let twist: Vec<usize> = (0..b)
            .map(|t| pow_mod(spec.r, t as u64, spec.a) as usize)
            .collect();
        let table = build_table(n, |x, y| {
            let (u1, t1) = (x / b, x % b);
            let (u2, t2) = (y / b, y % b);
            ((u1 + twist[t1] * u2) % a) * b + (t1 + t2) % b
        });
        let labels = (0..n).map(|x| format!("({},{})", x / b, x % b)).collect();
        self.finish(spec.name(), n, table, 0, Some(labels))
    }
}

fn wrap_name(name: &str) -> String {
    if name.contains(' ') {
        format!("({name})")
    } else {
        name.to_string()
    }
}

fn permutations(k: usize) -> Vec<Vec<u8>> {
    // lexicographic order, identity first
    let mut current: Vec<u8> = (0..k as u8).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..k).rev().find(|&j| current[j] > current[i]).expect("pivot");
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

pub fn cyclic(n: u64) -> Result<FiniteGroup> {
    GroupFactory::default().cyclic(n)
}

pub fn abelian(moduli: &[u64]) -> Result<FiniteGroup> {
    GroupFactory::default().abelian(moduli)
}

pub fn dihedral(m: u64) -> Result<FiniteGroup> {
    GroupFactory::default().dihedral(m)
}

pub fn dicyclic(m: u64) -> Result<FiniteGroup> {
    GroupFactory::default().dicyclic(m)
}

pub fn symmetric(k: u64) -> Result<FiniteGroup> {
    GroupFactory::default().symmetric(k)
}

pub fn alternating(k: u64) -> Result<FiniteGroup> {
    GroupFactory::default().alternating(k)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    GroupFactory::default().direct_product(g, h)
}

pub fn semidirect_cyclic(spec: SemidirectSpec) -> Result<FiniteGroup> {
    GroupFactory::default().semidirect_cyclic(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census(g: &FiniteGroup) -> Vec<usize> {
        g.order_census()
    }

    #[test]
    fn cyclic_basics() {
        let g = cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        let g = cyclic(12).unwrap();
        assert!(g.is_cyclic());
        assert_eq!(g.element_order(1).unwrap(), 12);
    }

    #[test]
    fn dihedral_four_has_five_involutions() {
        let g = dihedral(4).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(census(&g)[2], 5);
        assert!(!g.is_abelian());
    }

    #[test]
    fn quaternion_census() {
        let q = dicyclic(2).unwrap();
        assert_eq!(q.order(), 8);
        let c = census(&q);
        assert_eq!((c[1], c[2], c[4]), (1, 1, 6));
        assert!(!q.is_abelian());
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        let a4 = alternating(4).unwrap();
        assert_eq!(a4.order(), 12);
        let c = census(&a4);
        assert_eq!((c[1], c[2], c[3]), (1, 3, 8));
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert!(symmetric(7).is_err());
        assert!(symmetric(0).is_err());
    }

    #[test]
    fn three_cycles_have_order_three() {
        let s3 = symmetric(3).unwrap();
        for g in s3.elements() {
            // repeated-product oracle
            let mut x = g;
            let mut m = 1;
            while x != s3.identity() {
                x = s3.mul(x, g);
                m += 1;
            }
            assert_eq!(s3.element_order(g).unwrap(), m);
            if s3.label(g).split(' ').count() == 3 {
                assert_eq!(m, 3);
            }
        }
    }

    #[test]
    fn abelian_partition() {
        let v4 = abelian(&[2, 2]).unwrap();
        assert_eq!(v4.name(), "C2xC2");
        assert!(!v4.is_cyclic());
        assert_eq!(abelian(&[]).unwrap().order(), 1);
        assert!(abelian(&[2, 0]).is_err());
    }

    #[test]
    fn direct_product_of_coprime_cyclics_is_cyclic() {
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert!(g.is_cyclic());
        let c4 = cyclic(4).unwrap();
        let g = direct_product(&c4, &c4).unwrap();
        assert_eq!(g.phi(), 28);
        let g = direct_product(&c4, &cyclic(1).unwrap()).unwrap();
        assert_eq!(g.table(), c4.table());
    }

    #[test]
    fn semidirect_examples() {
        let s = semidirect_cyclic(SemidirectSpec::new(3, 2, 2).unwrap()).unwrap();
        let c = census(&s);
        assert_eq!((c[1], c[2], c[3]), (1, 3, 2));
        let g = semidirect_cyclic(SemidirectSpec::new(5, 4, 2).unwrap()).unwrap();
        assert_eq!(g.order(), 20);
        assert!(!g.is_cyclic());
        let d = semidirect_cyclic(SemidirectSpec::new(3, 4, 1).unwrap()).unwrap();
        assert!(d.is_cyclic());
    }

    #[test]
    fn semidirect_validation() {
        assert!(SemidirectSpec::new(5, 3, 2).is_err());
        assert!(SemidirectSpec::new(6, 2, 2).is_err());
        assert!(SemidirectSpec::new(6, 2, 5).is_ok());
        assert!(SemidirectSpec::new(3, 2, 3).is_err());
        assert!(SemidirectSpec::new(1, 4, 1).is_ok());
    }

    #[test]
    fn unit_enumeration() {
        assert_eq!(enumerate_semidirect_units(3, 2), vec![1, 2]);
        assert_eq!(enumerate_semidirect_units(5, 3), vec![1]);
        assert_eq!(enumerate_semidirect_units(7, 3), vec![1, 2, 4]);
        assert_eq!(enumerate_semidirect_units(1, 5), vec![1]);
    }

    #[test]
    fn cycle_labels() {
        assert_eq!(cycle_notation(&[0, 1, 2]), "()");
        assert_eq!(cycle_notation(&[1, 2, 0]), "(1 2 3)");
        assert_eq!(cycle_notation(&[1, 0, 3, 2]), "(1 2)(3 4)");
    }
}
