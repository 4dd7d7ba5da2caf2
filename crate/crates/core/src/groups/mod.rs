//! Finite groups stored as dense Cayley tables.
//!
//! Elements are indices `0..n`. A [`FiniteGroup`] is only ever handed out
//! after its table has been validated against the group axioms, so every
//! other module can treat products as total and associative.

mod catalog;
mod construct;
mod io;
mod spec;
mod subgroup;
mod sylow;

pub use catalog::catalog;
pub use construct::{
    abelian, cyclic, dicyclic, dihedral, direct_product, enumerate_semidirect_units,
    semidirect_cyclic, symmetric, alternating, SemidirectSpec,
};
pub use io::CayleyJson;
pub use spec::{GroupSpec, SpecParseError};
pub use subgroup::Subgroup;
pub use sylow::{count_sylow, sylow_subgroup};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numtheory;

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("Cayley table is empty")]
    Empty,
    #[error("Cayley table is not square: row {row} has {len} entries")]
    NotSquare { row: usize, len: usize },
    #[error("not closed: table[{row}][{col}] = {value} is out of range")]
    NotClosed { row: usize, col: usize, value: usize },
    #[error("element {0} is not a two-sided identity")]
    NoIdentity(usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element index {index} out of range for a group of order {order}")]
    InvalidElement { index: usize, order: usize },
    #[error("order {order} exceeds the order cap {cap}")]
    OrderCapExceeded { order: u64, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {prime} does not divide the group order {order}")]
    PrimeNotDividing { prime: u64, order: usize },
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(&'static str),
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
    #[error("invalid semidirect product C{a} x| C{b} with r = {r}: {reason}")]
    InvalidSemidirect {
        a: u64,
        b: u64,
        r: u64,
        reason: &'static str,
    },
    #[error("invalid construction argument: {0}")]
    InvalidArgument(String),
    #[error("declared order {declared} does not match table size {actual}")]
    OrderMismatch { declared: usize, actual: usize },
    #[error(transparent)]
    Spec(#[from] SpecParseError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, GroupError>;

/// Size limits and validation policy for constructed groups.
///
/// Associativity is verified exhaustively up to `assoc_full_max` (never
/// below 512) and by `assoc_samples` seeded random triples above that.
#[derive(Clone, Debug)]
pub struct GroupFactory {
    pub order_cap: usize,
    pub assoc_full_max: usize,
    pub assoc_samples: usize,
    pub seed: u64,
}

pub const DEFAULT_ORDER_CAP: usize = 2000;
pub const ALWAYS_FULL_ASSOC: usize = 512;

impl Default for GroupFactory {
    fn default() -> Self {
        GroupFactory {
            order_cap: DEFAULT_ORDER_CAP,
            assoc_full_max: ALWAYS_FULL_ASSOC,
            assoc_samples: 200_000,
            seed: 0x5eed_cafe,
        }
    }
}

impl GroupFactory {
    pub fn with_cap(order_cap: usize) -> Self {
        GroupFactory {
            order_cap,
            ..Default::default()
        }
    }

    pub fn check_cap(&self, order: u64) -> Result<()> {
        if order == 0 || order > self.order_cap as u64 {
            return Err(GroupError::OrderCapExceeded {
                order,
                cap: self.order_cap,
            });
        }
        Ok(())
    }

    /// Validates a row-major table and wraps it as a group.
    pub fn finish(
        &self,
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
        identity: usize,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup> {
        if order == 0 {
            return Err(GroupError::Empty);
        }
        self.check_cap(order as u64)?;
        debug_assert_eq!(table.len(), order * order);
        if let Some((pos, &value)) = table.iter().enumerate().find(|(_, &v)| v as usize >= order) {
            return Err(GroupError::NotClosed {
                row: pos / order,
                col: pos % order,
                value: value as usize,
            });
        }
        if identity >= order {
            return Err(GroupError::NoIdentity(identity));
        }
        for i in 0..order {
            if table[identity * order + i] as usize != i || table[i * order + identity] as usize != i {
                return Err(GroupError::NoIdentity(identity));
            }
        }
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            match row.iter().position(|&v| v as usize == identity) {
                Some(j) => inverses[i] = j as u32,
                None => return Err(GroupError::NoInverse(i)),
            }
        }
        if order <= self.assoc_full_max.max(ALWAYS_FULL_ASSOC) {
            check_associative_full(&table, order)?;
        } else {
            check_associative_sampled(&table, order, self.assoc_samples, self.seed)?;
        }
        if let Some(labels) = &labels {
            if labels.len() != order {
                return Err(GroupError::InvalidArgument(format!(
                    "{} labels for {} elements",
                    labels.len(),
                    order
                )));
            }
        }
        let orders = compute_orders(&table, order, identity);
        Ok(FiniteGroup {
            name: name.into(),
            order,
            table,
            identity,
            labels,
            orders,
            inverses,
        })
    }
}

fn check_associative_full(table: &[u32], n: usize) -> Result<()> {
    for i in 0..n {
        let row_i = &table[i * n..(i + 1) * n];
        for j in 0..n {
            let ij = row_i[j] as usize;
            let row_ij = &table[ij * n..(ij + 1) * n];
            let row_j = &table[j * n..(j + 1) * n];
            for k in 0..n {
                if row_ij[k] != row_i[row_j[k] as usize] {
                    return Err(GroupError::NotAssociative(i, j, k));
                }
            }
        }
    }
    Ok(())
}

fn check_associative_sampled(table: &[u32], n: usize, samples: usize, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let lhs = table[table[i * n + j] as usize * n + k];
        let rhs = table[i * n + table[j * n + k] as usize];
        if lhs != rhs {
            return Err(GroupError::NotAssociative(i, j, k));
        }
    }
    Ok(())
}

fn compute_orders(table: &[u32], n: usize, identity: usize) -> Vec<usize> {
    (0..n)
        .map(|g| {
            let mut x = g;
            let mut m = 1;
            while x != identity {
                x = table[x * n + g] as usize;
                m += 1;
            }
            m
        })
        .collect()
}

/// Validates a nested Cayley table with the default factory settings.
pub fn from_cayley(table: &[Vec<usize>], identity: usize) -> Result<FiniteGroup> {
    from_cayley_named("G", table, identity, None, &GroupFactory::default())
}

pub fn from_cayley_named(
    name: &str,
    table: &[Vec<usize>],
    identity: usize,
    labels: Option<Vec<String>>,
    factory: &GroupFactory,
) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    factory.check_cap(n as u64)?;
    let mut flat = Vec::with_capacity(n * n);
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(GroupError::NotSquare {
                row,
                len: entries.len(),
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(GroupError::NotClosed { row, col, value });
            }
            flat.push(value as u32);
        }
    }
    factory.finish(name, n, flat, identity, labels)
}

/// A validated finite group. Immutable after construction.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    identity: usize,
    labels: Option<Vec<String>>,
    orders: Vec<usize>,
    inverses: Vec<u32>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.identity == other.identity && self.table == other.table
    }
}

impl FiniteGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of an element, falling back to its index.
    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(labels) => labels[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `a^k` for `k >= 0`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        let k = k % self.orders[a];
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// `g h g^-1`.
    #[inline]
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn check_element(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(GroupError::InvalidElement {
                index: g,
                order: self.order,
            })
        }
    }

    /// Smallest `m >= 1` with `g^m = e`.
    pub fn element_order(&self, g: usize) -> Result<usize> {
        self.check_element(g)?;
        Ok(self.orders[g])
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    /// Row-major Cayley table.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// The powers `e, g, g^2, ...` of `g`, in that order.
    pub fn cyclic_powers(&self, g: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.orders[g]);
        let mut x = self.identity;
        for _ in 0..self.orders[g] {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    /// True iff some element has order `|G|`.
    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Number of elements of each order, indexed by order.
    pub fn order_census(&self) -> Vec<usize> {
        let mut census = vec![0usize; self.order + 1];
        for &o in &self.orders {
            census[o] += 1;
        }
        census
    }

    /// The totient sum `sum_g phi(o(g))`.
    pub fn phi(&self) -> u64 {
        let census = self.order_census();
        census
            .iter()
            .enumerate()
            .filter(|(_, &count)| count > 0)
            .map(|(o, &count)| count as u64 * numtheory::totient(o as u64).expect("order >= 1"))
            .sum()
    }

    /// Largest `phi(o(g))` over the group.
    pub fn max_phi_order(&self) -> u64 {
        self.orders
            .iter()
            .map(|&o| numtheory::totient(o as u64).expect("order >= 1"))
            .max()
            .unwrap_or(1)
    }
}

/// Shorthand for [`FiniteGroup::phi`].
pub fn phi_of_group(g: &FiniteGroup) -> u64 {
    g.phi()
}
