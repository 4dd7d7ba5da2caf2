//! Exact integer and rational arithmetic: factorization, the Euler totient,
//! the totient sum of a cyclic group in both closed forms, the quantity `Q`
//! and the number-theoretic inequalities built on it.
//!
//! Every comparison here is done on exact rationals. Arguments are `u64`;
//! anything that grows faster than its argument (squares, products of
//! prime powers) is carried as `BigUint` or [`ExactRational`].

mod primes;
mod rational;

pub use primes::{first_primes, is_prime, nth_prime, PrimeSetTag};
pub use rational::{ExactRational, ParseRationalError};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberError {
    #[error("argument must be a positive integer, got 0")]
    Zero,
    #[error("hypothesis violated for n = {n}: {reason}")]
    Hypothesis { n: u64, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, NumberError>;

/// Prime factorization `n = p_1^a_1 ... p_k^a_k` with `p_1 < ... < p_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Distinct primes in increasing order.
    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, _)| p).collect()
    }

    /// Number of distinct prime factors.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    /// The largest prime and its exponent; `None` for `n = 1`.
    pub fn largest(&self) -> Option<(u64, u32)> {
        self.factors.last().copied()
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_power_of_two(&self) -> bool {
        self.factors.is_empty() || (self.factors.len() == 1 && self.factors[0].0 == 2)
    }

    /// Exponent of `prime` in `n` (zero when it does not divide).
    pub fn exponent_of(&self, prime: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(p, _)| p == prime)
            .map_or(0, |&(_, a)| a)
    }

    pub fn prime_set_tag(&self) -> PrimeSetTag {
        PrimeSetTag::classify(&self.primes())
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, a) in &self.factors {
            let current = divs.len();
            let mut pk = 1u64;
            for _ in 0..a {
                pk *= p;
                for i in 0..current {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Factorizes `n` by trial division up to its square root.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(NumberError::Zero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            let mut a = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                a += 1;
            }
            factors.push((d, a));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// Euler's totient from the prime factorization.
pub fn totient(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(totient_of(&f))
}

pub(crate) fn totient_of(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, a)| p.pow(a - 1) * (p - 1))
        .product()
}

/// Totient sum of the cyclic group of order `n`, as the sum of `phi(d)^2`
/// over the divisors `d` of `n`.
pub fn phi_cyclic_sum(n: u64) -> Result<BigUint> {
    let f = factorize(n)?;
    let mut total = BigUint::zero();
    for d in f.divisors() {
        let t = BigUint::from(totient(d)?);
        total += &t * &t;
    }
    Ok(total)
}

/// Totient sum of the cyclic group of order `n`, as the product over prime
/// powers `p^a || n` of `(p^(2a) (p - 1) + 2) / (p + 1)`.
pub fn phi_cyclic_product(n: u64) -> Result<BigUint> {
    let f = factorize(n)?;
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for &(p, a) in f.factors() {
        let p_big = BigUint::from(p);
        numer *= p_big.pow(2 * a) * (&p_big - 1u32) + 2u32;
        denom *= p_big + 1u32;
    }
    let (quot, rem) = numer.div_rem(&denom);
    debug_assert!(rem.is_zero(), "product form is integral");
    Ok(quot)
}

/// `Q = prod (p + 1) / (p - 1)` over the given distinct primes.
pub fn q_of_primes(primes: &[u64]) -> ExactRational {
    primes.iter().fold(ExactRational::one(), |acc, &p| {
        acc * ExactRational::new(p + 1, p - 1)
    })
}

/// `Q` over the distinct prime factors of `n`; `Q(1) = 1`.
pub fn q_of(n: u64) -> Result<ExactRational> {
    Ok(q_of_primes(&factorize(n)?.primes()))
}

/// Outcome of comparing the cyclic totient sum against `n^2 / Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundCheck {
    pub n: u64,
    /// `false` at `n = 1`, where the strict bound degenerates to `1 > 1`.
    pub applicable: bool,
    pub holds: bool,
    /// `phi(C_n) - n^2 / Q`.
    pub gap: ExactRational,
}

pub fn q_lower_bound_check(n: u64) -> Result<LowerBoundCheck> {
    let phi_cn = ExactRational::from(&phi_cyclic_sum(n)?);
    let bound = ExactRational::from(n) * ExactRational::from(n) / q_of(n)?;
    let gap = &phi_cn - &bound;
    Ok(LowerBoundCheck {
        n,
        applicable: n >= 2,
        holds: gap.is_positive(),
        gap,
    })
}

/// The two upper bounds on `Q`; `None` where the hypothesis does not apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QBounds {
    /// `Q <= p + 1`, applicable when `k >= 9` or the prime set is not `F_k`.
    pub q_le_p_plus_1: Option<bool>,
    /// `Q < p`, applicable when `n` is odd.
    pub q_lt_p_odd: Option<bool>,
}

pub fn lemma_q_bounds(n: u64) -> Result<QBounds> {
    if n < 2 {
        return Err(NumberError::Hypothesis {
            n,
            reason: "n must be at least 2",
        });
    }
    let f = factorize(n)?;
    let q = q_of_primes(&f.primes());
    let (p, _) = f.largest().expect("n >= 2");
    let k = f.k();
    let first_gate = k >= 9 || f.prime_set_tag() != PrimeSetTag::FirstPrimes(k);
    Ok(QBounds {
        q_le_p_plus_1: first_gate.then(|| q <= p + 1),
        q_lt_p_odd: (n % 2 == 1).then(|| q < p),
    })
}

/// Result of the comparison `n >= Q * phi(n / p^a) * p^(a - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NGeqCheck {
    pub n: u64,
    pub rhs: ExactRational,
    pub holds: bool,
    pub equality: bool,
}

/// True when `n = 2^a 3^b` with both exponents positive.
pub fn is_two_three_mixed(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let (mut a, mut b) = (0, 0);
    while m.is_multiple_of(2) {
        m /= 2;
        a += 1;
    }
    while m.is_multiple_of(3) {
        m /= 3;
        b += 1;
    }
    m == 1 && a > 0 && b > 0
}

pub fn lemma_n_geq_check(n: u64) -> Result<NGeqCheck> {
    if n < 2 {
        return Err(NumberError::Hypothesis {
            n,
            reason: "n must be at least 2",
        });
    }
    let f = factorize(n)?;
    if f.is_power_of_two() {
        return Err(NumberError::Hypothesis {
            n,
            reason: "n must not be a power of 2",
        });
    }
    let (p, alpha) = f.largest().expect("n >= 2");
    let p_part = p.pow(alpha);
    let rhs = q_of_primes(&f.primes())
        * ExactRational::from(totient(n / p_part)?)
        * ExactRational::from(p.pow(alpha - 1));
    let lhs = ExactRational::from(n);
    Ok(NGeqCheck {
        n,
        holds: lhs >= rhs,
        equality: lhs == rhs,
        rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub ell: usize,
    pub prime: u64,
    pub q_first: ExactRational,
    /// Omitted for the last column.
    pub q_skip: Option<ExactRational>,
}

/// `Q` over the first-`l` and skip-`l` prime families for `l = 1..=9`.
pub fn table1() -> Vec<Table1Row> {
    (1..=9)
        .map(|ell| Table1Row {
            ell,
            prime: nth_prime(ell),
            q_first: q_of_primes(&PrimeSetTag::FirstPrimes(ell).members()),
            q_skip: (ell < 9).then(|| q_of_primes(&PrimeSetTag::SkipPrimes(ell).members())),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    // counting oracle: #{1 <= m <= n : gcd(m, n) = 1}
    fn totient_by_count(n: u64) -> u64 {
        (1..=n).filter(|&m| gcd(m, n) == 1).count() as u64
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(360).unwrap().factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(0), Err(NumberError::Zero));
    }

    #[test]
    fn factorize_matches_trial_division_oracle() {
        for n in 1..2000u64 {
            let f = factorize(n).unwrap();
            let product: u64 = f.factors().iter().map(|&(p, a)| p.pow(a)).product();
            assert_eq!(product, n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|&(p, a)| is_prime(p) && a > 0));
        }
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(12).unwrap(), 4);
        assert_eq!(totient(54).unwrap(), 18);
        assert_eq!(totient(0), Err(NumberError::Zero));
        for n in 1..500 {
            assert_eq!(totient(n).unwrap(), totient_by_count(n), "n = {n}");
        }
    }

    #[test]
    fn cyclic_sum_examples() {
        assert_eq!(phi_cyclic_sum(1).unwrap(), BigUint::from(1u32));
        assert_eq!(phi_cyclic_sum(6).unwrap(), BigUint::from(10u32));
        assert_eq!(phi_cyclic_sum(16).unwrap(), BigUint::from(86u32));
        // divisors 1,2,3,4,6,12 have totients 1,1,2,2,2,4
        assert_eq!(phi_cyclic_sum(12).unwrap(), BigUint::from(30u32));
        assert!(phi_cyclic_sum(0).is_err());
    }

    #[test]
    fn cyclic_product_examples() {
        assert_eq!(phi_cyclic_product(6).unwrap(), BigUint::from(10u32));
        assert_eq!(phi_cyclic_product(1).unwrap(), BigUint::from(1u32));
        assert_eq!(phi_cyclic_product(4).unwrap(), BigUint::from(6u32));
        assert!(phi_cyclic_product(0).is_err());
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_of(12).unwrap(), ExactRational::from(6u64));
        assert_eq!(q_of(2 * 3 * 5 * 7 * 11).unwrap(), ExactRational::new(72, 5));
        assert_eq!(q_of(2 * 3 * 7).unwrap(), ExactRational::from(8u64));
        assert_eq!(q_of(1).unwrap(), ExactRational::one());
        assert!(q_of(0).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        let c = q_lower_bound_check(6).unwrap();
        assert!(c.applicable && c.holds);
        assert_eq!(c.gap, ExactRational::from(4u64));
        let c = q_lower_bound_check(1).unwrap();
        assert!(!c.applicable && !c.holds);
        let c = q_lower_bound_check(12).unwrap();
        assert!(c.holds);
        assert_eq!(c.gap, ExactRational::from(6u64));
    }

    #[test]
    fn q_bounds_examples() {
        let b = lemma_q_bounds(15).unwrap();
        assert_eq!(b.q_le_p_plus_1, Some(true));
        assert_eq!(b.q_lt_p_odd, Some(true));
        let b = lemma_q_bounds(6).unwrap();
        assert_eq!(b, QBounds { q_le_p_plus_1: None, q_lt_p_odd: None });
        assert_eq!(q_of(105).unwrap(), ExactRational::from(4u64));
        assert_eq!(lemma_q_bounds(105).unwrap().q_lt_p_odd, Some(true));
        assert!(lemma_q_bounds(1).is_err());
    }

    #[test]
    fn n_geq_examples() {
        let c = lemma_n_geq_check(12).unwrap();
        assert!(c.holds && c.equality);
        assert_eq!(c.rhs, ExactRational::from(12u64));
        let c = lemma_n_geq_check(9).unwrap();
        assert!(c.holds && !c.equality);
        assert_eq!(c.rhs, ExactRational::from(6u64));
        assert!(matches!(
            lemma_n_geq_check(8),
            Err(NumberError::Hypothesis { n: 8, .. })
        ));
        assert!(matches!(lemma_n_geq_check(1), Err(NumberError::Hypothesis { .. })));
    }

    #[test]
    fn two_three_predicate() {
        assert!(is_two_three_mixed(12));
        assert!(is_two_three_mixed(6));
        assert!(!is_two_three_mixed(8));
        assert!(!is_two_three_mixed(9));
        assert!(!is_two_three_mixed(30));
    }

    #[test]
    fn table1_spot_values() {
        let rows = table1();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows[0].q_first, ExactRational::from(3u64));
        assert_eq!(rows[0].q_skip, Some(ExactRational::from(2u64)));
        assert_eq!(rows[4].q_first, ExactRational::new(72, 5));
        assert_eq!(rows[7].q_skip, Some(ExactRational::new(1134, 55)));
        assert_eq!(rows[8].q_skip, None);
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(factorize(12).unwrap().divisors(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(factorize(1).unwrap().divisors(), vec![1]);
    }
}
