//! Small-prime helpers and the two special prime families used by the Q table.

use serde::Serialize;

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The first `count` primes in increasing order.
pub fn first_primes(count: usize) -> Vec<u64> {
    (2u64..).filter(|&m| is_prime(m)).take(count).collect()
}

/// The `i`-th prime, 1-based (`nth_prime(1) == 2`). Panics on `i == 0`.
pub fn nth_prime(i: usize) -> u64 {
    assert!(i >= 1, "primes are indexed from 1");
    *first_primes(i).last().expect("non-empty")
}

/// Classification of a set of distinct primes against the two families
/// `F_l` (first `l` primes) and `S_l` (first `l - 1` primes plus the
/// `(l + 1)`-th prime).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrimeSetTag {
    FirstPrimes(usize),
    SkipPrimes(usize),
    Other,
}

impl PrimeSetTag {
    /// Classifies a strictly increasing list of primes.
    pub fn classify(primes: &[u64]) -> PrimeSetTag {
        let len = primes.len();
        if len == 0 {
            return PrimeSetTag::Other;
        }
        let reference = first_primes(len + 1);
        if primes == &reference[..len] {
            return PrimeSetTag::FirstPrimes(len);
        }
        if primes[..len - 1] == reference[..len - 1] && primes[len - 1] == reference[len] {
            return PrimeSetTag::SkipPrimes(len);
        }
        PrimeSetTag::Other
    }

    /// The member primes of the family this tag names; empty for `Other`.
    pub fn members(&self) -> Vec<u64> {
        match *self {
            PrimeSetTag::FirstPrimes(l) => first_primes(l),
            PrimeSetTag::SkipPrimes(l) => {
                let mut ps = first_primes(l + 1);
                ps.remove(l - 1);
                ps
            }
            PrimeSetTag::Other => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_values() {
        let primes: Vec<u64> = (0..30).filter(|&m| is_prime(m)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn nth_prime_matches_list() {
        assert_eq!(nth_prime(1), 2);
        assert_eq!(nth_prime(9), 23);
        assert_eq!(nth_prime(10), 29);
    }

    #[test]
    fn classify_families() {
        assert_eq!(PrimeSetTag::classify(&[2, 3, 5]), PrimeSetTag::FirstPrimes(3));
        assert_eq!(PrimeSetTag::classify(&[2, 3, 7]), PrimeSetTag::SkipPrimes(3));
        assert_eq!(PrimeSetTag::classify(&[3]), PrimeSetTag::SkipPrimes(1));
        assert_eq!(PrimeSetTag::classify(&[3, 5]), PrimeSetTag::Other);
        assert_eq!(PrimeSetTag::classify(&[]), PrimeSetTag::Other);
    }

    #[test]
    fn members_round_trip() {
        for l in 1..=9 {
            let f = PrimeSetTag::FirstPrimes(l);
            assert_eq!(PrimeSetTag::classify(&f.members()), f);
            let s = PrimeSetTag::SkipPrimes(l);
            assert_eq!(PrimeSetTag::classify(&s.members()), s);
        }
    }
}
