//! Partition arithmetic: hooks, cores, quotients, abacus, support, parity,
//! and the counting predicates used throughout the crate.
//!
//! - [`partitions_of`] / [`strict_partitions_of`]: deterministic reverse-lexicographic enumeration
//! - [`Partition::conjugate`], [`Partition::diag`]: transpose and principal hook lengths
//! - [`r_core_and_quotient`], [`addable_r_hooks`], [`removable_r_hooks`]: beta-set / abacus machinery
//! - [`dblreg`]: 2-regularisation of the doubled partition
//! - [`count_l_prime_classes`]: cycle types of order prime to `l`, with the Glaisher cross-check

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing")]
    Malformed,
    #[error("partition is not self-conjugate")]
    NonSelfConjugate,
    #[error("partition does not have distinct parts")]
    NotStrict,
}

/// A partition: weakly decreasing sequence of positive integers.
///
/// The empty partition (of 0) is allowed. Parts equal to 1 are stored
/// explicitly; cycle types are always full partitions of `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting unsorted or non-positive part lists.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Malformed);
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, discarding zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based row `i`, zero when out of range.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// All parts distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// All parts odd.
    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    pub fn has_even_part(&self) -> bool {
        self.parts.iter().any(|&p| p % 2 == 0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols {
            out.push(self.parts.iter().filter(|&&p| p >= j as u32).count() as u32);
        }
        Partition { parts: out }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Number of boxes on the main diagonal.
    pub fn diagonal_length(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize >= i + 1)
            .count()
    }

    /// Partition of principal (diagonal) hook lengths; requires self-conjugacy.
    pub fn diag(&self) -> Result<Partition, PartitionError> {
        if !self.is_self_conjugate() {
            return Err(PartitionError::NonSelfConjugate);
        }
        let d = self.diagonal_length();
        let parts = (1..=d)
            .map(|i| 2 * (self.parts[i - 1] - i as u32) + 1)
            .collect();
        Ok(Partition { parts })
    }

    /// Sum of parts strictly greater than 1 (non-fixed points of the cycle type).
    pub fn support(&self) -> u32 {
        self.parts.iter().filter(|&&p| p > 1).sum()
    }

    /// Parity of permutations of this cycle type.
    pub fn parity(&self) -> Parity {
        if (self.n() as usize - self.len()) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Order of a permutation of this cycle type: lcm of the parts.
    pub fn element_order(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }

    /// True iff `l` does not divide the element order.
    pub fn is_l_prime(&self, l: u32) -> bool {
        self.element_order() % l as u64 != 0
    }

    /// All hook positions of the Young diagram.
    pub fn hooks(&self) -> Vec<HookPosition> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i0, &row) in self.parts.iter().enumerate() {
            for j in 1..=row as usize {
                let arm = row - j as u32;
                let leg = conj.parts[j - 1] - (i0 as u32 + 1);
                out.push(HookPosition {
                    row: i0 + 1,
                    col: j,
                    arm,
                    leg,
                    length: arm + leg + 1,
                });
            }
        }
        out
    }

    /// Multiset of hook lengths.
    pub fn hook_lengths(&self) -> Vec<u32> {
        self.hooks().into_iter().map(|h| h.length).collect()
    }

    /// Product of the principal hook lengths (for self-conjugate input this is
    /// the product of the parts of `diag`).
    pub fn principal_hook_product(&self) -> u128 {
        let conj = self.conjugate();
        (1..=self.diagonal_length())
            .map(|i| (self.parts[i - 1] + conj.parts[i - 1] - 2 * i as u32 + 1) as u128)
            .product()
    }

    /// Centralizer order of the cycle type in the symmetric group.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut m = 0u128;
            while i < self.parts.len() && self.parts[i] == p {
                m += 1;
                i += 1;
            }
            for k in 1..=m {
                z *= k;
            }
            z *= (p as u128).pow(m as u32);
        }
        z
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Comma-separated parts in decreasing order, e.g. `6,4,1,1`; the empty
/// partition renders as `-`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        Partition::new(parts.map_err(|_| PartitionError::Malformed)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A box of the Young diagram with its arm, leg and hook length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookPosition {
    pub row: usize,
    pub col: usize,
    pub arm: u32,
    pub leg: u32,
    pub length: u32,
}

/// Beads on `r` runners; normalized so the beta-set size is a multiple of `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbacusConfig {
    pub modulus: u32,
    /// Runner `j` holds the positions `(x - j)/r` of the beta numbers `x ≡ j (mod r)`.
    pub runners: Vec<Vec<u32>>,
}

impl AbacusConfig {
    /// Places the partition on `r` runners, padding the beta-set to the least
    /// multiple of `r` that leaves room for `extra_rows` additional rows.
    pub fn from_partition(lambda: &Partition, r: u32, extra_rows: u32) -> Self {
        assert!(r >= 2, "abacus modulus must be at least 2");
        let len = lambda.len() as u32 + extra_rows;
        let b = r * len.div_ceil(r).max(1);
        let beta = beta_set(lambda, b);
        let mut runners = vec![Vec::new(); r as usize];
        for &x in &beta {
            runners[(x % r) as usize].push(x / r);
        }
        for runner in &mut runners {
            runner.sort_unstable();
        }
        AbacusConfig {
            modulus: r,
            runners,
        }
    }

    /// Decodes the abacus back to a partition.
    pub fn to_partition(&self) -> Partition {
        let mut beta: Vec<u32> = Vec::new();
        for (j, runner) in self.runners.iter().enumerate() {
            for &p in runner {
                beta.push(p * self.modulus + j as u32);
            }
        }
        beta.sort_unstable_by(|a, b| b.cmp(a));
        partition_from_beta(&beta)
    }
}

/// Beta-set of size `b >= len(lambda)`: the strictly decreasing numbers
/// `lambda_i + b - i`.
pub fn beta_set(lambda: &Partition, b: u32) -> Vec<u32> {
    assert!(b as usize >= lambda.len());
    (1..=b).map(|i| lambda.part(i as usize) + b - i).collect()
}

fn partition_from_beta(beta_desc: &[u32]) -> Partition {
    let b = beta_desc.len() as u32;
    let mut parts = Vec::new();
    for (i0, &x) in beta_desc.iter().enumerate() {
        let p = x - (b - 1 - i0 as u32);
        if p > 0 {
            parts.push(p);
        }
    }
    Partition { parts }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// All strict partitions of `n` (distinct parts), reverse lexicographic.
pub fn strict_partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            current.push(p);
            rec(remaining - p, p.saturating_sub(1), current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// All self-conjugate partitions of `n`, reverse lexicographic.
pub fn self_conjugate_partitions_of(n: u32) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.is_self_conjugate())
        .collect()
}

/// `r`-core and `r`-quotient via the abacus (James–Kerber runner convention,
/// beta-set size a multiple of `r`).
pub fn r_core_and_quotient(lambda: &Partition, r: u32) -> (Partition, Vec<Partition>) {
    let ab = AbacusConfig::from_partition(lambda, r, 0);
    let mut core_runners = Vec::with_capacity(r as usize);
    let mut quotient = Vec::with_capacity(r as usize);
    for runner in &ab.runners {
        let cnt = runner.len() as u32;
        core_runners.push((0..cnt).collect::<Vec<u32>>());
        // The runner's bead positions are a beta-set for the quotient component.
        let mut beta: Vec<u32> = runner.clone();
        beta.sort_unstable_by(|a, b| b.cmp(a));
        quotient.push(partition_from_beta(&beta));
    }
    let core = AbacusConfig {
        modulus: r,
        runners: core_runners,
    }
    .to_partition();
    (core, quotient)
}

/// Partitions of `|lambda| + r` obtained by adding one `r`-rim-hook, with the
/// leg length of the added hook. Deterministic order.
pub fn addable_r_hooks(lambda: &Partition, r: u32) -> Vec<(Partition, u32)> {
    assert!(r >= 2);
    let b = (lambda.len() as u32 + r) + ((lambda.len() as u32 + r) % 2);
    let beta = beta_set(lambda, b);
    let mut out = Vec::new();
    for &x in &beta {
        let y = x + r;
        if !beta.contains(&y) {
            let leg = beta.iter().filter(|&&z| z > x && z < y).count() as u32;
            let mut nb: Vec<u32> = beta.iter().cloned().filter(|&z| z != x).collect();
            nb.push(y);
            nb.sort_unstable_by(|a, b| b.cmp(a));
            out.push((partition_from_beta(&nb), leg));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Partitions of `|lambda| - r` obtained by removing one `r`-rim-hook, with
/// the leg length of the removed hook.
pub fn removable_r_hooks(lambda: &Partition, r: u32) -> Vec<(Partition, u32)> {
    assert!(r >= 1);
    let b = lambda.len().max(1) as u32;
    let beta = beta_set(lambda, b);
    let mut out = Vec::new();
    for &x in &beta {
        if x >= r && !beta.contains(&(x - r)) {
            let y = x - r;
            let leg = beta.iter().filter(|&&z| z > y && z < x).count() as u32;
            let mut nb: Vec<u32> = beta.iter().cloned().filter(|&z| z != x).collect();
            nb.push(y);
            nb.sort_unstable_by(|a, b| b.cmp(a));
            out.push((partition_from_beta(&nb), leg));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// The double of a strict partition: each part `a` becomes `ceil(a/2), floor(a/2)`
/// with zeros discarded.
pub fn double(mu: &Partition) -> Result<Partition, PartitionError> {
    if !mu.is_strict() {
        return Err(PartitionError::NotStrict);
    }
    let mut parts = Vec::new();
    for &a in mu.parts() {
        parts.push(a.div_ceil(2));
        if a / 2 > 0 {
            parts.push(a / 2);
        }
    }
    // Splitting strictly decreasing parts in half keeps the list weakly decreasing.
    Ok(Partition::new(parts).expect("double of a strict partition is a partition"))
}

/// Node counts of a diagram on the antidiagonal ladders `i + j = const`
/// (index 0 holds the count for `i + j = 2`).
pub fn ladder_counts(lambda: &Partition) -> Vec<u32> {
    let mut counts: Vec<u32> = Vec::new();
    for (i0, &row) in lambda.parts().iter().enumerate() {
        for j in 1..=row as usize {
            let ladder = i0 + 1 + j; // i + j
            if counts.len() < ladder - 1 {
                counts.resize(ladder - 1, 0);
            }
            counts[ladder - 2] += 1;
        }
    }
    counts
}

/// James 2-regularisation: slide the nodes of each antidiagonal ladder to the
/// top of the ladder. The result has distinct parts.
pub fn regularise_2(lambda: &Partition) -> Partition {
    let counts = ladder_counts(lambda);
    let max_rows = counts.iter().cloned().max().unwrap_or(0);
    let mut parts = Vec::new();
    for i in 1..=max_rows {
        let row = counts.iter().filter(|&&c| c >= i).count() as u32;
        parts.push(row);
    }
    let out = Partition { parts };
    debug_assert!(out.is_strict(), "2-regularisation must have distinct parts");
    debug_assert_eq!(out.n(), lambda.n());
    out
}

/// 2-regularisation of the double of a strict partition.
pub fn dblreg(mu: &Partition) -> Result<Partition, PartitionError> {
    Ok(regularise_2(&double(mu)?))
}

/// Report produced by [`count_l_prime_classes`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LPrimeCount {
    pub n: u32,
    pub l: u32,
    /// Cycle types of order not divisible by `l`.
    pub l_prime_classes: usize,
    /// Partitions with no part repeated `l` or more times.
    pub no_part_repeated_l_times: usize,
    /// Partitions with no part divisible by `l`.
    pub no_part_divisible_by_l: usize,
    /// Whether `l` is a prime power.
    pub l_is_prime_power: bool,
    /// For prime-power `l`, whether the Glaisher equality held.
    pub glaisher_equality: Option<bool>,
}

pub fn is_prime_power(l: u32) -> bool {
    if l < 2 {
        return false;
    }
    let mut m = l;
    let mut p = 0u32;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            p = d;
            while m % d == 0 {
                m /= d;
            }
            break;
        }
        d += 1;
    }
    if p == 0 {
        return true; // l itself prime
    }
    m == 1
}

/// Counts the `l'` cycle types of `S_n` and cross-checks against Glaisher's
/// theorem when `l` is a prime power.
pub fn count_l_prime_classes(n: u32, l: u32) -> LPrimeCount {
    assert!(l >= 2);
    let all = partitions_of(n);
    let l_prime = all.iter().filter(|p| p.is_l_prime(l)).count();
    let no_repeat = all
        .iter()
        .filter(|p| {
            let mut i = 0;
            let parts = p.parts();
            while i < parts.len() {
                let mut j = i;
                while j < parts.len() && parts[j] == parts[i] {
                    j += 1;
                }
                if (j - i) as u32 >= l {
                    return false;
                }
                i = j;
            }
            true
        })
        .count();
    let no_div = all
        .iter()
        .filter(|p| p.parts().iter().all(|&a| a % l != 0))
        .count();
    let pp = is_prime_power(l);
    LPrimeCount {
        n,
        l,
        l_prime_classes: l_prime,
        no_part_repeated_l_times: no_repeat,
        no_part_divisible_by_l: no_div,
        l_is_prime_power: pp,
        glaisher_equality: if pp { Some(l_prime == no_repeat) } else { None },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal number recurrence, used as an independent count.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0u64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut sum: i64 = 0;
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1] as i64;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * table[i - g2] as i64;
                }
                k += 1;
            }
            table[i] = sum as u64;
        }
        table[n]
    }

    #[test]
    fn enumeration_basics() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(partitions_of(14).len() as u64, partition_count(14));
        assert_eq!(partitions_of(14).len(), 135);
    }

    #[test]
    fn strict_enumeration() {
        assert_eq!(
            strict_partitions_of(5),
            vec![p(&[5]), p(&[4, 1]), p(&[3, 2])]
        );
        assert_eq!(strict_partitions_of(1), vec![p(&[1])]);
        // brute-force filter as the oracle
        let brute = partitions_of(14)
            .into_iter()
            .filter(|q| q.is_strict())
            .count();
        assert_eq!(strict_partitions_of(14).len(), brute);
        assert_eq!(strict_partitions_of(14).len(), 22);
    }

    #[test]
    fn conjugate_examples_and_involution() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        for n in 0..=14 {
            for q in partitions_of(n) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }

    #[test]
    fn diag_examples() {
        assert_eq!(p(&[2, 2]).diag().unwrap(), p(&[3, 1]));
        assert_eq!(p(&[3, 1, 1]).diag().unwrap(), p(&[5]));
        assert_eq!(p(&[3, 1]).diag(), Err(PartitionError::NonSelfConjugate));
        for n in 0..=14 {
            for q in self_conjugate_partitions_of(n) {
                let d = q.diag().unwrap();
                assert!(d.is_strict());
                assert!(d.all_parts_odd());
                assert_eq!(d.n(), n);
            }
        }
    }

    #[test]
    fn support_parity_order() {
        assert_eq!(p(&[1, 1, 1]).support(), 0);
        assert_eq!(p(&[3, 2, 1]).support(), 5);
        assert_eq!(p(&[7]).support(), 7);
        assert_eq!(p(&[3]).parity(), Parity::Even);
        assert_eq!(p(&[2, 1]).parity(), Parity::Odd);
        // a 4-cycle is odd and a 3-cycle is even
        assert_eq!(p(&[4, 3, 1]).parity(), Parity::Odd);
        assert_eq!(p(&[5, 3, 1, 1]).parity(), Parity::Even);
        assert_eq!(p(&[1, 1]).element_order(), 1);
        assert_eq!(p(&[6, 4]).element_order(), 12);
        assert_eq!(p(&[3, 2]).element_order(), 6);
    }

    #[test]
    fn l_prime_uses_lcm() {
        // (3,2) has order 6 although no part is divisible by 6
        assert!(!p(&[3, 2]).is_l_prime(6));
        assert!(p(&[5]).is_l_prime(3));
        assert!(!p(&[3, 2, 1]).is_l_prime(3));
    }

    /// Removes `r`-rim-hooks by brute force until none remain, in every order.
    fn brute_core(lambda: &Partition, r: u32) -> Partition {
        let mut cur = lambda.clone();
        loop {
            let hooks = removable_r_hooks(&cur, r);
            match hooks.first() {
                None => return cur,
                Some((next, _)) => cur = next.clone(),
            }
        }
    }

    #[test]
    fn core_and_quotient() {
        // (3,1) has hook lengths {4,2,1,1}: it is a 3-core
        let (core, quot) = r_core_and_quotient(&p(&[3, 1]), 3);
        assert_eq!(core, p(&[3, 1]));
        assert!(quot.iter().all(|q| q.is_empty()));
        // the staircase (3,2,1) has two 3-hooks and empty 3-core
        let (core, quot) = r_core_and_quotient(&p(&[3, 2, 1]), 3);
        assert_eq!(core, Partition::empty());
        assert_eq!(quot.iter().map(|q| q.n()).sum::<u32>(), 2);
        let (core, _) = r_core_and_quotient(&p(&[3]), 3);
        assert_eq!(core, Partition::empty());
        for n in 0..=12 {
            for q in partitions_of(n) {
                for r in 2..=5 {
                    let (core, quot) = r_core_and_quotient(&q, r);
                    let w: u32 = quot.iter().map(|x| x.n()).sum();
                    assert_eq!(q.n(), core.n() + r * w, "weight identity for {q} r={r}");
                    assert!(removable_r_hooks(&core, r).is_empty(), "core has no hook");
                    assert_eq!(core, brute_core(&q, r), "order-independence for {q}");
                }
            }
        }
    }

    /// Checks that `big/small` is a connected rim hook of size r (no 2x2 box).
    fn is_rim_hook_addition(small: &Partition, big: &Partition, r: u32) -> bool {
        if big.n() != small.n() + r {
            return false;
        }
        let rows = big.len();
        let mut cells = Vec::new();
        for i in 1..=rows {
            if big.part(i) < small.part(i) {
                return false;
            }
            for j in (small.part(i) + 1)..=big.part(i) {
                cells.push((i as i32, j as i32));
            }
        }
        if cells.len() != r as usize {
            return false;
        }
        // no 2x2 block
        for &(i, j) in &cells {
            if cells.contains(&(i + 1, j)) && cells.contains(&(i, j + 1)) && cells.contains(&(i + 1, j + 1)) {
                return false;
            }
        }
        // connectivity
        let mut seen = vec![false; cells.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(k) = stack.pop() {
            let (i, j) = cells[k];
            for (t, &(a, b)) in cells.iter().enumerate() {
                if !seen[t] && (a - i).abs() + (b - j).abs() == 1 {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Brute-force rim-hook additions: scan all partitions of `n + r`.
    fn brute_addable(lambda: &Partition, r: u32) -> Vec<Partition> {
        partitions_of(lambda.n() + r)
            .into_iter()
            .filter(|big| is_rim_hook_addition(lambda, big, r))
            .collect()
    }

    #[test]
    fn addable_hooks() {
        let e = addable_r_hooks(&Partition::empty(), 3);
        assert_eq!(
            e,
            vec![
                (p(&[3]), 0),
                (p(&[2, 1]), 1),
                (p(&[1, 1, 1]), 2)
            ]
        );
        // (1) is a 3-core, so it has exactly three addable 3-hooks;
        // a partition with a unique 3-hook has exactly four
        assert_eq!(addable_r_hooks(&p(&[1]), 3).len(), 3);
        assert_eq!(addable_r_hooks(&p(&[2, 2]), 3).len(), 4);
        for n in 0..=9 {
            for q in partitions_of(n) {
                for r in 2..=4 {
                    let got: Vec<Partition> =
                        addable_r_hooks(&q, r).into_iter().map(|(x, _)| x).collect();
                    let mut want = brute_addable(&q, r);
                    want.sort_by(|a, b| b.cmp(a));
                    assert_eq!(got, want, "addable {r}-hooks of {q}");
                    // removing any listed hook takes us back
                    for big in &got {
                        assert!(removable_r_hooks(big, r)
                            .iter()
                            .any(|(back, _)| back == &q));
                    }
                }
            }
        }
    }

    /// Independent regularisation oracle: among all strict partitions of `n`,
    /// find the one with the same antidiagonal ladder counts.
    fn regularise_2_oracle(lambda: &Partition) -> Partition {
        let want = ladder_counts(lambda);
        let matches: Vec<Partition> = strict_partitions_of(lambda.n())
            .into_iter()
            .filter(|q| ladder_counts(q) == want)
            .collect();
        assert_eq!(matches.len(), 1, "unique strict partition per ladder counts");
        matches.into_iter().next().unwrap()
    }

    #[test]
    fn dblreg_values() {
        assert_eq!(dblreg(&p(&[3])).unwrap(), p(&[2, 1]));
        assert_eq!(dblreg(&p(&[7, 3])).unwrap(), p(&[4, 3, 2, 1]));
        assert_eq!(dblreg(&p(&[5, 1])).unwrap(), p(&[3, 2, 1]));
        assert_eq!(dblreg(&p(&[2, 2])), Err(PartitionError::NotStrict));
        // double((2,1)) = (1,1,1); its 2-regularisation computed by the oracle
        assert_eq!(double(&p(&[2, 1])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(regularise_2_oracle(&p(&[1, 1, 1])), p(&[3]));
        assert_eq!(dblreg(&p(&[2, 1])).unwrap(), p(&[3]));
        for n in 1..=12 {
            for q in strict_partitions_of(n) {
                let d = dblreg(&q).unwrap();
                assert_eq!(d, regularise_2_oracle(&double(&q).unwrap()));
            }
        }
    }

    #[test]
    fn dblreg_staircase_families() {
        // (2k-1, 2k-5, ...) down to 3 or 1 regularises to the staircase
        for k in 2u32..=6 {
            let mut parts = Vec::new();
            let mut a = 2 * k - 1;
            loop {
                parts.push(a);
                if a <= 4 {
                    break;
                }
                a -= 4;
            }
            let mu = Partition::new(parts).unwrap();
            let staircase = Partition::new((1..=k).rev().collect()).unwrap();
            assert_eq!(dblreg(&mu).unwrap(), staircase, "k = {k}");
        }
    }

    #[test]
    fn glaisher_counts() {
        let r = count_l_prime_classes(5, 2);
        assert_eq!(r.l_prime_classes, 3);
        let r = count_l_prime_classes(6, 4);
        assert_eq!(r.glaisher_equality, Some(true));
        let r = count_l_prime_classes(6, 6);
        assert!(r.l_prime_classes < r.no_part_divisible_by_l);
        for l in [2u32, 3, 4, 5, 7, 8, 9] {
            for n in 0..=20 {
                let r = count_l_prime_classes(n, l);
                assert_eq!(r.glaisher_equality, Some(true), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn abacus_round_trip() {
        for n in 0..=12 {
            for q in partitions_of(n) {
                for r in 2..=5 {
                    let ab = AbacusConfig::from_partition(&q, r, 0);
                    assert_eq!(ab.to_partition(), q);
                }
            }
        }
    }

    #[test]
    fn three_core_hook_counts() {
        // a 3-core has exactly three addable 3-hooks; a partition with a
        // unique 3-hook has exactly four
        for n in 0..=12 {
            for nu in partitions_of(n) {
                let removable = removable_r_hooks(&nu, 3).len();
                let addable = addable_r_hooks(&nu, 3).len();
                if removable == 0 {
                    assert_eq!(addable, 3, "3-core ({nu})");
                } else if removable == 1 {
                    assert_eq!(addable, 4, "unique 3-hook ({nu})");
                }
            }
        }
    }

    #[test]
    fn hook_addition_families_share_cores_and_quotients() {
        // the two labels produced from a self-conjugate 3-core by adding a
        // first-row hook and a principal hook have equal 3-cores, and their
        // 3-quotients are one box on one runner (unordered comparison)
        for n in 3..=14u32 {
            for nu in self_conjugate_partitions_of(n - 3) {
                if !removable_r_hooks(&nu, 3).is_empty() {
                    continue;
                }
                let addable = addable_r_hooks(&nu, 3);
                let lam = &addable.iter().find(|(_, leg)| *leg == 0).unwrap().0;
                let mu = &addable.iter().find(|(_, leg)| *leg == 1).unwrap().0;
                let (core_l, quot_l) = r_core_and_quotient(lam, 3);
                let (core_m, quot_m) = r_core_and_quotient(mu, 3);
                assert_eq!(core_l, core_m);
                assert_eq!(core_l, nu);
                let mut ql: Vec<Partition> = quot_l.clone();
                let mut qm: Vec<Partition> = quot_m.clone();
                ql.sort();
                qm.sort();
                assert_eq!(ql, qm, "unordered quotients of ({lam}) and ({mu})");
                assert_eq!(ql.iter().map(|q| q.n()).sum::<u32>(), 1);
            }
        }
    }

    #[test]
    fn serde_partition_is_a_bare_array() {
        let q = p(&[6, 4, 1, 1]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "[6,4,1,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn parse_and_display() {
        let q: Partition = "6,4,1,1".parse().unwrap();
        assert_eq!(q, p(&[6, 4, 1, 1]));
        assert_eq!(q.to_string(), "6,4,1,1");
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("4,6".parse::<Partition>().is_err());
    }
}
