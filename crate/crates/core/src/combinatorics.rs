//! Index machinery: subsets, compositions, partitions, the block injection
//! from compositions to subsets, merge signs, the color posets and the maps
//! used to build the dual compound matrices.
//!
//! Colors and subset elements are 1-based everywhere in the public API.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{domain, usage, Error, Result};

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    num_integer::binomial(n as u64, k as u64)
}

/// A strictly increasing subset of `[1, universe]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetIdx {
    elements: Vec<usize>,
    universe: usize,
}

impl SubsetIdx {
    pub fn new(elements: Vec<usize>, universe: usize) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return usage(format!("subset {elements:?} is not strictly increasing"));
        }
        if elements.iter().any(|&e| e == 0 || e > universe) {
            return usage(format!("subset {elements:?} leaves [1, {universe}]"));
        }
        Ok(SubsetIdx { elements, universe })
    }

    /// Sorts and validates; duplicates are rejected.
    pub fn from_unsorted(mut elements: Vec<usize>, universe: usize) -> Result<Self> {
        elements.sort_unstable();
        Self::new(elements, universe)
    }

    /// `[1, n]` inside universe `n`.
    pub fn full(n: usize) -> Self {
        SubsetIdx {
            elements: (1..=n).collect(),
            universe: n,
        }
    }

    pub fn empty(universe: usize) -> Self {
        SubsetIdx {
            elements: Vec::new(),
            universe,
        }
    }

    /// All `k`-element subsets of `[1, universe]` in lexicographic order.
    pub fn all(universe: usize, k: usize) -> Vec<SubsetIdx> {
        (1..=universe)
            .combinations(k)
            .map(|elements| SubsetIdx { elements, universe })
            .collect()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `|I|`, the sum of the elements.
    pub fn weight(&self) -> usize {
        self.elements.iter().sum()
    }

    pub fn complement(&self) -> SubsetIdx {
        SubsetIdx {
            elements: (1..=self.universe).filter(|x| !self.contains(*x)).collect(),
            universe: self.universe,
        }
    }

    pub fn is_disjoint(&self, other: &SubsetIdx) -> bool {
        self.elements.iter().all(|x| !other.contains(*x))
    }

    pub fn union(&self, other: &SubsetIdx) -> SubsetIdx {
        let elements = self
            .elements
            .iter()
            .merge(other.elements.iter())
            .dedup()
            .copied()
            .collect();
        SubsetIdx {
            elements,
            universe: self.universe.max(other.universe),
        }
    }

    pub fn with_universe(&self, universe: usize) -> Result<SubsetIdx> {
        Self::new(self.elements.clone(), universe)
    }

    /// Compact label such as `1235`, matching the usual `A_{1235}` notation.
    /// Only unambiguous for single-digit elements.
    pub fn label(&self) -> String {
        self.elements.iter().map(|e| e.to_string()).collect()
    }
}

impl PartialOrd for SubsetIdx {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the element lists.
impl Ord for SubsetIdx {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .cmp(&other.elements)
            .then(self.universe.cmp(&other.universe))
    }
}

impl fmt::Display for SubsetIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elements.iter().join(","))
    }
}

/// Merge sign of two index sets: 0 when they meet, otherwise the sign of the
/// permutation sorting the concatenation `(I, J)`.
pub fn epsilon(i: &SubsetIdx, j: &SubsetIdx) -> i8 {
    if !i.is_disjoint(j) {
        return 0;
    }
    let inversions: usize = i
        .elements
        .iter()
        .map(|a| j.elements.iter().filter(|b| a > *b).count())
        .sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A weak composition `(mu_1, ..., mu_s)`.
///
/// `Ord` is the reversed lexicographic order used to index compound
/// columns: `lambda < mu` when the first differing part is larger in
/// `lambda`, so `(2,0,0)` comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `s`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weight `n`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part at 1-based color `k`.
    pub fn part(&self, k: usize) -> usize {
        self.parts[k - 1]
    }

    pub fn is_strict(&self) -> bool {
        self.parts.iter().all(|&p| p > 0)
    }

    /// `mu_0^(l)`: weight `n` concentrated at color `l`.
    pub fn concentrated(s: usize, n: usize, l: usize) -> Self {
        let mut parts = vec![0; s];
        parts[l - 1] = n;
        Composition { parts }
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(Composition::new)
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Usage(format!("bad part {p:?} in {s:?}")))
        })
        .collect()
}

/// `Z_{s,n}` (or `Z^0_{s,n}` when `strict`) in increasing composition order.
pub fn enumerate_z(s: usize, n: usize, strict: bool) -> Vec<Composition> {
    fn fill(rest: usize, slots: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 1 {
            if rest >= min {
                cur.push(rest);
                out.push(Composition::new(cur.clone()));
                cur.pop();
            }
            return;
        }
        let reserve = min * (slots - 1);
        if rest < reserve + min {
            return;
        }
        for first in (min..=rest - reserve).rev() {
            cur.push(first);
            fill(rest - first, slots - 1, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if s == 0 {
        return out;
    }
    fill(n, s, usize::from(strict), &mut Vec::with_capacity(s), &mut out);
    out
}

/// `iota_{s,n}(mu) = union_i [(i-1)n + 1, (i-1)n + mu_i]`, a subset of `[sn]`.
pub fn iota(mu: &Composition, s: usize, n: usize) -> Result<SubsetIdx> {
    if mu.len() != s {
        return usage(format!("{mu} does not have {s} parts"));
    }
    if let Some(&p) = mu.parts.iter().find(|&&p| p > n) {
        return usage(format!("part {p} of {mu} exceeds n = {n}"));
    }
    let elements = mu
        .parts
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (i * n + 1)..=(i * n + p))
        .collect();
    SubsetIdx::new(elements, s * n)
}

/// Rank of `mu` in the color-`k` poset: `n - mu_k`.
pub fn rank(mu: &Composition, k: usize) -> usize {
    mu.weight() - mu.part(k)
}

/// `lambda <=_k mu`: `lambda_i <= mu_i` for every `i != k`.
pub fn preceq(lambda: &Composition, mu: &Composition, k: usize) -> bool {
    lambda
        .parts
        .iter()
        .zip(&mu.parts)
        .enumerate()
        .all(|(i, (a, b))| i + 1 == k || a <= b)
}

fn check_color(mu: &Composition, k: usize) -> Result<()> {
    if k == 0 || k > mu.len() {
        return usage(format!("color {k} outside 1..={}", mu.len()));
    }
    Ok(())
}

/// `tau^(k)`: adds one to every part except the `k`-th. Needs `mu_k > 0`.
pub fn tau(mu: &Composition, k: usize) -> Result<Composition> {
    check_color(mu, k)?;
    if mu.part(k) == 0 {
        return domain(format!("{mu} has no cell of color {k}"));
    }
    Ok(Composition::new(
        mu.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| if i + 1 == k { p } else { p + 1 })
            .collect(),
    ))
}

pub fn tau_inverse(nu: &Composition, k: usize) -> Result<Composition> {
    check_color(nu, k)?;
    if !nu.is_strict() {
        return domain(format!("{nu} has a zero part"));
    }
    Ok(Composition::new(
        nu.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| if i + 1 == k { p } else { p - 1 })
            .collect(),
    ))
}

/// `phi^(k)(mu) = { (i-1)n + mu_i + 1 : i != k }`, an `(s-1)`-subset of `[sn]`.
pub fn phi(mu: &Composition, k: usize, s: usize, n: usize) -> Result<SubsetIdx> {
    check_color(mu, k)?;
    if mu.part(k) == 0 {
        return domain(format!("{mu} has no cell of color {k}"));
    }
    phi_unchecked(mu, k, s, n)
}

fn phi_unchecked(mu: &Composition, k: usize, s: usize, n: usize) -> Result<SubsetIdx> {
    let elements = mu
        .parts
        .iter()
        .enumerate()
        .filter(|(i, _)| i + 1 != k)
        .map(|(i, &p)| i * n + p + 1)
        .collect();
    SubsetIdx::new(elements, s * n)
}

/// Least color carrying the largest part.
pub fn color_pi(mu: &Composition) -> Result<usize> {
    let max = mu.parts.iter().copied().max().unwrap_or(0);
    if max == 0 {
        return domain("color of the zero composition");
    }
    Ok(mu.parts.iter().position(|&p| p == max).unwrap() + 1)
}

/// The column map used to locate the factors of the compound determinant:
/// `phi^(pi(mu))(mu)`.
pub fn big_phi_lemma1(mu: &Composition, s: usize, n: usize) -> Result<SubsetIdx> {
    phi(mu, color_pi(mu)?, s, n)
}

/// The column map used to bound the factor multiplicities by one: agrees
/// with `phi^(k0)` except on the compositions concentrated at a color
/// `l != k0`, which go to `{(i-1)n + 1 : i != k0, l} + {(k0-1)n + 2}`.
pub fn big_phi_lemma2(mu: &Composition, k0: usize, s: usize, n: usize) -> Result<SubsetIdx> {
    check_color(mu, k0)?;
    if n >= 2 && mu.part(k0) == 0 {
        if let Some(l) = (1..=s).find(|&l| l != k0 && mu.part(l) == n) {
            let mut elements: Vec<usize> = (1..=s)
                .filter(|&i| i != k0 && i != l)
                .map(|i| (i - 1) * n + 1)
                .collect();
            elements.push((k0 - 1) * n + 2);
            return SubsetIdx::from_unsorted(elements, s * n);
        }
    }
    if mu.part(k0) == 0 && n < 2 {
        return usage("the second column map needs n >= 2");
    }
    phi_unchecked(mu, k0, s, n)
}

/// A partition with trailing zeros trimmed.
///
/// `Ord` is the reverse-lexicographic order used for character rows:
/// `lambda < mu` (lambda precedes) when the first nonzero difference
/// `lambda_i - mu_i` is positive, so larger partitions come first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return usage(format!("{parts:?} is not weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `lambda_i` for 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to `len` (which must be >= the length).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=first)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        }
    }

    /// Multiplicity of each part size: `m_i` for `i = 1..=max part`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let first = self.parts.first().copied().unwrap_or(0);
        (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p == i).count())
            .collect()
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.parts.len().max(other.parts.len());
        other.padded(len).cmp(&self.padded(len))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1`, `(2,1)` or an empty string for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// Dominance: every prefix sum of `lambda` is at most that of `mu`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> bool {
    let len = lambda.length().max(mu.length());
    let (a, b) = (lambda.padded(len), mu.padded(len));
    let mut sa = 0;
    let mut sb = 0;
    for i in 0..len {
        sa += a[i];
        sb += b[i];
        if sa > sb {
            return false;
        }
    }
    true
}

/// Partitions fitting in the `length x max_part` box, in increasing
/// reverse-lexicographic order (largest first).
pub fn enumerate_partitions_in_box(max_part: usize, length: usize) -> Vec<Partition> {
    fn fill(slots: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if slots == 0 {
            out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
            return;
        }
        for p in (0..=cap).rev() {
            cur.push(p);
            fill(slots - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    fill(length, max_part, &mut Vec::with_capacity(length), &mut out);
    out
}

/// All partitions of `d`, in increasing reverse-lexicographic order
/// (`(d)` first).
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn fill(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            fill(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    fill(d, d, &mut Vec::new(), &mut out);
    out
}

/// `{ s - lambda_1, s + 1 - lambda_2, ..., s + n - 1 - lambda_n }`, an
/// `n`-subset of `[s + n - 1]`.
pub fn partition_to_rowset(lambda: &Partition, s: usize, n: usize) -> Result<SubsetIdx> {
    if lambda.length() > n {
        return domain(format!("{lambda} has more than {n} parts"));
    }
    if lambda.part(1) + 1 > s {
        return domain(format!("{lambda} does not fit in a box of width {}", s.saturating_sub(1)));
    }
    let elements = (1..=n).map(|i| s + i - 1 - lambda.part(i)).collect();
    SubsetIdx::new(elements, s + n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn set(e: &[usize], u: usize) -> SubsetIdx {
        SubsetIdx::new(e.to_vec(), u).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn z32_listing() {
        let z = enumerate_z(3, 2, false);
        let want = [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]];
        assert_eq!(z, want.iter().map(|w| c(w)).collect::<Vec<_>>());
        assert_eq!(enumerate_z(1, 5, false), vec![c(&[5])]);
        assert_eq!(enumerate_z(3, 4, true), vec![c(&[2, 1, 1]), c(&[1, 2, 1]), c(&[1, 1, 2])]);
        assert!(enumerate_z(4, 3, true).is_empty());
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(&c(&[1, 1, 0]), 3, 2).unwrap(), set(&[1, 3], 6));
        assert_eq!(iota(&c(&[0, 0, 2]), 3, 2).unwrap(), set(&[5, 6], 6));
        assert_eq!(iota(&c(&[4]), 1, 4).unwrap(), SubsetIdx::full(4));
        assert!(matches!(iota(&c(&[3, 0]), 2, 2), Err(Error::Usage(_))));
        let images: Vec<String> = enumerate_z(3, 2, false)
            .iter()
            .map(|m| iota(m, 3, 2).unwrap().to_string())
            .collect();
        assert_eq!(images, ["{1,2}", "{1,3}", "{1,5}", "{3,4}", "{3,5}", "{5,6}"]);
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(&set(&[3, 4, 8], 9), &set(&[1, 6, 9], 9)), 1);
        assert_eq!(epsilon(&set(&[1, 2], 4), &set(&[2, 3], 4)), 0);
        assert_eq!(epsilon(&SubsetIdx::empty(5), &set(&[2, 5], 5)), 1);
        assert_eq!(epsilon(&set(&[2], 2), &set(&[1], 2)), -1);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&c(&[2, 0, 0]), 1), 0);
        assert_eq!(rank(&c(&[0, 1, 1]), 1), 2);
        assert_eq!(rank(&Composition::concentrated(4, 3, 2), 2), 0);
    }

    #[test]
    fn preceq_examples() {
        assert!(preceq(&c(&[2, 0, 1, 3]), &c(&[2, 1, 2, 1]), 4));
        assert!(preceq(&c(&[1, 1, 0]), &c(&[1, 1, 0]), 2));
        assert!(!preceq(&c(&[0, 2, 0]), &c(&[2, 0, 0]), 1));
    }

    #[test]
    fn tau_and_phi_examples() {
        assert_eq!(tau(&c(&[1, 1, 0]), 1).unwrap(), c(&[1, 2, 1]));
        assert_eq!(tau(&c(&[2, 0, 0]), 1).unwrap(), c(&[2, 1, 1]));
        assert_eq!(tau(&c(&[1, 0, 1]), 1).unwrap(), c(&[1, 1, 2]));
        assert!(matches!(tau(&c(&[0, 2, 0]), 1), Err(Error::Domain(_))));
        assert_eq!(tau_inverse(&c(&[1, 2, 1]), 1).unwrap(), c(&[1, 1, 0]));
        assert_eq!(phi(&c(&[2, 0, 0]), 1, 3, 2).unwrap(), set(&[3, 5], 6));
        assert_eq!(phi(&c(&[1, 1, 0]), 1, 3, 2).unwrap(), set(&[4, 5], 6));
        assert_eq!(phi(&c(&[1, 0, 1]), 1, 3, 2).unwrap(), set(&[3, 6], 6));
        assert!(matches!(phi(&c(&[0, 2, 0]), 1, 3, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn color_map() {
        let got: Vec<usize> = enumerate_z(3, 2, false).iter().map(|m| color_pi(m).unwrap()).collect();
        assert_eq!(got, [1, 1, 1, 2, 2, 3]);
        assert!(color_pi(&c(&[0, 0])).is_err());
    }

    #[test]
    fn first_column_map_example() {
        let got: Vec<String> = enumerate_z(3, 2, false)
            .iter()
            .map(|m| big_phi_lemma1(m, 3, 2).unwrap().to_string())
            .collect();
        assert_eq!(got, ["{3,5}", "{4,5}", "{3,6}", "{1,5}", "{1,6}", "{1,3}"]);
    }

    #[test]
    fn second_column_map_example() {
        let got: Vec<String> = enumerate_z(3, 2, false)
            .iter()
            .map(|m| big_phi_lemma2(m, 1, 3, 2).unwrap().to_string())
            .collect();
        assert_eq!(got, ["{3,5}", "{4,5}", "{3,6}", "{2,5}", "{4,6}", "{2,3}"]);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1]), &p(&[2])));
        assert!(dominance_leq(&p(&[3, 1]), &p(&[3, 1])));
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])));
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])));
        // incomparable pair
        assert!(!dominance_leq(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])));
        assert!(!dominance_leq(&p(&[2, 2, 2]), &p(&[3, 1, 1, 1])));
    }

    #[test]
    fn box_partitions() {
        assert_eq!(enumerate_partitions_in_box(1, 2), vec![p(&[1, 1]), p(&[1]), p(&[])]);
        assert_eq!(enumerate_partitions_in_box(0, 3), vec![p(&[])]);
        for s in 1..=5 {
            for n in 1..=5 {
                assert_eq!(
                    enumerate_partitions_in_box(s - 1, n).len() as u64,
                    binom((s + n - 1) as i64, n as i64)
                );
            }
        }
        let list = enumerate_partitions_in_box(2, 3);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn partitions_of_small() {
        let got: Vec<String> = partitions_of(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn rowsets() {
        assert_eq!(partition_to_rowset(&p(&[]), 3, 2).unwrap(), set(&[3, 4], 4));
        assert_eq!(partition_to_rowset(&p(&[2, 2]), 3, 2).unwrap(), set(&[1, 2], 4));
        assert!(matches!(partition_to_rowset(&p(&[3]), 3, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn partition_basics() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1, 1]).multiplicities(), vec![2, 1]);
    }

    #[test]
    fn subset_helpers() {
        let i = set(&[1, 3], 4);
        assert_eq!(i.complement(), set(&[2, 4], 4));
        assert_eq!(i.weight(), 4);
        assert_eq!(i.union(&set(&[2], 4)), set(&[1, 2, 3], 4));
        assert!(SubsetIdx::new(vec![2, 1], 3).is_err());
        assert!(SubsetIdx::new(vec![4], 3).is_err());
        assert_eq!(SubsetIdx::all(4, 2).len(), 6);
        assert_eq!(set(&[1, 2, 3, 5], 6).label(), "1235");
    }
}
