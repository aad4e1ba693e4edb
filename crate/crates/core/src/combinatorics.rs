//! Partitions, Young diagram statistics, permutations and symmetric group
//! characters.
//!
//! Diagram convention: row `j` holds the `j`-th part (row 0 is the longest
//! part), and cell `(j, i)` exists for `0 <= i < parts[j]`. Arm and leg count
//! the cells strictly to the right and strictly above (toward larger row
//! indices) a cell; coarm and coleg are the column and row indices.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),
    #[error("not a permutation of 1..n: {0:?}")]
    InvalidPermutation(Vec<usize>),
}

/// An integer partition, stored as weakly decreasing positive parts.
///
/// Ordering is reverse lexicographic: `(3) < (2,1) < (1,1,1)`, so ordered
/// collections list the one-row partition first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|i| self.parts.iter().take_while(|&&p| p > i).count())
            .collect();
        Partition { parts }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| Cell { row, col }))
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.col < self.part(c.row)
    }

    pub fn arm(&self, c: Cell) -> usize {
        self.part(c.row) - c.col - 1
    }

    pub fn leg(&self, c: Cell) -> usize {
        self.parts[c.row + 1..].iter().take_while(|&&p| p > c.col).count()
    }

    pub fn coarm(&self, c: Cell) -> usize {
        c.col
    }

    pub fn coleg(&self, c: Cell) -> usize {
        c.row
    }

    pub fn hook(&self, c: Cell) -> usize {
        self.arm(c) + self.leg(c) + 1
    }

    /// Multiplicity `m_i` of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// `self` dominates `other` (both of the same size).
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// The partition with the first part removed.
    pub fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CombinatoricsError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Centralizer order `z_mu = prod_i m_i! i^{m_i}`.
pub fn z_mu(mu: &Partition) -> u64 {
    mu.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (1..=m as u64).product::<u64>() * (i as u64).pow(m as u32))
        .product()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Number of standard Young tableaux of shape `lambda` (hook length formula).
pub fn syt_count(lambda: &Partition) -> u64 {
    let hooks: u64 = lambda.cells().map(|c| lambda.hook(c) as u64).product();
    factorial(lambda.size()) / hooks
}

/// A permutation of `{0, .., n-1}`; one-line notation in the public API is
/// 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// All of `S_n`, in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(factorial(n) as usize);
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }

    /// Builds from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self, CombinatoricsError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(CombinatoricsError::InvalidPermutation(images.to_vec()));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i - 1).collect(),
        })
    }

    /// Canonical representative of a cycle type: cycles of decreasing length
    /// on consecutive letters, `(1 2 .. mu_1)(mu_1+1 ..)..`.
    pub fn of_cycle_type(mu: &Partition) -> Self {
        let mut images = Vec::with_capacity(mu.size());
        let mut start = 0;
        for &len in mu.parts() {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    /// The transposition of 0-based letters `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based letter `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cycle = vec![s];
            seen[s] = true;
            let mut i = self.images[s];
            while i != s {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// +1 or -1.
    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Removes rim hooks via the beta-set (abacus) description. Returns each
/// resulting partition with its sign `(-1)^height`.
fn remove_rim_hooks(lambda: &Partition, len: usize) -> Vec<(Partition, i64)> {
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < len {
            continue;
        }
        let target = b - len;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let m = nb.len();
        let parts = nb.iter().enumerate().map(|(i, &x)| x - (m - 1 - i)).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

type MnMemo = HashMap<(Partition, Vec<usize>), i64>;

fn mn_rec(lambda: &Partition, mu: &[usize], memo: &mut MnMemo) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = remove_rim_hooks(lambda, mu[0])
        .into_iter()
        .map(|(rest, sign)| sign * mn_rec(&rest, &mu[1..], memo))
        .sum();
    memo.insert(key, v);
    v
}

/// Irreducible character value `chi^lambda(mu)` by the Murnaghan–Nakayama
/// rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, CombinatoricsError> {
    if lambda.size() != mu.size() {
        return Err(CombinatoricsError::SizeMismatch(
            lambda.to_string(),
            mu.to_string(),
        ));
    }
    Ok(mn_rec(lambda, mu.parts(), &mut HashMap::new()))
}

/// Horizontal strips: all `kappa ⊆ lambda` with `lambda/kappa` a horizontal
/// strip of `size` cells.
fn horizontal_strips(lambda: &Partition, size: usize) -> Vec<Partition> {
    fn go(lambda: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let hi = lambda.part(i);
        let lo = lambda.part(i + 1);
        for k in lo..=hi {
            let removed = hi - k;
            if removed > left {
                continue;
            }
            cur.push(k);
            go(lambda, i + 1, left - removed, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, size, &mut Vec::new(), &mut out);
    out
}

fn kostka_rec(lambda: &Partition, content: &[usize], memo: &mut HashMap<(Partition, usize), u64>) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(lambda.is_empty());
    };
    let key = (lambda.clone(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = horizontal_strips(lambda, last)
        .iter()
        .map(|k| kostka_rec(k, rest, memo))
        .sum();
    memo.insert(key, v);
    v
}

/// Kostka number: semistandard tableaux of shape `lambda` and content `nu`.
pub fn kostka(lambda: &Partition, nu: &Partition) -> Result<u64, CombinatoricsError> {
    if lambda.size() != nu.size() {
        return Err(CombinatoricsError::SizeMismatch(
            lambda.to_string(),
            nu.to_string(),
        ));
    }
    Ok(kostka_rec(lambda, nu.parts(), &mut HashMap::new()))
}

/// Full character table of `S_n`, rows and columns in reverse lexicographic
/// partition order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|m| mn_rec(l, m.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            partitions,
            index,
            values,
        }
    }

    /// Shared, memoized table for `n`.
    pub fn for_n(n: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.read().expect("character cache poisoned").get(&n) {
            return t.clone();
        }
        let mut w = cache.write().expect("character cache poisoned");
        w.entry(n)
            .or_insert_with(|| Arc::new(CharacterTable::compute(n)))
            .clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `chi^lambda(mu)`; panics if either is not a partition of `n`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn value_at(&self, lambda: usize, mu: usize) -> i64 {
        self.values[lambda][mu]
    }
}

/// Kostka numbers `K_{λν}` for all `λ, ν ⊢ n`, in reverse lexicographic order.
#[derive(Debug, Clone)]
pub struct KostkaMatrix {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<u64>>,
}

impl KostkaMatrix {
    pub fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let values = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|nu| kostka_rec(l, nu.parts(), &mut HashMap::new()))
                    .collect()
            })
            .collect();
        KostkaMatrix {
            partitions,
            index,
            values,
        }
    }

    /// Shared, memoized matrix for `n`.
    pub fn for_n(n: usize) -> Arc<KostkaMatrix> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<KostkaMatrix>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.read().expect("kostka cache poisoned").get(&n) {
            return t.clone();
        }
        let mut w = cache.write().expect("kostka cache poisoned");
        w.entry(n)
            .or_insert_with(|| Arc::new(KostkaMatrix::compute(n)))
            .clone()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value_at(&self, lambda: usize, nu: usize) -> u64 {
        self.values[lambda][nu]
    }

    /// Ones on the diagonal and zeros below it.
    pub fn is_unitriangular(&self) -> bool {
        self.values.iter().enumerate().all(|(i, row)| {
            row[i] == 1 && row[..i].iter().all(|&v| v == 0)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(partitions_of(6).len(), 11);
    }

    #[test]
    fn partitions_match_brute_force_enumeration() {
        // weakly decreasing compositions, found by filtering all compositions
        fn compositions(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for mut rest in compositions(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for n in 0..=8 {
            let brute = compositions(n)
                .into_iter()
                .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
                .count();
            assert_eq!(partitions_of(n).len(), brute, "n = {n}");
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(p("3,1").to_string(), "3,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(p("-"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn z_mu_values() {
        assert_eq!(z_mu(&p("1,1,1")), 6);
        assert_eq!(z_mu(&p("2,1")), 2);
        assert_eq!(z_mu(&p("5")), 5);
        assert_eq!(z_mu(&p("2,2,1")), 8);
    }

    #[test]
    fn cycle_types() {
        let id = Permutation::identity(3);
        assert_eq!(id.cycle_type(), p("1,1,1"));
        assert_eq!(Permutation::from_one_line(&[2, 1, 3]).unwrap().cycle_type(), p("2,1"));
        assert_eq!(Permutation::from_one_line(&[2, 3, 1]).unwrap().cycle_type(), p("3"));
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        for mu in partitions_of(5) {
            assert_eq!(Permutation::of_cycle_type(&mu).cycle_type(), mu);
        }
    }

    #[test]
    fn arm_leg_statistics() {
        let mu = p("3,1");
        let c = Cell { row: 0, col: 0 };
        assert_eq!((mu.arm(c), mu.leg(c)), (2, 1));
        let c = Cell { row: 0, col: 1 };
        assert_eq!((mu.arm(c), mu.leg(c)), (1, 0));
        let c = Cell { row: 1, col: 0 };
        assert_eq!((mu.coarm(c), mu.coleg(c), mu.arm(c), mu.leg(c)), (0, 1, 0, 0));
        assert_eq!(mu.conjugate(), p("2,1,1"));
    }

    #[test]
    fn character_examples() {
        for mu in partitions_of(4) {
            assert_eq!(mn_character(&p("4"), &mu).unwrap(), 1);
        }
        assert_eq!(mn_character(&p("1,1"), &p("2")).unwrap(), -1);
        assert_eq!(mn_character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert!(mn_character(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn standard_rep_character_by_trace() {
        // the standard rep of S_3 is the permutation rep minus the trivial one
        let t = CharacterTable::compute(3);
        for mu in partitions_of(3) {
            let fixed = Permutation::of_cycle_type(&mu)
                .cycles()
                .iter()
                .filter(|c| c.len() == 1)
                .count() as i64;
            assert_eq!(t.value(&p("2,1"), &mu), fixed - 1);
        }
    }

    #[test]
    fn characters_decompose_tabloid_characters() {
        // fixed tabloids of shape nu under type mu: assignments of cycles to rows
        fn fixed_tabloids(cycles: &[usize], rows: &mut Vec<usize>) -> i64 {
            let Some((&c, rest)) = cycles.split_first() else {
                return i64::from(rows.iter().all(|&r| r == 0));
            };
            let mut total = 0;
            for i in 0..rows.len() {
                if rows[i] >= c {
                    rows[i] -= c;
                    total += fixed_tabloids(rest, rows);
                    rows[i] += c;
                }
            }
            total
        }
        for n in 1..=7 {
            let t = CharacterTable::compute(n);
            for nu in partitions_of(n) {
                for mu in partitions_of(n) {
                    let expected = fixed_tabloids(mu.parts(), &mut nu.parts().to_vec());
                    let got: i64 = partitions_of(n)
                        .iter()
                        .map(|l| kostka(l, &nu).unwrap() as i64 * t.value(l, &mu))
                        .sum();
                    assert_eq!(got, expected, "nu={nu} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("2,1"), &p("2,1")).unwrap(), 1);
        assert_eq!(kostka(&p("1,1"), &p("2")).unwrap(), 0);
        assert_eq!(kostka(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert!(kostka(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn kostka_matches_direct_ssyt_enumeration() {
        fn count(shape: &Partition, content: &Partition) -> u64 {
            // fill cells row by row with labels, checking SSYT conditions
            let cells: Vec<Cell> = shape.cells().collect();
            let mut filling = vec![0usize; cells.len()];
            let mut left = content.parts().to_vec();
            fn go(k: usize, cells: &[Cell], shape: &Partition, f: &mut Vec<usize>, left: &mut Vec<usize>) -> u64 {
                if k == cells.len() {
                    return 1;
                }
                let c = cells[k];
                let mut total = 0;
                for v in 0..left.len() {
                    if left[v] == 0 {
                        continue;
                    }
                    if c.col > 0 && f[k - 1] > v {
                        continue;
                    }
                    if c.row > 0 {
                        let above: usize = (0..c.row).map(|r| shape.part(r)).sum::<usize>() - shape.part(c.row - 1) + c.col;
                        if f[above] >= v {
                            continue;
                        }
                    }
                    f[k] = v;
                    left[v] -= 1;
                    total += go(k + 1, cells, shape, f, left);
                    left[v] += 1;
                }
                total
            }
            go(0, &cells, shape, &mut filling, &mut left)
        }
        for n in 1..=5 {
            for l in partitions_of(n) {
                for nu in partitions_of(n) {
                    assert_eq!(kostka(&l, &nu).unwrap(), count(&l, &nu), "{l} {nu}");
                }
            }
        }
    }

    #[test]
    fn kostka_matrix_is_unitriangular() {
        for n in 0..=7 {
            let k = KostkaMatrix::for_n(n);
            assert!(k.is_unitriangular(), "n={n}");
        }
        let k = KostkaMatrix::for_n(3);
        assert_eq!(k.value_at(0, 2), 1);
        assert_eq!(k.value_at(1, 2), 2);
    }

    #[test]
    fn cached_table_is_shared() {
        let a = CharacterTable::for_n(4);
        let b = CharacterTable::for_n(4);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.partitions().len(), 5);
    }
}
